#include "fuskit/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "fuskit/alperin.hpp"
#include "fuskit/catalog.hpp"
#include "fuskit/io.hpp"
#include "fuskit/thompson.hpp"
#include "fuskit/transfer.hpp"

namespace fuskit::cli {

namespace {

using io::json;

constexpr const char* kConventionNote =
    "biset parts have domain (gS) ∩ S and map c_g into S ∩ S^g; "
    "morphisms compose left to right";

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

struct VerbArgs {
  std::string group;
  int prime = 2;
  std::string format = "text";
  std::string t_spec;
  std::string u_spec;
  std::string from_spec;
  std::string witness_spec;
};

void add_common(CLI::App* sub, VerbArgs& a) {
  sub->add_option("group", a.group, "group JSON file or fixture name")->required();
  sub->add_option("-p,--prime", a.prime, "the prime p")->default_val(2);
  sub->add_option("--format", a.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");
}

FusionSystem make_system(const VerbArgs& a) {
  if (!is_prime(a.prime)) throw PreconditionError("p must be prime");
  GroupPtr g = io::load_group(a.group);
  if (g->order() % a.prime != 0)
    throw PreconditionError("p does not divide the group order");
  return FusionSystem(g, a.prime);
}

int element_index(const GroupPtr& g, const json& image_array) {
  Perm p = io::perm_from_json(image_array, g->degree());
  int idx = g->index_of(p);
  if (idx < 0) throw MembershipError("permutation does not lie in the group");
  return idx;
}

json parse_inline_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception&) {
    throw PreconditionError(std::string("cannot parse ") + what + " as JSON");
  }
}

Subgroup generated_from_spec(const FusionSystem& f, const std::string& spec,
                             const char* what) {
  json arr = parse_inline_json(spec, what);
  if (!arr.is_array() || arr.empty())
    throw PreconditionError(std::string(what) + " must be a nonempty array of permutations");
  std::vector<int> gens;
  for (const auto& item : arr) gens.push_back(element_index(f.ambient(), item));
  Subgroup h = Subgroup::generated(f.ambient(), gens);
  if (!h.subset_of(f.sylow()))
    throw PreconditionError(std::string(what) + " does not generate a subgroup of S");
  return h;
}

Subgroup resolve_t(const FusionSystem& f, const std::string& spec) {
  if (spec.empty()) throw PreconditionError("--T is required for this command");
  if (spec == "center") return f.sylow().center();
  if (spec.rfind("maximal:", 0) == 0) {
    int want = -1;
    try {
      want = std::stoi(spec.substr(8));
    } catch (...) {
      throw PreconditionError("bad maximal subgroup index");
    }
    std::vector<Subgroup> maximals;
    for (const auto& q : f.subgroups_of_s())
      if (q.order() * f.prime() == f.sylow().order()) maximals.push_back(q);
    if (want < 0 || want >= static_cast<int>(maximals.size()))
      throw PreconditionError("maximal subgroup index out of range (0.." +
                              std::to_string(maximals.size() - 1) + ")");
    return maximals[static_cast<std::size_t>(want)];
  }
  return generated_from_spec(f, spec, "--T");
}

json perm_of(const GroupPtr& g, int idx) { return io::perm_json(g->element(idx)); }

void emit(std::ostream& out, const VerbArgs& a, const json& j,
          const std::string& text) {
  if (a.format == "json")
    out << j.dump(2) << "\n";
  else
    out << text;
}

// ---- verbs ------------------------------------------------------------------

int do_report(const VerbArgs& a, std::ostream& out) {
  FusionSystem f = make_system(a);
  Subgroup focal = f.focal_subgroup();
  Subgroup hyper = f.hyperfocal_subgroup();
  json j;
  j["group"] = f.ambient()->name();
  j["order"] = f.ambient()->order();
  j["prime"] = f.prime();
  j["sylow"] = io::subgroup_json(f.sylow());
  j["focal"] = io::subgroup_json(focal);
  j["hyperfocal"] = io::subgroup_json(hyper);
  j["op_closed"] = f.is_op_closed();
  json ess = json::array();
  for (const auto& cls : f.subgroup_classes()) {
    if (cls.front().order() == f.sylow().order()) continue;
    if (f.is_essential(cls.front())) {
      json e = io::subgroup_json(cls.front());
      e["class_size"] = cls.size();
      ess.push_back(e);
    }
  }
  j["essential_classes"] = ess;

  std::ostringstream text;
  text << "group " << f.ambient()->name() << "  order " << f.ambient()->order()
       << "  p = " << f.prime() << "\n"
       << "sylow order " << f.sylow().order() << "\n"
       << "focal order " << focal.order() << ", hyperfocal order " << hyper.order()
       << ", O^p-closed: " << (f.is_op_closed() ? "yes" : "no") << "\n"
       << "essential classes: " << ess.size() << "\n";
  emit(out, a, j, text.str());
  return kOk;
}

int do_tl_check(const VerbArgs& a, std::ostream& out) {
  FusionSystem f = make_system(a);
  Subgroup t = resolve_t(f, a.t_spec);
  if (a.u_spec.empty()) throw PreconditionError("--u is required");
  int u = element_index(f.ambient(), parse_inline_json(a.u_spec, "--u"));

  TLInstance inst(f, t, u);
  TLReport rep = tl_verify(inst);
  const auto& g = f.ambient();
  const auto& sec = inst.section();

  json j;
  j["group"] = g->name();
  j["prime"] = f.prime();
  j["u"] = perm_of(g, u);
  j["T_order"] = t.order();
  j["conditions"] = {rep.cond1, rep.cond2, rep.cond3};
  json iset = json::array();
  for (int v : rep.cond2_detail.fully_centralized_conjugates)
    iset.push_back(perm_of(g, v));
  j["I"] = iset;
  json icosets = json::array();
  for (int c : rep.cond2_detail.cosets) icosets.push_back(sec.coset_label(c));
  j["I_cosets"] = icosets;
  if (!rep.cond2_detail.failure.empty())
    j["condition_2_failure"] = rep.cond2_detail.failure;
  j["witness"] = rep.witness ? perm_of(g, *rep.witness) : json(nullptr);
  json trace;
  trace["u_used"] = perm_of(g, rep.trace.u_used);
  trace["T_size"] = rep.trace.t_size;
  json k = json::object();
  for (const auto& [coset, exp] : rep.trace.exponents)
    k[sec.coset_label(coset)] = exp;
  trace["k"] = k;
  trace["fixed_points"] = rep.trace.fixed_points;
  trace["value"] = sec.coset_label(rep.trace.transfer_coset);
  j["trace"] = trace;
  j["hypotheses_hold"] = rep.hypotheses();

  std::ostringstream text;
  text << "conditions: (1) " << (rep.cond1 ? "true" : "false") << "  (2) "
       << (rep.cond2 ? "true" : "false") << "  (3) "
       << (rep.cond3 ? "true" : "false") << "\n";
  if (!rep.cond2_detail.failure.empty())
    text << "condition (2): " << rep.cond2_detail.failure << "\n";
  text << "witness: "
       << (rep.witness ? g->element(*rep.witness).to_string() : std::string("none"))
       << "\n"
       << "trace: |T| = " << rep.trace.t_size << ", fixed points "
       << rep.trace.fixed_points << ", value "
       << sec.coset_label(rep.trace.transfer_coset) << "\n";
  emit(out, a, j, text.str());
  return rep.hypotheses() ? kOk : kHypothesisFailure;
}

int do_transfer(const VerbArgs& a, std::ostream& out) {
  FusionSystem f = make_system(a);
  Subgroup t = resolve_t(f, a.t_spec);
  AbelianSection sec(f.sylow(), t);
  const auto& g = f.ambient();

  json table = json::object();
  std::ostringstream text;
  for (int u : f.sylow().elements()) {
    TransferValue classical = classical_transfer(g, f.sylow(), sec, u);
    TransferValue mackey = mackey_transfer(g, f.sylow(), sec, u);
    if (!(classical == mackey))
      throw std::logic_error("Mackey decomposition disagrees with the classical transfer");
    std::string key = g->element(u).to_string();
    table[key] = sec.coset_label(classical.coset);
    text << key << " -> " << sec.coset_label(classical.coset) << "\n";
  }
  json j;
  j["group"] = g->name();
  j["prime"] = f.prime();
  j["T_order"] = t.order();
  j["section_size"] = sec.size();
  j["table"] = table;
  emit(out, a, j, text.str());
  return kOk;
}

int do_decompose(const VerbArgs& a, std::ostream& out) {
  FusionSystem f = make_system(a);
  if (a.from_spec.empty() || a.witness_spec.empty())
    throw PreconditionError("--from and --witness are required");
  Subgroup p = generated_from_spec(f, a.from_spec, "--from");
  int w = element_index(f.ambient(), parse_inline_json(a.witness_spec, "--witness"));
  Injection phi = Injection::from_witness(p, w);
  if (!phi.image().subset_of(f.sylow()))
    throw PreconditionError("the witness does not map the subgroup into S");

  ConjugationFamily fam = essential_family(f);
  auto [dec, peak] = updown_decompose(f, fam, phi);

  json j;
  j["group"] = f.ambient()->name();
  j["prime"] = f.prime();
  j["source"] = io::subgroup_json(p);
  json steps = json::array();
  for (const auto& step : dec.steps) {
    json s;
    s["Q"] = io::subgroup_json(step.member);
    s["alpha_witness"] = perm_of(f.ambient(), step.alpha.witness());
    steps.push_back(s);
  }
  j["steps"] = steps;
  j["profile"] = dec.profile;
  j["peak"] = peak;

  std::ostringstream text;
  text << "steps: " << dec.steps.size() << ", peak " << peak << "\nprofile:";
  for (int c : dec.profile) text << " " << c;
  text << "\n";
  emit(out, a, j, text.str());
  return kOk;
}

int do_essentials(const VerbArgs& a, std::ostream& out) {
  FusionSystem f = make_system(a);
  ConjugationFamily fam = essential_family(f);
  json j;
  j["group"] = f.ambient()->name();
  j["prime"] = f.prime();
  json members = json::array();
  for (const auto& q : fam.members) members.push_back(io::subgroup_json(q));
  j["members"] = members;

  std::ostringstream text;
  text << "family members: " << fam.members.size() << "\n";
  for (const auto& q : fam.members) text << "  order " << q.order() << "\n";
  emit(out, a, j, text.str());
  return kOk;
}

int do_verify_biset(const VerbArgs& a, std::ostream& out) {
  FusionSystem f = make_system(a);
  BisetDecomposition omega = characteristic_biset(f);
  CharacteristicReport rep = verify_characteristic(omega);

  json j;
  j["group"] = f.ambient()->name();
  j["prime"] = f.prime();
  j["parts"] = omega.parts.size();
  j["size"] = omega.total_size();
  j["size_over_s"] = rep.size_over_s;
  j["prop_a"] = rep.prop_a;
  j["prop_b"] = rep.prop_b;
  j["prop_c"] = rep.prop_c;
  j["violations"] = rep.violations;
  j["convention"] = kConventionNote;

  std::ostringstream text;
  text << "parts " << omega.parts.size() << ", |Omega| = " << omega.total_size()
       << ", |Omega|/|S| = " << rep.size_over_s << "\n"
       << "(a) " << (rep.prop_a ? "pass" : "FAIL") << "  (b) "
       << (rep.prop_b ? "pass" : "FAIL") << "  (c) "
       << (rep.prop_c ? "pass" : "FAIL") << "\n";
  for (const auto& v : rep.violations) text << "violation: " << v << "\n";
  text << "note: " << kConventionNote << "\n";
  emit(out, a, j, text.str());
  return rep.ok() ? kOk : kHypothesisFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"saturated fusion system toolkit"};
  app.require_subcommand(1);

  VerbArgs a;
  auto* report = app.add_subcommand("report", "Sylow, focal and essential summary");
  add_common(report, a);
  auto* tl = app.add_subcommand("tl-check", "transfer theorem hypothesis check");
  add_common(tl, a);
  tl->add_option("--T", a.t_spec, "T: 'center', 'maximal:<i>', or generator JSON");
  tl->add_option("--u", a.u_spec, "element u as an image array");
  auto* transfer = app.add_subcommand("transfer", "transfer table over S");
  add_common(transfer, a);
  transfer->add_option("--T", a.t_spec, "T: 'center', 'maximal:<i>', or generator JSON");
  auto* decompose = app.add_subcommand("decompose", "up/down decomposition of c_g");
  add_common(decompose, a);
  decompose->add_option("--from", a.from_spec, "generators of the source subgroup");
  decompose->add_option("--witness", a.witness_spec, "conjugating element g");
  auto* essentials = app.add_subcommand("essentials", "essential conjugation family");
  add_common(essentials, a);
  auto* biset = app.add_subcommand("verify-biset", "characteristic biset properties");
  add_common(biset, a);

  std::vector<const char*> argv{"fuskit"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (report->parsed()) return do_report(a, out);
    if (tl->parsed()) return do_tl_check(a, out);
    if (transfer->parsed()) return do_transfer(a, out);
    if (decompose->parsed()) return do_decompose(a, out);
    if (essentials->parsed()) return do_essentials(a, out);
    return do_verify_biset(a, out);
  } catch (const SizeLimitError& e) {
    err << "size limit: " << e.what() << "\n";
    return kSizeLimit;
  } catch (const PreconditionError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const MembershipError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace fuskit::cli
