// Acceptance gate: runs the ten build-blocking checks and prints one
// PASS/FAIL line per criterion. Exits nonzero when any criterion fails.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "fuskit/alperin.hpp"
#include "fuskit/catalog.hpp"
#include "fuskit/io.hpp"
#include "fuskit/thompson.hpp"
#include "fuskit/transfer.hpp"

using namespace fuskit;
using io::json;

namespace {

// time limits pinned per criterion, in seconds
constexpr double kLimit1 = 1.0;
constexpr double kLimit2 = 1.0;
constexpr double kLimit3 = 300.0;
constexpr double kLimit5 = 60.0;
constexpr double kLimit8 = 120.0;
constexpr double kLimit9 = 300.0;

struct Outcome {
  bool pass = false;
  json report;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::vector<Subgroup> abelian_quotient_kernels(const FusionSystem& f) {
  std::vector<Subgroup> out;
  Subgroup ds = f.sylow().derived();
  for (const auto& t : f.subgroups_of_s()) {
    if (t.order() == f.sylow().order()) continue;
    if (!ds.subset_of(t) || !t.is_normal_in(f.sylow())) continue;
    out.push_back(t);
  }
  return out;
}

// ---- criterion 1: SL_3(2) counterexample to condition (1) -------------------

Outcome criterion1() {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  auto g = catalog::build("sl3_2");
  FusionSystem f(g, 2);

  Subgroup four;
  for (const auto& t : abelian_quotient_kernels(f)) {
    if (t.order() != 4) continue;
    bool klein = true;
    for (int x : t.elements())
      if (x != 0 && g->element_order(x) != 2) klein = false;
    if (klein) {
      four = t;
      break;
    }
  }
  int u = -1;
  for (int x : f.sylow().elements())
    if (!four.contains(x) && g->element_order(x) == 4) {
      u = x;
      break;
    }
  if (four.order() != 4 || u < 0) {
    o.detail = "fixture construction failed";
    return o;
  }
  TLInstance inst(f, four, u);
  TLReport rep = tl_verify(inst);
  double secs = seconds_since(start);
  o.pass = !rep.cond1 && !rep.witness.has_value() && secs < kLimit1;
  o.report = {{"conditions", {rep.cond1, rep.cond2, rep.cond3}},
              {"witness_absent", !rep.witness.has_value()}};
  o.detail = "condition (1) false, witness absent";
  return o;
}

// ---- criterion 2: SL_2(3) counterexample to condition (2) -------------------

Outcome criterion2() {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  auto g = catalog::build("sl2_3");
  FusionSystem f(g, 2);
  Subgroup z = f.sylow().center();
  int u = -1;
  for (int x : f.sylow().elements())
    if (!z.contains(x)) {
      u = x;
      break;
    }
  TLInstance inst(f, z, u);
  TLReport rep = tl_verify(inst);
  double secs = seconds_since(start);
  o.pass = rep.cond1 && !rep.cond2 && rep.cond3 && !rep.witness.has_value() &&
           rep.cond2_detail.cosets.size() == 3 && inst.section().size() == 4 &&
           secs < kLimit2;
  o.report = {{"conditions", {rep.cond1, rep.cond2, rep.cond3}},
              {"independent_cosets", rep.cond2_detail.cosets.size()},
              {"section_size", inst.section().size()},
              {"witness_absent", !rep.witness.has_value()}};
  o.detail = "conditions (1),(3) true, (2) false over all three cosets";
  return o;
}

// ---- criteria 3 and 4: positive sweep with proof internals ------------------

const std::vector<std::string> kSweepFixtures = {
    "sl3_2", "alt(6)", "sl2_3", "direct_product(alt(4),alt(4))"};

void sweep(Outcome& o3, Outcome& o4) {
  auto start = std::chrono::steady_clock::now();
  o3.pass = o4.pass = true;
  json fixtures3 = json::object(), fixtures4 = json::object();
  for (const auto& name : kSweepFixtures) {
    auto g = catalog::build(name);
    FusionSystem f(g, 2);
    if (!f.is_op_closed()) {
      o3.pass = false;
      o3.detail = name + " is not O^2-closed";
      continue;
    }
    BisetDecomposition omega = characteristic_biset(f);
    long instances = 0, hypothesis_instances = 0, witnesses = 0;
    long traced = 0;
    bool sums_ok = true, odd_ok = true;
    for (const auto& t : abelian_quotient_kernels(f)) {
      for (int u : f.sylow().elements()) {
        if (t.contains(u)) continue;
        ++instances;
        TLInstance inst(f, t, u);
        TLReport rep = tl_verify(inst);  // throws on theorem violation
        if (rep.hypotheses()) {
          ++hypothesis_instances;
          if (rep.witness)
            ++witnesses;
          else
            o3.pass = false;
        }
        ++traced;
        long sum = 0;
        for (const auto& [coset, k] : rep.trace.exponents) sum += k;
        if (sum != rep.trace.t_size || rep.trace.t_size != rep.trace.fixed_points)
          sums_ok = false;
        if (rep.trace.t_size % 2 == 0) odd_ok = false;
        if (rep.trace.fixed_points !=
            orbit_fixed_points(omega, f.centralizer_in_s({rep.trace.u_used})))
          sums_ok = false;
      }
    }
    fixtures3[name] = {{"instances", instances},
                       {"hypothesis_instances", hypothesis_instances},
                       {"witnesses", witnesses}};
    fixtures4[name] = {{"traced", traced},
                       {"exponent_sums_match", sums_ok},
                       {"fixed_point_counts_odd", odd_ok}};
    o4.pass = o4.pass && sums_ok && odd_ok;
  }
  double secs = seconds_since(start);
  if (secs >= kLimit3) o3.pass = false;
  o3.report = fixtures3;
  o4.report = fixtures4;
  if (o3.detail.empty()) o3.detail = "every hypothesis-satisfying instance has a witness";
  o4.detail = "sum k_j = |T'| = fixed points, odd, on every traced instance";
}

// ---- criterion 5: transfer consistency --------------------------------------

Outcome criterion5() {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  o.pass = true;
  json rows = json::object();
  for (const auto& name : catalog::default_fixture_names()) {
    auto g = catalog::build(name);
    for (int p : {2, 3}) {
      if (g->order() % p) continue;
      FusionSystem f(g, p);
      const Subgroup& s = f.sylow();
      AbelianSection a(s, s.derived());
      BisetDecomposition omega = characteristic_biset(f);
      Subgroup focal = f.focal_subgroup();
      bool mackey_ok = true, kernel_ok = true;
      for (int u : s.elements()) {
        if (!(mackey_transfer(g, s, a, u) == classical_transfer(g, s, a, u)))
          mackey_ok = false;
        if (!(biset_transfer(omega, a, u) == classical_transfer(g, s, a, u)))
          mackey_ok = false;
      }
      for (int u : focal.elements())
        if (!biset_transfer(omega, a, u).trivial()) kernel_ok = false;
      rows[name + " p=" + std::to_string(p)] = {{"mackey_equals_classical", mackey_ok},
                                                {"focal_in_kernel", kernel_ok}};
      o.pass = o.pass && mackey_ok && kernel_ok;
    }
  }
  if (seconds_since(start) >= kLimit5) o.pass = false;
  o.report = rows;
  o.detail = "Mackey = classical = biset transfer; focal subgroup in the kernel";
  return o;
}

// ---- criterion 6: focal subgroup oracle --------------------------------------

Outcome criterion6() {
  Outcome o;
  o.pass = true;
  json rows = json::object();
  for (const auto& name : catalog::default_fixture_names()) {
    auto g = catalog::build(name);
    int n = g->order();
    for (int p = 2; p <= n; ++p) {
      if (n % p) continue;
      bool prime = true;
      for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) prime = false;
      if (!prime) continue;
      FusionSystem f(g, p);
      bool match = f.focal_subgroup() ==
                   commutator_subgroup(g).intersect(f.sylow());
      rows[name + " p=" + std::to_string(p)] = match;
      o.pass = o.pass && match;
    }
  }
  o.report = rows;
  o.detail = "focal subgroup equals S meet [G,G] at every prime";
  return o;
}

// ---- criterion 7: characteristic biset properties ----------------------------

Outcome criterion7() {
  Outcome o;
  o.pass = true;
  json rows = json::object();
  for (const auto& name : catalog::default_fixture_names()) {
    auto g = catalog::build(name);
    for (int p : {2, 3}) {
      if (g->order() % p) continue;
      FusionSystem f(g, p);
      CharacteristicReport rep = verify_characteristic(characteristic_biset(f));
      rows[name + " p=" + std::to_string(p)] = {
          {"a", rep.prop_a}, {"b", rep.prop_b}, {"c", rep.prop_c},
          {"size_over_s", rep.size_over_s}};
      o.pass = o.pass && rep.ok();
    }
  }
  {
    FusionSystem f(catalog::symmetric(4), 2);
    BisetDecomposition doubled = characteristic_biset(f);
    for (auto& part : doubled.parts) part.multiplicity *= 2;
    CharacteristicReport rep = verify_characteristic(doubled);
    rows["doubled at p=2 fails (c)"] = !rep.prop_c;
    o.pass = o.pass && !rep.prop_c;
  }
  {
    FusionSystem f(catalog::symmetric(4), 3);
    BisetDecomposition tripled = characteristic_biset(f);
    for (auto& part : tripled.parts) part.multiplicity *= 3;
    CharacteristicReport rep = verify_characteristic(tripled);
    rows["tripled at p=3 fails (c)"] = !rep.prop_c;
    o.pass = o.pass && !rep.prop_c;
  }
  o.report = rows;
  o.detail = "(a),(b),(c) hold canonically; p-fold multiples break (c)";
  return o;
}

// ---- criterion 8: the product-of-two-Sym4 normalizer remark ------------------

Outcome criterion8() {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  auto g = catalog::build("s4xs4");
  FusionSystem f(g, 2);

  ConjugationFamily fam = essential_family(f);
  std::vector<int> essential_orders;
  for (const auto& q : fam.members)
    if (q.order() != f.sylow().order()) essential_orders.push_back(q.order());
  bool essentials_ok = essential_orders.size() == 2 &&
                       essential_orders[0] == 32 && essential_orders[1] == 32;

  NormalizerRemarkReport rep = normalizer_counterexample(f);
  double secs = seconds_since(start);
  o.pass = essentials_ok && rep.ok() && rep.v.order() == 16 &&
           rep.essential_decomposition.steps.size() == 2 && secs < kLimit8;
  o.report = {{"essential_orders", essential_orders},
              {"v_order", rep.v.order()},
              {"h_orbit_size", rep.h_orbit.size()},
              {"full_class_size", rep.p_class_size},
              {"ns_p_index", rep.ns_p_index},
              {"p_fully_normalized", rep.p_fully_normalized},
              {"p_h1_fully_normalized", rep.ph1_fully_normalized},
              {"orbit_others_have_normalizer_v", rep.orbit_others_have_normalizer_v},
              {"decomposition_steps", rep.essential_decomposition.steps.size()},
              {"chains_must_leave_fully_normalized",
               rep.all_chains_hit_non_fully_normalized}};
  o.detail = "two essentials of order 32; normalizer profile cannot stay unimodal";
  return o;
}

// ---- criterion 9: unimodal up/down decompositions -----------------------------

Outcome criterion9() {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  o.pass = true;
  json rows = json::object();
  for (const char* name : {"sym(4)", "sl2_3", "sl3_2", "alt(6)"}) {
    auto g = catalog::build(name);
    FusionSystem f(g, 2);
    ConjugationFamily fam = essential_family(f);
    long count = 0;
    bool all_ok = true;
    for (const auto& cls : f.subgroup_classes()) {
      const Subgroup& p = cls.front();
      for (const auto& phi : f.hom_f(p, f.sylow())) {
        ++count;
        auto [d, peak] = updown_decompose(f, fam, phi);
        if (!(d.composed() == phi)) all_ok = false;
        for (int i = 1; i <= peak; ++i)
          if (d.profile[static_cast<std::size_t>(i - 1)] >
              d.profile[static_cast<std::size_t>(i)])
            all_ok = false;
        for (std::size_t i = static_cast<std::size_t>(peak) + 1;
             i < d.profile.size(); ++i)
          if (d.profile[i - 1] < d.profile[i]) all_ok = false;
      }
    }
    rows[name] = {{"morphisms", count}, {"unimodal_and_sound", all_ok}};
    o.pass = o.pass && all_ok;
  }
  if (seconds_since(start) >= kLimit9) o.pass = false;
  o.report = rows;
  o.detail = "every morphism decomposes with a unimodal centralizer profile";
  return o;
}

json run_battery(std::vector<Outcome>& outcomes) {
  outcomes.clear();
  outcomes.push_back(criterion1());
  outcomes.push_back(criterion2());
  Outcome o3, o4;
  sweep(o3, o4);
  outcomes.push_back(o3);
  outcomes.push_back(o4);
  outcomes.push_back(criterion5());
  outcomes.push_back(criterion6());
  outcomes.push_back(criterion7());
  outcomes.push_back(criterion8());
  outcomes.push_back(criterion9());
  json combined = json::array();
  for (const auto& o : outcomes) combined.push_back(o.report);
  return combined;
}

}  // namespace

int main() {
  std::vector<Outcome> outcomes;
  json first, second;
  try {
    first = run_battery(outcomes);
  } catch (const std::exception& e) {
    std::cout << "acceptance battery aborted: " << e.what() << "\n";
    return 1;
  }

  bool all = true;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const Outcome& o = outcomes[i];
    std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL")
              << " - " << o.detail << "\n";
    all = all && o.pass;
  }

  // criterion 10: determinism — rerunning the battery yields byte-identical
  // JSON reports
  bool deterministic = false;
  try {
    std::vector<Outcome> rerun;
    second = run_battery(rerun);
    deterministic = first.dump() == second.dump();
  } catch (const std::exception&) {
    deterministic = false;
  }
  std::cout << "criterion 10: " << (deterministic ? "PASS" : "FAIL")
            << " - repeated runs produce byte-identical JSON reports\n";
  all = all && deterministic;

  std::cout << (all ? "acceptance: all criteria passed"
                    : "acceptance: FAILURES present")
            << "\n";
  return all ? 0 : 1;
}
