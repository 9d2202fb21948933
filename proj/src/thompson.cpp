#include "fuskit/thompson.hpp"

#include <algorithm>
#include <map>

namespace fuskit {

TLInstance::TLInstance(const FusionSystem& system, Subgroup t, int u)
    : system_(&system),
      t_(std::move(t)),
      u_(u),
      section_(system.sylow(), t_) {
  if (t_.order() == system.sylow().order())
    throw PreconditionError("T must be a proper subgroup of S");
  if (t_.contains(u_)) throw PreconditionError("u must lie in S - T");
  if (!system.sylow().contains(u_)) throw MembershipError("u must lie in S");
}

bool check_condition_1(const TLInstance& inst) {
  const auto& g = *inst.system().ambient();
  int least = -1;
  for (int x : inst.system().sylow().elements()) {
    if (inst.t().contains(x)) continue;
    int o = g.element_order(x);
    if (least < 0 || o < least) least = o;
  }
  return g.element_order(inst.u()) == least;
}

namespace {

std::vector<int> fully_centralized_conjugates_outside_t(const TLInstance& inst) {
  std::vector<int> out;
  for (int v : inst.system().f_conjugates_element(inst.u()))
    if (!inst.t().contains(v) && inst.system().is_extremal(v)) out.push_back(v);
  return out;  // conjugacy classes are sorted, so this is too
}

}  // namespace

Cond2Result check_condition_2(const TLInstance& inst) {
  Cond2Result res;
  res.fully_centralized_conjugates = fully_centralized_conjugates_outside_t(inst);
  const auto& a = inst.section();
  for (int v : res.fully_centralized_conjugates) res.cosets.push_back(a.coset_of(v));
  std::sort(res.cosets.begin(), res.cosets.end());
  res.cosets.erase(std::unique(res.cosets.begin(), res.cosets.end()), res.cosets.end());
  const int p = inst.system().prime();
  for (int c : res.cosets) {
    if (a.coset_order(c) != p) {
      res.ok = false;
      res.failure = "coset " + a.coset_label(c) + " lies outside Omega_1(S/T)";
      return res;
    }
  }
  res.ok = a.linearly_independent(p, res.cosets);
  if (!res.ok) res.failure = "cosets of I are linearly dependent in Omega_1(S/T)";
  return res;
}

bool check_condition_3(const TLInstance& inst) {
  return inst.system().is_op_closed();
}

std::optional<int> find_witness(const TLInstance& inst) {
  for (int v : inst.system().f_conjugates_element(inst.u()))
    if (inst.t().contains(v) && inst.system().is_extremal(v)) return v;
  return std::nullopt;
}

TransferTrace transfer_trace(const TLInstance& inst) {
  const auto& f = inst.system();
  const auto& g = *f.ambient();
  const auto& s = f.sylow();
  const auto& a = inst.section();

  // Replace u by a fully centralized conjugate, preferring one outside T.
  int u0 = -1;
  for (int v : f.f_conjugates_element(inst.u()))
    if (f.is_extremal(v) && !inst.t().contains(v)) {
      u0 = v;
      break;
    }
  if (u0 < 0)
    for (int v : f.f_conjugates_element(inst.u()))
      if (f.is_extremal(v)) {
        u0 = v;
        break;
      }
  if (u0 < 0) throw std::logic_error("element with no fully centralized conjugate");

  TransferTrace trace;
  trace.u_used = u0;

  Subgroup p_cent = f.centralizer_in_s({u0});
  BisetDecomposition omega = characteristic_biset(f);

  std::map<int, long> exps;
  for (const auto& part : omega.parts) {
    for (const auto& dc : double_cosets(p_cent, s.elements(), part.domain)) {
      int t = dc.representative;
      Subgroup tsi = part.domain.conjugate(g.inv(t));
      if (!p_cent.subset_of(tsi)) continue;
      trace.t_size += part.multiplicity;
      int factor = part.map.apply(g.conj(u0, t));  // u^{c_t phi_i}
      exps[a.coset_of(factor)] += part.multiplicity;
    }
  }
  trace.exponents.assign(exps.begin(), exps.end());
  trace.fixed_points = orbit_fixed_points(omega, p_cent);
  trace.transfer_coset = biset_transfer(omega, a, u0).coset;

  long sum = 0;
  for (const auto& [coset, k] : trace.exponents) sum += k;
  if (sum != trace.t_size || trace.t_size != trace.fixed_points)
    throw std::logic_error("transfer trace bookkeeping mismatch");
  if (trace.t_size % f.prime() == 0)
    throw std::logic_error("|T| divisible by p for a characteristic biset");
  return trace;
}

TLReport tl_verify(const TLInstance& inst) {
  TLReport rep;
  rep.cond1 = check_condition_1(inst);
  rep.cond2_detail = check_condition_2(inst);
  rep.cond2 = rep.cond2_detail.ok;
  rep.cond3 = check_condition_3(inst);
  rep.witness = find_witness(inst);
  rep.trace = transfer_trace(inst);

  if (rep.cond1 && rep.cond2 && !rep.witness && rep.trace.transfer_coset == 0)
    throw std::logic_error(
        "trivial transfer value despite conditions (1),(2) and no witness");
  if (rep.hypotheses() && !rep.witness)
    throw TheoremViolation(
        "all conditions hold but no fully centralized conjugate lies in T");
  return rep;
}

CorollaryReport corollary_cyclic(const FusionSystem& f, const Subgroup& t, int u) {
  CorollaryReport rep;
  TLInstance inst(f, t, u);
  const auto& a = inst.section();

  bool cyclic = false;
  for (int c = 0; c < a.size(); ++c)
    if (a.coset_order(c) == a.size()) cyclic = true;
  if (!cyclic) rep.failed_hypotheses.push_back("S/T is not cyclic");

  if (!check_condition_1(inst))
    rep.failed_hypotheses.push_back("u is not of least order in S - T");
  if (!f.is_op_closed()) rep.failed_hypotheses.push_back("F != O^p(F)");

  if (f.prime() != 2) {
    // every fully centralized conjugate must lie in T or in uT
    int ucoset = a.coset_of(u);
    for (int v : f.f_conjugates_element(u)) {
      if (!f.is_extremal(v)) continue;
      int c = a.coset_of(v);
      if (c != 0 && c != ucoset) {
        rep.failed_hypotheses.push_back(
            "a fully centralized conjugate lies outside T and uT");
        break;
      }
    }
  }
  // at p = 2 the coset condition holds automatically: u has least order, so
  // u^2 lies in T and uT is the unique involution of the cyclic quotient

  rep.applicable = rep.failed_hypotheses.empty();
  if (rep.applicable) {
    rep.tl = tl_verify(inst);
    if (!rep.tl->witness)
      throw TheoremViolation("cyclic corollary hypotheses hold but no witness found");
  }
  return rep;
}

LinIndReport corollary_linind(const FusionSystem& f, const Subgroup& t) {
  LinIndReport rep;
  const auto& g = *f.ambient();
  const auto& s = f.sylow();
  if (f.prime() != 2) {
    rep.failed_hypotheses.push_back("corollary requires p = 2");
    return rep;
  }
  AbelianSection a(s, t);  // validates T normal, S/T abelian
  if (!f.is_op_closed()) rep.failed_hypotheses.push_back("F != O^2(F)");

  std::vector<int> cosets;
  for (int x : s.elements()) {
    if (t.contains(x) || g.element_order(x) != 2) continue;
    if (f.is_extremal(x)) {
      rep.fully_centralized_involutions.push_back(x);
      cosets.push_back(a.coset_of(x));
    }
  }
  std::sort(cosets.begin(), cosets.end());
  cosets.erase(std::unique(cosets.begin(), cosets.end()), cosets.end());
  if (!a.linearly_independent(2, cosets))
    rep.failed_hypotheses.push_back("cosets of I are linearly dependent");

  rep.applicable = rep.failed_hypotheses.empty();
  if (!rep.applicable) return rep;

  for (int x : s.elements()) {
    if (t.contains(x) || g.element_order(x) != 2) continue;
    TLInstance inst(f, t, x);
    auto witness = find_witness(inst);
    if (!witness)
      throw TheoremViolation("linear-independence corollary failed for an involution");
    rep.results.emplace_back(x, witness);
  }
  return rep;
}

}  // namespace fuskit
