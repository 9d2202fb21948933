#include "fuskit/transfer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace fuskit {

namespace {

// representative lookup for left cosets xH over the given ambient element set;
// pick = min or max element of the coset
std::unordered_map<int, int> coset_rep_table(const std::vector<int>& ambient,
                                             const Subgroup& h, bool greatest) {
  const auto& g = *h.parent();
  std::unordered_map<int, int> rep_of;
  rep_of.reserve(ambient.size() * 2);
  for (int x : ambient) {
    if (rep_of.count(x)) continue;
    std::vector<int> coset;
    coset.reserve(h.elements().size());
    for (int t : h.elements()) coset.push_back(g.mul(x, t));
    int rep = greatest ? *std::max_element(coset.begin(), coset.end())
                       : *std::min_element(coset.begin(), coset.end());
    for (int y : coset) rep_of[y] = rep;
  }
  return rep_of;
}

TransferValue transfer_over(const std::vector<int>& ambient, const Subgroup& h,
                            const std::function<int(int)>& to_coset,
                            const AbelianSection& a, int u, bool greatest) {
  const auto& g = *h.parent();
  auto rep_of = coset_rep_table(ambient, h, greatest);
  std::set<int> reps;
  for (const auto& [elem, rep] : rep_of) reps.insert(rep);
  int acc = 0;
  for (int r : reps) {
    int x = g.mul(u, r);
    int factor = g.mul(g.inv(rep_of.at(x)), x);  // [ur]^{-1} u r, lies in h
    acc = a.mul(acc, to_coset(factor));
  }
  return {acc};
}

}  // namespace

TransferValue classical_transfer(const GroupPtr& g, const Subgroup& s,
                                 const AbelianSection& a, int u) {
  if (u < 0 || u >= g->order()) throw MembershipError("element not in group");
  if (!(a.top() == s)) throw PreconditionError("section is not over S");
  std::vector<int> all(static_cast<std::size_t>(g->order()));
  std::iota(all.begin(), all.end(), 0);
  auto psi = [&](int x) { return a.coset_of(x); };
  TransferValue v = transfer_over(all, s, psi, a, u, /*greatest=*/false);
  TransferValue w = transfer_over(all, s, psi, a, u, /*greatest=*/true);
  if (!(v == w))
    throw std::logic_error("transfer value depends on the transversal");
  return v;
}

TransferValue subgroup_transfer(const Subgroup& s, const Subgroup& si,
                                const std::function<int(int)>& to_coset,
                                const AbelianSection& a, int u) {
  if (!s.contains(u)) throw MembershipError("element not in S");
  if (!si.subset_of(s)) throw PreconditionError("S_i is not a subgroup of S");
  return transfer_over(s.elements(), si, to_coset, a, u, /*greatest=*/false);
}

TransferValue mackey_transfer(const GroupPtr& g, const Subgroup& s,
                              const AbelianSection& a, int u) {
  if (!s.contains(u)) throw MembershipError("element not in S");
  int acc = 0;
  for (const auto& dc : double_cosets(s, g, s)) {
    int gi = dc.representative;
    Subgroup si = s.conjugate(g->inv(gi)).intersect(s);  // (gS) ∩ S
    auto cg_psi = [&](int x) { return a.coset_of(g->conj(x, gi)); };
    acc = a.mul(acc, subgroup_transfer(s, si, cg_psi, a, u).coset);
  }
  return {acc};
}

// ---- biset decomposition -------------------------------------------------------

long BisetDecomposition::total_size() const {
  long ss = system.sylow().order();
  long total = 0;
  for (const auto& part : parts)
    total += part.multiplicity * ss * ss / part.domain.order();
  return total;
}

BisetDecomposition characteristic_biset(const FusionSystem& f) {
  BisetDecomposition omega{f, {}, true};
  const auto& g = f.ambient();
  const auto& s = f.sylow();
  for (const auto& dc : double_cosets(s, g, s)) {
    int gi = dc.representative;
    Subgroup si = s.conjugate(g->inv(gi)).intersect(s);
    omega.parts.push_back({si, Injection::from_witness(si, gi), 1});
  }
  return omega;
}

TransferValue biset_transfer(const BisetDecomposition& omega,
                             const AbelianSection& a, int u) {
  const auto& s = omega.system.sylow();
  int acc = 0;
  for (const auto& part : omega.parts) {
    auto phi_psi = [&](int x) { return a.coset_of(part.map.apply(x)); };
    int v = subgroup_transfer(s, part.domain, phi_psi, a, u).coset;
    acc = a.mul(acc, a.power(v, part.multiplicity));
  }
  return {acc};
}

long orbit_fixed_points(const BisetDecomposition& omega, const Subgroup& p) {
  const auto& g = omega.system.ambient();
  const auto& s = omega.system.sylow();
  if (!p.subset_of(s)) throw PreconditionError("P is not a subgroup of S");
  long count = 0;
  for (const auto& part : omega.parts) {
    for (const auto& dc : double_cosets(p, s.elements(), part.domain)) {
      Subgroup tsi = part.domain.conjugate(g->inv(dc.representative));  // (tS_i)
      if (p.subset_of(tsi)) count += part.multiplicity;
    }
  }
  return count;
}

// ---- verification -----------------------------------------------------------------

namespace {

// An S-P biset realized as a point set with explicit commuting actions.
struct RealizedBiset {
  int n = 0;
  std::vector<std::vector<int>> left;   // left[s][pt], s local index in S
  std::vector<std::vector<int>> right;  // right[t][pt], t local index in P
};

// Realize the decomposition as right cosets Delta_i (a,b) inside S x S.
// Left action of s sends Delta(a,b) to Delta(a s^{-1}, b); the right action of
// t (through phi) sends it to Delta(a, b t^phi).
RealizedBiset realize(const BisetDecomposition& omega, const Subgroup& p,
                      const Injection* phi) {
  const auto& g = *omega.system.ambient();
  const auto& s = omega.system.sylow();
  const int ns = s.order();

  RealizedBiset x;
  std::vector<std::pair<int, int>> pts;  // (a, b) canonical coset reps, global ids
  std::vector<std::unordered_map<long, int>> coset_id_per_piece;

  // Each copy of each part is its own block of points.
  struct Piece {
    const BisetPart* part;
    std::unordered_map<long, int> coset_of;  // a*|G|+b -> point id
  };
  std::vector<Piece> pieces;

  for (const auto& part : omega.parts) {
    for (long copy = 0; copy < part.multiplicity; ++copy) {
      Piece piece{&part, {}};
      for (int ai = 0; ai < ns; ++ai)
        for (int bi = 0; bi < ns; ++bi) {
          int a = s.elements()[static_cast<std::size_t>(ai)];
          int b = s.elements()[static_cast<std::size_t>(bi)];
          long key = static_cast<long>(a) * g.order() + b;
          if (piece.coset_of.count(key)) continue;
          int id = static_cast<int>(pts.size());
          pts.emplace_back(a, b);
          // fill the whole coset Delta(a,b), Delta = {(d, d^phi_i)}
          for (int d : part.domain.elements()) {
            int aa = g.mul(d, a);
            int bb = g.mul(part.map.apply(d), b);
            piece.coset_of[static_cast<long>(aa) * g.order() + bb] = id;
          }
        }
      pieces.push_back(std::move(piece));
    }
  }

  x.n = static_cast<int>(pts.size());
  x.left.assign(static_cast<std::size_t>(ns), std::vector<int>(static_cast<std::size_t>(x.n)));
  x.right.assign(p.elements().size(), std::vector<int>(static_cast<std::size_t>(x.n)));

  // point -> piece lookup
  std::vector<int> piece_of(static_cast<std::size_t>(x.n), -1);
  for (std::size_t pi = 0; pi < pieces.size(); ++pi)
    for (const auto& [key, id] : pieces[pi].coset_of) piece_of[static_cast<std::size_t>(id)] = static_cast<int>(pi);

  auto point_pair = [&](int id) { return pts[static_cast<std::size_t>(id)]; };

  for (int si = 0; si < ns; ++si) {
    int sg = s.elements()[static_cast<std::size_t>(si)];
    for (int pt = 0; pt < x.n; ++pt) {
      auto [a, b] = point_pair(pt);
      const auto& piece = pieces[static_cast<std::size_t>(piece_of[static_cast<std::size_t>(pt)])];
      long key = static_cast<long>(g.mul(a, g.inv(sg))) * g.order() + b;
      x.left[static_cast<std::size_t>(si)][static_cast<std::size_t>(pt)] = piece.coset_of.at(key);
    }
  }
  for (std::size_t ti = 0; ti < p.elements().size(); ++ti) {
    int tg = p.elements()[ti];
    int tw = phi ? phi->apply(tg) : tg;
    for (int pt = 0; pt < x.n; ++pt) {
      auto [a, b] = point_pair(pt);
      const auto& piece = pieces[static_cast<std::size_t>(piece_of[static_cast<std::size_t>(pt)])];
      long key = static_cast<long>(a) * g.order() + g.mul(b, tw);
      x.right[ti][static_cast<std::size_t>(pt)] = piece.coset_of.at(key);
    }
  }
  return x;
}

// Stabilizer (as sorted (s_local, t_local) pairs) of a point under the
// combined relation s . x = x . t.
std::vector<std::pair<int, int>> point_stabilizer(const RealizedBiset& x, int pt) {
  std::vector<std::pair<int, int>> stab;
  for (std::size_t si = 0; si < x.left.size(); ++si)
    for (std::size_t ti = 0; ti < x.right.size(); ++ti)
      if (x.left[si][static_cast<std::size_t>(pt)] == x.right[ti][static_cast<std::size_t>(pt)])
        stab.emplace_back(static_cast<int>(si), static_cast<int>(ti));
  return stab;
}

std::vector<std::vector<int>> orbits(const RealizedBiset& x) {
  std::vector<int> orbit_of(static_cast<std::size_t>(x.n), -1);
  std::vector<std::vector<int>> out;
  for (int pt = 0; pt < x.n; ++pt) {
    if (orbit_of[static_cast<std::size_t>(pt)] >= 0) continue;
    std::vector<int> orb{pt};
    orbit_of[static_cast<std::size_t>(pt)] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < orb.size(); ++i) {
      for (const auto& tbl : x.left) {
        int y = tbl[static_cast<std::size_t>(orb[i])];
        if (orbit_of[static_cast<std::size_t>(y)] < 0) {
          orbit_of[static_cast<std::size_t>(y)] = static_cast<int>(out.size());
          orb.push_back(y);
        }
      }
      for (const auto& tbl : x.right) {
        int y = tbl[static_cast<std::size_t>(orb[i])];
        if (orbit_of[static_cast<std::size_t>(y)] < 0) {
          orbit_of[static_cast<std::size_t>(y)] = static_cast<int>(out.size());
          orb.push_back(y);
        }
      }
    }
    out.push_back(std::move(orb));
  }
  return out;
}

// Isomorphism test for two S-P bisets: matching orbit multisets with
// S x P - conjugate point stabilizers.
bool bisets_isomorphic(const RealizedBiset& x, const RealizedBiset& y,
                       const Group& g, const Subgroup& s, const Subgroup& p) {
  if (x.n != y.n) return false;
  auto ox = orbits(x), oy = orbits(y);
  if (ox.size() != oy.size()) return false;

  auto conj_pair = [&](const std::pair<int, int>& st, int ul, int vl) {
    int sg = s.elements()[static_cast<std::size_t>(st.first)];
    int tg = p.elements()[static_cast<std::size_t>(st.second)];
    int u = s.elements()[static_cast<std::size_t>(ul)];
    int v = p.elements()[static_cast<std::size_t>(vl)];
    return std::make_pair(s.local_index(g.conj(sg, u)), p.local_index(g.conj(tg, v)));
  };

  auto stab_conjugate = [&](const std::vector<std::pair<int, int>>& s1,
                            const std::vector<std::pair<int, int>>& s2) {
    if (s1.size() != s2.size()) return false;
    for (int ul = 0; ul < s.order(); ++ul)
      for (int vl = 0; vl < p.order(); ++vl) {
        std::vector<std::pair<int, int>> moved;
        moved.reserve(s1.size());
        for (const auto& st : s1) moved.push_back(conj_pair(st, ul, vl));
        std::sort(moved.begin(), moved.end());
        if (moved == s2) return true;
      }
    return false;
  };

  std::vector<bool> used(oy.size(), false);
  for (const auto& orb : ox) {
    auto sx = point_stabilizer(x, orb.front());
    std::sort(sx.begin(), sx.end());
    bool matched = false;
    for (std::size_t j = 0; j < oy.size(); ++j) {
      if (used[j] || oy[j].size() != orb.size()) continue;
      auto sy = point_stabilizer(y, oy[j].front());
      std::sort(sy.begin(), sy.end());
      if (stab_conjugate(sx, sy)) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace

CharacteristicReport verify_characteristic(const BisetDecomposition& omega) {
  CharacteristicReport rep;
  const auto& f = omega.system;
  const auto& g = f.ambient();
  const auto& s = f.sylow();

  // (a) every part is a graph subgroup of a fusion morphism into S
  rep.prop_a = true;
  for (const auto& part : omega.parts) {
    if (!part.domain.subset_of(s) || !part.map.image().subset_of(s)) {
      rep.prop_a = false;
      rep.violations.push_back("(a) part domain or image not inside S");
      continue;
    }
    auto homs = f.hom_f(part.domain, s);
    bool in_f = std::any_of(homs.begin(), homs.end(), [&](const Injection& m) {
      return m.images() == part.map.images();
    });
    if (!in_f) {
      rep.prop_a = false;
      rep.violations.push_back("(a) part map is not a morphism of F on domain of order " +
                               std::to_string(part.domain.order()));
    }
  }

  // (c) |Omega|/|S| prime to p
  long total = omega.total_size();
  if (total % s.order() != 0) {
    rep.prop_c = false;
    rep.violations.push_back("(c) |Omega| is not a multiple of |S|");
  } else {
    rep.size_over_s = total / s.order();
    rep.prop_c = rep.size_over_s % f.prime() != 0;
    if (!rep.prop_c)
      rep.violations.push_back("(c) |Omega|/|S| = " + std::to_string(rep.size_over_s) +
                               " is divisible by p = " + std::to_string(f.prime()));
  }

  // (b) for each subgroup class representative P and each phi in Hom_F(P,S),
  // the restricted and twisted S-P bisets agree
  rep.prop_b = true;
  if (omega.realized) {
    // Omega = G: the witness map g -> gx is an isomorphism; verify it is
    // equivariant on all points against the generators of S and P.
    for (const auto& cls : f.subgroup_classes()) {
      const Subgroup& p = cls.front();
      auto pgens = p.small_generating_set();
      auto sgens = s.small_generating_set();
      for (const auto& phi : f.hom_f(p, s)) {
        int x = phi.witness();
        bool ok = true;
        for (int w = 0; w < g->order() && ok; ++w) {
          for (int sg : sgens)
            if (g->mul(g->mul(sg, w), x) != g->mul(sg, g->mul(w, x))) ok = false;
          for (int t : pgens) {
            // w * t |-> (w x) t^phi must match (w t) x
            if (g->mul(g->mul(w, t), x) != g->mul(g->mul(w, x), phi.apply(t))) ok = false;
          }
        }
        if (!ok) {
          rep.prop_b = false;
          rep.violations.push_back("(b) witness map fails equivariance");
        }
      }
    }
  } else {
    if (omega.total_size() > 10000)
      throw SizeLimitError("biset property (b) search guarded to |Omega| <= 10^4");
    for (const auto& cls : f.subgroup_classes()) {
      const Subgroup& p = cls.front();
      RealizedBiset restricted = realize(omega, p, nullptr);
      for (const auto& phi : f.hom_f(p, s)) {
        RealizedBiset twisted = realize(omega, p, &phi);
        if (!bisets_isomorphic(restricted, twisted, *g, s, p)) {
          rep.prop_b = false;
          rep.violations.push_back(
              "(b) no equivariant bijection for a morphism on a subgroup of order " +
              std::to_string(p.order()));
        }
      }
      if (!rep.prop_b) break;  // one witness violation is enough for the report
    }
  }
  return rep;
}

}  // namespace fuskit
