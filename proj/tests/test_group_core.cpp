#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "fuskit/catalog.hpp"
#include "fuskit/group.hpp"

using namespace fuskit;

namespace {

// Independent oracle for O^p(G): intersection of all normal subgroups whose
// quotient is a p-group, found by scanning the full subgroup lattice.
Subgroup p_residual_oracle(const GroupPtr& g, int p) {
  Subgroup result = Subgroup::full(g);
  for (const auto& h : all_subgroups(Subgroup::full(g))) {
    if (!h.is_normal_in(Subgroup::full(g))) continue;
    int quotient = g->order() / h.order();
    while (quotient % p == 0) quotient /= p;
    if (quotient == 1) result = result.intersect(h);
  }
  return result;
}

}  // namespace

TEST_CASE("permutation composition is left to right") {
  Perm a = Perm::from_cycles(4, {{0, 1}});
  Perm b = Perm::from_cycles(4, {{1, 2}});
  Perm ab = a * b;
  CHECK(ab[0] == 2);  // 0 -> 1 under a, 1 -> 2 under b
  CHECK((a * a.inverse()).is_identity());
  CHECK(Perm::from_images(std::vector<int>{1, 0, 3, 2}).to_string() == "[1,0,3,2]");
}

TEST_CASE("group enumeration and arithmetic tables") {
  auto g = catalog::symmetric(4);
  REQUIRE(g->order() == 24);
  CHECK(g->element(0).is_identity());  // identity is lexicographically least
  for (int x = 0; x < g->order(); ++x) {
    CHECK(g->mul(x, g->inv(x)) == 0);
    CHECK(g->element_order(x) == element_order(*g, g->element(x)));
  }
  // conj(x, g) = g^-1 x g
  int x = g->index_of(Perm::from_cycles(4, {{0, 1}}));
  int c = g->index_of(Perm::from_cycles(4, {{0, 2}}));
  CHECK(g->element(g->conj(x, c)) == Perm::from_cycles(4, {{1, 2}}));
}

TEST_CASE("conjugacy classes partition the group") {
  auto g = catalog::symmetric(4);
  std::set<int> seen;
  for (int c = 0; c < g->num_conjugacy_classes(); ++c)
    for (int x : g->conjugacy_class_by_id(c)) CHECK(seen.insert(x).second);
  CHECK(static_cast<int>(seen.size()) == g->order());
  CHECK(g->num_conjugacy_classes() == 5);
}

TEST_CASE("Lagrange holds across the subgroup lattice") {
  for (const char* name : {"sym(4)", "sl2_3", "quaternion8"}) {
    auto g = catalog::build(name);
    for (const auto& h : all_subgroups(Subgroup::full(g)))
      CHECK(g->order() % h.order() == 0);
  }
}

TEST_CASE("centralizer and normalizer examples") {
  auto g = catalog::symmetric(4);
  int r = g->index_of(Perm::from_cycles(4, {{0, 1, 2, 3}}));
  Subgroup c = centralizer(g, {r});
  CHECK(c.order() == 4);
  bool cyclic = false;
  for (int x : c.elements())
    if (g->element_order(x) == 4) cyclic = true;
  CHECK(cyclic);

  Subgroup r4 = Subgroup::generated(g, {r});
  CHECK(normalizer(g, r4).order() == 8);

  Subgroup s = sylow_subgroup(g, 2);
  CHECK(normalizer(g, s) == s);  // Sylow 2 of Sym4 is self-normalizing
  CHECK(normalizer(g, Subgroup::full(g)) == Subgroup::full(g));
}

TEST_CASE("sylow subgroups have the right order and are deterministic") {
  struct Row {
    const char* name;
    int p, order;
  };
  for (auto [name, p, order] : {Row{"sym(4)", 2, 8}, Row{"sym(4)", 3, 3},
                                Row{"alt(6)", 2, 8}, Row{"alt(6)", 3, 9},
                                Row{"sl2_3", 2, 8}, Row{"sl3_2", 2, 8},
                                Row{"sl3_2", 7, 7}, Row{"s4xs4", 2, 64}}) {
    auto g = catalog::build(name);
    Subgroup s1 = sylow_subgroup(g, p);
    CHECK(s1.order() == order);
    CHECK(s1 == sylow_subgroup(g, p));
  }
  CHECK(sylow_subgroup(catalog::symmetric(4), 5).order() == 1);
}

TEST_CASE("double cosets partition the group with consistent sizes") {
  auto g = catalog::build("sl3_2");
  Subgroup s = sylow_subgroup(g, 2);
  long total = 0;
  for (const auto& dc : double_cosets(s, g, s)) {
    int rep = dc.representative;
    Subgroup meet = s.intersect(s.conjugate(rep));
    CHECK(dc.size == static_cast<long>(s.order()) * s.order() / meet.order());
    total += dc.size;
  }
  CHECK(total == g->order());
}

TEST_CASE("left transversals pick least representatives") {
  auto g = catalog::symmetric(4);
  Subgroup s = sylow_subgroup(g, 2);
  auto reps = left_transversal(g, s);
  REQUIRE(static_cast<int>(reps.size()) == g->order() / s.order());
  CHECK(reps.front() == 0);
  CHECK(std::is_sorted(reps.begin(), reps.end()));
  std::set<int> covered;
  for (int r : reps)
    for (int h : s.elements()) covered.insert(g->mul(r, h));
  CHECK(static_cast<int>(covered.size()) == g->order());
}

TEST_CASE("commutator subgroup and p-residual") {
  auto sym4 = catalog::symmetric(4);
  CHECK(commutator_subgroup(sym4).order() == 12);
  CHECK(p_residual(sym4, 2).order() == 12);
  CHECK(p_residual(sym4, 3).order() == 24);

  for (const char* name : {"sym(4)", "sl2_3", "quaternion8", "sl3_2"}) {
    auto g = catalog::build(name);
    for (int p : {2, 3, 7})
      CHECK(p_residual(g, p) == p_residual_oracle(g, p));
  }
}

TEST_CASE("subgroup operations") {
  auto g = catalog::symmetric(4);
  Subgroup s = sylow_subgroup(g, 2);
  CHECK(s.derived().order() == 2);  // [D8, D8] = Z(D8)
  CHECK(s.center().order() == 2);
  CHECK(s.derived() == s.center());
  CHECK_FALSE(s.is_abelian());
  CHECK(s.center().is_abelian());
  CHECK(s.is_normal_in(s));
  CHECK_FALSE(s.is_normal_in(Subgroup::full(g)));

  Subgroup v = commutator_subgroup(g).intersect(s);  // A4 ∩ S = V4
  CHECK(v.order() == 4);
  CHECK(v.is_normal_in(Subgroup::full(g)));
  CHECK(v.join(s) == s);
  CHECK(Subgroup::generated(g, s.small_generating_set()) == s);

  int three_cycle = g->index_of(Perm::from_cycles(4, {{0, 1, 2}}));
  CHECK_THROWS_AS(Subgroup(g, std::vector<int>{0, three_cycle}), PreconditionError);
}

TEST_CASE("abelian section arithmetic") {
  auto g = catalog::symmetric(4);
  Subgroup s = sylow_subgroup(g, 2);
  AbelianSection a(s, s.center());  // D8 / Z ≅ C2 x C2
  REQUIRE(a.size() == 4);
  CHECK(a.coset_of(0) == 0);
  for (int c = 0; c < a.size(); ++c) {
    CHECK(a.mul(c, a.inv(c)) == 0);
    if (c != 0) CHECK(a.coset_order(c) == 2);
  }
  CHECK(a.omega1(2).size() == 4);
  CHECK(a.span({1, 2}).size() == 4);
  CHECK(a.linearly_independent(2, {1, 2}));
  CHECK_FALSE(a.linearly_independent(2, {1, 2, 3}));  // third is the product
  CHECK(a.linearly_independent(2, {}));
  CHECK(a.linearly_independent(2, {1}));
  CHECK_THROWS_AS(a.linearly_independent(2, {0}), PreconditionError);

  // non-normal or non-abelian sections are rejected
  auto q8 = catalog::quaternion8();
  Subgroup full = Subgroup::full(q8);
  CHECK(AbelianSection(full, full.center()).size() == 4);
  CHECK_THROWS_AS(AbelianSection(full, Subgroup::trivial(q8)), PreconditionError);
}

TEST_CASE("canonical representatives are stable across constructions") {
  auto g1 = catalog::build("sl2_3");
  auto g2 = catalog::build("sl2_3");
  Subgroup s1 = sylow_subgroup(g1, 2), s2 = sylow_subgroup(g2, 2);
  CHECK(s1.elements() == s2.elements());
  AbelianSection a1(s1, s1.center()), a2(s2, s2.center());
  for (int c = 0; c < a1.size(); ++c) CHECK(a1.rep(c) == a2.rep(c));
  auto d1 = double_cosets(s1, g1, s1), d2 = double_cosets(s2, g2, s2);
  REQUIRE(d1.size() == d2.size());
  for (std::size_t i = 0; i < d1.size(); ++i)
    CHECK(d1[i].representative == d2[i].representative);
}

TEST_CASE("subgroup lattice and conjugacy classes") {
  auto g = catalog::symmetric(4);
  Subgroup s = sylow_subgroup(g, 2);
  auto subs = all_subgroups(s);
  CHECK(subs.size() == 10);  // D8: 1, Z, 2+2 reflections, C4, 2 Kleins, D8 -> 10
  auto classes = subgroup_conjugacy_classes(s, subs);
  std::size_t total = 0;
  for (const auto& cls : classes) total += cls.size();
  CHECK(total == subs.size());
}
