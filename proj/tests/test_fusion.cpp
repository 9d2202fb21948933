#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "fuskit/catalog.hpp"
#include "fuskit/fusion.hpp"

using namespace fuskit;

namespace {

std::vector<int> primes_dividing(int n) {
  std::vector<int> ps;
  for (int p = 2; p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  return ps;
}

}  // namespace

TEST_CASE("injections validate and compose") {
  auto g = catalog::symmetric(4);
  FusionSystem f(g, 2);
  const Subgroup& s = f.sylow();

  Injection id = Injection::identity(s);
  CHECK(id.is_identity_map());
  CHECK(id.image() == s);

  // c_g for a 3-cycle moves the Klein four subgroup around
  Subgroup v = commutator_subgroup(g).intersect(s);
  int r = g->index_of(Perm::from_cycles(4, {{0, 1, 2}}));
  Injection phi = Injection::from_witness(v, r);
  CHECK(phi.image() == v);  // V4 is normal
  CHECK_FALSE(phi.is_identity_map());
  CHECK(phi.then(phi).then(phi).is_identity_map());  // order 3
  CHECK(phi.then(phi.inverted()).is_identity_map());

  // a non-homomorphic image table is rejected
  std::vector<int> bad = v.elements();
  std::swap(bad[0], bad[1]);
  CHECK_THROWS_AS(Injection(v, bad), PreconditionError);
}

TEST_CASE("hom sets are conjugation maps with least witnesses") {
  auto g = catalog::symmetric(4);
  FusionSystem f(g, 2);
  const Subgroup& s = f.sylow();
  Subgroup z = s.center();

  auto maps = f.hom_f(z, s);
  // Z(S) is generated by a transposition-pair; its G-class inside S has 3
  // involutions of that shape... count maps = |distinct c_g images|
  CHECK(!maps.empty());
  CHECK(std::is_sorted(maps.begin(), maps.end()));
  for (const auto& m : maps) {
    REQUIRE(m.has_witness());
    for (std::size_t i = 0; i < z.elements().size(); ++i)
      CHECK(g->conj(z.elements()[i], m.witness()) == m.images()[i]);
  }
}

TEST_CASE("composition closure of hom sets") {
  auto g = catalog::symmetric(4);
  FusionSystem f(g, 2);
  const Subgroup& s = f.sylow();
  for (const auto& cls : f.subgroup_classes()) {
    const Subgroup& p = cls.front();
    if (p.order() > 4) continue;
    for (const auto& phi : f.hom_f(p, s)) {
      Subgroup q = phi.image();
      for (const auto& psi : f.hom_f(q, s)) {
        Injection comp = phi.then(psi);
        auto all = f.hom_f(p, s);
        CHECK(std::find(all.begin(), all.end(), comp) != all.end());
      }
    }
  }
}

TEST_CASE("morphisms preserve element orders") {
  auto g = catalog::build("sl2_3");
  FusionSystem f(g, 2);
  for (const auto& cls : f.subgroup_classes()) {
    const Subgroup& p = cls.front();
    for (const auto& phi : f.hom_f(p, f.sylow()))
      for (int x : p.elements())
        CHECK(g->element_order(x) == g->element_order(phi.apply(x)));
  }
}

TEST_CASE("element conjugates stay inside S and share order") {
  auto g = catalog::build("sl3_2");
  FusionSystem f(g, 2);
  for (int x : f.sylow().elements()) {
    auto conj = f.f_conjugates_element(x);
    CHECK(std::is_sorted(conj.begin(), conj.end()));
    for (int y : conj) {
      CHECK(f.sylow().contains(y));
      CHECK(g->element_order(x) == g->element_order(y));
    }
  }
}

TEST_CASE("extremal elements are exactly those with fully centralized closure") {
  for (const char* name : {"sym(4)", "sl2_3", "sl3_2", "quaternion8"}) {
    auto g = catalog::build(name);
    FusionSystem f(g, 2);
    for (int t : f.sylow().elements()) {
      Subgroup cyc = Subgroup::generated(g, {t});
      CHECK(f.is_extremal(t) == f.is_fully_centralized(cyc));
    }
  }
}

TEST_CASE("every class has fully centralized and fully normalized members") {
  for (const char* name : {"sym(4)", "sl2_3", "alt(6)"}) {
    auto g = catalog::build(name);
    FusionSystem f(g, 2);
    for (const auto& cls : f.subgroup_classes()) {
      bool any_c = false, any_n = false;
      for (const auto& q : f.f_conjugates_subgroup(cls.front())) {
        any_c = any_c || f.is_fully_centralized(q);
        any_n = any_n || f.is_fully_normalized(q);
      }
      CHECK(any_c);
      CHECK(any_n);
    }
  }
}

TEST_CASE("focal subgroup equals S meet the commutator subgroup") {
  for (const auto& name : catalog::default_fixture_names()) {
    auto g = catalog::build(name);
    for (int p : primes_dividing(g->order())) {
      FusionSystem f(g, p);
      CHECK(f.focal_subgroup() ==
            commutator_subgroup(g).intersect(f.sylow()));
    }
  }
}

TEST_CASE("hyperfocal subgroup and O^p closure") {
  auto sym4 = catalog::symmetric(4);
  FusionSystem f4(sym4, 2);
  CHECK(f4.hyperfocal_subgroup().order() == 4);
  CHECK(f4.focal_subgroup().order() == 4);
  CHECK_FALSE(f4.is_op_closed());

  CHECK(FusionSystem(catalog::build("sl3_2"), 2).is_op_closed());
  CHECK(FusionSystem(catalog::build("sl2_3"), 2).is_op_closed());
  CHECK(FusionSystem(catalog::alternating(6), 2).is_op_closed());
  CHECK_FALSE(FusionSystem(catalog::build("s4xs4"), 2).is_op_closed());
}

TEST_CASE("aut groups have order |N_G(P) : C_G(P)|") {
  for (const char* name : {"sym(4)", "sl2_3"}) {
    auto g = catalog::build(name);
    FusionSystem f(g, 2);
    for (const auto& cls : f.subgroup_classes()) {
      const Subgroup& p = cls.front();
      AutFGroup aut = f.aut_f(p);
      Subgroup n = normalizer(g, p);
      Subgroup c = centralizer(g, p.elements());
      CHECK(aut.group->order() == n.order() / c.order());
      // inner automorphisms form a subgroup of size |P : Z(P)|
      CHECK(static_cast<int>(aut.inner.size()) ==
            p.order() / p.center().order());
    }
  }
}

TEST_CASE("centric radical and essential detection on Sym4") {
  auto g = catalog::symmetric(4);
  FusionSystem f(g, 2);
  const Subgroup& s = f.sylow();
  Subgroup v = commutator_subgroup(g).intersect(s);

  CHECK(f.is_centric(s));
  CHECK(f.is_centric(v));
  CHECK_FALSE(f.is_centric(Subgroup::trivial(g)));
  CHECK(f.is_radical(v));  // Out_F(V4) = S3 has trivial core
  CHECK(f.is_essential(v));
  CHECK_THROWS_AS(f.is_essential(s), PreconditionError);

  int essentials = 0;
  for (const auto& cls : f.subgroup_classes()) {
    if (cls.front().order() == s.order()) continue;
    if (f.is_essential(cls.front())) ++essentials;
  }
  CHECK(essentials == 1);
}

TEST_CASE("strongly p-embedded brute force") {
  CHECK(has_strongly_p_embedded(catalog::symmetric(3), 2));
  CHECK_FALSE(has_strongly_p_embedded(catalog::symmetric(3), 3));
  CHECK_FALSE(has_strongly_p_embedded(catalog::symmetric(4), 2));
  CHECK(has_strongly_p_embedded(catalog::sl3_2(), 7));
}

TEST_CASE("quotient groups") {
  auto g = catalog::symmetric(4);
  Subgroup v = commutator_subgroup(g).intersect(sylow_subgroup(g, 2));
  QuotientGroup q = quotient_group(g, v);
  CHECK(q.group->order() == 6);
  CHECK(q.image_of[0] == 0);
}

TEST_CASE("sylow validation in the fusion system constructor") {
  auto g = catalog::symmetric(4);
  Subgroup z = sylow_subgroup(g, 2).center();
  CHECK_THROWS_AS(FusionSystem(g, z, 2), PreconditionError);
}
