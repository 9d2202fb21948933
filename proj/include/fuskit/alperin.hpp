#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fuskit/fusion.hpp"

namespace fuskit {

struct DecompositionStep {
  Subgroup member;   // Q_i in the family
  Injection alpha;   // automorphism of Q_i with witness
};

/// A chain of family automorphisms whose restrictions compose to a morphism.
/// intermediates[i] is the image of the source after i steps (so it has
/// steps.size() + 1 entries); profile lists |C_S(intermediates[i])|.
struct Decomposition {
  Subgroup source;
  std::vector<DecompositionStep> steps;
  std::vector<Subgroup> intermediates;
  std::vector<int> profile;

  /// Composition of the restricted steps as a morphism on `source`.
  Injection composed() const;
};

struct ConjugationFamily {
  std::vector<Subgroup> members;  // sorted; always contains S
};

/// Essential subgroups together with S. When `certify` is set, every morphism
/// of F between subgroup-class representatives is checked to decompose over
/// the family; a generation failure throws (it would falsify the fusion
/// theorem for a realized system).
ConjugationFamily essential_family(const FusionSystem& f, bool certify = false);

/// Fully normalized (optionally), centric, radical subgroups plus S.
ConjugationFamily centric_radical_family(const FusionSystem& f,
                                         bool fully_normalized_filter = true,
                                         bool certify = false);

void certify_family(const FusionSystem& f, const ConjugationFamily& c);

/// Shortest chain of restricted family automorphisms composing to phi, by
/// breadth-first search over the reachable morphisms from phi's domain.
/// Deterministic: members and automorphisms are expanded in canonical order.
Decomposition decompose(const FusionSystem& f, const ConjugationFamily& c,
                        const Injection& phi);

/// Decomposition of phi (whose image must be fully centralized) with a
/// nondecreasing centralizer profile.
Decomposition up_decompose(const FusionSystem& f, const ConjugationFamily& c,
                           const Injection& phi);

/// Decomposition of an arbitrary F-isomorphism with a unimodal centralizer
/// profile; the second component is the peak index.
std::pair<Decomposition, int> updown_decompose(const FusionSystem& f,
                                               const ConjugationFamily& c,
                                               const Injection& phi);

struct NormalizerRemarkReport {
  Subgroup v;                       // O_p(G)
  Subgroup p;                       // the four subgroup of the construction
  int h1 = -1, h2 = -1, h = -1;     // order-3 factor elements and their product
  int p_class_size = 0;             // size of the full F-conjugacy class of P
  std::vector<Subgroup> h_orbit;    // orbit of P under c_{h1}, c_{h2}
  int ns_p_index = 0;               // |S : N_S(P)|
  bool p_fully_normalized = false;
  bool ph1_fully_normalized = false;
  bool orbit_others_have_normalizer_v = false;  // N_S(R) = V off P in h_orbit
  bool all_chains_hit_non_fully_normalized = false;
  Decomposition essential_decomposition;  // of c_h on P
  bool ok() const {
    return h_orbit.size() == 3 && ns_p_index == 2 && p_fully_normalized &&
           !ph1_fully_normalized && orbit_others_have_normalizer_v &&
           all_chains_hit_non_fully_normalized;
  }
};

/// The direct-product counterexample showing that unimodal profiles fail for
/// normalizers: requires the fixture G = sym(4) x sym(4) at p = 2 on 4+4
/// points.
NormalizerRemarkReport normalizer_counterexample(const FusionSystem& f);

}  // namespace fuskit
