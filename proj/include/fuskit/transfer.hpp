#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fuskit/fusion.hpp"
#include "fuskit/group.hpp"

namespace fuskit {

/// Value of a transfer map: a coset id of the target section.
struct TransferValue {
  int coset = 0;
  bool trivial() const { return coset == 0; }
  bool operator==(const TransferValue&) const = default;
};

/// u tr_{S,psi}^G: product over a canonical left transversal [G/S] of
/// psi([uh]^{-1} u h). The result is recomputed against a second transversal
/// (greatest-element representatives) and the two must agree.
TransferValue classical_transfer(const GroupPtr& g, const Subgroup& s,
                                 const AbelianSection& a, int u);

/// Ordinary transfer from s to si composed with an arbitrary map si -> A,
/// given as element-index -> coset-id.
TransferValue subgroup_transfer(const Subgroup& s, const Subgroup& si,
                                const std::function<int(int)>& to_coset,
                                const AbelianSection& a, int u);

/// Mackey decomposition of the transfer: product over S-S double coset
/// representatives g of the S-level transfer of c_g followed by psi.
/// Agrees with classical_transfer on S.
TransferValue mackey_transfer(const GroupPtr& g, const Subgroup& s,
                              const AbelianSection& a, int u);

struct BisetPart {
  Subgroup domain;   // S_i <= S
  Injection map;     // phi_i in Hom_F(S_i, S)
  long multiplicity = 1;
};

/// A characteristic biset in decomposed form: a list of transitive pieces
/// (S x S)/Delta_{S_i}^{phi_i} with multiplicities.
struct BisetDecomposition {
  FusionSystem system;
  std::vector<BisetPart> parts;
  bool realized = false;  // built as Omega = G from the double cosets

  long total_size() const;  // sum of multiplicity * |S|^2 / |S_i|
};

/// The canonical characteristic biset Omega = G: one part per S-S double
/// coset SgS, with S_i = (gS) ∩ S and phi_i = c_g.
BisetDecomposition characteristic_biset(const FusionSystem& f);

struct CharacteristicReport {
  bool prop_a = false;  // stabilizers are fusion graph subgroups
  bool prop_b = false;  // restriction and twist give isomorphic S-P bisets
  bool prop_c = false;  // |Omega|/|S| prime to p
  long size_over_s = 0;
  std::vector<std::string> violations;
  bool ok() const { return prop_a && prop_b && prop_c; }
};

/// Check the Linckelmann-Webb properties (a), (b), (c). For a realized
/// decomposition, (b) uses the explicit witness map g -> gx; otherwise an
/// orbit/stabilizer comparison over realized points, guarded to |Omega| <= 1e4.
CharacteristicReport verify_characteristic(const BisetDecomposition& omega);

/// u tr_{Omega,psi}: product over parts of subgroup transfers through phi_i.
TransferValue biset_transfer(const BisetDecomposition& omega,
                             const AbelianSection& a, int u);

/// |(Omega/S)^P|: number of right-S-orbits of Omega fixed by the left action
/// of P, counted from the decomposition.
long orbit_fixed_points(const BisetDecomposition& omega, const Subgroup& p);

}  // namespace fuskit
