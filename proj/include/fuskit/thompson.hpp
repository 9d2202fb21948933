#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuskit/fusion.hpp"
#include "fuskit/transfer.hpp"

namespace fuskit {

/// Raised when the transfer theorem's hypotheses hold but no fully centralized
/// conjugate exists in T. This never fires on a correct implementation.
struct TheoremViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// An instance of the transfer theorem: T a proper normal subgroup of S with
/// S/T abelian, and u an element of S - T.
class TLInstance {
 public:
  TLInstance(const FusionSystem& system, Subgroup t, int u);

  const FusionSystem& system() const { return *system_; }
  const Subgroup& t() const { return t_; }
  int u() const { return u_; }
  const AbelianSection& section() const { return section_; }

 private:
  const FusionSystem* system_;
  Subgroup t_;
  int u_;
  AbelianSection section_;
};

struct TransferTrace {
  int u_used = -1;                                // fully centralized conjugate traced
  long t_size = 0;                                // |T| of the proof's index set
  std::vector<std::pair<int, long>> exponents;    // coset id -> k_j, sorted by coset
  long fixed_points = 0;                          // |(Omega/S)^P|, P = C_S(u)
  int transfer_coset = 0;                         // u tr_{Omega,psi}
};

struct Cond2Result {
  bool ok = false;
  std::vector<int> fully_centralized_conjugates;  // the set I, sorted
  std::vector<int> cosets;                        // distinct coset ids of I T
  std::string failure;                            // empty when ok
};

struct TLReport {
  bool cond1 = false, cond2 = false, cond3 = false;
  Cond2Result cond2_detail;
  std::optional<int> witness;
  TransferTrace trace;
  bool hypotheses() const { return cond1 && cond2 && cond3; }
};

/// (1) u is of least order in S - T.
bool check_condition_1(const TLInstance& inst);

/// (2) the cosets of the fully centralized conjugates of u in S - T are
/// linearly independent in Omega_1(S/T). A coset outside Omega_1 is reported
/// as a condition failure.
Cond2Result check_condition_2(const TLInstance& inst);

/// (3) F = O^p(F).
bool check_condition_3(const TLInstance& inst);

/// Least fully centralized F-conjugate of u inside T, when one exists.
std::optional<int> find_witness(const TLInstance& inst);

/// The proof's transfer bookkeeping: P = C_S(u) for a fully centralized
/// conjugate of u, the index set of (i,t) with P <= (tS_i), the per-coset
/// exponents k_j, and the transfer value itself. Cross-checks sum(k_j) = |T| =
/// |(Omega/S)^P| and |T| prime to p; a mismatch throws.
TransferTrace transfer_trace(const TLInstance& inst);

/// Full verdict. When all three conditions hold, a missing witness throws
/// TheoremViolation. When (1) and (2) hold and no witness exists, the traced
/// transfer value must be a nontrivial coset.
TLReport tl_verify(const TLInstance& inst);

struct CorollaryReport {
  bool applicable = false;
  std::vector<std::string> failed_hypotheses;
  std::optional<TLReport> tl;
};

/// Cyclic-quotient corollary: S/T cyclic, u of least order in S - T,
/// F = O^p(F), and every fully centralized conjugate of u in T or uT (at
/// p = 2 this last condition holds automatically).
CorollaryReport corollary_cyclic(const FusionSystem& f, const Subgroup& t, int u);

struct LinIndReport {
  bool applicable = false;
  std::vector<std::string> failed_hypotheses;
  std::vector<int> fully_centralized_involutions;          // global set I
  std::vector<std::pair<int, std::optional<int>>> results;  // involution -> witness
};

/// p = 2 aggregate: when the fully centralized involutions outside T have
/// independent cosets and F = O^2(F), every involution in S - T gets a
/// witness in T.
LinIndReport corollary_linind(const FusionSystem& f, const Subgroup& t);

}  // namespace fuskit
