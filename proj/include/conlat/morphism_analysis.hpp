#pragma once

// Morphism-level properties: FRet and L(f), admissibility, FBC, GU/GD/LO and
// their ideal versions, CBLP and B-normality, preservation of −̇.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conlat/algebra.hpp"
#include "conlat/commutator.hpp"
#include "conlat/congruence.hpp"
#include "conlat/lattice.hpp"
#include "conlat/reticulation.hpp"

namespace conlat {

/// f• and f* as index maps between congruence lattices.
std::vector<std::size_t> bullet_map(const Morphism& f, const ConLattice& ca, const ConLattice& cb);
std::vector<std::size_t> star_map(const Morphism& f, const ConLattice& ca, const ConLattice& cb);

struct FretVerdict {
  bool holds = false;
  /// First pair (α, β), α < β in Con order, with α ≡ β but f•α ≢ f•β.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  /// L(f) on class indices; empty unless holds.
  std::vector<std::size_t> l_of_f;
  LatticeMapFlags preserves;
  /// L(f) restricted to B(L(A)).
  BooleanRestriction boolean;
};

/// Throws AnomalyDetected if L(f) exists but does not preserve 0 and join.
FretVerdict check_fret(const Morphism& f, const Reticulation& ra, const Reticulation& rb);

struct AdmFretReport {
  /// (1) admissible, (2) FRet and L(f) meet-preserving, (3) λ form,
  /// (4) ρ form, (5) ρ inclusion.
  std::array<bool, 5> conditions{};
  /// f*(ψ) ∈ Spec(A) ∪ {∇_A} for every ψ ∈ Spec(B). Equals (1) whenever no
  /// prime of B pulls back to ∇_A, which semi-degeneracy guarantees.
  bool admissible_or_top = false;
  /// Primes ψ of B with f*(ψ) = ∇_A.
  std::vector<std::size_t> primes_to_top;
  bool admissible() const { return conditions[0]; }
  bool all_agree() const;
};

/// Conditions (2)-(5) must agree with each other and with admissible_or_top,
/// and (1) must imply them; throws AnomalyDetected otherwise. A disagreement
/// of (1) caused only by primes pulled back to ∇ is reported, not thrown.
AdmFretReport admfret_report(const Morphism& f, const Reticulation& ra, const Reticulation& rb,
                             const FretVerdict& fret);

struct FbcVerdict {
  /// False when the unit law or the Boolean-sublattice hypothesis fails on
  /// either side; the conditions are still evaluated literally.
  bool applicable = false;
  std::string reason;
  bool fbc1 = false;
  bool fbc2 = false;
  bool holds() const { return fbc1 && fbc2; }
};

FbcVerdict check_fbc(const Morphism& f, const ConLattice& ca, const CommutatorTable& commA,
                     const ConLattice& cb, const CommutatorTable& commB);

struct ChainVerdict {
  bool gu = false;
  bool gd = false;
  bool lo = false;
  /// Id-GU/GD/LO of L(f); absent when f fails FRet.
  std::optional<IdChainConditions> id;
};

/// GU/GD/LO by brute force over primes. When f is admissible, also checks the
/// transfer to L(f) and Ker f ⊆ φ iff L(f)^{-1}(0) ⊆ φ*; throws
/// AnomalyDetected on mismatch.
ChainVerdict chain_conditions(const Morphism& f, const Reticulation& ra, const Reticulation& rb,
                              const FretVerdict& fret, bool admissible);

/// f•(α −̇ β) = f•α −̇ f•β for all α, β; absent when some −̇ is undefined.
std::optional<bool> dotminus_preservation(const Morphism& f, const ConLattice& ca,
                                          const ConLattice& cb);

struct CblpReport {
  /// Per θ in Con order.
  std::vector<bool> per_theta;
  bool cblp = false;
  bool congruence_b_normal = false;
  bool b_center_boolean_sublattice = false;
  /// Present when L(A) was built.
  std::optional<BNormalReport> retic;
  std::optional<BooleanRestriction> lambda_on_b;
  /// Set only when the flags assert a congruence-modular semi-degenerate
  /// variety and λ maps B(Con A) onto B(L(A)).
  std::optional<bool> charcblp_agree;
};

/// Throws AnomalyDetected if L(A) Id-BLP and B-normality disagree, or if a
/// licensed equivalence fails.
CblpReport cblp_report(const FiniteAlgebra& a, const ConLattice& con, const CommutatorTable& comm,
                       const Reticulation* ret, const ContextFlags& flags);

struct MorphismReport {
  std::string name;
  FretVerdict fret;
  AdmFretReport admfret;
  FbcVerdict fbc;
  ChainVerdict chain;
  std::optional<bool> dotminus;
  std::vector<std::string> notes;
};

MorphismReport analyze_morphism(const Morphism& f, const Reticulation& ra, const Reticulation& rb,
                                const ContextFlags& flags);

}  // namespace conlat
