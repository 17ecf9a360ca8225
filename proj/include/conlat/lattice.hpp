#pragma once

// Explicit finite lattices: predicates, Boolean centers, ideals, quotients by
// ideals, dual relative pseudocomplement, B-normality and isomorphism search.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace conlat {

class FiniteLattice {
 public:
  FiniteLattice() = default;

  /// leq[i][j] must be a partial order in which every pair has a join and a
  /// meet; throws NotALattice otherwise.
  static FiniteLattice from_order(std::vector<std::string> labels,
                                  const std::vector<std::vector<bool>>& leq);
  /// Order generated by the given (lower, upper) pairs.
  static FiniteLattice from_covers(
      std::vector<std::string> labels,
      const std::vector<std::pair<std::size_t, std::size_t>>& below);

  static FiniteLattice chain(std::size_t n);
  /// The Boolean lattice 2^k, elements indexed by bitmask.
  static FiniteLattice boolean(std::size_t k);
  static FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  /// Covering pairs (lower, upper), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  /// Length of the longest chain from the bottom to each element.
  std::vector<std::size_t> heights() const;

 private:
  std::vector<std::string> labels_;
  std::vector<bool> leq_;
  std::vector<std::size_t> join_;
  std::vector<std::size_t> meet_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

struct LatticePredicates {
  bool distributive = false;
  bool modular = false;
  bool boolean = false;
};

LatticePredicates lattice_predicates(const FiniteLattice& l);

std::vector<std::size_t> complements(const FiniteLattice& l, std::size_t x);
/// Complemented elements, ascending.
std::vector<std::size_t> boolean_center(const FiniteLattice& l);

/// An ideal of a finite lattice; always principal, generated by its join.
struct LatticeIdeal {
  std::size_t generator = 0;
  std::vector<bool> members;

  bool contains(std::size_t x) const { return members[x]; }
  std::size_t size() const;
  bool proper() const;
  friend bool operator==(const LatticeIdeal&, const LatticeIdeal&) = default;
};

LatticeIdeal principal_ideal(const FiniteLattice& l, std::size_t x);
/// Returns the ideal if the set is nonempty, down-closed and join-closed.
std::optional<LatticeIdeal> ideal_from_members(const FiniteLattice& l,
                                               const std::vector<bool>& members);
/// All ideals, ordered lexicographically by member set.
std::vector<LatticeIdeal> ideals(const FiniteLattice& l);
/// Proper ideals P with a∧b ∈ P implying a ∈ P or b ∈ P, lexicographic order.
std::vector<LatticeIdeal> prime_ideals(const FiniteLattice& l);

/// Basic open sets of the Stone topology on the prime ideals: for each element
/// x, the indices (into prime_ideals(l)) of the primes not containing x.
std::vector<std::vector<std::size_t>> stone_basis(
    const FiniteLattice& l, const std::vector<LatticeIdeal>& primes);

struct IdealQuotient {
  FiniteLattice lattice;
  /// Canonical surjection L -> L/I.
  std::vector<std::size_t> map;
};

/// Quotient by x ~ y iff x∨a = y∨a for some a ∈ I. Requires distributivity.
IdealQuotient quotient_by_ideal(const FiniteLattice& l, const LatticeIdeal& ideal);

/// Least c with a <= b∨c, if that set has a minimum.
std::optional<std::size_t> dual_diff(const FiniteLattice& l, std::size_t a,
                                     std::size_t b);

struct BNormalReport {
  bool b_normal = false;
  bool idblp_all = false;
  /// Generators of the ideals I for which B(π_I) is not surjective.
  std::vector<std::size_t> failing_ideals;
};

/// Requires a distributive lattice.
BNormalReport b_normal_and_idblp(const FiniteLattice& l);

/// An order isomorphism l -> m, if one exists.
std::optional<std::vector<std::size_t>> lattice_iso(const FiniteLattice& l,
                                                    const FiniteLattice& m);

/// Short isomorphism-class name: "1", "2", "2x2", "2x2x2", "chain4", "M3",
/// "N5", or "n<size>" when nothing shorter applies.
std::string iso_hint(const FiniteLattice& l);

// Maps between finite lattices, given as element-index vectors.

struct LatticeMapFlags {
  bool zero = false;
  bool one = false;
  bool join = false;
  bool meet = false;
  bool injective = false;
  bool surjective = false;
};

LatticeMapFlags lattice_map_flags(const FiniteLattice& l, const FiniteLattice& m,
                                  const std::vector<std::size_t>& h);

/// h^{-1}(I) as a member mask of l.
std::vector<bool> preimage(const std::vector<std::size_t>& h, const LatticeIdeal& ideal);

struct IdChainConditions {
  bool id_gu = false;
  bool id_gd = false;
  bool id_lo = false;
};

/// Id-GU / Id-GD / Id-LO for h : l -> m by brute force over prime ideals.
IdChainConditions id_chain_conditions(const FiniteLattice& l, const FiniteLattice& m,
                                      const std::vector<std::size_t>& h);

/// Restriction of h to Boolean centers: whether it lands in B(m) and is onto B(m).
struct BooleanRestriction {
  bool into_center = false;
  bool onto_center = false;
  bool injective = false;
};

BooleanRestriction boolean_restriction(const FiniteLattice& l, const FiniteLattice& m,
                                       const std::vector<std::size_t>& h);

}  // namespace conlat
