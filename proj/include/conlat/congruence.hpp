#pragma once

// Congruences of finite algebras, generated congruences, Con(A) and the maps
// f*, f• induced by a morphism.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "conlat/algebra.hpp"
#include "conlat/lattice.hpp"

namespace conlat {

using ElementPair = std::pair<Element, Element>;

/// An equivalence relation on {0..n-1} in canonical form: rep(x) is the least
/// member of x's block. Also keeps one 64-bit mask per block, blocks ordered
/// by least member.
class Congruence {
 public:
  Congruence() = default;

  static Congruence identity(std::size_t n);
  static Congruence full(std::size_t n);
  /// Canonicalizes any block labelling: x and y share a block iff
  /// labels[x] == labels[y].
  static Congruence from_labels(std::span<const std::size_t> labels);
  /// Equivalence relation generated by the pairs (no compatibility closure).
  static Congruence from_pairs(std::size_t n, std::span<const ElementPair> pairs);

  std::size_t size() const { return rep_.size(); }
  Element rep(Element x) const { return rep_[x]; }
  const std::vector<Element>& reps() const { return rep_; }
  bool related(Element x, Element y) const { return rep_[x] == rep_[y]; }

  std::size_t block_count() const { return masks_.size(); }
  const std::vector<std::uint64_t>& block_masks() const { return masks_; }
  std::uint64_t block_of(Element x) const;
  std::vector<std::vector<Element>> blocks() const;
  /// Index of x's block in block order.
  std::size_t block_index(Element x) const;

  bool is_identity() const { return masks_.size() == rep_.size(); }
  bool is_full() const { return masks_.size() == 1; }

  /// Refinement order: every block of *this lies inside a block of other.
  bool subset_of(const Congruence& other) const;

  /// Pairs (x, y) with x < y and x related to y.
  std::vector<ElementPair> pairs() const;

  friend bool operator==(const Congruence& a, const Congruence& b) { return a.rep_ == b.rep_; }
  friend bool operator<(const Congruence& a, const Congruence& b) { return a.rep_ < b.rep_; }

 private:
  explicit Congruence(std::vector<Element> reps);

  std::vector<Element> rep_;
  std::vector<std::uint64_t> masks_;
};

Congruence meet(const Congruence& a, const Congruence& b);
/// Equivalence join; for congruences of one algebra this is their join in Con.
Congruence join(const Congruence& a, const Congruence& b);

/// True if the relation is compatible with every operation of a.
bool is_congruence(const FiniteAlgebra& a, const Congruence& theta);

/// Cg_A(X).
Congruence cg(const FiniteAlgebra& a, std::span<const ElementPair> pairs);
Congruence cg(const FiniteAlgebra& a, Element x, Element y);
/// Cg_A(theta ∪ X) for a congruence theta; cheaper than starting from Δ.
Congruence cg_join(const FiniteAlgebra& a, const Congruence& theta,
                   std::span<const ElementPair> pairs);

/// Builds a congruence from label blocks; elements not mentioned are
/// singletons. Throws TableEntryOutOfRange or NotACongruence.
Congruence congruence_from_blocks(const FiniteAlgebra& a,
                                  const std::vector<std::vector<std::string>>& blocks);

/// "{a,b}{c}" style text, blocks by least member.
std::string format_partition(const FiniteAlgebra& a, const Congruence& theta);

/// {Cg(a,b) : a < b} ∪ {Δ}, deduplicated, in Con order.
std::vector<Congruence> principal_congruences(const FiniteAlgebra& a);

class ConLattice {
 public:
  /// Elements ordered by block count descending, then by representative
  /// array; Δ is first and ∇ last.
  ConLattice(const FiniteAlgebra& a, std::vector<Congruence> elements,
             std::vector<bool> principal);

  std::size_t size() const { return elements_.size(); }
  const Congruence& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<Congruence>& elements() const { return elements_; }
  const FiniteLattice& lattice() const { return lattice_; }

  std::optional<std::size_t> index_of(const Congruence& theta) const;
  /// Like index_of but throws NotACongruence.
  std::size_t at(const Congruence& theta) const;

  std::size_t bottom() const { return 0; }
  std::size_t top() const { return elements_.size() - 1; }
  bool leq(std::size_t i, std::size_t j) const { return lattice_.leq(i, j); }
  std::size_t join(std::size_t i, std::size_t j) const { return lattice_.join(i, j); }
  std::size_t meet(std::size_t i, std::size_t j) const { return lattice_.meet(i, j); }

  bool principal(std::size_t i) const { return principal_[i]; }
  /// Coatoms of Con(A).
  std::vector<std::size_t> maximal() const;

 private:
  std::vector<Congruence> elements_;
  std::vector<bool> principal_;
  FiniteLattice lattice_;
  std::map<std::vector<Element>, std::size_t> index_;
};

/// Con(A): principal congruences closed under joins.
ConLattice con(const FiniteAlgebra& a);

/// f*(β) = {(x,y) : (f(x),f(y)) ∈ β}.
Congruence inverse_image(const Morphism& f, const Congruence& beta);
Congruence kernel(const Morphism& f);
/// f•(α) = Cg_B(f(α)).
Congruence f_bullet(const Morphism& f, const Congruence& alpha);

}  // namespace conlat
