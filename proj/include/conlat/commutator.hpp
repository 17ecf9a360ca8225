#pragma once

// Term-condition commutator through the matrix subalgebra of A^4.

#include <array>
#include <vector>

#include "conlat/algebra.hpp"
#include "conlat/congruence.hpp"

namespace conlat {

/// (p, q, r, s) read as the matrix [[p, q], [r, s]].
using Matrix = std::array<Element, 4>;

/// Subalgebra of A^4 generated by [[a,a],[b,b]] for (a,b) ∈ α and
/// [[c,d],[c,d]] for (c,d) ∈ β. Sorted.
std::vector<Matrix> matrix_closure(const FiniteAlgebra& a, const Congruence& alpha,
                                   const Congruence& beta);

/// Least δ with (p,q) ∈ δ iff (r,s) ∈ δ for every matrix of the closure.
Congruence tc_commutator(const FiniteAlgebra& a, const Congruence& alpha,
                         const Congruence& beta);

struct CommutatorFlags {
  bool commutative = false;
  bool join_distributive = false;
  bool equals_intersection = false;
  /// [θ, ∇] = θ for every θ.
  bool unit_law = false;
  bool associative = false;
};

class CommutatorTable {
 public:
  CommutatorTable(const ConLattice& con, std::vector<std::size_t> table);

  std::size_t size() const { return n_; }
  /// Index in Con(A) of [θ_i, θ_j].
  std::size_t operator()(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }
  const CommutatorFlags& flags() const { return flags_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> table_;
  CommutatorFlags flags_;
};

CommutatorTable commutator_table(const FiniteAlgebra& a, const ConLattice& con);

}  // namespace conlat
