#pragma once

// Prime congruences, radicals and the reticulation L(A) = Con(A)/≡.

#include <optional>
#include <string>
#include <vector>

#include "conlat/algebra.hpp"
#include "conlat/commutator.hpp"
#include "conlat/congruence.hpp"
#include "conlat/lattice.hpp"

namespace conlat {

/// φ ≠ ∇ and [α,β] ⊆ φ implies α ⊆ φ or β ⊆ φ. Evaluated over Con(A) and
/// over PCon(A); throws AnomalyDetected if the two disagree.
bool is_prime(const ConLattice& con, const CommutatorTable& comm, std::size_t phi);

/// Indices of the prime congruences, ascending.
std::vector<std::size_t> spectrum(const ConLattice& con, const CommutatorTable& comm);

/// Intersection of the primes above θ; ∇ when there are none.
std::size_t radical(const ConLattice& con, const std::vector<std::size_t>& spec,
                    std::size_t theta);

class Reticulation {
 public:
  /// Throws ReticulationUnavailable unless the commutator is commutative and
  /// distributes over joins; throws AnomalyDetected if the quotient is not a
  /// bounded distributive lattice with the expected meet.
  Reticulation(FiniteAlgebra a, ConLattice con, CommutatorTable comm);

  const FiniteAlgebra& algebra() const { return algebra_; }
  const ConLattice& con() const { return con_; }
  const CommutatorTable& comm() const { return comm_; }

  const std::vector<std::size_t>& spec() const { return spec_; }
  bool is_prime(std::size_t i) const;
  std::size_t radical(std::size_t i) const { return radical_[i]; }
  /// Fixpoints of ρ, ascending.
  std::vector<std::size_t> rcon() const;
  bool semiprime() const { return radical_[con_.bottom()] == con_.bottom(); }

  /// Primes above θ.
  std::vector<std::size_t> v_set(std::size_t theta) const;
  /// Primes not above θ; for principal θ a basic open set of the Stone topology.
  std::vector<std::size_t> d_set(std::size_t theta) const;

  /// L(A): classes ordered by the Con index of their radical.
  const FiniteLattice& lattice() const { return lattice_; }
  std::size_t lambda(std::size_t i) const { return lambda_[i]; }
  const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
  /// The radical congruence shared by a class.
  std::size_t class_radical(std::size_t c) const { return class_radical_[c]; }

  /// θ* = {λ(α) : α ⊆ θ}.
  LatticeIdeal star(std::size_t theta) const;

 private:
  FiniteAlgebra algebra_;
  ConLattice con_;
  CommutatorTable comm_;
  std::vector<std::size_t> spec_;
  std::vector<std::size_t> radical_;
  std::vector<std::size_t> lambda_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_radical_;
  FiniteLattice lattice_;
};

/// Computes Con(A) and the commutator table, then L(A).
Reticulation build_reticulation(const FiniteAlgebra& a);

struct HomeoReport {
  /// For each prime (in spec order), the index of φ* in prime_ideals(L(A)).
  std::vector<std::size_t> image;
  bool star_surjective = false;
};

/// Confirms φ ↦ φ* is an order isomorphism Spec(A) -> Spec_Id(L(A)) and that
/// θ ↦ θ* reaches every ideal. Throws HomeoFailure with a witness otherwise.
HomeoReport homeo_check(const Reticulation& ret);

/// Builds L(A/θ) and L(A)/θ* and confirms λ_{A/θ}((α∨θ)/θ) ↦ λ_A(α)/θ* is a
/// well-defined lattice isomorphism. Throws ReticulationUnavailable.
bool presquo_check(const Reticulation& ret, std::size_t theta);

struct SemiprimeReport {
  bool semiprime = false;
  std::vector<std::size_t> rcon;
  /// A/θ semiprime iff θ ∈ RCon(A), over every θ.
  bool quosprime = false;
  std::vector<std::size_t> quosprime_failures;
};

SemiprimeReport semiprime_report(const Reticulation& ret);

/// λ(θ) = 1 iff θ = ∇. Only evaluated when the flags assert a
/// congruence-modular semi-degenerate variety.
std::optional<bool> licensed_top_check(const Reticulation& ret, const ContextFlags& flags);

}  // namespace conlat
