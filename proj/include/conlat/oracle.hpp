#pragma once

// Brute-force reference computations. Deliberately naive and independent of
// the engines they check: no union-find, no worklists, no semi-naive closure.

#include <optional>
#include <set>
#include <vector>

#include "conlat/algebra.hpp"
#include "conlat/commutator.hpp"
#include "conlat/congruence.hpp"
#include "conlat/lattice.hpp"

namespace conlat::oracle {

/// Largest carrier for which the partition enumeration is attempted.
inline constexpr std::size_t kMaxOracleCarrier = 8;

/// Every set partition of {0..n-1}, as block labels in restricted growth form.
std::vector<std::vector<std::size_t>> set_partitions(std::size_t n);

/// Compatibility by scanning all pairs of argument tuples.
bool compatible(const FiniteAlgebra& a, const std::vector<std::size_t>& labels);

/// Con(A) by filtering all partitions; sorted by representative array.
/// Throws NotApplicable above kMaxOracleCarrier.
std::vector<Congruence> congruences(const FiniteAlgebra& a);

/// Least member of all containing every pair.
Congruence generated(const std::vector<Congruence>& all, const std::vector<ElementPair>& pairs);

/// Subuniverse of A^4 generated by gens, by repeated full passes.
std::set<Matrix> subpower(const FiniteAlgebra& a, const std::vector<Matrix>& gens);

/// C(α, β; δ) read off the matrix set: first row in δ forces second row in δ.
bool term_condition(const std::set<Matrix>& matrices, const Congruence& delta);

/// Meet of every δ in all satisfying C(α, β; δ). Throws AnomalyDetected if
/// that meet does not satisfy it.
Congruence commutator(const FiniteAlgebra& a, const std::vector<Congruence>& all,
                      const Congruence& alpha, const Congruence& beta);

/// Prime congruences from a full commutator oracle table indexed like all.
std::vector<std::size_t> primes(const std::vector<Congruence>& all,
                                const std::vector<std::vector<Congruence>>& comm);

/// All ideals and prime ideals by subset enumeration (at most 16 elements).
std::vector<std::vector<bool>> ideals(const FiniteLattice& l);
std::vector<std::vector<bool>> prime_ideals(const FiniteLattice& l);

/// An order isomorphism by trying every permutation (at most 9 elements).
std::optional<std::vector<std::size_t>> isomorphism(const FiniteLattice& l, const FiniteLattice& m);

}  // namespace conlat::oracle
