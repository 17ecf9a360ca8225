#pragma once

// Quotient algebras and binary direct products.

#include <string>

#include "conlat/algebra.hpp"
#include "conlat/congruence.hpp"

namespace conlat {

struct Quotient {
  FiniteAlgebra algebra;
  /// The canonical surjection p_θ : A -> A/θ.
  Morphism projection;
};

/// A/θ; blocks ordered by least member and labelled by that member's label.
/// Throws NotACongruence.
Quotient quotient_algebra(const FiniteAlgebra& a, const Congruence& theta);

/// A × B with carrier in row-major order; element (x, y) has index
/// x * |B| + y and label "(x,y)". Throws SignatureMismatch.
FiniteAlgebra product_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b);

Morphism first_projection(const FiniteAlgebra& product, const FiniteAlgebra& a,
                          const FiniteAlgebra& b);
Morphism second_projection(const FiniteAlgebra& product, const FiniteAlgebra& a,
                           const FiniteAlgebra& b);

/// θ × ζ on A × B.
Congruence product_congruence(const Congruence& theta, const Congruence& zeta);

/// True if Con(A × B) contains a congruence that is not of the form θ × ζ.
bool has_skew_congruences(const FiniteAlgebra& a, const FiniteAlgebra& b);

}  // namespace conlat
