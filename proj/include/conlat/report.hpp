#pragma once

// JSON summaries and Graphviz Hasse diagrams.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "conlat/algebra.hpp"
#include "conlat/commutator.hpp"
#include "conlat/congruence.hpp"
#include "conlat/lattice.hpp"
#include "conlat/morphism_analysis.hpp"
#include "conlat/reticulation.hpp"

namespace conlat {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Con(A), its commutator and, when the commutator allows it, L(A).
struct AlgebraAnalysis {
  explicit AlgebraAnalysis(const FiniteAlgebra& a);

  FiniteAlgebra algebra;
  ConLattice con;
  CommutatorTable comm;
  std::optional<Reticulation> ret;
  /// Why ret is absent.
  std::string retic_error;
};

Json con_json(const ConLattice& con);
Json commutator_json(const ConLattice& con, const CommutatorTable& comm);
Json spec_json(const Reticulation& ret);
Json retic_json(const Reticulation& ret);

/// The per-algebra entry of a report. Appends observations to discrepancies.
Json algebra_summary(const AlgebraAnalysis& an, const ContextFlags& flags,
                     std::vector<std::string>& discrepancies);

/// The per-morphism entry of a report.
Json morphism_json(const Morphism& f, const MorphismReport& r, const Reticulation& ra,
                   const Reticulation& rb);

Json flags_json(const ContextFlags& flags);

Json report_document(const ContextFlags& flags, Json algebras, Json morphisms,
                     const std::vector<std::string>& discrepancies);

/// Hasse diagram: one node per element, one edge per cover, lower to upper.
std::string hasse_dot(const FiniteLattice& l, const std::string& title);

/// "{a,b}" style list of lattice labels.
std::string label_set(const FiniteLattice& l, const std::vector<std::size_t>& xs);

}  // namespace conlat
