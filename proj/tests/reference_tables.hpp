#pragma once

// Published reference values for the fixture algebras, keyed by the
// congruence names used in the printed tables.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace conlat::test {

struct NamedCongruence {
  std::string name;
  /// parse_blocks syntax.
  std::string blocks;
};

struct AlgebraReference {
  std::string algebra;
  /// Con(A) in printed order.
  std::vector<NamedCongruence> con;
  /// Row i, column j: [θ_i, θ_j] by name; empty when not published.
  std::vector<std::vector<std::string>> commutator;
};

inline std::vector<std::string> row(std::size_t n, const std::string& x) {
  return std::vector<std::string>(n, x);
}

inline const std::vector<AlgebraReference>& algebra_references() {
  static const std::vector<AlgebraReference> refs = [] {
    std::vector<AlgebraReference> r;

    const std::vector<std::string> n_delta{"Δ", "δ", "Δ", "δ", "Δ", "δ",
                                           "Δ", "δ", "δ", "δ", "δ"};
    const std::vector<std::string> n_eta1{"Δ",  "Δ",  "η₁", "η₁", "Δ", "Δ",
                                          "η₁", "η₁", "η₁", "η₁", "η₁"};
    const std::vector<std::string> n_eta{"Δ", "δ", "η₁", "η", "Δ", "δ", "η₁", "η", "η", "η", "η"};
    r.push_back({"N",
                 {{"Δ", "Δ"},
                  {"δ", "{a,b}"},
                  {"η₁", "{b,c}"},
                  {"η", "{a,b,c}"},
                  {"ω₁", "{x,y}"},
                  {"ω", "{a,b}{x,y}"},
                  {"ζ₁", "{b,c}{x,y}"},
                  {"ζ", "{a,b,c}{x,y}"},
                  {"ε", "{a,b,c,x}{y}"},
                  {"ξ", "{a,b,c,y}{x}"},
                  {"∇", "∇"}},
                 {row(11, "Δ"), n_delta, n_eta1, n_eta, row(11, "Δ"), n_delta, n_eta1, n_eta,
                  n_eta, n_eta, n_eta}});

    const std::vector<std::string> p_mu{"Δ", "Δ", "μ", "μ", "Δ", "Δ", "μ", "μ"};
    const std::vector<std::string> p_nu{"Δ", "Δ", "Δ", "Δ", "ν", "ν", "ν", "ν"};
    const std::vector<std::string> p_iota{"Δ", "Δ", "μ", "μ", "ν", "ν", "ι", "ι"};
    r.push_back({"P",
                 {{"Δ", "Δ"},
                  {"χ", "{x,y}"},
                  {"φ", "{a,b}{x,y}"},
                  {"μ", "{a,b}"},
                  {"ψ", "{b,x,y}"},
                  {"ν", "{b,y}"},
                  {"ι", "{a,b,y}{x}"},
                  {"∇", "∇"}},
                 {row(8, "Δ"), row(8, "Δ"), p_mu, p_mu, p_nu, p_nu, p_iota, p_iota}});

    r.push_back({"Q",
                 {{"Δ", "Δ"}, {"α", "{a,b}{x,y}"}, {"β", "{b,x,y}"}, {"γ", "{x,y}"}, {"∇", "∇"}},
                 {row(5, "Δ"),
                  {"Δ", "α", "γ", "Δ", "α"},
                  {"Δ", "γ", "β", "Δ", "β"},
                  row(5, "Δ"),
                  {"Δ", "α", "β", "Δ", "∇"}}});

    r.push_back({"R",
                 {{"Δ", "Δ"}, {"σ", "{a,b}"}, {"τ", "{b,c}"}, {"∇", "∇"}},
                 {row(4, "Δ"), {"Δ", "σ", "Δ", "σ"}, row(4, "Δ"), {"Δ", "σ", "Δ", "σ"}}});

    const std::vector<std::string> u_big{"Δ", "δ", "δ", "δ", "δ", "δ"};
    r.push_back({"U",
                 {{"Δ", "Δ"},
                  {"α", "{0,a}{b,c,d}"},
                  {"β", "{0,b}{a,c,d}"},
                  {"γ", "{0,c,d}{a,b}"},
                  {"δ", "{c,d}"},
                  {"∇", "∇"}},
                 {row(6, "Δ"), u_big, u_big, u_big, {"Δ", "δ", "δ", "δ", "Δ", "δ"}, u_big}});

    r.push_back({"T",
                 {{"Δ", "Δ"},
                  {"θ", "{0,a}{b,c}"},
                  {"ζ", "{0,b}{a,c}"},
                  {"ξ", "{0,c}{a,b}"},
                  {"∇", "∇"}},
                 std::vector<std::vector<std::string>>(5, row(5, "Δ"))});

    r.push_back({"V",
                 {{"Δ", "Δ"}, {"σ", "{0,s}"}, {"∇", "∇"}},
                 {row(3, "Δ"), {"Δ", "Δ", "σ"}, {"Δ", "σ", "σ"}}});

    // Lattice fixtures: names only.
    r.push_back({"N5",
                 {{"Δ", "Δ"},
                  {"α", "{0,b,c}{a,1}"},
                  {"β", "{0,a}{b,c,1}"},
                  {"γ", "{b,c}"},
                  {"∇", "∇"}},
                 {}});
    r.push_back({"L22", {{"Δ", "Δ"}, {"φ", "{0,a}{b,1}"}, {"ψ", "{0,b}{a,1}"}, {"∇", "∇"}}, {}});
    r.push_back({"M3", {{"Δ", "Δ"}, {"∇", "∇"}}, {}});
    r.push_back({"L2", {{"Δ", "Δ"}, {"∇", "∇"}}, {}});
    return r;
  }();
  return refs;
}

inline const AlgebraReference& reference_of(const std::string& algebra) {
  for (const auto& r : algebra_references())
    if (r.algebra == algebra) return r;
  throw std::out_of_range("no reference for " + algebra);
}

/// |Con(A)| as drawn.
inline const std::vector<std::pair<std::string, std::size_t>>& con_sizes() {
  static const std::vector<std::pair<std::string, std::size_t>> v{
      {"N5", 5}, {"L22", 4}, {"M3", 2}, {"N", 11}, {"P", 8},
      {"Q", 5},  {"R", 4},   {"U", 6},  {"T", 5},  {"V", 3}};
  return v;
}

/// Spec(A) by name.
inline const std::vector<std::pair<std::string, std::vector<std::string>>>& spectra() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> v{
      {"N", {"ω"}}, {"P", {"φ", "ψ"}}, {"Q", {"α", "β"}}, {"R", {"τ"}},
      {"T", {}},    {"U", {}},         {"V", {"Δ"}}};
  return v;
}

/// L(A) as "1", "2" or "2x2".
inline const std::vector<std::pair<std::string, std::string>>& reticulations() {
  static const std::vector<std::pair<std::string, std::string>> v{
      {"N", "2"}, {"P", "2x2"}, {"Q", "2x2"}, {"R", "2"}, {"T", "1"}, {"U", "1"}, {"V", "2"}};
  return v;
}

/// B(Con(A)) by name.
inline const std::vector<std::pair<std::string, std::vector<std::string>>>& boolean_centers() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> v{
      {"N", {"Δ", "ω₁", "ε", "ξ", "∇"}},
      {"Q", {"Δ", "∇"}},
      {"U", {"Δ", "∇"}},
      {"T", {"Δ", "θ", "ζ", "ξ", "∇"}},
      {"P", {"Δ", "χ", "φ", "μ", "ψ", "ν", "ι", "∇"}}};
  return v;
}

struct BulletReference {
  std::string example;
  std::string morphism;
  /// f•(θ) for θ in the source's printed order.
  std::vector<std::string> values;
};

inline const std::vector<BulletReference>& bullet_tables() {
  static const std::vector<BulletReference> v{
      {"ex2", "g", {"Δ", "ξ", "ξ", "Δ", "ξ", "Δ", "Δ", "ξ"}},
      {"ex2", "h", {"Δ", "Δ", "Δ", "Δ", "χ", "χ", "χ", "χ", "χ", "Δ", "χ"}},
      {"ex2", "l", {"Δ", "μ", "ν", "Δ", "ι"}},
      {"ex2", "d", {"Δ", "δ", "Δ", "δ"}},
      {"ex2", "e", {"Δ", "η", "Δ", "η"}},
      {"ex2", "j", {"Δ", "Δ", "ξ", "ξ"}},
      {"ex2", "m", {"Δ", "ι", "χ", "∇"}},
      {"ex3", "t", {"Δ", "θ", "θ", "Δ", "Δ", "θ"}},
      {"ex3", "i", {"Δ", "α", "β", "γ", "∇"}},
      {"ex3", "h", {"Δ", "Δ", "∇", "∇", "Δ", "∇"}},
      {"ex3", "v", {"Δ", "Δ", "σ"}},
      {"ex1", "k", {"Δ", "α", "β", "Δ", "∇"}},
      {"ex1", "h", {"Δ", "φ", "ψ", "Δ", "∇"}},
      {"ex1", "i_L22_M3", {"Δ", "∇", "∇", "∇"}},
      {"ex1", "g", {"Δ", "Δ", "α", "α"}}};
  return v;
}

}  // namespace conlat::test
