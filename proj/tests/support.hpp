#pragma once

// Fixture loading and small helpers shared by the test binaries.

#include <algorithm>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "conlat/algebra.hpp"
#include "conlat/congruence.hpp"
#include "conlat/error.hpp"
#include "conlat/lattice.hpp"
#include "conlat/text_format.hpp"

namespace conlat::test {

inline const std::filesystem::path kFixtureDir = CONLAT_FIXTURE_DIR;

/// Example directory holding each fixture algebra.
inline std::string example_of(const std::string& algebra) {
  if (algebra == "L2" || algebra == "L22" || algebra == "N5" || algebra == "M3") return "ex1";
  if (algebra == "N" || algebra == "P" || algebra == "Q" || algebra == "R") return "ex2";
  return "ex3";
}

inline FiniteAlgebra fixture(const std::string& name) {
  return load_algebra(kFixtureDir / example_of(name) / (name + ".alg"));
}

/// Loads ex/name.mor together with its source and target.
inline Morphism fixture_morphism(const std::string& ex, const std::string& name) {
  const std::string text = read_file(kFixtureDir / ex / (name + ".mor"));
  const RawMorphism raw = parse_morphism_text(text);
  return parse_morphism(text, fixture(raw.source), fixture(raw.target));
}

inline const std::vector<std::string>& algebra_names() {
  static const std::vector<std::string> names{"L2", "L22", "N5", "M3", "N", "P",
                                              "Q",  "R",   "T",  "U",  "V"};
  return names;
}

inline const std::vector<std::pair<std::string, std::string>>& morphism_names() {
  static const std::vector<std::pair<std::string, std::string>> names{
      {"ex1", "g"},        {"ex1", "h"},        {"ex1", "k"}, {"ex1", "i_L22_M3"},
      {"ex1", "i_L2_N5"},  {"ex1", "i_L2_L22"}, {"ex2", "g"}, {"ex2", "h"},
      {"ex2", "k"},        {"ex2", "l"},        {"ex2", "d"}, {"ex2", "e"},
      {"ex2", "j"},        {"ex2", "m"},        {"ex3", "h"}, {"ex3", "i"},
      {"ex3", "t"},        {"ex3", "v"}};
  return names;
}

inline std::vector<Morphism> all_fixture_morphisms() {
  std::vector<Morphism> out;
  for (const auto& [ex, name] : morphism_names()) out.push_back(fixture_morphism(ex, name));
  return out;
}

/// "Δ", "∇" or "{a,b}{x,y}" (unmentioned elements are singletons).
inline Congruence parse_blocks(const FiniteAlgebra& a, const std::string& text) {
  if (text == "Δ") return Congruence::identity(a.size());
  if (text == "∇") return Congruence::full(a.size());
  std::vector<std::vector<std::string>> blocks;
  std::string cur;
  for (char c : text) {
    if (c == '{') {
      blocks.emplace_back();
    } else if (c == ',' || c == '}') {
      if (!cur.empty()) blocks.back().push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  return congruence_from_blocks(a, blocks);
}

/// The lattice as an algebra with operations join and meet.
inline FiniteAlgebra lattice_algebra(const FiniteLattice& l, const std::string& name) {
  const std::size_t n = l.size();
  Operation j{"join", 2, {}}, m{"meet", 2, {}};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      j.table.push_back(static_cast<Element>(l.join(x, y)));
      m.table.push_back(static_cast<Element>(l.meet(x, y)));
    }
  return FiniteAlgebra::make(name, l.labels(), {j, m});
}

/// Brute-force algebra isomorphism: a bijection commuting with every operation.
inline bool algebras_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.size() != b.size() || !a.same_signature(b)) return false;
  std::vector<Element> p(a.size());
  for (Element i = 0; i < p.size(); ++i) p[i] = i;
  do {
    bool ok = true;
    for (std::size_t o = 0; o < a.ops().size() && ok; ++o) {
      const std::size_t k = a.ops()[o].arity;
      std::vector<Element> x(k), y(k);
      for (std::size_t t = 0; t < tuple_count(a.size(), k) && ok; ++t) {
        decode_tuple(t, a.size(), x);
        for (std::size_t i = 0; i < k; ++i) y[i] = p[x[i]];
        if (p[a.apply(o, x)] != b.apply(o, y)) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

template <class F>
ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("expected a conlat::Error");
}

}  // namespace conlat::test
