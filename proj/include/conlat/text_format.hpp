#pragma once

// Line-oriented text formats for algebras and morphisms.
//
//   algebra V
//   elements 0 s t
//   op + 2
//   table
//   0 s t
//   s 0 t
//   t t 0
//
//   morphism v : V -> V
//   map 0 -> 0
//
// Operations may also be given row by row ("x y -> z"); nullary rows are
// "-> c". A '#' starts a comment.

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conlat/algebra.hpp"

namespace conlat {

/// Syntax only; throws SyntaxError with a 1-based line and column.
RawAlgebra parse_algebra_text(std::string_view text);
/// Syntax plus validate_algebra.
FiniteAlgebra parse_algebra(std::string_view text);
std::string emit_algebra(const FiniteAlgebra& a);

struct RawMorphism {
  std::string name;
  std::string source;
  std::string target;
  std::vector<std::pair<std::string, std::string>> map;
};

RawMorphism parse_morphism_text(std::string_view text);
/// Checks that the header names src and tgt (UnknownAlgebra otherwise), then
/// validate_morphism.
Morphism parse_morphism(std::string_view text, const FiniteAlgebra& src,
                        const FiniteAlgebra& tgt);
std::string emit_morphism(const Morphism& f);

/// Reads a whole file; throws IoError.
std::string read_file(const std::filesystem::path& path);
FiniteAlgebra load_algebra(const std::filesystem::path& path);

}  // namespace conlat
