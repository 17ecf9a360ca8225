#pragma once

// Finite algebras given by operation tables, and homomorphisms between them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace conlat {

/// Index of a carrier element. Carriers are always {0, ..., size-1}.
using Element = std::uint32_t;

/// Largest supported carrier; a congruence block must fit in one 64-bit mask.
inline constexpr std::size_t kMaxCarrier = 64;

struct Operation {
  std::string name;
  std::size_t arity = 0;
  /// Row-major over argument tuples, first argument most significant.
  std::vector<Element> table;
};

/// Label-level description of an algebra, as produced by a parser.
struct RawOperation {
  struct Row {
    std::vector<std::string> args;
    std::string result;
  };
  std::string name;
  std::size_t arity = 0;
  std::vector<Row> rows;
};

struct RawAlgebra {
  std::string name;
  std::vector<std::string> labels;
  std::vector<RawOperation> ops;
};

/// User assertions about the ambient variety. Never inferred from an algebra.
struct ContextFlags {
  bool assume_congruence_modular = false;
  bool assume_semi_degenerate = false;
  bool assume_variety_with_01 = false;
};

class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;

  /// Validating constructor for index-level tables.
  static FiniteAlgebra make(std::string name, std::vector<std::string> labels,
                            std::vector<Operation> ops);

  const std::string& name() const { return name_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element e) const { return labels_.at(e); }
  std::optional<Element> find(std::string_view label) const;

  const std::vector<Operation>& ops() const { return ops_; }
  std::optional<std::size_t> op_index(std::string_view name) const;

  Element apply(std::size_t op, std::span<const Element> args) const;
  Element apply(std::size_t op, std::initializer_list<Element> args) const {
    return apply(op, std::span<const Element>(args.begin(), args.size()));
  }

  /// Same op names with the same arities, in the same order.
  bool same_signature(const FiniteAlgebra& other) const;

  FiniteAlgebra renamed(std::string name) const;

  friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b);

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Operation> ops_;
};

/// Number of argument tuples of an operation of the given arity on n elements.
std::size_t tuple_count(std::size_t n, std::size_t arity);

/// Decodes a row-major tuple index into arguments.
void decode_tuple(std::size_t index, std::size_t n, std::span<Element> out);

FiniteAlgebra validate_algebra(const RawAlgebra& raw);

class Morphism {
 public:
  Morphism() = default;

  /// Validating constructor; checks signatures and the homomorphism law.
  static Morphism make(std::string name, FiniteAlgebra source,
                       FiniteAlgebra target, std::vector<Element> map);
  static Morphism identity(const FiniteAlgebra& a);

  const std::string& name() const { return name_; }
  const FiniteAlgebra& source() const { return source_; }
  const FiniteAlgebra& target() const { return target_; }
  const std::vector<Element>& map() const { return map_; }
  Element operator()(Element x) const { return map_[x]; }

  bool is_injective() const;
  bool is_surjective() const;

 private:
  std::string name_;
  FiniteAlgebra source_;
  FiniteAlgebra target_;
  std::vector<Element> map_;
};

/// g after f.
Morphism compose(const Morphism& g, const Morphism& f);

Morphism validate_morphism(
    std::string name, const FiniteAlgebra& source, const FiniteAlgebra& target,
    const std::vector<std::pair<std::string, std::string>>& label_map);

}  // namespace conlat
