#include "conlat/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "conlat/error.hpp"

namespace conlat {

namespace {

constexpr std::size_t kMaxTableEntries = std::size_t{1} << 24;

std::string tuple_text(const FiniteAlgebra& a, std::span<const Element> args) {
  std::string out = "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += a.label(args[i]);
  }
  return out + ")";
}

}  // namespace

std::size_t tuple_count(std::size_t n, std::size_t arity) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (n != 0 && count > kMaxTableEntries / n)
      throw Error(ErrorCode::CarrierTooLarge, "operation table too large");
    count *= n;
  }
  return count;
}

void decode_tuple(std::size_t index, std::size_t n, std::span<Element> out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Element>(index % n);
    index /= n;
  }
}

FiniteAlgebra FiniteAlgebra::make(std::string name,
                                  std::vector<std::string> labels,
                                  std::vector<Operation> ops) {
  if (labels.empty())
    throw Error(ErrorCode::EmptyCarrier, "algebra '" + name + "' has no elements");
  if (labels.size() > kMaxCarrier)
    throw Error(ErrorCode::CarrierTooLarge,
                "algebra '" + name + "' has " + std::to_string(labels.size()) +
                    " elements; at most " + std::to_string(kMaxCarrier) +
                    " are supported");
  std::set<std::string_view> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second)
      throw Error(ErrorCode::DuplicateLabel, "duplicate element label '" + l + "'");

  std::set<std::string_view> op_names;
  const std::size_t n = labels.size();
  for (const auto& op : ops) {
    if (!op_names.insert(op.name).second)
      throw Error(ErrorCode::DuplicateOperation,
                  "duplicate operation name '" + op.name + "'");
    if (op.table.size() != tuple_count(n, op.arity))
      throw Error(ErrorCode::NonTotalTable,
                  "operation '" + op.name + "' has " +
                      std::to_string(op.table.size()) + " entries, expected " +
                      std::to_string(tuple_count(n, op.arity)));
    for (Element v : op.table)
      if (v >= n)
        throw Error(ErrorCode::TableEntryOutOfRange,
                    "operation '" + op.name + "' refers to element index " +
                        std::to_string(v) + " outside a carrier of size " +
                        std::to_string(n));
  }

  FiniteAlgebra a;
  a.name_ = std::move(name);
  a.labels_ = std::move(labels);
  a.ops_ = std::move(ops);
  return a;
}

std::optional<Element> FiniteAlgebra::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

std::optional<std::size_t> FiniteAlgebra::op_index(std::string_view name) const {
  for (std::size_t i = 0; i < ops_.size(); ++i)
    if (ops_[i].name == name) return i;
  return std::nullopt;
}

Element FiniteAlgebra::apply(std::size_t op, std::span<const Element> args) const {
  const Operation& o = ops_[op];
  std::size_t index = 0;
  for (Element x : args) index = index * labels_.size() + x;
  return o.table[index];
}

bool FiniteAlgebra::same_signature(const FiniteAlgebra& other) const {
  if (ops_.size() != other.ops_.size()) return false;
  for (std::size_t i = 0; i < ops_.size(); ++i)
    if (ops_[i].name != other.ops_[i].name || ops_[i].arity != other.ops_[i].arity)
      return false;
  return true;
}

FiniteAlgebra FiniteAlgebra::renamed(std::string name) const {
  FiniteAlgebra a = *this;
  a.name_ = std::move(name);
  return a;
}

bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.name_ != b.name_ || a.labels_ != b.labels_ || a.ops_.size() != b.ops_.size())
    return false;
  for (std::size_t i = 0; i < a.ops_.size(); ++i) {
    const auto& x = a.ops_[i];
    const auto& y = b.ops_[i];
    if (x.name != y.name || x.arity != y.arity || x.table != y.table) return false;
  }
  return true;
}

FiniteAlgebra validate_algebra(const RawAlgebra& raw) {
  if (raw.labels.empty())
    throw Error(ErrorCode::EmptyCarrier, "algebra '" + raw.name + "' has no elements");
  std::unordered_map<std::string, Element> index;
  for (std::size_t i = 0; i < raw.labels.size(); ++i)
    if (!index.emplace(raw.labels[i], static_cast<Element>(i)).second)
      throw Error(ErrorCode::DuplicateLabel,
                  "duplicate element label '" + raw.labels[i] + "'");
  if (raw.labels.size() > kMaxCarrier)
    throw Error(ErrorCode::CarrierTooLarge,
                "algebra '" + raw.name + "' exceeds " + std::to_string(kMaxCarrier) +
                    " elements");

  const std::size_t n = raw.labels.size();
  auto lookup = [&](const std::string& label, const std::string& op) {
    auto it = index.find(label);
    if (it == index.end())
      throw Error(ErrorCode::TableEntryOutOfRange,
                  "operation '" + op + "' refers to unknown element '" + label + "'");
    return it->second;
  };

  std::vector<Operation> ops;
  for (const auto& rop : raw.ops) {
    const std::size_t count = tuple_count(n, rop.arity);
    std::vector<Element> table(count, 0);
    std::vector<bool> filled(count, false);
    for (const auto& row : rop.rows) {
      if (row.args.size() != rop.arity)
        throw Error(ErrorCode::ArityMismatch,
                    "operation '" + rop.name + "' of arity " +
                        std::to_string(rop.arity) + " has a row with " +
                        std::to_string(row.args.size()) + " arguments");
      std::size_t t = 0;
      for (const auto& arg : row.args) t = t * n + lookup(arg, rop.name);
      const Element value = lookup(row.result, rop.name);
      if (filled[t] && table[t] != value)
        throw Error(ErrorCode::NonTotalTable,
                    "operation '" + rop.name + "' has conflicting rows for one tuple");
      table[t] = value;
      filled[t] = true;
    }
    auto missing = std::find(filled.begin(), filled.end(), false);
    if (missing != filled.end()) {
      std::vector<Element> args(rop.arity);
      decode_tuple(static_cast<std::size_t>(missing - filled.begin()), n, args);
      std::string text = "(";
      for (std::size_t i = 0; i < args.size(); ++i)
        text += (i ? ", " : "") + raw.labels[args[i]];
      throw Error(ErrorCode::NonTotalTable,
                  "operation '" + rop.name + "' is undefined at " + text + ")");
    }
    ops.push_back(Operation{rop.name, rop.arity, std::move(table)});
  }
  return FiniteAlgebra::make(raw.name, raw.labels, std::move(ops));
}

Morphism Morphism::make(std::string name, FiniteAlgebra source,
                        FiniteAlgebra target, std::vector<Element> map) {
  if (!source.same_signature(target))
    throw Error(ErrorCode::SignatureMismatch,
                "algebras '" + source.name() + "' and '" + target.name() +
                    "' have different signatures");
  if (map.size() != source.size())
    throw Error(ErrorCode::MissingMapping, "morphism '" + name + "' is not total");
  for (Element v : map)
    if (v >= target.size())
      throw Error(ErrorCode::TableEntryOutOfRange,
                  "morphism '" + name + "' maps outside the target carrier");

  const std::size_t n = source.size();
  for (std::size_t k = 0; k < source.ops().size(); ++k) {
    const Operation& op = source.ops()[k];
    std::vector<Element> args(op.arity), image(op.arity);
    const std::size_t count = tuple_count(n, op.arity);
    for (std::size_t t = 0; t < count; ++t) {
      decode_tuple(t, n, args);
      for (std::size_t i = 0; i < op.arity; ++i) image[i] = map[args[i]];
      if (map[op.table[t]] != target.apply(k, image))
        throw Error(ErrorCode::NotAHomomorphism,
                    "'" + name + "' does not preserve '" + op.name + "' at " +
                        tuple_text(source, args));
    }
  }

  Morphism m;
  m.name_ = std::move(name);
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.map_ = std::move(map);
  return m;
}

Morphism Morphism::identity(const FiniteAlgebra& a) {
  std::vector<Element> map(a.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<Element>(i);
  Morphism m;
  m.name_ = "id_" + a.name();
  m.source_ = a;
  m.target_ = a;
  m.map_ = std::move(map);
  return m;
}

bool Morphism::is_injective() const {
  std::vector<bool> hit(target_.size(), false);
  for (Element v : map_) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool Morphism::is_surjective() const {
  std::vector<bool> hit(target_.size(), false);
  for (Element v : map_) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(f.target() == g.source()))
    throw Error(ErrorCode::SignatureMismatch,
                "cannot compose '" + g.name() + "' after '" + f.name() + "'");
  std::vector<Element> map(f.source().size());
  for (std::size_t x = 0; x < map.size(); ++x) map[x] = g(f(static_cast<Element>(x)));
  return Morphism::make(g.name() + "o" + f.name(), f.source(), g.target(),
                        std::move(map));
}

Morphism validate_morphism(
    std::string name, const FiniteAlgebra& source, const FiniteAlgebra& target,
    const std::vector<std::pair<std::string, std::string>>& label_map) {
  if (!source.same_signature(target))
    throw Error(ErrorCode::SignatureMismatch,
                "algebras '" + source.name() + "' and '" + target.name() +
                    "' have different signatures");
  std::vector<std::optional<Element>> map(source.size());
  for (const auto& [from, to] : label_map) {
    auto x = source.find(from);
    if (!x)
      throw Error(ErrorCode::TableEntryOutOfRange,
                  "'" + from + "' is not an element of '" + source.name() + "'");
    auto y = target.find(to);
    if (!y)
      throw Error(ErrorCode::TableEntryOutOfRange,
                  "'" + to + "' is not an element of '" + target.name() + "'");
    if (map[*x] && *map[*x] != *y)
      throw Error(ErrorCode::NotAHomomorphism,
                  "'" + from + "' is mapped to two different elements");
    map[*x] = *y;
  }
  std::vector<Element> total(source.size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (!map[i])
      throw Error(ErrorCode::MissingMapping,
                  "no image given for '" + source.label(static_cast<Element>(i)) + "'");
    total[i] = *map[i];
  }
  return Morphism::make(std::move(name), source, target, std::move(total));
}

}  // namespace conlat
