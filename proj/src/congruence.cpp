#include "conlat/congruence.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

#include "conlat/error.hpp"

namespace conlat {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Element{0});
  }

  Element find(Element x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(Element x, Element y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x < y) std::swap(x, y);
    parent_[x] = y;
    return true;
  }

  std::vector<Element> canonical() {
    std::vector<Element> reps(parent_.size());
    for (std::size_t x = 0; x < reps.size(); ++x) reps[x] = find(static_cast<Element>(x));
    return reps;
  }

 private:
  std::vector<Element> parent_;
};

// Merges the images of (x, y) under every basic translation and queues the
// pairs whose blocks were actually joined.
void close_translations(const FiniteAlgebra& a, UnionFind& uf, std::deque<ElementPair>& queue) {
  const std::size_t n = a.size();
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (const Operation& op : a.ops()) {
      if (op.arity == 0) continue;
      std::size_t stride = op.table.size() / n;
      std::size_t high = 1;
      for (std::size_t pos = 0; pos < op.arity; ++pos) {
        for (std::size_t h = 0; h < high; ++h)
          for (std::size_t l = 0; l < stride; ++l) {
            const std::size_t base = h * stride * n + l;
            const Element u = op.table[base + x * stride];
            const Element v = op.table[base + y * stride];
            if (uf.unite(u, v)) queue.emplace_back(u, v);
          }
        high *= n;
        stride /= n;
      }
    }
  }
}

}  // namespace

Congruence::Congruence(std::vector<Element> reps) : rep_(std::move(reps)) {
  std::vector<std::size_t> slot(rep_.size(), 0);
  for (std::size_t x = 0; x < rep_.size(); ++x) {
    if (rep_[x] == x) {
      slot[x] = masks_.size();
      masks_.push_back(0);
    }
    masks_[slot[rep_[x]]] |= std::uint64_t{1} << x;
  }
}

Congruence Congruence::identity(std::size_t n) {
  std::vector<Element> reps(n);
  std::iota(reps.begin(), reps.end(), Element{0});
  return Congruence(std::move(reps));
}

Congruence Congruence::full(std::size_t n) {
  return Congruence(std::vector<Element>(n, 0));
}

Congruence Congruence::from_labels(std::span<const std::size_t> labels) {
  std::map<std::size_t, Element> first;
  std::vector<Element> reps(labels.size());
  for (std::size_t x = 0; x < labels.size(); ++x)
    reps[x] = first.emplace(labels[x], static_cast<Element>(x)).first->second;
  return Congruence(std::move(reps));
}

Congruence Congruence::from_pairs(std::size_t n, std::span<const ElementPair> pairs) {
  UnionFind uf(n);
  for (auto [x, y] : pairs) uf.unite(x, y);
  return Congruence(uf.canonical());
}

std::uint64_t Congruence::block_of(Element x) const { return masks_[block_index(x)]; }

std::size_t Congruence::block_index(Element x) const {
  const std::uint64_t bit = std::uint64_t{1} << rep_[x];
  for (std::size_t i = 0; i < masks_.size(); ++i)
    if (masks_[i] & bit) return i;
  return masks_.size();
}

std::vector<std::vector<Element>> Congruence::blocks() const {
  std::vector<std::vector<Element>> out;
  for (std::uint64_t m : masks_) {
    std::vector<Element> block;
    for (; m; m &= m - 1) block.push_back(static_cast<Element>(std::countr_zero(m)));
    out.push_back(std::move(block));
  }
  return out;
}

bool Congruence::subset_of(const Congruence& other) const {
  for (std::uint64_t m : masks_)
    if ((m & other.block_of(static_cast<Element>(std::countr_zero(m)))) != m) return false;
  return true;
}

std::vector<ElementPair> Congruence::pairs() const {
  std::vector<ElementPair> out;
  for (Element x = 0; x < size(); ++x)
    for (Element y = x + 1; y < size(); ++y)
      if (related(x, y)) out.emplace_back(x, y);
  return out;
}

Congruence meet(const Congruence& a, const Congruence& b) {
  std::vector<Element> reps(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    const std::uint64_t common = a.block_of(x) & b.block_of(x);
    reps[x] = static_cast<Element>(std::countr_zero(common));
  }
  return Congruence::from_labels(std::vector<std::size_t>(reps.begin(), reps.end()));
}

Congruence join(const Congruence& a, const Congruence& b) {
  UnionFind uf(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    uf.unite(x, a.rep(x));
    uf.unite(x, b.rep(x));
  }
  const auto reps = uf.canonical();
  return Congruence::from_labels(std::vector<std::size_t>(reps.begin(), reps.end()));
}

bool is_congruence(const FiniteAlgebra& a, const Congruence& theta) {
  const std::size_t n = a.size();
  for (const Operation& op : a.ops()) {
    if (op.arity == 0) continue;
    std::size_t stride = op.table.size() / n;
    std::size_t high = 1;
    for (std::size_t pos = 0; pos < op.arity; ++pos) {
      for (Element x = 0; x < n; ++x) {
        const Element y = theta.rep(x);
        if (x == y) continue;
        for (std::size_t h = 0; h < high; ++h)
          for (std::size_t l = 0; l < stride; ++l) {
            const std::size_t base = h * stride * n + l;
            if (!theta.related(op.table[base + x * stride], op.table[base + y * stride]))
              return false;
          }
      }
      high *= n;
      stride /= n;
    }
  }
  return true;
}

Congruence cg(const FiniteAlgebra& a, std::span<const ElementPair> pairs) {
  return cg_join(a, Congruence::identity(a.size()), pairs);
}

Congruence cg(const FiniteAlgebra& a, Element x, Element y) {
  const ElementPair p{x, y};
  return cg(a, std::span<const ElementPair>(&p, 1));
}

Congruence cg_join(const FiniteAlgebra& a, const Congruence& theta,
                   std::span<const ElementPair> pairs) {
  UnionFind uf(a.size());
  for (Element x = 0; x < a.size(); ++x) uf.unite(x, theta.rep(x));
  std::deque<ElementPair> queue;
  for (auto [x, y] : pairs) {
    if (x >= a.size() || y >= a.size())
      throw Error(ErrorCode::TableEntryOutOfRange, "generating pair outside the carrier");
    if (uf.unite(x, y)) queue.emplace_back(x, y);
  }
  close_translations(a, uf, queue);
  const auto reps = uf.canonical();
  return Congruence::from_labels(std::vector<std::size_t>(reps.begin(), reps.end()));
}

Congruence congruence_from_blocks(const FiniteAlgebra& a,
                                  const std::vector<std::vector<std::string>>& blocks) {
  std::vector<ElementPair> pairs;
  for (const auto& block : blocks) {
    std::optional<Element> first;
    for (const auto& label : block) {
      const auto x = a.find(label);
      if (!x)
        throw Error(ErrorCode::TableEntryOutOfRange,
                    "'" + label + "' is not an element of '" + a.name() + "'");
      if (first) pairs.emplace_back(*first, *x);
      else first = x;
    }
  }
  Congruence theta = Congruence::from_pairs(a.size(), pairs);
  if (!is_congruence(a, theta))
    throw Error(ErrorCode::NotACongruence,
                format_partition(a, theta) + " is not a congruence of '" + a.name() + "'");
  return theta;
}

std::string format_partition(const FiniteAlgebra& a, const Congruence& theta) {
  std::string out;
  for (const auto& block : theta.blocks()) {
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += a.label(block[i]);
    }
    out += '}';
  }
  return out;
}

namespace {

bool con_order(const Congruence& a, const Congruence& b) {
  if (a.block_count() != b.block_count()) return a.block_count() > b.block_count();
  return a.reps() < b.reps();
}

}  // namespace

std::vector<Congruence> principal_congruences(const FiniteAlgebra& a) {
  std::vector<Congruence> out{Congruence::identity(a.size())};
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = x + 1; y < a.size(); ++y) out.push_back(cg(a, x, y));
  std::sort(out.begin(), out.end(), con_order);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ConLattice::ConLattice(const FiniteAlgebra& a, std::vector<Congruence> elements,
                       std::vector<bool> principal)
    : elements_(std::move(elements)), principal_(std::move(principal)) {
  const std::size_t m = elements_.size();
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(format_partition(a, elements_[i]));
    index_.emplace(elements_[i].reps(), i);
    for (std::size_t j = 0; j < m; ++j) leq[i][j] = elements_[i].subset_of(elements_[j]);
  }
  lattice_ = FiniteLattice::from_order(std::move(labels), leq);
}

std::optional<std::size_t> ConLattice::index_of(const Congruence& theta) const {
  auto it = index_.find(theta.reps());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ConLattice::at(const Congruence& theta) const {
  auto i = index_of(theta);
  if (!i) throw Error(ErrorCode::NotACongruence, "relation is not in this congruence lattice");
  return *i;
}

std::vector<std::size_t> ConLattice::maximal() const {
  std::vector<std::size_t> out;
  for (auto [lo, hi] : lattice_.covers())
    if (hi == top()) out.push_back(lo);
  std::sort(out.begin(), out.end());
  return out;
}

ConLattice con(const FiniteAlgebra& a) {
  const auto principal = principal_congruences(a);
  std::vector<Congruence> all = principal;
  std::map<std::vector<Element>, bool> seen;
  for (const auto& p : principal) seen.emplace(p.reps(), true);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Congruence c = join(all[i], all[j]);
      if (seen.emplace(c.reps(), false).second) all.push_back(std::move(c));
    }
  std::sort(all.begin(), all.end(), con_order);
  std::vector<bool> flags;
  for (const auto& c : all) flags.push_back(seen[c.reps()]);
  return ConLattice(a, std::move(all), std::move(flags));
}

Congruence inverse_image(const Morphism& f, const Congruence& beta) {
  std::vector<std::size_t> labels(f.source().size());
  for (Element x = 0; x < labels.size(); ++x) labels[x] = beta.rep(f(x));
  return Congruence::from_labels(labels);
}

Congruence kernel(const Morphism& f) {
  return inverse_image(f, Congruence::identity(f.target().size()));
}

Congruence f_bullet(const Morphism& f, const Congruence& alpha) {
  std::vector<ElementPair> pairs;
  for (Element x = 0; x < alpha.size(); ++x)
    if (alpha.rep(x) != x) pairs.emplace_back(f(alpha.rep(x)), f(x));
  return cg(f.target(), pairs);
}

}  // namespace conlat
