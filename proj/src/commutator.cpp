#include "conlat/commutator.hpp"

#include <algorithm>

namespace conlat {

std::vector<Matrix> matrix_closure(const FiniteAlgebra& a, const Congruence& alpha,
                                   const Congruence& beta) {
  const std::size_t n = a.size();
  std::vector<bool> seen(n * n * n * n, false);
  std::vector<Matrix> all;
  auto add = [&](const Matrix& m) {
    const std::size_t key = ((m[0] * n + m[1]) * n + m[2]) * n + m[3];
    if (seen[key]) return;
    seen[key] = true;
    all.push_back(m);
  };

  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (alpha.related(x, y)) add({x, x, y, y});
      if (beta.related(x, y)) add({x, y, x, y});
    }
  for (const Operation& op : a.ops())
    if (op.arity == 0) add({op.table[0], op.table[0], op.table[0], op.table[0]});

  // Semi-naive closure: each round only evaluates argument tuples that use
  // at least one matrix produced in the previous round.
  std::size_t start = 0;
  std::vector<std::size_t> idx;
  std::vector<Element> args;
  while (start < all.size()) {
    const std::size_t end = all.size();
    for (std::size_t o = 0; o < a.ops().size(); ++o) {
      const std::size_t k = a.ops()[o].arity;
      if (k == 0) continue;
      idx.assign(k, 0);
      args.assign(k, 0);
      for (std::size_t fresh = 0; fresh < k; ++fresh) {
        auto lo = [&](std::size_t pos) { return pos == fresh ? start : 0; };
        auto hi = [&](std::size_t pos) { return pos < fresh ? start : end; };
        bool empty = false;
        for (std::size_t pos = 0; pos < k; ++pos) {
          idx[pos] = lo(pos);
          if (lo(pos) >= hi(pos)) empty = true;
        }
        if (empty) continue;
        while (true) {
          Matrix m;
          for (std::size_t c = 0; c < 4; ++c) {
            for (std::size_t pos = 0; pos < k; ++pos) args[pos] = all[idx[pos]][c];
            m[c] = a.apply(o, args);
          }
          add(m);
          bool done = true;
          for (std::size_t pos = k; pos-- > 0;) {
            if (++idx[pos] < hi(pos)) {
              done = false;
              break;
            }
            idx[pos] = lo(pos);
          }
          if (done) break;
        }
      }
    }
    start = end;
  }
  std::sort(all.begin(), all.end());
  return all;
}

Congruence tc_commutator(const FiniteAlgebra& a, const Congruence& alpha,
                         const Congruence& beta) {
  const auto matrices = matrix_closure(a, alpha, beta);
  Congruence delta = Congruence::identity(a.size());
  while (true) {
    std::vector<ElementPair> added;
    for (const Matrix& m : matrices) {
      const bool top = delta.related(m[0], m[1]);
      const bool bottom = delta.related(m[2], m[3]);
      if (top && !bottom) added.emplace_back(m[2], m[3]);
      if (bottom && !top) added.emplace_back(m[0], m[1]);
    }
    if (added.empty()) return delta;
    delta = cg_join(a, delta, added);
  }
}

CommutatorTable::CommutatorTable(const ConLattice& con, std::vector<std::size_t> table)
    : n_(con.size()), table_(std::move(table)) {
  const auto& t = *this;
  flags_ = CommutatorFlags{true, true, true, true, true};
  for (std::size_t i = 0; i < n_; ++i) {
    if (t(i, con.top()) != i) flags_.unit_law = false;
    for (std::size_t j = 0; j < n_; ++j) {
      if (t(i, j) != t(j, i)) flags_.commutative = false;
      if (t(i, j) != con.meet(i, j)) flags_.equals_intersection = false;
      for (std::size_t k = 0; k < n_; ++k) {
        if (t(i, con.join(j, k)) != con.join(t(i, j), t(i, k)) ||
            t(con.join(j, k), i) != con.join(t(j, i), t(k, i)))
          flags_.join_distributive = false;
        if (t(t(i, j), k) != t(i, t(j, k))) flags_.associative = false;
      }
    }
  }
}

CommutatorTable commutator_table(const FiniteAlgebra& a, const ConLattice& con) {
  const std::size_t n = con.size();
  std::vector<std::size_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = con.at(tc_commutator(a, con[i], con[j]));
  return CommutatorTable(con, std::move(table));
}

}  // namespace conlat
