#include "conlat/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "conlat/error.hpp"

namespace conlat::oracle {

namespace {

bool related(const Congruence& c, Element x, Element y) {
  for (const auto& b : c.blocks()) {
    const bool hx = std::find(b.begin(), b.end(), x) != b.end();
    const bool hy = std::find(b.begin(), b.end(), y) != b.end();
    if (hx || hy) return hx && hy;
  }
  return false;
}

bool contains_all(const Congruence& c, const std::vector<ElementPair>& pairs) {
  return std::all_of(pairs.begin(), pairs.end(),
                     [&](const ElementPair& p) { return related(c, p.first, p.second); });
}

// Set-theoretic containment of relations.
bool included(const Congruence& a, const Congruence& b) {
  const std::size_t n = a.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (related(a, x, y) && !related(b, x, y)) return false;
  return true;
}

Congruence intersection(const Congruence& a, const Congruence& b) {
  const std::size_t n = a.size();
  std::vector<std::size_t> labels(n);
  for (Element x = 0; x < n; ++x) {
    labels[x] = x;
    for (Element y = 0; y < x; ++y)
      if (related(a, x, y) && related(b, x, y)) {
        labels[x] = labels[y];
        break;
      }
  }
  return Congruence::from_labels(labels);
}

}  // namespace

std::vector<std::vector<std::size_t>> set_partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) return out;
  std::vector<std::size_t> rgs(n, 0);
  while (true) {
    out.push_back(rgs);
    // Next restricted growth string: rgs[i] <= 1 + max(rgs[0..i-1]).
    std::size_t i = n - 1;
    while (i > 0) {
      const std::size_t bound = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
      if (rgs[i] < bound) break;
      --i;
    }
    if (i == 0) return out;
    ++rgs[i];
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
}

bool compatible(const FiniteAlgebra& a, const std::vector<std::size_t>& labels) {
  const std::size_t n = a.size();
  for (std::size_t o = 0; o < a.ops().size(); ++o) {
    const std::size_t k = a.ops()[o].arity;
    const std::size_t count = tuple_count(n, k);
    std::vector<Element> x(k), y(k);
    for (std::size_t s = 0; s < count; ++s) {
      decode_tuple(s, n, x);
      for (std::size_t t = 0; t < count; ++t) {
        decode_tuple(t, n, y);
        bool same = true;
        for (std::size_t i = 0; i < k; ++i)
          if (labels[x[i]] != labels[y[i]]) same = false;
        if (same && labels[a.apply(o, x)] != labels[a.apply(o, y)]) return false;
      }
    }
  }
  return true;
}

std::vector<Congruence> congruences(const FiniteAlgebra& a) {
  if (a.size() > kMaxOracleCarrier)
    throw Error(ErrorCode::NotApplicable, "oracle Con(A) needs at most " +
                                              std::to_string(kMaxOracleCarrier) + " elements");
  std::vector<Congruence> out;
  for (const auto& p : set_partitions(a.size()))
    if (compatible(a, p)) out.push_back(Congruence::from_labels(p));
  std::sort(out.begin(), out.end());
  return out;
}

Congruence generated(const std::vector<Congruence>& all, const std::vector<ElementPair>& pairs) {
  std::optional<Congruence> best;
  for (const Congruence& c : all)
    if (contains_all(c, pairs) && (!best || included(c, *best))) best = c;
  for (const Congruence& c : all)
    if (contains_all(c, pairs) && !included(*best, c))
      throw Error(ErrorCode::AnomalyDetected, "no least congruence containing the pairs");
  return *best;
}

std::set<Matrix> subpower(const FiniteAlgebra& a, const std::vector<Matrix>& gens) {
  std::set<Matrix> current(gens.begin(), gens.end());
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Matrix> snapshot(current.begin(), current.end());
    const std::size_t m = snapshot.size();
    for (std::size_t o = 0; o < a.ops().size(); ++o) {
      const std::size_t k = a.ops()[o].arity;
      const std::size_t count = tuple_count(m, k);
      std::vector<std::size_t> pick(k);
      std::vector<Element> args(k);
      for (std::size_t t = 0; t < count; ++t) {
        std::size_t rest = t;
        for (std::size_t i = k; i-- > 0;) {
          pick[i] = rest % m;
          rest /= m;
        }
        Matrix r{};
        for (std::size_t c = 0; c < 4; ++c) {
          for (std::size_t i = 0; i < k; ++i) args[i] = snapshot[pick[i]][c];
          r[c] = a.apply(o, args);
        }
        if (current.insert(r).second) changed = true;
      }
    }
  }
  return current;
}

bool term_condition(const std::set<Matrix>& matrices, const Congruence& delta) {
  for (const Matrix& m : matrices)
    if (related(delta, m[0], m[1]) && !related(delta, m[2], m[3])) return false;
  return true;
}

Congruence commutator(const FiniteAlgebra& a, const std::vector<Congruence>& all,
                      const Congruence& alpha, const Congruence& beta) {
  const std::size_t n = a.size();
  std::vector<Matrix> gens;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (related(alpha, x, y)) gens.push_back({x, x, y, y});
      if (related(beta, x, y)) gens.push_back({x, y, x, y});
    }
  const auto matrices = subpower(a, gens);
  Congruence result = Congruence::full(n);
  for (const Congruence& d : all)
    if (term_condition(matrices, d)) result = intersection(result, d);
  if (!term_condition(matrices, result))
    throw Error(ErrorCode::AnomalyDetected, "the term condition has no least solution");
  return result;
}

std::vector<std::size_t> primes(const std::vector<Congruence>& all,
                                const std::vector<std::vector<Congruence>>& comm) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < all.size(); ++p) {
    if (all[p].is_full()) continue;
    bool prime = true;
    for (std::size_t i = 0; i < all.size() && prime; ++i)
      for (std::size_t j = 0; j < all.size() && prime; ++j)
        if (included(comm[i][j], all[p]) && !included(all[i], all[p]) &&
            !included(all[j], all[p]))
          prime = false;
    if (prime) out.push_back(p);
  }
  return out;
}

std::vector<std::vector<bool>> ideals(const FiniteLattice& l) {
  const std::size_t n = l.size();
  if (n > 16) throw Error(ErrorCode::NotApplicable, "oracle ideals need at most 16 elements");
  std::vector<std::vector<bool>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<bool> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1u;
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      if (!s[x]) continue;
      for (std::size_t y = 0; y < n && ok; ++y) {
        if (l.leq(y, x) && !s[y]) ok = false;
        if (s[y] && !s[l.join(x, y)]) ok = false;
      }
    }
    if (ok) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<bool>> prime_ideals(const FiniteLattice& l) {
  std::vector<std::vector<bool>> out;
  for (auto& s : oracle::ideals(l)) {
    if (s[l.top()]) continue;
    bool prime = true;
    for (std::size_t x = 0; x < l.size(); ++x)
      for (std::size_t y = 0; y < l.size(); ++y)
        if (s[l.meet(x, y)] && !s[x] && !s[y]) prime = false;
    if (prime) out.push_back(std::move(s));
  }
  return out;
}

std::optional<std::vector<std::size_t>> isomorphism(const FiniteLattice& l,
                                                    const FiniteLattice& m) {
  if (l.size() != m.size()) return std::nullopt;
  if (l.size() > 9) throw Error(ErrorCode::NotApplicable, "oracle isomorphism needs at most 9 elements");
  std::vector<std::size_t> p(l.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t x = 0; x < l.size() && ok; ++x)
      for (std::size_t y = 0; y < l.size() && ok; ++y)
        if (l.leq(x, y) != m.leq(p[x], p[y])) ok = false;
    if (ok) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

}  // namespace conlat::oracle
