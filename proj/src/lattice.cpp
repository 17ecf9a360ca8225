#include "conlat/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "conlat/error.hpp"

namespace conlat {

namespace {

std::vector<std::size_t> member_list(const std::vector<bool>& mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(i);
  return out;
}

void sort_ideals(std::vector<LatticeIdeal>& ideals) {
  std::sort(ideals.begin(), ideals.end(), [](const LatticeIdeal& a, const LatticeIdeal& b) {
    return member_list(a.members) < member_list(b.members);
  });
}

}  // namespace

FiniteLattice FiniteLattice::from_order(std::vector<std::string> labels,
                                        const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorCode::NotALattice, "a lattice needs at least one element");
  if (leq.size() != n)
    throw Error(ErrorCode::NotALattice, "order relation has the wrong dimension");
  for (const auto& row : leq)
    if (row.size() != n)
      throw Error(ErrorCode::NotALattice, "order relation has the wrong dimension");

  for (std::size_t a = 0; a < n; ++a) {
    if (!leq[a][a]) throw Error(ErrorCode::NotALattice, "order is not reflexive");
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq[a][b] && leq[b][a])
        throw Error(ErrorCode::NotALattice, "order is not antisymmetric");
      for (std::size_t c = 0; c < n; ++c)
        if (leq[a][b] && leq[b][c] && !leq[a][c])
          throw Error(ErrorCode::NotALattice, "order is not transitive");
    }
  }

  FiniteLattice l;
  l.labels_ = std::move(labels);
  l.leq_.assign(n * n, false);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) l.leq_[a * n + b] = leq[a][b];
  l.join_.assign(n * n, 0);
  l.meet_.assign(n * n, 0);

  // The join is the common upper bound with the smallest down-set, provided
  // it lies below every other common upper bound; dually for the meet.
  std::vector<std::size_t> down(n, 0), up(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (leq[b][a]) {
        ++down[a];
        ++up[b];
      }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t lub = n, glb = n;
      for (std::size_t c = 0; c < n; ++c) {
        if (leq[a][c] && leq[b][c] && (lub == n || down[c] < down[lub])) lub = c;
        if (leq[c][a] && leq[c][b] && (glb == n || up[c] < up[glb])) glb = c;
      }
      for (std::size_t c = 0; c < n && lub != n && glb != n; ++c) {
        if (leq[a][c] && leq[b][c] && !leq[lub][c]) lub = n;
        else if (leq[c][a] && leq[c][b] && !leq[c][glb]) glb = n;
      }
      if (lub == n || glb == n)
        throw Error(ErrorCode::NotALattice, "elements '" + l.labels_[a] + "' and '" +
                                                l.labels_[b] + "' lack a join or meet");
      l.join_[a * n + b] = lub;
      l.meet_[a * n + b] = glb;
    }
  }
  std::size_t bot = 0, top = 0;
  for (std::size_t a = 1; a < n; ++a) {
    bot = l.meet_[bot * n + a];
    top = l.join_[top * n + a];
  }
  l.bottom_ = bot;
  l.top_ = top;
  return l;
}

FiniteLattice FiniteLattice::from_covers(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::size_t, std::size_t>>& below) {
  const std::size_t n = labels.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (auto [a, b] : below) {
    if (a >= n || b >= n) throw Error(ErrorCode::NotALattice, "cover refers to unknown element");
    leq[a][b] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  return from_order(std::move(labels), leq);
}

FiniteLattice FiniteLattice::chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (std::size_t j = i; j < n; ++j) leq[i][j] = true;
  }
  return from_order(std::move(labels), leq);
}

FiniteLattice FiniteLattice::boolean(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    std::string s;
    for (std::size_t b = k; b-- > 0;) s += ((i >> b) & 1) ? '1' : '0';
    labels.push_back(s.empty() ? "0" : s);
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = (i & j) == i;
  }
  return from_order(std::move(labels), leq);
}

FiniteLattice FiniteLattice::product(const FiniteLattice& a, const FiniteLattice& b) {
  const std::size_t n = a.size() * b.size();
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("(" + a.label(i / b.size()) + "," + b.label(i % b.size()) + ")");
    for (std::size_t j = 0; j < n; ++j)
      leq[i][j] = a.leq(i / b.size(), j / b.size()) && b.leq(i % b.size(), j % b.size());
  }
  return from_order(std::move(labels), leq);
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteLattice::covers() const {
  const std::size_t n = size();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

std::vector<std::size_t> FiniteLattice::heights() const {
  const std::size_t n = size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> below(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (leq(b, a)) ++below[a];
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return below[x] < below[y]; });
  std::vector<std::size_t> h(n, 0);
  for (std::size_t a : order)
    for (std::size_t b = 0; b < n; ++b)
      if (b != a && leq(b, a)) h[a] = std::max(h[a], h[b] + 1);
  return h;
}

LatticePredicates lattice_predicates(const FiniteLattice& l) {
  const std::size_t n = l.size();
  LatticePredicates p;
  p.distributive = true;
  p.modular = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)))
          p.distributive = false;
        if (l.leq(a, c) && l.join(a, l.meet(b, c)) != l.meet(l.join(a, b), c))
          p.modular = false;
      }
  p.boolean = p.distributive && boolean_center(l).size() == n;
  return p;
}

std::vector<std::size_t> complements(const FiniteLattice& l, std::size_t x) {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < l.size(); ++y)
    if (l.join(x, y) == l.top() && l.meet(x, y) == l.bottom()) out.push_back(y);
  return out;
}

std::vector<std::size_t> boolean_center(const FiniteLattice& l) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < l.size(); ++x)
    if (!complements(l, x).empty()) out.push_back(x);
  return out;
}

std::size_t LatticeIdeal::size() const {
  return static_cast<std::size_t>(std::count(members.begin(), members.end(), true));
}

bool LatticeIdeal::proper() const {
  return std::find(members.begin(), members.end(), false) != members.end();
}

LatticeIdeal principal_ideal(const FiniteLattice& l, std::size_t x) {
  LatticeIdeal ideal;
  ideal.generator = x;
  ideal.members.assign(l.size(), false);
  for (std::size_t y = 0; y < l.size(); ++y) ideal.members[y] = l.leq(y, x);
  return ideal;
}

std::optional<LatticeIdeal> ideal_from_members(const FiniteLattice& l,
                                               const std::vector<bool>& members) {
  if (members.size() != l.size()) return std::nullopt;
  std::optional<std::size_t> gen;
  for (std::size_t x = 0; x < l.size(); ++x)
    if (members[x]) gen = gen ? l.join(*gen, x) : x;
  if (!gen) return std::nullopt;
  LatticeIdeal ideal = principal_ideal(l, *gen);
  if (ideal.members != members) return std::nullopt;
  return ideal;
}

std::vector<LatticeIdeal> ideals(const FiniteLattice& l) {
  std::vector<LatticeIdeal> out;
  for (std::size_t x = 0; x < l.size(); ++x) out.push_back(principal_ideal(l, x));
  sort_ideals(out);
  return out;
}

std::vector<LatticeIdeal> prime_ideals(const FiniteLattice& l) {
  std::vector<LatticeIdeal> out;
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (x == l.top()) continue;
    bool prime = true;
    for (std::size_t a = 0; a < l.size() && prime; ++a)
      for (std::size_t b = 0; b < l.size() && prime; ++b)
        if (l.leq(l.meet(a, b), x) && !l.leq(a, x) && !l.leq(b, x)) prime = false;
    if (prime) out.push_back(principal_ideal(l, x));
  }
  sort_ideals(out);
  return out;
}

std::vector<std::vector<std::size_t>> stone_basis(const FiniteLattice& l,
                                                  const std::vector<LatticeIdeal>& primes) {
  std::vector<std::vector<std::size_t>> basis(l.size());
  for (std::size_t x = 0; x < l.size(); ++x)
    for (std::size_t p = 0; p < primes.size(); ++p)
      if (!primes[p].contains(x)) basis[x].push_back(p);
  return basis;
}

IdealQuotient quotient_by_ideal(const FiniteLattice& l, const LatticeIdeal& ideal) {
  if (!lattice_predicates(l).distributive)
    throw Error(ErrorCode::NotDistributive, "quotient by an ideal needs a distributive lattice");
  const std::size_t n = l.size();
  auto related = [&](std::size_t x, std::size_t y) {
    for (std::size_t a = 0; a < n; ++a)
      if (ideal.contains(a) && l.join(x, a) == l.join(y, a)) return true;
    return false;
  };
  std::vector<std::size_t> cls(n, n);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (cls[x] != n) continue;
    cls[x] = reps.size();
    for (std::size_t y = x + 1; y < n; ++y)
      if (cls[y] == n && related(x, y)) cls[y] = reps.size();
    reps.push_back(x);
  }
  const std::size_t k = reps.size();
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back("[" + l.label(reps[i]) + "]");
    for (std::size_t j = 0; j < k; ++j) leq[i][j] = cls[l.join(reps[i], reps[j])] == j;
  }
  return IdealQuotient{FiniteLattice::from_order(std::move(labels), leq), std::move(cls)};
}

std::optional<std::size_t> dual_diff(const FiniteLattice& l, std::size_t a, std::size_t b) {
  std::vector<std::size_t> candidates;
  for (std::size_t c = 0; c < l.size(); ++c)
    if (l.leq(a, l.join(b, c))) candidates.push_back(c);
  for (std::size_t c : candidates)
    if (std::all_of(candidates.begin(), candidates.end(),
                    [&](std::size_t d) { return l.leq(c, d); }))
      return c;
  return std::nullopt;
}

BNormalReport b_normal_and_idblp(const FiniteLattice& l) {
  if (!lattice_predicates(l).distributive)
    throw Error(ErrorCode::NotDistributive, "B-normality is defined for distributive lattices");
  const auto center = boolean_center(l);
  BNormalReport r;
  r.b_normal = true;
  for (std::size_t x = 0; x < l.size() && r.b_normal; ++x)
    for (std::size_t y = 0; y < l.size() && r.b_normal; ++y) {
      if (l.join(x, y) != l.top()) continue;
      bool found = false;
      for (std::size_t a : center) {
        if (l.join(x, a) != l.top()) continue;
        for (std::size_t b : center)
          if (l.join(y, b) == l.top() && l.meet(a, b) == l.bottom()) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) r.b_normal = false;
    }

  for (const auto& ideal : ideals(l)) {
    const IdealQuotient q = quotient_by_ideal(l, ideal);
    std::vector<bool> hit(q.lattice.size(), false);
    for (std::size_t e : center) hit[q.map[e]] = true;
    for (std::size_t e : boolean_center(q.lattice))
      if (!hit[e]) {
        r.failing_ideals.push_back(ideal.generator);
        break;
      }
  }
  r.idblp_all = r.failing_ideals.empty();
  return r;
}

std::optional<std::vector<std::size_t>> lattice_iso(const FiniteLattice& l,
                                                    const FiniteLattice& m) {
  const std::size_t n = l.size();
  if (n != m.size()) return std::nullopt;
  const auto hl = l.heights(), hm = m.heights();
  auto degrees = [](const FiniteLattice& x) {
    std::vector<std::pair<std::size_t, std::size_t>> d(x.size(), {0, 0});
    for (auto [lo, hi] : x.covers()) {
      ++d[lo].second;
      ++d[hi].first;
    }
    return d;
  };
  const auto dl = degrees(l), dm = degrees(m);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::pair(hl[a], a) < std::pair(hl[b], b);
  });

  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);
  auto consistent = [&](std::size_t a, std::size_t b) {
    for (std::size_t x = 0; x < n; ++x) {
      if (image[x] == n) continue;
      if (l.leq(a, x) != m.leq(b, image[x]) || l.leq(x, a) != m.leq(image[x], b))
        return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t a = order[depth];
    for (std::size_t b = 0; b < n; ++b) {
      if (used[b] || hm[b] != hl[a] || dm[b] != dl[a] || !consistent(a, b)) continue;
      image[a] = b;
      used[b] = true;
      if (self(self, depth + 1)) return true;
      image[a] = n;
      used[b] = false;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return image;
}

std::string iso_hint(const FiniteLattice& l) {
  const std::size_t n = l.size();
  if (n == 1) return "1";
  bool total = true;
  for (std::size_t a = 0; a < n && total; ++a)
    for (std::size_t b = 0; b < n && total; ++b)
      if (!l.leq(a, b) && !l.leq(b, a)) total = false;
  if (total) return n == 2 ? "2" : "chain" + std::to_string(n);
  if (lattice_predicates(l).boolean) {
    std::string s = "2";
    for (std::size_t k = n; k > 2; k /= 2) s += "x2";
    return s;
  }
  if (n == 5) {
    const auto m3 = FiniteLattice::from_covers({"0", "a", "b", "c", "1"},
                                               {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
    if (lattice_iso(l, m3)) return "M3";
    const auto n5 = FiniteLattice::from_covers({"0", "a", "b", "c", "1"},
                                               {{0, 1}, {0, 2}, {2, 3}, {1, 4}, {3, 4}});
    if (lattice_iso(l, n5)) return "N5";
  }
  return "n" + std::to_string(n);
}

LatticeMapFlags lattice_map_flags(const FiniteLattice& l, const FiniteLattice& m,
                                  const std::vector<std::size_t>& h) {
  LatticeMapFlags f;
  f.zero = h[l.bottom()] == m.bottom();
  f.one = h[l.top()] == m.top();
  f.join = true;
  f.meet = true;
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b) {
      if (h[l.join(a, b)] != m.join(h[a], h[b])) f.join = false;
      if (h[l.meet(a, b)] != m.meet(h[a], h[b])) f.meet = false;
    }
  std::vector<int> hits(m.size(), 0);
  for (std::size_t v : h) ++hits[v];
  f.injective = std::all_of(hits.begin(), hits.end(), [](int c) { return c <= 1; });
  f.surjective = std::all_of(hits.begin(), hits.end(), [](int c) { return c >= 1; });
  return f;
}

std::vector<bool> preimage(const std::vector<std::size_t>& h, const LatticeIdeal& ideal) {
  std::vector<bool> out(h.size(), false);
  for (std::size_t x = 0; x < h.size(); ++x) out[x] = ideal.contains(h[x]);
  return out;
}

IdChainConditions id_chain_conditions(const FiniteLattice& l, const FiniteLattice& m,
                                      const std::vector<std::size_t>& h) {
  const auto pl = prime_ideals(l);
  const auto pm = prime_ideals(m);
  std::vector<std::vector<bool>> pre;
  for (const auto& p : pm) pre.push_back(preimage(h, p));
  auto subset = [](const std::vector<bool>& a, const std::vector<bool>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] && !b[i]) return false;
    return true;
  };

  IdChainConditions c{true, true, true};
  for (const auto& p : pl)
    for (const auto& q : pl)
      for (std::size_t p1 = 0; p1 < pm.size(); ++p1) {
        if (pre[p1] != p.members) continue;
        auto lift = [&](bool up) {
          for (std::size_t q1 = 0; q1 < pm.size(); ++q1) {
            const bool ordered = up ? subset(pm[p1].members, pm[q1].members)
                                    : subset(pm[q1].members, pm[p1].members);
            if (ordered && pre[q1] == q.members) return true;
          }
          return false;
        };
        if (subset(p.members, q.members) && !lift(true)) c.id_gu = false;
        if (subset(q.members, p.members) && !lift(false)) c.id_gd = false;
      }

  std::vector<bool> kernel(l.size(), false);
  for (std::size_t x = 0; x < l.size(); ++x) kernel[x] = h[x] == m.bottom();
  for (const auto& p : pl) {
    if (!subset(kernel, p.members)) continue;
    if (std::find(pre.begin(), pre.end(), p.members) == pre.end()) c.id_lo = false;
  }
  return c;
}

BooleanRestriction boolean_restriction(const FiniteLattice& l, const FiniteLattice& m,
                                       const std::vector<std::size_t>& h) {
  const auto bl = boolean_center(l);
  const auto bm = boolean_center(m);
  std::vector<bool> in_bm(m.size(), false);
  for (std::size_t e : bm) in_bm[e] = true;
  BooleanRestriction r{true, true, true};
  std::vector<int> hits(m.size(), 0);
  for (std::size_t e : bl) {
    if (!in_bm[h[e]]) r.into_center = false;
    ++hits[h[e]];
  }
  for (std::size_t e : bm)
    if (hits[e] == 0) r.onto_center = false;
  for (int c : hits)
    if (c > 1) r.injective = false;
  return r;
}

}  // namespace conlat
