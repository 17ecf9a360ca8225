#include "conlat/reticulation.hpp"

#include <algorithm>
#include <map>

#include "conlat/constructions.hpp"
#include "conlat/error.hpp"

namespace conlat {

namespace {

bool prime_over(const ConLattice& con, const CommutatorTable& comm, std::size_t phi,
                bool principal_only) {
  for (std::size_t i = 0; i < con.size(); ++i) {
    if (principal_only && !con.principal(i)) continue;
    for (std::size_t j = 0; j < con.size(); ++j) {
      if (principal_only && !con.principal(j)) continue;
      if (con.leq(comm(i, j), phi) && !con.leq(i, phi) && !con.leq(j, phi)) return false;
    }
  }
  return true;
}

bool subset(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

}  // namespace

bool is_prime(const ConLattice& con, const CommutatorTable& comm, std::size_t phi) {
  if (phi == con.top()) return false;
  const bool full = prime_over(con, comm, phi, false);
  const bool principal = prime_over(con, comm, phi, true);
  if (full != principal)
    throw Error(ErrorCode::AnomalyDetected,
                "primality of " + con.lattice().label(phi) +
                    " differs between Con(A) and PCon(A)");
  return full;
}

std::vector<std::size_t> spectrum(const ConLattice& con, const CommutatorTable& comm) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < con.size(); ++i)
    if (is_prime(con, comm, i)) out.push_back(i);
  return out;
}

std::size_t radical(const ConLattice& con, const std::vector<std::size_t>& spec,
                    std::size_t theta) {
  std::size_t r = con.top();
  for (std::size_t p : spec)
    if (con.leq(theta, p)) r = con.meet(r, p);
  return r;
}

Reticulation::Reticulation(FiniteAlgebra a, ConLattice con, CommutatorTable comm)
    : algebra_(std::move(a)), con_(std::move(con)), comm_(std::move(comm)) {
  if (!comm_.flags().commutative)
    throw Error(ErrorCode::ReticulationUnavailable,
                "the commutator of '" + algebra_.name() + "' is not commutative");
  if (!comm_.flags().join_distributive)
    throw Error(ErrorCode::ReticulationUnavailable,
                "the commutator of '" + algebra_.name() + "' does not distribute over joins");

  spec_ = spectrum(con_, comm_);
  const std::size_t n = con_.size();
  radical_.resize(n);
  for (std::size_t i = 0; i < n; ++i) radical_[i] = conlat::radical(con_, spec_, i);

  class_radical_ = radical_;
  std::sort(class_radical_.begin(), class_radical_.end());
  class_radical_.erase(std::unique(class_radical_.begin(), class_radical_.end()),
                       class_radical_.end());
  const std::size_t k = class_radical_.size();
  classes_.assign(k, {});
  lambda_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = std::lower_bound(class_radical_.begin(), class_radical_.end(), radical_[i]);
    lambda_[i] = static_cast<std::size_t>(it - class_radical_.begin());
    classes_[lambda_[i]].push_back(i);
  }

  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  for (std::size_t c = 0; c < k; ++c) {
    labels.push_back(con_.lattice().label(class_radical_[c]));
    for (std::size_t d = 0; d < k; ++d) leq[c][d] = con_.leq(class_radical_[c], class_radical_[d]);
  }
  lattice_ = FiniteLattice::from_order(std::move(labels), leq);

  auto anomaly = [&](const std::string& what) {
    throw Error(ErrorCode::AnomalyDetected, "reticulation of '" + algebra_.name() + "': " + what);
  };
  if (lattice_.bottom() != lambda_[con_.bottom()] || lattice_.top() != lambda_[con_.top()])
    anomaly("bounds of L(A) are not the classes of Δ and ∇");
  if (!lattice_predicates(lattice_).distributive) anomaly("L(A) is not distributive");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (lattice_.join(lambda_[i], lambda_[j]) != lambda_[con_.join(i, j)])
        anomaly("λ does not preserve joins");
      const std::size_t m = lattice_.meet(lambda_[i], lambda_[j]);
      if (m != lambda_[comm_(i, j)] || m != lambda_[con_.meet(i, j)])
        anomaly("meet of L(A) disagrees with the commutator or the intersection");
    }
}

bool Reticulation::is_prime(std::size_t i) const {
  return std::binary_search(spec_.begin(), spec_.end(), i);
}

std::vector<std::size_t> Reticulation::rcon() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < radical_.size(); ++i)
    if (radical_[i] == i) out.push_back(i);
  return out;
}

std::vector<std::size_t> Reticulation::v_set(std::size_t theta) const {
  std::vector<std::size_t> out;
  for (std::size_t p : spec_)
    if (con_.leq(theta, p)) out.push_back(p);
  return out;
}

std::vector<std::size_t> Reticulation::d_set(std::size_t theta) const {
  std::vector<std::size_t> out;
  for (std::size_t p : spec_)
    if (!con_.leq(theta, p)) out.push_back(p);
  return out;
}

LatticeIdeal Reticulation::star(std::size_t theta) const {
  std::vector<bool> members(lattice_.size(), false);
  for (std::size_t i = 0; i < con_.size(); ++i)
    if (con_.leq(i, theta)) members[lambda_[i]] = true;
  auto ideal = ideal_from_members(lattice_, members);
  if (!ideal)
    throw Error(ErrorCode::AnomalyDetected,
                "θ* is not an ideal for θ = " + con_.lattice().label(theta));
  return *ideal;
}

Reticulation build_reticulation(const FiniteAlgebra& a) {
  ConLattice c = con(a);
  CommutatorTable t = commutator_table(a, c);
  return Reticulation(a, std::move(c), std::move(t));
}

HomeoReport homeo_check(const Reticulation& ret) {
  const auto primes = prime_ideals(ret.lattice());
  const auto& spec = ret.spec();
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::HomeoFailure, "'" + ret.algebra().name() + "': " + what);
  };

  HomeoReport r;
  std::vector<LatticeIdeal> stars;
  for (std::size_t p : spec) {
    const LatticeIdeal s = ret.star(p);
    auto it = std::find(primes.begin(), primes.end(), s);
    if (it == primes.end())
      fail("φ* is not a prime ideal for φ = " + ret.con().lattice().label(p));
    r.image.push_back(static_cast<std::size_t>(it - primes.begin()));
    stars.push_back(s);
  }
  auto sorted = r.image;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail("φ ↦ φ* is not injective");
  if (sorted.size() != primes.size()) fail("φ ↦ φ* misses a prime ideal");
  for (std::size_t i = 0; i < spec.size(); ++i)
    for (std::size_t j = 0; j < spec.size(); ++j)
      if (ret.con().leq(spec[i], spec[j]) != subset(stars[i].members, stars[j].members))
        fail("φ ↦ φ* does not preserve and reflect inclusion between " +
             ret.con().lattice().label(spec[i]) + " and " + ret.con().lattice().label(spec[j]));

  std::vector<bool> reached(ret.lattice().size(), false);
  for (std::size_t t = 0; t < ret.con().size(); ++t) reached[ret.star(t).generator] = true;
  r.star_surjective = std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
  if (!r.star_surjective) fail("θ ↦ θ* is not surjective onto Id(L(A))");
  return r;
}

bool presquo_check(const Reticulation& ret, std::size_t theta) {
  const Quotient q = quotient_algebra(ret.algebra(), ret.con()[theta]);
  const Reticulation rq = build_reticulation(q.algebra);
  const IdealQuotient iq = quotient_by_ideal(ret.lattice(), ret.star(theta));

  const std::size_t k = rq.lattice().size();
  if (k != iq.lattice.size()) return false;
  std::vector<std::optional<std::size_t>> map(k);
  for (std::size_t a = 0; a < ret.con().size(); ++a) {
    const std::size_t source = rq.lambda(rq.con().at(f_bullet(q.projection, ret.con()[a])));
    const std::size_t target = iq.map[ret.lambda(a)];
    if (map[source] && *map[source] != target) return false;
    map[source] = target;
  }
  std::vector<bool> hit(k, false);
  for (const auto& v : map) {
    if (!v || hit[*v]) return false;
    hit[*v] = true;
  }
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      if (rq.lattice().leq(x, y) != iq.lattice.leq(*map[x], *map[y])) return false;
  return true;
}

SemiprimeReport semiprime_report(const Reticulation& ret) {
  SemiprimeReport r;
  r.semiprime = ret.semiprime();
  r.rcon = ret.rcon();
  for (std::size_t t = 0; t < ret.con().size(); ++t) {
    const Quotient q = quotient_algebra(ret.algebra(), ret.con()[t]);
    const ConLattice c = con(q.algebra);
    const CommutatorTable comm = commutator_table(q.algebra, c);
    const bool quotient_semiprime = radical(c, spectrum(c, comm), c.bottom()) == c.bottom();
    const bool in_rcon = ret.radical(t) == t;
    if (quotient_semiprime != in_rcon) r.quosprime_failures.push_back(t);
  }
  r.quosprime = r.quosprime_failures.empty();
  return r;
}

std::optional<bool> licensed_top_check(const Reticulation& ret, const ContextFlags& flags) {
  if (!flags.assume_congruence_modular || !flags.assume_semi_degenerate) return std::nullopt;
  const std::size_t top = ret.lattice().top();
  for (std::size_t i = 0; i < ret.con().size(); ++i)
    if ((ret.lambda(i) == top) != (i == ret.con().top())) return false;
  return true;
}

}  // namespace conlat
