#include "conlat/morphism_analysis.hpp"

#include <algorithm>

#include "conlat/constructions.hpp"
#include "conlat/error.hpp"

namespace conlat {

namespace {

bool contains(const std::vector<std::size_t>& v, std::size_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

bool is_boolean_sublattice(const FiniteLattice& l, const std::vector<std::size_t>& center) {
  for (std::size_t x : center)
    for (std::size_t y : center) {
      if (!contains(center, l.join(x, y)) || !contains(center, l.meet(x, y))) return false;
      for (std::size_t z : center)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
    }
  return true;
}

[[noreturn]] void anomaly(const Morphism& f, const std::string& what) {
  throw Error(ErrorCode::AnomalyDetected, "morphism '" + f.name() + "': " + what);
}

}  // namespace

std::vector<std::size_t> bullet_map(const Morphism& f, const ConLattice& ca, const ConLattice& cb) {
  std::vector<std::size_t> out(ca.size());
  for (std::size_t i = 0; i < ca.size(); ++i) out[i] = cb.at(f_bullet(f, ca[i]));
  return out;
}

std::vector<std::size_t> star_map(const Morphism& f, const ConLattice& ca, const ConLattice& cb) {
  std::vector<std::size_t> out(cb.size());
  for (std::size_t i = 0; i < cb.size(); ++i) out[i] = ca.at(inverse_image(f, cb[i]));
  return out;
}

FretVerdict check_fret(const Morphism& f, const Reticulation& ra, const Reticulation& rb) {
  const auto fb = bullet_map(f, ra.con(), rb.con());
  FretVerdict v;
  v.holds = true;
  for (std::size_t i = 0; i < fb.size() && v.holds; ++i)
    for (std::size_t j = i + 1; j < fb.size(); ++j)
      if (ra.lambda(i) == ra.lambda(j) && rb.lambda(fb[i]) != rb.lambda(fb[j])) {
        v.holds = false;
        v.witness = std::pair(i, j);
        break;
      }
  if (!v.holds) return v;

  const auto& classes = ra.classes();
  v.l_of_f.resize(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) v.l_of_f[c] = rb.lambda(fb[classes[c].front()]);
  v.preserves = lattice_map_flags(ra.lattice(), rb.lattice(), v.l_of_f);
  v.boolean = boolean_restriction(ra.lattice(), rb.lattice(), v.l_of_f);
  if (!v.preserves.zero || !v.preserves.join) anomaly(f, "L(f) does not preserve 0 and join");
  if (v.preserves.injective && !v.boolean.injective)
    anomaly(f, "L(f) is injective but not on Boolean centers");
  return v;
}

AdmFretReport admfret_report(const Morphism& f, const Reticulation& ra, const Reticulation& rb,
                             const FretVerdict& fret) {
  const auto& ca = ra.con();
  const auto& cb = rb.con();
  const auto fb = bullet_map(f, ca, cb);
  const auto fs = star_map(f, ca, cb);
  AdmFretReport r;
  auto& c = r.conditions;
  c = {true, fret.holds && fret.preserves.meet, true, true, true};
  r.admissible_or_top = true;
  for (std::size_t psi : rb.spec()) {
    if (!ra.is_prime(fs[psi])) c[0] = false;
    if (fs[psi] == ca.top()) r.primes_to_top.push_back(psi);
    else if (!ra.is_prime(fs[psi])) r.admissible_or_top = false;
  }
  for (std::size_t i = 0; i < ca.size(); ++i)
    for (std::size_t j = 0; j < ca.size(); ++j) {
      const std::size_t x = fb[ra.comm()(i, j)];
      const std::size_t y = rb.comm()(fb[i], fb[j]);
      if (rb.lambda(x) != rb.lambda(y)) c[2] = false;
      if (rb.radical(x) != rb.radical(y)) c[3] = false;
      if (!cb.leq(y, rb.radical(x))) c[4] = false;
    }
  const bool consistent =
      std::all_of(c.begin() + 1, c.end(), [&](bool b) { return b == r.admissible_or_top; }) &&
      (!c[0] || c[1]);
  if (!consistent) {
    std::string bits;
    for (bool b : c) bits += b ? '1' : '0';
    anomaly(f, "admissibility conditions disagree (" + bits + ")");
  }
  return r;
}

bool AdmFretReport::all_agree() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [&](bool b) { return b == conditions[0]; });
}

FbcVerdict check_fbc(const Morphism& f, const ConLattice& ca, const CommutatorTable& commA,
                     const ConLattice& cb, const CommutatorTable& commB) {
  const auto& la = ca.lattice();
  const auto& lb = cb.lattice();
  const auto centerA = boolean_center(la);
  const auto centerB = boolean_center(lb);
  FbcVerdict v;
  std::vector<std::string> reasons;
  if (!commA.flags().unit_law) reasons.push_back("[θ,∇] = θ fails in '" + f.source().name() + "'");
  if (!commB.flags().unit_law && f.source().name() != f.target().name())
    reasons.push_back("[θ,∇] = θ fails in '" + f.target().name() + "'");
  if (!is_boolean_sublattice(la, centerA))
    reasons.push_back("B(Con(" + f.source().name() + ")) is not a Boolean sublattice");
  if (!is_boolean_sublattice(lb, centerB) && f.source().name() != f.target().name())
    reasons.push_back("B(Con(" + f.target().name() + ")) is not a Boolean sublattice");
  reasons.erase(std::unique(reasons.begin(), reasons.end()), reasons.end());
  v.applicable = reasons.empty();
  for (std::size_t i = 0; i < reasons.size(); ++i) v.reason += (i ? "; " : "") + reasons[i];

  const auto fb = bullet_map(f, ca, cb);
  v.fbc1 = std::all_of(centerA.begin(), centerA.end(),
                       [&](std::size_t x) { return contains(centerB, fb[x]); });
  v.fbc2 = v.fbc1 && fb[ca.bottom()] == cb.bottom() && fb[ca.top()] == cb.top();
  for (std::size_t x : centerA) {
    for (std::size_t y : centerA)
      if (fb[ca.join(x, y)] != cb.join(fb[x], fb[y]) || fb[ca.meet(x, y)] != cb.meet(fb[x], fb[y]))
        v.fbc2 = false;
    for (std::size_t y : complements(la, x))
      if (cb.join(fb[x], fb[y]) != cb.top() || cb.meet(fb[x], fb[y]) != cb.bottom()) v.fbc2 = false;
  }
  return v;
}

ChainVerdict chain_conditions(const Morphism& f, const Reticulation& ra, const Reticulation& rb,
                              const FretVerdict& fret, bool admissible) {
  const auto& ca = ra.con();
  const auto& cb = rb.con();
  const auto fs = star_map(f, ca, cb);
  const auto& sa = ra.spec();
  const auto& sb = rb.spec();

  ChainVerdict v{true, true, true, std::nullopt};
  for (std::size_t phi : sa)
    for (std::size_t psi : sa)
      for (std::size_t phi1 : sb) {
        if (fs[phi1] != phi) continue;
        auto lift = [&](bool up) {
          return std::any_of(sb.begin(), sb.end(), [&](std::size_t psi1) {
            const bool ordered = up ? cb.leq(phi1, psi1) : cb.leq(psi1, phi1);
            return ordered && fs[psi1] == psi;
          });
        };
        if (ca.leq(phi, psi) && !lift(true)) v.gu = false;
        if (ca.leq(psi, phi) && !lift(false)) v.gd = false;
      }
  const std::size_t ker = ca.at(kernel(f));
  for (std::size_t phi : sa)
    if (ca.leq(ker, phi) &&
        std::none_of(sb.begin(), sb.end(), [&](std::size_t phi1) { return fs[phi1] == phi; }))
      v.lo = false;

  if (!fret.holds) return v;
  v.id = id_chain_conditions(ra.lattice(), rb.lattice(), fret.l_of_f);
  if (!admissible) return v;

  if (v.gu != v.id->id_gu || v.gd != v.id->id_gd || v.lo != v.id->id_lo)
    anomaly(f, "GU/GD/LO disagree with Id-GU/Id-GD/Id-LO of L(f)");
  const auto zero = preimage(fret.l_of_f, principal_ideal(rb.lattice(), rb.lattice().bottom()));
  for (std::size_t phi : sa) {
    const auto star = ra.star(phi);
    bool inside = true;
    for (std::size_t x = 0; x < zero.size(); ++x)
      if (zero[x] && !star.contains(x)) inside = false;
    if (ca.leq(ker, phi) != inside)
      anomaly(f, "Ker(f) ⊆ φ and L(f)^{-1}(0) ⊆ φ* disagree for φ = " + ca.lattice().label(phi));
  }
  return v;
}

std::optional<bool> dotminus_preservation(const Morphism& f, const ConLattice& ca,
                                          const ConLattice& cb) {
  const auto fb = bullet_map(f, ca, cb);
  bool ok = true;
  for (std::size_t i = 0; i < ca.size(); ++i)
    for (std::size_t j = 0; j < ca.size(); ++j) {
      const auto d = dual_diff(ca.lattice(), i, j);
      const auto e = dual_diff(cb.lattice(), fb[i], fb[j]);
      if (!d || !e) return std::nullopt;
      if (fb[*d] != *e) ok = false;
    }
  return ok;
}

CblpReport cblp_report(const FiniteAlgebra& a, const ConLattice& con, const CommutatorTable& comm,
                       const Reticulation* ret, const ContextFlags& flags) {
  const auto center = boolean_center(con.lattice());
  CblpReport r;
  r.b_center_boolean_sublattice = is_boolean_sublattice(con.lattice(), center);
  r.cblp = true;
  for (std::size_t t = 0; t < con.size(); ++t) {
    const Quotient q = quotient_algebra(a, con[t]);
    const ConLattice cq = conlat::con(q.algebra);
    std::vector<std::size_t> image;
    for (std::size_t x : center) image.push_back(cq.at(f_bullet(q.projection, con[x])));
    bool onto = true;
    for (std::size_t y : boolean_center(cq.lattice()))
      if (!contains(image, y)) onto = false;
    r.per_theta.push_back(onto);
    r.cblp = r.cblp && onto;
  }

  r.congruence_b_normal = true;
  for (std::size_t phi = 0; phi < con.size() && r.congruence_b_normal; ++phi)
    for (std::size_t psi = 0; psi < con.size() && r.congruence_b_normal; ++psi) {
      if (con.join(phi, psi) != con.top()) continue;
      bool found = false;
      for (std::size_t x : center)
        for (std::size_t y : center)
          if (con.join(phi, x) == con.top() && con.join(psi, y) == con.top() &&
              comm(x, y) == con.bottom())
            found = true;
      r.congruence_b_normal = found;
    }

  if (!ret) return r;
  r.retic = b_normal_and_idblp(ret->lattice());
  if (r.retic->b_normal != r.retic->idblp_all)
    throw Error(ErrorCode::AnomalyDetected,
                "L(" + a.name() + "): Id-BLP and B-normality disagree");
  std::vector<std::size_t> lambda(con.size());
  for (std::size_t i = 0; i < con.size(); ++i) lambda[i] = ret->lambda(i);
  r.lambda_on_b = boolean_restriction(con.lattice(), ret->lattice(), lambda);

  if (flags.assume_congruence_modular && flags.assume_semi_degenerate &&
      r.lambda_on_b->into_center && r.lambda_on_b->onto_center) {
    const bool x = r.cblp;
    r.charcblp_agree = x == r.retic->idblp_all && x == r.retic->b_normal &&
                       x == r.congruence_b_normal;
    if (!*r.charcblp_agree)
      throw Error(ErrorCode::AnomalyDetected,
                  "'" + a.name() + "': CBLP, Id-BLP of L(A), B-normality of L(A) and "
                  "congruence B-normality disagree");
  }
  return r;
}

MorphismReport analyze_morphism(const Morphism& f, const Reticulation& ra, const Reticulation& rb,
                                const ContextFlags& flags) {
  MorphismReport r;
  r.name = f.name();
  r.fret = check_fret(f, ra, rb);
  r.admfret = admfret_report(f, ra, rb, r.fret);
  r.fbc = check_fbc(f, ra.con(), ra.comm(), rb.con(), rb.comm());
  r.chain = chain_conditions(f, ra, rb, r.fret, r.admfret.admissible());
  r.dotminus = dotminus_preservation(f, ra.con(), rb.con());
  if (!r.admfret.all_agree()) {
    std::string primes;
    for (std::size_t p : r.admfret.primes_to_top)
      primes += (primes.empty() ? "" : ", ") + rb.con().lattice().label(p);
    r.notes.push_back("not admissible only because f* sends prime(s) " + primes +
                      " to the full congruence; conditions (2)-(5) hold");
  }
  if (flags.assume_semi_degenerate && !r.admfret.primes_to_top.empty())
    r.notes.push_back("f*(ψ) != ∇ for ψ != ∇ (licensed by --assume-semidegenerate): contradicted");
  if (!r.fbc.applicable) r.notes.push_back("FBC hypotheses fail: " + r.fbc.reason);
  if (!r.dotminus) r.notes.push_back("dual difference undefined in a congruence lattice");
  if (flags.assume_variety_with_01 && r.fret.holds)
    r.notes.push_back(std::string("L(f) preserves 1 (licensed by --assume-01): ") +
                      (r.fret.preserves.one ? "confirmed" : "contradicted"));
  return r;
}

}  // namespace conlat
