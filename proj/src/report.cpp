#include "conlat/report.hpp"

#include <algorithm>
#include <sstream>

#include "conlat/error.hpp"

namespace conlat {

namespace {

Json labels_of(const FiniteLattice& l, const std::vector<std::size_t>& xs) {
  Json out = Json::array();
  for (std::size_t x : xs) out.push_back(l.label(x));
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

AlgebraAnalysis::AlgebraAnalysis(const FiniteAlgebra& a)
    : algebra(a), con(conlat::con(a)), comm(commutator_table(a, con)) {
  try {
    ret.emplace(algebra, con, comm);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ReticulationUnavailable) throw;
    retic_error = e.what();
  }
}

std::string label_set(const FiniteLattice& l, const std::vector<std::size_t>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + l.label(xs[i]);
  return out + "}";
}

Json con_json(const ConLattice& con) {
  const FiniteLattice& l = con.lattice();
  const auto preds = lattice_predicates(l);
  const auto maximal = con.maximal();
  Json elements = Json::array();
  for (std::size_t i = 0; i < con.size(); ++i) {
    Json e;
    e["index"] = i;
    e["partition"] = l.label(i);
    e["blocks"] = con[i].block_count();
    e["principal"] = con.principal(i);
    e["maximal"] = std::find(maximal.begin(), maximal.end(), i) != maximal.end();
    elements.push_back(std::move(e));
  }
  Json covers = Json::array();
  for (auto [lo, hi] : l.covers()) covers.push_back({lo, hi});
  Json out;
  out["size"] = con.size();
  out["elements"] = std::move(elements);
  out["covers"] = std::move(covers);
  out["iso_hint"] = iso_hint(l);
  out["distributive"] = preds.distributive;
  out["modular"] = preds.modular;
  out["boolean"] = preds.boolean;
  out["boolean_center"] = labels_of(l, boolean_center(l));
  return out;
}

Json commutator_json(const ConLattice& con, const CommutatorTable& comm) {
  const auto& f = comm.flags();
  Json flags;
  flags["commutative"] = f.commutative;
  flags["join_distributive"] = f.join_distributive;
  flags["equals_intersection"] = f.equals_intersection;
  flags["unit_law"] = f.unit_law;
  flags["associative"] = f.associative;
  Json table = Json::array();
  for (std::size_t i = 0; i < con.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < con.size(); ++j) row.push_back(con.lattice().label(comm(i, j)));
    table.push_back(std::move(row));
  }
  Json out;
  out["flags"] = std::move(flags);
  out["congruences"] = con.lattice().labels();
  out["table"] = std::move(table);
  return out;
}

Json spec_json(const Reticulation& ret) {
  const FiniteLattice& l = ret.con().lattice();
  Json radicals = Json::array();
  for (std::size_t t = 0; t < ret.con().size(); ++t)
    radicals.push_back({{"theta", l.label(t)}, {"radical", l.label(ret.radical(t))}});
  Json out;
  out["spec"] = labels_of(l, ret.spec());
  out["radicals"] = std::move(radicals);
  out["rcon"] = labels_of(l, ret.rcon());
  out["semiprime"] = ret.semiprime();
  return out;
}

Json retic_json(const Reticulation& ret) {
  const FiniteLattice& cl = ret.con().lattice();
  const FiniteLattice& l = ret.lattice();
  Json classes = Json::array();
  for (std::size_t c = 0; c < l.size(); ++c) {
    Json e;
    e["label"] = l.label(c);
    e["radical"] = cl.label(ret.class_radical(c));
    e["members"] = labels_of(cl, ret.classes()[c]);
    classes.push_back(std::move(e));
  }
  Json covers = Json::array();
  for (auto [lo, hi] : l.covers()) covers.push_back({lo, hi});
  const HomeoReport homeo = homeo_check(ret);
  Json out;
  out["size"] = l.size();
  out["iso_hint"] = iso_hint(l);
  out["classes"] = std::move(classes);
  out["covers"] = std::move(covers);
  out["prime_ideals"] = prime_ideals(l).size();
  out["star_surjective"] = homeo.star_surjective;
  return out;
}

Json algebra_summary(const AlgebraAnalysis& an, const ContextFlags& flags,
                     std::vector<std::string>& discrepancies) {
  const FiniteAlgebra& a = an.algebra;
  const FiniteLattice& cl = an.con.lattice();
  Json out;
  out["name"] = a.name();
  out["size"] = a.size();
  out["con_size"] = an.con.size();
  out["commutator_flags"] = commutator_json(an.con, an.comm)["flags"];

  if (!an.comm.flags().unit_law) {
    for (std::size_t t = 0; t < an.con.size(); ++t)
      if (an.comm(t, an.con.top()) != t) {
        discrepancies.push_back(a.name() + ": [θ,∇] = θ fails at θ = " + cl.label(t) +
                                " (value " + cl.label(an.comm(t, an.con.top())) + ")");
        break;
      }
  }

  const Reticulation* ret = an.ret ? &*an.ret : nullptr;
  const CblpReport cblp = cblp_report(a, an.con, an.comm, ret, flags);
  std::vector<std::size_t> failing;
  for (std::size_t t = 0; t < cblp.per_theta.size(); ++t)
    if (!cblp.per_theta[t]) failing.push_back(t);
  Json cblp_json;
  cblp_json["holds"] = cblp.cblp;
  cblp_json["failing"] = labels_of(cl, failing);
  if (cblp.charcblp_agree) cblp_json["charcblp_agree"] = *cblp.charcblp_agree;

  if (!ret) {
    out["spec"] = nullptr;
    out["retic"] = nullptr;
    out["retic_error"] = an.retic_error;
    out["semiprime"] = nullptr;
    out["rcon"] = nullptr;
    out["cblp"] = std::move(cblp_json);
    out["b_normal"] = {{"congruence", cblp.congruence_b_normal}, {"reticulation", nullptr}};
    discrepancies.push_back(a.name() + ": " + an.retic_error);
    return out;
  }

  const SemiprimeReport sp = semiprime_report(*ret);
  if (!sp.quosprime)
    throw Error(ErrorCode::AnomalyDetected,
                "'" + a.name() + "': A/θ semiprime iff θ ∈ RCon(A) fails at θ = " +
                    cl.label(sp.quosprime_failures.front()));
  for (std::size_t t = 0; t < an.con.size(); ++t)
    if (!presquo_check(*ret, t))
      throw Error(ErrorCode::AnomalyDetected, "'" + a.name() +
                                                  "': L(A/θ) and L(A)/θ* differ at θ = " +
                                                  cl.label(t));

  out["spec"] = labels_of(cl, ret->spec());
  out["retic"] = {{"size", ret->lattice().size()}, {"iso_hint", iso_hint(ret->lattice())}};
  out["semiprime"] = sp.semiprime;
  out["rcon"] = labels_of(cl, sp.rcon);
  out["cblp"] = std::move(cblp_json);
  out["b_normal"] = {{"congruence", cblp.congruence_b_normal},
                     {"reticulation", cblp.retic->b_normal}};
  if (const auto top = licensed_top_check(*ret, flags)) {
    out["lambda_top_iff_nabla"] = *top;
    if (!*top)
      discrepancies.push_back(a.name() +
                              ": λ(θ) = 1 iff θ = ∇ (licensed by the context flags) fails");
  }
  return out;
}

Json morphism_json(const Morphism& f, const MorphismReport& r, const Reticulation& ra,
                   const Reticulation& rb) {
  const FiniteLattice& ca = ra.con().lattice();
  const FiniteLattice& cb = rb.con().lattice();
  Json out;
  out["name"] = r.name;
  out["source"] = ra.algebra().name();
  out["target"] = rb.algebra().name();

  Json bullet = Json::array();
  const auto fb = bullet_map(f, ra.con(), rb.con());
  for (std::size_t i = 0; i < fb.size(); ++i) bullet.push_back({ca.label(i), cb.label(fb[i])});
  out["bullet"] = std::move(bullet);

  Json fret;
  fret["holds"] = r.fret.holds;
  if (r.fret.witness)
    fret["witness"] = {ca.label(r.fret.witness->first), ca.label(r.fret.witness->second)};
  else
    fret["witness"] = nullptr;
  if (r.fret.holds) {
    Json lf = Json::array();
    for (std::size_t c = 0; c < r.fret.l_of_f.size(); ++c)
      lf.push_back({ra.lattice().label(c), rb.lattice().label(r.fret.l_of_f[c])});
    fret["l_of_f"] = std::move(lf);
  } else {
    fret["l_of_f"] = nullptr;
  }
  out["fret"] = std::move(fret);

  if (r.fret.holds) {
    const auto& p = r.fret.preserves;
    out["preserves"] = {{"zero", p.zero},           {"join", p.join},
                        {"meet", p.meet},           {"one", p.one},
                        {"injective", p.injective}, {"surjective", p.surjective}};
    const auto& b = r.fret.boolean;
    out["boolean_restriction"] = {
        {"into_center", b.into_center}, {"onto_center", b.onto_center}, {"injective", b.injective}};
  } else {
    out["preserves"] = nullptr;
    out["boolean_restriction"] = nullptr;
  }

  out["admissible"] = r.admfret.admissible();
  Json adm;
  adm["conditions"] = r.admfret.conditions;
  adm["all_agree"] = r.admfret.all_agree();
  adm["admissible_or_top"] = r.admfret.admissible_or_top;
  adm["primes_to_top"] = labels_of(cb, r.admfret.primes_to_top);
  out["admfret"] = std::move(adm);

  out["fbc"] = {{"applicable", r.fbc.applicable},
                {"reason", r.fbc.reason},
                {"fbc1", r.fbc.fbc1},
                {"fbc2", r.fbc.fbc2},
                {"holds", r.fbc.holds()}};

  Json chain;
  chain["gu"] = r.chain.gu;
  chain["gd"] = r.chain.gd;
  chain["lo"] = r.chain.lo;
  if (r.chain.id) {
    chain["id_gu"] = r.chain.id->id_gu;
    chain["id_gd"] = r.chain.id->id_gd;
    chain["id_lo"] = r.chain.id->id_lo;
  } else {
    chain["id_gu"] = chain["id_gd"] = chain["id_lo"] = nullptr;
  }
  out["chain"] = std::move(chain);
  out["dotminus"] = r.dotminus ? Json(*r.dotminus) : Json(nullptr);
  out["notes"] = r.notes;
  return out;
}

Json flags_json(const ContextFlags& flags) {
  return {{"assume_modular", flags.assume_congruence_modular},
          {"assume_semidegenerate", flags.assume_semi_degenerate},
          {"assume_01", flags.assume_variety_with_01}};
}

Json report_document(const ContextFlags& flags, Json algebras, Json morphisms,
                     const std::vector<std::string>& discrepancies) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["flags"] = flags_json(flags);
  out["algebras"] = std::move(algebras);
  out["morphisms"] = std::move(morphisms);
  out["discrepancies"] = discrepancies;
  return out;
}

std::string hasse_dot(const FiniteLattice& l, const std::string& title) {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(title) << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < l.size(); ++i)
    out << "  n" << i << " [label=\"" << dot_escape(l.label(i)) << "\"];\n";
  for (auto [lo, hi] : l.covers()) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace conlat
