// conlat: congruence lattices, commutators, spectra and reticulations of
// finite algebras given as operation tables.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "conlat/error.hpp"
#include "conlat/oracle.hpp"
#include "conlat/report.hpp"
#include "conlat/text_format.hpp"

namespace fs = std::filesystem;
using namespace conlat;

namespace {

struct Options {
  std::string json_path;
  std::string dot_path;
  ContextFlags flags;
  bool oracle = false;
  std::vector<std::string> algebra_paths;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
}

void write_json(const Options& opt, const Json& j) {
  if (!opt.json_path.empty()) write_file(opt.json_path, j.dump(2) + "\n");
}

void write_dot(const Options& opt, const FiniteLattice& l, const std::string& title) {
  if (!opt.dot_path.empty()) write_file(opt.dot_path, hasse_dot(l, title));
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string bits(const std::array<bool, 5>& c) {
  std::string s;
  for (bool b : c) s += b ? '1' : '0';
  return s;
}

// Brute-force confirmation of Con(A) and the commutator table.
void run_oracle(const AlgebraAnalysis& an) {
  const FiniteAlgebra& a = an.algebra;
  if (a.size() > oracle::kMaxOracleCarrier) {
    std::cerr << "oracle: skipped for '" << a.name() << "' (" << a.size() << " elements)\n";
    return;
  }
  const auto all = oracle::congruences(a);
  auto mine = an.con.elements();
  std::sort(mine.begin(), mine.end());
  if (mine != all)
    throw Error(ErrorCode::AnomalyDetected, "oracle: Con(" + a.name() + ") has " +
                                                std::to_string(all.size()) + " members, engine found " +
                                                std::to_string(mine.size()));
  for (std::size_t i = 0; i < an.con.size(); ++i)
    for (std::size_t j = 0; j < an.con.size(); ++j)
      if (oracle::commutator(a, all, an.con[i], an.con[j]) != an.con[an.comm(i, j)])
        throw Error(ErrorCode::AnomalyDetected,
                    "oracle: [" + an.con.lattice().label(i) + ", " + an.con.lattice().label(j) +
                        "] differs in '" + a.name() + "'");
  std::cerr << "oracle: Con(" << a.name() << ") and its commutator table confirmed\n";
}

AlgebraAnalysis analyze(const std::string& path, const Options& opt) {
  AlgebraAnalysis an(load_algebra(path));
  if (opt.oracle) run_oracle(an);
  return an;
}

const Reticulation& require_retic(const AlgebraAnalysis& an) {
  if (!an.ret) throw Error(ErrorCode::ReticulationUnavailable, an.retic_error);
  return *an.ret;
}

int cmd_con(const std::string& path, const Options& opt) {
  const AlgebraAnalysis an = analyze(path, opt);
  const FiniteLattice& l = an.con.lattice();
  const auto maximal = an.con.maximal();
  std::cout << "Con(" << an.algebra.name() << "): " << an.con.size() << " congruences, "
            << iso_hint(l) << "\n";
  for (std::size_t i = 0; i < an.con.size(); ++i) {
    std::cout << "  " << i << "  " << l.label(i);
    if (an.con.principal(i)) std::cout << "  principal";
    if (std::find(maximal.begin(), maximal.end(), i) != maximal.end()) std::cout << "  maximal";
    std::cout << "\n";
  }
  std::cout << "B(Con) = " << label_set(l, boolean_center(l)) << "\n";
  Json j = con_json(an.con);
  j["name"] = an.algebra.name();
  write_json(opt, j);
  write_dot(opt, l, "Con(" + an.algebra.name() + ")");
  return 0;
}

int cmd_commutator(const std::string& path, const Options& opt) {
  const AlgebraAnalysis an = analyze(path, opt);
  const FiniteLattice& l = an.con.lattice();
  std::cout << "Con(" << an.algebra.name() << "):\n";
  for (std::size_t i = 0; i < an.con.size(); ++i) std::cout << "  " << i << "  " << l.label(i) << "\n";
  std::cout << "[i,j]:\n";
  for (std::size_t i = 0; i < an.con.size(); ++i) {
    std::cout << " ";
    for (std::size_t j = 0; j < an.con.size(); ++j) std::cout << ' ' << an.comm(i, j);
    std::cout << "\n";
  }
  const auto& f = an.comm.flags();
  std::cout << "commutative: " << yes_no(f.commutative)
            << "\njoin-distributive: " << yes_no(f.join_distributive)
            << "\nequals intersection: " << yes_no(f.equals_intersection)
            << "\n[θ,∇] = θ: " << yes_no(f.unit_law) << "\nassociative: " << yes_no(f.associative)
            << "\n";
  Json j = commutator_json(an.con, an.comm);
  j["name"] = an.algebra.name();
  write_json(opt, j);
  write_dot(opt, l, "Con(" + an.algebra.name() + ")");
  return 0;
}

int cmd_spec(const std::string& path, const Options& opt) {
  const AlgebraAnalysis an = analyze(path, opt);
  const Reticulation& ret = require_retic(an);
  const FiniteLattice& l = an.con.lattice();
  std::cout << "Spec = " << label_set(l, ret.spec()) << "\n";
  std::cout << "RCon = " << label_set(l, ret.rcon()) << "\n";
  std::cout << "semiprime: " << yes_no(ret.semiprime()) << "\n";
  Json j = spec_json(ret);
  j["name"] = an.algebra.name();
  write_json(opt, j);
  return 0;
}

int cmd_reticulation(const std::string& path, const Options& opt) {
  const AlgebraAnalysis an = analyze(path, opt);
  const Reticulation& ret = require_retic(an);
  const FiniteLattice& l = ret.lattice();
  const FiniteLattice& cl = an.con.lattice();
  std::cout << "L(" << an.algebra.name() << ") ≅ " << iso_hint(l) << " (" << l.size()
            << " elements)\n";
  for (std::size_t c = 0; c < l.size(); ++c)
    std::cout << "  " << c << "  " << label_set(cl, ret.classes()[c]) << "\n";
  Json j = retic_json(ret);
  j["name"] = an.algebra.name();
  write_json(opt, j);
  write_dot(opt, l, "L(" + an.algebra.name() + ")");
  return 0;
}

// Finds the algebra a morphism file names, first among --algebra files, then
// as <name>.alg next to the morphism file.
std::string resolve_algebra(const std::string& name, const fs::path& mor_path,
                            const Options& opt,
                            std::map<std::string, std::string>& by_name) {
  if (by_name.empty())
    for (const auto& p : opt.algebra_paths) by_name[parse_algebra_text(read_file(p)).name] = p;
  if (auto it = by_name.find(name); it != by_name.end()) return it->second;
  const fs::path sibling = mor_path.parent_path() / (name + ".alg");
  if (fs::exists(sibling)) return sibling.string();
  throw Error(ErrorCode::UnknownAlgebra, "no algebra named '" + name + "' for '" +
                                             mor_path.string() + "'; pass it with --algebra");
}

struct MorphismRun {
  Morphism f;
  MorphismReport report;
  Json json;
};

class Workspace {
 public:
  explicit Workspace(const Options& opt) : opt_(opt) {}

  const AlgebraAnalysis& algebra(const std::string& path) {
    const std::string key = fs::weakly_canonical(path).string();
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, analyze(path, opt_)).first;
      order_.push_back(key);
    }
    return it->second;
  }

  MorphismRun morphism(const std::string& path) {
    const std::string text = read_file(path);
    const RawMorphism raw = parse_morphism_text(text);
    const auto& a = algebra(resolve_algebra(raw.source, path, opt_, names_));
    const auto& b = algebra(resolve_algebra(raw.target, path, opt_, names_));
    MorphismRun run{parse_morphism(text, a.algebra, b.algebra), {}, {}};
    const Reticulation& ra = require_retic(a);
    const Reticulation& rb = require_retic(b);
    run.report = analyze_morphism(run.f, ra, rb, opt_.flags);
    run.json = morphism_json(run.f, run.report, ra, rb);
    return run;
  }

  std::vector<const AlgebraAnalysis*> algebras() const {
    std::vector<const AlgebraAnalysis*> out;
    for (const auto& k : order_) out.push_back(&cache_.at(k));
    return out;
  }

 private:
  const Options& opt_;
  std::map<std::string, AlgebraAnalysis> cache_;
  std::vector<std::string> order_;
  std::map<std::string, std::string> names_;
};

int cmd_check_morphism(const std::string& path, const Options& opt) {
  Workspace ws(opt);
  const MorphismRun run = ws.morphism(path);
  const MorphismReport& r = run.report;
  const auto& ca = run.f.source();
  std::cout << "morphism " << r.name << " : " << ca.name() << " -> " << run.f.target().name()
            << "\n";
  std::cout << "FRet: " << yes_no(r.fret.holds);
  if (r.fret.witness) {
    const auto& ws_ = run.json["fret"]["witness"];
    std::cout << " (witness " << ws_[0].get<std::string>() << " ≡ " << ws_[1].get<std::string>()
              << ")";
  }
  std::cout << "\n";
  if (r.fret.holds) {
    const auto& p = r.fret.preserves;
    std::cout << "L(f) preserves 0/join/meet/1: " << yes_no(p.zero) << "/" << yes_no(p.join) << "/"
              << yes_no(p.meet) << "/" << yes_no(p.one) << "\n";
    std::cout << "L(f) injective/surjective: " << yes_no(p.injective) << "/"
              << yes_no(p.surjective) << "\n";
    std::cout << "B(L(f)) onto B(L(B)): " << yes_no(r.fret.boolean.onto_center) << "\n";
  }
  std::cout << "admissible: " << yes_no(r.admfret.admissible()) << " (conditions "
            << bits(r.admfret.conditions) << ")\n";
  std::cout << "FBC: " << yes_no(r.fbc.holds()) << " (FBC1 " << yes_no(r.fbc.fbc1) << ", FBC2 "
            << yes_no(r.fbc.fbc2) << (r.fbc.applicable ? "" : ", hypotheses fail") << ")\n";
  std::cout << "GU/GD/LO: " << yes_no(r.chain.gu) << "/" << yes_no(r.chain.gd) << "/"
            << yes_no(r.chain.lo) << "\n";
  if (r.chain.id)
    std::cout << "Id-GU/Id-GD/Id-LO: " << yes_no(r.chain.id->id_gu) << "/"
              << yes_no(r.chain.id->id_gd) << "/" << yes_no(r.chain.id->id_lo) << "\n";
  std::cout << "dual difference preserved: "
            << (r.dotminus ? yes_no(*r.dotminus) : "undefined") << "\n";
  for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
  write_json(opt, run.json);
  return 0;
}

int cmd_report(const std::vector<std::string>& paths, const Options& opt) {
  Workspace ws(opt);
  std::vector<std::string> mor_paths;
  for (const auto& p : paths) {
    if (fs::path(p).extension() == ".mor")
      mor_paths.push_back(p);
    else
      ws.algebra(p);
  }
  std::vector<std::string> discrepancies;
  Json morphisms = Json::array();
  for (const auto& p : mor_paths) {
    MorphismRun run = ws.morphism(p);
    const std::string who = run.report.name + " (" + run.f.source().name() + " -> " +
                            run.f.target().name() + ")";
    for (const auto& n : run.report.notes) discrepancies.push_back(who + ": " + n);
    morphisms.push_back(std::move(run.json));
  }
  Json algebras = Json::array();
  for (const AlgebraAnalysis* an : ws.algebras())
    algebras.push_back(algebra_summary(*an, opt.flags, discrepancies));
  const Json doc = report_document(opt.flags, std::move(algebras), std::move(morphisms),
                                   discrepancies);
  if (opt.json_path.empty())
    std::cout << doc.dump(2) << "\n";
  else
    write_json(opt, doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Congruence lattices, commutators and reticulations of finite algebras"};
  app.require_subcommand(1);
  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--json", opt.json_path, "Write a JSON report to this path");
    sub->add_flag("--assume-modular", opt.flags.assume_congruence_modular,
                  "Assert a congruence-modular ambient variety");
    sub->add_flag("--assume-semidegenerate", opt.flags.assume_semi_degenerate,
                  "Assert a semi-degenerate ambient variety");
    sub->add_flag("--assume-01", opt.flags.assume_variety_with_01,
                  "Assert a variety with 0 and 1 constants");
    sub->add_flag("--oracle", opt.oracle, "Cross-check Con(A) and commutators by brute force");
  };

  std::string input;
  std::vector<std::string> inputs;
  auto* con = app.add_subcommand("con", "Congruence lattice");
  auto* comm = app.add_subcommand("commutator", "Term-condition commutator table");
  auto* spec = app.add_subcommand("spec", "Prime spectrum and radicals");
  auto* retic = app.add_subcommand("reticulation", "Reticulation lattice L(A)");
  for (auto* sub : {con, comm, spec, retic}) {
    sub->add_option("algebra", input, "Algebra file")->required();
    add_common(sub);
  }
  for (auto* sub : {con, comm, retic})
    sub->add_option("--dot", opt.dot_path, "Write a Hasse diagram in DOT to this path");
  auto* check = app.add_subcommand("check-morphism", "Morphism properties");
  check->add_option("morphism", input, "Morphism file")->required();
  check->add_option("--algebra", opt.algebra_paths, "Algebra files the morphism refers to");
  add_common(check);
  auto* report = app.add_subcommand("report", "Full JSON report over algebra and morphism files");
  report->add_option("files", inputs, "Algebra (.alg) and morphism (.mor) files")->required();
  report->add_option("--algebra", opt.algebra_paths, "Extra algebra files for morphisms");
  add_common(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "E:UsageError: " << e.what() << "\n";
    return 1;
  }

  try {
    if (con->parsed()) return cmd_con(input, opt);
    if (comm->parsed()) return cmd_commutator(input, opt);
    if (spec->parsed()) return cmd_spec(input, opt);
    if (retic->parsed()) return cmd_reticulation(input, opt);
    if (check->parsed()) return cmd_check_morphism(input, opt);
    return cmd_report(inputs, opt);
  } catch (const Error& e) {
    std::cerr << "E:" << to_string(e.code()) << ": " << e.what() << "\n";
    return is_anomaly(e.code()) ? 2 : 1;
  }
}
