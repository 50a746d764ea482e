#include "leibcx/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "leibcx/catalog.hpp"
#include "leibcx/chain.hpp"
#include "leibcx/cohomology.hpp"
#include "leibcx/dgla.hpp"
#include "leibcx/io.hpp"
#include "leibcx/suites.hpp"

namespace leibcx {

namespace {

struct Options {
  std::string command;
  std::string source;
  std::string cocycle;
  std::string suite = "all";
  std::string format = "text";
  std::string output;
  int max_degree = 4;
  bool loday = false;
};

Json source_json(const std::string& source, const LeibnizAlgebra& a) {
  const bool builtin = source.rfind("catalog:", 0) == 0;
  const std::string bytes = builtin ? algebra_to_json(a).dump() : read_file(source);
  return {{"source", source}, {"name", a.name()}, {"sha256", sha256_hex(bytes)}};
}

Json checks_json(const std::vector<CheckResult>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    Json j = {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"informational", c.informational}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    out.push_back(j);
  }
  return out;
}

Json sizes_json(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

// Text rendering of a report: scalars and short arrays, then check verdicts.
void render_text(const Json& report, std::ostream& os) {
  os << report["command"].get<std::string>();
  if (report.contains("inputs") && report["inputs"].contains("algebra")) {
    os << "  " << report["inputs"]["algebra"]["name"].get<std::string>();
  }
  if (report.contains("max_degree")) os << "  (max degree " << report["max_degree"] << ")";
  os << "\n";
  if (report.contains("tables")) {
    for (const auto& [key, value] : report["tables"].items()) {
      if (value.is_array() && !value.empty() && value[0].is_number()) {
        os << "  " << key << ":";
        for (const auto& x : value) os << " " << x;
        os << "\n";
      } else if (!value.is_array() && !value.is_object()) {
        os << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      } else if (value.is_array()) {
        os << "  " << key << ": " << value.dump() << "\n";
      }
    }
  }
  if (report.contains("checks")) {
    for (const auto& c : report["checks"]) {
      const bool passed = c["passed"].get<bool>();
      const char* tag = c["informational"].get<bool>() ? "INFO" : (passed ? "PASS" : "FAIL");
      os << "  [" << tag << "] " << c["name"].get<std::string>() << "  " << c["detail"].get<std::string>();
      if (c.contains("witness")) os << "  witness: " << c["witness"].get<std::string>();
      os << "\n";
    }
  }
  os << (report["passed"].get<bool>() ? "result: pass\n" : "result: FAIL\n");
}

std::string triple_text(int i, int j, int k) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
}

Json cmd_validate(const LeibnizAlgebra& a, std::vector<CheckResult>& checks) {
  const ValidationReport v = validate_leibniz(a);
  Json failures = Json::array();
  for (const auto& f : v.failures) {
    failures.push_back({{"triple", Json::array({f.i + 1, f.j + 1, f.k + 1})},
                        {"lhs", vector_to_json(f.lhs)},
                        {"rhs", vector_to_json(f.rhs)}});
  }
  CheckResult c{"leibniz.identity", v.passed, "[x,[y,z]] = [[x,y],z] + [y,[x,z]] on all basis triples", "", false};
  if (!v.passed) c.witness = triple_text(v.failures[0].i, v.failures[0].j, v.failures[0].k);
  checks.push_back(c);
  return {{"dim", a.dim()}, {"antisymmetric", is_antisymmetric(a)}, {"failures", failures},
          {"failing_triples", v.failures.size()}};
}

Json cmd_liezation(const LeibnizAlgebra& a) {
  require_leibniz(a);
  const Liezation lz = liezation(a);
  Json ideal = Json::array();
  for (const auto& v : lz.ideal.vectors) ideal.push_back(vector_to_json(v.to_dense(lz.ideal.ambient_dim)));
  Json complement = Json::array();
  for (int c : lz.complement) complement.push_back(c + 1);
  Json projection = Json::array();
  for (const auto& row : lz.projection) projection.push_back(vector_to_json(row));
  return {{"dim_ideal", lz.ideal.dim()},
          {"dim_g_lie", lz.complement.size()},
          {"ideal_basis", ideal},
          {"complement", complement},
          {"projection", projection},
          {"quotient", algebra_to_json(lz.quotient)}};
}

Json cmd_homology(const LeibnizAlgebra& a, const Options& o, bool json) {
  const ComplexReport r = homology(a, o.max_degree, ComplexKind::FreeLie);
  Json t = {{"chain_dims", sizes_json(r.chain_dims)},
            {"boundary_ranks", sizes_json(r.boundary_ranks)},
            {"HA", sizes_json(r.homology)}};
  if (o.loday) {
    const ComplexReport l = homology(a, o.max_degree, ComplexKind::Loday);
    t["loday_chain_dims"] = sizes_json(l.chain_dims);
    t["loday_boundary_ranks"] = sizes_json(l.boundary_ranks);
    t["HL"] = sizes_json(l.homology);
  }
  if (json) {
    const FreeLieTower tower(a.dim(), o.max_degree);
    Json basis = Json::array();
    Json boundaries = Json::array();
    for (int n = 1; n <= o.max_degree; ++n) {
      Json words = Json::array();
      for (const Word& w : tower.slice(n).basis_words()) {
        Json jw = Json::array();
        for (int x : w) jw.push_back(x + 1);
        words.push_back(jw);
      }
      basis.push_back(words);
      if (n >= 2) {
        boundaries.push_back({{"from", n}, {"to", n - 1}, {"matrix", matrix_to_json(boundary_d(a, tower, n).matrix)}});
      }
    }
    t["basis_words"] = basis;
    t["boundaries"] = boundaries;
  }
  return t;
}

Json cmd_cohomology(const LeibnizAlgebra& a, const Options& o, std::vector<CheckResult>& checks) {
  const CohomologyReport r = cohomology(a, o.max_degree);
  Json t = {{"cochain_dims", sizes_json(r.cochain_dims)}, {"ranks", sizes_json(r.ranks)},
            {"HA_upper", sizes_json(r.cohomology)}};
  if (!o.cocycle.empty()) {
    const Cochain h = load_cochain(o.cocycle, a.dim());
    if (h.degree() != 2) throw InputError(o.cocycle + ": extension cocycle must have degree 2");
    const ExtensionClass c = classify_extension(a, h);
    Json cls = {{"anti_cyclic", c.anti_cyclic}, {"closed", c.closed}, {"classifiable", c.classifiable},
                {"HA2_dim", c.ha2_dim}};
    if (c.classifiable) {
      cls["trivial"] = c.trivial;
      cls["coordinates"] = vector_to_json(c.coordinates);
      cls["label"] = vector_to_json(c.label);
      cls["representative"] = cochain_to_json(*c.representative);
    }
    t["extension"] = cls;
    CheckResult k{"extension.classifiable", c.classifiable,
                  "H is anti-cyclic and closed, so it defines a class in HA^2", "", false};
    if (!c.anti_cyclic) k.witness = "H is not anti-cyclic";
    else if (!c.closed) k.witness = "b H != 0";
    checks.push_back(k);
  }
  return t;
}

Json cmd_double(const LeibnizAlgebra& a, const Options& o, std::vector<CheckResult>& checks, Json& inputs) {
  require_leibniz(a);
  Cochain h(a.dim(), 2);
  if (!o.cocycle.empty()) {
    h = load_cochain(o.cocycle, a.dim());
    inputs["cocycle"] = {{"source", o.cocycle}, {"sha256", sha256_hex(read_file(o.cocycle))}};
  }
  const DoubleResult d = double_extension(ExtensionDatum(a, h));
  CheckResult lv{"double.leibniz", d.leibniz.passed, "the extended bracket on g + g* is Leibniz", "", false};
  if (!d.leibniz.passed) {
    const auto& f = d.leibniz.failures.front();
    lv.witness = triple_text(f.i, f.j, f.k);
  }
  checks.push_back(lv);
  const AntiInvarianceReport ai = check_anti_invariance(d.algebra, canonical_omega(a.dim()));
  CheckResult ac{"double.anti_invariance", ai.passed, "the canonical 2-form satisfies both anti-invariance conditions",
                 "", false};
  if (!ai.passed) {
    const auto& f = ai.failures.front();
    ac.witness = "condition " + std::to_string(f.condition) + " at " + triple_text(f.i, f.j, f.k);
  }
  checks.push_back(ac);
  const Json file = algebra_to_json(d.algebra);
  if (!o.output.empty()) {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw InputError("cannot write '" + o.output + "'");
    f << file.dump(2) << "\n";
  }
  return {{"algebra", file}};
}

Json cmd_dr(const LeibnizAlgebra& a, const Options& o, std::vector<CheckResult>& checks) {
  const DGLAPresentation dr(a, o.max_degree);
  Json dims = Json::array();
  for (int c = 0; c <= o.max_degree; ++c) dims.push_back(dr.component_dim(c));
  for (auto& c : verify_dr(dr)) checks.push_back(std::move(c));
  return {{"component_dims", dims}, {"total_dim", dr.total_dim()}};
}

Json cmd_catalog(const std::string& name) {
  if (name.empty()) {
    Json names = Json::array();
    for (const auto& n : catalog_names()) names.push_back(n);
    return {{"names", names}};
  }
  const std::string bare = name.rfind("catalog:", 0) == 0 ? name.substr(8) : name;
  return {{"algebra", algebra_to_json(catalog(bare))}};
}

int execute(const Options& o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const bool json = o.format == "json";
  Json report;
  report["command"] = o.command;
  std::vector<CheckResult> checks;
  Json inputs = Json::object();

  if (o.command == "catalog") {
    report["tables"] = cmd_catalog(o.source);
  } else {
    const LeibnizAlgebra a = load_algebra(o.source);
    inputs["algebra"] = source_json(o.source, a);
    if (o.command == "validate") {
      report["tables"] = cmd_validate(a, checks);
    } else if (o.command == "liezation") {
      report["tables"] = cmd_liezation(a);
    } else if (o.command == "homology") {
      report["max_degree"] = o.max_degree;
      report["tables"] = cmd_homology(a, o, json);
    } else if (o.command == "cohomology") {
      report["max_degree"] = o.max_degree;
      if (!o.cocycle.empty()) {
        inputs["cocycle"] = {{"source", o.cocycle}, {"sha256", sha256_hex(read_file(o.cocycle))}};
      }
      report["tables"] = cmd_cohomology(a, o, checks);
    } else if (o.command == "omega0") {
      const Omega0Result r = omega0(a);
      report["tables"] = {{"dim_omega0", r.dim}, {"relation_rank", r.relations.dim()}};
    } else if (o.command == "double") {
      report["tables"] = cmd_double(a, o, checks, inputs);
    } else if (o.command == "dr") {
      report["max_degree"] = o.max_degree;
      report["tables"] = cmd_dr(a, o, checks);
    } else if (o.command == "check") {
      report["max_degree"] = o.max_degree;
      report["suite"] = o.suite;
      checks = run_suite(o.suite, a, o.max_degree);
    }
  }
  report["inputs"] = inputs;
  report["checks"] = checks_json(checks);
  const bool passed = all_passed(checks);
  report["passed"] = passed;
  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report["timing"] = {{"seconds", std::round(elapsed * 1000.0) / 1000.0}};

  std::ofstream file;
  const bool to_file = !o.output.empty() && o.command != "double";
  if (to_file) {
    file.open(o.output, std::ios::binary);
    if (!file) throw InputError("cannot write '" + o.output + "'");
  }
  std::ostream& sink = to_file ? static_cast<std::ostream&>(file) : out;
  if (json) {
    sink << report.dump(2) << "\n";
  } else {
    render_text(report, sink);
  }
  return passed ? kSuccess : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"leibcx: exact computations with Leibniz algebras", "leibcx"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub, bool needs_source) {
    if (needs_source) {
      sub->add_option("algebra", o.source, "AlgebraFile path or catalog:NAME")->required();
    }
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("-o", o.output, "write the output to FILE");
  };
  auto with_degree = [&](CLI::App* sub) {
    sub->add_option("--max-degree", o.max_degree, "truncation degree N")->check(CLI::Range(1, 8));
  };

  auto* validate = app.add_subcommand("validate", "check the Leibniz identity");
  add_common(validate, true);
  auto* lie = app.add_subcommand("liezation", "symmetric ideal and the quotient Lie algebra");
  add_common(lie, true);
  auto* hom = app.add_subcommand("homology", "HA_n from the free Lie complex");
  add_common(hom, true);
  with_degree(hom);
  hom->add_flag("--loday", o.loday, "also compute the Loday complex");
  auto* coh = app.add_subcommand("cohomology", "HA^n from anti-cyclic cochains");
  add_common(coh, true);
  with_degree(coh);
  coh->add_option("--cocycle", o.cocycle, "classify a degree-2 cocycle file");
  auto* om = app.add_subcommand("omega0", "dimension of Omega^0 for a Lie algebra");
  add_common(om, true);
  auto* dbl = app.add_subcommand("double", "g + g* with the coadjoint action and an optional twist");
  add_common(dbl, true);
  dbl->add_option("--cocycle", o.cocycle, "degree-2 cochain file for the twist");
  auto* dr = app.add_subcommand("dr", "the dg Lie algebra g_Lie + F_Lie g[1]");
  add_common(dr, true);
  with_degree(dr);
  auto* chk = app.add_subcommand("check", "run a verification suite");
  add_common(chk, true);
  with_degree(chk);
  chk->add_option("--suite", o.suite, "complex, subcomplex, dr, anticyclic, dual or all")
      ->check(CLI::IsMember(suite_names()));
  auto* cat = app.add_subcommand("catalog", "list built-in algebras or print one");
  add_common(cat, false);
  cat->add_option("name", o.source, "catalog entry to print");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  for (auto* sub : app.get_subcommands()) o.command = sub->get_name();

  try {
    return execute(o, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace leibcx
