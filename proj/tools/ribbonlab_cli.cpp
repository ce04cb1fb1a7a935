// ribbonlab command-line front end.
//
// Subcommands:
//   catalog jimbo|sos   generate a built-in model file
//   check               run verification suites on a model file
//   drinfeld            closure forms and the four edge operators
//   ribbon              ribbon/modified-ribbon solutions and their criteria
//   invariant           framed link invariants of braid closures
//
// Exit codes: 0 success / all checks passed, 1 check failure or computation
// error, 2 malformed input (file parse or parameters).  The environment
// variable RIBBONLAB_TOL overrides the default tolerance; --tol overrides
// both.  Reports embed the run configuration and a content hash of the input
// model so numeric claims are reproducible.

#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ribbonlab/catalog.hpp"
#include "ribbonlab/drinfeld.hpp"
#include "ribbonlab/invariants.hpp"
#include "ribbonlab/numerics.hpp"
#include "ribbonlab/ribbon.hpp"
#include "ribbonlab/verify.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace ribbonlab;

namespace {

// ---------------------------------------------------------------------------
// Small utilities

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string fnv1a64_hex(const std::string& bytes) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::Parse, "cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "re" or "re,im".
Complex parse_complex(const std::string& text, const std::string& what) {
  std::string s = text;
  double re = 0.0, im = 0.0;
  std::size_t comma = s.find(',');
  try {
    std::size_t used = 0;
    re = std::stod(s.substr(0, comma), &used);
    if (comma == std::string::npos) {
      if (used != s.size())
        throw Error(ErrorKind::BadParams, what + ": trailing characters");
    } else {
      std::string rest = s.substr(comma + 1);
      im = std::stod(rest, &used);
      if (used != rest.size())
        throw Error(ErrorKind::BadParams, what + ": trailing characters");
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorKind::BadParams,
                what + ": expected 're' or 're,im', got '" + text + "'");
  }
  return Complex(re, im);
}

ordered_json complex_json(Complex z) {
  return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json check_json(const CheckReport& r) {
  ordered_json j{{"check", r.check}, {"pass", r.pass},
                 {"residual", r.residual}};
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

// ---------------------------------------------------------------------------
// Run configuration shared by all subcommands

struct CliConfig {
  double tol = kDefaultTol;
  double cluster_radius = kDefaultClusterRadius;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "json";
  std::string report_path;  // empty: print to stdout
  bool tol_set = false;
};

void add_common_options(CLI::App* cmd, CliConfig* cfg) {
  cmd->add_option("--tol", cfg->tol,
                  "check tolerance (default 1e-9; env RIBBONLAB_TOL)")
      ->check(CLI::PositiveNumber)
      ->each([cfg](const std::string&) { cfg->tol_set = true; });
  cmd->add_option("--cluster-radius", cfg->cluster_radius,
                  "eigenvalue clustering radius (default 1e-7)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg->seed, "seed for randomized suites");
  cmd->add_option("--format", cfg->format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--report", cfg->report_path,
                  "write the report to this file instead of stdout");
}

void apply_env_tol(CliConfig* cfg) {
  if (cfg->tol_set) return;
  if (const char* env = std::getenv("RIBBONLAB_TOL")) {
    try {
      double v = std::stod(env);
      if (v > 0) cfg->tol = v;
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadParams,
                  std::string("RIBBONLAB_TOL is not a number: '") + env + "'");
    }
  }
}

ordered_json run_config_json(const CliConfig& cfg) {
  return ordered_json{{"tolerance", cfg.tol},
                      {"cluster_radius", cfg.cluster_radius},
                      {"seed", cfg.seed},
                      {"format", cfg.format}};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

// Flattens a report into "key,value" CSV rows; checks get their own columns.
std::string report_csv(const ordered_json& rep) {
  std::ostringstream out;
  if (rep.contains("checks")) {
    out << "check,pass,residual,witness\n";
    for (const auto& c : rep["checks"]) {
      out << csv_escape(c["check"].get<std::string>()) << ','
          << (c["pass"].get<bool>() ? "true" : "false") << ','
          << c["residual"].get<double>() << ','
          << (c.contains("witness")
                  ? csv_escape(c["witness"].get<std::string>())
                  : "")
          << '\n';
    }
    return out.str();
  }
  out << "key,value\n";
  for (const auto& [key, val] : rep.items()) {
    if (val.is_structured()) continue;
    out << csv_escape(key) << ',' << val.dump() << '\n';
  }
  return out.str();
}

void emit_report(const CliConfig& cfg, const ordered_json& rep) {
  std::string text =
      cfg.format == "csv" ? report_csv(rep) : rep.dump(2) + "\n";
  if (cfg.report_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.report_path, std::ios::binary);
  if (!out)
    throw Error(ErrorKind::BadParams,
                "cannot write report file '" + cfg.report_path + "'");
  out << text;
  std::cout << "report written to " << cfg.report_path << "\n";
}

// Loads a model and records its provenance block.
struct LoadedModel {
  ModelFile file;
  ordered_json provenance;
};

LoadedModel load_with_hash(const std::string& path) {
  std::string bytes = read_file(path);
  LoadedModel out;
  out.file = load_model_json(bytes);
  out.provenance =
      ordered_json{{"path", path}, {"content_hash", fnv1a64_hex(bytes)}};
  return out;
}

EdgeOperator diagonal_edge_operator(const FaceModel& m,
                                    const std::vector<Complex>& diag) {
  auto s1 = PathSpace::enumerate(m.graph_ptr(), 1);
  if (static_cast<int>(diag.size()) != s1->dim())
    throw Error(ErrorKind::BadParams,
                "metadata diagonal length does not match the edge count");
  Matrix mat = Matrix::Zero(s1->dim(), s1->dim());
  for (int i = 0; i < s1->dim(); ++i) mat(i, i) = diag[i];
  return EdgeOperator(s1, std::move(mat));
}

const ModelMetadata& require_metadata(const ModelFile& mf,
                                      const std::string& need) {
  if (!mf.metadata)
    throw Error(ErrorKind::BadParams,
                "model file has no metadata; " + need +
                    " requires a catalog-generated model or explicit flags");
  return *mf.metadata;
}

// ---------------------------------------------------------------------------
// catalog

int cmd_catalog_jimbo(const JimboParams& params, const std::string& out_path) {
  ModelFile mf = jimbo_model(params);
  std::string text = save_model_json(mf);
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    save_model_file(mf, out_path);
    std::cout << "model written to " << out_path << "\n";
  }
  return 0;
}

int cmd_catalog_sos(const SOSParams& params, const std::string& out_path) {
  ModelFile mf = sos_model(params);
  std::string text = save_model_json(mf);
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    save_model_file(mf, out_path);
    std::cout << "model written to " << out_path << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// check

struct CheckArgs {
  std::string model_path;
  std::vector<std::string> suites;
  bool lambda_from_meta = false;
  std::string lambda_text, q_text, hecke_a_text, hecke_b_text;
};

int cmd_check(const CheckArgs& args, const CliConfig& cfg) {
  LoadedModel lm = load_with_hash(args.model_path);
  const FaceModel& model = lm.file.model;

  std::vector<std::string> suites = args.suites;
  if (suites.empty()) suites = {"all"};
  auto explicitly = [&suites](const char* name) {
    for (const auto& s : suites)
      if (s == name) return true;
    return false;
  };
  auto wants = [&suites](const char* name) {
    for (const auto& s : suites)
      if (s == name || s == "all") return true;
    return false;
  };

  std::vector<CheckReport> checks;
  auto fail_as_report = [&checks](const std::string& name,
                                  const Error& err) {
    CheckReport rep;
    rep.check = name;
    rep.pass = false;
    rep.residual = 1.0;
    rep.witness = err.what();
    checks.push_back(std::move(rep));
  };

  if (wants("ybe")) checks.push_back(check_star_triangular(model, cfg.tol));

  std::optional<LyubashenkoDouble> dbl;
  if (wants("closable")) {
    try {
      dbl.emplace(build_lyubashenko_double(model, cfg.tol));
      CheckReport rep;
      rep.check = "closable";
      rep.pass = true;
      rep.residual = 0.0;
      checks.push_back(rep);
      checks.push_back(check_double_star_triangular(*dbl, cfg.tol));
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NotClosable) throw;
      fail_as_report("closable", err);
    }
  }

  if (wants("hecke")) {
    std::optional<Complex> a, b;
    if (!args.hecke_a_text.empty() || !args.hecke_b_text.empty()) {
      if (args.hecke_a_text.empty() || args.hecke_b_text.empty())
        throw Error(ErrorKind::BadParams,
                    "--hecke-a and --hecke-b must be given together");
      a = parse_complex(args.hecke_a_text, "--hecke-a");
      b = parse_complex(args.hecke_b_text, "--hecke-b");
    } else if (lm.file.metadata && lm.file.metadata->hecke_a &&
               lm.file.metadata->hecke_b) {
      a = lm.file.metadata->hecke_a;
      b = lm.file.metadata->hecke_b;
    } else if (explicitly("hecke")) {
      throw Error(ErrorKind::BadParams,
                  "no quadratic eigenvalue pair available; pass "
                  "--hecke-a/--hecke-b");
    }
    // under --suite all, models without a quadratic pair skip the suite
    if (a && b) checks.push_back(check_hecke(model, *a, *b, cfg.tol));
  }

  if (wants("bmw")) {
    std::optional<Complex> lambda, q;
    if (!args.lambda_text.empty()) {
      lambda = parse_complex(args.lambda_text, "--lambda");
    } else if (args.lambda_from_meta || !explicitly("bmw")) {
      if (lm.file.metadata && lm.file.metadata->lambda)
        lambda = lm.file.metadata->lambda;
      else if (args.lambda_from_meta)
        throw Error(ErrorKind::BadParams, "metadata carries no lambda");
    } else {
      throw Error(ErrorKind::BadParams,
                  "suite 'bmw' needs --lambda or --lambda-from-meta");
    }
    if (!args.q_text.empty()) {
      q = parse_complex(args.q_text, "--q");
    } else if (lm.file.metadata) {
      auto it = lm.file.metadata->params.find("q");
      if (it != lm.file.metadata->params.end()) q = it->second;
    }
    if (lambda && !q)
      throw Error(ErrorKind::BadParams, "metadata carries no q; pass --q");
    // under --suite all, models without a cubic parameter skip the suite
    if (lambda && q) {
      try {
        for (auto& rep : check_bmw(model, *lambda, *q, cfg.tol))
          checks.push_back(std::move(rep));
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::MuZero) throw;
        fail_as_report("bmw", err);
      }
    }
  }

  if (wants("glf")) {
    const ModelMetadata& md = require_metadata(lm.file, "suite 'glf'");
    if (!md.m_plus || !md.m_minus)
      throw Error(ErrorKind::BadParams,
                  "metadata carries no modified-ribbon diagonals");
    CheckReport plus =
        check_glf_commutant(model, diagonal_edge_operator(model, *md.m_plus),
                            cfg.tol);
    plus.check = "glf:m-plus";
    checks.push_back(std::move(plus));
    CheckReport minus =
        check_glf_commutant(model, diagonal_edge_operator(model, *md.m_minus),
                            cfg.tol);
    minus.check = "glf:m-minus";
    checks.push_back(std::move(minus));
  }

  ordered_json extra = ordered_json::object();
  if (wants("enhancement")) {
    const ModelMetadata& md = require_metadata(lm.file, "suite 'enhancement'");
    if (!md.m_plus)
      throw Error(ErrorKind::BadParams,
                  "metadata carries no modified-ribbon diagonal");
    try {
      EnhancementConstants ec = enhancement_constants(
          model, diagonal_edge_operator(model, *md.m_plus), cfg.tol);
      CheckReport rep;
      rep.check = "enhancement";
      rep.pass = true;
      rep.residual = std::max(ec.residual_plus, ec.residual_minus);
      checks.push_back(rep);
      extra["enhancement"] = ordered_json{
          {"c_plus", complex_json(ec.c_plus)},
          {"c_minus", complex_json(ec.c_minus)},
          {"residual_plus", ec.residual_plus},
          {"residual_minus", ec.residual_minus}};
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NotEnhanced) throw;
      fail_as_report("enhancement", err);
    }
  }

  bool all_pass = true;
  ordered_json jchecks = ordered_json::array();
  for (const auto& rep : checks) {
    all_pass = all_pass && rep.pass;
    jchecks.push_back(check_json(rep));
  }

  ordered_json report{{"command", "check"},
                      {"run_config", run_config_json(cfg)},
                      {"model", lm.provenance},
                      {"suites", suites},
                      {"all_pass", all_pass},
                      {"checks", std::move(jchecks)}};
  for (auto& [k, v] : extra.items()) report[k] = v;
  emit_report(cfg, report);
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// drinfeld

int cmd_drinfeld(const std::string& model_path, const CliConfig& cfg) {
  LoadedModel lm = load_with_hash(model_path);
  const FaceModel& model = lm.file.model;

  LyubashenkoDouble dbl = build_lyubashenko_double(model, cfg.tol);
  DrinfeldOperators ops = drinfeld_operators(model, dbl, cfg.tol);
  std::vector<CheckReport> checks = uu_commutation_check(model, ops, cfg.tol);

  ordered_json edge_order = ordered_json::array();
  const OrientedGraph& g = model.graph();
  for (int e = 0; e < g.edge_count(); ++e) edge_order.push_back(g.edge_id(e));

  bool all_pass = true;
  ordered_json jchecks = ordered_json::array();
  for (const auto& rep : checks) {
    all_pass = all_pass && rep.pass;
    jchecks.push_back(check_json(rep));
  }

  ordered_json report{
      {"command", "drinfeld"},
      {"run_config", run_config_json(cfg)},
      {"model", lm.provenance},
      {"edge_order", std::move(edge_order)},
      {"inverse_residual", ops.inverse_residual},
      {"commutation_residual", ops.commutation_residual},
      {"all_pass", all_pass},
      {"checks", std::move(jchecks)},
      {"u1", matrix_json(ops.u1.matrix())},
      {"u1inv", matrix_json(ops.u1inv.matrix())},
      {"u2", matrix_json(ops.u2.matrix())},
      {"u2inv", matrix_json(ops.u2inv.matrix())},
      {"ribbon_target", matrix_json(ops.ribbon_target().matrix())},
      {"mrib_target", matrix_json(ops.mrib_target().matrix())}};
  emit_report(cfg, report);
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// ribbon

int cmd_ribbon(const std::string& model_path, const CliConfig& cfg) {
  LoadedModel lm = load_with_hash(model_path);
  const FaceModel& model = lm.file.model;

  LyubashenkoDouble dbl = build_lyubashenko_double(model, cfg.tol);
  DrinfeldOperators ops = drinfeld_operators(model, dbl, cfg.tol);
  std::vector<RibbonSolution> sols =
      ribbon_solve(ops, cfg.cluster_radius, cfg.tol);

  auto s1 = PathSpace::enumerate(model.graph_ptr(), 1);
  std::vector<Matrix> gens = edge_algebra_generators(model, dbl);
  int commutant_dim = joint_commutant_dimension(*s1, gens, cfg.tol);
  int block_count = static_cast<int>(s1->blocks().size());

  ordered_json edge_order = ordered_json::array();
  const OrientedGraph& g = model.graph();
  for (int e = 0; e < g.edge_count(); ++e) edge_order.push_back(g.edge_id(e));

  std::vector<std::pair<std::string, GroupLikeVector>> ideals;
  std::optional<std::vector<Complex>> s2_diag;
  if (lm.file.metadata) {
    const ModelMetadata& md = *lm.file.metadata;
    s2_diag = md.s2;
    GroupLikeVector unit = unit_vector(g);
    if (md.det) ideals.push_back({"det-1", glv_minus(*md.det, unit)});
    if (md.quad) ideals.push_back({"quad-1", glv_minus(*md.quad, unit)});
  }

  bool all_pass = true;
  ordered_json jsols = ordered_json::array();
  for (const auto& sol : sols) {
    all_pass = all_pass && sol.v2_residual < cfg.tol &&
               sol.m2_residual < cfg.tol;
    ordered_json js{{"sign", sol.sign},
                    {"v2_residual", sol.v2_residual},
                    {"m2_residual", sol.m2_residual},
                    {"v", matrix_json(sol.v.matrix())},
                    {"m", matrix_json(sol.m.matrix())}};

    CheckReport glf = check_glf_commutant(model, sol.m, cfg.tol);
    glf.check = "glf:modified-ribbon";
    all_pass = all_pass && glf.pass;
    ordered_json jchecks = ordered_json::array();
    jchecks.push_back(check_json(glf));

    if (s2_diag) {
      for (const auto& rep : mcrit_check(sol.m, *s2_diag, cfg.tol)) {
        all_pass = all_pass && rep.pass;
        jchecks.push_back(check_json(rep));
      }
    }
    js["checks"] = std::move(jchecks);

    if (!ideals.empty()) {
      ordered_json jquot = ordered_json::array();
      for (const auto& qr : quotient_vanishing(sol.m, ideals, cfg.tol)) {
        jquot.push_back(ordered_json{{"ideal", qr.ideal},
                                     {"value", complex_json(qr.value)},
                                     {"vanishes", qr.vanishes}});
      }
      js["quotients"] = std::move(jquot);
    }
    jsols.push_back(std::move(js));
  }

  ordered_json report{
      {"command", "ribbon"},
      {"run_config", run_config_json(cfg)},
      {"model", lm.provenance},
      {"edge_order", std::move(edge_order)},
      {"edge_commutant_dimension", commutant_dim},
      {"edge_block_count", block_count},
      {"solutions_exhaustive_evidence", commutant_dim <= block_count},
      {"all_pass", all_pass},
      {"solutions", std::move(jsols)}};
  emit_report(cfg, report);
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// invariant

struct InvariantArgs {
  std::string model_path;
  std::string mrib = "plus";
  std::string braid_text;
  int strands = 1;
  bool markov_suite = false;
  int markov_trials = 20;
};

ordered_json vertex_map_json(const OrientedGraph& g,
                             const std::map<int, Complex>& values) {
  ordered_json out = ordered_json::object();
  for (const auto& [v, val] : values)
    out[g.vertex_id(v)] = complex_json(val);
  return out;
}

int cmd_invariant(const InvariantArgs& args, const CliConfig& cfg) {
  LoadedModel lm = load_with_hash(args.model_path);
  const FaceModel& model = lm.file.model;
  const ModelMetadata& md = require_metadata(lm.file, "invariant evaluation");

  const std::vector<Complex>* diag = nullptr;
  if (args.mrib == "plus") {
    if (!md.m_plus)
      throw Error(ErrorKind::BadParams, "metadata carries no m_plus diagonal");
    diag = &*md.m_plus;
  } else {
    if (!md.m_minus)
      throw Error(ErrorKind::BadParams, "metadata carries no m_minus diagonal");
    diag = &*md.m_minus;
  }
  EdgeOperator m_op = diagonal_edge_operator(model, *diag);

  BraidWord beta = parse_braid_word(args.braid_text, args.strands);
  InvariantReport inv = link_invariant(model, m_op, beta, cfg.tol);

  const OrientedGraph& g = model.graph();
  ordered_json report{
      {"command", "invariant"},
      {"run_config", run_config_json(cfg)},
      {"model", lm.provenance},
      {"mrib", args.mrib},
      {"strands", beta.strands},
      {"word", args.braid_text},
      {"writhe", beta.writhe()},
      {"c_plus", complex_json(inv.c_plus)},
      {"c_minus", complex_json(inv.c_minus)},
      {"framed", vertex_map_json(g, inv.framed)},
      {"corrected", vertex_map_json(g, inv.corrected)},
      {"unknot", vertex_map_json(g, inv.unknot)},
      {"normalized", vertex_map_json(g, inv.normalized)},
      {"notices", inv.notices}};

  int exit_code = 0;
  if (args.markov_suite) {
    CheckReport suite = markov_move_suite(model, m_op, beta,
                                          args.markov_trials, cfg.seed,
                                          cfg.tol);
    report["markov_suite"] = check_json(suite);
    if (!suite.pass) exit_code = 1;
  }
  emit_report(cfg, report);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice face/vertex models: braid checks, closure operators, "
               "ribbon structure, and framed link invariants"};
  app.require_subcommand(1);

  CliConfig cfg;

  // --- catalog
  auto* catalog = app.add_subcommand("catalog", "generate a built-in model");
  catalog->require_subcommand(1);

  JimboParams jp;
  std::string jimbo_type = "A", jimbo_q = "1.2", jimbo_qsqrt, jimbo_eta = "1";
  std::string catalog_out;
  auto* jimbo = catalog->add_subcommand("jimbo", "classical-series vertex model");
  jimbo->add_option("--type", jimbo_type, "series letter A/B/C/D")->required();
  jimbo->add_option("--rank", jp.rank, "series rank (>= 1 for A, >= 2 else)")
      ->required();
  jimbo->add_option("--q", jimbo_q, "deformation parameter ('re' or 're,im')");
  jimbo->add_option("--q-sqrt", jimbo_qsqrt,
                    "square root of q (required for type B)");
  jimbo->add_option("--eta", jimbo_eta, "global weight scale");
  jimbo->add_option("--out", catalog_out, "output model file");

  SOSParams sp;
  auto* sos = catalog->add_subcommand("sos", "height model on partitions");
  sos->add_option("--n", sp.n, "number of rows N (>= 2)")->required();
  sos->add_option("--level", sp.level, "level L (>= 2)")->required();
  sos->add_option("--t-num", sp.t_num,
                  "t = exp(i pi t_num / (n + level)), primitivity checked");
  sos->add_option("--eps", sp.eps, "sign epsilon (+1 or -1)");
  sos->add_option("--zeta-root", sp.zeta_root,
                  "which solution of zeta^n = eps^{n-1} t to use (0..n-1)");
  sos->add_option("--out", catalog_out, "output model file");

  // --- check
  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "run verification suites");
  check->add_option("model", check_args.model_path, "model JSON file")
      ->required();
  check->add_option("--suite", check_args.suites,
                    "suites to run (repeatable)")
      ->check(CLI::IsMember({"ybe", "closable", "hecke", "bmw", "glf",
                             "enhancement", "all"}));
  check->add_flag("--lambda-from-meta", check_args.lambda_from_meta,
                  "take the cubic eigenvalue parameter from metadata");
  check->add_option("--lambda", check_args.lambda_text,
                    "explicit cubic eigenvalue parameter ('re' or 're,im')");
  check->add_option("--q", check_args.q_text,
                    "explicit q for the bmw suite ('re' or 're,im')");
  check->add_option("--hecke-a", check_args.hecke_a_text,
                    "first quadratic eigenvalue ('re' or 're,im')");
  check->add_option("--hecke-b", check_args.hecke_b_text,
                    "second quadratic eigenvalue ('re' or 're,im')");
  add_common_options(check, &cfg);

  // --- drinfeld
  std::string drinfeld_model;
  auto* drinfeld = app.add_subcommand(
      "drinfeld", "closure forms and the four edge operators");
  drinfeld->add_option("model", drinfeld_model, "model JSON file")->required();
  add_common_options(drinfeld, &cfg);

  // --- ribbon
  std::string ribbon_model;
  auto* ribbon = app.add_subcommand(
      "ribbon", "ribbon/modified-ribbon solutions and criteria");
  ribbon->add_option("model", ribbon_model, "model JSON file")->required();
  add_common_options(ribbon, &cfg);

  // --- invariant
  InvariantArgs inv_args;
  auto* invariant =
      app.add_subcommand("invariant", "framed link invariant of a braid closure");
  invariant->add_option("--model", inv_args.model_path, "model JSON file")
      ->required();
  invariant->add_option("--mrib", inv_args.mrib,
                        "which modified ribbon diagonal to use")
      ->check(CLI::IsMember({"plus", "minus"}));
  invariant->add_option("--braid", inv_args.braid_text,
                        "braid word, whitespace-separated signed generators");
  invariant->add_option("--strands", inv_args.strands, "strand count")
      ->required();
  invariant->add_flag("--markov-suite", inv_args.markov_suite,
                      "append a randomized Markov-move drift report");
  invariant->add_option("--markov-trials", inv_args.markov_trials,
                        "trial count for the Markov suite");
  add_common_options(invariant, &cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    apply_env_tol(&cfg);
    if (jimbo->parsed()) {
      jp.type = jimbo_type.empty() ? '\0' : jimbo_type[0];
      if (jimbo_type.size() != 1) jp.type = '\0';
      jp.q = parse_complex(jimbo_q, "--q");
      jp.eta = parse_complex(jimbo_eta, "--eta");
      jp.q_sqrt = jimbo_qsqrt.empty() ? Complex(0.0, 0.0)
                                      : parse_complex(jimbo_qsqrt, "--q-sqrt");
      return cmd_catalog_jimbo(jp, catalog_out);
    }
    if (sos->parsed()) return cmd_catalog_sos(sp, catalog_out);
    if (check->parsed()) return cmd_check(check_args, cfg);
    if (drinfeld->parsed()) return cmd_drinfeld(drinfeld_model, cfg);
    if (ribbon->parsed()) return cmd_ribbon(ribbon_model, cfg);
    if (invariant->parsed()) return cmd_invariant(inv_args, cfg);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return (err.kind() == ErrorKind::Parse ||
            err.kind() == ErrorKind::BadParams)
               ? 2
               : 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
