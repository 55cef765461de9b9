// Command-line front end: constructions, degree-set enumeration, encoding,
// local-correction and testing experiments, exhaustive oracles. All output
// is deterministic for a fixed argument list (randomized commands require
// an explicit seed).
//
// Exit codes: 0 result reported, 1 usage/parse error, 2 infeasible
// parameters or an exhaustive guard that was not explicitly raised.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "liftcode/io.hpp"

namespace lc = liftcode;

namespace {

struct GlobalOpts {
  std::string format = "json";
};

void emit_scalar_report(const lc::Json& j, const GlobalOpts& opts) {
  if (opts.format == "tsv") {
    const lc::Json flat = j.flatten();
    for (auto it = flat.begin(); it != flat.end(); ++it) {
      std::cout << it.key() << '\t'
                << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
                << '\n';
    }
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

// (Q, q) integer orders -> tower context F_p <= F_q <= F_Q.
lc::FieldCtxPtr ctx_from_orders(uint32_t Q, uint32_t q) {
  for (uint32_t p : {2u, 3u, 5u}) {
    if (q % p != 0) continue;
    int s = 0;
    uint32_t v = 1;
    while (v < q) {
      v *= p;
      ++s;
    }
    if (v != q) throw lc::UsageError("q must be a power of p in {2,3,5}");
    int n = 0;
    uint64_t w = 1;
    while (w < Q) {
      w *= q;
      ++n;
    }
    if (w != Q) throw lc::UsageError("Q must be a power of q");
    return lc::field_ctx(p, s, std::max(1, n));
  }
  throw lc::UsageError("unsupported field orders");
}

struct CodeSpec {
  uint32_t Q = 4;
  uint32_t q = 2;
  int m = 2;
  int t = 1;
  std::string base = "parity";  // parity | parity-multi | rs
  int rs_degree = -1;
  std::string base_degs;  // comma-separated scalar degrees (univariate)
};

lc::LiftedCode build_code(const CodeSpec& spec) {
  auto ctx = ctx_from_orders(spec.Q, spec.q);
  if (!spec.base_degs.empty()) {
    std::vector<uint32_t> degs;
    std::stringstream ss(spec.base_degs);
    std::string item;
    while (std::getline(ss, item, ',')) degs.push_back(static_cast<uint32_t>(std::stoul(item)));
    lc::BaseCode base{ctx, 1, spec.q, lc::DegreeSet::of_scalars(spec.Q, spec.q, degs),
                      lc::CheckerKind::kNone, 0};
    return lc::LiftedCode(std::move(base), spec.m);
  }
  if (spec.base == "parity") return lc::LiftedCode(lc::base_parity_univariate(ctx), spec.m);
  if (spec.base == "parity-multi")
    return lc::LiftedCode(lc::base_parity_multivariate(ctx, spec.t), spec.m);
  if (spec.base == "rs") {
    if (spec.rs_degree < 0) throw lc::UsageError("rs base requires --d");
    return lc::LiftedCode(lc::base_reed_solomon(ctx, static_cast<uint32_t>(spec.rs_degree)),
                          spec.m);
  }
  throw lc::UsageError("unknown base kind '" + spec.base + "'");
}

void add_code_spec(CLI::App* cmd, CodeSpec& spec) {
  cmd->add_option("--Q", spec.Q, "domain field order");
  cmd->add_option("--q", spec.q, "value field order");
  cmd->add_option("--m", spec.m, "lift dimension");
  cmd->add_option("--t", spec.t, "base arity (parity-multi)");
  cmd->add_option("--base", spec.base, "base code: parity | parity-multi | rs");
  cmd->add_option("--d", spec.rs_degree, "degree bound (rs base)");
  cmd->add_option("--base-degs", spec.base_degs, "explicit univariate base degree set");
}

struct ConstructOpts {
  int theorem = 0;
  uint64_t k = 0;
  int m = 0;
  double eps = 0;
  double delta = 0;
  uint32_t p = 0;
  uint64_t N0 = 0;
  int ell = 0;
  int c = 0;
  int s = 0;
};

void add_construct_opts(CLI::App* cmd, ConstructOpts& opts, bool require_theorem = true) {
  auto* t = cmd->add_option("--theorem", opts.theorem, "construction id 1..4");
  if (require_theorem) t->required();
  cmd->add_option("--k", opts.k, "locality parameter (theorem 1)");
  cmd->add_option("--m", opts.m, "lift dimension");
  cmd->add_option("--eps", opts.eps, "rate / locality target");
  cmd->add_option("--delta", opts.delta, "locality exponent (theorem 4)");
  cmd->add_option("--p", opts.p, "characteristic (theorem 2)");
  cmd->add_option("--N0", opts.N0, "minimum code length");
  cmd->add_option("--ell", opts.ell, "extension degree override");
  cmd->add_option("--c", opts.c, "error exponent (theorem 4)");
  cmd->add_option("--s", opts.s, "field exponent Q = 2^s (theorem 4)");
}

lc::ConstructInputs to_inputs(const ConstructOpts& o) {
  lc::ConstructInputs in;
  in.theorem = o.theorem;
  if (o.k) in.k = o.k;
  if (o.m) in.m = o.m;
  if (o.eps > 0) in.eps = o.eps;
  if (o.delta > 0) in.delta = o.delta;
  if (o.p) in.p = o.p;
  if (o.N0) in.N0 = o.N0;
  if (o.ell) in.ell = o.ell;
  if (o.c) in.c = o.c;
  if (o.s) in.s = o.s;
  return in;
}

lc::Json echo_args(int argc, char** argv) {
  lc::Json args = lc::Json::array();
  for (int i = 1; i < argc; ++i) args.push_back(std::string(argv[i]));
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lifted affine-invariant codes toolkit"};
  app.require_subcommand(1);
  GlobalOpts global;
  app.add_option("--format", global.format, "json | tsv")
      ->check(CLI::IsMember({"json", "tsv"}));

  // params -----------------------------------------------------------------
  ConstructOpts params_opts;
  auto* cmd_params = app.add_subcommand("params", "derive construction parameters");
  add_construct_opts(cmd_params, params_opts);

  // dim / lift-degs ----------------------------------------------------------
  CodeSpec dim_spec;
  auto* cmd_dim = app.add_subcommand("dim", "dimension of a lifted code");
  add_code_spec(cmd_dim, dim_spec);
  ConstructOpts dim_construct;
  add_construct_opts(cmd_dim, dim_construct, /*require_theorem=*/false);

  CodeSpec degs_spec;
  auto* cmd_degs = app.add_subcommand("lift-degs", "lifted degree set and dimension");
  add_code_spec(cmd_degs, degs_spec);
  ConstructOpts degs_construct;
  add_construct_opts(cmd_degs, degs_construct, /*require_theorem=*/false);

  // encode -------------------------------------------------------------------
  CodeSpec encode_spec;
  std::string message_text;
  std::string out_path;
  auto* cmd_encode = app.add_subcommand("encode", "encode per-orbit coefficients");
  add_code_spec(cmd_encode, encode_spec);
  cmd_encode->add_option("--message", message_text,
                         "comma-separated little-endian digit strings, one per orbit")
      ->required();
  cmd_encode->add_option("--out", out_path, "write table JSON here instead of stdout");

  // corrupt --------------------------------------------------------------
  std::string table_path;
  uint64_t corrupt_errors = 0;
  uint64_t seed = 0;
  auto* cmd_corrupt = app.add_subcommand("corrupt", "corrupt a stored table");
  cmd_corrupt->add_option("--table", table_path, "table JSON file")->required();
  cmd_corrupt->add_option("--errors", corrupt_errors, "number of corrupted positions")->required();
  cmd_corrupt->add_option("--seed", seed, "rng seed")->required();
  cmd_corrupt->add_option("--out", out_path, "write corrupted table here instead of stdout");

  // correct ----------------------------------------------------------------
  ConstructOpts correct_construct;
  CodeSpec correct_spec;
  uint64_t mc_trials = 0, mc_errors = 0;
  std::string target_mode = "random";
  auto* cmd_correct = app.add_subcommand("correct", "Monte-Carlo local-correction experiment");
  add_construct_opts(cmd_correct, correct_construct, /*require_theorem=*/false);
  add_code_spec(cmd_correct, correct_spec);
  cmd_correct->add_option("--errors", mc_errors, "corrupted positions per trial")->required();
  cmd_correct->add_option("--trials", mc_trials, "number of trials")->required();
  cmd_correct->add_option("--seed", seed, "rng seed")->required();
  cmd_correct->add_option("--target", target_mode, "corrupted | random");
  std::string corrector = "auto";
  cmd_correct->add_option("--corrector", corrector, "generic | rs | auto");

  // test -------------------------------------------------------------------
  ConstructOpts test_construct;
  CodeSpec test_spec;
  std::string test_scenario = "codeword";
  auto* cmd_test = app.add_subcommand("test", "Monte-Carlo local-testing experiment");
  add_construct_opts(cmd_test, test_construct, /*require_theorem=*/false);
  add_code_spec(cmd_test, test_spec);
  cmd_test->add_option("--scenario", test_scenario, "codeword | flip | random")
      ->check(CLI::IsMember({"codeword", "flip", "random"}));
  cmd_test->add_option("--trials", mc_trials, "number of trials")->required();
  cmd_test->add_option("--seed", seed, "rng seed")->required();

  // distance ---------------------------------------------------------------
  CodeSpec dist_spec;
  int enum_limit_log2 = 24;
  auto* cmd_distance = app.add_subcommand("distance", "exhaustive base and lift distance");
  add_code_spec(cmd_distance, dist_spec);
  cmd_distance->add_option("--enum-limit-log2", enum_limit_log2,
                           "explicit override for the message-enumeration guard");

  // sweep --------------------------------------------------------------
  CodeSpec sweep_spec;
  auto* cmd_sweep = app.add_subcommand("sweep", "distance theorem sweep over valid base sets");
  add_code_spec(cmd_sweep, sweep_spec);
  cmd_sweep->add_option("--enum-limit-log2", enum_limit_log2,
                        "explicit override for the message-enumeration guard");

  // nikodym ------------------------------------------------------------
  uint32_t nik_q = 4;
  int nik_m = 2;
  int scan_size = 0;
  auto* cmd_nikodym = app.add_subcommand("nikodym", "Nikodym-set lower bound and subset scan");
  cmd_nikodym->add_option("--q", nik_q, "field order");
  cmd_nikodym->add_option("--m", nik_m, "dimension");
  cmd_nikodym->add_option("--scan-size", scan_size, "exhaustively scan subsets of this size");

  // oracle -------------------------------------------------------------
  CodeSpec oracle_spec;
  std::string oracle_mode = "exhaustive";
  uint64_t oracle_samples = 10000;
  auto* cmd_oracle = app.add_subcommand("oracle", "restriction vs degree-set membership oracle");
  add_code_spec(cmd_oracle, oracle_spec);
  cmd_oracle->add_option("--mode", oracle_mode, "exhaustive | sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  cmd_oracle->add_option("--samples", oracle_samples, "samples per side (sampled mode)");
  cmd_oracle->add_option("--seed", seed, "rng seed (sampled mode)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const lc::Json args = echo_args(argc, argv);

    if (cmd_params->parsed()) {
      auto [params, code] = lc::construct(to_inputs(params_opts));
      lc::Json j = lc::params_to_json(params);
      j["args"] = args;
      emit_scalar_report(j, global);
      return 0;
    }

    if (cmd_dim->parsed() || cmd_degs->parsed()) {
      const bool with_degrees = cmd_degs->parsed();
      const auto& copts = with_degrees ? degs_construct : dim_construct;
      lc::Json j;
      if (copts.theorem != 0) {
        auto [params, code] = lc::construct(to_inputs(copts));
        j = lc::code_descriptor(params, code, with_degrees);
      } else {
        lc::LiftedCode code = build_code(with_degrees ? degs_spec : dim_spec);
        j["dim"] = code.dimension();
        if (with_degrees) j["D"] = lc::degree_set_to_json(code.degree_set())["degrees"];
        j["Q"] = code.ctx()->order();
        j["q"] = code.value_order();
        j["m"] = code.m();
        j["t"] = code.t();
      }
      j["args"] = args;
      emit_scalar_report(j, global);
      return 0;
    }

    if (cmd_encode->parsed()) {
      lc::LiftedCode code = build_code(encode_spec);
      auto msg = lc::parse_message(*code.ctx(), message_text);
      lc::FuncTable table = code.encode(msg);
      lc::Json j = lc::table_to_json(table);
      if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
      } else {
        std::ofstream out(out_path);
        out << j.dump(2) << '\n';
      }
      return 0;
    }

    if (cmd_corrupt->parsed()) {
      std::ifstream in(table_path);
      if (!in) throw lc::UsageError("cannot read " + table_path);
      lc::Json tj;
      in >> tj;
      lc::FuncTable table = lc::table_from_json(tj);
      lc::SplitRng rng(seed);
      auto positions = lc::corrupt_table(table, corrupt_errors, rng);
      std::sort(positions.begin(), positions.end());
      lc::Json j = lc::table_to_json(table);
      j["corrupted_positions"] = positions;
      j["seed"] = seed;
      if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
      } else {
        std::ofstream out(out_path);
        out << j.dump(2) << '\n';
      }
      return 0;
    }

    if (cmd_correct->parsed()) {
      lc::LiftedCode code = correct_construct.theorem != 0
                                ? lc::construct(to_inputs(correct_construct)).second
                                : build_code(correct_spec);
      lc::Scenario sc;
      if (corrector == "generic") {
        sc = lc::Scenario::kCorrectGeneric;
      } else if (corrector == "rs") {
        sc = lc::Scenario::kCorrectRs;
      } else {
        sc = code.base().checker == lc::CheckerKind::kMaxDegree ? lc::Scenario::kCorrectRs
                                                                : lc::Scenario::kCorrectGeneric;
      }
      lc::McConfig cfg;
      cfg.trials = mc_trials;
      cfg.errors = mc_errors;
      cfg.seed = seed;
      cfg.target = target_mode == "corrupted" ? lc::TargetMode::kCorruptedPoint
                                              : lc::TargetMode::kRandomPoint;
      lc::Json j = lc::mc_report_to_json(lc::monte_carlo(code, sc, cfg));
      j["args"] = args;
      emit_scalar_report(j, global);
      return 0;
    }

    if (cmd_test->parsed()) {
      lc::LiftedCode code = test_construct.theorem != 0
                                ? lc::construct(to_inputs(test_construct)).second
                                : build_code(test_spec);
      lc::Scenario sc = test_scenario == "codeword" ? lc::Scenario::kTestCodeword
                        : test_scenario == "flip"   ? lc::Scenario::kTestFlip
                                                    : lc::Scenario::kTestRandom;
      lc::McConfig cfg;
      cfg.trials = mc_trials;
      cfg.errors = test_scenario == "flip" ? 1 : 0;
      cfg.seed = seed;
      lc::Json j = lc::mc_report_to_json(lc::monte_carlo(code, sc, cfg));
      j["args"] = args;
      emit_scalar_report(j, global);
      return 0;
    }

    if (cmd_distance->parsed()) {
      lc::LiftedCode code = build_code(dist_spec);
      const uint64_t limit = 1ull << enum_limit_log2;
      auto base_res = lc::min_distance_exhaustive(code.base(), limit);
      auto lift_res = lc::min_distance_exhaustive(code, limit);
      lc::Json j{{"base", base_res.delta.as_double()},
                 {"lift", lift_res.delta.as_double()},
                 {"base_detail", lc::min_distance_to_json(base_res)},
                 {"lift_detail", lc::min_distance_to_json(lift_res)},
                 {"args", args}};
      emit_scalar_report(j, global);
      return 0;
    }

    if (cmd_sweep->parsed()) {
      auto ctx = ctx_from_orders(sweep_spec.Q, sweep_spec.q);
      auto checks = lc::distance_sweep(ctx, sweep_spec.m, 1ull << enum_limit_log2);
      if (global.format == "tsv") {
        std::cout << "base_degrees\tdelta_base\tdelta_lift\tdegenerate\tall_ok\n";
        for (const auto& c : checks) {
          std::string degs;
          for (size_t i = 0; i < c.base_degrees.size(); ++i)
            degs += (i ? "," : "") + std::to_string(c.base_degrees[i]);
          std::cout << degs << '\t' << c.delta_base.as_double() << '\t'
                    << c.delta_lift.as_double() << '\t' << c.degenerate << '\t' << c.all_ok()
                    << '\n';
        }
      } else {
        lc::Json arr = lc::Json::array();
        uint64_t violations = 0;
        for (const auto& c : checks) {
          arr.push_back(lc::distance_check_to_json(c));
          if (!c.degenerate && !c.all_ok()) ++violations;
        }
        lc::Json j{{"checks", arr}, {"violations", violations}, {"args", args}};
        emit_scalar_report(j, global);
      }
      return 0;
    }

    if (cmd_nikodym->parsed()) {
      lc::Json j{{"q", nik_q}, {"m", nik_m}, {"bound", lc::nikodym_lower_bound(nik_q, nik_m)}};
      if (scan_size > 0) j["scan"] = lc::nikodym_scan_to_json(
          lc::nikodym_scan_subsets(nik_q, nik_m, scan_size));
      j["args"] = args;
      emit_scalar_report(j, global);
      return 0;
    }

    if (cmd_oracle->parsed()) {
      lc::LiftedCode code = build_code(oracle_spec);
      lc::OracleReport rep = oracle_mode == "exhaustive"
                                 ? lc::oracle_equivalence_exhaustive(code)
                                 : lc::oracle_equivalence_sampled(code, oracle_samples,
                                                                  oracle_samples, seed);
      lc::Json j = lc::oracle_report_to_json(rep);
      j["args"] = args;
      emit_scalar_report(j, global);
      return 0;
    }

    throw lc::UsageError("no subcommand");
  } catch (const lc::ParamError& e) {
    std::cerr << lc::Json{{"error", e.what()}, {"violated_constraint", e.constraint}}.dump()
              << '\n';
    return 2;
  } catch (const lc::GuardError& e) {
    std::cerr << lc::Json{{"error", e.what()}, {"limit", e.limit}, {"requested", e.requested}}
                     .dump()
              << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << lc::Json{{"error", e.what()}}.dump() << '\n';
    return 1;
  }
}
