#pragma once

// Command-line front end: char, bsum, verify, eval, expand, vertices.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dempoly/dempoly.hpp"

namespace dempoly::cli {

inline constexpr std::uint64_t kDefaultSeed = 20190923;

namespace detail {

struct Target {
  RootSystem rs;
  Weight lambda;
};

inline Target parse_target(const std::string& algebra, const std::vector<int>& labels) {
  RootSystem rs = build_root_system(algebra);
  if (labels.size() != rs.rank()) {
    throw InvalidArgument(rs.name() + " needs " + std::to_string(rs.rank()) + " Dynkin labels, got " +
                          std::to_string(labels.size()));
  }
  Weight lambda(labels);
  if (!lambda.is_dominant()) throw InvalidArgument("highest weight " + lambda.str() + " is not dominant");
  return {std::move(rs), std::move(lambda)};
}

inline std::string table(const FormalSum& s) {
  std::ostringstream os;
  for (const auto& [mu, c] : s.terms()) os << mu << '\t' << c << '\n';
  return os.str();
}

inline std::string table(const std::set<Weight>& ws) {
  std::ostringstream os;
  for (const auto& w : ws) os << w << '\n';
  return os.str();
}

}  // namespace detail

/// Runs one command; returns the process exit code. `args` excludes argv[0].
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characters and weight-polytope lattice sums of simple Lie algebras"};
  app.require_subcommand(1);

  std::string algebra;
  std::vector<int> labels;
  bool as_table = false;
  std::string out_path;

  auto add_target = [&](CLI::App* sub) {
    sub->add_option("algebra", algebra, "Algebra, e.g. A2, B2, G2, A3")->required();
    sub->add_option("labels", labels, "Dynkin labels of the highest weight")->required();
    sub->add_flag("--table", as_table, "Human-readable table instead of JSON");
    sub->add_option("--out", out_path, "Write output to this file instead of stdout");
  };

  auto* char_cmd = app.add_subcommand("char", "Character ch_lambda = D_{w_L} e^lambda");
  add_target(char_cmd);

  std::string method = "both";
  auto* bsum_cmd = app.add_subcommand("bsum", "Weight-polytope lattice sum B_lambda");
  add_target(bsum_cmd);
  bsum_cmd->add_option("--method", method, "oracle, demazure or both")
      ->check(CLI::IsMember({"oracle", "demazure", "both"}));

  int max_label = 0;
  bool no_timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "Demazure-type formula vs brute-force oracle sweep");
  verify_cmd->add_option("--algebra", algebra, "A1, A2, B2, G2 or A3")->required();
  verify_cmd->add_option("--max-label", max_label, "Sweep labels in [0, max-label]")->required()->check(
      CLI::NonNegativeNumber);
  verify_cmd->add_option("--out", out_path, "Write the reports to this file");
  verify_cmd->add_flag("--no-timing", no_timing, "Report millis as 0 for byte-identical output");

  std::size_t sigma_count = 20;
  std::uint64_t seed = kDefaultSeed;
  auto* eval_cmd = app.add_subcommand("eval", "Brion and Weyl formulas at seeded generic points");
  add_target(eval_cmd);
  eval_cmd->add_option("--sigma-count", sigma_count, "Number of evaluation points")->check(CLI::PositiveNumber);
  eval_cmd->add_option("--seed", seed, "Sampling seed");

  auto* expand_cmd = app.add_subcommand("expand", "Polytope expansion ch_lambda = sum polyt(mu) B_mu");
  add_target(expand_cmd);

  auto* vertices_cmd = app.add_subcommand("vertices", "Vertices W lambda of the weight polytope");
  add_target(vertices_cmd);

  std::vector<std::string> argv_store{"dempoly"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  std::ostringstream body;
  int code = 0;
  try {
    if (char_cmd->parsed()) {
      auto t = detail::parse_target(algebra, labels);
      const FormalSum ch = character_demazure(t.rs, t.lambda);
      body << (as_table ? detail::table(ch) : to_json(ch).dump() + "\n");
    } else if (bsum_cmd->parsed()) {
      auto t = detail::parse_target(algebra, labels);
      if (method == "oracle") {
        const FormalSum b = polytope_sum_oracle(t.rs, t.lambda).sum;
        body << (as_table ? detail::table(b) : to_json(b).dump() + "\n");
      } else if (method == "demazure") {
        const FormalSum b = polytope_sum_demazure(t.rs, t.lambda);
        body << (as_table ? detail::table(b) : to_json(b).dump() + "\n");
      } else {
        const FormalSum oracle = polytope_sum_oracle(t.rs, t.lambda).sum;
        const FormalSum formula = polytope_sum_demazure(t.rs, t.lambda);
        const FormalSum diff = formula - oracle;
        if (as_table) {
          body << "oracle\n" << detail::table(oracle) << "demazure\n" << detail::table(formula) << "diff\n"
               << detail::table(diff);
        } else {
          Json j;
          j["oracle"] = to_json(oracle);
          j["demazure"] = to_json(formula);
          j["diff"] = to_json(diff);
          j["match"] = diff.is_zero();
          body << j.dump() << '\n';
        }
        if (!diff.is_zero()) code = 1;
      }
    } else if (verify_cmd->parsed()) {
      const RootSystem rs = build_root_system(algebra);
      polytope_formula_name(rs.id());  // rejects algebras without a formula
      Json reports = Json::array();
      std::size_t mismatches = 0;
      const auto grid = dominant_grid(rs.rank(), max_label);
      for (const auto& lambda : grid) {
        VerificationReport r = verify_polytope_formula(rs, lambda);
        if (no_timing) r.millis = 0.0;
        if (!r.match) ++mismatches;
        reports.push_back(to_json(r));
      }
      body << reports.dump() << '\n';
      err << "verify " << rs.name() << ": " << grid.size() << " cases, " << mismatches << " mismatches";
      if (!out_path.empty()) err << "; reports in " << out_path;
      err << '\n';
      if (mismatches) code = 1;
    } else if (eval_cmd->parsed()) {
      auto t = detail::parse_target(algebra, labels);
      const WeylGroupTable table = weyl_group(t.rs);
      const FormalSum b = polytope_sum_oracle(t.rs, t.lambda).sum;
      const FormalSum ch = character_demazure(t.rs, table, t.lambda);
      double brion_err = 0.0, weyl_err = 0.0;
      for (const auto& sigma : sample_eval_points(t.rs, sigma_count, seed)) {
        const double bv = evaluate(t.rs, b, sigma);
        const double cv = evaluate(t.rs, ch, sigma);
        brion_err = std::max(brion_err, std::fabs(brion_eval(t.rs, table, t.lambda, sigma) - bv) / std::fabs(bv));
        weyl_err = std::max(weyl_err, std::fabs(weyl_character_eval(t.rs, table, t.lambda, sigma) - cv) / std::fabs(cv));
      }
      const bool pass = brion_err < kFormulaAgreement && weyl_err < kFormulaAgreement;
      Json j;
      j["algebra"] = t.rs.name();
      j["lambda"] = weight_to_json(t.lambda);
      j["seed"] = seed;
      j["sigma_count"] = sigma_count;
      j["tolerance"] = kFormulaAgreement;
      j["brion_max_rel_error"] = brion_err;
      j["weyl_max_rel_error"] = weyl_err;
      j["pass"] = pass;
      body << j.dump() << '\n';
      if (!pass) code = 1;
    } else if (expand_cmd->parsed()) {
      auto t = detail::parse_target(algebra, labels);
      const PolytopeExpansion e = polytope_expansion(t.rs, t.lambda);
      body << (as_table ? detail::table(e.as_formal_sum(t.rs.rank())) : to_json(e).dump() + "\n");
    } else if (vertices_cmd->parsed()) {
      auto t = detail::parse_target(algebra, labels);
      const auto vs = orbit(t.rs, t.lambda);
      body << (as_table ? detail::table(vs) : to_json(vs).dump() + "\n");
    }
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }

  if (out_path.empty()) {
    out << body.str();
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << out_path << '\n';
      return 3;
    }
    f << body.str();
  }
  return code;
}

}  // namespace dempoly::cli
