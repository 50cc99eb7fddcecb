// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when everything passes).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dempoly/dempoly.hpp"

using namespace dempoly;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;  // 0 = no runtime bound
  std::function<Outcome()> check;
};

FormalSum e(const Weight& mu) { return FormalSum::monomial(mu); }

Outcome a1_identity() {
  const RootSystem rs = build_root_system("A1");
  const Root& alpha = rs.simple_root(1);
  int bad = 0;
  for (int n = 0; n <= 20; ++n) {
    const Weight lambda{n};
    const FormalSum D = apply_D_simple(rs, 1, e(lambda));
    const FormalSum dplus1 = apply_d_root(rs, alpha, e(lambda)) + e(lambda);
    const FormalSum oracle = polytope_sum_oracle(rs, lambda).sum;
    if (!(D == oracle && dplus1 == oracle && polytope_sum_a1(rs, lambda) == oracle)) ++bad;
  }
  return {bad == 0, "21 weights, " + std::to_string(bad) + " mismatches"};
}

Outcome rank2_formula() {
  Outcome out;
  std::ostringstream detail;
  for (const char* name : {"A2", "B2", "G2"}) {
    const RootSystem rs = build_root_system(name);
    int regular = 0, regular_bad = 0, other = 0, other_bad = 0;
    for (const auto& lambda : dominant_grid(2, 4)) {
      const VerificationReport r = verify_polytope_formula(rs, lambda);
      if (lambda.is_regular()) {
        ++regular;
        if (!r.match) ++regular_bad;
      } else {
        ++other;
        if (!r.match) ++other_bad;
      }
    }
    if (regular_bad) out.pass = false;
    detail << name << ": regular " << regular - regular_bad << "/" << regular << " match, non-regular "
           << other - other_bad << "/" << other << " match; ";
  }
  out.detail = detail.str();
  return out;
}

Outcome a3_formula() {
  const RootSystem rs = build_root_system("A3");
  int bad = 0, total = 0;
  bool figure_case = false;
  for (const auto& lambda : dominant_grid(3, 3)) {
    ++total;
    const VerificationReport r = verify_polytope_formula(rs, lambda);
    if (!r.match) ++bad;
    if (lambda == Weight{1, 2, 3}) figure_case = r.match;
  }
  return {bad == 0 && total == 64 && figure_case,
          std::to_string(total) + " weights, " + std::to_string(bad) + " mismatches; (1,2,3) " +
              (figure_case ? "matches" : "FAILS")};
}

Outcome braid_relations() {
  struct Case {
    const char* name;
    std::size_t m;
  };
  int bad = 0, checked = 0;
  for (const Case c : {Case{"A2", 3}, Case{"B2", 4}, Case{"G2", 6}}) {
    const RootSystem rs = build_root_system(c.name);
    WeylWord w1, w2;
    for (std::size_t k = 0; k < c.m; ++k) {
      w1.push_back(k % 2 ? 2 : 1);
      w2.push_back(k % 2 ? 1 : 2);
    }
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b) {
        ++checked;
        if (!(apply_word(rs, w1, e({a, b}), Flavor::D) == apply_word(rs, w2, e({a, b}), Flavor::D))) ++bad;
      }
  }
  return {bad == 0, std::to_string(checked) + " exponentials, " + std::to_string(bad) + " mismatches"};
}

Outcome characters() {
  int bad = 0, total = 0;
  for (const char* name : {"A1", "A2", "B2", "G2", "A3"}) {
    const RootSystem rs = build_root_system(name);
    const WeylGroupTable t = weyl_group(rs);
    for (const auto& lambda : dominant_grid(rs.rank(), 3)) {
      ++total;
      const FormalSum dem = character_demazure(rs, t, lambda);
      const FormalSum dsum = character_demazure_sum(rs, t, lambda);
      const FormalSum freud = character_freudenthal(rs, lambda);
      if (!(dem == dsum && dsum == freud && coefficient_sum(dem) == weyl_dimension(rs, lambda))) {
        ++bad;
        std::cerr << "  character mismatch " << name << " " << lambda << "\n";
      }
    }
  }
  return {bad == 0, std::to_string(total) + " weights, " + std::to_string(bad) + " mismatches"};
}

Outcome numeric_checks() {
  struct Case {
    const char* name;
    Weight lambda;
  };
  const std::vector<Case> cases{{"A2", {1, 0}}, {"A2", {1, 1}}, {"A2", {2, 1}}, {"G2", {1, 1}}, {"A3", {1, 1, 1}}};
  double worst_brion = 0, worst_weyl = 0;
  std::uint64_t seed = 1;
  for (const auto& c : cases) {
    const RootSystem rs = build_root_system(c.name);
    const WeylGroupTable t = weyl_group(rs);
    const FormalSum b = polytope_sum_oracle(rs, c.lambda).sum;
    const FormalSum ch = character_demazure(rs, t, c.lambda);
    for (const auto& sigma : sample_eval_points(rs, 20, seed++)) {
      const double bv = evaluate(rs, b, sigma);
      const double cv = evaluate(rs, ch, sigma);
      worst_brion = std::max(worst_brion, std::fabs(brion_eval(rs, t, c.lambda, sigma) - bv) / std::fabs(bv));
      try {
        worst_weyl = std::max(worst_weyl, std::fabs(weyl_character_eval(rs, t, c.lambda, sigma) - cv) / std::fabs(cv));
      } catch (const NumericMismatch& ex) {
        worst_weyl = INFINITY;
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "max rel error Brion %.2e, Weyl %.2e (tolerance 1e-9)", worst_brion, worst_weyl);
  return {worst_brion < 1e-9 && worst_weyl < 1e-9, buf};
}

Outcome polytope_expansions() {
  int bad = 0, total = 0;
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    const RootSystem rs = build_root_system(name);
    for (const auto& lambda : dominant_grid(rs.rank(), 3)) {
      ++total;
      const PolytopeExpansion ex = polytope_expansion(rs, lambda);
      if (ex.coefficient(lambda) != 1 || !(ex.reconstruct(rs) == character_freudenthal(rs, lambda))) ++bad;
    }
  }
  const RootSystem a2 = build_root_system("A2");
  const PolytopeExpansion adj = polytope_expansion(a2, Weight{1, 1});
  const bool adj_ok = adj.coefficients == std::map<Weight, Integer>{{Weight{0, 0}, 1}, {Weight{1, 1}, 1}};
  return {bad == 0 && adj_ok, std::to_string(total) + " weights, " + std::to_string(bad) +
                                  " mismatches; A2 (1,1) = B(1,1) + B(0,0): " + (adj_ok ? "yes" : "no")};
}

Outcome longest_factorization() {
  std::mt19937 rng(2019);
  std::uniform_int_distribution<int> label(-10, 10);
  int bad = 0;
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    const RootSystem rs = build_root_system(name);
    const WeylWord wl = weyl_group(rs).longest().word;
    const ReflectionProduct composite = longest_element_via_gammas(rs);
    for (int k = 0; k < 50; ++k) {
      std::vector<int> l(rs.rank());
      for (auto& x : l) x = label(rng);
      if (!(composite.apply(rs, Weight(l)) == apply_word(rs, wl, Weight(l)))) ++bad;
    }
  }
  return {bad == 0, "200 weights, " + std::to_string(bad) + " mismatches"};
}

Outcome weyl_invariance() {
  int bad = 0, total = 0;
  auto sweep = [&](const char* name, int max_label) {
    const RootSystem rs = build_root_system(name);
    for (const auto& lambda : dominant_grid(rs.rank(), max_label)) {
      ++total;
      const FormalSum b = polytope_sum_oracle(rs, lambda).sum;
      for (std::size_t i = 1; i <= rs.rank(); ++i)
        if (!(apply_r_simple(rs, i, b) == b)) {
          ++bad;
          break;
        }
    }
  };
  sweep("A2", 4);
  sweep("B2", 4);
  sweep("G2", 4);
  sweep("A3", 3);
  return {bad == 0, std::to_string(total) + " polytope sums, " + std::to_string(bad) + " not invariant"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "A1: D_1 e^lambda = [d(alpha_1)+1] e^lambda = B_lambda, n = 0..20", 1.0, a1_identity},
      {2, "rank-2 Demazure-type formula = oracle on [0..4]^2 for A2, B2, G2", 10.0, rank2_formula},
      {3, "A3 Demazure-type formula = oracle on [0..3]^3", 60.0, a3_formula},
      {4, "braid relations of D-operators on [-3..3]^2 for A2, B2, G2", 5.0, braid_relations},
      {5, "Demazure D, Demazure d-sum, Freudenthal characters agree; dim = Weyl dimension", 30.0, characters},
      {6, "Brion and Weyl rational formulas at 20 seeded generic points", 5.0, numeric_checks},
      {7, "polytope expansion reconstructs ch_lambda", 30.0, polytope_expansions},
      {8, "w_L = r(gamma_p)...r(gamma_1) on 50 seeded weights per algebra", 0.0, longest_factorization},
      {9, "B_lambda invariant under every simple reflection", 0.0, weyl_invariance},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.pass;
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      pass = false;
      o.detail += " [runtime limit exceeded]";
    }
    char timing[64];
    if (c.time_limit_s > 0) {
      std::snprintf(timing, sizeof timing, "%.3fs < %.0fs", secs, c.time_limit_s);
    } else {
      std::snprintf(timing, sizeof timing, "%.3fs", secs);
    }
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "C" << c.id << " " << c.title << " -- " << o.detail << " ("
              << timing << ")\n";
    if (!pass) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed;
}
