#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dempoly/demazure.hpp"
#include "dempoly/errors.hpp"
#include "dempoly/formal.hpp"
#include "dempoly/rootsys.hpp"
#include "dempoly/weyl.hpp"

namespace dempoly {

// ---------------------------------------------------------------------------
// Brute-force lattice sum of the weight polytope
// ---------------------------------------------------------------------------

/// mu in Pt_lambda and mu - lambda in Q, decided exactly: the dominant
/// representative of mu must lie below lambda in dominance order.
inline bool polytope_member(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  detail::require_dominant(rs, lambda);
  rs.check_rank(mu);
  if (!rs.in_root_lattice(mu - lambda)) return false;
  return rs.dominance_le(dominant_representative(rs, mu).first, lambda);
}

/// B_lambda together with the polytope's vertices W lambda.
struct PolytopeSum {
  FormalSum sum;
  std::set<Weight> vertex_set;
};

inline constexpr std::int64_t kMaxPolytopePoints = 1'000'000;
inline constexpr std::int64_t kMaxCandidateBox = 50'000'000;

/// Enumerates the label bounding box of W lambda and keeps the members.
inline PolytopeSum polytope_sum_oracle(const RootSystem& rs, const Weight& lambda) {
  detail::require_dominant(rs, lambda);
  PolytopeSum out{FormalSum(rs.rank()), orbit(rs, lambda)};
  const std::size_t n = rs.rank();
  std::vector<int> lo(n, 0), hi(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = hi[i] = out.vertex_set.begin()->operator[](i);
    for (const auto& v : out.vertex_set) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  }
  std::int64_t box = 1;
  for (std::size_t i = 0; i < n; ++i) {
    box *= hi[i] - lo[i] + 1;
    if (box > kMaxCandidateBox) {
      throw ResourceLimit("candidate box for " + rs.name() + " " + lambda.str() + " exceeds " +
                          std::to_string(kMaxCandidateBox));
    }
  }
  Weight mu(lo);
  std::int64_t points = 0;
  while (true) {
    if (polytope_member(rs, lambda, mu)) {
      if (++points > kMaxPolytopePoints) {
        throw ResourceLimit("polytope of " + rs.name() + " " + lambda.str() + " has more than " +
                            std::to_string(kMaxPolytopePoints) + " lattice points");
      }
      out.sum.add_term(mu, 1);
    }
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (mu[k] < hi[k]) {
        ++mu[k];
        break;
      }
      mu[k] = lo[k];
      if (k == 0) return out;
    }
  }
}

// ---------------------------------------------------------------------------
// Demazure-type expressions for B_lambda
// ---------------------------------------------------------------------------

/// d(g_j) r(g_{j-1}) ... r(g_first) + ... + d(g_{first+1}) r(g_first) + d(g_first) + 1
/// over gamma indices [first, last] (0-based, inclusive).
inline OperatorExpr gamma_chain(const GammaSequence& g, std::size_t first, std::size_t last) {
  OperatorExpr e;
  for (std::size_t j = last + 1; j-- > first;) {
    Composition c{Atom::d_root(g[j])};
    for (std::size_t k = j; k-- > first;) c.push_back(Atom::r_root(g[k]));
    e.add(std::move(c));
  }
  e.add_identity();
  return e;
}

/// A1: d(alpha_1) + 1.
inline OperatorProduct a1_polytope_operator(const RootSystem& rs) {
  if (!(rs.id().family == Family::A && rs.id().rank == 1)) throw Unsupported("A1 formula needs A1, got " + rs.name());
  const GammaSequence g = gamma_sequence(rs);
  return {gamma_chain(g, 0, 0)};
}

/// Rank 2: [d(g_p)+1][d(g_{p-1}) r(g_{p-2})...r(g_1) + ... + d(g_2) r(g_1) + d(g_1) + 1].
inline OperatorProduct rank2_polytope_operator(const RootSystem& rs) {
  if (rs.rank() != 2 || rs.id().family == Family::C || rs.id().family == Family::D) {
    throw Unsupported("rank-2 polytope formula covers A2, B2, G2; got " + rs.name());
  }
  const GammaSequence g = gamma_sequence(rs);
  const std::size_t p = g.size();
  return {gamma_chain(g, p - 1, p - 1), gamma_chain(g, 0, p - 2)};
}

/// A3: [d(a3)+1][d(a23) r(a2) + d(a2) + 1][d(a123) r(a12) r(a1) + d(a12) r(a1) + d(a1) + 1].
inline OperatorProduct a3_polytope_operator(const RootSystem& rs) {
  if (!(rs.id().family == Family::A && rs.id().rank == 3)) throw Unsupported("A3 formula needs A3, got " + rs.name());
  const GammaSequence g = gamma_sequence(rs);
  return {gamma_chain(g, 5, 5), gamma_chain(g, 3, 4), gamma_chain(g, 0, 2)};
}

inline FormalSum polytope_sum_rank2(const RootSystem& rs, const Weight& lambda) {
  const OperatorProduct op = rank2_polytope_operator(rs);
  detail::require_dominant(rs, lambda);
  return apply(rs, op, FormalSum::monomial(lambda));
}

inline FormalSum polytope_sum_a3(const RootSystem& rs, const Weight& lambda) {
  const OperatorProduct op = a3_polytope_operator(rs);
  detail::require_dominant(rs, lambda);
  return apply(rs, op, FormalSum::monomial(lambda));
}

inline FormalSum polytope_sum_a1(const RootSystem& rs, const Weight& lambda) {
  const OperatorProduct op = a1_polytope_operator(rs);
  detail::require_dominant(rs, lambda);
  return apply(rs, op, FormalSum::monomial(lambda));
}

inline bool has_polytope_formula(const AlgebraId& id) {
  return (id.family == Family::A && id.rank <= 3) || (id.family == Family::B && id.rank == 2) ||
         id.family == Family::G;
}

/// Name of the Demazure-type expression used for this algebra.
inline std::string polytope_formula_name(const AlgebraId& id) {
  if (id.family == Family::A && id.rank == 1) return "A1";
  if (id.family == Family::A && id.rank == 3) return "A3";
  if (has_polytope_formula(id)) return "rank2";
  throw Unsupported("no Demazure-type polytope formula for " + to_string(id));
}

/// Dispatches to the A1, rank-2 or A3 expression.
inline FormalSum polytope_sum_demazure(const RootSystem& rs, const Weight& lambda) {
  const std::string f = polytope_formula_name(rs.id());
  if (f == "A1") return polytope_sum_a1(rs, lambda);
  if (f == "A3") return polytope_sum_a3(rs, lambda);
  return polytope_sum_rank2(rs, lambda);
}

// ---------------------------------------------------------------------------
// Rational formulas evaluated at a point
// ---------------------------------------------------------------------------

inline constexpr double kPoleThreshold = 1e-6;
inline constexpr double kFormulaAgreement = 1e-9;

namespace detail {

inline long double dot(const Weight& mu, const std::vector<double>& g) {
  long double s = 0;
  for (std::size_t i = 0; i < mu.rank(); ++i) s += mu[i] * static_cast<long double>(g[i]);
  return s;
}

inline void require_generic(long double x, const std::string& what) {
  if (std::fabs(x) <= kPoleThreshold) {
    throw ResampleRequired("evaluation point is within " + std::to_string(kPoleThreshold) + " of a pole (" + what +
                           ")");
  }
}

inline void require_point_rank(const RootSystem& rs, const EvalPoint& p) {
  if (p.rank() != rs.rank()) throw InvalidArgument("evaluation point rank does not match " + rs.name());
}

inline double relative_difference(double a, double b) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

}  // namespace detail

/// sum_w e^{w lambda} prod_{alpha in S} (1 - e^{-w alpha})^{-1}
inline double brion_eval(const RootSystem& rs, const WeylGroupTable& table, const Weight& lambda,
                         const EvalPoint& sigma) {
  detail::require_dominant(rs, lambda);
  detail::require_point_rank(rs, sigma);
  const auto g = rs.form_times(sigma.sigma);
  long double total = 0;
  for (const auto& w : table.elements) {
    long double term = std::exp(detail::dot(apply_word(rs, w.word, lambda), g));
    for (std::size_t i = 1; i <= rs.rank(); ++i) {
      const long double x = detail::dot(apply_word(rs, w.word, rs.simple_root(i).weight_coords), g);
      detail::require_generic(x, "w alpha_" + std::to_string(i));
      term /= 1.0L - std::exp(-x);
    }
    total += term;
  }
  return static_cast<double>(total);
}

inline double brion_eval(const RootSystem& rs, const Weight& lambda, const EvalPoint& sigma) {
  return brion_eval(rs, weyl_group(rs), lambda, sigma);
}

/// Both forms of the Weyl character at sigma.
struct WeylCharacterValue {
  double quotient;       // alternating sum over the Weyl denominator
  double invariant_form; // sum_w e^{w lambda} prod_{alpha>0} (1 - e^{-w alpha})^{-1}
};

inline WeylCharacterValue weyl_character_forms(const RootSystem& rs, const WeylGroupTable& table,
                                               const Weight& lambda, const EvalPoint& sigma) {
  detail::require_dominant(rs, lambda);
  detail::require_point_rank(rs, sigma);
  const auto g = rs.form_times(sigma.sigma);
  const Weight& rho = rs.weyl_vector();
  const Weight shifted = lambda + rho;

  long double denominator = 1;
  for (const auto& alpha : rs.positive_roots()) {
    const long double x = detail::dot(alpha.weight_coords, g);
    detail::require_generic(x, "alpha " + alpha.str());
    denominator *= 1.0L - std::exp(-x);
  }
  long double numerator = 0;
  long double invariant = 0;
  for (const auto& w : table.elements) {
    numerator += w.sign * std::exp(detail::dot(apply_word(rs, w.word, shifted) - rho, g));
    long double term = std::exp(detail::dot(apply_word(rs, w.word, lambda), g));
    for (const auto& alpha : rs.positive_roots()) {
      const long double x = detail::dot(apply_word(rs, w.word, alpha.weight_coords), g);
      detail::require_generic(x, "w alpha " + alpha.str());
      term /= 1.0L - std::exp(-x);
    }
    invariant += term;
  }
  return {static_cast<double>(numerator / denominator), static_cast<double>(invariant)};
}

/// ch_lambda(sigma) by the Weyl quotient; throws NumericMismatch unless the
/// manifestly Weyl-invariant form agrees to 1e-9 relative.
inline double weyl_character_eval(const RootSystem& rs, const WeylGroupTable& table, const Weight& lambda,
                                  const EvalPoint& sigma) {
  const WeylCharacterValue v = weyl_character_forms(rs, table, lambda, sigma);
  const double rel = detail::relative_difference(v.quotient, v.invariant_form);
  if (!(rel < kFormulaAgreement)) {
    throw NumericMismatch("Weyl quotient " + std::to_string(v.quotient) + " and invariant form " +
                          std::to_string(v.invariant_form) + " differ by " + std::to_string(rel) + " relative");
  }
  return v.quotient;
}

inline double weyl_character_eval(const RootSystem& rs, const Weight& lambda, const EvalPoint& sigma) {
  return weyl_character_eval(rs, weyl_group(rs), lambda, sigma);
}

/// True when no <w alpha, sigma> with alpha a root comes within the pole threshold.
inline bool is_generic(const RootSystem& rs, const EvalPoint& sigma) {
  const auto g = rs.form_times(sigma.sigma);
  // W permutes the roots, so checking every root once covers all w alpha.
  for (const auto& alpha : rs.positive_roots())
    if (std::fabs(detail::dot(alpha.weight_coords, g)) <= kPoleThreshold) return false;
  return true;
}

/// Seeded points with labels uniform in [0.1, 1.1], resampled when not generic.
inline std::vector<EvalPoint> sample_eval_points(const RootSystem& rs, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> label(0.1, 1.1);
  std::vector<EvalPoint> out;
  while (out.size() < count) {
    EvalPoint p;
    for (std::size_t i = 0; i < rs.rank(); ++i) p.sigma.push_back(label(rng));
    if (is_generic(rs, p)) out.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Characters and polytope multiplicities
// ---------------------------------------------------------------------------

/// Dominant weights mu <= lambda, generated by subtracting positive roots and
/// staying dominant. Sorted by depth (height of lambda - mu), then label order.
inline std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda) {
  detail::require_dominant(rs, lambda);
  std::set<Weight> seen{lambda};
  std::vector<Weight> queue{lambda};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const Weight mu = queue[k];
    for (const auto& alpha : rs.positive_roots()) {
      Weight nu = mu - alpha.weight_coords;
      if (nu.is_dominant() && seen.insert(nu).second) queue.push_back(nu);
    }
  }
  auto depth = [&](const Weight& mu) {
    const auto coords = rs.root_lattice_coords(lambda - mu);
    int h = 0;
    for (int c : *coords) h += c;
    return h;
  };
  std::vector<Weight> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) { return depth(a) < depth(b); });
  return out;
}

/// Dominant multiplicities by the Freudenthal recursion
///   ((lambda+rho)^2 - (mu+rho)^2) m(mu) = 2 sum_{alpha>0} sum_{k>=1} m(mu + k alpha) (mu + k alpha, alpha).
inline std::map<Weight, Integer> dominant_multiplicities(const RootSystem& rs, const Weight& lambda) {
  const std::vector<Weight> dominant = dominant_weights_below(rs, lambda);
  std::map<Weight, Integer> mult;
  const Weight& rho = rs.weyl_vector();
  const Rational top = rs.inner_product(lambda + rho, lambda + rho);
  for (const Weight& mu : dominant) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    Rational rhs = 0;
    for (const auto& alpha : rs.positive_roots()) {
      Weight nu = mu;
      while (true) {
        nu += alpha.weight_coords;
        const Weight dom = dominant_representative(rs, nu).first;
        if (!rs.dominance_le(dom, lambda)) break;
        auto it = mult.find(dom);
        if (it == mult.end()) throw Error("Freudenthal recursion visited " + dom.str() + " out of order");
        rhs += Rational(it->second) * rs.inner_product(nu, alpha.weight_coords);
      }
    }
    const Rational lhs = top - rs.inner_product(mu + rho, mu + rho);
    const Rational m = 2 * rhs / lhs;
    if (!is_integral(m)) throw Error("non-integral multiplicity " + m.str() + " at " + mu.str());
    mult[mu] = boost::multiprecision::numerator(m);
  }
  return mult;
}

/// ch_lambda with every dominant multiplicity spread over its Weyl orbit.
inline FormalSum character_freudenthal(const RootSystem& rs, const Weight& lambda) {
  FormalSum ch(rs.rank());
  for (const auto& [mu, m] : dominant_multiplicities(rs, lambda)) {
    if (m == 0) continue;
    for (const auto& nu : orbit(rs, mu)) ch.add_term(nu, m);
  }
  return ch;
}

/// prod_{alpha>0} (lambda+rho, alpha) / (rho, alpha)
inline Integer weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  detail::require_dominant(rs, lambda);
  const Weight& rho = rs.weyl_vector();
  const Weight shifted = lambda + rho;
  Rational p = 1;
  for (const auto& alpha : rs.positive_roots()) {
    p *= rs.inner_product(shifted, alpha.weight_coords) / rs.inner_product(rho, alpha.weight_coords);
  }
  if (!is_integral(p)) throw Error("Weyl dimension product is not integral: " + p.str());
  return boost::multiprecision::numerator(p);
}

/// ch_lambda = sum_mu polyt_lambda(mu) B_mu over dominant mu <= lambda.
struct PolytopeExpansion {
  Weight highest;
  std::map<Weight, Integer> coefficients;  // zero entries omitted

  Integer coefficient(const Weight& mu) const {
    auto it = coefficients.find(mu);
    return it == coefficients.end() ? Integer(0) : it->second;
  }

  /// sum_mu polyt(mu) B_mu with B_mu from the brute-force oracle.
  FormalSum reconstruct(const RootSystem& rs) const {
    FormalSum out(rs.rank());
    for (const auto& [mu, c] : coefficients) out += c * polytope_sum_oracle(rs, mu).sum;
    return out;
  }

  /// Same coefficients, as a formal sum keyed by mu.
  FormalSum as_formal_sum(std::size_t rank) const {
    FormalSum out(rank);
    for (const auto& [mu, c] : coefficients) out.add_term(mu, c);
    return out;
  }
};

/// polyt(mu) = mult(mu) - sum_{nu > mu} polyt(nu), descending from lambda.
inline PolytopeExpansion polytope_expansion(const RootSystem& rs, const Weight& lambda) {
  const std::vector<Weight> dominant = dominant_weights_below(rs, lambda);
  const auto mult = dominant_multiplicities(rs, lambda);
  std::map<Weight, Integer> polyt;
  for (const Weight& mu : dominant) {
    Integer c = mult.at(mu);
    for (const auto& [nu, p] : polyt)
      if (nu != mu && rs.dominance_le(mu, nu)) c -= p;
    polyt[mu] = c;
  }
  PolytopeExpansion out{lambda, {}};
  for (auto& [mu, c] : polyt)
    if (c != 0) out.coefficients.emplace(mu, std::move(c));
  return out;
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

/// Outcome of comparing a formula against the oracle; match iff diff == 0.
struct VerificationReport {
  std::string formula;
  std::string algebra;
  Weight lambda;
  bool match = false;
  FormalSum diff;  // formula - oracle
  std::int64_t n_points = 0;
  double millis = 0.0;
};

/// Demazure-type expression against the brute-force lattice sum.
inline VerificationReport verify_polytope_formula(const RootSystem& rs, const Weight& lambda) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.formula = polytope_formula_name(rs.id());
  r.algebra = rs.name();
  r.lambda = lambda;
  const FormalSum formula = polytope_sum_demazure(rs, lambda);
  const PolytopeSum oracle = polytope_sum_oracle(rs, lambda);
  r.diff = formula - oracle.sum;
  r.match = r.diff.is_zero();
  r.n_points = to_int64(coefficient_sum(oracle.sum));
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// All dominant weights with labels in [0, max_label]^rank, lexicographic.
inline std::vector<Weight> dominant_grid(std::size_t rank, int max_label) {
  if (max_label < 0) throw InvalidArgument("grid bound must be >= 0");
  std::vector<Weight> out;
  Weight mu = Weight::zero(rank);
  while (true) {
    out.push_back(mu);
    std::size_t k = rank;
    while (true) {
      if (k == 0) return out;
      --k;
      if (mu[k] < max_label) {
        ++mu[k];
        break;
      }
      mu[k] = 0;
    }
  }
}

}  // namespace dempoly
