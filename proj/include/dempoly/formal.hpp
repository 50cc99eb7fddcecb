#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dempoly/errors.hpp"
#include "dempoly/numeric.hpp"
#include "dempoly/rootsys.hpp"
#include "dempoly/weight.hpp"

namespace dempoly {

using Coefficient = Integer;

/// Finite Z-linear combination of formal exponentials e^mu.
///
/// Zero coefficients are never stored, so two sums are equal exactly when
/// their term maps are. Terms iterate in lexicographic order of the exponent.
class FormalSum {
 public:
  using Terms = std::map<Weight, Coefficient>;

  explicit FormalSum(std::size_t rank = 0) : rank_(rank) {}

  /// c e^mu
  static FormalSum monomial(const Weight& mu, Coefficient c = 1) {
    FormalSum s(mu.rank());
    s.add_term(mu, std::move(c));
    return s;
  }

  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Coefficient coefficient(const Weight& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? Coefficient(0) : it->second;
  }

  /// this += c e^mu
  void add_term(const Weight& mu, const Coefficient& c) {
    if (mu.rank() != rank_) {
      throw InvalidArgument("exponent " + mu.str() + " does not match sum rank " + std::to_string(rank_));
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  FormalSum& operator+=(const FormalSum& o) {
    check_rank(o);
    for (const auto& [mu, c] : o.terms_) add_term(mu, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& o) {
    check_rank(o);
    for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
    return *this;
  }
  FormalSum& operator*=(const Coefficient& k) {
    if (k == 0) {
      terms_.clear();
    } else {
      for (auto& [mu, c] : terms_) c *= k;
    }
    return *this;
  }
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator-(FormalSum a) { return a *= Coefficient(-1); }
  friend FormalSum operator*(const Coefficient& k, FormalSum a) { return a *= k; }

  friend bool operator==(const FormalSum& a, const FormalSum& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [mu, c] : terms_) {
      if (!s.empty()) s += " + ";
      if (c != 1) s += c.str() + "*";
      s += "e^" + mu.str();
    }
    return s;
  }

  void check_rank(const FormalSum& o) const {
    if (o.rank_ != rank_) {
      throw InvalidArgument("formal sum rank mismatch: " + std::to_string(rank_) + " vs " +
                            std::to_string(o.rank_));
    }
  }

 private:
  std::size_t rank_;
  Terms terms_;
};

inline FormalSum add(const FormalSum& a, const FormalSum& b) { return a + b; }

/// e^nu * a: every exponent shifted by nu.
inline FormalSum mul_exp(const FormalSum& a, const Weight& nu) {
  if (nu.rank() != a.rank()) throw InvalidArgument("mul_exp rank mismatch");
  FormalSum out(a.rank());
  for (const auto& [mu, c] : a.terms()) out.add_term(mu + nu, c);
  return out;
}

inline Coefficient coefficient_sum(const FormalSum& a) {
  Coefficient s = 0;
  for (const auto& [mu, c] : a.terms()) s += c;
  return s;
}

/// Point sigma in weight space, given by its Dynkin labels.
struct EvalPoint {
  std::vector<double> sigma;

  std::size_t rank() const { return sigma.size(); }
};

/// <mu, sigma> through the quadratic form.
inline double inner_product(const RootSystem& rs, const Weight& mu, const EvalPoint& p) {
  rs.check_rank(mu);
  const auto g = rs.form_times(p.sigma);
  double s = 0.0;
  for (std::size_t i = 0; i < mu.rank(); ++i) s += mu[i] * g[i];
  return s;
}

/// sum_mu c_mu exp(<mu, sigma>), summed in lexicographic exponent order.
inline double evaluate(const RootSystem& rs, const FormalSum& a, const EvalPoint& p) {
  if (a.rank() != rs.rank()) throw InvalidArgument("formal sum rank does not match " + rs.name());
  const auto g = rs.form_times(p.sigma);
  double total = 0.0;
  for (const auto& [mu, c] : a.terms()) {
    double x = 0.0;
    for (std::size_t i = 0; i < mu.rank(); ++i) x += mu[i] * g[i];
    total += c.convert_to<double>() * std::exp(x);
  }
  return total;
}

}  // namespace dempoly
