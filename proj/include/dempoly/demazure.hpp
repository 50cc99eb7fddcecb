#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dempoly/errors.hpp"
#include "dempoly/formal.hpp"
#include "dempoly/rootsys.hpp"
#include "dempoly/weyl.hpp"

namespace dempoly {

enum class Flavor { D, d };

namespace detail {

inline int coroot_pairing(const Weight& lambda, const Root& beta) {
  int s = 0;
  for (std::size_t k = 0; k < lambda.rank(); ++k) s += lambda[k] * beta.coroot_coords[k];
  return s;
}

inline void require_positive(const RootSystem& rs, const Root& beta) {
  if (!rs.is_positive_root(beta)) {
    throw InvalidArgument(beta.str() + " is not a positive root of " + rs.name());
  }
}

inline void require_rank(const RootSystem& rs, const FormalSum& s) {
  if (s.rank() != rs.rank()) {
    throw InvalidArgument("formal sum of rank " + std::to_string(s.rank()) + " used with " + rs.name());
  }
}

// out += c * D(beta) e^lambda
//   n >= 0 : e^lambda + e^{lambda-beta} + ... + e^{lambda-n beta}
//   n = -1 : 0
//   n <= -2: -(e^{lambda+beta} + ... + e^{lambda+(-n-1) beta})
inline void add_D_string(FormalSum& out, const Weight& lambda, const Coefficient& c, const Root& beta) {
  const int n = coroot_pairing(lambda, beta);
  Weight mu = lambda;
  if (n >= 0) {
    for (int k = 0; k <= n; ++k) {
      out.add_term(mu, c);
      mu -= beta.weight_coords;
    }
  } else {
    const Coefficient neg = -c;
    for (int k = 1; k <= -n - 1; ++k) {
      mu += beta.weight_coords;
      out.add_term(mu, neg);
    }
  }
}

inline FormalSum D_unchecked(const Root& beta, const FormalSum& s) {
  FormalSum out(s.rank());
  for (const auto& [lambda, c] : s.terms()) add_D_string(out, lambda, c, beta);
  return out;
}

inline FormalSum d_unchecked(const Root& beta, const FormalSum& s) {
  FormalSum out = D_unchecked(beta, s);
  out -= s;
  return out;
}

inline FormalSum r_unchecked(const Root& beta, const FormalSum& s) {
  FormalSum out(s.rank());
  for (const auto& [lambda, c] : s.terms()) {
    Weight mu = lambda;
    mu.add_scaled(-coroot_pairing(lambda, beta), beta.weight_coords);
    out.add_term(mu, c);
  }
  return out;
}

}  // namespace detail

/// D(beta) for a positive root beta.
inline FormalSum apply_D_root(const RootSystem& rs, const Root& beta, const FormalSum& s) {
  detail::require_rank(rs, s);
  detail::require_positive(rs, beta);
  return detail::D_unchecked(beta, s);
}

/// d(beta) = D(beta) - 1
inline FormalSum apply_d_root(const RootSystem& rs, const Root& beta, const FormalSum& s) {
  detail::require_rank(rs, s);
  detail::require_positive(rs, beta);
  return detail::d_unchecked(beta, s);
}

/// r(beta) acting on exponents; beta may be any root.
inline FormalSum apply_r_root(const RootSystem& rs, const Root& beta, const FormalSum& s) {
  detail::require_rank(rs, s);
  if (!rs.is_root(beta)) throw InvalidArgument(beta.str() + " is not a root of " + rs.name());
  return detail::r_unchecked(beta, s);
}

/// D_i, i 1-based.
inline FormalSum apply_D_simple(const RootSystem& rs, std::size_t i, const FormalSum& s) {
  rs.check_index(i);
  return apply_D_root(rs, rs.simple_root(i), s);
}

/// d_i = D_i - 1
inline FormalSum apply_d_simple(const RootSystem& rs, std::size_t i, const FormalSum& s) {
  rs.check_index(i);
  return apply_d_root(rs, rs.simple_root(i), s);
}

/// r_i acting on exponents.
inline FormalSum apply_r_simple(const RootSystem& rs, std::size_t i, const FormalSum& s) {
  rs.check_index(i);
  return apply_r_root(rs, rs.simple_root(i), s);
}

/// D_w or d_w for a word in product order; the rightmost letter acts first.
inline FormalSum apply_word(const RootSystem& rs, const WeylWord& word, const FormalSum& s, Flavor flavor) {
  detail::require_rank(rs, s);
  FormalSum out = s;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    rs.check_index(*it);
    const Root& alpha = rs.simple_root(*it);
    out = flavor == Flavor::D ? detail::D_unchecked(alpha, out) : detail::d_unchecked(alpha, out);
  }
  return out;
}

/// One factor of an operator composition.
struct Atom {
  enum class Kind { D, d, r, identity };

  Kind kind = Kind::identity;
  Root root;  // unused for identity

  static Atom D_simple(const RootSystem& rs, std::size_t i) { return {Kind::D, rs.simple_root(i)}; }
  static Atom d_simple(const RootSystem& rs, std::size_t i) { return {Kind::d, rs.simple_root(i)}; }
  static Atom r_simple(const RootSystem& rs, std::size_t i) { return {Kind::r, rs.simple_root(i)}; }
  static Atom D_root(const Root& beta) { return {Kind::D, beta}; }
  static Atom d_root(const Root& beta) { return {Kind::d, beta}; }
  static Atom r_root(const Root& beta) { return {Kind::r, beta}; }
  static Atom identity() { return {}; }

  std::string str() const {
    switch (kind) {
      case Kind::D: return "D(" + root.str() + ")";
      case Kind::d: return "d(" + root.str() + ")";
      case Kind::r: return "r(" + root.str() + ")";
      case Kind::identity: return "1";
    }
    return "?";
  }
};

/// Composition of atoms in product order: the rightmost atom acts first.
using Composition = std::vector<Atom>;

/// Integer combination of compositions; an empty composition is the identity.
struct OperatorExpr {
  std::vector<std::pair<Coefficient, Composition>> terms;

  OperatorExpr& add(Composition c, Coefficient k = 1) {
    terms.emplace_back(std::move(k), std::move(c));
    return *this;
  }
  OperatorExpr& add_identity() { return add({}); }

  std::string str() const {
    std::string s;
    for (const auto& [k, comp] : terms) {
      if (!s.empty()) s += " + ";
      if (k != 1) s += k.str() + "*";
      if (comp.empty()) s += "1";
      for (const auto& a : comp) s += a.str();
    }
    return s.empty() ? "0" : s;
  }
};

/// Product of bracketed operator sums; the rightmost bracket acts first.
using OperatorProduct = std::vector<OperatorExpr>;

inline void validate(const RootSystem& rs, const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::D:
    case Atom::Kind::d: detail::require_positive(rs, a.root); break;
    case Atom::Kind::r:
      if (!rs.is_root(a.root)) throw InvalidArgument(a.root.str() + " is not a root of " + rs.name());
      break;
    case Atom::Kind::identity: break;
  }
}

inline FormalSum apply(const RootSystem& rs, const Composition& comp, const FormalSum& s) {
  detail::require_rank(rs, s);
  FormalSum out = s;
  for (auto it = comp.rbegin(); it != comp.rend(); ++it) {
    validate(rs, *it);
    switch (it->kind) {
      case Atom::Kind::D: out = detail::D_unchecked(it->root, out); break;
      case Atom::Kind::d: out = detail::d_unchecked(it->root, out); break;
      case Atom::Kind::r: out = detail::r_unchecked(it->root, out); break;
      case Atom::Kind::identity: break;
    }
  }
  return out;
}

inline FormalSum apply(const RootSystem& rs, const OperatorExpr& expr, const FormalSum& s) {
  FormalSum out(s.rank());
  for (const auto& [k, comp] : expr.terms) {
    FormalSum part = apply(rs, comp, s);
    if (k != 1) part *= k;
    out += part;
  }
  return out;
}

inline FormalSum apply(const RootSystem& rs, std::span<const OperatorExpr> product, const FormalSum& s) {
  FormalSum out = s;
  for (auto it = product.rbegin(); it != product.rend(); ++it) out = apply(rs, *it, out);
  return out;
}

namespace detail {
inline void require_dominant(const RootSystem& rs, const Weight& lambda) {
  rs.check_rank(lambda);
  if (!lambda.is_dominant()) throw InvalidArgument("weight " + lambda.str() + " is not dominant");
}
}  // namespace detail

/// ch_lambda = D_{w_L} e^lambda, using the reduced word of w_L from `table`.
inline FormalSum character_demazure(const RootSystem& rs, const WeylGroupTable& table, const Weight& lambda) {
  detail::require_dominant(rs, lambda);
  return apply_word(rs, table.longest().word, FormalSum::monomial(lambda), Flavor::D);
}

inline FormalSum character_demazure(const RootSystem& rs, const Weight& lambda) {
  detail::require_dominant(rs, lambda);
  return character_demazure(rs, weyl_group(rs), lambda);
}

/// ch_lambda = sum over w in W of d_w e^lambda.
inline FormalSum character_demazure_sum(const RootSystem& rs, const WeylGroupTable& table, const Weight& lambda) {
  detail::require_dominant(rs, lambda);
  const FormalSum seed = FormalSum::monomial(lambda);
  FormalSum out(rs.rank());
  for (const auto& w : table.elements) out += apply_word(rs, w.word, seed, Flavor::d);
  return out;
}

inline FormalSum character_demazure_sum(const RootSystem& rs, const Weight& lambda) {
  detail::require_dominant(rs, lambda);
  return character_demazure_sum(rs, weyl_group(rs), lambda);
}

}  // namespace dempoly
