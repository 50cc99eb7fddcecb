#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dempoly/errors.hpp"
#include "dempoly/numeric.hpp"
#include "dempoly/weight.hpp"

namespace dempoly {

enum class Family { A, B, C, D, G };

/// Cartan type X_r of a simple Lie algebra.
struct AlgebraId {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const AlgebraId&, const AlgebraId&) = default;
};

inline constexpr int kMaxRank = 8;

inline char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::G: return 'G';
  }
  return '?';
}

inline std::string to_string(const AlgebraId& id) {
  return std::string(1, family_letter(id.family)) + std::to_string(id.rank);
}

/// Throws InvalidArgument unless `id` names a supported simple algebra.
inline void validate(const AlgebraId& id) {
  const std::string name = to_string(id);
  if (id.rank < 1 || id.rank > kMaxRank) {
    throw InvalidArgument("unsupported algebra " + name + ": rank must be in [1.." +
                          std::to_string(kMaxRank) + "]");
  }
  switch (id.family) {
    case Family::A: break;
    case Family::B:
    case Family::C:
      if (id.rank < 2) throw InvalidArgument("unsupported algebra " + name + ": rank must be >= 2");
      break;
    case Family::D:
      if (id.rank < 3) throw InvalidArgument("unsupported algebra " + name + ": rank must be >= 3");
      break;
    case Family::G:
      if (id.rank != 2) throw InvalidArgument("unsupported algebra " + name + ": only G2 exists");
      break;
  }
}

/// Parses "A3", "g2", "B4", ... (case-insensitive).
inline AlgebraId parse_algebra(std::string_view text) {
  if (text.size() < 2) throw InvalidArgument("cannot parse algebra name '" + std::string(text) + "'");
  AlgebraId id;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': id.family = Family::A; break;
    case 'B': id.family = Family::B; break;
    case 'C': id.family = Family::C; break;
    case 'D': id.family = Family::D; break;
    case 'G': id.family = Family::G; break;
    default: throw InvalidArgument("unknown algebra family in '" + std::string(text) + "'");
  }
  const auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), id.rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw InvalidArgument("cannot parse rank in '" + std::string(text) + "'");
  }
  validate(id);
  return id;
}

/// A root, carried in both the simple-root basis and the weight basis.
struct Root {
  std::vector<int> root_coords;    // coefficients of the simple roots
  Weight weight_coords;            // Dynkin labels
  std::vector<int> coroot_coords;  // beta^vee in the simple-coroot basis
  Rational norm_sq;                // (beta, beta)

  bool is_positive() const {
    return std::all_of(root_coords.begin(), root_coords.end(), [](int c) { return c >= 0; });
  }
  int height() const {
    int h = 0;
    for (int c : root_coords) h += c;
    return h;
  }
  std::string str() const {
    std::string s = "alpha[";
    for (std::size_t i = 0; i < root_coords.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(root_coords[i]);
    }
    return s + "]";
  }

  friend bool operator==(const Root& a, const Root& b) { return a.root_coords == b.root_coords; }
};

using IntMatrix = std::vector<std::vector<int>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Immutable static data of a simple Lie algebra.
///
/// Conventions: cartan[i][j] = <alpha_j, alpha_i^vee>, so column j of the
/// Cartan matrix holds the Dynkin labels of alpha_j. Long roots have squared
/// length 2. Simple-root indices in the public API are 1-based where they
/// name a reflection r_i or operator D_i, and 0-based for container access.
class RootSystem {
 public:
  const AlgebraId& id() const { return id_; }
  std::string name() const { return to_string(id_); }
  std::size_t rank() const { return static_cast<std::size_t>(id_.rank); }

  const IntMatrix& cartan() const { return cartan_; }
  /// G[i][j] = <Lambda^i, Lambda^j>.
  const RationalMatrix& quadratic_form() const { return quadratic_form_; }
  /// (alpha_i, alpha_j).
  const RationalMatrix& root_form() const { return root_form_; }
  const std::vector<Rational>& root_lengths_sq() const { return root_lengths_sq_; }
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const Weight& weyl_vector() const { return weyl_vector_; }

  /// Simple root alpha_i, 1-based.
  const Root& simple_root(std::size_t i) const {
    check_index(i);
    return positive_roots_[simple_index_[i - 1]];
  }

  /// Root with the given simple-root coordinates (either sign), if any.
  std::optional<Root> find_root(const std::vector<int>& root_coords) const {
    if (root_coords.size() != rank()) return std::nullopt;
    if (auto it = index_.find(root_coords); it != index_.end()) return positive_roots_[it->second];
    std::vector<int> neg(root_coords);
    for (int& c : neg) c = -c;
    if (auto it = index_.find(neg); it != index_.end()) return negate(positive_roots_[it->second]);
    return std::nullopt;
  }
  bool is_root(const Root& beta) const { return find_root(beta.root_coords).has_value(); }
  bool is_positive_root(const Root& beta) const {
    return beta.root_coords.size() == rank() && index_.contains(beta.root_coords);
  }

  /// Positive root sum_k coeffs[k] alpha_{k+1}; throws if it is not one.
  const Root& positive_root(const std::vector<int>& root_coords) const {
    auto it = index_.find(root_coords);
    if (it == index_.end()) throw InvalidArgument("not a positive root of " + name());
    return positive_roots_[it->second];
  }

  /// Dynkin labels of sum_k c[k] alpha_{k+1}.
  Weight weight_of_root_coords(const std::vector<int>& c) const {
    if (c.size() != rank()) throw InvalidArgument("root coordinate rank mismatch");
    Weight w = Weight::zero(rank());
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) w[i] += cartan_[i][j] * c[j];
    return w;
  }

  /// Exact simple-root coordinates of an arbitrary weight.
  std::vector<Rational> root_coords_of(const Weight& mu) const {
    check_rank(mu);
    std::vector<Rational> c(rank());
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) c[i] += inverse_cartan_[i][j] * mu[j];
    return c;
  }

  /// Integer simple-root coordinates of mu, or nullopt when mu is not in Q.
  std::optional<std::vector<int>> root_lattice_coords(const Weight& mu) const {
    const auto q = root_coords_of(mu);
    std::vector<int> out(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      if (!is_integral(q[i])) return std::nullopt;
      out[i] = static_cast<int>(to_int64(q[i]));
    }
    return out;
  }

  bool in_root_lattice(const Weight& mu) const { return root_lattice_coords(mu).has_value(); }

  /// mu <= lambda in dominance order: lambda - mu in N_0 S.
  bool dominance_le(const Weight& mu, const Weight& lambda) const {
    auto c = root_lattice_coords(lambda - mu);
    return c && std::all_of(c->begin(), c->end(), [](int x) { return x >= 0; });
  }

  /// Exact (mu, nu) through the quadratic form.
  Rational inner_product(const Weight& mu, const Weight& nu) const {
    check_rank(mu);
    check_rank(nu);
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (mu[i] == 0) continue;
      for (std::size_t j = 0; j < rank(); ++j) {
        if (nu[j] != 0) s += quadratic_form_[i][j] * (mu[i] * nu[j]);
      }
    }
    return s;
  }

  /// G sigma in double precision, so that <mu, sigma> = sum_i mu_i (G sigma)_i.
  std::vector<double> form_times(const std::vector<double>& sigma) const {
    if (sigma.size() != rank()) throw InvalidArgument("evaluation point rank mismatch");
    std::vector<double> v(rank(), 0.0);
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) v[i] += quadratic_form_d_[i][j] * sigma[j];
    return v;
  }

  void check_rank(const Weight& mu) const {
    if (mu.rank() != rank()) {
      throw InvalidArgument("weight " + mu.str() + " has rank " + std::to_string(mu.rank()) + ", " +
                            name() + " needs " + std::to_string(rank()));
    }
  }
  void check_index(std::size_t i) const {
    if (i < 1 || i > rank()) {
      throw InvalidArgument("simple-root index " + std::to_string(i) + " out of range [1.." +
                            std::to_string(rank()) + "] for " + name());
    }
  }

  static Root negate(Root r) {
    for (int& c : r.root_coords) c = -c;
    for (int& c : r.coroot_coords) c = -c;
    r.weight_coords = -r.weight_coords;
    return r;
  }

 private:
  friend RootSystem build_root_system(const AlgebraId& id);

  AlgebraId id_;
  IntMatrix cartan_;
  RationalMatrix inverse_cartan_;
  RationalMatrix root_form_;
  RationalMatrix quadratic_form_;
  std::vector<std::vector<double>> quadratic_form_d_;
  std::vector<Rational> root_lengths_sq_;
  std::vector<Root> positive_roots_;
  std::vector<std::size_t> simple_index_;
  std::map<std::vector<int>, std::size_t> index_;
  Weight weyl_vector_;
};

namespace detail {

inline IntMatrix cartan_matrix(const AlgebraId& id) {
  const int r = id.rank;
  IntMatrix a(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (id.family) {
    case Family::A:
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      break;
    case Family::B:
      // alpha_r short: <alpha_{r-1}, alpha_r^vee> = -2
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      a[r - 1][r - 2] = -2;
      break;
    case Family::C:
      // alpha_r long: <alpha_r, alpha_{r-1}^vee> = -2
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      a[r - 2][r - 1] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
      link(r - 3, r - 1);
      break;
    case Family::G:
      // alpha_1 long: <alpha_1, alpha_2^vee> = -3
      a[0][1] = -1;
      a[1][0] = -3;
      break;
  }
  return a;
}

inline RationalMatrix invert(const IntMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw Error("singular Cartan matrix");
    std::swap(a[piv], a[col]);
    const Rational p = a[col][col];
    for (auto& x : a[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  RationalMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

// Squared lengths from the symmetrizability condition
// cartan[i][j] * len_i = cartan[j][i] * len_j, scaled so the longest is 2.
inline std::vector<Rational> simple_root_lengths(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> len(n, 0);
  len[0] = 1;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || a[i][j] == 0 || len[j] != 0) continue;
      len[j] = len[i] * a[i][j] / a[j][i];
      stack.push_back(j);
    }
  }
  Rational longest = *std::max_element(len.begin(), len.end());
  for (auto& l : len) l = l * 2 / longest;
  return len;
}

}  // namespace detail

/// Builds Cartan data, the quadratic form and the positive roots (generated
/// by root-string closure from the simple roots).
inline RootSystem build_root_system(const AlgebraId& id) {
  validate(id);
  RootSystem rs;
  const std::size_t n = static_cast<std::size_t>(id.rank);
  rs.id_ = id;
  rs.cartan_ = detail::cartan_matrix(id);
  rs.inverse_cartan_ = detail::invert(rs.cartan_);
  rs.root_lengths_sq_ = detail::simple_root_lengths(rs.cartan_);

  // (alpha_i, alpha_j) = <alpha_i, alpha_j^vee> (alpha_j, alpha_j) / 2
  rs.root_form_.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rs.root_form_[i][j] = Rational(rs.cartan_[j][i]) * rs.root_lengths_sq_[j] / 2;

  // Lambda^i = sum_k inverse_cartan[k][i] alpha_k
  rs.quadratic_form_.assign(n, std::vector<Rational>(n));
  rs.quadratic_form_d_.assign(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          s += rs.inverse_cartan_[k][i] * rs.root_form_[k][l] * rs.inverse_cartan_[l][j];
      rs.quadratic_form_[i][j] = s;
      rs.quadratic_form_d_[i][j] = s.convert_to<double>();
    }
  }

  auto make_root = [&](const std::vector<int>& c) {
    Root r;
    r.root_coords = c;
    r.weight_coords = rs.weight_of_root_coords(c);
    Rational norm = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) norm += rs.root_form_[i][j] * (c[i] * c[j]);
    r.norm_sq = norm;
    // beta^vee = sum_k c_k (alpha_k, alpha_k) / (beta, beta) alpha_k^vee
    r.coroot_coords.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      r.coroot_coords[k] = static_cast<int>(to_int64(Rational(c[k]) * rs.root_lengths_sq_[k] / norm));
    }
    return r;
  };

  // Root-string closure, one height at a time.
  std::map<std::vector<int>, bool> known;
  std::vector<std::vector<int>> layer;
  std::vector<std::vector<int>> all;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    known[e] = true;
  }
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : layer) {
      all.push_back(beta);
      const Weight w = rs.weight_of_root_coords(beta);
      for (std::size_t j = 0; j < n; ++j) {
        // p = how far the alpha_j string extends below beta
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[j] -= 1;
          if (!known.contains(down)) break;
          ++p;
        }
        const int q = p - w[j];
        if (q <= 0) continue;
        std::vector<int> up = beta;
        up[j] += 1;
        if (!known.contains(up)) {
          known[up] = true;
          next.push_back(up);
        }
      }
    }
    std::sort(next.begin(), next.end(), std::greater<>());
    layer = std::move(next);
  }

  for (const auto& c : all) {
    rs.index_[c] = rs.positive_roots_.size();
    rs.positive_roots_.push_back(make_root(c));
  }
  rs.simple_index_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    rs.simple_index_[i] = rs.index_.at(e);
  }
  rs.weyl_vector_ = Weight(std::vector<int>(n, 1));
  return rs;
}

inline RootSystem build_root_system(std::string_view name) {
  return build_root_system(parse_algebra(name));
}

/// Closed-form |R_+| for each family.
inline std::size_t positive_root_count(const AlgebraId& id) {
  const std::size_t r = static_cast<std::size_t>(id.rank);
  switch (id.family) {
    case Family::A: return r * (r + 1) / 2;
    case Family::B:
    case Family::C: return r * r;
    case Family::D: return r * (r - 1);
    case Family::G: return 6;
  }
  return 0;
}

/// lambda . beta^vee = 2 (lambda, beta) / (beta, beta); beta may be any root.
inline int pairing(const RootSystem& rs, const Weight& lambda, const Root& beta) {
  rs.check_rank(lambda);
  if (!rs.is_root(beta)) throw InvalidArgument(beta.str() + " is not a root of " + rs.name());
  int s = 0;
  for (std::size_t k = 0; k < rs.rank(); ++k) s += lambda[k] * beta.coroot_coords[k];
  return s;
}

/// Ordered list gamma_1 ... gamma_p of positive roots along a path of
/// polytope edges from the highest to the lowest weight.
struct GammaSequence {
  std::vector<Root> roots;

  std::size_t size() const { return roots.size(); }
  const Root& operator[](std::size_t j) const { return roots[j]; }  // 0-based
};

/// Defined for A1, A2, B2, G2 and A3.
inline GammaSequence gamma_sequence(const RootSystem& rs) {
  const AlgebraId& id = rs.id();
  std::vector<std::vector<int>> coords;
  if (id.family == Family::A && id.rank == 1) {
    coords = {{1}};
  } else if (id.family == Family::A && id.rank == 2) {
    coords = {{1, 0}, {1, 1}, {0, 1}};
  } else if (id.family == Family::B && id.rank == 2) {
    coords = {{1, 0}, {1, 1}, {1, 2}, {0, 1}};
  } else if (id.family == Family::G) {
    coords = {{1, 0}, {1, 1}, {2, 3}, {1, 2}, {1, 3}, {0, 1}};
  } else if (id.family == Family::A && id.rank == 3) {
    coords = {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {0, 1, 0}, {0, 1, 1}, {0, 0, 1}};
  } else {
    throw Unsupported("no gamma sequence defined for " + rs.name());
  }
  GammaSequence g;
  for (const auto& c : coords) g.roots.push_back(rs.positive_root(c));
  return g;
}

}  // namespace dempoly
