#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dempoly/errors.hpp"
#include "dempoly/rootsys.hpp"
#include "dempoly/weight.hpp"

namespace dempoly {

/// Word in the simple reflections, written in product order:
/// {i1, i2, ..., ik} stands for r_{i1} r_{i2} ... r_{ik}, so r_{ik} acts first.
/// Indices are 1-based.
using WeylWord = std::vector<std::size_t>;

/// r_i lambda = lambda - (lambda . alpha_i^vee) alpha_i
inline Weight reflect_simple(const RootSystem& rs, std::size_t i, const Weight& lambda) {
  rs.check_index(i);
  rs.check_rank(lambda);
  Weight out = lambda;
  out.add_scaled(-lambda[i - 1], rs.simple_root(i).weight_coords);
  return out;
}

/// r(beta) lambda = lambda - (lambda . beta^vee) beta
inline Weight reflect_at_root(const RootSystem& rs, const Root& beta, const Weight& lambda) {
  const int n = pairing(rs, lambda, beta);
  Weight out = lambda;
  out.add_scaled(-n, beta.weight_coords);
  return out;
}

/// Applies a word, rightmost letter first.
inline Weight apply_word(const RootSystem& rs, const WeylWord& word, Weight lambda) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) lambda = reflect_simple(rs, *it, lambda);
  return lambda;
}

inline std::string word_str(const WeylWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i : w) s += "r" + std::to_string(i);
  return s;
}

/// Dominant weight in the orbit of lambda, and a word w with w lambda dominant.
/// Reflects at the lowest-index negative label until none is left.
inline std::pair<Weight, WeylWord> dominant_representative(const RootSystem& rs, const Weight& lambda) {
  rs.check_rank(lambda);
  Weight mu = lambda;
  WeylWord applied;  // in application order
  while (true) {
    std::size_t i = 0;
    while (i < mu.rank() && mu[i] >= 0) ++i;
    if (i == mu.rank()) break;
    mu = reflect_simple(rs, i + 1, mu);
    applied.push_back(i + 1);
  }
  std::reverse(applied.begin(), applied.end());
  return {mu, applied};
}

/// W lambda by breadth-first closure under the simple reflections.
inline std::set<Weight> orbit(const RootSystem& rs, const Weight& lambda) {
  rs.check_rank(lambda);
  std::set<Weight> seen{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    Weight mu = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 1; i <= rs.rank(); ++i) {
      if (mu[i - 1] == 0) continue;
      Weight nu = reflect_simple(rs, i, mu);
      if (seen.insert(nu).second) queue.push_back(std::move(nu));
    }
  }
  return seen;
}

struct WeylElement {
  Weight fingerprint;  // w rho; faithful since rho is regular
  WeylWord word;       // a reduced word
  std::size_t length = 0;
  int sign = 1;  // det w = (-1)^length
};

/// All elements of W with reduced words, found breadth-first from the identity.
struct WeylGroupTable {
  std::vector<WeylElement> elements;
  std::size_t longest_index = 0;

  std::size_t order() const { return elements.size(); }
  const WeylElement& longest() const { return elements[longest_index]; }

  std::optional<std::size_t> find(const Weight& fingerprint) const {
    for (std::size_t k = 0; k < elements.size(); ++k)
      if (elements[k].fingerprint == fingerprint) return k;
    return std::nullopt;
  }
};

inline constexpr std::size_t kMaxWeylGroupRank = 3;

inline WeylGroupTable weyl_group(const RootSystem& rs) {
  if (rs.rank() > kMaxWeylGroupRank) {
    throw Unsupported("full Weyl group enumeration is limited to rank <= 3; " + rs.name() + " has rank " +
                      std::to_string(rs.rank()));
  }
  WeylGroupTable table;
  std::map<Weight, std::size_t> seen;
  const Weight& rho = rs.weyl_vector();
  table.elements.push_back({rho, {}, 0, 1});
  seen[rho] = 0;
  // Left multiplication: r_i w has fingerprint r_i (w rho); BFS order
  // guarantees the first word found is reduced.
  for (std::size_t k = 0; k < table.elements.size(); ++k) {
    const WeylElement cur = table.elements[k];
    for (std::size_t i = 1; i <= rs.rank(); ++i) {
      Weight fp = reflect_simple(rs, i, cur.fingerprint);
      if (seen.contains(fp)) continue;
      WeylElement next;
      next.fingerprint = fp;
      next.word.push_back(i);
      next.word.insert(next.word.end(), cur.word.begin(), cur.word.end());
      next.length = cur.length + 1;
      next.sign = -cur.sign;
      seen[fp] = table.elements.size();
      table.elements.push_back(std::move(next));
    }
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k < table.elements.size(); ++k)
    if (table.elements[k].length > table.elements[best].length) best = k;
  table.longest_index = best;
  return table;
}

/// Product of root reflections, stored in product order (last entry acts first).
struct ReflectionProduct {
  std::vector<Root> factors;

  Weight apply(const RootSystem& rs, Weight lambda) const {
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) lambda = reflect_at_root(rs, *it, lambda);
    return lambda;
  }
};

/// w_L = r(gamma_p) ... r(gamma_2) r(gamma_1)
inline ReflectionProduct longest_element_via_gammas(const RootSystem& rs) {
  const GammaSequence g = gamma_sequence(rs);
  ReflectionProduct p;
  p.factors.assign(g.roots.rbegin(), g.roots.rend());
  return p;
}

}  // namespace dempoly
