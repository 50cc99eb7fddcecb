#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dempoly/errors.hpp"

namespace dempoly {

/// Integral weight stored as Dynkin labels, i.e. coordinates with respect
/// to the fundamental weights.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> labels) : labels_(std::move(labels)) {}
  Weight(std::initializer_list<int> labels) : labels_(labels) {}

  static Weight zero(std::size_t rank) { return Weight(std::vector<int>(rank, 0)); }

  std::size_t rank() const { return labels_.size(); }
  int operator[](std::size_t i) const { return labels_[i]; }
  int& operator[](std::size_t i) { return labels_[i]; }
  std::span<const int> labels() const { return labels_; }

  bool is_zero() const {
    for (int l : labels_)
      if (l != 0) return false;
    return true;
  }
  bool is_dominant() const {
    for (int l : labels_)
      if (l < 0) return false;
    return true;
  }
  /// Dominant with every label strictly positive.
  bool is_regular() const {
    for (int l : labels_)
      if (l <= 0) return false;
    return true;
  }

  Weight& operator+=(const Weight& o) {
    check_rank(o);
    for (std::size_t i = 0; i < labels_.size(); ++i) labels_[i] += o.labels_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_rank(o);
    for (std::size_t i = 0; i < labels_.size(); ++i) labels_[i] -= o.labels_[i];
    return *this;
  }
  /// this += k * o
  Weight& add_scaled(int k, const Weight& o) {
    check_rank(o);
    for (std::size_t i = 0; i < labels_.size(); ++i) labels_[i] += k * o.labels_[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) {
    for (int& l : a.labels_) l = -l;
    return a;
  }
  friend Weight operator*(int k, Weight a) {
    for (int& l : a.labels_) l *= k;
    return a;
  }

  // lexicographic on labels; shorter tuples first
  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(labels_[i]);
    }
    return s + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

 private:
  void check_rank(const Weight& o) const {
    if (o.rank() != rank()) {
      throw InvalidArgument("weight rank mismatch: " + str() + " vs " + o.str());
    }
  }

  std::vector<int> labels_;
};

}  // namespace dempoly
