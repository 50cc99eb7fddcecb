#pragma once

// JSON forms of library values.
//
// FormalSum: [{"w":[labels],"c":coeff}, ...] sorted lexicographically by "w".

#include <json.hpp>

#include <set>
#include <string>
#include <vector>

#include "dempoly/errors.hpp"
#include "dempoly/formal.hpp"
#include "dempoly/weight.hpp"

namespace dempoly {

using Json = nlohmann::ordered_json;

inline Json weight_to_json(const Weight& w) {
  Json a = Json::array();
  for (int l : w.labels()) a.push_back(l);
  return a;
}

inline Weight weight_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("weight JSON must be an array of integers");
  std::vector<int> labels;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvalidArgument("weight JSON must be an array of integers");
    labels.push_back(x.get<int>());
  }
  return Weight(std::move(labels));
}

inline Json to_json(const FormalSum& s) {
  Json a = Json::array();
  for (const auto& [mu, c] : s.terms()) {
    Json t;
    t["w"] = weight_to_json(mu);
    t["c"] = to_int64(c);
    a.push_back(std::move(t));
  }
  return a;
}

/// `rank` is needed to type the empty sum.
inline FormalSum formal_sum_from_json(const Json& j, std::size_t rank) {
  if (!j.is_array()) throw InvalidArgument("formal sum JSON must be an array");
  FormalSum s(rank);
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("w") || !t.contains("c") || !t["c"].is_number_integer()) {
      throw InvalidArgument("formal sum term must be {\"w\":[ints],\"c\":int}");
    }
    s.add_term(weight_from_json(t["w"]), Coefficient(t["c"].get<std::int64_t>()));
  }
  return s;
}

inline Json to_json(const std::set<Weight>& ws) {
  Json a = Json::array();
  for (const auto& w : ws) a.push_back(weight_to_json(w));
  return a;
}

}  // namespace dempoly
