#pragma once

#include "dempoly/json.hpp"
#include "dempoly/polysum.hpp"

namespace dempoly {

/// {"formula","algebra","lambda","match","diff","n_points","millis"}
inline Json to_json(const VerificationReport& r) {
  Json j;
  j["formula"] = r.formula;
  j["algebra"] = r.algebra;
  j["lambda"] = weight_to_json(r.lambda);
  j["match"] = r.match;
  j["diff"] = to_json(r.diff);
  j["n_points"] = r.n_points;
  j["millis"] = r.millis;
  return j;
}

inline Json to_json(const PolytopeExpansion& e) {
  return to_json(e.as_formal_sum(e.highest.rank()));
}

}  // namespace dempoly
