#pragma once

// JSON encodings of the library's values. Decoders throw
// std::invalid_argument on malformed input.
//
//   complex     [re, im]                      (a bare number is read as real)
//   quaternion  {"e": [c1, c2, c3, c4]}  or  {"ijk": [q0, q1, q2, q3]}
//   triple      {"a1": c, "a2": c, "b1": c, "b2": c}  or the preset "laplace-t0"
//   point       [x, y, z]
//   function    {"poly": [c, ...]}
//               {"series": {"center": c, "coeffs": [c, ...], "radius": r}}
//               {"exp": {"amp": c, "rate": c}}
//               {"lincomb": [[c, function], ...]}
//               or a preset name: "zero", "one", "w", "w2", "w3", "exp", "sin", "cos"
//   map         {"side": "right"|"left", "triple": ..., "F1": f, "F2": f, "F3": f, "F4": f}
//   series      {"side": ..., "triple": ..., "coeffs": [quaternion, ...]}
//   operator    {"n": 2, "terms": [{"a": 2, "b": 0, "g": 0, "c": 1.0}, ...]}
//               or a preset name: "laplace3d", "example5"

#include "gmono/analytic.hpp"
#include "gmono/e3.hpp"
#include "gmono/monogenic.hpp"
#include "gmono/pde.hpp"
#include "gmono/quaternion.hpp"

#include "json.hpp"

#include <string>

namespace gmono::json_io {

using nlohmann::json;

json encode(Complex c);
json encode(const Quaternion& q);
json encode(const IjkQuaternion& q);
json encode(const Triple& t);
json encode(const Point3& p);
json encode(const AnalyticFunction& f);
json encode(const GMonogenicMap& m);
json encode(const QuaternionSeries& s);
json encode(const PdeOperator& op);

Complex decode_complex(const json& j);
Quaternion decode_quaternion(const json& j);
Triple decode_triple(const json& j);
Point3 decode_point(const json& j);
AnalyticFunction decode_function(const json& j);
/// Accepts both the explicit map form and the series form; the latter is
/// canonicalized.
GMonogenicMap decode_map(const json& j);
QuaternionSeries decode_series(const json& j);
PdeOperator decode_operator(const json& j);

Triple triple_preset(const std::string& name);
AnalyticFunction function_preset(const std::string& name);

/// Parses a file's contents; throws std::invalid_argument if unreadable.
json read_file(const std::string& path);

} // namespace gmono::json_io
