#pragma once

#include <json.hpp>

#include <string>

#include "wallscan/scan.hpp"

namespace wallscan {

using json = nlohmann::json;

// Rationals travel as exact "p/q" strings (plain "p" for integers); JSON
// integers are accepted on input, floats are not.
json rational_to_json(const Rational& x);
Rational rational_from_json(const json& j);

json divisor_to_json(const DivisorClass& d);
DivisorClass divisor_from_json(const json& j);

json chern_to_json(const ChernCharacter& ch);
ChernCharacter chern_from_json(const json& j);

json point_to_json(const StabilityPoint& pt);
StabilityPoint point_from_json(const json& j);

// Surface file: { "name"?, "rank", "gram", "h0", "g0"?, "effective_generators"?,
// "negative_curves"? }. Generator order is normalized so a unique negative
// generator sits first, and the frame is oriented by C1 (else by the first
// negative curve).
json surface_to_json(const SurfacePreset& s);
SurfacePreset surface_from_json(const json& j);

json bounds_to_json(const ScanBounds& b);
ScanBounds bounds_from_json(const json& j);

json wall_to_json(const WallConic& w);
json report_to_json(const ScanReport& r);

// Injected higher-rank candidates: array of { "ch", "profile": { "factors",
// "quotient_factors" }, "quotient_h0_c1" }. Validates slope monotonicity,
// per-factor Bogomolov, positive factor ranks and the sum constraints.
std::vector<CandidateSubobject> injected_from_json(const json& j, const SurfacePreset& surface);

// Object spec mini-language:
//   O(-c1,...,cn)   line bundle O(-C)
//   IZ(c1,...,cn;m) ideal sheaf twist I_Z(-C), length m
//   TOR(c1,...,cn)  torsion class O(C)|_C
//   raw r;c1,...,cn;ch2
// Coefficients are lattice-basis by default; cone_basis reads them against the
// preset's effective generators.
ChernCharacter parse_object_spec(const std::string& spec, const SurfacePreset& surface,
                                 bool cone_basis);

json load_json_file(const std::string& path);

} // namespace wallscan
