#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "toricapolar/graded_ring.hpp"
#include "toricapolar/secant_probe.hpp"

namespace toricapolar {

std::string read_text_file(const std::string& path);

/// JSON object with "rays", "max_cones" and optionally "ambient_rank", "var_names",
/// "dual_names", "assert_complete".
CoxRing parse_fan_json(const std::string& text);
CoxRing load_fan(const std::string& path);

Rational parse_rational(std::string_view text);
std::vector<Rational> parse_rational_list(std::string_view text);

/// Lines `coefficient | c1, c2, ...`; blank lines and `#` comments skipped.
std::vector<DecompositionTerm> parse_terms_file(const CoxRing& ring, std::string_view text);

/// A `params: l, m` header followed by lines `coefficient | point`, where both sides are
/// Laurent polynomials in the parameters, e.g. `l^-1*m^-1 | l, 1, 1, m`.
LaurentFamily parse_family_file(const CoxRing& ring, std::string_view text);

}  // namespace toricapolar
