#pragma once

#include <string>

#include "pvalent/series.hpp"
#include "pvalent/verify.hpp"

namespace pvalent {

// {"p":int,"n":int,"N":int,"coeffs":[{"k":int,"re":float,"im":float},...]}
// with the leading coefficient a_p implicit (always 1).  Every tail slot
// p+n..N is emitted so that parse(print(f)) reproduces f exactly.
std::string to_json(const PSeries& f);
PSeries pseries_from_json(const std::string& text);

// {"pass":bool,"worst_violation":float,"witness":{"re":float,"im":float},
//  "radial_samples":int,"angular_samples":int,"tolerance":float}
std::string to_json(const VerifyReport& rep);

} // namespace pvalent
