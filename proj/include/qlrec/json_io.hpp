#pragma once

#include <json.hpp>

#include "qlrec/polyvalue.hpp"
#include "qlrec/ratfunc.hpp"

namespace qlrec {

using ordered_json = nlohmann::ordered_json;

// {"vars":[...], "terms":[[[e1,e2,...],"num/den"],...]} with terms in descending
// graded-lex order; byte-stable given canonical form.
ordered_json to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const ordered_json& j);

// {"num": <poly>, "den": <poly>}
ordered_json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const ordered_json& j);

// {"var": "...", "coeffs": [<ratfunc>...]} from constant upward
ordered_json to_json(const PolyValue& p);

} // namespace qlrec
