#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "camb/forms.hpp"
#include "camb/group.hpp"

namespace camb {

using Json = nlohmann::json;

/// Group definition schema:
///   { "generators": ["p","q"],
///     "coxeter_matrix": [[1,4],[4,1]],        // 0 encodes infinity
///     "d": 1,                                  // optional field choice
///     "cartan": [[{...scalar...}, ...], ...],  // optional explicit matrix
///     "delta": [{...scalar...}, ...] }         // optional delta override
/// Scalars: {"num":..,"den":..,"surd_num":..,"surd_den":..} (dens default 1,
/// surd_num defaults 0); integers are accepted directly.
CoxGroup group_from_json(const Json& j);
CoxGroup load_group(const std::string& path);

Scalar scalar_from_json(const Json& j, int d);
Json scalar_to_json(const Scalar& s);
Json root_to_json(const Vec& v);

/// Comma-separated generator names -> Coxeter element word (each generator of
/// the group exactly once unless allow_subset).
CoxWord parse_cox_word(const CoxGroup& g, const std::string& csv, bool allow_subset = false);

}  // namespace camb
