#pragma once

#include <string>

#include <json.hpp>

#include "twistinv/filtration.hpp"
#include "twistinv/groupalgebra.hpp"
#include "twistinv/repn.hpp"

namespace twistinv {

using json = nlohmann::json;

json weight_to_json(const Weight& w);
Weight weight_from_json(const json& j);

// Laurent element as a sorted array of {"exp": [ints], "coeff": "p/q"}.
json ga_to_json(const GroupAlgebraElement& x);
GroupAlgebraElement ga_from_json(const json& j);

json poly_to_json(const MultiWeightPolynomial& p);

// Module bundle: basis weights plus sparse generator matrices as
// (row, col, "p/q") triples; optional sigma intertwiner; per-weight Gram
// blocks so cached modules stay usable for the invariant-space machinery.
json module_to_json(const Module& m);
Module module_from_json(const RootDatum& datum, const json& j);

}  // namespace twistinv
