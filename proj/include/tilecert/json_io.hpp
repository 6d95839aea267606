#pragma once

#include "tilecert/engines.hpp"
#include "tilecert/formulas.hpp"
#include "tilecert/region.hpp"
#include "tilecert/verify.hpp"

#include <nlohmann/json.hpp>

namespace tilecert {

using Json = nlohmann::ordered_json;

/// {"exp": "p/q", ...} with signed decimal exponent keys in ascending order.
Json to_json(const LaurentPoly& p);
/// {"num": {...}, "den": {...}}
Json to_json(const RationalFunc& f);
/// {"label": ..., "cells": [[p,h,"L"|"R"],...], "axis_h": 0}
Json to_json(const Region& r);
Json to_json(const TGFResult& t);
Json to_json(const Tiling& t);
Json to_json(const FormulaValue& v, bool with_factors);
Json to_json(const CheckReport& rep);

LaurentPoly laurent_from_json(const Json& j);
RationalFunc ratfunc_from_json(const Json& j);
Region region_from_json(const Json& j);

std::string rat_to_string(const Rat& r);

}  // namespace tilecert
