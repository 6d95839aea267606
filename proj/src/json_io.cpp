#include "tilecert/json_io.hpp"

namespace tilecert {

std::string rat_to_string(const Rat& r) { return r.get_str(); }

Json to_json(const LaurentPoly& p) {
    Json j = Json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = rat_to_string(c);
    return j;
}

Json to_json(const RationalFunc& f) {
    return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

Json to_json(const Region& r) {
    Json cells = Json::array();
    for (const TriCell& c : r.cells())
        cells.push_back(Json::array({c.p, c.h, c.o == Orient::Left ? "L" : "R"}));
    return Json{{"label", r.label()},
                {"cells", std::move(cells)},
                {"axis_h", Region::axis_h},
                {"cell_count", r.size()},
                {"imbalance", r.imbalance()}};
}

Json to_json(const TGFResult& t) {
    Json stats = Json::object();
    if (t.tilings_enumerated >= 0) stats["tilings_enumerated"] = t.tilings_enumerated;
    if (t.states_memoized >= 0) stats["states_memoized"] = t.states_memoized;
    Json j{{"value", to_json(t.value)},
           {"engine", t.engine},
           {"scheme", t.scheme},
           {"stats", std::move(stats)}};
    if (!t.horizontal_constant)
        j["horizontal_count"] = "nonconstant";
    else if (t.horizontal_count)
        j["horizontal_count"] = *t.horizontal_count;
    else
        j["horizontal_count"] = nullptr;
    return j;
}

Json to_json(const Tiling& t) {
    Json lozenges = Json::array();
    for (const Lozenge& l : t.lozenges)
        lozenges.push_back(Json::array(
            {Json::array({l.a.p, l.a.h, l.a.o == Orient::Left ? "L" : "R"}),
             Json::array({l.b.p, l.b.h, l.b.o == Orient::Left ? "L" : "R"})}));
    return Json{{"lozenges", std::move(lozenges)}, {"weight", to_json(t.weight)}};
}

Json to_json(const FormulaValue& v, bool with_factors) {
    Json j{{"value", to_json(v.value)}};
    if (with_factors) {
        Json fs = Json::array();
        for (const FormulaFactor& f : v.factors)
            fs.push_back(Json{{"tag", f.tag}, {"value", to_json(f.value)}});
        j["factors"] = std::move(fs);
    }
    return j;
}

Json to_json(const CheckReport& rep) {
    const char* status = rep.status == Status::Pass   ? "PASS"
                         : rep.status == Status::Fail ? "FAIL"
                                                      : "SKIP";
    Json j{{"check", rep.check}, {"params", rep.params}, {"status", status}};
    if (rep.status != Status::Skip) {
        j["lhs"] = to_json(rep.lhs);
        j["rhs"] = to_json(rep.rhs);
    }
    if (!rep.note.empty()) j["note"] = rep.note;
    j["wall_ms"] = rep.wall_ms;
    return j;
}

LaurentPoly laurent_from_json(const Json& j) {
    std::vector<LaurentPoly::Term> terms;
    for (auto it = j.begin(); it != j.end(); ++it)
        terms.emplace_back(std::stoll(it.key()), Rat(it.value().get<std::string>()));
    return LaurentPoly::from_terms(std::move(terms));
}

RationalFunc ratfunc_from_json(const Json& j) {
    return RationalFunc(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

Region region_from_json(const Json& j) {
    std::vector<TriCell> cells;
    for (const auto& c : j.at("cells"))
        cells.push_back(TriCell{c.at(0).get<std::int32_t>(), c.at(1).get<std::int32_t>(),
                                c.at(2).get<std::string>() == "L" ? Orient::Left
                                                                  : Orient::Right});
    return Region::from_cells(j.value("label", std::string("region")), std::move(cells));
}

}  // namespace tilecert
