#include "schur/json_io.hpp"

#include <sstream>

namespace schur {

using nlohmann::json;

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const SkewShape& shape) {
    return json{{"outer", shape.outer().parts()}, {"inner", shape.inner().parts()}};
}

json to_json(const LRFilling& filling) { return json(filling.entries()); }

json to_json(const SchurExpansion& expansion) {
    json terms = json::array();
    const auto& map = expansion.terms();
    for (auto it = map.rbegin(); it != map.rend(); ++it)
        terms.push_back(json{{"nu", it->first.parts()}, {"coeff", it->second}});
    return terms;
}

json to_json(const OverlapProfile& profile) {
    json rows = json::array(), cols = json::array();
    for (const Partition& p : profile.rows) rows.push_back(p.parts());
    for (const Partition& p : profile.cols) cols.push_back(p.parts());
    return json{{"rows", rows}, {"cols", cols}, {"rects", profile.rects}};
}

json to_json(const ScreenWitness& witness) {
    std::ostringstream family;
    family << witness.family;
    return json{{"family", family.str()}, {"k", witness.k},       {"l", witness.l},
                {"prefix", witness.prefix}, {"lhs", witness.lhs}, {"rhs", witness.rhs}};
}

json to_json(const ScreenVerdict& verdict) {
    json witnesses = json::array();
    for (const ScreenWitness& w : verdict.witnesses) witnesses.push_back(to_json(w));
    return json{{"passed", verdict.passed}, {"witnesses", witnesses}};
}

namespace {

json optional_flag(const std::optional<bool>& value) {
    return value.has_value() ? json(*value) : json("skipped");
}

} // namespace

json to_json(const NecessaryConditionReport& report) {
    return json{{"screen", to_json(report.screen)},
                {"support_contained", optional_flag(report.support_contained)},
                {"schur_positive", optional_flag(report.schur_positive)},
                {"implication_consistent", report.implication_consistent}};
}

json to_json(const VerificationReport& report) {
    auto pair_list = [](const std::vector<std::pair<SkewShape, SkewShape>>& pairs) {
        json out = json::array();
        for (const auto& [a, b] : pairs) out.push_back(json::array({to_json(a), to_json(b)}));
        return out;
    };
    return json{{"size", report.size},
                {"shapes", report.shape_count},
                {"pairs", report.pair_count},
                {"screen_passes", report.screen_pass_count},
                {"support_containments", report.support_contained_count},
                {"schur_positive", report.schur_positive_count},
                {"violations", report.violations},
                {"witnesses",
                 json{{"screen_pass_support_fail", pair_list(report.screen_pass_support_fail)},
                      {"equal_support_unequal_function",
                       pair_list(report.equal_support_unequal_function)}}},
                {"elapsed_seconds", report.elapsed_seconds}};
}

} // namespace schur
