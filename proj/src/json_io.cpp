#include "conifold/json_io.hpp"

#include <sstream>

namespace conifold {

json to_json(const YoungDiagram& d) { return json(d.rows()); }

json to_json(const Character& c) { return json(c.entries()); }

json to_json(const JSequence& j) {
    return json{{"values", j.values()}, {"d", j.ambient_length()}};
}

json to_json(const DimVec& v) {
    return json{{"vinf", v.vinf}, {"v0", v.v0}, {"v1", v.v1}};
}

json to_json(const Wall& w) {
    return json{{"family", w.family == WallFamily::W ? "W" : "Wp"}, {"m", w.m}};
}

json to_json(const ExtQuiverData& q) {
    json j{{"a", q.a}, {"b", q.b}, {"c", q.c}, {"C", q.C},
           {"m", q.m}, {"d", q.d}, {"valid", q.valid}};
    j["loops_inf"] = q.loops_inf ? json(*q.loops_inf) : json(nullptr);
    return j;
}

json to_json(const KNStratum& s) {
    return json{{"index", s.index},
                {"side", s.side == Side::Plus ? "+" : "-"},
                {"lambda", s.lambda},
                {"eta", s.eta},
                {"slope_sq", rat_str(s.slope_sq)}};
}

json to_json(const Resolution& r) {
    json steps = json::array();
    for (const auto& step : r.steps)
        steps.push_back(json{{"delta", step.delta.rows()},
                             {"s", step.s},
                             {"mult", step.mult.str()}});
    return json{{"steps", steps}, {"block_c", r.block_c}, {"next_s", r.next_s}};
}

json to_json(const std::vector<SODSummand>& summands) {
    json arr = json::array();
    for (size_t i = 0; i < summands.size(); ++i) {
        const auto& s = summands[i];
        arr.push_back(json{{"order", i},
                           {"l", s.l},
                           {"jseq", to_json(s.jseq)},
                           {"child_block", json{{"c", s.child_c}, {"d", s.child_d}}}});
    }
    return arr;
}

json to_json(const TwistDescriptor& t) {
    return json{{"l", t.l},
                {"jseq", to_json(t.jseq)},
                {"per_factor_weights", t.per_factor_weights},
                {"tail_twist", t.tail_twist},
                {"knoerrer_weights", t.knoerrer_weights},
                {"shift", t.shift}};
}

json to_json(const std::vector<ConifoldSummand>& summands) {
    json arr = json::array();
    for (size_t i = 0; i < summands.size(); ++i) {
        const auto& s = summands[i];
        arr.push_back(json{{"order", i},
                           {"l", s.l},
                           {"jseq", to_json(s.jseq)},
                           {"child", json{{"v0", s.child.first}, {"v1", s.child.second}}},
                           {"twists", to_json(s.twists)}});
    }
    return arr;
}

json to_json(const KoszulCertificate& c) {
    return json{{"pass", c.pass},
                {"bound_pass", c.bound_pass},
                {"worst_weight", c.worst_weight},
                {"interval", json::array({c.interval.lo.str(), c.interval.hi.str()})},
                {"witness_tableau", c.witness_tableau},
                {"weight_min", c.weight_min},
                {"weight_max", c.weight_max}};
}

json to_json(const Series2& s, const std::string& var0, const std::string& var1) {
    json terms = json::array();
    for (const auto& [e, c] : s.terms())
        terms.push_back(json{{"e", json::array({e.first, e.second})}, {"c", c.str()}});
    return json{{"vars", json::array({var0, var1})},
                {"trunc", json::array({s.trunc0(), s.trunc1()})},
                {"terms", terms}};
}

json to_json(const CrosscheckReport& r) {
    json j{{"pass", r.pass},
           {"box", json::array({r.box.first, r.box.second})},
           {"coefficients_checked", r.coefficients_checked}};
    if (r.first_mismatch) {
        j["first_mismatch"] = json::array({r.first_mismatch->first, r.first_mismatch->second});
        j["failed_check"] = r.failed_check;
    }
    return j;
}

YoungDiagram parse_diagram(const std::string& text) {
    std::vector<int> rows;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        size_t b = part.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        size_t e = part.find_last_not_of(" \t");
        rows.push_back(std::stoi(part.substr(b, e - b + 1)));
    }
    return YoungDiagram(rows);  // validates weakly decreasing positive rows
}

}  // namespace conifold
