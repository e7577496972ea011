#include "schurcalc/serialization.hpp"

#include <stdexcept>

namespace schurcalc {

Json big_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

BigInt big_from_json(const Json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<std::int64_t>());
}

Json to_json(const Weight& w) { return Json(std::vector<Int>(w.entries().begin(), w.entries().end())); }

Weight weight_from_json(const Json& j) { return Weight(j.get<std::vector<Int>>()); }

Json to_json(const RepElement& a) {
    Json terms = Json::array();
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it)
        terms.push_back({{"weight", to_json(it->first)}, {"coeff", it->second}});
    return {{"rank", a.rank()}, {"terms", terms}};
}

RepElement rep_from_json(const Json& j) {
    RepElement out(j.at("rank").get<int>());
    for (const Json& t : j.at("terms")) out.add(weight_from_json(t.at("weight")), t.at("coeff").get<Int>());
    return out;
}

Json to_json(const BwbOutcome& o) {
    if (o.is_zero()) return {{"kind", "zero"}, {"repeat", o.repeated_value()}};
    return {{"kind", "nonzero"},
            {"degree", o.degree()},
            {"beta", to_json(o.beta())},
            {"multiplicity", o.multiplicity()},
            {"dim", big_to_json(o.dimension())}};
}

BwbOutcome outcome_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "zero") return BwbOutcome::zero(j.at("repeat").get<Int>());
    if (kind == "nonzero")
        return BwbOutcome::nonzero(j.at("degree").get<int>(), weight_from_json(j.at("beta")),
                                   j.value("multiplicity", Int{1}));
    throw std::invalid_argument("unknown outcome kind '" + kind + "'");
}

Json to_json(const GradedCohomology& h) {
    Json groups = Json::array();
    for (const auto& [p, rep] : h.groups())
        groups.push_back({{"degree", p}, {"rep", to_json(rep)}, {"dim", big_to_json(dimension(rep))}});
    return {{"d", h.d()}, {"groups", groups}};
}

Json to_json(const VerificationReport& r) {
    Json j;
    j["check"] = r.check;
    j["verdict"] = r.verdict ? "pass" : "fail";
    j["d"] = r.d;
    if (r.k) j["k"] = *r.k;
    if (r.alpha) j["alpha"] = to_json(*r.alpha);
    if (r.beta) j["beta"] = to_json(*r.beta);
    j["hom_dimension"] = big_to_json(r.hom_dimension);
    Json conditions = Json::array();
    for (const Condition& c : r.conditions) {
        Json cj{{"q", c.q}, {"weight", to_json(c.weight)}, {"must_vanish", c.must_vanish}, {"outcome", to_json(c.outcome)}};
        if (c.k_weight) cj["k_weight"] = to_json(*c.k_weight);
        conditions.push_back(std::move(cj));
    }
    j["conditions"] = std::move(conditions);
    if (r.total) j["cohomology"] = to_json(*r.total);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

VerificationReport report_from_json(const Json& j) {
    VerificationReport r;
    r.check = j.value("check", std::string{});
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict != "pass" && verdict != "fail") throw std::invalid_argument("verdict must be 'pass' or 'fail'");
    r.verdict = verdict == "pass";
    r.d = j.at("d").get<int>();
    if (j.contains("k")) r.k = j.at("k").get<int>();
    if (j.contains("alpha")) r.alpha = weight_from_json(j.at("alpha"));
    if (j.contains("beta")) r.beta = weight_from_json(j.at("beta"));
    r.hom_dimension = big_from_json(j.at("hom_dimension"));
    for (const Json& cj : j.at("conditions")) {
        Condition c{cj.at("q").get<int>(), weight_from_json(cj.at("weight")), std::nullopt,
                    outcome_from_json(cj.at("outcome")), cj.value("must_vanish", true)};
        if (cj.contains("k_weight")) c.k_weight = weight_from_json(cj.at("k_weight"));
        r.conditions.push_back(std::move(c));
    }
    if (j.contains("cohomology")) {
        GradedCohomology h(j.at("cohomology").at("d").get<int>());
        for (const Json& g : j.at("cohomology").at("groups")) {
            const int p = g.at("degree").get<int>();
            const RepElement rep = rep_from_json(g.at("rep"));
            for (const auto& [w, c] : rep.terms()) h.add(BwbOutcome::nonzero(p, w, c));
        }
        r.total = std::move(h);
    }
    r.note = j.value("note", std::string{});
    return r;
}

}  // namespace schurcalc
