#include "dp8/report.hpp"

#include <limits>

namespace dp8 {

Json rational_json(const Rational& r) {
    if (denominator_of(r) == 1) {
        const Integer n = numerator_of(r);
        if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
            return static_cast<long long>(n);
    }
    return to_string(r);
}

Json scalar_json(const Scalar& x) {
    if (x.field().is_rational()) return rational_json(x.a());
    return Json::array({rational_json(x.a()), rational_json(x.b())});
}

Json to_json(const BrauerClass2& b) { return b.labels(); }

Json to_json(const BrauerSubgroup& g) {
    Json gens = Json::array();
    for (const auto& b : g.generators()) gens.push_back(to_json(b));
    return {{"order", g.order()}, {"generators", gens}};
}

Json to_json(const QuadField& k) { return rational_json(Rational(k.m())); }

Json to_json(const Conic& c) {
    Json coeffs = Json::array();
    for (const auto& x : c.coeffs()) coeffs.push_back(scalar_json(x));
    Json field = c.field().is_rational() ? Json(nullptr) : to_json(c.field().quad());
    return {{"coeffs", coeffs}, {"field", field}, {"class", to_json(c.brauer_class())}};
}

Json to_json(const QuadraticForm& q) {
    Json diag = Json::array();
    for (const auto& x : q.diag()) diag.push_back(scalar_json(x));
    return diag;
}

Json to_json(const MinimalModel& m) {
    Json classes = Json::array();
    for (const auto& b : m.classes) classes.push_back(to_json(b));
    Json out{{"kind", to_string(m.kind)}, {"classes", classes}};
    if (m.kind == ModelKind::Hirzebruch) out["k"] = m.k;
    if (m.field) out["field"] = to_json(*m.field);
    return out;
}

Json to_json(const AmitsurGroup& am) {
    if (am.is_abstract()) return {{"order", am.order}, {"generators", "abstract-order-2"}};
    return to_json(*am.subgroup);
}

Json to_json(const ScenarioReport& r) {
    Json assertions = Json::array();
    for (const auto& a : r.assertions)
        assertions.push_back({{"name", a.name}, {"expected", a.expected}, {"actual", a.actual}, {"pass", a.pass}});
    Json out{{"scenario", r.scenario}, {"assertions", assertions}, {"pass", r.passed()}};
    if (r.value) out["value"] = *r.value;
    return out;
}

Json descriptor_json(const DP8Surface& x) {
    auto triple = [](const Conic& c) {
        Json t = Json::array();
        for (const auto& v : c.coeffs()) t.push_back(scalar_json(v));
        return t;
    };
    if (x.is_product()) return {{"type", "product"}, {"c1", triple(x.c1())}, {"c2", triple(x.c2())}};
    return {{"type", "weil_restriction"}, {"m", to_json(x.field())}, {"conic", triple(x.conic())}};
}

Json classification_report(const DP8Surface& x, int k_max) {
    const bool pointless = is_pointless(x);
    Json out{{"variant", x.is_product() ? "product" : "weil_restriction"},
             {"surface", descriptor_json(x)},
             {"pointless", pointless},
             {"picard_rank", picard_rank(x)},
             {"splitting_field", x.is_product() ? Json(nullptr) : to_json(x.field())},
             {"am_over_q", to_json(amitsur(x))},
             {"am_over_L", x.is_product() ? Json(nullptr) : to_json(am_over_splitting(x))}};
    auto q = is_quadric(x);
    out["quadric"] = q ? to_json(*q) : Json(nullptr);
    if (pointless) {
        Json models = Json::array();
        for (const auto& m : minimal_models(x, k_max)) models.push_back(to_json(m));
        out["minimal_models"] = models;
    } else {
        out["minimal_models"] = nullptr;
    }
    return out;
}

Json classification_report(const QuadricClassification& c, const QuadraticForm& q, int k_max) {
    if (c.pointed)
        return {{"variant", "pointed_rational"}, {"pointless", false}, {"quadric", to_json(q)}};
    Json out = classification_report(*c.surface, k_max);
    out["quadric"] = to_json(q);
    return out;
}

}  // namespace dp8
