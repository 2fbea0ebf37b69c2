#include "dp8/commands.hpp"

#include <limits>

#include "dp8/factor.hpp"

namespace dp8 {

namespace {

const Integer kCap = Integer(1) << 63;

void require(bool ok, const std::string& what) {
    if (!ok) throw InputError(what);
}

const Json& field_of(const Json& j, const std::string& key) {
    require(j.is_object() && j.contains(key), "missing field \"" + key + "\"");
    return j.at(key);
}

Integer parse_int(const Json& j) {
    const Rational r = parse_number(j);
    require(denominator_of(r) == 1, "expected an integer, got " + j.dump());
    return numerator_of(r);
}

std::vector<Rational> parse_numbers(const Json& j, std::size_t n, const std::string& what) {
    require(j.is_array() && j.size() == n, what + " must be an array of " + std::to_string(n) + " numbers");
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(parse_number(x));
    return out;
}

Json numbers_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(rational_json(x));
    return out;
}

QuadraticForm parse_gram(const Json& j, Json& echo) {
    require(j.is_array() && !j.empty(), "form must be a square matrix");
    std::size_t n = j.size();
    std::vector<Rational> flat;
    if (j[0].is_array()) {
        for (const auto& row : j) {
            auto r = parse_numbers(row, n, "form row");
            flat.insert(flat.end(), r.begin(), r.end());
        }
    } else {
        std::size_t s = 1;
        while (s * s < n) ++s;
        require(s * s == n, "flat form must have a square number of entries");
        flat = parse_numbers(j, n, "form");
        n = s;
    }
    Matrix gram(n, std::vector<Scalar>(n));
    Json rows = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < n; ++k) {
            gram[i][k] = flat[i * n + k];
            require(flat[i * n + k] == flat[k * n + i], "form matrix must be symmetric");
            row.push_back(rational_json(flat[i * n + k]));
        }
        rows.push_back(row);
    }
    echo = rows;
    try {
        return diagonalize(Field::rationals(), gram);
    } catch (const DomainError& e) {
        throw InputError(e.what());
    }
}

QuadraticForm parse_form(const Json& j, Json& echo) {
    if (j.contains("diag")) {
        const Json& d = j.at("diag");
        require(d.is_array() && d.size() >= 2, "diag must list at least two entries");
        auto v = parse_numbers(d, d.size(), "diag");
        for (const auto& x : v) require(x != 0, "diagonal entries must be nonzero");
        echo["diag"] = numbers_json(v);
        return diagonal_form(v);
    }
    Json gram;
    QuadraticForm q = parse_gram(field_of(j, "form"), gram);
    echo["form"] = gram;
    return q;
}

std::vector<Rational> parse_triple(const Json& j, const std::string& what) {
    auto v = parse_numbers(j, 3, what);
    for (const auto& x : v) require(x != 0, what + " coefficients must be nonzero");
    return v;
}

DP8Surface surface_of(const Descriptor& d) {
    if (d.surface) return *d.surface;
    auto c = from_quadric(*d.quadric);
    if (c.pointed) throw Refusal("rational: the quadric has a rational point, so the surface is rational");
    return *c.surface;
}

QuadricClassification classification_of(const Descriptor& d) {
    if (d.surface) return {false, *d.surface};
    return from_quadric(*d.quadric);
}

Json with_input(Json out, const Descriptor& d) {
    out["input"] = d.echo;
    if (!d.warnings.empty()) out["warnings"] = d.warnings;
    return out;
}

Json invariants(const QuadricClassification& c) {
    if (c.pointed) return {{"pointless", false}, {"variant", "pointed_rational"}};
    const DP8Surface& x = *c.surface;
    return {{"variant", x.is_product() ? "product" : "weil_restriction"},
            {"pointless", is_pointless(x)},
            {"picard_rank", picard_rank(x)},
            {"splitting_field", x.is_product() ? Json(nullptr) : to_json(x.field())},
            {"am_over_q", to_json(amitsur(x))}};
}

std::optional<QuadraticForm> quadric_form(const Descriptor& d, const QuadricClassification& c) {
    if (d.quadric) return d.quadric;
    return is_quadric(*c.surface);
}

}  // namespace

Rational parse_number(const Json& j) {
    Rational r;
    if (j.is_number_integer()) {
        require(!j.is_number_unsigned() || j.get<unsigned long long>() <= static_cast<unsigned long long>(
                                                                              std::numeric_limits<long long>::max()),
                "integer input out of range: " + j.dump());
        r = Rational(j.get<long long>());
    } else if (j.is_string()) {
        try {
            r = parse_rational(j.get<std::string>());
        } catch (const DomainError& e) {
            throw InputError("bad number " + j.dump() + ": " + e.what());
        }
    } else {
        throw InputError("expected an integer or a \"p/q\" string, got " + j.dump());
    }
    require(abs(numerator_of(r)) < kCap && denominator_of(r) < kCap, "input exceeds 2^63 in absolute value");
    return r;
}

Conic parse_conic(const Json& j) {
    auto v = parse_triple(j, "conic");
    return conic_from_coeffs(v[0], v[1], v[2]);
}

Descriptor parse_descriptor(const Json& j) {
    require(j.is_object(), "descriptor must be a JSON object");
    const Json& type = field_of(j, "type");
    require(type.is_string(), "type must be a string");
    const std::string t = type.get<std::string>();
    Descriptor d;
    d.echo = {{"type", t}};
    if (t == "quadric") {
        d.quadric = parse_form(j, d.echo);
        require(d.quadric->rank() == 4, "a quadric surface needs a rank 4 form");
        return d;
    }
    if (t == "product") {
        auto a = parse_triple(field_of(j, "c1"), "c1");
        auto b = parse_triple(field_of(j, "c2"), "c2");
        d.echo["c1"] = numbers_json(a);
        d.echo["c2"] = numbers_json(b);
        d.surface = DP8Surface::product(conic_from_coeffs(a[0], a[1], a[2]), conic_from_coeffs(b[0], b[1], b[2]));
        return d;
    }
    if (t == "weil_restriction") {
        const Integer m = parse_int(field_of(j, "m"));
        require(m != 0, "m must be nonzero");
        const Integer kernel = squarefree_kernel(m);
        require(kernel != 1, "m must not be a square");
        Integer s;
        exact_sqrt(m / kernel, s);
        if (s != 1) d.warnings.push_back("m reduced from " + to_string(m) + " to square-free " + to_string(kernel));
        const Field l = Field::quadratic(QuadField(kernel));
        const Json& c = field_of(j, "conic");
        require(c.is_array() && c.size() == 3, "conic must list three coefficients");
        std::vector<Scalar> coeffs;
        Json echo = Json::array();
        for (const auto& pair : c) {
            std::vector<Rational> xy = pair.is_array() ? parse_numbers(pair, 2, "coefficient pair")
                                                       : std::vector<Rational>{parse_number(pair), Rational(0)};
            coeffs.emplace_back(l, xy[0], xy[1] * Rational(s));
            require(!coeffs.back().is_zero(), "conic coefficients must be nonzero");
            echo.push_back(scalar_json(coeffs.back()));
        }
        d.echo["m"] = rational_json(Rational(kernel));
        d.echo["conic"] = echo;
        d.surface = DP8Surface::weil_restriction(conic_from_coeffs(l, coeffs[0], coeffs[1], coeffs[2]));
        return d;
    }
    throw InputError("unknown descriptor type \"" + t + "\"");
}

Json cmd_classify(const Json& input, const CommandOptions& opt) {
    Descriptor d = parse_descriptor(input);
    if (d.quadric) return with_input(classification_report(from_quadric(*d.quadric), *d.quadric, opt.k_max), d);
    return with_input(classification_report(*d.surface, opt.k_max), d);
}

Json cmd_compare(const Json& input, const CommandOptions& opt) {
    Descriptor a = parse_descriptor(field_of(input, "a"));
    Descriptor b = parse_descriptor(field_of(input, "b"));
    std::string mode = opt.mode;
    if (input.contains("mode")) {
        require(input.at("mode").is_string(), "mode must be a string");
        mode = input.at("mode").get<std::string>();
    }
    require(mode == "isomorphic" || mode == "birational", "mode must be isomorphic or birational");
    QuadricClassification ca = classification_of(a), cb = classification_of(b);
    Json reasons = Json::array();
    bool result = false;
    if (mode == "birational") {
        result = birational(ca, cb);
        reasons.push_back({{"a", invariants(ca)}, {"b", invariants(cb)}});
    } else if (ca.pointed || cb.pointed || (a.quadric && b.quadric)) {
        auto qa = quadric_form(a, ca), qb = quadric_form(b, cb);
        if (!qa || !qb) {
            reasons.push_back("only one side embeds as a quadric surface");
        } else {
            auto c = similar(*qa, *qb);
            result = c.has_value();
            if (c)
                reasons.push_back({{"similarity_factor", rational_json(*c)}});
            else
                reasons.push_back("the forms are not similar");
            reasons.push_back({{"a", to_json(*qa)}, {"b", to_json(*qb)}});
        }
    } else {
        result = isomorphic(*ca.surface, *cb.surface);
        reasons.push_back({{"a", descriptor_json(*ca.surface)}, {"b", descriptor_json(*cb.surface)}});
        reasons.push_back({{"a", invariants(ca)}, {"b", invariants(cb)}});
        if (!ca.surface->is_product() && !cb.surface->is_product())
            reasons.push_back({{"am_over_L_a", to_json(am_over_splitting(*ca.surface))},
                               {"am_over_L_b", to_json(am_over_splitting(*cb.surface))}});
    }
    Json echo{{"a", a.echo}, {"b", b.echo}};
    Json out{{"mode", mode}, {"result", result}, {"reasons", reasons}, {"input", echo}};
    Json warnings = a.warnings;
    for (const auto& w : b.warnings) warnings.push_back(w);
    if (!warnings.empty()) out["warnings"] = warnings;
    return out;
}

Json cmd_product(const Json& input, const CommandOptions&) {
    Conic c1 = parse_conic(field_of(input, "c1"));
    Conic c2 = parse_conic(field_of(input, "c2"));
    Conic p = brauer_product(c1, c2);
    Json echo{{"c1", to_json(c1)["coeffs"]}, {"c2", to_json(c2)["coeffs"]}};
    return {{"conic", to_json(p)["coeffs"]},
            {"class", to_json(p.brauer_class())},
            {"splitting_field", to_json(common_splitting_field(c1, c2))},
            {"input", echo}};
}

Json cmd_minimal_models(const Json& input, const CommandOptions& opt) {
    Descriptor d = parse_descriptor(input);
    DP8Surface x = surface_of(d);
    Json models = Json::array();
    for (const auto& m : minimal_models(x, opt.k_max)) models.push_back(to_json(m));
    return with_input({{"k_max", opt.k_max}, {"models", models}}, d);
}

Json cmd_splitting_field(const Json& input, const CommandOptions&) {
    Descriptor d = parse_descriptor(input);
    QuadricClassification c = classification_of(d);
    if (c.pointed) return with_input({{"splitting_field", nullptr}, {"kind", "rational"}}, d);
    const DP8Surface& x = *c.surface;
    if (x.is_product())
        return with_input({{"splitting_field", to_json(common_splitting_field(x.c1(), x.c2()))},
                           {"kind", "common_conic_splitting"}},
                          d);
    return with_input({{"splitting_field", to_json(splitting_field(x))}, {"kind", "picard"}}, d);
}

Json cmd_lattice_demo(const Json& input, const CommandOptions& opt) {
    CommandOptions o = opt;
    std::string name;
    if (input.is_string()) {
        name = input.get<std::string>();
    } else {
        name = field_of(input, "scenario").get<std::string>();
        if (input.contains("parity")) o.parity = input.at("parity").get<std::string>();
        if (input.contains("k")) o.k = input.at("k").get<int>();
        if (input.contains("orbits")) o.orbits = input.at("orbits").get<int>();
    }
    ScenarioReport r;
    Json params = Json::object();
    if (name == "cblink") {
        r = scenario_cblink();
    } else if (name == "f2k") {
        require(o.k >= 0, "k must be nonnegative");
        r = scenario_f2k(o.k);
        params["k"] = o.k;
    } else if (name == "dplink4") {
        require(o.orbits == 1 || o.orbits == 2, "orbits must be 1 or 2");
        r = scenario_dplink4(o.orbits);
        params["orbits"] = o.orbits;
    } else if (name == "dplink2") {
        require(o.parity == "odd" || o.parity == "even", "parity must be odd or even");
        r = scenario_dplink2(o.parity == "odd");
        params["parity"] = o.parity;
    } else {
        throw InputError("unknown scenario \"" + name + "\"");
    }
    Json out = to_json(r);
    out["params"] = params;
    return out;
}

Json cmd_oracle(const Json& input, const CommandOptions& opt) {
    long long height = opt.height;
    if (input.contains("height")) height = parse_int(input.at("height")).convert_to<long long>();
    require(height >= 1, "height must be positive");
    Json out{{"height", height}};
    const std::string type = field_of(input, "type").get<std::string>();
    std::optional<QuadraticForm> q;
    Json echo{{"type", type}};
    if (type == "form") {
        q = parse_form(input, echo);
    } else if (type == "conic") {
        auto v = parse_triple(field_of(input, "coeffs"), "conic");
        echo["coeffs"] = numbers_json(v);
        q = diagonal_form(v);
    } else {
        Descriptor d = parse_descriptor(input);
        echo = d.echo;
        if (!d.warnings.empty()) out["warnings"] = d.warnings;
        q = d.quadric;
        if (!q) {
            auto w = rational_point_scan(*d.surface, height);
            out["found"] = w.has_value();
            Json pts = Json::array();
            if (w)
                for (const auto& p : w->points) {
                    Json pt = Json::array();
                    for (const auto& x : p) pt.push_back(scalar_json(x));
                    pts.push_back(pt);
                }
            out["witness"] = w ? pts : Json(nullptr);
            out["input"] = echo;
            return out;
        }
    }
    auto w = oracle_point_search(*q, height);
    out["found"] = w.has_value();
    if (w) {
        Json pt = Json::array();
        std::vector<Scalar> x;
        for (const auto& v : *w) {
            pt.push_back(rational_json(Rational(v)));
            x.emplace_back(Rational(v));
        }
        if (!q->value(x).is_zero()) throw std::logic_error("oracle: witness does not vanish");
        out["witness"] = pt;
    } else {
        out["witness"] = nullptr;
    }
    out["input"] = echo;
    return out;
}

namespace {

CommandResult run_single(const std::string& name, const Json& input, const CommandOptions& opt) {
    try {
        Json out;
        if (name == "classify") out = cmd_classify(input, opt);
        else if (name == "compare") out = cmd_compare(input, opt);
        else if (name == "product") out = cmd_product(input, opt);
        else if (name == "minimal-models") out = cmd_minimal_models(input, opt);
        else if (name == "splitting-field") out = cmd_splitting_field(input, opt);
        else if (name == "lattice-demo") out = cmd_lattice_demo(input, opt);
        else if (name == "oracle") out = cmd_oracle(input, opt);
        else throw InputError("unknown command \"" + name + "\"");
        const bool failed = name == "lattice-demo" && !out.at("pass").get<bool>();
        return {out, failed ? kExitAssertion : kExitOk};
    } catch (const Refusal& e) {
        return {{{"error", e.what()}, {"kind", "refusal"}}, kExitRefusal};
    } catch (const DomainError& e) {
        return {{{"error", e.what()}, {"kind", "input"}}, kExitInput};
    } catch (const Json::exception& e) {
        return {{{"error", e.what()}, {"kind", "input"}}, kExitInput};
    } catch (const std::exception& e) {
        return {{{"error", e.what()}, {"kind", "internal"}}, kExitAssertion};
    }
}

}  // namespace

CommandResult run_command(const std::string& name, const Json& input, const CommandOptions& opt) {
    if (!input.is_array()) return run_single(name, input, opt);
    std::vector<CommandResult> results(input.size());
    const long long n = static_cast<long long>(input.size());
#pragma omp parallel for schedule(dynamic) num_threads(opt.jobs > 0 ? opt.jobs : 1)
    for (long long i = 0; i < n; ++i) results[i] = run_single(name, input[i], opt);
    CommandResult out{Json::array(), kExitOk};
    for (auto& r : results) {
        out.output.push_back(std::move(r.output));
        out.exit_code = std::max(out.exit_code, r.exit_code);
    }
    return out;
}

}  // namespace dp8
