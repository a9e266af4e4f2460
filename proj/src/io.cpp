#include "gtsp/io.hpp"

#include <fstream>

namespace gtsp {

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Vec& v)
{
    json a = json::array();
    for (const auto& q : v) a.push_back(to_string(q));
    return a;
}

json to_json(const IndexSet& s)
{
    json a = json::array();
    for (int i : s) a.push_back(i);
    return a;
}

json to_json(const TableauC& t)
{
    json rows = json::array(), primed = json::array();
    for (int k = t.n(); k >= 1; --k) {
        rows.push_back(to_json(t.row(k)));
        primed.push_back(to_json(t.primed_row(k)));
    }
    return {{"type", "C"}, {"n", t.n()}, {"rows", rows}, {"primed", primed}};
}

json to_json(const TableauD& t)
{
    json rows = json::array(), primed = json::array();
    for (int k = t.n(); k >= 1; --k) {
        Vec r;
        for (int i = 1; i <= k; ++i) r.push_back(t.u(k, i));
        rows.push_back(to_json(r));
        if (k < 2) continue;
        Vec p;
        for (int i = 2; i <= k; ++i) p.push_back(t.up(k, i));
        primed.push_back(to_json(p));
    }
    return {{"type", "D"}, {"n", t.n()}, {"rows", rows}, {"primed", primed}};
}

json to_json(const ModuleSpec& s)
{
    json j{{"variant", variant_name(s.variant)}, {"n", s.n}};
    if (s.variant == Variant::GenericC) {
        j["seed"] = to_json(s.seed);
        return j;
    }
    j["lambda"] = to_json(s.lambda);
    if (s.variant == Variant::FiniteC) return j;
    j["mu"] = to_json(s.mu);
    if (s.variant == Variant::BoundedSubPlus) j["k"] = s.k;
    if (s.variant == Variant::Subquotient) j["sigma"] = to_json(s.sigma);
    return j;
}

json to_json(const Report& r)
{
    json j{{"check", r.check}, {"spec", r.spec}, {"failures", r.failures}, {"count", r.count},
           {"checks", r.checks}, {"seed", r.seed}};
    if (!r.skipped.empty()) j["skipped"] = r.skipped;
    for (const auto& [k, v] : r.extra.items()) j[k] = v;
    return j;
}

json to_json(const OscSpec& s) { return {{"nu", to_json(s.nu)}, {"sigma", to_json(s.sigma)}}; }

json to_json(const TableauVector& v)
{
    json a = json::array();
    for (const auto& [t, c] : v.sorted()) a.push_back({{"coeff", to_string(c)}, {"tableau", to_json(t)}});
    return a;
}

Rational rational_from_json(const json& j)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("expected a rational string, got " + j.dump());
}

Vec vec_from_json(const json& j)
{
    if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
    Vec v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

IndexSet index_set_from_json(const json& j)
{
    if (!j.is_array()) throw ParseError("expected an array of indices, got " + j.dump());
    IndexSet s;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw ParseError("index must be an integer, got " + x.dump());
        s.push_back(x.get<int>());
    }
    return s;
}

namespace {

const json& field(const json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

int int_field(const json& j, const char* name)
{
    const json& v = field(j, name);
    if (!v.is_number_integer()) throw ParseError(std::string("field \"") + name + "\" must be an integer");
    return v.get<int>();
}

void expect_len(const Vec& v, int len, const std::string& what)
{
    if (static_cast<int>(v.size()) != len)
        throw ParseError(what + " has " + std::to_string(v.size()) + " entries, expected " + std::to_string(len));
}

}  // namespace

std::variant<TableauC, TableauD> tableau_from_json(const json& j)
{
    const int n = int_field(j, "n");
    if (n < 1) throw ParseError("n must be positive");
    std::string type = j.value("type", "C");
    const json& rows = field(j, "rows");
    const json& primed = field(j, "primed");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) throw ParseError("\"rows\" must list n rows, top first");
    if (type == "C") {
        if (!primed.is_array() || static_cast<int>(primed.size()) != n) throw ParseError("\"primed\" must list n rows");
        TableauC t(n);
        for (int k = n; k >= 1; --k) {
            Vec r = vec_from_json(rows[n - k]), p = vec_from_json(primed[n - k]);
            expect_len(r, k, "row " + std::to_string(k));
            expect_len(p, k, "primed row " + std::to_string(k));
            for (int i = 1; i <= k; ++i) {
                t.l(k, i) = r[i - 1];
                t.lp(k, i) = p[i - 1];
            }
        }
        return t;
    }
    if (type != "D") throw ParseError("unknown tableau type \"" + type + "\"");
    if (!primed.is_array() || static_cast<int>(primed.size()) != n - 1) throw ParseError("\"primed\" must list n-1 rows");
    TableauD t(n);
    for (int k = n; k >= 1; --k) {
        Vec r = vec_from_json(rows[n - k]);
        expect_len(r, k, "row " + std::to_string(k));
        for (int i = 1; i <= k; ++i) t.u(k, i) = r[i - 1];
        if (k < 2) continue;
        Vec p = vec_from_json(primed[n - k]);
        expect_len(p, k - 1, "primed row " + std::to_string(k));
        for (int i = 2; i <= k; ++i) t.up(k, i) = p[i - 2];
    }
    return t;
}

TableauC tableau_c_from_json(const json& j)
{
    auto t = tableau_from_json(j);
    if (!std::holds_alternative<TableauC>(t)) throw ParseError("expected a type C tableau");
    return std::get<TableauC>(t);
}

ModuleSpec spec_from_json(const json& j)
{
    std::string v = field(j, "variant").get<std::string>();
    try {
        if (v == "finite") return ModuleSpec::finite(vec_from_json(field(j, "lambda")));
        if (v == "generic") return ModuleSpec::generic(tableau_c_from_json(field(j, "seed")));
        Vec mu = vec_from_json(field(j, "mu")), lambda = vec_from_json(field(j, "lambda"));
        if (v == "bounded") return ModuleSpec::bounded(mu, lambda);
        if (v == "bounded-sub-plus") return ModuleSpec::sub_plus(mu, lambda, int_field(j, "k"));
        if (v == "subquotient") return ModuleSpec::subquotient(mu, lambda, index_set_from_json(field(j, "sigma")));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid spec: ") + e.what());
    }
    throw ParseError("unknown variant \"" + v + "\"");
}

OscSpec osc_spec_from_json(const json& j)
{
    try {
        return OscSpec(vec_from_json(field(j, "nu")), index_set_from_json(field(j, "sigma")));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid oscillator spec: ") + e.what());
    }
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace gtsp
