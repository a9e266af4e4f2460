#include "gtsp/io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace gtsp;

namespace {

struct Options {
    std::string series = "C";
    std::string lambda, mu, gamma, target, sigma, c;
    std::string gen, tableau, module, which = "upper", a, b;
    std::string format = "json";
    bool count_only = false;
    std::size_t samples = 50;
    std::uint64_t seed = 1;
    long radius = 3;
    int k = 0;
};

struct Failed {
    int code;
};

void emit(const json& j) { std::cout << j.dump() << "\n"; }

std::string csv_cell(std::string s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string flat(const TableauC& t)
{
    std::string s;
    for (int k = t.n(); k >= 1; --k) {
        for (int i = 1; i <= k; ++i) s += (s.empty() ? "" : ",") + csv_cell(to_string(t.l(k, i)));
        for (int i = 1; i <= k; ++i) s += "," + csv_cell(to_string(t.lp(k, i)));
    }
    return s;
}

std::string flat(const TableauD& t)
{
    std::string s;
    for (int k = t.n(); k >= 1; --k) {
        for (int i = 1; i <= k; ++i) s += (s.empty() ? "" : ",") + csv_cell(to_string(t.u(k, i)));
        for (int i = 2; i <= k; ++i) s += "," + csv_cell(to_string(t.up(k, i)));
    }
    return s;
}

void emit_report(const Report& r, const Options& o)
{
    if (o.format == "csv") {
        std::cout << "check,count,checks,seed\n"
                  << csv_cell(r.check) << "," << r.count << "," << r.checks << "," << r.seed << "\n";
        for (const auto& f : r.failures) std::cout << "failure," << csv_cell(f) << "\n";
    } else {
        emit(to_json(r));
    }
    if (!r.ok()) throw Failed{1};
}

Vec need_vec(const std::string& text, const char* flag)
{
    if (text.empty()) throw ParseError(std::string("missing ") + flag);
    return parse_vector(text);
}

IndexSet parse_index_set(const std::string& text)
{
    IndexSet s;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.find_first_not_of(" ") == std::string::npos) continue;
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad index \"" + item + "\"");
        }
        if (item.find_first_not_of(" ", pos) != std::string::npos) throw ParseError("bad index \"" + item + "\"");
        s.push_back(v);
    }
    return s;
}

ModuleSpec module_of(const Options& o)
{
    if (!o.module.empty()) return spec_from_json(read_json_file(o.module));
    try {
        if (o.mu.empty()) return ModuleSpec::finite(need_vec(o.lambda, "--lambda or --module"));
        return ModuleSpec::bounded(parse_vector(o.mu), need_vec(o.lambda, "--lambda"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid spec: ") + e.what());
    }
}

Triple triple_of(const std::string& path)
{
    ModuleSpec s = spec_from_json(read_json_file(path));
    if (!s.is_bounded_family()) throw ParseError(path + ": classification needs a bounded or subquotient spec");
    return {s.mu, s.lambda, s.variant == Variant::Subquotient ? s.sigma : IndexSet{}};
}

Series series_of(const Options& o)
{
    try {
        return parse_series(o.series);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

void run_enum(const Options& o)
{
    Series s = series_of(o);
    Vec lambda = need_vec(o.lambda, "--lambda");
    if (!is_dominant(s, lambda)) throw ParseError("lambda is not dominant for series " + o.series);
    Enumerated e = enumerate_standard(s, lambda);
    std::size_t count = s == Series::C ? e.c.size() : e.d.size();
    if (o.count_only) {
        Integer w = weyl_dimension(s, lambda);
        nlohmann::ordered_json j{{"count", count}, {"weyl", std::stoull(w.get_str())}, {"match", Integer(count) == w}};
        std::cout << j.dump() << "\n";
        return;
    }
    if (o.format == "csv") {
        for (const auto& t : e.c) std::cout << flat(t) << "\n";
        for (const auto& t : e.d) std::cout << flat(t) << "\n";
        return;
    }
    json a = json::array();
    for (const auto& t : e.c) a.push_back(to_json(t));
    for (const auto& t : e.d) a.push_back(to_json(t));
    emit(a);
}

void run_dim(const Options& o)
{
    Series s = series_of(o);
    Vec lambda = need_vec(o.lambda, "--lambda");
    if (!is_dominant(s, lambda)) throw ParseError("lambda is not dominant for series " + o.series);
    Integer w = weyl_dimension(s, lambda);
    Enumerated e = enumerate_standard(s, lambda);
    std::size_t count = s == Series::C ? e.c.size() : e.d.size();
    bool match = Integer(count) == w;
    nlohmann::ordered_json j{{"weyl", w.get_str()}, {"count", count}, {"match", match}};
    std::cout << j.dump() << "\n";
    if (!match) throw Failed{1};
}

void run_act(const Options& o)
{
    if (o.tableau.empty()) throw ParseError("missing --tableau");
    ModuleSpec spec = module_of(o);
    TableauC t = tableau_c_from_json(read_json_file(o.tableau));
    if (t.n() != spec.n) throw ParseError("tableau size does not match the module");
    if (!is_member(t, spec)) throw ParseError("tableau is not a basis element of " + spec.str());
    GTAction act(spec.n, membership(spec));
    TableauVector v;
    const std::string& g = o.gen;
    if (g == "casimir") {
        v = act.casimir(t);
    } else if (g.rfind("bracket:", 0) == 0) {
        std::string rest = g.substr(8);
        auto cut = rest.find("),");
        if (cut == std::string::npos) throw ParseError("bracket preset must read bracket:F(a,b),F(c,d)");
        Symbol x = parse_symbol(rest.substr(0, cut + 1)), y = parse_symbol(rest.substr(cut + 2));
        if (!valid_symbol(spec.n, x) || !valid_symbol(spec.n, y)) throw ParseError("symbol index out of range");
        TableauVector base(t);
        v = act.apply(x, act.apply(y, base)) - act.apply(y, act.apply(x, base));
    } else {
        if (g.empty()) throw ParseError("missing --gen");
        Symbol s = parse_symbol(g);
        if (!valid_symbol(spec.n, s)) throw ParseError("symbol index out of range: " + g);
        v = act.symbol(s, t);
    }
    emit(to_json(v));
}

void run_weight(const Options& o)
{
    if (o.tableau.empty()) throw ParseError("missing --tableau");
    TableauC t = tableau_c_from_json(read_json_file(o.tableau));
    emit(json{{"weight", to_json(weight_C(t))}});
}

void run_weights(const Options& o)
{
    ModuleSpec spec = module_of(o);
    if (!spec.is_bounded_family()) throw ParseError("weights needs a bounded spec");
    Vec gamma = need_vec(o.gamma, "--gamma");
    if (static_cast<int>(gamma.size()) != spec.n) throw ParseError("gamma has the wrong length");
    WeightSpace ws = weight_space_basis(spec, gamma);
    std::sort(ws.basis.begin(), ws.basis.end(), tableau_less);
    if (o.format == "csv") {
        for (const auto& t : ws.basis) std::cout << flat(t) << "\n";
        return;
    }
    json a = json::array();
    for (const auto& t : ws.basis) a.push_back(to_json(t));
    json j{{"gamma", to_json(gamma)}, {"dim", ws.basis.size()}, {"basis", a}};
    if (!ws.diagnostic.empty()) j["diagnostic"] = ws.diagnostic;
    emit(j);
}

void run_special(const Options& o)
{
    Vec mu = need_vec(o.mu, "--mu"), lambda = need_vec(o.lambda, "--lambda");
    if (o.which == "upper")
        emit(to_json(special_upper(mu, lambda)));
    else if (o.which == "lower")
        emit(to_json(special_lower(mu, lambda)));
    else
        throw ParseError("--which must be upper or lower");
}

void run_primitive(const Options& o)
{
    Vec lambda = need_vec(o.lambda, "--lambda");
    ModuleSpec spec;
    try {
        spec = ModuleSpec::bounded(Vec(lambda.size(), half()), lambda);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    TableauC t = highest_tableau(lambda);
    PrimitivityReport p = check_primitive(t, spec);
    json checked = json::array();
    for (int k = 2; k <= spec.n; ++k) checked.push_back("F(" + std::to_string(k - 1) + "," + std::to_string(k) + ")");
    for (int j = 1; j <= spec.n; ++j) checked.push_back("F(" + std::to_string(-j) + "," + std::to_string(j) + ")");
    emit(json{{"tableau", to_json(t)}, {"checked", checked}, {"primitive", p.primitive}, {"nonzero", p.nonzero}});
    if (!p.primitive) throw Failed{1};
}

void run_verify(const std::string& suite, const Options& o)
{
    if (suite == "relations") return emit_report(verify_representation(module_of(o), o.samples, o.seed, o.radius), o);
    if (suite == "casimir") return emit_report(verify_casimir(module_of(o), o.samples, o.seed, o.radius), o);
    if (suite == "multiplicity") {
        ModuleSpec spec = module_of(o);
        if (!spec.is_bounded_family()) throw ParseError("multiplicity needs a bounded spec");
        return emit_report(verify_multiplicity(spec, o.radius), o);
    }
    if (suite == "lagrange") {
        Vec c = need_vec(o.c, "--c");
        bool ok = false;
        try {
            ok = verify_lagrange(o.k, c);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
        Report r("lagrange", "k=" + std::to_string(o.k) + " c=" + to_string(c));
        r.checks = 1;
        r.extra["value"] = to_string(lagrange_sum(c));
        if (!ok) r.fail("sum is " + to_string(lagrange_sum(c)));
        return emit_report(r, o);
    }
    if (suite == "vanishing") {
        TableauC t = o.tableau.empty() ? highest_tableau(need_vec(o.lambda, "--tableau or --lambda"))
                                       : tableau_c_from_json(read_json_file(o.tableau));
        try {
            return emit_report(o.k ? verify_vanishing_lemmas(t, o.k) : verify_vanishing_lemmas(t), o);
        } catch (const HypothesisError& e) {
            throw ParseError(e.what());
        }
    }
    if (suite == "oscillator") {
        Vec mu = need_vec(o.mu, "--mu"), lambda = need_vec(o.lambda, "--lambda");
        try {
            return emit_report(verify_oscillator(mu, lambda, parse_index_set(o.sigma), o.radius), o);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("unknown verify suite \"" + suite + "\"");
}

void run_classify(const Options& o)
{
    if (o.a.empty() || o.b.empty()) throw ParseError("classify needs --a and --b");
    Triple x = triple_of(o.a), y = triple_of(o.b);
    emit(json{{"equivalent", iso_equivalent(x, y)}});
}

void run_reach(const Options& o)
{
    Vec lambda = need_vec(o.lambda, "--lambda"), target = need_vec(o.target, "--target");
    if (lambda.size() != target.size()) throw ParseError("lambda and target differ in length");
    auto mu = psi_reachable(lambda, target);
    if (!mu)
        emit(json{{"reachable", false}});
    else
        emit(json{{"reachable", true}, {"mu", to_json(*mu)}});
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"gtsp: Gelfand-Tsetlin tableaux for sp(2n) and so(2n)"};
    app.require_subcommand(1);
    Options o;
    std::string suite;

    auto lambda = [&](CLI::App* s) { s->add_option("--lambda", o.lambda, "comma-separated rationals"); };
    auto mu = [&](CLI::App* s) { s->add_option("--mu", o.mu, "comma-separated rationals"); };
    auto format = [&](CLI::App* s) {
        s->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
    };
    auto sampling = [&](CLI::App* s) {
        s->add_option("--samples", o.samples);
        s->add_option("--seed", o.seed);
        s->add_option("--radius", o.radius);
    };

    auto* en = app.add_subcommand("enum", "enumerate standard tableaux");
    en->add_option("--series", o.series);
    lambda(en);
    en->add_flag("--count-only", o.count_only);
    format(en);

    auto* di = app.add_subcommand("dim", "Weyl dimension with enumeration cross-check");
    di->add_option("--series", o.series);
    lambda(di);

    auto* ac = app.add_subcommand("act", "apply F(i,j), casimir or bracket:F(a,b),F(c,d)");
    ac->add_option("--gen", o.gen);
    ac->add_option("--tableau", o.tableau);
    ac->add_option("--module", o.module);
    lambda(ac);
    mu(ac);

    auto* we = app.add_subcommand("weight", "weight of a type C tableau");
    we->add_option("--tableau", o.tableau);

    auto* ws = app.add_subcommand("weights", "weight space basis");
    ws->add_option("--module", o.module);
    lambda(ws);
    mu(ws);
    ws->add_option("--gamma", o.gamma);
    format(ws);

    auto* sp = app.add_subcommand("special", "special tableaux");
    sp->add_option("--which", o.which);
    lambda(sp);
    mu(sp);

    auto* pr = app.add_subcommand("primitive", "primitivity of T(W_lambda)");
    lambda(pr);

    auto* ve = app.add_subcommand("verify", "verification suites");
    ve->add_option("suite", suite, "relations|casimir|multiplicity|lagrange|vanishing|oscillator")->required();
    ve->add_option("--module", o.module);
    ve->add_option("--tableau", o.tableau);
    lambda(ve);
    mu(ve);
    ve->add_option("--sigma", o.sigma, "comma-separated indices");
    ve->add_option("--k", o.k);
    ve->add_option("--c", o.c);
    sampling(ve);
    format(ve);

    auto* cl = app.add_subcommand("classify", "isomorphism test of two bounded specs");
    cl->add_option("--a", o.a);
    cl->add_option("--b", o.b);

    auto* re = app.add_subcommand("reach", "witness mu for a support coset");
    lambda(re);
    re->add_option("--target", o.target);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*en) run_enum(o);
        else if (*di) run_dim(o);
        else if (*ac) run_act(o);
        else if (*we) run_weight(o);
        else if (*ws) run_weights(o);
        else if (*sp) run_special(o);
        else if (*pr) run_primitive(o);
        else if (*ve) run_verify(suite, o);
        else if (*cl) run_classify(o);
        else if (*re) run_reach(o);
    } catch (const Failed& f) {
        return f.code;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
