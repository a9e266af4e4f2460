// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include "gtsp/io.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace gtsp;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream note;

    void require(bool cond, const std::string& what)
    {
        if (cond) return;
        if (!ok) note << "; ";
        ok = false;
        note << what;
    }
};

Vec v(const char* s) { return parse_vector(s); }

Vec constant(int n, const Rational& x) { return Vec(static_cast<std::size_t>(n), x); }

Vec with_last(int n, const Rational& x, const Rational& last)
{
    Vec out = constant(n, x);
    out.back() = last;
    return out;
}

// all vectors with entries from vals, filtered by dominance
std::vector<Vec> dominant_box(Series s, int n, const Vec& vals)
{
    std::vector<Vec> out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    while (true) {
        Vec x;
        for (auto i : idx) x.push_back(vals[i]);
        if (is_dominant(s, x)) out.push_back(x);
        std::size_t p = 0;
        while (p < idx.size() && ++idx[p] == vals.size()) idx[p++] = 0;
        if (p == idx.size()) break;
    }
    return out;
}

void criterion_1(Outcome& o)
{
    std::size_t cases = 0;
    Vec ints = v("-3,-2,-1,0");
    Vec halves = v("-5/2,-3/2,-1/2,1/2,3/2,5/2");
    for (int n = 2; n <= 3; ++n) {
        for (const auto& l : dominant_box(Series::C, n, ints)) {
            ++cases;
            Integer w = weyl_dimension(Series::C, l);
            o.require(Integer(enumerate_standard(Series::C, l).size()) == w, "C " + to_string(l));
        }
        for (const auto& l : dominant_box(Series::D, n, halves)) {
            ++cases;
            Integer w = weyl_dimension(Series::D, l);
            o.require(Integer(enumerate_standard(Series::D, l).size()) == w, "D " + to_string(l));
        }
    }
    o.require(enumerate_C(v("0,0")).size() == 1, "seed (0,0)");
    o.require(enumerate_C(v("0,-1")).size() == 4, "seed (0,-1)");
    o.require(enumerate_D(v("-1/2,-1/2")).size() == 2, "seed D (-1/2,-1/2)");
    o.note << (o.ok ? "" : "; ") << cases << " weights";
}

void criterion_2(Outcome& o)
{
    std::size_t checks = 0;
    for (const char* l : {"0,0", "0,-1", "-1,-1", "-1,-2"}) {
        Report r = verify_representation(ModuleSpec::finite(v(l)), 0, 1);
        checks += r.checks;
        o.require(r.ok(), "lambda (" + std::string(l) + "): " + std::to_string(r.count) + " failures");
    }
    o.note << (o.ok ? "" : "; ") << checks << " relation checks";
}

const ModuleSpec& bounded2()
{
    static const ModuleSpec s = ModuleSpec::bounded(v("1/3,2/5"), v("-1/2,-1/2"));
    return s;
}

const ModuleSpec& bounded3()
{
    static const ModuleSpec s = ModuleSpec::bounded(v("1/3,2/5,3/7"), v("-1/2,-1/2,-3/2"));
    return s;
}

void criterion_3(Outcome& o)
{
    for (const ModuleSpec* s : {&bounded2(), &bounded3()}) {
        Report r = verify_representation(*s, 100, 1);
        o.require(r.ok(), s->str() + ": " + std::to_string(r.count) + "/" + std::to_string(r.checks) +
                              " failed, first " + (r.failures.empty() ? "" : r.failures.front().substr(0, 60)));
        if (r.ok()) o.note << s->str() << " " << r.checks << " checks ";
    }
}

void criterion_4(Outcome& o)
{
    TableauC seed(2);
    seed.l(2, 1) = make_rational(1, 7);
    seed.l(2, 2) = make_rational(-2, 9);
    seed.lp(2, 1) = make_rational(1, 5);
    seed.lp(2, 2) = make_rational(19, 35);
    seed.l(1, 1) = make_rational(1, 11);
    seed.lp(1, 1) = make_rational(3, 13);
    o.require(is_C_generic(seed), "seed not C-generic");
    if (!o.ok) return;
    Report r = verify_representation(ModuleSpec::generic(seed), 50, 3);
    o.require(r.ok(), std::to_string(r.count) + " failures");
    o.note << (o.ok ? "" : "; ") << r.checks << " checks";
}

void criterion_5(Outcome& o)
{
    for (const char* l : {"-1/2,-1/2", "-1/2,-3/2"}) {
        ModuleSpec s = ModuleSpec::bounded(v("1/3,2/5"), v(l));
        Report r = verify_multiplicity(s, 4);
        Integer expect = weyl_dimension(Series::D, v(l)) / 2;
        o.require(r.ok(), std::string(l) + ": " + std::to_string(r.count) + " bad fibers");
        o.require(degree(v(l)) == expect, std::string(l) + ": degree differs from Weyl/2");
        o.note << "(" << l << ") " << r.checks << " fibers of dim " << expect.get_str() << " ";
    }
}

std::vector<ModuleSpec> tested_bounded()
{
    return {bounded2(), ModuleSpec::bounded(v("1/3,2/5"), v("-1/2,-3/2")), bounded3(),
            ModuleSpec::bounded(v("1/2,1/2"), v("-1/2,-1/2"))};
}

void criterion_6(Outcome& o)
{
    std::size_t seen = 0;
    for (const auto& s : tested_bounded()) {
        auto members = sample_members(s, 500, 6, 3);
        o.require(members.size() == 500, s.str() + ": only " + std::to_string(members.size()) + " members");
        for (const auto& t : members) {
            ++seen;
            Vec w = weight_C(t);
            o.require(support_contains(s, w), s.str() + ": off-coset weight " + to_string(w));
            w[0] += 1;
            o.require(!support_contains(s, w), s.str() + ": coset test accepts an odd shift");
        }
    }
    o.note << (o.ok ? "" : "; ") << seen << " members";
}

void criterion_7(Outcome& o)
{
    for (int n = 2; n <= 4; ++n)
        for (bool last : {false, true}) {
            Vec l = last ? with_last(n, -half(), make_rational(-3, 2)) : constant(n, -half());
            ModuleSpec s = ModuleSpec::bounded(constant(n, half()), l);
            PrimitivityReport r = check_primitive(highest_tableau(l), s);
            std::string tag = "(" + to_string(l) + ")";
            if (r.primitive) {
                o.note << tag << " ok ";
                continue;
            }
            std::string which;
            for (const auto& x : r.nonzero) which += (which.empty() ? "" : ",") + x;
            o.require(false, tag + " nonzero " + which);
        }
}

void criterion_8(Outcome& o)
{
    std::size_t actions = 0, boundary = 0;
    const std::vector<ModuleSpec> specs = {ModuleSpec::sub_plus(v("1/2,2/5"), v("-1/2,-1/2"), 1),
                                           ModuleSpec::sub_plus(v("1/3,1/2"), v("-1/2,-1/2"), 2),
                                           ModuleSpec::sub_plus(v("1/2,2/5"), v("-1/2,-3/2"), 1)};
    for (const auto& s : specs) {
        Report r = verify_submodule_closure(s, 40, 8);
        actions += r.checks;
        boundary += r.extra.value("boundary_terms", std::size_t{0});
        o.require(r.ok(), s.str() + ": " + std::to_string(r.count) + " surviving escapes");
    }
    o.require(actions >= 200, "only " + std::to_string(actions) + " actions");
    o.require(boundary > 0, "no boundary term was exercised");
    o.note << (o.ok ? "" : "; ") << actions << " actions, " << boundary << " boundary terms";
}

void criterion_9(Outcome& o)
{
    std::size_t items = 0;
    for (const char* l : {"-1/2,-1/2,-3/2", "-1/2,-1/2,-1/2,-3/2"}) {
        Report r = verify_vanishing_lemmas(highest_tableau(v(l)));
        items += r.checks;
        o.require(r.ok(), std::string("T(W) ") + l + ": " + (r.failures.empty() ? "" : r.failures.front()));
    }
    Rng rng(9);
    for (int i = 0; i < 50; ++i) {
        int k = 2 + static_cast<int>(rng.uniform(0, 2));
        TableauC t = synthetic_lemma_tableau(k, rng);
        Report r = verify_vanishing_lemmas(t, k);
        items += r.checks;
        o.require(r.ok(), "synthetic k=" + std::to_string(k) + ": " + (r.failures.empty() ? "" : r.failures.front()));
    }
    std::size_t tuples = 0;
    for (int i = 0; i < 100; ++i) {
        int k = 2 + i % 5;
        Vec c;
        while (static_cast<int>(c.size()) < k) {
            Rational x = rng.rational(40, 12);
            if (std::find(c.begin(), c.end(), x) == c.end()) c.push_back(x);
        }
        ++tuples;
        o.require(verify_lagrange(k, c), "lagrange " + to_string(c));
        if (k == 2) {
            // closed form: 1/(c2-c1) + 1/(c1-c2)
            Rational closed = 1 / (c[1] - c[0]) + 1 / (c[0] - c[1]);
            o.require(closed == 0 && lagrange_sum(c) == closed, "k=2 closed form " + to_string(c));
        }
    }
    o.note << (o.ok ? "" : "; ") << items << " lemma items, " << tuples << " tuples";
}

std::string scalar_of(const Report& r) { return r.extra.value("scalar", std::string("?")); }

void criterion_10(Outcome& o)
{
    for (const ModuleSpec* s : {&bounded2(), &bounded3()}) {
        Report r = verify_casimir(*s, 50, 10);
        o.require(r.ok(), s->str() + ": " + (r.failures.empty() ? "" : r.failures.front().substr(0, 80)));
        if (r.ok()) o.note << s->str() << " scalar " << scalar_of(r) << " ";
    }
    for (const char* l : {"-1/2,-1/2", "-1/2,-3/2"}) {
        Report a = verify_casimir(ModuleSpec::bounded(v("1/3,2/5"), v(l)), 20, 10);
        Report b = verify_casimir(ModuleSpec::bounded(v("2/7,-1/9"), v(l)), 20, 10);
        o.require(a.ok() && b.ok(), std::string("not scalar at (") + l + ")");
        o.require(scalar_of(a) == scalar_of(b),
                  std::string("mu-dependence at (") + l + "): " + scalar_of(a) + " vs " + scalar_of(b));
        // case (b): mu - eps_1/2, tau_1 lambda
        Vec mu = v("1/3,2/5");
        mu[0] -= half();
        Report c = verify_casimir(ModuleSpec::bounded(mu, tau1(v(l))), 20, 10);
        o.require(c.ok(), std::string("not scalar on the tau_1 image of (") + l + ")");
        o.require(scalar_of(c) == scalar_of(a),
                  std::string("tau_1 image of (") + l + "): " + scalar_of(c) + " vs " + scalar_of(a));
    }
}

void criterion_11(Outcome& o)
{
    for (const IndexSet& sigma : {IndexSet{}, IndexSet{1}, IndexSet{1, 2}}) {
        Degree1Report d = compare_degree1(v("1/2,1/2"), v("-1/2,-1/2"), sigma, 6);
        std::string tag = "Sigma=" + to_json(sigma).dump();
        o.require(d.mismatches.empty(), tag + ": " + std::to_string(d.mismatches.size()) + " mismatches");
        o.require(d.casimir_match, tag + ": central character " + to_string(d.casimir_tableau) + " vs " +
                                       to_string(d.casimir_oscillator));
        o.note << tag << " " << d.fibers << " fibers ";
    }
}

Triple random_triple(Rng& rng, int n)
{
    Triple t;
    for (int i = 0; i < n; ++i) {
        Rational m = rng.uniform(0, 2) == 0 ? Rational(half() + rng.uniform(-2, 2)) : rng.rational(20, 7);
        while (is_integer(m)) m += make_rational(1, 3);
        t.mu.push_back(m);
    }
    Vec halves = v("-5/2,-3/2,-1/2,1/2");
    auto dom = dominant_box(Series::D, n, halves);
    t.lambda = dom[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(dom.size()) - 1))];
    Vec twice;
    for (const auto& m : t.mu) twice.push_back(2 * m);
    for (int i : int_set(twice))
        if (rng.uniform(0, 1)) t.sigma.push_back(i);
    return t;
}

void criterion_12(Outcome& o)
{
    Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        int n = 2 + static_cast<int>(rng.uniform(0, 1));
        Triple a = random_triple(rng, n), b = random_triple(rng, n);
        o.require(iso_equivalent(a, a), "not reflexive");
        o.require(iso_equivalent(a, b) == iso_equivalent(b, a), "not symmetric");
    }
    Triple base{v("1/2,1/3"), v("-1/2,-3/2"), {1}};
    Triple shift{v("3/2,4/3"), base.lambda, base.sigma};
    Triple flip{v("0,1/3"), tau1(base.lambda), base.sigma};
    Triple other{base.mu, base.lambda, {}};
    o.require(iso_equivalent(base, shift), "case (a) rejected");
    o.require(iso_equivalent(base, flip), "case (b) rejected");
    o.require(!iso_equivalent(base, other), "Sigma mismatch accepted");

    std::size_t absent = 0;
    for (int i = 0; i < 50; ++i) {
        Triple t = random_triple(rng, 3);
        Vec target = t.lambda;
        if (i % 5 == 0) {
            target[0] += 1;
            target[1] += 2 * rng.uniform(-2, 2);
        } else {
            for (auto& x : target) x += make_rational(rng.uniform(-6, 6), 2);
        }
        Vec off = target;
        off[0] -= 1;
        for (std::size_t j = 0; j < off.size(); ++j) off[j] -= t.lambda[j];
        bool missing = in_QC(off);
        auto mu = psi_reachable(t.lambda, target);
        o.require(missing == !mu.has_value(), "reachability of " + to_string(target));
        if (!mu) {
            ++absent;
            continue;
        }
        bool nonint = std::none_of(mu->begin(), mu->end(), [](const Rational& x) { return is_integer(x); });
        o.require(nonint, "integral witness for " + to_string(target));
        if (nonint) o.require(support_contains(ModuleSpec::bounded(*mu, t.lambda), target), "witness misses " + to_string(target));
    }
    o.note << (o.ok ? "" : "; ") << absent << "/50 cosets absent";
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
        {"dimension agreement", criterion_1},
        {"representation, finite", criterion_2},
        {"representation, bounded", criterion_3},
        {"representation, generic", criterion_4},
        {"weight multiplicities", criterion_5},
        {"support coset", criterion_6},
        {"primitive vector", criterion_7},
        {"submodule closure", criterion_8},
        {"appendix identities", criterion_9},
        {"central character", criterion_10},
        {"degree-1 oscillator", criterion_11},
        {"classification", criterion_12},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.ok) ++failed;
        std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " [" << std::fixed
                  << std::setprecision(1) << secs << "s] " << o.note.str() << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
