#include "gtsp/oscillator.hpp"

#include <algorithm>

namespace gtsp {

void osc_add(OscVector& v, const Monomial& m, const RootTwo& c)
{
    if (c.is_zero()) return;
    auto [it, fresh] = v.try_emplace(m, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
}

OscSpec::OscSpec(Vec nu_, IndexSet sigma_) : nu(std::move(nu_)), sigma(std::move(sigma_))
{
    std::sort(sigma.begin(), sigma.end());
    IndexSet ints = int_set(nu);
    for (int i : sigma)
        if (std::find(ints.begin(), ints.end(), i) == ints.end())
            throw std::invalid_argument("oscillator twist set must lie in Int(nu)");
}

bool OscSpec::twisted(int i) const { return std::binary_search(sigma.begin(), sigma.end(), i); }

bool OscSpec::member(const Monomial& m) const
{
    if (m.size() != nu.size()) return false;
    Integer sum = 0;
    for (std::size_t i = 0; i < nu.size(); ++i) {
        auto z = integer_distance(m[i], nu[i]);
        if (!z) return false;
        if (is_integer(nu[i]) && m[i] < 0) return false;
        sum += *z;
    }
    return mpz_even_p(sum.get_mpz_t()) != 0;
}

Vec OscSpec::weight(const Monomial& m) const
{
    Vec w;
    for (int i = 1; i <= n(); ++i) w.push_back(twisted(i) ? Rational(-m[i - 1] - half()) : Rational(m[i - 1] + half()));
    return w;
}

Monomial OscSpec::monomial_of_weight(const Vec& gamma) const
{
    Monomial m;
    for (int i = 1; i <= n(); ++i) m.push_back(twisted(i) ? Rational(-gamma[i - 1] - half()) : Rational(gamma[i - 1] - half()));
    return m;
}

namespace {

const RootTwo inv_sqrt2{0, make_rational(1, 2)};
const RootTwo sqrt2{0, 1};

// Single-variable factors of a differential monomial: 't' multiplies, 'd' differentiates.
struct Factor {
    int var;
    char op;
};

// Applies the factors right to left, with theta_Sigma already resolved.
OscVector apply_factors(const OscSpec& spec, const std::vector<Factor>& fs, const Monomial& m, RootTwo c)
{
    Monomial a = m;
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
        Rational& e = a[it->var - 1];
        char op = it->op;
        RootTwo sign{1};
        if (spec.twisted(it->var)) {
            // t -> d, d -> -t
            if (op == 't') {
                op = 'd';
            } else {
                op = 't';
                sign = RootTwo{-1};
            }
        }
        if (op == 't') {
            e += 1;
        } else {
            c *= RootTwo(e);
            e -= 1;
        }
        c *= sign;
        if (c.is_zero()) return {};
    }
    OscVector v;
    osc_add(v, a, c);
    return v;
}

}  // namespace

OscAction::OscAction(OscSpec spec) : spec_(std::move(spec)) { word_table(spec_.n()); }

OscVector OscAction::raw(const Symbol& g, const Monomial& m) const
{
    if (g.i > 0 && g.j == -g.i) return apply_factors(spec_, {{g.i, 't'}, {g.i, 't'}}, m, inv_sqrt2);
    if (g.i < 0 && g.j == -g.i) return apply_factors(spec_, {{g.j, 'd'}, {g.j, 'd'}}, m, -sqrt2);
    if (g.i > 0 && g.j == -(g.i + 1)) return apply_factors(spec_, {{g.i, 't'}, {-g.j, 't'}}, m, inv_sqrt2);
    throw std::invalid_argument("no direct oscillator image for " + to_string(g));
}

OscVector OscAction::generator(const Symbol& g, const Monomial& m) const
{
    if (!spec_.member(m)) throw std::invalid_argument("monomial is not in the module");
    if (g.i == g.j) {
        // 4 F_{kk} = [F_{k,-k}, F_{-k,k}]
        const int k = g.i;
        Symbol r{k, -k}, l{-k, k};
        OscVector out;
        for (const auto& [x, c] : raw(l, m))
            for (const auto& [y, d] : raw(r, x)) osc_add(out, y, c * d * RootTwo(make_rational(1, 4)));
        for (const auto& [x, c] : raw(r, m))
            for (const auto& [y, d] : raw(l, x)) osc_add(out, y, -(c * d * RootTwo(make_rational(1, 4))));
        return out;
    }
    OscVector v = raw(g, m);
    for (const auto& [x, c] : v)
        if (!spec_.member(x)) throw OracleError("nonzero escape " + to_string(g) + " from a member monomial");
    return v;
}

const OscVector& OscAction::symbol(const Symbol& s, const Monomial& m)
{
    auto key = std::make_pair(s, m);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const int n = spec_.n();
    const WordTable& words = word_table(n);
    OscVector v;
    if (!is_canonical(n, s)) {
        auto [cs, c] = canonical_form(s);
        for (const auto& [x, d] : symbol(cs, m)) osc_add(v, x, d * RootTwo(c));
    } else if (words.direct(s)) {
        v = generator(s, m);
    } else {
        const Word& w = words.word(s);
        OscVector tv = symbol(w.t, m);
        OscVector gv = generator(w.g, m);
        OscVector a = apply(w.g, tv);
        OscVector b = apply(w.t, gv);
        for (const auto& [x, c] : a) osc_add(v, x, c * RootTwo(w.coeff));
        for (const auto& [x, c] : b) osc_add(v, x, -(c * RootTwo(w.coeff)));
    }
    return memo_.emplace(std::move(key), std::move(v)).first->second;
}

OscVector OscAction::apply(const Symbol& s, const OscVector& v)
{
    OscVector out;
    for (const auto& [m, c] : v)
        for (const auto& [x, d] : symbol(s, m)) osc_add(out, x, c * d);
    return out;
}

OscVector OscAction::apply(const Expansion& x, const OscVector& v)
{
    OscVector out;
    for (const auto& [s, c] : x)
        for (const auto& [m, d] : apply(s, v)) osc_add(out, m, d * RootTwo(c));
    return out;
}

OscVector OscAction::casimir(const Monomial& m)
{
    OscVector base;
    osc_add(base, m, RootTwo{1});
    OscVector out;
    for (const auto& q : casimir_terms(spec_.n()))
        for (const auto& [x, c] : apply(q.a, apply(q.b, base))) osc_add(out, x, c * RootTwo(q.coeff));
    return out;
}

std::vector<Monomial> sample_monomials(const OscSpec& spec, std::size_t count, std::uint64_t seed, long radius)
{
    Rng rng(seed);
    std::vector<Monomial> out;
    std::size_t attempts = 0;
    while (out.size() < count && attempts < 100 * count + 100) {
        ++attempts;
        Monomial m;
        for (int i = 1; i <= spec.n(); ++i) {
            const Rational& v = spec.nu[i - 1];
            if (is_integer(v))
                m.push_back(Rational(rng.uniform(0, 2 * radius)));
            else
                m.push_back(v + rng.uniform(-radius, radius));
        }
        if (spec.member(m)) out.push_back(m);
    }
    return out;
}

namespace {

std::optional<Rational> scalar_of(const TableauVector& v, const TableauC& t)
{
    if (v.empty()) return Rational(0);
    if (v.size() != 1 || v.terms().count(t) == 0) return std::nullopt;
    return v.coefficient(t);
}

}  // namespace

Degree1Report compare_degree1(const Vec& mu, const Vec& lambda, const IndexSet& sigma, long window)
{
    if (degree(lambda) != 1) throw std::invalid_argument("compare_degree1 needs a degree-1 weight");
    ModuleSpec spec = ModuleSpec::subquotient(mu, lambda, sigma);
    const int n = spec.n;
    Degree1Report r;
    r.window = window;
    Vec twice;
    for (const auto& m : mu) twice.push_back(2 * m);
    for (int i : int_set(twice))
        if (std::find(spec.sigma.begin(), spec.sigma.end(), i) == spec.sigma.end()) r.sigma_osc.push_back(i);
    for (int i = 0; i < n; ++i) r.nu.push_back(2 * mu[i] + lambda[i] + half());
    // the twist sends weight a+1/2 to -a-1/2, moving the coset by eps_i
    for (int i : r.sigma_osc) r.nu[i - 1] += 1;
    OscSpec osc(r.nu, r.sigma_osc);

    for (const auto& gamma : support_window(spec, window)) {
        ++r.fibers;
        std::size_t tab = subquotient_dim(spec, gamma);
        std::size_t os = osc.member(osc.monomial_of_weight(gamma)) ? 1 : 0;
        if (tab || os) ++r.nonzero_fibers;
        if (tab != os)
            r.mismatches.push_back("weight " + to_string(gamma) + ": tableau " + std::to_string(tab) + ", oscillator " +
                                   std::to_string(os));
    }

    auto members = sample_members(spec, 1, 7, 2);
    auto monos = sample_monomials(osc, 1, 7, 2);
    if (members.empty() || monos.empty()) {
        r.mismatches.push_back("no sample available for the central character comparison");
        return r;
    }
    GTAction act(n, membership(spec));
    auto ct = scalar_of(act.casimir(members[0]), members[0]);
    OscAction oa(osc);
    OscVector cv = oa.casimir(monos[0]);
    std::optional<Rational> co;
    if (cv.empty())
        co = Rational(0);
    else if (cv.size() == 1 && cv.begin()->first == monos[0] && cv.begin()->second.is_rational())
        co = cv.begin()->second.a;
    if (!ct || !co) {
        r.mismatches.push_back("Casimir is not scalar on one of the realizations");
        return r;
    }
    r.casimir_tableau = *ct;
    r.casimir_oscillator = *co;
    r.casimir_match = *ct == *co;
    return r;
}

}  // namespace gtsp
