#include "gtsp/verify.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace gtsp {

namespace {

constexpr std::size_t kWitnesses = 20;

std::string vec_str(const TableauVector& v)
{
    std::string s;
    for (const auto& [t, c] : v.sorted()) {
        if (!s.empty()) s += " + ";
        s += to_string(c) + "*" + t.str();
    }
    return s.empty() ? "0" : s;
}

std::optional<Rational> scalar_on(const TableauVector& v, const TableauC& t)
{
    if (v.empty()) return Rational(0);
    if (v.size() != 1) return std::nullopt;
    auto it = v.terms().find(t);
    if (it == v.terms().end()) return std::nullopt;
    return it->second;
}

}  // namespace

void Report::fail(std::string witness)
{
    ++count;
    if (failures.size() < kWitnesses) failures.push_back(std::move(witness));
}

Rational QuadPoly::operator()(const Vec& x) const
{
    Rational r = c.at(0);
    std::size_t p = 1;
    for (int i = 0; i < n; ++i) r += c.at(p++) * x[i];
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) r += c.at(p++) * x[i] * x[j];
    return r;
}

std::string QuadPoly::str() const
{
    std::string s;
    auto term = [&](const Rational& a, const std::string& m) {
        if (a == 0) return;
        if (!s.empty()) s += " + ";
        s += to_string(a) + m;
    };
    std::size_t p = 0;
    term(c.at(p++), "");
    for (int i = 0; i < n; ++i) term(c.at(p++), "*x" + std::to_string(i + 1));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) term(c.at(p++), "*x" + std::to_string(i + 1) + "*x" + std::to_string(j + 1));
    return s.empty() ? "0" : s;
}

Rational finite_casimir(const Vec& lambda)
{
    ModuleSpec spec = ModuleSpec::finite(lambda);
    auto basis = enumerate_C(lambda);
    if (basis.empty()) throw std::logic_error("empty finite module");
    GTAction act(spec.n, membership(spec));
    auto s = scalar_on(act.casimir(basis.front()), basis.front());
    if (!s) throw std::logic_error("Casimir is not scalar on L_C(" + to_string(lambda) + ")");
    return *s;
}

namespace {

std::vector<Vec> dominant_box(int n, long radius)
{
    std::vector<Vec> out;
    Vec cur;
    auto rec = [&](auto&& self, long hi) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (long v = hi; v >= -radius; --v) {
            cur.push_back(Rational(v));
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::stable_sort(out.begin(), out.end(), [](const Vec& a, const Vec& b) {
        Rational sa = 0, sb = 0;
        for (const auto& x : a) sa -= x;
        for (const auto& x : b) sb -= x;
        return sa < sb;
    });
    return out;
}

std::vector<Rational> features(const Vec& x)
{
    const int n = static_cast<int>(x.size());
    std::vector<Rational> f{Rational(1)};
    for (int i = 0; i < n; ++i) f.push_back(x[i]);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) f.push_back(x[i] * x[j]);
    return f;
}

// Exact solve of an overdetermined consistent system by row reduction.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> rows)
{
    const std::size_t m = rows.front().size() - 1;
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < m && r < rows.size(); ++col) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][col] == 0) ++p;
        if (p == rows.size()) throw std::logic_error("Casimir fit is underdetermined");
        std::swap(rows[p], rows[r]);
        Rational inv = 1 / rows[r][col];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t q = 0; q < rows.size(); ++q) {
            if (q == r || rows[q][col] == 0) continue;
            Rational f = rows[q][col];
            for (std::size_t c = col; c <= m; ++c) rows[q][c] -= f * rows[r][c];
        }
        pivots.push_back(col);
        ++r;
    }
    if (r < m) throw std::logic_error("Casimir fit is underdetermined");
    for (std::size_t q = r; q < rows.size(); ++q)
        if (rows[q][m] != 0) throw std::logic_error("Casimir values are not a quadratic polynomial");
    std::vector<Rational> sol(m);
    for (std::size_t i = 0; i < m; ++i) sol[i] = rows[i][m];
    return sol;
}

}  // namespace

const QuadPoly& casimir_polynomial(int n)
{
    static std::mutex mu;
    static std::map<int, QuadPoly> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto weights = dominant_box(n, 3);
    std::vector<std::vector<Rational>> rows;
    for (const auto& l : weights) {
        auto row = features(l);
        row.push_back(finite_casimir(l));
        rows.push_back(std::move(row));
    }
    QuadPoly p{n, solve_exact(std::move(rows))};
    return cache.emplace(n, std::move(p)).first->second;
}

Vec casimir_argument(const ModuleSpec& spec)
{
    if (spec.variant == Variant::FiniteC) return spec.lambda;
    if (spec.variant == Variant::GenericC) {
        Vec top = spec.seed.top();
        Vec r = rho(Series::C, spec.n);
        for (int i = 0; i < spec.n; ++i) top[i] -= r[i] + half();
        return top;
    }
    Vec x = spec.lambda;
    for (auto& v : x) v += 1;
    return x;
}

std::vector<TableauC> verification_samples(const ModuleSpec& spec, std::size_t samples, std::uint64_t seed, long radius)
{
    if (spec.variant == Variant::FiniteC) return enumerate_C(spec.lambda);
    return sample_members(spec, samples, seed, radius);
}

std::vector<std::pair<Symbol, Symbol>> relation_pairs(int n)
{
    auto basis = canonical_basis(n);
    std::vector<std::pair<Symbol, Symbol>> out;
    if (n <= 3) {
        for (std::size_t a = 0; a < basis.size(); ++a)
            for (std::size_t b = a + 1; b < basis.size(); ++b) out.emplace_back(basis[a], basis[b]);
    } else {
        for (const auto& g : generator_symbols(n))
            for (const auto& s : basis)
                if (g != s) out.emplace_back(g, s);
    }
    return out;
}

Report verify_representation(const ModuleSpec& spec, std::size_t samples, std::uint64_t seed, long radius)
{
    Report r{"relations", spec.str(), seed};
    GTAction act(spec.n, membership(spec));
    auto pairs = relation_pairs(spec.n);
    std::map<std::pair<Symbol, Symbol>, Expansion> sc;
    for (const auto& p : pairs) sc[p] = structure_constants(spec.n, p.first, p.second);
    auto members = verification_samples(spec, samples, seed, radius);
    r.extra["samples"] = members.size();
    if (members.empty()) r.fail("no members sampled");
    for (const auto& t : members) {
        TableauVector base(t);
        for (const auto& [a, b] : pairs) {
            ++r.checks;
            try {
                TableauVector lhs = act.apply(a, act.apply(b, base)) - act.apply(b, act.apply(a, base));
                TableauVector rhs = act.apply(sc[{a, b}], base);
                if (lhs != rhs)
                    r.fail("[" + to_string(a) + "," + to_string(b) + "] on " + t.str() + ": " + vec_str(lhs - rhs));
            } catch (const RegularityError& e) {
                r.fail("[" + to_string(a) + "," + to_string(b) + "] on " + t.str() + ": " + e.what());
            }
        }
        act.clear_cache();
    }
    return r;
}

Report verify_casimir(const ModuleSpec& spec, std::size_t samples, std::uint64_t seed, long radius)
{
    Report r{"casimir", spec.str(), seed};
    GTAction act(spec.n, membership(spec));
    auto members = verification_samples(spec, samples, seed, radius);
    if (spec.variant == Variant::FiniteC && members.size() > samples) members.resize(samples);
    std::optional<Rational> first;
    for (const auto& t : members) {
        ++r.checks;
        auto s = scalar_on(act.casimir(t), t);
        if (!s) {
            r.fail("not scalar on " + t.str());
            continue;
        }
        if (!first) first = *s;
        if (*s != *first) r.fail("scalar " + to_string(*s) + " on " + t.str() + " differs from " + to_string(*first));
        act.clear_cache();
    }
    if (!first) {
        r.fail("no scalar computed");
        return r;
    }
    Vec arg = casimir_argument(spec);
    Rational expected = casimir_polynomial(spec.n)(arg);
    r.extra["scalar"] = to_string(*first);
    r.extra["expected"] = to_string(expected);
    r.extra["argument"] = to_string(arg);
    ++r.checks;
    if (*first != expected)
        r.fail("scalar " + to_string(*first) + " differs from p(" + to_string(arg) + ") = " + to_string(expected));
    return r;
}

Report verify_multiplicity(const ModuleSpec& spec, long radius)
{
    if (!spec.is_bounded_family()) throw std::invalid_argument("verify_multiplicity needs a bounded spec");
    ModuleSpec amb = ModuleSpec::bounded(spec.mu, spec.lambda);
    Report r{"multiplicity", amb.str(), 0};
    const Integer deg = degree(spec.lambda);
    r.extra["degree"] = deg.get_str();
    r.extra["radius"] = radius;
    Membership m = membership(amb);
    std::size_t fibers = 0;
    for (const auto& gamma : support_window(amb, radius)) {
        ++fibers;
        ++r.checks;
        auto ws = weight_space_basis(amb, gamma);
        auto scan = weight_fiber_scan(amb, gamma);
        if (Integer(ws.basis.size()) != deg)
            r.fail("weight " + to_string(gamma) + ": dimension " + std::to_string(ws.basis.size()) + " != " + deg.get_str() +
                   (ws.diagnostic.empty() ? "" : " (" + ws.diagnostic + ")"));
        std::vector<TableauC> a = ws.basis, b = scan;
        std::sort(a.begin(), a.end(), tableau_less);
        std::sort(b.begin(), b.end(), tableau_less);
        if (a != b) r.fail("weight " + to_string(gamma) + ": class extension and fiber scan disagree");
        for (const auto& t : a)
            if (!m(t) || weight_C(t) != gamma) r.fail("weight " + to_string(gamma) + ": bad basis tableau " + t.str());
        // the same offset moved off the support coset
        Vec off = gamma;
        off[0] += 1;
        ++r.checks;
        if (support_contains(amb, off) || !weight_fiber_scan(amb, off).empty())
            r.fail("off-coset weight " + to_string(off) + " has a nonzero fiber");
    }
    r.extra["fibers"] = fibers;
    return r;
}

Report verify_submodule_closure(const ModuleSpec& spec, std::size_t samples, std::uint64_t seed, long radius)
{
    if (spec.variant != Variant::BoundedSubPlus) throw std::invalid_argument("closure check needs a BoundedSubPlus spec");
    Report r{"closure", spec.str(), seed};
    Membership ambient = membership(ModuleSpec::bounded(spec.mu, spec.lambda));
    std::size_t boundary = 0;
    for (const auto& t : sample_members(spec, samples, seed, radius)) {
        for (const auto& g : generator_symbols(spec.n)) {
            ++r.checks;
            for (const auto& [target, c] : raw_generator_terms(g, t)) {
                if (!ambient(target) || in_plus(target, spec.k)) continue;
                ++boundary;
                if (c != 0)
                    r.fail(to_string(g) + " on " + t.str() + " leaves the submodule with coefficient " + to_string(c));
            }
        }
    }
    r.extra["boundary_terms"] = boundary;
    return r;
}

Rational lagrange_sum(const Vec& c)
{
    const std::size_t k = c.size();
    Rational s = 0;
    for (std::size_t i = 0; i < k; ++i) {
        Rational num = 1, den = 1;
        for (std::size_t a = 1; a + 1 < k; ++a) num *= c[a] - c[i] - 1;
        for (std::size_t a = 0; a < k; ++a)
            if (a != i) den *= c[a] - c[i];
        s += num / den;
    }
    return s;
}

bool verify_lagrange(int k, const Vec& c)
{
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (static_cast<int>(c.size()) != k) throw std::invalid_argument("expected " + std::to_string(k) + " values");
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b)
            if (c[a] == c[b]) throw std::invalid_argument("values must be pairwise distinct");
    return lagrange_sum(c) == 0;
}

std::string lemma_hypothesis_violation(const TableauC& t, int k)
{
    if (k < 2 || k > t.n()) return "row " + std::to_string(k) + " out of range";
    if (t.lp(k, 1) != half()) return "l'_{k1} != 1/2";
    if (t.lp(k, k) != t.l(k, k)) return "l'_{kk} != l_{kk}";
    for (int i = 2; i <= k - 1; ++i)
        if (t.l(k, i) != t.lp(k, i) || t.lp(k, i) != t.l(k - 1, i))
            return "l_{k" + std::to_string(i) + "} = l'_{k" + std::to_string(i) + "} = l_{k-1," + std::to_string(i) +
                   "} fails";
    return {};
}

namespace {

TableauC shifted(TableauC t, std::initializer_list<Shift> s)
{
    for (const auto& x : s) t = apply_shift(t, x);
    return t;
}

// Zero check that records a skip when a denominator vanishes.
template <class F>
void expect_zero(Report& r, const std::string& item, const std::string& where, F&& f)
{
    try {
        Rational v = f();
        ++r.checks;
        if (v != 0) r.fail(item + " " + where + " = " + to_string(v));
    } catch (const RegularityError& e) {
        r.skipped.push_back(item + " " + where + ": undefined (" + e.what() + ")");
    }
}

std::string idx(std::initializer_list<int> xs)
{
    std::string s = "[";
    for (int x : xs) s += (s.size() > 1 ? "," : "") + std::to_string(x);
    return s + "]";
}

}  // namespace

Report lemma_items(const TableauC& t, int k)
{
    Report r{"vanishing", t.str(), 0};
    r.extra["k"] = k;
    for (int i = 1; i <= k; ++i) expect_zero(r, "(i)", idx({i}), [&] { return coeff_B(t, k, i); });
    for (int rr = 2; rr <= k - 1; ++rr)
        for (int s = 1; s <= k - 1; ++s)
            expect_zero(r, "(ii)", idx({rr, s}),
                        [&] { return coeff_B(shifted(t, {{k - 1, s, false, -1}}), k, rr); });
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k - 1; ++j)
            for (int tt = 1; tt <= k; ++tt) {
                if (tt == i) continue;
                expect_zero(r, "(iii)", idx({tt, i, j}), [&] {
                    return coeff_B(shifted(t, {{k, i, true, 1}, {k - 1, j, false, 1}}), k, tt);
                });
            }
    for (int j = 2; j <= k - 1; ++j)
        expect_zero(r, "(iv)", idx({j}),
                    [&] { return coeff_B(shifted(t, {{k, j, true, 1}, {k - 1, j, false, 1}}), k, j); });
    for (int i = 1; i <= k; ++i)
        for (int j = 2; j <= k - 1; ++j) {
            if (i == j) continue;
            for (int m = 1; m <= k - 1; ++m)
                expect_zero(r, "(v)", idx({i, j, m}), [&] { return coeff_D(t, k, i, j, m); });
        }
    if (t.l(k, 1) + t.l(k - 1, 1) != 1) {
        r.skipped.push_back("summation: l_{k1} + l_{k-1,1} != 1");
        return r;
    }
    for (int m = 1; m <= k - 1; ++m)
        expect_zero(r, "(sum)", idx({m}), [&] {
            Rational s = 0;
            for (int i = 1; i <= k; ++i)
                s += coeff_D(t, k, i, 1, m) * coeff_B(shifted(t, {{k, i, true, 1}, {k - 1, 1, false, 1}}), k, i);
            return s;
        });
    return r;
}

Report verify_vanishing_lemmas(const TableauC& t, int k)
{
    std::string why = lemma_hypothesis_violation(t, k);
    if (!why.empty()) throw HypothesisError("hypothesis unmet at k=" + std::to_string(k) + ": " + why);
    return lemma_items(t, k);
}

Report verify_vanishing_lemmas(const TableauC& t)
{
    Report all{"vanishing", t.str(), 0};
    nlohmann::json rows = nlohmann::json::array();
    for (int k = 2; k <= t.n(); ++k) {
        std::string why = lemma_hypothesis_violation(t, k);
        if (!why.empty()) {
            all.skipped.push_back("k=" + std::to_string(k) + ": " + why);
            continue;
        }
        Report r = lemma_items(t, k);
        rows.push_back(k);
        all.checks += r.checks;
        for (auto& f : r.failures) all.fail("k=" + std::to_string(k) + " " + f);
        all.count += r.count - std::min(r.count, r.failures.size());
        for (auto& s : r.skipped) all.skipped.push_back("k=" + std::to_string(k) + " " + s);
    }
    if (rows.empty()) throw HypothesisError("no row satisfies the lemma hypotheses");
    all.extra["rows"] = rows;
    return all;
}

TableauC synthetic_lemma_tableau(int k, Rng& rng)
{
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    TableauC t(k);
    auto draw = [&] { return rng.rational(40, 7); };
    for (int r = 1; r <= k; ++r)
        for (int i = 1; i <= r; ++i) {
            t.l(r, i) = draw();
            t.lp(r, i) = draw();
        }
    t.lp(k, 1) = half();
    t.lp(k, k) = t.l(k, k);
    for (int i = 2; i <= k - 1; ++i) {
        t.l(k, i) = draw();
        t.lp(k, i) = t.l(k, i);
        t.l(k - 1, i) = t.l(k, i);
    }
    t.l(k - 1, 1) = 1 - t.l(k, 1);
    return t;
}

Report verify_homomorphism(const OscSpec& spec, std::size_t samples, std::uint64_t seed, long radius)
{
    Report r{"homomorphism", "nu=" + to_string(spec.nu), seed};
    const int n = spec.n();
    OscAction act(spec);
    auto pairs = relation_pairs(n);
    auto monos = sample_monomials(spec, samples, seed, radius);
    r.extra["samples"] = monos.size();
    if (monos.empty()) r.fail("no monomials sampled");
    for (const auto& m : monos) {
        OscVector base;
        osc_add(base, m, RootTwo{1});
        try {
            Vec w = spec.weight(m);
            for (int k = 1; k <= n; ++k) {
                ++r.checks;
                OscVector h = act.apply(Symbol{k, k}, base);
                OscVector want;
                osc_add(want, m, RootTwo(w[k - 1]));
                if (h != want) r.fail("F(" + std::to_string(k) + "," + std::to_string(k) + ") weight on " + to_string(m));
            }
            for (const auto& [a, b] : pairs) {
                ++r.checks;
                OscVector lhs = act.apply(a, act.apply(b, base));
                for (const auto& [x, c] : act.apply(b, act.apply(a, base))) osc_add(lhs, x, -c);
                OscVector rhs = act.apply(structure_constants(n, a, b), base);
                if (lhs != rhs) r.fail("[" + to_string(a) + "," + to_string(b) + "] on " + to_string(m));
            }
        } catch (const OracleError& e) {
            r.fail(std::string(e.what()) + " at " + to_string(m));
        }
    }
    return r;
}

Report verify_oscillator(const Vec& mu, const Vec& lambda, const IndexSet& sigma, long window)
{
    Degree1Report d = compare_degree1(mu, lambda, sigma, window);
    Report r{"oscillator", ModuleSpec::subquotient(mu, lambda, sigma).str(), 0};
    r.checks = d.fibers + 1;
    for (const auto& m : d.mismatches) r.fail(m);
    if (d.mismatches.empty() && !d.casimir_match)
        r.fail("Casimir " + to_string(d.casimir_tableau) + " != " + to_string(d.casimir_oscillator));
    r.extra["window"] = window;
    r.extra["nu"] = to_string(d.nu);
    nlohmann::json so = nlohmann::json::array();
    for (int i : d.sigma_osc) so.push_back(i);
    r.extra["sigma_osc"] = so;
    r.extra["fibers"] = d.fibers;
    r.extra["nonzero_fibers"] = d.nonzero_fibers;
    r.extra["casimir"] = to_string(d.casimir_tableau);
    return r;
}

}  // namespace gtsp
