#include "gtsp/modules.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace gtsp {

const char* variant_name(Variant v)
{
    switch (v) {
    case Variant::FiniteC: return "finite";
    case Variant::GenericC: return "generic";
    case Variant::Bounded: return "bounded";
    case Variant::BoundedSubPlus: return "bounded-sub-plus";
    case Variant::Subquotient: return "subquotient";
    }
    return "?";
}

namespace {

void check_bounded_params(const Vec& mu, const Vec& lambda)
{
    if (mu.size() != lambda.size() || mu.size() < 2) throw std::invalid_argument("mu and lambda must have equal length n >= 2");
    for (const auto& m : mu)
        if (is_integer(m)) throw std::invalid_argument("mu entries must be non-integers, got " + to_string(m));
    for (const auto& l : lambda)
        if (!is_half_odd(l)) throw std::invalid_argument("lambda entries must lie in 1/2 + Z, got " + to_string(l));
    if (!is_dominant(Series::D, lambda)) throw std::invalid_argument("lambda is not a dominant so(2n) weight");
}

}  // namespace

ModuleSpec ModuleSpec::finite(const Vec& lambda)
{
    if (lambda.size() < 1) throw std::invalid_argument("empty lambda");
    if (!is_dominant(Series::C, lambda)) throw std::invalid_argument("lambda is not a dominant sp(2n) weight");
    ModuleSpec s;
    s.variant = Variant::FiniteC;
    s.n = static_cast<int>(lambda.size());
    s.lambda = lambda;
    return s;
}

ModuleSpec ModuleSpec::generic(const TableauC& seed)
{
    if (!is_C_generic(seed)) throw std::invalid_argument("seed tableau is not C-generic");
    ModuleSpec s;
    s.variant = Variant::GenericC;
    s.n = seed.n();
    s.seed = seed;
    return s;
}

ModuleSpec ModuleSpec::bounded(const Vec& mu, const Vec& lambda)
{
    check_bounded_params(mu, lambda);
    ModuleSpec s;
    s.variant = Variant::Bounded;
    s.n = static_cast<int>(mu.size());
    s.mu = mu;
    s.lambda = lambda;
    return s;
}

ModuleSpec ModuleSpec::sub_plus(const Vec& mu, const Vec& lambda, int k)
{
    ModuleSpec s = bounded(mu, lambda);
    if (k < 1 || k > s.n) throw std::invalid_argument("index k out of range");
    if (!is_half_odd(mu[k - 1])) throw std::invalid_argument("mu_k must lie in 1/2 + Z");
    s.variant = Variant::BoundedSubPlus;
    s.k = k;
    return s;
}

ModuleSpec ModuleSpec::subquotient(const Vec& mu, const Vec& lambda, const IndexSet& sigma)
{
    ModuleSpec s = bounded(mu, lambda);
    Vec twice;
    for (const auto& m : mu) twice.push_back(2 * m);
    IndexSet ints = int_set(twice);
    for (int i : sigma)
        if (std::find(ints.begin(), ints.end(), i) == ints.end())
            throw std::invalid_argument("sigma must be a subset of Int(2 mu)");
    s.variant = Variant::Subquotient;
    s.sigma = sigma;
    std::sort(s.sigma.begin(), s.sigma.end());
    return s;
}

std::string ModuleSpec::str() const
{
    std::string s = std::string(variant_name(variant)) + "(";
    switch (variant) {
    case Variant::FiniteC: s += "lambda=" + to_string(lambda); break;
    case Variant::GenericC: s += "seed=" + seed.str(); break;
    default:
        s += "mu=" + to_string(mu) + ", lambda=" + to_string(lambda);
        if (variant == Variant::BoundedSubPlus) s += ", k=" + std::to_string(k);
        if (variant == Variant::Subquotient) {
            s += ", sigma={";
            for (std::size_t i = 0; i < sigma.size(); ++i) s += (i ? "," : "") + std::to_string(sigma[i]);
            s += "}";
        }
    }
    return s + ")";
}

std::shared_ptr<const std::unordered_set<TableauD>> d_standard_set(const Vec& lambda)
{
    static std::mutex mu;
    static std::map<Vec, std::shared_ptr<const std::unordered_set<TableauD>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
    auto list = enumerate_D(lambda);
    auto set = std::make_shared<const std::unordered_set<TableauD>>(list.begin(), list.end());
    cache.emplace(lambda, set);
    return set;
}

bool in_plus(const TableauC& t, int k) { return shift_ge(t.lp(k, 1), half()); }

Membership membership(const ModuleSpec& spec)
{
    switch (spec.variant) {
    case Variant::FiniteC: {
        Vec top = top_row(Series::C, spec.lambda);
        return [top](const TableauC& t) { return t.top() == top && is_C_standard(t); };
    }
    case Variant::GenericC: {
        TableauC seed = spec.seed;
        return [seed](const TableauC& t) {
            if (t.n() != seed.n()) return false;
            for (int k = 1; k <= t.n(); ++k)
                for (int i = 1; i <= k; ++i) {
                    auto d = integer_distance(t.l(k, i), seed.l(k, i));
                    if (!d || (k == t.n() && *d != 0)) return false;
                    if (!integer_distance(t.lp(k, i), seed.lp(k, i))) return false;
                }
            return true;
        };
    }
    default: break;
    }
    auto dset = d_standard_set(spec.lambda);
    Vec mu = spec.mu;
    Membership base = [dset, mu](const TableauC& t) {
        if (t.n() != static_cast<int>(mu.size())) return false;
        for (int k = 1; k <= t.n(); ++k)
            if (!integer_distance(t.lp(k, 1), mu[k - 1])) return false;
        return dset->count(split_CD(t).first) > 0;
    };
    if (spec.variant == Variant::Bounded) return base;
    if (spec.variant == Variant::BoundedSubPlus) {
        int k = spec.k;
        return [base, k](const TableauC& t) { return base(t) && in_plus(t, k); };
    }
    Vec twice;
    for (const auto& m : spec.mu) twice.push_back(2 * m);
    IndexSet ints = int_set(twice);
    IndexSet sigma = spec.sigma;
    return [base, ints, sigma](const TableauC& t) {
        if (!base(t)) return false;
        for (int i : ints) {
            bool want = std::find(sigma.begin(), sigma.end(), i) != sigma.end();
            if (in_plus(t, i) != want) return false;
        }
        return true;
    };
}

bool is_member(const TableauC& t, const ModuleSpec& spec) { return membership(spec)(t); }

TableauC special_upper(const Vec& mu, const Vec& lambda)
{
    const int n = static_cast<int>(lambda.size());
    Vec ell = top_row(Series::D, lambda);
    TableauC t(n);
    for (int k = 1; k <= n; ++k) {
        t.lp(k, 1) = mu[k - 1];
        for (int i = 1; i <= k; ++i) t.l(k, i) = ell[i - 1];
        for (int i = 2; i <= k; ++i) t.lp(k, i) = ell[i - 1];
    }
    return t;
}

TableauC special_lower(const Vec& mu, const Vec& lambda)
{
    const int n = static_cast<int>(lambda.size());
    TableauC t = special_upper(mu, lambda);
    Vec ell = top_row(Series::D, lambda);
    t.l(n, 1) = ell[0];
    for (int k = n; k >= 2; --k) t.l(k - 1, 1) = 1 - t.l(k, 1);
    return t;
}

TableauC highest_tableau(const Vec& lambda)
{
    return special_lower(Vec(lambda.size(), half()), lambda);
}

bool in_QC(const Vec& x)
{
    Integer sum = 0;
    for (const auto& v : x) {
        if (!is_integer(v)) return false;
        sum += v.get_num();
    }
    return mpz_even_p(sum.get_mpz_t()) != 0;
}

Vec support_base(const ModuleSpec& spec)
{
    Vec g;
    for (int i = 0; i < spec.n; ++i) g.push_back(2 * spec.mu[i] + spec.lambda[i] + 1);
    return g;
}

bool support_contains(const ModuleSpec& spec, const Vec& gamma)
{
    if (!spec.is_bounded_family()) throw std::invalid_argument("support_contains needs a bounded spec");
    Vec d = gamma;
    Vec base = support_base(spec);
    if (d.size() != base.size()) return false;
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= base[i];
    return in_QC(d);
}

Integer degree(const Vec& lambda)
{
    Integer dim = weyl_dimension(Series::D, lambda);
    Integer p = 1;
    p <<= static_cast<unsigned>(lambda.size() - 1);
    if (dim % p != 0) throw std::logic_error("dim L_D(lambda) is not divisible by 2^(n-1)");
    return dim / p;
}

namespace {

// First primed column forced by the weight gamma for the D-part d.
Vec forced_column(const TableauD& d, const Vec& gamma)
{
    const int n = d.n();
    RowSums rs = row_sums(d);
    Vec col;
    for (int k = 1; k <= n; ++k) {
        Rational prev = k > 1 ? rs.s[k - 2] : Rational(0);
        Rational v = (gamma[k - 1] + rs.s[k - 1] + prev - k + half()) / 2 - rs.sprime[k - 1];
        col.push_back(v);
    }
    return col;
}

bool column_in_mu(const Vec& col, const Vec& mu)
{
    for (std::size_t i = 0; i < col.size(); ++i)
        if (!integer_distance(col[i], mu[i])) return false;
    return true;
}

}  // namespace

std::vector<TableauC> weight_fiber_scan(const ModuleSpec& spec, const Vec& gamma)
{
    std::vector<TableauC> out;
    for (const auto& d : enumerate_D(spec.lambda)) {
        Vec col = forced_column(d, gamma);
        if (column_in_mu(col, spec.mu)) out.push_back(join_CD(d, col));
    }
    return out;
}

WeightSpace weight_space_basis(const ModuleSpec& spec, const Vec& gamma)
{
    WeightSpace ws;
    if (!spec.is_bounded_family()) throw std::invalid_argument("weight_space_basis needs a bounded spec");
    if (!support_contains(spec, gamma)) {
        ws.diagnostic = "weight " + to_string(gamma) + " is not in the support";
        return ws;
    }
    auto dlist = enumerate_D(spec.lambda);
    std::optional<TableauC> ref;
    for (const auto& d : dlist) {
        Vec col = forced_column(d, gamma);
        if (column_in_mu(col, spec.mu)) {
            ref = join_CD(d, col);
            break;
        }
    }
    if (!ref) {
        ws.diagnostic = "no reference tableau of weight " + to_string(gamma);
        return ws;
    }
    auto [w, wcol] = split_CD(*ref);
    RowSums ws_sums = row_sums(w);
    const int n = spec.n;
    for (const auto& r : dlist) {
        if (!weight_equivalent(w, r)) continue;
        RowSums rs = row_sums(r);
        Vec col;
        for (int k = 1; k <= n; ++k) {
            Rational ds = ws_sums.s[k - 1] - rs.s[k - 1];
            Rational dprev = k > 1 ? ws_sums.s[k - 2] - rs.s[k - 2] : Rational(0);
            Rational dsp = ws_sums.sprime[k - 1] - rs.sprime[k - 1];
            col.push_back(wcol[k - 1] + dsp - ds / 2 - dprev / 2);
        }
        ws.basis.push_back(join_CD(r, col));
    }
    return ws;
}

std::size_t subquotient_dim(const ModuleSpec& spec, const Vec& gamma)
{
    if (spec.variant != Variant::Subquotient) throw std::invalid_argument("subquotient_dim needs a subquotient spec");
    Membership m = membership(spec);
    std::size_t c = 0;
    for (const auto& t : weight_space_basis(spec, gamma).basis)
        if (m(t)) ++c;
    return c;
}

PrimitivityReport check_primitive(const TableauC& t, const ModuleSpec& spec)
{
    PrimitivityReport r;
    GTAction act(spec.n, membership(spec));
    TableauVector v(t);
    for (int j = 1; j <= spec.n; ++j) {
        Symbol s{-j, j};
        if (!act.apply(s, v).empty()) r.nonzero.push_back(to_string(s));
    }
    for (int k = 2; k <= spec.n; ++k) {
        Symbol s{k - 1, k};
        if (!act.derived(s, v).empty()) r.nonzero.push_back(to_string(s));
    }
    r.primitive = r.nonzero.empty();
    return r;
}

Vec tau1(const Vec& lambda)
{
    Vec r = lambda;
    r[0] = -r[0];
    return r;
}

bool iso_equivalent(const Triple& a, const Triple& b)
{
    IndexSet sa = a.sigma, sb = b.sigma;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    Vec d;
    for (std::size_t i = 0; i < a.mu.size(); ++i) d.push_back(2 * (a.mu[i] - b.mu[i]));
    if (a.lambda == b.lambda && in_QC(d)) return true;
    if (a.lambda == tau1(b.lambda)) {
        d[0] -= 1;
        if (in_QC(d)) return true;
    }
    return false;
}

namespace {

// a_p..a_n lies in lambda_p..n + eps_p + Q_C of the trailing coordinates
bool excluded_tail(const Vec& a, const Vec& lambda, std::size_t p)
{
    Rational sum = -1;
    for (std::size_t i = p; i < a.size(); ++i) {
        Rational d = a[i] - lambda[i];
        if (!is_integer(d)) return false;
        sum += d;
    }
    return mpz_even_p(sum.get_num_mpz_t()) != 0;
}

}  // namespace

std::optional<Vec> psi_reachable(const Vec& lambda, const Vec& target)
{
    const std::size_t n = lambda.size();
    if (excluded_tail(target, lambda, 0)) return std::nullopt;
    Vec a = target;
    Vec mu(n);
    for (std::size_t p = 0; p < n; ++p) {
        Rational d = a[p] - lambda[p] - 1;
        bool even = is_integer(d) && mpz_even_p(d.get_num_mpz_t());
        bool carry = even;
        // off the integers both parities are admissible; keep the tail out of its excluded coset
        if (!is_integer(d) && p + 1 < n && excluded_tail(a, lambda, p + 1)) carry = true;
        if (!carry) {
            mu[p] = d / 2;
        } else {
            if (p + 1 == n) return std::nullopt;
            mu[p] = (d + 1) / 2;
            a[p + 1] += 1;
        }
    }
    return mu;
}

bool cone_contains(const ConeSpec& c, const Vec& x)
{
    if (!in_QC(x)) throw std::invalid_argument("cone membership needs a root lattice vector");
    for (int k : c.plus)
        if (x[k - 1] < 0) return false;
    for (int k : c.minus)
        if (x[k - 1] > 0) return false;
    return true;
}

long Rng::uniform(long lo, long hi)
{
    // plain modulo keeps the stream identical across standard libraries
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next() % span);
}

Rational Rng::rational(long num_span, long den_max)
{
    return make_rational(uniform(-num_span, num_span), uniform(1, den_max));
}

std::vector<TableauC> sample_members(const ModuleSpec& spec, std::size_t count, std::uint64_t seed, long radius)
{
    Rng rng(seed);
    std::vector<TableauC> out;
    Membership member = membership(spec);
    if (spec.variant == Variant::FiniteC) {
        auto all = enumerate_C(spec.lambda);
        for (std::size_t i = 0; i < count && !all.empty(); ++i)
            out.push_back(all[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(all.size()) - 1))]);
        return out;
    }
    if (spec.variant == Variant::GenericC) {
        while (out.size() < count) {
            TableauC t = spec.seed;
            for (int k = 1; k <= spec.n; ++k)
                for (int i = 1; i <= k; ++i) {
                    if (k < spec.n) t.l(k, i) += rng.uniform(-radius, radius);
                    t.lp(k, i) += rng.uniform(-radius, radius);
                }
            out.push_back(t);
        }
        return out;
    }
    auto dlist = enumerate_D(spec.lambda);
    if (dlist.empty()) return out;
    // Integer shifts of special_upper: the D-part moves inside D_st, the first primed column by at most radius.
    TableauC upper = special_upper(spec.mu, spec.lambda);
    std::size_t attempts = 0;
    while (out.size() < count && attempts < 1000 * count + 1000) {
        ++attempts;
        const TableauD& d = dlist[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(dlist.size()) - 1))];
        Vec col;
        for (int k = 1; k <= spec.n; ++k) {
            Rational base = upper.lp(k, 1);
            bool plus_side = (spec.variant == Variant::BoundedSubPlus && k == spec.k);
            if (spec.variant == Variant::Subquotient && is_half_odd(spec.mu[k - 1])) {
                bool want = std::find(spec.sigma.begin(), spec.sigma.end(), k) != spec.sigma.end();
                base = half();
                col.push_back(want ? Rational(base + rng.uniform(0, radius)) : Rational(base - rng.uniform(1, radius + 1)));
                continue;
            }
            if (plus_side) {
                col.push_back(half() + rng.uniform(0, radius));
                continue;
            }
            col.push_back(base + rng.uniform(-radius, radius));
        }
        TableauC t = join_CD(d, col);
        if (member(t)) out.push_back(t);
    }
    return out;
}

std::vector<Vec> support_window(const ModuleSpec& spec, long radius)
{
    std::vector<Vec> out;
    Vec base = support_base(spec);
    const int n = spec.n;
    std::vector<long> x(n, -radius);
    while (true) {
        long sum = 0;
        for (long v : x) sum += v;
        if (sum % 2 == 0) {
            Vec g = base;
            for (int i = 0; i < n; ++i) g[i] += x[i];
            out.push_back(g);
        }
        int i = 0;
        for (; i < n; ++i) {
            if (++x[i] <= radius) break;
            x[i] = -radius;
        }
        if (i == n) break;
    }
    return out;
}

}  // namespace gtsp
