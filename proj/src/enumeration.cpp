#include "gtsp/enumeration.hpp"

#include <map>
#include <stdexcept>

namespace gtsp {

Series parse_series(const std::string& s)
{
    if (s == "C" || s == "c") return Series::C;
    if (s == "D" || s == "d") return Series::D;
    throw ParseError("series must be C or D, got '" + s + "'");
}

const char* series_name(Series s) { return s == Series::C ? "C" : "D"; }

bool is_dominant(Series s, const Vec& lambda)
{
    const int n = static_cast<int>(lambda.size());
    if (n < 1) return false;
    for (int i = 0; i + 1 < n; ++i)
        if (!shift_ge(lambda[i], lambda[i + 1])) return false;
    if (s == Series::C) return shift_ge(0, lambda[0]);
    if (n == 1) return true;
    return shift_ge(0, lambda[0] + lambda[1]);
}

Vec rho(Series s, int n)
{
    Vec r;
    for (int i = 1; i <= n; ++i) r.push_back(s == Series::C ? -i : -(i - 1));
    return r;
}

Vec top_row(Series s, const Vec& lambda)
{
    Vec r = rho(s, static_cast<int>(lambda.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += lambda[i] + half();
    return r;
}

namespace {

// Integer-step range lo, lo+1, ..., hi (empty if hi < lo or not comparable).
std::vector<Rational> steps(const Rational& lo, const Rational& hi)
{
    std::vector<Rational> out;
    auto d = integer_distance(hi, lo);
    if (!d || *d < 0) return out;
    for (Integer j = 0; j <= *d; ++j) out.push_back(lo + j);
    return out;
}

// Cartesian product over ranges, calling f with the chosen values.
template <class F>
void product(const std::vector<std::vector<Rational>>& ranges, F&& f)
{
    Vec pick(ranges.size());
    std::vector<std::size_t> at(ranges.size(), 0);
    for (const auto& r : ranges)
        if (r.empty()) return;
    while (true) {
        for (std::size_t i = 0; i < ranges.size(); ++i) pick[i] = ranges[i][at[i]];
        f(pick);
        std::size_t i = 0;
        for (; i < ranges.size(); ++i) {
            if (++at[i] < ranges[i].size()) break;
            at[i] = 0;
        }
        if (i == ranges.size()) return;
    }
}

void rec_C(TableauC& t, int k, std::vector<TableauC>& out)
{
    std::vector<std::vector<Rational>> ranges;
    for (int i = 1; i <= k; ++i) {
        Rational hi = i == 1 ? Rational(-half()) : Rational(t.l(k, i - 1) - 1);
        ranges.push_back(steps(t.l(k, i), hi));
    }
    product(ranges, [&](const Vec& lpk) {
        for (int i = 1; i <= k; ++i) t.lp(k, i) = lpk[i - 1];
        if (k == 1) {
            out.push_back(t);
            return;
        }
        std::vector<std::vector<Rational>> rr;
        for (int i = 1; i <= k - 1; ++i) rr.push_back(steps(lpk[i] + 1, lpk[i - 1]));
        product(rr, [&](const Vec& row) {
            for (int i = 1; i <= k - 1; ++i) t.l(k - 1, i) = row[i - 1];
            rec_C(t, k - 1, out);
        });
    });
}

void rec_D(TableauD& t, int k, std::vector<TableauD>& out)
{
    if (k == 1) {
        out.push_back(t);
        return;
    }
    std::vector<std::vector<Rational>> ranges;
    for (int i = 2; i <= k; ++i) {
        Rational hi = t.u(k, i - 1) - 1;
        if (i == 2 && -t.u(k, 1) < hi) hi = -t.u(k, 1);
        ranges.push_back(steps(t.u(k, i), hi));
    }
    product(ranges, [&](const Vec& upk) {
        for (int i = 2; i <= k; ++i) t.up(k, i) = upk[i - 2];
        std::vector<std::vector<Rational>> rr;
        for (int i = 1; i <= k - 1; ++i) {
            Rational lo = upk[i - 1] + 1;
            Rational hi = i == 1 ? Rational(-upk[0]) : upk[i - 2];
            rr.push_back(steps(lo, hi));
        }
        product(rr, [&](const Vec& row) {
            for (int i = 1; i <= k - 1; ++i) t.u(k - 1, i) = row[i - 1];
            rec_D(t, k - 1, out);
        });
    });
}

}  // namespace

std::vector<TableauC> enumerate_C(const Vec& lambda)
{
    std::vector<TableauC> out;
    if (!is_dominant(Series::C, lambda)) return out;
    const int n = static_cast<int>(lambda.size());
    TableauC t(n);
    Vec top = top_row(Series::C, lambda);
    for (int i = 1; i <= n; ++i) t.l(n, i) = top[i - 1];
    rec_C(t, n, out);
    return out;
}

std::vector<TableauD> enumerate_D(const Vec& lambda)
{
    std::vector<TableauD> out;
    if (!is_dominant(Series::D, lambda)) return out;
    const int n = static_cast<int>(lambda.size());
    TableauD t(n);
    Vec top = top_row(Series::D, lambda);
    for (int i = 1; i <= n; ++i) t.u(n, i) = top[i - 1];
    rec_D(t, n, out);
    return out;
}

Enumerated enumerate_standard(Series s, const Vec& lambda)
{
    Enumerated e;
    e.dominant = is_dominant(s, lambda);
    if (s == Series::C)
        e.c = enumerate_C(lambda);
    else
        e.d = enumerate_D(lambda);
    return e;
}

Integer weyl_dimension(Series s, const Vec& lambda)
{
    if (!is_dominant(s, lambda)) throw std::invalid_argument("weyl_dimension: weight is not dominant");
    const int n = static_cast<int>(lambda.size());
    Vec r = rho(s, n);
    Vec lr = r;
    for (int i = 0; i < n; ++i) lr[i] += lambda[i];
    Rational num = 1, den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= (lr[i] - lr[j]) * (-lr[i] - lr[j]);
            den *= (r[i] - r[j]) * (-r[i] - r[j]);
        }
    if (s == Series::C)
        for (int i = 0; i < n; ++i) {
            num *= -2 * lr[i];
            den *= -2 * r[i];
        }
    Rational q = num / den;
    if (!is_integer(q)) throw std::logic_error("weyl_dimension: non-integral quotient");
    return q.get_num();
}

TableauD f_shift(const TableauD& t, int k)
{
    if (k < 1 || k >= t.n()) throw ShapeError("f_shift index out of range");
    if (!is_D_standard(t)) throw std::invalid_argument("f_shift: input is not D-standard");
    bool plus = t.u(k, 1) != -t.up(k + 1, 2);
    if (k >= 2 && t.u(k, 1) == -t.up(k, 2)) plus = false;
    TableauD r = t;
    r.u(k, 1) += plus ? 1 : -1;
    return r;
}

TableauD f_subset(const TableauD& t, const IndexSet& a)
{
    TableauD r = t;
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = f_shift(r, *it);
    return r;
}

bool weight_equivalent(const TableauD& r, const TableauD& m)
{
    RowSums a = row_sums(r), b = row_sums(m);
    for (int k = 1; k <= r.n() - 1; ++k) {
        auto d = integer_distance(a.s[k - 1], b.s[k - 1]);
        if (!d || mpz_odd_p(d->get_mpz_t())) return false;
    }
    return true;
}

std::vector<std::vector<TableauD>> weight_classes(const Vec& lambda)
{
    std::vector<std::vector<TableauD>> classes;
    for (const auto& t : enumerate_D(lambda)) {
        bool placed = false;
        for (auto& c : classes)
            if (weight_equivalent(c.front(), t)) {
                c.push_back(t);
                placed = true;
                break;
            }
        if (!placed) classes.push_back({t});
    }
    return classes;
}

Integer t_bound(const Vec& lambda, int k)
{
    const int n = static_cast<int>(lambda.size());
    if (k < 1 || k > n - 1) throw std::invalid_argument("t_bound: k out of range");
    std::vector<Rational> f;
    for (const auto& t : enumerate_D(lambda)) {
        RowSums rs = row_sums(t);
        f.push_back(rs.sprime[k - 1] - rs.s[k] / 2 - rs.s[k - 1] / 2);
    }
    if (f.empty()) throw std::invalid_argument("t_bound: empty standard set");
    Rational best = 0;
    bool first = true;
    for (const auto& r : f)
        for (const auto& w : f) {
            Rational v = floor_of(r - w);
            if (first || v > best) best = v;
            first = false;
        }
    return best.get_num();
}

std::vector<IndexSet> all_subsets(int m)
{
    std::vector<IndexSet> out;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        IndexSet s;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) s.push_back(i + 1);
        out.push_back(s);
    }
    return out;
}

}  // namespace gtsp
