#include "gtsp/tableau.hpp"

namespace gtsp {

namespace {

std::size_t tri(int k) { return static_cast<std::size_t>(k) * (k - 1) / 2; }

std::size_t mix(std::size_t seed, std::size_t v)
{
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

TableauC::TableauC(int n) : n_(n), l_(tri(n + 1)), lp_(tri(n + 1))
{
    if (n < 1) throw ShapeError("tableau rank must be positive");
}

std::size_t TableauC::index(int k, int i) const
{
    if (k < 1 || k > n_ || i < 1 || i > k)
        throw ShapeError("type C index (" + std::to_string(k) + "," + std::to_string(i) + ") out of shape");
    return tri(k) + static_cast<std::size_t>(i - 1);
}

Vec TableauC::row(int k) const
{
    Vec r;
    for (int i = 1; i <= k; ++i) r.push_back(l(k, i));
    return r;
}

Vec TableauC::primed_row(int k) const
{
    Vec r;
    for (int i = 1; i <= k; ++i) r.push_back(lp(k, i));
    return r;
}

std::size_t TableauC::hash() const
{
    std::size_t h = static_cast<std::size_t>(n_);
    for (const auto& x : l_) h = mix(h, hash_value(x));
    for (const auto& x : lp_) h = mix(h, hash_value(x));
    return h;
}

std::string TableauC::str() const
{
    std::string s;
    for (int k = n_; k >= 1; --k) {
        s += "l" + std::to_string(k) + "=" + to_string(row(k)) + " l'" + std::to_string(k) + "=" + to_string(primed_row(k));
        if (k > 1) s += " ";
    }
    return s;
}

TableauD::TableauD(int n) : n_(n), u_(tri(n + 1)), up_(tri(n))
{
    if (n < 1) throw ShapeError("tableau rank must be positive");
}

std::size_t TableauD::index(int k, int i) const
{
    if (k < 1 || k > n_ || i < 1 || i > k)
        throw ShapeError("type D index (" + std::to_string(k) + "," + std::to_string(i) + ") out of shape");
    return tri(k) + static_cast<std::size_t>(i - 1);
}

std::size_t TableauD::pindex(int k, int i) const
{
    if (k < 2 || k > n_ || i < 2 || i > k)
        throw ShapeError("type D primed index (" + std::to_string(k) + "," + std::to_string(i) + ") out of shape");
    return tri(k - 1) + static_cast<std::size_t>(i - 2);
}

Vec TableauD::row(int k) const
{
    Vec r;
    for (int i = 1; i <= k; ++i) r.push_back(u(k, i));
    return r;
}

std::size_t TableauD::hash() const
{
    std::size_t h = static_cast<std::size_t>(n_) * 31;
    for (const auto& x : u_) h = mix(h, hash_value(x));
    for (const auto& x : up_) h = mix(h, hash_value(x));
    return h;
}

std::string TableauD::str() const
{
    std::string s;
    for (int k = n_; k >= 1; --k) {
        s += "u" + std::to_string(k) + "=" + to_string(row(k));
        if (k >= 2) {
            Vec p;
            for (int i = 2; i <= k; ++i) p.push_back(up(k, i));
            s += " u'" + std::to_string(k) + "=" + to_string(p);
        }
        if (k > 1) s += " ";
    }
    return s;
}

TableauC apply_shift(const TableauC& t, const Shift& s)
{
    TableauC r = t;
    if (s.primed)
        r.lp(s.row, s.col) += s.amount;
    else
        r.l(s.row, s.col) += s.amount;
    return r;
}

TableauD apply_shift(const TableauD& t, const Shift& s)
{
    TableauD r = t;
    if (s.primed)
        r.up(s.row, s.col) += s.amount;
    else
        r.u(s.row, s.col) += s.amount;
    return r;
}

bool is_C_standard(const TableauC& t)
{
    const Rational mhalf = -half();
    for (int k = 1; k <= t.n(); ++k) {
        if (!shift_ge(mhalf, t.lp(k, 1))) return false;
        for (int i = 1; i <= k; ++i) {
            if (!shift_ge(t.lp(k, i), t.l(k, i))) return false;
            if (i < k && !shift_gt(t.l(k, i), t.lp(k, i + 1))) return false;
        }
        if (k == 1) continue;
        for (int i = 1; i <= k - 1; ++i) {
            if (!shift_ge(t.lp(k, i), t.l(k - 1, i))) return false;
            if (!shift_gt(t.l(k - 1, i), t.lp(k, i + 1))) return false;
        }
    }
    return true;
}

bool is_D_standard(const TableauD& t)
{
    for (int k = 2; k <= t.n(); ++k) {
        const Rational cap = -t.up(k, 2);
        if (!shift_ge(cap, t.u(k, 1)) || !shift_ge(cap, t.u(k - 1, 1))) return false;
        for (int i = 2; i <= k; ++i) {
            if (!shift_gt(t.u(k, i - 1), t.up(k, i))) return false;
            if (!shift_ge(t.up(k, i), t.u(k, i))) return false;
            if (!shift_gt(t.u(k - 1, i - 1), t.up(k, i))) return false;
            if (i <= k - 1 && !shift_ge(t.up(k, i), t.u(k - 1, i))) return false;
        }
    }
    return true;
}

std::string C_regularity_violation(const TableauC& t)
{
    const int n = t.n();
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= k; ++i)
            for (int a = i + 1; a <= k; ++a)
                if (t.lp(k, a) == t.lp(k, i))
                    return "(i) l'_{" + std::to_string(k) + "," + std::to_string(a) + "} = l'_{" + std::to_string(k) + "," + std::to_string(i) + "}";
    for (int k = 1; k <= n - 1; ++k)
        for (int i = 1; i <= k; ++i) {
            if (2 * t.l(k, i) - 1 == 0)
                return "(iv) 2 l_{" + std::to_string(k) + "," + std::to_string(i) + "} - 1 = 0";
            for (int a = i + 1; a <= k; ++a) {
                if (t.l(k, a) == t.l(k, i))
                    return "(ii) l_{" + std::to_string(k) + "," + std::to_string(a) + "} = l_{" + std::to_string(k) + "," + std::to_string(i) + "}";
                if (t.l(k, a) + t.l(k, i) - 1 == 0)
                    return "(iii) l_{" + std::to_string(k) + "," + std::to_string(a) + "} + l_{" + std::to_string(k) + "," + std::to_string(i) + "} = 1";
            }
        }
    return {};
}

bool is_C_regular(const TableauC& t) { return C_regularity_violation(t).empty(); }

bool is_D_regular(const TableauD& t)
{
    const int n = t.n();
    for (int k = 2; k <= n; ++k)
        for (int i = 2; i <= k; ++i)
            for (int a = i + 1; a <= k; ++a)
                if (t.up(k, a) == t.up(k, i)) return false;
    for (int k = 1; k <= n - 1; ++k)
        for (int i = 1; i <= k; ++i)
            for (int a = i + 1; a <= k; ++a)
                if (t.u(k, a) == t.u(k, i) || t.u(k, a) + t.u(k, i) - 1 == 0) return false;
    return true;
}

bool is_C_generic(const TableauC& t)
{
    const int n = t.n();
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= k; ++i)
            for (int a = i + 1; a <= k; ++a)
                if (integer_distance(t.lp(k, a), t.lp(k, i))) return false;
    for (int k = 1; k <= n - 1; ++k)
        for (int i = 1; i <= k; ++i) {
            if (is_half_odd(t.l(k, i))) return false;
            for (int a = i; a <= k; ++a) {
                if (a != i && integer_distance(t.l(k, a), t.l(k, i))) return false;
                if (is_integer(t.l(k, a) + t.l(k, i))) return false;
            }
        }
    return true;
}

bool is_D_generic(const TableauD& t)
{
    const int n = t.n();
    for (int k = 2; k <= n; ++k)
        for (int i = 2; i <= k; ++i)
            for (int a = i + 1; a <= k; ++a)
                if (integer_distance(t.up(k, a), t.up(k, i))) return false;
    for (int k = 1; k <= n - 1; ++k)
        for (int i = 1; i <= k; ++i)
            for (int a = i; a <= k; ++a) {
                if (a != i && integer_distance(t.u(k, a), t.u(k, i))) return false;
                if (is_integer(t.u(k, a) + t.u(k, i))) return false;
            }
    return true;
}

std::pair<TableauD, Vec> split_CD(const TableauC& t)
{
    const int n = t.n();
    TableauD d(n);
    Vec column;
    for (int k = 1; k <= n; ++k) {
        column.push_back(t.lp(k, 1));
        for (int i = 1; i <= k; ++i) d.u(k, i) = t.l(k, i);
        for (int i = 2; i <= k; ++i) d.up(k, i) = t.lp(k, i);
    }
    return {std::move(d), std::move(column)};
}

TableauC join_CD(const TableauD& d, const Vec& column)
{
    const int n = d.n();
    if (static_cast<int>(column.size()) != n) throw ShapeError("column length differs from rank");
    TableauC t(n);
    for (int k = 1; k <= n; ++k) {
        t.lp(k, 1) = column[k - 1];
        for (int i = 1; i <= k; ++i) t.l(k, i) = d.u(k, i);
        for (int i = 2; i <= k; ++i) t.lp(k, i) = d.up(k, i);
    }
    return t;
}

RowSums row_sums(const TableauC& t)
{
    RowSums r;
    for (int k = 1; k <= t.n(); ++k) {
        Rational s = 0, sp = 0;
        for (int i = 1; i <= k; ++i) {
            s += t.l(k, i);
            sp += t.lp(k, i);
        }
        r.s.push_back(s);
        r.sprime.push_back(sp);
    }
    return r;
}

RowSums row_sums(const TableauD& t)
{
    RowSums r;
    for (int k = 1; k <= t.n(); ++k) {
        Rational s = 0, sp = 0;
        for (int i = 1; i <= k; ++i) s += t.u(k, i);
        for (int i = 2; i <= k; ++i) sp += t.up(k, i);
        r.s.push_back(s);
        r.sprime.push_back(sp);
    }
    return r;
}

Rational omega(const TableauC& t, int k)
{
    Rational w = make_rational(2 * k - 1, 2);
    for (int i = 1; i <= k; ++i) w += 2 * t.lp(k, i) - t.l(k, i);
    for (int i = 1; i <= k - 1; ++i) w -= t.l(k - 1, i);
    return w;
}

Vec weight_C(const TableauC& t)
{
    Vec w;
    for (int k = 1; k <= t.n(); ++k) w.push_back(omega(t, k));
    return w;
}

Vec weight_C_from_sums(const TableauC& t)
{
    RowSums rs = row_sums(t);
    Vec w;
    for (int k = 1; k <= t.n(); ++k) {
        Rational prev = k > 1 ? rs.s[k - 2] : Rational(0);
        w.push_back(2 * rs.sprime[k - 1] - rs.s[k - 1] - prev + k - half());
    }
    return w;
}

}  // namespace gtsp
