#include "gtsp/scalars.hpp"

#include <cctype>
#include <functional>

namespace gtsp {

Rational make_rational(long num, long den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational half() { return make_rational(1, 2); }

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = trim(text);
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed rational: '" + std::string(text) + "'");
    Integer p(std::string(num), 10);
    Integer q(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    Rational r(neg ? Integer(-p) : p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Vec parse_vector(std::string_view text)
{
    Vec out;
    std::string_view s = trim(text);
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        auto comma = s.find(',', start);
        out.push_back(parse_rational(s.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string to_string(const Vec& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_half_odd(const Rational& q) { return q.get_den() == 2; }

std::optional<Integer> integer_distance(const Rational& a, const Rational& b)
{
    Rational d = a - b;
    if (d.get_den() != 1) return std::nullopt;
    return d.get_num();
}

bool shift_ge(const Rational& a, const Rational& b)
{
    auto d = integer_distance(a, b);
    return d && *d >= 0;
}

bool shift_gt(const Rational& a, const Rational& b)
{
    auto d = integer_distance(a, b);
    return d && *d > 0;
}

IntHf classify(const Vec& v)
{
    IntHf r;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (is_integer(v[i])) r.int_set.push_back(static_cast<int>(i) + 1);
        if (is_integer(v[i] + half())) r.hf_set.push_back(static_cast<int>(i) + 1);
    }
    return r;
}

IndexSet int_set(const Vec& v) { return classify(v).int_set; }

Rational floor_of(const Rational& q)
{
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(f);
}

std::size_t hash_value(const Rational& q)
{
    std::size_t h = mpz_fdiv_ui(q.get_num_mpz_t(), 2147483647UL);
    if (sgn(q) < 0) h = ~h;
    std::size_t d = mpz_fdiv_ui(q.get_den_mpz_t(), 2147483629UL);
    return h * 1000003UL ^ d;
}

RootTwo& RootTwo::operator+=(const RootTwo& o)
{
    a += o.a;
    b += o.b;
    return *this;
}

RootTwo& RootTwo::operator-=(const RootTwo& o)
{
    a -= o.a;
    b -= o.b;
    return *this;
}

RootTwo& RootTwo::operator*=(const RootTwo& o)
{
    Rational na = a * o.a + 2 * b * o.b;
    Rational nb = a * o.b + b * o.a;
    a = std::move(na);
    b = std::move(nb);
    return *this;
}

RootTwo& RootTwo::operator/=(const RootTwo& o)
{
    // multiply by the conjugate
    Rational norm = o.a * o.a - 2 * o.b * o.b;
    if (norm == 0) throw std::domain_error("division by zero in Q(sqrt2)");
    *this *= RootTwo(o.a / norm, -o.b / norm);
    return *this;
}

std::string to_string(const RootTwo& x)
{
    if (x.b == 0) return to_string(x.a);
    std::string s = x.a == 0 ? "" : to_string(x.a) + (sgn(x.b) > 0 ? "+" : "");
    return s + to_string(x.b) + "*sqrt2";
}

}  // namespace gtsp
