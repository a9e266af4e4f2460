#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gtsp {

using Rational = mpq_class;
using Integer = mpz_class;
using Vec = std::vector<Rational>;
using IndexSet = std::vector<int>;  // sorted, 1-based

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational make_rational(long num, long den = 1);
Rational half();

// "p/q", "-3/2", "7". Decimals and exponents are rejected.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// Comma separated list of rationals, e.g. "-1/2,-3/2".
Vec parse_vector(std::string_view text);
std::string to_string(const Vec& v);

bool is_integer(const Rational& q);
bool is_half_odd(const Rational& q);  // q in 1/2 + Z

// a - b when it is an integer.
std::optional<Integer> integer_distance(const Rational& a, const Rational& b);

// Integer-shift order: a >= b iff a-b in Z_{>=0}; a > b iff a-b in Z_{>0}.
bool shift_ge(const Rational& a, const Rational& b);
bool shift_gt(const Rational& a, const Rational& b);

struct IntHf {
    IndexSet int_set;
    IndexSet hf_set;
};
IntHf classify(const Vec& v);
IndexSet int_set(const Vec& v);

Rational floor_of(const Rational& q);

std::size_t hash_value(const Rational& q);

// a + b*sqrt(2)
struct RootTwo {
    Rational a;
    Rational b;

    RootTwo() = default;
    RootTwo(Rational a_, Rational b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}

    static RootTwo sqrt2() { return {0, 1}; }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    RootTwo operator-() const { return {-a, -b}; }
    RootTwo& operator+=(const RootTwo& o);
    RootTwo& operator-=(const RootTwo& o);
    RootTwo& operator*=(const RootTwo& o);
    RootTwo& operator/=(const RootTwo& o);

    friend RootTwo operator+(RootTwo x, const RootTwo& y) { return x += y; }
    friend RootTwo operator-(RootTwo x, const RootTwo& y) { return x -= y; }
    friend RootTwo operator*(RootTwo x, const RootTwo& y) { return x *= y; }
    friend RootTwo operator/(RootTwo x, const RootTwo& y) { return x /= y; }
    friend bool operator==(const RootTwo& x, const RootTwo& y) { return x.a == y.a && x.b == y.b; }
};

std::string to_string(const RootTwo& x);

}  // namespace gtsp
