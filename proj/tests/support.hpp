#pragma once

#include "gtsp/io.hpp"

#include <doctest.h>

#include <string>
#include <vector>

namespace gtsp::test {

inline Rational q(const char* s) { return parse_rational(s); }
inline Vec v(const char* s) { return parse_vector(s); }

// rows and primed rows top row first, e.g. tc({"-1/2,-3/2", "-1/2"}, {"-1/2,-3/2", "-1/2"})
inline TableauC tc(const std::vector<std::string>& rows, const std::vector<std::string>& primed)
{
    const int n = static_cast<int>(rows.size());
    TableauC t(n);
    for (int k = n; k >= 1; --k) {
        Vec r = parse_vector(rows[n - k]), p = parse_vector(primed[n - k]);
        for (int i = 1; i <= k; ++i) {
            t.l(k, i) = r[i - 1];
            t.lp(k, i) = p[i - 1];
        }
    }
    return t;
}

// rows top first; primed rows top first, starting at column 2
inline TableauD td(const std::vector<std::string>& rows, const std::vector<std::string>& primed)
{
    const int n = static_cast<int>(rows.size());
    TableauD t(n);
    for (int k = n; k >= 1; --k) {
        Vec r = parse_vector(rows[n - k]);
        for (int i = 1; i <= k; ++i) t.u(k, i) = r[i - 1];
        if (k < 2) continue;
        Vec p = parse_vector(primed[n - k]);
        for (int i = 2; i <= k; ++i) t.up(k, i) = p[i - 2];
    }
    return t;
}

inline TableauC trivial2() { return tc({"-1/2,-3/2", "-1/2"}, {"-1/2,-3/2", "-1/2"}); }

}  // namespace gtsp::test
