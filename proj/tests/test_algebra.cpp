#include "support.hpp"

using namespace gtsp;
using namespace gtsp::test;

namespace {

Matrix from_expansion(int n, const Expansion& x)
{
    Matrix m(2 * n);
    for (const auto& [s, c] : x) m = m + c * realize(n, s);
    return m;
}

}  // namespace

TEST_CASE("symbols")
{
    Symbol s = parse_symbol("F(1,-2)");
    CHECK(s == Symbol{1, -2});
    CHECK(to_string(s) == "F(1,-2)");
    CHECK_THROWS(parse_symbol("F(1;2)"));
    CHECK_FALSE(valid_symbol(2, {0, 1}));
    CHECK_FALSE(valid_symbol(2, {3, 1}));
}

TEST_CASE("realization lies in sp(2n)")
{
    for (int n = 1; n <= 3; ++n) {
        auto basis = canonical_basis(n);
        CHECK(basis.size() == static_cast<std::size_t>(n * (2 * n + 1)));
        for (const auto& s : basis) {
            Expansion e = decompose(n, realize(n, s));
            CHECK(e == Expansion{{s, 1}});
        }
    }
    CHECK(realize(1, {1, -1}).at(0, 1) == 2);
}

TEST_CASE("structure constant examples")
{
    CHECK(structure_constants(1, {1, -1}, {-1, 1}) == Expansion{{{1, 1}, 4}});
    CHECK(structure_constants(2, {1, 1}, {2, 2}).empty());
    CHECK(structure_constants(2, {1, 1}, {1, -1}) == Expansion{{{1, -1}, 2}});
}

TEST_CASE("structure constants reproduce matrix brackets")
{
    const int n = 3;
    auto basis = canonical_basis(n);
    for (const auto& a : basis)
        for (const auto& b : basis)
            CHECK(from_expansion(n, structure_constants(n, a, b)) == bracket(realize(n, a), realize(n, b)));
}

TEST_CASE("canonical form")
{
    for (int n = 2; n <= 3; ++n)
        for (int i = -n; i <= n; ++i)
            for (int j = -n; j <= n; ++j) {
                if (!i || !j) continue;
                Symbol s{i, j};
                auto [c, k] = canonical_form(s);
                CHECK(is_canonical(n, c));
                CHECK(k * realize(n, c) == realize(n, s));
            }
}

TEST_CASE("bracket words evaluate to the symbols")
{
    for (int n = 1; n <= 4; ++n) {
        const WordTable& w = word_table(n);
        for (const auto& s : canonical_basis(n)) CHECK(w.evaluate(s) == realize(n, s));
        for (const auto& g : generator_symbols(n)) CHECK(w.direct(g));
    }
    CHECK(word_table(2).evaluate({1, -2}) == realize(2, {1, -2}));
}

TEST_CASE("Casimir is central")
{
    // sum coeff X_a X_b commutes with every realized matrix
    for (int n = 1; n <= 3; ++n) {
        Matrix om(2 * n);
        for (const auto& t : casimir_terms(n)) om = om + t.coeff * (realize(n, t.a) * realize(n, t.b));
        for (const auto& s : canonical_basis(n)) CHECK(bracket(om, realize(n, s)).is_zero());
    }
}

TEST_CASE("root vectors")
{
    CHECK(root_of(2, {1, -2}) == v("1,1"));
    CHECK(root_of(2, {-1, 1}) == v("-2,0"));
    CHECK(root_of(2, {2, 2}) == v("0,0"));
}
