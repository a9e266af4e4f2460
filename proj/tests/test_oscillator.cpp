#include "support.hpp"

using namespace gtsp;
using namespace gtsp::test;

namespace {

OscVector single(const Monomial& m, const RootTwo& c)
{
    OscVector v;
    osc_add(v, m, c);
    return v;
}

}  // namespace

TEST_CASE("monomial membership")
{
    OscSpec s(v("0,1/3"), {});
    CHECK(s.member(v("0,1/3")));
    CHECK(s.member(v("2,-5/3")));
    CHECK_FALSE(s.member(v("1,1/3")));
    CHECK_FALSE(s.member(v("-2,1/3")));
    CHECK_FALSE(s.member(v("0,1/2")));
    CHECK_THROWS(OscSpec(v("0,1/3"), {2}));
}

TEST_CASE("generator images")
{
    OscAction a(OscSpec(v("0,0"), {}));
    const Monomial one = v("0,0");
    CHECK(a.generator({1, -1}, one) == single(v("2,0"), RootTwo(0, half())));
    CHECK(a.generator({-1, 1}, one).empty());
    // -sqrt2 d^2 t^2 = -2 sqrt2
    CHECK(a.generator({-1, 1}, v("2,0")) == single(one, RootTwo(0, -2)));
    CHECK(a.generator({1, -2}, v("1,1")) == single(v("2,2"), RootTwo(0, half())));
}

TEST_CASE("Cartan acts by t d + 1/2, twisted by -t d - 1/2")
{
    OscAction a(OscSpec(v("1/3,1"), {2}));
    Monomial m = v("4/3,2");
    REQUIRE(a.spec().member(m));
    CHECK_FALSE(a.spec().member(v("4/3,3")));
    CHECK(a.generator({1, 1}, m) == single(m, RootTwo(q("4/3") + half())));
    CHECK(a.generator({2, 2}, m) == single(m, RootTwo(q("-5/2"))));
    CHECK(a.spec().weight(m) == v("11/6,-5/2"));
    CHECK(a.spec().monomial_of_weight(v("11/6,-5/2")) == m);
}

TEST_CASE("homomorphism, untwisted and twisted")
{
    for (const auto& s : {OscSpec(v("1/2,1/3"), {}), OscSpec(v("0,1"), {}), OscSpec(v("0,1"), {1}),
                          OscSpec(v("0,1"), {1, 2}), OscSpec(v("1/4,0,2/3"), {2})}) {
        Report r = verify_homomorphism(s, 8, 3);
        CHECK(r.ok());
        CHECK(r.checks > 0);
    }
}

TEST_CASE("degree-1 comparison")
{
    for (const auto& sigma : {IndexSet{}, IndexSet{1}, IndexSet{1, 2}}) {
        Degree1Report d = compare_degree1(v("1/2,1/2"), v("-1/2,-1/2"), sigma, 4);
        CHECK(d.mismatches.empty());
        CHECK(d.casimir_match);
        CHECK(d.nonzero_fibers > 0);
    }
    // Sigma = Int(2mu): no twist, the untwisted cone C_{[n],0}
    Degree1Report full = compare_degree1(v("1/2,1/2"), v("-1/2,-1/2"), {1, 2}, 3);
    CHECK(full.sigma_osc.empty());
    Degree1Report none = compare_degree1(v("1/2,1/2"), v("-1/2,-1/2"), {}, 3);
    CHECK(none.sigma_osc == IndexSet{1, 2});
    CHECK(full.nonzero_fibers > none.nonzero_fibers);
    // non-half-integral mu: no twist possible
    Degree1Report g = compare_degree1(v("1/3,2/5"), v("-1/2,-1/2"), {}, 3);
    CHECK(g.ok());
    CHECK_THROWS(compare_degree1(v("1/3,2/5"), v("-1/2,-3/2"), {}, 3));
}
