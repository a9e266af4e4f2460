#pragma once

#include "gtsp/algebra.hpp"
#include "gtsp/modules.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gtsp {

struct OracleError : std::logic_error {
    using std::logic_error::logic_error;
};

using Monomial = Vec;  // exponents of t_1..t_n
using OscVector = std::map<Monomial, RootTwo>;

void osc_add(OscVector& v, const Monomial& m, const RootTwo& c);

struct OscSpec {
    Vec nu;
    IndexSet sigma;  // twisted variables, subset of Int(nu)

    OscSpec(Vec nu_, IndexSet sigma_);
    int n() const { return static_cast<int>(nu.size()); }
    bool member(const Monomial& m) const;
    bool twisted(int i) const;
    // eps-weight of t^a: a_i + 1/2, or -a_i - 1/2 on twisted variables
    Vec weight(const Monomial& m) const;
    // Monomial of the given weight, whether or not it is a member.
    Monomial monomial_of_weight(const Vec& gamma) const;
};

// phi(F_{k,-k}) = t_k^2/sqrt2, phi(F_{-k,k}) = -sqrt2 d_k^2, phi(F_{k-1,-k}) = t_{k-1} t_k/sqrt2,
// composed with theta_Sigma; F_{kk} and the remaining symbols through brackets.
class OscAction {
public:
    explicit OscAction(OscSpec spec);

    const OscSpec& spec() const { return spec_; }
    OscVector generator(const Symbol& g, const Monomial& m) const;
    const OscVector& symbol(const Symbol& s, const Monomial& m);
    OscVector apply(const Symbol& s, const OscVector& v);
    OscVector apply(const Expansion& x, const OscVector& v);
    OscVector casimir(const Monomial& m);

private:
    OscVector raw(const Symbol& g, const Monomial& m) const;

    OscSpec spec_;
    std::map<std::pair<Symbol, Monomial>, OscVector> memo_;
};

struct Degree1Report {
    Vec nu;
    IndexSet sigma_osc;
    long window = 0;
    std::size_t fibers = 0;
    std::size_t nonzero_fibers = 0;
    std::vector<std::string> mismatches;
    Rational casimir_tableau;
    Rational casimir_oscillator;
    bool casimir_match = false;
    bool ok() const { return mismatches.empty() && casimir_match; }
};

// Sigma' = Int(2mu) minus Sigma; nu = 2mu + lambda + 1/2, plus 1 on each index of Sigma'.
Degree1Report compare_degree1(const Vec& mu, const Vec& lambda, const IndexSet& sigma, long window);

std::vector<Monomial> sample_monomials(const OscSpec& spec, std::size_t count, std::uint64_t seed, long radius);

}  // namespace gtsp
