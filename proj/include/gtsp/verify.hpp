#pragma once

#include "gtsp/modules.hpp"
#include "gtsp/oscillator.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace gtsp {

struct Report {
    Report() = default;
    Report(std::string check_, std::string spec_, std::uint64_t seed_ = 0)
        : check(std::move(check_)), spec(std::move(spec_)), seed(seed_) {}

    std::string check;
    std::string spec;
    std::uint64_t seed = 0;
    std::size_t checks = 0;
    std::size_t count = 0;               // failures, all of them
    std::vector<std::string> failures;   // first witnesses only
    std::vector<std::string> skipped;
    nlohmann::json extra = nlohmann::json::object();

    bool ok() const { return count == 0; }
    void fail(std::string witness);
};

// Polynomial of degree <= 2 in n variables; coefficients ordered 1, x_i, x_i x_j (i <= j).
struct QuadPoly {
    int n = 0;
    std::vector<Rational> c;
    Rational operator()(const Vec& x) const;
    std::string str() const;
};

// Casimir scalar on L_C(lambda), computed on one basis tableau.
Rational finite_casimir(const Vec& lambda);
// Exact fit of the Casimir eigenvalue as a function of lambda, from finite modules; cached per n.
const QuadPoly& casimir_polynomial(int n);
// Argument of the eigenvalue polynomial for a spec: top row minus rho_C minus 1/2.
Vec casimir_argument(const ModuleSpec& spec);

std::vector<TableauC> verification_samples(const ModuleSpec& spec, std::size_t samples, std::uint64_t seed, long radius);

// Pairs checked by verify_representation: all canonical pairs for n <= 3,
// generator x canonical for n >= 4.
std::vector<std::pair<Symbol, Symbol>> relation_pairs(int n);

Report verify_representation(const ModuleSpec& spec, std::size_t samples, std::uint64_t seed, long radius = 2);
Report verify_casimir(const ModuleSpec& spec, std::size_t samples, std::uint64_t seed, long radius = 2);
Report verify_multiplicity(const ModuleSpec& spec, long radius);
// Generator actions on V_k^+ members under the ambient Bounded action.
Report verify_submodule_closure(const ModuleSpec& spec, std::size_t samples, std::uint64_t seed, long radius = 2);

Rational lagrange_sum(const Vec& c);
bool verify_lagrange(int k, const Vec& c);

struct HypothesisError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Empty string when the lemma hypotheses hold at row k.
std::string lemma_hypothesis_violation(const TableauC& t, int k);
// Evaluates items (i)-(v) and the summation identity without checking hypotheses.
Report lemma_items(const TableauC& t, int k);
Report verify_vanishing_lemmas(const TableauC& t, int k);
// Every k >= 2 at which the hypotheses hold; throws if there is none.
Report verify_vanishing_lemmas(const TableauC& t);
TableauC synthetic_lemma_tableau(int k, Rng& rng);

Report verify_homomorphism(const OscSpec& spec, std::size_t samples, std::uint64_t seed, long radius = 3);
Report verify_oscillator(const Vec& mu, const Vec& lambda, const IndexSet& sigma, long window);

}  // namespace gtsp
