#pragma once

#include "gtsp/action.hpp"
#include "gtsp/enumeration.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

namespace gtsp {

enum class Variant { FiniteC, GenericC, Bounded, BoundedSubPlus, Subquotient };

const char* variant_name(Variant v);

struct ModuleSpec {
    Variant variant = Variant::FiniteC;
    int n = 0;
    Vec lambda;
    Vec mu;
    TableauC seed;
    int k = 0;
    IndexSet sigma;

    static ModuleSpec finite(const Vec& lambda);
    static ModuleSpec generic(const TableauC& seed);
    static ModuleSpec bounded(const Vec& mu, const Vec& lambda);
    static ModuleSpec sub_plus(const Vec& mu, const Vec& lambda, int k);
    static ModuleSpec subquotient(const Vec& mu, const Vec& lambda, const IndexSet& sigma);

    bool is_bounded_family() const { return variant != Variant::FiniteC && variant != Variant::GenericC; }
    std::string str() const;
};

// Shared D_st lookup for one lambda.
std::shared_ptr<const std::unordered_set<TableauD>> d_standard_set(const Vec& lambda);

Membership membership(const ModuleSpec& spec);
bool is_member(const TableauC& t, const ModuleSpec& spec);

// Pattern part of the subquotient conditions on the first primed column.
bool in_plus(const TableauC& t, int k);  // w'_{k1} - 1/2 in Z_{>=0}

TableauC special_upper(const Vec& mu, const Vec& lambda);
TableauC special_lower(const Vec& mu, const Vec& lambda);
// T(W_lambda)
TableauC highest_tableau(const Vec& lambda);

bool in_QC(const Vec& x);
Vec support_base(const ModuleSpec& spec);  // 2 mu + lambda + 1
bool support_contains(const ModuleSpec& spec, const Vec& gamma);

Integer degree(const Vec& lambda);

struct WeightSpace {
    std::vector<TableauC> basis;
    std::string diagnostic;
};
// Ambient Bounded(mu, lambda) weight space by class extension of a reference tableau.
WeightSpace weight_space_basis(const ModuleSpec& spec, const Vec& gamma);
// All D-standard parts whose first primed column is forced into mu + Z^n by gamma.
std::vector<TableauC> weight_fiber_scan(const ModuleSpec& spec, const Vec& gamma);

std::size_t subquotient_dim(const ModuleSpec& spec, const Vec& gamma);

struct PrimitivityReport {
    bool primitive = true;
    std::vector<std::string> nonzero;  // symbols whose action is nonzero
};
PrimitivityReport check_primitive(const TableauC& t, const ModuleSpec& spec);

struct Triple {
    Vec mu;
    Vec lambda;
    IndexSet sigma;
};
Vec tau1(const Vec& lambda);
bool iso_equivalent(const Triple& a, const Triple& b);

std::optional<Vec> psi_reachable(const Vec& lambda, const Vec& target);

struct ConeSpec {
    IndexSet plus;
    IndexSet minus;
};
bool cone_contains(const ConeSpec& c, const Vec& x);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    long uniform(long lo, long hi);  // inclusive
    Rational rational(long num_span, long den_max);

private:
    std::mt19937_64 engine_;
};

std::vector<TableauC> sample_members(const ModuleSpec& spec, std::size_t count, std::uint64_t seed, long radius);

// All support weights 2mu+lambda+1+x, x in Q_C, max |x_i| <= radius.
std::vector<Vec> support_window(const ModuleSpec& spec, long radius);

}  // namespace gtsp
