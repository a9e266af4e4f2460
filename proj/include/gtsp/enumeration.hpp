#pragma once

#include "gtsp/tableau.hpp"

#include <vector>

namespace gtsp {

enum class Series { C, D };

Series parse_series(const std::string& s);
const char* series_name(Series s);

bool is_dominant(Series s, const Vec& lambda);

// rho_C = (-1,...,-n), rho_D = (0,-1,...,-n+1)
Vec rho(Series s, int n);
// lambda + rho + 1/2
Vec top_row(Series s, const Vec& lambda);

struct Enumerated {
    bool dominant = true;
    std::vector<TableauC> c;
    std::vector<TableauD> d;
    std::size_t size() const { return c.empty() ? d.size() : c.size(); }
};

std::vector<TableauC> enumerate_C(const Vec& lambda);
std::vector<TableauD> enumerate_D(const Vec& lambda);
Enumerated enumerate_standard(Series s, const Vec& lambda);

// Product over positive roots of <lambda+rho,alpha>/<rho,alpha>.
Integer weyl_dimension(Series s, const Vec& lambda);

TableauD f_shift(const TableauD& t, int k);
// f_{a_1} o ... o f_{a_m} for A = {a_1 < ... < a_m}
TableauD f_subset(const TableauD& t, const IndexSet& a);

// T(R) ~ T(M) iff S_k(R - M) is even for k = 1..n-1.
bool weight_equivalent(const TableauD& r, const TableauD& m);
std::vector<std::vector<TableauD>> weight_classes(const Vec& lambda);

Integer t_bound(const Vec& lambda, int k);

std::vector<IndexSet> all_subsets(int m);

}  // namespace gtsp
