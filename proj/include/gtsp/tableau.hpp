#pragma once

#include "gtsp/scalars.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace gtsp {

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Type C: rows l_{k,1..k} and l'_{k,1..k}, k = 1..n. Row n is the top row.
class TableauC {
public:
    TableauC() = default;
    explicit TableauC(int n);

    int n() const { return n_; }

    const Rational& l(int k, int i) const { return l_[index(k, i)]; }
    const Rational& lp(int k, int i) const { return lp_[index(k, i)]; }
    Rational& l(int k, int i) { return l_[index(k, i)]; }
    Rational& lp(int k, int i) { return lp_[index(k, i)]; }

    Vec row(int k) const;
    Vec primed_row(int k) const;
    Vec top() const { return row(n_); }

    bool operator==(const TableauC& o) const { return n_ == o.n_ && l_ == o.l_ && lp_ == o.lp_; }
    bool operator!=(const TableauC& o) const { return !(*this == o); }

    std::size_t hash() const;
    std::string str() const;

private:
    std::size_t index(int k, int i) const;

    int n_ = 0;
    Vec l_;
    Vec lp_;
};

// Type D: rows u_{k,1..k}, k = 1..n, and primed rows u'_{k,2..k}, k = 2..n.
class TableauD {
public:
    TableauD() = default;
    explicit TableauD(int n);

    int n() const { return n_; }

    const Rational& u(int k, int i) const { return u_[index(k, i)]; }
    const Rational& up(int k, int i) const { return up_[pindex(k, i)]; }
    Rational& u(int k, int i) { return u_[index(k, i)]; }
    Rational& up(int k, int i) { return up_[pindex(k, i)]; }

    Vec row(int k) const;
    Vec top() const { return row(n_); }

    bool operator==(const TableauD& o) const { return n_ == o.n_ && u_ == o.u_ && up_ == o.up_; }
    bool operator!=(const TableauD& o) const { return !(*this == o); }

    std::size_t hash() const;
    std::string str() const;

private:
    std::size_t index(int k, int i) const;
    std::size_t pindex(int k, int i) const;

    int n_ = 0;
    Vec u_;
    Vec up_;
};

struct TableauHash {
    std::size_t operator()(const TableauC& t) const { return t.hash(); }
    std::size_t operator()(const TableauD& t) const { return t.hash(); }
};

struct Shift {
    int row;
    int col;
    bool primed;
    long amount = 1;
};

TableauC apply_shift(const TableauC& t, const Shift& s);
TableauD apply_shift(const TableauD& t, const Shift& s);

bool is_C_standard(const TableauC& t);
bool is_D_standard(const TableauD& t);

// Names the first violated condition, empty when regular.
std::string C_regularity_violation(const TableauC& t);
bool is_C_regular(const TableauC& t);
bool is_D_regular(const TableauD& t);
bool is_C_generic(const TableauC& t);
bool is_D_generic(const TableauD& t);

std::pair<TableauD, Vec> split_CD(const TableauC& t);
TableauC join_CD(const TableauD& d, const Vec& column);

struct RowSums {
    Vec s;       // S_k(l), k = 1..n stored at k-1
    Vec sprime;  // S_k(l'); for type D the sum runs over i = 2..k
};
RowSums row_sums(const TableauC& t);
RowSums row_sums(const TableauD& t);

Rational omega(const TableauC& t, int k);
Vec weight_C(const TableauC& t);
// 2 S(l') - S(l) - S(l_{-1}) - rho_C - 1/2, computed from row sums
Vec weight_C_from_sums(const TableauC& t);

}  // namespace gtsp

template <>
struct std::hash<gtsp::TableauC> {
    std::size_t operator()(const gtsp::TableauC& t) const { return t.hash(); }
};
template <>
struct std::hash<gtsp::TableauD> {
    std::size_t operator()(const gtsp::TableauD& t) const { return t.hash(); }
};
