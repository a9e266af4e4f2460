#pragma once

#include "gtsp/algebra.hpp"
#include "gtsp/tableau.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gtsp {

struct RegularityError : std::domain_error {
    using std::domain_error::domain_error;
};

bool tableau_less(const TableauC& a, const TableauC& b);

class TableauVector {
public:
    TableauVector() = default;
    TableauVector(const TableauC& t, const Rational& c = 1) { add(t, c); }

    void add(const TableauC& t, const Rational& c);
    void add(const TableauVector& v, const Rational& c = 1);
    TableauVector& operator*=(const Rational& c);

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const TableauC& t) const;
    const std::unordered_map<TableauC, Rational>& terms() const { return terms_; }
    std::vector<std::pair<TableauC, Rational>> sorted() const;

    bool operator==(const TableauVector& o) const { return terms_ == o.terms_; }
    bool operator!=(const TableauVector& o) const { return !(*this == o); }

    friend TableauVector operator-(TableauVector a, const TableauVector& b)
    {
        a.add(b, -1);
        return a;
    }
    friend TableauVector operator+(TableauVector a, const TableauVector& b)
    {
        a.add(b, 1);
        return a;
    }

private:
    std::unordered_map<TableauC, Rational> terms_;
};

// Coefficient functions; throw RegularityError on a vanishing denominator.
Rational coeff_A(const TableauC& t, int k, int i);
Rational coeff_B(const TableauC& t, int k, int i);
Rational coeff_C(const TableauC& t, int k, int i);
Rational coeff_D(const TableauC& t, int k, int i, int j, int m);

enum class CoeffKind { A, B, C, D };
Rational gt_coefficient(CoeffKind kind, const TableauC& t, const std::vector<int>& idx);
// Empty when a denominator vanishes.
std::optional<Rational> try_coefficient(CoeffKind kind, const TableauC& t, const std::vector<int>& idx);

using Membership = std::function<bool(const TableauC&)>;

struct DroppedTerm {
    Symbol generator;
    TableauC source;
    TableauC target;
    Rational coeff;
};
using DropObserver = std::function<void(const DroppedTerm&)>;

// Unprojected terms of a generator formula at t.
std::vector<std::pair<TableauC, Rational>> raw_generator_terms(const Symbol& g, const TableauC& t);

class GTAction {
public:
    GTAction(int n, Membership member);

    int n() const { return n_; }
    const Membership& member() const { return member_; }
    void set_drop_observer(DropObserver obs) { observer_ = std::move(obs); }

    // One of F_{kk}, F_{k,-k}, F_{-k,k}, F_{k-1,-k}; terms outside the basis are dropped.
    TableauVector generator(const Symbol& g, const TableauC& t) const;

    // Any symbol, through the bracket words; memoized per (symbol, tableau).
    const TableauVector& symbol(const Symbol& s, const TableauC& t);
    TableauVector apply(const Symbol& s, const TableauVector& v);
    TableauVector apply(const Expansion& x, const TableauVector& v);
    // word[0] acts last
    TableauVector apply_word(const std::vector<Symbol>& word, const TableauVector& v);

    // 2F_{k,k-1} = [F_{k-1,-k}, F_{-(k-1),k-1}],  2F_{k-1,k} = [F_{k-1,-k}, F_{-k,k}]
    TableauVector derived(const Symbol& s, const TableauVector& v);

    TableauVector casimir(const TableauC& t);

    void clear_cache() { memo_.clear(); }

private:
    struct Key {
        Symbol s;
        TableauC t;
        bool operator==(const Key& o) const { return s == o.s && t == o.t; }
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const;
    };

    int n_;
    Membership member_;
    DropObserver observer_;
    std::unordered_map<Key, TableauVector, KeyHash> memo_;
};

}  // namespace gtsp
