#pragma once

#include "gtsp/scalars.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gtsp {

// F_{ij}, i,j in {+-1..+-n}
struct Symbol {
    int i = 0;
    int j = 0;
    auto operator<=>(const Symbol&) const = default;
};

std::string to_string(const Symbol& s);
Symbol parse_symbol(const std::string& text);  // "F(1,-2)"

// Dense 2n x 2n rational matrix; index order 1..n, -1..-n.
struct Matrix {
    int dim = 0;
    std::vector<Rational> a;

    explicit Matrix(int d = 0) : dim(d), a(static_cast<std::size_t>(d) * d) {}
    Rational& at(int r, int c) { return a[static_cast<std::size_t>(r) * dim + c]; }
    const Rational& at(int r, int c) const { return a[static_cast<std::size_t>(r) * dim + c]; }
    bool is_zero() const;
    bool operator==(const Matrix& o) const { return a == o.a; }
};

Matrix operator*(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
Matrix operator+(const Matrix& x, const Matrix& y);
Matrix operator*(const Rational& c, const Matrix& x);
Matrix bracket(const Matrix& x, const Matrix& y);
Rational trace(const Matrix& x);

// F_{ij} = E_{ij} - sgn(i) sgn(j) E_{-j,-i}
Matrix realize(int n, const Symbol& s);

using Expansion = std::map<Symbol, Rational>;

// F_{ij} for i,j > 0; F_{i,-j} and F_{-i,j} for i <= j.
std::vector<Symbol> canonical_basis(int n);
bool is_canonical(int n, const Symbol& s);
// Rewrites F_{ab} through F_{ab} = -sgn(a)sgn(b) F_{-b,-a}.
std::pair<Symbol, Rational> canonical_form(const Symbol& s);
bool valid_symbol(int n, const Symbol& s);

Expansion decompose(int n, const Matrix& m);
Expansion structure_constants(int n, const Symbol& a, const Symbol& b);

// Generators acting directly on tableaux: F_{kk}, F_{k,-k}, F_{-k,k}, F_{k-1,-k}.
std::vector<Symbol> generator_symbols(int n);
bool is_generator(int n, const Symbol& s);

// X_s = coeff * [g, t] with g a generator and t an earlier entry.
struct Word {
    Symbol g;
    Symbol t;
    Rational coeff;
};

class WordTable {
public:
    explicit WordTable(int n);
    int n() const { return n_; }
    bool direct(const Symbol& s) const;
    const Word& word(const Symbol& s) const;
    // Evaluates the bracket word for s as a matrix.
    Matrix evaluate(const Symbol& s) const;

private:
    int n_;
    std::map<Symbol, Word> words_;
};

const WordTable& word_table(int n);

// Omega = sum coeff * X_a X_b over the trace-form dual basis.
struct QuadraticTerm {
    Symbol a;
    Symbol b;
    Rational coeff;
};
const std::vector<QuadraticTerm>& casimir_terms(int n);

// Weight (in eps coordinates) of a root vector F_{ij}: eps_i - eps_j with eps_{-k} = -eps_k.
Vec root_of(int n, const Symbol& s);

}  // namespace gtsp
