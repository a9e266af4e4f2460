#include "gtsp/algebra.hpp"

#include <cstdlib>
#include <memory>
#include <mutex>
#include <regex>
#include <stdexcept>

namespace gtsp {

std::string to_string(const Symbol& s) { return "F(" + std::to_string(s.i) + "," + std::to_string(s.j) + ")"; }

Symbol parse_symbol(const std::string& text)
{
    static const std::regex re(R"(\s*F\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw ParseError("malformed generator symbol: '" + text + "'");
    Symbol s{std::stoi(m[1]), std::stoi(m[2])};
    if (s.i == 0 || s.j == 0) throw ParseError("generator indices must be nonzero: '" + text + "'");
    return s;
}

bool Matrix::is_zero() const
{
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

Matrix operator*(const Matrix& x, const Matrix& y)
{
    Matrix r(x.dim);
    for (int i = 0; i < x.dim; ++i)
        for (int k = 0; k < x.dim; ++k) {
            if (x.at(i, k) == 0) continue;
            for (int j = 0; j < x.dim; ++j)
                if (y.at(k, j) != 0) r.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return r;
}

Matrix operator-(const Matrix& x, const Matrix& y)
{
    Matrix r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
}

Matrix operator+(const Matrix& x, const Matrix& y)
{
    Matrix r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
}

Matrix operator*(const Rational& c, const Matrix& x)
{
    Matrix r = x;
    for (auto& v : r.a) v *= c;
    return r;
}

Matrix bracket(const Matrix& x, const Matrix& y) { return x * y - y * x; }

Rational trace(const Matrix& x)
{
    Rational t = 0;
    for (int i = 0; i < x.dim; ++i) t += x.at(i, i);
    return t;
}

namespace {

int sgn(int v) { return v > 0 ? 1 : -1; }

int slot(int n, int i) { return i > 0 ? i - 1 : n + (-i) - 1; }

}  // namespace

bool valid_symbol(int n, const Symbol& s)
{
    return s.i != 0 && s.j != 0 && std::abs(s.i) <= n && std::abs(s.j) <= n;
}

Matrix realize(int n, const Symbol& s)
{
    if (!valid_symbol(n, s)) throw std::invalid_argument("symbol " + to_string(s) + " out of range");
    Matrix m(2 * n);
    m.at(slot(n, s.i), slot(n, s.j)) += 1;
    m.at(slot(n, -s.j), slot(n, -s.i)) -= sgn(s.i) * sgn(s.j);
    return m;
}

std::vector<Symbol> canonical_basis(int n)
{
    std::vector<Symbol> b;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) b.push_back({i, j});
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) b.push_back({i, -j});
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) b.push_back({-i, j});
    return b;
}

bool is_canonical(int n, const Symbol& s)
{
    if (!valid_symbol(n, s)) return false;
    if (s.i > 0 && s.j > 0) return true;
    if (s.i < 0 && s.j < 0) return false;
    return std::abs(s.i) <= std::abs(s.j);
}

std::pair<Symbol, Rational> canonical_form(const Symbol& s)
{
    if (s.i > 0 && s.j > 0) return {s, 1};
    if (s.i < 0 && s.j < 0) return {{-s.j, -s.i}, -1};
    if (std::abs(s.i) <= std::abs(s.j)) return {s, 1};
    return {{-s.j, -s.i}, 1};
}

Expansion decompose(int n, const Matrix& m)
{
    Expansion e;
    Matrix rebuilt(2 * n);
    for (const auto& s : canonical_basis(n)) {
        Rational lead = s.j == -s.i ? 2 : 1;
        Rational c = m.at(slot(n, s.i), slot(n, s.j)) / lead;
        if (c == 0) continue;
        e[s] = c;
        rebuilt = rebuilt + c * realize(n, s);
    }
    if (!(rebuilt == m)) throw std::logic_error("matrix is not in sp(2n)");
    return e;
}

Expansion structure_constants(int n, const Symbol& a, const Symbol& b)
{
    return decompose(n, bracket(realize(n, a), realize(n, b)));
}

std::vector<Symbol> generator_symbols(int n)
{
    std::vector<Symbol> g;
    for (int k = 1; k <= n; ++k) g.push_back({k, k});
    for (int k = 1; k <= n; ++k) g.push_back({k, -k});
    for (int k = 1; k <= n; ++k) g.push_back({-k, k});
    for (int k = 2; k <= n; ++k) g.push_back({k - 1, -k});
    return g;
}

bool is_generator(int n, const Symbol& s)
{
    if (!valid_symbol(n, s)) return false;
    if (s.i == s.j && s.i > 0) return true;
    if (s.i == -s.j) return true;
    return s.i > 0 && s.j == -(s.i + 1);
}

WordTable::WordTable(int n) : n_(n)
{
    const auto gens = generator_symbols(n);
    const auto basis = canonical_basis(n);
    std::map<Symbol, Matrix> mats;
    std::vector<Symbol> known;
    for (const auto& g : gens) {
        mats.emplace(g, realize(n, g));
        known.push_back(g);
    }
    bool changed = true;
    while (changed && known.size() < basis.size()) {
        changed = false;
        for (const auto& g : gens) {
            for (std::size_t idx = 0; idx < known.size(); ++idx) {
                Symbol t = known[idx];
                Matrix m = bracket(mats.at(g), mats.at(t));
                if (m.is_zero()) continue;
                Expansion d = decompose(n, m);
                if (d.size() != 1) continue;
                const auto& [s, c] = *d.begin();
                if (mats.count(s)) continue;
                words_[s] = Word{g, t, 1 / c};
                mats.emplace(s, realize(n, s));
                known.push_back(s);
                changed = true;
            }
        }
    }
    if (known.size() != basis.size()) throw std::logic_error("generators do not reach the canonical basis");
    for (const auto& s : basis)
        if (!(evaluate(s) == realize(n, s))) throw std::logic_error("bracket word mismatch for " + to_string(s));
}

bool WordTable::direct(const Symbol& s) const { return is_generator(n_, s); }

const Word& WordTable::word(const Symbol& s) const
{
    auto it = words_.find(s);
    if (it == words_.end()) throw std::invalid_argument("no bracket word for " + to_string(s));
    return it->second;
}

Matrix WordTable::evaluate(const Symbol& s) const
{
    if (direct(s)) return realize(n_, s);
    const Word& w = word(s);
    return w.coeff * bracket(realize(n_, w.g), evaluate(w.t));
}

namespace {

std::mutex cache_mutex;

}  // namespace

const WordTable& word_table(int n)
{
    static std::map<int, std::unique_ptr<WordTable>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& slot_ptr = cache[n];
    if (!slot_ptr) slot_ptr = std::make_unique<WordTable>(n);
    return *slot_ptr;
}

namespace {

std::vector<std::vector<Rational>> inverse(std::vector<std::vector<Rational>> m)
{
    const std::size_t d = m.size();
    std::vector<std::vector<Rational>> inv(d, std::vector<Rational>(d));
    for (std::size_t i = 0; i < d; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t p = c;
        while (p < d && m[p][c] == 0) ++p;
        if (p == d) throw std::logic_error("trace form is degenerate");
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        Rational piv = m[c][c];
        for (std::size_t j = 0; j < d; ++j) {
            m[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t r = 0; r < d; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (std::size_t j = 0; j < d; ++j) {
                m[r][j] -= f * m[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

}  // namespace

const std::vector<QuadraticTerm>& casimir_terms(int n)
{
    static std::map<int, std::vector<QuadraticTerm>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    const auto basis = canonical_basis(n);
    std::vector<Matrix> mats;
    for (const auto& s : basis) mats.push_back(realize(n, s));
    std::vector<std::vector<Rational>> gram(basis.size(), std::vector<Rational>(basis.size()));
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b) gram[a][b] = trace(mats[a] * mats[b]);
    auto inv = inverse(gram);
    std::vector<QuadraticTerm> terms;
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (inv[a][b] != 0) terms.push_back({basis[a], basis[b], inv[a][b]});
    return cache.emplace(n, std::move(terms)).first->second;
}

Vec root_of(int n, const Symbol& s)
{
    Vec r(n);
    r[std::abs(s.i) - 1] += sgn(s.i);
    r[std::abs(s.j) - 1] -= sgn(s.j);
    return r;
}

}  // namespace gtsp
