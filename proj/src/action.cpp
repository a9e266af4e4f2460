#include "gtsp/action.hpp"

#include <algorithm>

namespace gtsp {

bool tableau_less(const TableauC& a, const TableauC& b)
{
    if (a.n() != b.n()) return a.n() < b.n();
    for (int k = a.n(); k >= 1; --k)
        for (int i = 1; i <= k; ++i) {
            if (a.l(k, i) != b.l(k, i)) return a.l(k, i) < b.l(k, i);
            if (a.lp(k, i) != b.lp(k, i)) return a.lp(k, i) < b.lp(k, i);
        }
    return false;
}

void TableauVector::add(const TableauC& t, const Rational& c)
{
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(t, c);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

void TableauVector::add(const TableauVector& v, const Rational& c)
{
    if (c == 0) return;
    for (const auto& [t, x] : v.terms_) add(t, x * c);
}

TableauVector& TableauVector::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, x] : terms_) x *= c;
    return *this;
}

Rational TableauVector::coefficient(const TableauC& t) const
{
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::pair<TableauC, Rational>> TableauVector::sorted() const
{
    std::vector<std::pair<TableauC, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return tableau_less(x.first, y.first); });
    return out;
}

namespace {

std::string at(const char* name, int k, int i)
{
    return std::string(name) + "_{" + std::to_string(k) + "," + std::to_string(i) + "}";
}

void nonzero(const Rational& d, const std::string& what)
{
    if (d == 0) throw RegularityError("vanishing denominator: " + what);
}

}  // namespace

Rational coeff_A(const TableauC& t, int k, int i)
{
    Rational r = 1;
    for (int a = 1; a <= k; ++a) {
        if (a == i) continue;
        Rational d = t.lp(k, a) - t.lp(k, i);
        nonzero(d, "(i) " + at("l'", k, a) + " = " + at("l'", k, i));
        r /= d;
    }
    return r;
}

Rational coeff_B(const TableauC& t, int k, int i)
{
    Rational r = 2 * coeff_A(t, k, i) * (2 * t.lp(k, i) - 1);
    for (int a = 1; a <= k; ++a) r *= t.l(k, a) - t.lp(k, i);
    for (int a = 1; a <= k - 1; ++a) r *= t.l(k - 1, a) - t.lp(k, i);
    return r;
}

Rational coeff_C(const TableauC& t, int k, int i)
{
    const Rational& x = t.l(k - 1, i);
    Rational d = 2 * x - 1;
    nonzero(d, "(iv) 2" + at("l", k - 1, i) + " - 1 = 0");
    Rational r = 1 / d;
    for (int a = 1; a <= k - 1; ++a) {
        if (a == i) continue;
        const Rational& y = t.l(k - 1, a);
        nonzero(x - y, "(ii) " + at("l", k - 1, i) + " = " + at("l", k - 1, a));
        nonzero(x + y - 1, "(iii) " + at("l", k - 1, i) + " + " + at("l", k - 1, a) + " = 1");
        r /= (x - y) * (x + y - 1);
    }
    return r;
}

Rational coeff_D(const TableauC& t, int k, int i, int j, int m)
{
    Rational r = coeff_A(t, k, i) * coeff_A(t, k - 1, m) * coeff_C(t, k, j);
    const Rational x2 = t.l(k - 1, j) * t.l(k - 1, j);
    for (int a = 1; a <= k; ++a)
        if (a != i) r *= x2 - t.lp(k, a) * t.lp(k, a);
    for (int a = 1; a <= k - 1; ++a)
        if (a != m) r *= x2 - t.lp(k - 1, a) * t.lp(k - 1, a);
    return r;
}

Rational gt_coefficient(CoeffKind kind, const TableauC& t, const std::vector<int>& idx)
{
    auto need = [&](std::size_t c) {
        if (idx.size() != c) throw std::invalid_argument("wrong number of coefficient indices");
    };
    const int n = t.n();
    switch (kind) {
    case CoeffKind::A:
    case CoeffKind::B:
        need(2);
        if (idx[0] < 1 || idx[0] > n || idx[1] < 1 || idx[1] > idx[0]) throw std::invalid_argument("index out of range");
        return kind == CoeffKind::A ? coeff_A(t, idx[0], idx[1]) : coeff_B(t, idx[0], idx[1]);
    case CoeffKind::C:
        need(2);
        if (idx[0] < 2 || idx[0] > n || idx[1] < 1 || idx[1] > idx[0] - 1) throw std::invalid_argument("index out of range");
        return coeff_C(t, idx[0], idx[1]);
    case CoeffKind::D:
        need(4);
        if (idx[0] < 2 || idx[0] > n || idx[1] < 1 || idx[1] > idx[0] || idx[2] < 1 || idx[2] > idx[0] - 1 ||
            idx[3] < 1 || idx[3] > idx[0] - 1)
            throw std::invalid_argument("index out of range");
        return coeff_D(t, idx[0], idx[1], idx[2], idx[3]);
    }
    throw std::invalid_argument("unknown coefficient kind");
}

std::optional<Rational> try_coefficient(CoeffKind kind, const TableauC& t, const std::vector<int>& idx)
{
    try {
        return gt_coefficient(kind, t, idx);
    } catch (const RegularityError&) {
        return std::nullopt;
    }
}

std::vector<std::pair<TableauC, Rational>> raw_generator_terms(const Symbol& g, const TableauC& t)
{
    const int n = t.n();
    if (!is_generator(n, g)) throw std::invalid_argument(to_string(g) + " is not a directly implemented generator");
    std::vector<std::pair<TableauC, Rational>> out;
    if (g.i == g.j) {
        out.emplace_back(t, omega(t, g.i));
    } else if (g.i > 0 && g.j == -g.i) {
        const int k = g.i;
        for (int i = 1; i <= k; ++i) out.emplace_back(apply_shift(t, {k, i, true, 1}), coeff_A(t, k, i));
    } else if (g.i < 0 && g.j == -g.i) {
        const int k = g.j;
        for (int i = 1; i <= k; ++i) out.emplace_back(apply_shift(t, {k, i, true, -1}), coeff_B(t, k, i));
    } else {
        const int k = -g.j;
        for (int i = 1; i <= k - 1; ++i) out.emplace_back(apply_shift(t, {k - 1, i, false, -1}), coeff_C(t, k, i));
        for (int i = 1; i <= k; ++i) {
            TableauC s1 = apply_shift(t, {k, i, true, 1});
            for (int j = 1; j <= k - 1; ++j) {
                TableauC s2 = apply_shift(s1, {k - 1, j, false, 1});
                for (int m = 1; m <= k - 1; ++m)
                    out.emplace_back(apply_shift(s2, {k - 1, m, true, 1}), coeff_D(t, k, i, j, m));
            }
        }
    }
    return out;
}

GTAction::GTAction(int n, Membership member) : n_(n), member_(std::move(member)) { word_table(n); }

std::size_t GTAction::KeyHash::operator()(const Key& k) const
{
    return k.t.hash() * 31 + static_cast<std::size_t>((k.s.i + 64) * 131 + (k.s.j + 64));
}

TableauVector GTAction::generator(const Symbol& g, const TableauC& t) const
{
    if (!member_(t)) throw std::invalid_argument("tableau is not a basis element: " + t.str());
    TableauVector v;
    for (auto& [target, c] : raw_generator_terms(g, t)) {
        if (c == 0) continue;
        if (member_(target))
            v.add(target, c);
        else if (observer_)
            observer_({g, t, target, c});
    }
    return v;
}

const TableauVector& GTAction::symbol(const Symbol& s, const TableauC& t)
{
    Key key{s, t};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    TableauVector v;
    const WordTable& words = word_table(n_);
    if (!is_canonical(n_, s)) {
        auto [cs, c] = canonical_form(s);
        v = symbol(cs, t);
        v *= c;
    } else if (words.direct(s)) {
        v = generator(s, t);
    } else {
        const Word& w = words.word(s);
        TableauVector tv = symbol(w.t, t);
        TableauVector gv = generator(w.g, t);
        v = apply(w.g, tv) - apply(w.t, gv);
        v *= w.coeff;
    }
    return memo_.emplace(std::move(key), std::move(v)).first->second;
}

TableauVector GTAction::apply(const Symbol& s, const TableauVector& v)
{
    TableauVector out;
    for (const auto& [t, c] : v.terms()) out.add(symbol(s, t), c);
    return out;
}

TableauVector GTAction::apply(const Expansion& x, const TableauVector& v)
{
    TableauVector out;
    for (const auto& [s, c] : x) out.add(apply(s, v), c);
    return out;
}

TableauVector GTAction::apply_word(const std::vector<Symbol>& word, const TableauVector& v)
{
    TableauVector out = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = apply(*it, out);
    return out;
}

TableauVector GTAction::derived(const Symbol& s, const TableauVector& v)
{
    Symbol x, y;
    if (s.i == s.j + 1 && s.j >= 1) {
        const int k = s.i;
        x = {k - 1, -k};
        y = {-(k - 1), k - 1};
    } else if (s.j == s.i + 1 && s.i >= 1) {
        const int k = s.j;
        x = {k - 1, -k};
        y = {-k, k};
    } else {
        throw std::invalid_argument("derived action defined only for F(k,k-1) and F(k-1,k)");
    }
    TableauVector r = apply(x, apply(y, v)) - apply(y, apply(x, v));
    r *= half();
    return r;
}

TableauVector GTAction::casimir(const TableauC& t)
{
    TableauVector out;
    TableauVector base(t);
    for (const auto& q : casimir_terms(n_)) out.add(apply(q.a, apply(q.b, base)), q.coeff);
    return out;
}

}  // namespace gtsp
