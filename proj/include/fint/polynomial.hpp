#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "fint/rational.hpp"

namespace fint {

// Variables grouped into ordered blocks (eliminators first, then x, then z).
// The monomial order is pure lex over the concatenated sequence.
struct VariableSet {
    struct Block {
        std::string id;
        int begin = 0;
        int end = 0;  // half-open [begin, end)
    };

    std::vector<std::string> names;
    std::vector<Block> blocks;

    int total() const { return static_cast<int>(names.size()); }

    void add_block(const std::string& id, const std::vector<std::string>& vars) {
        Block b{id, total(), 0};
        for (const auto& v : vars) names.push_back(v);
        b.end = total();
        blocks.push_back(b);
    }

    const Block& block(const std::string& id) const {
        for (const auto& b : blocks)
            if (b.id == id) return b;
        throw input_error("no such variable block: " + id);
    }

    bool operator==(const VariableSet& o) const { return names == o.names; }
};

using Monomial = std::vector<int>;

inline int lex_cmp(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {  // a / b
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

inline int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

// Pure lexicographic order over the ring's variable sequence.
struct MonomialOrder {
    int cmp(const Monomial& a, const Monomial& b) const { return lex_cmp(a, b); }
    bool less(const Monomial& a, const Monomial& b) const { return lex_cmp(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return lex_cmp(a, b) > 0; }
};

struct RationalField {
    using Elem = Rational;
    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    bool is_zero(const Elem& e) const { return e == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw input_error("division by zero");
        return 1 / a;
    }
    Elem from_int(long v) const { return Rational(v); }
    std::string str(const Elem& e) const { return e.get_str(); }
};

// GF(p), p an odd prime fitting in long; elements stored in [0, p).
struct PrimeField {
    long p;
    explicit PrimeField(long prime) : p(prime) {
        if (p < 3) throw input_error("prime must be >= 3");
    }
    using Elem = long;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(const Elem& e) const { return e == 0; }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return ((a - b) % p + p) % p; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<long>((static_cast<__int128>(a) * b) % p);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw input_error("division by zero");
        long t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            long q = r / nr;
            std::swap(t -= q * nt, nt);
            std::swap(r -= q * nr, nr);
        }
        return (t % p + p) % p;
    }
    Elem from_int(long v) const { return ((v % p) + p) % p; }
    std::string str(const Elem& e) const { return std::to_string(e); }
};

// Terms kept sorted descending by the active lex order, no zero coefficients.
template <class F>
struct Polynomial {
    using Elem = typename F::Elem;
    std::vector<std::pair<Monomial, Elem>> terms;

    bool is_zero() const { return terms.empty(); }
    const Monomial& lead_monomial() const { return terms.front().first; }
    const Elem& lead_coeff() const { return terms.front().second; }

    bool operator==(const Polynomial& o) const { return terms == o.terms; }
};

template <class F>
Polynomial<F> make_poly(const F& field,
                        std::vector<std::pair<Monomial, typename F::Elem>> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return lex_cmp(a.first, b.first) > 0; });
    Polynomial<F> p;
    for (auto& t : terms) {
        if (!p.terms.empty() && p.terms.back().first == t.first)
            p.terms.back().second = field.add(p.terms.back().second, t.second);
        else
            p.terms.push_back(std::move(t));
        if (!p.terms.empty() && field.is_zero(p.terms.back().second)) p.terms.pop_back();
    }
    // Collapsing above only merges adjacent equals; redo a cleanup pass.
    std::vector<std::pair<Monomial, typename F::Elem>> out;
    for (auto& t : p.terms)
        if (!field.is_zero(t.second)) out.push_back(std::move(t));
    p.terms = std::move(out);
    return p;
}

template <class F>
Polynomial<F> poly_add(const F& field, const Polynomial<F>& a, const Polynomial<F>& b) {
    Polynomial<F> r;
    size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() ||
            (i < a.terms.size() && lex_cmp(a.terms[i].first, b.terms[j].first) > 0)) {
            r.terms.push_back(a.terms[i++]);
        } else if (i == a.terms.size() || lex_cmp(b.terms[j].first, a.terms[i].first) > 0) {
            r.terms.push_back(b.terms[j++]);
        } else {
            auto c = field.add(a.terms[i].second, b.terms[j].second);
            if (!field.is_zero(c)) r.terms.push_back({a.terms[i].first, c});
            ++i;
            ++j;
        }
    }
    return r;
}

template <class F>
Polynomial<F> poly_neg(const F& field, const Polynomial<F>& a) {
    Polynomial<F> r = a;
    for (auto& t : r.terms) t.second = field.neg(t.second);
    return r;
}

template <class F>
Polynomial<F> poly_sub(const F& field, const Polynomial<F>& a, const Polynomial<F>& b) {
    return poly_add(field, a, poly_neg(field, b));
}

template <class F>
Polynomial<F> term_mul(const F& field, const Polynomial<F>& a, const Monomial& m,
                       const typename F::Elem& c) {
    Polynomial<F> r;
    if (field.is_zero(c)) return r;
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) r.terms.push_back({mono_mul(t.first, m), field.mul(t.second, c)});
    return r;
}

template <class F>
Polynomial<F> poly_mul(const F& field, const Polynomial<F>& a, const Polynomial<F>& b) {
    std::vector<std::pair<Monomial, typename F::Elem>> acc;
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms)
            acc.push_back({mono_mul(ta.first, tb.first), field.mul(ta.second, tb.second)});
    return make_poly(field, std::move(acc));
}

template <class F>
Polynomial<F> poly_monic(const F& field, const Polynomial<F>& a) {
    if (a.is_zero()) return a;
    auto ic = field.inv(a.lead_coeff());
    Polynomial<F> r = a;
    for (auto& t : r.terms) t.second = field.mul(t.second, ic);
    return r;
}

// Multivariate division: the remainder of f against G, iterating G in the
// given (fixed) sequence.
template <class F>
Polynomial<F> normal_form(const F& field, const Polynomial<F>& f,
                          const std::vector<Polynomial<F>>& G, const MonomialOrder& = {}) {
    Polynomial<F> rem;
    Polynomial<F> work = f;
    while (!work.is_zero()) {
        bool reduced = false;
        for (const auto& g : G) {
            if (g.is_zero()) continue;
            if (mono_divides(g.lead_monomial(), work.lead_monomial())) {
                Monomial q = mono_div(work.lead_monomial(), g.lead_monomial());
                auto c = field.mul(work.lead_coeff(), field.inv(g.lead_coeff()));
                work = poly_sub(field, work, term_mul(field, g, q, c));
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.terms.push_back(work.terms.front());
            work.terms.erase(work.terms.begin());
        }
    }
    return rem;
}

template <class F>
Polynomial<F> s_polynomial(const F& field, const Polynomial<F>& f, const Polynomial<F>& g,
                           const MonomialOrder& = {}) {
    if (f.is_zero() || g.is_zero()) throw input_error("s_polynomial of zero polynomial");
    Monomial l = mono_lcm(f.lead_monomial(), g.lead_monomial());
    auto cf = field.inv(f.lead_coeff());
    auto cg = field.inv(g.lead_coeff());
    return poly_sub(field, term_mul(field, f, mono_div(l, f.lead_monomial()), cf),
                    term_mul(field, g, mono_div(l, g.lead_monomial()), cg));
}

inline std::string render_monomial(const Monomial& m, const std::vector<std::string>& names) {
    std::string out;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

// Appendix-style rendering: x_4^3*x_5^2-y_4^3*y_5^2 (no spaces).
template <class F>
std::string render_poly(const F& field, const Polynomial<F>& p,
                        const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms) {
        std::string cs = field.str(c);
        bool neg = !cs.empty() && cs[0] == '-';
        std::string mag = neg ? cs.substr(1) : cs;
        std::string mono = render_monomial(m, names);
        std::string body;
        if (mono == "1")
            body = mag;
        else if (mag == "1")
            body = mono;
        else
            body = mag + "*" + mono;
        if (out.empty())
            out += (neg ? "-" : "") + body;
        else
            out += (neg ? "-" : "+") + body;
    }
    return out;
}

}  // namespace fint
