#pragma once

#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "fint/polynomial.hpp"

namespace fint {

constexpr long kDefaultGbBudget = 2000000;

// A difference of two monic monomials, lead - tail with lead > tail (lex).
// Lattice and toric ideals are generated by these, and every operation of
// Buchberger's algorithm keeps the form, so the hot path never touches
// coefficient arithmetic.
struct Binomial {
    Monomial lead;
    Monomial tail;

    bool operator==(const Binomial& o) const { return lead == o.lead && tail == o.tail; }
};

namespace detail {

inline uint64_t support_mask(const Monomial& m) {
    uint64_t s = 0;
    for (size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0) s |= (i < 64 ? (uint64_t{1} << i) : 0);
    return s;
}

struct BinomialEngine {
    struct Rule {
        Monomial lead, tail;
        uint64_t mask;
        int deg;
    };
    struct Pair {
        int i, j;
        Monomial lcm;
        int deg;
    };
    struct PairGreater {
        // Min-heap keyed by (total degree, lex) of the lcm: normal strategy
        // with a degree tiebreak that keeps the queue from chasing huge
        // lex-large monomials first.
        bool operator()(const Pair& a, const Pair& b) const {
            if (a.deg != b.deg) return a.deg > b.deg;
            return lex_cmp(a.lcm, b.lcm) > 0;
        }
    };

    std::vector<Rule> rules;
    std::priority_queue<Pair, std::vector<Pair>, PairGreater> queue;
    long budget;
    long steps = 0;

    explicit BinomialEngine(long budget_) : budget(budget_) {}

    void add_rule(Monomial lead, Monomial tail) {
        Rule r{std::move(lead), std::move(tail), 0, 0};
        r.mask = support_mask(r.lead);
        r.deg = total_degree(r.lead);
        int t = static_cast<int>(rules.size());

        // Gebauer-Moeller update of the pair set.
        // 1. Drop old pairs whose lcm is properly covered by the new lead.
        std::priority_queue<Pair, std::vector<Pair>, PairGreater> fresh;
        while (!queue.empty()) {
            Pair p = queue.top();
            queue.pop();
            if (mono_divides(r.lead, p.lcm) &&
                mono_lcm(rules[p.i].lead, r.lead) != p.lcm &&
                mono_lcm(rules[p.j].lead, r.lead) != p.lcm) {
                continue;  // chain criterion
            }
            fresh.push(std::move(p));
        }
        queue = std::move(fresh);

        // 2. New pairs (i, t), pruned among themselves then by coprimality.
        std::vector<Pair> cand;
        for (int i = 0; i < t; ++i) {
            Pair p{i, t, mono_lcm(rules[i].lead, r.lead), 0};
            p.deg = total_degree(p.lcm);
            cand.push_back(std::move(p));
        }
        std::vector<bool> keep(cand.size(), true);
        for (size_t a = 0; a < cand.size(); ++a) {
            if (!keep[a]) continue;
            for (size_t b = 0; b < cand.size(); ++b) {
                if (a == b || !keep[a]) continue;
                if (keep[b] && cand[b].lcm != cand[a].lcm &&
                    mono_divides(cand[b].lcm, cand[a].lcm))
                    keep[a] = false;
            }
        }
        // Among equal lcms keep a single representative.
        for (size_t a = 0; a < cand.size(); ++a)
            for (size_t b = a + 1; b < cand.size(); ++b)
                if (keep[a] && keep[b] && cand[a].lcm == cand[b].lcm) keep[b] = false;
        for (size_t a = 0; a < cand.size(); ++a) {
            if (!keep[a]) continue;
            if (mono_coprime(rules[cand[a].i].lead, r.lead)) continue;  // Buchberger 1
            queue.push(std::move(cand[a]));
        }

        rules.push_back(std::move(r));
    }

    // Normal form of a monomial under the current rule set.
    Monomial reduce(Monomial m) const {
        uint64_t mmask;
        bool progress = true;
        while (progress) {
            progress = false;
            mmask = support_mask(m);
            int mdeg = total_degree(m);
            for (const auto& r : rules) {
                if (r.deg > mdeg) continue;
                if ((r.mask & ~mmask) != 0) continue;
                if (!mono_divides(r.lead, m)) continue;
                for (size_t v = 0; v < m.size(); ++v) m[v] += r.tail[v] - r.lead[v];
                progress = true;
                break;
            }
        }
        return m;
    }

    void run() {
        while (!queue.empty()) {
            Pair p = queue.top();
            queue.pop();
            if (++steps > budget)
                throw budget_error("Groebner pair budget exhausted (" +
                                   std::to_string(budget) + " pair reductions)");
            Monomial m1 = p.lcm, m2 = p.lcm;
            const Rule& ri = rules[p.i];
            const Rule& rj = rules[p.j];
            for (size_t v = 0; v < p.lcm.size(); ++v) {
                m1[v] += ri.tail[v] - ri.lead[v];
                m2[v] += rj.tail[v] - rj.lead[v];
            }
            m1 = reduce(std::move(m1));
            m2 = reduce(std::move(m2));
            int c = lex_cmp(m1, m2);
            if (c == 0) continue;
            if (c < 0) std::swap(m1, m2);
            add_rule(std::move(m1), std::move(m2));
        }
    }

    // Minimal, tail-reduced, canonically sorted basis.
    std::vector<Binomial> reduced_basis() const {
        std::vector<int> minimal;
        for (int i = 0; i < static_cast<int>(rules.size()); ++i) {
            bool redundant = false;
            for (int j = 0; j < static_cast<int>(rules.size()) && !redundant; ++j) {
                if (i == j) continue;
                if (mono_divides(rules[j].lead, rules[i].lead)) {
                    if (rules[j].lead == rules[i].lead)
                        redundant = j < i;  // keep one representative
                    else
                        redundant = true;
                }
            }
            if (!redundant) minimal.push_back(i);
        }
        BinomialEngine red(budget);
        for (int i : minimal) red.rules.push_back(rules[i]);
        std::vector<Binomial> out;
        for (int i : minimal) {
            Binomial b{rules[i].lead, red.reduce(rules[i].tail)};
            if (b.lead == b.tail) continue;
            out.push_back(std::move(b));
        }
        std::sort(out.begin(), out.end(), [](const Binomial& a, const Binomial& b) {
            return lex_cmp(a.lead, b.lead) < 0;
        });
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
};

}  // namespace detail

// Reduced Groebner basis of an ideal generated by lead-tail binomials with
// unit coefficients (the monomial order is pure lex over the ring's variable
// sequence).
inline std::vector<Binomial> binomial_groebner(std::vector<Binomial> generators,
                                               long budget = kDefaultGbBudget) {
    detail::BinomialEngine eng(budget);
    for (auto& g : generators) {
        if (g.lead == g.tail) continue;
        if (lex_cmp(g.lead, g.tail) < 0) std::swap(g.lead, g.tail);
        eng.add_rule(std::move(g.lead), std::move(g.tail));
    }
    eng.run();
    return eng.reduced_basis();
}

template <class F>
struct GroebnerBasis {
    VariableSet ring;
    MonomialOrder order;
    std::vector<Polynomial<F>> elements;
};

namespace detail {

// A polynomial of the form c*(x^u - x^v) with c a unit is expressible as an
// oriented Binomial after making it monic.
template <class F>
bool unit_binomial(const F& field, const Polynomial<F>& p, Binomial* out) {
    if (p.terms.size() != 2) return false;
    auto c0 = p.terms[0].second;
    auto c1 = p.terms[1].second;
    if (!(field.add(c0, c1) == field.zero())) return false;
    out->lead = p.terms[0].first;
    out->tail = p.terms[1].first;
    return true;
}

template <class F>
GroebnerBasis<F> generic_buchberger(const F& field, const VariableSet& ring,
                                    const std::vector<Polynomial<F>>& generators, long budget) {
    std::vector<Polynomial<F>> G;
    for (const auto& g : generators)
        if (!g.is_zero()) G.push_back(poly_monic(field, g));

    struct Pair {
        size_t i, j;
        Monomial lcm;
    };
    std::vector<Pair> pairs;
    auto push_pairs = [&](size_t t) {
        for (size_t i = 0; i < t; ++i) {
            if (mono_coprime(G[i].lead_monomial(), G[t].lead_monomial())) continue;
            pairs.push_back({i, t, mono_lcm(G[i].lead_monomial(), G[t].lead_monomial())});
        }
    };
    for (size_t t = 0; t < G.size(); ++t) push_pairs(t);

    long steps = 0;
    while (!pairs.empty()) {
        // Normal strategy: smallest lcm under the active order.
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k)
            if (lex_cmp(pairs[k].lcm, pairs[best].lcm) < 0) best = k;
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + best);
        if (++steps > budget) throw budget_error("Groebner pair budget exhausted");
        auto s = s_polynomial(field, G[p.i], G[p.j]);
        auto r = normal_form(field, s, G);
        if (r.is_zero()) continue;
        G.push_back(poly_monic(field, r));
        push_pairs(G.size() - 1);
    }

    // Interreduce.
    std::vector<Polynomial<F>> minimal;
    for (size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            if (mono_divides(G[j].lead_monomial(), G[i].lead_monomial()))
                redundant = G[j].lead_monomial() != G[i].lead_monomial() || j < i;
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    std::vector<Polynomial<F>> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial<F>> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        auto r = normal_form(field, minimal[i], others);
        if (!r.is_zero()) reduced.push_back(poly_monic(field, r));
    }
    std::sort(reduced.begin(), reduced.end(), [](const auto& a, const auto& b) {
        return lex_cmp(a.lead_monomial(), b.lead_monomial()) < 0;
    });
    GroebnerBasis<F> gb;
    gb.ring = ring;
    gb.elements = std::move(reduced);
    return gb;
}

}  // namespace detail

// Buchberger's algorithm, normal pair-selection strategy, deterministic
// output.  When every generator is a unit-coefficient binomial the
// computation runs on exponent vectors only; the result is identical.
template <class F>
GroebnerBasis<F> buchberger(const F& field, const VariableSet& ring,
                            const std::vector<Polynomial<F>>& generators,
                            long budget = kDefaultGbBudget) {
    std::vector<Binomial> bins;
    bool all_binomial = true;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        Binomial b;
        if (!detail::unit_binomial(field, poly_monic(field, g), &b)) {
            all_binomial = false;
            break;
        }
        bins.push_back(std::move(b));
    }
    if (all_binomial) {
        auto red = binomial_groebner(std::move(bins), budget);
        GroebnerBasis<F> gb;
        gb.ring = ring;
        for (const auto& b : red) {
            Polynomial<F> p;
            p.terms.push_back({b.lead, field.one()});
            p.terms.push_back({b.tail, field.neg(field.one())});
            gb.elements.push_back(std::move(p));
        }
        return gb;
    }
    return detail::generic_buchberger(field, ring, generators, budget);
}

// All vectors nu such that x^nu - z^nu appears verbatim in the basis (same
// exponents on the two blocks, nothing outside them), canonically sorted.
inline std::vector<std::vector<int>> extract_binomials(const std::vector<Binomial>& basis,
                                                       const VariableSet::Block& x_block,
                                                       const VariableSet::Block& z_block) {
    std::vector<std::vector<int>> out;
    int n = x_block.end - x_block.begin;
    for (const auto& b : basis) {
        bool pure = true;
        for (size_t v = 0; v < b.lead.size(); ++v) {
            int iv = static_cast<int>(v);
            bool in_x = iv >= x_block.begin && iv < x_block.end;
            bool in_z = iv >= z_block.begin && iv < z_block.end;
            if (!in_x && b.lead[v] != 0) pure = false;
            if (!in_z && b.tail[v] != 0) pure = false;
        }
        if (!pure) continue;
        std::vector<int> nu(n);
        bool match = true;
        for (int i = 0; i < n; ++i) {
            nu[i] = b.lead[x_block.begin + i];
            if (nu[i] != b.tail[z_block.begin + i]) match = false;
        }
        if (match) out.push_back(std::move(nu));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

template <class F>
std::vector<std::vector<int>> extract_binomials(const GroebnerBasis<F>& gb,
                                                const std::string& x_block_id,
                                                const std::string& z_block_id) {
    const F field{};
    std::vector<Binomial> bins;
    for (const auto& e : gb.elements) {
        Binomial b;
        if (detail::unit_binomial(field, e, &b)) bins.push_back(std::move(b));
    }
    return extract_binomials(bins, gb.ring.block(x_block_id), gb.ring.block(z_block_id));
}

}  // namespace fint
