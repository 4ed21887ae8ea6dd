#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fint/hilbert.hpp"

namespace fint {

// A vector monomial x^gamma e_k with <lambda, gamma> = lambda_k.
struct Equivariant {
    int k = 0;  // 1-based component
    ExponentVector gamma;
    std::string label;  // v_1, v_2, ...

    bool operator==(const Equivariant& o) const { return k == o.k && gamma == o.gamma; }
};

struct EquivariantSet {
    std::vector<ResonanceSet> per_k;  // S_k for k = 1..n
    HilbertBasis hilbert;             // H_lambda (slack-zero slice of k = 1)
    std::vector<Equivariant> equivariants;
};

// One equivariant per coset representative, for every component.  Trivial
// equivariants x_k e_k are labeled first (v_1..v_n when present), the rest
// in (k, canonical gamma) order.
inline EquivariantSet equivariant_generators(const EigenvalueSpec& spec,
                                             Strategy strategy = Strategy::laurent_inverse_vars,
                                             long budget = kDefaultGbBudget) {
    int n = spec.n();
    EquivariantSet out;
    for (int k = 1; k <= n; ++k) {
        auto [H, S] = resonance_generators(spec, k, strategy, budget);
        if (k == 1) out.hilbert = H;
        out.per_k.push_back(std::move(S));
    }
    auto unit = [&](int k) {
        ExponentVector e(n, 0);
        e[k - 1] = 1;
        return e;
    };
    std::vector<Equivariant> trivial, rest;
    for (int k = 1; k <= n; ++k)
        for (const auto& g : out.per_k[k - 1].coset_reps) {
            Equivariant eq{k, g, ""};
            (g == unit(k) ? trivial : rest).push_back(std::move(eq));
        }
    int idx = 1;
    for (auto& e : trivial) {
        e.label = "v_" + std::to_string(idx++);
        out.equivariants.push_back(std::move(e));
    }
    for (auto& e : rest) {
        e.label = "v_" + std::to_string(idx++);
        out.equivariants.push_back(std::move(e));
    }
    return out;
}

// I^mu * v_j = I^mu' * v_j', same component, identical exponent sums.
struct Syzygy {
    std::vector<int> left_mu;  // multidegree over the integral generators
    int left_j = 0;            // index into the equivariant list
    std::vector<int> right_mu;
    int right_j = 0;
};

inline ExponentVector syzygy_side_exponent(const std::vector<int>& mu, int j,
                                           const std::vector<ExponentVector>& integrals,
                                           const std::vector<Equivariant>& equivs) {
    ExponentVector e = equivs[j].gamma;
    for (size_t m = 0; m < mu.size(); ++m)
        for (size_t i = 0; i < e.size(); ++i) e[i] += mu[m] * integrals[m][i];
    return e;
}

// All primitive relations I^mu v_j = I^mu' v_j' up to the total degree
// bound.  Primitive: the two integral multidegrees share no common factor
// (otherwise the relation is a multiple of a smaller one).
inline std::vector<Syzygy> syzygy_scan(const std::vector<ExponentVector>& integrals,
                                       const std::vector<Equivariant>& equivs,
                                       int degree_bound) {
    std::vector<int> ideg;
    for (const auto& I : integrals) ideg.push_back(total_degree(I));

    // (k, exponent sum) -> all (mu, j) products reaching it
    std::map<std::pair<int, ExponentVector>, std::vector<std::pair<std::vector<int>, int>>> hits;
    for (int j = 0; j < static_cast<int>(equivs.size()); ++j) {
        int base = total_degree(equivs[j].gamma);
        if (base > degree_bound) continue;
        std::vector<int> mu(integrals.size(), 0);
        std::function<void(size_t, int)> rec = [&](size_t from, int deg) {
            hits[{equivs[j].k, syzygy_side_exponent(mu, j, integrals, equivs)}].push_back({mu, j});
            for (size_t m = from; m < integrals.size(); ++m) {
                if (deg + ideg[m] > degree_bound) continue;
                ++mu[m];
                rec(m, deg + ideg[m]);
                --mu[m];
            }
        };
        rec(0, base);
    }

    std::vector<Syzygy> out;
    for (const auto& [key, group] : hits) {
        for (size_t a = 0; a < group.size(); ++a)
            for (size_t b = a + 1; b < group.size(); ++b) {
                const auto& [mua, ja] = group[a];
                const auto& [mub, jb] = group[b];
                bool coprime = true;
                for (size_t m = 0; m < mua.size(); ++m)
                    if (mua[m] > 0 && mub[m] > 0) coprime = false;
                if (!coprime) continue;
                out.push_back({mua, ja, mub, jb});
            }
    }
    return out;
}

// A proposed direct-sum presentation sum_j C[I_allowed(j)] * v_j.
struct StanleySummand {
    int k = 0;
    ExponentVector gamma;
    std::vector<int> allowed;  // 0-based indices into the integral list
};

struct StanleyDecomposition {
    std::vector<StanleySummand> summands;
};

struct StanleyReport {
    bool ok = false;
    std::vector<std::pair<int, ExponentVector>> missing;     // (k, alpha) with no representation
    std::vector<std::pair<int, ExponentVector>> duplicated;  // (k, alpha) with >= 2
};

namespace detail {

// Is target a sum of integrals with indices in `allowed`?  (Several multiset
// decompositions may exist -- those are relations in the integral algebra,
// not module duplications -- so this is a membership test, not a count.)
inline bool representable(const ExponentVector& target,
                          const std::vector<ExponentVector>& integrals,
                          const std::vector<int>& allowed, size_t from = 0) {
    bool zero = true;
    for (int e : target)
        if (e != 0) zero = false;
    if (zero) return true;
    for (size_t a = from; a < allowed.size(); ++a) {
        const auto& I = integrals[allowed[a]];
        bool fits = true;
        for (size_t i = 0; i < target.size(); ++i)
            if (I[i] > target[i]) fits = false;
        if (!fits) continue;
        ExponentVector rest(target.size());
        for (size_t i = 0; i < target.size(); ++i) rest[i] = target[i] - I[i];
        if (representable(rest, integrals, allowed, a)) return true;
    }
    return false;
}

inline void enumerate_compositions(int n, int bound,
                                   const std::function<void(const ExponentVector&)>& emit) {
    ExponentVector cur(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n) {
            emit(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
        cur[pos] = 0;
    };
    rec(0, bound);
}

}  // namespace detail

// Checks the direct-sum claim degree by degree: every monomial equivariant
// x^alpha e_k with deg alpha <= bound must belong to exactly one summand
// C[I_allowed(j)] x^{gamma_j} e_k.
inline StanleyReport stanley_verify(const StanleyDecomposition& dec, const EigenvalueSpec& spec,
                                    int degree_bound,
                                    Strategy strategy = Strategy::laurent_inverse_vars,
                                    long budget = kDefaultGbBudget) {
    int n = spec.n();
    bool any = false;
    for (const auto& s : dec.summands)
        if (total_degree(s.gamma) <= degree_bound) any = true;
    if (!any) throw input_error("degree bound too small to contain any summand generator");

    auto H = hilbert_basis(eigenvalue_matrix(spec), strategy, budget);
    const auto& integrals = H.vectors;
    for (const auto& s : dec.summands) {
        if (static_cast<int>(s.gamma.size()) != n) throw input_error("summand dimension mismatch");
        for (int m : s.allowed)
            if (m < 0 || m >= static_cast<int>(integrals.size()))
                throw input_error("summand references unknown integral generator");
    }

    std::vector<int> components;
    for (const auto& s : dec.summands)
        if (std::find(components.begin(), components.end(), s.k) == components.end())
            components.push_back(s.k);
    std::sort(components.begin(), components.end());

    StanleyReport rep;
    rep.ok = true;
    for (int k : components) {
        detail::enumerate_compositions(n, degree_bound, [&](const ExponentVector& alpha) {
            if (!(lambda_dot(spec, alpha) == spec.lambda[k - 1])) return;
            long count = 0;
            for (const auto& s : dec.summands) {
                if (s.k != k) continue;
                bool fits = true;
                for (int i = 0; i < n; ++i)
                    if (s.gamma[i] > alpha[i]) fits = false;
                if (!fits) continue;
                ExponentVector rest(n);
                for (int i = 0; i < n; ++i) rest[i] = alpha[i] - s.gamma[i];
                if (detail::representable(rest, integrals, s.allowed)) ++count;
            }
            if (count == 0) {
                rep.missing.push_back({k, alpha});
                rep.ok = false;
            } else if (count > 1) {
                rep.duplicated.push_back({k, alpha});
                rep.ok = false;
            }
        });
    }
    return rep;
}

struct RankReport {
    int rank_kernel = 0;
    int rank_R = 0;
    bool holds = false;
    std::string text;
};

// Proposition-style rank certificate: when rank ker = rank R_lambda = p, a
// normal form with p independent formal integrals admits every Laurent
// monomial integral of the linear part.
inline RankReport formal_integral_rank_report(const EigenvalueSpec& spec,
                                              Strategy strategy = Strategy::laurent_inverse_vars,
                                              long budget = kDefaultGbBudget) {
    auto A = eigenvalue_matrix(spec);
    auto H = hilbert_basis(A, strategy, budget);
    std::vector<std::vector<Integer>> hv;
    for (const auto& v : H.vectors) hv.push_back(std::vector<Integer>(v.begin(), v.end()));
    auto rc = rank_condition(A, hv);
    RankReport rr;
    rr.rank_kernel = rc.rank_kernel;
    rr.rank_R = rc.rank_R;
    rr.holds = rc.equal;
    if (rr.holds)
        rr.text = "rank ker = rank R = " + std::to_string(rr.rank_R) +
                  "; a normal form with " + std::to_string(rr.rank_R) +
                  " independent formal first integrals admits every Laurent monomial first "
                  "integral of the linear system";
    else
        rr.text = "rank ker = " + std::to_string(rr.rank_kernel) +
                  " != rank R = " + std::to_string(rr.rank_R) + "; the rank condition fails";
    return rr;
}

}  // namespace fint
