#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "fint/groebner.hpp"
#include "fint/int_matrix.hpp"
#include "fint/number_field.hpp"

namespace fint {

using ExponentVector = std::vector<int>;

enum class Strategy {
    laurent_inverse_vars,  // Laurent ring encoded with inverse variables t_j u_j = 1
    sign_split,            // the appendix formulation: split by entry sign, no inverses
    oracle,                // produced by bounded enumeration
};

inline std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::laurent_inverse_vars: return "laurent";
        case Strategy::sign_split: return "sign-split";
        case Strategy::oracle: return "oracle";
    }
    return "?";
}

// The unique minimal generating set of M_lambda = { a in N_0^n : A a = 0 },
// vectors in canonical (ascending lex) order.
struct HilbertBasis {
    int n = 0;
    std::vector<ExponentVector> vectors;
    Strategy strategy = Strategy::laurent_inverse_vars;
};

// Coset structure of N_lambda^(k): every element is s + m with s in
// coset_reps and m in M_lambda.
struct ResonanceSet {
    int k = 0;  // 1-based component index
    std::vector<ExponentVector> coset_reps;
    HilbertBasis base;
};

struct ToricIdeal {
    VariableSet ring;
    std::vector<Binomial> generators;
};

// Algorithm 1 step 6: the elimination ideal whose pure x/z binomials cut out
// the Hilbert basis.  laurent_inverse_vars carries t_j, u_j with t_j*u_j = 1;
// sign_split puts negative entries on the x side instead (the appendix
// sessions' formulation).  The raw sign_split ideal is not saturated with
// respect to the t_j; `saturate` adds a single inverse u with
// u*t_1*...*t_d = 1, which makes the elimination yield the full lattice
// ideal.  The replays keep saturate = false to reproduce the sessions
// verbatim.
inline ToricIdeal toric_ideal(const IntMatrix& A, Strategy strategy, bool saturate = false) {
    int d = A.rows(), n = A.cols();
    ToricIdeal out;
    std::vector<std::string> elim;
    bool laurent = strategy == Strategy::laurent_inverse_vars;
    bool sat = saturate && !laurent && d > 0;
    for (int j = 1; j <= d; ++j) {
        elim.push_back("t_" + std::to_string(j));
        if (laurent) elim.push_back("u_" + std::to_string(j));
    }
    if (sat) elim.push_back("u");
    std::vector<std::string> xs, zs;
    for (int i = 1; i <= n; ++i) {
        xs.push_back("x_" + std::to_string(i));
        zs.push_back("z_" + std::to_string(i));
    }
    out.ring.add_block("t", elim);
    out.ring.add_block("x", xs);
    out.ring.add_block("z", zs);

    int nv = out.ring.total();
    int x0 = out.ring.block("x").begin;
    int z0 = out.ring.block("z").begin;
    auto tvar = [&](int j) { return laurent ? 2 * j : j; };      // 0-based index of t_{j+1}
    auto uvar = [&](int j) { return 2 * j + 1; };                // laurent only

    if (laurent) {
        for (int j = 0; j < d; ++j) {
            Binomial b;
            b.lead.assign(nv, 0);
            b.tail.assign(nv, 0);
            b.lead[tvar(j)] = 1;
            b.lead[uvar(j)] = 1;
            out.generators.push_back(std::move(b));  // t_j u_j - 1
        }
    } else if (sat) {
        Binomial b;
        b.lead.assign(nv, 0);
        b.tail.assign(nv, 0);
        b.lead[d] = 1;  // u sits after t_1..t_d in the elimination block
        for (int j = 0; j < d; ++j) b.lead[j] = 1;
        out.generators.push_back(std::move(b));  // u t_1...t_d - 1
    }
    for (int i = 0; i < n; ++i) {
        Binomial b;
        b.lead.assign(nv, 0);
        b.tail.assign(nv, 0);
        b.lead[x0 + i] = 1;
        b.tail[z0 + i] = 1;
        for (int j = 0; j < d; ++j) {
            long a = A.at(j, i).get_si();
            if (A.at(j, i) < -1000000 || A.at(j, i) > 1000000)
                throw input_error("matrix entry too large for exponent encoding");
            if (a > 0)
                b.tail[tvar(j)] += static_cast<int>(a);
            else if (a < 0)
                (laurent ? b.tail[uvar(j)] : b.lead[tvar(j)]) += static_cast<int>(-a);
        }
        out.generators.push_back(std::move(b));  // x_i * (neg part) - z_i * (pos part)
    }
    return out;
}

// Algorithm 1: toric ideal, reduced Groebner basis, pure-binomial extraction.
inline HilbertBasis hilbert_basis(const IntMatrix& A, Strategy strategy,
                                  long budget = kDefaultGbBudget) {
    auto ideal = toric_ideal(A, strategy, /*saturate=*/true);
    auto gb = binomial_groebner(std::move(ideal.generators), budget);
    HilbertBasis h;
    h.n = A.cols();
    h.strategy = strategy;
    h.vectors = extract_binomials(gb, ideal.ring.block("x"), ideal.ring.block("z"));
    return h;
}

inline std::string monomial_string(const ExponentVector& nu, const std::string& base = "x") {
    std::string out;
    for (size_t i = 0; i < nu.size(); ++i) {
        if (nu[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += base + "_" + std::to_string(i + 1);
        if (nu[i] > 1) out += "^" + std::to_string(nu[i]);
    }
    return out.empty() ? "1" : out;
}

inline IntMatrix eigenvalue_matrix(const EigenvalueSpec& spec) {
    return integerize(coordinate_matrix(spec)).first;
}

// Algorithm 1 step 8: generators of the algebra of polynomial first
// integrals, rendered as monomials in x.
inline std::vector<std::pair<ExponentVector, std::string>> integral_generators(
    const EigenvalueSpec& spec, Strategy strategy = Strategy::laurent_inverse_vars,
    long budget = kDefaultGbBudget) {
    auto H = hilbert_basis(eigenvalue_matrix(spec), strategy, budget);
    std::vector<std::pair<ExponentVector, std::string>> out;
    for (const auto& v : H.vectors) out.push_back({v, monomial_string(v)});
    return out;
}

// Algorithm 3: Hilbert basis of the slack-augmented system.  Vectors with
// slack 0 give H_lambda, slack 1 the coset representatives S; larger slack
// values are discarded.
inline std::pair<HilbertBasis, ResonanceSet> resonance_generators(
    const EigenvalueSpec& spec, int k, Strategy strategy = Strategy::laurent_inverse_vars,
    long budget = kDefaultGbBudget) {
    int n = spec.n();
    if (k < 1 || k > n) throw input_error("component index out of range");
    auto C = coordinate_matrix(spec);
    int d = spec.field->degree();
    std::vector<std::vector<Rational>> Ck(d, std::vector<Rational>(n + 1));
    for (int j = 0; j < d; ++j) {
        Ck[j][0] = -C[j][k - 1];
        for (int i = 0; i < n; ++i) Ck[j][i + 1] = C[j][i];
    }
    auto Ak = integerize(Ck).first;
    auto full = hilbert_basis(Ak, strategy, budget);

    HilbertBasis H;
    H.n = n;
    H.strategy = strategy;
    ResonanceSet S;
    S.k = k;
    for (const auto& v : full.vectors) {
        ExponentVector proj(v.begin() + 1, v.end());
        if (v[0] == 0)
            H.vectors.push_back(std::move(proj));
        else if (v[0] == 1)
            S.coset_reps.push_back(std::move(proj));
        // slack >= 2: multiples of lambda_k, irrelevant to N_lambda^(k)
    }
    S.base = H;
    return {H, S};
}

struct OracleResult {
    std::vector<ExponentVector> solutions;  // nonzero, componentwise <= box
    std::vector<ExponentVector> minimal;    // not a sum of two nonzero solutions
};

// Exhaustive search with per-row partial-sum pruning; the independent check
// on everything the Groebner pipeline produces.
inline OracleResult oracle_enumerate(const IntMatrix& A, int box,
                                     long ceiling = 100000000) {
    if (box < 1) throw input_error("oracle box must be >= 1");
    int d = A.rows(), n = A.cols();
    double space = 1;
    for (int i = 0; i < n; ++i) space *= box + 1;
    if (space > static_cast<double>(ceiling))
        throw ceiling_error("oracle search space exceeds ceiling");

    // suffix extremes: smallest/largest contribution of columns i..n-1
    std::vector<std::vector<Integer>> lo(d, std::vector<Integer>(n + 1, 0));
    std::vector<std::vector<Integer>> hi(d, std::vector<Integer>(n + 1, 0));
    for (int i = n - 1; i >= 0; --i)
        for (int j = 0; j < d; ++j) {
            lo[j][i] = lo[j][i + 1] + (A.at(j, i) < 0 ? A.at(j, i) * box : Integer(0));
            hi[j][i] = hi[j][i + 1] + (A.at(j, i) > 0 ? A.at(j, i) * box : Integer(0));
        }

    OracleResult res;
    ExponentVector cur(n, 0);
    std::vector<Integer> partial(d, 0);
    auto feasible = [&](int depth) {
        for (int j = 0; j < d; ++j)
            if (partial[j] + lo[j][depth] > 0 || partial[j] + hi[j][depth] < 0) return false;
        return true;
    };
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            for (int j = 0; j < d; ++j)
                if (partial[j] != 0) return;
            for (int e : cur)
                if (e != 0) {
                    res.solutions.push_back(cur);
                    return;
                }
            return;
        }
        for (int v = 0; v <= box; ++v) {
            cur[depth] = v;
            if (v > 0)
                for (int j = 0; j < d; ++j) partial[j] += A.at(j, depth);
            if (feasible(depth + 1)) self(self, depth + 1);
        }
        for (int j = 0; j < d; ++j) partial[j] -= A.at(j, depth) * box;
        cur[depth] = 0;
    };
    rec(rec, 0);
    std::sort(res.solutions.begin(), res.solutions.end());

    for (const auto& s : res.solutions) {
        bool decomposable = false;
        for (const auto& t : res.solutions) {
            if (t == s) continue;
            bool leq = true;
            for (int i = 0; i < n; ++i)
                if (t[i] > s[i]) leq = false;
            if (!leq) continue;
            ExponentVector rest(n);
            for (int i = 0; i < n; ++i) rest[i] = s[i] - t[i];
            if (std::binary_search(res.solutions.begin(), res.solutions.end(), rest)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) res.minimal.push_back(s);
    }
    return res;
}

// Is target a nonnegative integer combination of the given vectors?
inline bool is_nonneg_combination(const ExponentVector& target,
                                  const std::vector<ExponentVector>& basis) {
    bool zero = true;
    for (int e : target)
        if (e != 0) zero = false;
    if (zero) return true;
    auto rec = [&](auto&& self, const ExponentVector& t, size_t from) -> bool {
        bool allz = true;
        for (int e : t)
            if (e != 0) allz = false;
        if (allz) return true;
        for (size_t b = from; b < basis.size(); ++b) {
            bool fits = true;
            for (size_t i = 0; i < t.size(); ++i)
                if (basis[b][i] > t[i]) fits = false;
            if (!fits) continue;
            ExponentVector rest(t.size());
            for (size_t i = 0; i < t.size(); ++i)
                rest[i] = t[i] - basis[b][i];
            if (self(self, rest, b)) return true;
        }
        return false;
    };
    return rec(rec, target, 0);
}

// Exact inner product <lambda, alpha> in the number field.
inline NumberFieldElement lambda_dot(const EigenvalueSpec& spec, const ExponentVector& alpha) {
    auto acc = NumberFieldElement::zero(spec.field);
    for (int i = 0; i < spec.n(); ++i)
        acc = acc + spec.lambda[i].scaled(Rational(alpha[i]));
    return acc;
}

}  // namespace fint
