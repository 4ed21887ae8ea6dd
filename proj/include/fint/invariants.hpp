#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fint/hilbert.hpp"

namespace fint {

// A parametric polynomial system: linear part diag(lambda) plus one
// coefficient vector a_Q per exponent Q in Omega.  Parameters are ordered
// (a_1^{(Q_1)}, ..., a_n^{(Q_1)}, ..., a_n^{(Q_l)}), m = n*l in total.
struct SystemSpec {
    EigenvalueSpec eigen;
    std::vector<ExponentVector> omega;                // Q_1, ..., Q_l, entries >= -1
    std::vector<std::vector<std::string>> coeff_labels;  // l x n, generated if empty
    std::set<std::pair<int, int>> zeroed;             // (s, i) 1-based: a_i^{(Q_s)} = 0

    SystemSpec(EigenvalueSpec e, std::vector<ExponentVector> om,
               std::vector<std::vector<std::string>> labels = {},
               std::set<std::pair<int, int>> zero = {})
        : eigen(std::move(e)),
          omega(std::move(om)),
          coeff_labels(std::move(labels)),
          zeroed(std::move(zero)) {
        int n = eigen.n();
        std::set<ExponentVector> seen;
        for (const auto& Q : omega) {
            if (static_cast<int>(Q.size()) != n) throw input_error("exponent vector length != n");
            int negatives = 0;
            bool all_zero = true;
            for (int q : Q) {
                if (q < -1) throw input_error("exponent entries must be >= -1");
                if (q == -1) ++negatives;
                if (q != 0) all_zero = false;
            }
            if (negatives > 1) throw input_error("at most one exponent entry may be -1");
            if (all_zero) throw input_error("the zero exponent belongs to the linear part");
            if (!seen.insert(Q).second) throw input_error("duplicate exponent vector in omega");
        }
        if (coeff_labels.empty()) {
            for (const auto& Q : omega) {
                std::string qs;
                for (int q : Q) qs += q == -1 ? "m1" : std::to_string(q);
                std::vector<std::string> row;
                for (int i = 1; i <= n; ++i) row.push_back("a" + std::to_string(i) + "_" + qs);
                coeff_labels.push_back(std::move(row));
            }
        }
        if (static_cast<int>(coeff_labels.size()) != ell())
            throw input_error("label grid must have one row per exponent vector");
        for (const auto& row : coeff_labels)
            if (static_cast<int>(row.size()) != n)
                throw input_error("label grid rows must have n entries");
        for (const auto& [s, i] : zeroed)
            if (s < 1 || s > ell() || i < 1 || i > n)
                throw input_error("zeroed position out of range");
    }

    int n() const { return eigen.n(); }
    int ell() const { return static_cast<int>(omega.size()); }
    int m() const { return n() * ell(); }

    // 0-based flat parameter index of a_i^{(Q_s)} (both 1-based).
    int param_index(int s, int i) const { return (s - 1) * n() + (i - 1); }
    const std::string& label(int idx) const {
        return coeff_labels[idx / n()][idx % n()];
    }
    bool is_zeroed(int idx) const {
        return zeroed.count({idx / n() + 1, idx % n() + 1}) > 0;
    }
};

// Q = [Q_1 block | ... | Q_l block], each block n x n with every column Q_s.
inline IntMatrix build_Q_matrix(const SystemSpec& spec) {
    int n = spec.n(), l = spec.ell();
    IntMatrix Q(n, n * l);
    for (int s = 0; s < l; ++s)
        for (int i = 0; i < n; ++i)
            for (int r = 0; r < n; ++r) Q.at(r, s * n + i) = spec.omega[s][r];
    return Q;
}

// Entries of diag(lambda^T Q): the parameter a_i^{(Q_s)} carries weight
// <lambda, Q_s>.  Zeroed positions carry weight 0 (the parameter is absent,
// so the group acts trivially on it).
inline std::vector<NumberFieldElement> weight_vector(const SystemSpec& spec) {
    std::vector<NumberFieldElement> w;
    w.reserve(spec.m());
    for (int s = 1; s <= spec.ell(); ++s) {
        auto ws = lambda_dot(spec.eigen, spec.omega[s - 1]);
        for (int i = 1; i <= spec.n(); ++i)
            w.push_back(spec.zeroed.count({s, i}) ? NumberFieldElement::zero(spec.eigen.field)
                                                  : ws);
    }
    return w;
}

// True iff the group-factor exponent <lambda, L(nu)> vanishes exactly, i.e.
// a^nu is fixed by the induced action for every phi.
inline bool verify_invariance(const SystemSpec& spec, const ExponentVector& nu) {
    if (static_cast<int>(nu.size()) != spec.m())
        throw input_error("exponent vector length != number of parameters");
    auto w = weight_vector(spec);
    auto acc = NumberFieldElement::zero(spec.eigen.field);
    for (int i = 0; i < spec.m(); ++i) acc = acc + w[i].scaled(Rational(nu[i]));
    return acc.is_zero();
}

// Generators of the algebra of monomial invariants: the Algorithm 1 pipeline
// run on the weight vector.  Weight-zero parameters are invariant on their
// own; they are split off before the Groebner run and re-inserted, which is
// equivalent to (and much cheaper than) keeping their columns.
inline std::vector<std::pair<ExponentVector, std::string>> invariant_generators(
    const SystemSpec& spec, Strategy strategy = Strategy::laurent_inverse_vars,
    long budget = kDefaultGbBudget) {
    auto w = weight_vector(spec);
    int m = spec.m();
    std::vector<int> active;
    std::vector<ExponentVector> basis;
    for (int i = 0; i < m; ++i) {
        if (w[i].is_zero()) {
            ExponentVector e(m, 0);
            e[i] = 1;
            basis.push_back(std::move(e));
        } else {
            active.push_back(i);
        }
    }
    if (!active.empty()) {
        std::vector<NumberFieldElement> wa;
        for (int i : active) wa.push_back(w[i]);
        EigenvalueSpec sub(spec.eigen.field, std::move(wa));
        auto H = hilbert_basis(eigenvalue_matrix(sub), strategy, budget);
        for (const auto& v : H.vectors) {
            ExponentVector full(m, 0);
            for (size_t j = 0; j < active.size(); ++j) full[active[j]] = v[j];
            basis.push_back(std::move(full));
        }
    }
    std::sort(basis.begin(), basis.end());

    std::vector<std::pair<ExponentVector, std::string>> out;
    for (auto& nu : basis) {
        std::string mono;
        for (int i = 0; i < m; ++i) {
            if (nu[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += spec.label(i);
            if (nu[i] > 1) mono += "^" + std::to_string(nu[i]);
        }
        if (mono.empty()) mono = "1";
        out.push_back({std::move(nu), std::move(mono)});
    }
    return out;
}

}  // namespace fint
