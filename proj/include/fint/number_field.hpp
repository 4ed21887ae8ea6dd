#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fint/rational.hpp"

namespace fint {

// K = Q(theta) presented by a monic minimal polynomial, coefficients in
// ascending degree (last coefficient 1).  Degree 1 denotes K = Q itself.
// Elements are coordinate vectors w.r.t. the power basis 1, theta, ...,
// theta^{d-1}.
class NumberField {
public:
    NumberField(std::string generator_name, std::vector<Rational> min_poly)
        : generator_(std::move(generator_name)), min_poly_(std::move(min_poly)) {
        if (min_poly_.size() < 2) throw input_error("min_poly must have degree >= 1");
        if (min_poly_.back() != 1) throw input_error("min_poly must be monic");
        check_no_rational_root();
    }

    static std::shared_ptr<const NumberField> rationals() {
        // x: theta = 0, so K = Q.
        return std::make_shared<NumberField>("x", std::vector<Rational>{0, 1});
    }

    int degree() const { return static_cast<int>(min_poly_.size()) - 1; }
    const std::string& generator() const { return generator_; }
    const std::vector<Rational>& min_poly() const { return min_poly_; }

    bool operator==(const NumberField& o) const {
        return generator_ == o.generator_ && min_poly_ == o.min_poly_;
    }

private:
    // Rational-root sanity check for degree 2 and 3 (degree 1 is Q by
    // convention, reducibility is irrelevant there).  Full irreducibility
    // testing is the user's responsibility.
    void check_no_rational_root() const {
        int d = degree();
        if (d < 2 || d > 3) return;
        // Clear denominators to an integer polynomial a_0 + ... + a_d x^d.
        Integer den(1);
        for (const auto& c : min_poly_) den = lcm(den, Integer(c.get_den()));
        std::vector<Integer> a;
        for (const auto& c : min_poly_) a.push_back(Integer(c.get_num()) * (den / c.get_den()));
        auto divisors = [](Integer v) {
            std::vector<Integer> out;
            if (v < 0) v = -v;
            if (v == 0) return out;
            const Integer limit = 1000000;
            for (Integer i = 1; i * i <= v && i <= limit; ++i) {
                if (v % i == 0) {
                    out.push_back(i);
                    out.push_back(v / i);
                }
            }
            return out;
        };
        auto eval_zero = [&](const Rational& r) {
            Rational acc = 0, pw = 1;
            for (const auto& ai : a) {
                acc += Rational(ai) * pw;
                pw *= r;
            }
            return acc == 0;
        };
        if (a[0] == 0) throw input_error("min_poly has root 0 (reducible)");
        for (const auto& p : divisors(a[0]))
            for (const auto& q : divisors(a.back()))
                for (int s : {1, -1}) {
                    Rational r(p * s, q);
                    r.canonicalize();
                    if (eval_zero(r))
                        throw input_error("min_poly has rational root " + to_string(r) +
                                          " (reducible)");
                }
    }

    std::string generator_;
    std::vector<Rational> min_poly_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class NumberFieldElement {
public:
    NumberFieldElement(FieldPtr field, std::vector<Rational> coords)
        : field_(std::move(field)), coords_(std::move(coords)) {
        if (static_cast<int>(coords_.size()) != field_->degree())
            throw input_error("coordinate vector length does not match field degree");
    }

    static NumberFieldElement zero(const FieldPtr& f) {
        return NumberFieldElement(f, std::vector<Rational>(f->degree(), 0));
    }
    static NumberFieldElement one(const FieldPtr& f) {
        std::vector<Rational> c(f->degree(), 0);
        c[0] = 1;
        return NumberFieldElement(f, std::move(c));
    }
    static NumberFieldElement from_rational(const FieldPtr& f, const Rational& q) {
        std::vector<Rational> c(f->degree(), 0);
        c[0] = q;
        return NumberFieldElement(f, std::move(c));
    }
    static NumberFieldElement generator(const FieldPtr& f) {
        if (f->degree() < 2)
            throw input_error("field of degree 1 has no nontrivial generator");
        std::vector<Rational> c(f->degree(), 0);
        c[1] = 1;
        return NumberFieldElement(f, std::move(c));
    }

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (c != 0) return false;
        return true;
    }

    bool operator==(const NumberFieldElement& o) const {
        check_same_field(o);
        return coords_ == o.coords_;
    }

    NumberFieldElement operator+(const NumberFieldElement& o) const {
        check_same_field(o);
        std::vector<Rational> c = coords_;
        for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
        return NumberFieldElement(field_, std::move(c));
    }

    NumberFieldElement operator-(const NumberFieldElement& o) const {
        check_same_field(o);
        std::vector<Rational> c = coords_;
        for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
        return NumberFieldElement(field_, std::move(c));
    }

    NumberFieldElement operator-() const {
        std::vector<Rational> c = coords_;
        for (auto& x : c) x = -x;
        return NumberFieldElement(field_, std::move(c));
    }

    NumberFieldElement scaled(const Rational& q) const {
        std::vector<Rational> c = coords_;
        for (auto& x : c) x *= q;
        return NumberFieldElement(field_, std::move(c));
    }

    // Product reduced modulo min_poly; result degree < d.
    NumberFieldElement operator*(const NumberFieldElement& o) const {
        check_same_field(o);
        int d = field_->degree();
        std::vector<Rational> prod(2 * d - 1, 0);
        for (int i = 0; i < d; ++i) {
            if (coords_[i] == 0) continue;
            for (int j = 0; j < d; ++j) prod[i + j] += coords_[i] * o.coords_[j];
        }
        // Reduce top-down: theta^d = -(m_0 + m_1 theta + ... + m_{d-1} theta^{d-1}).
        const auto& m = field_->min_poly();
        for (int i = 2 * d - 2; i >= d; --i) {
            if (prod[i] == 0) continue;
            Rational c = prod[i];
            prod[i] = 0;
            for (int j = 0; j < d; ++j) prod[i - d + j] -= c * m[j];
        }
        prod.resize(d);
        return NumberFieldElement(field_, std::move(prod));
    }

    NumberFieldElement pow(unsigned e) const {
        NumberFieldElement r = one(field_);
        NumberFieldElement b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            b = b * b;
            e >>= 1u;
        }
        return r;
    }

    std::string str() const {
        std::string out;
        const std::string& g = field_->generator();
        for (int i = 0; i < static_cast<int>(coords_.size()); ++i) {
            if (coords_[i] == 0) continue;
            std::string term = to_string(coords_[i]);
            if (i > 0) {
                if (coords_[i] == 1)
                    term = g;
                else if (coords_[i] == -1)
                    term = "-" + g;
                else
                    term += "*" + g;
                if (i > 1) term += "^" + std::to_string(i);
            }
            if (!out.empty() && term[0] != '-') out += "+";
            out += term;
        }
        return out.empty() ? "0" : out;
    }

private:
    void check_same_field(const NumberFieldElement& o) const {
        if (field_ != o.field_ && !(*field_ == *o.field_))
            throw input_error("number field mismatch");
    }

    FieldPtr field_;
    std::vector<Rational> coords_;
};

inline NumberFieldElement nf_mul(const NumberFieldElement& a, const NumberFieldElement& b) {
    return a * b;
}

struct EigenvalueSpec {
    FieldPtr field;
    std::vector<NumberFieldElement> lambda;

    EigenvalueSpec(FieldPtr f, std::vector<NumberFieldElement> l)
        : field(std::move(f)), lambda(std::move(l)) {
        if (lambda.empty()) throw input_error("eigenvalue vector must be nonempty");
        for (const auto& e : lambda)
            if (!(*e.field() == *field)) throw input_error("eigenvalue outside declared field");
    }

    int n() const { return static_cast<int>(lambda.size()); }
};

// Column i of C holds the power-basis coordinates of lambda_i (d x n).
inline std::vector<std::vector<Rational>> coordinate_matrix(const EigenvalueSpec& spec) {
    int d = spec.field->degree();
    int n = spec.n();
    std::vector<std::vector<Rational>> C(d, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) C[j][i] = spec.lambda[i].coords()[j];
    return C;
}

}  // namespace fint
