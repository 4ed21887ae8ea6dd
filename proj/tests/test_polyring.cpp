#include <catch_amalgamated.hpp>

#include <random>

#include "fint/polynomial.hpp"

using namespace fint;

namespace {

Monomial m(std::initializer_list<int> e) { return Monomial(e); }

Monomial random_mono(std::mt19937& rng, size_t n, int hi) {
    Monomial r(n);
    for (auto& e : r) e = static_cast<int>(rng() % (hi + 1));
    return r;
}

}  // namespace

TEST_CASE("lex order axioms") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_mono(rng, 4, 5), b = random_mono(rng, 4, 5), c = random_mono(rng, 4, 5);
        // totality + antisymmetry
        int ab = lex_cmp(a, b);
        CHECK(ab == -lex_cmp(b, a));
        if (a == b) CHECK(ab == 0);
        // multiplicative: a > b implies ac > bc
        if (ab > 0) CHECK(lex_cmp(mono_mul(a, c), mono_mul(b, c)) > 0);
        // 1 is smallest
        Monomial one(4, 0);
        if (a != one) CHECK(lex_cmp(a, one) > 0);
        // transitivity spot check
        if (ab > 0 && lex_cmp(b, c) > 0) CHECK(lex_cmp(a, c) > 0);
    }
}

TEST_CASE("monomial arithmetic") {
    CHECK(mono_divides(m({1, 0, 2}), m({1, 1, 2})));
    CHECK_FALSE(mono_divides(m({2, 0, 0}), m({1, 5, 5})));
    CHECK(mono_mul(m({1, 2}), m({3, 0})) == m({4, 2}));
    CHECK(mono_div(m({4, 2}), m({3, 0})) == m({1, 2}));
    CHECK(mono_lcm(m({1, 3}), m({2, 1})) == m({2, 3}));
    CHECK(mono_coprime(m({1, 0}), m({0, 2})));
    CHECK_FALSE(mono_coprime(m({1, 1}), m({0, 2})));
    CHECK(total_degree(m({1, 2, 3})) == 6);
}

TEST_CASE("variable blocks") {
    VariableSet ring;
    ring.add_block("t", {"t_1", "t_2"});
    ring.add_block("x", {"x_1", "x_2", "x_3"});
    CHECK(ring.total() == 5);
    CHECK(ring.block("x").begin == 2);
    CHECK(ring.block("x").end == 5);
    CHECK_THROWS_AS(ring.block("nope"), input_error);
}

TEST_CASE("polynomial arithmetic over Q") {
    RationalField F;
    // (x + y)(x - y) = x^2 - y^2
    auto xpy = make_poly(F, {{m({1, 0}), Rational(1)}, {m({0, 1}), Rational(1)}});
    auto xmy = make_poly(F, {{m({1, 0}), Rational(1)}, {m({0, 1}), Rational(-1)}});
    auto prod = poly_mul(F, xpy, xmy);
    auto want = make_poly(F, {{m({2, 0}), Rational(1)}, {m({0, 2}), Rational(-1)}});
    CHECK(prod == want);
    CHECK(poly_sub(F, prod, want).is_zero());
    // cancellation inside make_poly
    auto z = make_poly(F, {{m({1, 1}), Rational(2)}, {m({1, 1}), Rational(-2)}});
    CHECK(z.is_zero());
}

TEST_CASE("prime field") {
    PrimeField F(31991);
    CHECK(F.mul(31990, 31990) == 1);  // (-1)^2
    std::mt19937 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        long a = 1 + static_cast<long>(rng() % (31991 - 1));
        CHECK(F.mul(a, F.inv(a)) == 1);
    }
    CHECK(F.add(31990, 1) == 0);
    CHECK(F.sub(0, 1) == 31990);
    CHECK(F.from_int(-1) == 31990);
    CHECK_THROWS_AS(F.inv(0), input_error);
    CHECK_THROWS_AS(PrimeField(2), input_error);
}

TEST_CASE("division with remainder") {
    RationalField F;
    // f = x^2 y + x y^2 + y^2, G = {xy - 1, y^2 - 1} (lex x > y): rem = x + y + 1
    auto f = make_poly(F, {{m({2, 1}), Rational(1)}, {m({1, 2}), Rational(1)},
                           {m({0, 2}), Rational(1)}});
    auto g1 = make_poly(F, {{m({1, 1}), Rational(1)}, {m({0, 0}), Rational(-1)}});
    auto g2 = make_poly(F, {{m({0, 2}), Rational(1)}, {m({0, 0}), Rational(-1)}});
    auto r = normal_form(F, f, {g1, g2});
    auto want = make_poly(F, {{m({1, 0}), Rational(1)}, {m({0, 1}), Rational(1)},
                              {m({0, 0}), Rational(1)}});
    CHECK(r == want);
}

TEST_CASE("s polynomial") {
    RationalField F;
    auto f = make_poly(F, {{m({2, 0}), Rational(1)}, {m({0, 1}), Rational(-1)}});  // x^2 - y
    auto g = make_poly(F, {{m({1, 1}), Rational(1)}, {m({0, 0}), Rational(-1)}});  // xy - 1
    auto s = s_polynomial(F, f, g);
    // lcm = x^2 y: y*f - x*g = -y^2 + x
    auto want = make_poly(F, {{m({1, 0}), Rational(1)}, {m({0, 2}), Rational(-1)}});
    CHECK(s == want);
    CHECK_THROWS_AS(s_polynomial(F, Polynomial<RationalField>{}, g), input_error);
}

TEST_CASE("rendering matches the session style") {
    std::vector<std::string> names = {"x_4", "x_5", "y_4", "y_5"};
    RationalField F;
    auto b = make_poly(F, {{m({3, 2, 0, 0}), Rational(1)}, {m({0, 0, 3, 2}), Rational(-1)}});
    CHECK(render_poly(F, b, names) == "x_4^3*x_5^2-y_4^3*y_5^2");
    CHECK(render_monomial(m({0, 0, 0, 0}), names) == "1");
    auto c = make_poly(F, {{m({1, 0, 0, 0}), Rational(-2)}, {m({0, 0, 0, 0}), Rational(1)}});
    CHECK(render_poly(F, c, names) == "-2*x_4+1");
}
