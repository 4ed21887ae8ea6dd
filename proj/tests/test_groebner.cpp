#include <catch_amalgamated.hpp>

#include <random>

#include "fint/groebner.hpp"

using namespace fint;

namespace {

Monomial m(std::initializer_list<int> e) { return Monomial(e); }

Binomial bin(std::initializer_list<int> lead, std::initializer_list<int> tail) {
    return Binomial{Monomial(lead), Monomial(tail)};
}

template <class F>
Polynomial<F> from_binomial(const F& field, const Binomial& b) {
    return make_poly(field, {{b.lead, field.one()}, {b.tail, field.neg(field.one())}});
}

}  // namespace

TEST_CASE("reduced basis of a classic lex example") {
    // <x^2 - y, x^3 - z>, lex x > y > z:
    // reduced GB {x^2 - y, xy - z, xz - y^2, y^3 - z^2}
    auto gb = binomial_groebner({bin({2, 0, 0}, {0, 1, 0}), bin({3, 0, 0}, {0, 0, 1})});
    std::vector<Binomial> want = {
        bin({0, 3, 0}, {0, 0, 2}),
        bin({1, 0, 1}, {0, 2, 0}),
        bin({1, 1, 0}, {0, 0, 1}),
        bin({2, 0, 0}, {0, 1, 0}),
    };
    CHECK(gb == want);
}

TEST_CASE("basis leads reduce every ideal member") {
    // every S-polynomial of the output reduces to zero (Buchberger criterion)
    auto gb = binomial_groebner({bin({2, 0, 0}, {0, 1, 0}), bin({3, 0, 0}, {0, 0, 1}),
                                 bin({1, 1, 1}, {0, 0, 0})});
    RationalField F;
    std::vector<Polynomial<RationalField>> G;
    for (const auto& b : gb) G.push_back(from_binomial(F, b));
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j)
            CHECK(normal_form(F, s_polynomial(F, G[i], G[j]), G).is_zero());
}

TEST_CASE("random lattice ideals satisfy the Buchberger criterion") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 3 + static_cast<int>(rng() % 3);
        std::vector<Binomial> gens;
        int k = 2 + static_cast<int>(rng() % 3);
        for (int g = 0; g < k; ++g) {
            Monomial a(n, 0), b(n, 0);
            for (int v = 0; v < n; ++v) {
                int e = static_cast<int>(rng() % 3);
                (rng() % 2 ? a : b)[v] = e;
            }
            if (a == b) continue;
            if (lex_cmp(a, b) < 0) std::swap(a, b);
            gens.push_back({a, b});
        }
        if (gens.empty()) continue;
        auto gb = binomial_groebner(gens, 500000);
        RationalField F;
        std::vector<Polynomial<RationalField>> G;
        for (const auto& b : gb) G.push_back(from_binomial(F, b));
        for (size_t i = 0; i < G.size(); ++i)
            for (size_t j = i + 1; j < G.size(); ++j)
                CHECK(normal_form(F, s_polynomial(F, G[i], G[j]), G).is_zero());
        // generators reduce to zero against the basis
        for (const auto& g : gens)
            CHECK(normal_form(F, from_binomial(F, g), G).is_zero());
        // determinism
        CHECK(binomial_groebner(gens, 500000) == gb);
    }
}

TEST_CASE("pair budget is enforced") {
    std::vector<Binomial> gens = {bin({2, 0, 0, 1}, {0, 1, 1, 0}), bin({1, 2, 0, 0}, {0, 0, 2, 1}),
                                  bin({0, 1, 2, 0}, {1, 0, 0, 2})};
    CHECK_THROWS_AS(binomial_groebner(gens, 1), budget_error);
    CHECK_NOTHROW(binomial_groebner(gens, 500000));
}

TEST_CASE("binomial fast path agrees with generic Buchberger") {
    RationalField F;
    VariableSet ring;
    ring.add_block("x", {"x", "y", "z"});
    std::vector<Binomial> gens = {bin({2, 0, 0}, {0, 1, 0}), bin({3, 0, 0}, {0, 0, 1})};
    std::vector<Polynomial<RationalField>> polys;
    for (const auto& b : gens) polys.push_back(from_binomial(F, b));

    auto fast = buchberger(F, ring, polys);  // dispatches to the exponent engine
    auto slow = detail::generic_buchberger(F, ring, polys, kDefaultGbBudget);
    CHECK(fast.elements == slow.elements);
}

TEST_CASE("generic Buchberger on a non-binomial ideal") {
    RationalField F;
    VariableSet ring;
    ring.add_block("x", {"x", "y"});
    // <x^2 + y^2 - 1, x - y>: lex GB {x - y, y^2 - 1/2}
    auto f = make_poly(F, {{m({2, 0}), Rational(1)}, {m({0, 2}), Rational(1)},
                           {m({0, 0}), Rational(-1)}});
    auto g = make_poly(F, {{m({1, 0}), Rational(1)}, {m({0, 1}), Rational(-1)}});
    auto gb = buchberger(F, ring, {f, g});
    REQUIRE(gb.elements.size() == 2);
    auto e1 = make_poly(F, {{m({0, 2}), Rational(1)}, {m({0, 0}), Rational(-1, 2)}});
    auto e2 = make_poly(F, {{m({1, 0}), Rational(1)}, {m({0, 1}), Rational(-1)}});
    CHECK(gb.elements[0] == e1);
    CHECK(gb.elements[1] == e2);
    // both inputs reduce to zero
    CHECK(normal_form(F, f, gb.elements).is_zero());
    CHECK(normal_form(F, g, gb.elements).is_zero());
}

TEST_CASE("prime field Groebner run") {
    PrimeField F(31991);
    VariableSet ring;
    ring.add_block("x", {"x", "y", "z"});
    std::vector<Polynomial<PrimeField>> polys = {
        make_poly(F, {{m({2, 0, 0}), F.one()}, {m({0, 1, 0}), F.neg(F.one())}}),
        make_poly(F, {{m({3, 0, 0}), F.one()}, {m({0, 0, 1}), F.neg(F.one())}})};
    auto gb = buchberger(F, ring, polys);
    REQUIRE(gb.elements.size() == 4);
    // same basis as over Q (the leads are field-independent here)
    CHECK(gb.elements[0].lead_monomial() == m({0, 3, 0}));
    CHECK(gb.elements[3].lead_monomial() == m({2, 0, 0}));
}

TEST_CASE("pure binomial extraction") {
    VariableSet ring;
    ring.add_block("t", {"t"});
    ring.add_block("x", {"x_1", "x_2"});
    ring.add_block("z", {"z_1", "z_2"});
    std::vector<Binomial> basis = {
        bin({0, 1, 1, 0, 0}, {0, 0, 0, 1, 1}),  // x_1 x_2 - z_1 z_2: pure
        bin({1, 1, 0, 0, 0}, {0, 0, 0, 1, 0}),  // t x_1 - z_1: not pure
        bin({0, 2, 0, 0, 1}, {0, 0, 1, 2, 0}),  // mixed exponents: not matching
    };
    auto nu = extract_binomials(basis, ring.block("x"), ring.block("z"));
    REQUIRE(nu.size() == 1);
    CHECK(nu[0] == std::vector<int>{1, 1});
}

TEST_CASE("trivial and degenerate inputs") {
    CHECK(binomial_groebner({}).empty());
    // x - x collapses to zero and is dropped
    CHECK(binomial_groebner({bin({1, 0}, {1, 0})}).empty());
    // orientation is normalized even if the caller passes tail > lead
    auto gb = binomial_groebner({bin({0, 1}, {1, 0})});
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == bin({1, 0}, {0, 1}));
}
