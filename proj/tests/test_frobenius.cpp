#include <doctest.h>

#include "test_support.hpp"

using namespace hamfact;
using namespace testsupport;

namespace {

void check_form(const RatMatrix& m, const FrobeniusForm& f) {
    CHECK(inverse(f.transform) * m * f.transform == f.form);
    UniPoly prod = UniPoly::one();
    for (std::size_t i = 0; i < f.invariant_factors.size(); ++i) {
        if (i + 1 < f.invariant_factors.size())
            CHECK(f.invariant_factors[i].divides(f.invariant_factors[i + 1]));
        prod = prod * f.invariant_factors[i];
    }
    CHECK(prod == char_poly(m));
}

}  // namespace

TEST_CASE("companion matrix convention") {
    const UniPoly p({Rational(1), Rational(0), Rational(1)});  // t^2 + 1
    const RatMatrix c = companion_matrix(p);
    CHECK(c == RatMatrix{{Rational(0), Rational(-1)}, {Rational(1), Rational(0)}});
    CHECK(char_poly(c) == p);
}

TEST_CASE("a companion matrix is its own canonical form") {
    const UniPoly p({Rational(1), Rational(0), Rational(1)});
    const RatMatrix c = companion_matrix(p);
    const FrobeniusForm f = frobenius(c);
    REQUIRE(f.invariant_factors.size() == 1);
    CHECK(f.invariant_factors[0] == p);
    CHECK(f.form == c);
    CHECK(f.transform == RatMatrix::identity(2));
}

TEST_CASE("distinct eigenvalues collapse to a single block") {
    const RatMatrix m = RatMatrix::diagonal({Rational(1), Rational(2)});
    const FrobeniusForm f = frobenius(m);
    REQUIRE(f.invariant_factors.size() == 1);
    CHECK(f.invariant_factors[0] == UniPoly({Rational(2), Rational(-3), Rational(1)}));
    check_form(m, f);
}

TEST_CASE("conjugated companion blocks round-trip") {
    Rng rng(5);
    const UniPoly p({Rational(3, 4), Rational(0), Rational(3), Rational(0), Rational(1)});
    const RatMatrix c = companion_matrix(p);
    const RatMatrix lam = rand_invertible(rng, 4);
    const RatMatrix m = lam * c * inverse(lam);
    const FrobeniusForm f = frobenius(m);
    REQUIRE(f.invariant_factors.size() == 1);
    CHECK(f.invariant_factors[0] == p);
    check_form(m, f);
}

TEST_CASE("repeated structure produces several invariant factors") {
    // two identical rotation blocks: invariant factors t^2+1, t^2+1
    const UniPoly rot({Rational(1), Rational(0), Rational(1)});
    const RatMatrix m = block_diag({companion_matrix(rot), companion_matrix(rot)});
    const FrobeniusForm f = frobenius(m);
    REQUIRE(f.invariant_factors.size() == 2);
    CHECK(f.invariant_factors[0] == rot);
    CHECK(f.invariant_factors[1] == rot);
    check_form(m, f);

    // nilpotent with block sizes 2 and 1: factors t, t^2
    RatMatrix nil(3, 3);
    nil(0, 1) = Rational(1);
    const FrobeniusForm g = frobenius(nil);
    REQUIRE(g.invariant_factors.size() == 2);
    CHECK(g.invariant_factors[0] == UniPoly::t());
    CHECK(g.invariant_factors[1] == UniPoly({Rational(0), Rational(0), Rational(1)}));
    check_form(nil, g);
}

TEST_CASE("frobenius handles random matrices exactly") {
    Rng rng(31);
    for (int iter = 0; iter < 25; ++iter) {
        const std::size_t n = 1 + rng() % 6;
        const RatMatrix m = rand_matrix(rng, n, n, -3, 3);
        check_form(m, frobenius(m));
    }
    // structured cases: diagonal with repeats, zero matrix
    check_form(RatMatrix::zero(3, 3), frobenius(RatMatrix::zero(3, 3)));
    const RatMatrix d = RatMatrix::diagonal({Rational(2), Rational(2), Rational(5)});
    const FrobeniusForm f = frobenius(d);
    CHECK(f.invariant_factors.size() == 2);
    check_form(d, f);
}

TEST_CASE("known invariant factor chains survive random conjugation") {
    Rng rng(53);
    const UniPoly p({Rational(-1), Rational(1)});            // t - 1
    const UniPoly q({Rational(-2), Rational(1)});            // t - 2
    const UniPoly p2 = p * p;

    struct Case {
        RatMatrix m;
        std::vector<UniPoly> factors;
    };
    std::vector<Case> cases;
    // companion(p) + companion(p q) -> factors p, p q
    cases.push_back({block_diag({companion_matrix(p), companion_matrix(p * q)}), {p, p * q}});
    // two equal Jordan-type blocks -> (t-1)^2 twice
    cases.push_back({block_diag({companion_matrix(p2), companion_matrix(p2)}), {p2, p2}});
    // nilpotent with chain sizes 3 and 1 -> t, t^3
    {
        RatMatrix nil(4, 4);
        nil(0, 1) = Rational(1);
        nil(1, 2) = Rational(1);
        cases.push_back({nil, {UniPoly::t(), UniPoly({Rational(0), Rational(0), Rational(0), Rational(1)})}});
    }
    // diag(2, 2, 2) -> t-2 three times
    cases.push_back({RatMatrix::diagonal({Rational(2), Rational(2), Rational(2)}),
                     {q, q, q}});

    for (const auto& c : cases) {
        for (int iter = 0; iter < 5; ++iter) {
            const RatMatrix lam = rand_invertible(rng, c.m.rows(), -3, 3);
            const RatMatrix m = lam * c.m * inverse(lam);
            const FrobeniusForm f = frobenius(m);
            CHECK(f.invariant_factors == c.factors);
            check_form(m, f);
        }
    }
}

TEST_CASE("invariant factors are conjugation invariant") {
    Rng rng(37);
    for (int iter = 0; iter < 10; ++iter) {
        const std::size_t n = 2 + rng() % 4;
        const RatMatrix m = rand_matrix(rng, n, n, -3, 3);
        const RatMatrix lam = rand_invertible(rng, n, -3, 3);
        CHECK(frobenius(m).invariant_factors ==
              frobenius(inverse(lam) * m * lam).invariant_factors);
    }
}

TEST_CASE("even characteristic polynomial check") {
    const RatMatrix damped{{Rational(-1), Rational(-1)}, {Rational(1), Rational(0)}};
    CHECK_FALSE(even_char_poly(damped));
    const RatMatrix undamped{{Rational(0), Rational(-1)}, {Rational(1), Rational(0)}};
    CHECK(even_char_poly(undamped));
    Rng rng(41);
    for (const auto& g : {Rational(0), Rational(1), rand_rational(rng)})
        CHECK(even_char_poly(dual_system_matrix(g, rand_rational(rng))));
}

TEST_CASE("criterion on the worked examples") {
    const RatMatrix damped{{Rational(-1), Rational(-1)}, {Rational(1), Rational(0)}};
    CHECK_FALSE(is_hamiltonian_candidate(damped));
    CHECK(is_hamiltonian_candidate(dual_system_matrix(Rational(1), Rational(1, 2))));
    const RatMatrix rot{{Rational(0), Rational(-1)}, {Rational(1), Rational(0)}};
    CHECK(is_hamiltonian_candidate(rot));
    CHECK_THROWS_AS(is_hamiltonian_candidate(RatMatrix::zero(2, 2)), SingularMatrixError);
    CHECK_THROWS_AS(is_hamiltonian_candidate(RatMatrix::identity(3)), DimensionError);
}

TEST_CASE("criterion properties on random populations") {
    Rng rng(43);
    for (int iter = 0; iter < 20; ++iter) {
        const std::size_t half = 1 + rng() % 3;
        const RatMatrix m = rand_hamiltonian(rng, half);
        CHECK(is_hamiltonian_candidate(m));
        CHECK(even_char_poly(m));
    }
}

TEST_CASE("the canonical transforms witness the conjugacy of M and -M") {
    Rng rng(47);
    for (int iter = 0; iter < 10; ++iter) {
        const std::size_t half = 1 + rng() % 3;
        const RatMatrix m = rand_hamiltonian(rng, half);
        const RatMatrix gamma = frobenius(m).transform * inverse(frobenius(-m).transform);
        CHECK(inverse(gamma) * m * gamma == -m);
    }
}
