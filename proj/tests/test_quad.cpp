#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "evildet/intmat.hpp"
#include "evildet/quad.hpp"

using namespace evildet;

namespace {

// Brute-force oracle: smallest unit > 1 by scanning beta upward and testing
// alpha^2 - p*beta^2 = +-4.
QuadElem smallest_unit_oracle(const OddPrime& p) {
    const mpz_class pz(static_cast<unsigned long>(p.value()));
    for (mpz_class beta = 1;; ++beta) {
        for (int t : {-4, 4}) {
            mpz_class a2 = pz * beta * beta + t;
            if (a2 < 1) continue;
            mpz_class alpha, rem;
            mpz_sqrtrem(alpha.get_mpz_t(), rem.get_mpz_t(), a2.get_mpz_t());
            if (rem == 0 && (alpha - beta) % 2 == 0)
                return QuadElem(alpha, beta, p);
        }
    }
}

} // namespace

TEST_CASE("QuadElem parity validation") {
    OddPrime p5(5);
    CHECK_NOTHROW(QuadElem(1, 1, p5));
    CHECK_NOTHROW(QuadElem(4, 2, p5));
    CHECK_THROWS_AS(QuadElem(1, 2, p5), std::invalid_argument);
    // half-integer coordinates only exist for p == 1 (mod 4)
    OddPrime p7(7);
    CHECK_NOTHROW(QuadElem(2, 2, p7));
    CHECK_THROWS_AS(QuadElem(1, 1, p7), std::invalid_argument);
}

TEST_CASE("quad arithmetic and norm") {
    OddPrime p(5);
    QuadElem w(1, 1, p);  // (1 + sqrt 5)/2, the golden ratio
    CHECK(norm(w) == -1);
    QuadElem w2 = quad_mul(w, w);
    CHECK(w2 == QuadElem(3, 1, p));  // w^2 = w + 1
    CHECK(quad_pow(w, 2) == w2);
    CHECK(quad_pow(w, 0) == QuadElem(2, 0, p));

    // norm is multiplicative
    QuadElem x(6, 2, p), y(3, 1, p);
    CHECK(norm(quad_mul(x, y)) == norm(x) * norm(y));
    CHECK(norm(quad_pow(x, 5)) == norm(x) * norm(x) * norm(x) * norm(x) * norm(x));

    // conjugation: x * conj(x) = norm(x)
    QuadElem prod = quad_mul(x, x.conjugate());
    CHECK(prod.beta() == 0);
    CHECK(prod.alpha() == 2 * norm(x));
}

TEST_CASE("fundamental_unit matches the brute-force oracle") {
    // eps_5 = (1 + sqrt 5)/2, eps_13 = (3 + sqrt 13)/2, eps_17 = 4 + sqrt 17
    CHECK(fundamental_unit(OddPrime(5)) == QuadElem(1, 1, OddPrime(5)));
    CHECK(fundamental_unit(OddPrime(13)) == QuadElem(3, 1, OddPrime(13)));
    CHECK(fundamental_unit(OddPrime(17)) == QuadElem(8, 2, OddPrime(17)));

    for (const OddPrime& p : primes_in_class(200, 1, 4)) {
        QuadElem eps = fundamental_unit(p);
        CAPTURE(p.value());
        CHECK(eps == smallest_unit_oracle(p));
        CHECK(norm(eps) == -1);
    }
}

TEST_CASE("class_number") {
    CHECK(class_number(OddPrime(5)) == 1);
    CHECK(class_number(OddPrime(13)) == 1);
    CHECK(class_number(OddPrime(17)) == 1);
    CHECK(class_number(OddPrime(401)) == 5);
    // first p == 1 (mod 4) with h = 3; cross-checked below through det C = -a
    CHECK(class_number(OddPrime(229)) == 3);
    for (const OddPrime& p : primes_in_class(300, 1, 4))
        CHECK(class_number(p) % 2 == 1);
}

TEST_CASE("compute_a examples") {
    // p = 5: eps^{3h} = eps^3 = 2 + sqrt 5
    PellPair a5 = compute_a(OddPrime(5));
    CHECK(a5.a == 2);
    CHECK(a5.b == 1);

    // p = 13: eps^3 = 18 + 5 sqrt 13
    PellPair a13 = compute_a(OddPrime(13));
    CHECK(a13.a == 18);
    CHECK(a13.b == 5);

    // p = 17: eps = 4 + sqrt 17 already has integer coordinates
    PellPair a17 = compute_a(OddPrime(17));
    CHECK(a17.a == 4);
    CHECK(a17.b == 1);

    for (const OddPrime& p : primes_in_class(150, 1, 4)) {
        PellPair ab = compute_a(p);
        CAPTURE(p.value());
        CHECK(ab.a > 0);
        CHECK(ab.b > 0);
        mpz_class pz(static_cast<unsigned long>(p.value()));
        CHECK(ab.a * ab.a - pz * ab.b * ab.b == -1);
    }
}

TEST_CASE("h = 3 at p = 229 is consistent with det C = -a") {
    OddPrime p(229);
    QuadElem eps = fundamental_unit(p);
    std::uint64_t h = class_number(p);
    REQUIRE(h == 3);
    PellPair ab = compute_a(p, eps, h);
    CHECK(det_modular(build_chapman(p)) == -ab.a);
    // the wrong exponent (h = 1) would give a different, smaller a
    PellPair wrong = compute_a(p, eps, 1);
    CHECK(wrong.a != ab.a);
}

TEST_CASE("eps^k - eps^{-k} lies in Z sqrt(p) when k is odd times the unit norm") {
    // with N(eps) = -1, eps^{-1} = -conj(eps), so eps^k - eps^{-k} for odd k
    // is rational: 2a exactly when eps^k = a + b sqrt p
    OddPrime p(13);
    QuadElem eps = fundamental_unit(p);
    QuadElem ek = quad_pow(eps, 3);  // 18 + 5 sqrt 13
    CHECK(norm(ek) == -1);
    // eps^{-3} = -conj(eps^3), so eps^3 - eps^{-3} = eps^3 + conj(eps^3)
    // = alpha(eps^3) = 2a = 36
    CHECK(ek.alpha() + ek.conjugate().alpha() == 2 * 36);
    CHECK(ek.alpha() == 36);
}
