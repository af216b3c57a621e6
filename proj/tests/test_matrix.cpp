#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "evildet/intmat.hpp"

using namespace evildet;

namespace {

// Independent oracle: Laplace cofactor expansion, memoized over column
// subsets so 9x9 instances stay cheap.
mpz_class det_cofactor(const IntMatrix& m) {
    const std::size_t n = m.rows();
    REQUIRE(n <= 20);
    std::vector<mpz_class> f(std::size_t(1) << n);
    f[0] = 1;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        const std::size_t r = static_cast<std::size_t>(__builtin_popcount(s)) - 1;
        mpz_class acc = 0;
        int pos = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!((s >> j) & 1)) continue;
            if (m.at(r, j) != 0) {
                mpz_class term = m.at(r, j) * f[s ^ (1u << j)];
                acc += ((r + pos) % 2 == 0) ? term : -term;
            }
            ++pos;
        }
        f[s] = acc;
    }
    return f[(std::size_t(1) << n) - 1];
}

IntMatrix random_pm1_matrix(std::mt19937& rng, std::size_t side) {
    std::uniform_int_distribution<int> dist(-1, 1);
    IntMatrix m(side, side);
    for (std::size_t i = 0; i < side; ++i)
        for (std::size_t j = 0; j < side; ++j) m.at(i, j) = dist(rng);
    return m;
}

} // namespace

TEST_CASE("build_chapman against the Legendre oracle") {
    // p = 5: squares mod 5 are {1, 4}
    IntMatrix c5 = build_chapman(OddPrime(5));
    REQUIRE(c5.rows() == 3);
    const int expected5[3][3] = {{0, 1, -1}, {1, 0, 1}, {-1, 1, 0}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(c5.at(i, j) == expected5[i][j]);

    // p = 3: squares mod 3 are {1}, so entry(1,0) = legendre(-1,3) = -1
    IntMatrix c3 = build_chapman(OddPrime(3));
    REQUIRE(c3.rows() == 2);
    CHECK(c3.at(0, 0) == 0);
    CHECK(c3.at(0, 1) == 1);
    CHECK(c3.at(1, 0) == -1);
    CHECK(c3.at(1, 1) == 0);

    for (std::uint64_t pv : {7, 13, 17}) {
        IntMatrix c = build_chapman(OddPrime(pv));
        for (std::size_t i = 0; i < c.rows(); ++i) CHECK(c.at(i, i) == 0);
    }
}

TEST_CASE("Chapman symmetry for p == 1 (mod 4): entry(i,j) = entry(n-j, n-i)") {
    for (std::uint64_t pv : {5, 13, 17, 29}) {
        IntMatrix c = build_chapman(OddPrime(pv));
        const std::size_t n = c.rows() - 1;
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; j <= n; ++j)
                CHECK(c.at(i, j) == c.at(n - j, n - i));
    }
}

TEST_CASE("det_bareiss basics and golden Chapman values from the cofactor oracle") {
    CHECK(det_bareiss(IntMatrix::identity(4)) == 1);

    IntMatrix c5 = build_chapman(OddPrime(5));
    mpz_class oracle5 = det_cofactor(c5);
    CHECK(oracle5 == -2);  // frozen golden value
    CHECK(det_bareiss(c5) == oracle5);

    IntMatrix c13 = build_chapman(OddPrime(13));
    mpz_class oracle13 = det_cofactor(c13);
    CHECK(oracle13 == -18);  // frozen golden value
    CHECK(det_bareiss(c13) == oracle13);

    IntMatrix c17 = build_chapman(OddPrime(17));
    mpz_class oracle17 = det_cofactor(c17);
    CHECK(oracle17 == -4);  // frozen golden value
    CHECK(det_bareiss(c17) == oracle17);

    IntMatrix zero(3, 3);
    CHECK(det_bareiss(zero) == 0);
}

TEST_CASE("hadamard_bound") {
    CHECK(hadamard_bound(IntMatrix::identity(3)) == 1);

    IntMatrix ones(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) ones.at(i, j) = 1;
    CHECK(hadamard_bound(ones) == 2);  // sqrt(2) * sqrt(2)

    // Chapman rows have squared norm n, so B <= (n+1)^((n+1)/2)
    for (std::uint64_t pv : {5, 13, 17}) {
        OddPrime p(pv);
        IntMatrix c = build_chapman(p);
        mpz_class cap;
        mpz_ui_pow_ui(cap.get_mpz_t(), c.rows(), (c.rows() + 1) / 2);
        CHECK(hadamard_bound(c) <= cap);
        CHECK(abs(det_bareiss(c)) <= hadamard_bound(c));
    }
}

TEST_CASE("det_modular matches det_bareiss and the theorem spot values") {
    IntMatrix c5 = build_chapman(OddPrime(5));
    CHECK(det_modular(c5) == -2);
    CHECK(det_modular(c5) == det_bareiss(c5));

    IntMatrix c17 = build_chapman(OddPrime(17));
    CHECK(det_modular(c17) == -4);  // Theorem predicts -a with eps = 4 + sqrt(17)

    IntMatrix zero(3, 3);
    CHECK(det_modular(zero) == 0);
}

TEST_CASE("cross-algorithm equality on random {-1,0,1} matrices") {
    std::mt19937 rng(20260825);
    for (int iter = 0; iter < 40; ++iter) {
        const std::size_t side = 1 + rng() % 40;
        IntMatrix m = random_pm1_matrix(rng, side);
        const mpz_class db = det_bareiss(m);
        CAPTURE(iter); CAPTURE(side);
        CHECK(db == det_modular(m));
        CHECK(abs(db) <= hadamard_bound(m));
        if (side <= 7) CHECK(db == det_cofactor(m));
    }
}

TEST_CASE("transpose invariance and row-swap sign flip") {
    std::mt19937 rng(7);
    IntMatrix m = random_pm1_matrix(rng, 8);
    CHECK(det_bareiss(m) == det_bareiss(m.transposed()));
    CHECK(det_modular(m) == det_modular(m.transposed()));

    IntMatrix swapped = m;
    swapped.swap_rows(2, 5);
    CHECK(det_bareiss(swapped) == -det_bareiss(m));
    CHECK(det_modular(swapped) == -det_modular(m));
}

TEST_CASE("det_modular with several workers agrees") {
    IntMatrix c = build_chapman(OddPrime(101));
    CHECK(det_modular(c, 4) == det_modular(c, 1));
    CHECK(det_modular(c, 4) == det_bareiss(c));
}

TEST_CASE("det_rational") {
    RatMatrix half(1, 1);
    half.at(0, 0) = mpq_class(1, 2);
    CHECK(det_rational(half) == mpq_class(1, 2));

    RatMatrix m(2, 2);
    m.at(0, 0) = 1; m.at(0, 1) = 2;
    m.at(1, 0) = 3; m.at(1, 1) = 4;
    CHECK(det_rational(m) == -2);

    // 2x2 Cauchy-kernel matrix 1/(1 + u_i v_j), u = (1/2, 1/3), v = (1/5, 1/7)
    const mpq_class u[2] = {mpq_class(1, 2), mpq_class(1, 3)};
    const mpq_class v[2] = {mpq_class(1, 5), mpq_class(1, 7)};
    RatMatrix k(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) k.at(i, j) = 1 / (1 + u[i] * v[j]);
    mpq_class rhs = (u[0] - u[1]) * (v[1] - v[0]);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) rhs /= 1 + u[i] * v[j];
    CHECK(det_rational(k) == rhs);
}
