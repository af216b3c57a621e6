#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "evildet/cauchy.hpp"
#include "evildet/cyclo.hpp"

using namespace evildet;

namespace {

mpq_class random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

// Rejection-sampled parameter vectors keeping every 1 + u_i v_j (and, for the
// bordered matrix, 1 +- x_i) away from zero, and u_i pairwise distinct.
std::vector<mpq_class> sample_params(std::mt19937& rng, std::size_t m,
                                     bool avoid_pm1) {
    std::vector<mpq_class> u;
    while (u.size() < m) {
        mpq_class c = random_rational(rng);
        if (avoid_pm1 && (c == 1 || c == -1)) continue;
        bool dup = false;
        for (const auto& prev : u)
            if (prev == c) { dup = true; break; }
        if (!dup) u.push_back(c);
    }
    return u;
}

bool cross_ok(const std::vector<mpq_class>& u, const std::vector<mpq_class>& v) {
    for (const auto& a : u)
        for (const auto& b : v)
            if (1 + a * b == 0) return false;
    return true;
}

} // namespace

TEST_CASE("cauchy_kernel_det matches elimination on 1/(1 + u_i v_j)") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 50; ++iter) {
        const std::size_t m = 1 + rng() % 5;
        std::vector<mpq_class> u, v;
        do {
            u = sample_params(rng, m, false);
            v = sample_params(rng, m, false);
        } while (!cross_ok(u, v));
        FieldMatrix<mpq_class> k(m, mpq_class(0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) k.at(i, j) = 1 / (1 + u[i] * v[j]);
        CAPTURE(iter);
        CHECK(field_det(k) == cauchy_kernel_det(u, v));
    }
}

TEST_CASE("det M_m closed form against elimination") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 60; ++iter) {
        const std::size_t m = 1 + rng() % 6;
        std::vector<mpq_class> u, v;
        do {
            u = sample_params(rng, m, false);
            v = sample_params(rng, m, false);
        } while (!cross_ok(u, v));
        FieldMatrix<mpq_class> M = build_M(u, v);
        CAPTURE(iter); CAPTURE(m);
        CHECK(field_det(M) == det_M_closed_form(u, v));
    }
}

TEST_CASE("det W_m closed form against elimination on the bordered matrix") {
    std::mt19937 rng(37);
    for (int iter = 0; iter < 60; ++iter) {
        const std::size_t m = 1 + rng() % 6;
        std::vector<mpq_class> x, y;
        do {
            x = sample_params(rng, m, true);
            y = sample_params(rng, m, true);
        } while (!cross_ok(x, y));
        FieldMatrix<mpq_class> W = build_W_bordered(x, y);
        CAPTURE(iter); CAPTURE(m);
        CHECK(field_det(W) == det_W_closed_form(x, y));
    }
}

TEST_CASE("det W_1 is identically -1") {
    std::mt19937 rng(41);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<mpq_class> x = sample_params(rng, 1, true);
        std::vector<mpq_class> y = sample_params(rng, 1, true);
        if (!cross_ok(x, y)) continue;
        CHECK(det_W_closed_form(x, y) == -1);
        CHECK(field_det(build_W_bordered(x, y)) == -1);
    }
}

TEST_CASE("det W_m - det M_m difference identity") {
    // det W_m = det M_m - prod (1 + x_i)(1 + y_i) * cauchy_kernel_det:
    // expanding both closed forms, W picks -(plus - minus)/2 and M picks
    // (plus + minus)/2, so M - W = plus * kernel.
    std::mt19937 rng(43);
    for (int iter = 0; iter < 40; ++iter) {
        const std::size_t m = 1 + rng() % 5;
        std::vector<mpq_class> x, y;
        do {
            x = sample_params(rng, m, true);
            y = sample_params(rng, m, true);
        } while (!cross_ok(x, y));
        mpq_class plus = 1;
        for (std::size_t i = 0; i < m; ++i) plus *= (1 + x[i]) * (1 + y[i]);
        mpq_class lhs = det_M_closed_form(x, y) - det_W_closed_form(x, y);
        CHECK(lhs == plus * cauchy_kernel_det(x, y));
    }
}

TEST_CASE("degenerate and error cases") {
    std::vector<mpq_class> u = {mpq_class(1, 2)};
    std::vector<mpq_class> v = {mpq_class(-2)};  // 1 + (1/2)(-2) = 0
    CHECK_THROWS_AS(build_M(u, v), std::domain_error);
    CHECK_THROWS_AS(cauchy_kernel_det(u, v), std::domain_error);

    std::vector<mpq_class> bad = {mpq_class(-1)};
    CHECK_THROWS_AS(build_W_bordered(bad, bad), std::domain_error);

    std::vector<mpq_class> u2 = {1, 2};
    std::vector<mpq_class> v1 = {1};
    CHECK_THROWS_AS(build_M(u2, v1), std::invalid_argument);

    // m = 0 bordered matrix is the 1x1 zero matrix
    std::vector<mpq_class> empty;
    FieldMatrix<mpq_class> w0 = build_W_bordered(empty, empty, mpq_class(0));
    CHECK(w0.side == 1);
    CHECK(field_det(w0) == 0);
    CHECK(det_W_closed_form(empty, empty, mpq_class(0)) == 0);
}

TEST_CASE("generic code instantiates over a cyclotomic field") {
    OddPrime p(7);
    CycloElem ctx = CycloElem::one(p);
    std::vector<CycloElem> x = {CycloElem::zeta_pow(p, 1), CycloElem::zeta_pow(p, 3)};
    std::vector<CycloElem> y = {CycloElem::zeta_pow(p, 2), CycloElem::zeta_pow(p, 5)};
    FieldMatrix<CycloElem> W = build_W_bordered(x, y, ctx);
    CHECK(field_det(W) == det_W_closed_form(x, y, ctx));
    CHECK(field_det(build_M(x, y)) == det_M_closed_form(x, y));
}
