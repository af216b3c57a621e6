#include "evildet/quad.hpp"

#include <cmath>
#include <stdexcept>

namespace evildet {

QuadElem::QuadElem(mpz_class alpha, mpz_class beta, const OddPrime& p)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), p_(p.value()) {
    const bool alpha_even = mpz_even_p(alpha_.get_mpz_t());
    const bool beta_even = mpz_even_p(beta_.get_mpz_t());
    if (alpha_even != beta_even)
        throw std::invalid_argument("QuadElem: alpha and beta must have equal parity");
    if (p.mod4() == 3 && !alpha_even)
        throw std::invalid_argument(
            "QuadElem: half-coordinates only exist for p == 1 (mod 4)");
}

QuadElem QuadElem::conjugate() const {
    return QuadElem(alpha_, -beta_, OddPrime(p_));
}

QuadElem quad_mul(const QuadElem& x, const QuadElem& y) {
    if (x.p() != y.p())
        throw std::invalid_argument("quad_mul: mismatched primes");
    const mpz_class p(static_cast<unsigned long>(x.p()));
    mpz_class alpha = (x.alpha() * y.alpha() + p * x.beta() * y.beta()) / 2;
    mpz_class beta = (x.alpha() * y.beta() + x.beta() * y.alpha()) / 2;
    return QuadElem(std::move(alpha), std::move(beta), OddPrime(x.p()));
}

QuadElem quad_pow(const QuadElem& x, std::uint64_t e) {
    QuadElem r(2, 0, OddPrime(x.p()));  // 1
    QuadElem base = x;
    while (e) {
        if (e & 1) r = quad_mul(r, base);
        if (e >>= 1) base = quad_mul(base, base);
    }
    return r;
}

mpz_class norm(const QuadElem& x) {
    const mpz_class p(static_cast<unsigned long>(x.p()));
    mpz_class num = x.alpha() * x.alpha() - p * x.beta() * x.beta();
    return num / 4;
}

QuadElem fundamental_unit(const OddPrime& p) {
    if (p.mod4() != 1)
        throw std::invalid_argument("fundamental_unit: requires p == 1 (mod 4)");
    const std::int64_t D = static_cast<std::int64_t>(p.value());
    std::int64_t sq = static_cast<std::int64_t>(std::sqrt(static_cast<double>(D)));
    while (sq * sq > D) --sq;
    while ((sq + 1) * (sq + 1) <= D) ++sq;

    // Expansion of omega = (1 + sqrt(D))/2: state (P + sqrt(D))/Q.
    ContinuedFractionState st{1, 2, 0, 0};
    // Convergents h/k of omega; candidate unit h - k*conj(omega).
    mpz_class h_prev = 0, h = 1, k_prev = 1, k = 0;  // h_{-2}, h_{-1}, k_{-2}, k_{-1}
    mpz_class alpha, beta, t;
    const mpz_class P(D);

    for (std::uint64_t step = 0; step < 1u << 24; ++step) {
        st.a = (st.P + sq) / st.Q;
        st.index = step;
        mpz_class hn = st.a * h + h_prev;
        mpz_class kn = st.a * k + k_prev;
        h_prev = h;
        h = hn;
        k_prev = k;
        k = kn;
        alpha = 2 * h - k;
        beta = k;
        t = alpha * alpha - P * beta * beta;
        if (t == -4 || t == 4) {
            if (t == 4)
                throw std::runtime_error(
                    "fundamental_unit: unit of norm +1 for p = " +
                    std::to_string(p.value()) +
                    " contradicts norm(eps) = -1 for prime p == 1 (mod 4)");
            return QuadElem(alpha, beta, p);
        }
        const std::int64_t Pn = st.a * st.Q - st.P;
        const std::int64_t Qn = (D - Pn * Pn) / st.Q;
        st.P = Pn;
        st.Q = Qn;
    }
    throw std::runtime_error("fundamental_unit: period not found (bug)");
}

namespace {

// log of (alpha + beta*sqrt(p))/2 without overflowing doubles.
double log_quad(const QuadElem& x) {
    signed long exp_a;
    const double da = mpz_get_d_2exp(&exp_a, x.alpha().get_mpz_t());
    const double log_alpha = std::log(da) + static_cast<double>(exp_a) * M_LN2;
    // ratio r = beta*sqrt(p)/alpha via r^2 = p*beta^2/alpha^2
    mpq_class ratio2(x.beta() * x.beta() *
                         mpz_class(static_cast<unsigned long>(x.p())),
                     x.alpha() * x.alpha());
    ratio2.canonicalize();
    const double r = std::sqrt(ratio2.get_d());
    return log_alpha - M_LN2 + std::log1p(r);
}

// Dirichlet character sum T = sum_{j=1}^{n} -(j/p) * log sin(pi j / p),
// so that T = h * log(eps).  Compensated (Kahan) summation.
template <typename Real>
Real sine_log_sum(const OddPrime& p) {
    const std::uint64_t n = p.n();
    const Real pi = static_cast<Real>(3.141592653589793238462643383279502884L);
    Real sum = 0, comp = 0;
    for (std::uint64_t j = 1; j <= n; ++j) {
        const int chi = legendre(static_cast<std::int64_t>(j), p);
        const Real term = -chi * std::log(std::sin(pi * j / static_cast<Real>(p.value())));
        const Real y = term - comp;
        const Real t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

} // namespace

std::uint64_t class_number(const OddPrime& p) {
    if (p.mod4() != 1)
        throw std::invalid_argument("class_number: requires p == 1 (mod 4)");
    const QuadElem eps = fundamental_unit(p);
    const double log_eps = log_quad(eps);

    double q = sine_log_sum<double>(p) / log_eps;
    double h = std::round(q);
    if (std::abs(q - h) > 1e-6) {
        // escalate once to extended precision before giving up
        const long double ql =
            sine_log_sum<long double>(p) / static_cast<long double>(log_eps);
        q = static_cast<double>(ql);
        h = std::round(q);
        if (std::abs(q - h) > 1e-6)
            throw std::runtime_error(
                "class_number: residual " + std::to_string(std::abs(q - h)) +
                " above tolerance for p = " + std::to_string(p.value()));
    }
    if (h < 1)
        throw std::runtime_error("class_number: nonpositive result (bug)");
    const std::uint64_t hh = static_cast<std::uint64_t>(h);
    if (hh % 2 == 0)
        throw std::runtime_error(
            "class_number: even h contradicts norm(eps) = -1 for p = " +
            std::to_string(p.value()));
    return hh;
}

PellPair compute_a(const OddPrime& p, const QuadElem& eps, std::uint64_t h) {
    const std::uint64_t exp = p.mod8() == 1 ? h : 3 * h;
    const QuadElem w = quad_pow(eps, exp);
    if (!mpz_even_p(w.alpha().get_mpz_t()) || !mpz_even_p(w.beta().get_mpz_t()))
        throw std::runtime_error(
            "compute_a: eps^" + std::to_string(exp) +
            " has odd coordinates for p = " + std::to_string(p.value()));
    PellPair r{w.alpha() / 2, w.beta() / 2};
    if (r.a <= 0 || r.b <= 0)
        throw std::runtime_error("compute_a: nonpositive a or b (bug)");
    return r;
}

PellPair compute_a(const OddPrime& p) {
    const QuadElem eps = fundamental_unit(p);
    return compute_a(p, eps, class_number(p));
}

} // namespace evildet
