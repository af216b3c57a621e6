#ifndef EVILDET_QUAD_HPP
#define EVILDET_QUAD_HPP

#include <cstdint>
#include <gmpxx.h>

#include "evildet/nt.hpp"

namespace evildet {

/// Element (alpha + beta*sqrt(p))/2 of the ring of integers of Q(sqrt(p)).
/// Requires alpha == beta (mod 2); for p == 3 (mod 4) both must be even.
class QuadElem {
public:
    QuadElem(mpz_class alpha, mpz_class beta, const OddPrime& p);

    const mpz_class& alpha() const { return alpha_; }
    const mpz_class& beta() const { return beta_; }
    std::uint64_t p() const { return p_; }

    QuadElem conjugate() const;

    friend bool operator==(const QuadElem& a, const QuadElem& b) {
        return a.p_ == b.p_ && a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
    }

private:
    mpz_class alpha_, beta_;
    std::uint64_t p_;
};

/// Exact product; both elements must live over the same prime.
QuadElem quad_mul(const QuadElem& x, const QuadElem& y);

/// x^e for e >= 0, by binary powering.
QuadElem quad_pow(const QuadElem& x, std::uint64_t e);

/// Field norm (alpha^2 - p*beta^2)/4, always an integer for ring elements.
mpz_class norm(const QuadElem& x);

/// State of the periodic continued-fraction expansion of a quadratic surd
/// (P + sqrt(D))/Q; Q | (D - P^2) at every step.
struct ContinuedFractionState {
    std::int64_t P = 0;
    std::int64_t Q = 1;
    std::int64_t a = 0;  // current partial quotient
    std::uint64_t index = 0;
};

/// Smallest unit > 1 of the ring of integers of Q(sqrt(p)), p == 1 (mod 4),
/// found along the continued fraction of omega = (1 + sqrt(p))/2.
/// Throws if the unit turns out to have norm +1 (contradicts theory for
/// prime p == 1 mod 4 and would signal a bug).
QuadElem fundamental_unit(const OddPrime& p);

/// Class number of Q(sqrt(p)) for p == 1 (mod 4), by rounding the
/// Dirichlet sine-product formula against log(fundamental unit).
/// Throws if the rounding residual exceeds tolerance or h comes out even.
std::uint64_t class_number(const OddPrime& p);

/// The pair (a, b) with a + b*sqrt(p) = eps^h (p == 1 mod 8) or eps^{3h}
/// (p == 5 mod 8); both are integers, asserted at runtime.
struct PellPair {
    mpz_class a, b;
};
PellPair compute_a(const OddPrime& p);
PellPair compute_a(const OddPrime& p, const QuadElem& eps, std::uint64_t h);

} // namespace evildet

#endif
