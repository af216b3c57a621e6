#ifndef EVILDET_CYCLO_HPP
#define EVILDET_CYCLO_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "evildet/cauchy.hpp"
#include "evildet/nt.hpp"
#include "evildet/quad.hpp"

namespace evildet {

/// Element of Q(zeta_p) on the power basis 1, zeta, ..., zeta^{p-2}
/// (reduced modulo Phi_p).  Stored as integer coordinates over a common
/// positive denominator, kept in lowest terms so equality is direct
/// comparison.
class CycloElem {
public:
    CycloElem() = default;  // invalid sentinel, p() == 0
    explicit CycloElem(const OddPrime& p);  // zero element

    static CycloElem zero(const OddPrime& p) { return CycloElem(p); }
    static CycloElem one(const OddPrime& p) { return integer(p, 1); }
    static CycloElem integer(const OddPrime& p, const mpz_class& v);
    static CycloElem rational(const OddPrime& p, const mpq_class& v);
    /// zeta^k for any integer k (reduced mod p).
    static CycloElem zeta_pow(const OddPrime& p, std::int64_t k);

    std::uint64_t p() const { return p_; }
    bool is_zero() const;
    /// True iff the element lies in Q.
    bool is_rational() const;
    mpq_class rational_value() const;  // throws unless is_rational()

    CycloElem operator-() const;
    CycloElem inverse() const;  // throws on zero
    CycloElem scaled(const mpq_class& s) const;

    friend CycloElem operator+(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator-(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
    friend bool operator==(const CycloElem& a, const CycloElem& b);
    friend bool operator!=(const CycloElem& a, const CycloElem& b) {
        return !(a == b);
    }

private:
    std::uint64_t p_ = 0;
    std::vector<mpz_class> num_;  // p-1 coordinates
    mpz_class den_ = 1;           // > 0

    void normalize();
    void check_valid() const;
};

template <>
struct FieldTraits<CycloElem> {
    static CycloElem zero(const CycloElem& ctx) {
        return CycloElem(OddPrime(ctx.p()));
    }
    static CycloElem one(const CycloElem& ctx) {
        return CycloElem::one(OddPrime(ctx.p()));
    }
    static CycloElem half(const CycloElem& ctx) {
        return CycloElem::rational(OddPrime(ctx.p()), mpq_class(1, 2));
    }
    static bool is_zero(const CycloElem& x) { return x.is_zero(); }
    static CycloElem inv(const CycloElem& x) { return x.inverse(); }
};

struct CycloMatrix {
    std::uint64_t p = 0;
    std::size_t side = 0;
    std::vector<CycloElem> e;

    CycloMatrix() = default;
    CycloMatrix(const OddPrime& prime, std::size_t s)
        : p(prime.value()), side(s), e(s * s, CycloElem(prime)) {}

    CycloElem& at(std::size_t i, std::size_t j) { return e[i * side + j]; }
    const CycloElem& at(std::size_t i, std::size_t j) const {
        return e[i * side + j];
    }
};

/// Gauss sum tau_p(r) = sum_{k=1}^{p-1} (k/p) zeta^{kr}.
CycloElem gauss_sum(std::int64_t r, const OddPrime& p);

/// Canonical zeta^{k/2} = (-1)^k zeta^{k(p+1)/2}.
CycloElem zeta_half_power(std::int64_t k, const OddPrime& p);

/// The four (n+1)x(n+1) factorization matrices; D is also recomputed via
/// the derivative formula D_ii = 1/g'(zeta^{2i}) and both must agree.
struct FactorMatrices {
    CycloMatrix V, D, U, G;
};
FactorMatrices build_factor_matrices(const OddPrime& p);

/// Entrywise check of C = tau_p(2) zeta^{(p-1)/4} VDUDV for p == 1 (mod 4).
struct DecompResult {
    bool ok = false;
    std::size_t mismatch_i = 0, mismatch_j = 0;
    explicit operator bool() const { return ok; }
};
DecompResult verify_decomposition(const OddPrime& p);

/// Same check with the tilde-U variant for p == 3 (mod 4).
DecompResult verify_decomposition_3mod4(const OddPrime& p);

/// prod_{j=1}^{n} (zeta^{2rj} - zeta^{-2rj}) = (r/p) tau_p(1), p !| r.
bool verify_gauss_product(const OddPrime& p, std::int64_t r);

/// Both product identities of the Gauss-sum corollary:
///   prod (zeta^{j/2} - zeta^{-j/2}) = (2/p) tau_p(1)
///   prod (1 + zeta^{2j})            = zeta^{n(n+1)/2} (2/p)
bool verify_one_plus_zeta_products(const OddPrime& p);

/// (1/2)(prod(1 + (j/p)zeta^j)^2 - prod(1 - (j/p)zeta^j)^2)
///   = (-1)^{n/2} zeta^{n(n+1)/2} a tau_p(1).
bool verify_spec_fact(const OddPrime& p, const mpz_class& a);

/// The unit-power product identities, with eps^{+-(2-(2/p))h} embedded into
/// Q(zeta_p) via sqrt(p) -> tau_p(1), plus the exact eps^k - eps^{-k} = 2a
/// check in quadratic-field arithmetic.
bool verify_prod_identities(const OddPrime& p, std::uint64_t h, const QuadElem& eps);

/// W = GUG; asserts the closed-form entries (zero corner, unit border,
/// Cauchy-kernel interior) and agreement with the generic bordered matrix
/// built from x_i = y_i = (i/p) zeta^i.
CycloMatrix build_W(const OddPrime& p);

/// Three-way det W agreement: exact elimination over Q(zeta_p), the
/// direct closed form, and the generic parametric closed form.
bool verify_detW_threeway(const OddPrime& p);

/// Embed (alpha + beta*sqrt(p))/2 into Q(zeta_p) via sqrt(p) -> tau_p(1).
CycloElem embed_quad(const QuadElem& x);

} // namespace evildet

#endif
