#ifndef EVILDET_NT_HPP
#define EVILDET_NT_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace evildet {

/// Deterministic primality test for 64-bit inputs (Miller-Rabin with a
/// witness set proven exhaustive below 3.3e24).
bool is_prime(std::uint64_t m);

/// Jacobi symbol (a/n) for odd n > 0.
int jacobi(std::uint64_t a, std::uint64_t n);

/// An odd prime, validated on construction.
class OddPrime {
public:
    explicit OddPrime(std::uint64_t value) : value_(value) {
        if (value < 3 || value % 2 == 0 || !is_prime(value))
            throw std::invalid_argument("OddPrime: " + std::to_string(value) +
                                        " is not an odd prime");
    }

    std::uint64_t value() const { return value_; }

    /// n = (p-1)/2, the Chapman matrix side minus one.
    std::uint64_t n() const { return (value_ - 1) / 2; }

    unsigned mod4() const { return static_cast<unsigned>(value_ % 4); }
    unsigned mod8() const { return static_cast<unsigned>(value_ % 8); }
    unsigned mod16() const { return static_cast<unsigned>(value_ % 16); }

    friend bool operator==(const OddPrime& a, const OddPrime& b) {
        return a.value_ == b.value_;
    }

private:
    std::uint64_t value_;
};

/// Legendre symbol (k/p) in {-1, 0, 1}; k may be negative or >= p.
int legendre(std::int64_t k, const OddPrime& p);

/// All odd primes q <= bound with q == residue (mod modulus), ascending.
std::vector<OddPrime> primes_in_class(std::uint64_t bound, std::uint64_t residue,
                                      std::uint64_t modulus);

} // namespace evildet

#endif
