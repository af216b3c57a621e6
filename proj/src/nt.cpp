#include "evildet/nt.hpp"

#include <utility>

namespace evildet {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (m == q) return true;
        if (m % q == 0) return false;
    }
    std::uint64_t d = m - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t w : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(w, d, m);
        if (x == 1 || x == m - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, m);
            if (x == m - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

int jacobi(std::uint64_t a, std::uint64_t n) {
    a %= n;
    int t = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            std::uint64_t r = n & 7;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

int legendre(std::int64_t k, const OddPrime& p) {
    const std::int64_t m = static_cast<std::int64_t>(p.value());
    std::int64_t r = k % m;
    if (r < 0) r += m;
    if (r == 0) return 0;
    return jacobi(static_cast<std::uint64_t>(r), p.value());
}

std::vector<OddPrime> primes_in_class(std::uint64_t bound, std::uint64_t residue,
                                      std::uint64_t modulus) {
    if (modulus == 0 || residue >= modulus)
        throw std::invalid_argument("primes_in_class: need 0 <= residue < modulus");
    std::vector<bool> sieve(bound + 1, true);
    std::vector<OddPrime> out;
    if (bound < 3) return out;
    for (std::uint64_t q = 2; q <= bound; ++q) {
        if (!sieve[q]) continue;
        for (std::uint64_t c = q * q; c <= bound; c += q) sieve[c] = false;
        if (q >= 3 && q % modulus == residue) out.emplace_back(q);
    }
    return out;
}

} // namespace evildet
