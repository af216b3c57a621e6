#include "evildet/intmat.hpp"

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace evildet {

IntMatrix build_chapman(const OddPrime& p) {
    const std::size_t side = static_cast<std::size_t>(p.n()) + 1;
    IntMatrix c(side, side);
    for (std::size_t i = 0; i < side; ++i)
        for (std::size_t j = 0; j < side; ++j)
            c.at(i, j) = legendre(static_cast<std::int64_t>(j) -
                                      static_cast<std::int64_t>(i),
                                  p);
    return c;
}

mpz_class det_bareiss(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det_bareiss: non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    mpz_class prev = 1;
    mpz_t t;
    mpz_init(t);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a.at(piv, k) == 0) ++piv;
        if (piv == n) {
            mpz_clear(t);
            return 0;
        }
        if (piv != k) {
            a.swap_rows(piv, k);
            sign = -sign;
        }
        const mpz_class& akk = a.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const mpz_class& aik = a.at(i, k);
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class& aij = a.at(i, j);
                // a_ij = (akk*a_ij - aik*a_kj) / prev, division exact
                mpz_mul(t, akk.get_mpz_t(), aij.get_mpz_t());
                mpz_submul(t, aik.get_mpz_t(), a.at(k, j).get_mpz_t());
                mpz_divexact(aij.get_mpz_t(), t, prev.get_mpz_t());
            }
        }
        prev = akk;
    }
    mpz_clear(t);
    mpz_class det = a.at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

mpz_class hadamard_bound(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("hadamard_bound: non-square matrix");
    const std::size_t n = m.rows();
    mpz_class prod = 1, rownorm2, sq;
    for (std::size_t i = 0; i < n; ++i) {
        rownorm2 = 0;
        for (std::size_t j = 0; j < n; ++j) {
            mpz_addmul(rownorm2.get_mpz_t(), m.at(i, j).get_mpz_t(),
                       m.at(i, j).get_mpz_t());
        }
        prod *= rownorm2;
    }
    mpz_class root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), prod.get_mpz_t());
    if (rem != 0) root += 1;
    return root;
}

namespace {

// Montgomery arithmetic for an odd 64-bit modulus, R = 2^64.
struct Montgomery64 {
    std::uint64_t m;
    std::uint64_t minv;  // -m^{-1} mod 2^64
    std::uint64_t r1;    // R mod m
    std::uint64_t r2;    // R^2 mod m

    explicit Montgomery64(std::uint64_t modulus) : m(modulus) {
        std::uint64_t inv = m;  // Newton iteration for m^{-1} mod 2^64
        for (int i = 0; i < 5; ++i) inv *= 2 - m * inv;
        minv = ~inv + 1;
        r1 = (0 - m) % m;  // 2^64 mod m
        r2 = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(r1) * r1 % m);
    }

    std::uint64_t redc(unsigned __int128 t) const {
        // t + lo*m can exceed 128 bits for m close to 2^64, so add the high
        // halves with an explicit carry (the low halves cancel by design).
        const std::uint64_t lo = static_cast<std::uint64_t>(t) * minv;
        const unsigned __int128 lm = static_cast<unsigned __int128>(lo) * m;
        unsigned __int128 u = (t >> 64) + (lm >> 64) +
                              (static_cast<std::uint64_t>(t) != 0 ? 1 : 0);
        if (u >= m) u -= m;
        return static_cast<std::uint64_t>(u);
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return redc(static_cast<unsigned __int128>(a) * b);
    }

    std::uint64_t to(std::uint64_t x) const { return mul(x, r2); }
    std::uint64_t from(std::uint64_t x) const { return redc(x); }

    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + m - b;
    }

    std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const {
        std::uint64_t r = r1;
        while (exp) {
            if (exp & 1) r = mul(r, base);
            base = mul(base, base);
            exp >>= 1;
        }
        return r;
    }
};

// Determinant of m reduced mod an odd prime, as a least residue in [0, p).
std::uint64_t det_mod_prime(const IntMatrix& m, std::uint64_t p) {
    const Montgomery64 mg(p);
    const std::size_t n = m.rows();
    std::vector<std::uint64_t> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i * n + j] = mg.to(mpz_fdiv_ui(m.at(i, j).get_mpz_t(), p));

    std::uint64_t det = mg.r1;
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv * n + k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j)
                std::swap(a[piv * n + j], a[k * n + j]);
            negate = !negate;
        }
        const std::uint64_t pv = a[k * n + k];
        det = mg.mul(det, pv);
        const std::uint64_t inv = mg.pow(pv, p - 2);
        std::uint64_t* rk = &a[k * n];
        for (std::size_t j = k + 1; j < n; ++j) rk[j] = mg.mul(rk[j], inv);
        for (std::size_t i = k + 1; i < n; ++i) {
            std::uint64_t* ri = &a[i * n];
            const std::uint64_t f = ri[k];
            if (f == 0) continue;
            for (std::size_t j = k + 1; j < n; ++j)
                ri[j] = mg.sub(ri[j], mg.mul(f, rk[j]));
        }
    }
    std::uint64_t r = mg.from(det);
    if (negate && r != 0) r = p - r;
    return r;
}

// Word-size CRT moduli, descending from the top of the 64-bit range.
std::vector<std::uint64_t>& crt_prime_cache() {
    static std::vector<std::uint64_t> primes;
    return primes;
}
std::mutex crt_prime_mutex;

std::vector<std::uint64_t> crt_primes(std::size_t count) {
    std::lock_guard<std::mutex> lock(crt_prime_mutex);
    auto& cache = crt_prime_cache();
    std::uint64_t next = cache.empty() ? UINT64_C(0xFFFFFFFFFFFFFFFF)
                                       : cache.back() - 2;
    while (cache.size() < count) {
        while (!is_prime(next)) next -= 2;
        cache.push_back(next);
        next -= 2;
    }
    return std::vector<std::uint64_t>(cache.begin(), cache.begin() + count);
}

} // namespace

mpz_class det_modular(const IntMatrix& m, unsigned workers, ModularDetStats& stats) {
    if (!m.is_square()) throw std::invalid_argument("det_modular: non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    const mpz_class bound = hadamard_bound(m);
    stats.hadamard_bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    if (bound == 0) return 0;  // a zero row forces det = 0

    // Select moduli until their product exceeds 2 * bound.
    const mpz_class target = 2 * bound;
    std::vector<std::uint64_t> moduli;
    mpz_class prod = 1;
    for (std::size_t k = 1; prod <= target; ++k) {
        moduli = crt_primes(k);
        prod *= moduli.back();
    }
    stats.residue_count = moduli.size();

    std::vector<std::uint64_t> residues(moduli.size());
    if (workers <= 1 || moduli.size() <= 1) {
        for (std::size_t i = 0; i < moduli.size(); ++i)
            residues[i] = det_mod_prime(m, moduli[i]);
    } else {
        const unsigned nt = std::min<std::size_t>(workers, moduli.size());
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(nt);
        for (unsigned t = 0; t < nt; ++t) {
            threads.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < moduli.size(); i += nt)
                        residues[i] = det_mod_prime(m, moduli[i]);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : threads) th.join();
        for (auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    // Incremental CRT, then balanced (symmetric) lift.
    mpz_class x = residues[0];
    mpz_class mod = moduli[0];
    for (std::size_t i = 1; i < residues.size(); ++i) {
        const std::uint64_t mi = moduli[i];
        const std::uint64_t xi = mpz_fdiv_ui(x.get_mpz_t(), mi);
        const std::uint64_t base = mpz_fdiv_ui(mod.get_mpz_t(), mi);
        const Montgomery64 mg(mi);
        const std::uint64_t diff = mg.sub(residues[i] % mi, xi);
        const std::uint64_t inv = mg.from(mg.pow(mg.to(base), mi - 2));
        const std::uint64_t t = mg.from(mg.mul(mg.to(diff), mg.to(inv)));
        x += mod * t;
        mod *= mi;
    }
    if (2 * x > mod) x -= mod;
    return x;
}

mpz_class det_modular(const IntMatrix& m, unsigned workers) {
    ModularDetStats stats;
    return det_modular(m, workers, stats);
}

mpq_class det_rational(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det_rational: non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    std::vector<mpq_class> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j);

    mpq_class det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv * n + k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j)
                std::swap(a[piv * n + j], a[k * n + j]);
            det = -det;
        }
        const mpq_class pv = a[k * n + k];
        det *= pv;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i * n + k] == 0) continue;
            const mpq_class f = a[i * n + k] / pv;
            for (std::size_t j = k + 1; j < n; ++j)
                a[i * n + j] -= f * a[k * n + j];
        }
    }
    return det;
}

} // namespace evildet
