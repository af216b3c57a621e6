#ifndef EVILDET_INTMAT_HPP
#define EVILDET_INTMAT_HPP

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "evildet/nt.hpp"

namespace evildet {

/// Dense row-major matrix over arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntMatrix identity(std::size_t side) {
        IntMatrix m(side, side);
        for (std::size_t i = 0; i < side; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    mpz_class& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const {
        return e_[i * cols_ + j];
    }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    void swap_rows(std::size_t i, std::size_t k) {
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap(e_[i * cols_ + j], e_[k * cols_ + j]);
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<mpz_class> e_;
};

/// Dense row-major matrix over exact rationals (canonical mpq form).
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    mpq_class& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const mpq_class& at(std::size_t i, std::size_t j) const {
        return e_[i * cols_ + j];
    }

private:
    std::size_t rows_, cols_;
    std::vector<mpq_class> e_;
};

/// The (n+1)x(n+1) matrix with entry(i,j) = ((j-i)/p), n = (p-1)/2.
IntMatrix build_chapman(const OddPrime& p);

/// Exact determinant by fraction-free (Bareiss) elimination.
mpz_class det_bareiss(const IntMatrix& m);

/// Integer B with |det m| <= B (product of row Euclidean norms, rounded up).
mpz_class hadamard_bound(const IntMatrix& m);

/// Exact determinant by multi-modular elimination + CRT with balanced lift.
/// Word-size moduli are taken descending from the top of the 64-bit range
/// until their product exceeds twice the Hadamard bound.
mpz_class det_modular(const IntMatrix& m, unsigned workers = 1);

/// Determinant residue statistics, exposed for benchmarking.
struct ModularDetStats {
    std::size_t residue_count = 0;
    std::size_t hadamard_bits = 0;
};
mpz_class det_modular(const IntMatrix& m, unsigned workers, ModularDetStats& stats);

/// Exact determinant over the rationals by elimination.
mpq_class det_rational(const RatMatrix& m);

} // namespace evildet

#endif
