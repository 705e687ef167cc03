#ifndef UNITRED_LINALG_HPP
#define UNITRED_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "unitred/rational.hpp"

namespace unitred {

// Dense row-major matrix with value semantics.
template <class T>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RatMatrix = Matrix<Rat>;
using IntMatrix = Matrix<Int>;

RatMatrix to_rat_matrix(const IntMatrix& m);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& m);
RatMatrix transpose(const RatMatrix& m);

Rat determinant(RatMatrix m);
Int determinant(const IntMatrix& m);

// Solves A x = b for a consistent (possibly overdetermined) system with a
// unique solution. Returns nullopt when inconsistent or underdetermined.
std::optional<std::vector<Rat>> solve(RatMatrix a, std::vector<Rat> b);

// z^T M z for an integer vector z.
Rat quadratic_value(const RatMatrix& m, std::span<const Int> z);
Int quadratic_value(const IntMatrix& m, std::span<const Int> z);

enum class Definiteness { PositiveDefinite, Indefinite, Singular };

// Symmetric G = L * diag(D) * L^T with L unit lower triangular.
struct LdlResult {
    RatMatrix lower;
    std::vector<Rat> pivots;
    // First index with a zero pivot and a non-zero column below it; the
    // factorization stops there and `lower`/`pivots` are partial.
    std::optional<std::size_t> breakdown;

    bool positive_definite() const;
};

LdlResult ldl(const RatMatrix& g);
Definiteness definiteness(const RatMatrix& g);

}  // namespace unitred

#endif
