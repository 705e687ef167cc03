#include "unitred/linalg.hpp"

#include <stdexcept>

namespace unitred {

RatMatrix to_rat_matrix(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

template <class T>
static Matrix<T> multiply_impl(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
    Matrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) { return multiply_impl(a, b); }
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) { return multiply_impl(a, b); }

template <class T>
static Matrix<T> transpose_impl(const Matrix<T>& m) {
    Matrix<T> out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
    return out;
}

IntMatrix transpose(const IntMatrix& m) { return transpose_impl(m); }
RatMatrix transpose(const RatMatrix& m) { return transpose_impl(m); }

Rat determinant(RatMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            m.swap_rows(p, c);
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c) == 0) continue;
            const Rat f = m(r, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

Int determinant(const IntMatrix& m) {
    // Bareiss fraction-free elimination.
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(p, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::optional<std::vector<Rat>> solve(RatMatrix a, std::vector<Rat> b) {
    const std::size_t rows = a.rows(), cols = a.cols();
    if (b.size() != rows) throw std::invalid_argument("solve: right-hand side length mismatch");
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols; ++c, ++r) {
        std::size_t p = r;
        while (p < rows && a(p, c) == 0) ++p;
        if (p == rows) return std::nullopt;
        if (p != r) {
            a.swap_rows(p, r);
            std::swap(b[p], b[r]);
        }
        const Rat inv = 1 / a(r, c);
        for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            const Rat f = a(i, c);
            for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
            b[i] -= f * b[r];
        }
    }
    for (std::size_t i = cols; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    b.resize(cols);
    return b;
}

Rat quadratic_value(const RatMatrix& m, std::span<const Int> z) {
    Rat acc = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (z[i] == 0) continue;
        Rat row = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (z[j] != 0) row += m(i, j) * z[j];
        acc += row * z[i];
    }
    return acc;
}

Int quadratic_value(const IntMatrix& m, std::span<const Int> z) {
    Int acc = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (z[i] == 0) continue;
        Int row = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (z[j] != 0) row += m(i, j) * z[j];
        acc += row * z[i];
    }
    return acc;
}

bool LdlResult::positive_definite() const {
    if (breakdown) return false;
    for (const auto& d : pivots)
        if (d <= 0) return false;
    return true;
}

LdlResult ldl(const RatMatrix& g) {
    if (g.rows() != g.cols()) throw std::invalid_argument("ldl: matrix not square");
    const std::size_t n = g.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (g(i, j) != g(j, i)) throw std::invalid_argument("ldl: matrix not symmetric");

    LdlResult out{RatMatrix::identity(n), std::vector<Rat>(n), std::nullopt};
    RatMatrix& l = out.lower;
    for (std::size_t j = 0; j < n; ++j) {
        Rat d = g(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k) * out.pivots[k];
        out.pivots[j] = d;
        for (std::size_t i = j + 1; i < n; ++i) {
            Rat s = g(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k) * out.pivots[k];
            if (d == 0) {
                if (s != 0) {
                    out.breakdown = j;
                    return out;
                }
                l(i, j) = 0;
            } else {
                l(i, j) = s / d;
            }
        }
    }
    return out;
}

Definiteness definiteness(const RatMatrix& g) {
    if (ldl(g).positive_definite()) return Definiteness::PositiveDefinite;
    return determinant(g) == 0 ? Definiteness::Singular : Definiteness::Indefinite;
}

}  // namespace unitred
