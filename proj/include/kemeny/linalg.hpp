#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "kemeny/error.hpp"
#include "kemeny/matrix.hpp"
#include "kemeny/rational.hpp"

namespace kemeny {

/// Fraction-free Bareiss elimination. For integer input every intermediate
/// value is an exact minor, so the divisions below are exact.
template <typename T>
T det_bareiss(Matrix<T> a) {
    if (!a.is_square()) fail(ErrorKind::NotSquare, "determinant needs a square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return T(1);
    T prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == T(0)) {
            std::size_t pivot = k + 1;
            while (pivot < n && a(pivot, k) == T(0)) ++pivot;
            if (pivot == n) return T(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = T(0);
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

namespace detail {

/// Montante (fraction-free Gauss-Jordan) on an n x width worksheet whose left
/// n x n block is the system matrix. After success the left block is det * I,
/// the remaining columns hold det * solution, and det carries the sign of any
/// row swaps. Divisions are exact by Sylvester's determinant identity.
inline bool montante(Matrix<Integer>& w, std::size_t n, Integer& det) {
    const std::size_t width = w.cols();
    Integer prev(1);
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (w(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && w(pivot, k) == 0) ++pivot;
            if (pivot == n) return false;
            for (std::size_t j = 0; j < width; ++j) std::swap(w(k, j), w(pivot, j));
            sign = -sign;
        }
        const Integer pivot_value = w(k, k);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const Integer factor = w(i, k);
            for (std::size_t j = 0; j < width; ++j) {
                w(i, j) = (pivot_value * w(i, j) - factor * w(k, j)) / prev;
            }
        }
        prev = pivot_value;
    }
    det = sign > 0 ? prev : -prev;
    if (sign < 0)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < width; ++j) w(i, j) = -w(i, j);
    return true;
}

inline Integer lcm_of_denominators(const Matrix<Rational>& a) {
    Integer l(1);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) l = boost::multiprecision::lcm(l, denominator(a(i, j)));
    return l;
}

} // namespace detail

/// Exact solution of A X = B over the rationals.
inline Matrix<Rational> solve_exact(const Matrix<Rational>& a, const Matrix<Rational>& b) {
    if (!a.is_square()) fail(ErrorKind::NotSquare, "linear solve needs a square matrix");
    const std::size_t n = a.rows();
    if (b.rows() != n) fail(ErrorKind::InvalidArgument, "right-hand side has wrong row count");
    const std::size_t k = b.cols();

    // Scaling each row to integers multiplies both sides alike, so the
    // solution is unchanged and elimination can stay in integers.
    Matrix<Integer> w(n, n + k);
    for (std::size_t i = 0; i < n; ++i) {
        Integer row_lcm(1);
        for (std::size_t j = 0; j < n; ++j) row_lcm = boost::multiprecision::lcm(row_lcm, denominator(a(i, j)));
        for (std::size_t j = 0; j < k; ++j) row_lcm = boost::multiprecision::lcm(row_lcm, denominator(b(i, j)));
        const Rational scale(row_lcm, 1);
        for (std::size_t j = 0; j < n; ++j) w(i, j) = numerator(a(i, j) * scale);
        for (std::size_t j = 0; j < k; ++j) w(i, n + j) = numerator(b(i, j) * scale);
    }

    Integer det;
    if (!detail::montante(w, n, det)) fail(ErrorKind::Singular, "matrix is singular");
    Matrix<Rational> x(n, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) x(i, j) = make_rational(w(i, n + j), det);
    return x;
}

/// Moore-Penrose pseudoinverse of a graph Laplacian, computed exactly.
///
/// For a connected graph, L + J/n is invertible and commutes with J, giving
/// L^+ = (L + J/n)^{-1} - J/n. With V = (nL + J)^{-1} (solved in integers)
/// this becomes L^+(i,j) = (n^2 V(i,j) - det) / (n det) after clearing
/// denominators, where det = det(nL + J).
inline Matrix<Rational> pseudoinverse_laplacian(const Matrix<Integer>& laplacian) {
    if (!laplacian.is_square()) fail(ErrorKind::NotSquare, "Laplacian must be square");
    if (!laplacian.is_symmetric()) fail(ErrorKind::NotSymmetric, "Laplacian must be symmetric");
    const std::size_t n = laplacian.rows();
    for (std::size_t i = 0; i < n; ++i) {
        Integer row_sum(0);
        for (std::size_t j = 0; j < n; ++j) row_sum += laplacian(i, j);
        if (row_sum != 0) fail(ErrorKind::InvalidArgument, "Laplacian rows must sum to zero");
    }

    const Integer ni(n);
    Matrix<Integer> w(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w(i, j) = ni * laplacian(i, j) + 1;
        w(i, n + i) = 1;
    }
    Integer det;
    if (!detail::montante(w, n, det))
        fail(ErrorKind::Singular, "Laplacian has rank below n-1; the graph is disconnected");

    Matrix<Rational> pinv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) pinv(i, j) = make_rational(ni * ni * w(i, n + j) - det, ni * det);
    return pinv;
}

inline Matrix<Rational> pseudoinverse_laplacian(const Matrix<Rational>& laplacian) {
    if (!laplacian.is_square()) fail(ErrorKind::NotSquare, "Laplacian must be square");
    const std::size_t n = laplacian.rows();
    const Integer scale = detail::lcm_of_denominators(laplacian);
    Matrix<Integer> scaled(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scaled(i, j) = numerator(laplacian(i, j) * Rational(scale, 1));
    Matrix<Rational> pinv = pseudoinverse_laplacian(scaled);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) pinv(i, j) *= Rational(scale, 1);
    return pinv;
}

/// Eigenvalues of a symmetric matrix, ascending.
inline std::vector<double> symmetric_eigenvalues(const Matrix<double>& a) {
    if (!a.is_square()) fail(ErrorKind::NotSquare, "eigenvalues need a square matrix");
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(a(i, j) - a(j, i)) > 1e-12)
                fail(ErrorKind::NotSymmetric, "matrix is not symmetric");
    Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
    return out;
}

} // namespace kemeny
