#pragma once

#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eisenlab/errors.hpp"

namespace eisenlab {

// Dense real n x n matrix, row-major, 0-based.
class square_matrix {
public:
    explicit square_matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {
        if (n < 1) throw std::invalid_argument("square_matrix: dimension must be >= 1");
    }

    static square_matrix identity(int n) {
        square_matrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int dim() const noexcept { return n_; }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    friend square_matrix operator*(const square_matrix& a, const square_matrix& b) {
        const int n = a.n_;
        square_matrix c(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const double aik = a(i, k);
                if (aik == 0.0) continue;
                for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < n_; ++i) {
            os << (i ? "; " : "");
            for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        }
        os << "]";
        return os.str();
    }

private:
    int n_;
    std::vector<double> a_;
};

inline square_matrix transpose(const square_matrix& m) {
    const int n = m.dim();
    square_matrix t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t(j, i) = m(i, j);
    return t;
}

inline double max_abs(const square_matrix& m) {
    double r = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) r = std::max(r, std::abs(m(i, j)));
    return r;
}

// J m J with J the reversal permutation: reverses both row and column order.
inline square_matrix reverse_both(const square_matrix& m) {
    const int n = m.dim();
    square_matrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = m(n - 1 - i, n - 1 - j);
    return r;
}

// Coordinates of a point of the generalized upper half plane: unit upper
// triangular x (entries x_{i,j}, i<j, 0-based) and positive y_1..y_{n-1}.
// The diagonal of the rebuilt matrix is d_i = prod_{j <= n-1-i} y_j (0-based,
// empty product for the last entry, which is 1).
class iwasawa_coordinates {
public:
    iwasawa_coordinates(int n, std::vector<double> x_entries, std::vector<double> y_entries)
        : n_(n), x_(std::move(x_entries)), y_(std::move(y_entries)) {
        if (n < 1) throw std::invalid_argument("iwasawa_coordinates: dimension must be >= 1");
        if (x_.size() != static_cast<std::size_t>(n) * (n - 1) / 2)
            throw std::invalid_argument("iwasawa_coordinates: wrong number of x entries");
        if (y_.size() != static_cast<std::size_t>(n - 1))
            throw std::invalid_argument("iwasawa_coordinates: wrong number of y entries");
        for (double v : y_)
            if (!(v > 0.0) || !std::isfinite(v))
                throw std::domain_error("iwasawa_coordinates: y entries must be positive");
    }

    static iwasawa_coordinates identity(int n) {
        return iwasawa_coordinates(n, std::vector<double>(static_cast<std::size_t>(n) * (n - 1) / 2, 0.0),
                                   std::vector<double>(static_cast<std::size_t>(n - 1), 1.0));
    }

    int dim() const noexcept { return n_; }

    // x_{i,j}, 0 <= i < j < n
    double x(int i, int j) const { return x_[pack(i, j)]; }
    // y_{k+1} in 1-based notation, 0 <= k < n-1
    double y(int k) const { return y_[static_cast<std::size_t>(k)]; }

    const std::vector<double>& x_entries() const noexcept { return x_; }
    const std::vector<double>& y_entries() const noexcept { return y_; }

    // d_i: i-th diagonal entry of the rebuilt matrix, d_{n-1} = 1.
    double d(int i) const {
        double p = 1.0;
        for (int j = 0; j < n_ - 1 - i; ++j) p *= y_[static_cast<std::size_t>(j)];
        return p;
    }

private:
    std::size_t pack(int i, int j) const {
        // row-major over the strict upper triangle
        return static_cast<std::size_t>(i) * (2 * n_ - i - 1) / 2 + (j - i - 1);
    }

    int n_;
    std::vector<double> x_;
    std::vector<double> y_;
};

namespace detail {

// Householder QR, a -> R in place (upper triangular), q accumulates Q with
// a = Q R on exit.
inline void householder_qr(square_matrix& a, square_matrix& q) {
    const int n = a.dim();
    q = square_matrix::identity(n);
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int k = 0; k < n - 1; ++k) {
        double norm = 0.0;
        for (int i = k; i < n; ++i) norm += a(i, k) * a(i, k);
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        const double alpha = a(k, k) >= 0.0 ? -norm : norm;
        double vnorm2 = 0.0;
        for (int i = k; i < n; ++i) v[i] = a(i, k);
        v[k] -= alpha;
        for (int i = k; i < n; ++i) vnorm2 += v[i] * v[i];
        if (vnorm2 == 0.0) continue;
        // apply H = I - 2 v v^T / (v^T v) from the left to a
        for (int j = k; j < n; ++j) {
            double dot = 0.0;
            for (int i = k; i < n; ++i) dot += v[i] * a(i, j);
            const double f = 2.0 * dot / vnorm2;
            for (int i = k; i < n; ++i) a(i, j) -= f * v[i];
        }
        // accumulate Q <- Q H
        for (int i = 0; i < n; ++i) {
            double dot = 0.0;
            for (int j = k; j < n; ++j) dot += q(i, j) * v[j];
            const double f = 2.0 * dot / vnorm2;
            for (int j = k; j < n; ++j) q(i, j) -= f * v[j];
        }
    }
}

} // namespace detail

// g = x y k lambda with x y upper triangular (unit diagonal times positive
// diagonal), k orthogonal, lambda a nonzero scalar. Obtained from a
// Householder orthogonal-triangular factorization of J g^T J, with the
// diagonal signs pushed into the orthogonal factor, then normalized by the
// (n,n) entry. Inputs with reciprocal condition estimate below rcond_min are
// rejected.
inline iwasawa_coordinates iwasawa_decompose(const square_matrix& g, double rcond_min = 1e-12) {
    const int n = g.dim();
    if (n == 1) return iwasawa_coordinates(1, {}, {});

    square_matrix r = reverse_both(transpose(g));
    square_matrix q(n);
    detail::householder_qr(r, q);

    double dmin = std::abs(r(0, 0)), dmax = dmin;
    for (int i = 1; i < n; ++i) {
        const double d = std::abs(r(i, i));
        dmin = std::min(dmin, d);
        dmax = std::max(dmax, d);
    }
    if (!(dmax > 0.0) || !std::isfinite(dmax) || dmin / dmax < rcond_min)
        throw std::domain_error("iwasawa_decompose: singular or near-singular input " + g.str() +
                                " (rcond estimate " + std::to_string(dmax > 0.0 ? dmin / dmax : 0.0) + ")");

    // make the triangular diagonal positive; R^T reversed becomes the upper
    // triangular factor U with g = U k
    square_matrix u(n);
    for (int i = 0; i < n; ++i) {
        const double sign = r(i, i) < 0.0 ? -1.0 : 1.0;
        for (int j = i; j < n; ++j) u(n - 1 - j, n - 1 - i) = sign * r(i, j);
    }

    const double lambda = u(n - 1, n - 1);
    std::vector<double> dg(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) dg[i] = u(i, i) / lambda;

    std::vector<double> ys(static_cast<std::size_t>(n - 1));
    for (int k = 0; k < n - 1; ++k) ys[k] = dg[n - 2 - k] / dg[n - 1 - k];

    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) xs.push_back(u(i, j) / u(j, j));

    return iwasawa_coordinates(n, std::move(xs), std::move(ys));
}

// The matrix x y: products of y on the diagonal, x entries scaled by the
// column diagonal above it.
inline square_matrix rebuild(const iwasawa_coordinates& c) {
    const int n = c.dim();
    square_matrix m(n);
    std::vector<double> dg(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) dg[i] = c.d(i);
    for (int i = 0; i < n; ++i) {
        m(i, i) = dg[i];
        for (int j = i + 1; j < n; ++j) m(i, j) = c.x(i, j) * dg[j];
    }
    return m;
}

} // namespace eisenlab
