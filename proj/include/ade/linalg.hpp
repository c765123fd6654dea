#pragma once

// Dense exact linear algebra on the small matrices this project needs:
// rational Gaussian elimination (rank / determinant / linear solve) and an
// integer matrix type for group elements and lattice data. Sizes stay in
// the dozens, so simplicity beats asymptotics throughout.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ade/errors.hpp"
#include "ade/rational.hpp"

namespace ade {

using QMat = std::vector<std::vector<Rat>>;
using QVec = std::vector<Rat>;

inline QMat qmat_zero(std::size_t rows, std::size_t cols) {
    return QMat(rows, QVec(cols, Rat(0)));
}

inline QMat qmat_identity(std::size_t n) {
    QMat m = qmat_zero(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// In-place reduction to reduced row echelon form. Returns the pivot column
// of each pivot row, in order.
inline std::vector<std::size_t> rref(QMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        const Rat inv = m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t qmat_rank(QMat m) {
    return rref(m).size();
}

inline Rat qmat_det(QMat m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("determinant of non-square matrix");
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && m[sel][c] == 0) ++sel;
        if (sel == n) return Rat(0);
        if (sel != c) {
            std::swap(m[sel], m[c]);
            det = -det;
        }
        det *= m[c][c];
        const Rat inv = m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            const Rat f = m[i][c] / inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

struct LinearSolution {
    bool consistent = false;
    bool unique = false;
    QVec solution;                    // one solution when consistent (the
                                      // pivot-variable solution with free
                                      // variables set to zero)
    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> free_cols;
};

// Solves A x = b over the rationals, reporting consistency, uniqueness and
// the free-column structure.
inline LinearSolution solve_linear(const QMat& a, const QVec& b) {
    LinearSolution out;
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    QMat aug = qmat_zero(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    std::vector<std::size_t> piv = rref(aug);
    for (std::size_t p : piv)
        if (p == cols) return out;  // row (0 ... 0 | 1): inconsistent
    out.consistent = true;
    out.pivot_cols = piv;
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : piv) is_pivot[p] = true;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) out.free_cols.push_back(c);
    out.unique = out.free_cols.empty();
    out.solution.assign(cols, Rat(0));
    for (std::size_t i = 0; i < piv.size(); ++i) out.solution[piv[i]] = aug[i][cols];
    return out;
}

// Characteristic polynomial det(xI - A) by the Faddeev-LeVerrier recurrence.
// Returns coefficients c[0..n] with c[0] the constant term and c[n] = 1.
inline QVec char_poly(const QMat& a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw DomainError("characteristic polynomial of non-square matrix");
    QVec coeff(n + 1, Rat(0));
    coeff[n] = 1;
    QMat m = qmat_zero(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        // m <- a * (m + c_{n-k+1} I)
        QMat t = m;
        for (std::size_t i = 0; i < n; ++i) t[i][i] += coeff[n - k + 1];
        QMat next = qmat_zero(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                if (a[i][l] == 0) continue;
                for (std::size_t j = 0; j < n; ++j) next[i][j] += a[i][l] * t[l][j];
            }
        m = std::move(next);
        Rat tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += m[i][i];
        coeff[n - k] = -tr / Rat(static_cast<long>(k));
    }
    return coeff;
}

// Square integer matrix with value semantics; used for Weyl group elements,
// Cartan matrices and Picard-Lefschetz transvections. Entries stay small
// (the groups handled here are finite), int64 is ample.
class IntMat {
public:
    IntMat() : n_(0) {}
    explicit IntMat(std::size_t n) : n_(n), d_(n * n, 0) {}

    static IntMat identity(std::size_t n) {
        IntMat m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t dim() const { return n_; }
    std::int64_t& at(std::size_t i, std::size_t j) { return d_[i * n_ + j]; }
    std::int64_t at(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }

    IntMat operator*(const IntMat& o) const {
        if (n_ != o.n_) throw DomainError("matrix size mismatch in product");
        IntMat r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const std::int64_t v = at(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < n_; ++j) r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }

    std::vector<std::int64_t> apply(const std::vector<std::int64_t>& x) const {
        if (x.size() != n_) throw DomainError("matrix/vector size mismatch");
        std::vector<std::int64_t> y(n_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) y[i] += at(i, j) * x[j];
        return y;
    }

    IntMat transpose() const {
        IntMat r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    std::int64_t trace() const {
        std::int64_t t = 0;
        for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    bool operator==(const IntMat& o) const { return n_ == o.n_ && d_ == o.d_; }
    bool operator!=(const IntMat& o) const { return !(*this == o); }
    bool operator<(const IntMat& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return d_ < o.d_;
    }

    const std::vector<std::int64_t>& flat() const { return d_; }

    QMat to_qmat() const {
        QMat m = qmat_zero(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) m[i][j] = Rat(static_cast<long>(at(i, j)));
        return m;
    }

private:
    std::size_t n_;
    std::vector<std::int64_t> d_;
};

struct IntMatHash {
    std::size_t operator()(const IntMat& m) const {
        std::size_t h = 1469598103934665603ull;
        for (std::int64_t v : m.flat()) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h ^ m.dim();
    }
};

struct IntVecHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (std::int64_t x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace ade
