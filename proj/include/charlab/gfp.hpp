#pragma once

#include <cstddef>
#include <vector>

#include "charlab/errors.hpp"

namespace charlab {
namespace gfp {

// Dense matrices over GF(p), p a small odd prime (or 2 for the trivial
// group). Entries are canonical representatives in [0, p).
using Matrix = std::vector<std::vector<long long>>;
using Vector = std::vector<long long>;

inline long long mod_pow(long long base, long long exp, long long p) {
    long long result = 1 % p;
    base %= p;
    if (base < 0) base += p;
    while (exp > 0) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

inline long long mod_inv(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw InternalInconsistency("inverse of zero mod p");
    return mod_pow(a, p - 2, p);
}

inline Matrix identity(int n) {
    Matrix m(static_cast<std::size_t>(n), Vector(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return m;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b, long long p) {
    std::size_t n = a.size();
    std::size_t m = b[0].size();
    std::size_t k = b.size();
    Matrix c(n, Vector(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            long long v = a[i][t];
            if (v == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                c[i][j] = (c[i][j] + v * b[t][j]) % p;
        }
    return c;
}

// Row echelon reduction in place; returns pivot column per reduced row.
inline std::vector<int> row_reduce(Matrix& m, long long p) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::vector<int> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        long long inv = mod_inv(m[r][c], p);
        for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            long long f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = (m[i][j] - f * m[r][j] % p + p * p) % p;
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

// Basis of the null space of m (as column vectors of length cols).
inline std::vector<Vector> kernel_basis(Matrix m, long long p) {
    std::size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<int> pivots = row_reduce(m, p);
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = 1;
    std::vector<Vector> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vector v(cols, 0);
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            long long coeff = m[r][free_col];
            if (coeff != 0)
                v[static_cast<std::size_t>(pivots[r])] = (p - coeff) % p;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve A x = b for a consistent system; A is destroyed. Used to express
// images in terms of a basis (the system is known solvable and the basis
// has full column rank). Throws on inconsistency.
inline Vector solve(Matrix a, Vector b, long long p) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i] % p);
    std::vector<int> pivots = row_reduce(a, p);
    Vector x(cols, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == static_cast<int>(cols))
            throw InternalInconsistency("inconsistent linear system");
        x[static_cast<std::size_t>(pivots[r])] = a[r][cols];
    }
    return x;
}

// Characteristic polynomial det(lambda I - A) mod p, monic, coefficients
// ascending. Computed by similarity reduction to upper Hessenberg form and
// the last-column determinant recurrence carried on coefficient vectors.
inline Vector char_poly(Matrix a, long long p) {
    int n = static_cast<int>(a.size());
    // Hessenberg reduction by row/column similarity operations.
    for (int j = 0; j + 2 < n; ++j) {
        int pivot = -1;
        for (int i = j + 1; i < n; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != j + 1) {
            std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(j + 1)]);
            for (int r = 0; r < n; ++r)
                std::swap(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(pivot)],
                          a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j + 1)]);
        }
        long long inv = mod_inv(a[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(j)], p);
        for (int i = j + 2; i < n; ++i) {
            long long f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * inv % p;
            if (f == 0) continue;
            for (int c = 0; c < n; ++c)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] =
                    (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] -
                     f * a[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(c)] % p + p * p) %
                    p;
            for (int r = 0; r < n; ++r)
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j + 1)] =
                    (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j + 1)] +
                     f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)]) %
                    p;
        }
    }

    // d_m = (x - H[m-1][m-1]) d_{m-1}
    //       - sum_k H[m-1-k][m-1] * (prod of k subdiagonal entries) * d_{m-1-k}.
    std::vector<Vector> d(static_cast<std::size_t>(n + 1));
    d[0] = {1};
    for (int m = 1; m <= n; ++m) {
        Vector poly(static_cast<std::size_t>(m + 1), 0);
        const Vector& prev = d[static_cast<std::size_t>(m - 1)];
        long long diag = a[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(m - 1)];
        for (int t = 0; t < m; ++t) {
            poly[static_cast<std::size_t>(t + 1)] = (poly[static_cast<std::size_t>(t + 1)] + prev[static_cast<std::size_t>(t)]) % p;
            poly[static_cast<std::size_t>(t)] =
                (poly[static_cast<std::size_t>(t)] - diag * prev[static_cast<std::size_t>(t)] % p + p * p) % p;
        }
        long long subprod = 1;
        for (int k = 1; k <= m - 1; ++k) {
            subprod = subprod * a[static_cast<std::size_t>(m - k)][static_cast<std::size_t>(m - k - 1)] % p;
            if (subprod == 0) break;
            long long entry = a[static_cast<std::size_t>(m - 1 - k)][static_cast<std::size_t>(m - 1)];
            if (entry == 0) continue;
            long long f = entry * subprod % p;
            const Vector& dk = d[static_cast<std::size_t>(m - 1 - k)];
            for (std::size_t t = 0; t < dk.size(); ++t)
                poly[t] = (poly[t] - f * dk[t] % p + p * p) % p;
        }
        d[static_cast<std::size_t>(m)] = std::move(poly);
    }
    return d[static_cast<std::size_t>(n)];
}

// All roots in GF(p) of a polynomial, by Horner scan over the field.
inline Vector poly_roots(const Vector& poly, long long p) {
    Vector roots;
    for (long long x = 0; x < p; ++x) {
        long long acc = 0;
        for (std::size_t t = poly.size(); t-- > 0;) acc = (acc * x + poly[t]) % p;
        if (acc == 0) roots.push_back(x);
    }
    return roots;
}

// Smallest primitive e-th root of unity mod p; requires p = 1 (mod e).
inline long long primitive_root_of_unity(long long e, long long p) {
    if (e == 1) return 1;
    std::vector<long long> prime_factors;
    long long tmp = e;
    for (long long q = 2; q * q <= tmp; ++q)
        if (tmp % q == 0) {
            prime_factors.push_back(q);
            while (tmp % q == 0) tmp /= q;
        }
    if (tmp > 1) prime_factors.push_back(tmp);
    for (long long theta = 2; theta < p; ++theta) {
        if (mod_pow(theta, e, p) != 1) continue;
        bool primitive = true;
        for (long long q : prime_factors)
            if (mod_pow(theta, e / q, p) == 1) {
                primitive = false;
                break;
            }
        if (primitive) return theta;
    }
    throw InternalInconsistency("no primitive root of unity found");
}

}  // namespace gfp
}  // namespace charlab
