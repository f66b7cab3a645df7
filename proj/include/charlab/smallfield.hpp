#pragma once

#include <cstddef>
#include <vector>

#include "charlab/errors.hpp"

namespace charlab {

// GF(p^n) with full addition and multiplication tables. Elements are the
// integers 0..q-1 read as base-p digit strings, digit i being the
// coefficient of x^i. The reducing polynomials are fixed constants so the
// tables, and everything built on them, are deterministic.
struct SmallField {
    int p = 0;
    int n = 1;
    int q = 0;
    std::vector<int> add;  // q*q, row-major
    std::vector<int> mul;

    int add_at(int a, int b) const {
        return add[static_cast<std::size_t>(a) * static_cast<std::size_t>(q) +
                   static_cast<std::size_t>(b)];
    }
    int mul_at(int a, int b) const {
        return mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(q) +
                   static_cast<std::size_t>(b)];
    }
};

namespace fdetail {

// x^n expressed as a lower-degree polynomial, i.e. the negated tail of the
// fixed irreducible modulus, low coefficient first.
inline std::vector<int> reduction_tail(int p, int n) {
    if (p == 2 && n == 2) return {1, 1};           // x^2 + x + 1
    if (p == 2 && n == 3) return {1, 1, 0};        // x^3 + x + 1
    if (p == 3 && n == 2) return {2, 0};           // x^2 + 1
    if (p == 2 && n == 4) return {1, 1, 0, 0};     // x^4 + x + 1
    if (p == 5 && n == 2) return {3, 0};           // x^2 + 2
    if (p == 3 && n == 3) return {2, 1, 0};        // x^3 + 2x + 1
    if (p == 2 && n == 5) return {1, 0, 1, 0, 0};  // x^5 + x^2 + 1
    if (p == 7 && n == 2) return {6, 0};           // x^2 + 1
    if (p == 2 && n == 6) return {1, 1, 0, 0, 0, 0};  // x^6 + x + 1
    throw BadRecipe("no fixed field modulus for p=" + std::to_string(p) +
                    " n=" + std::to_string(n));
}

}  // namespace fdetail

inline SmallField small_field(int q) {
    if (q < 2) throw BadRecipe("field size must be at least 2");
    int p = 0;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) p = q;
    int n = 0;
    int m = q;
    while (m % p == 0) {
        m /= p;
        ++n;
    }
    if (m != 1) throw BadRecipe("field size " + std::to_string(q) + " is not a prime power");

    SmallField f;
    f.p = p;
    f.n = n;
    f.q = q;

    auto digits = [&](int a) {
        std::vector<int> d(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            d[static_cast<std::size_t>(i)] = a % p;
            a /= p;
        }
        return d;
    };
    auto encode = [&](const std::vector<int>& d) {
        int a = 0;
        for (int i = n - 1; i >= 0; --i) a = a * p + d[static_cast<std::size_t>(i)];
        return a;
    };

    std::vector<int> tail = n > 1 ? fdetail::reduction_tail(p, n) : std::vector<int>{};

    f.add.resize(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
    f.mul.resize(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            auto da = digits(a);
            auto db = digits(b);
            std::vector<int> ds(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                ds[static_cast<std::size_t>(i)] =
                    (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p;
            f.add[static_cast<std::size_t>(a) * static_cast<std::size_t>(q) +
                  static_cast<std::size_t>(b)] = encode(ds);

            // schoolbook product, then fold x^{n+k} down via the tail
            std::vector<int> prod(static_cast<std::size_t>(2 * n - 1), 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    prod[static_cast<std::size_t>(i + j)] =
                        (prod[static_cast<std::size_t>(i + j)] +
                         da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) %
                        p;
            for (int k = 2 * n - 2; k >= n; --k) {
                int c = prod[static_cast<std::size_t>(k)];
                if (c == 0) continue;
                prod[static_cast<std::size_t>(k)] = 0;
                for (int i = 0; i < n; ++i)
                    prod[static_cast<std::size_t>(k - n + i)] =
                        (prod[static_cast<std::size_t>(k - n + i)] +
                         c * tail[static_cast<std::size_t>(i)]) %
                        p;
            }
            prod.resize(static_cast<std::size_t>(n));
            f.mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(q) +
                  static_cast<std::size_t>(b)] = encode(prod);
        }
    return f;
}

}  // namespace charlab
