#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "charlab/errors.hpp"

namespace charlab {

// Polynomial over Z, coefficients in ascending degree order.
using PolyZ = std::vector<mpz_class>;

namespace detail {

// Exact division by a monic divisor; the remainder must vanish.
inline PolyZ poly_div_exact(PolyZ num, const PolyZ& den) {
    int dn = static_cast<int>(num.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    PolyZ quot(static_cast<std::size_t>(dn - dd + 1), 0);
    for (int k = dn - dd; k >= 0; --k) {
        mpz_class c = num[static_cast<std::size_t>(k + dd)];
        quot[static_cast<std::size_t>(k)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j)
            num[static_cast<std::size_t>(k + j)] -= c * den[static_cast<std::size_t>(j)];
    }
    for (const auto& c : num)
        if (c != 0) throw InternalInconsistency("nonzero remainder in exact division");
    return quot;
}

// Remainder of poly modulo a monic modulus.
inline PolyZ poly_rem(PolyZ poly, const PolyZ& mod) {
    int dd = static_cast<int>(mod.size()) - 1;
    for (int k = static_cast<int>(poly.size()) - 1; k >= dd; --k) {
        mpz_class c = poly[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j)
            poly[static_cast<std::size_t>(k - dd + j)] -= c * mod[static_cast<std::size_t>(j)];
    }
    poly.resize(static_cast<std::size_t>(dd));
    return poly;
}

inline const PolyZ& cyclotomic_polynomial_locked(int e, std::map<int, PolyZ>& cache) {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    PolyZ num(static_cast<std::size_t>(e + 1), 0);
    num[0] = -1;
    num[static_cast<std::size_t>(e)] = 1;
    for (int d = 1; d < e; ++d)
        if (e % d == 0) num = poly_div_exact(std::move(num), cyclotomic_polynomial_locked(d, cache));
    return cache.emplace(e, std::move(num)).first->second;
}

}  // namespace detail

// Coefficients of the e-th cyclotomic polynomial, by the recursive division
// (x^e - 1) / prod of lower cyclotomics. Memoized; thread-safe.
inline const PolyZ& cyclotomic_polynomial(int e) {
    static std::map<int, PolyZ> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    return detail::cyclotomic_polynomial_locked(e, cache);
}

// An element of Z[zeta_e]: integer coefficient vector of length e, with
// value sum coeffs[j] * zeta_e^j. Values are kept unreduced (for lifted
// characters the coefficients are eigenvalue multiplicities); reduction
// modulo Phi_e happens at comparisons and display.
class CyclotomicValue {
  public:
    CyclotomicValue() : order_(1), coeffs_(1, mpz_class(0)) {}

    CyclotomicValue(int order, std::vector<mpz_class> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {
        if (order_ < 1 || coeffs_.size() != static_cast<std::size_t>(order_))
            throw MixedOrder("coefficient vector length must equal the order");
    }

    static CyclotomicValue integer(int e, const mpz_class& v) {
        std::vector<mpz_class> c(static_cast<std::size_t>(e), mpz_class(0));
        c[0] = v;
        return CyclotomicValue(e, std::move(c));
    }

    static CyclotomicValue root_of_unity(int e, long long k) {
        std::vector<mpz_class> c(static_cast<std::size_t>(e), mpz_class(0));
        k %= e;
        if (k < 0) k += e;
        c[static_cast<std::size_t>(k)] = 1;
        return CyclotomicValue(e, std::move(c));
    }

    int order() const { return order_; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    CyclotomicValue operator+(const CyclotomicValue& o) const {
        check_order(o);
        std::vector<mpz_class> c = coeffs_;
        for (std::size_t j = 0; j < c.size(); ++j) c[j] += o.coeffs_[j];
        return CyclotomicValue(order_, std::move(c));
    }

    CyclotomicValue operator-() const {
        std::vector<mpz_class> c = coeffs_;
        for (auto& v : c) v = -v;
        return CyclotomicValue(order_, std::move(c));
    }

    CyclotomicValue operator-(const CyclotomicValue& o) const {
        check_order(o);
        std::vector<mpz_class> c = coeffs_;
        for (std::size_t j = 0; j < c.size(); ++j) c[j] -= o.coeffs_[j];
        return CyclotomicValue(order_, std::move(c));
    }

    // Cyclic convolution, skipping zero coefficients; character values are
    // sparse (abelian rows are single monomials), which keeps orthogonality
    // sums near-linear.
    CyclotomicValue operator*(const CyclotomicValue& o) const {
        check_order(o);
        std::vector<mpz_class> c(static_cast<std::size_t>(order_), mpz_class(0));
        for (int i = 0; i < order_; ++i) {
            const mpz_class& a = coeffs_[static_cast<std::size_t>(i)];
            if (a == 0) continue;
            for (int j = 0; j < order_; ++j) {
                const mpz_class& b = o.coeffs_[static_cast<std::size_t>(j)];
                if (b == 0) continue;
                int k = i + j;
                if (k >= order_) k -= order_;
                c[static_cast<std::size_t>(k)] += a * b;
            }
        }
        return CyclotomicValue(order_, std::move(c));
    }

    // Complex conjugation: zeta^j -> zeta^-j.
    CyclotomicValue conjugate() const {
        std::vector<mpz_class> c(static_cast<std::size_t>(order_), mpz_class(0));
        for (int j = 0; j < order_; ++j) {
            int k = (order_ - j) % order_;
            c[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(j)];
        }
        return CyclotomicValue(order_, std::move(c));
    }

    bool is_zero() const {
        for (const auto& r : reduced())
            if (r != 0) return false;
        return true;
    }

    bool equals(const CyclotomicValue& o) const { return (*this - o).is_zero(); }

    // Canonical form: remainder modulo Phi_e, length deg Phi_e.
    std::vector<mpz_class> reduced() const {
        return detail::poly_rem(coeffs_, cyclotomic_polynomial(order_));
    }

    // Reinterpret at a larger order that this order divides: zeta_e = zeta_m^(m/e).
    CyclotomicValue embed(int new_order) const {
        if (new_order % order_ != 0)
            throw MixedOrder("embedding target order must be a multiple of the source");
        int stride = new_order / order_;
        std::vector<mpz_class> c(static_cast<std::size_t>(new_order), mpz_class(0));
        for (int j = 0; j < order_; ++j)
            c[static_cast<std::size_t>(j * stride)] = coeffs_[static_cast<std::size_t>(j)];
        return CyclotomicValue(new_order, std::move(c));
    }

    std::complex<double> approx() const {
        const double tau = 6.283185307179586;
        std::complex<double> acc(0.0, 0.0);
        for (int j = 0; j < order_; ++j) {
            const mpz_class& v = coeffs_[static_cast<std::size_t>(j)];
            if (v == 0) continue;
            double angle = tau * j / order_;
            acc += v.get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        return acc;
    }

    // Canonical display: the reduced polynomial in z, ascending powers, e.g.
    // "2", "z - 1", "-2*z^3". Zero prints "0".
    std::string to_string() const {
        auto r = reduced();
        std::ostringstream out;
        bool first = true;
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (r[j] == 0) continue;
            mpz_class a = r[j];
            if (first) {
                if (a < 0) out << "-";
            } else {
                out << (a < 0 ? " - " : " + ");
            }
            mpz_class mag = abs(a);
            if (j == 0) {
                out << mag.get_str();
            } else {
                if (mag != 1) out << mag.get_str() << "*";
                out << "z";
                if (j > 1) out << "^" << j;
            }
            first = false;
        }
        if (first) return "0";
        return out.str();
    }

  private:
    void check_order(const CyclotomicValue& o) const {
        if (order_ != o.order_)
            throw MixedOrder("operands have orders " + std::to_string(order_) + " and " +
                             std::to_string(o.order_));
    }

    int order_;
    std::vector<mpz_class> coeffs_;
};

// True iff a * a_inv equals the integer target; with a_inv the value at the
// inverse element this decides |chi(g)| = chi(1) exactly.
inline bool abs_squared_equals(const CyclotomicValue& a, const CyclotomicValue& a_inv,
                               const mpz_class& target) {
    return (a * a_inv - CyclotomicValue::integer(a.order(), target)).is_zero();
}

}  // namespace charlab
