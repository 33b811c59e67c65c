// Copyright 2026 the hlfock authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>

#include "hlfock/types.hpp"

namespace hlfock {

namespace detail {

/// Shared kernel for the one-index polynomial: sums
/// c0 * sum_r w_r x^{n-2r} y^r with w_{r+1}/w_r = (n-2r)(n-2r-1)/(r+1),
/// i.e. H_n(x, y) for c0 = 1 and H_n(x, y)/n! for c0 = 1/n!.
inline Complex hkdf_sum(std::size_t n, Complex x, Complex y, double c0) {
    if (n == 0) return {c0, 0.0};
    std::vector<Complex> xp(n + 1);
    xp[0] = {1.0, 0.0};
    for (std::size_t k = 1; k <= n; ++k) xp[k] = xp[k - 1] * x;
    KahanSum<Complex> sum;
    double c = c0;
    Complex ypow{1.0, 0.0};
    for (std::size_t r = 0;; ++r) {
        sum.add(c * xp[n - 2 * r] * ypow);
        if (2 * (r + 1) > n) break;
        const double top = static_cast<double>(n - 2 * r);
        c *= top * (top - 1.0) / static_cast<double>(r + 1);
        ypow *= y;
    }
    return sum.value();
}

}  // namespace detail

/// Two-variable (heat) polynomial
/// H_n(x, y) = n! sum_{r=0}^{floor(n/2)} x^{n-2r} y^r / ((n-2r)! r!).
inline Complex hkdf(std::size_t n, Complex x, Complex y) {
    require_index(n, "hkdf");
    return detail::hkdf_sum(n, x, y, 1.0);
}

/// H_n(x, y) / n!; the numerically well-scaled building block used by all
/// matrix-element sums.
inline Complex hkdf_scaled(std::size_t n, Complex x, Complex y) {
    return detail::hkdf_sum(n, x, y, 1.0 / factorial(n));
}

/// H_k(x, y) / sqrt(k!) for k = 0..kmax by the three-term recurrence
/// H_{k+1} = x H_k + 2 k y H_{k-1}. Deliberately a different algorithm from
/// hkdf/hkdf_scaled so the two can cross-check each other.
inline std::vector<Complex> hermite_normalized_seq(std::size_t kmax, Complex x, Complex y) {
    std::vector<Complex> psi(kmax + 1);
    psi[0] = {1.0, 0.0};
    if (kmax == 0) return psi;
    psi[1] = x;
    for (std::size_t k = 1; k < kmax; ++k) {
        const double kk = static_cast<double>(k);
        psi[k + 1] = x * psi[k] / std::sqrt(kk + 1.0) +
                     2.0 * y * std::sqrt(kk / (kk + 1.0)) * psi[k - 1];
    }
    return psi;
}

/// Degenerate form H_n(x, 0) = x^n.
inline Complex hkdf_degenerate(std::size_t n, Complex x) {
    require_index(n, "hkdf_degenerate");
    Complex p{1.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) p *= x;
    return p;
}

/// Degenerate form H_n(0, y): y^{n/2} n!/(n/2)! for even n, 0 for odd n.
inline Complex hkdf_degenerate_y(std::size_t n, Complex y) {
    require_index(n, "hkdf_degenerate_y");
    if (n % 2 == 1) return {0.0, 0.0};
    Complex p{1.0, 0.0};
    double c = 1.0;
    for (std::size_t k = 0; k < n / 2; ++k) p *= y;
    for (std::size_t k = n / 2 + 1; k <= n; ++k) c *= static_cast<double>(k);
    return c * p;
}

/// Two-index polynomial
/// H_{m,n}(x, y; z, u | tau) =
///   m! n! sum_{r=0}^{min(m,n)} H_{m-r}(x,y) H_{n-r}(z,u) tau^r / ((m-r)! r! (n-r)!).
/// Grows like m! n!; overflows double for m, n both large. The scaled variant
/// below is what the matrix-element code uses.
inline Complex hkdf2(std::size_t m, std::size_t n,
                     Complex x, Complex y, Complex z, Complex u, Complex tau) {
    require_index(m, "hkdf2");
    require_index(n, "hkdf2");
    KahanSum<Complex> sum;
    double c = 1.0;  // m! n! / ((m-r)! r! (n-r)!), exact integer recurrence
    Complex tp{1.0, 0.0};
    const std::size_t rmax = std::min(m, n);
    for (std::size_t r = 0;; ++r) {
        sum.add(c * hkdf(m - r, x, y) * hkdf(n - r, z, u) * tp);
        if (r == rmax) break;
        c *= static_cast<double>(m - r) * static_cast<double>(n - r) /
             static_cast<double>(r + 1);
        tp *= tau;
    }
    return sum.value();
}

/// H_{m,n}(x, y; z, u | tau) / sqrt(m! n!).
inline Complex hkdf2_scaled(std::size_t m, std::size_t n,
                            Complex x, Complex y, Complex z, Complex u, Complex tau) {
    KahanSum<Complex> sum;
    double c = sqrt_factorial(m) * sqrt_factorial(n);  // sqrt(m! n!) / r!
    Complex tp{1.0, 0.0};
    const std::size_t rmax = std::min(m, n);
    for (std::size_t r = 0;; ++r) {
        sum.add(c * hkdf_scaled(m - r, x, y) * hkdf_scaled(n - r, z, u) * tp);
        if (r == rmax) break;
        c /= static_cast<double>(r + 1);
        tp *= tau;
    }
    return sum.value();
}

/// H_{m,n}(0, 0; 0, 0 | X) = delta_{mn} n! X^n, the rotation fast path.
inline Complex hkdf2_rotation_degenerate(std::size_t m, std::size_t n, Complex X) {
    require_index(m, "hkdf2_rotation_degenerate");
    require_index(n, "hkdf2_rotation_degenerate");
    if (m != n) return {0.0, 0.0};
    Complex p{1.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) p *= X;
    return factorial(n) * p;
}

/// Incomplete Hermite polynomial, even (eps = 0) or odd (eps = 1) variant:
/// (m+eps)! (n+eps)! sum_r x^{m-r} y^{n-r} tau^{2r+2eps} /
///                         ((m-r)! (n-r)! (2r+eps)!).
/// Evaluated from this explicit sum; the hyperbolic operational forms are
/// ambiguous in the degenerate case x = z = 0 and are not used.
inline Complex incomplete_hermite(int eps, std::size_t m, std::size_t n,
                                  Complex x, Complex y, Complex tau) {
    if (eps != 0 && eps != 1) {
        throw std::invalid_argument("incomplete_hermite: eps must be 0 or 1");
    }
    require_index(m, "incomplete_hermite");
    require_index(n, "incomplete_hermite");
    const auto& lf = log_factorials();
    const double lpre = lf(m + static_cast<std::size_t>(eps)) +
                        lf(n + static_cast<std::size_t>(eps));
    std::vector<Complex> xp(m + 1), yp(n + 1), tp(2 * std::min(m, n) + 2 * eps + 1);
    xp[0] = yp[0] = tp[0] = Complex{1.0, 0.0};
    for (std::size_t k = 1; k <= m; ++k) xp[k] = xp[k - 1] * x;
    for (std::size_t k = 1; k <= n; ++k) yp[k] = yp[k - 1] * y;
    for (std::size_t k = 1; k < tp.size(); ++k) tp[k] = tp[k - 1] * tau;
    KahanSum<Complex> sum;
    for (std::size_t r = 0; r <= std::min(m, n); ++r) {
        const double lc = lpre - lf(m - r) - lf(n - r) - lf(2 * r + eps);
        sum.add(std::exp(lc) * xp[m - r] * yp[n - r] * tp[2 * r + 2 * eps]);
    }
    return sum.value();
}

/// Truncated exponential generating function sum_{k=0}^{n_max} t^k/k! H_k(x,y),
/// which converges to e^{t x + t^2 y}.
inline SeriesResult gen_func_truncated(Complex x, Complex y, Complex t, std::size_t n_max) {
    SeriesResult res;
    KahanSum<Complex> sum;
    const std::size_t cap = std::min(n_max, kSeriesCap);
    Complex tp{1.0, 0.0};
    int small_run = 0;
    for (std::size_t k = 0; k <= cap; ++k) {
        const Complex term = tp * hkdf_scaled(k, x, y);
        sum.add(term);
        res.last_term = std::abs(term);
        res.terms = k + 1;
        if (res.last_term <= 1e-16 * std::abs(sum.value()) && std::abs(sum.value()) > 0.0) {
            if (++small_run >= 3) {
                res.converged = true;
                break;
            }
        } else {
            small_run = 0;
        }
        tp *= t;
    }
    res.value = sum.value();
    if (!res.converged) {
        res.converged = res.last_term <= 1e-16 * std::abs(res.value);
    }
    return res;
}

/// Closed Mehler-type kernel
/// G(x,y;z,v|t) = (1 - 4 y t^2 v)^{-1/2}
///                exp{ (x t z + t^2 (x^2 v + y z^2)) / (1 - 4 y t^2 v) }
/// on the principal square-root branch.
inline Complex mehler_closed(Complex x, Complex y, Complex z, Complex v, Complex t,
                             double singular_eps = 1e-12) {
    const Complex denom = Complex{1.0, 0.0} - 4.0 * y * t * t * v;
    if (std::abs(denom) < singular_eps) {
        throw std::domain_error("mehler_closed: 1 - 4 y t^2 v is singular");
    }
    const Complex expo = (x * t * z + t * t * (x * x * v + y * z * z)) / denom;
    return std::exp(expo) / std::sqrt(denom);
}

/// Series form sum_k t^k/k! H_k(x,y) H_k(z,v); the independent oracle for
/// mehler_closed. Terms are accumulated as t^k psi_k(x,y) psi_k(z,v) with
/// psi_k = H_k/sqrt(k!) so that no factorial is ever materialized.
inline SeriesResult mehler_series(Complex x, Complex y, Complex z, Complex v, Complex t,
                                  std::size_t n_max) {
    SeriesResult res;
    const std::size_t cap = std::min(n_max, kSeriesCap);
    const auto psi_a = hermite_normalized_seq(cap, x, y);
    const auto psi_b = hermite_normalized_seq(cap, z, v);
    KahanSum<Complex> sum;
    Complex tp{1.0, 0.0};
    int small_run = 0;
    int grow_run = 0;
    double prev_mag = 0.0;
    for (std::size_t k = 0; k <= cap; ++k) {
        const Complex term = tp * psi_a[k] * psi_b[k];
        const double mag = std::abs(term);
        if (!std::isfinite(mag)) {
            res.converged = false;
            break;
        }
        sum.add(term);
        res.last_term = mag;
        res.terms = k + 1;
        if (mag <= 1e-16 * std::abs(sum.value()) && std::abs(sum.value()) > 0.0) {
            if (++small_run >= 3) {
                res.converged = true;
                break;
            }
        } else {
            small_run = 0;
        }
        grow_run = (k > 0 && mag > prev_mag) ? grow_run + 1 : 0;
        if (grow_run >= 10) {
            res.converged = false;  // divergence flag
            break;
        }
        prev_mag = mag;
        tp *= t;
    }
    res.value = sum.value();
    return res;
}

/// Mixed derivative of a quadratic exponential:
/// d^m/dx^m d^n/dy^n e^{a x^2 + b x y + c y^2}
///   = H_{m,n}(2ax + by, a; 2cy + bx, c | b) e^{a x^2 + b x y + c y^2}.
inline Complex mixed_deriv_quadexp(std::size_t m, std::size_t n,
                                   Complex a, Complex b, Complex c,
                                   Complex x, Complex y) {
    require_index(m, "mixed_deriv_quadexp");
    require_index(n, "mixed_deriv_quadexp");
    const Complex expo = std::exp(a * x * x + b * x * y + c * y * y);
    if (m == 0 && n == 0) return expo;
    return hkdf2(m, n, 2.0 * a * x + b * y, a, 2.0 * c * y + b * x, c, b) * expo;
}

/// Generalized Laguerre polynomial
/// L_n^{(k)}(x) = sum_{j=0}^n (-1)^j C(n+k, n-j) x^j / j!, with integer
/// k >= -n (as arises from Fock index differences).
inline Complex laguerre_generalized(std::size_t n, long k, Complex x) {
    require_index(n, "laguerre_generalized");
    if (k < -static_cast<long>(n)) {
        throw std::domain_error("laguerre_generalized: k < -n");
    }
    const auto& lf = log_factorials();
    const long top = static_cast<long>(n) + k;  // >= 0
    KahanSum<Complex> sum;
    Complex xp{1.0, 0.0};
    double sign = 1.0;
    for (std::size_t j = 0; j <= n; ++j) {
        const long choose = static_cast<long>(n - j);
        if (choose <= top) {
            const double lc = lf(static_cast<std::size_t>(top)) -
                              lf(static_cast<std::size_t>(choose)) -
                              lf(static_cast<std::size_t>(top - choose)) - lf(j);
            sum.add(sign * std::exp(lc) * xp);
        }
        xp *= x;
        sign = -sign;
    }
    return sum.value();
}

}  // namespace hlfock
