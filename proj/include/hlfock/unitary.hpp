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

#include <cmath>
#include <numbers>

#include "hlfock/hermite.hpp"
#include "hlfock/matrix.hpp"

namespace hlfock {

namespace detail {

/// Reduce an angle to (-pi, pi].
inline double wrap_angle(double a) {
    double w = std::remainder(a, 2.0 * std::numbers::pi);
    if (w <= -std::numbers::pi) w += 2.0 * std::numbers::pi;
    return w;
}

}  // namespace detail

/// Parameters of the Gaussian unitary U = S(z) D(alpha) R(phi) with
/// z = r e^{i theta}. Angles are reduced to (-pi, pi] on construction.
struct BosonicParams {
    Complex alpha{0.0, 0.0};
    double phi = 0.0;
    double r = 0.0;
    double theta = 0.0;

    BosonicParams() = default;
    BosonicParams(Complex alpha_, double phi_, double r_, double theta_)
        : alpha(alpha_), phi(detail::wrap_angle(phi_)), r(r_),
          theta(detail::wrap_angle(theta_)) {
        if (!(r_ >= 0.0) || !std::isfinite(r_)) {
            throw std::domain_error("BosonicParams: squeeze magnitude r must be >= 0");
        }
        if (!std::isfinite(alpha_.real()) || !std::isfinite(alpha_.imag()) ||
            !std::isfinite(phi_) || !std::isfinite(theta_)) {
            throw std::domain_error("BosonicParams: parameters must be finite");
        }
    }
};

/// Normal-ordering quantities of U = S(z) D(alpha) R(phi):
///   T = e^{i theta} tanh r,   S = sech r,
///   K0 = S^{1/2} exp{-(|alpha|^2 + T* alpha^2)/2},
///   x = alpha S,   y = T/2,   z_poly = -(alpha T* + alpha*) e^{i phi},
///   u = -(T*/2) e^{2 i phi},  X = S e^{i phi}.
/// The polynomial variable named z in the source formulas is z_poly here,
/// to keep it apart from the squeeze parameter z = r e^{i theta}.
struct OrderingParams {
    Complex T{0.0, 0.0};
    double S = 1.0;
    Complex k0{1.0, 0.0};
    Complex x{0.0, 0.0};
    Complex y{0.0, 0.0};
    Complex z_poly{0.0, 0.0};
    Complex u{0.0, 0.0};
    Complex X{1.0, 0.0};
};

inline OrderingParams derive_ordering(const BosonicParams& p) {
    OrderingParams op;
    op.T = std::polar(1.0, p.theta) * std::tanh(p.r);
    op.S = 1.0 / std::cosh(p.r);
    const Complex Tc = std::conj(op.T);
    op.k0 = std::sqrt(op.S) *
            std::exp(-0.5 * (std::norm(p.alpha) + Tc * p.alpha * p.alpha));
    const Complex eiphi = std::polar(1.0, p.phi);
    op.x = p.alpha * op.S;
    op.y = 0.5 * op.T;
    op.z_poly = -(p.alpha * Tc + std::conj(p.alpha)) * eiphi;
    op.u = -0.5 * Tc * eiphi * eiphi;
    op.X = op.S * eiphi;
    return op;
}

/// Fock coefficient U_{m,n} = K0 / sqrt(m! n!) H_{m,n}(x, y; z_poly, u | X).
inline Complex unitary_coeff(std::size_t m, std::size_t n, const OrderingParams& op) {
    require_index(m, "unitary_coeff");
    require_index(n, "unitary_coeff");
    return op.k0 * hkdf2_scaled(m, n, op.x, op.y, op.z_poly, op.u, op.X);
}

inline ComplexMatrix unitary_matrix(const OrderingParams& op, std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("unitary_matrix: dim must be positive");
    require_index(dim - 1, "unitary_matrix");
    std::vector<Complex> hx(dim), hz(dim), Xp(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        hx[k] = hkdf_scaled(k, op.x, op.y);
        hz[k] = hkdf_scaled(k, op.z_poly, op.u);
        Xp[k] = (k == 0) ? Complex{1.0, 0.0} : Xp[k - 1] * op.X;
    }
    ComplexMatrix out(dim, dim);
    for (std::size_t m = 0; m < dim; ++m) {
        for (std::size_t n = 0; n < dim; ++n) {
            KahanSum<Complex> sum;
            double c = sqrt_factorial(m) * sqrt_factorial(n);  // sqrt(m!n!)/r!
            const std::size_t rmax = std::min(m, n);
            for (std::size_t r = 0;; ++r) {
                sum.add(c * hx[m - r] * hz[n - r] * Xp[r]);
                if (r == rmax) break;
                c /= static_cast<double>(r + 1);
            }
            out(m, n) = op.k0 * sum.value();
        }
    }
    return out;
}

inline ComplexMatrix unitary_matrix(const BosonicParams& p, std::size_t dim) {
    return unitary_matrix(derive_ordering(p), dim);
}

/// Independent route to U_{m,n}: the explicit normal-ordering sum
/// U_{m,n} = K0 sum_r B_{m,r} X^r F_{r,n} with
/// B_{m,r} = H_{m-r}(x,y)/(m-r)! sqrt(m!/r!) and
/// F_{r,n} = H_{n-r}(z,u)/(n-r)! sqrt(n!/r!), evaluated through the
/// recurrence-based normalized Hermite sequence rather than the explicit
/// polynomial sums.
inline Complex appendix_a_coeff(std::size_t m, std::size_t n, const OrderingParams& op) {
    require_index(m, "appendix_a_coeff");
    require_index(n, "appendix_a_coeff");
    const auto psi_b = hermite_normalized_seq(m, op.x, op.y);
    const auto psi_f = hermite_normalized_seq(n, op.z_poly, op.u);
    const auto& lf = log_factorials();
    KahanSum<Complex> sum;
    Complex Xp{1.0, 0.0};
    for (std::size_t r = 0; r <= std::min(m, n); ++r) {
        // B_{m,r} = psi_{m-r} sqrt(C(m,r)); F_{r,n} = psi_{n-r} sqrt(C(n,r))
        const double cb = std::exp(0.5 * (lf(m) - lf(m - r) - lf(r)));
        const double cf = std::exp(0.5 * (lf(n) - lf(n - r) - lf(r)));
        sum.add(cb * psi_b[m - r] * Xp * cf * psi_f[n - r]);
        Xp *= op.X;
    }
    return op.k0 * sum.value();
}

inline ComplexMatrix appendix_a_matrix(const OrderingParams& op, std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("appendix_a_matrix: dim must be positive");
    require_index(dim - 1, "appendix_a_matrix");
    ComplexMatrix out(dim, dim);
    for (std::size_t m = 0; m < dim; ++m)
        for (std::size_t n = 0; n < dim; ++n) out(m, n) = appendix_a_coeff(m, n, op);
    return out;
}

/// Fast path for a pure displacement:
///   <m|D(alpha)|n> = e^{-|alpha|^2/2} sqrt(n!/m!) alpha^{m-n} L_n^{(m-n)}(|alpha|^2)
/// for m >= n, and the mirrored form with -alpha* for m < n.
inline Complex displacement_laguerre_coeff(std::size_t m, std::size_t n, Complex alpha) {
    require_index(m, "displacement_laguerre_coeff");
    require_index(n, "displacement_laguerre_coeff");
    const double a2 = std::norm(alpha);
    const auto& lf = log_factorials();
    if (m >= n) {
        Complex ap{1.0, 0.0};
        for (std::size_t k = 0; k < m - n; ++k) ap *= alpha;
        return std::exp(-0.5 * a2) * std::exp(0.5 * (lf(n) - lf(m))) * ap *
               laguerre_generalized(n, static_cast<long>(m - n), a2);
    }
    Complex ap{1.0, 0.0};
    for (std::size_t k = 0; k < n - m; ++k) ap *= -std::conj(alpha);
    return std::exp(-0.5 * a2) * std::exp(0.5 * (lf(m) - lf(n))) * ap *
           laguerre_generalized(m, static_cast<long>(n - m), a2);
}

/// Truncation-dimension guidance for unitarity experiments; squeezing
/// populates Fock levels geometrically in e^{2r}.
inline std::size_t suggested_unitary_dim(const BosonicParams& p) {
    const double a2 = std::norm(p.alpha);
    const auto d1 = static_cast<std::size_t>(4.0 * std::ceil(a2));
    const auto d2 = static_cast<std::size_t>(std::ceil(10.0 * std::exp(2.0 * p.r)));
    return std::max<std::size_t>({d1, d2, 16});
}

}  // namespace hlfock
