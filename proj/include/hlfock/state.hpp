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

#include "hlfock/unitary.hpp"

namespace hlfock {

/// Parameters of a noisy Gaussian state rho = U rho_th U^dagger with
/// U = S(z) D(alpha), z = r e^{i theta}, and mean thermal occupation nbar.
/// The rotation phase is irrelevant here (it commutes with rho_th) and is
/// fixed to zero.
struct StateParams {
    Complex alpha{0.0, 0.0};
    double r = 0.0;
    double theta = 0.0;
    double nbar = 0.0;
};

/// Quantities derived from StateParams:
///   Y = nbar/(nbar+1),  L = 1/(1 - Y^2 tanh^2 r),
///   a = L Y^2 u*,  b = L Y,
///   J = (1-Y) |K0|^2 sqrt(L) exp{a z^2 + a* z*^2 + b |z|^2},  z := z_poly.
struct StateDerived {
    StateParams params;
    OrderingParams ordering;  // phi = 0
    double Y = 0.0;
    double L = 1.0;
    Complex a{0.0, 0.0};
    double b = 0.0;
    double J = 1.0;
    Complex z_poly{0.0, 0.0};
    Complex u{0.0, 0.0};
};

inline StateDerived derive_state(const StateParams& p) {
    if (!(p.nbar >= 0.0) || !std::isfinite(p.nbar)) {
        throw std::domain_error("derive_state: nbar must be >= 0");
    }
    StateDerived d;
    d.params = p;
    d.ordering = derive_ordering(BosonicParams(p.alpha, 0.0, p.r, p.theta));
    d.Y = p.nbar / (p.nbar + 1.0);
    const double th = std::tanh(p.r);
    const double radicand = 1.0 - d.Y * d.Y * th * th;
    if (!(radicand > 0.0)) {
        throw std::logic_error("derive_state: 1 - Y^2 tanh^2 r must be positive");
    }
    d.L = 1.0 / radicand;
    d.a = d.L * d.Y * d.Y * std::conj(d.ordering.u);
    d.b = d.L * d.Y;
    d.z_poly = d.ordering.z_poly;
    d.u = d.ordering.u;
    const double expo = 2.0 * std::real(d.a * d.z_poly * d.z_poly) +
                        d.b * std::norm(d.z_poly);
    d.J = (1.0 - d.Y) * std::norm(d.ordering.k0) * std::sqrt(d.L) * std::exp(expo);
    if (!(d.J > 0.0) || !std::isfinite(d.J)) {
        throw std::logic_error("derive_state: J must be real positive");
    }
    return d;
}

/// Thermal Fock coefficients (rho_th)_{m,n} = (1-Y) Y^m delta_{m,n}.
inline Complex thermal_coeff(std::size_t m, std::size_t n, double nbar) {
    if (!(nbar >= 0.0)) throw std::domain_error("thermal_coeff: nbar must be >= 0");
    if (m != n) return {0.0, 0.0};
    const double Y = nbar / (nbar + 1.0);
    double p = 1.0;
    for (std::size_t k = 0; k < m; ++k) p *= Y;
    return {(1.0 - Y) * p, 0.0};
}

namespace detail {

/// First argument of the W-factor polynomial: 2 a z + b z*.
inline Complex w_argument(const StateDerived& d) {
    return 2.0 * d.a * d.z_poly + d.b * std::conj(d.z_poly);
}

}  // namespace detail

/// Lower-triangular factor entry K_{m,r} = sqrt(m!) H_{m-r}(x,y) X^r / ((m-r)! r!).
inline Complex k_entry(std::size_t m, std::size_t r, const StateDerived& d) {
    require_index(m, "k_entry");
    require_index(r, "k_entry");
    if (r > m) return {0.0, 0.0};
    Complex Xp{1.0, 0.0};
    for (std::size_t k = 0; k < r; ++k) Xp *= d.ordering.X;
    return sqrt_factorial(m) / factorial(r) *
           hkdf_scaled(m - r, d.ordering.x, d.ordering.y) * Xp;
}

/// Hermitian factor entry W_{r,s} = H_{r,s}(2az + bz*, a; 2a*z* + bz, a* | b).
inline Complex w_entry(std::size_t r, std::size_t s, const StateDerived& d) {
    require_index(r, "w_entry");
    require_index(s, "w_entry");
    const Complex w1 = detail::w_argument(d);
    return hkdf2(r, s, w1, d.a, std::conj(w1), std::conj(d.a), Complex{d.b, 0.0});
}

/// Truncated series
/// G_{r,s} = sum_{j >= max(r,s)} j! Y^j H_{j-r}(z,u) H*_{j-s}(z,u) / ((j-r)!(j-s)!),
/// the resummed thermal sum behind the W factor. Its closed form is
/// sqrt(L) H_{r,s}(...|b) exp{a z^2 + a* z*^2 + b |z|^2}; terms are built from
/// normalized Hermite values so the j! never appears on its own.
inline SeriesResult g_series(std::size_t r, std::size_t s, const StateDerived& d,
                             std::size_t j_max) {
    require_index(r, "g_series");
    require_index(s, "g_series");
    SeriesResult res;
    const std::size_t j0 = std::max(r, s);
    if (d.Y == 0.0) {
        res.value = (r == 0 && s == 0) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
        res.converged = true;
        res.terms = 1;
        return res;
    }
    const std::size_t cap = std::min(j_max, kSeriesCap);
    const auto psi = hermite_normalized_seq(cap, d.z_poly, d.u);
    const auto& lf = log_factorials();
    const double lnY = std::log(d.Y);
    KahanSum<Complex> sum;
    int small_run = 0, grow_run = 0;
    double prev_mag = 0.0;
    for (std::size_t j = j0; j <= cap; ++j) {
        const double lc = lf(j) + static_cast<double>(j) * lnY -
                          0.5 * lf(j - r) - 0.5 * lf(j - s);
        const Complex term = std::exp(lc) * psi[j - r] * std::conj(psi[j - s]);
        const double mag = std::abs(term);
        if (!std::isfinite(mag)) break;
        sum.add(term);
        res.last_term = mag;
        ++res.terms;
        if (mag <= 1e-16 * std::abs(sum.value())) {
            if (++small_run >= 3) {
                res.converged = true;
                break;
            }
        } else {
            small_run = 0;
        }
        grow_run = (j > j0 && mag > prev_mag) ? grow_run + 1 : 0;
        if (grow_run >= 10) break;  // non-convergence flag stays false
        prev_mag = mag;
    }
    res.value = sum.value();
    return res;
}

/// Fock coefficient of the noisy Gaussian state,
/// rho_{m,n} = J sum_{r<=m} sum_{s<=n} K_{m,r} W_{r,s} K*_{n,s},
/// accumulated in the rescaled form (K sqrt(r!)) (W/sqrt(r!s!)) (K* sqrt(s!)).
inline Complex rho_coeff(std::size_t m, std::size_t n, const StateDerived& d) {
    require_index(m, "rho_coeff");
    require_index(n, "rho_coeff");
    const std::size_t top = std::max(m, n);
    const Complex w1 = detail::w_argument(d);
    std::vector<Complex> hx(top + 1), hw(top + 1), Xp(top + 1);
    for (std::size_t k = 0; k <= top; ++k) {
        hx[k] = hkdf_scaled(k, d.ordering.x, d.ordering.y);
        hw[k] = hkdf_scaled(k, w1, d.a);
        Xp[k] = (k == 0) ? Complex{1.0, 0.0} : Xp[k - 1] * d.ordering.X;
    }
    const auto& lf = log_factorials();
    auto k_scaled = [&](std::size_t mm, std::size_t rr) {
        return std::exp(0.5 * (lf(mm) - lf(rr))) * hx[mm - rr] * Xp[rr];
    };
    KahanSum<Complex> sum;
    for (std::size_t r = 0; r <= m; ++r) {
        const Complex km = k_scaled(m, r);
        for (std::size_t s = 0; s <= n; ++s) {
            KahanSum<Complex> w;
            double bp = 1.0;
            for (std::size_t k = 0; k <= std::min(r, s); ++k) {
                w.add(std::exp(0.5 * (lf(r) + lf(s)) - lf(k)) * hw[r - k] *
                      std::conj(hw[s - k]) * bp);
                bp *= d.b;
            }
            sum.add(km * w.value() * std::conj(k_scaled(n, s)));
        }
    }
    return d.J * sum.value();
}

inline Complex rho_coeff(std::size_t m, std::size_t n, const StateParams& p) {
    return rho_coeff(m, n, derive_state(p));
}

/// The K (lower triangular) and W (Hermitian PSD) factors of
/// rho = J K W K^dagger over the truncated block.
struct FactorMatrices {
    ComplexMatrix K;
    ComplexMatrix W;
};

inline FactorMatrices factor_matrices(const StateDerived& d, std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("factor_matrices: dim must be positive");
    require_index(dim - 1, "factor_matrices");
    const Complex w1 = detail::w_argument(d);
    std::vector<Complex> hx(dim), hw(dim), Xp(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        hx[k] = hkdf_scaled(k, d.ordering.x, d.ordering.y);
        hw[k] = hkdf_scaled(k, w1, d.a);
        Xp[k] = (k == 0) ? Complex{1.0, 0.0} : Xp[k - 1] * d.ordering.X;
    }
    FactorMatrices fm{ComplexMatrix(dim, dim), ComplexMatrix(dim, dim)};
    const auto& lf = log_factorials();
    for (std::size_t m = 0; m < dim; ++m)
        for (std::size_t r = 0; r <= m; ++r)
            fm.K(m, r) = sqrt_factorial(m) / factorial(r) * hx[m - r] * Xp[r];
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t s = 0; s < dim; ++s) {
            KahanSum<Complex> w;
            double bp = 1.0;
            for (std::size_t k = 0; k <= std::min(r, s); ++k) {
                w.add(std::exp(lf(r) + lf(s) - lf(k)) * hw[r - k] *
                      std::conj(hw[s - k]) * bp);
                bp *= d.b;
            }
            fm.W(r, s) = w.value();
        }
    }
    return fm;
}

/// Assembled density-matrix block, rho = J K W K^dagger, in the rescaled
/// factorization (no bare factorial ever exceeds sqrt of the index range).
inline ComplexMatrix rho_matrix(const StateDerived& d, std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("rho_matrix: dim must be positive");
    require_index(dim - 1, "rho_matrix");
    const Complex w1 = detail::w_argument(d);
    std::vector<Complex> hx(dim), hw(dim), Xp(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        hx[k] = hkdf_scaled(k, d.ordering.x, d.ordering.y);
        hw[k] = hkdf_scaled(k, w1, d.a);
        Xp[k] = (k == 0) ? Complex{1.0, 0.0} : Xp[k - 1] * d.ordering.X;
    }
    const auto& lf = log_factorials();
    ComplexMatrix KS(dim, dim), WS(dim, dim);
    for (std::size_t m = 0; m < dim; ++m)
        for (std::size_t r = 0; r <= m; ++r)
            KS(m, r) = std::exp(0.5 * (lf(m) - lf(r))) * hx[m - r] * Xp[r];
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t s = 0; s < dim; ++s) {
            KahanSum<Complex> w;
            double bp = 1.0;
            for (std::size_t k = 0; k <= std::min(r, s); ++k) {
                w.add(std::exp(0.5 * (lf(r) + lf(s)) - lf(k)) * hw[r - k] *
                      std::conj(hw[s - k]) * bp);
                bp *= d.b;
            }
            WS(r, s) = w.value();
        }
    }
    ComplexMatrix out = Complex{d.J, 0.0} * (KS * WS * KS.adjoint());
    // the exact operator is Hermitian; drop the antisymmetric rounding part
    // left behind by the large scaled intermediates of the triple product
    for (std::size_t m = 0; m < dim; ++m) {
        out(m, m) = {out(m, m).real(), 0.0};
        for (std::size_t n = m + 1; n < dim; ++n) {
            const Complex sym = 0.5 * (out(m, n) + std::conj(out(n, m)));
            out(m, n) = sym;
            out(n, m) = std::conj(sym);
        }
    }
    out.set_trunc_dim(dim);
    return out;
}

inline ComplexMatrix rho_matrix(const StateParams& p, std::size_t dim) {
    return rho_matrix(derive_state(p), dim);
}

/// Independent series route rho_{m,n} = (1-Y) sum_j U_{m,j} Y^j U*_{n,j}
/// built directly on the Fock coefficients of the generating unitary; any
/// rotation phase may be supplied (the result must not depend on it).
inline SeriesResult rho_series_coeff(std::size_t m, std::size_t n,
                                     const OrderingParams& op, double nbar,
                                     std::size_t j_max) {
    require_index(m, "rho_series_coeff");
    require_index(n, "rho_series_coeff");
    if (!(nbar >= 0.0)) throw std::domain_error("rho_series_coeff: nbar must be >= 0");
    SeriesResult res;
    const double Y = nbar / (nbar + 1.0);
    if (Y == 0.0) {
        res.value = unitary_coeff(m, 0, op) * std::conj(unitary_coeff(n, 0, op));
        res.converged = true;
        res.terms = 1;
        return res;
    }
    const std::size_t cap = std::min(j_max, kSeriesCap);
    const auto psi = hermite_normalized_seq(cap, op.z_poly, op.u);
    const auto& lf = log_factorials();
    const double lnY = std::log(Y);
    // A_m[r] = exp(lf(m)/2 - lf(r)) h~_{m-r}(x,y) X^r
    auto build_a = [&](std::size_t mm) {
        std::vector<Complex> a(mm + 1);
        Complex Xp{1.0, 0.0};
        for (std::size_t r = 0; r <= mm; ++r) {
            a[r] = std::exp(0.5 * lf(mm) - lf(r)) *
                   hkdf_scaled(mm - r, op.x, op.y) * Xp;
            Xp *= op.X;
        }
        return a;
    };
    const auto am = build_a(m);
    const auto an = build_a(n);
    // P_j = Y^{j/2} U_{m,j} = K0 sum_r A_m[r] sqrt(j!/(j-r)!) Y^{j/2} psi_{j-r}
    auto scaled_col = [&](const std::vector<Complex>& a, std::size_t mm,
                          std::size_t j) {
        KahanSum<Complex> s;
        for (std::size_t r = 0; r <= std::min(mm, j); ++r) {
            const double lc = 0.5 * (lf(j) - lf(j - r)) +
                              0.5 * static_cast<double>(j) * lnY;
            s.add(a[r] * std::exp(lc) * psi[j - r]);
        }
        return op.k0 * s.value();
    };
    KahanSum<Complex> sum;
    const std::size_t j_floor = std::max(m, n);
    int small_run = 0, grow_run = 0;
    double prev_mag = 0.0;
    for (std::size_t j = 0; j <= cap; ++j) {
        const Complex term =
            (1.0 - Y) * scaled_col(am, m, j) * std::conj(scaled_col(an, n, j));
        const double mag = std::abs(term);
        if (!std::isfinite(mag)) break;
        sum.add(term);
        res.last_term = mag;
        ++res.terms;
        if (j >= j_floor && mag <= 1e-16 * std::abs(sum.value())) {
            if (++small_run >= 3) {
                res.converged = true;
                break;
            }
        } else {
            small_run = 0;
        }
        grow_run = (j > 0 && mag > prev_mag) ? grow_run + 1 : 0;
        if (grow_run >= 10 && j > j_floor) break;
        prev_mag = mag;
    }
    res.value = sum.value();
    return res;
}

inline SeriesResult rho_series_coeff(std::size_t m, std::size_t n,
                                     const StateParams& p, std::size_t j_max) {
    const auto op = derive_ordering(BosonicParams(p.alpha, 0.0, p.r, p.theta));
    return rho_series_coeff(m, n, op, p.nbar, j_max);
}

/// Displaced-thermal coefficients in the Laguerre closed form (for n >= m):
///   rho_{m,n} = e^{-|a|^2/(N+1)} N^n/(N+1)^{n+1} sqrt(m!/n!) (a*/N)^{n-m}
///               L_m^{(n-m)}(-|a|^2 / (N (N+1)))
/// (the 1/(N+1) factor restores the thermal limit; the m > n half follows by
/// Hermitian symmetry). Requires nbar > 0.
inline Complex displaced_helstrom_coeff(std::size_t m, std::size_t n, Complex alpha,
                                        double nbar) {
    require_index(m, "displaced_helstrom_coeff");
    require_index(n, "displaced_helstrom_coeff");
    if (!(nbar > 0.0)) {
        throw std::domain_error("displaced_helstrom_coeff: requires nbar > 0");
    }
    if (m > n) return std::conj(displaced_helstrom_coeff(n, m, alpha, nbar));
    const double a2 = std::norm(alpha);
    const double Y = nbar / (nbar + 1.0);
    const auto& lf = log_factorials();
    double yp = 1.0;
    for (std::size_t k = 0; k < n; ++k) yp *= Y;
    Complex ap{1.0, 0.0};
    for (std::size_t k = 0; k < n - m; ++k) ap *= std::conj(alpha) / nbar;
    const Complex lag =
        laguerre_generalized(m, static_cast<long>(n - m),
                             Complex{-a2 / (nbar * (nbar + 1.0)), 0.0});
    return std::exp(-a2 / (nbar + 1.0)) * yp / (nbar + 1.0) *
           std::exp(0.5 * (lf(m) - lf(n))) * ap * lag;
}

/// Displaced-thermal coefficients through the specialized z = 0 factors
///   K_{m,r} = sqrt(m!) alpha^{m-r} / ((m-r)! r!),
///   W_{r,s} = r! s! alpha^r alpha*^s sum_k (-1)^{r+s} Y^{r+s-k} |alpha|^{-2k}
///             / ((r-k)! k! (s-k)!),
///   J = (1-Y) e^{-(1-Y)|alpha|^2}.
/// alpha = 0 is delegated to thermal_coeff by the caller (the |alpha|^{-2k}
/// factor is singular there).
inline Complex displaced_kw_coeff(std::size_t m, std::size_t n, Complex alpha,
                                  double nbar) {
    require_index(m, "displaced_kw_coeff");
    require_index(n, "displaced_kw_coeff");
    if (!(nbar >= 0.0)) throw std::domain_error("displaced_kw_coeff: nbar must be >= 0");
    if (alpha == Complex{0.0, 0.0}) {
        throw std::domain_error("displaced_kw_coeff: alpha = 0, use thermal_coeff");
    }
    const double Y = nbar / (nbar + 1.0);
    const double a2 = std::norm(alpha);
    const auto& lf = log_factorials();
    const std::size_t top = std::max(m, n);
    std::vector<Complex> apow(2 * top + 1);
    apow[0] = {1.0, 0.0};
    for (std::size_t k = 1; k < apow.size(); ++k) apow[k] = apow[k - 1] * alpha;
    auto k_true = [&](std::size_t mm, std::size_t r) {
        return std::exp(0.5 * lf(mm) - lf(mm - r) - lf(r)) * apow[mm - r];
    };
    std::vector<double> ypow(2 * top + 1);
    ypow[0] = 1.0;
    for (std::size_t k = 1; k < ypow.size(); ++k) ypow[k] = ypow[k - 1] * Y;
    auto w_true = [&](std::size_t r, std::size_t s) {
        KahanSum<Complex> w;
        const double sign = ((r + s) % 2 == 0) ? 1.0 : -1.0;
        for (std::size_t k = 0; k <= std::min(r, s); ++k) {
            const double lc = lf(r) + lf(s) - lf(r - k) - lf(k) - lf(s - k) -
                              static_cast<double>(k) * std::log(a2);
            w.add(sign * ypow[r + s - k] * std::exp(lc));
        }
        return apow[r] * std::conj(apow[s]) * w.value();
    };
    KahanSum<Complex> sum;
    for (std::size_t r = 0; r <= m; ++r) {
        const Complex km = k_true(m, r);
        for (std::size_t s = 0; s <= n; ++s) {
            sum.add(km * w_true(r, s) * std::conj(k_true(n, s)));
        }
    }
    const double J = (1.0 - Y) * std::exp(-(1.0 - Y) * a2);
    return J * sum.value();
}

/// Squeezed-thermal (alpha = 0) coefficients through the parity-reduced
/// factors obtained by degenerating the general K and W:
///   K_{m,r} = sqrt(m!) y^{(m-r)/2} X^r / (((m-r)/2)! r!)   (m-r even),
///   W_{r,s} = r! s! sum_{k == r mod 2} a^{(r-k)/2} a*^{(s-k)/2} b^k /
///             (((r-k)/2)! ((s-k)/2)! k!)                   (r == s mod 2),
/// with y = T/2, X = S = sech r, a = L Y^2 u*, b = L Y. rho_{m,n} vanishes
/// unless m and n share parity.
inline Complex squeezed_special_coeff(std::size_t m, std::size_t n, double r,
                                      double theta, double nbar) {
    require_index(m, "squeezed_special_coeff");
    require_index(n, "squeezed_special_coeff");
    const StateDerived d = derive_state(StateParams{Complex{0.0, 0.0}, r, theta, nbar});
    if ((m + n) % 2 == 1) return {0.0, 0.0};
    const auto& lf = log_factorials();
    const Complex y = d.ordering.y;
    const double X = d.ordering.S;
    const std::size_t top = std::max(m, n);
    std::vector<Complex> yp(top / 2 + 1), ap(top / 2 + 1);
    std::vector<double> Xp(top + 1), bp(top + 1);
    yp[0] = ap[0] = Complex{1.0, 0.0};
    Xp[0] = bp[0] = 1.0;
    for (std::size_t k = 1; k < yp.size(); ++k) {
        yp[k] = yp[k - 1] * y;
        ap[k] = ap[k - 1] * d.a;
    }
    for (std::size_t k = 1; k <= top; ++k) {
        Xp[k] = Xp[k - 1] * X;
        bp[k] = bp[k - 1] * d.b;
    }
    auto k_true = [&](std::size_t mm, std::size_t rr) -> Complex {
        if ((mm - rr) % 2 == 1) return {0.0, 0.0};
        return std::exp(0.5 * lf(mm) - lf((mm - rr) / 2) - lf(rr)) *
               yp[(mm - rr) / 2] * Xp[rr];
    };
    auto w_true = [&](std::size_t rr, std::size_t ss) {
        KahanSum<Complex> w;
        for (std::size_t k = rr % 2; k <= std::min(rr, ss); k += 2) {
            w.add(std::exp(lf(rr) + lf(ss) - lf((rr - k) / 2) - lf((ss - k) / 2) -
                           lf(k)) *
                  ap[(rr - k) / 2] * std::conj(ap[(ss - k) / 2]) * bp[k]);
        }
        return w.value();
    };
    KahanSum<Complex> sum;
    for (std::size_t rr = m % 2; rr <= m; rr += 2) {
        const Complex km = k_true(m, rr);
        for (std::size_t ss = n % 2; ss <= n; ss += 2) {
            sum.add(km * w_true(rr, ss) * std::conj(k_true(n, ss)));
        }
    }
    return d.J * sum.value();
}

/// Pure-state (nbar = 0) coefficients,
/// rho_{m,n} = |K0|^2 H_m(x,y) H*_n(x,y) / sqrt(m! n!): a rank-one projector.
inline Complex pure_coeff(std::size_t m, std::size_t n, Complex alpha, double r,
                          double theta) {
    require_index(m, "pure_coeff");
    require_index(n, "pure_coeff");
    const auto op = derive_ordering(BosonicParams(alpha, 0.0, r, theta));
    return std::norm(op.k0) * sqrt_factorial(m) * sqrt_factorial(n) *
           hkdf_scaled(m, op.x, op.y) * std::conj(hkdf_scaled(n, op.x, op.y));
}

/// Photon-number distribution rho_{m,m} for m = 0..m_max plus the partial
/// trace of the block. Entries more negative than -1e-12 indicate a defect
/// and raise; small negatives are clipped to zero in the returned vector.
struct PhotonDistribution {
    std::vector<double> probabilities;
    double partial_trace = 0.0;
};

inline PhotonDistribution photon_distribution(const StateParams& p, std::size_t m_max) {
    require_index(m_max, "photon_distribution");
    const ComplexMatrix rho = rho_matrix(p, m_max + 1);
    PhotonDistribution out;
    out.probabilities.resize(m_max + 1);
    KahanSum<double> tr;
    for (std::size_t m = 0; m <= m_max; ++m) {
        const double v = rho(m, m).real();
        if (v < -1e-12) {
            throw std::logic_error("photon_distribution: diagonal entry below -1e-12");
        }
        tr.add(v);
        out.probabilities[m] = std::max(v, 0.0);
    }
    out.partial_trace = tr.value();
    return out;
}

}  // namespace hlfock
