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

#include "hlfock/state.hpp"

namespace hlfock {

/// Brute-force ground truth for everything the polynomial closed forms
/// compute: truncated ladder operators, dense matrix exponentials, and
/// U rho_th U^dagger by plain matrix algebra. Nothing in here touches a
/// Hermite polynomial.

/// An operator realized at a padded working dimension; only the upper-left
/// trunc_dim block is meaningful downstream.
struct TruncatedOperator {
    ComplexMatrix matrix;
    std::size_t trunc_dim = 0;
    std::size_t pad_dim = 0;

    ComplexMatrix block() const {
        ComplexMatrix b = matrix.block(trunc_dim, trunc_dim);
        b.set_trunc_dim(trunc_dim);
        return b;
    }
};

/// Annihilator and creator at the given dimension: a|n> = sqrt(n)|n-1>.
inline std::pair<ComplexMatrix, ComplexMatrix> ladder(std::size_t dim) {
    if (dim < 2) throw std::invalid_argument("ladder: dim must be >= 2");
    ComplexMatrix a(dim, dim);
    for (std::size_t n = 1; n < dim; ++n) {
        a(n - 1, n) = {std::sqrt(static_cast<double>(n)), 0.0};
    }
    return {a, a.adjoint()};
}

inline double one_norm(const ComplexMatrix& m) {
    double best = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < m.rows(); ++i) col += std::abs(m(i, j));
        best = std::max(best, col);
    }
    return best;
}

/// Dense matrix exponential by scaling and squaring around an order-18
/// Taylor polynomial; squaring count from ceil(log2 ||M||_1).
inline ComplexMatrix matrix_exp(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("matrix_exp: matrix must be square");
    }
    const double norm = one_norm(m);
    if (!std::isfinite(norm) || norm > 4096.0) {
        throw std::domain_error("matrix_exp: 1-norm overflow (" + std::to_string(norm) + ")");
    }
    int squarings = 0;
    if (norm > 1.0) squarings = static_cast<int>(std::ceil(std::log2(norm)));
    const double scale = std::ldexp(1.0, -squarings);
    ComplexMatrix a(m.rows(), m.cols());
    a.map() = m.map() * scale;
    // Horner form of I + A + A^2/2! + ... + A^18/18!
    constexpr int kOrder = 18;
    ComplexMatrix e = ComplexMatrix::identity(m.rows());
    for (int k = kOrder; k >= 1; --k) {
        ComplexMatrix t(m.rows(), m.cols());
        t.map() = (a.map() * e.map()) / static_cast<double>(k);
        e = ComplexMatrix::identity(m.rows());
        e.map() += t.map();
    }
    for (int k = 0; k < squarings; ++k) e = e * e;
    return e;
}

/// Padding policy: squeezing and displacement leak population upward
/// geometrically, so the working dimension adds ~12 e^{2r} + 8 |alpha|^2 + 16
/// levels above the reported block (and never less than twice the block).
/// The +16 floor is calibrated against the padding-sufficiency check: without
/// it the mid-range (r ~ 0.4) keeps ~1e-7 truncation error on a 20-block.
inline std::size_t default_pad_dim(std::size_t trunc_dim, Complex alpha, double r) {
    const auto grow = static_cast<std::size_t>(std::ceil(12.0 * std::exp(2.0 * r)) +
                                               std::ceil(8.0 * std::norm(alpha))) + 16;
    return std::max(2 * trunc_dim, trunc_dim + grow);
}

inline std::size_t default_pad_dim(std::size_t trunc_dim, const BosonicParams& p) {
    return default_pad_dim(trunc_dim, p.alpha, p.r);
}

inline std::size_t default_pad_dim(std::size_t trunc_dim, const StateParams& p) {
    return default_pad_dim(trunc_dim, p.alpha, p.r);
}

/// U = S(z) D(alpha) R(phi) as a product of three dense exponentials at the
/// padded dimension.
inline ComplexMatrix build_unitary(const BosonicParams& p, std::size_t pad_dim) {
    const auto [a, ad] = ladder(pad_dim);
    const Complex z = std::polar(p.r, p.theta);
    ComplexMatrix gen_d(pad_dim, pad_dim), gen_r(pad_dim, pad_dim), gen_s(pad_dim, pad_dim);
    gen_d.map() = p.alpha * ad.map() - std::conj(p.alpha) * a.map();
    gen_r.map() = Complex{0.0, 1.0} * p.phi * (ad.map() * a.map());
    gen_s.map() = 0.5 * (z * (ad.map() * ad.map()) - std::conj(z) * (a.map() * a.map()));
    return matrix_exp(gen_s) * matrix_exp(gen_d) * matrix_exp(gen_r);
}

inline TruncatedOperator build_unitary_truncated(const BosonicParams& p,
                                                 std::size_t trunc_dim,
                                                 std::size_t pad_dim = 0) {
    if (pad_dim == 0) pad_dim = default_pad_dim(trunc_dim, p);
    TruncatedOperator op;
    op.trunc_dim = trunc_dim;
    op.pad_dim = pad_dim;
    op.matrix = build_unitary(p, pad_dim);
    op.matrix.set_trunc_dim(trunc_dim);
    return op;
}

/// Fraction of the thermal weight lost to truncation at pad_dim: Y^pad.
inline double thermal_tail_mass(double nbar, std::size_t pad_dim) {
    const double Y = nbar / (nbar + 1.0);
    double p = 1.0;
    for (std::size_t k = 0; k < pad_dim; ++k) p *= Y;
    return p;
}

/// rho = U rho_th U^dagger by dense products at the padded dimension;
/// returns the trunc_dim block. The truncated thermal seed is NOT
/// renormalized -- the deficit is Y^pad and comparisons against closed
/// forms are made on raw values.
inline ComplexMatrix rho_brute(const StateParams& p, std::size_t trunc_dim,
                               std::size_t pad_dim = 0) {
    if (pad_dim == 0) pad_dim = default_pad_dim(trunc_dim, p);
    const ComplexMatrix u = build_unitary(BosonicParams(p.alpha, 0.0, p.r, p.theta), pad_dim);
    const double Y = p.nbar / (p.nbar + 1.0);
    ComplexMatrix th(pad_dim, pad_dim);
    double w = 1.0 - Y;
    for (std::size_t k = 0; k < pad_dim; ++k) {
        th(k, k) = {w, 0.0};
        w *= Y;
    }
    ComplexMatrix rho = u * th * u.adjoint();
    ComplexMatrix out = rho.block(trunc_dim, trunc_dim);
    out.set_trunc_dim(trunc_dim);
    return out;
}

}  // namespace hlfock
