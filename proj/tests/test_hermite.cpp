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

#include <catch2/catch_amalgamated.hpp>

#include "hlfock/hermite.hpp"

#include "fd_oracle.hpp"
#include "reference_values.hpp"
#include "test_support.hpp"

using namespace hlfock;
using testsup::abs_err;
using testsup::rel_err;

TEST_CASE("log factorial table invariants") {
    LogFactorialTable table(200);
    CHECK(table(0) == 0.0);
    CHECK(table(1) == 0.0);
    for (std::size_t k = 2; k <= 200; ++k) {
        CHECK(table(k) > table(k - 1));
        const double recur = table(k - 1) + std::log(static_cast<double>(k));
        CHECK(std::abs(table(k) - recur) <= 1e-12 * table(k));
    }
    CHECK_THROWS_AS(table(201), std::out_of_range);
    CHECK(log_factorial(10) == Catch::Approx(std::log(3628800.0)).epsilon(1e-14));
}

TEST_CASE("one-index polynomial: fixed values") {
    CHECK(hkdf(0, {3.0, 2.0}, {-1.0, 0.0}) == Complex{1.0, 0.0});
    CHECK(hkdf(2, {1.0, 0.0}, {1.0, 0.0}) == Complex{3.0, 0.0});
    CHECK(rel_err(hkdf(5, {0.7, 0.1}, {0.0, -0.3}), refvals::kHkdf5) < 1e-14);
}

TEST_CASE("one-index polynomial: degenerate forms") {
    CHECK(hkdf_degenerate(4, {2.0, 0.0}) == Complex{16.0, 0.0});
    CHECK(hkdf_degenerate_y(3, {5.0, 0.0}) == Complex{0.0, 0.0});
    CHECK(hkdf_degenerate_y(4, {2.0, 0.0}) == Complex{48.0, 0.0});

    testsup::Rng rng(11);
    for (int it = 0; it < 50; ++it) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(0.0, 21.0));
        const Complex x = rng.complex_box(2.0);
        const Complex y = rng.complex_box(2.0);
        CHECK(rel_err(hkdf(n, x, {0.0, 0.0}), hkdf_degenerate(n, x)) < 1e-13);
        CHECK(abs_err(hkdf(n, {0.0, 0.0}, y), hkdf_degenerate_y(n, y)) <
              1e-13 * std::max(1.0, std::abs(hkdf_degenerate_y(n, y))));
    }
}

TEST_CASE("quasi-monomial rule: d/dx H_n = n H_{n-1} vs finite differences") {
    testsup::Rng rng(23);
    for (int it = 0; it < 40; ++it) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0.0, 30.0));
        const Complex x = rng.complex_box(1.5);
        const Complex y = rng.complex_box(1.5);
        const double h = 1e-5 * std::max(1.0, std::abs(x));
        const Complex fd =
            (hkdf(n, x + h, y) - hkdf(n, x - h, y)) / (2.0 * h);
        const Complex analytic = static_cast<double>(n) * hkdf(n - 1, x, y);
        CHECK(rel_err(analytic, fd) < 1e-7);
    }
}

TEST_CASE("explicit sum agrees with the normalized recurrence") {
    testsup::Rng rng(31);
    for (int it = 0; it < 20; ++it) {
        const Complex x = rng.complex_box(2.0);
        const Complex y = rng.complex_box(1.0);
        const auto psi = hermite_normalized_seq(40, x, y);
        for (std::size_t k : {1, 7, 19, 40}) {
            const Complex expl = hkdf_scaled(k, x, y) * sqrt_factorial(k);
            CHECK(abs_err(psi[k], expl) < 1e-12 * std::max(1.0, std::abs(expl)));
        }
    }
}

TEST_CASE("two-index polynomial: fixed values and reductions") {
    const Complex x{0.3, 0.7}, y{-0.4, 0.2}, z{1.1, -0.5}, u{0.2, 0.1};
    const Complex tau{0.4, 0.0};
    CHECK(abs_err(hkdf2(1, 1, x, y, z, u, tau), x * z + tau) < 1e-15);
    // single r = 0 term: exact reduction to the one-index polynomial
    CHECK(hkdf2(0, 4, x, y, z, u, tau) == hkdf(4, z, u));
    CHECK(hkdf2(3, 0, x, y, z, u, tau) == hkdf(3, x, y));
    CHECK(rel_err(hkdf2(3, 2, {1.0, 1.0}, {0.2, 0.0}, {-0.5, 0.0}, {0.0, 0.1}, tau),
                  refvals::kHkdf2_32) < 1e-14);
}

TEST_CASE("two-index polynomial: swap symmetry") {
    testsup::Rng rng(37);
    for (int it = 0; it < 25; ++it) {
        const std::size_t m = static_cast<std::size_t>(rng.uniform(0.0, 13.0));
        const std::size_t n = static_cast<std::size_t>(rng.uniform(0.0, 13.0));
        const Complex x = rng.complex_box(1.5), y = rng.complex_box(1.0);
        const Complex z = rng.complex_box(1.5), u = rng.complex_box(1.0);
        const Complex tau = rng.complex_box(1.0);
        CHECK(rel_err(hkdf2(m, n, x, y, z, u, tau), hkdf2(n, m, z, u, x, y, tau)) <
              1e-13);
    }
}

TEST_CASE("two-index rotation degenerate form") {
    const Complex eiphi = std::polar(1.0, 0.8);
    CHECK(abs_err(hkdf2_rotation_degenerate(2, 2, eiphi), 2.0 * eiphi * eiphi) < 1e-15);
    CHECK(hkdf2_rotation_degenerate(1, 3, {0.5, 0.0}) == Complex{0.0, 0.0});
    CHECK(rel_err(hkdf2_rotation_degenerate(4, 4, {0.9, 0.0}),
                  hkdf2(4, 4, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0.9, 0.0})) < 1e-14);
}

TEST_CASE("incomplete Hermite polynomials") {
    const Complex x{0.6, 0.0}, y{0.3, 0.0}, tau{1.3, 0.0};
    CHECK(incomplete_hermite(0, 0, 0, x, y, tau) == Complex{1.0, 0.0});
    CHECK(abs_err(incomplete_hermite(1, 0, 0, x, y, tau), tau * tau) < 1e-15);
    CHECK(rel_err(incomplete_hermite(0, 2, 3, {0.3, 0}, {-0.2, 0}, {1.1, 0}),
                  refvals::kIncomplete0_23) < 1e-13);
    CHECK(rel_err(incomplete_hermite(1, 2, 3, {0.3, 0}, {-0.2, 0}, {1.1, 0}),
                  refvals::kIncomplete1_23) < 1e-13);
    CHECK_THROWS_AS(incomplete_hermite(2, 0, 0, x, y, tau), std::invalid_argument);
}

TEST_CASE("generating function converges to the exponential") {
    const auto unit = gen_func_truncated({1.0, 2.0}, {0.5, -1.0}, {0.0, 0.0}, 30);
    CHECK(unit.value == Complex{1.0, 0.0});

    const auto a = gen_func_truncated({1.0, 0.0}, {0.5, 0.0}, {0.3, 0.0}, 40);
    CHECK(rel_err(a.value, std::exp(Complex{0.345, 0.0})) < 1e-12);

    const auto b = gen_func_truncated({0.0, 2.0}, {-0.4, 0.0}, {0.2, 0.0}, 60);
    CHECK(rel_err(b.value, std::exp(Complex{-0.016, 0.4})) < 1e-12);

    testsup::Rng rng(41);
    for (int it = 0; it < 40; ++it) {
        const Complex x = rng.complex_box(2.0), y = rng.complex_box(2.0);
        const Complex t = rng.complex_disk(0.5);
        const auto r = gen_func_truncated(x, y, t, 80);
        CHECK(rel_err(r.value, std::exp(t * x + t * t * y)) < 1e-12);
        CHECK(r.last_term <= 1e-14 * std::abs(r.value));
    }
}

TEST_CASE("Mehler kernel: closed form basics") {
    CHECK(mehler_closed({1, 1}, {0.5, 0}, {2, 0}, {0.3, 0}, {0, 0}) == Complex{1.0, 0.0});
    const Complex y{0.3, 0.0}, v{0.2, 0.0}, t{0.5, 0.0};
    const Complex expect = 1.0 / std::sqrt(Complex{1.0, 0.0} - 4.0 * y * t * t * v);
    CHECK(rel_err(mehler_closed({0, 0}, y, {0, 0}, v, t), expect) < 1e-15);
    // 1 - 4 y t^2 v = 0 at y = v = t = 1/sqrt(2) scaled: pick exact singular combo
    CHECK_THROWS_AS(mehler_closed({1, 0}, {0.5, 0}, {1, 0}, {0.5, 0}, {1, 0}),
                    std::domain_error);
}

TEST_CASE("Mehler kernel: series oracle agreement") {
    const Complex x{1, 0}, y{0.2, 0}, z{0.5, 0}, v{0.1, 0}, t{0.4, 0};
    const auto series = mehler_series(x, y, z, v, t, 200);
    CHECK(series.converged);
    CHECK(rel_err(series.value, refvals::kMehler) < 1e-13);
    CHECK(rel_err(mehler_closed(x, y, z, v, t), series.value) < 1e-12);

    testsup::Rng rng(43);
    int tested = 0;
    while (tested < 40) {
        const Complex xx = rng.complex_box(1.0), yy = rng.complex_box(1.0);
        const Complex zz = rng.complex_box(1.0), vv = rng.complex_box(1.0);
        const Complex tt = rng.complex_disk(0.7);
        if (std::abs(4.0 * yy * tt * tt * vv) > 0.8) continue;
        ++tested;
        const auto s = mehler_series(xx, yy, zz, vv, tt, kSeriesCap);
        REQUIRE(s.converged);
        CHECK(rel_err(s.value, mehler_closed(xx, yy, zz, vv, tt)) < 1e-11);
    }
}

TEST_CASE("Mehler series flags divergence") {
    // |4 y t^2 v| = 4.0: terms eventually grow without bound
    const auto s = mehler_series({0.3, 0}, {1.0, 0}, {0.2, 0}, {1.0, 0}, {1.0, 0}, 400);
    CHECK_FALSE(s.converged);
}

TEST_CASE("mixed derivatives of the quadratic exponential") {
    const Complex a{0.1, 0.05}, b{0.3, -0.1}, c{-0.2, 0.15};
    const Complex x{0.5, 0.2}, y{1.0, -0.3};
    const Complex e = std::exp(a * x * x + b * x * y + c * y * y);
    CHECK(mixed_deriv_quadexp(0, 0, a, b, c, x, y) == e);
    CHECK(abs_err(mixed_deriv_quadexp(1, 0, a, b, c, x, y), (2.0 * a * x + b * y) * e) <
          1e-14);

    // spec anchor: (2,2) against the high-precision finite-difference oracle
    const Complex got = mixed_deriv_quadexp(2, 2, {0.1, 0}, {0.3, 0}, {-0.2, 0},
                                            {0.5, 0}, {1.0, 0});
    const Complex fd = fd_oracle::mixed_deriv(2, 2, {0.1, 0}, {0.3, 0}, {-0.2, 0},
                                              {0.5, 0}, {1.0, 0});
    CHECK(rel_err(got, fd) < 1e-6);

    testsup::Rng rng(47);
    for (int it = 0; it < 5; ++it) {
        const Complex aa = rng.complex_box(0.4), bb = rng.complex_box(0.4);
        const Complex cc = rng.complex_box(0.4);
        const Complex xx = rng.complex_box(1.0), yy = rng.complex_box(1.0);
        for (std::size_t m = 0; m <= 4; ++m) {
            for (std::size_t n = 0; n <= 4; ++n) {
                const Complex lhs = mixed_deriv_quadexp(m, n, aa, bb, cc, xx, yy);
                const Complex rhs = fd_oracle::mixed_deriv(m, n, aa, bb, cc, xx, yy);
                CHECK(rel_err(lhs, rhs) < 1e-6);
            }
        }
    }
}

TEST_CASE("generalized Laguerre polynomials") {
    CHECK(laguerre_generalized(0, 5, {0.9, 0.2}) == Complex{1.0, 0.0});
    CHECK(abs_err(laguerre_generalized(1, 0, {0.3, 0.1}), Complex{0.7, -0.1}) < 1e-15);
    CHECK(rel_err(laguerre_generalized(3, 2, {0.7, 0.0}), refvals::kLaguerre3_2) < 1e-14);
    CHECK_THROWS_AS(laguerre_generalized(2, -3, {0.5, 0.0}), std::domain_error);

    // three-term recurrence oracle:
    // (n+1) L_{n+1}^k = (2n+k+1-x) L_n^k - (n+k) L_{n-1}^k
    testsup::Rng rng(53);
    for (long k : {-3L, -1L, 0L, 2L, 5L}) {
        for (int it = 0; it < 10; ++it) {
            const Complex x = rng.complex_box(1.5);
            const std::size_t n0 = std::max<long>(3, -k) + 1;
            Complex lm1 = laguerre_generalized(n0 - 1, k, x);
            Complex l0 = laguerre_generalized(n0, k, x);
            for (std::size_t n = n0; n < n0 + 9; ++n) {
                const Complex next =
                    ((static_cast<double>(2 * n + 1 + k) - x) * l0 -
                     static_cast<double>(static_cast<long>(n) + k) * lm1) /
                    static_cast<double>(n + 1);
                const Complex direct = laguerre_generalized(n + 1, k, x);
                CHECK(abs_err(next, direct) < 1e-11 * std::max(1.0, std::abs(direct)));
                lm1 = l0;
                l0 = next;
            }
        }
    }
}

TEST_CASE("index bounds are enforced") {
    const std::size_t cap = max_index();
    CHECK_THROWS_AS(hkdf(cap + 1, {1, 0}, {1, 0}), std::out_of_range);
    CHECK_THROWS_AS(hkdf2(cap + 1, 0, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}),
                    std::out_of_range);
    CHECK_THROWS_AS(laguerre_generalized(cap + 1, 0, {1, 0}), std::out_of_range);
    CHECK_THROWS_AS(incomplete_hermite(0, cap + 1, 0, {1, 0}, {0, 0}, {0, 0}),
                    std::out_of_range);
}
