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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace hlfock {

using Complex = std::complex<double>;

/// Hard ceiling on polynomial indices: k! overflows double at k = 171, and
/// several code paths materialize sqrt(m! n!) as a plain double.
inline constexpr std::size_t kIndexCeiling = 170;

/// Default cap on polynomial indices m, n, r, s.
inline constexpr std::size_t kDefaultMaxIndex = 120;

/// Hard cap on the length of any truncated infinite series.
inline constexpr std::size_t kSeriesCap = 500;

namespace detail {

inline std::atomic<std::size_t>& max_index_storage() {
    static std::atomic<std::size_t> value{[] {
        std::size_t v = kDefaultMaxIndex;
        if (const char* env = std::getenv("FOCK_MAX_INDEX")) {
            char* end = nullptr;
            unsigned long parsed = std::strtoul(env, &end, 10);
            if (end != env && *end == '\0' && parsed > 0) v = parsed;
        }
        return std::min<std::size_t>(std::max<std::size_t>(v, 1), kIndexCeiling);
    }()};
    return value;
}

}  // namespace detail

/// Current index cap (default 120, overridable via FOCK_MAX_INDEX, clamped
/// to [1, 170]).
inline std::size_t max_index() { return detail::max_index_storage().load(); }

inline void set_max_index(std::size_t value) {
    detail::max_index_storage().store(
        std::min<std::size_t>(std::max<std::size_t>(value, 1), kIndexCeiling));
}

inline void require_index(std::size_t n, const char* what) {
    if (n > max_index()) {
        throw std::out_of_range(std::string(what) + ": index " + std::to_string(n) +
                                " exceeds max index " + std::to_string(max_index()));
    }
}

/// Precomputed table of ln(k!).
class LogFactorialTable {
public:
    explicit LogFactorialTable(std::size_t max_k) : table_(max_k + 1) {
        table_[0] = 0.0;
        for (std::size_t k = 1; k <= max_k; ++k) {
            table_[k] = std::lgamma(static_cast<double>(k) + 1.0);
        }
    }

    double operator()(std::size_t k) const {
        if (k >= table_.size()) {
            throw std::out_of_range("LogFactorialTable: k = " + std::to_string(k) +
                                    " beyond table size " + std::to_string(table_.size()));
        }
        return table_[k];
    }

    std::size_t size() const { return table_.size(); }

private:
    std::vector<double> table_;
};

/// Shared ln(k!) table. Sized to cover all polynomial indices plus the
/// longest truncated series and the binomials of the Laguerre fast path.
inline const LogFactorialTable& log_factorials() {
    static const LogFactorialTable table(2 * kIndexCeiling + kSeriesCap + 8);
    return table;
}

inline double log_factorial(std::size_t k) { return log_factorials()(k); }

/// k! as a double; +inf for k > 170.
inline double factorial(std::size_t k) {
    static const std::vector<double> table = [] {
        std::vector<double> t(kIndexCeiling + 1);
        t[0] = 1.0;
        for (std::size_t i = 1; i <= kIndexCeiling; ++i) {
            t[i] = t[i - 1] * static_cast<double>(i);
        }
        return t;
    }();
    if (k > kIndexCeiling) return std::numeric_limits<double>::infinity();
    return table[k];
}

inline double sqrt_factorial(std::size_t k) {
    static const std::vector<double> table = [] {
        std::vector<double> t(kIndexCeiling + 1);
        for (std::size_t i = 0; i <= kIndexCeiling; ++i) t[i] = std::sqrt(factorial(i));
        return t;
    }();
    if (k > kIndexCeiling) return std::numeric_limits<double>::infinity();
    return table[k];
}

/// Kahan-compensated accumulator; works for double and std::complex<double>.
template <class T>
class KahanSum {
public:
    void add(const T& term) {
        const T y = term - comp_;
        const T t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }

    const T& value() const { return sum_; }

private:
    T sum_{};
    T comp_{};
};

/// Outcome of a truncated series evaluation.
struct SeriesResult {
    Complex value{0.0, 0.0};
    double last_term{0.0};     ///< magnitude of the last accumulated term
    std::size_t terms{0};      ///< number of terms accumulated
    bool converged{false};     ///< the relative-tail stopping rule was met
};

}  // namespace hlfock
