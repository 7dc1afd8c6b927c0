// Copyright 2026 The qmat developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Classical reference semantics used as independent oracles by the test
// suites. Everything here is plain array arithmetic with no dependency on
// the simulation path it checks.

#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace testref {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;

inline Vec reversed(Vec v) {
    for (std::size_t j = 0; j < v.size() / 2; ++j) {
        std::swap(v[j], v[v.size() - 1 - j]);
    }
    return v;
}

inline Mat reverse_row(Mat m, std::size_t i) {
    m[i] = reversed(m[i]);
    return m;
}

inline Mat reverse_col(Mat m, std::size_t j) {
    for (std::size_t i = 0; i < m.size() / 2; ++i) {
        std::swap(m[i][j], m[m.size() - 1 - i][j]);
    }
    return m;
}

inline Mat reverse_all(const Mat& m) {
    Mat out(m.size(), Vec(m[0].size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m[0].size(); ++j) {
            out[i][j] = m[m.size() - 1 - i][m[0].size() - 1 - j];
        }
    }
    return out;
}

inline Vec swapped(Vec v, std::size_t i, std::size_t j) {
    std::swap(v[i], v[j]);
    return v;
}

inline Vec cycled_left(const Vec& v) {
    Vec out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        out[j] = v[(j + 1) % v.size()];
    }
    return out;
}

inline Vec cycled_right(const Vec& v) {
    Vec out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        out[j] = v[(j + v.size() - 1) % v.size()];
    }
    return out;
}

// Row pairs (2i, 2i+1) become (sum, difference); no 1/sqrt2, the caller
// applies the ledger factor.
inline Mat pairwise_sum_diff(const Mat& m) {
    Mat out = m;
    for (std::size_t i = 0; i + 1 < m.size(); i += 2) {
        for (std::size_t j = 0; j < m[0].size(); ++j) {
            out[i][j] = m[i][j] + m[i + 1][j];
            out[i + 1][j] = m[i][j] - m[i + 1][j];
        }
    }
    return out;
}

// Full Walsh transform of each row in natural (bitwise) order; entry m of
// a row is sum_j f_j * (-1)^popcount(m & j). No 1/sqrt(J) factor.
inline Mat walsh_rows(const Mat& m) {
    const std::size_t cols = m[0].size();
    Mat out(m.size(), Vec(cols, 0.0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t w = 0; w < cols; ++w) {
            double acc = 0.0;
            for (std::size_t j = 0; j < cols; ++j) {
                const bool odd = (std::popcount(w & j) & 1) != 0;
                acc += odd ? -m[i][j] : m[i][j];
            }
            out[i][w] = acc;
        }
    }
    return out;
}

inline Vec row_sums(const Mat& m) {
    Vec out(m.size(), 0.0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (double v : m[i]) {
            out[i] += v;
        }
    }
    return out;
}

inline Mat scale_row(Mat m, std::size_t i, double alpha) {
    for (double& v : m[i]) {
        v *= alpha;
    }
    return m;
}

inline Vec product(const Vec& f, const Vec& g) {
    Vec out(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) {
        out[j] = f[j] * g[j];
    }
    return out;
}

inline double dot(const Vec& f, const Vec& g) {
    double acc = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        acc += f[j] * g[j];
    }
    return acc;
}

// Staircase of signed offsets: 2^levels equal blocks of columns, block q
// offset by sum_k s_k * (+1 when bit (levels-k) of q is set, else -1).
inline Vec staircase_shift(const Vec& f, const std::vector<double>& level_shifts,
                           std::size_t levels) {
    const std::size_t steps = std::size_t{1} << levels;
    const std::size_t block = f.size() / steps;
    Vec out = f;
    for (std::size_t j = 0; j < f.size(); ++j) {
        const std::size_t q = j / block;
        for (std::size_t k = 1; k <= levels; ++k) {
            const bool upper = ((q >> (levels - k)) & 1) != 0;
            out[j] += level_shifts[k - 1] * (upper ? 1.0 : -1.0);
        }
    }
    return out;
}

inline Vec random_vec(std::mt19937_64& rng, std::size_t n, double lo = -1.0, double hi = 1.0) {
    std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << 53) - 1);
    Vec v(n);
    for (double& x : v) {
        const double u = static_cast<double>(bits(rng)) * 0x1.0p-53;
        x = lo + (hi - lo) * u;
    }
    return v;
}

inline Mat random_mat(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    Mat m(rows);
    for (auto& r : m) {
        r = random_vec(rng, cols);
    }
    return m;
}

inline double max_abs_diff(const Mat& a, const Mat& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a[0].size(); ++j) {
            d = std::max(d, std::abs(a[i][j] - b[i][j]));
        }
    }
    return d;
}

inline double max_abs_diff(const Vec& a, const Vec& b) {
    double d = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        d = std::max(d, std::abs(a[j] - b[j]));
    }
    return d;
}

}  // namespace testref
