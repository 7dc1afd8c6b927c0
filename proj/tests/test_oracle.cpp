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

#include <cmath>
#include <random>

#include "doctest.h"
#include "qmat/errors.hpp"
#include "qmat/oracle.hpp"
#include "qmat/qmatrix.hpp"
#include "test_util.hpp"

using namespace qmat;

TEST_CASE("array oracle construction") {
    CHECK_THROWS_AS(Oracle::from_array("empty", {}), DimensionError);
    CHECK_THROWS_AS(Oracle::from_array("big", {0.5, 1.5}), RangeError);
    CHECK_THROWS_AS(Oracle::from_array("odd", {0.1, 0.2, 0.3}), DimensionError);

    const Oracle raw = Oracle::from_array("raw", {0.5, -0.5});
    CHECK(raw.source_inf_norm() == 1.0);
    CHECK(raw.values()[1] == -0.5);

    const Oracle scaled = Oracle::from_unnormalized("scaled", {2.0, -4.0});
    CHECK(scaled.source_inf_norm() == 4.0);
    CHECK(scaled.values()[0] == 0.5);
    CHECK(scaled.values()[1] == -1.0);
}

TEST_CASE("oracle application embeds the raw values") {
    const RegisterLayout layout = RegisterLayout::standard(0, 1);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    SUBCASE("all-ones array acts as the identity on the flag") {
        StateVector s = init_uniform(layout);
        Oracle::from_array("ones", {1.0, 1.0}).apply(s, layout.aux, layout.col_qubits);
        CHECK(s.amplitude(layout.basis_index(0, 0)).real() ==
              doctest::Approx(inv_sqrt2).epsilon(1e-13));
        CHECK(s.probability_of(BasisPattern{}.set(layout.aux, true)) < 1e-24);
    }

    SUBCASE("signed values land signed") {
        StateVector s = init_uniform(layout);
        Oracle::from_array("f", {0.5, -0.5}).apply(s, layout.aux, layout.col_qubits);
        CHECK(s.amplitude(layout.basis_index(0, 0)).real() ==
              doctest::Approx(0.5 * inv_sqrt2).epsilon(1e-13));
        CHECK(s.amplitude(layout.basis_index(0, 1)).real() ==
              doctest::Approx(-0.5 * inv_sqrt2).epsilon(1e-13));
    }

    SUBCASE("build then inverse is the identity") {
        std::mt19937_64 rng(31);
        const RegisterLayout wide = RegisterLayout::standard(0, 3);
        StateVector s = init_uniform(wide);
        const std::vector<Amplitude> before(s.amplitudes().begin(), s.amplitudes().end());
        const Oracle f = Oracle::from_array("f", testref::random_vec(rng, 8));
        f.apply(s, wide.aux, wide.col_qubits);
        f.apply(s, wide.aux, wide.col_qubits, {}, true);
        double drift = 0.0;
        for (std::uint64_t z = 0; z < s.size(); ++z) {
            drift = std::max(drift, std::abs(s.amplitude(z) - before[z]));
        }
        CHECK(drift < 1e-12);
    }
}

TEST_CASE("oracle json round trip") {
    std::mt19937_64 rng(32);
    const Oracle f = Oracle::from_unnormalized("round", testref::random_vec(rng, 8, -3.0, 3.0));
    const Oracle back = Oracle::from_json_text(f.to_json_text());
    CHECK(back.name() == f.name());
    CHECK(back.source_inf_norm() == f.source_inf_norm());
    CHECK(testref::max_abs_diff(back.values(), f.values()) == 0.0);
}

TEST_CASE("constant shift") {
    SUBCASE("s = 0 halves both sectors") {
        std::mt19937_64 rng(33);
        const testref::Vec fv = testref::random_vec(rng, 4);
        const ShiftResult r = constant_shift(Oracle::from_array("f", fv), 0.0);
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(r.sector_values()[j] == doctest::Approx(fv[j] / 2.0).epsilon(1e-12));
            CHECK(r.sum_sector_values()[j] == doctest::Approx(fv[j] / 2.0).epsilon(1e-12));
        }
    }

    SUBCASE("shifting a constant by itself cancels the diff sector") {
        const ShiftResult r = constant_shift(Oracle::from_array("c", {0.7, 0.7, 0.7, 0.7}), 0.7);
        for (double v : r.sector_values()) {
            CHECK(std::abs(v) < 1e-12);
        }
    }

    SUBCASE("random shifts match the classical difference") {
        std::mt19937_64 rng(34);
        for (int trial = 0; trial < 40; ++trial) {
            const testref::Vec fv = testref::random_vec(rng, 8);
            const ShiftResult r = constant_shift(Oracle::from_array("f", fv), 0.3);
            const auto diff = r.sector_values();
            for (std::size_t j = 0; j < 8; ++j) {
                CHECK(diff[j] == doctest::Approx((fv[j] - 0.3) / 2.0).epsilon(1e-10));
            }
            r.state.check_norm(1e-12);
        }
    }

    SUBCASE("sum and diff stay consistent") {
        std::mt19937_64 rng(35);
        const testref::Vec fv = testref::random_vec(rng, 8);
        const double s = 0.41;
        const ShiftResult r = constant_shift(Oracle::from_array("f", fv), s);
        const auto sum = r.sum_sector_values();
        const auto diff = r.sector_values();
        for (std::size_t j = 0; j < 8; ++j) {
            CHECK(sum[j] + diff[j] == doctest::Approx(fv[j]).epsilon(1e-10));
            CHECK(sum[j] - diff[j] == doctest::Approx(s).epsilon(1e-10));
        }
    }

    SUBCASE("shift bound") {
        CHECK_THROWS_AS(constant_shift(Oracle::from_array("f", {0.1, 0.1}), 1.2), RangeError);
    }
}

TEST_CASE("step shift") {
    SUBCASE("s = 0 is the plain half oracle") {
        std::mt19937_64 rng(36);
        const testref::Vec fv = testref::random_vec(rng, 8);
        const ShiftResult r = step_shift(Oracle::from_array("f", fv), 0.0);
        const auto got = r.sector_values();
        for (std::size_t j = 0; j < 8; ++j) {
            CHECK(got[j] == doctest::Approx(fv[j] / 2.0).epsilon(1e-12));
        }
    }

    SUBCASE("frozen hand evaluation: f = 0, s = 0.5, J = 4") {
        const ShiftResult r = step_shift(Oracle::from_array("zero", testref::Vec(4, 0.0)), 0.5);
        const auto got = r.sector_values();
        const testref::Vec expected = {-0.25, -0.25, 0.25, 0.25};
        CHECK(testref::max_abs_diff(got, expected) < 1e-12);
    }

    SUBCASE("random inputs match the piecewise oracle") {
        std::mt19937_64 rng(37);
        for (int trial = 0; trial < 40; ++trial) {
            const testref::Vec fv = testref::random_vec(rng, 8);
            const double s = testref::random_vec(rng, 1)[0];
            const ShiftResult r = step_shift(Oracle::from_array("f", fv), s);
            const testref::Vec target = testref::staircase_shift(fv, {s}, 1);
            const auto got = r.sector_values();
            for (std::size_t j = 0; j < 8; ++j) {
                CHECK(got[j] == doctest::Approx(target[j] / 2.0).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("linear shift") {
    SUBCASE("level schedule follows the two-thirds pattern") {
        const auto sched = shift_schedule(0.9, 4);
        CHECK(sched[0] == doctest::Approx(0.9));
        CHECK(sched[1] == doctest::Approx(0.6));
        CHECK(sched[2] == doctest::Approx(0.2));
        CHECK(sched[3] == doctest::Approx(0.2 / 3.0));
    }

    SUBCASE("one level equals the step shift") {
        std::mt19937_64 rng(38);
        const testref::Vec fv = testref::random_vec(rng, 8);
        const Oracle f = Oracle::from_array("f", fv);
        const ShiftResult a = step_shift(f, 0.25);
        const ShiftResult b = linear_shift(f, 0.25, 1);
        double drift = 0.0;
        for (std::uint64_t z = 0; z < a.state.size(); ++z) {
            drift = std::max(drift, std::abs(a.state.amplitude(z) - b.state.amplitude(z)));
        }
        CHECK(drift < 1e-14);
        CHECK(a.marker_row == b.marker_row);
    }

    SUBCASE("two levels realize the quarter staircase") {
        const ShiftResult r =
            linear_shift(Oracle::from_array("zero", testref::Vec(8, 0.0)), 0.3, 2);
        const auto got = r.sector_values();
        // offsets (-5/3, -1/3, 1/3, 5/3) * 0.3, two columns per step, scale 1/4
        const testref::Vec expected = {-0.125, -0.125, -0.025, -0.025,
                                       0.025,  0.025,  0.125,  0.125};
        CHECK(testref::max_abs_diff(got, expected) < 1e-12);
        CHECK(r.marker_row == 3);
        CHECK(r.ledger.factor() == doctest::Approx(0.25));
    }

    SUBCASE("levels against the classical staircase oracle") {
        std::mt19937_64 rng(39);
        for (int trial = 0; trial < 30; ++trial) {
            const testref::Vec fv = testref::random_vec(rng, 8);
            const double s = testref::random_vec(rng, 1)[0];
            for (std::size_t levels = 1; levels <= 3; ++levels) {
                const ShiftResult r = linear_shift(Oracle::from_array("f", fv), s, levels);
                const testref::Vec target =
                    testref::staircase_shift(fv, shift_schedule(s, levels), levels);
                const auto got = r.sector_values();
                const double scale = r.ledger.factor();
                for (std::size_t j = 0; j < 8; ++j) {
                    CHECK(got[j] == doctest::Approx(target[j] * scale).epsilon(1e-10));
                }
            }
        }
    }

    SUBCASE("staircase stays monotone for f = 0 and s > 0") {
        std::mt19937_64 rng(40);
        for (int trial = 0; trial < 10; ++trial) {
            const double s = 0.05 + 0.9 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
            for (std::size_t levels = 1; levels <= 3; ++levels) {
                const ShiftResult r =
                    linear_shift(Oracle::from_array("zero", testref::Vec(8, 0.0)), s, levels);
                const auto got = r.sector_values();
                for (std::size_t j = 1; j < got.size(); ++j) {
                    CHECK(got[j] >= got[j - 1] - 1e-12);
                }
            }
        }
    }

    SUBCASE("validation") {
        const Oracle f = Oracle::from_array("f", {0.1, 0.2, 0.3, 0.4});
        CHECK_THROWS_AS(linear_shift(f, 0.3, 0), RangeError);
        CHECK_THROWS_AS(linear_shift(f, 0.3, 3), RangeError);  // more levels than column qubits
        CHECK_THROWS_AS(linear_shift(f, 1.2, 1), RangeError);
    }
}

TEST_CASE("shift result json") {
    const ShiftResult r = constant_shift(Oracle::from_array("f", {0.5, -0.5}), 0.25);
    const std::string text = r.to_json_text();
    CHECK(text.find("\"ledger\"") != std::string::npos);
    CHECK(text.find("\"sector\"") != std::string::npos);
}
