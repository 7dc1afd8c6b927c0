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
#include <sstream>

#include "doctest.h"
#include "qmat/classical_matrix.hpp"
#include "qmat/errors.hpp"
#include "qmat/qmatrix.hpp"
#include "test_util.hpp"

using namespace qmat;

TEST_CASE("standard layout geometry") {
    const RegisterLayout layout = RegisterLayout::standard(2, 3, true);
    CHECK(layout.total_qubits() == 7);
    CHECK(layout.rows() == 4);
    CHECK(layout.cols() == 8);
    CHECK(layout.basis_index(0, 0) == 0);
    CHECK(layout.basis_index(1, 0) == 8);
    CHECK(layout.basis_index(0, 5) == 5);
    CHECK(layout.basis_index(3, 7, true, true) == 0b1111111);
    CHECK_THROWS_AS(layout.basis_index(4, 0), AddressError);
    layout.validate();

    RegisterLayout broken = layout;
    broken.row_qubits[0] = broken.aux;
    CHECK_THROWS_AS(broken.validate(), DimensionError);

    RegisterLayout collided = layout;
    collided.mul = collided.aux;
    CHECK_THROWS_AS(collided.validate(), DimensionError);
}

TEST_CASE("init_uniform spreads the data sector and spares the flags") {
    const RegisterLayout small = RegisterLayout::standard(1, 1);
    const StateVector s = init_uniform(small);
    for (std::uint64_t i = 0; i < 2; ++i) {
        for (std::uint64_t j = 0; j < 2; ++j) {
            CHECK(s.amplitude(small.basis_index(i, j)).real() ==
                  doctest::Approx(0.5).epsilon(1e-14));
        }
    }
    CHECK(s.probability_of(BasisPattern{}.set(small.aux, true)) == 0.0);

    const RegisterLayout wide = RegisterLayout::standard(2, 2);
    const StateVector w = init_uniform(wide);
    for (std::uint64_t i = 0; i < 4; ++i) {
        for (std::uint64_t j = 0; j < 4; ++j) {
            CHECK(w.amplitude(wide.basis_index(i, j)).real() ==
                  doctest::Approx(0.25).epsilon(1e-14));
        }
    }
}

TEST_CASE("masking") {
    const RegisterLayout layout = RegisterLayout::standard(3, 2);

    // all-ones address needs no gates
    CHECK(make_mask(layout, layout.rows() - 1, layout.cols() - 1).gates.empty());

    // row address 0 flips every row qubit
    const MaskPlan plan = make_mask(layout, 0, std::nullopt);
    CHECK(plan.gates.size() == 3);
    for (const GateOp& g : plan.gates) {
        CHECK(g.kind == GateKind::X);
        bool in_rows = false;
        for (std::size_t q : layout.row_qubits) {
            in_rows = in_rows || q == g.target;
        }
        CHECK(in_rows);
    }

    // self-inverse, bit-exact
    std::mt19937_64 rng(5);
    auto loaded = testutil::load_random(rng, 3, 2);
    const std::vector<Amplitude> before(loaded.state.amplitudes().begin(),
                                        loaded.state.amplitudes().end());
    mask(loaded.state, layout, 1, std::nullopt);
    mask(loaded.state, layout, 1, std::nullopt);
    for (std::uint64_t z = 0; z < loaded.state.size(); ++z) {
        CHECK(loaded.state.amplitude(z) == before[z]);
    }

    CHECK_THROWS_AS(make_mask(layout, 8, std::nullopt), AddressError);
}

TEST_CASE("pointwise loading hand example") {
    // f = [[0.5, -0.5]]: inf-norm 0.5, so the embedded row is (1, -1)/sqrt(2).
    const ClassicalMatrix f = ClassicalMatrix::from_rows({{0.5, -0.5}});
    const RegisterLayout layout = RegisterLayout::standard(0, 1);
    StateVector s = init_uniform(layout);
    load_pointwise(s, layout, f);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(s.amplitude(layout.basis_index(0, 0)).real() ==
          doctest::Approx(inv_sqrt2).epsilon(1e-13));
    CHECK(s.amplitude(layout.basis_index(0, 1)).real() ==
          doctest::Approx(-inv_sqrt2).epsilon(1e-13));
    s.check_norm(1e-12);
}

TEST_CASE("constant f embeds with an empty residual sector") {
    const RegisterLayout layout = RegisterLayout::standard(1, 2);
    StateVector s = init_uniform(layout);
    load_pointwise(s, layout, ClassicalMatrix(2, 4, 1.0));
    const double unit = 1.0 / std::sqrt(8.0);
    for (std::uint64_t i = 0; i < 2; ++i) {
        for (std::uint64_t j = 0; j < 4; ++j) {
            CHECK(s.amplitude(layout.basis_index(i, j)).real() ==
                  doctest::Approx(unit).epsilon(1e-13));
        }
    }
    CHECK(s.probability_of(BasisPattern{}.set(layout.aux, true)) < 1e-24);
}

TEST_CASE("round-trip through read_matrix") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n_i = trial % 4;  // up to 8 rows
        const std::size_t n_j = (trial / 4) % 4;
        auto loaded = testutil::load_random(rng, n_i, n_j);
        const ClassicalMatrix out = read_matrix(loaded.state, loaded.layout);
        CHECK(testref::max_abs_diff(testutil::to_rows(out), loaded.normalized) < 1e-10);
        loaded.state.check_norm(1e-12);
    }
}

TEST_CASE("read_matrix of the uniform state is all ones") {
    const RegisterLayout layout = RegisterLayout::standard(2, 1);
    const StateVector s = init_uniform(layout);
    const ClassicalMatrix ones = read_matrix(s, layout);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(ones.at(i, j) == doctest::Approx(1.0).epsilon(1e-13));
        }
    }
}

TEST_CASE("dimension mismatch is rejected") {
    const RegisterLayout layout = RegisterLayout::standard(1, 1);
    StateVector s = init_uniform(layout);
    CHECK_THROWS_AS(load_pointwise(s, layout, ClassicalMatrix(2, 4, 0.0)), DimensionError);
}

TEST_CASE("constant row loading") {
    const RegisterLayout layout = RegisterLayout::standard(3, 2);

    SUBCASE("c = 1 leaves the state untouched") {
        StateVector s = init_uniform(layout);
        const std::vector<Amplitude> before(s.amplitudes().begin(), s.amplitudes().end());
        load_constant_row(s, layout, 0, 1.0);
        double drift = 0.0;
        for (std::uint64_t z = 0; z < s.size(); ++z) {
            drift = std::max(drift, std::abs(s.amplitude(z) - before[z]));
        }
        CHECK(drift < 1e-12);
    }

    SUBCASE("c = 0 moves the row to the residual sector") {
        StateVector s = init_uniform(layout);
        load_constant_row(s, layout, 2, 0.0);
        const double unit = 1.0 / std::sqrt(32.0);
        for (std::uint64_t j = 0; j < 4; ++j) {
            CHECK(std::abs(s.amplitude(layout.basis_index(2, j))) < 1e-14);
            CHECK(s.amplitude(layout.basis_index(2, j, true)).real() ==
                  doctest::Approx(unit).epsilon(1e-13));
        }
    }

    SUBCASE("out-of-range constants are rejected") {
        StateVector s = init_uniform(layout);
        CHECK_THROWS_AS(load_constant_row(s, layout, 0, 1.5), RangeError);
        CHECK_THROWS_AS(load_constant_row(s, layout, 8, 0.5), AddressError);
    }
}

TEST_CASE("constant row cost: worst-case mask plus one controlled rotation") {
    GateCounts reference;
    bool first = true;
    for (std::size_t n_j : {std::size_t{1}, std::size_t{3}, std::size_t{6}}) {
        const RegisterLayout layout = RegisterLayout::standard(3, n_j);
        StateVector s = init_uniform(layout);
        s.reset_stats();
        load_constant_row(s, layout, 0, 0.5);
        const GateCounts delta = s.stats().total();
        CHECK(delta.x == 6);  // mask + unmask of the all-zero row address
        CHECK(delta.ry == 2);
        CHECK(delta.multi_controlled == 1);
        CHECK(delta.cnot == 0);
        if (first) {
            reference = delta;
            first = false;
        } else {
            CHECK(delta == reference);
        }
        // nothing touched the column register
        const auto& per_op = s.stats().per_op();
        CHECK(per_op.count("load_constant_row") == 1);
    }
}

TEST_CASE("csv ingestion with optional header") {
    std::istringstream plain("1,2\n3,4\n");
    const ClassicalMatrix a = ClassicalMatrix::from_csv(plain);
    CHECK(a.rows() == 2);
    CHECK(a.at(1, 0) == 3.0);

    std::istringstream header("col_a,col_b\n1,2\n3,4\n");
    const ClassicalMatrix b = ClassicalMatrix::from_csv(header);
    CHECK(a == b);

    std::istringstream bad("1,2\nx,4\n");
    CHECK_THROWS_AS(ClassicalMatrix::from_csv(bad), ParseError);

    std::istringstream empty("\n");
    CHECK_THROWS_AS(ClassicalMatrix::from_csv(empty), ParseError);
}

TEST_CASE("json ingestion") {
    const ClassicalMatrix m = ClassicalMatrix::from_json_text("[[0.5, -0.25], [1, 0]]");
    CHECK(m.rows() == 2);
    CHECK(m.at(0, 1) == -0.25);
    CHECK(m.inf_norm() == 1.0);

    CHECK_THROWS_AS(ClassicalMatrix::from_json_text("{\"a\": 1}"), ParseError);
    CHECK_THROWS_AS(ClassicalMatrix::from_json_text("[[1, 2], [3]]"), DimensionError);
    CHECK_THROWS_AS(ClassicalMatrix::from_json_text("[[1, \"x\"]]"), ParseError);
}
