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

#include "qmat/qmatrix.hpp"

#include <algorithm>
#include <cmath>

#include "qmat/errors.hpp"

namespace qmat {

namespace {

double embedding_angle(double value) {
    // cos(theta/2) = value for value in [-1, 1]
    return 2.0 * std::acos(std::clamp(value, -1.0, 1.0));
}

std::vector<std::size_t> address_qubits(const RegisterLayout& layout) {
    std::vector<std::size_t> qs(layout.row_qubits);
    qs.insert(qs.end(), layout.col_qubits.begin(), layout.col_qubits.end());
    return qs;
}

}  // namespace

StateVector init_uniform(const RegisterLayout& layout) {
    layout.validate();
    StateVector state(layout.total_qubits());
    StatsScope scope(state.stats(), "init_uniform");
    const std::vector<std::size_t> qs = address_qubits(layout);
    state.walsh_hadamard(qs);
    return state;
}

void mask(StateVector& state, const RegisterLayout& layout, std::optional<std::uint64_t> row,
          std::optional<std::uint64_t> col) {
    make_mask(layout, row, col).apply(state);
}

void load_pointwise(StateVector& state, const RegisterLayout& layout, const ClassicalMatrix& f) {
    if (f.rows() != layout.rows() || f.cols() != layout.cols()) {
        throw DimensionError("matrix shape does not match the register layout");
    }
    StatsScope scope(state.stats(), "load_pointwise");
    const double norm = f.inf_norm();
    const std::vector<std::size_t> qs = address_qubits(layout);
    for (std::uint64_t i = 0; i < layout.rows(); ++i) {
        for (std::uint64_t j = 0; j < layout.cols(); ++j) {
            const double value = norm == 0.0 ? 0.0 : f.at(i, j) / norm;
            const MaskPlan plan = make_mask(layout, i, j);
            plan.apply(state);
            GateOp rot = GateOp::ry(layout.aux, embedding_angle(value));
            for (std::size_t q : qs) {
                rot.controlled(q);
            }
            state.apply(rot);
            plan.apply(state);
        }
    }
}

void load_constant_row(StateVector& state, const RegisterLayout& layout, std::uint64_t row,
                       double c) {
    if (row >= layout.rows()) {
        throw AddressError("row address out of range");
    }
    if (std::abs(c) > 1.0) {
        throw RangeError("constant must lie in [-1, 1]");
    }
    StatsScope scope(state.stats(), "load_constant_row");
    const MaskPlan plan = make_mask(layout, row, std::nullopt);
    plan.apply(state);
    GateOp rot = GateOp::ry(layout.aux, embedding_angle(c));
    for (std::size_t q : layout.row_qubits) {
        rot.controlled(q);
    }
    state.apply(rot);
    plan.apply(state);
}

ClassicalMatrix read_matrix(const StateVector& state, const RegisterLayout& layout) {
    const double unit = std::sqrt(static_cast<double>(layout.rows()) *
                                  static_cast<double>(layout.cols()));
    ClassicalMatrix out(layout.rows(), layout.cols());
    for (std::uint64_t i = 0; i < layout.rows(); ++i) {
        for (std::uint64_t j = 0; j < layout.cols(); ++j) {
            out.at(i, j) = state.amplitude(layout.basis_index(i, j)).real() * unit;
        }
    }
    return out;
}

std::vector<double> read_row_sector(const StateVector& state, const RegisterLayout& layout,
                                    std::uint64_t row, bool aux_bit) {
    if (row >= layout.rows()) {
        throw AddressError("row address out of range");
    }
    const double unit = std::sqrt(static_cast<double>(layout.cols()));
    std::vector<double> out(layout.cols());
    for (std::uint64_t j = 0; j < layout.cols(); ++j) {
        out[j] = state.amplitude(layout.basis_index(row, j, aux_bit)).real() * unit;
    }
    return out;
}

}  // namespace qmat
