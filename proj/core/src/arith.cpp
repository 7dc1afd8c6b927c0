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

#include "qmat/arith.hpp"

#include <cmath>
#include <optional>

#include "qmat/errors.hpp"
#include "qmat/qmatrix.hpp"

namespace qmat {

namespace {

// Masks the selected address (if any) and returns the qubits whose
// all-ones reading gates the selected slice.
struct Selection {
    std::optional<MaskPlan> plan;
    std::vector<std::size_t> control_qubits;
};

Selection select(StateVector& state, const RegisterLayout& layout, RowSelector sel) {
    Selection s;
    switch (sel.kind) {
        case RowSelector::Kind::Row:
            if (sel.index >= layout.rows()) {
                throw AddressError("selected row out of range");
            }
            s.plan = make_mask(layout, sel.index, std::nullopt);
            s.control_qubits = layout.row_qubits;
            break;
        case RowSelector::Kind::Col:
            if (sel.index >= layout.cols()) {
                throw AddressError("selected column out of range");
            }
            s.plan = make_mask(layout, std::nullopt, sel.index);
            s.control_qubits = layout.col_qubits;
            break;
        case RowSelector::Kind::All:
            break;
    }
    if (s.plan.has_value()) {
        s.plan->apply(state);
    }
    return s;
}

void unselect(StateVector& state, const Selection& s) {
    if (s.plan.has_value()) {
        s.plan->apply(state);
    }
}

GateOp with_controls(GateOp g, const std::vector<std::size_t>& controls) {
    for (std::size_t q : controls) {
        g.controlled(q);
    }
    return g;
}

// Increment (j -> j+1 mod 2^n) or decrement cascade over `reg`, each gate
// additionally conditioned on `extra` reading all-ones.
void apply_cascade(StateVector& state, const std::vector<std::size_t>& reg, bool increment,
                   const std::vector<std::size_t>& extra) {
    const std::size_t n = reg.size();
    if (n == 0) {
        return;
    }
    std::vector<GateOp> seq;
    for (std::size_t b = n; b-- > 1;) {
        GateOp g = GateOp::x(reg[b]);
        for (std::size_t lower = 0; lower < b; ++lower) {
            g.controlled(reg[lower]);
        }
        seq.push_back(with_controls(g, extra));
    }
    seq.push_back(with_controls(GateOp::x(reg[0]), extra));
    if (increment) {
        for (const GateOp& g : seq) {
            state.apply(g);
        }
    } else {
        for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
            state.apply(*it);
        }
    }
}

}  // namespace

void reverse(StateVector& state, const RegisterLayout& layout, RowSelector sel) {
    StatsScope scope(state.stats(), "reverse");
    if (sel.kind == RowSelector::Kind::All) {
        for (std::size_t q : layout.row_qubits) {
            state.apply(GateOp::x(q));
        }
        for (std::size_t q : layout.col_qubits) {
            state.apply(GateOp::x(q));
        }
        return;
    }
    const Selection s = select(state, layout, sel);
    const std::vector<std::size_t>& targets =
        sel.kind == RowSelector::Kind::Row ? layout.col_qubits : layout.row_qubits;
    for (std::size_t q : targets) {
        state.apply(with_controls(GateOp::x(q), s.control_qubits));
    }
    unselect(state, s);
}

void swap_with_pivot(StateVector& state, const RegisterLayout& layout, std::uint64_t pos) {
    const std::uint64_t J = layout.cols();
    if (pos >= J) {
        throw AddressError("pivot swap position out of range");
    }
    if (pos == J - 1) {
        return;  // swapping the pivot with itself
    }
    StatsScope scope(state.stats(), "swap_with_pivot");

    // Zero bits of pos, most significant first. Each multi-controlled NOT
    // moves the pivot into the block holding the target element; each
    // plain NOT swaps that block back toward the pivot position.
    std::vector<std::size_t> zeros;
    for (std::size_t b = layout.col_qubits.size(); b-- > 0;) {
        if (((pos >> b) & 1) == 0) {
            zeros.push_back(b);
        }
    }

    std::vector<GateOp> forward;
    for (std::size_t t = 0; t < zeros.size(); ++t) {
        const std::size_t b = zeros[t];
        GateOp mcx = GateOp::x(layout.col_qubits[b]);
        for (std::size_t other = 0; other < layout.col_qubits.size(); ++other) {
            if (other != b) {
                mcx.controlled(layout.col_qubits[other]);
            }
        }
        forward.push_back(mcx);
        if (t + 1 < zeros.size()) {
            forward.push_back(GateOp::x(layout.col_qubits[b]));
        }
    }
    for (const GateOp& g : forward) {
        state.apply(g);
    }
    // The last gate performed the swap; undo everything before it.
    for (std::size_t idx = forward.size() - 1; idx-- > 0;) {
        state.apply(forward[idx]);
    }
}

void swap_elements(StateVector& state, const RegisterLayout& layout, std::uint64_t i,
                   std::uint64_t j) {
    const std::uint64_t J = layout.cols();
    if (i >= J || j >= J) {
        throw AddressError("swap position out of range");
    }
    if (i == j) {
        return;
    }
    const std::uint64_t pivot = J - 1;
    if (j == pivot) {
        swap_with_pivot(state, layout, i);
        return;
    }
    if (i == pivot) {
        swap_with_pivot(state, layout, j);
        return;
    }
    swap_with_pivot(state, layout, j);
    swap_with_pivot(state, layout, i);
    swap_with_pivot(state, layout, j);
}

void cyclic_shift(StateVector& state, const RegisterLayout& layout, ShiftDirection direction,
                  RowSelector sel) {
    StatsScope scope(state.stats(), "cyclic_shift");
    const Selection s = select(state, layout, sel);
    const std::vector<std::size_t>& reg =
        sel.kind == RowSelector::Kind::Col ? layout.row_qubits : layout.col_qubits;
    // Left shift reads each element from its right neighbour: a decrement
    // of the address register. Right is the inverse increment.
    apply_cascade(state, reg, direction == ShiftDirection::Right, s.control_qubits);
    unselect(state, s);
}

void pairwise_sum_diff(StateVector& state, const RegisterLayout& layout, NormLedger* ledger) {
    if (layout.row_qubits.empty()) {
        throw DimensionError("pairwise sum needs a row register");
    }
    StatsScope scope(state.stats(), "pairwise_sum_diff");
    state.apply(GateOp::h(layout.row_qubits[0]));
    if (ledger != nullptr) {
        ledger->push("pairwise_hadamard", 1.0 / std::sqrt(2.0));
    }
}

void reduce_rows(StateVector& state, const RegisterLayout& layout, NormLedger* ledger) {
    StatsScope scope(state.stats(), "reduce_rows");
    state.walsh_hadamard(layout.col_qubits);
    if (ledger != nullptr) {
        ledger->push("reduction_walsh",
                     std::pow(2.0, -0.5 * static_cast<double>(layout.col_qubits.size())));
    }
}

void scale_by_constant(StateVector& state, const RegisterLayout& layout, RowSelector sel,
                       double alpha) {
    if (!layout.mul.has_value()) {
        throw DimensionError("scaling needs a mul flag qubit");
    }
    if (alpha < 0.0 || alpha > 1.0) {
        throw RangeError("scale factor must lie in [0, 1]");
    }
    StatsScope scope(state.stats(), "scale_by_constant");
    const Selection s = select(state, layout, sel);
    GateOp rot = GateOp::ry(*layout.mul, 2.0 * std::acos(alpha));
    state.apply(with_controls(rot, s.control_qubits));
    unselect(state, s);
}

namespace {

void check_multiply_layout(const Oracle& f, const Oracle& g, const RegisterLayout& layout) {
    layout.validate();
    if (!layout.mul.has_value()) {
        throw DimensionError("array multiplication needs two flag qubits");
    }
    if (!layout.row_qubits.empty()) {
        throw DimensionError("array multiplication works on a flag-flag-column layout");
    }
    if (f.length() != layout.cols() || g.length() != layout.cols()) {
        throw DimensionError("oracle length does not match the column register");
    }
}

void push_inf_norms(NormLedger* ledger, const Oracle& f, const Oracle& g) {
    if (ledger == nullptr) {
        return;
    }
    if (f.source_inf_norm() != 1.0) {
        ledger->push("inf_norm_" + f.name(), 1.0 / f.source_inf_norm());
    }
    if (g.source_inf_norm() != 1.0) {
        ledger->push("inf_norm_" + g.name(), 1.0 / g.source_inf_norm());
    }
}

}  // namespace

StateVector multiply_arrays(const Oracle& f, const Oracle& g, const RegisterLayout& layout,
                            NormLedger* ledger) {
    check_multiply_layout(f, g, layout);
    StateVector state(layout.total_qubits());
    StatsScope scope(state.stats(), "multiply_arrays");
    state.walsh_hadamard(layout.col_qubits);
    f.apply(state, layout.aux, layout.col_qubits);
    // swap the two flag qubits
    const std::size_t a = layout.aux;
    const std::size_t b = *layout.mul;
    state.apply(GateOp::x(b).controlled(a));
    state.apply(GateOp::x(a).controlled(b));
    state.apply(GateOp::x(b).controlled(a));
    g.apply(state, layout.aux, layout.col_qubits);
    push_inf_norms(ledger, f, g);
    return state;
}

StateVector square_array(const Oracle& f, const RegisterLayout& layout, NormLedger* ledger) {
    return multiply_arrays(f, f, layout, ledger);
}

StateVector scalar_product(const Oracle& f, const Oracle& g, const RegisterLayout& layout,
                           NormLedger* ledger) {
    StateVector state = multiply_arrays(f, g, layout, ledger);
    reduce_rows(state, layout, ledger);
    return state;
}

}  // namespace qmat
