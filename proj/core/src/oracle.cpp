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

#include "qmat/oracle.hpp"

#include <cmath>
#include <utility>

#include "json.hpp"
#include "qmat/errors.hpp"
#include "qmat/qmatrix.hpp"

namespace qmat {

namespace {

double embedding_angle(double value) {
    return 2.0 * std::acos(std::clamp(value, -1.0, 1.0));
}

std::size_t log2_exact(std::size_t n) {
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) {
        ++bits;
    }
    if ((std::size_t{1} << bits) != n) {
        throw DimensionError("array length must be a power of two");
    }
    return bits;
}

}  // namespace

Oracle Oracle::from_array(std::string name, std::vector<double> values) {
    if (values.empty()) {
        throw DimensionError("oracle needs a non-empty array");
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw RangeError("oracle values must be finite");
        }
        if (std::abs(v) > 1.0) {
            throw RangeError("oracle values must lie in [-1, 1]");
        }
    }
    Oracle o;
    o.name_ = std::move(name);
    o.n_col_qubits_ = log2_exact(values.size());
    o.values_ = std::move(values);
    return o;
}

Oracle Oracle::from_unnormalized(std::string name, std::vector<double> raw) {
    double norm = 0.0;
    for (double v : raw) {
        if (!std::isfinite(v)) {
            throw RangeError("oracle values must be finite");
        }
        norm = std::max(norm, std::abs(v));
    }
    if (norm > 0.0) {
        for (double& v : raw) {
            v /= norm;
        }
    }
    Oracle o = from_array(std::move(name), std::move(raw));
    o.inf_norm_ = norm == 0.0 ? 1.0 : norm;
    return o;
}

void Oracle::apply(StateVector& state, std::size_t flag, std::span<const std::size_t> cols,
                   std::span<const Control> extra_controls, bool inverse) const {
    if (cols.size() != n_col_qubits_) {
        throw DimensionError("column register does not match the oracle length");
    }
    // One masked, column-controlled rotation per entry. The masking X
    // gates stay unconditioned: where the extra controls fail, mask and
    // unmask cancel around a rotation that never fires.
    for (std::size_t step = 0; step < values_.size(); ++step) {
        const std::size_t j = inverse ? values_.size() - 1 - step : step;
        std::vector<GateOp> masks;
        for (std::size_t b = 0; b < cols.size(); ++b) {
            if (((j >> b) & 1) == 0) {
                masks.push_back(GateOp::x(cols[b]));
            }
        }
        for (const GateOp& g : masks) {
            state.apply(g);
        }
        const double angle = embedding_angle(values_[j]);
        GateOp rot = GateOp::ry(flag, inverse ? -angle : angle);
        for (std::size_t q : cols) {
            rot.controlled(q);
        }
        for (const Control& c : extra_controls) {
            rot.controls.push_back(c);
        }
        state.apply(rot);
        for (const GateOp& g : masks) {
            state.apply(g);
        }
    }
}

std::string Oracle::to_json_text() const {
    nlohmann::json j;
    j["name"] = name_;
    j["values"] = values_;
    j["inf_norm"] = inf_norm_;
    return j.dump();
}

Oracle Oracle::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad oracle JSON: ") + e.what());
    }
    if (!j.contains("name") || !j.contains("values")) {
        throw ParseError("oracle JSON needs name and values");
    }
    Oracle o = from_array(j["name"].get<std::string>(), j["values"].get<std::vector<double>>());
    if (j.contains("inf_norm")) {
        o.inf_norm_ = j["inf_norm"].get<double>();
    }
    return o;
}

std::vector<double> ShiftResult::sector_values() const {
    return read_row_sector(state, layout, marker_row);
}

std::vector<double> ShiftResult::sum_sector_values() const {
    return read_row_sector(state, layout, 0);
}

std::string ShiftResult::to_json_text() const {
    nlohmann::json j;
    j["levels"] = levels;
    j["shift"] = shift;
    j["level_shifts"] = level_shifts;
    j["marker_row"] = marker_row;
    j["sector"] = sector_values();
    if (levels == 1) {
        j["sum_sector"] = sum_sector_values();
    }
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [label, factor] : ledger.entries()) {
        entries.push_back({{"label", label}, {"factor", factor}});
    }
    j["ledger"] = {{"factor", ledger.factor()}, {"entries", entries}};
    return j.dump();
}

std::vector<double> shift_schedule(double s, std::size_t levels) {
    std::vector<double> schedule;
    schedule.reserve(levels);
    for (std::size_t k = 1; k <= levels; ++k) {
        if (k == 1) {
            schedule.push_back(s);
        } else if (k == 2) {
            schedule.push_back(2.0 * s / 3.0);
        } else {
            schedule.push_back(schedule.back() / 3.0);
        }
    }
    return schedule;
}

std::vector<double> staircase_offsets(double s, std::size_t levels) {
    const std::vector<double> schedule = shift_schedule(s, levels);
    const std::size_t steps = std::size_t{1} << levels;
    std::vector<double> offsets(steps, 0.0);
    for (std::size_t q = 0; q < steps; ++q) {
        double o = 0.0;
        for (std::size_t k = 1; k <= levels; ++k) {
            const bool upper = ((q >> (levels - k)) & 1) != 0;
            o += schedule[k - 1] * (upper ? 1.0 : -1.0);
        }
        offsets[q] = o;
    }
    return offsets;
}

namespace {

ShiftResult build_shift(const Oracle& f, double s, std::size_t levels, bool with_steps,
                        const char* label) {
    if (std::abs(s) > 1.0) {
        throw RangeError("shift constant must lie in [-1, 1]");
    }
    if (levels < 1) {
        throw RangeError("shift needs at least one level");
    }
    const std::size_t n_j = f.n_col_qubits();
    if (with_steps && levels > n_j) {
        throw RangeError("more staircase levels than column qubits");
    }

    const RegisterLayout layout = RegisterLayout::standard(levels, n_j);
    StateVector state(layout.total_qubits());
    StatsScope scope(state.stats(), label);

    std::vector<std::size_t> address(layout.row_qubits);
    address.insert(address.end(), layout.col_qubits.begin(), layout.col_qubits.end());
    state.walsh_hadamard(address);

    // f on row 0
    std::vector<Control> row_zero;
    row_zero.reserve(levels);
    for (std::size_t q : layout.row_qubits) {
        row_zero.push_back(Control{q, false});
    }
    f.apply(state, layout.aux, layout.col_qubits, row_zero);

    const std::vector<double> schedule = shift_schedule(s, levels);
    double stage_scale = 1.0;
    for (std::size_t k = 1; k <= levels; ++k) {
        // Constant for this level, compensated for the Hadamard factors
        // the running array has already absorbed.
        const double constant =
            schedule[k - 1] / std::pow(std::sqrt(2.0), static_cast<double>(k - 1));
        GateOp rot = GateOp::ry(layout.aux, embedding_angle(constant));
        for (std::size_t b = 0; b < levels; ++b) {
            rot.controlled(layout.row_qubits[b], b < k);
        }
        state.apply(rot);

        GateOp combine = GateOp::h(layout.row_qubits[k - 1]);
        for (std::size_t b = k; b < levels; ++b) {
            combine.controlled(layout.row_qubits[b], false);
        }
        state.apply(combine);

        if (with_steps) {
            state.apply(
                GateOp::x(layout.row_qubits[k - 1]).controlled(layout.col_qubits[n_j - k]));
        }
        stage_scale *= 0.5;
    }

    ShiftResult result{std::move(state), layout, levels, s, schedule,
                       (std::uint64_t{1} << levels) - 1, BasisPattern{}, BasisPattern{},
                       NormLedger{}};
    result.diff_sector = layout.sector(result.marker_row, std::nullopt);
    if (f.source_inf_norm() != 1.0) {
        result.ledger.push("inf_norm_" + f.name(), 1.0 / f.source_inf_norm());
    }
    result.ledger.push("shift_stages", stage_scale);
    return result;
}

}  // namespace

ShiftResult constant_shift(const Oracle& f, double s) {
    ShiftResult result = build_shift(f, s, 1, false, "constant_shift");
    result.sum_sector = result.layout.sector(0, std::nullopt);
    return result;
}

ShiftResult step_shift(const Oracle& f, double s) {
    if (f.n_col_qubits() < 1) {
        throw RangeError("step shift needs at least two columns");
    }
    return build_shift(f, s, 1, true, "step_shift");
}

ShiftResult linear_shift(const Oracle& f, double s, std::size_t levels) {
    return build_shift(f, s, levels, true, "linear_shift");
}

ShiftResult linear_shift(const Oracle& f, const ShiftSpec& shift) {
    return linear_shift(f, shift.s, shift.levels);
}

}  // namespace qmat
