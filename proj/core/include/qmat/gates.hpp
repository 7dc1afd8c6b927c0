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

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qmat {

/// Gate alphabet of the whole library: NOT, Hadamard, and the real
/// y-rotation Ry(theta) = [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]].
enum class GateKind { X, H, Ry };

/// Control terminal of a gate. `on_one` fires on |1>, otherwise on |0>
/// (an on-0 control is the X-conjugated on-1 control and is tallied that
/// way in GateStats).
struct Control {
    std::size_t qubit = 0;
    bool on_one = true;

    bool operator==(const Control&) const = default;
};

/// A primitive (possibly multi-controlled) gate.
struct GateOp {
    GateKind kind = GateKind::X;
    std::size_t target = 0;
    double angle = 0.0;  // radians, Ry only
    std::vector<Control> controls;

    static GateOp x(std::size_t target) { return GateOp{GateKind::X, target, 0.0, {}}; }
    static GateOp h(std::size_t target) { return GateOp{GateKind::H, target, 0.0, {}}; }
    static GateOp ry(std::size_t target, double angle) {
        return GateOp{GateKind::Ry, target, angle, {}};
    }

    /// Builder-style control attachment: GateOp::x(t).controlled(c0).controlled(c1, false).
    GateOp& controlled(std::size_t qubit, bool on_one = true) {
        controls.push_back(Control{qubit, on_one});
        return *this;
    }

    /// X and H are self-inverse; Ry inverts by negating the angle.
    GateOp inverse() const {
        GateOp g = *this;
        if (g.kind == GateKind::Ry) {
            g.angle = -g.angle;
        }
        return g;
    }
};

/// Partial (or full) assignment of basis-state bits, mask/value encoded.
/// Used for measurement patterns, sector markers and reflection targets.
class BasisPattern {
  public:
    BasisPattern() = default;

    BasisPattern& set(std::size_t qubit, bool bit) {
        const std::uint64_t m = std::uint64_t{1} << qubit;
        mask_ |= m;
        if (bit) {
            value_ |= m;
        } else {
            value_ &= ~m;
        }
        return *this;
    }

    bool matches(std::uint64_t z) const { return (z & mask_) == value_; }
    std::uint64_t mask() const { return mask_; }
    std::uint64_t value() const { return value_; }
    bool empty() const { return mask_ == 0; }

    /// True when every one of the n_qubits lowest qubits is assigned.
    bool is_full(std::size_t n_qubits) const {
        const std::uint64_t all =
            n_qubits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_qubits) - 1);
        return (mask_ & all) == all;
    }

    bool operator==(const BasisPattern&) const = default;

  private:
    std::uint64_t mask_ = 0;
    std::uint64_t value_ = 0;
};

/// Full assignment pinning all n_qubits bits to the basis index `value`.
inline BasisPattern full_pattern(std::uint64_t value, std::size_t n_qubits) {
    BasisPattern p;
    for (std::size_t q = 0; q < n_qubits; ++q) {
        p.set(q, (value >> q) & 1);
    }
    return p;
}

}  // namespace qmat
