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

#include "qmat/stats.hpp"

#include <bit>
#include <stdexcept>

namespace qmat {

namespace {

std::uint64_t mcx_toffolis(std::size_t n_controls) {
    return n_controls >= 2 ? 2 * static_cast<std::uint64_t>(n_controls) - 3 : 0;
}

}  // namespace

GateCounts& GateCounts::operator+=(const GateCounts& o) {
    x += o.x;
    h += o.h;
    ry += o.ry;
    cnot += o.cnot;
    multi_controlled += o.multi_controlled;
    toffoli_estimate += o.toffoli_estimate;
    return *this;
}

GateCounts GateCounts::operator-(const GateCounts& o) const {
    if (o.x > x || o.h > h || o.ry > ry || o.cnot > cnot ||
        o.multi_controlled > multi_controlled || o.toffoli_estimate > toffoli_estimate) {
        throw std::underflow_error("gate count delta would be negative");
    }
    GateCounts d;
    d.x = x - o.x;
    d.h = h - o.h;
    d.ry = ry - o.ry;
    d.cnot = cnot - o.cnot;
    d.multi_controlled = multi_controlled - o.multi_controlled;
    d.toffoli_estimate = toffoli_estimate - o.toffoli_estimate;
    return d;
}

void GateStats::record(const GateOp& g) {
    GateCounts c;
    std::size_t on0 = 0;
    for (const Control& ctl : g.controls) {
        if (!ctl.on_one) {
            ++on0;
        }
    }
    c.x += 2 * static_cast<std::uint64_t>(on0);

    const std::size_t nc = g.controls.size();
    switch (g.kind) {
        case GateKind::X:
            if (nc == 0) {
                c.x += 1;
            } else if (nc == 1) {
                c.cnot += 1;
            } else {
                c.multi_controlled += 1;
                c.toffoli_estimate += mcx_toffolis(nc);
            }
            break;
        case GateKind::H:
            if (nc == 0) {
                c.h += 1;
            } else {
                // two controlled NOTs sandwiching two plain Hadamards
                c.multi_controlled += 1;
                c.h += 2;
                if (nc == 1) {
                    c.cnot += 2;
                } else {
                    c.toffoli_estimate += 2 * mcx_toffolis(nc);
                }
            }
            break;
        case GateKind::Ry:
            if (nc == 0) {
                c.ry += 1;
            } else {
                // two controlled NOTs sandwiching two plain rotations
                c.multi_controlled += 1;
                c.ry += 2;
                if (nc == 1) {
                    c.cnot += 2;
                } else {
                    c.toffoli_estimate += 2 * mcx_toffolis(nc);
                }
            }
            break;
    }
    add(c);
}

void GateStats::record_reflection(std::size_t n_qubits, std::uint64_t pattern_value) {
    GateCounts c;
    c.multi_controlled += 1;
    c.h += 2;
    if (n_qubits >= 2) {
        c.toffoli_estimate += mcx_toffolis(n_qubits - 1);
    }
    const std::uint64_t all =
        n_qubits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_qubits) - 1);
    const auto zeros = static_cast<std::uint64_t>(std::popcount(all & ~pattern_value));
    c.x += 2 * zeros;
    add(c);
}

void GateStats::reset() {
    total_ = GateCounts{};
    per_op_.clear();
}

void GateStats::add(const GateCounts& c) {
    total_ += c;
    per_op_[label_.empty() ? "unlabeled" : label_] += c;
}

}  // namespace qmat
