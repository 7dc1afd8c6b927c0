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

#include "qmat/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <string>

#include "qmat/errors.hpp"

namespace qmat {

namespace {

constexpr std::size_t kDefaultMaxQubits = 24;

// 53-bit uniform double in [0, 1); independent of the standard library's
// unspecified uniform_real_distribution so sampling is portable.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::size_t max_qubits() {
    if (const char* env = std::getenv("QMAT_MAX_QUBITS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && v >= 1 && v <= 30) {
            return static_cast<std::size_t>(v);
        }
    }
    return kDefaultMaxQubits;
}

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
    const std::size_t cap = max_qubits();
    if (n_qubits < 1 || n_qubits > cap) {
        throw CapacityError("state size " + std::to_string(n_qubits) +
                            " outside [1, " + std::to_string(cap) + "] qubits");
    }
    amps_.assign(std::uint64_t{1} << n_qubits, Amplitude{0.0, 0.0});
    amps_[0] = Amplitude{1.0, 0.0};
}

Amplitude StateVector::amplitude(std::uint64_t z) const {
    if (z >= size()) {
        throw AddressError("basis index out of range");
    }
    return amps_[z];
}

void StateVector::reset_to_basis(std::uint64_t z) {
    if (z >= size()) {
        throw AddressError("basis index out of range");
    }
    std::fill(amps_.begin(), amps_.end(), Amplitude{0.0, 0.0});
    amps_[z] = Amplitude{1.0, 0.0};
}

void StateVector::apply(const GateOp& g) {
    if (g.target >= n_qubits_) {
        throw AddressError("gate target out of range");
    }
    std::uint64_t cmask = 0;
    std::uint64_t cval = 0;
    for (const Control& c : g.controls) {
        if (c.qubit >= n_qubits_) {
            throw AddressError("gate control out of range");
        }
        if (c.qubit == g.target) {
            throw AddressError("gate target also listed as control");
        }
        const std::uint64_t bit = std::uint64_t{1} << c.qubit;
        if ((cmask & bit) != 0 && ((cval & bit) != 0) != c.on_one) {
            throw AddressError("conflicting control polarities on one qubit");
        }
        cmask |= bit;
        if (c.on_one) {
            cval |= bit;
        }
    }

    double m00, m01, m10, m11;
    switch (g.kind) {
        case GateKind::X:
            m00 = 0.0; m01 = 1.0; m10 = 1.0; m11 = 0.0;
            break;
        case GateKind::H: {
            const double s = 1.0 / std::sqrt(2.0);
            m00 = s; m01 = s; m10 = s; m11 = -s;
            break;
        }
        case GateKind::Ry:
        default: {
            const double c = std::cos(g.angle / 2.0);
            const double s = std::sin(g.angle / 2.0);
            m00 = c; m01 = -s; m10 = s; m11 = c;
            break;
        }
    }

    const std::uint64_t tmask = std::uint64_t{1} << g.target;
    const std::uint64_t n = size();
    for (std::uint64_t base = 0; base < n; base += 2 * tmask) {
        for (std::uint64_t off = 0; off < tmask; ++off) {
            const std::uint64_t z0 = base + off;
            if ((z0 & cmask) != cval) {
                continue;
            }
            const std::uint64_t z1 = z0 | tmask;
            const Amplitude a0 = amps_[z0];
            const Amplitude a1 = amps_[z1];
            amps_[z0] = m00 * a0 + m01 * a1;
            amps_[z1] = m10 * a0 + m11 * a1;
        }
    }

    stats_.record(g);
}

void StateVector::walsh_hadamard(std::span<const std::size_t> qubits) {
    std::vector<std::size_t> sorted(qubits.begin(), qubits.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1]) {
            throw AddressError("walsh_hadamard qubits must be distinct");
        }
    }
    for (std::size_t q : sorted) {
        apply(GateOp::h(q));
    }
}

double StateVector::probability_of(const BasisPattern& pattern) const {
    if ((pattern.mask() >> n_qubits_) != 0) {
        throw AddressError("pattern qubit out of range");
    }
    double p = 0.0;
    const std::uint64_t n = size();
    for (std::uint64_t z = 0; z < n; ++z) {
        if (pattern.matches(z)) {
            p += std::norm(amps_[z]);
        }
    }
    return p;
}

std::map<std::uint64_t, std::uint64_t> StateVector::sample(std::uint64_t shots,
                                                           std::uint64_t seed) const {
    if (shots < 1) {
        throw RangeError("sample needs at least one shot");
    }
    const std::uint64_t n = size();
    std::vector<double> cumulative(n);
    double acc = 0.0;
    for (std::uint64_t z = 0; z < n; ++z) {
        acc += std::norm(amps_[z]);
        cumulative[z] = acc;
    }
    std::mt19937_64 rng(seed);
    std::map<std::uint64_t, std::uint64_t> histogram;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = uniform01(rng) * acc;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const std::uint64_t z =
            it == cumulative.end() ? n - 1
                                   : static_cast<std::uint64_t>(it - cumulative.begin());
        ++histogram[z];
    }
    return histogram;
}

double StateVector::norm_squared() const {
    double acc = 0.0;
    for (const Amplitude& a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

void StateVector::check_norm(double tol) const {
    const double n2 = norm_squared();
    if (std::abs(n2 - 1.0) > tol) {
        throw InconsistencyError("state norm drifted: |psi|^2 = " + std::to_string(n2));
    }
}

void StateVector::negate() {
    for (Amplitude& a : amps_) {
        a = -a;
    }
}

void StateVector::reflect_about(std::uint64_t z) {
    if (z >= size()) {
        throw AddressError("reflection index out of range");
    }
    amps_[z] = -amps_[z];
    stats_.record_reflection(n_qubits_, z);
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw DimensionError("inner_product needs equal register sizes");
    }
    Amplitude acc{0.0, 0.0};
    const auto av = a.amplitudes();
    const auto bv = b.amplitudes();
    for (std::uint64_t z = 0; z < av.size(); ++z) {
        acc += std::conj(av[z]) * bv[z];
    }
    return acc;
}

}  // namespace qmat
