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

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qmat/gates.hpp"
#include "qmat/stats.hpp"

namespace qmat {

using Amplitude = std::complex<double>;

/// Capacity bound for new states. Defaults to 24 qubits; the environment
/// variable QMAT_MAX_QUBITS overrides it.
std::size_t max_qubits();

/// Dense state vector over n qubits. Basis index z stores qubit q as bit
/// q of z (qubit 0 is the least significant bit). Externally single
/// writer: do not apply gates concurrently to one instance.
class StateVector {
  public:
    /// Ground state |0...0>. Throws CapacityError outside [1, max_qubits()].
    explicit StateVector(std::size_t n_qubits);

    std::size_t n_qubits() const { return n_qubits_; }
    std::uint64_t size() const { return std::uint64_t{1} << n_qubits_; }

    std::span<const Amplitude> amplitudes() const { return amps_; }
    Amplitude amplitude(std::uint64_t z) const;

    /// Resets to the basis state |z> without touching the gate ledger.
    void reset_to_basis(std::uint64_t z);

    /// Applies one (multi-controlled) gate. Only basis pairs that differ
    /// in the target bit and satisfy every control polarity are touched;
    /// all other amplitudes are left bit-exact.
    void apply(const GateOp& g);

    /// H on each listed qubit, ascending index order. Qubits must be distinct.
    void walsh_hadamard(std::span<const std::size_t> qubits);

    /// Total probability of basis states matching the pattern.
    double probability_of(const BasisPattern& pattern) const;

    /// Multinomial draw of `shots` measurements from |amps|^2, keyed by
    /// basis index. Deterministic for a fixed seed.
    std::map<std::uint64_t, std::uint64_t> sample(std::uint64_t shots, std::uint64_t seed) const;

    double norm_squared() const;

    /// Throws InconsistencyError when |norm^2 - 1| exceeds tol.
    void check_norm(double tol = 1e-10) const;

    /// Global phase flip of the entire vector. Unobservable; not a gate
    /// and not tallied.
    void negate();

    /// Semantic reflection 1 - 2|z><z|: flips the sign of one amplitude.
    /// Ledgered as an X-conjugated multi-controlled Z.
    void reflect_about(std::uint64_t z);

    GateStats& stats() { return stats_; }
    const GateStats& stats() const { return stats_; }
    void reset_stats() { stats_.reset(); }

  private:
    std::size_t n_qubits_;
    std::vector<Amplitude> amps_;
    GateStats stats_;
};

/// <a|b> = sum_z conj(a_z) b_z. Throws DimensionError on size mismatch.
Amplitude inner_product(const StateVector& a, const StateVector& b);

}  // namespace qmat
