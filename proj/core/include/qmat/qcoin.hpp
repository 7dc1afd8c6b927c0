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

#include <cstdint>
#include <string>
#include <vector>

#include "qmat/gates.hpp"
#include "qmat/state_vector.hpp"

namespace qmat {

/// An invertible preparation circuit: |Psi> = sign * gates... |start>.
/// The sign is a tracked global phase (unobservable); it exists so that
/// sign-flipped preparations stay first-class values in tests.
struct Preparation {
    std::size_t n_qubits = 0;
    std::uint64_t start_index = 0;
    std::vector<GateOp> gates;
    int sign = +1;

    /// One qubit with <1|Psi> = a, |a| <= 1.
    static Preparation amplitude_state(double a);

    StateVector prepare() const;
    void apply(StateVector& state) const;
    void unapply(StateVector& state) const;

    Preparation negated() const {
        Preparation p = *this;
        p.sign = -p.sign;
        return p;
    }
};

/// Confidence interval [mu_tilde - delta, mu_tilde + delta] on an
/// amplitude, clamped to [-1, 1].
struct ConfidenceInterval {
    double mu_tilde = 0.0;
    double delta = 0.0;
    std::uint64_t shots = 0;
    double failure_prob = 0.0;

    double lo() const;
    double hi() const;
};

/// Chebyshev half-width on a probability estimate from `shots` draws with
/// worst-case Bernoulli variance 1/4: sqrt(1 / (4 * shots * failure_prob)).
double chebyshev_halfwidth(std::uint64_t shots, double failure_prob);

/// Samples the preparation `shots` times and estimates the magnitude of
/// the amplitude along `chi` (a full basis assignment) as the square root
/// of the empirical frequency, with a Chebyshev interval. Zero observed
/// counts anchor the interval at 0 with the widened half-width
/// sqrt(delta_P), the exact image of the probability interval.
ConfidenceInterval unamplified_estimate(const Preparation& prepare, const BasisPattern& chi,
                                        std::uint64_t shots, std::uint64_t seed,
                                        double failure_prob);

/// The preparation for a shifted amplitude plus its read-out metadata.
struct ShiftedPreparation {
    Preparation prep;     // over n_qubits + 1 (fresh row qubit on top)
    BasisPattern marker;  // basis state carrying (a - s)/2
    double scale = 0.5;   // ledger factor of the stage
    double shift = 0.0;   // s
};

/// Composes `base` with the constant-shift construction: a fresh row
/// qubit in superposition, the base circuit on the row-0 branch, a
/// constant-s loader on the row-1 branch, and a combining Hadamard. The
/// marker sector then carries (a - s)/2 where a is the amplitude of
/// `base` along chi. Throws RangeError when |s| > 1.
ShiftedPreparation shifted_prepare(const Preparation& base, const BasisPattern& chi, double s);

/// Same, shifting by the interval's lower bound mu_tilde - delta.
ShiftedPreparation shifted_prepare(const Preparation& base, const BasisPattern& chi,
                                   const ConfidenceInterval& interval);

/// The amplifier Q built from a preparation O and the reflections about
/// sigma and chi: Q = O R_sigma O^-1 R_chi up to a global phase chosen so
/// that <chi| Q^k O|sigma> = sin((2k+1) theta) with sin(theta) = <chi|O|sigma>.
/// Patterns must be full basis assignments; sigma is normally the
/// preparation's start state.
class GroverOperator {
  public:
    GroverOperator(Preparation prep, BasisPattern sigma, BasisPattern chi);

    void apply(StateVector& state) const;
    void apply_power(StateVector& state, std::uint64_t k) const;

    /// |Psi> = O|sigma> followed by k applications of Q.
    StateVector prepare_and_amplify(std::uint64_t k) const;

    const Preparation& preparation() const { return prep_; }

  private:
    Preparation prep_;
    BasisPattern sigma_;
    BasisPattern chi_;
};

/// Largest k >= 0 with (2k+1) * theta <= pi/2. Throws RangeError outside
/// 0 < theta <= pi/2.
std::uint64_t choose_k(double theta);

/// gamma = sin^2((2k+1) theta) / sin^2(theta).
double amplification_factor(double theta, std::uint64_t k);

/// One amplified zoom stage of the estimation loop.
struct GroverStage {
    std::uint64_t k = 0;
    double shift = 0.0;           // s applied before amplification
    double theta = 0.0;           // realized angle estimate of the shifted amplitude
    double gamma_planned = 0.0;   // at the planning angle used to pick k
    double gamma_realized = 0.0;  // sin^2((2k+1) theta)/sin^2(theta) at `theta`
    std::uint64_t shots = 0;
    std::uint64_t hits = 0;
    double p_hat = 0.0;            // measured amplified probability
    double p_hat_halfwidth = 0.0;  // Chebyshev half-width on p_hat
    double p_est = 0.0;            // p_hat / gamma_realized
    double p_halfwidth = 0.0;      // p_hat_halfwidth / gamma_realized
    ConfidenceInterval before;     // interval on the target amplitude entering the stage
    ConfidenceInterval after;      // interval on the target amplitude leaving the stage
};

struct QCoinConfig {
    std::uint64_t shots_per_stage = 10000;
    std::size_t stages = 3;
    double failure_prob = 0.05;
    std::uint64_t seed = 0;
    /// Per-stage bound on the Grover power. Stage cost grows as pi/(2*delta),
    /// so very deep zooms are clamped; a smaller k only reduces the
    /// amplification, every recorded quantity stays consistent.
    std::uint64_t max_k = std::uint64_t{1} << 21;
};

/// Full record of one estimation run.
struct EstimationTrace {
    ConfidenceInterval stage0;
    std::vector<GroverStage> stages;
    double final_estimate = 0.0;
    double final_half_width = 0.0;

    std::string to_json_text() const;
    /// Lines of "stage,half_width" for convergence plots.
    std::string to_csv() const;
};

/// The zoom-in loop: an unamplified estimate, then `stages` rounds of
/// shift-by-the-lower-bound, Grover amplification with k chosen from the
/// interval's upper edge, re-estimation, and conversion back through the
/// stage scale factor. Probabilities drive everything, so the trace is
/// invariant under a global sign flip of the preparation.
EstimationTrace qcoin_estimate(const Preparation& prepare, const BasisPattern& chi,
                               const QCoinConfig& config);

}  // namespace qmat
