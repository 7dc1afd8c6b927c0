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

#include "qmat/qcoin.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "json.hpp"
#include "qmat/errors.hpp"

namespace qmat {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Derivative floor for the probability-to-amplitude conversion, keeping
// the half-width finite near zero.
constexpr double kAmplitudeFloor = 0.05;

std::uint64_t pattern_hits(const std::map<std::uint64_t, std::uint64_t>& histogram,
                           const BasisPattern& pattern) {
    std::uint64_t hits = 0;
    for (const auto& [z, count] : histogram) {
        if (pattern.matches(z)) {
            hits += count;
        }
    }
    return hits;
}

void require_full_pattern(const BasisPattern& pattern, std::size_t n_qubits, const char* what) {
    if (!pattern.is_full(n_qubits) || (pattern.mask() >> n_qubits) != 0) {
        throw DimensionError(std::string(what) + " must assign every qubit of the layout");
    }
}

}  // namespace

Preparation Preparation::amplitude_state(double a) {
    if (std::abs(a) > 1.0) {
        throw RangeError("amplitude must lie in [-1, 1]");
    }
    Preparation p;
    p.n_qubits = 1;
    p.start_index = 0;
    p.gates.push_back(GateOp::ry(0, 2.0 * std::asin(a)));
    return p;
}

StateVector Preparation::prepare() const {
    StateVector state(n_qubits);
    state.reset_to_basis(start_index);
    apply(state);
    return state;
}

void Preparation::apply(StateVector& state) const {
    for (const GateOp& g : gates) {
        state.apply(g);
    }
    if (sign < 0) {
        state.negate();
    }
}

void Preparation::unapply(StateVector& state) const {
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        state.apply(it->inverse());
    }
    if (sign < 0) {
        state.negate();
    }
}

double ConfidenceInterval::lo() const { return std::clamp(mu_tilde - delta, -1.0, 1.0); }
double ConfidenceInterval::hi() const { return std::clamp(mu_tilde + delta, -1.0, 1.0); }

double chebyshev_halfwidth(std::uint64_t shots, double failure_prob) {
    if (shots < 1) {
        throw RangeError("estimation needs at least one shot");
    }
    if (failure_prob <= 0.0 || failure_prob >= 1.0) {
        throw RangeError("failure probability must lie in (0, 1)");
    }
    return std::sqrt(1.0 / (4.0 * static_cast<double>(shots) * failure_prob));
}

ConfidenceInterval unamplified_estimate(const Preparation& prepare, const BasisPattern& chi,
                                        std::uint64_t shots, std::uint64_t seed,
                                        double failure_prob) {
    require_full_pattern(chi, prepare.n_qubits, "chi pattern");
    const double delta_p = chebyshev_halfwidth(shots, failure_prob);
    const StateVector state = prepare.prepare();
    const auto histogram = state.sample(shots, seed);
    const std::uint64_t hits = pattern_hits(histogram, chi);
    ConfidenceInterval interval;
    interval.shots = shots;
    interval.failure_prob = failure_prob;
    if (hits == 0) {
        // No signal: anchor at zero and widen to the exact image of the
        // probability interval [0, delta_p] under the square root.
        interval.mu_tilde = 0.0;
        interval.delta = std::sqrt(delta_p);
        return interval;
    }
    const double freq = static_cast<double>(hits) / static_cast<double>(shots);
    interval.mu_tilde = std::sqrt(freq);
    interval.delta = delta_p / (2.0 * std::max(interval.mu_tilde, kAmplitudeFloor));
    return interval;
}

ShiftedPreparation shifted_prepare(const Preparation& base, const BasisPattern& chi, double s) {
    require_full_pattern(chi, base.n_qubits, "chi pattern");
    if (std::abs(s) > 1.0) {
        throw RangeError("shift constant must lie in [-1, 1]");
    }
    const std::size_t r = base.n_qubits;  // fresh row qubit on top

    ShiftedPreparation out;
    out.shift = s;
    out.scale = 0.5;
    out.prep.n_qubits = base.n_qubits + 1;
    out.prep.start_index = base.start_index;
    out.prep.sign = base.sign;

    auto& gates = out.prep.gates;
    gates.push_back(GateOp::h(r));

    // Base circuit on the row-0 branch.
    for (GateOp g : base.gates) {
        g.controlled(r, false);
        gates.push_back(std::move(g));
    }

    // Constant loader on the row-1 branch: align the start state with chi
    // on all qubits but a pivot, then rotate the pivot so the matrix
    // element along chi equals s.
    const std::size_t pivot = 0;
    for (std::size_t q = 0; q < base.n_qubits; ++q) {
        if (q == pivot) {
            continue;
        }
        const bool start_bit = (base.start_index >> q) & 1;
        const bool chi_bit = (chi.value() >> q) & 1;
        if (start_bit != chi_bit) {
            gates.push_back(GateOp::x(q).controlled(r));
        }
    }
    const bool start_bit = (base.start_index >> pivot) & 1;
    const bool chi_bit = (chi.value() >> pivot) & 1;
    double angle;
    if (start_bit == chi_bit) {
        angle = 2.0 * std::acos(std::clamp(s, -1.0, 1.0));
    } else if (!start_bit) {
        angle = 2.0 * std::asin(std::clamp(s, -1.0, 1.0));
    } else {
        angle = -2.0 * std::asin(std::clamp(s, -1.0, 1.0));
    }
    gates.push_back(GateOp::ry(pivot, angle).controlled(r));

    gates.push_back(GateOp::h(r));

    out.marker = chi;
    out.marker.set(r, true);
    return out;
}

ShiftedPreparation shifted_prepare(const Preparation& base, const BasisPattern& chi,
                                   const ConfidenceInterval& interval) {
    return shifted_prepare(base, chi, interval.lo());
}

GroverOperator::GroverOperator(Preparation prep, BasisPattern sigma, BasisPattern chi)
    : prep_(std::move(prep)), sigma_(sigma), chi_(chi) {
    require_full_pattern(sigma_, prep_.n_qubits, "sigma pattern");
    require_full_pattern(chi_, prep_.n_qubits, "chi pattern");
}

void GroverOperator::apply(StateVector& state) const {
    if (state.n_qubits() != prep_.n_qubits) {
        throw DimensionError("state does not match the Grover layout");
    }
    state.reflect_about(chi_.value());
    prep_.unapply(state);
    state.reflect_about(sigma_.value());
    prep_.apply(state);
    // Global phase completing Q so that <chi|Q^k|Psi> = sin((2k+1) theta).
    state.negate();
}

void GroverOperator::apply_power(StateVector& state, std::uint64_t k) const {
    for (std::uint64_t i = 0; i < k; ++i) {
        apply(state);
    }
}

StateVector GroverOperator::prepare_and_amplify(std::uint64_t k) const {
    StateVector state(prep_.n_qubits);
    state.reset_to_basis(prep_.start_index);
    prep_.apply(state);
    apply_power(state, k);
    return state;
}

std::uint64_t choose_k(double theta) {
    if (!(theta > 0.0) || theta > kPi / 2.0 + 1e-12) {
        throw RangeError("theta must lie in (0, pi/2]");
    }
    const double raw = (kPi / (2.0 * theta) - 1.0) / 2.0;
    if (raw >= 4.0e18) {
        return std::uint64_t{1} << 62;  // saturate instead of overflowing the conversion
    }
    auto k = static_cast<std::uint64_t>(std::max(0.0, std::floor(raw + 1e-9)));
    while ((2.0 * static_cast<double>(k + 1) + 1.0) * theta <= kPi / 2.0 + 1e-12) {
        ++k;
    }
    while (k > 0 && (2.0 * static_cast<double>(k) + 1.0) * theta > kPi / 2.0 + 1e-12) {
        --k;
    }
    return k;
}

double amplification_factor(double theta, std::uint64_t k) {
    const double s = std::sin(theta);
    const double m = 2.0 * static_cast<double>(k) + 1.0;
    if (std::abs(s) < 1e-300) {
        return m * m;  // small-angle limit
    }
    const double sk = std::sin(m * theta);
    return (sk * sk) / (s * s);
}

namespace {

// Monotone inversion of an amplified probability through
// theta = arcsin(sqrt(p)) / (2k+1), valid while (2k+1) theta <= pi/2.
double invert_amplified(double p, std::uint64_t k) {
    const double clamped = std::clamp(p, 0.0, 1.0);
    return std::asin(std::sqrt(clamped)) / (2.0 * static_cast<double>(k) + 1.0);
}

}  // namespace

EstimationTrace qcoin_estimate(const Preparation& prepare, const BasisPattern& chi,
                               const QCoinConfig& config) {
    require_full_pattern(chi, prepare.n_qubits, "chi pattern");
    std::mt19937_64 master(config.seed);

    EstimationTrace trace;
    trace.stage0 =
        unamplified_estimate(prepare, chi, config.shots_per_stage, master(), config.failure_prob);
    ConfidenceInterval current = trace.stage0;

    for (std::size_t stage = 0; stage < config.stages; ++stage) {
        const double s = current.lo();
        const ShiftedPreparation shifted = shifted_prepare(prepare, chi, s);

        // Interval on the shifted amplitude (a - s)/2; its lower edge is 0
        // by construction, so planning on the upper edge keeps
        // (2k+1) theta <= pi/2 for every amplitude the interval allows.
        const double abar_hi = std::max((current.hi() - s) / 2.0, 1e-12);
        const double theta_plan = std::asin(std::min(1.0, abar_hi));
        const std::uint64_t k = std::min(choose_k(theta_plan), config.max_k);

        GroverStage record;
        record.k = k;
        record.shift = s;
        record.shots = config.shots_per_stage;
        record.gamma_planned = amplification_factor(theta_plan, k);
        record.before = current;

        const GroverOperator grover(
            shifted.prep, full_pattern(shifted.prep.start_index, shifted.prep.n_qubits),
            shifted.marker);
        const StateVector state = grover.prepare_and_amplify(k);
        const auto histogram = state.sample(config.shots_per_stage, master());
        record.hits = pattern_hits(histogram, shifted.marker);
        record.p_hat =
            static_cast<double>(record.hits) / static_cast<double>(config.shots_per_stage);
        record.p_hat_halfwidth = chebyshev_halfwidth(config.shots_per_stage, config.failure_prob);

        const double theta_hat = invert_amplified(record.p_hat, k);
        const double theta_lo = invert_amplified(record.p_hat - record.p_hat_halfwidth, k);
        const double theta_hi = invert_amplified(record.p_hat + record.p_hat_halfwidth, k);
        record.theta = theta_hat;
        record.gamma_realized = amplification_factor(theta_hat, k);
        record.p_est = record.p_hat / record.gamma_realized;
        record.p_halfwidth = record.p_hat_halfwidth / record.gamma_realized;

        // Back through the stage ledger: a = abar / scale + s.
        const double estimate = std::sin(theta_hat) / shifted.scale + s;
        const double a_lo = std::sin(theta_lo) / shifted.scale + s;
        const double a_hi = std::sin(theta_hi) / shifted.scale + s;
        if (estimate > 1.0 + 1e-6 || estimate < -1.0 - 1e-6) {
            throw InconsistencyError("amplified estimate left [-1, 1]: broken scale ledger");
        }

        record.after.shots = config.shots_per_stage;
        record.after.failure_prob = config.failure_prob;
        record.after.mu_tilde = estimate;
        record.after.delta =
            std::max({a_hi - estimate, estimate - a_lo, 1e-15});

        trace.stages.push_back(record);
        current = record.after;
    }

    trace.final_estimate = current.mu_tilde;
    trace.final_half_width = current.delta;
    return trace;
}

std::string EstimationTrace::to_json_text() const {
    nlohmann::json j;
    j["stage0"] = {{"shots", stage0.shots},
                   {"mu_tilde", stage0.mu_tilde},
                   {"delta", stage0.delta},
                   {"failure_prob", stage0.failure_prob}};
    nlohmann::json stage_array = nlohmann::json::array();
    for (const GroverStage& s : stages) {
        stage_array.push_back({{"shots", s.shots},
                               {"counts", s.hits},
                               {"mu_tilde", s.after.mu_tilde},
                               {"delta", s.after.delta},
                               {"k", s.k},
                               {"shift", s.shift},
                               {"theta", s.theta},
                               {"p_hat", s.p_hat},
                               {"gamma_planned", s.gamma_planned},
                               {"gamma_realized", s.gamma_realized}});
    }
    j["stages"] = stage_array;
    j["final"] = {{"estimate", final_estimate}, {"half_width", final_half_width}};
    return j.dump();
}

std::string EstimationTrace::to_csv() const {
    std::ostringstream out;
    out << "stage,half_width\n";
    out << "0," << stage0.delta << "\n";
    for (std::size_t i = 0; i < stages.size(); ++i) {
        out << (i + 1) << "," << stages[i].after.delta << "\n";
    }
    return out.str();
}

}  // namespace qmat
