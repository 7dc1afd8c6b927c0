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

#include "cli.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "qmat/arith.hpp"
#include "qmat/classical_matrix.hpp"
#include "qmat/errors.hpp"
#include "qmat/oracle.hpp"
#include "qmat/qcoin.hpp"
#include "qmat/qmatrix.hpp"
#include "qmat/state_vector.hpp"

namespace qmat::cli {

namespace {

using nlohmann::json;

/// Configuration problems map to exit code 2.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::size_t log2_exact(std::size_t n, const char* what) {
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) {
        ++bits;
    }
    if ((std::size_t{1} << bits) != n) {
        throw ConfigError(std::string(what) + " must be a power of two, got " +
                          std::to_string(n));
    }
    return bits;
}

ClassicalMatrix load_input(const RunConfig& config) {
    if (config.input_path.empty()) {
        throw ConfigError("this subcommand needs --input");
    }
    const std::string& p = config.input_path;
    if (p.size() >= 5 && p.substr(p.size() - 5) == ".json") {
        return ClassicalMatrix::from_json_file(p);
    }
    return ClassicalMatrix::from_csv_file(p);
}

json matrix_json(const ClassicalMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows.push_back(m.row(i));
    }
    return rows;
}

json ledger_json(const NormLedger& ledger) {
    json entries = json::array();
    for (const auto& [label, factor] : ledger.entries()) {
        entries.push_back({{"label", label}, {"factor", factor}});
    }
    return {{"factor", ledger.factor()}, {"entries", entries}};
}

json counts_json(const GateCounts& c) {
    return {{"x", c.x},
            {"h", c.h},
            {"ry", c.ry},
            {"cnot", c.cnot},
            {"multi_controlled", c.multi_controlled},
            {"toffoli_estimate", c.toffoli_estimate}};
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void emit_matrix_csv(std::ostream& out, const ClassicalMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out << (j == 0 ? "" : ",") << m.at(i, j);
        }
        out << "\n";
    }
}

void emit_matrix_table(std::ostream& out, const ClassicalMatrix& m, const std::string& title) {
    out << title << " (" << m.rows() << "x" << m.cols() << ")\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out << std::setw(12) << std::setprecision(6) << m.at(i, j);
        }
        out << "\n";
    }
}

struct LoadedState {
    RegisterLayout layout;
    StateVector state;
    ClassicalMatrix input;
};

LoadedState load_state(const RunConfig& config, bool with_mul) {
    const ClassicalMatrix input = load_input(config);
    const std::size_t n_i = log2_exact(input.rows(), "row count");
    const std::size_t n_j = log2_exact(input.cols(), "column count");
    RegisterLayout layout = RegisterLayout::standard(n_i, n_j, with_mul);
    StateVector state = init_uniform(layout);
    load_pointwise(state, layout, input);
    return LoadedState{layout, std::move(state), input};
}

RowSelector selector_from(const RunConfig& config) {
    if (config.row.has_value() && config.col.has_value()) {
        throw ConfigError("pass either --row or --col, not both");
    }
    if (config.row.has_value()) {
        return RowSelector::row(*config.row);
    }
    if (config.col.has_value()) {
        return RowSelector::col(*config.col);
    }
    return RowSelector::all();
}

int run_load(const RunConfig& config, std::ostream& out) {
    LoadedState loaded = load_state(config, false);
    loaded.state.check_norm(1e-10);
    const ClassicalMatrix round_trip = read_matrix(loaded.state, loaded.layout);
    const double err = round_trip.max_abs_diff(loaded.input.normalized());

    if (config.format == "csv") {
        emit_matrix_csv(out, round_trip);
        return 0;
    }
    if (config.format == "table") {
        emit_matrix_table(out, loaded.input, "input");
        emit_matrix_table(out, round_trip, "embedded (inf-norm units)");
        out << "inf_norm = " << loaded.input.inf_norm() << ", round_trip_error = " << err << "\n";
        return 0;
    }
    emit_json(out, json{{"subcommand", "load"},
                        {"input", matrix_json(loaded.input)},
                        {"inf_norm", loaded.input.inf_norm()},
                        {"normalized", matrix_json(round_trip)},
                        {"round_trip_error", err}});
    return 0;
}

int run_matrix_demo(const RunConfig& config, std::ostream& out) {
    const bool needs_mul = config.op == "scale";
    LoadedState loaded = load_state(config, needs_mul);
    const ClassicalMatrix before = read_matrix(loaded.state, loaded.layout);
    NormLedger ledger;
    json params;

    if (config.op == "reverse") {
        reverse(loaded.state, loaded.layout, selector_from(config));
    } else if (config.op == "pivot-swap") {
        if (!config.col.has_value()) {
            throw ConfigError("pivot-swap needs --col <position>");
        }
        params["pos"] = *config.col;
        swap_with_pivot(loaded.state, loaded.layout, *config.col);
    } else if (config.op == "swap") {
        if (!config.col.has_value() || !config.col2.has_value()) {
            throw ConfigError("swap needs --col and --col2");
        }
        params["i"] = *config.col;
        params["j"] = *config.col2;
        swap_elements(loaded.state, loaded.layout, *config.col, *config.col2);
    } else if (config.op == "cyclic") {
        const ShiftDirection dir =
            config.direction == "right" ? ShiftDirection::Right : ShiftDirection::Left;
        if (config.direction != "left" && config.direction != "right") {
            throw ConfigError("--direction must be left or right");
        }
        params["direction"] = config.direction;
        cyclic_shift(loaded.state, loaded.layout, dir, selector_from(config));
    } else if (config.op == "sum-pairs") {
        pairwise_sum_diff(loaded.state, loaded.layout, &ledger);
    } else if (config.op == "reduce") {
        reduce_rows(loaded.state, loaded.layout, &ledger);
    } else if (config.op == "scale") {
        if (!config.alpha.has_value()) {
            throw ConfigError("scale needs --alpha");
        }
        params["alpha"] = *config.alpha;
        scale_by_constant(loaded.state, loaded.layout, selector_from(config), *config.alpha);
    } else {
        throw ConfigError("unknown demo op: " + config.op);
    }

    loaded.state.check_norm(1e-10);
    const ClassicalMatrix after = read_matrix(loaded.state, loaded.layout);

    if (config.format == "csv") {
        emit_matrix_csv(out, after);
        return 0;
    }
    if (config.format == "table") {
        emit_matrix_table(out, before, "before");
        emit_matrix_table(out, after, "after");
        out << "ledger factor = " << ledger.factor() << "\n";
        return 0;
    }
    if (config.row.has_value()) {
        params["row"] = *config.row;
    }
    emit_json(out, json{{"subcommand", "demo"},
                        {"op", config.op},
                        {"params", params},
                        {"inf_norm", loaded.input.inf_norm()},
                        {"before", matrix_json(before)},
                        {"after", matrix_json(after)},
                        {"ledger", ledger_json(ledger)}});
    return 0;
}

int run_product_demo(const RunConfig& config, std::ostream& out) {
    const ClassicalMatrix input = load_input(config);
    const std::size_t expected_rows = config.op == "square" ? 1 : 2;
    if (input.rows() != expected_rows) {
        throw ConfigError(config.op + " expects an input with " + std::to_string(expected_rows) +
                          " row(s): f" + (expected_rows == 2 ? " and g" : ""));
    }
    const std::size_t n_j = log2_exact(input.cols(), "column count");
    const RegisterLayout layout = RegisterLayout::standard(0, n_j, true);
    const Oracle f = Oracle::from_unnormalized("f", input.row(0));
    const Oracle g = config.op == "square" ? f : Oracle::from_unnormalized("g", input.row(1));

    NormLedger ledger;
    StateVector state = config.op == "scalar-product" ? scalar_product(f, g, layout, &ledger)
                                                      : multiply_arrays(f, g, layout, &ledger);
    state.check_norm(1e-10);
    const ClassicalMatrix result = read_matrix(state, layout);

    if (config.format == "csv") {
        emit_matrix_csv(out, result);
        return 0;
    }
    if (config.format == "table") {
        emit_matrix_table(out, result, config.op + " sector");
        return 0;
    }
    json j{{"subcommand", "demo"},
           {"op", config.op},
           {"f", f.values()},
           {"g", g.values()},
           {"ledger", ledger_json(ledger)}};
    if (config.op == "scalar-product") {
        j["scalar"] = result.at(0, 0);
        j["columns"] = matrix_json(result);
    } else {
        j["product"] = matrix_json(result);
    }
    emit_json(out, j);
    return 0;
}

int run_demo(const RunConfig& config, std::ostream& out) {
    if (config.op == "multiply" || config.op == "square" || config.op == "scalar-product") {
        return run_product_demo(config, out);
    }
    return run_matrix_demo(config, out);
}

void check_shift_ledger(const ShiftResult& result, const Oracle& f) {
    // A constant shift keeps a sum sector; the stepped variants do not.
    const bool stepped = result.sum_sector.mask() == 0;
    const std::vector<double> offsets = staircase_offsets(result.shift, result.levels);
    const std::vector<double> sector = result.sector_values();
    const std::size_t block = f.length() >> result.levels;
    double stage_factor = 1.0;
    for (const auto& [label, factor] : result.ledger.entries()) {
        if (label == "shift_stages") {
            stage_factor = factor;
        }
    }
    for (std::size_t j = 0; j < sector.size(); ++j) {
        const double offset = stepped ? offsets[j / block] : -result.shift;
        const double target = f.values()[j] + offset;
        if (std::abs(sector[j] - stage_factor * target) > 1e-9) {
            throw InconsistencyError("shift ledger does not reproduce the sector values");
        }
    }
}

int run_shift(const RunConfig& config, std::ostream& out, bool linear) {
    const ClassicalMatrix input = load_input(config);
    if (input.rows() != 1) {
        throw ConfigError("shift demos expect a single-row input array");
    }
    log2_exact(input.cols(), "column count");
    const Oracle f = Oracle::from_unnormalized("f", input.row(0));
    const ShiftResult result = linear
                                   ? linear_shift(f, ShiftSpec{config.shift, config.levels})
                                   : constant_shift(f, config.shift);
    result.state.check_norm(1e-10);
    check_shift_ledger(result, f);

    if (config.format == "csv") {
        const auto sector = result.sector_values();
        out << "j,value\n";
        for (std::size_t j = 0; j < sector.size(); ++j) {
            out << j << "," << sector[j] << "\n";
        }
        return 0;
    }
    if (config.format == "table") {
        out << (linear ? "linear shift" : "constant shift") << " s = " << config.shift << "\n";
        const auto sector = result.sector_values();
        for (std::size_t j = 0; j < sector.size(); ++j) {
            out << std::setw(4) << j << std::setw(14) << std::setprecision(6) << sector[j]
                << "\n";
        }
        return 0;
    }
    json j = json::parse(result.to_json_text());
    j["subcommand"] = linear ? "linshift" : "shift";
    j["oracle"] = json::parse(f.to_json_text());
    emit_json(out, j);
    return 0;
}

int run_estimate(const RunConfig& config, std::ostream& out) {
    if (std::abs(config.amplitude) > 1.0) {
        throw ConfigError("--amplitude must lie in [-1, 1]");
    }
    const Preparation prep = Preparation::amplitude_state(config.amplitude);
    const BasisPattern chi = BasisPattern{}.set(0, true);
    QCoinConfig qc;
    qc.shots_per_stage = config.shots;
    qc.stages = config.stages;
    qc.failure_prob = config.failure_prob;

    json runs = json::array();
    std::ostringstream csv;
    csv << "seed,stage,half_width\n";
    for (std::size_t r = 0; r < config.repeats; ++r) {
        qc.seed = config.seed + r;
        const EstimationTrace trace = qcoin_estimate(prep, chi, qc);
        runs.push_back({{"seed", qc.seed}, {"trace", json::parse(trace.to_json_text())}});
        csv << qc.seed << ",0," << trace.stage0.delta << "\n";
        for (std::size_t i = 0; i < trace.stages.size(); ++i) {
            csv << qc.seed << "," << (i + 1) << "," << trace.stages[i].after.delta << "\n";
        }
    }

    if (config.format == "csv") {
        out << csv.str();
        return 0;
    }
    if (config.format == "table") {
        for (const auto& r : runs) {
            out << "seed " << r["seed"] << ": estimate " << r["trace"]["final"]["estimate"]
                << " +- " << r["trace"]["final"]["half_width"] << "\n";
        }
        return 0;
    }
    emit_json(out, json{{"subcommand", "estimate"},
                        {"amplitude", config.amplitude},
                        {"shots", config.shots},
                        {"stages", config.stages},
                        {"failure_prob", config.failure_prob},
                        {"runs", runs}});
    return 0;
}

int run_resources(const RunConfig& config, std::ostream& out) {
    const std::size_t n_i = config.n_row_qubits.value_or(1);
    const std::size_t n_j = config.n_col_qubits.value_or(1);
    const bool needs_mul = config.op == "scale";
    const RegisterLayout layout = RegisterLayout::standard(n_i, n_j, needs_mul);
    StateVector state = init_uniform(layout);
    state.reset_stats();

    if (config.op == "load-constant") {
        load_constant_row(state, layout, config.row.value_or(0), 0.5);
    } else if (config.op == "load-pointwise") {
        load_pointwise(state, layout, ClassicalMatrix(layout.rows(), layout.cols(), 0.5));
    } else if (config.op == "reverse") {
        reverse(state, layout, selector_from(config));
    } else if (config.op == "pivot-swap") {
        swap_with_pivot(state, layout, config.col.value_or(0));
    } else if (config.op == "cyclic") {
        cyclic_shift(state, layout,
                     config.direction == "right" ? ShiftDirection::Right : ShiftDirection::Left,
                     selector_from(config));
    } else if (config.op == "reduce") {
        reduce_rows(state, layout);
    } else if (config.op == "sum-pairs") {
        pairwise_sum_diff(state, layout);
    } else if (config.op == "scale") {
        scale_by_constant(state, layout, selector_from(config), config.alpha.value_or(0.5));
    } else {
        throw ConfigError("unknown resources op: " + config.op);
    }

    state.check_norm(1e-10);
    const GateCounts& total = state.stats().total();

    if (config.format == "csv") {
        out << "counter,value\n";
        out << "x," << total.x << "\n";
        out << "h," << total.h << "\n";
        out << "ry," << total.ry << "\n";
        out << "cnot," << total.cnot << "\n";
        out << "multi_controlled," << total.multi_controlled << "\n";
        out << "toffoli_estimate," << total.toffoli_estimate << "\n";
        return 0;
    }
    if (config.format == "table") {
        out << config.op << " on nI=" << n_i << ", nJ=" << n_j << "\n";
        out << "  x                " << total.x << "\n";
        out << "  h                " << total.h << "\n";
        out << "  ry               " << total.ry << "\n";
        out << "  cnot             " << total.cnot << "\n";
        out << "  multi_controlled " << total.multi_controlled << "\n";
        out << "  toffoli_estimate " << total.toffoli_estimate << "\n";
        return 0;
    }
    json per_op;
    for (const auto& [label, counts] : state.stats().per_op()) {
        per_op[label] = counts_json(counts);
    }
    emit_json(out, json{{"subcommand", "resources"},
                        {"op", config.op},
                        {"nI", n_i},
                        {"nJ", n_j},
                        {"counts", counts_json(total)},
                        {"per_op", per_op}});
    return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.format != "json" && config.format != "csv" && config.format != "table") {
            throw ConfigError("--format must be json, csv or table");
        }
        if (config.subcommand == "load") {
            return run_load(config, out);
        }
        if (config.subcommand == "demo") {
            return run_demo(config, out);
        }
        if (config.subcommand == "shift") {
            return run_shift(config, out, false);
        }
        if (config.subcommand == "linshift") {
            return run_shift(config, out, true);
        }
        if (config.subcommand == "estimate") {
            return run_estimate(config, out);
        }
        if (config.subcommand == "resources") {
            return run_resources(config, out);
        }
        throw ConfigError("unknown subcommand: " + config.subcommand);
    } catch (const InconsistencyError& e) {
        err << "inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;
    CLI::App app{"quantum matrix toolkit: loaders, array arithmetic, oracle shifts and "
                 "amplitude read-out on a dense state-vector simulator"};
    app.require_subcommand(1);

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", config.format, "json, csv or table");
    };

    CLI::App* load = app.add_subcommand("load", "embed a matrix and read it back");
    load->add_option("--input", config.input_path, "CSV or JSON matrix")->required();
    add_format(load);

    CLI::App* demo = app.add_subcommand("demo", "run one arithmetic operation");
    demo->add_option("op", config.op,
                     "reverse | pivot-swap | swap | cyclic | sum-pairs | reduce | scale | "
                     "multiply | square | scalar-product")
        ->required();
    demo->add_option("--input", config.input_path, "CSV or JSON matrix")->required();
    demo->add_option("--row", config.row, "row selector");
    demo->add_option("--col", config.col, "column selector / position");
    demo->add_option("--col2", config.col2, "second position for swap");
    demo->add_option("--alpha", config.alpha, "scale factor in [0, 1]");
    demo->add_option("--direction", config.direction, "cyclic direction: left | right");
    add_format(demo);

    CLI::App* shift = app.add_subcommand("shift", "constant shift of an array oracle");
    shift->add_option("--input", config.input_path, "single-row CSV or JSON array")->required();
    shift->add_option("--shift", config.shift, "shift constant in [-1, 1]")->required();
    add_format(shift);

    CLI::App* linshift = app.add_subcommand("linshift", "step-wise linear shift of an oracle");
    linshift->add_option("--input", config.input_path, "single-row CSV or JSON array")
        ->required();
    linshift->add_option("--shift", config.shift, "shift constant in [-1, 1]")->required();
    linshift->add_option("--levels", config.levels, "staircase refinement levels (>= 1)");
    add_format(linshift);

    CLI::App* estimate = app.add_subcommand("estimate", "QCoin amplitude estimation");
    estimate->add_option("--amplitude", config.amplitude, "true amplitude of the demo state");
    estimate->add_option("--shots", config.shots, "shots per stage");
    estimate->add_option("--stages", config.stages, "amplified stages");
    estimate->add_option("--failure-prob", config.failure_prob, "Chebyshev failure probability");
    estimate->add_option("--seed", config.seed, "base RNG seed");
    estimate->add_option("--repeats", config.repeats, "independent runs, seeds seed+0..N-1");
    add_format(estimate);

    CLI::App* resources = app.add_subcommand("resources", "gate-count report for one operation");
    resources->add_option("op", config.op,
                          "load-constant | load-pointwise | reverse | pivot-swap | cyclic | "
                          "reduce | sum-pairs | scale")
        ->required();
    resources->add_option("--nI", config.n_row_qubits, "row qubits");
    resources->add_option("--nJ", config.n_col_qubits, "column qubits");
    resources->add_option("--row", config.row, "row address");
    resources->add_option("--col", config.col, "column address / position");
    resources->add_option("--alpha", config.alpha, "scale factor");
    resources->add_option("--direction", config.direction, "cyclic direction");
    add_format(resources);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    for (CLI::App* cmd : {load, demo, shift, linshift, estimate, resources}) {
        if (cmd->parsed()) {
            config.subcommand = cmd->get_name();
        }
    }
    return run(config, out, err);
}

}  // namespace qmat::cli
