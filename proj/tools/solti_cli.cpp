#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "solti/analysis.hpp"
#include "solti/csv.hpp"
#include "solti/errors.hpp"
#include "solti/recurrences.hpp"
#include "solti/sysmodel.hpp"
#include "solti/trajectory.hpp"
#include "solti/transfer.hpp"

namespace {

using nlohmann::ordered_json;
using namespace solti;

constexpr int kExitOk = 0;
constexpr int kExitAssertFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitRankDeficient = 3;
constexpr int kExitInfeasible = 4;

ordered_json matrix_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json vector_json(const Vector& v) {
    ordered_json out = ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

ordered_json complex_json(std::complex<double> z) {
    return ordered_json::array({z.real(), z.imag()});
}

ordered_json structural_report_json(const StructuralReport& report) {
    ordered_json j;
    j["matrix"] = matrix_json(report.matrix);
    j["computed_rank"] = report.computed_rank;
    j["required_rank"] = report.required_rank;
    j["verdict"] = report.verdict;
    if (report.matrix.rows() == report.matrix.cols())
        j["determinant"] = determinant(report.matrix);
    return j;
}

Vector parse_vector_flag(const std::string& text, const std::string& flag) {
    std::vector<double> values;
    std::stringstream fields(text);
    std::string field;
    while (std::getline(fields, field, ',')) {
        try {
            values.push_back(std::stod(field));
        } catch (const std::exception&) {
            throw ParseError(flag + ": cannot parse \"" + field + "\" as a number");
        }
    }
    if (values.empty()) throw ParseError(flag + ": empty vector");
    return Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

// Text rendering walks the same tree as the JSON output, so the two
// formats carry identical content.
void render_text(const ordered_json& node, const std::string& path, std::ostream& out) {
    if (node.is_object()) {
        for (const auto& [key, value] : node.items())
            render_text(value, path.empty() ? key : path + "." + key, out);
    } else if (node.is_array() && !node.empty() && (node.front().is_object())) {
        for (size_t i = 0; i < node.size(); ++i)
            render_text(node[i], path + "[" + std::to_string(i) + "]", out);
    } else {
        out << path << " = " << node.dump() << "\n";
    }
}

void emit_report(const ordered_json& report, const std::string& format) {
    if (format == "json")
        std::cout << report.dump(2) << "\n";
    else
        render_text(report, "", std::cout);
}

ordered_json report_skeleton(const std::string& command, const ordered_json& inputs,
                             double rank_tol) {
    ordered_json report;
    report["command"] = command;
    report["inputs"] = inputs;
    report["tolerances"] = {{"rank_tol", rank_tol}};
    report["results"] = ordered_json::object();
    return report;
}

int run_analyze(const std::string& system_path, double rank_tol, const std::string& format,
                bool assert_flag) {
    SecondOrderSystem sys = load_system_from_file(system_path);
    require_valid(sys);

    ordered_json report = report_skeleton(
        "analyze", {{"system", system_path}, {"assert", assert_flag}}, rank_tol);
    auto& results = report["results"];
    results["kind"] = to_string(sys.kind);
    results["n"] = sys.n;
    results["r"] = sys.r;
    results["p"] = sys.p;

    StructuralReport obs = is_observable(sys, rank_tol);
    results["observability"] = structural_report_json(obs);

    bool controllable_ok = true;
    if (sys.r >= 1) {
        StructuralReport ctrl = is_controllable(sys, rank_tol);
        results["controllability"] = structural_report_json(ctrl);
        controllable_ok = ctrl.verdict;
    } else {
        results["controllability"] = nullptr;
        results["controllability_note"] = "system has no input channel (r = 0)";
    }

    SpecialCaseReport special = analyze_special_cases(sys, rank_tol);
    ordered_json special_json;
    special_json["form"] = to_string(special.form);
    if (special.observability)
        special_json["observability"] = structural_report_json(*special.observability);
    if (special.controllability)
        special_json["controllability"] = structural_report_json(*special.controllability);
    results["special_case"] = special_json;

    // S/P blocks up to the highest index appearing in the observability matrix.
    const int sp_max = std::max(0, 2 * sys.n - 3);
    SPTable table = sp_sequence(sys.a0, sys.a1, sp_max);
    ordered_json sp_json;
    sp_json["s"] = ordered_json::array();
    sp_json["p"] = ordered_json::array();
    for (const auto& m : table.s) sp_json["s"].push_back(matrix_json(m));
    for (const auto& m : table.p) sp_json["p"].push_back(matrix_json(m));
    results["sp_table"] = sp_json;

    emit_report(report, format);
    if (assert_flag && (!obs.verdict || !controllable_ok)) return kExitAssertFailed;
    return kExitOk;
}

int run_tf(const std::string& system_path, double rank_tol, const std::string& format) {
    SecondOrderSystem sys = load_system_from_file(system_path);
    require_valid(sys);
    if (sys.r < 1) throw NoInputError("transfer function requires an input channel (r >= 1)");

    const bool lemma_path = sys.a1.isZero(0.0);
    RationalTransferMatrix h =
        lemma_path ? transfer_function(sys) : transfer_function_general(sys);

    ordered_json report = report_skeleton("tf", {{"system", system_path}}, rank_tol);
    auto& results = report["results"];
    results["path"] = lemma_path ? "second_order_resolvent" : "companion_lift";

    ordered_json nums = ordered_json::array();
    ordered_json rendered = ordered_json::array();
    for (const auto& row : h.numerators) {
        ordered_json num_row = ordered_json::array();
        ordered_json str_row = ordered_json::array();
        for (const auto& num : row) {
            num_row.push_back(num.coeffs());
            str_row.push_back("(" + num.to_string() + ")/(" + h.denominator.to_string() + ")");
        }
        nums.push_back(std::move(num_row));
        rendered.push_back(std::move(str_row));
    }
    results["numerators"] = nums;
    results["denominator"] = h.denominator.coeffs();
    results["rendered"] = rendered;

    if (h.is_siso()) {
        PoleZeroSet pz = poles_zeros(h);
        CancellationReport cancel = cancellation_check(h);
        ordered_json poles = ordered_json::array();
        for (auto z : pz.poles) poles.push_back(complex_json(z));
        ordered_json zeros = ordered_json::array();
        for (auto z : pz.zeros) zeros.push_back(complex_json(z));
        ordered_json pairs = ordered_json::array();
        for (const auto& [pole, zero] : cancel.cancelled_pairs)
            pairs.push_back({{"pole", complex_json(pole)}, {"zero", complex_json(zero)}});
        results["poles"] = poles;
        results["zeros"] = zeros;
        results["cancellations"] = pairs;
    }

    emit_report(report, format);
    return kExitOk;
}

int run_simulate(const std::string& system_path, double rank_tol, const std::string& format,
                 const std::string& x0_text, const std::string& x1_text, int steps,
                 const std::string& inputs_path, const std::string& out_path,
                 const std::string& outputs_out_path) {
    SecondOrderSystem sys = load_system_from_file(system_path);
    StateSnapshot snap{parse_vector_flag(x0_text, "--x0"), parse_vector_flag(x1_text, "--x1")};
    std::vector<Vector> inputs;
    if (!inputs_path.empty()) inputs = read_csv_file(inputs_path);

    Trajectory traj = simulate_discrete(sys, snap, inputs, steps);
    write_csv_file(out_path, traj.states, "states x_0..x_T, one step per row");
    if (!outputs_out_path.empty())
        write_csv_file(outputs_out_path, traj.outputs, "outputs y_0..y_T, one step per row");

    ordered_json report = report_skeleton(
        "simulate",
        {{"system", system_path}, {"steps", steps}, {"inputs", inputs_path}, {"out", out_path}},
        rank_tol);
    report["results"]["final_state"] = vector_json(traj.states.back());
    report["results"]["samples_written"] = traj.states.size();
    emit_report(report, format);
    return kExitOk;
}

int run_reconstruct(const std::string& system_path, double rank_tol, const std::string& format,
                    const std::string& outputs_path, const std::string& inputs_path) {
    SecondOrderSystem sys = load_system_from_file(system_path);
    std::vector<Vector> outputs = read_csv_file(outputs_path);
    std::vector<Vector> inputs;
    if (!inputs_path.empty()) inputs = read_csv_file(inputs_path);

    Reconstruction rec = reconstruct_initial_state(sys, outputs, inputs, rank_tol);

    ordered_json report = report_skeleton(
        "reconstruct", {{"system", system_path}, {"outputs", outputs_path}, {"inputs", inputs_path}},
        rank_tol);
    report["results"]["x0"] = vector_json(rec.snapshot.x0);
    report["results"]["x1"] = vector_json(rec.snapshot.x1);
    report["results"]["residual_norm"] = rec.residual_norm;
    emit_report(report, format);
    return kExitOk;
}

int run_steer(const std::string& system_path, double rank_tol, const std::string& format,
              const std::string& x0_text, const std::string& x1_text,
              const std::string& target_text) {
    SecondOrderSystem sys = load_system_from_file(system_path);
    StateSnapshot snap{parse_vector_flag(x0_text, "--x0"), parse_vector_flag(x1_text, "--x1")};
    Vector target = parse_vector_flag(target_text, "--target");

    std::vector<Vector> inputs = synthesize_control(sys, snap, target, rank_tol);
    Trajectory traj = simulate_discrete(sys, snap, inputs, sys.n + 1);

    ordered_json report = report_skeleton(
        "steer", {{"system", system_path}, {"target", target_text}}, rank_tol);
    ordered_json inputs_json = ordered_json::array();
    for (const auto& u : inputs) inputs_json.push_back(vector_json(u));
    report["results"]["inputs"] = inputs_json;
    report["results"]["predicted_final_state"] = vector_json(traj.states.back());
    report["results"]["target_error"] = (traj.states.back() - target).norm();
    emit_report(report, format);
    return kExitOk;
}

int run_dual(const std::string& system_path, const std::string& out_path) {
    SecondOrderSystem sys = load_system_from_file(system_path);
    require_valid(sys);
    const std::string rendered = render_system(dual_system(sys));
    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot open output file: " + out_path);
        out << rendered;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Second-order LTI system analysis: rank criteria, reconstruction, "
                 "steering, and transfer functions"};
    app.require_subcommand(1);

    double rank_tol = kDefaultRankTol;
    std::string format = "text";
    app.add_option("--rank-tol", rank_tol, "Relative singular-value threshold for rank tests")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string system_path;
    bool assert_flag = false;
    auto* analyze = app.add_subcommand("analyze", "Observability/controllability rank tests");
    analyze->add_option("system", system_path, "System JSON file")->required();
    analyze->add_flag("--assert", assert_flag, "Exit 1 when a verdict is false");

    auto* tf = app.add_subcommand("tf", "Transfer function H(s) with poles/zeros");
    tf->add_option("system", system_path, "System JSON file")->required();

    std::string x0_text, x1_text, target_text, inputs_path, outputs_path;
    std::string out_path = "trajectory.csv", outputs_out_path;
    int steps = 1;
    auto* simulate = app.add_subcommand("simulate", "Run the discrete recursion");
    simulate->add_option("system", system_path, "System JSON file")->required();
    simulate->add_option("--x0", x0_text, "Initial state, comma-separated")->required();
    simulate->add_option("--x1", x1_text, "Second initial state, comma-separated")->required();
    simulate->add_option("--steps", steps, "Number of steps T (states x_0..x_T)")->required();
    simulate->add_option("--inputs", inputs_path, "Input CSV, one u_t per row");
    simulate->add_option("--out", out_path, "Destination CSV for states");
    simulate->add_option("--outputs-out", outputs_out_path, "Optional destination CSV for outputs");

    auto* reconstruct = app.add_subcommand("reconstruct", "Recover (x0, x1) from 2n outputs");
    reconstruct->add_option("system", system_path, "System JSON file")->required();
    reconstruct->add_option("--outputs", outputs_path, "Output CSV, 2n rows")->required();
    reconstruct->add_option("--inputs", inputs_path, "Input CSV, at least 2n-2 rows");

    auto* steer = app.add_subcommand("steer", "Inputs reaching x_{n+1} = target");
    steer->add_option("system", system_path, "System JSON file")->required();
    steer->add_option("--x0", x0_text, "Initial state, comma-separated")->required();
    steer->add_option("--x1", x1_text, "Second initial state, comma-separated")->required();
    steer->add_option("--target", target_text, "Target state, comma-separated")->required();

    std::string dual_out;
    auto* dual = app.add_subcommand("dual", "Write the dual system JSON");
    dual->add_option("system", system_path, "System JSON file")->required();
    dual->add_option("--out", dual_out, "Destination path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }

    try {
        if (analyze->parsed()) return run_analyze(system_path, rank_tol, format, assert_flag);
        if (tf->parsed()) return run_tf(system_path, rank_tol, format);
        if (simulate->parsed())
            return run_simulate(system_path, rank_tol, format, x0_text, x1_text, steps,
                                inputs_path, out_path, outputs_out_path);
        if (reconstruct->parsed())
            return run_reconstruct(system_path, rank_tol, format, outputs_path, inputs_path);
        if (steer->parsed())
            return run_steer(system_path, rank_tol, format, x0_text, x1_text, target_text);
        if (dual->parsed()) return run_dual(system_path, dual_out);
    } catch (const RankDeficiencyError& e) {
        std::cerr << "error: " << e.what() << " (computed rank " << e.computed_rank
                  << ", required " << e.required_rank << ")\n";
        return kExitRankDeficient;
    } catch (const InconsistentDataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const UncontrollableTargetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
