// Copyright 2026 The bargmann-phase Authors
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

#include "bargmann/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <mutex>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bargmann/geomphase.hpp"
#include "bargmann/io.hpp"
#include "bargmann/parallel.hpp"
#include "bargmann/validation.hpp"

namespace bargmann::cli {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Collects distinct warnings for the duration of one command.
class WarningCapture {
 public:
    WarningCapture() {
        previous_ = set_warning_handler([this](std::string_view msg) {
            std::lock_guard lock(mutex_);
            messages_.emplace(msg);
        });
    }
    ~WarningCapture() { set_warning_handler(std::move(previous_)); }

    std::vector<std::string> messages() const {
        std::lock_guard lock(mutex_);
        return {messages_.begin(), messages_.end()};
    }

    void flush(std::ostream& err) const {
        for (const auto& m : messages()) {
            err << "warning: " << m << "\n";
        }
    }

 private:
    WarningHandler previous_;
    mutable std::mutex mutex_;
    std::set<std::string> messages_;
};

TwoModePoint to_point(const std::array<double, 4>& c) {
    return {PhaseSpacePoint{c[0], c[1]}, PhaseSpacePoint{c[2], c[3]}};
}

std::array<double, 4> parse_center(const std::string& text) {
    std::array<double, 4> out{};
    std::stringstream ss(text);
    std::string item;
    std::size_t n = 0;
    while (std::getline(ss, item, ',')) {
        if (n == 4) {
            throw UsageError("--centers expects four comma-separated numbers, got \"" + text + "\"");
        }
        std::size_t used = 0;
        try {
            out[n] = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) {
            throw UsageError("--centers: not a number: \"" + item + "\"");
        }
        ++n;
    }
    if (n != 4) {
        throw UsageError("--centers expects four comma-separated numbers, got \"" + text + "\"");
    }
    return out;
}

Occupation parse_state(const std::string& text) {
    if (text.size() != 3 || text[1] != ',' || (text[0] != '0' && text[0] != '1') || (text[2] != '0' && text[2] != '1')) {
        throw UsageError("--state expects n1,n2 with each occupation 0 or 1, got \"" + text + "\"");
    }
    return {text[0] - '0', text[2] - '0'};
}

// Writes to --out when given, otherwise to `out`.
int emit(const RunConfig& config, const std::string& text, std::ostream& out, std::ostream& err) {
    if (!config.out_path) {
        out << text;
        return kExitPass;
    }
    std::ofstream file(*config.out_path, std::ios::binary);
    if (!file) {
        err << "error: cannot write output file " << *config.out_path << "\n";
        return kExitUsage;
    }
    file << text;
    if (!file) {
        err << "error: failed writing output file " << *config.out_path << "\n";
        return kExitUsage;
    }
    return kExitPass;
}

std::string phase_csv(const ReconciliationReport& report) {
    std::string s = "record,method,reference,invariant_re,invariant_im,value,gated\n";
    auto gated = [&](Method m) {
        return std::find(report.gated.begin(), report.gated.end(), m) != report.gated.end();
    };
    for (const auto& r : report.results) {
        s += "result," + std::string(method_name(r.method)) + ",," + format_number(r.invariant.real()) + "," +
             format_number(r.invariant.imag()) + "," + format_number(r.phase) + "," +
             (gated(r.method) ? "true" : "false") + "\n";
    }
    for (const auto& d : report.deltas) {
        s += "delta," + std::string(method_name(d.a)) + "," + std::string(method_name(d.b)) + ",,," +
             format_number(d.phase_delta) + "," + (d.gated ? "true" : "false") + "\n";
    }
    s += "summary," + report.flag + ",,,," + format_number(report.abs_delta_max) + ",\n";
    return s;
}

std::vector<double> sweep_angles(const std::vector<double>& given, int grid) {
    if (!given.empty()) {
        return given;
    }
    std::vector<double> out;
    for (int k = 0; k < grid; ++k) {
        out.push_back(k * std::numbers::pi / grid);
    }
    return out;
}

}  // namespace

void validate_config(const RunConfig& config) {
    if (config.n_max < 5) {
        throw UsageError("--n-max must be at least 5");
    }
    if (!(config.tolerance > 0.0)) {
        throw UsageError("--tol must be positive");
    }
    if (config.centers.size() > 3 || config.centers.size() == 2) {
        throw UsageError("--centers takes one shift or three triangle vertices");
    }
}

int cmd_phase(const RunConfig& config, std::ostream& out, std::ostream& err) {
    validate_config(config);
    if (config.theta1.size() > 1 || config.theta2.size() > 1) {
        throw UsageError("phase takes at most one --theta1 and one --theta2 value");
    }
    const double theta1 = config.theta1.empty() ? 0.0 : config.theta1.front();
    const double theta2 = config.theta2.empty() ? 0.0 : config.theta2.front();

    ReconciliationOptions options;
    options.n_max = config.n_max;
    options.tolerance = config.tolerance;

    Occupation occupation = config.occupation;
    TwoModePoint shift{};
    if (config.centers.size() == 1) {
        shift = to_point(config.centers.front());
    }
    if (config.pfunc_path) {
        std::ifstream file(*config.pfunc_path);
        if (!file) {
            throw UsageError("cannot read --pfunc file " + *config.pfunc_path);
        }
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(file);
        } catch (const nlohmann::json::exception& e) {
            throw UsageError(std::string("--pfunc: invalid JSON: ") + e.what());
        }
        options.p_override = pfunc_from_json(doc);
        const auto source = pfunc_source_from_json(doc);
        if (!source) {
            throw UsageError("--pfunc document lacks the \"state\" block needed by the Fock oracle");
        }
        if (config.centers.size() == 3) {
            throw UsageError("--pfunc cannot be combined with an explicit triangle");
        }
        occupation = source->occupation;
        shift = source->shift;
    }

    const std::array<StateSpec, 3> states =
        config.centers.size() == 3
            ? explicit_triangle(occupation, {to_point(config.centers[0]), to_point(config.centers[1]),
                                             to_point(config.centers[2])})
            : polarizer_sequence(occupation, shift, theta1, theta2);

    WarningCapture warnings;
    const ReconciliationReport report = method_reconciliation(states, options);
    warnings.flush(err);

    std::string text;
    if (config.output_format.value_or(OutputFormat::json) == OutputFormat::json) {
        nlohmann::json doc = report_to_json(report);
        doc["config"] = {{"n_max", config.n_max},
                         {"tolerance", config.tolerance},
                         {"theta1", theta1},
                         {"theta2", theta2},
                         {"occupation", {occupation.n1, occupation.n2}}};
        doc["warnings"] = warnings.messages();
        text = doc.dump(2) + "\n";
    } else {
        text = phase_csv(report);
    }
    const int io = emit(config, text, out, err);
    if (io != kExitPass) {
        return io;
    }
    return report.passed ? kExitPass : kExitDisagreement;
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
    validate_config(config);
    if (config.centers.size() > 1) {
        throw UsageError("sweep takes a single --centers shift");
    }
    const std::vector<double> t1 = sweep_angles(config.theta1, config.grid);
    const std::vector<double> t2 = sweep_angles(config.theta2, config.grid);
    if (t1.empty() || t2.empty()) {
        throw UsageError("sweep needs --theta1/--theta2 lists or --grid N");
    }
    const TwoModePoint shift = config.centers.empty() ? TwoModePoint{} : to_point(config.centers.front());
    ReconciliationOptions options;
    options.n_max = config.n_max;
    options.tolerance = config.tolerance;

    WarningCapture warnings;
    std::vector<ReconciliationReport> rows(t1.size() * t2.size());
    parallel_for(rows.size(), [&](std::size_t i) {
        const double a = t1[i / t2.size()];
        const double b = t2[i % t2.size()];
        rows[i] = method_reconciliation(polarizer_sequence(config.occupation, shift, a, b), options);
    });
    warnings.flush(err);

    bool all_pass = true;
    std::string text;
    if (config.output_format.value_or(OutputFormat::csv) == OutputFormat::csv) {
        text = std::string(kSweepCsvHeader) + "\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            text += sweep_csv_row(t1[i / t2.size()], t2[i % t2.size()], rows[i]) + "\n";
            all_pass = all_pass && rows[i].passed;
        }
    } else {
        nlohmann::json doc;
        doc["schema"] = kSchemaVersion;
        doc["kind"] = "sweep";
        doc["config"] = {{"n_max", config.n_max},
                         {"tolerance", config.tolerance},
                         {"occupation", {config.occupation.n1, config.occupation.n2}},
                         {"center", {shift[0].q, shift[0].p, shift[1].q, shift[1].p}}};
        nlohmann::json list = nlohmann::json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            nlohmann::json row = report_to_json(rows[i]);
            row.erase("schema");
            row.erase("kind");
            row["theta1"] = t1[i / t2.size()];
            row["theta2"] = t2[i % t2.size()];
            list.push_back(std::move(row));
            all_pass = all_pass && rows[i].passed;
        }
        doc["rows"] = std::move(list);
        text = doc.dump(2) + "\n";
    }
    const int io = emit(config, text, out, err);
    if (io != kExitPass) {
        return io;
    }
    return all_pass ? kExitPass : kExitDisagreement;
}

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err) {
    validate_config(config);
    ValidationOptions options;
    options.n_max = config.n_max;
    options.seed = config.seed;
    options.random_configurations = config.random_configurations;
    WarningCapture warnings;
    const auto checks = run_validation_suite(options);
    warnings.flush(err);

    bool all = true;
    for (const auto& c : checks) {
        all = all && c.passed;
    }
    std::string text;
    if (config.output_format.value_or(OutputFormat::json) == OutputFormat::json) {
        text = validation_to_json(options, checks).dump(2) + "\n";
    } else {
        text = "name,passed,max_error,tolerance\n";
        for (const auto& c : checks) {
            text += c.name + "," + (c.passed ? "true" : "false") + "," + format_number(c.max_error) + "," +
                    format_number(c.tolerance) + "\n";
        }
    }
    const int io = emit(config, text, out, err);
    if (io != kExitPass) {
        return io;
    }
    return all ? kExitPass : kExitDisagreement;
}

int cmd_pfunc(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.centers.size() > 1) {
        throw UsageError("pfunc takes a single --centers shift");
    }
    if (config.output_format == OutputFormat::csv) {
        throw UsageError("pfunc output is JSON only");
    }
    const TwoModePoint shift = config.centers.empty() ? TwoModePoint{} : to_point(config.centers.front());
    const QuasiProbability p = mehta_p_function(config.occupation, shift);
    return emit(config, pfunc_to_json(p, PFunctionSource{config.occupation, shift}).dump(2) + "\n", out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Geometric phase of two-mode beams from the Bargmann invariant Tr(rho1 rho2 rho3)",
                 "bargmann_phase"};
    app.require_subcommand(1);

    RunConfig config;
    std::string format;
    std::string state = "1,1";
    std::vector<std::string> centers;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n-max", config.n_max, "Per-mode Fock cutoff (>= 5)")->capture_default_str();
        sub->add_option("--tol", config.tolerance, "Agreement tolerance in radians")->capture_default_str();
        sub->add_option("--seed", config.seed, "Seed for randomized checks")->capture_default_str();
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--theta1", config.theta1, "First polarizer angle(s), radians")->delimiter(',');
        sub->add_option("--theta2", config.theta2, "Second polarizer angle(s), radians")->delimiter(',');
        sub->add_option("--centers", centers,
                        "q1,p1,q2,p2; once for the initial shift or three times for a triangle "
                        "(use --centers=-0.1,... for negative leading values)")
            ->allow_extra_args(false);
        sub->add_option("--state", state, "Fock occupations n1,n2 with n in {0,1}")->capture_default_str();
        sub->add_option("--out", config.out_path, "Output file (default: stdout)");
    };

    CLI::App* phase = app.add_subcommand("phase", "Compute the phase by every applicable method");
    add_common(phase);
    phase->add_option("--pfunc", config.pfunc_path, "P-function JSON document to use for the pairing route");
    CLI::App* sweep = app.add_subcommand("sweep", "Tabulate phases over a grid of polarizer angles");
    add_common(sweep);
    sweep->add_option("--grid", config.grid, "Use theta = k pi / N, k < N, for both angles");
    CLI::App* validate = app.add_subcommand("validate", "Run the invariant checks of every module");
    add_common(validate);
    validate->add_option("--configs", config.random_configurations, "Random configurations for the oracle check")
        ->capture_default_str();
    CLI::App* pfunc = app.add_subcommand("pfunc", "Print the P-function term list of a displaced Fock state");
    add_common(pfunc);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    try {
        if (!format.empty()) {
            config.output_format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
        }
        config.occupation = parse_state(state);
        for (const auto& c : centers) {
            config.centers.push_back(parse_center(c));
        }
        if (chosen == phase) {
            return cmd_phase(config, out, err);
        }
        if (chosen == sweep) {
            return cmd_sweep(config, out, err);
        }
        if (chosen == validate) {
            return cmd_validate(config, out, err);
        }
        return cmd_pfunc(config, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << chosen->help();
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace bargmann::cli
