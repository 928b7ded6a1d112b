// Copyright 2026 The qfir Authors
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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qfir/error.h"
#include "qfir/harness.h"

namespace {

constexpr int kExitConfigError = 2;

void report_error(std::string_view kind, const std::string &message) {
    nlohmann::json err{{"error", kind}, {"message", message}};
    std::cerr << err.dump() << '\n';
}

nlohmann::json report_json(const qfir::ExperimentConfig &cfg, const qfir::ExperimentResult &result) {
    const auto &r = result.report;
    return {
        {"mode", cfg.mode == qfir::ExperimentMode::Single ? "single" : "cascade"},
        {"dilation", qfir::dilation_mode_name(cfg.dilation)},
        {"rows", result.rows.size()},
        {"d", result.d},
        {"M", result.amplitude_bound},
        {"shots", cfg.shots},
        {"seed", cfg.seed},
        {"rmse_ideal_vs_classical", r.rmse_ideal_vs_classical},
        {"mean_abs_dev_sampled_vs_ideal", r.mean_abs_dev_sampled_vs_ideal},
        {"max_unitarity_residual", r.max_unitarity_residual},
        {"alpha", r.alpha},
    };
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum realization of classical FIR filters"};
    app.require_subcommand(1);
    CLI::App *run = app.add_subcommand("run", "filter a signal classically, ideally-quantum and shot-sampled");

    std::string config_path;
    std::string mode;
    std::string taps;
    std::string factors;
    std::string signal;
    uint64_t shots = 0;
    uint64_t seed = 0;
    double amplitude_bound = 0;
    std::string out;
    bool paper_literal = false;

    run->add_option("--config", config_path, "JSON config file; flags override its values");
    run->add_option("--mode", mode, "single | cascade")->check(CLI::IsMember({"single", "cascade"}));
    run->add_option("--taps", taps, "comma-separated taps p0,p1,... (complex as 0.5+0.1j)");
    run->add_option("--factors", factors, "a1,b1,a2,b2 or p0,...;q0,... for cascade mode");
    run->add_option("--signal", signal, "two-tone:f_low,f_high,n,dt | csv:PATH");
    run->add_option("--shots", shots, "measurement shots per time index");
    run->add_option("--seed", seed, "64-bit sampling seed");
    run->add_option("--M", amplitude_bound, "amplitude bound (defaults to max |x[n]|)");
    run->add_option("--out", out, "output CSV path ('-' for stdout)");
    run->add_flag("--paper-literal-dilation", paper_literal, "use the [[A,B],[B,-A]] block form");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        report_error("ConfigError", e.what());
        return kExitConfigError;
    }

    qfir::ExperimentConfig cfg;
    try {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) {
                throw qfir::Error(qfir::ErrorKind::InvalidArgument, "cannot open config '" + config_path + "'");
            }
            std::stringstream buf;
            buf << in.rdbuf();
            qfir::apply_json_config(buf.str(), cfg);
        }
        if (run->count("--mode")) {
            cfg.mode = mode == "single" ? qfir::ExperimentMode::Single : qfir::ExperimentMode::Cascade;
        }
        if (run->count("--taps")) {
            cfg.taps = qfir::parse_complex_list(taps);
        }
        if (run->count("--factors")) {
            std::tie(cfg.first_factor, cfg.second_factor) = qfir::parse_factors(factors);
        }
        if (run->count("--signal")) {
            cfg.signal = qfir::parse_signal_source(signal);
        }
        if (run->count("--shots")) {
            cfg.shots = shots;
        }
        if (run->count("--seed")) {
            cfg.seed = seed;
        }
        if (run->count("--M")) {
            cfg.amplitude_bound = amplitude_bound;
        }
        if (run->count("--out")) {
            cfg.out_path = out;
        }
        if (paper_literal) {
            cfg.dilation = qfir::DilationMode::PaperLiteral;
        }
        qfir::validate(cfg);
    } catch (const qfir::Error &e) {
        report_error(qfir::error_kind_name(e.kind()), e.what());
        return kExitConfigError;
    }

    qfir::ExperimentResult result;
    try {
        result = qfir::run_experiment(cfg);
    } catch (const qfir::Error &e) {
        report_error(qfir::error_kind_name(e.kind()), e.what());
        return qfir::exit_code_for(e.kind());
    }

    std::string csv = qfir::experiment_csv(result);
    std::string report = report_json(cfg, result).dump(2);
    if (cfg.out_path == "-") {
        std::cout << csv;
        std::cerr << report << '\n';
    } else {
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!file) {
            report_error("IOError", "cannot write '" + cfg.out_path + "'");
            return kExitConfigError;
        }
        file << csv;
        std::cout << report << '\n';
    }
    return 0;
}
