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

#ifndef QFIR_HARNESS_H
#define QFIR_HARNESS_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qfir/cascade.h"
#include "qfir/classical_fir.h"
#include "qfir/error.h"

namespace qfir {

enum class ExperimentMode { Single, Cascade };

struct TwoToneSource {
    double f_low = 5.0;
    double f_high = 110.0;
    std::size_t n = 249;
    double sample_interval = 1.0 / 249.0;
};

struct CsvSource {
    std::string path;
};

using SignalSource = std::variant<TwoToneSource, CsvSource>;

struct ExperimentConfig {
    ExperimentMode mode = ExperimentMode::Single;
    std::vector<Complex> taps;           ///< single mode
    std::vector<Complex> first_factor;   ///< cascade mode
    std::vector<Complex> second_factor;  ///< cascade mode
    SignalSource signal = TwoToneSource{};
    uint64_t shots = 1024;
    uint64_t seed = 0;
    std::optional<double> amplitude_bound;  ///< M; defaults to max |x[n]|
    std::string out_path;
    DilationMode dilation = DilationMode::Exact;
};

/// Throws Error(InvalidArgument) describing the first problem found.
void validate(const ExperimentConfig &cfg);

struct ExperimentRow {
    std::size_t n;
    double t_seconds;
    Complex classical_y;
    double classical_abs_y;
    double ideal_prob;
    double sampled_prob;
    double reconstructed_abs_y;  ///< from ideal_prob
};

struct ComparisonReport {
    double rmse_ideal_vs_classical;         ///< on rectified |y|
    double mean_abs_dev_sampled_vs_ideal;   ///< probability units
    double max_unitarity_residual;
    double alpha;                           ///< 1 in single mode
};

struct ExperimentResult {
    std::vector<ExperimentRow> rows;
    ComparisonReport report;
    double amplitude_bound;  ///< the M actually used
    std::size_t d;
};

Signal load_signal(const SignalSource &source);

/// Runs the classical, ideal-quantum and sampled-quantum filters over every
/// time index. Shot sampling at index n uses the sub-stream
/// CounterRng::derive(seed, n), so rows are independent of evaluation order.
ExperimentResult run_experiment(const ExperimentConfig &cfg);

inline constexpr std::string_view kExperimentCsvHeader =
    "n,t_seconds,classical_y,classical_abs_y,ideal_prob,sampled_prob,reconstructed_abs_y";

/// One row per time index; 17 significant digits; LF line endings. For
/// complex outputs classical_y holds the real part.
void write_experiment_csv(const ExperimentResult &result, std::ostream &out);
std::string experiment_csv(const ExperimentResult &result);

/// Reads `t,value` rows after a single header line. The sample interval is
/// t1 - t0 and every later step must match it within 1e-9 relative
/// (NonUniformSampling otherwise). Malformed rows raise ParseError naming
/// the 1-based line number. A single-row file gets an interval of 1 s.
Signal ingest_csv(const std::string &path);
Signal parse_signal_csv(std::istream &in);

/// Inverse of ingest_csv for real signals (imaginary parts are dropped).
void write_signal_csv(const Signal &signal, std::ostream &out);

/// "%.17g".
std::string format_double(double v);

/// Parses "1.5", "-2e-3", "0.5+0.25j", "-1j". Throws ParseError.
Complex parse_complex(std::string_view text);
/// Comma-separated list of parse_complex values.
std::vector<Complex> parse_complex_list(std::string_view text);
/// Accepts a plain number or a fraction "a/b".
double parse_real(std::string_view text);

/// "two-tone:f_low,f_high,n,dt" or "csv:PATH".
SignalSource parse_signal_source(std::string_view text);

/// Parses "a1,b1,a2,b2" or "p0,p1,...;q0,q1,...".
std::pair<std::vector<Complex>, std::vector<Complex>> parse_factors(std::string_view text);

/// Overlays the keys present in a JSON document onto cfg: mode, taps,
/// factors, signal, shots, seed, M, out, paper_literal_dilation. Taps and
/// factors accept the same strings as the CLI or JSON arrays of numbers and
/// complex strings. Throws ParseError.
void apply_json_config(std::string_view json_text, ExperimentConfig &cfg);

/// Process exit code for an error raised while running an experiment:
/// 3 for numerical certificate failures, 2 for everything else.
int exit_code_for(ErrorKind kind);

}  // namespace qfir

#endif
