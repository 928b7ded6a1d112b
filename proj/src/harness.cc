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

#include "qfir/harness.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qfir/encoder.h"
#include "qfir/fir_unitary.h"
#include "qfir/shot_sampler.h"

namespace qfir {

namespace {

constexpr double kUniformSamplingTolerance = 1e-9;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

double parse_number(std::string_view text) {
    std::string_view s = trim(text);
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
        throw Error(ErrorKind::ParseError, "not a number: '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_real(std::string_view text) {
    std::string_view s = trim(text);
    std::size_t slash = s.find('/');
    if (slash == std::string_view::npos) {
        return parse_number(s);
    }
    double num = parse_number(s.substr(0, slash));
    double den = parse_number(s.substr(slash + 1));
    if (den == 0) {
        throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    }
    return num / den;
}

Complex parse_complex(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) {
        throw Error(ErrorKind::ParseError, "empty complex number");
    }
    if (s.back() != 'j' && s.back() != 'i') {
        return {parse_number(s), 0};
    }
    std::string_view body = s.substr(0, s.size() - 1);
    // Split at the last sign that is not an exponent sign or the leading sign.
    std::size_t split_at = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split_at = k;
            break;
        }
    }
    std::string_view real_part = split_at == std::string_view::npos ? std::string_view{} : body.substr(0, split_at);
    std::string_view imag_part = split_at == std::string_view::npos ? body : body.substr(split_at);
    double imag;
    if (imag_part.empty() || imag_part == "+") {
        imag = 1;
    } else if (imag_part == "-") {
        imag = -1;
    } else {
        imag = parse_number(imag_part);
    }
    return {real_part.empty() ? 0.0 : parse_number(real_part), imag};
}

std::vector<Complex> parse_complex_list(std::string_view text) {
    std::vector<Complex> out;
    for (auto part : split(text, ',')) {
        out.push_back(parse_complex(part));
    }
    return out;
}

SignalSource parse_signal_source(std::string_view text) {
    std::string_view s = trim(text);
    if (s.starts_with("csv:")) {
        std::string path(s.substr(4));
        if (path.empty()) {
            throw Error(ErrorKind::ParseError, "csv signal source needs a path");
        }
        return CsvSource{path};
    }
    if (s.starts_with("two-tone:")) {
        auto fields = split(s.substr(9), ',');
        if (fields.size() != 4) {
            throw Error(ErrorKind::ParseError, "two-tone source expects f_low,f_high,n,dt");
        }
        double n = parse_number(fields[2]);
        if (n < 1 || n != std::floor(n)) {
            throw Error(ErrorKind::ParseError, "two-tone sample count must be a positive integer");
        }
        return TwoToneSource{parse_real(fields[0]), parse_real(fields[1]), static_cast<std::size_t>(n), parse_real(fields[3])};
    }
    throw Error(ErrorKind::ParseError, "signal must be 'two-tone:f1,f2,n,dt' or 'csv:PATH'");
}

std::pair<std::vector<Complex>, std::vector<Complex>> parse_factors(std::string_view text) {
    if (text.find(';') != std::string_view::npos) {
        auto halves = split(text, ';');
        if (halves.size() != 2) {
            throw Error(ErrorKind::ParseError, "factors need exactly two ';'-separated tap lists");
        }
        return {parse_complex_list(halves[0]), parse_complex_list(halves[1])};
    }
    auto values = parse_complex_list(text);
    if (values.size() != 4) {
        throw Error(ErrorKind::ParseError, "factors expect a1,b1,a2,b2 or two ';'-separated lists");
    }
    return {{values[0], values[1]}, {values[2], values[3]}};
}

void validate(const ExperimentConfig &cfg) {
    auto fail = [](const std::string &msg) {
        throw Error(ErrorKind::InvalidArgument, msg);
    };
    if (cfg.mode == ExperimentMode::Single) {
        if (cfg.taps.empty()) {
            fail("single mode requires --taps");
        }
    } else {
        if (cfg.first_factor.empty() || cfg.second_factor.empty()) {
            fail("cascade mode requires two factor tap lists (--factors)");
        }
    }
    if (cfg.shots < 1) {
        fail("shots must be at least 1");
    }
    if (cfg.amplitude_bound && !(*cfg.amplitude_bound > 0)) {
        fail("M must be positive");
    }
    if (cfg.out_path.empty()) {
        fail("an output path (--out) is required");
    }
    if (cfg.dilation == DilationMode::PaperLiteral && cfg.mode != ExperimentMode::Cascade) {
        fail("--paper-literal-dilation only applies to cascade mode");
    }
}

Signal load_signal(const SignalSource &source) {
    if (const auto *tone = std::get_if<TwoToneSource>(&source)) {
        return two_tone(tone->n, tone->f_low, tone->f_high, tone->sample_interval);
    }
    return ingest_csv(std::get<CsvSource>(source).path);
}

ExperimentResult run_experiment(const ExperimentConfig &cfg) {
    validate(cfg);
    Signal x = load_signal(cfg.signal);

    std::optional<FilterUnitary> single;
    std::optional<CascadeFilter> cascade;
    std::optional<FilterSpec> filter;
    if (cfg.mode == ExperimentMode::Single) {
        filter.emplace(cfg.taps);
        single = build_filter_unitary(*filter, choose_qubits(filter->size()));
    } else {
        cascade = build_cascade(FilterSpec(cfg.first_factor), FilterSpec(cfg.second_factor), cfg.dilation);
        filter.emplace(cascade->combined);
    }
    const std::size_t d = filter->size();
    ScalePolicy scale = cfg.amplitude_bound ? ScalePolicy(*cfg.amplitude_bound, d) : ScalePolicy::for_signal(x, d);
    Signal classical = fir_apply(*filter, x);
    Projector proj = single ? output_projector(*single) : cascade->output_projector();

    ExperimentResult result;
    result.amplitude_bound = scale.amplitude_bound();
    result.d = d;
    result.rows.reserve(x.size());

    std::vector<Complex> window(d);
    double sq_err = 0;
    double abs_dev = 0;
    for (std::size_t n = 0; n < x.size(); n++) {
        window = slide_window(window, x.samples()[n]);
        StateVector input = [&] {
            try {
                return encode_samples(window, scale);
            } catch (const Error &e) {
                throw Error(e.kind(), "time index " + std::to_string(n) + ": " + e.what());
            }
        }();
        StateVector output = single ? apply(*single, input) : cascaded_output(cascade->op, input);
        double p = ideal_probability(output, proj);
        ShotRecord rec = sample(output, cfg.shots, CounterRng::derive(cfg.seed, n), proj.index);
        double p_hat = estimate(rec, proj.index).p_hat;
        double recon = single ? reconstruct_magnitude(p, *filter, scale) : reconstruct_cascade_magnitude(p, *cascade, scale);

        Complex y = classical.samples()[n];
        ExperimentRow row{
            n, static_cast<double>(n) * x.sample_interval(), y, std::abs(y), p, p_hat, recon};
        sq_err += (recon - row.classical_abs_y) * (recon - row.classical_abs_y);
        abs_dev += std::abs(p_hat - p);
        result.rows.push_back(row);
    }

    const auto count = static_cast<double>(x.size());
    result.report = ComparisonReport{
        std::sqrt(sq_err / count),
        abs_dev / count,
        single ? single->certificate.residual : cascade->max_unitarity_residual(),
        cascade ? cascade->op.alpha : 1.0};
    return result;
}

void write_experiment_csv(const ExperimentResult &result, std::ostream &out) {
    out << kExperimentCsvHeader << '\n';
    for (const auto &row : result.rows) {
        out << row.n << ',' << format_double(row.t_seconds) << ',' << format_double(row.classical_y.real()) << ','
            << format_double(row.classical_abs_y) << ',' << format_double(row.ideal_prob) << ','
            << format_double(row.sampled_prob) << ',' << format_double(row.reconstructed_abs_y) << '\n';
    }
}

std::string experiment_csv(const ExperimentResult &result) {
    std::ostringstream out;
    write_experiment_csv(result, out);
    return out.str();
}

Signal parse_signal_csv(std::istream &in) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) {
        throw Error(ErrorKind::ParseError, "line 1: missing header");
    }
    line_no++;
    std::vector<double> times;
    std::vector<double> values;
    while (std::getline(in, line)) {
        line_no++;
        std::string_view s = trim(line);
        if (s.empty()) {
            continue;
        }
        auto fields = split(s, ',');
        if (fields.size() != 2) {
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected 't,value'");
        }
        try {
            times.push_back(parse_number(fields[0]));
            values.push_back(parse_number(fields[1]));
        } catch (const Error &e) {
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (values.empty()) {
        throw Error(ErrorKind::ParseError, "no data rows");
    }
    double interval = 1.0;
    if (times.size() >= 2) {
        interval = times[1] - times[0];
        if (!(interval > 0)) {
            throw Error(ErrorKind::NonUniformSampling, "timestamps must increase");
        }
        for (std::size_t k = 2; k < times.size(); k++) {
            double step = times[k] - times[k - 1];
            if (std::abs(step - interval) > kUniformSamplingTolerance * interval) {
                throw Error(
                    ErrorKind::NonUniformSampling,
                    "step " + format_double(step) + " before row " + std::to_string(k + 1) + " differs from " +
                        format_double(interval));
            }
        }
    }
    return Signal::from_real(values, interval);
}

Signal ingest_csv(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::InvalidArgument, "cannot open signal file '" + path + "'");
    }
    return parse_signal_csv(in);
}

void write_signal_csv(const Signal &signal, std::ostream &out) {
    out << "t,value\n";
    for (std::size_t k = 0; k < signal.size(); k++) {
        out << format_double(static_cast<double>(k) * signal.sample_interval()) << ','
            << format_double(signal.samples()[k].real()) << '\n';
    }
}

void apply_json_config(std::string_view json_text, ExperimentConfig &cfg) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception &e) {
        throw Error(ErrorKind::ParseError, std::string("config: ") + e.what());
    }
    if (!doc.is_object()) {
        throw Error(ErrorKind::ParseError, "config: top level must be an object");
    }
    auto complex_of = [](const json &v) -> Complex {
        if (v.is_number()) {
            return {v.get<double>(), 0};
        }
        if (v.is_string()) {
            return parse_complex(v.get<std::string>());
        }
        if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
            return {v[0].get<double>(), v[1].get<double>()};
        }
        throw Error(ErrorKind::ParseError, "config: cannot read complex value " + v.dump());
    };
    auto list_of = [&](const json &v) -> std::vector<Complex> {
        if (v.is_string()) {
            return parse_complex_list(v.get<std::string>());
        }
        if (!v.is_array()) {
            throw Error(ErrorKind::ParseError, "config: expected a list, got " + v.dump());
        }
        std::vector<Complex> out;
        for (const auto &item : v) {
            out.push_back(complex_of(item));
        }
        return out;
    };

    try {
        for (const auto &[key, value] : doc.items()) {
            if (key == "mode") {
                auto mode = value.get<std::string>();
                if (mode == "single") {
                    cfg.mode = ExperimentMode::Single;
                } else if (mode == "cascade") {
                    cfg.mode = ExperimentMode::Cascade;
                } else {
                    throw Error(ErrorKind::ParseError, "config: unknown mode '" + mode + "'");
                }
            } else if (key == "taps") {
                cfg.taps = list_of(value);
            } else if (key == "factors") {
                if (value.is_string()) {
                    std::tie(cfg.first_factor, cfg.second_factor) = parse_factors(value.get<std::string>());
                } else if (value.is_array() && value.size() == 2 && value[0].is_array() && value[1].is_array()) {
                    cfg.first_factor = list_of(value[0]);
                    cfg.second_factor = list_of(value[1]);
                } else if (value.is_array() && value.size() == 4) {
                    auto flat = list_of(value);
                    cfg.first_factor = {flat[0], flat[1]};
                    cfg.second_factor = {flat[2], flat[3]};
                } else {
                    throw Error(ErrorKind::ParseError, "config: factors must be [a1,b1,a2,b2] or [[...],[...]]");
                }
            } else if (key == "signal") {
                cfg.signal = parse_signal_source(value.get<std::string>());
            } else if (key == "shots") {
                cfg.shots = value.get<uint64_t>();
            } else if (key == "seed") {
                cfg.seed = value.get<uint64_t>();
            } else if (key == "M") {
                if (value.is_null()) {
                    cfg.amplitude_bound.reset();
                } else {
                    cfg.amplitude_bound = value.get<double>();
                }
            } else if (key == "out") {
                cfg.out_path = value.get<std::string>();
            } else if (key == "paper_literal_dilation") {
                cfg.dilation = value.get<bool>() ? DilationMode::PaperLiteral : DilationMode::Exact;
            } else {
                throw Error(ErrorKind::ParseError, "config: unknown key '" + key + "'");
            }
        }
    } catch (const json::exception &e) {
        throw Error(ErrorKind::ParseError, std::string("config: ") + e.what());
    }
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::CertificateFailure:
        case ErrorKind::NotAContraction:
        case ErrorKind::NoConvergence:
        case ErrorKind::NonOrthonormalConstraint:
            return 3;
        default:
            return 2;
    }
}

}  // namespace qfir
