// Copyright 2026 The quatsim Authors
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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "quatsim/campaign.hpp"
#include "quatsim/embed.hpp"
#include "quatsim/error.hpp"
#include "quatsim/frame.hpp"
#include "quatsim/json_io.hpp"
#include "quatsim/random.hpp"
#include "quatsim/simulate.hpp"

namespace quatsim::cli {

namespace {

using nlohmann::json;

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

json read_json(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    return json::parse(in);
}

void emit(const json &doc, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << doc.dump(2) << '\n';
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot write " + path);
    }
    file << doc.dump(2) << '\n';
    if (!file) {
        throw IoError("failed writing " + path);
    }
}

TraceMode parse_mode(const std::string &text) {
    if (text == "default") {
        return TraceMode::kDefault;
    }
    if (text == "strict") {
        return TraceMode::kStrict;
    }
    throw std::invalid_argument("--mode must be default or strict");
}

struct VerifyOptions {
    std::uint64_t seed = 0;
    std::string dims = "1..6";
    std::size_t trials = 1000;
    std::string mode = "default";
    double tol = 1e-10;
    std::string out;
};

int cmd_verify(const VerifyOptions &opt, std::ostream &out) {
    CampaignConfig config;
    config.seed = opt.seed;
    config.dims = parse_dims(opt.dims);
    config.trials = opt.trials;
    config.mode = parse_mode(opt.mode);
    config.tolerance = opt.tol;
    if (config.trials == 0) {
        throw std::invalid_argument("--trials must be positive");
    }
    if (!(opt.tol >= 0.0)) {
        throw std::invalid_argument("--tol must be non-negative");
    }
    VerificationReport report = run_campaign(config);
    emit(report_to_json(report), opt.out, out);
    if (!opt.out.empty()) {
        out << (report.passed() ? "PASS" : "FAIL") << ": " << report.trials << " trials, "
            << report.violations << " violations\n";
    }
    return report.passed() ? kOk : kViolation;
}

struct SimulateOptions {
    std::string state;
    std::string povm;
    std::string channel;
    std::string mode;
    double tol = 1e-10;
    std::string out;
};

void print_table(std::ostream &out, const std::vector<double> &p, const std::vector<double> &q) {
    out << std::left << std::setw(8) << "outcome" << std::setw(26) << "p" << std::setw(26) << "q" << "|p-q|\n";
    for (std::size_t r = 0; r < p.size(); ++r) {
        std::ostringstream pr, qr, dr;
        pr << std::setprecision(17) << p[r];
        qr << std::setprecision(17) << q[r];
        dr << std::scientific << std::setprecision(3) << std::abs(p[r] - q[r]);
        out << std::left << std::setw(8) << r << std::setw(26) << pr.str() << std::setw(26) << qr.str() << dr.str()
            << '\n';
    }
}

json outcome_rows(const std::vector<double> &p, const std::vector<double> &q) {
    json rows = json::array();
    for (std::size_t r = 0; r < p.size(); ++r) {
        rows.push_back({{"outcome", r}, {"p", p[r]}, {"q", q[r]}, {"dev", std::abs(p[r] - q[r])}});
    }
    return rows;
}

int cmd_simulate(const SimulateOptions &opt, std::ostream &out) {
    std::optional<TraceMode> mode;
    if (!opt.mode.empty()) {
        mode = parse_mode(opt.mode);
    }
    State rho = state_from_json(read_json(opt.state));
    Povm povm = povm_from_json(read_json(opt.povm));

    json doc = {{"schema", kSchemaVersion}, {"tolerance", opt.tol}};
    double max_dev = 0.0;
    bool ok = true;
    if (opt.channel.empty()) {
        MeasurementReport report = measurement_equiv(rho, povm);
        born(rho, povm);  // range and normalization gate
        print_table(out, report.p, report.q);
        max_dev = report.max_dev;
        doc["kind"] = "measurement";
        doc["outcomes"] = outcome_rows(report.p, report.q);
        doc["sum_p"] = report.sum_p;
        doc["sum_q"] = report.sum_q;
    } else {
        Channel channel = channel_from_json(read_json(opt.channel), mode);
        ChannelReport report = channel_equiv(rho, channel, povm);
        print_table(out, report.p, report.q);
        max_dev = report.max_dev;
        doc["kind"] = "channel";
        doc["mode"] = std::string(trace_mode_name(report.mode));
        doc["outcomes"] = outcome_rows(report.p, report.q);
        doc["intermediate_dev"] = report.intermediate_dev;
        out << "intermediate |Theta(sigma) - psi(Phi(rho))/2| = " << std::scientific << std::setprecision(3)
            << report.intermediate_dev << '\n';
        ok = report.intermediate_dev <= opt.tol;
        if (report.trace_checked) {
            doc["output_trace_dev"] = report.output_trace_dev;
            ok = ok && report.output_trace_dev <= kValidationTolerance;
        }
    }
    ok = ok && max_dev <= opt.tol;
    doc["max_dev"] = max_dev;
    doc["passed"] = ok;
    out << "max |p-q| = " << std::scientific << std::setprecision(3) << max_dev << '\n';
    if (!opt.out.empty()) {
        emit(doc, opt.out, out);
    }
    return ok ? kOk : kViolation;
}

struct EmbedOptions {
    std::string direction;
    std::string in;
    std::string out;
};

int cmd_embed(const EmbedOptions &opt, std::ostream &out) {
    json doc = read_json(opt.in);
    require_schema(doc);
    json result;
    if (opt.direction == "h2c") {
        result = cmatrix_to_json(psi(qmatrix_from_json(doc)));
    } else if (opt.direction == "c2h") {
        result = qmatrix_to_json(psi_inv(cmatrix_from_json(doc)));
    } else {
        throw std::invalid_argument("--direction must be h2c or c2h");
    }
    json tagged = {{"schema", kSchemaVersion}};
    tagged.update(result);
    emit(tagged, opt.out, out);
    return kOk;
}

struct TomographyOptions {
    std::size_t dim = 0;
    std::string values;
    std::string state;
    std::optional<std::uint64_t> seed;
    std::string values_out;
    bool schedule = false;
    std::string out;
};

int cmd_tomography(const TomographyOptions &opt, std::ostream &out) {
    if (opt.dim == 0) {
        throw std::invalid_argument("--dim must be positive");
    }
    FrameSchedule schedule = frame_schedule(opt.dim);
    if (opt.schedule) {
        json queries = json::array();
        for (const auto &e : schedule.effects()) {
            queries.push_back(qmatrix_to_json(e));
        }
        emit({{"schema", kSchemaVersion}, {"dim", opt.dim}, {"queries", std::move(queries)}}, opt.out, out);
        return kOk;
    }

    const int sources = !opt.values.empty() + !opt.state.empty() + opt.seed.has_value();
    if (sources != 1) {
        throw std::invalid_argument("tomography needs exactly one of --values, --state, --seed");
    }
    if (!opt.values_out.empty() && !opt.values.empty()) {
        throw std::invalid_argument("--values-out only applies to --state or --seed");
    }

    std::vector<double> values;
    std::optional<State> truth;
    if (!opt.values.empty()) {
        json doc = read_json(opt.values);
        require_schema(doc);
        if (doc.at("dim").get<std::size_t>() != opt.dim) {
            throw std::invalid_argument("values file dim does not match --dim");
        }
        values = doc.at("values").get<std::vector<double>>();
        if (values.size() != schedule.size()) {
            throw std::invalid_argument("values file holds " + std::to_string(values.size()) + " values, dim " +
                                        std::to_string(opt.dim) + " needs " + std::to_string(schedule.size()));
        }
    } else {
        if (!opt.state.empty()) {
            truth = state_from_json(read_json(opt.state));
        } else {
            Rng rng(*opt.seed);
            truth = random_state(rng, opt.dim);
        }
        if (truth->dim() != opt.dim) {
            throw std::invalid_argument("state dim does not match --dim");
        }
        for (const auto &e : schedule.effects()) {
            values.push_back(hs_form(e, truth->matrix()));
        }
        if (!opt.values_out.empty()) {
            emit({{"schema", kSchemaVersion}, {"dim", opt.dim}, {"values", values}}, opt.values_out, out);
        }
    }

    FrameReconstruction rec = reconstruct_from_values(schedule, values);
    json doc = {{"schema", kSchemaVersion},
                {"dim", opt.dim},
                {"consistent", rec.consistent},
                {"is_state", rec.is_state},
                {"residual", rec.residual},
                {"trace_correction", rec.trace_correction},
                {"matrix", qmatrix_to_json(rec.rho)}};
    if (truth) {
        doc["source_error"] = max_abs_diff(rec.rho, truth->matrix());
    }
    emit(doc, opt.out, out);
    if (!rec.consistent) {
        std::ostringstream msg;
        msg << "reconstruction failed: frame-function values are inconsistent (residual " << rec.residual << ")";
        throw ValidationError(Invariant::kFrameConsistency, "tomography", msg.str());
    }
    if (!rec.is_state) {
        throw ValidationError(Invariant::kNotPsd, "tomography", "reconstructed operator is not positive");
    }
    return kOk;
}

struct BasisOptions {
    std::size_t dim = 0;
    std::string out;
};

int cmd_basis(const BasisOptions &opt, std::ostream &out) {
    if (opt.dim == 0) {
        throw std::invalid_argument("--dim must be positive");
    }
    json basis = json::array();
    for (const auto &m : sa_basis(opt.dim)) {
        basis.push_back(qmatrix_to_json(m));
    }
    const std::size_t count = basis.size();
    emit({{"schema", kSchemaVersion}, {"dim", opt.dim}, {"count", count}, {"basis", std::move(basis)}}, opt.out, out);
    return kOk;
}

}  // namespace

std::vector<std::size_t> parse_dims(const std::string &text) {
    auto parse_positive = [&](const std::string &s) -> std::size_t {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
            throw std::invalid_argument("bad dims '" + text + "'");
        }
        std::size_t v = std::stoul(s);
        if (v == 0 || v > 64) {
            throw std::invalid_argument("dims must lie in 1..64, got " + s);
        }
        return v;
    };
    std::vector<std::size_t> dims;
    if (auto pos = text.find(".."); pos != std::string::npos) {
        std::size_t lo = parse_positive(text.substr(0, pos));
        std::size_t hi = parse_positive(text.substr(pos + 2));
        if (lo > hi) {
            throw std::invalid_argument("empty dims range '" + text + "'");
        }
        for (std::size_t d = lo; d <= hi; ++d) {
            dims.push_back(d);
        }
        return dims;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        dims.push_back(parse_positive(item));
    }
    if (dims.empty()) {
        throw std::invalid_argument("bad dims '" + text + "'");
    }
    return dims;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quaternionic quantum processes and their complex simulation"};
    app.require_subcommand(1);

    VerifyOptions verify;
    auto *verify_cmd = app.add_subcommand("verify", "Randomized equivalence and invariant campaign");
    verify_cmd->add_option("--seed", verify.seed, "Master seed");
    verify_cmd->add_option("--dims", verify.dims, "Dimensions, 'a..b' or 'a,b,c'");
    verify_cmd->add_option("--trials", verify.trials, "Number of trials");
    verify_cmd->add_option("--mode", verify.mode, "Kraus normalization: default|strict");
    verify_cmd->add_option("--tol", verify.tol, "Deviation tolerance");
    verify_cmd->add_option("--out", verify.out, "Report path (default: stdout)");

    SimulateOptions simulate;
    auto *simulate_cmd = app.add_subcommand("simulate", "Compare quaternionic and simulated complex statistics");
    simulate_cmd->add_option("--state", simulate.state, "State JSON")->required();
    simulate_cmd->add_option("--povm", simulate.povm, "POVM JSON")->required();
    simulate_cmd->add_option("--channel", simulate.channel, "Channel JSON");
    simulate_cmd->add_option("--mode", simulate.mode, "Override channel normalization: default|strict");
    simulate_cmd->add_option("--tol", simulate.tol, "Deviation tolerance");
    simulate_cmd->add_option("--out", simulate.out, "JSON result path");

    EmbedOptions embed;
    auto *embed_cmd = app.add_subcommand("embed", "Convert between quaternionic and complex matrices");
    embed_cmd->add_option("--direction", embed.direction, "h2c or c2h")->required();
    embed_cmd->add_option("--in", embed.in, "Input matrix JSON")->required();
    embed_cmd->add_option("--out", embed.out, "Output path (default: stdout)");

    TomographyOptions tomo;
    std::uint64_t tomo_seed = 0;
    auto *tomo_cmd = app.add_subcommand("tomography", "Reconstruct a state from frame-function values");
    tomo_cmd->add_option("--dim", tomo.dim, "Dimension")->required();
    tomo_cmd->add_option("--values", tomo.values, "Frame-function values JSON, in schedule order");
    tomo_cmd->add_option("--state", tomo.state, "Generate values from this state");
    auto *seed_opt = tomo_cmd->add_option("--seed", tomo_seed, "Generate values from a random state");
    tomo_cmd->add_option("--values-out", tomo.values_out, "Write generated values here");
    tomo_cmd->add_flag("--schedule", tomo.schedule, "Emit the query effects instead");
    tomo_cmd->add_option("--out", tomo.out, "Output path (default: stdout)");

    BasisOptions basis;
    auto *basis_cmd = app.add_subcommand("basis", "Emit the orthonormal self-adjoint basis");
    basis_cmd->add_option("--dim", basis.dim, "Dimension")->required();
    basis_cmd->add_option("--out", basis.out, "Output path (default: stdout)");

    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }
    if (seed_opt->count() > 0) {
        tomo.seed = tomo_seed;
    }

    try {
        if (*verify_cmd) {
            return cmd_verify(verify, out);
        }
        if (*simulate_cmd) {
            return cmd_simulate(simulate, out);
        }
        if (*embed_cmd) {
            return cmd_embed(embed, out);
        }
        if (*tomo_cmd) {
            return cmd_tomography(tomo, out);
        }
        if (*basis_cmd) {
            return cmd_basis(basis, out);
        }
    } catch (const ValidationError &e) {
        err << "violation: " << e.what() << '\n';
        return kViolation;
    } catch (const DomainError &e) {
        err << "violation: " << e.what() << '\n';
        return kViolation;
    } catch (const NumericalError &e) {
        err << "violation: " << e.what() << '\n';
        return kViolation;
    } catch (const json::exception &e) {
        err << "input error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception &e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace quatsim::cli
