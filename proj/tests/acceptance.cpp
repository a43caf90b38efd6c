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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
//
// usage: acceptance <path-to-quatsim> <fixtures-dir>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "quatsim/embed.hpp"
#include "quatsim/frame.hpp"
#include "quatsim/json_io.hpp"
#include "quatsim/qqt.hpp"
#include "quatsim/random.hpp"
#include "quatsim/simulate.hpp"
#include "quatsim/spectral.hpp"

namespace {

using namespace quatsim;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kMaster = 20260101;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

double relative(double residual, double scale) { return residual / std::max(1.0, scale); }

std::size_t pick(Rng &rng, std::size_t lo, std::size_t hi) { return rng.uniform_index(lo, hi); }

struct Outcome {
    bool passed = true;
    std::string detail;
};

int g_failures = 0;

void report(int id, const std::string &name, const Outcome &o) {
    std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << id << "  " << name << "  " << o.detail
              << std::endl;
    if (!o.passed) {
        ++g_failures;
    }
}

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << x;
    return s.str();
}

// Re-linearity, multiplicativity and *-compatibility of psi.
double embedding_residual(Rng &rng, std::size_t p, std::size_t d, std::size_t q) {
    QMatrix a = random_ginibre(rng, p, d);
    QMatrix a2 = random_ginibre(rng, p, d);
    QMatrix b = random_ginibre(rng, d, q);
    const double s1 = rng.normal();
    const double s2 = rng.normal();
    double linear = relative(max_abs_diff(psi(s1 * a + s2 * a2), psi(a) * Complex(s1) + psi(a2) * Complex(s2)),
                             std::abs(s1) * frobenius_norm(a) + std::abs(s2) * frobenius_norm(a2));
    double mult = relative(max_abs_diff(psi(a) * psi(b), psi(a * b)), frobenius_norm(a) * frobenius_norm(b));
    double star = relative(max_abs_diff(psi(adjoint(a)), adjoint(psi(a))), frobenius_norm(a));
    return std::max({linear, mult, star});
}

Outcome criterion_embedding() {
    const auto start = Clock::now();
    double square = 0.0;
    double rect = 0.0;
    std::size_t rect_count = 0;
    for (std::size_t t = 0; t < 500; ++t) {
        Rng rng(trial_seed(kMaster + 1, t));
        const std::size_t n = 1 + t % 8;
        square = std::max(square, embedding_residual(rng, n, n, n));
    }
    for (std::size_t t = 0; t < 500; ++t) {
        Rng rng(trial_seed(kMaster + 2, t));
        std::size_t p = pick(rng, 1, 8);
        std::size_t d = pick(rng, 1, 8);
        std::size_t q = pick(rng, 1, 8);
        if (p == d && d == q) {
            q = q % 8 + 1;  // keep this class strictly rectangular
        }
        rect = std::max(rect, embedding_residual(rng, p, d, q));
        ++rect_count;
    }
    const double elapsed = seconds_since(start);
    Outcome o;
    o.passed = square <= 1e-10 && rect <= 1e-10 && elapsed < 10.0;
    o.detail = "square max rel " + fmt(square) + ", rectangular max rel " + fmt(rect) + " (500+" +
               std::to_string(rect_count) + " pairs, " + fmt(elapsed) + " s; tol 1e-10, < 10 s)";
    return o;
}

Outcome criterion_inner_product() {
    double worst = 0.0;
    for (std::size_t t = 0; t < 500; ++t) {
        Rng rng(trial_seed(kMaster + 3, t));
        const std::size_t d = 1 + t % 8;
        QMatrix a = random_self_adjoint(rng, d);
        QMatrix b = random_self_adjoint(rng, d);
        const double lhs = trace(a * b);
        const double rhs = 0.5 * trace(psi(a) * psi(b)).real();
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, frobenius_norm(a) * frobenius_norm(b)));
    }
    return {worst <= 1e-10, "max |tr(AB) - tr(psi(A)psi(B))/2| / max(1,|A||B|) = " + fmt(worst) +
                                " (500 pairs; tol 1e-10)"};
}

struct Timed {
    Outcome outcome;
    double seconds = 0.0;
};

Timed criterion_measurement() {
    const auto start = Clock::now();
    double dev = 0.0;
    double sums = 0.0;
    for (std::size_t t = 0; t < 1000; ++t) {
        Rng rng(trial_seed(kMaster + 4, t));
        const std::size_t d = pick(rng, 1, 6);
        const std::size_t m = pick(rng, 2, 8);
        State rho = random_state(rng, d);
        Povm povm = random_povm(rng, d, m);
        MeasurementReport r = measurement_equiv(rho, povm);
        dev = std::max(dev, r.max_dev);
        sums = std::max({sums, std::abs(r.sum_p - 1.0), std::abs(r.sum_q - 1.0)});
    }
    Timed out;
    out.seconds = seconds_since(start);
    out.outcome = {dev <= 1e-10 && sums <= 1e-9, "max |p-q| = " + fmt(dev) + ", max |sum - 1| = " + fmt(sums) +
                                                     " (1000 instances, " + fmt(out.seconds) +
                                                     " s; tol 1e-10 and 1e-9)"};
    return out;
}

Timed criterion_channel() {
    const auto start = Clock::now();
    double dev = 0.0;
    double inter = 0.0;
    double out_trace = 0.0;
    for (std::size_t t = 0; t < 1000; ++t) {
        Rng rng(trial_seed(kMaster + 5, t));
        const std::size_t d = 1 + t % 5;
        const std::size_t p = 1 + (t / 5) % 5;
        const std::size_t n = (d + p - 1) / p + pick(rng, 0, 3);
        State rho = random_state(rng, d);
        Channel channel = random_channel(rng, d, p, n);
        Povm povm = random_povm(rng, p, pick(rng, 2, 8));
        ChannelReport r = channel_equiv(rho, channel, povm);
        dev = std::max(dev, r.max_dev);
        inter = std::max(inter, r.intermediate_dev);
        out_trace = std::max(out_trace, r.output_trace_dev);
    }
    Timed out;
    out.seconds = seconds_since(start);
    out.outcome = {dev <= 1e-10 && inter <= 1e-10,
                   "max |p-q| = " + fmt(dev) + ", intermediate identity " + fmt(inter) + ", output trace " +
                       fmt(out_trace) + " (1000 instances over (d,p) in {1..5}^2, " + fmt(out.seconds) +
                       " s; tol 1e-10)"};
    return out;
}

Outcome criterion_spectral() {
    double recon = 0.0;
    std::size_t odd_clusters = 0;
    for (std::size_t t = 0; t < 300; ++t) {
        Rng rng(trial_seed(kMaster + 6, t));
        const std::size_t d = 1 + t % 8;
        QMatrix a = random_self_adjoint(rng, d);
        const double scale = std::max(1.0, frobenius_norm(a));
        SpectralDecomposition dec = spectral_decompose(a);
        recon = std::max(recon, max_abs_diff(dec.reconstruct(), a) / scale);

        std::vector<double> ev = hermitian_eig(psi(a)).eigenvalues;
        const double tol = 1e-8 * scale;
        std::size_t begin = 0;
        for (std::size_t i = 1; i <= ev.size(); ++i) {
            if (i == ev.size() || ev[i] - ev[i - 1] > tol) {
                odd_clusters += (i - begin) % 2;
                begin = i;
            }
        }
    }
    return {recon <= 1e-9 && odd_clusters == 0, "max reconstruction residual / max(1,|A|) = " + fmt(recon) +
                                                    ", odd-multiplicity clusters = " +
                                                    std::to_string(odd_clusters) + " (300 matrices; tol 1e-9)"};
}

Outcome criterion_trace() {
    double cyclic = 0.0;
    double basis = 0.0;
    for (std::size_t t = 0; t < 300; ++t) {
        Rng rng(trial_seed(kMaster + 7, t));
        const std::size_t d = 1 + t % 8;
        QMatrix a = random_ginibre(rng, d, d);
        QMatrix b = random_ginibre(rng, d, d);
        QMatrix c = random_ginibre(rng, d, d);
        const double abc = frobenius_norm(a) * frobenius_norm(b) * frobenius_norm(c);
        cyclic = std::max(cyclic, relative(std::abs(trace(a * b * c) - trace(c * a * b)), abc));

        // Re sum_r <w_r|A w_r> over the columns of a random unitary.
        QMatrix u = random_unitary(rng, d);
        double in_basis = 0.0;
        for (std::size_t r = 0; r < d; ++r) {
            QVector w = u.column(r);
            in_basis += inner_product(w, a * w).h0;
        }
        basis = std::max(basis, relative(std::abs(in_basis - trace(a)), frobenius_norm(a)));
    }
    return {cyclic <= 1e-10 && basis <= 1e-10, "cyclicity " + fmt(cyclic) + ", basis independence " + fmt(basis) +
                                                   " (300 instances, relative; tol 1e-10)"};
}

Outcome criterion_frame() {
    double round_trip = 0.0;
    std::size_t inconsistent = 0;
    for (std::size_t d = 1; d <= 4; ++d) {
        for (std::size_t t = 0; t < 100; ++t) {
            Rng rng(trial_seed(kMaster + 8 + d, t));
            QMatrix rho = random_state(rng, d).matrix();
            FrameReconstruction rec = frame_reconstruct([&](const QMatrix &e) { return hs_form(e, rho); }, d);
            round_trip = std::max(round_trip, max_abs_diff(rec.rho, rho));
            inconsistent += rec.consistent && rec.is_state ? 0 : 1;
        }
    }
    bool cardinality = true;
    double gram = 0.0;
    for (std::size_t d = 1; d <= 8; ++d) {
        std::vector<QMatrix> basis = sa_basis(d);
        cardinality = cardinality && basis.size() == d * (2 * d - 1);
        for (std::size_t r = 0; r < basis.size(); ++r) {
            for (std::size_t s = 0; s < basis.size(); ++s) {
                gram = std::max(gram, std::abs(hs_form(basis[r], basis[s]) - (r == s ? 1.0 : 0.0)));
            }
        }
    }
    return {round_trip <= 1e-8 && inconsistent == 0 && cardinality && gram <= 1e-12,
            "round trip " + fmt(round_trip) + " (400 states, " + std::to_string(inconsistent) +
                " flagged), |basis| = d(2d-1) for d 1..8: " + (cardinality ? "yes" : "no") + ", Gram - I " +
                fmt(gram) + " (tol 1e-8, 1e-12)"};
}

Outcome criterion_sp1() {
    double hom = 0.0;
    double member = 0.0;
    for (std::size_t t = 0; t < 500; ++t) {
        Rng rng(trial_seed(kMaster + 13, t));
        Quaternion a = random_unit_quaternion(rng);
        Quaternion b = random_unit_quaternion(rng);
        CMatrix ua = sp1_to_su2(a);
        CMatrix ub = sp1_to_su2(b);
        hom = std::max(hom, max_abs_diff(sp1_to_su2(a * b), ua * ub));
        for (const CMatrix *u : {&ua, &ub}) {
            const CMatrix &m = *u;
            const Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
            member = std::max({member, max_abs_diff(adjoint(m) * m, CMatrix::identity(2)), std::abs(det - 1.0)});
        }
    }
    return {hom <= 1e-12 && member <= 1e-12,
            "homomorphism " + fmt(hom) + ", SU(2) membership " + fmt(member) + " (500 pairs; tol 1e-12)"};
}

// --- CLI contract -------------------------------------------------------

std::string quote(const std::string &s) { return "'" + s + "'"; }

int exit_status(const std::string &command) {
    int raw = std::system(command.c_str());
    return raw == -1 || !WIFEXITED(raw) ? -1 : WEXITSTATUS(raw);
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome criterion_cli(const std::string &exe, const fs::path &fixtures) {
    const fs::path dir = fs::temp_directory_path() / ("quatsim_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    auto run = [&](const std::string &args, const std::string &stdout_name) {
        return exit_status(quote(exe) + " " + args + " > " + quote((dir / stdout_name).string()) + " 2> " +
                           quote((dir / (stdout_name + ".err")).string()));
    };

    std::vector<std::string> problems;
    auto expect = [&](bool ok, const std::string &what) {
        if (!ok) {
            problems.push_back(what);
        }
    };

    // Determinism: identical config, identical bytes.
    const std::string verify = "verify --seed 99 --dims 1..4 --trials 200";
    int v1 = run(verify, "verify1.json");
    int v2 = run(verify, "verify2.json");
    expect(v1 == 0 && v2 == 0, "verify did not exit 0");
    expect(slurp(dir / "verify1.json") == slurp(dir / "verify2.json") && !slurp(dir / "verify1.json").empty(),
           "verify output differs between runs");
    run("tomography --dim 3 --seed 4", "tomo1.json");
    run("tomography --dim 3 --seed 4", "tomo2.json");
    expect(slurp(dir / "tomo1.json") == slurp(dir / "tomo2.json"), "tomography output differs between runs");

    // Exit codes.
    bool saw0 = v1 == 0;
    int c1 = run("verify --seed 99 --dims 3 --trials 5 --tol 0", "violation.json");
    int c1b = run("embed --direction c2h --in " + quote((fixtures / "cmatrix_diag12.json").string()), "c2h.json");
    int c1c = run("simulate --state " + quote((fixtures / "state_mixed2.json").string()) + " --povm " +
                      quote((fixtures / "povm_incomplete.json").string()),
                  "sim_bad.txt");
    int c2 = run("verify --trials 0", "usage.json");
    int c2b = run("simulate --state " + quote((dir / "missing.json").string()) + " --povm " +
                      quote((fixtures / "povm_z2.json").string()),
                  "sim_missing.txt");
    int c2c = run("no-such-command", "unknown.txt");
    expect(saw0, "exit code 0 not observed");
    expect(c1 == 1 && c1b == 1 && c1c == 1, "expected exit 1 for violations, got " + std::to_string(c1) + "/" +
                                                std::to_string(c1b) + "/" + std::to_string(c1c));
    expect(c2 == 2 && c2b == 2 && c2c == 2, "expected exit 2 for usage errors, got " + std::to_string(c2) + "/" +
                                                std::to_string(c2b) + "/" + std::to_string(c2c));

    // Embed round trips, on the fixtures and on freshly written random matrices.
    std::vector<fs::path> inputs = {fixtures / "qmatrix_j.json", fixtures / "qmatrix_2x3.json"};
    for (std::size_t t = 0; t < 5; ++t) {
        Rng rng(trial_seed(kMaster + 14, t));
        nlohmann::json doc = {{"schema", kSchemaVersion}};
        doc.update(qmatrix_to_json(random_ginibre(rng, 1 + t, 3)));
        fs::path p = dir / ("random" + std::to_string(t) + ".json");
        std::ofstream(p, std::ios::binary) << doc.dump(2) << '\n';
        inputs.push_back(p);
    }
    std::size_t stable = 0;
    for (const auto &in : inputs) {
        const fs::path c = dir / "c.json";
        const fs::path h = dir / "h.json";
        int e1 = exit_status(quote(exe) + " embed --direction h2c --in " + quote(in.string()) + " --out " +
                             quote(c.string()));
        int e2 = exit_status(quote(exe) + " embed --direction c2h --in " + quote(c.string()) + " --out " +
                             quote(h.string()));
        bool ok = e1 == 0 && e2 == 0 && slurp(h) == slurp(in);
        stable += ok ? 1 : 0;
        expect(ok, "embed round trip not byte-stable for " + in.filename().string());
    }
    fs::remove_all(dir);

    Outcome o;
    o.passed = problems.empty();
    o.detail = "deterministic reruns, exit codes 0/1/2 exercised, " + std::to_string(stable) + "/" +
               std::to_string(inputs.size()) + " embed round trips byte-stable";
    for (const auto &p : problems) {
        o.detail += "; " + p;
    }
    return o;
}

}  // namespace

int main(int argc, char **argv) {
    if (argc != 3) {
        std::cerr << "usage: acceptance <path-to-quatsim> <fixtures-dir>\n";
        return 2;
    }
    const auto start = Clock::now();
    try {
        report(1, "embedding laws", criterion_embedding());
        report(2, "inner-product correspondence", criterion_inner_product());
        Timed measurement = criterion_measurement();
        report(3, "measurement simulation", measurement.outcome);
        Timed channel = criterion_channel();
        Outcome channel_outcome = channel.outcome;
        const double combined = measurement.seconds + channel.seconds;
        channel_outcome.passed = channel_outcome.passed && combined < 60.0;
        channel_outcome.detail += "; criteria 3-4 took " + fmt(combined) + " s (< 60 s)";
        report(4, "channel simulation", channel_outcome);
        report(5, "spectral decomposition", criterion_spectral());
        report(6, "trace structure", criterion_trace());
        report(7, "frame-function reconstruction", criterion_frame());
        report(8, "Sp(1) to SU(2)", criterion_sp1());
        report(9, "CLI contract", criterion_cli(argv[1], argv[2]));
    } catch (const std::exception &e) {
        std::cout << "FAIL  unexpected exception: " << e.what() << std::endl;
        return 1;
    }
    std::cout << (g_failures == 0 ? "all 9 criteria passed" : std::to_string(g_failures) + " criteria failed")
              << " in " << fmt(seconds_since(start)) << " s" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
