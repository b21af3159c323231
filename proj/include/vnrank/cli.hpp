// Copyright 2026 The vnrank Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

/**
 * @file cli.hpp
 * Command dispatch for the `vnrank` tool. Kept in a header so tests can
 * drive run() with in-memory streams.
 *
 *   classify <state.json> [--oracle N] [--seed S] [--tol-rank X] [--tol-eq X] [--json] [--no-validate]
 *   lift <unitary.json> [--dim M] [--json]
 *   basis <m>
 *   bell <t1> <t2> <t3> [--json]
 *   selftest [--seed S]
 *
 * Exit status: 0 success, 1 numerical self-check failure, 2 bad input.
 */

#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "vnrank/io.hpp"
#include "vnrank/selftest.hpp"
#include "vnrank/vnrank.hpp"

namespace vnrank::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitInput = 2;

using io::Json;

namespace detail {

inline Json verdict_json(const Verdict &v) {
    return Json{{"class", to_string(v.target_class)},
                {"status", v.status()},
                {"rank", v.computed_rank},
                {"threshold", v.threshold},
                {"evidence_shape", Json::array({v.evidence.rows(), v.evidence.cols()})}};
}

inline void print_verdict(std::ostream &out, const std::string &label, const std::string &evidence,
                          const Verdict &v) {
    out << std::left << std::setw(22) << label << std::setw(14) << v.status() << "rank(" << evidence
        << ") = " << v.computed_rank << (v.ruled_out ? " > " : " <= ") << v.threshold << "\n";
}

inline Json tolerances_json(const Tolerance &tol) {
    return Json{{"rank_rel", tol.rank_rel()}, {"eq_abs", tol.eq_abs()}};
}

inline Json oracle_json(const InvarianceReport &r) {
    return Json{{"best_residual", r.best_residual},
                {"best_candidate", r.best_trial < 0 ? std::string("reduced-eigenbasis")
                                                    : "trial " + std::to_string(r.best_trial)},
                {"degenerate_reduced_spectrum", r.degenerate}};
}

struct ClassifyOptions {
    std::string path;
    int oracle_trials = 0;
    std::uint64_t seed = 0;
    double tol_rank = Tolerance::kDefaultRankRel;
    double tol_eq = Tolerance::kDefaultEqAbs;
    bool json = false;
    bool no_validate = false;
};

inline int classify(const ClassifyOptions &opt, std::ostream &out) {
    const Tolerance tol(opt.tol_rank, opt.tol_eq);
    const io::StateFile state = io::parse_state(io::read_json_file(opt.path));
    const DensityReport density = validate_density(state.rho, tol);
    if (!opt.no_validate && !density.ok()) {
        throw InvalidStateError(density.failure());
    }
    const BlochForm bf = decompose(state.rho, state.m, state.n, tol);
    const Verdict cq = check_classical_quantum(bf, tol);
    const Verdict qc = check_quantum_classical(bf, tol);
    const Verdict cc = check_classical_classical(bf, tol);
    const Verdict dk = dakic_condition(bf, tol);

    const std::string file = std::filesystem::path(opt.path).filename().string();
    Json report{{"input", Json{{"file", file}, {"m", state.m}, {"n", state.n}}},
                {"tolerances", tolerances_json(tol)},
                {"validation",
                 Json{{"hermitian", density.hermitian}, {"unit_trace", density.unit_trace}, {"psd", density.psd}}},
                {"verdicts", Json{{"classical_quantum", verdict_json(cq)},
                                  {"quantum_classical", verdict_json(qc)},
                                  {"classical_classical", verdict_json(cc)}}},
                {"dakic", verdict_json(dk)}};

    std::optional<InvarianceReport> left;
    std::optional<InvarianceReport> right;
    if (opt.oracle_trials > 0) {
        const Seed seed{opt.seed};
        left = invariance_search(state.rho, state.m, state.n, Side::left, opt.oracle_trials, derive(seed, 0));
        right = invariance_search(state.rho, state.m, state.n, Side::right, opt.oracle_trials, derive(seed, 1));
        report["oracle"] = Json{{"trials", opt.oracle_trials},
                                {"seed", opt.seed},
                                {"left", oracle_json(*left)},
                                {"right", oracle_json(*right)}};
    }

    if (opt.json) {
        out << report.dump(2) << "\n";
        return kExitOk;
    }
    out << "state: " << file << " (m=" << state.m << ", n=" << state.n << ")\n";
    out << "tolerances: rank_rel=" << tol.rank_rel() << " eq_abs=" << tol.eq_abs() << "\n";
    if (!density.ok()) {
        out << "warning: " << density.failure() << "\n";
    }
    print_verdict(out, "classical-quantum", "R|T", cq);
    print_verdict(out, "quantum-classical", "S|T^T", qc);
    print_verdict(out, "classical-classical", "[[1,S^T],[R,T]]", cc);
    print_verdict(out, "dakic (baseline)", "[[1,S^T],[R,T]]", dk);
    if (left && right) {
        out << "invariance search (" << opt.oracle_trials << " trials): left best residual " << left->best_residual
            << ", right best residual " << right->best_residual << "\n";
    }
    out << "note: RULED-OUT excludes the class; INCONCLUSIVE does not certify it\n";
    return kExitOk;
}

inline int lift(const std::string &path, int dim, bool json, std::ostream &out) {
    const Tolerance tol;
    const ComplexMatrix u = io::parse_unitary(io::read_json_file(path));
    if (dim > 0 && dim != u.rows()) {
        std::ostringstream os;
        os << "--dim " << dim << " does not match the " << u.rows() << "x" << u.rows() << " unitary";
        throw ShapeError(os.str());
    }
    if (u.rows() < 2) {
        throw DomainError("lift: measurement dimension must be at least 2");
    }
    const auto meas = VonNeumannMeasurement::from_unitary(u, tol);
    const auto lifted = lift_matrix(meas, gell_mann_basis(meas.dim()), tol);
    const int rank = numerical_rank(lifted.matrix, tol);
    const double defect = lifted.idempotency_defect();
    const bool healthy = rank == meas.dim() - 1 && defect <= tol.eq_abs();

    if (json) {
        Json labels = Json::array();
        for (const auto &l : lifted.basis_labels) {
            labels.push_back(l.to_string());
        }
        out << Json{{"m", meas.dim()},
                    {"basis", labels},
                    {"matrix", io::to_json(lifted.matrix)},
                    {"rank", rank},
                    {"expected_rank", meas.dim() - 1},
                    {"idempotency_defect", defect}}
                   .dump(2)
            << "\n";
    } else {
        const Eigen::IOFormat fmt(6, 0, "  ", "\n", "  [", "]");
        out << "M (" << lifted.matrix.rows() << "x" << lifted.matrix.cols()
            << ", generalized Gell-Mann basis):\n"
            << lifted.matrix.unaryExpr([](double v) { return std::abs(v) < 1e-14 ? 0.0 : v; }).format(fmt)
            << "\n";
        out << "rank: " << rank << " (expected " << meas.dim() - 1 << ")\n";
        out << "||M^2 - M||_F: " << defect << "\n";
    }
    return healthy ? kExitOk : kExitNumerical;
}

inline int bell(double t1, double t2, double t3, bool json, std::ostream &out) {
    const Tolerance tol;
    const BellDiagonalSpec spec{t1, t2, t3};
    const BellDiagonalResult r = classify_bell_diagonal(spec, tol);
    const BlochForm bf = decompose(bell_diagonal_state(spec), 2, 2, tol);
    const Verdict cq = check_classical_quantum(bf, tol);
    const Verdict qc = check_quantum_classical(bf, tol);
    const Verdict cc = check_classical_classical(bf, tol);
    const std::string summary = r.verdict_qq ? "quantum-quantum" : "classical-classical";
    if (json) {
        out << Json{{"t", Json::array({t1, t2, t3})},
                    {"nonzero_count", r.nonzero_count},
                    {"verdict_qq", r.verdict_qq},
                    {"separable", r.separable},
                    {"correlation", summary},
                    {"verdicts", Json{{"classical_quantum", verdict_json(cq)},
                                      {"quantum_classical", verdict_json(qc)},
                                      {"classical_classical", verdict_json(cc)}}}}
                   .dump(2)
            << "\n";
        return kExitOk;
    }
    out << "t = (" << t1 << ", " << t2 << ", " << t3 << ")\n";
    out << "correlation: " << summary << " (" << r.nonzero_count << " nonzero t_i)\n";
    out << "separable: " << (r.separable ? "true" : "false") << "\n";
    print_verdict(out, "classical-quantum", "R|T", cq);
    print_verdict(out, "quantum-classical", "S|T^T", qc);
    print_verdict(out, "classical-classical", "[[1,S^T],[R,T]]", cc);
    return kExitOk;
}

inline int selftest_cmd(std::uint64_t seed, std::ostream &out) {
    const auto results = selftest::run(Seed{seed});
    int failed = 0;
    for (const auto &r : results) {
        out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(68) << r.name << r.detail << "\n";
        failed += r.passed ? 0 : 1;
    }
    out << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " checks passed\n";
    return failed == 0 ? kExitOk : kExitNumerical;
}

} // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Rank screens for zero quantum correlation via lifted von Neumann measurements", "vnrank"};
    app.require_subcommand(1);

    detail::ClassifyOptions copt;
    auto *classify = app.add_subcommand("classify", "Screen a bipartite state for classical correlations");
    classify->add_option("state", copt.path, "State JSON file")->required();
    classify->add_option("--oracle", copt.oracle_trials, "Run the invariance search with this many trials")
        ->check(CLI::NonNegativeNumber);
    classify->add_option("--seed", copt.seed, "Seed for the invariance search");
    classify->add_option("--tol-rank", copt.tol_rank, "Relative singular-value cutoff");
    classify->add_option("--tol-eq", copt.tol_eq, "Absolute equality cutoff");
    classify->add_flag("--json", copt.json, "Emit the report as JSON");
    classify->add_flag("--no-validate", copt.no_validate, "Skip density-matrix validation");

    std::string unitary_path;
    int dim = 0;
    bool lift_json = false;
    auto *lift = app.add_subcommand("lift", "Lift a measurement to its (m^2-1)x(m^2-1) matrix");
    lift->add_option("unitary", unitary_path, "Unitary JSON file")->required();
    lift->add_option("--dim", dim, "Expected dimension m")->check(CLI::PositiveNumber);
    lift->add_flag("--json", lift_json, "Emit JSON");

    int basis_dim = 0;
    auto *basis = app.add_subcommand("basis", "Print the generalized Gell-Mann basis as JSON");
    basis->add_option("m", basis_dim, "Dimension")->required();

    std::vector<double> t;
    bool bell_json = false;
    auto *bell = app.add_subcommand("bell", "Classify a Bell-diagonal state (t1, t2, t3)");
    bell->add_option("t", t, "t1 t2 t3")->required()->expected(3);
    bell->add_flag("--json", bell_json, "Emit JSON");

    std::uint64_t st_seed = 20240601;
    auto *self = app.add_subcommand("selftest", "Run the built-in property corpus");
    self->add_option("--seed", st_seed, "Corpus seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (*classify) {
            return detail::classify(copt, out);
        }
        if (*lift) {
            return detail::lift(unitary_path, dim, lift_json, out);
        }
        if (*basis) {
            out << io::to_json(gell_mann_basis(basis_dim)).dump(2) << "\n";
            return kExitOk;
        }
        if (*bell) {
            return detail::bell(t[0], t[1], t[2], bell_json, out);
        }
        if (*self) {
            return detail::selftest_cmd(st_seed, out);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

} // namespace vnrank::cli
