// Command-line front end: solve, dual, certify, check-best, and gen
// subcommands. Reports go to stdout as a single JSON object; diagnostics go
// to stderr. Exit codes: 0 success, 2 malformed input, 3 method needs a
// product space, 4 internal solver failure, 5 inadmissible sign pattern,
// 6 zero residual (the candidate interpolates f).

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "boltcheb/bolt.hpp"
#include "boltcheb/boltgraph.hpp"
#include "boltcheb/errors.hpp"
#include "boltcheb/io.hpp"
#include "boltcheb/rng.hpp"
#include "boltcheb/solver.hpp"
#include "boltcheb/space.hpp"
#include "boltcheb/version.hpp"

namespace {

using nlohmann::json;
using namespace boltcheb;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        const auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

json bolt_to_json(const Bolt& b) {
    return json{{"points", b.points}, {"closed", b.closed}};
}

json base_report(const char* operation, const FiniteQuotientSpace& sp) {
    json j;
    j["tool"] = "boltcheb";
    j["version"] = BOLTCHEB_VERSION;
    j["operation"] = operation;
    j["instance"] = json{{"n", sp.n()}, {"n_s", sp.n_s}, {"n_p", sp.n_p}};
    return j;
}

void emit(json report, const Timer& timer) {
    report["timing_ms"] = timer.ms();
    std::cout << report.dump(2) << std::endl;
}

SampledFunction require_f(const SpaceFile& sf, const std::string& path) {
    if (!sf.f) throw InputError(path + ": this operation needs \"f\" values in the space file");
    return *sf.f;
}

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const NotProductSpaceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const SignViolationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const ZeroResidualError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 6;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}

int cmd_solve(const std::string& input, const std::string& method, double tol, int max_sweeps) {
    const Timer timer;
    const SpaceFile sf = load_space_file(input);
    const SampledFunction f = require_f(sf, input);
    const ApproxSolution sol = method == "ds" ? solve_ds(sf.space, f, tol, max_sweeps)
                                              : solve_lp(sf.space, f);
    const DualResult dual = max_mean_cycle(build_graph(sf.space, f));

    json rep = base_report("solve", sf.space);
    rep["method"] = method;
    rep["error"] = sol.error;
    rep["dual_value"] = sol.dual_value;
    rep["witness"] = json{{"g", sol.witness.g}, {"h", sol.witness.h}};
    rep["dual_witness"] = dual.witness ? bolt_to_json(*dual.witness) : json(nullptr);
    rep["no_cycle"] = dual.no_cycle;
    emit(std::move(rep), timer);
    return 0;
}

int cmd_dual(const std::string& input) {
    const Timer timer;
    const SpaceFile sf = load_space_file(input);
    const SampledFunction f = require_f(sf, input);
    const DualResult dual = max_mean_cycle(build_graph(sf.space, f));

    json rep = base_report("dual", sf.space);
    rep["value"] = dual.value;
    rep["no_cycle"] = dual.no_cycle;
    rep["witness"] = dual.witness ? bolt_to_json(*dual.witness) : json(nullptr);
    emit(std::move(rep), timer);
    return 0;
}

int cmd_certify(const std::string& input, const std::string& bolt_path,
                const std::string& u_path, double tol) {
    const Timer timer;
    const SpaceFile sf = load_space_file(input);
    const SampledFunction f = require_f(sf, input);
    const Bolt bolt = load_bolt_file(bolt_path, sf.space);
    const SumElement u = load_sum_file(u_path, sf.space);

    const double bound = dvp_bound(sf.space, f, u, bolt);
    const ApproxSolution sol = solve_lp(sf.space, f);

    json rep = base_report("certify", sf.space);
    rep["bound"] = bound;
    rep["error"] = sol.error;
    rep["sound"] = bound <= sol.error + tol;
    rep["bolt"] = bolt_to_json(bolt);
    emit(std::move(rep), timer);
    return 0;
}

int cmd_check_best(const std::string& input, const std::string& u_path, double tol) {
    const Timer timer;
    const SpaceFile sf = load_space_file(input);
    const SampledFunction f = require_f(sf, input);
    const SumElement u = load_sum_file(u_path, sf.space);

    const SampledFunction ue = evaluate_sum(sf.space, u);
    SampledFunction residual;
    residual.values.resize(f.values.size());
    double norm = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        residual.values[i] = f.values[i] - ue.values[i];
        norm = std::max(norm, std::abs(residual.values[i]));
    }

    json rep = base_report("check-best", sf.space);
    rep["residual_norm"] = norm;
    if (norm == 0.0) {
        // The candidate interpolates f, so it is trivially best with E = 0.
        rep["best"] = true;
        rep["interpolating"] = true;
        rep["extremal_bolt"] = json(nullptr);
        emit(std::move(rep), timer);
        return 6;
    }
    const std::optional<Bolt> found = find_extremal_bolt(sf.space, residual, tol);
    rep["best"] = found.has_value();
    rep["interpolating"] = false;
    rep["extremal_bolt"] = found ? bolt_to_json(*found) : json(nullptr);
    emit(std::move(rep), timer);
    return 0;
}

SampledFunction gen_function(const FiniteQuotientSpace& sp, const std::string& fn,
                             DeterministicRng& rng) {
    SampledFunction f;
    f.values.resize(sp.s_class.size());
    if (fn == "random") {
        for (double& v : f.values) v = rng.uniform(-1.0, 1.0);
        return f;
    }
    if (!sp.coords) {
        throw InputError("gen: function \"" + fn + "\" needs point coordinates");
    }
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const auto& x = (*sp.coords)[i];
        if (fn == "product") {
            double prod = 1.0;
            for (double xk : x) prod *= xk;
            f.values[i] = prod;
        } else {  // runge
            double sq = 0.0;
            for (double xk : x) sq += xk * xk;
            f.values[i] = 1.0 / (1.0 + 25.0 * sq);
        }
    }
    return f;
}

int cmd_gen(const std::string& kind, int nx, int ny, int n, const std::string& fn,
            std::uint64_t seed, double eps, const std::vector<double>& dir_a,
            const std::vector<double>& dir_b, const std::string& output) {
    const Timer timer;
    DeterministicRng rng(seed);
    FiniteQuotientSpace sp;
    if (kind == "grid") {
        sp = build_grid(nx, ny);
    } else if (kind == "ridge") {
        if (n < 1) throw InputError("gen ridge: --n must be at least 1");
        std::vector<std::vector<double>> pts(n);
        for (auto& pt : pts) pt = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        sp = build_ridge(pts, dir_a, dir_b, eps);
    } else {  // random
        if (n < 1) throw InputError("gen random: --n must be at least 1");
        const int label_span = std::max(1, (n + 1) / 2);
        std::vector<long long> s(n), p(n);
        for (int i = 0; i < n; ++i) s[i] = rng.uniform_int(0, label_span - 1);
        for (int i = 0; i < n; ++i) p[i] = rng.uniform_int(0, label_span - 1);
        sp = build_explicit(s, p);
    }
    const SampledFunction f = gen_function(sp, fn, rng);
    save_space_file(output, sp, f);

    json rep = base_report("gen", sp);
    rep["kind"] = kind;
    rep["fn"] = fn;
    rep["seed"] = seed;
    rep["output"] = output;
    emit(std::move(rep), timer);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"best uniform approximation by sums from two function algebras"};
    app.set_version_flag("--version", BOLTCHEB_VERSION);
    app.require_subcommand(1);

    std::string input, bolt_path, u_path, output, method = "lp", kind, fn = "random";
    double tol = 1e-9, eps = 1e-9;
    int max_sweeps = 10000, nx = 2, ny = 2, n = 8;
    std::uint64_t seed = 0;
    std::vector<double> dir_a = {1.0, 0.0}, dir_b = {0.0, 1.0};

    CLI::App* solve = app.add_subcommand("solve", "compute E(f) and a best approximation");
    solve->add_option("input", input, "space file with \"f\"")->required();
    solve->add_option("--method", method, "lp or ds")
        ->check(CLI::IsMember({"lp", "ds"}))
        ->capture_default_str();
    solve->add_option("--tol", tol, "sweep stopping tolerance")->capture_default_str();
    solve->add_option("--max-sweeps", max_sweeps, "sweep limit for ds")->capture_default_str();

    CLI::App* dual = app.add_subcommand("dual", "maximize the bolt functional over closed bolts");
    dual->add_option("input", input, "space file with \"f\"")->required();

    CLI::App* certify = app.add_subcommand("certify", "lower bound from a closed bolt and a candidate u");
    certify->add_option("input", input, "space file with \"f\"")->required();
    certify->add_option("bolt", bolt_path, "bolt file")->required();
    certify->add_option("u", u_path, "sum element file")->required();
    certify->add_option("--tol", tol, "soundness slack")->capture_default_str();

    CLI::App* check = app.add_subcommand("check-best", "decide whether u is a best approximation");
    check->add_option("input", input, "space file with \"f\"")->required();
    check->add_option("u", u_path, "sum element file")->required();
    check->add_option("--tol", tol, "extremal-point slack")->capture_default_str();

    CLI::App* gen = app.add_subcommand("gen", "write a sample space file");
    gen->add_option("kind", kind, "grid, ridge, or random")
        ->check(CLI::IsMember({"grid", "ridge", "random"}))
        ->required();
    gen->add_option("--nx", nx, "grid rows")->capture_default_str();
    gen->add_option("--ny", ny, "grid columns")->capture_default_str();
    gen->add_option("--n", n, "point count for ridge/random")->capture_default_str();
    gen->add_option("--fn", fn, "product, runge, or random")
        ->check(CLI::IsMember({"product", "runge", "random"}))
        ->capture_default_str();
    gen->add_option("--seed", seed, "generator seed")->capture_default_str();
    gen->add_option("--eps", eps, "ridge class-chaining gap")->capture_default_str();
    gen->add_option("--ax", dir_a[0], "ridge direction a, first component")->capture_default_str();
    gen->add_option("--ay", dir_a[1], "ridge direction a, second component")->capture_default_str();
    gen->add_option("--bx", dir_b[0], "ridge direction b, first component")->capture_default_str();
    gen->add_option("--by", dir_b[1], "ridge direction b, second component")->capture_default_str();
    gen->add_option("--output", output, "destination path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (solve->parsed()) {
        return guarded([&] { return cmd_solve(input, method, tol, max_sweeps); });
    }
    if (dual->parsed()) {
        return guarded([&] { return cmd_dual(input); });
    }
    if (certify->parsed()) {
        return guarded([&] { return cmd_certify(input, bolt_path, u_path, tol); });
    }
    if (check->parsed()) {
        return guarded([&] { return cmd_check_best(input, u_path, tol); });
    }
    return guarded([&] {
        return cmd_gen(kind, nx, ny, n, fn, seed, eps, dir_a, dir_b, output);
    });
}
