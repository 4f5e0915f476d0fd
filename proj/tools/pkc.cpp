// pkc: command-line front end for the skyline k-center library.
//
// Exit codes: 0 success or feasible, 1 infeasible, 2 input or usage error,
// 3 bounded skyline incomplete, 4 internal error.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pkc/counters.hpp"
#include "pkc/decision.hpp"
#include "pkc/error.hpp"
#include "pkc/generate.hpp"
#include "pkc/geometry.hpp"
#include "pkc/grouped_skyline.hpp"
#include "pkc/io.hpp"
#include "pkc/optimize.hpp"
#include "pkc/oracle.hpp"
#include "pkc/report.hpp"
#include "pkc/skyline.hpp"
#include "pkc/small_k.hpp"
#include "pkc/svg.hpp"

namespace {

using namespace pkc;

enum Exit : int { kOk = 0, kInfeasible = 1, kInputError = 2, kIncomplete = 3, kInternal = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

PointSet load(const std::string& path) {
    std::vector<Point> raw = read_point_file(path);
    if (raw.empty())
        throw Error(Errc::EmptyInput, path + ": no points");
    return PointSet(std::move(raw));
}

std::string point_text(const Point& p) {
    return format_coordinate(p.x) + " " + format_coordinate(p.y);
}

std::string fixed12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
}

// ---------------------------------------------------------------- skyline

struct SkylineArgs {
    std::string file;
    std::string algo = "optimal";
};

int run_skyline(const SkylineArgs& a) {
    const PointSet pts = load(a.file);
    SkylineArray sky;
    if (a.algo == "slow") {
        sky = slow_skyline(pts);
    } else if (a.algo == "optimal") {
        sky = skyline_optimal(pts);
    } else if (a.algo == "brute") {
        sky = oracle::brute_skyline(pts);
    } else if (a.algo.rfind("bounded:", 0) == 0) {
        std::size_t s = 0;
        try {
            s = std::stoull(a.algo.substr(8));
        } catch (const std::exception&) {
            throw UsageError("bad bound in --algo " + a.algo);
        }
        BoundedResult r = skyline_bounded(pts, s);
        if (!r) {
            std::cout << "incomplete\n";
            return kIncomplete;
        }
        sky = std::move(*r);
    } else {
        throw UsageError("unknown --algo " + a.algo);
    }
    std::cout << sky.size() << '\n';
    for (const Point& p : sky)
        std::cout << point_text(p) << '\n';
    return kOk;
}

// ----------------------------------------------------------------- decide

struct DecideArgs {
    std::string file;
    std::size_t k = 0;
    double lambda = -1;
    std::string kappa;  // empty means kappa = k
    bool use_grouped = false;
};

int run_decide(const DecideArgs& a) {
    const PointSet pts = load(a.file);
    if (a.k == 0)
        throw UsageError("k must be at least 1");
    if (!(a.lambda >= 0) || !std::isfinite(a.lambda))
        throw UsageError("lambda must be a finite non-negative number");
    const double lambda_sq = a.lambda * a.lambda;
    DecisionOutcome out;
    if (a.use_grouped) {
        std::size_t kappa = a.k;
        if (!a.kappa.empty()) {
            try {
                kappa = std::stoull(a.kappa);
            } catch (const std::exception&) {
                throw UsageError("bad kappa " + a.kappa);
            }
        }
        if (kappa == 0)
            throw UsageError("kappa must be at least 1");
        out = decide_grouped(GroupedSkyline::build(pts, kappa), a.k, lambda_sq);
    } else {
        out = decide_materialized(skyline_optimal(pts), a.k, lambda_sq);
    }
    if (!out.feasible) {
        std::cout << "INCOMPLETE\n";
        return kInfeasible;
    }
    std::cout << "FEASIBLE\n";
    for (const Point& c : out.centers)
        std::cout << point_text(c) << '\n';
    return kOk;
}

// ------------------------------------------------------------------ solve

struct Solved {
    std::string method;
    std::size_t h = 0;
    double lambda_sq = 0;
    std::vector<Point> centers;
    Counters counters;
};

struct SolveArgs {
    std::string file;
    std::size_t k = 0;
    std::string method = "auto";
    std::optional<double> eps;
    bool json = false;
};

Solved solve(const PointSet& pts, std::size_t k, const std::string& method_flag,
             std::optional<double> eps_flag) {
    if (k == 0)
        throw UsageError("k must be at least 1");
    std::string method = method_flag;
    std::optional<double> eps = eps_flag;
    if (method.rfind("approx", 0) == 0) {
        if (method.size() > 6) {
            if (method[6] != ':')
                throw UsageError("unknown --method " + method);
            try {
                eps = std::stod(method.substr(7));
            } catch (const std::exception&) {
                throw UsageError("bad epsilon in --method " + method);
            }
        }
        if (!eps)
            throw UsageError("approx requires an epsilon (approx:EPS or --eps)");
        method = "approx";
    }

    Solved s;
    s.method = method;
    s.h = skyline_optimal(pts).size();
    reset_counters();
    if (method == "matrix") {
        SolveResult r = solve_via_matrix(pts, k);
        s.lambda_sq = r.lambda_star_sq;
        s.centers = std::move(r.centers);
    } else if (method == "parametric") {
        SolveResult r = parametric_search(pts, k, parametric_kappa(pts.size(), k));
        s.lambda_sq = r.lambda_star_sq;
        s.centers = std::move(r.centers);
    } else if (method == "auto") {
        SolveResult r = solve_parametric(pts, k);
        s.lambda_sq = r.lambda_star_sq;
        s.centers = std::move(r.centers);
        s.method = std::string("auto/") + to_string(r.algorithm);
    } else if (method == "one-center") {
        if (k != 1)
            throw UsageError("one-center requires k = 1");
        SolveResult r = solve_one_center(pts);
        s.lambda_sq = r.lambda_star_sq;
        s.centers = std::move(r.centers);
    } else if (method == "gonzalez") {
        Approximation r = gonzalez_2approx(pts, k);
        s.lambda_sq = r.psi_sq;
        s.centers = std::move(r.centers);
    } else if (method == "approx") {
        Approximation r = approx_solve(pts, k, *eps);
        s.lambda_sq = r.psi_sq;
        s.centers = std::move(r.centers);
        s.method = "approx:" + format_coordinate(*eps);
    } else {
        throw UsageError("unknown --method " + method);
    }
    s.counters = counters();
    return s;
}

void print_counters_kv(const Counters& c) {
    std::cout << "counter.comparisons=" << c.comparisons << '\n'
              << "counter.binary_searches=" << c.binary_searches << '\n'
              << "counter.search_probes=" << c.search_probes << '\n'
              << "counter.distance_evals=" << c.distance_evals << '\n'
              << "counter.decisions=" << c.decisions << '\n'
              << "counter.matrix_touches=" << c.matrix_touches << '\n'
              << "counter.predicate_calls=" << c.predicate_calls << '\n';
}

nlohmann::json counters_json(const Counters& c) {
    return {{"comparisons", c.comparisons},       {"binary_searches", c.binary_searches},
            {"search_probes", c.search_probes},   {"distance_evals", c.distance_evals},
            {"decisions", c.decisions},           {"matrix_touches", c.matrix_touches},
            {"predicate_calls", c.predicate_calls}};
}

int run_solve(const SolveArgs& a) {
    const PointSet pts = load(a.file);
    const Solved s = solve(pts, a.k, a.method, a.eps);
    const double lambda = std::sqrt(s.lambda_sq);
    if (a.json) {
        nlohmann::json centers = nlohmann::json::array();
        for (const Point& c : s.centers)
            centers.push_back({c.x, c.y});
        nlohmann::json j = {{"k", a.k},
                            {"h", s.h},
                            {"method", s.method},
                            {"lambda_star", lambda},
                            {"lambda_star_sq", s.lambda_sq},
                            {"centers", centers},
                            {"counters", counters_json(s.counters)},
                            {"digest", result_digest(s.centers, s.lambda_sq)}};
        std::cout << j.dump() << '\n';
        return kOk;
    }
    std::cout << "k=" << a.k << '\n'
              << "h=" << s.h << '\n'
              << "method=" << s.method << '\n'
              << "lambda_star=" << fixed12(lambda) << '\n'
              << "lambda_star_sq=" << format_coordinate(s.lambda_sq) << '\n'
              << "centers=" << s.centers.size() << '\n';
    for (const Point& c : s.centers)
        std::cout << "center=" << point_text(c) << '\n';
    print_counters_kv(s.counters);
    std::cout << "digest=" << result_digest(s.centers, s.lambda_sq) << '\n';
    return kOk;
}

// ------------------------------------------------------------------ bench

struct BenchArgs {
    std::string generator = "staircase";
    std::vector<std::size_t> ns{10000, 20000, 40000};
    std::vector<std::size_t> ks{4};
    std::vector<double> params;
    std::string method = "optimal-skyline";
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::optional<double> lambda;
    std::optional<double> eps;
    int repeats = 3;
};

RunReport bench_once(const BenchArgs& a, std::size_t n, std::size_t k, std::uint64_t seed) {
    const Generator gen = *parse_generator(a.generator);
    const PointSet pts(generate({gen, n, seed, a.params}));
    RunReport rep;
    rep.algorithm = a.method;
    rep.n = pts.size();
    rep.k = k;

    std::optional<double> lambda_sq;
    std::optional<GroupedSkyline> groups;
    if (a.method == "grouped-decide" || a.method == "decide") {
        lambda_sq = a.lambda ? *a.lambda * *a.lambda : solve_parametric(pts, k).lambda_star_sq;
        rep.lambda_or_eps = std::sqrt(*lambda_sq);
        if (a.method == "grouped-decide")
            groups = GroupedSkyline::build(pts, k);
    }
    const SkylineArray sky = skyline_optimal(pts);
    rep.h = sky.size();

    double best = INFINITY;
    for (int r = 0; r < std::max(1, a.repeats); ++r) {
        reset_counters();
        std::vector<Point> centers;
        double value_sq = 0;
        const auto t0 = std::chrono::steady_clock::now();
        if (a.method == "optimal-skyline") {
            const SkylineArray out = skyline_optimal(pts);
            centers.assign(out.begin(), out.end());
        } else if (a.method == "slow-skyline") {
            const SkylineArray out = slow_skyline(pts);
            centers.assign(out.begin(), out.end());
        } else if (a.method == "grouped-decide") {
            DecisionOutcome o = decide_grouped(*groups, k, *lambda_sq);
            centers = std::move(o.centers);
            value_sq = *lambda_sq;
        } else if (a.method == "decide") {
            DecisionOutcome o = decide_materialized(sky, k, *lambda_sq);
            centers = std::move(o.centers);
            value_sq = *lambda_sq;
        } else {
            Solved s = solve(pts, k, a.method, a.eps);
            centers = std::move(s.centers);
            value_sq = s.lambda_sq;
            if (a.eps)
                rep.lambda_or_eps = *a.eps;
        }
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
        rep.counters = counters();
        rep.digest = result_digest(centers, value_sq);
    }
    rep.seconds = best;
    return rep;
}

int run_bench(const BenchArgs& a) {
    if (!parse_generator(a.generator))
        throw UsageError("unknown generator " + a.generator);
    for (std::size_t n : a.ns)
        if (n == 0)
            throw UsageError("n = 0 rows are not allowed");
    for (std::size_t k : a.ks)
        if (k == 0)
            throw UsageError("k must be at least 1");
    static const char* const known[] = {"optimal-skyline", "slow-skyline", "grouped-decide",
                                        "decide",          "matrix",       "parametric",
                                        "auto",            "gonzalez",     "one-center"};
    bool ok = a.method.rfind("approx", 0) == 0;
    for (const char* m : known)
        ok = ok || a.method == m;
    if (!ok)
        throw UsageError("unknown --method " + a.method);

    const std::uint64_t seed = a.seed_given ? a.seed : default_seed();
    std::printf("%-8s %-6s %-4s %-16s %-12s %-12s %-14s %-10s %-10s %-10s %s\n", "n", "h", "k",
                "method", "seconds", "comparisons", "binary_search", "decisions", "ratio_t",
                "ratio_cmp", "digest");
    for (std::size_t k : a.ks) {
        std::optional<RunReport> prev;
        for (std::size_t n : a.ns) {
            const RunReport r = bench_once(a, n, k, seed);
            std::string rt = "-", rc = "-";
            if (prev && prev->seconds > 0) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.3f", r.seconds / prev->seconds);
                rt = buf;
            }
            if (prev && prev->counters.comparisons > 0) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.3f",
                              double(r.counters.comparisons) / double(prev->counters.comparisons));
                rc = buf;
            }
            std::printf("%-8zu %-6zu %-4zu %-16s %-12.6f %-12llu %-14llu %-10llu %-10s %-10s %016llx\n",
                        r.n, r.h, r.k, r.algorithm.c_str(), r.seconds,
                        static_cast<unsigned long long>(r.counters.comparisons),
                        static_cast<unsigned long long>(r.counters.binary_searches),
                        static_cast<unsigned long long>(r.counters.decisions), rt.c_str(),
                        rc.c_str(), static_cast<unsigned long long>(r.digest));
            prev = r;
        }
    }
    return kOk;
}

// -------------------------------------------------------------------- gen

struct GenArgs {
    std::string generator = "uniform-square";
    std::size_t n = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::vector<double> params;
    std::string output;
};

int run_gen(const GenArgs& a) {
    const auto gen = parse_generator(a.generator);
    if (!gen)
        throw UsageError("unknown generator " + a.generator);
    if (a.n == 0)
        throw UsageError("n must be at least 1");
    const std::uint64_t seed = a.seed_given ? a.seed : default_seed();
    const std::vector<Point> pts = generate({*gen, a.n, seed, a.params});
    if (a.output.empty() || a.output == "-") {
        write_points(std::cout, pts);
        return kOk;
    }
    std::ofstream out(a.output);
    if (!out)
        throw Error(Errc::InvalidArgument, "cannot write " + a.output);
    write_points(out, pts);
    if (!out)
        throw Error(Errc::InvalidArgument, "write failed: " + a.output);
    return kOk;
}

// ------------------------------------------------------------------- plot

struct PlotArgs {
    SolveArgs solve;
    std::string output;
};

int run_plot(const PlotArgs& a) {
    const PointSet pts = load(a.solve.file);
    const Solved s = solve(pts, a.solve.k, a.solve.method, a.solve.eps);
    const std::string svg =
        render_svg(pts.points(), skyline_optimal(pts), s.centers, std::sqrt(s.lambda_sq));
    if (a.output.empty() || a.output == "-") {
        std::cout << svg;
        return kOk;
    }
    std::ofstream out(a.output, std::ios::binary);
    if (!out)
        throw Error(Errc::InvalidArgument, "cannot write " + a.output);
    out << svg;
    if (!out)
        throw Error(Errc::InvalidArgument, "write failed: " + a.output);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Skyline k-center toolkit"};
    app.require_subcommand(1);

    SkylineArgs sk;
    auto* c_sky = app.add_subcommand("skyline", "Print the skyline of a point file");
    c_sky->add_option("file", sk.file, "Point file")->required();
    c_sky->add_option("--algo", sk.algo, "slow | bounded:S | optimal | brute");

    DecideArgs de;
    auto* c_dec = app.add_subcommand("decide", "Decide whether k disks of radius lambda suffice");
    c_dec->add_option("file", de.file, "Point file")->required();
    c_dec->add_option("-k", de.k, "Number of centers")->required();
    c_dec->add_option("-l,--lambda", de.lambda, "Radius (distance units)")->required();
    auto* grouped = c_dec->add_option("--grouped", de.kappa, "Use the grouped decider [kappa]")
                        ->expected(0, 1);

    SolveArgs so;
    auto* c_sol = app.add_subcommand("solve", "Compute the optimal (or approximate) radius");
    c_sol->add_option("file", so.file, "Point file")->required();
    c_sol->add_option("-k", so.k, "Number of centers")->required();
    c_sol->add_option("-m,--method", so.method,
                      "matrix | parametric | auto | approx:EPS | gonzalez | one-center");
    c_sol->add_option("--eps", so.eps, "Epsilon for approx");
    c_sol->add_flag("--json", so.json, "Emit one JSON object");

    BenchArgs be;
    auto* c_ben = app.add_subcommand("bench", "Scaling table over generated instances");
    c_ben->add_option("-g,--generator", be.generator,
                      "uniform-square | clustered | staircase | circle-quadrant");
    c_ben->add_option("-n", be.ns, "Instance sizes")->delimiter(',');
    c_ben->add_option("-k", be.ks, "Center counts")->delimiter(',');
    c_ben->add_option("-p,--param", be.params, "Generator parameters")->delimiter(',');
    c_ben->add_option("-m,--method", be.method,
                      "optimal-skyline | slow-skyline | decide | grouped-decide | matrix | "
                      "parametric | auto | approx:EPS | gonzalez | one-center");
    auto* bseed = c_ben->add_option("--seed", be.seed, "Generator seed");
    c_ben->add_option("-l,--lambda", be.lambda, "Radius for the decide methods");
    c_ben->add_option("--eps", be.eps, "Epsilon for approx");
    c_ben->add_option("-r,--repeats", be.repeats, "Timing repetitions (best is kept)");

    GenArgs ge;
    auto* c_gen = app.add_subcommand("gen", "Generate a seeded instance");
    c_gen->add_option("-g,--generator", ge.generator,
                      "uniform-square | clustered | staircase | circle-quadrant");
    c_gen->add_option("-n", ge.n, "Number of points")->required();
    auto* gseed = c_gen->add_option("--seed", ge.seed, "Seed (default: PARETO_KCENTER_SEED or 1)");
    c_gen->add_option("-p,--param", ge.params, "Generator parameters")->delimiter(',');
    c_gen->add_option("-o,--output", ge.output, "Output file (default stdout)");

    PlotArgs pl;
    auto* c_plot = app.add_subcommand("plot", "Render skyline and covering disks as SVG");
    c_plot->add_option("file", pl.solve.file, "Point file")->required();
    c_plot->add_option("-k", pl.solve.k, "Number of centers")->required();
    c_plot->add_option("-m,--method", pl.solve.method, "Solve method, as for solve");
    c_plot->add_option("--eps", pl.solve.eps, "Epsilon for approx");
    c_plot->add_option("-o,--output", pl.output, "SVG file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*c_sky)
            return run_skyline(sk);
        if (*c_dec) {
            de.use_grouped = grouped->count() > 0;
            return run_decide(de);
        }
        if (*c_sol)
            return run_solve(so);
        if (*c_ben) {
            be.seed_given = bseed->count() > 0;
            return run_bench(be);
        }
        if (*c_gen) {
            ge.seed_given = gseed->count() > 0;
            return run_gen(ge);
        }
        if (*c_plot)
            return run_plot(pl);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == Errc::InternalInvariantViolation ? kInternal : kInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kInternal;
}
