#include "acute/cli.hpp"

#include "acute/errors.hpp"
#include "acute/generate.hpp"
#include "acute/oracle.hpp"
#include "acute/partition.hpp"
#include "acute/point_io.hpp"
#include "acute/svg.hpp"
#include "acute/tour_builder.hpp"
#include "acute/verifier.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>

namespace acute::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write '" + path + "'");
    return out;
}

PointSet load_points(const RunConfig& cfg) {
    auto in = open_in(cfg.input);
    return PointSet(read_points_csv(in, cfg.scale_k));
}

int cmd_tour(const RunConfig& cfg, std::ostream& out) {
    const PointSet points = load_points(cfg);
    const std::size_t n = points.size();
    if (n % 2 != 0) {
        throw InvalidInput("an acute tour needs an even number of points, got " + std::to_string(n));
    }
    if (n < kMinTourSize) {
        throw UnsupportedSize("n = " + std::to_string(n) +
                              " is below 20; use `acute-tour oracle` for n <= 12");
    }
    Timing timing;
    auto start = Clock::now();
    const EquitablePartition partition = equitable_partition(points);
    timing.partition_ms = elapsed_ms(start);
    start = Clock::now();
    const Tour tour = construct_acute_tour(points, partition);
    timing.construct_ms = elapsed_ms(start);

    const std::string doc = tour_document(tour, n, cfg.scale_k, timing);
    if (cfg.output.empty()) {
        out << doc;
    } else {
        open_out(cfg.output) << doc;
        out << "acute " << std::boolalpha << tour.acute << "\nmax_angle_rad "
            << std::setprecision(10) << tour.max_angle.radians() << "\ncase "
            << to_string(tour.case_taken) << "\npartition_ms " << timing.partition_ms
            << "\nconstruct_ms " << timing.construct_ms << '\n';
    }
    if (!cfg.svg.empty()) {
        auto svg = open_out(cfg.svg);
        write_svg(svg, points, tour.order, partition.frame);
    }
    return ok;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const PointSet points = load_points(cfg);
    auto in = open_in(cfg.tour);
    const std::vector<std::size_t> order = read_tour(in);
    const VerificationReport report = verify_tour(points, order);
    if (!report.is_permutation) {
        err << "not a permutation of 0.." << points.size() - 1 << '\n';
        return invalid_input;
    }
    out << "acute " << std::boolalpha << report.acute << "\nmax_angle_rad "
        << std::setprecision(10) << report.max_angle.radians() << " at point "
        << report.max_angle_vertex << '\n';
    for (const Violation& v : report.violations) {
        err << "obtuse at point " << v.vertex << ": " << v.angle.radians() << " rad\n";
    }
    return report.acute ? ok : invalid_input;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
    const PointSet points = load_points(cfg);
    const OracleResult result = exhaustive_min_max_tour(points);
    out << "min_max_angle_rad " << std::fixed << std::setprecision(4)
        << result.min_max_angle.radians() << " (" << std::setprecision(12)
        << result.min_max_angle.radians() << ")\nacute_tour_exists " << std::boolalpha
        << result.acute_tour_exists << "\nbest_order";
    for (std::size_t idx : result.best_order) out << ' ' << idx;
    out << '\n';
    return ok;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
    if (cfg.n == 0) throw InvalidInput("--n must be positive");
    const auto points = generate_points(cfg.n, parse_distribution(cfg.distribution), cfg.seed,
                                        cfg.scale_k);
    if (cfg.output.empty()) {
        write_points_csv(out, points, cfg.scale_k);
    } else {
        auto file = open_out(cfg.output);
        write_points_csv(file, points, cfg.scale_k);
    }
    return ok;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
    if (cfg.sizes.empty()) throw InvalidInput("--sizes needs at least one size");
    if (cfg.runs == 0) throw InvalidInput("--runs must be positive");
    const Distribution dist = parse_distribution(cfg.distribution);
    for (std::size_t n : cfg.sizes) {
        if (n == 0) throw InvalidInput("--sizes has an empty or zero entry");
        if (n % 2 != 0) throw InvalidInput("bench sizes must be even");
        if (n < kMinTourSize) throw UnsupportedSize("bench sizes must be at least 20");
    }
    out << "n,t_partition_ms,t_construct_ms\n";
    for (std::size_t n : cfg.sizes) {
        const PointSet points(generate_points(n, dist, cfg.seed, cfg.scale_k));
        std::vector<double> t_partition, t_construct;
        for (std::size_t run = 0; run < cfg.runs; ++run) {
            auto start = Clock::now();
            const EquitablePartition partition = equitable_partition(points);
            t_partition.push_back(elapsed_ms(start));
            start = Clock::now();
            const Tour tour = construct_acute_tour(points, partition);
            t_construct.push_back(elapsed_ms(start));
            if (!tour.acute) throw InternalInvariant("bench produced a non-acute tour");
        }
        out << n << ',' << median(t_partition) << ',' << median(t_construct) << '\n';
    }
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Acute spanning tours of even planar point sets"};
    app.name("acute-tour");
    app.require_subcommand(1);

    auto add_scale = [&](CLI::App* sub) {
        sub->add_option("--scale-k", cfg.scale_k, "Decimal coordinates are scaled by 10^k")
            ->check(CLI::Range(0, kMaxScaleK));
    };

    auto* tour = app.add_subcommand("tour", "Construct an acute tour");
    tour->add_option("--input", cfg.input, "Point CSV")->required();
    tour->add_option("--output", cfg.output, "Result document (stdout if omitted)");
    tour->add_option("--svg", cfg.svg, "Also render the tour as SVG");
    add_scale(tour);

    auto* verify = app.add_subcommand("verify", "Check a tour exactly");
    verify->add_option("--input", cfg.input, "Point CSV")->required();
    verify->add_option("--tour", cfg.tour, "Result document or index list")->required();
    add_scale(verify);

    auto* oracle = app.add_subcommand("oracle", "Exhaustive min-max tour, n <= 12");
    oracle->add_option("--input", cfg.input, "Point CSV")->required();
    add_scale(oracle);

    auto* gen = app.add_subcommand("gen", "Generate a point set");
    gen->add_option("--n", cfg.n, "Number of points")->required();
    gen->add_option("--distribution", cfg.distribution,
                    "uniform, gaussian, clustered, collinear, grid or circle");
    gen->add_option("--seed", cfg.seed, "Random seed");
    gen->add_option("--output", cfg.output, "CSV path (stdout if omitted)");
    add_scale(gen);

    auto* bench = app.add_subcommand("bench", "Time partition and construction");
    bench->add_option("--sizes", cfg.sizes, "Comma-separated point counts")
        ->required()
        ->delimiter(',');
    bench->add_option("--seed", cfg.seed, "Random seed");
    bench->add_option("--runs", cfg.runs, "Repetitions per size (median reported)");
    bench->add_option("--distribution", cfg.distribution, "Point distribution");
    add_scale(bench);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "acute-tour: " << e.what() << '\n';
        return invalid_input;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();

    try {
        if (cfg.subcommand == "tour") return cmd_tour(cfg, out);
        if (cfg.subcommand == "verify") return cmd_verify(cfg, out, err);
        if (cfg.subcommand == "oracle") return cmd_oracle(cfg, out);
        if (cfg.subcommand == "gen") return cmd_gen(cfg, out);
        return cmd_bench(cfg, out);
    } catch (const UnsupportedSize& e) {
        err << "acute-tour: " << e.what() << '\n';
        return unsupported_size;
    } catch (const InvalidInput& e) {
        err << "acute-tour: " << e.what() << '\n';
        return invalid_input;
    } catch (const InternalInvariant& e) {
        err << "acute-tour: internal error: " << e.what() << '\n';
        if (!e.diagnostics().empty()) err << e.diagnostics() << '\n';
        return internal_error;
    } catch (const std::exception& e) {
        err << "acute-tour: internal error: " << e.what() << '\n';
        return internal_error;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace acute::cli
