#include "acute/cli.hpp"
#include "acute/generate.hpp"
#include "acute/point_io.hpp"

#include <doctest.h>

#include <json.hpp>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace fs = std::filesystem;
using namespace acute;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = fs::temp_directory_path() /
                ("acute_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_csv(const std::string& path, const std::vector<Point>& pts, int k = 6) {
    std::ofstream out(path);
    write_points_csv(out, pts, k);
}

}  // namespace

TEST_CASE("tour on a valid 20-point file") {
    TempDir dir;
    write_csv(dir.file("p.csv"), generate_points(20, Distribution::uniform, 7));
    const Result r = run({"tour", "--input", dir.file("p.csv"), "--output", dir.file("t.json"),
                          "--svg", dir.file("t.svg")});
    CHECK(r.code == 0);
    CHECK(r.out.find("max_angle_rad") != std::string::npos);
    CHECK(r.out.find("partition_ms") != std::string::npos);
    const auto doc = nlohmann::json::parse(slurp(dir.file("t.json")));
    CHECK(doc["result"]["acute"] == true);
    CHECK(doc["result"]["order"].size() == 20);
    CHECK(doc["result"]["scale_k"] == 6);

    const std::string svg = slurp(dir.file("t.svg"));
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("width=\"1000\"") != std::string::npos);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);
    CHECK(svg.find("<polygon") != std::string::npos);

    CHECK(run({"verify", "--input", dir.file("p.csv"), "--tour", dir.file("t.json")}).code == 0);
}

TEST_CASE("tour exit codes") {
    TempDir dir;
    write_csv(dir.file("odd.csv"), generate_points(21, Distribution::uniform, 1));
    CHECK(run({"tour", "--input", dir.file("odd.csv")}).code == 1);

    write_csv(dir.file("sixteen.csv"), generate_points(16, Distribution::uniform, 1));
    const Result small = run({"tour", "--input", dir.file("sixteen.csv")});
    CHECK(small.code == 2);
    CHECK(small.err.find("oracle") != std::string::npos);

    CHECK(run({"tour", "--input", dir.file("missing.csv")}).code == 1);
    std::ofstream(dir.file("garbage.csv")) << "1,2\nhello\n";
    CHECK(run({"tour", "--input", dir.file("garbage.csv")}).code == 1);
    std::ofstream(dir.file("dup.csv")) << "1,2\n1.0000001,2\n";  // equal after rounding
    CHECK(run({"tour", "--input", dir.file("dup.csv")}).code == 1);
    CHECK(run({"tour"}).code == 1);
    CHECK(run({"nonsense"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"tour", "--input", dir.file("odd.csv"), "--scale-k", "12"}).code == 1);
}

TEST_CASE("tour writes the document to stdout without --output") {
    TempDir dir;
    write_csv(dir.file("p.csv"), generate_points(24, Distribution::circle, 2));
    const Result r = run({"tour", "--input", dir.file("p.csv")});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["result"]["acute"] == true);
}

TEST_CASE("verify") {
    TempDir dir;
    write_csv(dir.file("line.csv"), {{0, 0}, {1, 0}, {2, 0}, {3, 0}}, 0);
    std::ofstream(dir.file("sorted.txt")) << "0 1 2 3\n";
    std::ofstream(dir.file("zigzag.txt")) << "0,2,1,3\n";
    std::ofstream(dir.file("repeat.txt")) << "0 1 1 3\n";
    std::ofstream(dir.file("short.txt")) << "0 1 2\n";
    const std::string in = dir.file("line.csv");

    const Result obtuse = run({"verify", "--input", in, "--tour", dir.file("sorted.txt"), "--scale-k", "0"});
    CHECK(obtuse.code == 1);
    CHECK(obtuse.err.find("obtuse at point 1") != std::string::npos);
    CHECK(obtuse.err.find("obtuse at point 2") != std::string::npos);

    CHECK(run({"verify", "--input", in, "--tour", dir.file("zigzag.txt"), "--scale-k", "0"}).code == 0);
    CHECK(run({"verify", "--input", in, "--tour", dir.file("repeat.txt"), "--scale-k", "0"}).code == 1);
    CHECK(run({"verify", "--input", in, "--tour", dir.file("short.txt"), "--scale-k", "0"}).code == 1);
}

TEST_CASE("oracle") {
    TempDir dir;
    std::ofstream(dir.file("tri.csv")) << "0,0\n1,0\n0.5,0.866025\n0.5,0.288675\n";
    const Result tri = run({"oracle", "--input", dir.file("tri.csv")});
    CHECK(tri.code == 0);
    CHECK(tri.out.find("min_max_angle_rad 2.0944") != std::string::npos);
    CHECK(tri.out.find("acute_tour_exists false") != std::string::npos);

    std::ofstream(dir.file("square.csv")) << "0,0\n1,0\n1,1\n0,1\n";
    const Result square = run({"oracle", "--input", dir.file("square.csv")});
    CHECK(square.code == 0);
    CHECK(square.out.find("min_max_angle_rad 0.7854") != std::string::npos);
    CHECK(square.out.find("best_order 0 1 3 2") != std::string::npos);

    write_csv(dir.file("13.csv"), generate_points(13, Distribution::uniform, 1));
    CHECK(run({"oracle", "--input", dir.file("13.csv")}).code == 2);
}

TEST_CASE("gen") {
    TempDir dir;
    CHECK(run({"gen", "--n", "20", "--distribution", "uniform", "--seed", "7", "--output",
               dir.file("a.csv")}).code == 0);
    CHECK(run({"gen", "--n", "20", "--distribution", "uniform", "--seed", "7", "--output",
               dir.file("b.csv")}).code == 0);
    CHECK(slurp(dir.file("a.csv")) == slurp(dir.file("b.csv")));

    const Result line = run({"gen", "--n", "20", "--distribution", "collinear", "--seed", "3"});
    CHECK(line.code == 0);
    std::istringstream in(line.out);
    const auto pts = read_points_csv(in, 6);
    REQUIRE(pts.size() == 20);
    CHECK(std::set<Point>(pts.begin(), pts.end()).size() == 20);
    for (const Point& p : pts) CHECK(orientation(pts[0], pts[1], p) == Orientation::collinear);

    CHECK(run({"gen", "--n", "20", "--distribution", "spiral"}).code == 1);
    CHECK(run({"gen", "--n", "0"}).code == 1);
    CHECK(run({"gen", "--n", "-4"}).code == 1);
    CHECK(run({"gen"}).code == 1);
}

TEST_CASE("gen handles a million points") {
    TempDir dir;
    CHECK(run({"gen", "--n", "1000000", "--seed", "1", "--output", dir.file("big.csv")}).code == 0);
    std::ifstream in(dir.file("big.csv"));
    std::size_t rows = 0;
    std::string line;
    while (std::getline(in, line)) rows += !line.empty() && line != "x,y";
    CHECK(rows == 1'000'000);
}

TEST_CASE("bench") {
    const Result one = run({"bench", "--sizes", "200"});
    CHECK(one.code == 0);
    std::istringstream rows(one.out);
    std::string header, row, extra;
    std::getline(rows, header);
    std::getline(rows, row);
    CHECK(header == "n,t_partition_ms,t_construct_ms");
    CHECK(row.rfind("200,", 0) == 0);
    CHECK_FALSE(std::getline(rows, extra));

    CHECK(run({"bench", "--sizes", ""}).code == 1);
    CHECK(run({"bench"}).code == 1);
    CHECK(run({"bench", "--sizes", "21"}).code == 1);
    CHECK(run({"bench", "--sizes", "18"}).code == 2);
}

TEST_CASE("gen, tour and verify round trip") {
    TempDir dir;
    int passed = 0;
    for (int run_id = 0; run_id < 100; ++run_id) {
        const Distribution d = kDistributions[static_cast<std::size_t>(run_id) % kDistributions.size()];
        const std::string n = std::to_string(20 + 2 * (run_id % 40));
        const std::string seed = std::to_string(run_id);
        const std::string pts = dir.file("p.csv"), tour = dir.file("t.json");
        const bool ok =
            run({"gen", "--n", n, "--distribution", std::string(to_string(d)), "--seed", seed,
                 "--output", pts}).code == 0 &&
            run({"tour", "--input", pts, "--output", tour}).code == 0 &&
            run({"verify", "--input", pts, "--tour", tour}).code == 0;
        passed += ok;
    }
    CHECK(passed == 100);
}

TEST_CASE("result section is byte-identical across runs") {
    TempDir dir;
    write_csv(dir.file("p.csv"), generate_points(120, Distribution::clustered, 5));
    const std::string a = run({"tour", "--input", dir.file("p.csv")}).out;
    const std::string b = run({"tour", "--input", dir.file("p.csv")}).out;
    CHECK(nlohmann::json::parse(a)["result"].dump() == nlohmann::json::parse(b)["result"].dump());
    CHECK(a.substr(0, a.find("\"timing\"")) == b.substr(0, b.find("\"timing\"")));
}

TEST_CASE("help exits cleanly") {
    const Result r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("tour") != std::string::npos);
}
