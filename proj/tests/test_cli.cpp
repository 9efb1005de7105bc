#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(RAMINT_BINARY) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult res{-1, {}};
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe))
        res.output += buf.data();
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("ramint_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("eval emits one row per point and exits zero") {
    const auto r = run("eval --n 2 --x 1,2,4");
    CHECK(r.exit_code == 0);
    const auto ls = lines_of(r.output);
    REQUIRE(ls.size() == 4);
    CHECK(ls[0] == "x,value,abs_error");
    for (std::size_t i = 1; i < ls.size(); ++i) {
        const auto cells = split_csv(ls[i]);
        REQUIRE(cells.size() == 3);
        CHECK(std::stod(cells[1]) > 0.0);  // even order: positive
    }
}

TEST_CASE("eval rejects a non-positive point as a usage error") {
    const auto r = run("eval --n 0 --x -1");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("x > 0") != std::string::npos);
}

TEST_CASE("bad flags exit with the configuration-failure code") {
    CHECK(run("eval --n 0").exit_code == 2);        // missing --x
    CHECK(run("nonsense").exit_code == 2);          // unknown subcommand
    CHECK(run("figure --id 9").exit_code == 2);     // unknown figure id
}

TEST_CASE("coeffs prints the closed-form values") {
    const auto r = run("coeffs --a pi --n 2 --K 2");
    CHECK(r.exit_code == 0);
    const auto ls = lines_of(r.output);
    REQUIRE(ls.size() == 4);
    CHECK(std::stod(split_csv(ls[1])[1]) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(std::stod(split_csv(ls[2])[1]) == doctest::Approx(1.0));
    CHECK(std::stod(split_csv(ls[3])[1]) == doctest::Approx(1.0 - 0.5772156649015329));

    const auto r1 = run("coeffs --a pi --n 1 --K 1");
    const auto ls1 = lines_of(r1.output);
    CHECK(std::stod(split_csv(ls1[2])[1]) == doctest::Approx(1.0));

    const auto r0 = run("coeffs --a pi --n 0 --K 1");
    const auto ls0 = lines_of(r0.output);
    CHECK(std::stod(split_csv(ls0[1])[1]) == doctest::Approx(1.0));
    CHECK(std::stod(split_csv(ls0[2])[1]) == doctest::Approx(-0.5772156649015329));
}

TEST_CASE("certificate prints one half") {
    const auto r = run("certificate");
    CHECK(r.exit_code == 0);
    const auto cells = split_csv(lines_of(r.output)[1]);
    CHECK(std::stod(cells[0]) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("verify with an only-filter and report files") {
    const auto dir = fresh_dir("verify");
    const auto r = run("--out " + dir.string() + " verify --only bernstein_certificate");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PASS bernstein_certificate") != std::string::npos);
    CHECK(fs::exists(dir / "report.txt"));
    CHECK(fs::exists(dir / "report.csv"));
    std::ifstream in(dir / "report.txt");
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("check.bernstein_certificate.passed = true") != std::string::npos);
}

TEST_CASE("verify honours a config file and fails on a missing one") {
    const auto dir = fresh_dir("verify_cfg");
    const auto cfg = dir / "suite.cfg";
    {
        std::ofstream out(cfg);
        out << "[suite]\nonly = g_lemma\n";
    }
    const auto r = run("--out " + dir.string() + " verify --config " + cfg.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PASS g_lemma") != std::string::npos);

    const auto missing = run("verify --config /no/such/file.cfg");
    CHECK(missing.exit_code == 2);
    CHECK(missing.output.find("configuration failure") != std::string::npos);
}

TEST_CASE("verify negative controls drive the exit codes") {
    const auto dir = fresh_dir("verify_neg");
    const auto cfg = dir / "neg.cfg";
    {
        std::ofstream out(cfg);
        out << "[checks]\nnegative_control_inverted = true\n"
            << "[suite]\nonly = negative_control_inverted\n";
    }
    CHECK(run("--out " + dir.string() + " verify --config " + cfg.string()).exit_code == 1);
    {
        std::ofstream out(cfg);
        out << "[checks]\nnegative_control_tolerance = true\n"
            << "[suite]\nonly = negative_control_tolerance\n";
    }
    CHECK(run("--out " + dir.string() + " verify --config " + cfg.string()).exit_code == 2);
}

TEST_CASE("figure outputs are schema-stable and rerun identical") {
    const auto dir = fresh_dir("figures");
    for (int id : {1, 2, 3, 4}) {
        const auto r = run("--out " + dir.string() + " --format both figure --id " +
                           std::to_string(id));
        CHECK(r.exit_code == 0);
        CHECK(fs::exists(dir / ("figure" + std::to_string(id) + ".csv")));
        CHECK(fs::exists(dir / ("figure" + std::to_string(id) + ".svg")));
    }
    // byte-identical rerun
    std::ifstream in1(dir / "figure1.csv");
    std::stringstream first;
    first << in1.rdbuf();
    run("--out " + dir.string() + " figure --id 1");
    std::ifstream in2(dir / "figure1.csv");
    std::stringstream second;
    second << in2.rdbuf();
    CHECK(first.str() == second.str());
    // header schema
    CHECK(first.str().rfind("t,phi1_prime\n", 0) == 0);
}

TEST_CASE("figure 1 samples the zero crossing at t = 1 exactly") {
    const auto dir = fresh_dir("fig1");
    run("--out " + dir.string() + " figure --id 1");
    std::ifstream in(dir / "figure1.csv");
    std::string line;
    std::getline(in, line);  // header
    bool saw_exact_one = false;
    while (std::getline(in, line)) {
        const auto cells = split_csv(line);
        if (cells[0] == "1") {
            saw_exact_one = true;
            CHECK(std::stod(cells[1]) == 0.0);
        }
    }
    CHECK(saw_exact_one);
}

TEST_CASE("scan-alpha emits the evidence label and a warning outside the interval") {
    const auto r = run("scan-alpha --n 3 --alpha 0.55 --x-points 4 --max-order 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("# label: evidence") != std::string::npos);
    CHECK(r.output.find("alpha,x,order,value,abs_error,sign_ok") != std::string::npos);

    const auto w = run("scan-alpha --n 3 --alpha 0.9 --x-points 3 --max-order 0");
    CHECK(w.exit_code == 0);
    CHECK(w.output.find("warning") != std::string::npos);
}

TEST_CASE("antideriv rows are increasing in x") {
    const auto r = run("antideriv --x 1,2,8");
    CHECK(r.exit_code == 0);
    const auto ls = lines_of(r.output);
    REQUIRE(ls.size() == 4);
    const double v1 = std::stod(split_csv(ls[1])[1]);
    const double v2 = std::stod(split_csv(ls[2])[1]);
    const double v3 = std::stod(split_csv(ls[3])[1]);
    CHECK(v1 < v2);
    CHECK(v2 < v3);
}

TEST_CASE("global tol override reaches the quadrature layer") {
    const auto loose = run("--tol 1e-4 eval --n 0 --x 1");
    const auto tight = run("--tol 1e-13 eval --n 0 --x 1");
    CHECK(loose.exit_code == 0);
    CHECK(tight.exit_code == 0);
    const double le = std::stod(split_csv(lines_of(loose.output)[1])[2]);
    const double te = std::stod(split_csv(lines_of(tight.output)[1])[2]);
    CHECK(te < le);
}

TEST_CASE("output directory environment override") {
    const auto dir = fresh_dir("envdir");
    const std::string cmd = std::string("RAMINT_OUTPUT_DIR=") + dir.string() + " " +
                            RAMINT_BINARY + " --out /nonexistent_ignored figure --id 3 2>&1";
    const int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(fs::exists(dir / "figure3.csv"));
}

TEST_CASE("asym-compare reports the comparison record") {
    const auto r = run("asym-compare --n 1 --x 22026.465794806718 --K 2");  // e^10
    CHECK(r.exit_code == 0);
    const auto cells = split_csv(lines_of(r.output)[1]);
    REQUIRE(cells.size() == 4);
    CHECK(std::stod(cells[2]) < 0.1);  // rel_dev small at e^10
}
