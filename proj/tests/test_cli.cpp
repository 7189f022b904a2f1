#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "rabi/sweep.hpp"

namespace {

struct Result {
    int status{-1};
    std::string out;
};

Result run(const std::string& args) {
    const std::string cmd = std::string(RABISPEC_EXE) + " " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
    return std::filesystem::temp_directory_path() /
           ("rabispec_test_" + std::to_string(::getpid()) + "_" + name);
}

const std::string kDetuningSweep =
    "sweep --axis detuning_delta --range -0.5:0.5:21 --g 0.5 --epsilon 0 --methods exact,grwa,brwa "
    "--levels 7";

}  // namespace

TEST_CASE("cli: sweep writes csv") {
    const Result r = run("sweep --axis g --range 0:1:3 --delta 1 --epsilon 0.5 --methods exact,zoa,grwa --levels 4");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("g,delta,epsilon,method,level_index,energy,n_tr_used,flag\n", 0) == 0);
    int lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK(lines == 1 + 3 * 3 * 4);
}

TEST_CASE("cli: sweep output is byte-identical across runs and thread counts") {
    const auto a = scratch("a.csv");
    const auto b = scratch("b.csv");
    CHECK(run(kDetuningSweep + " --out " + a.string()).status == 0);
    CHECK(run(kDetuningSweep + " --threads 1 --out " + b.string()).status == 0);
    const std::string first = read_file(a);
    CHECK(first.size() > 100);
    CHECK(first == read_file(b));
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}

TEST_CASE("cli: json output parses") {
    const Result r = run("sweep --axis epsilon --range 0:1:3 --g 0.3 --methods exact,vvp --levels 3 --format json");
    CHECK(r.status == 0);
    const auto records = rabi::parse_json(r.out);
    CHECK(records.size() == 3u * 2u * 3u);
    CHECK(records.back().epsilon == 1.0);
}

TEST_CASE("cli: configuration errors exit with 1") {
    CHECK(run("").status == 1);
    CHECK(run("bogus").status == 1);
    CHECK(run("sweep --axis nope").status == 1);
    CHECK(run("sweep --range 1:0:5").status == 1);
    CHECK(run("sweep --range 0:1:1").status == 1);
    CHECK(run("sweep --methods exact,magic").status == 1);
    CHECK(run("sweep --levels 0").status == 1);
    CHECK(run("sweep --format xml").status == 1);
    CHECK(run("sweep --axis g --range -1:1:3").status == 1);
    CHECK(run("sweep --delta abc").status == 1);
    CHECK(run("converge --delta -1").status == 1);
}

TEST_CASE("cli: every point failing exits with 2") {
    const Result r = run("sweep --axis g --range 0.1:0.2:2 --epsilon 0.5 --methods dsc --levels 2");
    CHECK(r.status == 2);
    CHECK(r.out.find("error:") != std::string::npos);
}

TEST_CASE("cli: converge reports the truncation used") {
    Result r = run("converge --delta 1 --epsilon 1 --g 1.5 --levels 7");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("n_tr,max_change,E0,E1,E2,E3,E4,E5,E6\n", 0) == 0);
    const auto pos = r.out.find("# converged n_tr_used=");
    REQUIRE(pos != std::string::npos);
    CHECK(std::stoi(r.out.substr(pos + 22)) <= 256);

    r = run("converge --delta 1 --g 3 --levels 7 --tol 1e-300");
    CHECK(r.status == 2);
}

TEST_CASE("cli: compare prints the error table") {
    const Result r = run("compare --axis detuning_delta --range -0.5:0.5:5 --g 0.5 --methods grwa,brwa --levels 5");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("method,level_index,max_abs_error,mean_abs_error,samples\n", 0) == 0);
    CHECK(r.out.find("\ngrwa,0,") != std::string::npos);
    CHECK(r.out.find("\nbrwa,4,") != std::string::npos);
}
