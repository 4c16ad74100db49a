#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <dnalex/cli.hpp>

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "dnalex");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = dnalex::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("dnalex_test_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream b;
    b << in.rdbuf();
    return b.str();
}

}  // namespace

TEST_CASE("construct summaries") {
    const auto dir = scratch("construct").string();
    auto r = run({"--out-dir", dir, "construct", "-n", "8", "-P", "gc>=4&hw>=4"});
    CHECK(r.code == 0);
    CHECK(r.out == "n=8 size=64 dH=4 minGC=4 gens=3\n");
    r = run({"--out-dir", dir, "construct", "-n", "4", "-P", "false"});
    CHECK(r.out.starts_with("n=4 size=1 "));
    r = run({"--out-dir", dir, "construct", "-n", "10", "-P", "gc>=10"});
    CHECK(r.out == "n=10 size=1024 dH=1 minGC=10 gens=10\n");
    r = run({"--out-dir", dir, "--json", "construct", "-n", "4", "-P", "gc>=4"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["size"] == 16);
    CHECK(j["verified"] == true);
}

TEST_CASE("construct then verify round trip") {
    const auto dir = scratch("verify");
    const auto file = (dir / "code.txt").string();
    CHECK(run({"--out-dir", dir.string(), "construct", "-n", "8", "-P", "gc>=4&hw>=4", "-o", file}).code == 0);
    auto r = run({"verify", file, "gc>=4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("result=PASS") != std::string::npos);
    r = run({"verify", file, "gc>=5"});
    CHECK(r.code == dnalex::cli::kExitVerifyFailed);
    CHECK(r.out.find("property violation") != std::string::npos);
    // A DNA-format file verifies as well.
    const auto dna = (dir / "code_dna.txt").string();
    CHECK(run({"--out-dir", dir.string(), "construct", "-n", "6", "-P", "gc>=3", "--dna", "-o", dna}).code == 0);
    CHECK(run({"verify", dna}).code == 0);
}

TEST_CASE("distance command") {
    CHECK(run({"distance", "GGGG", "GCGC"}).out == "2\n");
    CHECK(run({"distance", "", ""}).out == "0\n");
    CHECK(run({"distance", "ACTG", "ACTG", "--metric", "hamming"}).out == "0\n");
    CHECK(run({"distance", "0000", "0202"}).out == "2\n");
    const auto t = run({"distance", "GAT", "GT", "--transcript"});
    CHECK(t.out.starts_with("1\n"));
    CHECK(t.out.find("delete") != std::string::npos);
    CHECK(run({"distance", "ACXG", "A"}).code == 2);
    CHECK(run({"distance", "AC", "A", "--metric", "hamming"}).code == 2);
}

TEST_CASE("convert command is a bijection") {
    CHECK(run({"convert", "21111000", "--to", "dna"}).out == "CAAAAGGG\n");
    CHECK(run({"convert", "CAAAAGGG", "--to", "z4"}).out == "21111000\n");
    CHECK(run({"convert", "CAAAAGGG", "--to", "fasta"}).out == ">cw0\nCAAAAGGG\n");
    const auto dir = scratch("convert");
    const auto file = (dir / "c.txt").string();
    run({"--out-dir", dir.string(), "construct", "-n", "5", "-P", "gc>=3", "-o", file});
    const auto dna = (dir / "c.dna").string();
    run({"convert", file, "--to", "dna", "-o", dna});
    CHECK(run({"convert", dna, "--to", "z4"}).out == slurp(file));
    CHECK(run({"convert", "0125", "--to", "dna"}).code == 2);
}

TEST_CASE("bounds command") {
    const auto dir = scratch("bounds").string();
    auto r = run({"--out-dir", dir, "bounds", "-n", "2", "-d", "1", "-w", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("= 8 exact") != std::string::npos);
    r = run({"--out-dir", dir, "bounds", "-n", "1", "-d", "2", "-w", "0"});
    CHECK(r.out.find("= 1 exact") != std::string::npos);
    r = run({"--out-dir", dir, "bounds", "-n", "1..3", "-d", "1..3", "-w", "all", "--metric", "edit", "--check-relations"});
    CHECK(r.code == 0);
    CHECK(r.out.find("eq2 [edit]: pass=") != std::string::npos);
    CHECK(r.out.find("eq2 [edit]: pass=29 fail=0") != std::string::npos);
    CHECK(fs::exists(fs::path(dir) / "relations.txt"));
    r = run({"--out-dir", dir, "bounds", "export", "--table"});
    CHECK(r.code == 0);
    CHECK(r.out.find("metric=edit") != std::string::npos);
    CHECK(run({"--out-dir", dir, "bounds", "-n", "7", "-d", "3", "-w", "3"}).code == 3);
    CHECK(run({"--out-dir", dir, "bounds", "-n", "7", "-d", "3", "-w", "3", "--allow-gap"}).code == 0);
    CHECK(run({"--out-dir", dir, "bounds", "-n", "x", "-d", "1"}).code == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"construct", "-n", "4", "-P", "foo"}).code == 2);
    CHECK(run({"construct", "-n", "4", "-P", "gc>=9"}).code == 2);
    CHECK(run({"construct", "-n", "4", "--mode", "sideways"}).code == 2);
    CHECK(run({"tables", "7"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output directory falls back to the environment variable") {
    const auto dir = scratch("env");
    ::setenv(dnalex::cli::kOutputDirEnv, dir.string().c_str(), 1);
    CHECK(run({"construct", "-n", "3", "-P", "gc>=3"}).code == 0);
    ::unsetenv(dnalex::cli::kOutputDirEnv);
    CHECK(fs::exists(dir / "lexicode_n3.txt"));
    CHECK(fs::exists(dir / dnalex::cli::kSidecarLog));
}

TEST_CASE("tables 4 surfaces the known discrepancy") {
    const auto r = run({"tables", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FINDING printed generator 2222") != std::string::npos);
}
