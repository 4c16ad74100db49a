#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <dnalex/tables.hpp>

using namespace dnalex;

TEST_CASE("transcriptions load and are pinned by checksums") {
    const auto t1 = load_table1();
    REQUIRE(t1.size() == 4);
    CHECK(t1[0].n == 8);
    CHECK(t1[0].generators.size() == 3);
    CHECK(t1[0].generators[0] == Z4Vector::parse("21111000"));
    CHECK(t1[3].generators.size() == 12);
    CHECK(load_strand_table("table2.txt").size() == 64);
    CHECK(load_strand_table("table3.txt").size() == 64);
    const auto t4 = load_table4();
    REQUIRE(t4.size() == 2);
    CHECK(t4[0].ref.str() == "GGGG");
}

TEST_CASE("a modified transcription is rejected") {
    const auto dir = std::filesystem::temp_directory_path() / "dnalex_test_tables";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir / "reference_tables");
    for (const auto& e : std::filesystem::directory_iterator(default_data_dir() / "reference_tables"))
        std::filesystem::copy_file(e.path(), dir / "reference_tables" / e.path().filename());
    CHECK_NOTHROW(load_table1(dir));
    std::ofstream(dir / "reference_tables" / "table1.txt", std::ios::app) << "# edited\n";
    CHECK_THROWS_AS(load_table1(dir), usage_error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("FNV-1a reference values") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("diagonal rows reproduce exactly") {
    const auto rows = load_table1();
    for (std::size_t k : {2u, 3u}) {
        const auto r = reproduce_table1_row(rows[k], table1_modes(rows[k]));
        REQUIRE(r.modes.size() == 1);
        CHECK(r.mode(CheckMode::full_check).generators_exact);
        CHECK(r.mode(CheckMode::full_check).parameters_match);
    }
}

TEST_CASE("row 1: parameters match in full-check mode, both modes are reported") {
    const auto row = load_table1()[0];
    const auto r = reproduce_table1_row(row, table1_modes(row));
    REQUIRE(r.modes.size() == 2);
    CHECK(r.printed_size == 64);
    CHECK(r.mode(CheckMode::full_check).parameters_match);
    std::ostringstream out;
    write_table1_report(out, {r});
    CHECK(out.str().find("[as-written]") != std::string::npos);
    CHECK(out.str().find("printed-only") != std::string::npos);
}

TEST_CASE("strand comparison reports witnesses for every missing entry") {
    const auto row = load_table1()[0];
    const auto built = run_table1_mode(row, table1_property(row), 64, CheckMode::full_check);
    const auto res = compare_strand_table(load_strand_table("table2.txt"), built.codewords, span_of(8, row.generators), 4);
    CHECK(res.generated == 64);
    CHECK(res.generated_min_gc >= 4);
    CHECK(res.missing_unexplained.empty());
    CHECK(res.overlap + res.missing_explained.size() == res.transcribed_unique);
    for (const auto& issue : res.issues) CHECK_FALSE(issue.witness.empty());

    // A listing equal to the generated code has full overlap and no issues.
    std::vector<DnaStrand> same;
    for (const auto& w : built.codewords) same.push_back(phi(w));
    const auto self = compare_strand_table(same, built.codewords, built.codewords, 4);
    CHECK(self.overlap == 64);
    CHECK(self.issues.empty());
    CHECK(self.transcribed_linear);
}

TEST_CASE("table 4: printed generators beyond the threshold are findings") {
    const auto rows = load_table4();
    const auto r1 = reproduce_table4_row(rows[0]);
    std::size_t beyond = 0;
    for (const auto& g : r1.printed) beyond += !g.within_m;
    CHECK(beyond == 4);
    std::ostringstream out;
    write_table4_report(out, {r1});
    CHECK(out.str().find("FINDING") != std::string::npos);
    const auto r2 = reproduce_table4_row(rows[1]);
    for (const auto& g : r2.printed) CHECK(g.within_m);
    for (const auto& rd : r2.readings) CHECK(rd.verified);
}
