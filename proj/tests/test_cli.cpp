#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <sstream>

#include "cli.hpp"
#include "lsb/experiments.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = lsb::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> table(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
        std::vector<std::string> row;
        std::istringstream cells(line);
        for (std::string cell; std::getline(cells, cell, '\t');) row.push_back(cell);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

TEST_CASE("bucket on empty input prints nothing", "[cli]") {
    const auto r = run({"bucket"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
}

TEST_CASE("bucket names the offending line", "[cli]") {
    const auto r = run({"bucket", "--fn", "lsb12"}, "ACGT\nACXT\n");
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);

    const auto len = run({"bucket"}, "ACGT\nACG\n");
    CHECK(len.code == 2);
    CHECK(len.err.find("line 2") != std::string::npos);
}

TEST_CASE("Hamming-1 lines share exactly one lsb12 label", "[cli]") {
    const auto r = run({"bucket", "--fn", "lsb12"}, "GATTACA\nGATTCCA\n");
    REQUIRE(r.code == 0);
    const auto rows = table(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].size() == 7);
    std::size_t common = 0;
    for (const auto& a : rows[0])
        for (const auto& b : rows[1]) common += a == b;
    CHECK(common == 1);

    const auto glyphs = run({"bucket", "--fn", "lsb12", "--glyphs"}, "AC\n");
    CHECK(glyphs.out == "1:C\t2:A\n");
}

TEST_CASE("frb labels as glyphs", "[cli]") {
    const auto r = run({"bucket", "--fn", "frb", "--r", "1", "--B", "partition", "--glyphs"}, "AC\nAA\n");
    CHECK(r.code == 0);
    CHECK(r.out == "AA\tCC\nAA\n");
    const auto full = run({"bucket", "--B", "full", "--r", "1"}, "AA\n");
    CHECK(table(full.out).front().size() == 7);
}

TEST_CASE("FASTA windows are tagged", "[cli]") {
    const auto r = run({"bucket", "--fn", "lsb12", "--window", "3"}, ">read1\nACGT\n");
    REQUIRE(r.code == 0);
    const auto rows = table(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0][0] == "read1:0");
    CHECK(rows[1][0] == "read1:1");
    CHECK(run({"bucket", "--window", "3"}, "ACGT\n").code == 2);
}

TEST_CASE("pairs", "[cli]") {
    const auto r = run({"pairs", "--fn", "lsb12"}, "ACGT\nTTTT\nACGA\nACGT\n");
    REQUIRE(r.code == 0);
    CHECK(r.out == "1\t3\t1\n1\t4\t4\n3\t4\t1\n");
    CHECK(run({"pairs", "--fn", "lsb12"}, "ACGT\n").out.empty());
}

TEST_CASE("partition queries", "[cli]") {
    const auto idx = run({"partition", "--index"}, "CC\nGT\n");
    CHECK(idx.code == 0);
    CHECK(idx.out == "1\n2\n");
    const auto chk = run({"partition", "--check", "1"}, "TCA\nGCA\n");
    CHECK(chk.out == "member\nnon-member\n");
    CHECK(run({"partition", "--check", "5"}, "TCA\n").code == 2);
}

TEST_CASE("verify exit codes", "[cli]") {
    const auto ok = run({"verify", "--fn", "lsb12", "--n", "3"});
    CHECK(ok.code == 0);
    CHECK(ok.out.rfind("PASS", 0) == 0);

    const auto bad = run({"verify", "--fn", "frb", "--B", "full", "--r", "1", "--n", "4", "--d1", "2", "--d2", "3",
                          "--max-witnesses", "3"});
    CHECK(bad.code == 1);
    CHECK(bad.out.rfind("FAIL", 0) == 0);

    CHECK(run({"verify", "--fn", "lsb12"}).code == 2);
    CHECK(run({"verify", "--fn", "lsb12", "--n", "7"}).code == 3);
    CHECK(run({"verify", "--bogus"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("verify --json", "[cli]") {
    const auto r = run({"verify", "--json", "--fn", "frb", "--B", "full", "--r", "1", "--n", "4", "--d1", "2",
                        "--d2", "3", "--max-witnesses", "5"});
    CHECK(r.code == 1);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["holds"] == false);
    CHECK(j["violation_count"] == 1350);
    CHECK(j["witnesses"].size() == 5);

    const auto counts = run({"verify", "--json", "--mode", "counts", "--fn", "frb", "--r", "1", "--n", "3"});
    CHECK(counts.code == 0);
    const auto c = nlohmann::json::parse(counts.out);
    CHECK(c["bucket_count"] == "16");
    CHECK(c["nonmember_histogram"]["3"] == 48);

    const auto guaranteed = run({"verify", "--mode", "guaranteed", "--d1", "1", "--r", "1", "--n", "4"});
    CHECK(guaranteed.code == 0);
}

TEST_CASE("experiment writes CSV", "[cli]") {
    const auto sweep = run({"experiment", "sweep", "--fn", "frb", "--B", "full", "--r", "1", "--d-max", "3",
                            "--trials", "50", "--seed", "9"});
    REQUIRE(sweep.code == 0);
    std::istringstream lines(sweep.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == lsb::kCsvHeader);
    std::string row;
    std::getline(lines, row);
    CHECK(row == "frb_r1_full,20,4,1,all,50,50,1.000000,9");

    const auto gap = run({"experiment", "gap", "--B", "full", "--r", "1", "--trials", "40"});
    REQUIRE(gap.code == 0);
    CHECK(gap.out.find("frb_r1_full,20,4,2,2+0×2,40,40,1.000000,1") != std::string::npos);
    CHECK(gap.out.find("frb_r1_full,20,4,2,0+1×2,40,0,0.000000,1") != std::string::npos);

    CHECK(run({"experiment", "gap", "--B", "full", "--r", "1", "--d", "3"}).code == 2);
}
