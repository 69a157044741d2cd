#include <catch2/catch_amalgamated.hpp>

#include "brute_force.hpp"
#include "lsb/edit_distance.hpp"
#include "lsb/error.hpp"
#include "lsb/oracle.hpp"

using namespace lsb;
using namespace lsb::testing;

TEST_CASE("check_lsb certifies lsb12 on S_3", "[oracle]") {
    const auto report = check_lsb(BucketingFunctionSpec::lsb12(SequenceSpace(dna(), 3)), {1, 2});
    CHECK(report.holds());
    CHECK(report.pairs_checked == 64 * 65 / 2);
}

TEST_CASE("check_lsb finds the indel-pair gap of f^1 over S_4", "[oracle]") {
    const SequenceSpace space(dna(), 4);
    const auto report = check_lsb(BucketingFunctionSpec::frb_full(space, 1), {2, 3});
    REQUIRE_FALSE(report.holds());
    CHECK(report.violation_count == 1350);
    CHECK(report.witnesses.size() == 100);
    for (const auto& v : report.witnesses) {
        CHECK(v.property == "lsb-1");
        CHECK(v.distance == 2);
        CHECK_FALSE(v.shared);
        CHECK(v.expected_shared);
        CHECK(min_indel_pairs(v.s, v.t, 2) == 1);
    }
}

TEST_CASE("fail-fast stops at the first violation", "[oracle]") {
    OracleOptions options;
    options.fail_fast = true;
    options.threads = 1;
    const auto report = check_lsb(BucketingFunctionSpec::frb_full(SequenceSpace(dna(), 4), 1), {2, 3}, options);
    CHECK(report.aborted);
    CHECK(report.witnesses.size() == 1);
}

TEST_CASE("an over-claimed d2 is caught", "[oracle]") {
    const auto report = check_lsb(BucketingFunctionSpec::frb_partition(SequenceSpace(dna(), 3), 1), {1, 2});
    REQUIRE_FALSE(report.holds());
    for (const auto& v : report.witnesses) {
        CHECK(v.property == "lsb-2");
        CHECK(v.shared);
        CHECK(v.distance == 2);
    }
}

TEST_CASE("check_lsb respects the space guard", "[oracle]") {
    CHECK_THROWS_AS(check_lsb(BucketingFunctionSpec::lsb12(SequenceSpace(dna(), 7)), {1, 2}), CapacityError);
}

TEST_CASE("check_guaranteed examples", "[oracle]") {
    const SequenceSpace s4(dna(), 4);
    CHECK(check_guaranteed(s4, BucketSetKind::partition, PartitionIndex{0}, 1, 1).holds());
    CHECK(check_guaranteed(s4, BucketSetKind::full, PartitionIndex{0}, 4, 2).holds());
    CHECK(check_guaranteed(s4, BucketSetKind::partition, PartitionIndex{0}, 3, 3).holds());
    // r = 1 over S_n does not reach distance 2 through indel pairs.
    const auto gap = check_guaranteed(s4, BucketSetKind::full, PartitionIndex{0}, 2, 1);
    CHECK_FALSE(gap.holds());
    for (const auto& v : gap.witnesses) CHECK(v.property == "guaranteed");
}

TEST_CASE("every class of B_n is (1,1)-guaranteed for n <= 4", "[oracle][exhaustive]") {
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t i = 0; i < 4; ++i)
            CHECK(check_guaranteed(SequenceSpace(dna(), n), BucketSetKind::partition, PartitionIndex{i}, 1, 1).holds());
}

TEST_CASE("check_counts examples", "[oracle]") {
    const auto lsb12 = check_counts(BucketingFunctionSpec::lsb12(SequenceSpace(dna(), 2)));
    CHECK(lsb12.matches());
    CHECK(lsb12.bucket_count == 8);
    CHECK(lsb12.histogram == std::map<std::size_t, std::uint64_t>{{2, 16}});

    const auto part = check_counts(BucketingFunctionSpec::frb_partition(SequenceSpace(dna(), 3), 1));
    CHECK(part.matches());
    CHECK(part.bucket_count == 16);
    CHECK(part.member_histogram == std::map<std::size_t, std::uint64_t>{{1, 16}});
    CHECK(part.nonmember_histogram == std::map<std::size_t, std::uint64_t>{{3, 48}});

    const auto full = check_counts(BucketingFunctionSpec::frb_full(SequenceSpace(dna(), 3), 1));
    CHECK(full.matches());
    CHECK(full.bucket_count == 64);
    CHECK(full.histogram == std::map<std::size_t, std::uint64_t>{{10, 64}});
}

TEST_CASE("single-substitution variants witness |f(s)| >= n for lsb12", "[oracle]") {
    for (std::size_t n = 1; n <= 4; ++n) CHECK(check_lsb12_lower_bound_witness(SequenceSpace(dna(), n)).holds());
}
