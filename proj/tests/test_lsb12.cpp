#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "brute_force.hpp"
#include "lsb/error.hpp"
#include "lsb/lsb12.hpp"

using namespace lsb;
using namespace lsb::testing;

namespace {

std::set<std::uint64_t> table_labels(const Lsb12Table& table, std::string_view text) {
    const auto& labels = table.buckets_of(seq(text));
    return {labels.begin(), labels.end()};
}

// Each bucket as the set of its members; comparing these sets ignores labels.
template <typename Buckets>
std::set<std::set<Code>> as_blocks(const Buckets& buckets) {
    std::set<std::set<Code>> out;
    for (const auto& [label, members] : buckets) out.insert(std::set<Code>(members.begin(), members.end()));
    return out;
}

}  // namespace

TEST_CASE("sweep over S_2 reproduces the worked bucket table", "[lsb12]") {
    const auto table = lsb12_build_table(SequenceSpace(dna(), 2));
    CHECK(table.bucket_count() == 8);
    CHECK(table_labels(table, "AA") == std::set<std::uint64_t>{1, 2});
    CHECK(table_labels(table, "AC") == std::set<std::uint64_t>{2, 3});
    CHECK(table_labels(table, "CC") == std::set<std::uint64_t>{3, 6});
    CHECK(table_labels(table, "GT") == std::set<std::uint64_t>{5, 7});

    const auto members = table.bucket_members();
    REQUIRE(members.size() == 8);
    CHECK(members[1] == std::vector<Code>{0, 1, 2, 3});      // AA AC AG AT
    CHECK(members[6] == std::vector<Code>{8, 9, 10, 11});    // GA GC GG GT
    for (const auto& b : members) CHECK(b.size() == 4);
}

TEST_CASE("sweep edge sizes", "[lsb12]") {
    const auto one = lsb12_build_table(SequenceSpace(make_alphabet("AB"), 1));
    CHECK(one.bucket_count() == 1);
    CHECK(one.bucket_members().front() == std::vector<Code>{0, 1});

    const auto three = lsb12_build_table(SequenceSpace(dna(), 3));
    CHECK(three.bucket_count() == 48);
    for (const auto& b : three.bucket_members()) CHECK(b.size() == 4);
}

TEST_CASE("sweep refuses spaces past the guard", "[lsb12]") {
    CHECK_THROWS_AS(lsb12_build_table(SequenceSpace(dna(), 11)), CapacityError);
}

TEST_CASE("closed form examples", "[lsb12]") {
    CHECK(lsb12_shares(seq("AA"), seq("AC")));
    CHECK_FALSE(lsb12_shares(seq("AC"), seq("GT")));
    CHECK_FALSE(lsb12_shares(seq("AA"), seq("CC")));
    CHECK(lsb12_shares(seq("GA"), seq("GC")));
    CHECK(lsb12_shares(seq("GATTACA"), seq("GATTACA")));

    // AA and AC meet only in the position-2 bucket over prefix A.
    const auto aa = lsb12_bucket_ids(seq("AA"));
    const auto ac = lsb12_bucket_ids(seq("AC"));
    std::vector<Lsb12BucketId> common;
    for (const auto& x : aa)
        if (std::find(ac.begin(), ac.end(), x) != ac.end()) common.push_back(x);
    REQUIRE(common.size() == 1);
    CHECK(common.front().position == 2);
    CHECK(common.front().punctured == 0);

    std::mt19937_64 rng(5);
    std::vector<Rank> ranks(20);
    for (auto& r : ranks) r = static_cast<Rank>(rng() % 4);
    CHECK(lsb12_buckets(Sequence(dna(), ranks)).size() == 20);
}

TEST_CASE("packed ids round trip and stay in range", "[lsb12]") {
    const SequenceSpace space(dna(), 4);
    const auto count = lsb12_bucket_count(space);
    CHECK(count == 4 * 64);
    for (Code code = 0; code < space.size(); ++code) {
        for (const auto& id : lsb12_bucket_ids(space.decode(code))) {
            const auto packed = id.packed(space);
            REQUIRE(packed < count);
            REQUIRE(Lsb12BucketId::unpack(packed, space) == id);
        }
    }
    CHECK_THROWS_AS(lsb12_bucket_count(SequenceSpace(dna(), 63)), CapacityError);
}

TEST_CASE("sweep and closed form induce the same buckets up to relabeling", "[lsb12][exhaustive]") {
    for (std::size_t m = 2; m <= 4; ++m) {
        const auto alphabet = Alphabet::with_size(m);
        for (std::size_t n = 1; n <= 3; ++n) {
            const SequenceSpace space(make_alphabet(std::string(alphabet.glyphs())), n);
            const auto table = lsb12_build_table(space);

            std::map<std::uint64_t, std::vector<Code>> swept;
            const auto members = table.bucket_members();
            for (std::size_t i = 0; i < members.size(); ++i) swept[i + 1] = members[i];

            std::map<Code, std::vector<Code>> closed;
            for (Code code = 0; code < space.size(); ++code)
                for (const auto id : lsb12_buckets(space.decode(code))) closed[id].push_back(code);

            REQUIRE(as_blocks(swept) == as_blocks(closed));
            REQUIRE(table.bucket_count() == lsb12_bucket_count(space));

            for (Code a = 0; a < space.size(); ++a) {
                const auto& la = table.buckets_of_code(a);
                const std::set<std::uint64_t> sa(la.begin(), la.end());
                for (Code b = 0; b < space.size(); ++b) {
                    const auto& lb = table.buckets_of_code(b);
                    const bool table_shares = std::any_of(lb.begin(), lb.end(), [&](auto x) { return sa.count(x); });
                    REQUIRE(table_shares == lsb12_shares(space.decode(a), space.decode(b)));
                }
            }
        }
    }
}

TEST_CASE("closed form is (1,2)-sensitive on S_n for n <= 4", "[lsb12][exhaustive]") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto words = all_words(n, 4);
        for (const auto& a : words) {
            const Sequence s(dna(), a);
            REQUIRE(lsb12_buckets(s).size() == n);
            for (const auto& b : words) {
                const bool share = lsb12_shares(s, Sequence(dna(), b));
                REQUIRE(share == (naive_hamming(a, b) <= 1));
                const auto d = naive_distance(a, b);
                if (d <= 1) REQUIRE(share);
                if (d >= 2) REQUIRE_FALSE(share);
            }
        }
    }
}
