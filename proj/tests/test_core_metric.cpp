#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "brute_force.hpp"
#include "lsb/edit_distance.hpp"
#include "lsb/error.hpp"
#include "lsb/neighborhood.hpp"
#include "lsb/sequence.hpp"

using namespace lsb;
using namespace lsb::testing;

TEST_CASE("alphabet ranks are a bijection onto 0..m-1", "[alphabet]") {
    const Alphabet a("ACGT");
    REQUIRE(a.size() == 4);
    for (Rank r = 0; r < 4; ++r) CHECK(a.rank_of(a.glyph(r)) == r);
    CHECK_FALSE(a.rank_of('N').has_value());
    CHECK(Alphabet::with_size(4) == a);
    CHECK(Alphabet::with_size(2).glyphs() == "AB");
}

TEST_CASE("alphabet rejects degenerate glyph sets", "[alphabet]") {
    CHECK_THROWS_AS(Alphabet("A"), InvalidInput);
    CHECK_THROWS_AS(Alphabet("ACA"), InvalidInput);
    CHECK_THROWS_AS(Alphabet("A C"), InvalidInput);
}

TEST_CASE("sequence parsing validates characters", "[sequence]") {
    CHECK(seq("GATTACA").str() == "GATTACA");
    CHECK_THROWS_AS(seq("ACNT"), InvalidInput);
    CHECK_THROWS_AS(Sequence(dna(), {0, 4}), InvalidInput);
}

TEST_CASE("edit distance examples", "[edit]") {
    CHECK(edit_distance(seq("AA"), seq("AA")) == 0);
    CHECK(edit_distance(seq("AA"), seq("CC")) == 2);
    CHECK(edit_distance(seq("ACGT"), seq("CGTA")) == 2);
}

TEST_CASE("edit distance rejects mismatched inputs", "[edit]") {
    const auto binary = make_alphabet("01");
    CHECK_THROWS_AS(edit_distance(seq("AC"), Sequence::parse("01", binary)), InvalidInput);
    CHECK_THROWS_AS(edit_distance(seq("AC"), seq("ACG")), InvalidInput);
    // Same glyphs through a different pointer is the same alphabet.
    CHECK(edit_distance(seq("AC"), Sequence::parse("AG", make_alphabet("ACGT"))) == 1);
}

TEST_CASE("edit distance agrees with the recursive oracle and is a metric on S_n, n <= 4", "[edit][exhaustive]") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto words = all_words(n, 4);
        for (const auto& a : words) {
            CHECK(levenshtein(a, a) == 0);
            for (const auto& b : words) {
                const auto d = levenshtein(a, b);
                REQUIRE(d == naive_distance(a, b));
                REQUIRE(d == levenshtein(b, a));
            }
        }
    }
    // Triangle inequality on S_3 exhaustively (64³ triples).
    const auto words = all_words(3, 4);
    std::vector<std::size_t> dist(words.size() * words.size());
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j) dist[i * words.size() + j] = levenshtein(words[i], words[j]);
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j)
            for (std::size_t k = 0; k < words.size(); ++k)
                REQUIRE(dist[i * words.size() + k] <= dist[i * words.size() + j] + dist[j * words.size() + k]);
}

TEST_CASE("edit distance is a metric on random length-12 samples", "[edit][property]") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick(0, 3);
    auto random_word = [&] {
        Word w(12);
        for (auto& c : w) c = static_cast<Rank>(pick(rng));
        return w;
    };
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = random_word(), b = random_word(), c = random_word();
        const auto ab = levenshtein(a, b);
        REQUIRE(ab == naive_distance(a, b));
        REQUIRE(ab == levenshtein(b, a));
        REQUIRE(levenshtein(a, c) <= ab + levenshtein(b, c));
    }
}

TEST_CASE("encode/decode", "[encode]") {
    CHECK(encode(seq("AA")) == 0);
    CHECK(encode(seq("AC")) == 1);
    CHECK(encode(seq("TT")) == 15);

    const SequenceSpace space(dna(), 3);
    for (Code code = 0; code < 64; ++code) REQUIRE(space.encode(space.decode(code)) == code);
    const auto words = all_words(3, 4);
    for (std::size_t i = 0; i < words.size(); ++i) {
        const Sequence s(dna(), words[i]);
        REQUIRE(encode(s) == i);
        REQUIRE(decode(i, 3, dna()) == s);
    }
    CHECK_THROWS_AS(space.decode(64), InvalidInput);
}

TEST_CASE("code space capacity", "[encode]") {
    CHECK(max_encodable_length(2) == 127);
    CHECK(max_encodable_length(4) == 63);
    CHECK_NOTHROW(SequenceSpace(dna(), 63));
    CHECK_THROWS_AS(SequenceSpace(dna(), 64), CapacityError);
    CHECK_THROWS_AS(SequenceSpace(dna(), 0), InvalidInput);

    const auto big = Sequence(dna(), std::vector<Rank>(64, 3));
    CHECK_THROWS_AS(encode(big), CapacityError);
    try {
        SequenceSpace(dna(), 100);
    } catch (const CapacityError& e) {
        CHECK(std::string(e.what()).find("max supported length is 63") != std::string::npos);
    }
}

TEST_CASE("neighborhood examples", "[neighborhood]") {
    std::mt19937_64 rng(11);
    std::vector<Rank> ranks(20);
    for (auto& r : ranks) r = static_cast<Rank>(rng() % 4);
    const Sequence s(dna(), ranks);
    CHECK(neighborhood(s, 1).size() == 61);

    const auto all_two = neighborhood(seq("AA"), 2);
    CHECK(all_two.size() == 16);

    const auto zero = neighborhood(s, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero.front() == s);

    CHECK_THROWS_AS(neighborhood(s, -1), InvalidInput);
}

TEST_CASE("neighborhood equals the exhaustive ball for n <= 4", "[neighborhood][exhaustive]") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const std::size_t max_r = n <= 3 ? n : 3;
        for (const auto& s : all_words(n, 4)) {
            for (std::size_t r = 0; r <= max_r; ++r) {
                const auto ball = brute_ball(s, r, 4);
                const auto codes = neighborhood_codes(s, 4, r);
                REQUIRE(codes.size() == ball.size());
                std::size_t i = 0;
                for (const auto& w : ball) REQUIRE(codes[i++] == encode(w, 4));
            }
        }
    }
}

TEST_CASE("neighborhood over a binary alphabet matches the ball", "[neighborhood][exhaustive]") {
    for (const auto& s : all_words(6, 2)) {
        for (std::size_t r = 1; r <= 3; ++r) {
            REQUIRE(neighborhood_codes(s, 2, r).size() == brute_ball(s, r, 2).size());
        }
    }
}

TEST_CASE("|N^1(s)| = n(m-1)+1 for every s", "[neighborhood]") {
    for (std::size_t m : {2u, 3u, 4u}) {
        for (std::size_t n = 1; n <= 5; ++n) {
            for (const auto& s : all_words(n, m)) {
                REQUIRE(neighborhood_codes(s, m, 1).size() == radius_one_ball_size(n, m));
            }
        }
    }
}

TEST_CASE("every neighborhood member of a length-20 sequence is within the radius", "[neighborhood][property]") {
    std::mt19937_64 rng(3);
    std::vector<Rank> ranks(20);
    for (int trial = 0; trial < 5; ++trial) {
        for (auto& r : ranks) r = static_cast<Rank>(rng() % 4);
        const auto codes = neighborhood_codes(ranks, 4, 2);
        std::vector<Rank> v(20);
        for (const auto code : codes) {
            decode_into(code, 4, v);
            REQUIRE(levenshtein(ranks, v) <= 2);
        }
        REQUIRE(std::is_sorted(codes.begin(), codes.end()));
        REQUIRE(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
    }
}

TEST_CASE("min_indel_pairs examples", "[edit-type]") {
    CHECK(min_indel_pairs(seq("AAAA"), seq("CAAA"), 1) == 0);
    CHECK(min_indel_pairs(seq("ACGT"), seq("CGTA"), 2) == 1);
    CHECK(min_indel_pairs(seq("AA"), seq("CC"), 2) == 0);
    CHECK(edit_type(seq("ACGT"), seq("CGTA")) == EditType{0, 1});
    CHECK(EditType{1, 1}.label() == "1+1×2");
}

TEST_CASE("min_indel_pairs refuses a wrong distance", "[edit-type]") {
    CHECK_THROWS_AS(min_indel_pairs(seq("AA"), seq("CC"), 1), ContractViolation);
    CHECK_THROWS_AS(min_indel_pairs(seq("AA"), seq("CC"), 3), ContractViolation);
}

TEST_CASE("min_indel_pairs equals the all-alignments oracle for n <= 4", "[edit-type][exhaustive]") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto words = all_words(n, n <= 3 ? 4 : 3);
        for (const auto& a : words) {
            for (const auto& b : words) {
                const auto d = levenshtein(a, b);
                const auto b_min = min_indel_pairs(a, b, d);
                REQUIRE(b_min == brute_min_indel_pairs(a, b, d));
                REQUIRE(b_min <= d / 2);
                if (naive_hamming(a, b) == d) REQUIRE(b_min == 0);
            }
        }
    }
}
