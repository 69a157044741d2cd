#include "lsb/edit_distance.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "lsb/error.hpp"

namespace lsb {

namespace {

void require_comparable(const Sequence& s, const Sequence& t) {
    if (!Sequence::same_alphabet(s, t)) {
        throw InvalidInput("edit distance between sequences over different alphabets (" +
                           std::string(s.alphabet().glyphs()) + " vs " + std::string(t.alphabet().glyphs()) + ")");
    }
    if (s.size() != t.size()) {
        throw InvalidInput("edit distance requires equal lengths, got " + std::to_string(s.size()) + " and " +
                           std::to_string(t.size()));
    }
}

// Alignment cost ordered by (edits, indels): the second component breaks ties among
// optimal alignments in favour of fewer insertions and deletions.
struct Cost {
    std::size_t edits;
    std::size_t indels;

    friend bool operator<(const Cost& x, const Cost& y) noexcept {
        return x.edits != y.edits ? x.edits < y.edits : x.indels < y.indels;
    }
};

}  // namespace

std::size_t levenshtein(std::span<const Rank> a, std::span<const Rank> b) {
    if (a.empty()) return b.size();
    if (b.empty()) return a.size();

    std::vector<std::size_t> row(b.size() + 1);
    std::iota(row.begin(), row.end(), std::size_t{0});
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::size_t diagonal = row[0];
        row[0] = i + 1;
        for (std::size_t j = 0; j < b.size(); ++j) {
            const std::size_t above = row[j + 1];
            const std::size_t substitute = diagonal + (a[i] == b[j] ? 0 : 1);
            row[j + 1] = std::min({substitute, above + 1, row[j] + 1});
            diagonal = above;
        }
    }
    return row[b.size()];
}

std::size_t edit_distance(const Sequence& s, const Sequence& t) {
    require_comparable(s, t);
    return levenshtein(s.ranks(), t.ranks());
}

std::size_t hamming(std::span<const Rank> a, std::span<const Rank> b) noexcept {
    std::size_t diff = 0;
    const auto n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) diff += a[i] != b[i] ? 1 : 0;
    return diff + std::max(a.size(), b.size()) - n;
}

std::string EditType::label() const {
    return std::to_string(substitutions) + "+" + std::to_string(indel_pairs) + "×2";
}

std::size_t min_indel_pairs(std::span<const Rank> a, std::span<const Rank> b, std::size_t distance) {
    if (a.size() != b.size()) {
        throw ContractViolation("min_indel_pairs requires equal lengths, got " + std::to_string(a.size()) +
                                " and " + std::to_string(b.size()));
    }
    const std::size_t n = a.size();
    std::vector<Cost> prev(n + 1), cur(n + 1);
    for (std::size_t j = 0; j <= n; ++j) prev[j] = {j, j};
    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = {i, i};
        for (std::size_t j = 1; j <= n; ++j) {
            Cost best{prev[j - 1].edits + (a[i - 1] == b[j - 1] ? 0 : 1), prev[j - 1].indels};
            const Cost del{prev[j].edits + 1, prev[j].indels + 1};
            const Cost ins{cur[j - 1].edits + 1, cur[j - 1].indels + 1};
            if (del < best) best = del;
            if (ins < best) best = ins;
            cur[j] = best;
        }
        std::swap(prev, cur);
    }
    const Cost optimum = prev[n];
    if (optimum.edits != distance) {
        throw ContractViolation("min_indel_pairs called with distance " + std::to_string(distance) +
                                " but the pair is at edit distance " + std::to_string(optimum.edits));
    }
    // Equal lengths force as many insertions as deletions.
    return optimum.indels / 2;
}

std::size_t min_indel_pairs(const Sequence& s, const Sequence& t, std::size_t distance) {
    if (!Sequence::same_alphabet(s, t)) {
        throw InvalidInput("min_indel_pairs between sequences over different alphabets");
    }
    return min_indel_pairs(s.ranks(), t.ranks(), distance);
}

EditType edit_type(const Sequence& s, const Sequence& t) {
    const auto d = edit_distance(s, t);
    const auto b = min_indel_pairs(s.ranks(), t.ranks(), d);
    return EditType{d - 2 * b, b};
}

}  // namespace lsb
