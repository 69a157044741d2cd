#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "lsb/sequence.hpp"

namespace lsb {

/// Exact Levenshtein distance by full dynamic programming. Lengths may differ.
std::size_t levenshtein(std::span<const Rank> a, std::span<const Rank> b);

/// Edit distance between two sequences of one space. Both must share the alphabet and length.
std::size_t edit_distance(const Sequence& s, const Sequence& t);

std::size_t hamming(std::span<const Rank> a, std::span<const Rank> b) noexcept;

/// How a pair at distance d is realized: a substitutions plus b insert/delete pairs.
struct EditType {
    std::size_t substitutions = 0;
    std::size_t indel_pairs = 0;

    std::size_t distance() const noexcept { return substitutions + 2 * indel_pairs; }

    /// "a+b×2", the label used for edit-type categories.
    std::string label() const;

    friend bool operator==(const EditType&, const EditType&) = default;
};

/// Fewest indel pairs over all alignments of cost `distance`.
/// `distance` must equal levenshtein(a, b) and the lengths must agree.
std::size_t min_indel_pairs(std::span<const Rank> a, std::span<const Rank> b, std::size_t distance);

std::size_t min_indel_pairs(const Sequence& s, const Sequence& t, std::size_t distance);

/// The category of a pair: its distance split into substitutions and a minimal number of indel pairs.
EditType edit_type(const Sequence& s, const Sequence& t);

}  // namespace lsb
