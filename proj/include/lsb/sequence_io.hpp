#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lsb/sequence.hpp"

namespace lsb {

struct SequenceRecord {
    std::string tag;  ///< line number for plain text, record name or name:offset for FASTA
    Sequence sequence;
};

struct ReadOptions {
    /// Every sequence must have this length; otherwise the first sequence fixes it.
    std::optional<std::size_t> length;
    /// FASTA only: tile each record into all substrings of this length.
    std::optional<std::size_t> window;
};

/// Plain text (one sequence per line) or FASTA, detected from the first
/// non-empty line. Blank lines are skipped. Throws InvalidInput naming the line
/// of any foreign character or length mismatch.
std::vector<SequenceRecord> read_sequences(std::istream& in, const AlphabetPtr& alphabet,
                                           const ReadOptions& options = {});

}  // namespace lsb
