#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lsb/bucketing.hpp"
#include "lsb/sequence.hpp"

namespace lsb {

/// Two inputs (0-based positions, first < second) that share at least one bucket.
struct CandidatePair {
    std::size_t first = 0;
    std::size_t second = 0;
    std::size_t shared_buckets = 0;

    friend bool operator==(const CandidatePair&, const CandidatePair&) = default;
};

struct IndexLimits {
    std::size_t max_postings = std::size_t{1} << 26;  ///< (bucket, sequence) entries in the inverted index
    std::size_t max_pair_hits = std::size_t{1} << 27;  ///< pair occurrences before deduplication
    unsigned threads = 0;
    Guards guards{};
};

/// Buckets every sequence, inverts bucket → sequences, and emits each co-occurring
/// pair once, sorted by (first, second). Throws CapacityError past the limits.
std::vector<CandidatePair> candidate_pairs(const BucketingFunctionSpec& spec, std::span<const Sequence> sequences,
                                           const IndexLimits& limits = {});

}  // namespace lsb
