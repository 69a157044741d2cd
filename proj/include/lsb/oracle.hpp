#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lsb/bucketing.hpp"
#include "lsb/sequence.hpp"

namespace lsb {

/// One pair that breaks a checked property.
struct Violation {
    std::string property;  ///< "lsb-1", "lsb-2", "guaranteed", "independent-set"
    Sequence s;
    Sequence t;
    std::size_t distance = 0;
    bool shared = false;
    bool expected_shared = false;
};

/// Result of an exhaustive scan. No violations means the property holds on the whole space.
struct ViolationReport {
    std::vector<Violation> witnesses;  ///< capped at OracleOptions::max_witnesses
    std::uint64_t violation_count = 0;
    std::uint64_t pairs_checked = 0;
    bool aborted = false;  ///< fail-fast stopped the scan early

    bool holds() const noexcept { return violation_count == 0; }
};

struct OracleOptions {
    bool fail_fast = false;
    std::size_t max_witnesses = 100;
    Code max_space = Code{1} << 12;
    Code memo_limit = Code{1} << 8;  ///< precompute all distances when |S_n| is at most this
    unsigned threads = 0;            ///< 0: hardware concurrency
    Guards guards{};
};

/// Scans every unordered pair (including s with itself) of the spec's space and
/// reports pairs within d1 with disjoint buckets and pairs at ≥ d2 sharing one.
/// Bucket sets are recomputed from the spec for each sequence.
ViolationReport check_lsb(const BucketingFunctionSpec& spec, Sensitivity claim, const OracleOptions& options = {});

/// Checks N^r(s) ∩ N^r(t) ∩ B ≠ ∅ for every pair with edit(s,t) ≤ d1, where B is
/// S_n or the materialized partition class `cls`. Balls are found by DP scans, not
/// by the neighborhood generator.
ViolationReport check_guaranteed(const SequenceSpace& space, BucketSetKind bucket_set, PartitionIndex cls,
                                 std::size_t d1, std::size_t radius, const OracleOptions& options = {});

/// Observed bucket usage compared against the proved counts for the construction.
struct CountsReport {
    std::string function;
    Code bucket_count = 0;           ///< distinct buckets used over all of S_n
    Code expected_bucket_count = 0;
    std::map<std::size_t, std::uint64_t> histogram;            ///< |f(s)| → number of s
    std::map<std::size_t, std::uint64_t> member_histogram;     ///< partition sets only, s ∈ B
    std::map<std::size_t, std::uint64_t> nonmember_histogram;  ///< partition sets only, s ∉ B
    std::vector<std::string> mismatches;

    bool matches() const noexcept { return mismatches.empty(); }
};

CountsReport check_counts(const BucketingFunctionSpec& spec, const OracleOptions& options = {});

/// For every s, the n single-substitution variants of s must be pairwise at
/// distance ≥ 2 and meet s in n distinct lsb12 buckets, which is what makes
/// |f(s)| = n tight.
ViolationReport check_lsb12_lower_bound_witness(const SequenceSpace& space, const OracleOptions& options = {});

}  // namespace lsb
