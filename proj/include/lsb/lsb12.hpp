#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lsb/sequence.hpp"

namespace lsb {

/// Bucket of the optimal (1,2)-sensitive function: a position and the sequence
/// with that position removed. The m sequences that agree everywhere except at
/// `position` are exactly the members of the bucket.
struct Lsb12BucketId {
    std::size_t position = 1;  ///< 1-based, in 1..n
    Code punctured = 0;        ///< rank of s without `position`, in 0..m^{n-1}-1

    /// (position-1)·m^{n-1} + punctured.
    Code packed(const SequenceSpace& space) const;
    static Lsb12BucketId unpack(Code packed, const SequenceSpace& space);

    friend bool operator==(const Lsb12BucketId&, const Lsb12BucketId&) = default;
};

/// n·m^{n-1}: the number of buckets, which is the lower bound for any
/// (1,2)-sensitive function. Throws CapacityError when it overflows a Code.
Code lsb12_bucket_count(const SequenceSpace& space);

/// The n buckets of s, one per position, ordered by position.
std::vector<Lsb12BucketId> lsb12_bucket_ids(const Sequence& s);

/// Packed ids of lsb12_bucket_ids(s), ascending.
std::vector<Code> lsb12_buckets(const Sequence& s);

/// True iff s and t share a bucket, i.e. differ in at most one position.
bool lsb12_shares(const Sequence& s, const Sequence& t);

/// The bucket table produced by sweeping Σⁿ in lexicographic order and opening
/// a fresh bucket (labels 1, 2, ...) for every occurrence of σ(1).
class Lsb12Table {
public:
    const SequenceSpace& space() const noexcept { return space_; }
    std::uint64_t bucket_count() const noexcept { return bucket_count_; }

    /// Labels assigned to s, in the order the sweep assigned them.
    const std::vector<std::uint64_t>& buckets_of(const Sequence& s) const;
    const std::vector<std::uint64_t>& buckets_of_code(Code code) const { return labels_.at(static_cast<std::size_t>(code)); }

    /// Members of each bucket; index 0 holds bucket label 1.
    std::vector<std::vector<Code>> bucket_members() const;

private:
    friend Lsb12Table lsb12_build_table(const SequenceSpace& space);
    explicit Lsb12Table(SequenceSpace space) : space_(std::move(space)) {}

    SequenceSpace space_;
    std::vector<std::vector<std::uint64_t>> labels_;
    std::uint64_t bucket_count_ = 0;
};

inline constexpr Code kTableGuard = Code{1} << 20;

/// Materializes the sweep. Refuses spaces larger than 2²⁰ sequences.
Lsb12Table lsb12_build_table(const SequenceSpace& space);

}  // namespace lsb
