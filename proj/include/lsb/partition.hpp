#pragma once

#include <cstddef>
#include <vector>

#include "lsb/sequence.hpp"

namespace lsb {

/// Which class B_n^i of the recursive m-way partition a sequence falls in.
/// Stored 0-based; the 1-based form is the one shown to users.
class PartitionIndex {
public:
    constexpr PartitionIndex() = default;
    constexpr explicit PartitionIndex(std::size_t zero_based) : value_(zero_based) {}

    /// Validates 1 ≤ i ≤ m.
    static PartitionIndex from_one_based(std::size_t i, std::size_t sigma);

    constexpr std::size_t value() const noexcept { return value_; }
    constexpr std::size_t one_based() const noexcept { return value_ + 1; }

    friend constexpr auto operator<=>(PartitionIndex, PartitionIndex) = default;

private:
    std::size_t value_ = 0;
};

/// Backward scan: the last character c_p starts in class p, then each earlier
/// character of rank k moves the class from j to (j - k) mod m. O(n), O(1) space.
std::size_t partition_index_of(std::span<const Rank> ranks, std::size_t sigma) noexcept;

PartitionIndex partition_index(const Sequence& s);

bool is_member(const Sequence& s, PartitionIndex cls);

/// All m classes of S_n, built by prepending characters to rotated classes of S_{n-1}.
class Partition {
public:
    const SequenceSpace& space() const noexcept { return space_; }
    std::size_t class_count() const noexcept { return classes_.size(); }

    /// Sorted codes of the members of class `cls`.
    const std::vector<Code>& codes(PartitionIndex cls) const { return classes_.at(cls.value()); }

    std::vector<Sequence> members(PartitionIndex cls) const;

    /// Class of every code in S_n (inverse view of the materialized classes).
    std::vector<std::size_t> index_by_code() const;

private:
    friend Partition build_partition(const SequenceSpace& space);
    explicit Partition(SequenceSpace space) : space_(std::move(space)) {}

    SequenceSpace space_;
    std::vector<std::vector<Code>> classes_;
};

/// Refuses spaces larger than 2²⁰ sequences.
Partition build_partition(const SequenceSpace& space);

}  // namespace lsb
