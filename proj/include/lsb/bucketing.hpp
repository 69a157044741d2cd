#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lsb/partition.hpp"
#include "lsb/sequence.hpp"

namespace lsb {

enum class FunctionKind { lsb12, frb };

/// Bucket set B of a neighborhood function: all of S_n, or one partition class B_n^i.
enum class BucketSetKind { full, partition };

struct Sensitivity {
    std::size_t d1 = 0;
    std::size_t d2 = 0;

    friend bool operator==(const Sensitivity&, const Sensitivity&) = default;
};

/// Cost limits for neighborhood enumeration, which grows as (n·m)^r.
struct Guards {
    std::size_t max_radius = 3;
    std::size_t max_length = 32;

    static Guards unlimited() { return {static_cast<std::size_t>(-1), static_cast<std::size_t>(-1)}; }
};

/// Selects a construction over a space S_n.
///
/// lsb12 is the optimal (1,2)-sensitive function. frb is f^r_B(s) = N^r(s) ∩ B,
/// labelled by the codes of the members of B.
class BucketingFunctionSpec {
public:
    static BucketingFunctionSpec lsb12(SequenceSpace space);
    static BucketingFunctionSpec frb_full(SequenceSpace space, std::size_t radius);
    static BucketingFunctionSpec frb_partition(SequenceSpace space, std::size_t radius,
                                               PartitionIndex cls = PartitionIndex{0});

    FunctionKind kind() const noexcept { return kind_; }
    BucketSetKind bucket_set() const noexcept { return bucket_set_; }
    std::size_t radius() const noexcept { return radius_; }
    PartitionIndex partition_class() const noexcept { return class_; }
    const SequenceSpace& space() const noexcept { return space_; }

    /// "lsb12", "frb_r2_full", "frb_r2_partition1".
    std::string name() const;

    /// Whether v is a bucket of B (always true for lsb12 ids and full frb).
    bool in_bucket_set(std::span<const Rank> v) const noexcept;

private:
    BucketingFunctionSpec(FunctionKind kind, SequenceSpace space, std::size_t radius, BucketSetKind set,
                          PartitionIndex cls);

    FunctionKind kind_;
    SequenceSpace space_;
    std::size_t radius_;
    BucketSetKind bucket_set_;
    PartitionIndex class_;
};

/// The sensitivity proved for the construction:
///   lsb12                → (1, 2)
///   frb over S_n, r even → (2r, 2r+1);  r odd → (2r-1, 2r+1)
///   frb over B_n^i       → (r, 2r+1), strengthened to (3, 5) for r = 2
Sensitivity claimed_sensitivity(const BucketingFunctionSpec& spec);

/// f^r_B(s): encoded members of B within distance r of s, ascending.
std::vector<Code> frb_buckets(const BucketingFunctionSpec& spec, const Sequence& s, const Guards& guards = {});

/// Bucket labels of s under any construction, ascending.
std::vector<Code> buckets(const BucketingFunctionSpec& spec, const Sequence& s, const Guards& guards = {});

/// Raw-rank variant of buckets() for hot loops; `s` must belong to spec.space().
std::vector<Code> buckets_of_ranks(const BucketingFunctionSpec& spec, std::span<const Rank> s,
                                   const Guards& guards = {});

/// f(s) ∩ f(t) ≠ ∅.
bool shares(const BucketingFunctionSpec& spec, const Sequence& s, const Sequence& t, const Guards& guards = {});

/// Whether two ascending label lists intersect.
bool sorted_intersect(std::span<const Code> a, std::span<const Code> b) noexcept;
std::size_t sorted_intersection_size(std::span<const Code> a, std::span<const Code> b) noexcept;

}  // namespace lsb
