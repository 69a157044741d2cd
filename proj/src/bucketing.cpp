#include "lsb/bucketing.hpp"

#include "lsb/error.hpp"
#include "lsb/lsb12.hpp"
#include "lsb/neighborhood.hpp"

namespace lsb {

BucketingFunctionSpec::BucketingFunctionSpec(FunctionKind kind, SequenceSpace space, std::size_t radius,
                                             BucketSetKind set, PartitionIndex cls)
    : kind_(kind), space_(std::move(space)), radius_(radius), bucket_set_(set), class_(cls) {
    if (kind_ == FunctionKind::frb && radius_ < 1) {
        throw InvalidInput("neighborhood bucketing needs a radius of at least 1");
    }
    if (bucket_set_ == BucketSetKind::partition && class_.value() >= space_.sigma()) {
        throw InvalidInput("partition class " + std::to_string(class_.one_based()) + " outside 1.." +
                           std::to_string(space_.sigma()));
    }
}

BucketingFunctionSpec BucketingFunctionSpec::lsb12(SequenceSpace space) {
    lsb12_bucket_count(space);
    return {FunctionKind::lsb12, std::move(space), 1, BucketSetKind::full, PartitionIndex{0}};
}

BucketingFunctionSpec BucketingFunctionSpec::frb_full(SequenceSpace space, std::size_t radius) {
    return {FunctionKind::frb, std::move(space), radius, BucketSetKind::full, PartitionIndex{0}};
}

BucketingFunctionSpec BucketingFunctionSpec::frb_partition(SequenceSpace space, std::size_t radius,
                                                           PartitionIndex cls) {
    return {FunctionKind::frb, std::move(space), radius, BucketSetKind::partition, cls};
}

std::string BucketingFunctionSpec::name() const {
    if (kind_ == FunctionKind::lsb12) return "lsb12";
    std::string out = "frb_r" + std::to_string(radius_);
    if (bucket_set_ == BucketSetKind::full) return out + "_full";
    return out + "_partition" + std::to_string(class_.one_based());
}

bool BucketingFunctionSpec::in_bucket_set(std::span<const Rank> v) const noexcept {
    if (kind_ == FunctionKind::lsb12 || bucket_set_ == BucketSetKind::full) return true;
    return partition_index_of(v, space_.sigma()) == class_.value();
}

Sensitivity claimed_sensitivity(const BucketingFunctionSpec& spec) {
    const auto r = spec.radius();
    if (spec.kind() == FunctionKind::lsb12) return {1, 2};
    if (spec.bucket_set() == BucketSetKind::full) {
        return r % 2 == 0 ? Sensitivity{2 * r, 2 * r + 1} : Sensitivity{2 * r - 1, 2 * r + 1};
    }
    if (r == 2) return {3, 5};
    return {r, 2 * r + 1};
}

namespace {

void check_guards(const BucketingFunctionSpec& spec, const Guards& guards) {
    if (spec.radius() > guards.max_radius) {
        throw CapacityError("radius " + std::to_string(spec.radius()) + " exceeds the neighborhood guard of " +
                            std::to_string(guards.max_radius) + " (enumeration grows as (n·m)^r)");
    }
    if (spec.space().length() > guards.max_length) {
        throw CapacityError("length " + std::to_string(spec.space().length()) + " exceeds the neighborhood guard of " +
                            std::to_string(guards.max_length));
    }
}

std::vector<Code> frb_of_ranks(const BucketingFunctionSpec& spec, std::span<const Rank> s) {
    const auto m = spec.space().sigma();
    if (spec.bucket_set() == BucketSetKind::full) return neighborhood_codes(s, m, spec.radius());
    return neighborhood_codes_if(s, m, spec.radius(), [&](std::span<const Rank> v) { return spec.in_bucket_set(v); });
}

std::vector<Code> lsb12_of_ranks(const BucketingFunctionSpec& spec, std::span<const Rank> s) {
    const auto m = spec.space().sigma();
    const Code per_position = spec.space().size() / m;
    std::vector<Code> out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        Code punctured = 0;
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (j != i) punctured = punctured * m + s[j];
        }
        out.push_back(static_cast<Code>(i) * per_position + punctured);
    }
    return out;
}

}  // namespace

std::vector<Code> frb_buckets(const BucketingFunctionSpec& spec, const Sequence& s, const Guards& guards) {
    if (spec.kind() != FunctionKind::frb) throw InvalidInput("frb_buckets called with a " + spec.name() + " spec");
    spec.space().require_member(s);
    check_guards(spec, guards);
    return frb_of_ranks(spec, s.ranks());
}

std::vector<Code> buckets(const BucketingFunctionSpec& spec, const Sequence& s, const Guards& guards) {
    spec.space().require_member(s);
    return buckets_of_ranks(spec, s.ranks(), guards);
}

std::vector<Code> buckets_of_ranks(const BucketingFunctionSpec& spec, std::span<const Rank> s,
                                   const Guards& guards) {
    if (s.size() != spec.space().length()) {
        throw InvalidInput("sequence of length " + std::to_string(s.size()) + " used with " + spec.name() +
                           " over length " + std::to_string(spec.space().length()));
    }
    if (spec.kind() == FunctionKind::lsb12) return lsb12_of_ranks(spec, s);
    check_guards(spec, guards);
    return frb_of_ranks(spec, s);
}

bool shares(const BucketingFunctionSpec& spec, const Sequence& s, const Sequence& t, const Guards& guards) {
    const auto fs = buckets(spec, s, guards);
    const auto ft = buckets(spec, t, guards);
    return sorted_intersect(fs, ft);
}

bool sorted_intersect(std::span<const Code> a, std::span<const Code> b) noexcept {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return false;
}

std::size_t sorted_intersection_size(std::span<const Code> a, std::span<const Code> b) noexcept {
    std::size_t i = 0, j = 0, common = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++common;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return common;
}

}  // namespace lsb
