#include "lsb/lsb12.hpp"

#include "lsb/edit_distance.hpp"
#include "lsb/error.hpp"

namespace lsb {

namespace {

Code punctured_size(const SequenceSpace& space) {
    // m^{n-1} ≤ mⁿ, which the space already holds.
    return space.size() / space.sigma();
}

Code puncture(std::span<const Rank> ranks, std::size_t position, std::size_t m) {
    Code code = 0;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (i + 1 == position) continue;
        code = code * m + ranks[i];
    }
    return code;
}

}  // namespace

Code lsb12_bucket_count(const SequenceSpace& space) {
    const Code per_position = punctured_size(space);
    const Code n = space.length();
    if (per_position > static_cast<Code>(-1) / n) {
        throw CapacityError("n·m^(n-1) bucket ids overflow the 128-bit label space for n = " +
                            std::to_string(space.length()) + ", m = " + std::to_string(space.sigma()));
    }
    return per_position * n;
}

Code Lsb12BucketId::packed(const SequenceSpace& space) const {
    if (position < 1 || position > space.length()) {
        throw InvalidInput("bucket position " + std::to_string(position) + " outside 1.." +
                           std::to_string(space.length()));
    }
    lsb12_bucket_count(space);
    return static_cast<Code>(position - 1) * punctured_size(space) + punctured;
}

Lsb12BucketId Lsb12BucketId::unpack(Code packed, const SequenceSpace& space) {
    if (packed >= lsb12_bucket_count(space)) {
        throw InvalidInput("bucket id " + to_decimal(packed) + " outside the id space");
    }
    const Code per_position = punctured_size(space);
    return Lsb12BucketId{static_cast<std::size_t>(packed / per_position) + 1, packed % per_position};
}

std::vector<Lsb12BucketId> lsb12_bucket_ids(const Sequence& s) {
    const auto m = s.alphabet().size();
    std::vector<Lsb12BucketId> ids;
    ids.reserve(s.size());
    for (std::size_t i = 1; i <= s.size(); ++i) ids.push_back({i, puncture(s.ranks(), i, m)});
    return ids;
}

std::vector<Code> lsb12_buckets(const Sequence& s) {
    const SequenceSpace space(s.alphabet_ptr(), s.size());
    const Code per_position = punctured_size(space);
    lsb12_bucket_count(space);
    std::vector<Code> out;
    out.reserve(s.size());
    for (const auto& id : lsb12_bucket_ids(s)) {
        out.push_back(static_cast<Code>(id.position - 1) * per_position + id.punctured);
    }
    return out;
}

bool lsb12_shares(const Sequence& s, const Sequence& t) {
    if (!Sequence::same_alphabet(s, t) || s.size() != t.size()) {
        throw InvalidInput("lsb12_shares requires sequences of one space");
    }
    return hamming(s.ranks(), t.ranks()) <= 1;
}

const std::vector<std::uint64_t>& Lsb12Table::buckets_of(const Sequence& s) const {
    return buckets_of_code(space_.encode(s));
}

std::vector<std::vector<Code>> Lsb12Table::bucket_members() const {
    std::vector<std::vector<Code>> members(bucket_count_);
    for (std::size_t code = 0; code < labels_.size(); ++code) {
        for (const auto label : labels_[code]) members[label - 1].push_back(code);
    }
    return members;
}

Lsb12Table lsb12_build_table(const SequenceSpace& space) {
    space.require_enumerable(kTableGuard, "lsb12 table");
    const auto m = space.sigma();
    const auto n = space.length();
    const auto total = static_cast<std::size_t>(space.size());

    Lsb12Table table(space);
    table.labels_.assign(total, {});
    std::uint64_t next_label = 1;
    std::vector<Rank> s(n), t(n);
    for (std::size_t code = 0; code < total; ++code) {
        decode_into(code, m, s);
        for (std::size_t i = 0; i < n; ++i) {
            if (s[i] != 0) continue;
            t = s;
            for (std::size_t j = 0; j < m; ++j) {
                t[i] = static_cast<Rank>(j);
                table.labels_[static_cast<std::size_t>(encode(t, m))].push_back(next_label);
            }
            ++next_label;
        }
    }
    table.bucket_count_ = next_label - 1;
    return table;
}

}  // namespace lsb
