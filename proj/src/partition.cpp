#include "lsb/partition.hpp"

#include <algorithm>

#include "lsb/error.hpp"
#include "lsb/lsb12.hpp"

namespace lsb {

PartitionIndex PartitionIndex::from_one_based(std::size_t i, std::size_t sigma) {
    if (i < 1 || i > sigma) {
        throw InvalidInput("partition class " + std::to_string(i) + " outside 1.." + std::to_string(sigma));
    }
    return PartitionIndex(i - 1);
}

std::size_t partition_index_of(std::span<const Rank> ranks, std::size_t sigma) noexcept {
    if (ranks.empty()) return 0;
    std::size_t index = ranks.back();
    for (std::size_t i = ranks.size() - 1; i-- > 0;) {
        index = (index + sigma - ranks[i]) % sigma;
    }
    return index;
}

PartitionIndex partition_index(const Sequence& s) {
    if (s.size() == 0) throw InvalidInput("partition index of an empty sequence");
    return PartitionIndex(partition_index_of(s.ranks(), s.alphabet().size()));
}

bool is_member(const Sequence& s, PartitionIndex cls) {
    if (cls.value() >= s.alphabet().size()) {
        throw InvalidInput("partition class " + std::to_string(cls.one_based()) + " outside 1.." +
                           std::to_string(s.alphabet().size()));
    }
    return partition_index(s) == cls;
}

std::vector<Sequence> Partition::members(PartitionIndex cls) const {
    std::vector<Sequence> out;
    const auto& c = codes(cls);
    out.reserve(c.size());
    for (const auto code : c) out.push_back(space_.decode(code));
    return out;
}

std::vector<std::size_t> Partition::index_by_code() const {
    std::vector<std::size_t> index(static_cast<std::size_t>(space_.size()));
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        for (const auto code : classes_[i]) index[static_cast<std::size_t>(code)] = i;
    }
    return index;
}

Partition build_partition(const SequenceSpace& space) {
    space.require_enumerable(kTableGuard, "partition");
    const auto m = space.sigma();

    // S_1 = {c_1} ⊔ ... ⊔ {c_m}
    std::vector<std::vector<Code>> classes(m);
    for (std::size_t p = 0; p < m; ++p) classes[p] = {static_cast<Code>(p)};

    Code suffix_size = m;
    for (std::size_t length = 2; length <= space.length(); ++length) {
        std::vector<std::vector<Code>> next(m);
        for (std::size_t i = 0; i < m; ++i) {
            auto& cls = next[i];
            cls.reserve(static_cast<std::size_t>(suffix_size));
            // c_k is paired with class (i + k) mod m of S_{length-1}.
            for (std::size_t k = 0; k < m; ++k) {
                const Code head = static_cast<Code>(k) * suffix_size;
                for (const auto tail : classes[(i + k) % m]) cls.push_back(head + tail);
            }
        }
        classes = std::move(next);
        suffix_size *= m;
    }

    Partition partition(space);
    for (auto& cls : classes) std::sort(cls.begin(), cls.end());
    partition.classes_ = std::move(classes);
    return partition;
}

}  // namespace lsb
