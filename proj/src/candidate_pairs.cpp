#include "lsb/candidate_pairs.hpp"

#include <algorithm>

#include "lsb/error.hpp"
#include "lsb/parallel.hpp"

namespace lsb {

std::vector<CandidatePair> candidate_pairs(const BucketingFunctionSpec& spec, std::span<const Sequence> sequences,
                                           const IndexLimits& limits) {
    for (const auto& s : sequences) spec.space().require_member(s);

    std::vector<std::vector<Code>> bucket_sets(sequences.size());
    parallel_ranges(sequences.size(), limits.threads, [&](unsigned, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) bucket_sets[i] = buckets(spec, sequences[i], limits.guards);
    });

    struct Posting {
        Code bucket;
        std::size_t sequence;
    };
    std::vector<Posting> postings;
    for (std::size_t i = 0; i < bucket_sets.size(); ++i) {
        if (postings.size() + bucket_sets[i].size() > limits.max_postings) {
            throw CapacityError("inverted index exceeds " + std::to_string(limits.max_postings) +
                                " postings; use fewer sequences or a smaller radius");
        }
        for (const auto b : bucket_sets[i]) postings.push_back({b, i});
    }
    std::sort(postings.begin(), postings.end(), [](const Posting& x, const Posting& y) {
        return x.bucket != y.bucket ? x.bucket < y.bucket : x.sequence < y.sequence;
    });

    std::vector<std::pair<std::size_t, std::size_t>> hits;
    for (std::size_t lo = 0; lo < postings.size();) {
        std::size_t hi = lo;
        while (hi < postings.size() && postings[hi].bucket == postings[lo].bucket) ++hi;
        for (std::size_t a = lo; a < hi; ++a) {
            for (std::size_t b = a + 1; b < hi; ++b) {
                if (hits.size() >= limits.max_pair_hits) {
                    throw CapacityError("more than " + std::to_string(limits.max_pair_hits) +
                                        " bucket co-occurrences; the corpus is too redundant for an in-memory index");
                }
                hits.emplace_back(postings[a].sequence, postings[b].sequence);
            }
        }
        lo = hi;
    }
    std::sort(hits.begin(), hits.end());

    std::vector<CandidatePair> pairs;
    for (std::size_t lo = 0; lo < hits.size();) {
        std::size_t hi = lo;
        while (hi < hits.size() && hits[hi] == hits[lo]) ++hi;
        pairs.push_back({hits[lo].first, hits[lo].second, hi - lo});
        lo = hi;
    }
    return pairs;
}

}  // namespace lsb
