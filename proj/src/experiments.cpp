#include "lsb/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "lsb/edit_distance.hpp"
#include "lsb/error.hpp"
#include "lsb/parallel.hpp"

namespace lsb {

namespace {

constexpr std::uint64_t kSweepStream = 0xffffffffULL;

enum class Edit : std::uint8_t { substitution, indel_pair };

void substitute(std::vector<Rank>& t, std::size_t m, SplitMix64& rng) {
    const auto pos = rng.uniform(t.size());
    const auto shift = 1 + rng.uniform(m - 1);
    t[pos] = static_cast<Rank>((t[pos] + shift) % m);
}

void indel_pair(std::vector<Rank>& t, std::size_t m, SplitMix64& rng) {
    const auto del = rng.uniform(t.size());
    t.erase(t.begin() + static_cast<std::ptrdiff_t>(del));
    const auto ins = rng.uniform(t.size() + 1);
    t.insert(t.begin() + static_cast<std::ptrdiff_t>(ins), static_cast<Rank>(rng.uniform(m)));
}

std::vector<Rank> uniform_sequence(std::size_t n, std::size_t m, SplitMix64& rng) {
    std::vector<Rank> s(n);
    for (auto& c : s) c = static_cast<Rank>(rng.uniform(m));
    return s;
}

using RankPair = std::pair<std::vector<Rank>, std::vector<Rank>>;

std::string describe(const SequenceSpace& space, const std::string& what) {
    return what + " (n = " + std::to_string(space.length()) + ", m = " + std::to_string(space.sigma()) + ")";
}

RankPair draw_at_distance(const SequenceSpace& space, std::size_t d, SplitMix64& rng, std::size_t max_attempts) {
    const auto n = space.length();
    const auto m = space.sigma();
    if (d > n) throw InvalidInput(describe(space, "distance " + std::to_string(d) + " exceeds the sequence length"));
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        auto s = uniform_sequence(n, m, rng);
        auto t = s;
        std::size_t remaining = d;
        while (remaining > 0) {
            if (remaining >= 2 && rng.coin()) {
                indel_pair(t, m, rng);
                remaining -= 2;
            } else {
                substitute(t, m, rng);
                remaining -= 1;
            }
        }
        if (levenshtein(s, t) == d) return {std::move(s), std::move(t)};
    }
    throw GenerationError(describe(space, "no pair at distance " + std::to_string(d) + " after " +
                                              std::to_string(max_attempts) + " attempts"));
}

RankPair draw_of_type(const SequenceSpace& space, std::size_t a, std::size_t b, SplitMix64& rng,
                      std::size_t max_attempts) {
    const auto n = space.length();
    const auto m = space.sigma();
    const auto d = a + 2 * b;
    if (d > n) throw InvalidInput(describe(space, "edit type " + EditType{a, b}.label() + " exceeds the sequence length"));
    std::vector<Edit> plan(a, Edit::substitution);
    plan.insert(plan.end(), b, Edit::indel_pair);
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        for (std::size_t i = plan.size(); i > 1; --i) std::swap(plan[i - 1], plan[rng.uniform(i)]);
        auto s = uniform_sequence(n, m, rng);
        auto t = s;
        for (const auto e : plan) {
            if (e == Edit::substitution) substitute(t, m, rng);
            else indel_pair(t, m, rng);
        }
        if (levenshtein(s, t) != d) continue;
        if (min_indel_pairs(s, t, d) != b) continue;
        return {std::move(s), std::move(t)};
    }
    throw GenerationError(describe(space, "no pair of type " + EditType{a, b}.label() + " after " +
                                              std::to_string(max_attempts) + " attempts"));
}

std::pair<Sequence, Sequence> wrap(const SequenceSpace& space, RankPair&& p) {
    return {Sequence(space.alphabet_ptr(), std::move(p.first)), Sequence(space.alphabet_ptr(), std::move(p.second))};
}

template <typename Draw>
std::uint64_t count_shared(const BucketingFunctionSpec& spec, std::uint64_t trials, const ExperimentOptions& options,
                           Draw&& draw) {
    const unsigned workers = resolve_threads(options.threads);
    std::vector<std::uint64_t> shared(workers, 0);
    parallel_ranges(static_cast<std::size_t>(trials), workers, [&](unsigned w, std::size_t begin, std::size_t end) {
        for (std::size_t trial = begin; trial < end; ++trial) {
            const auto [s, t] = draw(static_cast<std::uint64_t>(trial));
            const auto fs = buckets_of_ranks(spec, s, options.guards);
            const auto ft = buckets_of_ranks(spec, t, options.guards);
            if (sorted_intersect(fs, ft)) ++shared[w];
        }
    });
    std::uint64_t total = 0;
    for (const auto c : shared) total += c;
    return total;
}

ExperimentRecord base_record(const BucketingFunctionSpec& spec, std::size_t d, std::uint64_t trials,
                             std::uint64_t seed) {
    ExperimentRecord r;
    r.function = spec.name();
    r.n = spec.space().length();
    r.sigma = spec.space().sigma();
    r.d = d;
    r.trials = trials;
    r.seed = seed;
    return r;
}

}  // namespace

std::pair<Sequence, Sequence> gen_pair(const SequenceSpace& space, std::size_t d, SplitMix64& rng,
                                       std::size_t max_attempts) {
    return wrap(space, draw_at_distance(space, d, rng, max_attempts));
}

std::pair<Sequence, Sequence> gen_pair_of_type(const SequenceSpace& space, std::size_t substitutions,
                                               std::size_t indel_pairs, SplitMix64& rng, std::size_t max_attempts) {
    return wrap(space, draw_of_type(space, substitutions, indel_pairs, rng, max_attempts));
}

std::vector<ExperimentRecord> run_distance_sweep(const BucketingFunctionSpec& spec, std::size_t d_max,
                                                 std::uint64_t trials, std::uint64_t seed,
                                                 const ExperimentOptions& options) {
    if (trials == 0) throw InvalidInput("an experiment needs at least one trial");
    const auto claim = claimed_sensitivity(spec);
    std::vector<ExperimentRecord> records;
    for (std::size_t d = 1; d <= d_max; ++d) {
        auto record = base_record(spec, d, trials, seed);
        record.shared = count_shared(spec, trials, options, [&](std::uint64_t trial) {
            auto rng = substream(seed, d, kSweepStream, trial);
            return draw_at_distance(spec.space(), d, rng, options.max_attempts);
        });
        if (d <= claim.d1 && record.shared != trials) {
            throw RailViolation(spec.name() + ": only " + std::to_string(record.shared) + " of " +
                                std::to_string(trials) + " pairs at distance " + std::to_string(d) +
                                " share a bucket, but every pair within d1 = " + std::to_string(claim.d1) + " must");
        }
        if (d >= claim.d2 && record.shared != 0) {
            throw RailViolation(spec.name() + ": " + std::to_string(record.shared) + " pairs at distance " +
                                std::to_string(d) + " share a bucket, but no pair at d2 = " +
                                std::to_string(claim.d2) + " or beyond may");
        }
        records.push_back(std::move(record));
    }
    return records;
}

std::vector<ExperimentRecord> run_gap_by_type(const BucketingFunctionSpec& spec, std::size_t d, std::uint64_t trials,
                                              std::uint64_t seed, const ExperimentOptions& options) {
    if (trials == 0) throw InvalidInput("an experiment needs at least one trial");
    const auto claim = claimed_sensitivity(spec);
    if (d <= claim.d1 || d >= claim.d2) {
        throw InvalidInput("distance " + std::to_string(d) + " is outside the gap (" + std::to_string(claim.d1) +
                           ", " + std::to_string(claim.d2) + ") of " + spec.name());
    }
    std::vector<ExperimentRecord> records;
    for (std::size_t b = 0; 2 * b <= d; ++b) {
        const std::size_t a = d - 2 * b;
        auto record = base_record(spec, d, trials, seed);
        record.category = EditType{a, b}.label();
        record.shared = count_shared(spec, trials, options, [&](std::uint64_t trial) {
            auto rng = substream(seed, d, b, trial);
            return draw_of_type(spec.space(), a, b, rng, options.max_attempts);
        });
        records.push_back(std::move(record));
    }
    return records;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
    out << kCsvHeader << '\n';
    for (const auto& r : records) {
        char frequency[32];
        std::snprintf(frequency, sizeof frequency, "%.6f", r.frequency());
        out << r.function << ',' << r.n << ',' << r.sigma << ',' << r.d << ',' << r.category << ',' << r.trials
            << ',' << r.shared << ',' << frequency << ',' << r.seed << '\n';
    }
}

}  // namespace lsb
