#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "lsb/bucketing.hpp"
#include "lsb/random.hpp"
#include "lsb/sequence.hpp"

namespace lsb {

/// One CSV row of a sharing-frequency experiment.
struct ExperimentRecord {
    std::string function;
    std::size_t n = 0;
    std::size_t sigma = 0;
    std::size_t d = 0;
    std::string category = "all";  ///< "a+b×2" for edit-type runs
    std::uint64_t trials = 0;
    std::uint64_t shared = 0;
    std::uint64_t seed = 0;

    double frequency() const noexcept { return trials == 0 ? 0.0 : static_cast<double>(shared) / trials; }
};

inline constexpr std::size_t kDefaultMaxAttempts = 1000;

/// A uniform s and a t with edit(s, t) = d exactly. Edits are drawn one at a time,
/// each a substitution or half of a balanced indel pair; pairs landing below d are
/// redrawn, up to `max_attempts` times.
std::pair<Sequence, Sequence> gen_pair(const SequenceSpace& space, std::size_t d, SplitMix64& rng,
                                       std::size_t max_attempts = kDefaultMaxAttempts);

/// A pair at distance a + 2b whose cheapest realization needs exactly b indel pairs.
std::pair<Sequence, Sequence> gen_pair_of_type(const SequenceSpace& space, std::size_t substitutions,
                                               std::size_t indel_pairs, SplitMix64& rng,
                                               std::size_t max_attempts = kDefaultMaxAttempts);

struct ExperimentOptions {
    unsigned threads = 0;
    std::size_t max_attempts = kDefaultMaxAttempts;
    Guards guards{};
};

/// For d = 1..d_max: `trials` pairs at distance d, counting those that share a bucket.
/// Throws RailViolation if any d ≤ d1 pair fails to share or any d ≥ d2 pair shares.
std::vector<ExperimentRecord> run_distance_sweep(const BucketingFunctionSpec& spec, std::size_t d_max,
                                                 std::uint64_t trials, std::uint64_t seed,
                                                 const ExperimentOptions& options = {});

/// At a distance d inside the gap (d1 < d < d2): one record per category
/// b = 0..⌊d/2⌋, each from pairs of type (d - 2b) + b×2.
std::vector<ExperimentRecord> run_gap_by_type(const BucketingFunctionSpec& spec, std::size_t d,
                                              std::uint64_t trials, std::uint64_t seed,
                                              const ExperimentOptions& options = {});

inline constexpr const char* kCsvHeader = "function,n,sigma,d,category,trials,shared,frequency,seed";

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);

}  // namespace lsb
