#include "lsb/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <set>

#include "lsb/edit_distance.hpp"
#include "lsb/error.hpp"
#include "lsb/lsb12.hpp"
#include "lsb/neighborhood.hpp"
#include "lsb/parallel.hpp"
#include "lsb/partition.hpp"

namespace lsb {

namespace {

// Every sequence of S_n as a flat rank table, indexed by code.
class Enumeration {
public:
    Enumeration(const SequenceSpace& space, const OracleOptions& options)
        : space_(space), n_(space.length()), count_(static_cast<std::size_t>(space.size())) {
        ranks_.resize(count_ * n_);
        for (std::size_t code = 0; code < count_; ++code) {
            decode_into(code, space.sigma(), std::span<Rank>(ranks_.data() + code * n_, n_));
        }
        if (space.size() <= options.memo_limit) {
            memo_.resize(count_ * count_);
            parallel_strided(count_, options.threads, [&](unsigned, std::size_t i) {
                for (std::size_t j = i; j < count_; ++j) {
                    const auto d = static_cast<std::uint8_t>(levenshtein(at(i), at(j)));
                    memo_[i * count_ + j] = d;
                    memo_[j * count_ + i] = d;
                }
            });
        }
    }

    std::size_t count() const noexcept { return count_; }
    std::span<const Rank> at(std::size_t code) const noexcept { return {ranks_.data() + code * n_, n_}; }
    Sequence sequence(std::size_t code) const { return space_.decode(code); }

    std::size_t distance(std::size_t i, std::size_t j) const {
        if (!memo_.empty()) return memo_[i * count_ + j];
        return levenshtein(at(i), at(j));
    }

private:
    const SequenceSpace& space_;
    std::size_t n_;
    std::size_t count_;
    std::vector<Rank> ranks_;
    std::vector<std::uint8_t> memo_;
};

struct RawViolation {
    std::size_t i, j, distance;
    bool shared, expected;
};

// Per-worker accumulation, merged once the scan ends.
class ReportCollector {
public:
    ReportCollector(unsigned workers, const OracleOptions& options)
        : options_(options), found_(workers), counts_(workers, 0), checked_(workers, 0) {}

    bool stopped() const noexcept { return stop_.load(std::memory_order_relaxed); }

    void checked(unsigned w) noexcept { ++checked_[w]; }

    void add(unsigned w, RawViolation v) {
        ++counts_[w];
        if (found_[w].size() < options_.max_witnesses) found_[w].push_back(v);
        if (options_.fail_fast) stop_.store(true, std::memory_order_relaxed);
    }

    ViolationReport finish(const Enumeration& all, const std::string& property_ok,
                           const std::string& property_bad) {
        ViolationReport report;
        std::vector<RawViolation> merged;
        for (std::size_t w = 0; w < found_.size(); ++w) {
            report.violation_count += counts_[w];
            report.pairs_checked += checked_[w];
            merged.insert(merged.end(), found_[w].begin(), found_[w].end());
        }
        std::sort(merged.begin(), merged.end(),
                  [](const RawViolation& a, const RawViolation& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; });
        if (merged.size() > options_.max_witnesses) merged.resize(options_.max_witnesses);
        for (const auto& v : merged) {
            report.witnesses.push_back(Violation{v.expected ? property_ok : property_bad, all.sequence(v.i),
                                                 all.sequence(v.j), v.distance, v.shared, v.expected});
        }
        report.aborted = stopped();
        return report;
    }

private:
    const OracleOptions& options_;
    std::atomic<bool> stop_{false};
    std::vector<std::vector<RawViolation>> found_;
    std::vector<std::uint64_t> counts_;
    std::vector<std::uint64_t> checked_;
};

unsigned worker_count(std::size_t count, const OracleOptions& options) {
    return static_cast<unsigned>(std::clamp<std::size_t>(resolve_threads(options.threads), 1, std::max<std::size_t>(count, 1)));
}

// Materialized B as a membership table over codes.
std::vector<bool> bucket_set_table(const SequenceSpace& space, BucketSetKind kind, PartitionIndex cls) {
    const auto count = static_cast<std::size_t>(space.size());
    if (kind == BucketSetKind::full) return std::vector<bool>(count, true);
    if (cls.value() >= space.sigma()) {
        throw InvalidInput("partition class " + std::to_string(cls.one_based()) + " outside 1.." +
                           std::to_string(space.sigma()));
    }
    std::vector<bool> in_set(count, false);
    const auto partition = build_partition(space);
    for (const auto code : partition.codes(cls)) in_set[static_cast<std::size_t>(code)] = true;
    return in_set;
}

}  // namespace

ViolationReport check_lsb(const BucketingFunctionSpec& spec, Sensitivity claim, const OracleOptions& options) {
    const auto& space = spec.space();
    space.require_enumerable(options.max_space, "check_lsb");
    if (claim.d1 >= claim.d2) {
        throw InvalidInput("sensitivity needs d1 < d2, got (" + std::to_string(claim.d1) + ", " +
                           std::to_string(claim.d2) + ")");
    }

    const Enumeration all(space, options);
    const auto count = all.count();

    std::vector<std::vector<Code>> bucket_sets(count);
    parallel_strided(count, options.threads, [&](unsigned, std::size_t i) {
        bucket_sets[i] = buckets_of_ranks(spec, all.at(i), options.guards);
    });

    const unsigned workers = worker_count(count, options);
    ReportCollector collector(workers, options);
    parallel_strided(count, workers, [&](unsigned w, std::size_t i) {
        for (std::size_t j = i; j < count && !collector.stopped(); ++j) {
            collector.checked(w);
            const auto d = all.distance(i, j);
            bool expected;
            if (d <= claim.d1) expected = true;
            else if (d >= claim.d2) expected = false;
            else continue;
            const bool shared = sorted_intersect(bucket_sets[i], bucket_sets[j]);
            if (shared != expected) collector.add(w, {i, j, d, shared, expected});
        }
    });
    return collector.finish(all, "lsb-1", "lsb-2");
}

ViolationReport check_guaranteed(const SequenceSpace& space, BucketSetKind bucket_set, PartitionIndex cls,
                                 std::size_t d1, std::size_t radius, const OracleOptions& options) {
    space.require_enumerable(options.max_space, "check_guaranteed");
    const Enumeration all(space, options);
    const auto count = all.count();
    const auto in_set = bucket_set_table(space, bucket_set, cls);

    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < count; ++v) {
        if (in_set[v]) members.push_back(v);
    }

    // balls[s] = N^r(s) ∩ B as ascending codes.
    std::vector<std::vector<Code>> balls(count);
    parallel_strided(count, options.threads, [&](unsigned, std::size_t s) {
        for (const auto v : members) {
            if (all.distance(s, v) <= radius) balls[s].push_back(v);
        }
    });

    const unsigned workers = worker_count(count, options);
    ReportCollector collector(workers, options);
    parallel_strided(count, workers, [&](unsigned w, std::size_t i) {
        for (std::size_t j = i; j < count && !collector.stopped(); ++j) {
            const auto d = all.distance(i, j);
            if (d > d1) continue;
            collector.checked(w);
            if (!sorted_intersect(balls[i], balls[j])) collector.add(w, {i, j, d, false, true});
        }
    });
    return collector.finish(all, "guaranteed", "guaranteed");
}

CountsReport check_counts(const BucketingFunctionSpec& spec, const OracleOptions& options) {
    const auto& space = spec.space();
    space.require_enumerable(options.max_space, "check_counts");
    const Enumeration all(space, options);
    const auto count = all.count();
    const auto n = space.length();
    const auto m = space.sigma();

    std::vector<std::vector<Code>> bucket_sets(count);
    parallel_strided(count, options.threads, [&](unsigned, std::size_t i) {
        bucket_sets[i] = buckets_of_ranks(spec, all.at(i), options.guards);
    });

    CountsReport report;
    report.function = spec.name();
    std::vector<Code> used;
    for (const auto& b : bucket_sets) used.insert(used.end(), b.begin(), b.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    report.bucket_count = used.size();

    auto mismatch = [&](std::size_t code, const std::string& what) {
        if (report.mismatches.size() < options.max_witnesses) {
            report.mismatches.push_back(all.sequence(code).str() + ": " + what);
        }
    };

    // Ball sizes by DP scan, for the rows whose proved |f(s)| is |N^r(s)|.
    auto ball_size = [&](std::size_t s) {
        std::size_t size = 0;
        for (std::size_t v = 0; v < count; ++v) size += all.distance(s, v) <= spec.radius() ? 1 : 0;
        return size;
    };

    if (spec.kind() == FunctionKind::lsb12) {
        report.expected_bucket_count = lsb12_bucket_count(space);
        for (std::size_t s = 0; s < count; ++s) {
            const auto size = bucket_sets[s].size();
            ++report.histogram[size];
            if (size != n) mismatch(s, "|f(s)| = " + std::to_string(size) + ", expected n = " + std::to_string(n));
        }
    } else if (spec.bucket_set() == BucketSetKind::full) {
        report.expected_bucket_count = space.size();
        for (std::size_t s = 0; s < count; ++s) {
            const auto size = bucket_sets[s].size();
            ++report.histogram[size];
            const auto expected = spec.radius() == 1 ? radius_one_ball_size(n, m) : ball_size(s);
            if (size != expected) {
                mismatch(s, "|f(s)| = " + std::to_string(size) + ", expected |N^r(s)| = " + std::to_string(expected));
            }
        }
    } else {
        report.expected_bucket_count = space.size() / m;
        for (std::size_t s = 0; s < count; ++s) {
            const auto size = bucket_sets[s].size();
            ++report.histogram[size];
            const bool member = spec.in_bucket_set(all.at(s));
            ++(member ? report.member_histogram : report.nonmember_histogram)[size];
            if (spec.radius() == 1) {
                const std::size_t expected = member ? 1 : n;
                if (size != expected) {
                    mismatch(s, "|f(s)| = " + std::to_string(size) + ", expected " + std::to_string(expected) +
                                    (member ? " (member)" : " (non-member)"));
                }
            } else if (size < 1 || size > ball_size(s)) {
                mismatch(s, "|f(s)| = " + std::to_string(size) + " outside 1..|N^r(s)|");
            }
        }
    }
    if (report.bucket_count != report.expected_bucket_count) {
        report.mismatches.insert(report.mismatches.begin(),
                                 "|B| = " + to_decimal(report.bucket_count) + ", expected " +
                                     to_decimal(report.expected_bucket_count));
    }
    return report;
}

ViolationReport check_lsb12_lower_bound_witness(const SequenceSpace& space, const OracleOptions& options) {
    space.require_enumerable(options.max_space, "check_lsb12_lower_bound_witness");
    const auto spec = BucketingFunctionSpec::lsb12(space);
    const Enumeration all(space, options);
    const auto count = all.count();
    const auto n = space.length();
    const auto m = space.sigma();

    const unsigned workers = worker_count(count, options);
    ReportCollector collector(workers, options);
    parallel_strided(count, workers, [&](unsigned w, std::size_t s) {
        if (collector.stopped()) return;
        const auto fs = buckets_of_ranks(spec, all.at(s));
        std::vector<std::vector<Rank>> variants(n, std::vector<Rank>(all.at(s).begin(), all.at(s).end()));
        std::set<Code> meeting_buckets;
        for (std::size_t i = 0; i < n; ++i) {
            variants[i][i] = static_cast<Rank>((variants[i][i] + 1) % m);
            const auto fv = buckets_of_ranks(spec, variants[i]);
            for (const auto b : fs) {
                if (std::binary_search(fv.begin(), fv.end(), b)) meeting_buckets.insert(b);
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                collector.checked(w);
                const auto d = levenshtein(variants[i], variants[j]);
                if (d < 2) {
                    const auto vi = static_cast<std::size_t>(encode(variants[i], m));
                    const auto vj = static_cast<std::size_t>(encode(variants[j], m));
                    collector.add(w, {vi, vj, d, true, false});
                }
            }
        }
        if (meeting_buckets.size() != n) collector.add(w, {s, s, 0, true, false});
    });
    return collector.finish(all, "independent-set", "independent-set");
}

}  // namespace lsb
