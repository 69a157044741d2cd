#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "lsb/bucketing.hpp"
#include "lsb/candidate_pairs.hpp"
#include "lsb/error.hpp"
#include "lsb/experiments.hpp"
#include "lsb/lsb12.hpp"
#include "lsb/oracle.hpp"
#include "lsb/partition.hpp"
#include "lsb/sequence_io.hpp"

namespace lsb::cli {

namespace {

struct GlobalOptions {
    std::string sigma = "ACGT";
    std::optional<std::size_t> n;
    std::string fn = "frb";
    std::size_t r = 2;
    std::string bucket_set = "partition";
    std::size_t cls = 1;
    std::uint64_t seed = 1;
    std::string out_path;
    bool json = false;
    bool quick = false;
    unsigned threads = 0;
    std::size_t max_radius = Guards{}.max_radius;
    std::size_t max_length = Guards{}.max_length;
};

struct InputOptions {
    std::string path;
    std::optional<std::size_t> window;
};

Guards guards_of(const GlobalOptions& g) { return Guards{g.max_radius, g.max_length}; }

BucketingFunctionSpec make_spec(const GlobalOptions& g, SequenceSpace space) {
    if (g.fn == "lsb12") return BucketingFunctionSpec::lsb12(std::move(space));
    if (g.fn != "frb") throw InvalidInput("unknown --fn '" + g.fn + "' (expected lsb12 or frb)");
    if (g.bucket_set == "full") return BucketingFunctionSpec::frb_full(std::move(space), g.r);
    if (g.bucket_set != "partition") {
        throw InvalidInput("unknown --B '" + g.bucket_set + "' (expected full or partition)");
    }
    const auto cls = PartitionIndex::from_one_based(g.cls, space.sigma());
    return BucketingFunctionSpec::frb_partition(std::move(space), g.r, cls);
}

std::vector<SequenceRecord> load(const GlobalOptions& g, const InputOptions& input, const AlphabetPtr& alphabet,
                                 std::istream& in) {
    ReadOptions options{g.n, input.window};
    if (input.path.empty() || input.path == "-") return read_sequences(in, alphabet, options);
    std::ifstream file(input.path);
    if (!file) throw InvalidInput("cannot open " + input.path);
    return read_sequences(file, alphabet, options);
}

std::string label_text(const BucketingFunctionSpec& spec, Code label, bool glyphs) {
    if (!glyphs) return to_decimal(label);
    const auto& space = spec.space();
    if (spec.kind() == FunctionKind::frb) return space.decode(label).str();
    const auto id = Lsb12BucketId::unpack(label, space);
    std::vector<Rank> punctured(space.length() - 1);
    decode_into(id.punctured, space.sigma(), punctured);
    std::string text = std::to_string(id.position) + ":";
    for (const auto r : punctured) text.push_back(space.alphabet().glyph(r));
    return text;
}

bool is_fasta_like(const std::vector<SequenceRecord>& records, const InputOptions& input) {
    if (input.window) return true;
    if (records.empty()) return false;
    // Plain-text tags are line numbers.
    return records.front().tag.find_first_not_of("0123456789") != std::string::npos;
}

int cmd_bucket(const GlobalOptions& g, const InputOptions& input, bool glyphs, std::istream& in, std::ostream& out) {
    const auto alphabet = make_alphabet(g.sigma);
    const auto records = load(g, input, alphabet, in);
    if (records.empty()) return kSuccess;
    const auto spec = make_spec(g, SequenceSpace(alphabet, records.front().sequence.size()));
    const bool with_tags = is_fasta_like(records, input);
    for (const auto& rec : records) {
        const auto labels = buckets(spec, rec.sequence, guards_of(g));
        if (with_tags) out << rec.tag << '\t';
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (i) out << '\t';
            out << label_text(spec, labels[i], glyphs);
        }
        out << '\n';
    }
    return kSuccess;
}

int cmd_pairs(const GlobalOptions& g, const InputOptions& input, std::istream& in, std::ostream& out) {
    const auto alphabet = make_alphabet(g.sigma);
    const auto records = load(g, input, alphabet, in);
    if (records.empty()) return kSuccess;
    const auto spec = make_spec(g, SequenceSpace(alphabet, records.front().sequence.size()));
    std::vector<Sequence> sequences;
    sequences.reserve(records.size());
    for (const auto& rec : records) sequences.push_back(rec.sequence);

    IndexLimits limits;
    limits.threads = g.threads;
    limits.guards = guards_of(g);
    for (const auto& p : candidate_pairs(spec, sequences, limits)) {
        out << records[p.first].tag << '\t' << records[p.second].tag << '\t' << p.shared_buckets << '\n';
    }
    return kSuccess;
}

int cmd_partition(const GlobalOptions& g, const InputOptions& input, std::optional<std::size_t> check,
                  std::istream& in, std::ostream& out) {
    const auto alphabet = make_alphabet(g.sigma);
    const auto records = load(g, input, alphabet, in);
    const bool with_tags = is_fasta_like(records, input);
    std::optional<PartitionIndex> target;
    if (check) target = PartitionIndex::from_one_based(*check, alphabet->size());
    for (const auto& rec : records) {
        if (with_tags) out << rec.tag << '\t';
        if (target) out << (is_member(rec.sequence, *target) ? "member" : "non-member") << '\n';
        else out << partition_index(rec.sequence).one_based() << '\n';
    }
    return kSuccess;
}

nlohmann::json report_json(const ViolationReport& report) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& v : report.witnesses) {
        witnesses.push_back({{"property", v.property},
                             {"s", v.s.str()},
                             {"t", v.t.str()},
                             {"distance", v.distance},
                             {"shared", v.shared},
                             {"expected_shared", v.expected_shared}});
    }
    return {{"holds", report.holds()},
            {"pairs_checked", report.pairs_checked},
            {"violation_count", report.violation_count},
            {"aborted", report.aborted},
            {"witnesses", witnesses}};
}

void print_report(std::ostream& out, const std::string& title, const ViolationReport& report) {
    out << (report.holds() ? "PASS " : "FAIL ") << title << ": " << report.pairs_checked << " pairs checked, "
        << report.violation_count << " violations" << (report.aborted ? " (stopped at first)" : "") << '\n';
    for (const auto& v : report.witnesses) {
        out << "  " << v.property << '\t' << v.s.str() << '\t' << v.t.str() << "\tedit=" << v.distance
            << "\tshared=" << (v.shared ? "yes" : "no") << "\texpected=" << (v.expected_shared ? "yes" : "no")
            << '\n';
    }
}

struct VerifyOptions {
    std::string mode = "lsb";
    std::optional<std::size_t> d1;
    std::optional<std::size_t> d2;
    bool fail_fast = false;
    std::size_t max_witnesses = 100;
    std::uint64_t max_space = std::uint64_t{1} << 12;
};

int cmd_verify(const GlobalOptions& g, const VerifyOptions& v, std::ostream& out) {
    if (!g.n) throw InvalidInput("verify needs --n");
    const auto alphabet = make_alphabet(g.sigma);
    const SequenceSpace space(alphabet, *g.n);

    OracleOptions options;
    options.fail_fast = v.fail_fast;
    options.max_witnesses = v.max_witnesses;
    options.max_space = v.max_space;
    options.threads = g.threads;
    options.guards = guards_of(g);

    if (v.mode == "counts") {
        const auto spec = make_spec(g, space);
        const auto report = check_counts(spec, options);
        auto histogram = [](const std::map<std::size_t, std::uint64_t>& h) {
            nlohmann::json j = nlohmann::json::object();
            for (const auto& [size, count] : h) j[std::to_string(size)] = count;
            return j;
        };
        if (g.json) {
            out << nlohmann::json{{"function", report.function},
                                  {"n", space.length()},
                                  {"sigma", space.sigma()},
                                  {"bucket_count", to_decimal(report.bucket_count)},
                                  {"expected_bucket_count", to_decimal(report.expected_bucket_count)},
                                  {"histogram", histogram(report.histogram)},
                                  {"member_histogram", histogram(report.member_histogram)},
                                  {"nonmember_histogram", histogram(report.nonmember_histogram)},
                                  {"matches", report.matches()},
                                  {"mismatches", report.mismatches}}
                       .dump(2)
                << '\n';
        } else {
            out << (report.matches() ? "PASS " : "FAIL ") << report.function << " counts: |B| = "
                << to_decimal(report.bucket_count) << " (expected " << to_decimal(report.expected_bucket_count)
                << ")\n";
            for (const auto& [size, count] : report.histogram) out << "  |f(s)| = " << size << ": " << count << '\n';
            for (const auto& m : report.mismatches) out << "  " << m << '\n';
        }
        return report.matches() ? kSuccess : kViolation;
    }

    ViolationReport report;
    std::string title;
    nlohmann::json header;
    if (v.mode == "guaranteed") {
        if (!v.d1) throw InvalidInput("guaranteed mode needs --d1");
        const auto kind = g.bucket_set == "full" ? BucketSetKind::full : BucketSetKind::partition;
        if (g.bucket_set != "full" && g.bucket_set != "partition") {
            throw InvalidInput("unknown --B '" + g.bucket_set + "' (expected full or partition)");
        }
        const auto cls = PartitionIndex::from_one_based(g.cls, space.sigma());
        report = check_guaranteed(space, kind, cls, *v.d1, g.r, options);
        const std::string set = kind == BucketSetKind::full ? "S_n" : "B^" + std::to_string(cls.one_based());
        title = set + " (" + std::to_string(*v.d1) + "," + std::to_string(g.r) + ")-guaranteed";
        header = {{"bucket_set", set}, {"d1", *v.d1}, {"r", g.r}};
    } else if (v.mode == "lsb") {
        const auto spec = make_spec(g, space);
        const auto claimed = claimed_sensitivity(spec);
        const Sensitivity claim{v.d1.value_or(claimed.d1), v.d2.value_or(claimed.d2)};
        report = check_lsb(spec, claim, options);
        title = spec.name() + " (" + std::to_string(claim.d1) + "," + std::to_string(claim.d2) + ")-sensitive";
        header = {{"function", spec.name()}, {"d1", claim.d1}, {"d2", claim.d2}};
    } else {
        throw InvalidInput("unknown --mode '" + v.mode + "' (expected lsb, guaranteed or counts)");
    }
    title += " on n=" + std::to_string(space.length()) + " sigma=" + std::to_string(space.sigma());

    if (g.json) {
        auto j = report_json(report);
        j.update(header);
        j["n"] = space.length();
        j["sigma"] = space.sigma();
        out << j.dump(2) << '\n';
    } else {
        print_report(out, title, report);
    }
    return report.holds() ? kSuccess : kViolation;
}

struct ExperimentCliOptions {
    std::size_t d_max = 6;
    std::optional<std::size_t> d;
    std::uint64_t trials = 100000;
};

int cmd_experiment(const GlobalOptions& g, const ExperimentCliOptions& e, bool gap, std::ostream& out) {
    const auto alphabet = make_alphabet(g.sigma);
    const auto spec = make_spec(g, SequenceSpace(alphabet, g.n.value_or(20)));
    const std::uint64_t trials = g.quick ? 5000 : e.trials;
    ExperimentOptions options;
    options.threads = g.threads;
    options.guards = guards_of(g);

    std::vector<ExperimentRecord> records;
    if (gap) {
        const auto claim = claimed_sensitivity(spec);
        if (e.d) {
            records = run_gap_by_type(spec, *e.d, trials, g.seed, options);
        } else {
            for (auto d = claim.d1 + 1; d < claim.d2; ++d) {
                auto part = run_gap_by_type(spec, d, trials, g.seed, options);
                records.insert(records.end(), part.begin(), part.end());
            }
        }
    } else {
        records = run_distance_sweep(spec, e.d_max, trials, g.seed, options);
    }

    if (g.out_path.empty() || g.out_path == "-") {
        write_csv(out, records);
    } else {
        std::ofstream file(g.out_path, std::ios::binary);
        if (!file) throw InvalidInput("cannot write " + g.out_path);
        write_csv(file, records);
    }
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Locality-sensitive bucketing of fixed-length sequences under edit distance", "lsb"};
    app.fallthrough();
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--sigma", g.sigma, "Alphabet glyphs in rank order")->capture_default_str();
    app.add_option("--n", g.n, "Sequence length");
    app.add_option("--fn", g.fn, "Bucketing function: lsb12 or frb")->capture_default_str();
    app.add_option("--r", g.r, "Neighborhood radius for frb")->capture_default_str();
    app.add_option("--B", g.bucket_set, "Bucket set for frb: full or partition")->capture_default_str();
    app.add_option("--class", g.cls, "Partition class (1-based) for --B partition")->capture_default_str();
    app.add_option("--seed", g.seed, "Experiment seed")->capture_default_str();
    app.add_option("--out", g.out_path, "Output file (default stdout)");
    app.add_flag("--json", g.json, "JSON report (verify)");
    app.add_flag("--quick", g.quick, "5,000 trials per experiment cell");
    app.add_option("--threads", g.threads, "Worker threads, 0 = all cores")->capture_default_str();
    app.add_option("--max-radius", g.max_radius, "Neighborhood radius guard")->capture_default_str();
    app.add_option("--max-length", g.max_length, "Neighborhood length guard")->capture_default_str();

    InputOptions input;
    bool glyphs = false;
    auto* bucket = app.add_subcommand("bucket", "Print the bucket labels of each input sequence");
    bucket->add_option("input", input.path, "Sequence file (default stdin)");
    bucket->add_option("--window", input.window, "Tile FASTA records into windows of this length");
    bucket->add_flag("--glyphs", glyphs, "Print labels as sequence text");

    auto* pairs = app.add_subcommand("pairs", "Print every pair of inputs sharing a bucket");
    pairs->add_option("input", input.path, "Sequence file (default stdin)");
    pairs->add_option("--window", input.window, "Tile FASTA records into windows of this length");

    std::optional<std::size_t> check;
    bool index_flag = false;
    auto* partition = app.add_subcommand("partition", "Partition class queries");
    partition->add_option("input", input.path, "Sequence file (default stdin)");
    partition->add_option("--window", input.window, "Tile FASTA records into windows of this length");
    auto* index_opt = partition->add_flag("--index", index_flag, "Print the 1-based class of each sequence");
    partition->add_option("--check", check, "Print member/non-member for class i")->excludes(index_opt);

    VerifyOptions v;
    auto* verify = app.add_subcommand("verify", "Exhaustively certify a construction on S_n");
    verify->add_option("--mode", v.mode, "lsb, guaranteed or counts")->capture_default_str();
    verify->add_option("--d1", v.d1, "Distance that must share (default: the proved value)");
    verify->add_option("--d2", v.d2, "Distance that must not share (default: the proved value)");
    verify->add_flag("--fail-fast", v.fail_fast, "Stop at the first violation");
    verify->add_option("--max-witnesses", v.max_witnesses, "Witness pairs to report")->capture_default_str();
    verify->add_option("--max-space", v.max_space, "Largest |S_n| to enumerate")->capture_default_str();

    ExperimentCliOptions e;
    auto* experiment = app.add_subcommand("experiment", "Sharing-frequency experiments as CSV");
    experiment->require_subcommand(1);
    auto* sweep = experiment->add_subcommand("sweep", "Frequency by edit distance, d = 1..d-max");
    sweep->add_option("--d-max", e.d_max, "Largest distance")->capture_default_str();
    sweep->add_option("--trials", e.trials, "Pairs per distance")->capture_default_str();
    auto* gap = experiment->add_subcommand("gap", "Frequency by edit type inside the gap");
    gap->add_option("--d", e.d, "Gap distance (default: every distance in the gap)");
    gap->add_option("--trials", e.trials, "Pairs per category")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& ex) {
        err << "lsb: " << ex.what() << '\n';
        return kUsage;
    }

    try {
        if (*bucket) return cmd_bucket(g, input, glyphs, in, out);
        if (*pairs) return cmd_pairs(g, input, in, out);
        if (*partition) return cmd_partition(g, input, check, in, out);
        if (*verify) return cmd_verify(g, v, out);
        if (*experiment) return cmd_experiment(g, e, gap->parsed(), out);
    } catch (const CapacityError& ex) {
        err << "lsb: " << ex.what() << '\n';
        return kCapacity;
    } catch (const GenerationError& ex) {
        err << "lsb: " << ex.what() << '\n';
        return kCapacity;
    } catch (const RailViolation& ex) {
        err << "lsb: " << ex.what() << '\n';
        return kViolation;
    } catch (const Error& ex) {
        err << "lsb: " << ex.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace lsb::cli
