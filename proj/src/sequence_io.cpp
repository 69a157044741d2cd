#include "lsb/sequence_io.hpp"

#include <istream>

#include "lsb/error.hpp"

namespace lsb {

namespace {

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

class LengthCheck {
public:
    explicit LengthCheck(std::optional<std::size_t> length) : length_(length) {}

    void operator()(std::size_t got, const std::string& where) {
        if (!length_) {
            length_ = got;
            return;
        }
        if (got != *length_) {
            throw InvalidInput(where + ": length " + std::to_string(got) + " differs from the expected length " +
                               std::to_string(*length_));
        }
    }

private:
    std::optional<std::size_t> length_;
};

Sequence parse_at(std::string_view text, const AlphabetPtr& alphabet, const std::string& where) {
    try {
        return Sequence::parse(text, alphabet);
    } catch (const InvalidInput& e) {
        throw InvalidInput(where + ": " + e.what());
    }
}

struct FastaRecord {
    std::string name;
    std::size_t line = 0;
    std::string body;
};

std::vector<SequenceRecord> read_plain(std::istream& in, std::string first, std::size_t first_line,
                                       const AlphabetPtr& alphabet, const ReadOptions& options) {
    if (options.window) throw InvalidInput("--window applies to FASTA input only");
    std::vector<SequenceRecord> out;
    LengthCheck check(options.length);
    std::string line = std::move(first);
    std::size_t number = first_line;
    do {
        strip_cr(line);
        if (!line.empty()) {
            const auto where = "line " + std::to_string(number);
            check(line.size(), where);
            out.push_back({std::to_string(number), parse_at(line, alphabet, where)});
        }
        ++number;
    } while (std::getline(in, line));
    return out;
}

std::vector<SequenceRecord> read_fasta(std::istream& in, std::string first, std::size_t first_line,
                                       const AlphabetPtr& alphabet, const ReadOptions& options) {
    std::vector<FastaRecord> records;
    std::string line = std::move(first);
    std::size_t number = first_line;
    do {
        strip_cr(line);
        if (!line.empty() && line[0] == '>') {
            auto name = line.substr(1);
            if (const auto space = name.find_first_of(" \t"); space != std::string::npos) name.resize(space);
            records.push_back({name.empty() ? std::to_string(records.size() + 1) : name, number, {}});
        } else if (!line.empty()) {
            for (const char c : line) {
                if (!alphabet->rank_of(c)) {
                    throw InvalidInput("line " + std::to_string(number) + ": character '" + c +
                                       "' is not in alphabet " + std::string(alphabet->glyphs()));
                }
            }
            records.back().body += line;
        }
        ++number;
    } while (std::getline(in, line));

    std::vector<SequenceRecord> out;
    if (options.window) {
        const auto w = *options.window;
        if (w == 0) throw InvalidInput("--window must be at least 1");
        if (options.length && *options.length != w) {
            throw InvalidInput("--window " + std::to_string(w) + " conflicts with --n " + std::to_string(*options.length));
        }
        for (const auto& r : records) {
            for (std::size_t offset = 0; offset + w <= r.body.size(); ++offset) {
                out.push_back({r.name + ":" + std::to_string(offset),
                               Sequence::parse(std::string_view(r.body).substr(offset, w), alphabet)});
            }
        }
        return out;
    }
    LengthCheck check(options.length);
    for (const auto& r : records) {
        const auto where = "record " + r.name + " (line " + std::to_string(r.line) + ")";
        check(r.body.size(), where);
        out.push_back({r.name, parse_at(r.body, alphabet, where)});
    }
    return out;
}

}  // namespace

std::vector<SequenceRecord> read_sequences(std::istream& in, const AlphabetPtr& alphabet, const ReadOptions& options) {
    std::string line;
    std::size_t number = 1;
    while (std::getline(in, line)) {
        strip_cr(line);
        if (!line.empty()) break;
        ++number;
    }
    if (line.empty()) return {};
    if (line[0] == '>') return read_fasta(in, std::move(line), number, alphabet, options);
    return read_plain(in, std::move(line), number, alphabet, options);
}

}  // namespace lsb
