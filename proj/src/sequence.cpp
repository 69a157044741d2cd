#include "lsb/sequence.hpp"

#include <algorithm>
#include <limits>

#include "lsb/error.hpp"

namespace lsb {

std::string to_decimal(Code value) {
    if (value == 0) return "0";
    std::string out;
    while (value != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Alphabet::Alphabet(std::string glyphs) : glyphs_(std::move(glyphs)) {
    if (glyphs_.size() < 2) {
        throw InvalidInput("alphabet needs at least 2 characters, got \"" + glyphs_ + "\"");
    }
    if (glyphs_.size() > kMaxSize) {
        throw InvalidInput("alphabet has " + std::to_string(glyphs_.size()) +
                           " characters; at most " + std::to_string(kMaxSize) + " are supported");
    }
    ranks_.fill(-1);
    for (std::size_t i = 0; i < glyphs_.size(); ++i) {
        const auto c = static_cast<unsigned char>(glyphs_[i]);
        if (c <= ' ' || c == '>' || c >= 0x7f) {
            throw InvalidInput(std::string("alphabet character '") + glyphs_[i] + "' is not a printable glyph");
        }
        if (ranks_[c] >= 0) {
            throw InvalidInput(std::string("alphabet character '") + glyphs_[i] + "' appears twice");
        }
        ranks_[c] = static_cast<std::int16_t>(i);
    }
}

Alphabet Alphabet::with_size(std::size_t m) {
    static constexpr std::string_view kPool =
        "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
    if (m == 4) return Alphabet("ACGT");
    if (m > kPool.size()) {
        throw InvalidInput("no default glyphs for an alphabet of size " + std::to_string(m));
    }
    return Alphabet(std::string(kPool.substr(0, m)));
}

AlphabetPtr make_alphabet(std::string glyphs) {
    return std::make_shared<const Alphabet>(std::move(glyphs));
}

Sequence::Sequence(AlphabetPtr alphabet, std::vector<Rank> ranks)
    : alphabet_(std::move(alphabet)), ranks_(std::move(ranks)) {
    if (!alphabet_) throw InvalidInput("sequence constructed without an alphabet");
    const auto m = alphabet_->size();
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
        if (ranks_[i] >= m) {
            throw InvalidInput("rank " + std::to_string(ranks_[i]) + " at position " + std::to_string(i + 1) +
                               " is outside an alphabet of size " + std::to_string(m));
        }
    }
}

Sequence Sequence::parse(std::string_view text, AlphabetPtr alphabet) {
    if (!alphabet) throw InvalidInput("sequence parsed without an alphabet");
    std::vector<Rank> ranks;
    ranks.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto r = alphabet->rank_of(text[i]);
        if (!r) {
            throw InvalidInput(std::string("character '") + text[i] + "' at column " + std::to_string(i + 1) +
                               " is not in alphabet " + std::string(alphabet->glyphs()));
        }
        ranks.push_back(*r);
    }
    return Sequence(std::move(alphabet), std::move(ranks));
}

std::string Sequence::str() const {
    std::string out;
    out.reserve(ranks_.size());
    for (const auto r : ranks_) out.push_back(alphabet_->glyph(r));
    return out;
}

std::optional<Code> checked_power(std::size_t m, std::size_t e) noexcept {
    constexpr Code kMax = std::numeric_limits<Code>::max();
    Code result = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (result > kMax / m) return std::nullopt;
        result *= m;
    }
    return result;
}

std::size_t max_encodable_length(std::size_t m) {
    std::size_t n = 0;
    while (checked_power(m, n + 1)) ++n;
    return n;
}

Code encode(std::span<const Rank> ranks, std::size_t m) noexcept {
    Code code = 0;
    for (const auto r : ranks) code = code * m + r;
    return code;
}

void decode_into(Code code, std::size_t m, std::span<Rank> out) noexcept {
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = static_cast<Rank>(code % m);
        code /= m;
    }
}

SequenceSpace::SequenceSpace(AlphabetPtr alphabet, std::size_t n) : alphabet_(std::move(alphabet)), n_(n) {
    if (!alphabet_) throw InvalidInput("sequence space without an alphabet");
    if (n_ == 0) throw InvalidInput("sequence length must be at least 1");
    const auto m = alphabet_->size();
    const auto size = checked_power(m, n_);
    if (!size) {
        throw CapacityError("length " + std::to_string(n_) + " over an alphabet of size " + std::to_string(m) +
                            " overflows the 128-bit code space; max supported length is " +
                            std::to_string(max_encodable_length(m)));
    }
    size_ = *size;
}

bool SequenceSpace::contains(const Sequence& s) const noexcept {
    return s.size() == n_ && (s.alphabet_ptr() == alphabet_ || s.alphabet() == *alphabet_);
}

void SequenceSpace::require_member(const Sequence& s) const {
    if (!(s.alphabet_ptr() == alphabet_ || s.alphabet() == *alphabet_)) {
        throw InvalidInput("sequence over alphabet " + std::string(s.alphabet().glyphs()) +
                           " used in a space over alphabet " + std::string(alphabet_->glyphs()));
    }
    if (s.size() != n_) {
        throw InvalidInput("sequence of length " + std::to_string(s.size()) + " used in a space of length " +
                           std::to_string(n_));
    }
}

void SequenceSpace::require_enumerable(Code limit, std::string_view what) const {
    if (size_ > limit) {
        throw CapacityError(std::string(what) + ": the space of " + std::to_string(alphabet_->size()) + "^" +
                            std::to_string(n_) + " = " + to_decimal(size_) + " sequences exceeds the guard of " +
                            to_decimal(limit));
    }
}

Code SequenceSpace::encode(const Sequence& s) const {
    require_member(s);
    return lsb::encode(s.ranks(), alphabet_->size());
}

Sequence SequenceSpace::decode(Code code) const {
    if (code >= size_) {
        throw InvalidInput("code " + to_decimal(code) + " is outside a space of " + to_decimal(size_) + " sequences");
    }
    std::vector<Rank> ranks(n_);
    decode_into(code, alphabet_->size(), ranks);
    return Sequence(alphabet_, std::move(ranks));
}

Code encode(const Sequence& s) {
    if (s.size() > max_encodable_length(s.alphabet().size())) {
        throw CapacityError("sequence of length " + std::to_string(s.size()) +
                            " does not fit the 128-bit code space; max supported length is " +
                            std::to_string(max_encodable_length(s.alphabet().size())));
    }
    return encode(s.ranks(), s.alphabet().size());
}

Sequence decode(Code code, std::size_t n, AlphabetPtr alphabet) {
    return SequenceSpace(std::move(alphabet), n).decode(code);
}

}  // namespace lsb
