#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lsb {

using Rank = std::uint8_t;

/// Lexicographic rank of a sequence in Σⁿ, or a packed bucket label.
using Code = unsigned __int128;

std::string to_decimal(Code value);

/// Ordered character set. The order fixes σ(1) < σ(2) < ... and the ranks 0..m-1.
class Alphabet {
public:
    static constexpr std::size_t kMaxSize = 64;

    explicit Alphabet(std::string glyphs);

    /// "ACGT" for m = 4, otherwise the first m characters of A-Z, a-z, 0-9.
    static Alphabet with_size(std::size_t m);

    std::size_t size() const noexcept { return glyphs_.size(); }
    std::string_view glyphs() const noexcept { return glyphs_; }
    char glyph(Rank rank) const { return glyphs_.at(rank); }

    std::optional<Rank> rank_of(char c) const noexcept {
        const auto r = ranks_[static_cast<unsigned char>(c)];
        if (r < 0) return std::nullopt;
        return static_cast<Rank>(r);
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
        return a.glyphs_ == b.glyphs_;
    }

private:
    std::string glyphs_;
    std::array<std::int16_t, 256> ranks_{};
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::string glyphs);

/// A word over a ranked alphabet. Immutable once built.
class Sequence {
public:
    Sequence(AlphabetPtr alphabet, std::vector<Rank> ranks);

    static Sequence parse(std::string_view text, AlphabetPtr alphabet);

    std::size_t size() const noexcept { return ranks_.size(); }
    std::span<const Rank> ranks() const noexcept { return ranks_; }
    Rank operator[](std::size_t i) const noexcept { return ranks_[i]; }

    const Alphabet& alphabet() const noexcept { return *alphabet_; }
    const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }

    std::string str() const;

    friend bool operator==(const Sequence& a, const Sequence& b) {
        return a.ranks_ == b.ranks_ && same_alphabet(a, b);
    }
    friend std::strong_ordering operator<=>(const Sequence& a, const Sequence& b) {
        return a.ranks_ <=> b.ranks_;
    }

    static bool same_alphabet(const Sequence& a, const Sequence& b) noexcept {
        return a.alphabet_ == b.alphabet_ || *a.alphabet_ == *b.alphabet_;
    }

private:
    AlphabetPtr alphabet_;
    std::vector<Rank> ranks_;
};

/// Largest n for which mⁿ is representable as a Code.
std::size_t max_encodable_length(std::size_t m);

/// Lexicographic rank of `ranks` in Σⁿ with |Σ| = m. No overflow checks.
Code encode(std::span<const Rank> ranks, std::size_t m) noexcept;

/// Inverse of encode for a sequence of length out.size().
void decode_into(Code code, std::size_t m, std::span<Rank> out) noexcept;

/// mᵉ, or nullopt when it does not fit in a Code.
std::optional<Code> checked_power(std::size_t m, std::size_t e) noexcept;

/// The metric space S_n: all length-n sequences over one alphabet.
class SequenceSpace {
public:
    SequenceSpace(AlphabetPtr alphabet, std::size_t n);

    std::size_t length() const noexcept { return n_; }
    std::size_t sigma() const noexcept { return alphabet_->size(); }
    const Alphabet& alphabet() const noexcept { return *alphabet_; }
    const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }

    /// mⁿ.
    Code size() const noexcept { return size_; }

    bool contains(const Sequence& s) const noexcept;

    /// Throws InvalidInput unless s is a length-n word over this alphabet.
    void require_member(const Sequence& s) const;

    /// Throws CapacityError when mⁿ exceeds `limit`.
    void require_enumerable(Code limit, std::string_view what) const;

    Code encode(const Sequence& s) const;
    Sequence decode(Code code) const;

    friend bool operator==(const SequenceSpace& a, const SequenceSpace& b) noexcept {
        return a.n_ == b.n_ && *a.alphabet_ == *b.alphabet_;
    }

private:
    AlphabetPtr alphabet_;
    std::size_t n_;
    Code size_;
};

Code encode(const Sequence& s);
Sequence decode(Code code, std::size_t n, AlphabetPtr alphabet);

}  // namespace lsb
