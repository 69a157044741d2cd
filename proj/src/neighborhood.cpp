#include "lsb/neighborhood.hpp"

#include <algorithm>

#include "lsb/error.hpp"

namespace lsb {

namespace {

enum class Step : std::uint8_t { none, insert, remove };

class BallEnumerator {
public:
    BallEnumerator(std::span<const Rank> center, std::size_t sigma, const NeighborFilter& keep, std::vector<Code>& out)
        : center_(center), sigma_(sigma), n_(center.size()), keep_(keep), target_(center.size()), out_(out) {}

    // i: characters of the center consumed, j: characters of the target written,
    // prefix: code of the target prefix, budget: edits left.
    void run(std::size_t i, std::size_t j, Code prefix, std::size_t budget, Step last) {
        const std::size_t skew = i > j ? i - j : j - i;
        if (skew > budget) return;
        if (i == n_ && j == n_) {
            if (!keep_ || keep_(target_)) out_.push_back(prefix);
            return;
        }
        if (i < n_ && j < n_) {
            const Rank c = center_[i];
            target_[j] = c;
            run(i + 1, j + 1, prefix * sigma_ + c, budget, Step::none);
            if (budget > 0) {
                for (std::size_t x = 0; x < sigma_; ++x) {
                    if (x == c) continue;
                    target_[j] = static_cast<Rank>(x);
                    run(i + 1, j + 1, prefix * sigma_ + x, budget - 1, Step::none);
                }
            }
        }
        if (budget == 0) return;
        if (i < n_ && last != Step::insert) {
            run(i + 1, j, prefix, budget - 1, Step::remove);
        }
        if (j < n_ && last != Step::remove) {
            for (std::size_t x = 0; x < sigma_; ++x) {
                target_[j] = static_cast<Rank>(x);
                run(i, j + 1, prefix * sigma_ + x, budget - 1, Step::insert);
            }
        }
    }

private:
    std::span<const Rank> center_;
    std::size_t sigma_;
    std::size_t n_;
    const NeighborFilter& keep_;
    std::vector<Rank> target_;
    std::vector<Code>& out_;
};

}  // namespace

std::vector<Code> neighborhood_codes(std::span<const Rank> center, std::size_t sigma, std::size_t radius) {
    return neighborhood_codes_if(center, sigma, radius, {});
}

std::vector<Code> neighborhood_codes_if(std::span<const Rank> center, std::size_t sigma, std::size_t radius,
                                        const NeighborFilter& keep) {
    std::vector<Code> codes;
    BallEnumerator(center, sigma, keep, codes).run(0, 0, 0, radius, Step::none);
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    return codes;
}

std::vector<Sequence> neighborhood(const Sequence& s, int radius) {
    if (radius < 0) throw InvalidInput("neighborhood radius must be non-negative, got " + std::to_string(radius));
    const auto m = s.alphabet().size();
    if (s.size() > max_encodable_length(m)) {
        throw CapacityError("sequence of length " + std::to_string(s.size()) +
                            " does not fit the 128-bit code space; max supported length is " +
                            std::to_string(max_encodable_length(m)));
    }
    const auto codes = neighborhood_codes(s.ranks(), m, static_cast<std::size_t>(radius));
    std::vector<Sequence> out;
    out.reserve(codes.size());
    std::vector<Rank> buffer(s.size());
    for (const auto code : codes) {
        decode_into(code, m, buffer);
        out.emplace_back(s.alphabet_ptr(), buffer);
    }
    return out;
}

std::size_t radius_one_ball_size(std::size_t n, std::size_t sigma) noexcept {
    return (sigma - 1) * n + 1;
}

}  // namespace lsb
