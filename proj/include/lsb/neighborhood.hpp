#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "lsb/sequence.hpp"

namespace lsb {

/// Codes of every length-n sequence within edit distance `radius` of `center`,
/// sorted ascending and free of duplicates. n = center.size().
///
/// Candidates are produced by enumerating alignments of `center` against a
/// length-n target with at most `radius` substitutions, insertions and deletions
/// and with balanced indels, so every emitted code carries a witness alignment.
/// Adjacent insert/delete steps are skipped: such an alignment is never minimal,
/// and every target keeps its minimal alignment.
std::vector<Code> neighborhood_codes(std::span<const Rank> center, std::size_t sigma, std::size_t radius);

using NeighborFilter = std::function<bool(std::span<const Rank>)>;

/// neighborhood_codes restricted to the targets `keep` accepts (all if empty).
std::vector<Code> neighborhood_codes_if(std::span<const Rank> center, std::size_t sigma, std::size_t radius,
                                        const NeighborFilter& keep);

/// N_n^r(s) as sequences in lexicographic order; always contains s.
std::vector<Sequence> neighborhood(const Sequence& s, int radius);

/// |N_n^1(s)| = (m-1)n + 1 for every s.
std::size_t radius_one_ball_size(std::size_t n, std::size_t sigma) noexcept;

}  // namespace lsb
