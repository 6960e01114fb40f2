#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hjline/blocks.hpp"
#include "hjline/word.hpp"

namespace hjline {

/// Cut positions {first < second} drawn from {0, ..., n_k} for one block.
struct CutPair
{
    Count first;
    Count second;

    bool operator==(const CutPair&) const = default;
};

/// Cut pairs for the contiguous block range (level, level + size()].
class PairTable
{
public:
    PairTable() = default;
    PairTable(std::size_t level, std::vector<CutPair> pairs) : level_(level), pairs_(std::move(pairs)) {}

    [[nodiscard]] std::size_t level() const { return level_; }
    [[nodiscard]] std::size_t last_block() const { return level_ + pairs_.size(); }
    [[nodiscard]] bool empty() const { return pairs_.empty(); }
    [[nodiscard]] bool covers(std::size_t k) const { return k > level_ && k <= last_block(); }
    [[nodiscard]] const CutPair& at(std::size_t k) const;
    [[nodiscard]] const std::vector<CutPair>& pairs() const { return pairs_; }

    /// Table for (level - 1, last_block()] with `pair` at block `level`.
    [[nodiscard]] PairTable with_front(CutPair pair) const;

    bool operator==(const PairTable&) const = default;

private:
    std::size_t level_ = 0;
    std::vector<CutPair> pairs_;
};

using LetterVector = std::vector<Symbol>;

/// All of [3]^length in lexicographic order, first letter most significant.
std::vector<LetterVector> letter_vectors(std::size_t length);

std::string letters_to_string(std::span<const Symbol> letters);
LetterVector letters_from_string(std::string_view text);

/// Letters 1^ones 2^twos 3^threes.
LetterVector letter_run(std::size_t ones, std::size_t twos, std::size_t threes);

/// v_i(ell; letters) relative to `prefix`, where prefix has length s_j and
/// `pairs` covers (j, t]:
///   blocks j < k < ell  get Cut(p_{k,2})
///   block  ell          gets Cut(p_{ell,i})
///   blocks k > ell      get Tri(p_{k,1}, p_{k,2}, a_k)
/// ell == j is the i-free form where every block is a Tri.
Word build_v(const BlockStructure& bs, const Word& prefix, const PairTable& pairs, std::size_t ell, int i,
             std::span<const Symbol> letters);

/// w(q; a_{j+2}, ..., a_t) for w of length s_{j+1} and pairs over (j+1, t].
Word extend_with_letters(const Word& w, const BlockStructure& bs, const PairTable& pairs,
                         std::span<const Symbol> letters);

} // namespace hjline
