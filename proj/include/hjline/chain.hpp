#pragma once

#include <optional>
#include <vector>

#include "hjline/blocks.hpp"
#include "hjline/pair_table.hpp"
#include "hjline/word.hpp"

namespace hjline {

enum class StepKind { Identify, Conclude };

/// One link of the colour-equality chain from v(q2) down to the mixed word.
/// Identify steps join literally equal words. Conclude steps join
/// v_2(ell; letters) to v_1(ell; letters), equal in colour by the two-word
/// property of the pair table.
struct ChainStep
{
    StepKind kind;
    Word from;
    Word to;
    std::optional<std::size_t> ell;
    LetterVector letters;
    int i_from = 0;
    int i_to = 0;

    bool operator==(const ChainStep&) const = default;
};

/// v(0; letters): every block a Tri, used for v(q) and the chain's end word.
Word final_word(const BlockStructure& bs, const PairTable& pairs, std::span<const Symbol> letters);

/// v(q) = v(0; 1^q 3^(t-q)).
Word v_of(const BlockStructure& bs, const PairTable& pairs, std::size_t q);

/// Chain v(q2) -> v_2(q2; 3..3) -> v_1(q2; 3..3) -> v_2(q2-1; 2,3..3) -> ...
///   -> v_1(q1+1; 2..2,3..3) -> v(0; 1^q1 2^(q2-q1) 3^(t-q2)).
/// Produces 2 (q2 - q1) + 1 steps.
std::vector<ChainStep> build_chain(const BlockStructure& bs, const PairTable& pairs, std::size_t q1, std::size_t q2);

} // namespace hjline
