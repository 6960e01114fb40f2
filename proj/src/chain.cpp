#include "hjline/chain.hpp"

#include <stdexcept>

namespace hjline {

Word final_word(const BlockStructure& bs, const PairTable& pairs, std::span<const Symbol> letters)
{
    return build_v(bs, Word{}, pairs, 0, 1, letters);
}

Word v_of(const BlockStructure& bs, const PairTable& pairs, std::size_t q)
{
    const std::size_t t = bs.blocks();
    if (q > t) {
        throw UsageError("v(q) needs q <= t");
    }
    const auto letters = letter_run(q, 0, t - q);
    return final_word(bs, pairs, letters);
}

std::vector<ChainStep> build_chain(const BlockStructure& bs, const PairTable& pairs, std::size_t q1, std::size_t q2)
{
    const std::size_t t = bs.blocks();
    if (!(q1 < q2 && q2 <= t)) {
        throw UsageError("chain indices must satisfy 0 <= q1 < q2 <= t");
    }
    std::vector<ChainStep> chain;
    chain.reserve(2 * (q2 - q1) + 1);
    Word current = v_of(bs, pairs, q2);
    for (std::size_t ell = q2; ell > q1; --ell) {
        const auto letters = letter_run(0, q2 - ell, t - q2);
        auto upper = build_v(bs, Word{}, pairs, ell, 2, letters);
        auto lower = build_v(bs, Word{}, pairs, ell, 1, letters);
        chain.push_back({StepKind::Identify, std::move(current), upper, std::nullopt, {}, 0, 0});
        chain.push_back({StepKind::Conclude, std::move(upper), lower, ell, letters, 2, 1});
        current = std::move(lower);
    }
    const auto mixed = letter_run(q1, q2 - q1, t - q2);
    chain.push_back({StepKind::Identify, std::move(current), final_word(bs, pairs, mixed), std::nullopt, {}, 0, 0});
    for (const auto& step : chain) {
        if (step.kind == StepKind::Identify && !words_equal(step.from, step.to)) {
            throw std::logic_error("identification step joins different words");
        }
    }
    return chain;
}

} // namespace hjline
