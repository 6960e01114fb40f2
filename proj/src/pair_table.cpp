#include "hjline/pair_table.hpp"

namespace hjline {

const CutPair& PairTable::at(std::size_t k) const
{
    if (!covers(k)) {
        throw UsageError("pair table over (" + std::to_string(level_) + ", " + std::to_string(last_block()) +
                         "] has no block " + std::to_string(k));
    }
    return pairs_[k - level_ - 1];
}

PairTable PairTable::with_front(CutPair pair) const
{
    if (level_ == 0) {
        throw UsageError("pair table already starts at block 1");
    }
    std::vector<CutPair> pairs;
    pairs.reserve(pairs_.size() + 1);
    pairs.push_back(pair);
    pairs.insert(pairs.end(), pairs_.begin(), pairs_.end());
    return PairTable(level_ - 1, std::move(pairs));
}

std::vector<LetterVector> letter_vectors(std::size_t length)
{
    std::vector<LetterVector> out{LetterVector{}};
    for (std::size_t pos = 0; pos < length; ++pos) {
        std::vector<LetterVector> next;
        next.reserve(out.size() * 3);
        for (const auto& head : out) {
            for (auto s : kAllSymbols) {
                auto v = head;
                v.push_back(s);
                next.push_back(std::move(v));
            }
        }
        out = std::move(next);
    }
    return out;
}

std::string letters_to_string(std::span<const Symbol> letters)
{
    std::string out;
    out.reserve(letters.size());
    for (auto s : letters) {
        out.push_back(to_char(s));
    }
    return out;
}

LetterVector letters_from_string(std::string_view text)
{
    LetterVector out;
    out.reserve(text.size());
    for (char c : text) {
        out.push_back(symbol_from_int(c - '0'));
    }
    return out;
}

LetterVector letter_run(std::size_t ones, std::size_t twos, std::size_t threes)
{
    LetterVector out(ones, Symbol::One);
    out.insert(out.end(), twos, Symbol::Two);
    out.insert(out.end(), threes, Symbol::Three);
    return out;
}

Word build_v(const BlockStructure& bs, const Word& prefix, const PairTable& pairs, std::size_t ell, int i,
             std::span<const Symbol> letters)
{
    const std::size_t j = pairs.level();
    const std::size_t t = bs.blocks();
    if (pairs.last_block() != t) {
        throw UsageError("pair table must extend to block " + std::to_string(t));
    }
    if (prefix.length() != bs.prefix(j)) {
        throw UsageError("prefix has length " + std::to_string(prefix.length()) + ", expected s_" +
                         std::to_string(j) + " = " + std::to_string(bs.prefix(j)));
    }
    if (ell < j || ell > t) {
        throw UsageError("ell = " + std::to_string(ell) + " outside [" + std::to_string(j) + ", " +
                         std::to_string(t) + "]");
    }
    if (letters.size() != t - ell) {
        throw UsageError("expected " + std::to_string(t - ell) + " letters, got " + std::to_string(letters.size()));
    }
    if (i != 1 && i != 2) {
        throw UsageError("i must be 1 or 2");
    }
    std::vector<Block> blocks;
    blocks.reserve(t - j);
    for (std::size_t k = j + 1; k <= t; ++k) {
        const auto& p = pairs.at(k);
        if (k < ell) {
            blocks.push_back({bs.size(k), Cut{p.second}});
        } else if (k == ell) {
            blocks.push_back({bs.size(k), Cut{i == 1 ? p.first : p.second}});
        } else {
            blocks.push_back({bs.size(k), Tri{p.first, p.second, letters[k - ell - 1]}});
        }
    }
    return assemble(prefix, blocks);
}

Word extend_with_letters(const Word& w, const BlockStructure& bs, const PairTable& pairs,
                         std::span<const Symbol> letters)
{
    return build_v(bs, w, pairs, pairs.level(), 1, letters);
}

} // namespace hjline
