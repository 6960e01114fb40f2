#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hjline/checked.hpp"

namespace hjline {

// A letter of the cube [3]^n.
enum class Symbol : std::uint8_t { One = 1, Two = 2, Three = 3 };

constexpr int to_int(Symbol s) { return static_cast<int>(s); }
constexpr char to_char(Symbol s) { return static_cast<char>('0' + to_int(s)); }
Symbol symbol_from_int(int value);

inline constexpr Symbol kAllSymbols[] = {Symbol::One, Symbol::Two, Symbol::Three};

struct Run
{
    Symbol symbol;
    Count length;

    bool operator==(const Run&) const = default;
};

/// A word over {1,2,3} held in canonical run-length form: no empty runs and
/// no two adjacent runs with the same symbol. Lengths may exceed 2^32, so
/// words are never materialized symbol by symbol.
class Word
{
public:
    Word() = default;

    /// Parses either the run encoding (`1x64,2x2`) or, for words of length
    /// at most kMaxExpandedLength, the expanded digit form (`112`).
    static Word parse(std::string_view text);
    static Word from_expanded(std::string_view digits);

    static constexpr Count kMaxExpandedLength = 100000;

    /// Appends `length` copies of `s`, merging with the last run.
    void append(Symbol s, Count length);
    void append(const Word& other);

    [[nodiscard]] const std::vector<Run>& runs() const { return runs_; }
    [[nodiscard]] Count length() const { return length_; }
    [[nodiscard]] bool empty() const { return runs_.empty(); }

    /// 1-based lookup, linear in the number of runs.
    [[nodiscard]] Symbol at(Count position) const;

    /// `1x64,2x2`; the empty word encodes as "".
    [[nodiscard]] std::string encode() const;
    /// Digit string; throws when longer than kMaxExpandedLength.
    [[nodiscard]] std::string expand() const;
    /// Compact binary form of the run list, used as a hash-map key.
    [[nodiscard]] std::string key() const;
    void append_key(std::string& out) const;

    [[nodiscard]] bool is_canonical() const;

    bool operator==(const Word&) const = default;

private:
    std::vector<Run> runs_;
    Count length_ = 0;
};

inline bool words_equal(const Word& u, const Word& v) { return u == v; }
inline Symbol word_symbol_at(const Word& u, Count position) { return u.at(position); }
inline Count word_length(const Word& u) { return u.length(); }

// "p ones followed by (size - p) twos".
struct Cut
{
    Count ones;
};

// "first ones, (second - first) copies of middle, (size - second) twos".
struct Tri
{
    Count first;
    Count second;
    Symbol middle;
};

using BlockFill = std::variant<Cut, Tri>;

struct Block
{
    Count size;
    BlockFill fill;
};

/// prefix followed by each block realized left to right.
Word assemble(Word prefix, std::span<const Block> blocks);

/// w 1^q 2^(size - q).
Word extend_simple(const Word& w, Count q, Count block_size);

} // namespace hjline
