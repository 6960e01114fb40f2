#include "hjline/word.hpp"

#include <charconv>

namespace hjline {

Symbol symbol_from_int(int value)
{
    if (value < 1 || value > 3) {
        throw UsageError("symbol out of range: " + std::to_string(value));
    }
    return static_cast<Symbol>(value);
}

namespace {

Count parse_count(std::string_view text, std::string_view whole)
{
    Count value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        throw UsageError("malformed run length in word '" + std::string(whole) + "'");
    }
    return value;
}

} // namespace

Word Word::parse(std::string_view text)
{
    if (text.find('x') == std::string_view::npos) {
        return from_expanded(text);
    }
    Word out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) {
            comma = text.size();
        }
        const auto item = text.substr(pos, comma - pos);
        if (item.size() < 3 || item[1] != 'x' || item[0] < '1' || item[0] > '3') {
            throw UsageError("malformed run '" + std::string(item) + "' in word '" + std::string(text) + "'");
        }
        const auto symbol = symbol_from_int(item[0] - '0');
        const auto length = parse_count(item.substr(2), text);
        if (length == 0) {
            throw UsageError("zero-length run in word '" + std::string(text) + "'");
        }
        if (!out.runs_.empty() && out.runs_.back().symbol == symbol) {
            throw UsageError("non-canonical run encoding '" + std::string(text) + "'");
        }
        out.append(symbol, length);
        pos = comma + 1;
    }
    return out;
}

Word Word::from_expanded(std::string_view digits)
{
    if (digits.size() > kMaxExpandedLength) {
        throw UsageError("expanded word longer than " + std::to_string(kMaxExpandedLength));
    }
    Word out;
    for (char c : digits) {
        if (c < '1' || c > '3') {
            throw UsageError("invalid symbol '" + std::string(1, c) + "' in word");
        }
        out.append(static_cast<Symbol>(c - '0'), 1);
    }
    return out;
}

void Word::append(Symbol s, Count length)
{
    if (length == 0) {
        return;
    }
    length_ = checked_add(length_, length);
    if (!runs_.empty() && runs_.back().symbol == s) {
        runs_.back().length += length;
    } else {
        runs_.push_back({s, length});
    }
}

void Word::append(const Word& other)
{
    for (const auto& run : other.runs_) {
        append(run.symbol, run.length);
    }
}

Symbol Word::at(Count position) const
{
    if (position < 1 || position > length_) {
        throw UsageError("word index " + std::to_string(position) + " out of range [1, " +
                         std::to_string(length_) + "]");
    }
    Count end = 0;
    for (const auto& run : runs_) {
        end += run.length;
        if (position <= end) {
            return run.symbol;
        }
    }
    throw UsageError("word index out of range"); // unreachable
}

std::string Word::encode() const
{
    std::string out;
    for (const auto& run : runs_) {
        if (!out.empty()) {
            out.push_back(',');
        }
        out.push_back(to_char(run.symbol));
        out.push_back('x');
        out += std::to_string(run.length);
    }
    return out;
}

std::string Word::expand() const
{
    if (length_ > kMaxExpandedLength) {
        throw UsageError("word too long to expand: " + std::to_string(length_));
    }
    std::string out;
    out.reserve(length_);
    for (const auto& run : runs_) {
        out.append(run.length, to_char(run.symbol));
    }
    return out;
}

void Word::append_key(std::string& out) const
{
    // symbol byte, then LEB128 length
    for (const auto& run : runs_) {
        out.push_back(static_cast<char>(run.symbol));
        Count value = run.length;
        do {
            auto byte = static_cast<unsigned char>(value & 0x7f);
            value >>= 7;
            if (value != 0) {
                byte |= 0x80;
            }
            out.push_back(static_cast<char>(byte));
        } while (value != 0);
    }
}

std::string Word::key() const
{
    std::string out;
    out.reserve(runs_.size() * 4);
    append_key(out);
    return out;
}

bool Word::is_canonical() const
{
    Count total = 0;
    for (std::size_t i = 0; i < runs_.size(); ++i) {
        if (runs_[i].length == 0) {
            return false;
        }
        if (i > 0 && runs_[i].symbol == runs_[i - 1].symbol) {
            return false;
        }
        total += runs_[i].length;
    }
    return total == length_;
}

Word assemble(Word prefix, std::span<const Block> blocks)
{
    for (const auto& block : blocks) {
        if (const auto* cut = std::get_if<Cut>(&block.fill)) {
            if (cut->ones > block.size) {
                throw UsageError("Cut(" + std::to_string(cut->ones) + ") exceeds block size " +
                                 std::to_string(block.size));
            }
            prefix.append(Symbol::One, cut->ones);
            prefix.append(Symbol::Two, block.size - cut->ones);
        } else {
            const auto& tri = std::get<Tri>(block.fill);
            if (!(tri.first < tri.second && tri.second <= block.size)) {
                throw UsageError("Tri(" + std::to_string(tri.first) + ", " + std::to_string(tri.second) +
                                 ") out of range for block size " + std::to_string(block.size));
            }
            prefix.append(Symbol::One, tri.first);
            prefix.append(tri.middle, tri.second - tri.first);
            prefix.append(Symbol::Two, block.size - tri.second);
        }
    }
    return prefix;
}

Word extend_simple(const Word& w, Count q, Count block_size)
{
    const Block block{block_size, Cut{q}};
    return assemble(w, std::span<const Block>(&block, 1));
}

} // namespace hjline
