#include "hjline/blocks.hpp"

#include <charconv>

namespace hjline {

std::string_view to_string(Mode mode)
{
    switch (mode) {
    case Mode::Paper: return "paper";
    case Mode::Minimal: return "minimal";
    case Mode::Custom: return "custom";
    }
    return "?";
}

Mode parse_mode(std::string_view text)
{
    if (text == "paper") {
        return Mode::Paper;
    }
    if (text == "minimal") {
        return Mode::Minimal;
    }
    if (text == "custom") {
        return Mode::Custom;
    }
    throw UsageError("unknown mode '" + std::string(text) + "' (expected paper, minimal or custom)");
}

BlockStructure::BlockStructure(unsigned r, Mode mode, std::vector<Count> sizes)
    : r_(r), mode_(mode), sizes_(std::move(sizes))
{
    prefix_.reserve(sizes_.size() + 1);
    prefix_.push_back(0);
    for (auto n : sizes_) {
        prefix_.push_back(checked_add(prefix_.back(), n));
    }
}

Count BlockStructure::size(std::size_t k) const
{
    if (k < 1 || k > sizes_.size()) {
        throw UsageError("block index " + std::to_string(k) + " out of range");
    }
    return sizes_[k - 1];
}

Count BlockStructure::prefix(std::size_t j) const
{
    if (j >= prefix_.size()) {
        throw UsageError("prefix index " + std::to_string(j) + " out of range");
    }
    return prefix_[j];
}

Count colour_space_size(unsigned r, std::span<const Count> sizes, std::size_t j)
{
    const std::size_t t = sizes.size();
    if (j >= t) {
        throw UsageError("level " + std::to_string(j) + " out of range for t = " + std::to_string(t));
    }
    Count total = checked_pow(r, checked_pow(3, t - j - 1));
    for (std::size_t k = j + 2; k <= t; ++k) {
        total = checked_mul(total, pairs_up_to(sizes[k - 1]));
    }
    return total;
}

Count colour_space_size(const BlockStructure& bs, std::size_t j)
{
    return colour_space_size(bs.colours(), bs.sizes(), j);
}

BlockStructure BlockStructure::make(unsigned r, Mode mode, std::span<const Count> custom_sizes)
{
    if (r == 0) {
        throw UsageError("r must be at least 1");
    }
    const std::size_t t = r;
    std::vector<Count> sizes(t, 0);
    switch (mode) {
    case Mode::Paper:
        for (std::size_t j = 1; j <= t; ++j) {
            sizes[j - 1] = checked_pow(r, checked_pow(6, t - j));
        }
        break;
    case Mode::Minimal:
        sizes[t - 1] = r;
        for (std::size_t j = t - 1; j >= 1; --j) {
            sizes[j - 1] = colour_space_size(r, sizes, j - 1);
        }
        break;
    case Mode::Custom:
        if (custom_sizes.size() != t) {
            throw UsageError("custom mode needs exactly " + std::to_string(t) + " block sizes, got " +
                             std::to_string(custom_sizes.size()));
        }
        for (std::size_t k = 0; k < t; ++k) {
            if (custom_sizes[k] == 0) {
                throw UsageError("block sizes must be positive");
            }
            sizes[k] = custom_sizes[k];
        }
        break;
    }
    BlockStructure out(r, mode, std::move(sizes));
    if (mode != Mode::Custom) {
        // every pigeonhole scan covers n_{j+1} + 1 candidates
        for (std::size_t j = 0; j < t; ++j) {
            if (out.size(j + 1) < colour_space_size(out, j)) {
                throw UsageError("internal: block " + std::to_string(j + 1) + " smaller than its colour space");
            }
        }
    }
    return out;
}

std::vector<Count> parse_sizes(std::string_view text)
{
    std::vector<Count> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) {
            comma = text.size();
        }
        const auto item = text.substr(pos, comma - pos);
        Count value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
            throw UsageError("malformed block size '" + std::string(item) + "'");
        }
        if (value == 0) {
            throw UsageError("block sizes must be positive");
        }
        out.push_back(value);
        pos = comma + 1;
    }
    return out;
}

} // namespace hjline
