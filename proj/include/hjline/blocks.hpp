#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hjline/checked.hpp"

namespace hjline {

enum class Mode { Paper, Minimal, Custom };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

/// Partition of [n] into t = r consecutive blocks of sizes n_1..n_t.
/// Block indices are 1-based; prefix(j) is s_j with prefix(0) = 0.
class BlockStructure
{
public:
    /// paper:   n_j = r^(6^(t-j))
    /// minimal: n_t = r, n_j = colour_space_size(j - 1) for j < t
    /// custom:  `custom_sizes`, exactly r positive entries
    static BlockStructure make(unsigned r, Mode mode, std::span<const Count> custom_sizes = {});

    [[nodiscard]] unsigned colours() const { return r_; }
    [[nodiscard]] std::size_t blocks() const { return sizes_.size(); }
    [[nodiscard]] Mode mode() const { return mode_; }
    [[nodiscard]] Count size(std::size_t k) const;
    [[nodiscard]] Count prefix(std::size_t j) const;
    [[nodiscard]] Count dimension() const { return prefix_.back(); }
    [[nodiscard]] const std::vector<Count>& sizes() const { return sizes_; }

    bool operator==(const BlockStructure&) const = default;

private:
    BlockStructure(unsigned r, Mode mode, std::vector<Count> sizes);

    unsigned r_ = 0;
    Mode mode_ = Mode::Paper;
    std::vector<Count> sizes_;
    std::vector<Count> prefix_;
};

inline BlockStructure block_structure(unsigned r, Mode mode, std::span<const Count> custom_sizes = {})
{
    return BlockStructure::make(r, mode, custom_sizes);
}

/// Number of distinct composite colours at level j (0 <= j < t):
/// prod_{k=j+2..t} C(n_k + 1, 2) * r^(3^(t-j-1)).
Count colour_space_size(const BlockStructure& bs, std::size_t j);

/// Same count computed from raw sizes, used while building minimal structures.
Count colour_space_size(unsigned r, std::span<const Count> sizes, std::size_t j);

/// Parses "64,2" into sizes; rejects empty lists and non-positive entries.
std::vector<Count> parse_sizes(std::string_view text);

} // namespace hjline
