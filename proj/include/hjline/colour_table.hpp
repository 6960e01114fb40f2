#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "hjline/word.hpp"

namespace hjline {

using ColourId = std::uint32_t;

inline constexpr Count kMaxTablePoints = 1000000;

/// Explicit colouring of [m]^n. Points are indexed by their base-m expansion,
/// most significant coordinate first, digit = symbol - 1.
///
/// File format: a header line `m n r`, then one colour per line for every
/// point in lexicographic order.
struct ColourTable
{
    unsigned m = 3;
    unsigned n = 0;
    unsigned r = 1;
    std::vector<ColourId> colours;

    [[nodiscard]] std::size_t points() const { return colours.size(); }

    /// Index of a word of length n over [3] (requires m = 3).
    [[nodiscard]] std::size_t index_of(const Word& w) const;

    static ColourTable read(std::istream& in);
    static ColourTable read(const std::filesystem::path& path);
    void write(std::ostream& out) const;
    void write(const std::filesystem::path& path) const;
};

/// m^n, throwing when it exceeds `cap`.
std::size_t table_points(unsigned m, unsigned n, Count cap = kMaxTablePoints);

} // namespace hjline
