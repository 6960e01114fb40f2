#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hjline/colour_table.hpp"

namespace hjline::brute {

/// Template over {1..m} with 0 marking a wildcard position.
struct LinePattern
{
    std::vector<std::uint8_t> cells;

    [[nodiscard]] std::size_t stars() const;
    [[nodiscard]] std::string to_string() const;

    bool operator==(const LinePattern&) const = default;
};

inline constexpr Count kDefaultPatternCap = 10000000;
inline constexpr Count kDefaultNodeBudget = 10000000;

/// Walks every line pattern of [m]^n, lexicographically with the cell order
/// 1 < 2 < ... < m < *, first coordinate most significant.
class LineEnumerator
{
public:
    LineEnumerator(unsigned m, unsigned n, Count cap = kDefaultPatternCap);

    /// Advances to the next pattern; false once exhausted.
    bool next();
    [[nodiscard]] const LinePattern& current() const { return current_; }

private:
    unsigned m_;
    unsigned n_;
    std::vector<std::uint8_t> digits_; // 0..m-1 symbol, m star
    LinePattern current_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<LinePattern> enumerate_lines(unsigned m, unsigned n, Count cap = kDefaultPatternCap);

/// Table indices of the m points of a line, for x = 1..m.
std::vector<std::size_t> line_points(const LinePattern& pattern, unsigned m);

struct MonoLine
{
    LinePattern pattern;
    ColourId colour;
};

/// First pattern (enumeration order) whose m points share a colour.
std::optional<MonoLine> find_mono_line_naive(const ColourTable& table);

enum class SearchStatus { Witness, ProvenNone, BudgetExhausted };

struct WitnessResult
{
    SearchStatus status;
    std::optional<ColourTable> table;
    Count nodes = 0;
};

/// Depth-first search for a line-free r-colouring of [m]^n. Points are
/// coloured in index order with colours tried 0..r-1; a branch is cut as
/// soon as a line whose points are all coloured is monochromatic.
WitnessResult hj_lower_witness(unsigned m, unsigned n, unsigned r, Count node_budget = kDefaultNodeBudget);

struct HjNumber
{
    /// Smallest n with no line-free colouring, if found within n_max.
    std::optional<unsigned> value;
    /// Set when the search budget ran out at this n (value is then unknown).
    std::optional<unsigned> exhausted_at;
};

HjNumber hj_number_exact(unsigned m, unsigned r, unsigned n_max, Count node_budget = kDefaultNodeBudget);

} // namespace hjline::brute
