#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hjline/blocks.hpp"
#include "hjline/pair_table.hpp"
#include "hjline/word.hpp"

namespace hjline {

/// Closed 1-based interval [lo, hi].
struct Interval
{
    Count lo;
    Count hi;

    bool operator==(const Interval&) const = default;
};

/// A template run: a fixed symbol, or nullopt for active (wildcard) positions.
struct TemplateRun
{
    std::optional<Symbol> symbol;
    Count length;

    bool operator==(const TemplateRun&) const = default;
};

/// Combinatorial line in [3]^n: fixed coordinates off the active set I and a
/// common free symbol on I. The template holds both; `active` lists I as
/// ascending disjoint intervals.
struct LineSpec
{
    Count n = 0;
    std::vector<Interval> active;
    std::vector<TemplateRun> fixed;

    bool operator==(const LineSpec&) const = default;
};

/// Checks that `fixed` has total length n, is canonical, and that its wildcard
/// runs are exactly `active` (non-empty, ascending, disjoint). Returns an error
/// message, or nullopt when well-formed.
std::optional<std::string> validate_line(const LineSpec& line);

/// The point with every active coordinate set to x.
Word point_of_line(const LineSpec& line, Symbol x);

/// Template text: runs of `1`, `2`, `3` or `*`, e.g. `1x3,*x2,2x5`.
std::string encode_template(const std::vector<TemplateRun>& runs);
std::vector<TemplateRun> parse_template(std::string_view text);

/// Line from the final collision (q1 < q2): blocks k <= q1 are Cut(p_{k,2}),
/// blocks q1 < k <= q2 have p_{k,1} ones, an active segment, then twos, and
/// blocks k > q2 are Tri(p_{k,1}, p_{k,2}, 3).
LineSpec line_from_collision(const BlockStructure& bs, const PairTable& pairs, std::size_t q1, std::size_t q2);

} // namespace hjline
