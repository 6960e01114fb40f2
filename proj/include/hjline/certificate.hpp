#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "hjline/blocks.hpp"
#include "hjline/chain.hpp"
#include "hjline/line.hpp"
#include "hjline/oracle.hpp"
#include "hjline/pair_table.hpp"

namespace hjline {

struct Collision
{
    std::size_t first = 0;
    std::size_t second = 0;

    bool operator==(const Collision&) const = default;
};

/// Self-contained record of a monochromatic line and the data that proves it.
/// Holds the oracle spec rather than oracle answers; verification re-queries.
struct Certificate
{
    int version = 1;
    unsigned r = 0;
    Mode mode = Mode::Paper;
    std::vector<Count> block_sizes;
    PairTable pairs;
    Collision final_collision;
    std::vector<ChainStep> chain;
    LineSpec line;
    ColourId shared_colour = 0;
    std::string oracle;
    OracleStats stats;

    bool operator==(const Certificate&) const = default;
};

std::string encode_certificate(const Certificate& cert);
Certificate decode_certificate(std::string_view json_text);

Certificate read_certificate(const std::string& path);
void write_certificate(const Certificate& cert, const std::string& path);

struct LineCheck
{
    bool monochromatic = false;
    ColourId colour = 0;
    std::array<ColourId, 3> colours{};
    std::string message;
};

/// Evaluates the three points of the line.
LineCheck verify_line(const LineSpec& line, ColourOracle& oracle);

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult
{
    int id;
    std::string name;
    CheckStatus status;
    std::string detail;
};

struct VerificationReport
{
    std::vector<CheckResult> checks;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] std::vector<std::string> failed_checks() const;
    [[nodiscard]] std::string to_text() const;
};

/// Runs the seven checks in fixed order:
///   1 block-sizes     sizes consistent with r and mode
///   2 pair-bounds     full pair table with 0 <= p1 < p2 <= n_k
///   3 identification  identify steps join equal words; steps are linked
///   4 conclusion      conclude steps are (v_2, v_1) at (ell, letters) with equal colours
///   5 endpoints       chain ends at v(q2) and the mixed word; both and v(q1) have shared_colour
///   6 line-colour     the three line points share shared_colour
///   7 line-recompute  the line equals the one rebuilt from pairs and collision
/// Non-replayable oracles (exec) skip checks 4 and 5.
VerificationReport verify_certificate(const Certificate& cert, ColourOracle& oracle);

} // namespace hjline
