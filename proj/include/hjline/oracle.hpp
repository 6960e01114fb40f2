#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>

#include "hjline/colour_table.hpp"
#include "hjline/word.hpp"

namespace hjline {

/// A deterministic r-colouring of [3]^n, accessed only by evaluation.
class ColourOracle
{
public:
    virtual ~ColourOracle() = default;

    virtual ColourId evaluate(const Word& w) = 0;

    [[nodiscard]] unsigned colours() const { return r_; }
    [[nodiscard]] const std::string& description() const { return description_; }
    /// False for oracles whose answers cannot be reproduced offline.
    [[nodiscard]] virtual bool replayable() const { return true; }

protected:
    ColourOracle(unsigned r, std::string description) : r_(r), description_(std::move(description)) {}

private:
    unsigned r_;
    std::string description_;
};

/// Builds an oracle from its spec string:
///   const:c     constant colour c
///   count       (#ones + 2 * #threes) mod r
///   hash:seed   FNV-1a 64 over seed (8 bytes, big-endian) ++ run encoding, mod r
///   table:path  explicit colour table file
///   exec:cmd    external process speaking the HJ-ORACLE line protocol
std::unique_ptr<ColourOracle> make_oracle(std::string_view spec, unsigned r);

/// Closed-form helpers behind the builtin oracles.
ColourId count_colour(const Word& w, unsigned r);
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t state = 14695981039346656037ULL);
ColourId hash_colour(const Word& w, std::uint64_t seed, unsigned r);

struct OracleStats
{
    Count unique = 0;
    Count total = 0;

    bool operator==(const OracleStats&) const = default;
};

inline constexpr Count kUnlimitedBudget = std::numeric_limits<Count>::max();

/// Memoizing, counting wrapper. Checks every answer against [0, r) and stops
/// with BudgetExceeded once a new distinct word would push `unique` past the
/// budget. Not thread-safe.
class CountingOracle final : public ColourOracle
{
public:
    explicit CountingOracle(std::unique_ptr<ColourOracle> inner, Count budget = kUnlimitedBudget);

    ColourId evaluate(const Word& w) override;

    [[nodiscard]] bool replayable() const override { return inner_->replayable(); }
    [[nodiscard]] OracleStats stats() const { return stats_; }
    [[nodiscard]] Count budget() const { return budget_; }

private:
    std::unique_ptr<ColourOracle> inner_;
    Count budget_;
    OracleStats stats_;
    std::unordered_map<std::string, ColourId> memo_;
    std::string scratch_;
};

inline std::unique_ptr<CountingOracle> with_memo_and_counting(std::unique_ptr<ColourOracle> oracle,
                                                              Count budget = kUnlimitedBudget)
{
    return std::make_unique<CountingOracle>(std::move(oracle), budget);
}

/// Per-call wait for exec oracles, from HJLINE_ORACLE_TIMEOUT_MS (default 10000).
int oracle_timeout_ms();

} // namespace hjline
