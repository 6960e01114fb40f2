#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hjline/blocks.hpp"
#include "hjline/certificate.hpp"
#include "hjline/oracle.hpp"
#include "hjline/pair_table.hpp"

namespace hjline {

/// chi_{j+1}(w(q)): the pairs inherited from the deeper level together with
/// the oracle colours of every letter extension w(q; a_{j+2}, ..., a_t),
/// listed in letter_vectors order. Compared structurally.
struct CompositeColour
{
    PairTable inherited;
    std::vector<ColourId> colours;

    bool operator==(const CompositeColour&) const = default;
};

struct CompositeColourHash
{
    std::size_t operator()(const CompositeColour& c) const noexcept;
};

struct LevelOutcome
{
    Collision collision;
    /// Pairs over (j, t]: the collision at block j+1, deeper pairs inherited.
    PairTable pairs;
    CompositeColour witness;
};

struct SolverOptions
{
    /// Seeds the sample of (ell, letters) used for the identification asserts.
    std::uint64_t seed = 0;
    /// Samples per level when exhaustive enumeration would exceed 81 cases.
    std::size_t identification_samples = 50;
    /// Called once for the top level and once for the final pigeonhole.
    std::function<void(const std::string&)> log;
};

/// Lazy, memoized form of the level-by-level pigeonhole induction.
///
/// solve_level(j, w) scans q = 0, 1, ..., n_{j+1} and stops at the first q2
/// whose composite colour repeats that of an earlier q1. The pair tables are
/// only ever computed for words reachable from the empty word, and each
/// (level, word) outcome is computed once. Single-threaded.
class Solver
{
public:
    Solver(const BlockStructure& bs, CountingOracle& oracle, SolverOptions options = {});

    /// Composite colour of w (length s_{j+1}); recursion supplies the pairs.
    CompositeColour composite_colour(std::size_t j, const Word& w);

    /// Pair table over (j, t] for w of length s_j.
    const LevelOutcome& solve_level(std::size_t j, const Word& w);

    /// Full induction plus the final pigeonhole over v(0), ..., v(t).
    Certificate find_line();

    [[nodiscard]] const BlockStructure& structure() const { return bs_; }

private:
    LevelOutcome scan_level(std::size_t j, const Word& w);
    void check_identification(std::size_t j, const Word& w, const LevelOutcome& outcome);

    BlockStructure bs_;
    CountingOracle& oracle_;
    SolverOptions options_;
    std::vector<std::vector<LetterVector>> letters_by_length_;
    std::vector<std::unordered_map<std::string, LevelOutcome>> memo_;
    std::uint64_t rng_state_;
};

Certificate find_line(const BlockStructure& bs, CountingOracle& oracle, SolverOptions options = {});

} // namespace hjline
