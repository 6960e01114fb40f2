#include "hjline/solver.hpp"

#include <random>
#include <stdexcept>

namespace hjline {

namespace {

std::size_t mix(std::size_t h, std::uint64_t v)
{
    v *= 0x9e3779b97f4a7c15ULL;
    v ^= v >> 29;
    return (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
}

std::size_t power_of_three(std::size_t e)
{
    std::size_t out = 1;
    for (std::size_t i = 0; i < e; ++i) {
        out *= 3;
    }
    return out;
}

} // namespace

std::size_t CompositeColourHash::operator()(const CompositeColour& c) const noexcept
{
    std::size_t h = mix(0xcbf29ce484222325ULL, c.inherited.level());
    for (const auto& p : c.inherited.pairs()) {
        h = mix(h, p.first);
        h = mix(h, p.second);
    }
    for (auto colour : c.colours) {
        h = mix(h, colour);
    }
    return h;
}

Solver::Solver(const BlockStructure& bs, CountingOracle& oracle, SolverOptions options)
    : bs_(bs), oracle_(oracle), options_(std::move(options)), memo_(bs.blocks()), rng_state_(options_.seed)
{
    if (oracle_.colours() != bs_.colours()) {
        throw UsageError("oracle has " + std::to_string(oracle_.colours()) + " colours but the block structure is for r = " +
                         std::to_string(bs_.colours()));
    }
    for (std::size_t len = 0; len <= bs_.blocks(); ++len) {
        letters_by_length_.push_back(letter_vectors(len));
    }
}

CompositeColour Solver::composite_colour(std::size_t j, const Word& w)
{
    const std::size_t t = bs_.blocks();
    if (j >= t) {
        throw UsageError("composite colour level out of range");
    }
    if (w.length() != bs_.prefix(j + 1)) {
        throw UsageError("composite colour at level " + std::to_string(j) + " needs a word of length s_" +
                         std::to_string(j + 1));
    }
    CompositeColour out;
    out.inherited = (j + 1 == t) ? PairTable(t, {}) : solve_level(j + 1, w).pairs;
    const auto& vectors = letters_by_length_[t - j - 1];
    out.colours.reserve(vectors.size());
    for (const auto& letters : vectors) {
        out.colours.push_back(oracle_.evaluate(extend_with_letters(w, bs_, out.inherited, letters)));
    }
    return out;
}

const LevelOutcome& Solver::solve_level(std::size_t j, const Word& w)
{
    if (j >= bs_.blocks()) {
        throw UsageError("solve_level needs j < t");
    }
    if (w.length() != bs_.prefix(j)) {
        throw UsageError("solve_level at level " + std::to_string(j) + " needs a word of length s_" + std::to_string(j));
    }
    auto key = w.key();
    auto& memo = memo_[j];
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    auto outcome = scan_level(j, w);
    return memo.emplace(std::move(key), std::move(outcome)).first->second;
}

LevelOutcome Solver::scan_level(std::size_t j, const Word& w)
{
    const Count n = bs_.size(j + 1);
    std::unordered_map<CompositeColour, Count, CompositeColourHash> seen;
    for (Count q = 0; q <= n; ++q) {
        auto colour = composite_colour(j, extend_simple(w, q, n));
        auto [it, inserted] = seen.try_emplace(std::move(colour), q);
        if (inserted) {
            continue;
        }
        const Count q1 = it->second;
        const auto again_first = composite_colour(j, extend_simple(w, q1, n));
        const auto again_second = composite_colour(j, extend_simple(w, q, n));
        if (!(again_first == again_second) || !(again_first == it->first)) {
            throw std::logic_error("composite colours of a collision differ on recomputation");
        }
        LevelOutcome outcome{{static_cast<std::size_t>(q1), static_cast<std::size_t>(q)},
                             it->first.inherited.with_front({q1, q}),
                             it->first};
        check_identification(j, w, outcome);
        return outcome;
    }
    throw NoCollision("no repeated composite colour among q = 0.." + std::to_string(n) + " at level " +
                      std::to_string(j) + " (block " + std::to_string(j + 1) + " is too small)");
}

void Solver::check_identification(std::size_t j, const Word& w, const LevelOutcome& outcome)
{
    // v_i(ell; a) relative to w equals v'_i(ell; a) relative to w(p_{j+1,2})
    const std::size_t t = bs_.blocks();
    if (j + 2 > t) {
        return;
    }
    const auto& deeper = outcome.witness.inherited;
    const Word shifted = extend_simple(w, outcome.pairs.at(j + 1).second, bs_.size(j + 1));

    auto compare = [&](std::size_t ell, int i, const LetterVector& letters) {
        const auto direct = build_v(bs_, w, outcome.pairs, ell, i, letters);
        const auto via = build_v(bs_, shifted, deeper, ell, i, letters);
        if (!words_equal(direct, via)) {
            throw std::logic_error("identification failed at level " + std::to_string(j) + ", ell = " +
                                   std::to_string(ell));
        }
    };

    std::size_t cases = 0;
    for (std::size_t ell = j + 2; ell <= t; ++ell) {
        cases += 2 * power_of_three(t - ell);
    }
    if (cases <= 81) {
        for (std::size_t ell = j + 2; ell <= t; ++ell) {
            for (const auto& letters : letters_by_length_[t - ell]) {
                compare(ell, 1, letters);
                compare(ell, 2, letters);
            }
        }
        return;
    }
    std::mt19937_64 rng(rng_state_);
    rng_state_ = rng();
    const std::size_t span = t - j - 1;
    for (std::size_t s = 0; s < options_.identification_samples; ++s) {
        const std::size_t ell = j + 2 + static_cast<std::size_t>(rng() % span);
        const auto& vectors = letters_by_length_[t - ell];
        const auto& letters = vectors[static_cast<std::size_t>(rng() % vectors.size())];
        compare(ell, 1 + static_cast<int>(rng() % 2), letters);
    }
}

Certificate Solver::find_line()
{
    const std::size_t t = bs_.blocks();
    if (t != bs_.colours()) {
        throw UsageError("the final pigeonhole needs t = r");
    }
    const auto& top = solve_level(0, Word{});
    const PairTable pairs = top.pairs;
    if (options_.log) {
        options_.log("level 0: collision (" + std::to_string(top.collision.first) + ", " +
                     std::to_string(top.collision.second) + ") after " + std::to_string(oracle_.stats().unique) +
                     " distinct evaluations");
    }

    std::unordered_map<ColourId, std::size_t> first_seen;
    std::optional<Collision> collision;
    ColourId shared = 0;
    for (std::size_t q = 0; q <= t; ++q) {
        const auto colour = oracle_.evaluate(v_of(bs_, pairs, q));
        auto [it, inserted] = first_seen.try_emplace(colour, q);
        if (!inserted) {
            collision = Collision{it->second, q};
            shared = colour;
            break;
        }
    }
    if (!collision) {
        throw NoCollision("the r + 1 words v(0), ..., v(r) received distinct colours");
    }
    if (options_.log) {
        options_.log("final: v(" + std::to_string(collision->first) + ") and v(" + std::to_string(collision->second) +
                     ") share colour " + std::to_string(shared));
    }

    Certificate cert;
    cert.r = bs_.colours();
    cert.mode = bs_.mode();
    cert.block_sizes = bs_.sizes();
    cert.pairs = pairs;
    cert.final_collision = *collision;
    cert.chain = build_chain(bs_, pairs, collision->first, collision->second);
    cert.line = line_from_collision(bs_, pairs, collision->first, collision->second);
    cert.shared_colour = shared;
    cert.oracle = oracle_.description();
    cert.stats = oracle_.stats();

    if (point_of_line(cert.line, Symbol::One) != cert.chain.front().from ||
        point_of_line(cert.line, Symbol::Two) != cert.chain.back().to ||
        point_of_line(cert.line, Symbol::Three) != v_of(bs_, pairs, collision->first)) {
        throw std::logic_error("line points disagree with the chain endpoints");
    }
    return cert;
}

Certificate find_line(const BlockStructure& bs, CountingOracle& oracle, SolverOptions options)
{
    Solver solver(bs, oracle, std::move(options));
    return solver.find_line();
}

} // namespace hjline
