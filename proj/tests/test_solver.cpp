#include <doctest.h>

#include <random>

#include "hjline/chain.hpp"
#include "hjline/line.hpp"
#include "hjline/solver.hpp"

using namespace hjline;

namespace {

BlockStructure custom(unsigned r, std::vector<Count> sizes) { return block_structure(r, Mode::Custom, sizes); }

std::unique_ptr<CountingOracle> oracle(const std::string& spec, unsigned r, Count budget = kUnlimitedBudget)
{
    return with_memo_and_counting(make_oracle(spec, r), budget);
}

// Block k of v_i(ell; a) written out digit by digit, independent of assemble.
std::string block_digits(Count size, Count ones, Count middle_end, char middle)
{
    return std::string(ones, '1') + std::string(middle_end - ones, middle) + std::string(size - middle_end, '2');
}

std::string count_expanded(const std::string& digits, unsigned r)
{
    std::uint64_t total = 0;
    for (char c : digits) {
        total += c == '1' ? 1 : c == '3' ? 2 : 0;
    }
    return std::to_string(total % r);
}

class OutOfRange final : public ColourOracle
{
public:
    OutOfRange() : ColourOracle(2, "out-of-range") {}
    ColourId evaluate(const Word&) override { return 2; }
};

} // namespace

TEST_CASE("extend_with_letters")
{
    const auto bs = custom(2, {2, 2});
    const auto w = Word::parse("12");
    const PairTable pairs(1, {{0, 1}});
    CHECK(extend_with_letters(w, bs, pairs, LetterVector{Symbol::Three}).expand() == "1232");
    CHECK(extend_with_letters(w, bs, pairs, LetterVector{Symbol::Two}).expand() == "1222");
    CHECK(extend_with_letters(w, bs, pairs, LetterVector{Symbol::One}).expand() == "1212");

    const auto full = Word::parse("1221");
    CHECK(extend_with_letters(full, bs, PairTable(2, {}), LetterVector{}) == full);

    CHECK_THROWS_AS(extend_with_letters(Word::parse("1"), bs, pairs, LetterVector{Symbol::Two}), UsageError);
    CHECK_THROWS_AS(extend_with_letters(w, bs, PairTable(1, {{0, 3}}), LetterVector{Symbol::Two}), UsageError);
    CHECK_THROWS_AS(extend_with_letters(w, bs, pairs, LetterVector{}), UsageError);
}

TEST_CASE("build_v")
{
    const auto bs = block_structure(2, Mode::Minimal);
    const PairTable pairs(0, {{0, 1}, {0, 1}});
    const auto v = build_v(bs, Word{}, pairs, 1, 1, LetterVector{Symbol::Three});
    CHECK(v == Word::parse("2x24,3x1,2x1"));
    CHECK(v.encode() == "2x24,3x1,2x1");
    CHECK(v.expand() == std::string(24, '2') + "32");

    // ell = t, i = 2 with p_{t,2} = n_t: last block all ones
    const PairTable wide(0, {{3, 7}, {0, 2}});
    const auto last = build_v(bs, Word{}, wide, 2, 2, LetterVector{});
    CHECK(last.expand() == block_digits(24, 7, 7, '1') + "11");

    // ell = 0 with all-ones letters: every block is Cut(p_{k,2})
    const auto ones = build_v(bs, Word{}, wide, 0, 1, LetterVector{Symbol::One, Symbol::One});
    CHECK(ones.expand() == block_digits(24, 7, 7, '1') + "11");

    CHECK_THROWS_AS(build_v(bs, Word{}, wide, 1, 3, LetterVector{Symbol::One}), UsageError);
    CHECK_THROWS_AS(build_v(bs, Word{}, wide, 1, 1, LetterVector{}), UsageError);
    CHECK_THROWS_AS(build_v(bs, Word{}, wide, 3, 1, LetterVector{}), UsageError);
    CHECK_THROWS_AS(build_v(bs, Word::parse("1"), wide, 1, 1, LetterVector{Symbol::One}), UsageError);
}

TEST_CASE("letter_vectors are lexicographic")
{
    const auto vs = letter_vectors(2);
    REQUIRE(vs.size() == 9);
    CHECK(letters_to_string(vs.front()) == "11");
    CHECK(letters_to_string(vs[1]) == "12");
    CHECK(letters_to_string(vs[3]) == "21");
    CHECK(letters_to_string(vs.back()) == "33");
    CHECK(letter_vectors(0).size() == 1);
    CHECK(letters_to_string(letter_run(1, 2, 1)) == "1223");
}

TEST_CASE("composite_colour")
{
    SUBCASE("top level is a single oracle colour")
    {
        const auto bs = block_structure(2, Mode::Paper);
        auto o = oracle("count", 2);
        Solver solver(bs, *o);
        const auto cc = solver.composite_colour(1, Word::parse("1x5,2x61"));
        CHECK(cc.inherited.empty());
        CHECK(cc.inherited.level() == 2);
        CHECK(cc.colours == std::vector<ColourId>{1});
    }
    SUBCASE("constant oracle")
    {
        const auto bs = block_structure(2, Mode::Paper);
        auto o = oracle("const:0", 2);
        Solver solver(bs, *o);
        const auto cc = solver.composite_colour(0, extend_simple(Word{}, 10, 64));
        CHECK(cc.colours == std::vector<ColourId>{0, 0, 0});
        CHECK(cc.inherited == PairTable(1, {{0, 1}}));
    }
    SUBCASE("count oracle entries follow the formula")
    {
        const auto bs = block_structure(2, Mode::Paper);
        auto o = oracle("count", 2);
        Solver solver(bs, *o);
        for (Count q : {0, 1, 17, 64}) {
            const auto cc = solver.composite_colour(0, extend_simple(Word{}, q, 64));
            REQUIRE(cc.colours.size() == 3);
            const auto p = cc.inherited.at(2);
            const std::string head = block_digits(64, q, q, '1');
            std::string expected;
            std::string actual;
            for (char a : {'1', '2', '3'}) {
                expected += count_expanded(head + block_digits(2, p.first, p.second, a), 2);
            }
            for (auto c : cc.colours) {
                actual += std::to_string(c);
            }
            CHECK(actual == expected);
        }
    }
}

TEST_CASE("solve_level")
{
    SUBCASE("one colour collides at (0, 1)")
    {
        const auto bs = block_structure(1, Mode::Paper);
        auto o = oracle("hash:3", 1);
        Solver solver(bs, *o);
        const auto& out = solver.solve_level(0, Word{});
        CHECK(out.collision == Collision{0, 1});
        CHECK(out.pairs == PairTable(0, {{0, 1}}));
    }
    SUBCASE("constant oracle collides immediately")
    {
        const auto bs = block_structure(2, Mode::Minimal);
        auto o = oracle("const:1", 2);
        Solver solver(bs, *o);
        const auto& out = solver.solve_level(1, extend_simple(Word{}, 5, 24));
        CHECK(out.collision == Collision{0, 1});
        CHECK(o->stats().unique == 2);
    }
    SUBCASE("hash:7 regression")
    {
        const auto bs = block_structure(2, Mode::Minimal);
        auto o = oracle("hash:7", 2);
        Solver solver(bs, *o);
        const auto out = solver.solve_level(0, Word{});
        CHECK(out.collision == Collision{1, 2});
        CHECK(out.pairs == PairTable(0, {{1, 2}, {1, 2}}));

        // recomputing both sides gives the same composite colour
        Solver again(bs, *o);
        const auto a = again.composite_colour(0, extend_simple(Word{}, out.collision.first, 24));
        const auto b = again.composite_colour(0, extend_simple(Word{}, out.collision.second, 24));
        CHECK(a == b);
        CHECK(a == out.witness);
    }
    SUBCASE("undersized custom block has no collision")
    {
        const auto bs = custom(2, {1, 2});
        auto o = oracle("count", 2);
        Solver solver(bs, *o);
        CHECK_THROWS_AS(solver.solve_level(0, Word{}), NoCollision);
    }
    SUBCASE("precondition errors")
    {
        const auto bs = block_structure(2, Mode::Minimal);
        auto o = oracle("count", 2);
        Solver solver(bs, *o);
        CHECK_THROWS_AS(solver.solve_level(2, Word{}), UsageError);
        CHECK_THROWS_AS(solver.solve_level(1, Word{}), UsageError);
        CHECK_THROWS_AS(solver.composite_colour(0, Word{}), UsageError);
        auto mismatched = oracle("count", 3);
        CHECK_THROWS_AS(Solver(bs, *mismatched), UsageError);
    }
}

TEST_CASE("solver errors propagate")
{
    const auto bs = block_structure(2, Mode::Paper);
    auto capped = oracle("hash:1", 2, 5);
    CHECK_THROWS_AS(find_line(bs, *capped), BudgetExceeded);

    CountingOracle bad(std::make_unique<OutOfRange>());
    CHECK_THROWS_AS(find_line(bs, bad), OracleRangeError);
}

TEST_CASE("find_line")
{
    SUBCASE("r = 1")
    {
        auto o = oracle("const:0", 1);
        const auto cert = find_line(block_structure(1, Mode::Paper), *o);
        CHECK(cert.line.active == std::vector<Interval>{{1, 1}});
        CHECK(cert.shared_colour == 0);
        for (auto x : kAllSymbols) {
            CHECK(o->evaluate(point_of_line(cert.line, x)) == 0);
        }
    }
    SUBCASE("r = 2 paper, constant oracle")
    {
        auto o = oracle("const:1", 2);
        const auto cert = find_line(block_structure(2, Mode::Paper), *o);
        CHECK(cert.stats.unique <= 10);
        CHECK(cert.shared_colour == 1);
    }
    SUBCASE("r = 2 paper, hash:1")
    {
        const auto bs = block_structure(2, Mode::Paper);
        auto o = oracle("hash:1", 2);
        const auto cert = find_line(bs, *o);
        CHECK(cert.stats.unique <= 500);
        auto fresh = make_oracle("hash:1", 2);
        const auto check = verify_line(cert.line, *fresh);
        CHECK(check.monochromatic);
        CHECK(check.colour == cert.shared_colour);
        const auto [q1, q2] = cert.final_collision;
        CHECK(point_of_line(cert.line, Symbol::One) == v_of(bs, cert.pairs, q2));
        CHECK(point_of_line(cert.line, Symbol::Three) == v_of(bs, cert.pairs, q1));
    }
    SUBCASE("deterministic")
    {
        for (auto mode : {Mode::Paper, Mode::Minimal}) {
            const auto bs = block_structure(2, mode);
            auto a = oracle("hash:12", 2);
            auto b = oracle("hash:12", 2);
            CHECK(encode_certificate(find_line(bs, *a)) == encode_certificate(find_line(bs, *b)));
        }
    }
}

TEST_CASE("build_chain")
{
    const auto bs = block_structure(2, Mode::Paper);
    const PairTable pairs(0, {{3, 9}, {0, 1}});

    const auto short_chain = build_chain(bs, pairs, 1, 2);
    REQUIRE(short_chain.size() == 3);
    CHECK(short_chain[0].kind == StepKind::Identify);
    CHECK(short_chain[1].kind == StepKind::Conclude);
    CHECK(short_chain[2].kind == StepKind::Identify);

    const auto chain = build_chain(bs, pairs, 0, 2);
    REQUIRE(chain.size() == 5);
    CHECK(chain[1].kind == StepKind::Conclude);
    CHECK(chain[1].ell == std::optional<std::size_t>(2));
    CHECK(chain[1].letters.empty());
    CHECK(chain[3].kind == StepKind::Conclude);
    CHECK(chain[3].ell == std::optional<std::size_t>(1));
    CHECK(letters_to_string(chain[3].letters) == "2");
    CHECK(chain.front().from == v_of(bs, pairs, 2));
    CHECK(chain.back().to == final_word(bs, pairs, letter_run(0, 2, 0)));

    for (unsigned r = 1; r <= 3; ++r) {
        const auto b = block_structure(r, Mode::Paper);
        std::vector<CutPair> ps;
        for (std::size_t k = 1; k <= r; ++k) {
            const Count hi = std::min<Count>(b.size(k), 2 + k);
            ps.push_back({std::min<Count>(k % 2, hi - 1), hi});
        }
        const PairTable full(0, ps);
        for (std::size_t q2 = 1; q2 <= r; ++q2) {
            for (std::size_t q1 = 0; q1 < q2; ++q1) {
                const auto c = build_chain(b, full, q1, q2);
                CHECK(c.size() == 2 * (q2 - q1) + 1);
                for (std::size_t i = 0; i < c.size(); ++i) {
                    if (c[i].kind == StepKind::Identify) {
                        CHECK(words_equal(c[i].from, c[i].to));
                    }
                    if (i + 1 < c.size()) {
                        CHECK(c[i].to == c[i + 1].from);
                    }
                }
            }
        }
    }
    CHECK_THROWS_AS(build_chain(bs, pairs, 2, 2), UsageError);
    CHECK_THROWS_AS(build_chain(bs, pairs, 0, 3), UsageError);
}

TEST_CASE("line_from_collision")
{
    const auto one = block_structure(1, Mode::Custom, std::vector<Count>{9});
    const auto single = line_from_collision(one, PairTable(0, {{2, 6}}), 0, 1);
    CHECK(single.active == std::vector<Interval>{{3, 6}});
    CHECK(encode_template(single.fixed) == "1x2,*x4,2x3");

    const auto bs = block_structure(2, Mode::Paper);
    const PairTable pairs(0, {{3, 9}, {0, 1}});
    const auto line = line_from_collision(bs, pairs, 0, 2);
    CHECK(line.active == std::vector<Interval>{{4, 9}, {65, 65}});
    CHECK(line.n == 66);
    CHECK_FALSE(validate_line(line).has_value());
    CHECK(point_of_line(line, Symbol::One) == v_of(bs, pairs, 2));
    CHECK(point_of_line(line, Symbol::Two) == final_word(bs, pairs, letter_run(0, 2, 0)));
    CHECK(point_of_line(line, Symbol::Three) == v_of(bs, pairs, 0));

    // segments that touch across a block boundary merge
    const PairTable touching(0, {{60, 64}, {0, 2}});
    const auto merged = line_from_collision(bs, touching, 0, 2);
    CHECK(merged.active == std::vector<Interval>{{61, 66}});
    CHECK_FALSE(validate_line(merged).has_value());

    const auto upper = line_from_collision(bs, pairs, 1, 2);
    CHECK(upper.active == std::vector<Interval>{{65, 65}});
    CHECK(encode_template(upper.fixed) == "1x9,2x55,*x1,2x1");
}

TEST_CASE("two-word property holds after the induction")
{
    // chi(v_1(ell; a)) == chi(v_2(ell; a)) for every ell and every letter vector
    for (unsigned r : {1u, 2u}) {
        for (auto mode : {Mode::Paper, Mode::Minimal}) {
            const auto bs = block_structure(r, mode);
            for (std::string spec : {"count", "const:0", "hash:0", "hash:1", "hash:2", "hash:99"}) {
                auto o = oracle(spec, r);
                const auto cert = find_line(bs, *o);
                for (std::size_t ell = 1; ell <= r; ++ell) {
                    for (const auto& a : letter_vectors(r - ell)) {
                        const auto v1 = build_v(bs, Word{}, cert.pairs, ell, 1, a);
                        const auto v2 = build_v(bs, Word{}, cert.pairs, ell, 2, a);
                        CHECK(o->evaluate(v1) == o->evaluate(v2));
                    }
                }
            }
        }
    }
}

TEST_CASE("two-word property at an inner level")
{
    const auto bs = block_structure(2, Mode::Paper);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto o = oracle("hash:" + std::to_string(trial), 2);
        Solver solver(bs, *o);
        const auto w = extend_simple(Word{}, rng() % 65, 64);
        const auto& out = solver.solve_level(1, w);
        const auto v1 = build_v(bs, w, out.pairs, 2, 1, LetterVector{});
        const auto v2 = build_v(bs, w, out.pairs, 2, 2, LetterVector{});
        CHECK(o->evaluate(v1) == o->evaluate(v2));
    }
}

TEST_CASE("r = 3 minimal: two-word property on samples and identification")
{
    const auto bs = block_structure(3, Mode::Minimal);
    std::mt19937_64 rng(8);
    for (int seed = 0; seed < 3; ++seed) {
        auto o = oracle("hash:" + std::to_string(seed), 3);
        Solver solver(bs, *o);
        const auto cert = solver.find_line();
        for (std::size_t ell = 1; ell <= 3; ++ell) {
            for (const auto& a : letter_vectors(3 - ell)) {
                CHECK(o->evaluate(build_v(bs, Word{}, cert.pairs, ell, 1, a)) ==
                      o->evaluate(build_v(bs, Word{}, cert.pairs, ell, 2, a)));
            }
        }
        // identification: relative to the empty word and to w(p_{1,2})
        const auto shifted = extend_simple(Word{}, cert.pairs.at(1).second, bs.size(1));
        const auto& inner = solver.solve_level(1, shifted);
        for (std::size_t ell = 2; ell <= 3; ++ell) {
            for (const auto& a : letter_vectors(3 - ell)) {
                for (int i : {1, 2}) {
                    CHECK(build_v(bs, Word{}, cert.pairs, ell, i, a) == build_v(bs, shifted, inner.pairs, ell, i, a));
                }
            }
        }
    }
}
