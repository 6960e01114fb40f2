#include <doctest.h>

#include <cstdlib>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "hjline/oracle.hpp"

using namespace hjline;

namespace {

Word random_word(std::mt19937_64& rng, std::size_t max_runs, Count max_len)
{
    Word w;
    for (auto runs = rng() % (max_runs + 1); runs > 0; --runs) {
        w.append(kAllSymbols[rng() % 3], 1 + rng() % max_len);
    }
    return w;
}

// (#ones + 2 #threes) mod r, straight from the expanded digits
ColourId count_from_digits(const std::string& digits, unsigned r)
{
    std::uint64_t total = 0;
    for (char c : digits) {
        total += c == '1' ? 1 : c == '3' ? 2 : 0;
    }
    return static_cast<ColourId>(total % r);
}

// FNV-1a over seed bytes and a run encoding rebuilt from the digits
ColourId hash_from_digits(const std::string& digits, std::uint64_t seed, unsigned r)
{
    std::string bytes;
    for (int shift = 56; shift >= 0; shift -= 8) {
        bytes.push_back(static_cast<char>((seed >> shift) & 0xff));
    }
    for (std::size_t i = 0; i < digits.size();) {
        std::size_t j = i;
        while (j < digits.size() && digits[j] == digits[i]) {
            ++j;
        }
        if (i > 0) {
            bytes.push_back(',');
        }
        bytes += std::string(1, digits[i]) + "x" + std::to_string(j - i);
        i = j;
    }
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return static_cast<ColourId>(h % r);
}

std::filesystem::path temp_path(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("hjline_test_" + std::to_string(::getpid()) + "_" + name);
}

class FixedOracle final : public ColourOracle
{
public:
    FixedOracle(unsigned r, ColourId answer) : ColourOracle(r, "fixed"), answer_(answer) {}
    ColourId evaluate(const Word&) override { return answer_; }

private:
    ColourId answer_;
};

} // namespace

TEST_CASE("constant oracle")
{
    auto o = make_oracle("const:0", 2);
    CHECK(o->evaluate(Word::parse("123")) == 0);
    CHECK(o->evaluate(Word{}) == 0);
    CHECK(o->description() == "const:0");
    CHECK_THROWS_AS(make_oracle("const:2", 2), UsageError);
    CHECK_THROWS_AS(make_oracle("const:", 2), UsageError);
    CHECK_THROWS_AS(make_oracle("const:x", 2), UsageError);
}

TEST_CASE("count oracle")
{
    CHECK(make_oracle("count", 2)->evaluate(Word::parse("112")) == 0);
    CHECK(make_oracle("count", 3)->evaluate(Word::parse("333")) == 0);
    CHECK(make_oracle("count", 3)->evaluate(Word::parse("13")) == 0);
    CHECK(make_oracle("count", 3)->evaluate(Word::parse("1")) == 1);
    // 1559247894 ones: 1559247894 mod 3 = 0
    CHECK(count_colour(Word::parse("1x1559247894,3x1"), 3) == 2);
}

TEST_CASE("count oracle on runs matches the expanded formula")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const auto w = random_word(rng, 20, 500);
        const unsigned r = 1 + static_cast<unsigned>(rng() % 5);
        CHECK(count_colour(w, r) == count_from_digits(w.expand(), r));
    }
}

TEST_CASE("fnv1a64 reference vectors")
{
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("hash oracle is pinned to its byte stream")
{
    CHECK(hash_colour(Word::parse("1x64,2x2"), 7, 2) == 1);
    CHECK(hash_colour(Word{}, 1, 2) == 0);
    CHECK(hash_colour(Word::parse("123"), 0, 3) == 1);
    CHECK(hash_colour(Word::parse("3x10,1x1"), 42, 3) == 0);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const auto w = random_word(rng, 8, 30);
        const auto seed = rng();
        CHECK(hash_colour(w, seed, 3) == hash_from_digits(w.expand(), seed, 3));
    }
    CHECK_THROWS_AS(make_oracle("hash:", 2), UsageError);
    CHECK_THROWS_AS(make_oracle("hash:-1", 2), UsageError);
}

TEST_CASE("builtin oracles are deterministic and in range")
{
    std::mt19937_64 rng(99);
    for (const char* spec : {"count", "hash:5", "const:1"}) {
        for (unsigned r : {2u, 3u, 7u}) {
            auto first = with_memo_and_counting(make_oracle(spec, r));
            auto second = with_memo_and_counting(make_oracle(spec, r));
            for (int trial = 0; trial < 1000; ++trial) {
                const auto w = random_word(rng, 10, 1000000);
                const auto c = first->evaluate(w);
                CHECK(c < r);
                CHECK(second->evaluate(w) == c);
            }
        }
    }
}

TEST_CASE("unknown oracle specs are rejected")
{
    CHECK_THROWS_AS(make_oracle("random", 2), UsageError);
    CHECK_THROWS_AS(make_oracle("count:3", 2), UsageError);
    CHECK_THROWS_AS(make_oracle("", 2), UsageError);
    CHECK_THROWS_AS(make_oracle("table:", 2), UsageError);
    CHECK_THROWS_AS(make_oracle("count", 0), UsageError);
}

TEST_CASE("memo wrapper counts distinct canonical words")
{
    auto o = with_memo_and_counting(make_oracle("hash:3", 2));
    const auto w = Word::parse("1x3,2x1");
    o->evaluate(w);
    o->evaluate(w);
    CHECK(o->stats() == OracleStats{1, 2});
    o->evaluate(Word::parse("2"));
    CHECK(o->stats().unique == 2);

    // built differently, canonically equal
    auto fresh = with_memo_and_counting(make_oracle("count", 2));
    Word a;
    a.append(Symbol::One, 2);
    a.append(Symbol::One, 1);
    a.append(Symbol::Two, 1);
    fresh->evaluate(w);
    fresh->evaluate(a);
    CHECK(fresh->stats() == OracleStats{1, 2});
}

TEST_CASE("memo wrapper enforces range and budget")
{
    CountingOracle bad(std::make_unique<FixedOracle>(2, 2));
    CHECK_THROWS_AS(bad.evaluate(Word::parse("1")), OracleRangeError);

    CountingOracle capped(make_oracle("count", 2), 2);
    capped.evaluate(Word::parse("1"));
    capped.evaluate(Word::parse("2"));
    capped.evaluate(Word::parse("1"));
    CHECK_THROWS_AS(capped.evaluate(Word::parse("3")), BudgetExceeded);
    CHECK(capped.stats().unique == 2);
}

TEST_CASE("table oracle")
{
    const auto path = temp_path("table.txt");
    ColourTable table{3, 2, 2, {0, 1, 1, 0, 1, 0, 1, 1, 0}};
    table.write(path);
    auto o = make_oracle("table:" + path.string(), 2);
    CHECK(o->evaluate(Word::parse("11")) == 0);
    CHECK(o->evaluate(Word::parse("12")) == 1);
    CHECK(o->evaluate(Word::parse("21")) == 0);
    CHECK(o->evaluate(Word::parse("33")) == 0);
    CHECK(o->evaluate(Word::parse("32")) == 1);
    CHECK_THROWS_AS(o->evaluate(Word::parse("1")), UsageError);
    CHECK_THROWS_AS(make_oracle("table:" + path.string(), 3), FormatError);

    std::ifstream in(path);
    CHECK(ColourTable::read(in).colours == table.colours);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(make_oracle("table:/nonexistent/table.txt", 2), FormatError);
    auto bad = [](const std::string& text) {
        std::istringstream in(text);
        return ColourTable::read(in);
    };
    CHECK_THROWS_AS(bad(""), FormatError);
    CHECK_THROWS_AS(bad("3 1\n0\n1\n0\n"), FormatError);
    CHECK_THROWS_AS(bad("3 1 2\n0\n1\n"), FormatError);
    CHECK_THROWS_AS(bad("3 1 2\n0\n1\n2\n"), FormatError);
    CHECK_THROWS_AS(bad("3 1 2\n0\nx\n1\n"), FormatError);
    CHECK_THROWS_AS(bad("3 13 2\n"), FormatError);
    CHECK(bad("2 2 3\n0\n1\n2\n0\n").points() == 4);
}

TEST_CASE("exec oracle speaks the line protocol")
{
    const std::string stub = HJLINE_ORACLE_STUB;
    auto o = with_memo_and_counting(make_oracle("exec:" + stub + " count 3", 3));
    CHECK_FALSE(o->replayable());
    const auto big = Word::parse("1x1559247894,3x1");
    CHECK(o->evaluate(big) == count_colour(big, 3));
    CHECK(o->evaluate(Word::parse("13")) == 0);
    CHECK(o->evaluate(Word::parse("1")) == 1);
    CHECK(o->stats().unique == 3);
}

TEST_CASE("exec oracle protocol failures")
{
    const std::string stub = HJLINE_ORACLE_STUB;
    CHECK_THROWS_AS(make_oracle("exec:" + stub + " wronghello 2", 2), OracleRangeError);
    CHECK_THROWS_AS(make_oracle("exec:" + stub + " count 3", 2), OracleRangeError);
    CHECK_THROWS_AS(make_oracle("exec:/nonexistent/oracle", 2), OracleRangeError);

    auto bad = make_oracle("exec:" + stub + " badreply 2", 2);
    CHECK_THROWS_AS(bad->evaluate(Word::parse("1")), OracleRangeError);
    auto range = make_oracle("exec:" + stub + " outofrange 2", 2);
    CHECK_THROWS_AS(range->evaluate(Word::parse("1")), OracleRangeError);
    auto gone = make_oracle("exec:" + stub + " exit 2", 2);
    CHECK_THROWS_AS(gone->evaluate(Word::parse("1")), OracleRangeError);
    // once broken, the oracle stays broken
    CHECK_THROWS_AS(gone->evaluate(Word::parse("1")), OracleRangeError);
}

TEST_CASE("exec oracle timeout comes from the environment")
{
    const std::string stub = HJLINE_ORACLE_STUB;
    ::setenv("HJLINE_ORACLE_TIMEOUT_MS", "200", 1);
    CHECK(oracle_timeout_ms() == 200);
    auto slow = make_oracle("exec:" + stub + " silent 2", 2);
    CHECK_THROWS_AS(slow->evaluate(Word::parse("1")), OracleRangeError);
    ::setenv("HJLINE_ORACLE_TIMEOUT_MS", "soon", 1);
    CHECK_THROWS_AS(oracle_timeout_ms(), UsageError);
    ::unsetenv("HJLINE_ORACLE_TIMEOUT_MS");
    CHECK(oracle_timeout_ms() == 10000);
}
