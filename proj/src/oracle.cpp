#include "hjline/oracle.hpp"

#include <charconv>
#include <cstdlib>

#include "exec_oracle.hpp"

namespace hjline {

namespace {

class ConstantOracle final : public ColourOracle
{
public:
    ConstantOracle(unsigned r, ColourId colour, std::string spec)
        : ColourOracle(r, std::move(spec)), colour_(colour)
    {
    }

    ColourId evaluate(const Word&) override { return colour_; }

private:
    ColourId colour_;
};

class CountOracle final : public ColourOracle
{
public:
    explicit CountOracle(unsigned r) : ColourOracle(r, "count") {}

    ColourId evaluate(const Word& w) override { return count_colour(w, colours()); }
};

class HashOracle final : public ColourOracle
{
public:
    HashOracle(unsigned r, std::uint64_t seed, std::string spec) : ColourOracle(r, std::move(spec)), seed_(seed) {}

    ColourId evaluate(const Word& w) override { return hash_colour(w, seed_, colours()); }

private:
    std::uint64_t seed_;
};

class TableOracle final : public ColourOracle
{
public:
    TableOracle(unsigned r, ColourTable table, std::string spec)
        : ColourOracle(r, std::move(spec)), table_(std::move(table))
    {
    }

    ColourId evaluate(const Word& w) override { return table_.colours[table_.index_of(w)]; }

private:
    ColourTable table_;
};

std::uint64_t parse_u64(std::string_view text, std::string_view spec)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw UsageError("malformed number in oracle spec '" + std::string(spec) + "'");
    }
    return value;
}

} // namespace

ColourId count_colour(const Word& w, unsigned r)
{
    std::uint64_t acc = 0;
    for (const auto& run : w.runs()) {
        const std::uint64_t weight = run.symbol == Symbol::One ? 1 : run.symbol == Symbol::Three ? 2 : 0;
        acc = (acc + (weight * (run.length % r)) % r) % r;
    }
    return static_cast<ColourId>(acc);
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t state)
{
    constexpr std::uint64_t kPrime = 1099511628211ULL;
    for (char c : bytes) {
        state ^= static_cast<unsigned char>(c);
        state *= kPrime;
    }
    return state;
}

ColourId hash_colour(const Word& w, std::uint64_t seed, unsigned r)
{
    char prefix[8];
    for (int i = 0; i < 8; ++i) {
        prefix[i] = static_cast<char>((seed >> (56 - 8 * i)) & 0xff);
    }
    const auto state = fnv1a64(std::string_view(prefix, 8));
    return static_cast<ColourId>(fnv1a64(w.encode(), state) % r);
}

std::unique_ptr<ColourOracle> make_oracle(std::string_view spec, unsigned r)
{
    if (r == 0) {
        throw UsageError("oracle needs r >= 1");
    }
    const auto colon = spec.find(':');
    const auto kind = spec.substr(0, colon);
    const auto arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
    const bool has_arg = colon != std::string_view::npos;

    if (kind == "const" && has_arg) {
        const auto c = parse_u64(arg, spec);
        if (c >= r) {
            throw UsageError("constant colour " + std::to_string(c) + " not below r = " + std::to_string(r));
        }
        return std::make_unique<ConstantOracle>(r, static_cast<ColourId>(c), std::string(spec));
    }
    if (kind == "count" && !has_arg) {
        return std::make_unique<CountOracle>(r);
    }
    if (kind == "hash" && has_arg) {
        return std::make_unique<HashOracle>(r, parse_u64(arg, spec), std::string(spec));
    }
    if (kind == "table" && has_arg && !arg.empty()) {
        auto table = ColourTable::read(std::filesystem::path(std::string(arg)));
        if (table.m != 3) {
            throw FormatError("table oracle needs a colouring of [3]^n, got m = " + std::to_string(table.m));
        }
        if (table.r != r) {
            throw FormatError("table has r = " + std::to_string(table.r) + ", expected " + std::to_string(r));
        }
        return std::make_unique<TableOracle>(r, std::move(table), std::string(spec));
    }
    if (kind == "exec" && has_arg && !arg.empty()) {
        return std::make_unique<detail::ExecOracle>(r, std::string(arg), std::string(spec), oracle_timeout_ms());
    }
    throw UsageError("unknown oracle spec '" + std::string(spec) + "'");
}

CountingOracle::CountingOracle(std::unique_ptr<ColourOracle> inner, Count budget)
    : ColourOracle(inner->colours(), inner->description()), inner_(std::move(inner)), budget_(budget)
{
}

ColourId CountingOracle::evaluate(const Word& w)
{
    ++stats_.total;
    scratch_.clear();
    w.append_key(scratch_);
    if (auto it = memo_.find(scratch_); it != memo_.end()) {
        return it->second;
    }
    if (stats_.unique >= budget_) {
        throw BudgetExceeded("oracle budget of " + std::to_string(budget_) + " distinct evaluations exceeded");
    }
    const auto colour = inner_->evaluate(w);
    if (colour >= colours()) {
        throw OracleRangeError("oracle '" + description() + "' returned colour " + std::to_string(colour) +
                               " outside [0, " + std::to_string(colours()) + ")");
    }
    ++stats_.unique;
    memo_.emplace(scratch_, colour);
    return colour;
}

int oracle_timeout_ms()
{
    const char* value = std::getenv("HJLINE_ORACLE_TIMEOUT_MS");
    if (value == nullptr || *value == '\0') {
        return 10000;
    }
    int ms = 0;
    std::string_view text(value);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), ms);
    if (ec != std::errc{} || ptr != text.data() + text.size() || ms <= 0) {
        throw UsageError("HJLINE_ORACLE_TIMEOUT_MS must be a positive integer");
    }
    return ms;
}

} // namespace hjline
