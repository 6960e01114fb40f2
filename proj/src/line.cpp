#include "hjline/line.hpp"

#include <charconv>

namespace hjline {

namespace {

void push_run(std::vector<TemplateRun>& runs, std::optional<Symbol> symbol, Count length)
{
    if (length == 0) {
        return;
    }
    if (!runs.empty() && runs.back().symbol == symbol) {
        runs.back().length = checked_add(runs.back().length, length);
    } else {
        runs.push_back({symbol, length});
    }
}

} // namespace

std::optional<std::string> validate_line(const LineSpec& line)
{
    if (line.active.empty()) {
        return "active set is empty";
    }
    Count position = 0;
    std::vector<Interval> wildcards;
    for (std::size_t i = 0; i < line.fixed.size(); ++i) {
        const auto& run = line.fixed[i];
        if (run.length == 0) {
            return "template has an empty run";
        }
        if (i > 0 && line.fixed[i - 1].symbol == run.symbol) {
            return "template is not canonical";
        }
        if (!run.symbol) {
            wildcards.push_back({position + 1, position + run.length});
        }
        if (__builtin_add_overflow(position, run.length, &position)) {
            return "template length overflows";
        }
    }
    if (position != line.n) {
        return "template covers " + std::to_string(position) + " positions, expected n = " + std::to_string(line.n);
    }
    if (wildcards != line.active) {
        return "active intervals disagree with the template's wildcard runs";
    }
    return std::nullopt;
}

Word point_of_line(const LineSpec& line, Symbol x)
{
    Word out;
    for (const auto& run : line.fixed) {
        out.append(run.symbol.value_or(x), run.length);
    }
    return out;
}

std::string encode_template(const std::vector<TemplateRun>& runs)
{
    std::string out;
    for (const auto& run : runs) {
        if (!out.empty()) {
            out.push_back(',');
        }
        out.push_back(run.symbol ? to_char(*run.symbol) : '*');
        out.push_back('x');
        out += std::to_string(run.length);
    }
    return out;
}

std::vector<TemplateRun> parse_template(std::string_view text)
{
    std::vector<TemplateRun> out;
    if (text.empty()) {
        return out;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) {
            comma = text.size();
        }
        const auto item = text.substr(pos, comma - pos);
        if (item.size() < 3 || item[1] != 'x') {
            throw FormatError("malformed template run '" + std::string(item) + "'");
        }
        std::optional<Symbol> symbol;
        if (item[0] != '*') {
            if (item[0] < '1' || item[0] > '3') {
                throw FormatError("malformed template run '" + std::string(item) + "'");
            }
            symbol = static_cast<Symbol>(item[0] - '0');
        }
        Count length = 0;
        const auto digits = item.substr(2);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), length);
        if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
            throw FormatError("malformed template run '" + std::string(item) + "'");
        }
        // kept verbatim so that validate_line can report non-canonical input
        out.push_back({symbol, length});
        pos = comma + 1;
    }
    return out;
}

LineSpec line_from_collision(const BlockStructure& bs, const PairTable& pairs, std::size_t q1, std::size_t q2)
{
    const std::size_t t = bs.blocks();
    if (!(q1 < q2 && q2 <= t)) {
        throw UsageError("collision (" + std::to_string(q1) + ", " + std::to_string(q2) + ") is not 0 <= q1 < q2 <= " +
                         std::to_string(t));
    }
    if (pairs.level() != 0 || pairs.last_block() != t) {
        throw UsageError("line needs a full pair table");
    }
    LineSpec line;
    line.n = bs.dimension();
    for (std::size_t k = 1; k <= t; ++k) {
        const auto n_k = bs.size(k);
        const auto& p = pairs.at(k);
        if (!(p.first < p.second && p.second <= n_k)) {
            throw UsageError("pair for block " + std::to_string(k) + " out of range");
        }
        if (k <= q1) {
            push_run(line.fixed, Symbol::One, p.second);
            push_run(line.fixed, Symbol::Two, n_k - p.second);
        } else if (k <= q2) {
            push_run(line.fixed, Symbol::One, p.first);
            push_run(line.fixed, std::nullopt, p.second - p.first);
            push_run(line.fixed, Symbol::Two, n_k - p.second);
            const auto base = bs.prefix(k - 1);
            const Interval segment{base + p.first + 1, base + p.second};
            // adjacent segments merge, matching the template's wildcard runs
            if (!line.active.empty() && line.active.back().hi + 1 == segment.lo) {
                line.active.back().hi = segment.hi;
            } else {
                line.active.push_back(segment);
            }
        } else {
            push_run(line.fixed, Symbol::One, p.first);
            push_run(line.fixed, Symbol::Three, p.second - p.first);
            push_run(line.fixed, Symbol::Two, n_k - p.second);
        }
    }
    return line;
}

} // namespace hjline
