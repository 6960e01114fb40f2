#include "hjline/bruteforce.hpp"

namespace hjline::brute {

std::size_t LinePattern::stars() const
{
    std::size_t out = 0;
    for (auto c : cells) {
        out += c == 0 ? 1 : 0;
    }
    return out;
}

std::string LinePattern::to_string() const
{
    std::string out;
    for (auto c : cells) {
        out.push_back(c == 0 ? '*' : static_cast<char>('0' + c));
    }
    return out;
}

LineEnumerator::LineEnumerator(unsigned m, unsigned n, Count cap) : m_(m), n_(n)
{
    if (m < 2 || n < 1) {
        throw UsageError("line enumeration needs m >= 2 and n >= 1");
    }
    Count total = 1;
    for (unsigned i = 0; i < n; ++i) {
        total = checked_mul(total, m + 1);
        if (total > cap) {
            throw UsageError("(m+1)^n exceeds the pattern cap of " + std::to_string(cap));
        }
    }
    digits_.assign(n, 0);
    current_.cells.assign(n, 0);
}

bool LineEnumerator::next()
{
    if (done_) {
        return false;
    }
    for (;;) {
        if (started_) {
            // increment the base-(m+1) counter, last coordinate fastest
            std::size_t pos = n_;
            while (pos > 0) {
                --pos;
                if (digits_[pos] < m_) {
                    ++digits_[pos];
                    break;
                }
                digits_[pos] = 0;
                if (pos == 0) {
                    done_ = true;
                    return false;
                }
            }
        }
        started_ = true;
        bool has_star = false;
        for (unsigned i = 0; i < n_; ++i) {
            if (digits_[i] == m_) {
                has_star = true;
                current_.cells[i] = 0;
            } else {
                current_.cells[i] = static_cast<std::uint8_t>(digits_[i] + 1);
            }
        }
        if (has_star) {
            return true;
        }
    }
}

std::vector<LinePattern> enumerate_lines(unsigned m, unsigned n, Count cap)
{
    std::vector<LinePattern> out;
    LineEnumerator it(m, n, cap);
    while (it.next()) {
        out.push_back(it.current());
    }
    return out;
}

std::vector<std::size_t> line_points(const LinePattern& pattern, unsigned m)
{
    std::vector<std::size_t> out(m, 0);
    for (unsigned x = 1; x <= m; ++x) {
        std::size_t index = 0;
        for (auto c : pattern.cells) {
            const unsigned symbol = c == 0 ? x : c;
            index = index * m + (symbol - 1);
        }
        out[x - 1] = index;
    }
    return out;
}

std::optional<MonoLine> find_mono_line_naive(const ColourTable& table)
{
    if (table.colours.size() != table_points(table.m, table.n)) {
        throw FormatError("colour table has the wrong number of points");
    }
    if (table.n == 0) {
        return std::nullopt;
    }
    LineEnumerator it(table.m, table.n);
    while (it.next()) {
        const auto points = line_points(it.current(), table.m);
        const auto colour = table.colours[points[0]];
        bool mono = true;
        for (std::size_t x = 1; x < points.size() && mono; ++x) {
            mono = table.colours[points[x]] == colour;
        }
        if (mono) {
            return MonoLine{it.current(), colour};
        }
    }
    return std::nullopt;
}

WitnessResult hj_lower_witness(unsigned m, unsigned n, unsigned r, Count node_budget)
{
    if (r == 0) {
        throw UsageError("r must be at least 1");
    }
    const auto points = table_points(m, n);

    // Each line is checked at its x = m point, which has the largest index.
    std::vector<std::vector<std::vector<std::size_t>>> closing(points);
    LineEnumerator it(m, n);
    while (it.next()) {
        auto pts = line_points(it.current(), m);
        const auto last = pts.back();
        pts.pop_back();
        closing[last].push_back(std::move(pts));
    }

    std::vector<int> colour(points, -1);
    WitnessResult result{SearchStatus::ProvenNone, std::nullopt, 0};

    auto consistent = [&](std::size_t p) {
        for (const auto& others : closing[p]) {
            bool mono = true;
            for (auto q : others) {
                if (colour[q] != colour[p]) {
                    mono = false;
                    break;
                }
            }
            if (mono) {
                return false;
            }
        }
        return true;
    };

    // iterative depth-first search over points in index order
    std::size_t p = 0;
    while (true) {
        if (p == points) {
            ColourTable table{m, n, r, {}};
            table.colours.assign(colour.begin(), colour.end());
            result.status = SearchStatus::Witness;
            result.table = std::move(table);
            return result;
        }
        bool placed = false;
        while (colour[p] + 1 < static_cast<int>(r)) {
            ++colour[p];
            if (++result.nodes > node_budget) {
                result.status = SearchStatus::BudgetExhausted;
                return result;
            }
            if (consistent(p)) {
                placed = true;
                break;
            }
        }
        if (placed) {
            ++p;
            continue;
        }
        colour[p] = -1;
        if (p == 0) {
            result.status = SearchStatus::ProvenNone;
            return result;
        }
        --p;
    }
}

HjNumber hj_number_exact(unsigned m, unsigned r, unsigned n_max, Count node_budget)
{
    for (unsigned n = 1; n <= n_max; ++n) {
        const auto search = hj_lower_witness(m, n, r, node_budget);
        if (search.status == SearchStatus::ProvenNone) {
            return {n, std::nullopt};
        }
        if (search.status == SearchStatus::BudgetExhausted) {
            return {std::nullopt, n};
        }
    }
    return {};
}

} // namespace hjline::brute
