#include "hjline/colour_table.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace hjline {

std::size_t table_points(unsigned m, unsigned n, Count cap)
{
    Count total = 1;
    for (unsigned i = 0; i < n; ++i) {
        total = checked_mul(total, m);
        if (total > cap) {
            throw UsageError(std::to_string(m) + "^" + std::to_string(n) + " points exceed the cap of " +
                             std::to_string(cap));
        }
    }
    return static_cast<std::size_t>(total);
}

std::size_t ColourTable::index_of(const Word& w) const
{
    if (m != 3) {
        throw UsageError("table over [" + std::to_string(m) + "]^n cannot colour words over [3]");
    }
    if (w.length() != n) {
        throw UsageError("word of length " + std::to_string(w.length()) + " queried against a table with n = " +
                         std::to_string(n));
    }
    std::size_t index = 0;
    for (const auto& run : w.runs()) {
        for (Count i = 0; i < run.length; ++i) {
            index = index * 3 + static_cast<std::size_t>(to_int(run.symbol) - 1);
        }
    }
    return index;
}

ColourTable ColourTable::read(std::istream& in)
{
    ColourTable table;
    std::string header;
    if (!std::getline(in, header)) {
        throw FormatError("colour table: missing header line");
    }
    std::istringstream hs(header);
    long long m = 0;
    long long n = 0;
    long long r = 0;
    std::string extra;
    if (!(hs >> m >> n >> r) || (hs >> extra) || m < 2 || n < 0 || r < 1 || m > 255 || n > 64 ||
        r > 1000000) {
        throw FormatError("colour table: malformed header '" + header + "'");
    }
    table.m = static_cast<unsigned>(m);
    table.n = static_cast<unsigned>(n);
    table.r = static_cast<unsigned>(r);
    std::size_t count = 0;
    try {
        count = table_points(table.m, table.n);
    } catch (const UsageError& e) {
        throw FormatError(std::string("colour table: ") + e.what());
    }
    table.colours.reserve(count);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream ls(line);
        long long c = -1;
        if (!(ls >> c) || (ls >> extra) || c < 0 || c >= r) {
            throw FormatError("colour table: bad colour line '" + line + "'");
        }
        table.colours.push_back(static_cast<ColourId>(c));
    }
    if (table.colours.size() != count) {
        throw FormatError("colour table: expected " + std::to_string(count) + " colours, found " +
                          std::to_string(table.colours.size()));
    }
    return table;
}

ColourTable ColourTable::read(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open colour table '" + path.string() + "'");
    }
    return read(in);
}

void ColourTable::write(std::ostream& out) const
{
    out << m << ' ' << n << ' ' << r << '\n';
    for (auto c : colours) {
        out << c << '\n';
    }
}

void ColourTable::write(const std::filesystem::path& path) const
{
    std::ofstream out(path);
    if (!out) {
        throw UsageError("cannot write colour table '" + path.string() + "'");
    }
    write(out);
}

} // namespace hjline
