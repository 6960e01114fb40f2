#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hjline/certificate.hpp"

namespace hjline {

using nlohmann::json;

namespace {

std::string count_string(Count value) { return std::to_string(value); }

Count count_from_string(const json& value, const char* field)
{
    if (!value.is_string()) {
        throw FormatError(std::string("certificate: '") + field + "' must be a decimal string");
    }
    const auto& text = value.get_ref<const std::string&>();
    Count out = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw FormatError(std::string("certificate: '") + field + "' is not a decimal integer");
    }
    return out;
}

const json& field(const json& object, const char* name)
{
    if (!object.is_object() || !object.contains(name)) {
        throw FormatError(std::string("certificate: missing field '") + name + "'");
    }
    return object.at(name);
}

Count unsigned_field(const json& value, const char* name)
{
    if (!value.is_number_unsigned()) {
        throw FormatError(std::string("certificate: '") + name + "' must be a non-negative integer");
    }
    return value.get<Count>();
}

Word word_field(const json& value, const char* name)
{
    if (!value.is_string()) {
        throw FormatError(std::string("certificate: '") + name + "' must be a run encoding string");
    }
    try {
        return Word::parse(value.get_ref<const std::string&>());
    } catch (const UsageError& e) {
        throw FormatError(std::string("certificate: '") + name + "': " + e.what());
    }
}

json step_to_json(const ChainStep& step)
{
    json out;
    out["kind"] = step.kind == StepKind::Identify ? "identify" : "conclude";
    out["from"] = step.from.encode();
    out["to"] = step.to.encode();
    if (step.kind == StepKind::Conclude) {
        out["ell"] = step.ell.value_or(0);
        out["letters"] = letters_to_string(step.letters);
        out["i_from"] = step.i_from;
        out["i_to"] = step.i_to;
    } else {
        out["ell"] = nullptr;
        out["letters"] = nullptr;
        out["i_from"] = nullptr;
        out["i_to"] = nullptr;
    }
    return out;
}

ChainStep step_from_json(const json& in)
{
    ChainStep step{};
    const auto& kind = field(in, "kind");
    if (kind == "identify") {
        step.kind = StepKind::Identify;
    } else if (kind == "conclude") {
        step.kind = StepKind::Conclude;
    } else {
        throw FormatError("certificate: chain step kind must be 'identify' or 'conclude'");
    }
    step.from = word_field(field(in, "from"), "chain.from");
    step.to = word_field(field(in, "to"), "chain.to");
    const auto& ell = field(in, "ell");
    if (!ell.is_null()) {
        step.ell = static_cast<std::size_t>(unsigned_field(ell, "chain.ell"));
    }
    const auto& letters = field(in, "letters");
    if (!letters.is_null()) {
        if (!letters.is_string()) {
            throw FormatError("certificate: chain.letters must be a string");
        }
        try {
            step.letters = letters_from_string(letters.get_ref<const std::string&>());
        } catch (const UsageError& e) {
            throw FormatError(std::string("certificate: chain.letters: ") + e.what());
        }
    }
    const auto& i_from = field(in, "i_from");
    const auto& i_to = field(in, "i_to");
    step.i_from = i_from.is_null() ? 0 : static_cast<int>(unsigned_field(i_from, "chain.i_from"));
    step.i_to = i_to.is_null() ? 0 : static_cast<int>(unsigned_field(i_to, "chain.i_to"));
    return step;
}

} // namespace

std::string encode_certificate(const Certificate& cert)
{
    json out;
    out["version"] = cert.version;
    out["r"] = cert.r;
    out["mode"] = std::string(to_string(cert.mode));
    json sizes = json::array();
    for (auto n : cert.block_sizes) {
        sizes.push_back(count_string(n));
    }
    out["block_sizes"] = std::move(sizes);
    json pairs = json::array();
    for (std::size_t k = cert.pairs.level() + 1; k <= cert.pairs.last_block(); ++k) {
        const auto& p = cert.pairs.at(k);
        pairs.push_back(json::array({k, p.first, p.second}));
    }
    out["pair_table"] = std::move(pairs);
    out["final_collision"] = json::array({cert.final_collision.first, cert.final_collision.second});
    json chain = json::array();
    for (const auto& step : cert.chain) {
        chain.push_back(step_to_json(step));
    }
    out["chain"] = std::move(chain);
    json active = json::array();
    for (const auto& iv : cert.line.active) {
        active.push_back(json::array({iv.lo, iv.hi}));
    }
    out["line"] = {{"n", count_string(cert.line.n)},
                   {"active", std::move(active)},
                   {"fixed", encode_template(cert.line.fixed)}};
    out["shared_colour"] = cert.shared_colour;
    out["oracle"] = cert.oracle;
    out["stats"] = {{"unique", cert.stats.unique}, {"total", cert.stats.total}};
    return out.dump(2) + "\n";
}

Certificate decode_certificate(std::string_view json_text)
{
    json in;
    try {
        in = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("certificate: invalid JSON: ") + e.what());
    }
    Certificate cert;
    cert.version = static_cast<int>(unsigned_field(field(in, "version"), "version"));
    if (cert.version != 1) {
        throw FormatError("certificate: unsupported version " + std::to_string(cert.version));
    }
    cert.r = static_cast<unsigned>(unsigned_field(field(in, "r"), "r"));
    const auto& mode = field(in, "mode");
    if (!mode.is_string()) {
        throw FormatError("certificate: 'mode' must be a string");
    }
    try {
        cert.mode = parse_mode(mode.get_ref<const std::string&>());
    } catch (const UsageError& e) {
        throw FormatError(std::string("certificate: ") + e.what());
    }
    const auto& sizes = field(in, "block_sizes");
    if (!sizes.is_array()) {
        throw FormatError("certificate: 'block_sizes' must be an array");
    }
    for (const auto& s : sizes) {
        cert.block_sizes.push_back(count_from_string(s, "block_sizes"));
    }

    const auto& pairs = field(in, "pair_table");
    if (!pairs.is_array()) {
        throw FormatError("certificate: 'pair_table' must be an array");
    }
    std::vector<CutPair> cut_pairs;
    for (const auto& entry : pairs) {
        if (!entry.is_array() || entry.size() != 3) {
            throw FormatError("certificate: pair_table entries are [k, p1, p2]");
        }
        const auto k = unsigned_field(entry[0], "pair_table.k");
        if (k != cut_pairs.size() + 1) {
            throw FormatError("certificate: pair_table blocks must be listed as 1, 2, ..., t");
        }
        cut_pairs.push_back({unsigned_field(entry[1], "pair_table.p1"), unsigned_field(entry[2], "pair_table.p2")});
    }
    cert.pairs = PairTable(0, std::move(cut_pairs));

    const auto& collision = field(in, "final_collision");
    if (!collision.is_array() || collision.size() != 2) {
        throw FormatError("certificate: 'final_collision' must be [q1, q2]");
    }
    cert.final_collision = {static_cast<std::size_t>(unsigned_field(collision[0], "final_collision")),
                            static_cast<std::size_t>(unsigned_field(collision[1], "final_collision"))};

    const auto& chain = field(in, "chain");
    if (!chain.is_array()) {
        throw FormatError("certificate: 'chain' must be an array");
    }
    for (const auto& step : chain) {
        cert.chain.push_back(step_from_json(step));
    }

    const auto& line = field(in, "line");
    cert.line.n = count_from_string(field(line, "n"), "line.n");
    const auto& active = field(line, "active");
    if (!active.is_array()) {
        throw FormatError("certificate: 'line.active' must be an array");
    }
    for (const auto& iv : active) {
        if (!iv.is_array() || iv.size() != 2) {
            throw FormatError("certificate: line.active entries are [lo, hi]");
        }
        cert.line.active.push_back({unsigned_field(iv[0], "line.active"), unsigned_field(iv[1], "line.active")});
    }
    const auto& fixed = field(line, "fixed");
    if (!fixed.is_string()) {
        throw FormatError("certificate: 'line.fixed' must be a string");
    }
    cert.line.fixed = parse_template(fixed.get_ref<const std::string&>());

    cert.shared_colour = static_cast<ColourId>(unsigned_field(field(in, "shared_colour"), "shared_colour"));
    const auto& oracle = field(in, "oracle");
    if (!oracle.is_string()) {
        throw FormatError("certificate: 'oracle' must be a string");
    }
    cert.oracle = oracle.get<std::string>();
    const auto& stats = field(in, "stats");
    cert.stats.unique = unsigned_field(field(stats, "unique"), "stats.unique");
    cert.stats.total = unsigned_field(field(stats, "total"), "stats.total");
    return cert;
}

Certificate read_certificate(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open certificate '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return decode_certificate(text.str());
}

void write_certificate(const Certificate& cert, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw UsageError("cannot write certificate '" + path + "'");
    }
    out << encode_certificate(cert);
}

} // namespace hjline
