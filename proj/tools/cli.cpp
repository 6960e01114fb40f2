#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hjline/blocks.hpp"
#include "hjline/bruteforce.hpp"
#include "hjline/certificate.hpp"
#include "hjline/oracle.hpp"
#include "hjline/solver.hpp"

namespace hjline::cli {

namespace {

using nlohmann::json;

struct RunConfig
{
    unsigned r = 0;
    std::string mode = "paper";
    std::string sizes;
    std::string oracle;
    std::uint64_t seed = 0;
    Count budget = 100000000;
    std::string out;
    std::string format = "text";
    std::string cert;
};

struct BruteConfig
{
    unsigned m = 3;
    unsigned n = 1;
    unsigned r = 2;
    unsigned n_max = 3;
    Count budget = brute::kDefaultNodeBudget;
    std::string out;
};

void log_line(const std::string& message) { std::cerr << "hjline: " << message << '\n'; }

BlockStructure make_structure(const RunConfig& config)
{
    const auto mode = parse_mode(config.mode);
    std::vector<Count> sizes;
    if (mode == Mode::Custom) {
        if (config.sizes.empty()) {
            throw UsageError("--mode custom requires --sizes");
        }
        sizes = parse_sizes(config.sizes);
    } else if (!config.sizes.empty()) {
        throw UsageError("--sizes is only valid with --mode custom");
    }
    return block_structure(config.r, mode, sizes);
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw UsageError("cannot write '" + path + "'");
    }
    out << text;
}

int cmd_params(const RunConfig& config)
{
    const auto bs = make_structure(config);
    json doc;
    doc["r"] = bs.colours();
    doc["t"] = bs.blocks();
    doc["mode"] = std::string(to_string(bs.mode()));
    doc["n"] = std::to_string(bs.dimension());
    json sizes = json::array();
    json spaces = json::array();
    for (std::size_t k = 1; k <= bs.blocks(); ++k) {
        sizes.push_back(std::to_string(bs.size(k)));
    }
    for (std::size_t j = 0; j < bs.blocks(); ++j) {
        spaces.push_back(std::to_string(colour_space_size(bs, j)));
    }
    doc["block_sizes"] = sizes;
    doc["colour_space_sizes"] = spaces;
    if (!config.out.empty()) {
        write_text_file(config.out, doc.dump(2) + "\n");
    }
    if (config.format == "json") {
        std::cout << doc.dump(2) << '\n';
        return kSuccess;
    }
    std::cout << "r = " << bs.colours() << ", t = " << bs.blocks() << ", mode = " << to_string(bs.mode()) << '\n';
    std::cout << "sizes = ";
    for (std::size_t k = 1; k <= bs.blocks(); ++k) {
        std::cout << (k > 1 ? "," : "") << bs.size(k);
    }
    std::cout << "\nn = " << bs.dimension() << '\n';
    for (std::size_t j = 0; j < bs.blocks(); ++j) {
        std::cout << "level " << j << ": colour space " << colour_space_size(bs, j) << ", block " << j + 1
                  << " offers " << bs.size(j + 1) + 1 << " candidates\n";
    }
    return kSuccess;
}

std::string active_text(const LineSpec& line)
{
    std::string out;
    for (const auto& iv : line.active) {
        if (!out.empty()) {
            out += " u ";
        }
        out += "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
    }
    return out;
}

int cmd_find_line(const RunConfig& config)
{
    const auto bs = make_structure(config);
    if (config.oracle.empty()) {
        throw UsageError("--oracle is required");
    }
    CountingOracle oracle(make_oracle(config.oracle, bs.colours()), config.budget);
    SolverOptions options;
    options.seed = config.seed;
    options.log = log_line;
    log_line("r = " + std::to_string(bs.colours()) + ", n = " + std::to_string(bs.dimension()) + ", oracle " +
             config.oracle);
    const auto cert = find_line(bs, oracle, options);
    if (!config.out.empty()) {
        write_certificate(cert, config.out);
    }
    if (config.format == "json") {
        std::cout << encode_certificate(cert);
        return kSuccess;
    }
    std::cout << "monochromatic line found: colour " << cert.shared_colour << '\n';
    std::cout << "final collision: v(" << cert.final_collision.first << ") ~ v(" << cert.final_collision.second
              << ")\n";
    std::cout << "active set: " << active_text(cert.line) << '\n';
    std::cout << "chain steps: " << cert.chain.size() << '\n';
    std::cout << "oracle evaluations: " << cert.stats.unique << " distinct, " << cert.stats.total << " requests\n";
    if (!config.out.empty()) {
        std::cout << "certificate: " << config.out << '\n';
    }
    return kSuccess;
}

int cmd_verify(const RunConfig& config)
{
    const auto cert = [&] {
        std::ifstream probe(config.cert);
        if (!probe) {
            throw UsageError("cannot open certificate '" + config.cert + "'");
        }
        return read_certificate(config.cert);
    }();
    const auto spec = config.oracle.empty() ? cert.oracle : config.oracle;
    if (cert.r == 0) {
        throw FormatError("certificate has r = 0");
    }
    auto oracle = make_oracle(spec, cert.r);
    const auto report = verify_certificate(cert, *oracle);
    if (config.format == "json") {
        json doc = json::array();
        for (const auto& check : report.checks) {
            const char* status = check.status == CheckStatus::Pass ? "pass" : check.status == CheckStatus::Fail ? "fail" : "skipped";
            doc.push_back({{"id", check.id}, {"name", check.name}, {"status", status}, {"detail", check.detail}});
        }
        std::cout << json{{"passed", report.passed()}, {"checks", doc}}.dump(2) << '\n';
    } else {
        std::cout << report.to_text();
        std::cout << (report.passed() ? "certificate verified\n" : "certificate REJECTED\n");
    }
    return report.passed() ? kSuccess : kVerificationFailed;
}

int cmd_brute_lines(const BruteConfig& config)
{
    Count count = 0;
    brute::LineEnumerator it(config.m, config.n);
    while (it.next()) {
        ++count;
    }
    std::cout << count << '\n';
    return kSuccess;
}

int cmd_brute_witness(const BruteConfig& config)
{
    const auto result = brute::hj_lower_witness(config.m, config.n, config.r, config.budget);
    switch (result.status) {
    case brute::SearchStatus::Witness:
        std::cout << "witness: line-free " << config.r << "-colouring of [" << config.m << "]^" << config.n
                  << " found after " << result.nodes << " nodes\n";
        if (!config.out.empty()) {
            result.table->write(std::filesystem::path(config.out));
            std::cout << "table: " << config.out << '\n';
        }
        return kSuccess;
    case brute::SearchStatus::ProvenNone:
        std::cout << "proven-none: every " << config.r << "-colouring of [" << config.m << "]^" << config.n
                  << " has a monochromatic line (" << result.nodes << " nodes)\n";
        return kSuccess;
    case brute::SearchStatus::BudgetExhausted:
        std::cout << "unknown: node budget of " << config.budget << " exhausted\n";
        return kBudgetExceeded;
    }
    return kInternal;
}

int cmd_brute_hj(const BruteConfig& config)
{
    const auto result = brute::hj_number_exact(config.m, config.r, config.n_max, config.budget);
    if (result.value) {
        std::cout << *result.value << '\n';
        return kSuccess;
    }
    if (result.exhausted_at) {
        std::cout << "unknown (node budget exhausted at n = " << *result.exhausted_at << ")\n";
        return kBudgetExceeded;
    }
    std::cout << "unknown (greater than " << config.n_max << ")\n";
    return kSuccess;
}

} // namespace

int run(int argc, char** argv)
{
    CLI::App app{"Find and verify monochromatic combinatorial lines in r-coloured cubes [3]^n"};
    app.name("hjline");
    app.require_subcommand(1);

    RunConfig config;
    BruteConfig brute_config;

    auto add_structure = [&](CLI::App* sub) {
        sub->add_option("--r", config.r, "number of colours (t = r blocks)")->required()->check(CLI::PositiveNumber);
        sub->add_option("--mode", config.mode, "paper | minimal | custom")
            ->check(CLI::IsMember({"paper", "minimal", "custom"}));
        sub->add_option("--sizes", config.sizes, "comma-separated block sizes for custom mode");
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", config.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    };

    auto* params = app.add_subcommand("params", "print block sizes and colour-space sizes");
    add_structure(params);
    add_format(params);
    params->add_option("--out", config.out, "write the parameters as JSON");

    auto* find = app.add_subcommand("find-line", "run the solver and write a certificate");
    add_structure(find);
    add_format(find);
    find->add_option("--oracle", config.oracle, "const:c | count | hash:seed | table:path | exec:cmd")->required();
    find->add_option("--seed", config.seed, "seed for the solver's internal sampling");
    find->add_option("--budget", config.budget, "cap on distinct oracle evaluations");
    find->add_option("--out", config.out, "certificate JSON path");

    auto* verify = app.add_subcommand("verify", "re-check a certificate against its oracle");
    verify->add_option("cert,--cert", config.cert, "certificate JSON path")->required();
    verify->add_option("--oracle", config.oracle, "override the certificate's oracle spec");
    add_format(verify);

    auto* brute_cmd = app.add_subcommand("brute", "exhaustive small-cube tools");
    brute_cmd->require_subcommand(1);
    auto* lines = brute_cmd->add_subcommand("lines", "count combinatorial lines in [m]^n");
    lines->add_option("--m", brute_config.m)->required()->check(CLI::Range(2u, 255u));
    lines->add_option("--n", brute_config.n)->required()->check(CLI::Range(1u, 64u));
    auto* witness = brute_cmd->add_subcommand("witness", "search for a line-free colouring");
    witness->add_option("--m", brute_config.m)->required()->check(CLI::Range(2u, 255u));
    witness->add_option("--n", brute_config.n)->required()->check(CLI::Range(1u, 64u));
    witness->add_option("--r", brute_config.r)->required()->check(CLI::PositiveNumber);
    witness->add_option("--budget", brute_config.budget, "search node budget");
    witness->add_option("--out", brute_config.out, "write the witness colour table");
    auto* hj = brute_cmd->add_subcommand("hj", "smallest n forcing a monochromatic line");
    hj->add_option("--m", brute_config.m)->required()->check(CLI::Range(2u, 255u));
    hj->add_option("--r", brute_config.r)->required()->check(CLI::PositiveNumber);
    hj->add_option("--n-max", brute_config.n_max)->required()->check(CLI::Range(1u, 64u));
    hj->add_option("--budget", brute_config.budget, "search node budget per n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (params->parsed()) {
            return cmd_params(config);
        }
        if (find->parsed()) {
            return cmd_find_line(config);
        }
        if (verify->parsed()) {
            return cmd_verify(config);
        }
        if (lines->parsed()) {
            return cmd_brute_lines(brute_config);
        }
        if (witness->parsed()) {
            return cmd_brute_witness(brute_config);
        }
        if (hj->parsed()) {
            return cmd_brute_hj(brute_config);
        }
    } catch (const NoCollision& e) {
        std::cerr << "hjline: no collision: " << e.what() << '\n';
        return kNoCollision;
    } catch (const BudgetExceeded& e) {
        std::cerr << "hjline: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const OracleRangeError& e) {
        std::cerr << "hjline: oracle error: " << e.what() << '\n';
        return kOracleRange;
    } catch (const FormatError& e) {
        std::cerr << "hjline: " << e.what() << '\n';
        return verify->parsed() ? kVerificationFailed : kUsage;
    } catch (const UsageError& e) {
        std::cerr << "hjline: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "hjline: internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}

} // namespace hjline::cli
