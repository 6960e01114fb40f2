#include "hjline/certificate.hpp"

#include <functional>
#include <sstream>

namespace hjline {

LineCheck verify_line(const LineSpec& line, ColourOracle& oracle)
{
    LineCheck out;
    if (auto problem = validate_line(line)) {
        out.message = "malformed line: " + *problem;
        return out;
    }
    for (std::size_t x = 0; x < 3; ++x) {
        out.colours[x] = oracle.evaluate(point_of_line(line, kAllSymbols[x]));
    }
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = a + 1; b < 3; ++b) {
            if (out.colours[a] != out.colours[b]) {
                out.message = "points x=" + std::to_string(a + 1) + " and x=" + std::to_string(b + 1) +
                              " have colours " + std::to_string(out.colours[a]) + " and " +
                              std::to_string(out.colours[b]);
                return out;
            }
        }
    }
    out.monochromatic = true;
    out.colour = out.colours[0];
    return out;
}

bool VerificationReport::passed() const
{
    for (const auto& check : checks) {
        if (check.status == CheckStatus::Fail) {
            return false;
        }
    }
    return true;
}

std::vector<std::string> VerificationReport::failed_checks() const
{
    std::vector<std::string> out;
    for (const auto& check : checks) {
        if (check.status == CheckStatus::Fail) {
            out.push_back(check.name);
        }
    }
    return out;
}

std::string VerificationReport::to_text() const
{
    std::ostringstream out;
    for (const auto& check : checks) {
        const char* status = check.status == CheckStatus::Pass ? "PASS" : check.status == CheckStatus::Fail ? "FAIL" : "SKIP";
        out << "check " << check.id << " " << check.name << ": " << status;
        if (!check.detail.empty()) {
            out << " (" << check.detail << ")";
        }
        out << '\n';
    }
    return out.str();
}

namespace {

// A failed check reports its message; an exception inside a check (for example
// a pair out of range while rebuilding words) counts as a failure too.
CheckResult run_check(int id, std::string name, const std::function<std::string()>& body)
{
    try {
        auto problem = body();
        if (problem.empty()) {
            return {id, std::move(name), CheckStatus::Pass, {}};
        }
        return {id, std::move(name), CheckStatus::Fail, std::move(problem)};
    } catch (const BudgetExceeded&) {
        throw;
    } catch (const OracleRangeError&) {
        throw;
    } catch (const std::exception& e) {
        return {id, std::move(name), CheckStatus::Fail, e.what()};
    }
}

std::string check_block_sizes(const Certificate& cert)
{
    if (cert.r == 0) {
        return "r must be positive";
    }
    const auto expected = BlockStructure::make(cert.r, cert.mode, cert.block_sizes);
    if (expected.sizes() != cert.block_sizes) {
        return std::string("block sizes do not match ") + std::string(to_string(cert.mode)) + " mode for r = " +
               std::to_string(cert.r);
    }
    return {};
}

std::string check_pair_bounds(const Certificate& cert)
{
    if (cert.pairs.level() != 0 || cert.pairs.last_block() != cert.block_sizes.size()) {
        return "pair table does not cover blocks 1.." + std::to_string(cert.block_sizes.size());
    }
    for (std::size_t k = 1; k <= cert.block_sizes.size(); ++k) {
        const auto& p = cert.pairs.at(k);
        if (!(p.first < p.second && p.second <= cert.block_sizes[k - 1])) {
            return "block " + std::to_string(k) + " pair (" + std::to_string(p.first) + ", " +
                   std::to_string(p.second) + ") violates 0 <= p1 < p2 <= " + std::to_string(cert.block_sizes[k - 1]);
        }
    }
    return {};
}

} // namespace

VerificationReport verify_certificate(const Certificate& cert, ColourOracle& oracle)
{
    VerificationReport report;
    const bool replay = oracle.replayable();

    // rebuilt lazily so that checks 3-7 can run even after 1 fails
    auto structure = [&cert] { return BlockStructure::make(cert.r, Mode::Custom, cert.block_sizes); };

    report.checks.push_back(run_check(1, "block-sizes", [&] { return check_block_sizes(cert); }));
    report.checks.push_back(run_check(2, "pair-bounds", [&] { return check_pair_bounds(cert); }));

    report.checks.push_back(run_check(3, "identification", [&]() -> std::string {
        if (cert.chain.empty()) {
            return "chain is empty";
        }
        for (std::size_t i = 0; i < cert.chain.size(); ++i) {
            const auto& step = cert.chain[i];
            if (step.kind == StepKind::Identify && !words_equal(step.from, step.to)) {
                return "identify step " + std::to_string(i) + " joins different words";
            }
            if (i + 1 < cert.chain.size() && !words_equal(step.to, cert.chain[i + 1].from)) {
                return "steps " + std::to_string(i) + " and " + std::to_string(i + 1) + " are not linked";
            }
        }
        return {};
    }));

    if (replay) {
        report.checks.push_back(run_check(4, "conclusion", [&]() -> std::string {
            const auto bs = structure();
            std::size_t conclusions = 0;
            for (std::size_t i = 0; i < cert.chain.size(); ++i) {
                const auto& step = cert.chain[i];
                if (step.kind != StepKind::Conclude) {
                    continue;
                }
                ++conclusions;
                if (!step.ell || *step.ell < 1 || step.i_from != 2 || step.i_to != 1) {
                    return "conclude step " + std::to_string(i) + " must be (v_2 -> v_1) at some ell >= 1";
                }
                const auto upper = build_v(bs, Word{}, cert.pairs, *step.ell, 2, step.letters);
                const auto lower = build_v(bs, Word{}, cert.pairs, *step.ell, 1, step.letters);
                if (!words_equal(step.from, upper) || !words_equal(step.to, lower)) {
                    return "conclude step " + std::to_string(i) + " words are not v_2/v_1 at ell = " +
                           std::to_string(*step.ell) + ", letters " + letters_to_string(step.letters);
                }
                const auto a = oracle.evaluate(step.from);
                const auto b = oracle.evaluate(step.to);
                if (a != b) {
                    return "conclude step " + std::to_string(i) + " colours differ: " + std::to_string(a) + " vs " +
                           std::to_string(b);
                }
            }
            const auto [q1, q2] = cert.final_collision;
            if (q2 > q1 && conclusions != q2 - q1) {
                return "expected " + std::to_string(q2 - q1) + " conclude steps, found " + std::to_string(conclusions);
            }
            return {};
        }));

        report.checks.push_back(run_check(5, "endpoints", [&]() -> std::string {
            const auto bs = structure();
            const auto [q1, q2] = cert.final_collision;
            const std::size_t t = bs.blocks();
            if (!(q1 < q2 && q2 <= t)) {
                return "final collision is not 0 <= q1 < q2 <= t";
            }
            if (cert.chain.empty()) {
                return "chain is empty";
            }
            const auto start = v_of(bs, cert.pairs, q2);
            const auto end = final_word(bs, cert.pairs, letter_run(q1, q2 - q1, t - q2));
            const auto low = v_of(bs, cert.pairs, q1);
            if (!words_equal(cert.chain.front().from, start)) {
                return "chain does not start at v(q2)";
            }
            if (!words_equal(cert.chain.back().to, end)) {
                return "chain does not end at the mixed word";
            }
            const std::pair<const char*, const Word*> points[] = {{"v(q2)", &start}, {"chain end", &end}, {"v(q1)", &low}};
            for (const auto& [label, w] : points) {
                const auto c = oracle.evaluate(*w);
                if (c != cert.shared_colour) {
                    return std::string(label) + " has colour " + std::to_string(c) + ", certificate claims " +
                           std::to_string(cert.shared_colour);
                }
            }
            return {};
        }));
    } else {
        report.checks.push_back({4, "conclusion", CheckStatus::Skipped, "oracle is not replayable"});
        report.checks.push_back({5, "endpoints", CheckStatus::Skipped, "oracle is not replayable"});
    }

    report.checks.push_back(run_check(6, "line-colour", [&]() -> std::string {
        const auto result = verify_line(cert.line, oracle);
        if (!result.monochromatic) {
            return result.message;
        }
        if (result.colour != cert.shared_colour) {
            return "line colour " + std::to_string(result.colour) + " differs from shared colour " +
                   std::to_string(cert.shared_colour);
        }
        return {};
    }));

    report.checks.push_back(run_check(7, "line-recompute", [&]() -> std::string {
        const auto bs = structure();
        const auto rebuilt = line_from_collision(bs, cert.pairs, cert.final_collision.first, cert.final_collision.second);
        if (!(rebuilt == cert.line)) {
            return "line differs from the one rebuilt from the pair table and final collision";
        }
        return {};
    }));

    return report;
}

} // namespace hjline
