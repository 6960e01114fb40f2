#pragma once

#include <string>
#include <sys/types.h>

#include "hjline/oracle.hpp"

namespace hjline::detail {

/// Child process oracle. The child announces `HJ-ORACLE 1 <r>` on stdout,
/// then answers each `EVAL <run-encoding>` line with a colour line.
/// Requests are serialized over a single pipe pair.
class ExecOracle final : public ColourOracle
{
public:
    ExecOracle(unsigned r, std::string command, std::string spec, int timeout_ms);
    ~ExecOracle() override;

    ExecOracle(const ExecOracle&) = delete;
    ExecOracle& operator=(const ExecOracle&) = delete;

    ColourId evaluate(const Word& w) override;
    [[nodiscard]] bool replayable() const override { return false; }

private:
    std::string read_line();
    void write_all(const std::string& data);
    void shutdown();

    std::string command_;
    int timeout_ms_;
    pid_t pid_ = -1;
    int to_child_ = -1;
    int from_child_ = -1;
    std::string buffer_;
};

} // namespace hjline::detail
