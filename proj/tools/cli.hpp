#pragma once

namespace hjline::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInternal = 1,
    kUsage = 2,
    kNoCollision = 3,
    kBudgetExceeded = 4,
    kOracleRange = 5,
    kVerificationFailed = 6,
};

int run(int argc, char** argv);

} // namespace hjline::cli
