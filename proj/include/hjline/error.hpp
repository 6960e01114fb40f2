#pragma once

#include <stdexcept>
#include <string>

namespace hjline {

// Base class for every error the library reports to callers.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Invalid user input: bad flags, malformed oracle specs, overflowing sizes.
class UsageError : public Error
{
public:
    using Error::Error;
};

// A pigeonhole scan exhausted every candidate without a repeated colour.
class NoCollision : public Error
{
public:
    using Error::Error;
};

// The oracle evaluation budget was surpassed.
class BudgetExceeded : public Error
{
public:
    using Error::Error;
};

// An oracle returned a colour outside {0, ..., r-1} or broke its protocol.
class OracleRangeError : public Error
{
public:
    using Error::Error;
};

// Malformed certificate or table file.
class FormatError : public Error
{
public:
    using Error::Error;
};

} // namespace hjline
