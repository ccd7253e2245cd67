#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace afflin {

/// Arbitrary-precision integer. Cycle lengths and counts must not be
/// clamped to machine words; everything else uses u64.
using BigInt = mpz_class;

/// Integer partition: parts in descending order, no zero parts.
using Partition = std::vector<std::uint32_t>;

inline std::uint64_t partition_sum(const Partition& parts) {
    std::uint64_t s = 0;
    for (auto part : parts) s += part;
    return s;
}

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad arguments, malformed input files, mixed fields. CLI exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

/// A configurable work bound was exceeded. CLI exit code 3.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// Internal invariant breach: always a bug, never bad input. CLI exit code 70.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace afflin
