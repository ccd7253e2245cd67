#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "afflin/common.hpp"

namespace afflin {

bool is_prime_u64(std::uint64_t n);
bool is_prime(const BigInt& n);

struct IntFactorization {
    BigInt value;
    std::vector<std::pair<BigInt, unsigned>> primes; // ascending
};

/// Pollard-rho iteration bound per factor_int call (process-wide).
void set_factor_budget(std::uint64_t iterations);
std::uint64_t factor_budget();

/// Complete factorization, deterministic, memoized process-wide.
IntFactorization factor_int(const BigInt& n);

/// Factor q^k - 1 for k = 1..max_k into the cache (outside any timed path).
void warm_factor_cache(const BigInt& q, unsigned max_k);
void clear_factor_cache();

/// Number of divisors.
std::uint64_t tau(const BigInt& n);

int moebius(std::uint64_t k);

BigInt pow_int(const BigInt& base, std::uint64_t exp);

std::vector<std::uint64_t> divisors_u64(std::uint64_t n);

enum class PartitionKind { All, Distinct, FactorizationPattern };

struct PartitionTable {
    PartitionKind kind;
    std::vector<BigInt> values; // values[k] for 0 <= k <= n_max
};

PartitionTable partition_table(PartitionKind kind, unsigned n_max);

BigInt partition_count(unsigned n);             // P(n)
BigInt distinct_partition_count(unsigned n);    // Q(n)
BigInt factorization_pattern_count(unsigned n); // b(n)

enum class PartitionMode { All, Distinct };

/// All partitions of n, parts descending within each partition, the list
/// in decreasing lexicographic order ([n] first, all-ones last).
std::vector<Partition> enumerate_partitions(unsigned n, PartitionMode mode);

/// Smallest prime r | q^m - 1 whose multiplicative order mod q is exactly m,
/// or nothing when no such prime exists.
std::optional<BigInt> zsigmondy_ppd(const BigInt& q, unsigned m);

} // namespace afflin
