#include "afflin/numbers.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>

namespace afflin {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Proven deterministic for all n < 3.317e24, hence for every u64.
constexpr std::uint64_t kMillerRabinWitnesses[] = {2,  3,  5,  7,  11, 13,
                                                   17, 19, 23, 29, 31, 37};

bool miller_rabin_u64(std::uint64_t n) {
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : kMillerRabinWitnesses) {
        if (a % n == 0) continue;
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool miller_rabin_mpz(const BigInt& n) {
    BigInt d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    BigInt nm1 = n - 1;
    for (std::uint64_t a : kMillerRabinWitnesses) {
        BigInt base = a;
        BigInt x;
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == nm1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = (x * x) % n;
            if (x == nm1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::atomic<std::uint64_t> g_factor_budget{std::uint64_t{1} << 26};

std::mutex g_cache_mutex;
std::map<BigInt, IntFactorization>& factor_cache() {
    static std::map<BigInt, IntFactorization> cache;
    return cache;
}

// Brent's variant of Pollard rho; deterministic parameter sequence.
BigInt pollard_brent(const BigInt& n, std::uint64_t budget) {
    std::uint64_t spent = 0;
    for (unsigned long c = 1;; ++c) {
        BigInt y = 2, g = 1, q = 1, x, ys;
        const unsigned long m = 128;
        unsigned long r = 1;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    BigInt diff = x - y;
                    q = (q * abs(diff)) % n;
                }
                spent += lim;
                if (spent > budget)
                    throw BudgetError("FactorizationBudgetExceeded: Pollard rho gave up on " +
                                      n.get_str() + " after " + std::to_string(spent) +
                                      " iterations");
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                BigInt diff = x - ys;
                diff = abs(diff);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
                if (++spent > budget)
                    throw BudgetError("FactorizationBudgetExceeded: Pollard rho gave up on " +
                                      n.get_str());
            }
        }
        if (g != n) return g;
        // cycle degenerated for this c; retry with the next increment
    }
}

void factor_rec(const BigInt& n, std::map<BigInt, unsigned>& out, std::uint64_t budget) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    // perfect power short-circuit helps rho on squares
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned k = 2; k <= 128; ++k) {
            BigInt root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                std::map<BigInt, unsigned> sub;
                factor_rec(root, sub, budget);
                for (auto& [p, e] : sub) out[p] += e * k;
                return;
            }
        }
    }
    BigInt d = pollard_brent(n, budget);
    factor_rec(d, out, budget);
    factor_rec(n / d, out, budget);
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    return miller_rabin_u64(n);
}

bool is_prime(const BigInt& n) {
    if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime_u64(n.get_ui());
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    return miller_rabin_mpz(n);
}

void set_factor_budget(std::uint64_t iterations) { g_factor_budget.store(iterations); }
std::uint64_t factor_budget() { return g_factor_budget.load(); }

IntFactorization factor_int(const BigInt& n) {
    if (n < 1) throw InputError("factor_int requires n >= 1, got " + n.get_str());
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = factor_cache().find(n);
        if (it != factor_cache().end()) return it->second;
    }
    std::map<BigInt, unsigned> primes;
    BigInt rest = n;
    // trial division first; handles everything the tests throw at it quickly
    for (std::uint64_t p = 2; p <= 100000 && rest > 1; p = (p == 2 ? 3 : p + 2)) {
        if (BigInt(p) * p > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            primes[BigInt(p)] += 1;
            rest /= p;
        }
    }
    if (rest > 1) factor_rec(rest, primes, g_factor_budget.load());
    IntFactorization result;
    result.value = n;
    result.primes.assign(primes.begin(), primes.end());
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        factor_cache().emplace(n, result);
    }
    return result;
}

void warm_factor_cache(const BigInt& q, unsigned max_k) {
    for (unsigned k = 1; k <= max_k; ++k) factor_int(pow_int(q, k) - 1);
}

void clear_factor_cache() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    factor_cache().clear();
}

std::uint64_t tau(const BigInt& n) {
    auto fac = factor_int(n);
    std::uint64_t t = 1;
    for (auto& [p, e] : fac.primes) t *= (e + 1);
    return t;
}

int moebius(std::uint64_t k) {
    if (k == 0) throw InputError("moebius(0) is undefined");
    auto fac = factor_int(BigInt(static_cast<unsigned long>(k)));
    for (auto& [p, e] : fac.primes)
        if (e > 1) return 0;
    return fac.primes.size() % 2 == 0 ? 1 : -1;
}

BigInt pow_int(const BigInt& base, std::uint64_t exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

std::vector<std::uint64_t> divisors_u64(std::uint64_t n) {
    std::vector<std::uint64_t> divs;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d != n / d) divs.push_back(n / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

PartitionTable partition_table(PartitionKind kind, unsigned n_max) {
    PartitionTable table{kind, std::vector<BigInt>(n_max + 1, 0)};
    auto& v = table.values;
    switch (kind) {
    case PartitionKind::All:
        v[0] = 1;
        for (unsigned part = 1; part <= n_max; ++part)
            for (unsigned s = part; s <= n_max; ++s) v[s] += v[s - part];
        break;
    case PartitionKind::Distinct:
        v[0] = 1;
        for (unsigned part = 1; part <= n_max; ++part)
            for (unsigned s = n_max; s >= part; --s) v[s] += v[s - part];
        break;
    case PartitionKind::FactorizationPattern: {
        // generating function: prod_{k>=1} F(x^k) with F the partition gf,
        // i.e. pick s_k parts of size k, then partition each s_k
        auto P = partition_table(PartitionKind::All, n_max).values;
        v[0] = 1;
        for (unsigned k = 1; k <= n_max; ++k) {
            std::vector<BigInt> next(n_max + 1, 0);
            for (unsigned s = 0; s <= n_max; ++s) {
                if (v[s] == 0) continue;
                for (unsigned j = 0; s + k * j <= n_max; ++j)
                    next[s + k * j] += v[s] * P[j];
            }
            v = std::move(next);
        }
        break;
    }
    }
    return table;
}

BigInt partition_count(unsigned n) {
    return partition_table(PartitionKind::All, n).values[n];
}

BigInt distinct_partition_count(unsigned n) {
    return partition_table(PartitionKind::Distinct, n).values[n];
}

BigInt factorization_pattern_count(unsigned n) {
    return partition_table(PartitionKind::FactorizationPattern, n).values[n];
}

namespace {

void partitions_rec(unsigned n, unsigned max_part, bool distinct, Partition& cur,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (unsigned part = std::min(n, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(n - part, distinct ? part - 1 : part, distinct, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(unsigned n, PartitionMode mode) {
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(n, n, mode == PartitionMode::Distinct, cur, out);
    if (n == 0) out = {Partition{}};
    return out;
}

std::optional<BigInt> zsigmondy_ppd(const BigInt& q, unsigned m) {
    if (q < 2 || m < 1) throw InputError("zsigmondy_ppd requires q >= 2, m >= 1");
    BigInt qm1 = pow_int(q, m) - 1;
    auto fac = factor_int(qm1);
    // ord_r(q) = m  iff  r | q^m - 1 and r does not divide q^(m/l) - 1
    // for any prime l | m
    std::vector<std::uint64_t> prime_divs_m;
    {
        auto mf = factor_int(BigInt(static_cast<unsigned long>(m)));
        for (auto& [p, e] : mf.primes) prime_divs_m.push_back(p.get_ui());
    }
    for (auto& [r, e] : fac.primes) {
        bool primitive = true;
        for (std::uint64_t l : prime_divs_m) {
            BigInt sub = pow_int(q, m / l) - 1;
            if (mpz_divisible_p(sub.get_mpz_t(), r.get_mpz_t())) {
                primitive = false;
                break;
            }
        }
        if (primitive) return r;
    }
    return std::nullopt;
}

} // namespace afflin
