#include "afflin/fields.hpp"

#include <algorithm>
#include <array>

#include "afflin/numbers.hpp"

namespace afflin {

namespace {

// --- F_p[y] arithmetic on little-endian residue vectors (modulus search,
// --- reduction and inversion for extension fields) ---

using FpPoly = std::vector<std::uint64_t>;

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int fp_deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; p prime, a != 0 mod p
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::swap(t -= quot * new_t, new_t);
        std::swap(r -= quot * new_r, new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
    FpPoly out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<std::uint64_t>(acc[i] % p);
    fp_trim(out);
    return out;
}

// remainder of a by monic-normalized b
FpPoly fp_mod(FpPoly a, const FpPoly& b, std::uint64_t p) {
    fp_trim(a);
    int db = fp_deg(b);
    std::uint64_t lead_inv = inv_mod_p(b.back(), p);
    while (fp_deg(a) >= db) {
        std::uint64_t c = a.back() % p;
        std::uint64_t factor = (static_cast<unsigned __int128>(c) * lead_inv) % p;
        std::size_t shift = a.size() - b.size();
        if (factor != 0) {
            for (std::size_t j = 0; j < b.size(); ++j) {
                unsigned __int128 sub = static_cast<unsigned __int128>(factor) * b[j] % p;
                std::uint64_t& slot = a[shift + j];
                slot = (slot + p - static_cast<std::uint64_t>(sub)) % p;
            }
        }
        a.pop_back();
        fp_trim(a);
    }
    return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint64_t p) {
    return fp_mod(fp_mul(a, b, p), m, p);
}

FpPoly fp_powmod(FpPoly base, std::uint64_t exp, const FpPoly& m, std::uint64_t p) {
    FpPoly result{1};
    base = fp_mod(std::move(base), m, p);
    while (exp) {
        if (exp & 1) result = fp_mulmod(result, base, m, p);
        exp >>= 1;
        if (exp) base = fp_mulmod(base, base, m, p);
    }
    return result;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        a = fp_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

bool fp_is_irreducible(const FpPoly& f, std::uint64_t p) {
    int d = fp_deg(f);
    if (d < 1) return false;
    if (d == 1) return true;
    // gcd(f, y^{p^j} - y) trivial for j <= d/2, plus y^{p^d} = y (mod f)
    FpPoly h{0, 1};
    for (int j = 1; j <= d; ++j) {
        h = fp_powmod(std::move(h), p, f, p);
        if (j <= d / 2) {
            FpPoly hy = h;
            if (hy.size() < 2) hy.resize(2, 0);
            hy[1] = (hy[1] + p - 1) % p;
            fp_trim(hy);
            FpPoly g = fp_gcd(f, hy, p);
            if (fp_deg(g) != 0) return false;
        }
    }
    return h == FpPoly{0, 1};
}

FpPoly default_modulus(std::uint64_t p, unsigned e) {
    // first monic irreducible of degree e, coefficient tuples
    // (c_0,...,c_{e-1}) in increasing lexicographic order, c_0 first
    std::vector<std::uint64_t> c(e, 0);
    for (;;) {
        FpPoly f(c.begin(), c.end());
        f.push_back(1);
        if (fp_is_irreducible(f, p)) return f;
        int i = static_cast<int>(e) - 1;
        while (i >= 0 && c[i] == p - 1) c[i--] = 0;
        if (i < 0) throw InternalError("no irreducible of degree " + std::to_string(e) +
                                       " over F_" + std::to_string(p));
        ++c[i];
    }
}

} // namespace

struct Field::Data {
    std::uint64_t p;
    unsigned e;
    std::uint64_t q;
    std::vector<std::uint64_t> modulus; // empty iff e == 1
};

Field Field::make(std::uint64_t p, unsigned e) {
    if (e == 1) return make(p, 1, {});
    return make(p, e, default_modulus(p, e));
}

Field Field::make(std::uint64_t p, unsigned e, std::vector<std::uint64_t> modulus) {
    if (p < 2 || !is_prime_u64(p))
        throw InputError("NotPrime: " + std::to_string(p) + " is not a prime characteristic");
    if (e < 1) throw InputError("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (q > (std::uint64_t{1} << 62) / p)
            throw InputError("field size " + std::to_string(p) + "^" + std::to_string(e) +
                             " exceeds the configured integer width");
        q *= p;
    }
    auto data = std::make_shared<Data>();
    data->p = p;
    data->e = e;
    data->q = q;
    if (e == 1) {
        if (!modulus.empty()) throw InputError("DegreeMismatch: prime fields take no modulus");
    } else {
        for (auto& c : modulus) c %= p;
        fp_trim(modulus);
        if (fp_deg(modulus) != static_cast<int>(e))
            throw InputError("DegreeMismatch: modulus degree != extension degree");
        if (modulus.back() != 1) throw InputError("ReducibleModulus: modulus must be monic");
        if (!fp_is_irreducible(modulus, p))
            throw InputError("ReducibleModulus: modulus is not irreducible over F_p");
        data->modulus = std::move(modulus);
    }
    return Field(std::move(data));
}

std::uint64_t Field::p() const { return d_->p; }
unsigned Field::e() const { return d_->e; }
std::uint64_t Field::q() const { return d_->q; }
const std::vector<std::uint64_t>& Field::modulus() const { return d_->modulus; }

bool Field::operator==(const Field& o) const {
    if (d_ == o.d_) return true;
    return d_->p == o.d_->p && d_->e == o.d_->e && d_->modulus == o.d_->modulus;
}

std::uint64_t Field::add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t p = d_->p;
    if (d_->e == 1) {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    if (p == 2) return a ^ b;
    std::uint64_t out = 0, mult = 1;
    for (unsigned i = 0; i < d_->e; ++i) {
        std::uint64_t da = a % p, db = b % p;
        a /= p;
        b /= p;
        std::uint64_t s = da + db;
        if (s >= p) s -= p;
        out += s * mult;
        mult *= p;
    }
    return out;
}

std::uint64_t Field::neg(std::uint64_t a) const {
    const std::uint64_t p = d_->p;
    if (d_->e == 1) return a == 0 ? 0 : p - a;
    if (p == 2) return a;
    std::uint64_t out = 0, mult = 1;
    for (unsigned i = 0; i < d_->e; ++i) {
        std::uint64_t da = a % p;
        a /= p;
        out += (da == 0 ? 0 : p - da) * mult;
        mult *= p;
    }
    return out;
}

std::uint64_t Field::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t Field::mul(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t p = d_->p;
    if (d_->e == 1) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
    }
    const unsigned e = d_->e;
    std::array<std::uint64_t, 64> da{}, db{};
    std::array<unsigned __int128, 127> acc{};
    std::uint64_t ta = a, tb = b;
    for (unsigned i = 0; i < e; ++i) {
        da[i] = ta % p;
        ta /= p;
        db[i] = tb % p;
        tb /= p;
    }
    for (unsigned i = 0; i < e; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < e; ++j) acc[i + j] += static_cast<unsigned __int128>(da[i]) * db[j];
    }
    // reduce modulo the monic modulus
    const auto& m = d_->modulus;
    for (int i = 2 * static_cast<int>(e) - 2; i >= static_cast<int>(e); --i) {
        std::uint64_t c = static_cast<std::uint64_t>(acc[i] % p);
        if (c == 0) continue;
        for (unsigned j = 0; j < e; ++j)
            acc[i - e + j] += static_cast<unsigned __int128>(c) * ((p - m[j]) % p);
    }
    std::uint64_t out = 0, mult = 1;
    for (unsigned i = 0; i < e; ++i) {
        out += static_cast<std::uint64_t>(acc[i] % p) * mult;
        mult *= p;
    }
    return out;
}

std::uint64_t Field::inv(std::uint64_t a) const {
    if (a == 0) throw InputError("DivisionByZero: 0 has no inverse");
    const std::uint64_t p = d_->p;
    if (d_->e == 1) return inv_mod_p(a, p);
    FpPoly av = decode(a);
    fp_trim(av);
    // extended Euclid in F_p[y] against the modulus
    FpPoly r0 = d_->modulus, r1 = av;
    FpPoly t0{}, t1{1};
    while (!r1.empty()) {
        // divide r0 by r1
        FpPoly rem = r0, quot;
        int d1 = fp_deg(r1);
        std::uint64_t lead_inv = inv_mod_p(r1.back(), p);
        quot.assign(std::max<int>(fp_deg(rem) - d1 + 1, 0), 0);
        while (fp_deg(rem) >= d1) {
            std::uint64_t factor =
                static_cast<std::uint64_t>(static_cast<unsigned __int128>(rem.back()) * lead_inv % p);
            std::size_t shift = rem.size() - r1.size();
            quot[shift] = factor;
            for (std::size_t j = 0; j < r1.size(); ++j) {
                unsigned __int128 s = static_cast<unsigned __int128>(factor) * r1[j] % p;
                rem[shift + j] = (rem[shift + j] + p - static_cast<std::uint64_t>(s)) % p;
            }
            rem.pop_back();
            fp_trim(rem);
        }
        fp_trim(quot);
        // t0, t1 = t1, t0 - quot*t1
        FpPoly qt = fp_mul(quot, t1, p);
        FpPoly nt = t0;
        if (nt.size() < qt.size()) nt.resize(qt.size(), 0);
        for (std::size_t i = 0; i < qt.size(); ++i) nt[i] = (nt[i] + p - qt[i]) % p;
        fp_trim(nt);
        t0 = std::move(t1);
        t1 = std::move(nt);
        r0 = std::move(r1);
        r1 = std::move(rem);
    }
    // r0 = gcd (a unit since the modulus is irreducible and a != 0)
    if (fp_deg(r0) != 0) throw InternalError("inverse: gcd with irreducible modulus not a unit");
    std::uint64_t scale = inv_mod_p(r0[0], p);
    FpPoly res = t0;
    for (auto& c : res) c = static_cast<std::uint64_t>(static_cast<unsigned __int128>(c) * scale % p);
    res.resize(d_->e, 0);
    return encode(res);
}

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t k) const {
    std::uint64_t result = 1, base = a;
    while (k) {
        if (k & 1) result = mul(result, base);
        k >>= 1;
        if (k) base = mul(base, base);
    }
    return result;
}

std::uint64_t Field::frobenius(std::uint64_t a) const { return pow(a, d_->p); }

std::vector<std::uint64_t> Field::decode(std::uint64_t code) const {
    std::vector<std::uint64_t> out(d_->e);
    for (unsigned i = 0; i < d_->e; ++i) {
        out[i] = code % d_->p;
        code /= d_->p;
    }
    return out;
}

std::uint64_t Field::encode(const std::vector<std::uint64_t>& coeffs) const {
    if (coeffs.size() > d_->e)
        for (std::size_t i = d_->e; i < coeffs.size(); ++i)
            if (coeffs[i] % d_->p != 0)
                throw InputError("element coefficient vector longer than extension degree");
    std::uint64_t out = 0, mult = 1;
    for (unsigned i = 0; i < d_->e; ++i) {
        std::uint64_t c = i < coeffs.size() ? coeffs[i] % d_->p : 0;
        out += c * mult;
        mult *= d_->p;
    }
    return out;
}

FieldElement Field::zero() const { return {*this, 0}; }
FieldElement Field::one() const { return {*this, 1}; }

FieldElement Field::element(std::uint64_t code) const {
    if (code >= d_->q) throw InputError("element code out of range for F_" + std::to_string(d_->q));
    return {*this, code};
}

FieldElement Field::from_coeffs(const std::vector<std::uint64_t>& coeffs) const {
    return {*this, encode(coeffs)};
}

void require_same_field(const Field& a, const Field& b) {
    if (a != b) throw InputError("FieldMismatch: operands belong to different fields");
}

FieldElement::FieldElement(Field field, std::uint64_t code) : field_(std::move(field)), code_(code) {
    if (code_ >= field_.q()) throw InputError("element code out of range");
}

} // namespace afflin
