#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "afflin/common.hpp"

namespace afflin {

class FieldElement;

/// The finite field F_q, q = p^e. Prime fields are residues mod p;
/// extension fields are F_p[y] modulo a monic irreducible of degree e.
///
/// Elements are handled as integer codes in [0, q): the base-p little-endian
/// packing of the residue vector, so code equality is coefficient-wise
/// equality and every code is canonical. Immutable and cheap to copy.
class Field {
public:
    /// Prime field (e = 1) or extension with a deterministically chosen
    /// modulus: the first monic irreducible of degree e in lexicographic
    /// coefficient order, constant term first.
    static Field make(std::uint64_t p, unsigned e = 1);
    /// Extension with an explicit modulus (little-endian over F_p, length
    /// e+1, monic, irreducible).
    static Field make(std::uint64_t p, unsigned e, std::vector<std::uint64_t> modulus);

    std::uint64_t p() const;
    unsigned e() const;
    std::uint64_t q() const;
    /// Empty for prime fields.
    const std::vector<std::uint64_t>& modulus() const;

    bool operator==(const Field& o) const;
    bool operator!=(const Field& o) const { return !(*this == o); }

    // arithmetic on element codes
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t k) const;
    std::uint64_t frobenius(std::uint64_t a) const; // a^p

    /// Little-endian residue vector of length e.
    std::vector<std::uint64_t> decode(std::uint64_t code) const;
    std::uint64_t encode(const std::vector<std::uint64_t>& coeffs) const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement element(std::uint64_t code) const;
    FieldElement from_coeffs(const std::vector<std::uint64_t>& coeffs) const;

private:
    struct Data;
    explicit Field(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

/// Throws InputError unless the two fields are structurally identical.
void require_same_field(const Field& a, const Field& b);

/// A value in a Field. Equality is coefficient-wise; all states canonical.
class FieldElement {
public:
    FieldElement(Field field, std::uint64_t code);

    const Field& field() const { return field_; }
    std::uint64_t code() const { return code_; }
    std::vector<std::uint64_t> coeffs() const { return field_.decode(code_); }
    bool is_zero() const { return code_ == 0; }

    FieldElement inv() const { return {field_, field_.inv(code_)}; }
    FieldElement pow(std::uint64_t k) const { return {field_, field_.pow(code_, k)}; }
    FieldElement frobenius() const { return {field_, field_.frobenius(code_)}; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.field_, b.field_);
        return {a.field_, a.field_.add(a.code_, b.code_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.field_, b.field_);
        return {a.field_, a.field_.sub(a.code_, b.code_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.field_, b.field_);
        return {a.field_, a.field_.mul(a.code_, b.code_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.field_, b.field_);
        return {a.field_, a.field_.mul(a.code_, b.field_.inv(b.code_))};
    }
    FieldElement operator-() const { return {field_, field_.neg(code_)}; }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.code_ == b.code_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    Field field_;
    std::uint64_t code_;
};

} // namespace afflin
