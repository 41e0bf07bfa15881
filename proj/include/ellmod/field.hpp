#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ellmod/errors.hpp"

namespace ellmod {

class FieldElement;

enum class FieldKind { PrimeField, Rationals };

// Exact coefficient field: F_p for a prime p >= 5, or Q.
//
// Prime-field elements are least nonnegative residues; rationals are reduced
// fractions with positive denominator. Equality of elements is structural.
class Field {
public:
    static Field rationals();
    // Throws NotPrime for composite p (or p < 2), BadCharacteristic for p in {2, 3}.
    static Field prime(long long p);

    FieldKind kind() const { return p_ == 0 ? FieldKind::Rationals : FieldKind::PrimeField; }
    bool is_finite() const { return p_ != 0; }
    long long characteristic() const { return p_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_integer(long long v) const;
    FieldElement from_rational(const mpq_class& q) const;  // prime fields reduce n * d^-1

    // All p elements in ascending representative order. Throws InfiniteField over Q.
    std::vector<FieldElement> elements() const;

    // The nonzero t with t^m = 1, ascending. Over F_p this has gcd(m, p-1)
    // members; over Q it is {1} for odd m and {1, -1} for even m.
    std::vector<FieldElement> units_of_order_dividing(long long m) const;

    friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

private:
    Field() = default;
    long long p_ = 0;  // 0 encodes Q
};

class FieldElement {
public:
    FieldElement() : field_(Field::rationals()), value_(mpq_class(0)) {}

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    long long residue() const;            // prime fields only
    const mpq_class& rational() const;    // Q only
    std::string str() const;              // canonical decimal or "n/d"

    FieldElement operator-() const;
    FieldElement inverse() const;         // DivisionByZero on 0
    FieldElement pow(long long e) const;  // negative e inverts first

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
    FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
    FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }
    FieldElement& operator/=(const FieldElement& b) { return *this = *this / b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
    // Total order (field, then representative); used for canonical listings.
    friend bool operator<(const FieldElement& a, const FieldElement& b);

private:
    friend class Field;
    FieldElement(const Field& f, long long residue) : field_(f), value_(residue) {}
    FieldElement(const Field& f, mpq_class q) : field_(f), value_(std::move(q)) {}

    Field field_;
    std::variant<long long, mpq_class> value_;
};

// Exact n-th root of a rational when one exists; for even n the positive
// root is returned. q = 0 yields 0.
std::optional<mpq_class> rational_nth_root(const mpq_class& q, long long n);

// Deterministic primality check (Miller-Rabin with a fixed witness set,
// exact for all 64-bit inputs).
bool is_prime(long long n);

}  // namespace ellmod
