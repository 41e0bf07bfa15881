#include "ellmod/field.hpp"

#include <algorithm>

namespace ellmod {

namespace {

using u128 = unsigned __int128;

long long mulmod(long long a, long long b, long long p) {
    return static_cast<long long>(static_cast<u128>(a) * static_cast<u128>(b) % static_cast<u128>(p));
}

long long powmod(long long base, long long exp, long long p) {
    long long r = 1 % p;
    long long b = base % p;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        exp >>= 1;
    }
    return r;
}

long long invmod(long long a, long long p) {
    long long t = 0, new_t = 1;
    long long r = p, new_r = a % p;
    while (new_r != 0) {
        long long q = r / new_r;
        long long next_t = t - q * new_t;
        long long next_r = r - q * new_r;
        t = new_t;
        new_t = next_t;
        r = new_r;
        new_r = next_r;
    }
    if (t < 0) t += p;
    return t;
}

long long reduce(long long v, long long p) {
    long long r = v % p;
    return r < 0 ? r + p : r;
}

}  // namespace

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % q == 0) return n == q;
    }
    long long d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (long long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        long long x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::rationals() { return Field(); }

Field Field::prime(long long p) {
    if (!is_prime(p)) throw NotPrime("not a prime: " + std::to_string(p));
    if (p == 2 || p == 3) {
        throw BadCharacteristic("characteristic " + std::to_string(p) + " is not supported");
    }
    Field f;
    f.p_ = p;
    return f;
}

FieldElement Field::zero() const { return from_integer(0); }

FieldElement Field::one() const { return from_integer(1); }

FieldElement Field::from_integer(long long v) const {
    if (is_finite()) return FieldElement(*this, reduce(v, p_));
    return FieldElement(*this, mpq_class(static_cast<long>(v)));
}

FieldElement Field::from_rational(const mpq_class& q) const {
    if (!is_finite()) {
        mpq_class c = q;
        c.canonicalize();
        return FieldElement(*this, std::move(c));
    }
    mpz_class modulus(static_cast<long>(p_));
    mpz_class num = q.get_num() % modulus;
    mpz_class den = q.get_den() % modulus;
    long long n = reduce(num.get_si(), p_);
    long long d = reduce(den.get_si(), p_);
    if (d == 0) throw DivisionByZero("denominator vanishes in F_" + std::to_string(p_));
    return FieldElement(*this, mulmod(n, invmod(d, p_), p_));
}

std::vector<FieldElement> Field::elements() const {
    if (!is_finite()) throw InfiniteField("cannot enumerate the rationals");
    std::vector<FieldElement> out;
    out.reserve(static_cast<size_t>(p_));
    for (long long v = 0; v < p_; ++v) out.push_back(FieldElement(*this, v));
    return out;
}

std::vector<FieldElement> Field::units_of_order_dividing(long long m) const {
    std::vector<FieldElement> out;
    if (!is_finite()) {
        out.push_back(from_integer(m % 2 == 0 ? -1 : 1));
        if (m % 2 == 0) out.push_back(from_integer(1));
        std::sort(out.begin(), out.end());
        return out;
    }
    for (long long t = 1; t < p_; ++t) {
        if (powmod(t, m, p_) == 1) out.push_back(FieldElement(*this, t));
    }
    return out;
}

bool FieldElement::is_zero() const {
    if (field_.is_finite()) return std::get<long long>(value_) == 0;
    return std::get<mpq_class>(value_) == 0;
}

bool FieldElement::is_one() const {
    if (field_.is_finite()) return std::get<long long>(value_) == 1;
    return std::get<mpq_class>(value_) == 1;
}

long long FieldElement::residue() const {
    if (!field_.is_finite()) throw FieldMismatch("residue() is only defined over prime fields");
    return std::get<long long>(value_);
}

const mpq_class& FieldElement::rational() const {
    if (field_.is_finite()) throw FieldMismatch("rational() is only defined over Q");
    return std::get<mpq_class>(value_);
}

std::string FieldElement::str() const {
    if (field_.is_finite()) return std::to_string(std::get<long long>(value_));
    return std::get<mpq_class>(value_).get_str();
}

FieldElement FieldElement::operator-() const {
    if (field_.is_finite()) {
        long long p = field_.characteristic();
        long long v = std::get<long long>(value_);
        return FieldElement(field_, v == 0 ? 0 : p - v);
    }
    return FieldElement(field_, mpq_class(-std::get<mpq_class>(value_)));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (field_.is_finite()) {
        return FieldElement(field_, invmod(std::get<long long>(value_), field_.characteristic()));
    }
    return FieldElement(field_, mpq_class(1 / std::get<mpq_class>(value_)));
}

FieldElement FieldElement::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    if (field_.is_finite()) {
        return FieldElement(field_, powmod(std::get<long long>(value_), e, field_.characteristic()));
    }
    const mpq_class& q = std::get<mpq_class>(value_);
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
    r.canonicalize();
    return FieldElement(field_, std::move(r));
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field() != b.field()) throw FieldMismatch("operands belong to different fields");
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    if (a.field_.is_finite()) {
        long long p = a.field_.characteristic();
        return FieldElement(a.field_, reduce(std::get<long long>(a.value_) + std::get<long long>(b.value_), p));
    }
    return FieldElement(a.field_, mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    if (a.field_.is_finite()) {
        long long p = a.field_.characteristic();
        return FieldElement(a.field_, mulmod(std::get<long long>(a.value_), std::get<long long>(b.value_), p));
    }
    return FieldElement(a.field_, mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.field_ != b.field_) return false;
    return a.value_ == b.value_;
}

bool operator<(const FieldElement& a, const FieldElement& b) {
    if (a.field_ != b.field_) return a.field_.characteristic() < b.field_.characteristic();
    if (a.field_.is_finite()) return std::get<long long>(a.value_) < std::get<long long>(b.value_);
    return cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_)) < 0;
}

std::optional<mpq_class> rational_nth_root(const mpq_class& q, long long n) {
    if (n < 1) throw IndexOutOfRange("root index must be positive");
    if (q == 0) return mpq_class(0);
    if (q < 0 && n % 2 == 0) return std::nullopt;

    mpz_class num = abs(mpz_class(q.get_num()));
    mpz_class den = q.get_den();
    mpz_class rn, rd;
    bool exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(n)) != 0;
    bool exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n)) != 0;
    if (!exact_n || !exact_d) return std::nullopt;
    mpq_class r(rn, rd);
    r.canonicalize();
    if (q < 0) r = -r;
    return r;
}

}  // namespace ellmod
