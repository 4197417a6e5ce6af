// field.hpp - scalars of the ground field K, either Q or GF(p).
#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace elim {

// Describes K. Characteristic 0 means Q; otherwise the prime field GF(p), p < 2^63.
class field {
public:
    field() = default;
    static field rationals() { return field(); }
    static field prime(std::uint64_t p);

    std::uint64_t characteristic() const { return p_; }
    bool is_rationals() const { return p_ == 0; }
    std::string name() const;

    bool operator==(const field& o) const { return p_ == o.p_; }
    bool operator!=(const field& o) const { return p_ != o.p_; }

private:
    friend class scalar;
    explicit field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

bool is_prime_u64(std::uint64_t n);

// An element of K. Elements of different fields never mix; doing so throws context_mismatch.
class scalar {
public:
    scalar() = default;                                   // 0 in Q
    explicit scalar(const field& k) : p_(k.characteristic()) {}
    scalar(const field& k, long v);
    scalar(const field& k, const mpq_class& v);          // throws division_by_zero if the denominator vanishes mod p

    field ring() const;
    std::uint64_t characteristic() const { return p_; }

    bool is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }
    bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }
    int sign() const; // sign of the rational value; for GF(p) 0 or 1

    const mpq_class& rational() const { return q_; }
    std::uint64_t residue() const { return r_; }

    scalar operator-() const;
    scalar& operator+=(const scalar& o);
    scalar& operator-=(const scalar& o);
    scalar& operator*=(const scalar& o);
    scalar& operator/=(const scalar& o);
    friend scalar operator+(scalar a, const scalar& b) { return a += b; }
    friend scalar operator-(scalar a, const scalar& b) { return a -= b; }
    friend scalar operator*(scalar a, const scalar& b) { return a *= b; }
    friend scalar operator/(scalar a, const scalar& b) { return a /= b; }
    scalar inverse() const;

    bool operator==(const scalar& o) const;
    bool operator!=(const scalar& o) const { return !(*this == o); }
    // Total order used only for canonical sorting (rationals by value, residues by representative).
    int compare(const scalar& o) const;

    std::string str() const;

private:
    void same_field(const scalar& o) const;
    std::uint64_t p_ = 0;
    std::uint64_t r_ = 0;
    mpq_class q_;
};

} // namespace elim
