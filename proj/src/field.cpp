// field.cpp - arithmetic in Q and GF(p).
#include "elim/field.hpp"

#include <cstdlib>

#include "elim/errors.hpp"

namespace elim {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

static_assert(sizeof(unsigned long) == 8, "GF(p) reduction assumes 64-bit unsigned long");

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
    return mpz_fdiv_ui(z.get_mpz_t(), p);
}

int debug_flag = -1;

} // namespace

bool debug_checks() {
    if (debug_flag < 0) {
        const char* v = std::getenv("ELIM_DEBUG_CHECKS");
        debug_flag = (v && *v && std::string(v) != "0") ? 1 : 0;
    }
    return debug_flag == 1;
}

void set_debug_checks(bool on) { debug_flag = on ? 1 : 0; }

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are a deterministic Miller-Rabin witness set for all 64-bit n.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
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

field field::prime(std::uint64_t p) {
    if (p >= (1ULL << 63) || !is_prime_u64(p)) throw domain_error("GF(p) requires a prime p < 2^63, got " + std::to_string(p));
    return field(p);
}

std::string field::name() const { return p_ ? "GF(" + std::to_string(p_) + ")" : "Q"; }

scalar::scalar(const field& k, long v) : p_(k.characteristic()) {
    if (p_) {
        r_ = reduce_mpz(mpz_class(v), p_);
    } else {
        q_ = v;
    }
}

scalar::scalar(const field& k, const mpq_class& v) : p_(k.characteristic()) {
    if (p_) {
        std::uint64_t num = reduce_mpz(v.get_num(), p_);
        std::uint64_t den = reduce_mpz(v.get_den(), p_);
        if (den == 0) throw division_by_zero("denominator vanishes in " + k.name());
        r_ = mulmod(num, powmod(den, p_ - 2, p_), p_);
    } else {
        q_ = v;
        q_.canonicalize();
    }
}

field scalar::ring() const { return field(p_); }

int scalar::sign() const { return p_ ? (r_ != 0) : sgn(q_); }

void scalar::same_field(const scalar& o) const {
    if (p_ != o.p_) throw context_mismatch("scalars from different fields");
}

scalar scalar::operator-() const {
    scalar r = *this;
    if (p_) r.r_ = r_ ? p_ - r_ : 0;
    else r.q_ = -q_;
    return r;
}

scalar& scalar::operator+=(const scalar& o) {
    same_field(o);
    if (p_) {
        r_ = static_cast<std::uint64_t>((static_cast<u128>(r_) + o.r_) % p_);
    } else {
        q_ += o.q_;
    }
    return *this;
}

scalar& scalar::operator-=(const scalar& o) {
    same_field(o);
    if (p_) {
        r_ = r_ >= o.r_ ? r_ - o.r_ : static_cast<std::uint64_t>(static_cast<u128>(r_) + p_ - o.r_);
    } else {
        q_ -= o.q_;
    }
    return *this;
}

scalar& scalar::operator*=(const scalar& o) {
    same_field(o);
    if (p_) r_ = mulmod(r_, o.r_, p_);
    else q_ *= o.q_;
    return *this;
}

scalar scalar::inverse() const {
    if (is_zero()) throw division_by_zero("inverse of zero");
    scalar r = *this;
    if (p_) r.r_ = powmod(r_, p_ - 2, p_);
    else r.q_ = 1 / q_;
    return r;
}

scalar& scalar::operator/=(const scalar& o) {
    same_field(o);
    return *this *= o.inverse();
}

bool scalar::operator==(const scalar& o) const {
    same_field(o);
    return p_ ? r_ == o.r_ : q_ == o.q_;
}

int scalar::compare(const scalar& o) const {
    same_field(o);
    if (p_) return r_ < o.r_ ? -1 : (r_ > o.r_ ? 1 : 0);
    return cmp(q_, o.q_) < 0 ? -1 : (cmp(q_, o.q_) > 0 ? 1 : 0);
}

std::string scalar::str() const { return p_ ? std::to_string(r_) : q_.get_str(); }

} // namespace elim
