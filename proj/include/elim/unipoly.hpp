// unipoly.hpp - dense univariate polynomials over K (elements of K[x1]).
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "elim/field.hpp"

namespace elim {

class uni_poly {
public:
    uni_poly() = default; // zero over Q
    explicit uni_poly(const field& k) : k_(k) {}
    // Coefficients listed from degree 0 upwards.
    uni_poly(const field& k, std::vector<scalar> coeffs);
    uni_poly(const field& k, std::initializer_list<long> coeffs);

    static uni_poly constant(const scalar& c);
    static uni_poly constant(const field& k, long c) { return constant(scalar(k, c)); }
    static uni_poly monomial(const scalar& c, int deg);
    static uni_poly variable(const field& k) { return monomial(scalar(k, 1), 1); }

    const field& ring() const { return k_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    scalar coeff(int i) const;
    scalar lead() const; // zero for the zero polynomial
    const std::vector<scalar>& coeffs() const { return c_; }

    uni_poly operator-() const;
    uni_poly& operator+=(const uni_poly& o);
    uni_poly& operator-=(const uni_poly& o);
    uni_poly& operator*=(const uni_poly& o);
    uni_poly& operator*=(const scalar& s);
    friend uni_poly operator+(uni_poly a, const uni_poly& b) { return a += b; }
    friend uni_poly operator-(uni_poly a, const uni_poly& b) { return a -= b; }
    friend uni_poly operator*(const uni_poly& a, const uni_poly& b);
    friend uni_poly operator*(uni_poly a, const scalar& s) { return a *= s; }
    friend uni_poly operator*(const scalar& s, uni_poly a) { return a *= s; }

    bool operator==(const uni_poly& o) const;
    bool operator!=(const uni_poly& o) const { return !(*this == o); }
    // Canonical total order: degree first, then coefficients from the top down.
    int compare(const uni_poly& o) const;

    uni_poly monic() const;           // zero stays zero
    uni_poly derivative() const;
    uni_poly shift(int k) const;      // multiply by x^k
    scalar eval(const scalar& a) const;

    // Canonical printing; the output parses back with the expression parser.
    std::string str(const std::string& var = "z") const;
    // Largest bit length over numerators and denominators (residues for GF(p)).
    std::size_t max_coeff_bits() const;

private:
    void trim();
    void same_ring(const uni_poly& o) const;
    field k_;
    std::vector<scalar> c_;
};

struct uni_divrem {
    uni_poly quot;
    uni_poly rem;
};

uni_divrem divrem(const uni_poly& a, const uni_poly& b); // throws division_by_zero for b = 0
uni_poly operator%(const uni_poly& a, const uni_poly& b);
// Exact quotient; throws domain_error when b does not divide a.
uni_poly exact_div(const uni_poly& a, const uni_poly& b);
bool divides(const uni_poly& b, const uni_poly& a);

// Monic gcd; throws domain_error when both inputs are zero.
uni_poly gcd(const uni_poly& a, const uni_poly& b);
uni_poly lcm(const uni_poly& a, const uni_poly& b);
bool coprime(const uni_poly& a, const uni_poly& b);

struct uni_ext_gcd {
    uni_poly d; // monic gcd
    uni_poly u;
    uni_poly v; // u*a + v*b = d
};
uni_ext_gcd ext_gcd(const uni_poly& a, const uni_poly& b); // throws domain_error when both are zero

// Inverse of a modulo m; throws division_by_zero if gcd(a, m) != 1.
uni_poly inverse_mod(const uni_poly& a, const uni_poly& m);
uni_poly pow(const uni_poly& a, unsigned e);

// The i-th positive integer (i >= 1) not divisible by p; the identity when p = 0.
long coprime_index(long i, std::uint64_t p);

// Squarefree decomposition f = c * prod g_i^{e_i}: monic, non-constant, pairwise coprime
// squarefree parts with strictly increasing exponents. Throws domain_error for constant f.
std::vector<std::pair<uni_poly, int>> squarefree(const uni_poly& f);
// Product of the squarefree parts, monic.
uni_poly radical(const uni_poly& f);
// Largest k with p^k | f; p must be non-constant and f nonzero.
int multiplicity(const uni_poly& f, const uni_poly& p);

} // namespace elim
