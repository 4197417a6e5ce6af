// oracle.hpp - classical Buchberger over K (lex, all variables) and the Bezout-coefficient scenario.
#pragma once

#include <vector>

#include "elim/multipoly.hpp"

namespace elim {

// Polynomials over K in all variables; variable 0 is x1 and the order is lex.
using field_poly = sparse_poly<scalar>;

// Context whose variables are x1 followed by the non-eliminated variables of ctx, under lex.
ctx_ptr full_ctx(const var_ctx& ctx);
field_poly to_field_poly(const multi_poly& f, const ctx_ptr& full);
std::string to_string(const field_poly& f);

// Full reduction of f by G (textbook division algorithm).
field_poly oracle_reduce(const field_poly& f, const std::vector<field_poly>& G);
// Reduced Groebner basis: monic, sorted by increasing leading monomial; {1} for the unit ideal.
std::vector<field_poly> buchberger_reduced(const std::vector<field_poly>& F);
// Monic generator of the elimination ideal; throws not_zero_dimensional when GB has no univariate element.
uni_poly oracle_eliminant(const std::vector<field_poly>& GB, const field& k);
bool oracle_member(const field_poly& f, const std::vector<field_poly>& GB);

struct bezout_report {
    uni_poly u, v, rho;        // u*a + v*b = rho = gcd(a, b)
    std::size_t input_bits = 0; // largest coefficient size among a, b, c, d
    std::size_t bezout_bits = 0; // largest coefficient size among u, v
    uni_poly classical;        // (b*c - a*d) / rho
    uni_poly one_step;         // S(a x + c, b x + d)
    bool agree = false;        // the two routes agree up to a nonzero constant
};

// Compares the Bezout route with the one-step S-polynomial for the ideal (a x + c, b x + d).
// Throws domain_error when a*d = b*c or a or b is zero.
bezout_report bezout_swell_scenario(const uni_poly& a, const uni_poly& b, const uni_poly& c, const uni_poly& d);

} // namespace elim
