// compat.hpp - compatible part of a pseudo-eliminant and composite divisors of the rest.
#pragma once

#include <map>
#include <vector>

#include "elim/multipoly.hpp"

namespace elim {

struct compat_split {
    uni_poly cp;                                   // compatible part, monic
    std::map<int, std::vector<uni_poly>> omega;    // exponent i -> monic squarefree divisors omega, each used as omega^i
};

// Squarefree-factors chi_eps and, for each part q_i, refines the gcds of the multipliers with q_i
// into pairwise coprime divisors. Multipliers are visited in canonical order. Throws domain_error
// for constant chi_eps.
compat_split compatible_split(const uni_poly& chi_eps, const std::vector<uni_poly>& multipliers);

// All composite divisors omega^i of a split, in increasing exponent then canonical order.
std::vector<uni_poly> composite_divisors(const compat_split& s);

struct factor_verdict {
    uni_poly factor;   // monic squarefree divisor of chi_eps
    int multiplicity;  // its exponent in chi_eps
    bool compatible;
};

// Coefficient criterion: splits each squarefree part of chi_eps by gcds with the non-constant
// leading coefficients of the basis and reports which pieces are coprime to all of them.
std::vector<factor_verdict> lc_compatibility_check(const uni_poly& chi_eps, const std::vector<multi_poly>& basis);

// Multiplier criterion for one divisor: true when it is coprime to every multiplier.
bool multiplier_criterion(const uni_poly& divisor, const std::vector<uni_poly>& multipliers);

// Adds d to a set of pairwise coprime squarefree polynomials, splitting members so the set stays
// pairwise coprime and its product picks up the new factors of d.
void coprime_refine(std::vector<uni_poly>& set, uni_poly d);

} // namespace elim
