// assembly.hpp - gcd-division, basis normalization and the assembled eliminant and decomposition.
#pragma once

#include <string>
#include <vector>

#include "elim/compat.hpp"
#include "elim/pqr.hpp"
#include "elim/pseudo.hpp"

namespace elim {

struct gcd_division {
    pqr_elem lambda; // always one: coefficients are split as t * d + rho instead of scaled
    std::vector<multi_poly_q> quotients;
    multi_poly_q rem;
};

// Reduces every term c x^alpha whose coefficient lies in the ideal generated by the gcd d of the
// leading coefficients of B|alpha. Non-reducible coefficients are replaced by their remainder
// modulo the standard factor of d, so remainders are canonical.
gcd_division gcd_reduce(const multi_poly_q& f, const std::vector<multi_poly_q>& B, const pqr_ptr& ring, bool track_quotients = true);

// True when no term of r is gcd-reducible with respect to B.
bool is_gcd_reduced(const multi_poly_q& r, const std::vector<multi_poly_q>& B);

// Basis normalization ladder. Inputs must satisfy the leading-term identity of a modular basis.
std::vector<multi_poly_q> make_irredundant(const std::vector<multi_poly_q>& B);
std::vector<multi_poly_q> make_minimal(const std::vector<multi_poly_q>& B);
// Leading coefficients become standard factors and tails are fully gcd-reduced; output sorted
// by increasing leading monomial.
std::vector<multi_poly_q> make_reduced(const std::vector<multi_poly_q>& B);

enum class component_kind { compatible, proper };

struct component {
    component_kind kind;
    uni_poly divisor;  // composite divisor q (the compatible part for the compatible component)
    uni_poly modulus;  // modulus of the component: cp, q when e_q = 0, or the proper divisor delta_q
    pqr_ptr ring;      // K[x1]/(modulus)
    std::vector<multi_poly_q> basis; // reduced
    ctx_ptr ctx;
};

struct trivial_component {
    uni_poly divisor; // composite divisor with unit proper eliminant
};

struct decomposition {
    ctx_ptr ctx;
    bool inconsistent = false; // the ideal is the whole ring
    uni_poly chi;              // monic eliminant; 1 when inconsistent
    std::vector<component> components;
    std::vector<trivial_component> trivial;
};

// Joins the pseudo-eliminant outcome, its compatible split and one proper outcome per composite
// divisor (in composite_divisors order). Throws domain_error when a component is missing. The
// variable context defaults to that of the pseudo-basis.
decomposition assemble(const pseudo_outcome& ps, const compat_split& split, const std::vector<proper_outcome>& propers,
                       ctx_ptr ctx = nullptr);

struct pipeline_result {
    pseudo_outcome pseudo;
    compat_split split;                 // empty when the ideal is inconsistent
    std::vector<uni_poly> divisors;     // composite divisors
    std::vector<proper_outcome> propers;
    decomposition dec;
};

// Runs pseudo-eliminant, compatible split, proper eliminants and assembly on generators in (K[x1])[x~].
pipeline_result run_pipeline(const std::vector<multi_poly>& F, const strategy_config& strategy = {});

// The modulus joined with the lifted component basis: a basis of I + (modulus).
std::vector<multi_poly> lift_component_basis(const component& c);

bool is_member(const multi_poly& f, const decomposition& dec);

struct normal_form_result {
    std::vector<multi_poly_q> remainders; // one per component
    multi_poly combined;                  // CRT recombination, coefficients reduced modulo chi
};
normal_form_result normal_form(const multi_poly& f, const decomposition& dec);

} // namespace elim
