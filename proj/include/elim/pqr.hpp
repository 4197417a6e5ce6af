// pqr.hpp - the quotient ring R_q = K[x1]/(q) and polynomials over it.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "elim/multipoly.hpp"
#include "elim/pseudo.hpp"

namespace elim {

struct pqr_ring {
    uni_poly q; // monic, degree >= 1
};
using pqr_ptr = std::shared_ptr<const pqr_ring>;

// Makes q monic; throws domain_error when q is constant.
pqr_ptr make_pqr(const uni_poly& q);

class pqr_elem {
public:
    pqr_elem() = default;
    pqr_elem(pqr_ptr ring, const uni_poly& a); // reduces a modulo q
    static pqr_elem one(const pqr_ptr& ring) { return pqr_elem(ring, uni_poly::constant(ring->q.ring(), 1)); }

    const pqr_ptr& ring() const { return ring_; }
    const uni_poly& lift() const { return rep_; } // the representative of degree < deg q
    bool is_zero() const { return rep_.is_zero(); }
    bool is_one() const { return rep_.is_one(); }
    bool is_unit() const;
    pqr_elem inverse() const; // throws division_by_zero for non-units

    // gcd(lift, q) as a monic polynomial; q itself for the zero element.
    uni_poly standard_lift() const;
    // The standard factor as an element (zero for zero).
    pqr_elem standard_factor() const;
    // A unit w with w * a equal to the standard factor of a.
    pqr_elem normalizer() const;
    // True when b lies in the ideal generated by this element.
    bool divides(const pqr_elem& b) const;

    pqr_elem operator-() const { return pqr_elem(ring_, -rep_); }
    pqr_elem& operator+=(const pqr_elem& o);
    pqr_elem& operator-=(const pqr_elem& o);
    pqr_elem& operator*=(const pqr_elem& o);
    friend pqr_elem operator+(pqr_elem a, const pqr_elem& b) { return a += b; }
    friend pqr_elem operator-(pqr_elem a, const pqr_elem& b) { return a -= b; }
    friend pqr_elem operator*(pqr_elem a, const pqr_elem& b) { return a *= b; }
    bool operator==(const pqr_elem& o) const;
    bool operator!=(const pqr_elem& o) const { return !(*this == o); }

private:
    void same_ring(const pqr_elem& o) const;
    pqr_ptr ring_;
    uni_poly rep_;
};

bool same_modulus(const pqr_ptr& a, const pqr_ptr& b);

pqr_elem gcd_q(const pqr_elem& a, const pqr_elem& b); // sigma(gcd(lifts)); throws when both are zero
pqr_elem lcm_q(const pqr_elem& a, const pqr_elem& b); // sigma(lcm(lifts)), may be zero

struct pqr_ext_gcd {
    pqr_elem d;                  // the standard factor of the ideal generated by the inputs
    std::vector<pqr_elem> coeffs; // sum coeffs[i] * cs[i] == d
};
pqr_ext_gcd multi_ext_gcd(const std::vector<pqr_elem>& cs); // throws domain_error when all are zero

using multi_poly_q = sparse_poly<pqr_elem>;

multi_poly_q project(const multi_poly& f, const pqr_ptr& ring);
// Reprojects into a ring whose modulus divides the source modulus.
multi_poly_q project(const multi_poly_q& f, const pqr_ptr& ring);
multi_poly lift(const multi_poly_q& f);
std::string to_string(const multi_poly_q& f);
// Multiplies by a scalar so that the lifted leading coefficient has leading scalar 1.
multi_poly_q normalize_scalar(const multi_poly_q& f);

// S-polynomial of two elements outside R_q.
multi_poly_q spoly_pqr(const multi_poly_q& f, const multi_poly_q& g);
// Degenerate S-polynomial with a nonzero non-unit element e of R_q: m_f * (f - lt f).
multi_poly_q spoly_pqr(const multi_poly_q& f, const pqr_elem& e);
// S-polynomial with the modulus: n_f * (f - lt f), n_f = sigma(q / gcd(lc f, q)).
multi_poly_q spoly_modulus(const multi_poly_q& f, const pqr_ptr& ring);

struct proper_division {
    pqr_elem lambda; // a unit
    std::vector<multi_poly_q> quotients;
    multi_poly_q rem;
};

// Reduces only properly reducible terms: lm b | alpha and c_alpha in (lc b).
proper_division proper_divide(const multi_poly_q& f, const std::vector<multi_poly_q>& B, const pqr_ptr& ring, bool track_quotients = true);

struct proper_stats {
    std::size_t pairs = 0;
    std::size_t reduced = 0;
    std::size_t pruned = 0;
    std::size_t base_changes = 0;
};

struct proper_outcome {
    pqr_ptr ring;         // the ring the computation started in
    pqr_elem e_q;         // zero, one, or a nonzero non-unit standard factor, as an element of `ring`
    pqr_ptr basis_ring;   // ring of the basis (differs from `ring` after base changes)
    std::vector<multi_poly_q> basis;
    proper_stats stats;

    bool inconsistent() const { return e_q.is_unit(); }
};

// F should be sigma_q of the non-univariate generators.
proper_outcome compute_proper_eliminant(const std::vector<multi_poly_q>& F, const pqr_ptr& ring, const strategy_config& strategy = {});

// Reduces every S-polynomial among the basis and against e (or the modulus) and returns the
// number of remainders that are not zero modulo the final eliminant. Zero means the outcome is closed.
std::size_t count_open_pairs(const proper_outcome& out);

} // namespace elim
