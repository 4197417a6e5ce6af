// assembly.cpp - gcd-division, the normalization ladder, decomposition, membership and normal forms.
#include "elim/assembly.hpp"

#include <algorithm>

namespace elim {

namespace {

std::vector<std::size_t> divisors_of(const monomial& alpha, const std::vector<multi_poly_q>& B) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < B.size(); ++i) {
        if (B[i].lm().divides(alpha)) idx.push_back(i);
    }
    return idx;
}

pqr_ext_gcd lc_gcd(const std::vector<std::size_t>& idx, const std::vector<multi_poly_q>& B) {
    std::vector<pqr_elem> lcs;
    for (std::size_t i : idx) lcs.push_back(B[i].lc());
    return multi_ext_gcd(lcs);
}

// Whether the term c x^alpha is gcd-reducible with respect to B.
bool term_reducible(const monomial& alpha, const pqr_elem& c, const std::vector<multi_poly_q>& B) {
    auto idx = divisors_of(alpha, B);
    return !idx.empty() && lc_gcd(idx, B).d.divides(c);
}

void check_outside(const std::vector<multi_poly_q>& B) {
    for (const auto& b : B) {
        if (b.is_univariate()) throw domain_error("gcd_reduce: divisors must lie outside R_q");
    }
}

bool lm_less(const multi_poly_q& a, const multi_poly_q& b) {
    int c = mono_cmp(*a.ctx(), a.lm(), b.lm());
    if (c) return c < 0;
    return a.lc().standard_lift().degree() < b.lc().standard_lift().degree();
}

std::vector<multi_poly_q> nonzero_outside(const std::vector<multi_poly_q>& B) {
    std::vector<multi_poly_q> out;
    for (const auto& b : B) {
        if (b.is_zero()) continue;
        if (b.is_univariate()) throw invariant_violation("nonzero univariate element in a modular basis");
        out.push_back(b);
    }
    return out;
}

} // namespace

gcd_division gcd_reduce(const multi_poly_q& f, const std::vector<multi_poly_q>& B, const pqr_ptr& ring, bool track_quotients) {
    check_outside(B);
    gcd_division out;
    out.lambda = pqr_elem::one(ring);
    if (track_quotients) out.quotients.assign(B.size(), multi_poly_q(f.ctx()));
    multi_poly_q p = f;
    std::vector<multi_poly_q::term> rem;
    while (!p.is_zero()) {
        const monomial alpha = p.lm();
        const pqr_elem c = p.lc();
        auto idx = divisors_of(alpha, B);
        if (idx.empty()) {
            rem.emplace_back(alpha, c);
            p = p.tail();
            continue;
        }
        pqr_ext_gcd g = lc_gcd(idx, B);
        uni_divrem qr = divrem(c.lift(), g.d.lift());
        if (qr.quot.is_zero()) {
            rem.emplace_back(alpha, c);
            p = p.tail();
            continue;
        }
        pqr_elem t(ring, qr.quot);
        for (std::size_t k = 0; k < idx.size(); ++k) {
            pqr_elem coef = t * g.coeffs[k];
            if (coef.is_zero()) continue;
            const multi_poly_q& b = B[idx[k]];
            monomial shift = alpha / b.lm();
            p.sub_mul(coef, shift, b);
            if (track_quotients) out.quotients[idx[k]] += multi_poly_q::from_terms(f.ctx(), {{shift, coef}});
        }
    }
    out.rem = rem.empty() ? multi_poly_q(f.ctx()) : multi_poly_q::from_terms(f.ctx(), std::move(rem));
    if (debug_checks() && track_quotients) {
        multi_poly_q acc = f - out.rem;
        for (std::size_t j = 0; j < B.size(); ++j) acc -= out.quotients[j] * B[j];
        check_invariant(acc.is_zero(), "gcd-division identity failed");
        check_invariant(is_gcd_reduced(out.rem, B), "gcd-division remainder is not gcd-reduced");
    }
    return out;
}

bool is_gcd_reduced(const multi_poly_q& r, const std::vector<multi_poly_q>& B) {
    return std::none_of(r.terms().begin(), r.terms().end(), [&](const auto& t) { return term_reducible(t.first, t.second, B); });
}

std::vector<multi_poly_q> make_irredundant(const std::vector<multi_poly_q>& B) {
    std::vector<multi_poly_q> cur = nonzero_outside(B);
    for (std::size_t i = 0; i < cur.size();) {
        std::vector<multi_poly_q> rest;
        for (std::size_t j = 0; j < cur.size(); ++j) {
            if (j != i) rest.push_back(cur[j]);
        }
        if (term_reducible(cur[i].lm(), cur[i].lc(), rest)) cur.erase(cur.begin() + static_cast<long>(i));
        else ++i;
    }
    return cur;
}

std::vector<multi_poly_q> make_minimal(const std::vector<multi_poly_q>& B) {
    std::vector<multi_poly_q> irr = make_irredundant(B);
    std::vector<multi_poly_q> next;
    for (const auto& f : irr) {
        auto idx = divisors_of(f.lm(), irr);
        pqr_ext_gcd g = lc_gcd(idx, irr);
        multi_poly_q acc(f.ctx());
        for (std::size_t k = 0; k < idx.size(); ++k) {
            const multi_poly_q& b = irr[idx[k]];
            acc += b.mul_term(f.lm() / b.lm(), g.coeffs[k]);
        }
        check_invariant(!acc.is_zero() && acc.lm() == f.lm(), "minimal-basis combination lost its leading term");
        bool dup = std::any_of(next.begin(), next.end(), [&](const multi_poly_q& h) { return h.lm() == acc.lm() && h.lc().divides(acc.lc()) && acc.lc().divides(h.lc()); });
        if (!dup) next.push_back(std::move(acc));
    }
    return make_irredundant(next);
}

std::vector<multi_poly_q> make_reduced(const std::vector<multi_poly_q>& B) {
    std::vector<multi_poly_q> M = make_minimal(B);
    if (M.empty()) return M;
    const pqr_ptr ring = M.front().lc().ring();
    for (auto& f : M) f = f.mul_coeff(f.lc().normalizer());
    std::sort(M.begin(), M.end(), lm_less);
    for (std::size_t i = 0; i < M.size(); ++i) {
        std::vector<multi_poly_q> rest;
        for (std::size_t j = 0; j < M.size(); ++j) {
            if (j != i) rest.push_back(M[j]);
        }
        multi_poly_q head = multi_poly_q::from_terms(M[i].ctx(), {M[i].terms().front()});
        M[i] = head + gcd_reduce(M[i].tail(), rest, ring, false).rem;
    }
    return M;
}

decomposition assemble(const pseudo_outcome& ps, const compat_split& split, const std::vector<proper_outcome>& propers, ctx_ptr ctx) {
    decomposition dec;
    dec.ctx = ctx ? ctx : ps.basis.empty() ? nullptr : ps.basis.front().ctx();
    const field k = ps.chi_eps.ring();
    if (ps.inconsistent) {
        dec.inconsistent = true;
        dec.chi = uni_poly::constant(k, 1);
        return dec;
    }
    std::vector<uni_poly> divisors = composite_divisors(split);
    if (propers.size() != divisors.size()) throw domain_error("assemble: missing proper outcome for a composite divisor");
    dec.chi = split.cp.monic();
    if (!split.cp.is_constant()) {
        component c{component_kind::compatible, split.cp.monic(), split.cp.monic(), make_pqr(split.cp), {}, dec.ctx};
        std::vector<multi_poly_q> B;
        for (const auto& b : ps.basis) B.push_back(project(b, c.ring));
        c.basis = make_reduced(B);
        dec.components.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        const proper_outcome& po = propers[i];
        if (po.ring->q != divisors[i]) throw domain_error("assemble: proper outcomes are not aligned with the composite divisors");
        if (po.e_q.is_unit()) {
            dec.trivial.push_back({divisors[i]});
            continue;
        }
        uni_poly modulus = po.e_q.is_zero() ? divisors[i] : po.e_q.lift();
        component c{component_kind::proper, divisors[i], modulus, make_pqr(modulus), {}, dec.ctx};
        std::vector<multi_poly_q> B;
        for (const auto& b : po.basis) B.push_back(project(b, c.ring));
        c.basis = make_reduced(B);
        dec.chi *= modulus;
        dec.components.push_back(std::move(c));
    }
    dec.chi = dec.chi.monic();
    if (dec.components.empty()) dec.inconsistent = true;
    return dec;
}

pipeline_result run_pipeline(const std::vector<multi_poly>& F, const strategy_config& strategy) {
    pipeline_result res;
    res.pseudo = compute_pseudo_eliminant(F, strategy);
    if (!res.pseudo.inconsistent) {
        res.split = compatible_split(res.pseudo.chi_eps, all_multipliers(res.pseudo));
        res.divisors = composite_divisors(res.split);
        for (const auto& q : res.divisors) {
            pqr_ptr ring = make_pqr(q);
            std::vector<multi_poly_q> Fq;
            for (const auto& f : F) Fq.push_back(project(f, ring));
            res.propers.push_back(compute_proper_eliminant(Fq, ring, strategy));
        }
    }
    res.dec = assemble(res.pseudo, res.split, res.propers, F.empty() ? nullptr : F.front().ctx());
    return res;
}

std::vector<multi_poly> lift_component_basis(const component& c) {
    std::vector<multi_poly> out;
    for (const auto& b : c.basis) out.push_back(lift(b));
    out.push_back(multi_poly::constant(c.ctx, c.modulus));
    return out;
}

bool is_member(const multi_poly& f, const decomposition& dec) {
    if (dec.inconsistent) return true;
    return std::all_of(dec.components.begin(), dec.components.end(), [&](const component& c) {
        return gcd_reduce(project(f, c.ring), c.basis, c.ring, false).rem.is_zero();
    });
}

normal_form_result normal_form(const multi_poly& f, const decomposition& dec) {
    normal_form_result out;
    out.combined = multi_poly(f.ctx());
    if (dec.inconsistent) return out;
    for (const auto& c : dec.components) {
        multi_poly_q r = gcd_reduce(project(f, c.ring), c.basis, c.ring, false).rem;
        uni_poly cofactor = exact_div(dec.chi, c.modulus);
        uni_poly idem = (cofactor * inverse_mod(cofactor % c.modulus, c.modulus)) % dec.chi;
        out.combined += lift(r).mul_coeff(idem);
        out.remainders.push_back(std::move(r));
    }
    std::vector<multi_poly::term> t;
    for (const auto& [m, c] : out.combined.terms()) t.emplace_back(m, c % dec.chi);
    out.combined = t.empty() ? multi_poly(f.ctx()) : multi_poly::from_terms(f.ctx(), std::move(t));
    return out;
}

} // namespace elim
