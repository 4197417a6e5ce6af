// oracle.cpp - Buchberger's algorithm over K and the Bezout scenario.
#include "elim/oracle.hpp"

#include <algorithm>

#include "elim/pseudo.hpp"

namespace elim {

ctx_ptr full_ctx(const var_ctx& ctx) {
    std::vector<std::string> names{ctx.x1};
    names.insert(names.end(), ctx.xt.begin(), ctx.xt.end());
    return make_ctx(ctx.k, "_", std::move(names), mono_order::lex);
}

field_poly to_field_poly(const multi_poly& f, const ctx_ptr& full) {
    std::vector<field_poly::term> t;
    for (const auto& [m, c] : f.terms()) {
        for (int i = 0; i <= c.degree(); ++i) {
            if (c.coeff(i).is_zero()) continue;
            monomial n;
            n.e[0] = static_cast<std::uint16_t>(i);
            for (std::size_t j = 0; j + 1 < n.e.size(); ++j) n.e[j + 1] = m.e[j];
            t.emplace_back(n, c.coeff(i));
        }
    }
    field_poly out(full);
    return t.empty() ? out : field_poly::from_terms(full, std::move(t));
}

std::string to_string(const field_poly& f) {
    return poly_str<scalar>(f, [](const scalar& c) { return c.str(); });
}

namespace {

field_poly monic(const field_poly& f) { return f.is_zero() || f.lc().is_one() ? f : f.mul_coeff(f.lc().inverse()); }

field_poly spoly(const field_poly& f, const field_poly& g) {
    monomial l = lcm(f.lm(), g.lm());
    return f.mul_term(l / f.lm(), g.lc()) - g.mul_term(l / g.lm(), f.lc());
}

bool is_constant(const field_poly& f) { return !f.is_zero() && f.lm().is_one(); }

} // namespace

field_poly oracle_reduce(const field_poly& f, const std::vector<field_poly>& G) {
    field_poly p = f;
    std::vector<field_poly::term> rem;
    while (!p.is_zero()) {
        bool reduced = false;
        for (const auto& g : G) {
            if (!g.is_zero() && g.lm().divides(p.lm())) {
                p.sub_mul(p.lc() / g.lc(), p.lm() / g.lm(), g);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.push_back(p.terms().front());
            p = p.tail();
        }
    }
    field_poly out(f.ctx());
    return rem.empty() ? out : field_poly::from_terms(f.ctx(), std::move(rem));
}

std::vector<field_poly> buchberger_reduced(const std::vector<field_poly>& F) {
    std::vector<field_poly> G;
    for (const auto& f : F) {
        if (!f.is_zero()) G.push_back(monic(f));
    }
    if (G.empty()) return G;
    const ctx_ptr ctx = G.front().ctx();
    auto unit = [&]() { return std::vector<field_poly>{field_poly::constant(ctx, scalar(ctx->k, 1))}; };
    if (std::any_of(G.begin(), G.end(), is_constant)) return unit();

    struct pair_t {
        monomial lcm;
        std::size_t seq, i, j;
    };
    std::vector<pair_t> pairs;
    std::size_t seq = 0;
    for (std::size_t j = 0; j < G.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) pairs.push_back({lcm(G[i].lm(), G[j].lm()), seq++, i, j});
    }
    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), [&](const pair_t& a, const pair_t& b) {
            int c = mono_cmp(*ctx, a.lcm, b.lcm);
            return c ? c < 0 : a.seq < b.seq;
        });
        pair_t p = *it;
        pairs.erase(it);
        if (coprime(G[p.i].lm(), G[p.j].lm())) continue;
        field_poly r = oracle_reduce(spoly(G[p.i], G[p.j]), G);
        if (r.is_zero()) continue;
        if (is_constant(r)) return unit();
        G.push_back(monic(r));
        std::size_t n = G.size() - 1;
        for (std::size_t i = 0; i < n; ++i) pairs.push_back({lcm(G[i].lm(), G[n].lm()), seq++, i, n});
    }

    // Minimal basis, then full inter-reduction.
    std::vector<field_poly> M;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < G.size() && !drop; ++j) {
            if (i == j || !G[j].lm().divides(G[i].lm())) continue;
            drop = G[j].lm() != G[i].lm() || j < i;
        }
        if (!drop) M.push_back(G[i]);
    }
    for (std::size_t i = 0; i < M.size(); ++i) {
        std::vector<field_poly> rest;
        for (std::size_t j = 0; j < M.size(); ++j) {
            if (j != i) rest.push_back(M[j]);
        }
        field_poly head = field_poly::from_terms(ctx, {M[i].terms().front()});
        M[i] = head + oracle_reduce(M[i].tail(), rest);
    }
    std::sort(M.begin(), M.end(), [&](const field_poly& a, const field_poly& b) { return mono_cmp(*ctx, a.lm(), b.lm()) < 0; });
    return M;
}

uni_poly oracle_eliminant(const std::vector<field_poly>& GB, const field& k) {
    for (const auto& g : GB) {
        monomial m = g.lm();
        bool only_x1 = std::all_of(m.e.begin() + 1, m.e.end(), [](std::uint16_t e) { return e == 0; });
        if (!only_x1) continue;
        std::vector<scalar> c(static_cast<std::size_t>(m.e[0]) + 1, scalar(k));
        for (const auto& [n, s] : g.terms()) c[n.e[0]] = s;
        return uni_poly(k, c).monic();
    }
    throw not_zero_dimensional("the Groebner basis contains no univariate element");
}

bool oracle_member(const field_poly& f, const std::vector<field_poly>& GB) { return oracle_reduce(f, GB).is_zero(); }

bezout_report bezout_swell_scenario(const uni_poly& a, const uni_poly& b, const uni_poly& c, const uni_poly& d) {
    if (a.is_zero() || b.is_zero()) throw domain_error("bezout scenario: a and b must be nonzero");
    if (a * d == b * c) throw domain_error("bezout scenario: degenerate input, a*d = b*c");
    bezout_report r;
    uni_ext_gcd e = ext_gcd(a, b);
    r.u = e.u;
    r.v = e.v;
    r.rho = e.d;
    for (const auto* p : {&a, &b, &c, &d}) r.input_bits = std::max(r.input_bits, p->max_coeff_bits());
    r.bezout_bits = std::max(r.u.max_coeff_bits(), r.v.max_coeff_bits());
    r.classical = exact_div(b * c - a * d, r.rho);

    const field k = a.ring();
    ctx_ptr ctx = make_ctx(k, "z", {"x"});
    monomial x = monomial::var(0);
    auto lin = [&](const uni_poly& lead, const uni_poly& con) {
        std::vector<multi_poly::term> t{{x, lead}};
        if (!con.is_zero()) t.emplace_back(monomial{}, con);
        return multi_poly::from_terms(ctx, std::move(t));
    };
    multi_poly s = spoly_pid(lin(a, c), lin(b, d));
    check_invariant(s.is_univariate(), "one-step S-polynomial is not univariate");
    r.one_step = s.is_zero() ? uni_poly(k) : s.lc();
    r.agree = !r.one_step.is_zero() && r.one_step.monic() == r.classical.monic();
    return r;
}

} // namespace elim
