// support.hpp - shared fixtures and random generators for the test binaries.
#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "elim/multipoly.hpp"
#include "elim/parse.hpp"

namespace elim::test {

inline ctx_ptr ctx_of(const field& k, const std::string& x1, std::vector<std::string> xt, mono_order o = mono_order::lex) {
    return make_ctx(k, x1, std::move(xt), o);
}

// Context z < y < x over Q, used by most worked examples.
inline ctx_ptr zyx(const field& k = field::rationals()) { return ctx_of(k, "z", {"y", "x"}); }

inline multi_poly P(const ctx_ptr& c, const std::string& s) { return parse_poly(c, s); }
inline uni_poly U(const ctx_ptr& c, const std::string& s) { return parse_uni(c, s); }
inline uni_poly U(const field& k, const std::string& s) { return parse_uni(make_ctx(k, "z", {}), s); }

inline bool same_up_to_unit(const uni_poly& a, const uni_poly& b) { return a.monic() == b.monic(); }
inline bool proportional(const multi_poly& a, const multi_poly& b) { return normalize_scalar(a) == normalize_scalar(b); }

inline scalar random_scalar(std::mt19937_64& rng, const field& k, int range) {
    std::uniform_int_distribution<long> d(-range, range);
    return scalar(k, d(rng));
}

inline uni_poly random_uni(std::mt19937_64& rng, const field& k, int max_deg, int range, bool nonzero = true) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    for (;;) {
        int deg = dd(rng);
        std::vector<scalar> c;
        for (int i = 0; i <= deg; ++i) c.push_back(random_scalar(rng, k, range));
        uni_poly f(k, c);
        if (!nonzero || !f.is_zero()) return f;
    }
}

inline uni_poly random_monic(std::mt19937_64& rng, const field& k, int deg, int range) {
    std::vector<scalar> c;
    for (int i = 0; i < deg; ++i) c.push_back(random_scalar(rng, k, range));
    c.emplace_back(k, 1);
    return uni_poly(k, c);
}

// Random element of (K[x1])[x~] with at most `terms` terms and x~-degree at most `deg`.
inline multi_poly random_multi(std::mt19937_64& rng, const ctx_ptr& c, int terms, int deg, int coef_deg, int range) {
    std::uniform_int_distribution<int> de(0, deg);
    std::vector<multi_poly::term> t;
    for (int i = 0; i < terms; ++i) {
        monomial m;
        unsigned left = static_cast<unsigned>(de(rng));
        for (std::size_t v = 0; v < c->nvars() && left; ++v) {
            std::uniform_int_distribution<unsigned> part(0, left);
            unsigned e = part(rng);
            m.e[v] = static_cast<std::uint16_t>(e);
            left -= e;
        }
        t.emplace_back(m, random_uni(rng, c->k, coef_deg, range, false));
    }
    return multi_poly::from_terms(c, std::move(t));
}

// A term c * x1^i * x~^m given the full exponent vector (entry 0 is the x1 exponent).
inline multi_poly full_term(const ctx_ptr& c, const std::vector<unsigned>& e, const scalar& s) {
    monomial m;
    for (std::size_t v = 1; v < e.size(); ++v) m.e[v - 1] = static_cast<std::uint16_t>(e[v]);
    return multi_poly::from_terms(c, {{m, uni_poly::monomial(s, static_cast<int>(e[0]))}});
}

// Random exponent vector over n variables with total degree exactly d.
inline std::vector<unsigned> random_exponents(std::mt19937_64& rng, std::size_t n, unsigned d) {
    std::vector<unsigned> e(n, 0);
    for (unsigned i = 0; i < d; ++i) ++e[rng() % n];
    return e;
}

struct random_ideal {
    ctx_ptr ctx;
    std::vector<multi_poly> gens;
};

// Zero-dimensional ideal in 2 or 3 variables: one generator v^d + (terms of total degree < d) per
// variable v, plus at times one extra generator of total degree <= 3. At most 4 generators.
inline random_ideal random_zero_dim_ideal(std::mt19937_64& rng, const field& k, std::size_t nvars, int range = 3, bool allow_extra = true) {
    std::vector<std::string> names{"y", "x"};
    names.resize(nvars - 1);
    random_ideal out{make_ctx(k, "z", names), {}};
    for (std::size_t v = 0; v < nvars; ++v) {
        unsigned d = rng() % 5 == 0 ? 1 : 2 + static_cast<unsigned>(rng() % 2);
        std::vector<unsigned> e(nvars, 0);
        e[v] = d;
        multi_poly g = full_term(out.ctx, e, scalar(k, 1));
        unsigned extra = 1 + static_cast<unsigned>(rng() % 3);
        for (unsigned t = 0; t < extra; ++t) {
            unsigned deg = static_cast<unsigned>(rng() % d);
            g += full_term(out.ctx, random_exponents(rng, nvars, deg), random_scalar(rng, k, range));
        }
        out.gens.push_back(g);
    }
    if (allow_extra && rng() % 2) {
        multi_poly g(out.ctx);
        unsigned terms = 1 + static_cast<unsigned>(rng() % 3);
        for (unsigned t = 0; t < terms; ++t) {
            unsigned deg = static_cast<unsigned>(rng() % 4);
            g += full_term(out.ctx, random_exponents(rng, nvars, deg), random_scalar(rng, k, range));
        }
        if (!g.is_zero()) out.gens.push_back(g);
    }
    std::shuffle(out.gens.begin(), out.gens.end(), rng);
    return out;
}

} // namespace elim::test
