// multipoly.cpp - monomial orders and helpers for (K[x1])[x~].
#include "elim/multipoly.hpp"

#include <set>

namespace elim {

ctx_ptr make_ctx(const field& k, std::string x1, std::vector<std::string> xt, mono_order order) {
    if (xt.size() > max_vars) throw domain_error("at most " + std::to_string(max_vars) + " non-eliminated variables are supported");
    std::set<std::string> seen{x1};
    for (const auto& v : xt) {
        if (!seen.insert(v).second) throw domain_error("duplicate variable name " + v);
    }
    auto c = std::make_shared<var_ctx>();
    c->k = k;
    c->x1 = std::move(x1);
    c->xt = std::move(xt);
    c->order = order;
    return c;
}

monomial monomial::var(std::size_t i, unsigned power) {
    monomial m;
    m.e[i] = static_cast<std::uint16_t>(power);
    return m;
}

bool monomial::is_one() const {
    for (auto x : e) {
        if (x) return false;
    }
    return true;
}

unsigned monomial::total() const {
    unsigned s = 0;
    for (auto x : e) s += x;
    return s;
}

bool monomial::divides(const monomial& o) const {
    for (std::size_t i = 0; i < max_vars; ++i) {
        if (e[i] > o.e[i]) return false;
    }
    return true;
}

monomial monomial::operator*(const monomial& o) const {
    monomial r;
    for (std::size_t i = 0; i < max_vars; ++i) {
        unsigned s = unsigned(e[i]) + o.e[i];
        if (s > 0xFFFFu) throw domain_error("exponent overflow");
        r.e[i] = static_cast<std::uint16_t>(s);
    }
    return r;
}

monomial monomial::operator/(const monomial& o) const {
    monomial r;
    for (std::size_t i = 0; i < max_vars; ++i) {
        if (o.e[i] > e[i]) throw domain_error("monomial division is not exact");
        r.e[i] = static_cast<std::uint16_t>(e[i] - o.e[i]);
    }
    return r;
}

monomial lcm(const monomial& a, const monomial& b) {
    monomial r;
    for (std::size_t i = 0; i < max_vars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

bool coprime(const monomial& a, const monomial& b) {
    for (std::size_t i = 0; i < max_vars; ++i) {
        if (a.e[i] && b.e[i]) return false;
    }
    return true;
}

int mono_cmp(const var_ctx& ctx, const monomial& a, const monomial& b) {
    const std::size_t n = ctx.nvars();
    if (ctx.order == mono_order::lex) {
        for (std::size_t i = n; i-- > 0;) {
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        }
        return 0;
    }
    unsigned ta = a.total(), tb = b.total();
    if (ta != tb) return ta > tb ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
}

std::string mono_str(const var_ctx& ctx, const monomial& m) {
    std::string out;
    for (std::size_t i = ctx.nvars(); i-- > 0;) {
        if (!m.e[i]) continue;
        if (!out.empty()) out += "*";
        out += ctx.xt[i];
        if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const multi_poly& f) {
    if (f.is_zero()) return "0";
    const std::string& v = f.ctx()->x1;
    return poly_str<uni_poly>(f, [&](const uni_poly& c) { return c.str(v); });
}

int term_cmp(const multi_poly& f, const multi_poly& g) {
    int c = mono_cmp(*f.ctx(), f.lm(), g.lm());
    if (c) return c;
    int df = f.lc().degree(), dg = g.lc().degree();
    return df < dg ? -1 : (df > dg ? 1 : 0);
}

multi_poly normalize_scalar(const multi_poly& f) {
    if (f.is_zero()) return f;
    const field& k = f.ctx()->k;
    if (!k.is_rationals()) return f.mul_coeff(uni_poly::constant(f.lc().lead().inverse()));
    mpz_class den = 1, num = 0;
    for (const auto& [m, c] : f.terms()) {
        for (const auto& s : c.coeffs()) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s.rational().get_den_mpz_t());
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), s.rational().get_num_mpz_t());
        }
    }
    mpq_class scale(den, num);
    scale.canonicalize();
    if (f.lc().lead().sign() < 0) scale = -scale;
    if (scale == 1) return f;
    return f.mul_coeff(uni_poly::constant(scalar(k, scale)));
}

unsigned total_degree(const multi_poly& f) {
    unsigned d = 0;
    for (const auto& [m, c] : f.terms()) d = std::max(d, m.total() + static_cast<unsigned>(c.degree()));
    return d;
}

} // namespace elim
