// multipoly.hpp - sparse polynomials in the x~ variables with coefficients in a univariate ring.
//
// The coefficient type C is uni_poly for (K[x1])[x~] and pqr_elem for (K[x1]/q)[x~]. Terms are
// kept sorted in strictly decreasing monomial order and never hold zero coefficients.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "elim/errors.hpp"
#include "elim/field.hpp"
#include "elim/unipoly.hpp"

namespace elim {

constexpr std::size_t max_vars = 16;

enum class mono_order { lex, grevlex };

// Variable layout: x1 is the eliminated variable, xt[0] < xt[1] < ... are the remaining ones.
struct var_ctx {
    field k;
    std::string x1 = "z";
    std::vector<std::string> xt;
    mono_order order = mono_order::lex;

    std::size_t nvars() const { return xt.size(); }
};
using ctx_ptr = std::shared_ptr<const var_ctx>;

ctx_ptr make_ctx(const field& k, std::string x1, std::vector<std::string> xt, mono_order order = mono_order::lex);

struct monomial {
    std::array<std::uint16_t, max_vars> e{};

    static monomial var(std::size_t i, unsigned power = 1);
    bool is_one() const;
    unsigned total() const;
    bool divides(const monomial& o) const; // this | o
    monomial operator*(const monomial& o) const;
    monomial operator/(const monomial& o) const; // requires o | this
    bool operator==(const monomial& o) const { return e == o.e; }
    bool operator!=(const monomial& o) const { return e != o.e; }
    bool operator<(const monomial& o) const { return e < o.e; } // storage order only, not a monomial order
};

monomial lcm(const monomial& a, const monomial& b);
bool coprime(const monomial& a, const monomial& b);
int mono_cmp(const var_ctx& ctx, const monomial& a, const monomial& b);
std::string mono_str(const var_ctx& ctx, const monomial& m);

template <class C>
class sparse_poly {
public:
    using term = std::pair<monomial, C>;

    sparse_poly() = default;
    explicit sparse_poly(ctx_ptr ctx) : ctx_(std::move(ctx)) {}

    // Sorts and merges arbitrary terms; zero coefficients are dropped.
    static sparse_poly from_terms(ctx_ptr ctx, std::vector<term> terms) {
        const var_ctx& c = *ctx;
        std::sort(terms.begin(), terms.end(), [&](const term& a, const term& b) { return mono_cmp(c, a.first, b.first) > 0; });
        sparse_poly r(std::move(ctx));
        for (auto& t : terms) {
            if (!r.t_.empty() && r.t_.back().first == t.first) r.t_.back().second += t.second;
            else r.t_.push_back(std::move(t));
            if (r.t_.back().second.is_zero()) r.t_.pop_back();
        }
        return r;
    }
    static sparse_poly constant(ctx_ptr ctx, const C& c) {
        sparse_poly r(std::move(ctx));
        if (!c.is_zero()) r.t_.emplace_back(monomial{}, c);
        return r;
    }

    const ctx_ptr& ctx() const { return ctx_; }
    const std::vector<term>& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }
    // True for elements of the coefficient ring (no x~ occurs), including zero.
    bool is_univariate() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
    const monomial& lm() const { return t_.front().first; }
    const C& lc() const { return t_.front().second; }

    sparse_poly tail() const {
        sparse_poly r(ctx_);
        if (!t_.empty()) r.t_.assign(t_.begin() + 1, t_.end());
        return r;
    }

    const C* coeff_at(const monomial& m) const {
        for (const auto& t : t_) {
            if (t.first == m) return &t.second;
        }
        return nullptr;
    }

    sparse_poly operator-() const {
        sparse_poly r = *this;
        for (auto& t : r.t_) t.second = -t.second;
        return r;
    }

    sparse_poly operator+(const sparse_poly& o) const { return combine(o, false); }
    sparse_poly operator-(const sparse_poly& o) const { return combine(o, true); }
    sparse_poly& operator+=(const sparse_poly& o) { return *this = combine(o, false); }
    sparse_poly& operator-=(const sparse_poly& o) { return *this = combine(o, true); }

    sparse_poly operator*(const sparse_poly& o) const {
        check(o);
        sparse_poly r(ctx_);
        for (const auto& t : t_) r += o.mul_term(t.first, t.second);
        return r;
    }

    sparse_poly mul_term(const monomial& m, const C& c) const {
        sparse_poly r(ctx_);
        if (c.is_zero()) return r;
        r.t_.reserve(t_.size());
        for (const auto& t : t_) {
            C prod = t.second * c;
            if (!prod.is_zero()) r.t_.emplace_back(t.first * m, std::move(prod));
        }
        return r;
    }
    sparse_poly mul_coeff(const C& c) const { return mul_term(monomial{}, c); }

    // this <- this - c * m * g
    void sub_mul(const C& c, const monomial& m, const sparse_poly& g) { *this = combine(g.mul_term(m, c), true); }

    bool operator==(const sparse_poly& o) const {
        check(o);
        if (t_.size() != o.t_.size()) return false;
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (t_[i].first != o.t_[i].first || !(t_[i].second == o.t_[i].second)) return false;
        }
        return true;
    }
    bool operator!=(const sparse_poly& o) const { return !(*this == o); }

    void check(const sparse_poly& o) const {
        if (ctx_ != o.ctx_ && (!ctx_ || !o.ctx_ || !same_layout(*ctx_, *o.ctx_)))
            throw context_mismatch("polynomials over different variable contexts");
    }

private:
    static bool same_layout(const var_ctx& a, const var_ctx& b) {
        return a.k == b.k && a.x1 == b.x1 && a.xt == b.xt && a.order == b.order;
    }

    sparse_poly combine(const sparse_poly& o, bool subtract) const {
        check(o);
        sparse_poly r(ctx_ ? ctx_ : o.ctx_);
        r.t_.reserve(t_.size() + o.t_.size());
        const var_ctx& c = *r.ctx_;
        std::size_t i = 0, j = 0;
        while (i < t_.size() || j < o.t_.size()) {
            int cmp;
            if (i == t_.size()) cmp = -1;
            else if (j == o.t_.size()) cmp = 1;
            else cmp = mono_cmp(c, t_[i].first, o.t_[j].first);
            if (cmp > 0) {
                r.t_.push_back(t_[i++]);
            } else if (cmp < 0) {
                r.t_.emplace_back(o.t_[j].first, subtract ? -o.t_[j].second : o.t_[j].second);
                ++j;
            } else {
                C s = subtract ? t_[i].second - o.t_[j].second : t_[i].second + o.t_[j].second;
                if (!s.is_zero()) r.t_.emplace_back(t_[i].first, std::move(s));
                ++i;
                ++j;
            }
        }
        return r;
    }

    ctx_ptr ctx_;
    std::vector<term> t_;
};

using multi_poly = sparse_poly<uni_poly>;

// Prints terms in decreasing order; coef_str renders a coefficient in the x1 variable.
template <class C>
std::string poly_str(const sparse_poly<C>& f, const std::function<std::string(const C&)>& coef_str) {
    if (f.is_zero()) return "0";
    const var_ctx& ctx = *f.ctx();
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        std::string cs = coef_str(c);
        bool neg = false;
        bool compound = false;
        // A coefficient prints as a signed sum; it needs parentheses when it has several summands.
        for (std::size_t i = 1; i < cs.size(); ++i) {
            if (cs[i] == '+' || (cs[i] == '-' && cs[i - 1] == ' ')) compound = true;
        }
        if (!compound && !cs.empty() && cs[0] == '-') {
            neg = true;
            cs = cs.substr(1);
        }
        std::string piece;
        if (m.is_one()) {
            piece = cs;
        } else if (!compound && cs == "1") {
            piece = mono_str(ctx, m);
        } else if (compound) {
            piece = "(" + cs + ")*" + mono_str(ctx, m);
        } else {
            piece = cs + "*" + mono_str(ctx, m);
        }
        if (first) {
            out += neg ? "-" + piece : piece;
        } else if (neg) {
            out += " - " + piece;
        } else if (m.is_one() && compound && piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
        first = false;
    }
    return out;
}

std::string to_string(const multi_poly& f);

// Term comparison under the elimination ordering: monomials first, then the x1-degree of the coefficient.
int term_cmp(const multi_poly& f, const multi_poly& g);

// Content normalization: over Q make all coefficients coprime integers with a positive leading
// scalar; over GF(p) make the leading scalar 1.
multi_poly normalize_scalar(const multi_poly& f);

// Total degree of f in all variables including x1.
unsigned total_degree(const multi_poly& f);

} // namespace elim
