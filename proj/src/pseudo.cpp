// pseudo.cpp - pseudo-division, pair pruning and the pseudo-eliminant session.
#include "elim/pseudo.hpp"

#include <algorithm>
#include <map>

namespace elim {

namespace {

pseudo_division divide_impl(const multi_poly& f, const std::vector<const multi_poly*>& B, bool track) {
    const field& k = f.ctx()->k;
    pseudo_division out;
    out.lambda = uni_poly::constant(k, 1);
    if (track) out.quotients.assign(B.size(), multi_poly(f.ctx()));
    multi_poly p = f;
    std::vector<multi_poly::term> rem_terms;
    uni_poly rem_scale = uni_poly::constant(k, 1); // remainder terms collected so far still need this factor
    std::vector<uni_poly> rem_scales;
    while (!p.is_zero()) {
        const monomial alpha = p.lm();
        const uni_poly c = p.lc();
        std::size_t j = B.size();
        for (std::size_t i = 0; i < B.size(); ++i) {
            if (B[i]->lm().divides(alpha)) {
                j = i;
                break;
            }
        }
        if (j == B.size()) {
            rem_terms.emplace_back(alpha, c);
            rem_scales.push_back(rem_scale);
            p = p.tail();
            continue;
        }
        const multi_poly& b = *B[j];
        const monomial shift = alpha / b.lm();
        auto qr = divrem(c, b.lc());
        if (qr.rem.is_zero()) {
            // lc b divides c: the interim multiplier is a unit of K.
            p.sub_mul(qr.quot, shift, b);
            if (track) out.quotients[j] += multi_poly::from_terms(f.ctx(), {{shift, qr.quot}});
            continue;
        }
        uni_poly m = lcm(c, b.lc());
        uni_poly mu = exact_div(m, c);
        uni_poly nu = exact_div(m, b.lc());
        out.lambda *= mu;
        rem_scale *= mu;
        p = p.mul_coeff(mu);
        p.sub_mul(nu, shift, b);
        if (track) {
            for (auto& q : out.quotients) q = q.mul_coeff(mu);
            out.quotients[j] += multi_poly::from_terms(f.ctx(), {{shift, nu}});
        }
    }
    // Each remainder term must carry the multipliers introduced after it was set aside.
    for (std::size_t i = 0; i < rem_terms.size(); ++i) rem_terms[i].second *= exact_div(rem_scale, rem_scales[i]);
    out.rem = multi_poly::from_terms(f.ctx(), std::move(rem_terms));
    return out;
}

void check_division(const multi_poly& f, const std::vector<const multi_poly*>& B, const pseudo_division& d) {
    multi_poly acc = f.mul_coeff(d.lambda) - d.rem;
    for (std::size_t j = 0; j < B.size(); ++j) acc -= d.quotients[j] * *B[j];
    check_invariant(acc.is_zero(), "pseudo-division identity failed");
    for (const auto& [m, c] : d.rem.terms()) {
        for (const auto* b : B) check_invariant(!b->lm().divides(m), "pseudo-division remainder is not reduced");
    }
}

// lambda * S(f,g) == a * S(f,h) - b * S(g,h) with term multipliers a, b.
void check_triangle(const multi_poly& f, const multi_poly& g, const multi_poly& h, const uni_poly& lambda) {
    auto lcm_term = [](const multi_poly& x, const multi_poly& y) {
        return std::make_pair(lcm(x.lm(), y.lm()), lcm(x.lc(), y.lc()));
    };
    auto [mfg, cfg] = lcm_term(f, g);
    auto [mfh, cfh] = lcm_term(f, h);
    auto [mgh, cgh] = lcm_term(g, h);
    try {
        uni_poly a = exact_div(lambda * cfg, cfh);
        uni_poly b = exact_div(lambda * cfg, cgh);
        multi_poly lhs = spoly_pid(f, g).mul_coeff(lambda);
        multi_poly rhs = spoly_pid(f, h).mul_term(mfg / mfh, a) - spoly_pid(g, h).mul_term(mfg / mgh, b);
        check_invariant(lhs == rhs, "triangular identity failed");
    } catch (const domain_error&) {
        throw invariant_violation("triangular identity multipliers are not polynomial");
    }
}

} // namespace

multi_poly spoly_pid(const multi_poly& f, const multi_poly& g) {
    if (f.is_univariate()) throw domain_error("spoly_pid: f must involve the non-eliminated variables");
    if (g.is_zero()) throw domain_error("spoly_pid: g must be nonzero");
    if (g.is_univariate()) {
        uni_poly m = lcm(f.lc(), g.lc());
        return f.tail().mul_coeff(exact_div(m, f.lc()));
    }
    monomial gamma = lcm(f.lm(), g.lm());
    uni_poly m = lcm(f.lc(), g.lc());
    multi_poly s = f.mul_term(gamma / f.lm(), exact_div(m, f.lc()));
    s -= g.mul_term(gamma / g.lm(), exact_div(m, g.lc()));
    return s;
}

pseudo_division pseudo_divide(const multi_poly& f, const std::vector<multi_poly>& B, bool track_quotients) {
    std::vector<const multi_poly*> ptrs;
    for (const auto& b : B) {
        if (b.is_univariate()) throw domain_error("pseudo_divide: divisors must involve the non-eliminated variables");
        ptrs.push_back(&b);
    }
    pseudo_division d = divide_impl(f, ptrs, track_quotients || debug_checks());
    if (debug_checks()) check_division(f, ptrs, d);
    if (!track_quotients) d.quotients.clear();
    return d;
}

std::optional<uni_poly> coprime_skip(const multi_poly& f, const multi_poly& g) {
    if (!coprime(f.lm(), g.lm())) return std::nullopt;
    return gcd(f.lc(), g.lc());
}

uni_poly triangle_multiplier(const multi_poly& f, const multi_poly& g, const multi_poly& h) {
    return exact_div(h.lc(), gcd(lcm(f.lc(), g.lc()), h.lc())).monic();
}

std::array<std::size_t, 3> triplet_registry::key(std::size_t a, std::size_t b, std::size_t c) {
    std::array<std::size_t, 3> k{a, b, c};
    std::sort(k.begin(), k.end());
    return k;
}

std::optional<triangle_choice> triangular_skip(std::size_t f, std::size_t g, const std::vector<multi_poly>& B, triplet_registry& used,
                                               const std::function<bool(std::size_t)>& eligible) {
    monomial gamma = lcm(B[f].lm(), B[g].lm());
    std::optional<triangle_choice> best;
    int best_rad = 0, best_deg = 0;
    for (std::size_t h = 0; h < B.size(); ++h) {
        if (h == f || h == g || B[h].is_zero() || !B[h].lm().divides(gamma) || used.contains(f, g, h)) continue;
        if (eligible && !eligible(h)) continue;
        uni_poly lam = triangle_multiplier(B[f], B[g], B[h]);
        int rad = lam.is_constant() ? 0 : radical(lam).degree();
        int deg = lam.degree();
        if (!best || rad < best_rad || (rad == best_rad && deg < best_deg)) {
            best = triangle_choice{h, lam};
            best_rad = rad;
            best_deg = deg;
        }
    }
    if (best) used.add(f, g, best->h);
    return best;
}

namespace {

class pseudo_session {
public:
    pseudo_session(ctx_ptr ctx, const strategy_config& st) : ctx_(std::move(ctx)), st_(st), queue_(pending_cmp{ctx_.get()}) {
        f0_ = uni_poly(ctx_->k);
    }

    pseudo_outcome run(const std::vector<multi_poly>& F) {
        std::vector<multi_poly> start;
        for (const auto& f : F) {
            if (f.is_zero()) continue;
            if (f.is_univariate()) {
                if (!absorb_univariate(f.lc())) return unit_outcome();
            } else {
                start.push_back(normalize_scalar(f));
            }
        }
        std::stable_sort(start.begin(), start.end(), [](const multi_poly& a, const multi_poly& b) { return term_cmp(a, b) < 0; });
        for (auto& f : start) insert(std::move(f));

        while (!queue_.empty()) {
            pending p = *queue_.begin();
            queue_.erase(queue_.begin());
            multi_poly s = spoly_pid(arena_[p.a], arena_[p.b]);
            std::vector<const multi_poly*> reducers;
            for (std::size_t i : order_) reducers.push_back(&arena_[i]);
            pseudo_division d = divide_impl(s, reducers, debug_checks());
            if (debug_checks()) check_division(s, reducers, d);
            ++out_.stats.reduced;
            add_multiplier(d.lambda);
            if (d.rem.is_zero()) continue;
            if (d.rem.is_univariate()) {
                if (!absorb_univariate(d.rem.lc())) return unit_outcome();
                continue;
            }
            for (std::size_t i : order_) {
                check_invariant(!arena_[i].lm().divides(d.rem.lm()), "leading monomial ideal did not grow");
            }
            insert(normalize_scalar(d.rem));
        }
        if (f0_.is_zero()) throw not_zero_dimensional("no univariate polynomial found: the ideal is not zero-dimensional");

        out_.chi_eps = f0_;
        for (std::size_t i : order_) out_.basis.push_back(arena_[i]);
        for (const auto& b : out_.basis) {
            uni_poly d = gcd(b.lc(), f0_);
            if (!d.is_constant() && std::find(out_.lc_multipliers.begin(), out_.lc_multipliers.end(), d) == out_.lc_multipliers.end())
                out_.lc_multipliers.push_back(d);
        }
        return out_;
    }

private:
    struct pending {
        monomial lcm;
        std::size_t seq;
        std::size_t a, b;
    };
    struct pending_cmp {
        const var_ctx* ctx;
        bool operator()(const pending& x, const pending& y) const {
            int c = mono_cmp(*ctx, x.lcm, y.lcm);
            return c ? c < 0 : x.seq < y.seq;
        }
    };

    pseudo_outcome unit_outcome() {
        pseudo_outcome o;
        o.inconsistent = true;
        o.chi_eps = uni_poly::constant(ctx_->k, 1);
        o.stats = out_.stats;
        return o;
    }

    // Folds r into f0; returns false when f0 becomes a unit.
    bool absorb_univariate(const uni_poly& r) {
        f0_ = f0_.is_zero() ? r.monic() : gcd(f0_, r);
        return !f0_.is_constant();
    }

    bool filtered(const uni_poly& m) const { return st_.chi_delta && !f0_.is_zero() && coprime(m, f0_); }

    void add_multiplier(const uni_poly& m) {
        if (m.is_constant()) return;
        uni_poly u = m.monic();
        if (std::find(out_.multipliers.begin(), out_.multipliers.end(), u) == out_.multipliers.end()) out_.multipliers.push_back(u);
    }

    bool decided(std::size_t a, std::size_t b) const { return decided_.count({std::min(a, b), std::max(a, b)}) > 0; }

    void insert(multi_poly r) {
        std::size_t id = arena_.size();
        arena_.push_back(std::move(r));
        std::vector<std::size_t> previous = order_;
        auto pos = std::upper_bound(order_.begin(), order_.end(), id, [&](std::size_t x, std::size_t y) {
            return term_cmp(arena_[x], arena_[y]) < 0;
        });
        order_.insert(pos, id);
        for (std::size_t a : previous) decide(a, id);
    }

    void decide(std::size_t a, std::size_t b) {
        ++out_.stats.pairs;
        const multi_poly& f = arena_[a];
        const multi_poly& g = arena_[b];
        if (st_.coprime_skip) {
            if (auto d = coprime_skip(f, g)) {
                if (!filtered(*d)) add_multiplier(*d);
                mark(a, b);
                ++out_.stats.coprime_skipped;
                return;
            }
        }
        if (st_.triangle_skip) {
            auto ok = [&](std::size_t h) { return decided(a, h) && decided(b, h); };
            if (auto t = triangular_skip(a, b, arena_, used_, ok)) {
                if (debug_checks()) check_triangle(f, g, arena_[t->h], t->lambda);
                if (!filtered(t->lambda)) add_multiplier(t->lambda);
                mark(a, b);
                ++out_.stats.triangle_skipped;
                return;
            }
        }
        queue_.insert(pending{lcm(f.lm(), g.lm()), seq_++, a, b});
        mark(a, b);
    }

    void mark(std::size_t a, std::size_t b) { decided_.insert({std::min(a, b), std::max(a, b)}); }

    ctx_ptr ctx_;
    strategy_config st_;
    std::vector<multi_poly> arena_;
    std::vector<std::size_t> order_;
    std::set<std::pair<std::size_t, std::size_t>> decided_;
    triplet_registry used_;
    std::set<pending, pending_cmp> queue_;
    std::size_t seq_ = 0;
    uni_poly f0_;
    pseudo_outcome out_;
};

} // namespace

pseudo_outcome compute_pseudo_eliminant(const std::vector<multi_poly>& F, const strategy_config& strategy) {
    if (F.empty()) throw domain_error("compute_pseudo_eliminant: empty generator list");
    return pseudo_session(F.front().ctx(), strategy).run(F);
}

std::vector<uni_poly> all_multipliers(const pseudo_outcome& out) {
    std::vector<uni_poly> all = out.multipliers;
    for (const auto& m : out.lc_multipliers) {
        if (std::find(all.begin(), all.end(), m) == all.end()) all.push_back(m);
    }
    return all;
}

} // namespace elim
