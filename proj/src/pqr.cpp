// pqr.cpp - residue arithmetic, proper division and the proper-eliminant session.
#include "elim/pqr.hpp"

#include <algorithm>
#include <set>

namespace elim {

pqr_ptr make_pqr(const uni_poly& q) {
    if (q.is_constant()) throw domain_error("quotient ring modulus must be non-constant");
    return std::make_shared<const pqr_ring>(pqr_ring{q.monic()});
}

pqr_elem::pqr_elem(pqr_ptr ring, const uni_poly& a) : ring_(std::move(ring)) {
    rep_ = a.degree() < ring_->q.degree() ? a : a % ring_->q;
}

bool same_modulus(const pqr_ptr& a, const pqr_ptr& b) { return a == b || (a && b && a->q == b->q); }

void pqr_elem::same_ring(const pqr_elem& o) const {
    if (!same_modulus(ring_, o.ring_)) throw context_mismatch("elements of different quotient rings");
}

bool pqr_elem::is_unit() const { return !rep_.is_zero() && gcd(rep_, ring_->q).is_one(); }

pqr_elem pqr_elem::inverse() const {
    if (rep_.is_zero()) throw division_by_zero("zero is not invertible");
    return pqr_elem(ring_, inverse_mod(rep_, ring_->q));
}

uni_poly pqr_elem::standard_lift() const { return rep_.is_zero() ? ring_->q : gcd(rep_, ring_->q); }

pqr_elem pqr_elem::standard_factor() const { return pqr_elem(ring_, standard_lift()); }

pqr_elem pqr_elem::normalizer() const {
    if (rep_.is_zero()) return one(ring_);
    const uni_poly& q = ring_->q;
    uni_poly s = gcd(rep_, q);
    uni_poly r = exact_div(q, s);
    uni_poly w0 = r.is_constant() ? uni_poly::constant(q.ring(), 1) : inverse_mod(exact_div(rep_, s), r);
    // T collects the prime powers of q that divide s completely; w must also be a unit there.
    uni_poly t = s;
    for (;;) {
        uni_poly g = gcd(t, r);
        if (g.is_constant()) break;
        t = exact_div(t, g);
    }
    uni_poly w = w0;
    if (!t.is_constant()) {
        uni_poly shift = ((uni_poly::constant(q.ring(), 1) - w0) * inverse_mod(r, t)) % t;
        w = w0 + r * shift;
    }
    pqr_elem out(ring_, w);
    if (debug_checks()) {
        check_invariant(out.is_unit(), "normalizer is not a unit");
        check_invariant(out * *this == pqr_elem(ring_, s), "normalizer does not produce the standard factor");
    }
    return out;
}

bool pqr_elem::divides(const pqr_elem& b) const {
    same_ring(b);
    if (b.is_zero()) return true;
    return elim::divides(standard_lift(), b.rep_);
}

pqr_elem& pqr_elem::operator+=(const pqr_elem& o) {
    same_ring(o);
    rep_ += o.rep_;
    return *this;
}

pqr_elem& pqr_elem::operator-=(const pqr_elem& o) {
    same_ring(o);
    rep_ -= o.rep_;
    return *this;
}

pqr_elem& pqr_elem::operator*=(const pqr_elem& o) {
    same_ring(o);
    rep_ = (rep_ * o.rep_) % ring_->q;
    return *this;
}

bool pqr_elem::operator==(const pqr_elem& o) const {
    same_ring(o);
    return rep_ == o.rep_;
}

pqr_elem gcd_q(const pqr_elem& a, const pqr_elem& b) { return pqr_elem(a.ring(), gcd(a.lift(), b.lift())); }

pqr_elem lcm_q(const pqr_elem& a, const pqr_elem& b) { return pqr_elem(a.ring(), lcm(a.lift(), b.lift())); }

pqr_ext_gcd multi_ext_gcd(const std::vector<pqr_elem>& cs) {
    if (cs.empty() || std::all_of(cs.begin(), cs.end(), [](const pqr_elem& c) { return c.is_zero(); }))
        throw domain_error("multi_ext_gcd of zero elements");
    const pqr_ptr& ring = cs.front().ring();
    const field& k = ring->q.ring();
    uni_poly d(k);
    std::vector<uni_poly> co;
    for (const auto& c : cs) {
        if (d.is_zero() && c.is_zero()) {
            co.emplace_back(k);
            continue;
        }
        auto e = ext_gcd(d, c.lift());
        for (auto& x : co) x *= e.u;
        co.push_back(e.v);
        d = e.d;
    }
    auto e = ext_gcd(d, ring->q);
    for (auto& x : co) x *= e.u;
    pqr_ext_gcd out;
    out.d = pqr_elem(ring, e.d);
    for (auto& x : co) out.coeffs.emplace_back(ring, x);
    return out;
}

multi_poly_q project(const multi_poly& f, const pqr_ptr& ring) {
    std::vector<multi_poly_q::term> t;
    for (const auto& [m, c] : f.terms()) {
        pqr_elem e(ring, c);
        if (!e.is_zero()) t.emplace_back(m, std::move(e));
    }
    multi_poly_q out(f.ctx());
    return t.empty() ? out : multi_poly_q::from_terms(f.ctx(), std::move(t));
}

multi_poly_q project(const multi_poly_q& f, const pqr_ptr& ring) {
    std::vector<multi_poly_q::term> t;
    for (const auto& [m, c] : f.terms()) {
        if (!elim::divides(ring->q, c.ring()->q)) throw context_mismatch("target modulus does not divide the source modulus");
        pqr_elem e(ring, c.lift());
        if (!e.is_zero()) t.emplace_back(m, std::move(e));
    }
    multi_poly_q out(f.ctx());
    return t.empty() ? out : multi_poly_q::from_terms(f.ctx(), std::move(t));
}

multi_poly lift(const multi_poly_q& f) {
    std::vector<multi_poly::term> t;
    for (const auto& [m, c] : f.terms()) t.emplace_back(m, c.lift());
    multi_poly out(f.ctx());
    return t.empty() ? out : multi_poly::from_terms(f.ctx(), std::move(t));
}

std::string to_string(const multi_poly_q& f) {
    if (f.is_zero()) return "0";
    const std::string& v = f.ctx()->x1;
    return poly_str<pqr_elem>(f, [&](const pqr_elem& c) { return c.lift().str(v); });
}

multi_poly_q normalize_scalar(const multi_poly_q& f) {
    if (f.is_zero()) return f;
    scalar lead = f.lc().lift().lead();
    if (lead.is_one()) return f;
    return f.mul_coeff(pqr_elem(f.lc().ring(), uni_poly::constant(lead.inverse())));
}

multi_poly_q spoly_pqr(const multi_poly_q& f, const multi_poly_q& g) {
    if (f.is_univariate() || g.is_univariate()) throw domain_error("spoly_pqr: both inputs must lie outside R_q");
    const pqr_ptr& ring = f.lc().ring();
    uni_poly lf = f.lc().lift(), lg = g.lc().lift();
    uni_poly d = gcd(lf, lg);
    pqr_elem mf(ring, exact_div(lg, d)), mg(ring, exact_div(lf, d));
    monomial gamma = lcm(f.lm(), g.lm());
    return f.mul_term(gamma / f.lm(), mf) - g.mul_term(gamma / g.lm(), mg);
}

multi_poly_q spoly_pqr(const multi_poly_q& f, const pqr_elem& e) {
    if (f.is_univariate()) throw domain_error("spoly_pqr: f must lie outside R_q");
    if (e.is_zero() || e.is_unit()) throw domain_error("spoly_pqr: e must be a nonzero non-unit");
    uni_poly lf = f.lc().lift();
    pqr_elem mf(e.ring(), exact_div(e.lift(), gcd(lf, e.lift())));
    return f.tail().mul_coeff(mf);
}

multi_poly_q spoly_modulus(const multi_poly_q& f, const pqr_ptr& ring) {
    if (f.is_univariate()) throw domain_error("spoly_modulus: f must lie outside R_q");
    pqr_elem nf(ring, exact_div(ring->q, gcd(f.lc().lift(), ring->q)));
    return f.tail().mul_coeff(nf);
}

namespace {

proper_division divide_impl(const multi_poly_q& f, const std::vector<const multi_poly_q*>& B, const pqr_ptr& ring, bool track) {
    proper_division out;
    out.lambda = pqr_elem::one(ring);
    if (track) out.quotients.assign(B.size(), multi_poly_q(f.ctx()));
    multi_poly_q p = f;
    std::vector<multi_poly_q::term> rem_terms;
    std::vector<pqr_elem> rem_scales; // lambda at the moment each remainder term was set aside
    while (!p.is_zero()) {
        const monomial alpha = p.lm();
        const pqr_elem c = p.lc();
        std::size_t j = B.size();
        for (std::size_t i = 0; i < B.size(); ++i) {
            if (B[i]->lm().divides(alpha) && B[i]->lc().divides(c)) {
                j = i;
                break;
            }
        }
        if (j == B.size()) {
            rem_terms.emplace_back(alpha, c);
            rem_scales.push_back(out.lambda);
            p = p.tail();
            continue;
        }
        const multi_poly_q& b = *B[j];
        const monomial shift = alpha / b.lm();
        uni_poly lb = b.lc().lift();
        uni_poly g = gcd(c.lift(), lb);
        pqr_elem mu(ring, exact_div(lb, g));
        pqr_elem coef(ring, uni_poly(ring->q.ring()));
        if (mu.is_unit()) {
            coef = pqr_elem(ring, exact_div(c.lift(), g));
            if (!mu.is_one()) {
                out.lambda *= mu;
                p = p.mul_coeff(mu);
                if (track) {
                    for (auto& q : out.quotients) q = q.mul_coeff(mu);
                }
            }
        } else {
            // c = t * lc b with t = (c / s) * w, where w * lc b = s is the standard factor.
            uni_poly s = b.lc().standard_lift();
            coef = pqr_elem(ring, exact_div(c.lift(), s)) * b.lc().normalizer();
        }
        p.sub_mul(coef, shift, b);
        if (track) out.quotients[j] += multi_poly_q::from_terms(f.ctx(), {{shift, coef}});
    }
    for (std::size_t i = 0; i < rem_terms.size(); ++i) {
        if (rem_scales[i] != out.lambda) rem_terms[i].second *= out.lambda * rem_scales[i].inverse();
    }
    out.rem = rem_terms.empty() ? multi_poly_q(f.ctx()) : multi_poly_q::from_terms(f.ctx(), std::move(rem_terms));
    return out;
}

void check_division(const multi_poly_q& f, const std::vector<const multi_poly_q*>& B, const proper_division& d) {
    check_invariant(d.lambda.is_unit(), "proper-division multiplier is not a unit");
    multi_poly_q acc = f.mul_coeff(d.lambda) - d.rem;
    for (std::size_t j = 0; j < B.size(); ++j) acc -= d.quotients[j] * *B[j];
    check_invariant(acc.is_zero(), "proper-division identity failed");
    for (const auto& [m, c] : d.rem.terms()) {
        for (const auto* b : B) check_invariant(!(b->lm().divides(m) && b->lc().divides(c)), "proper-division remainder is not properly reduced");
    }
}

} // namespace

proper_division proper_divide(const multi_poly_q& f, const std::vector<multi_poly_q>& B, const pqr_ptr& ring, bool track_quotients) {
    std::vector<const multi_poly_q*> ptrs;
    for (const auto& b : B) {
        if (b.is_univariate()) throw domain_error("proper_divide: divisors must lie outside R_q");
        ptrs.push_back(&b);
    }
    proper_division d = divide_impl(f, ptrs, ring, track_quotients || debug_checks());
    if (debug_checks()) check_division(f, ptrs, d);
    if (!track_quotients) d.quotients.clear();
    return d;
}

namespace {

class proper_session {
public:
    proper_session(const pqr_ptr& ring, const strategy_config& st) : outer_(ring), ring_(ring), st_(st) {}

    proper_outcome run(const std::vector<multi_poly_q>& F) {
        std::vector<multi_poly_q> current = F;
        for (;;) {
            status s = attempt(current);
            if (s == status::unit) return finish_unit();
            if (s == status::done) return finish();
            // A nonzero non-unit e appeared: continue over K[x1]/(e) with everything found so far.
            ++stats_.base_changes;
            pqr_ptr next = make_pqr(e_.lift());
            current.clear();
            for (std::size_t i : order_) current.push_back(project(arena_[i], next));
            ring_ = next;
        }
    }

private:
    enum class status { done, unit, rebase };
    enum class kind { pair, element, modulus };
    struct pending {
        monomial lcm;
        std::size_t seq;
        kind k;
        std::size_t a, b;
        pqr_elem e;
    };
    struct pending_cmp {
        const var_ctx* ctx;
        bool operator()(const pending& x, const pending& y) const {
            int c = mono_cmp(*ctx, x.lcm, y.lcm);
            return c ? c < 0 : x.seq < y.seq;
        }
    };

    void reset() {
        arena_.clear();
        order_.clear();
        decided_.clear();
        used_ = triplet_registry();
        queue_.clear();
        q_done_.clear();
        e_ = pqr_elem(ring_, uni_poly(ring_->q.ring()));
    }

    status attempt(const std::vector<multi_poly_q>& F) {
        reset();
        std::vector<multi_poly_q> start;
        for (const auto& f : F) {
            if (f.is_zero()) continue;
            if (f.is_univariate()) {
                status s = absorb(f.lc());
                if (s != status::done) return s;
            } else {
                start.push_back(normalize_scalar(f));
            }
        }
        std::stable_sort(start.begin(), start.end(), [](const multi_poly_q& a, const multi_poly_q& b) { return term_less(a, b); });
        for (auto& f : start) insert(std::move(f));

        for (;;) {
            while (!queue_.empty()) {
                auto it = std::min_element(queue_.begin(), queue_.end(), pending_cmp{arena_.empty() ? nullptr : arena_[0].ctx().get()});
                pending p = *it;
                queue_.erase(it);
                multi_poly_q s(arena_[p.a].ctx());
                if (p.k == kind::pair) s = spoly_pqr(arena_[p.a], arena_[p.b]);
                else if (p.k == kind::element) s = spoly_pqr(arena_[p.a], p.e);
                else s = spoly_modulus(arena_[p.a], ring_);
                std::vector<const multi_poly_q*> reducers;
                for (std::size_t i : order_) reducers.push_back(&arena_[i]);
                proper_division d = divide_impl(s, reducers, ring_, debug_checks());
                if (debug_checks()) check_division(s, reducers, d);
                ++stats_.reduced;
                if (d.rem.is_zero()) continue;
                if (d.rem.is_univariate()) {
                    status st = absorb(d.rem.lc());
                    if (st != status::done) return st;
                    continue;
                }
                insert(normalize_scalar(d.rem));
            }
            if (!q_phase()) return status::done;
        }
    }

    static bool term_less(const multi_poly_q& a, const multi_poly_q& b) {
        int c = mono_cmp(*a.ctx(), a.lm(), b.lm());
        if (c) return c < 0;
        return a.lc().standard_lift().degree() < b.lc().standard_lift().degree();
    }

    // Folds a univariate remainder into e. Returns unit when the ideal becomes the whole ring,
    // rebase when a base change should happen, done otherwise.
    status absorb(const pqr_elem& r) {
        if (r.is_unit()) return status::unit;
        uni_poly g = e_.is_zero() ? gcd(r.lift(), ring_->q) : gcd(r.lift(), e_.lift());
        if (g.is_one()) return status::unit;
        e_ = pqr_elem(ring_, g);
        if (st_.base_change) return status::rebase;
        return status::done;
    }

    bool filtered(const pqr_elem& m) const { return st_.chi_delta && !e_.is_zero() && gcd(m.lift(), e_.lift()).is_one(); }

    bool decided(std::size_t a, std::size_t b) const { return decided_.count({std::min(a, b), std::max(a, b)}) > 0; }
    void mark(std::size_t a, std::size_t b) { decided_.insert({std::min(a, b), std::max(a, b)}); }

    void insert(multi_poly_q r) {
        std::size_t id = arena_.size();
        arena_.push_back(std::move(r));
        std::vector<std::size_t> previous = order_;
        auto pos = std::upper_bound(order_.begin(), order_.end(), id, [&](std::size_t x, std::size_t y) { return term_less(arena_[x], arena_[y]); });
        order_.insert(pos, id);
        for (std::size_t a : previous) decide(a, id);
    }

    void decide(std::size_t a, std::size_t b) {
        ++stats_.pairs;
        const multi_poly_q& f = arena_[a];
        const multi_poly_q& g = arena_[b];
        if (st_.coprime_skip && coprime(f.lm(), g.lm())) {
            pqr_elem d = gcd_q(f.lc(), g.lc());
            if (d.is_unit() || filtered(d)) {
                mark(a, b);
                ++stats_.pruned;
                return;
            }
        } else if (st_.triangle_skip) {
            monomial gamma = lcm(f.lm(), g.lm());
            for (std::size_t h : order_) {
                if (h == a || h == b || !arena_[h].lm().divides(gamma) || used_.contains(a, b, h)) continue;
                if (!decided(a, h) || !decided(b, h)) continue;
                uni_poly lh = arena_[h].lc().lift();
                uni_poly lam = exact_div(lh, gcd(lcm(f.lc().lift(), g.lc().lift()), lh));
                pqr_elem l(ring_, lam);
                if (l.is_unit() || filtered(l)) {
                    used_.add(a, b, h);
                    mark(a, b);
                    ++stats_.pruned;
                    return;
                }
            }
        }
        push(pending{lcm(f.lm(), g.lm()), seq_++, kind::pair, a, b, pqr_elem()});
        mark(a, b);
    }

    void push(pending p) { queue_.push_back(std::move(p)); }

    // Adds S(f, e) or S(f, q) for basis elements with non-unit leading coefficients. Returns
    // whether anything new was queued.
    bool q_phase() {
        bool added = false;
        for (std::size_t i : order_) {
            const multi_poly_q& f = arena_[i];
            if (f.lc().is_unit()) continue;
            uni_poly key = e_.is_zero() ? ring_->q : e_.lift();
            if (!e_.is_zero() && gcd_q(f.lc(), e_).is_unit()) continue;
            bool seen = std::any_of(q_done_.begin(), q_done_.end(), [&](const auto& x) { return x.first == i && x.second == key; });
            if (seen) continue;
            q_done_.emplace_back(i, key);
            if (e_.is_zero()) push(pending{f.lm(), seq_++, kind::modulus, i, i, pqr_elem()});
            else push(pending{f.lm(), seq_++, kind::element, i, i, e_});
            added = true;
        }
        return added;
    }

    proper_outcome finish_unit() {
        proper_outcome o;
        o.ring = outer_;
        o.e_q = pqr_elem::one(outer_);
        o.basis_ring = ring_;
        o.stats = stats_;
        return o;
    }

    proper_outcome finish() {
        proper_outcome o;
        o.ring = outer_;
        o.basis_ring = ring_;
        if (!e_.is_zero()) o.e_q = pqr_elem(outer_, e_.lift());
        else if (same_modulus(ring_, outer_)) o.e_q = pqr_elem(outer_, uni_poly(outer_->q.ring()));
        else o.e_q = pqr_elem(outer_, ring_->q);
        for (std::size_t i : order_) o.basis.push_back(arena_[i]);
        o.stats = stats_;
        return o;
    }

    pqr_ptr outer_;
    pqr_ptr ring_;
    strategy_config st_;
    std::vector<multi_poly_q> arena_;
    std::vector<std::size_t> order_;
    std::set<std::pair<std::size_t, std::size_t>> decided_;
    triplet_registry used_;
    std::vector<pending> queue_;
    std::vector<std::pair<std::size_t, uni_poly>> q_done_;
    std::size_t seq_ = 0;
    pqr_elem e_;
    proper_stats stats_;
};

} // namespace

proper_outcome compute_proper_eliminant(const std::vector<multi_poly_q>& F, const pqr_ptr& ring, const strategy_config& strategy) {
    return proper_session(ring, strategy).run(F);
}

std::size_t count_open_pairs(const proper_outcome& out) {
    if (out.inconsistent()) return 0;
    const pqr_ptr& ring = out.basis_ring;
    // After base changes the final ring already quotients by the eliminant.
    pqr_elem e = same_modulus(out.ring, ring) ? out.e_q : pqr_elem(ring, uni_poly(ring->q.ring()));
    std::vector<multi_poly_q> B = out.basis;
    auto open = [&](const multi_poly_q& s) {
        proper_division d = proper_divide(s, B, ring, false);
        if (d.rem.is_zero()) return false;
        if (!d.rem.is_univariate()) return true;
        return e.is_zero() || !e.divides(d.rem.lc());
    };
    std::size_t n = 0;
    for (std::size_t i = 0; i < B.size(); ++i) {
        for (std::size_t j = i + 1; j < B.size(); ++j) n += open(spoly_pqr(B[i], B[j]));
        if (B[i].lc().is_unit()) continue;
        if (e.is_zero()) n += open(spoly_modulus(B[i], ring));
        else if (!gcd_q(B[i].lc(), e).is_unit()) n += open(spoly_pqr(B[i], e));
    }
    return n;
}

} // namespace elim
