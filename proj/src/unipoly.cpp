// unipoly.cpp - dense univariate arithmetic, gcds and squarefree decomposition.
#include "elim/unipoly.hpp"

#include <algorithm>

#include "elim/errors.hpp"

namespace elim {

uni_poly::uni_poly(const field& k, std::vector<scalar> coeffs) : k_(k), c_(std::move(coeffs)) {
    for (const auto& c : c_) {
        if (c.characteristic() != k_.characteristic()) throw context_mismatch("coefficient from a different field");
    }
    trim();
}

uni_poly::uni_poly(const field& k, std::initializer_list<long> coeffs) : k_(k) {
    for (long c : coeffs) c_.emplace_back(k, c);
    trim();
}

uni_poly uni_poly::constant(const scalar& c) {
    uni_poly r(c.ring());
    r.c_.push_back(c);
    r.trim();
    return r;
}

uni_poly uni_poly::monomial(const scalar& c, int deg) {
    uni_poly r(c.ring());
    if (c.is_zero()) return r;
    r.c_.assign(static_cast<std::size_t>(deg) + 1, scalar(c.ring()));
    r.c_[deg] = c;
    return r;
}

void uni_poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void uni_poly::same_ring(const uni_poly& o) const {
    if (k_ != o.k_) throw context_mismatch("polynomials over different fields");
}

scalar uni_poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return scalar(k_);
    return c_[i];
}

scalar uni_poly::lead() const { return c_.empty() ? scalar(k_) : c_.back(); }

uni_poly uni_poly::operator-() const {
    uni_poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

uni_poly& uni_poly::operator+=(const uni_poly& o) {
    same_ring(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), scalar(k_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

uni_poly& uni_poly::operator-=(const uni_poly& o) {
    same_ring(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), scalar(k_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

uni_poly operator*(const uni_poly& a, const uni_poly& b) {
    a.same_ring(b);
    uni_poly r(a.k_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, scalar(a.k_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

uni_poly& uni_poly::operator*=(const uni_poly& o) { return *this = *this * o; }

uni_poly& uni_poly::operator*=(const scalar& s) {
    if (s.characteristic() != k_.characteristic()) throw context_mismatch("scalar from a different field");
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

bool uni_poly::operator==(const uni_poly& o) const {
    same_ring(o);
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != o.c_[i]) return false;
    }
    return true;
}

int uni_poly::compare(const uni_poly& o) const {
    same_ring(o);
    if (degree() != o.degree()) return degree() < o.degree() ? -1 : 1;
    for (int i = degree(); i >= 0; --i) {
        int c = c_[i].compare(o.c_[i]);
        if (c) return c;
    }
    return 0;
}

uni_poly uni_poly::monic() const {
    if (is_zero()) return *this;
    return *this * lead().inverse();
}

uni_poly uni_poly::derivative() const {
    uni_poly r(k_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1, scalar(k_));
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * scalar(k_, static_cast<long>(i));
    r.trim();
    return r;
}

uni_poly uni_poly::shift(int k) const {
    if (is_zero() || k == 0) return *this;
    uni_poly r(k_);
    r.c_.assign(static_cast<std::size_t>(k), scalar(k_));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

scalar uni_poly::eval(const scalar& a) const {
    scalar acc(k_);
    for (int i = degree(); i >= 0; --i) acc = acc * a + c_[i];
    return acc;
}

std::string uni_poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const scalar& c = c_[i];
        if (c.is_zero()) continue;
        bool neg = k_.is_rationals() && c.sign() < 0;
        scalar mag = neg ? -c : c;
        if (first) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        first = false;
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        if (mono.empty()) out += mag.str();
        else if (mag.is_one()) out += mono;
        else out += mag.str() + "*" + mono;
    }
    return out;
}

std::size_t uni_poly::max_coeff_bits() const {
    std::size_t best = 0;
    for (const auto& c : c_) {
        std::size_t b;
        if (k_.is_rationals()) {
            b = std::max(mpz_sizeinbase(c.rational().get_num_mpz_t(), 2), mpz_sizeinbase(c.rational().get_den_mpz_t(), 2));
        } else {
            b = c.residue() ? 64 - static_cast<std::size_t>(__builtin_clzll(c.residue())) : 1;
        }
        best = std::max(best, b);
    }
    return best;
}

uni_divrem divrem(const uni_poly& a, const uni_poly& b) {
    if (b.is_zero()) throw division_by_zero("polynomial division by zero");
    if (a.ring() != b.ring()) throw context_mismatch("polynomials over different fields");
    const field& k = a.ring();
    if (a.degree() < b.degree()) return {uni_poly(k), a};
    std::vector<scalar> r = a.coeffs();
    std::vector<scalar> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, scalar(k));
    scalar inv = b.lead().inverse();
    const auto& bc = b.coeffs();
    int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i].is_zero()) continue;
        scalar t = r[i] * inv;
        q[i - db] = t;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= t * bc[j];
    }
    r.resize(static_cast<std::size_t>(db));
    return {uni_poly(k, std::move(q)), uni_poly(k, std::move(r))};
}

uni_poly operator%(const uni_poly& a, const uni_poly& b) { return divrem(a, b).rem; }

uni_poly exact_div(const uni_poly& a, const uni_poly& b) {
    auto qr = divrem(a, b);
    if (!qr.rem.is_zero()) throw domain_error("inexact polynomial division");
    return qr.quot;
}

bool divides(const uni_poly& b, const uni_poly& a) {
    if (b.is_zero()) return a.is_zero();
    return (a % b).is_zero();
}

namespace {

using zvec = std::vector<mpz_class>;

void ztrim(zvec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Clears denominators and removes the integer content.
zvec primitive_integer(const uni_poly& a) {
    mpz_class den = 1;
    for (const auto& c : a.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
    zvec v;
    v.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) v.emplace_back(c.rational().get_num() * (den / c.rational().get_den()));
    mpz_class g = 0;
    for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1) {
        for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
    return v;
}

void make_primitive(zvec& v) {
    mpz_class g = 0;
    for (const auto& c : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1) {
        for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
}

// Pseudo-remainder of a by b over Z, then made primitive.
zvec prem_primitive(zvec a, const zvec& b) {
    int db = static_cast<int>(b.size()) - 1;
    const mpz_class& lb = b.back();
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        if (a[i] == 0) {
            a.pop_back();
            continue;
        }
        mpz_class t = a[i];
        for (auto& c : a) c *= lb;
        for (int j = 0; j <= db; ++j) a[i - db + j] -= t * b[j];
        a.pop_back();
    }
    ztrim(a);
    make_primitive(a);
    return a;
}

uni_poly rational_gcd(const uni_poly& a, const uni_poly& b) {
    zvec x = primitive_integer(a);
    zvec y = primitive_integer(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        zvec r = prem_primitive(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<scalar> c;
    c.reserve(x.size());
    for (const auto& z : x) c.emplace_back(a.ring(), mpq_class(z));
    return uni_poly(a.ring(), std::move(c)).monic();
}

} // namespace

uni_poly gcd(const uni_poly& a, const uni_poly& b) {
    if (a.ring() != b.ring()) throw context_mismatch("polynomials over different fields");
    if (a.is_zero() && b.is_zero()) throw domain_error("gcd of two zero polynomials");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return uni_poly::constant(a.ring(), 1);
    if (a.ring().is_rationals()) return rational_gcd(a, b);
    uni_poly x = a, y = b;
    while (!y.is_zero()) {
        uni_poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

uni_poly lcm(const uni_poly& a, const uni_poly& b) {
    if (a.is_zero() || b.is_zero()) return uni_poly(a.ring());
    return exact_div(a * b, gcd(a, b)).monic();
}

bool coprime(const uni_poly& a, const uni_poly& b) { return gcd(a, b).is_one(); }

uni_ext_gcd ext_gcd(const uni_poly& a, const uni_poly& b) {
    if (a.ring() != b.ring()) throw context_mismatch("polynomials over different fields");
    if (a.is_zero() && b.is_zero()) throw domain_error("extended gcd of two zero polynomials");
    const field& k = a.ring();
    uni_poly r0 = a, r1 = b;
    uni_poly s0 = uni_poly::constant(k, 1), s1(k);
    uni_poly t0(k), t1 = uni_poly::constant(k, 1);
    while (!r1.is_zero()) {
        auto qr = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(qr.rem);
        uni_poly s2 = s0 - qr.quot * s1;
        uni_poly t2 = t0 - qr.quot * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    scalar inv = r0.lead().inverse();
    return {r0 * inv, s0 * inv, t0 * inv};
}

uni_poly inverse_mod(const uni_poly& a, const uni_poly& m) {
    auto e = ext_gcd(a % m, m);
    if (!e.d.is_one()) throw division_by_zero("element is not invertible modulo " + m.str());
    return e.u % m;
}

uni_poly pow(const uni_poly& a, unsigned e) {
    uni_poly r = uni_poly::constant(a.ring(), 1);
    uni_poly b = a;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

namespace {

// For f(x) = psi(x^p) over GF(p) returns psi, using psi(x^p) = psi(x)^p.
uni_poly pth_root(const uni_poly& f) {
    std::uint64_t p = f.ring().characteristic();
    std::vector<scalar> c;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f.coeff(i));
    return uni_poly(f.ring(), std::move(c));
}

void squarefree_rec(const uni_poly& f, long scale, std::vector<std::pair<uni_poly, int>>& out) {
    const std::uint64_t p = f.ring().characteristic();
    uni_poly fp = f.derivative();
    if (fp.is_zero()) {
        squarefree_rec(pth_root(f), scale * static_cast<long>(p), out);
        return;
    }
    uni_poly fi = gcd(f, fp);
    uni_poly h = exact_div(f, fi);
    long i = 1;
    long idx = coprime_index(1, p);
    while (!h.is_constant()) {
        long next = coprime_index(++i, p);
        uni_poly h2 = gcd(fi, h);
        uni_poly g = exact_div(h, h2);
        if (!g.is_constant()) out.emplace_back(g.monic(), static_cast<int>(idx * scale));
        fi = exact_div(fi, pow(h2, static_cast<unsigned>(next - idx)));
        h = std::move(h2);
        idx = next;
    }
    // What remains is the p-th power part; in characteristic 0 it is constant.
    if (!fi.is_constant()) {
        if (!fi.derivative().is_zero()) throw invariant_violation("squarefree: leftover part is not a p-th power");
        squarefree_rec(pth_root(fi), scale * static_cast<long>(p), out);
    }
}

} // namespace

long coprime_index(long i, std::uint64_t p) {
    if (p == 0) return i;
    long q = static_cast<long>(p);
    // Every block of p consecutive integers holds p - 1 admissible values.
    return (i - 1) / (q - 1) * q + (i - 1) % (q - 1) + 1;
}

std::vector<std::pair<uni_poly, int>> squarefree(const uni_poly& f) {
    if (f.is_constant()) throw domain_error("squarefree decomposition of a constant");
    std::vector<std::pair<uni_poly, int>> out;
    squarefree_rec(f.monic(), 1, out);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

uni_poly radical(const uni_poly& f) {
    uni_poly r = uni_poly::constant(f.ring(), 1);
    if (f.is_constant()) return r;
    for (const auto& [g, e] : squarefree(f)) r *= g;
    return r;
}

int multiplicity(const uni_poly& f, const uni_poly& p) {
    if (f.is_zero() || p.is_constant()) throw domain_error("multiplicity needs nonzero f and non-constant p");
    int k = 0;
    uni_poly g = f;
    for (;;) {
        auto qr = divrem(g, p);
        if (!qr.rem.is_zero()) return k;
        g = std::move(qr.quot);
        ++k;
    }
}

} // namespace elim
