// compat.cpp - compatible-part analysis.
#include "elim/compat.hpp"

#include <algorithm>

namespace elim {

void coprime_refine(std::vector<uni_poly>& set, uni_poly d) {
    d = d.monic();
    std::vector<uni_poly> next;
    for (auto& w : set) {
        if (d.is_constant()) {
            next.push_back(std::move(w));
            continue;
        }
        uni_poly g = gcd(w, d);
        if (g.is_constant()) {
            next.push_back(std::move(w));
            continue;
        }
        uni_poly rest = exact_div(w, g).monic();
        next.push_back(g);
        if (!rest.is_constant()) next.push_back(rest);
        d = exact_div(d, g).monic();
    }
    if (!d.is_constant()) next.push_back(d);
    set = std::move(next);
}

namespace {

void sort_canonical(std::vector<uni_poly>& v) {
    std::sort(v.begin(), v.end(), [](const uni_poly& a, const uni_poly& b) { return a.compare(b) < 0; });
}

} // namespace

compat_split compatible_split(const uni_poly& chi_eps, const std::vector<uni_poly>& multipliers) {
    if (chi_eps.is_constant()) throw domain_error("compatible_split needs a non-constant pseudo-eliminant");
    std::vector<uni_poly> lam;
    for (const auto& m : multipliers) {
        if (!m.is_constant()) lam.push_back(m.monic());
    }
    sort_canonical(lam);
    compat_split out;
    out.cp = chi_eps.monic();
    for (const auto& [q, i] : squarefree(chi_eps)) {
        std::vector<uni_poly> omega;
        for (const auto& l : lam) {
            uni_poly d = gcd(l, q);
            if (!d.is_constant()) coprime_refine(omega, d);
        }
        if (omega.empty()) continue;
        sort_canonical(omega);
        for (const auto& w : omega) out.cp = exact_div(out.cp, pow(w, static_cast<unsigned>(i)));
        out.omega[i] = std::move(omega);
    }
    return out;
}

std::vector<uni_poly> composite_divisors(const compat_split& s) {
    std::vector<uni_poly> out;
    for (const auto& [i, ws] : s.omega) {
        for (const auto& w : ws) out.push_back(pow(w, static_cast<unsigned>(i)));
    }
    return out;
}

std::vector<factor_verdict> lc_compatibility_check(const uni_poly& chi_eps, const std::vector<multi_poly>& basis) {
    std::vector<uni_poly> lcs;
    for (const auto& b : basis) {
        if (!b.is_zero() && !b.lc().is_constant()) lcs.push_back(b.lc());
    }
    std::vector<factor_verdict> out;
    if (chi_eps.is_constant()) return out;
    for (const auto& [q, i] : squarefree(chi_eps)) {
        std::vector<uni_poly> pieces{q};
        for (const auto& l : lcs) {
            uni_poly d = gcd(l, q);
            if (!d.is_constant()) coprime_refine(pieces, d);
        }
        sort_canonical(pieces);
        for (const auto& p : pieces) {
            bool ok = std::all_of(lcs.begin(), lcs.end(), [&](const uni_poly& l) { return coprime(l, p); });
            out.push_back({p, i, ok});
        }
    }
    return out;
}

bool multiplier_criterion(const uni_poly& divisor, const std::vector<uni_poly>& multipliers) {
    return std::all_of(multipliers.begin(), multipliers.end(), [&](const uni_poly& m) { return m.is_constant() || coprime(m, divisor); });
}

} // namespace elim
