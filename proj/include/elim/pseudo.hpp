// pseudo.hpp - pseudo-division over the PID K[x1] and the pseudo-eliminant computation.
#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "elim/multipoly.hpp"

namespace elim {

// Pair-pruning toggles shared by the pseudo and proper engines.
struct strategy_config {
    bool coprime_skip = true;
    bool triangle_skip = true;
    bool chi_delta = true;   // drop multipliers coprime to the temporary eliminant / e
    bool base_change = true; // proper engine: move to K[x1]/e as soon as a non-unit e appears
};

struct pseudo_division {
    uni_poly lambda;
    std::vector<multi_poly> quotients; // empty when quotient tracking is off
    multi_poly rem;
};

// S-polynomial over K[x1]. When g lies in K[x1] this is the degenerate form (m/lc f)(f - lt f).
multi_poly spoly_pid(const multi_poly& f, const multi_poly& g);

// Divides f by B, reducing the largest reducible term first with the first b in B whose
// leading monomial divides it. Constant interim multipliers are absorbed into the quotient,
// so lambda only collects non-constant factors.
pseudo_division pseudo_divide(const multi_poly& f, const std::vector<multi_poly>& B, bool track_quotients = true);

// When lm f and lm g are coprime returns gcd(lc f, lc g), otherwise nothing.
std::optional<uni_poly> coprime_skip(const multi_poly& f, const multi_poly& g);

// lc(h) / gcd(lcm(lc f, lc g), lc h), made monic.
uni_poly triangle_multiplier(const multi_poly& f, const multi_poly& g, const multi_poly& h);

// Unordered triplets of basis indices already used for a triangular identity.
class triplet_registry {
public:
    bool contains(std::size_t a, std::size_t b, std::size_t c) const { return used_.count(key(a, b, c)) > 0; }
    void add(std::size_t a, std::size_t b, std::size_t c) { used_.insert(key(a, b, c)); }

private:
    static std::array<std::size_t, 3> key(std::size_t a, std::size_t b, std::size_t c);
    std::set<std::array<std::size_t, 3>> used_;
};

struct triangle_choice {
    std::size_t h;
    uni_poly lambda;
};

// Looks for h in B (not f or g) with lm h | lcm(lm f, lm g) and an unused triplet. Among the
// candidates accepted by `eligible` picks the multiplier with the smallest squarefree part, then
// the smallest degree, then the first in B. The chosen triplet is recorded.
std::optional<triangle_choice> triangular_skip(std::size_t f, std::size_t g, const std::vector<multi_poly>& B, triplet_registry& used,
                                               const std::function<bool(std::size_t)>& eligible = {});

struct pseudo_stats {
    std::size_t pairs = 0;
    std::size_t reduced = 0;
    std::size_t coprime_skipped = 0;
    std::size_t triangle_skipped = 0;
};

struct pseudo_outcome {
    bool inconsistent = false;       // some remainder was a nonzero constant: the ideal is the whole ring
    uni_poly chi_eps;                // monic pseudo-eliminant (1 when inconsistent)
    std::vector<multi_poly> basis;   // pseudo-basis, sorted by increasing leading term
    std::vector<uni_poly> multipliers;    // monic non-constant multipliers from pair processing
    std::vector<uni_poly> lc_multipliers; // monic non-constant gcd(lc b, chi_eps), b in the basis
    pseudo_stats stats;
};

// Throws not_zero_dimensional if no univariate remainder ever appears.
pseudo_outcome compute_pseudo_eliminant(const std::vector<multi_poly>& F, const strategy_config& strategy = {});

// Both multiplier sets together; compatible-part analysis uses this.
std::vector<uni_poly> all_multipliers(const pseudo_outcome& out);

} // namespace elim
