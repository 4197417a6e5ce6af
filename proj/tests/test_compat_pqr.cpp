// Compatible-part analysis, quotient-ring arithmetic and the proper eliminant.
#include "doctest.h"

#include <random>

#include "elim/compat.hpp"
#include "elim/pqr.hpp"
#include "support.hpp"

using namespace elim;
using namespace elim::test;

namespace {

const char* ex2_f = "-z^2*(z+1)^3*x + y";
const char* ex2_g = "z^4*(z+1)^6*x - y^2";
const char* ex2_h = "-x^2*y + y^3 + z^4*(z-1)^5";
const char* p13 = "z^13 + 9*z^12 + 36*z^11 + 84*z^10 + 126*z^9 + 126*z^8 + 85*z^7 + 31*z^6 + 19*z^5 - 9*z^4 + 4*z^3 - 4*z^2 - 3*z - 1";

pqr_elem E(const pqr_ptr& r, const ctx_ptr& c, const std::string& s) { return pqr_elem(r, U(c, s)); }
multi_poly_q Q(const pqr_ptr& r, const ctx_ptr& c, const std::string& s) { return project(P(c, s), r); }

std::vector<multi_poly_q> ex2_projected(const pqr_ptr& r, const ctx_ptr& c) {
    return {Q(r, c, ex2_f), Q(r, c, ex2_g), Q(r, c, ex2_h)};
}

} // namespace

TEST_CASE("compatible split examples") {
    auto c = zyx();
    uni_poly chi = U(c, std::string("(z-1)^5*z^8*(z+1)^3*(") + p13 + ")");
    auto s = compatible_split(chi, {U(c, "z^2*(z+1)^3"), U(c, "z^4*(z+1)^6 - 1")});
    CHECK(s.cp == U(c, std::string("(z-1)^5*(") + p13 + ")"));
    auto cd = composite_divisors(s);
    REQUIRE(cd.size() == 2);
    CHECK(cd[0] == U(c, "(z+1)^3"));
    CHECK(cd[1] == U(c, "z^8"));

    auto t = compatible_split(U(c, "z^3*(z-1)"), {U(c, "z")});
    CHECK(t.cp == U(c, "z - 1"));
    REQUIRE(t.omega.count(3));
    CHECK(t.omega[3] == std::vector<uni_poly>{U(c, "z")});

    auto full = compatible_split(U(c, "z^2 - 4"), {U(c, "z + 5"), U(c, "3")});
    CHECK(full.cp == U(c, "z^2 - 4"));
    CHECK(full.omega.empty());
    CHECK_THROWS_AS(compatible_split(U(c, "7"), {}), domain_error);
}

TEST_CASE("compatible split of the full modular pseudo-eliminant with final-step multipliers") {
    auto c = zyx();
    auto out = compute_pseudo_eliminant({P(c, ex2_f), P(c, ex2_g), P(c, ex2_h)});
    auto s = compatible_split(out.chi_eps, all_multipliers(out));
    CHECK(s.cp == U(c, std::string("(z-1)^5*(") + p13 + ")"));
    CHECK(composite_divisors(s) == std::vector<uni_poly>{U(c, "(z+1)^3"), U(c, "z^8")});
}

TEST_CASE("coefficient and multiplier criteria") {
    auto c = ctx_of(field::rationals(), "y", {"x"});
    std::vector<multi_poly> B{P(c, "y*(x^2+1)"), P(c, "(y+1)*(2*x+1)")};
    auto v = lc_compatibility_check(U(c, "y*(y+1)"), B);
    REQUIRE(v.size() == 2);
    for (const auto& f : v) {
        CHECK_FALSE(f.compatible);
        CHECK(multiplier_criterion(f.factor, {}));
    }
    auto k = zyx();
    auto w = lc_compatibility_check(U(k, "z^2 - 4"), {P(k, "x - 1"), P(k, "2*y + z")});
    REQUIRE(w.size() == 1);
    CHECK(w[0].compatible);
    CHECK_FALSE(multiplier_criterion(U(k, "z"), {U(k, "z^2 + z")}));
}

TEST_CASE("property: compatible split reconstructs and screens multipliers") {
    std::mt19937_64 rng(7);
    const field k = field::rationals();
    for (int it = 0; it < 60; ++it) {
        uni_poly chi = uni_poly::constant(k, 1);
        std::vector<uni_poly> parts;
        for (int j = 0; j < 3; ++j) {
            uni_poly p = random_monic(rng, k, 1 + static_cast<int>(rng() % 2), 4);
            parts.push_back(p);
            chi *= pow(p, 1 + static_cast<unsigned>(rng() % 3));
        }
        std::vector<uni_poly> lam;
        for (int j = 0; j < 3; ++j) lam.push_back(parts[rng() % 3] * random_monic(rng, k, 1, 5));
        auto s = compatible_split(chi, lam);
        uni_poly prod = s.cp;
        auto cd = composite_divisors(s);
        for (const auto& d : cd) prod *= d;
        CHECK(prod == chi.monic());
        for (const auto& l : lam) CHECK(gcd(l, s.cp).is_one());
        for (std::size_t a = 0; a < cd.size(); ++a) {
            CHECK(coprime(cd[a], s.cp));
            for (std::size_t b = a + 1; b < cd.size(); ++b) CHECK(coprime(cd[a], cd[b]));
        }
    }
}

TEST_CASE("quotient ring element examples") {
    auto c = zyx();
    auto r8 = make_pqr(U(c, "z^8"));
    CHECK(E(r8, c, "z^8").is_zero());
    CHECK(E(r8, c, "z^9 + z") == E(r8, c, "z"));
    CHECK(E(r8, c, "1").is_unit());
    CHECK(E(r8, c, "1").inverse().is_one());
    auto a = E(r8, c, "z + 1");
    REQUIRE(a.is_unit());
    CHECK((a * a.inverse()).is_one());
    CHECK_FALSE(E(r8, c, "z").is_unit());
    CHECK_THROWS_AS(E(r8, c, "0").inverse(), division_by_zero);

    CHECK(E(r8, c, "-z^6*(6*z+1)").standard_lift() == U(c, "z^6"));
    CHECK(E(r8, c, "z^4*(z+1)").standard_lift() == U(c, "z^4"));
    CHECK(E(r8, c, "3*z + 3").standard_lift().is_one());
    CHECK(lcm_q(E(r8, c, "z^5"), E(r8, c, "z^4")) == E(r8, c, "z^5"));
    CHECK(gcd_q(E(r8, c, "z^3*(z+2)"), E(r8, c, "0")).lift() == U(c, "z^3*(z+2)").monic());

    auto r6 = make_pqr(U(c, "z^6"));
    auto m = multi_ext_gcd({E(r6, c, "z^2"), E(r6, c, "z^3")});
    CHECK(m.d == E(r6, c, "z^2"));
    REQUIRE(m.coeffs.size() == 2);
    CHECK(m.coeffs[0] * E(r6, c, "z^2") + m.coeffs[1] * E(r6, c, "z^3") == m.d);
    CHECK_THROWS_AS(multi_ext_gcd({E(r6, c, "0")}), domain_error);
    CHECK_THROWS_AS(make_pqr(U(c, "5")), domain_error);

    auto r3 = make_pqr(U(c, "(z+1)^3"));
    CHECK_THROWS_AS(E(r8, c, "z") + E(r3, c, "z"), context_mismatch);
    CHECK(to_string(Q(r3, c, ex2_f)) == "y");
}

TEST_CASE("property: normalizer yields the standard factor") {
    std::mt19937_64 rng(11);
    for (const field& k : {field::rationals(), field::prime(7)}) {
        for (int it = 0; it < 80; ++it) {
            uni_poly a = random_monic(rng, k, 1, 3), b = random_monic(rng, k, 2, 3);
            uni_poly q = pow(a, 1 + static_cast<unsigned>(rng() % 3)) * b;
            if (rng() % 2) q *= a;
            auto ring = make_pqr(q);
            pqr_elem x(ring, random_uni(rng, k, 3, 5) * pow(a, static_cast<unsigned>(rng() % 3)));
            if (x.is_zero()) continue;
            pqr_elem w = x.normalizer();
            CHECK(w.is_unit());
            CHECK(w * x == x.standard_factor());
            CHECK(divides(x.standard_lift(), q));
            pqr_elem y(ring, random_uni(rng, k, 5, 5));
            CHECK(pqr_elem(ring, x.lift() + y.lift()) == x + y);
            CHECK(pqr_elem(ring, x.lift() * y.lift()) == x * y);
        }
    }
}

TEST_CASE("quotient-ring S-polynomials and proper division") {
    auto c = zyx();
    auto r8 = make_pqr(U(c, "z^8"));
    auto d = Q(r8, c, "z^2*((-9*z^5 - z^4 + z^3 + 3*z^2 + 3*z + 1)*y - 2*z^5 + z^4)");
    auto e = Q(r8, c, "-y^2 + z^2*(z+1)^3*y");
    auto s = spoly_pqr(d, e);
    CHECK(normalize_scalar(s) == normalize_scalar(Q(r8, c, "z^4*(18*z^3 + 16*z^2 + 6*z + 1)*y")));
    auto pd = proper_divide(s, {d}, r8);
    CHECK(pd.lambda.is_unit());
    CHECK(pd.rem.is_zero());

    auto f = Q(r8, c, ex2_f);
    auto chain = proper_divide(spoly_pqr(d, f), {d, e, f}, r8);
    REQUIRE(chain.rem.is_univariate());
    CHECK(chain.rem.lc().standard_lift() == U(c, "z^6"));
    CHECK(chain.rem.lc().normalizer() * chain.rem.lc() == E(r8, c, "z^6"));

    auto r6 = make_pqr(U(c, "z^6"));
    CHECK(normalize_scalar(spoly_modulus(Q(r6, c, ex2_f), r6)) == Q(r6, c, "z^4*y"));
    CHECK_THROWS_AS(spoly_pqr(f, E(r8, c, "1")), domain_error);

    auto plain = proper_divide(Q(r8, c, "y + 1"), {f}, r8);
    CHECK(plain.lambda.is_one());
    CHECK(plain.rem == Q(r8, c, "y + 1"));
}

TEST_CASE("golden: proper eliminants of the full modular example") {
    auto c = zyx();
    auto r8 = make_pqr(U(c, "z^8"));
    auto o8 = compute_proper_eliminant(ex2_projected(r8, c), r8);
    CHECK(o8.e_q == E(r8, c, "z^6"));
    CHECK(o8.basis_ring->q == U(c, "z^6"));
    CHECK(count_open_pairs(o8) == 0);

    strategy_config no_rebase;
    no_rebase.base_change = false;
    auto o8b = compute_proper_eliminant(ex2_projected(r8, c), r8, no_rebase);
    CHECK(o8b.e_q == E(r8, c, "z^6"));
    CHECK(count_open_pairs(o8b) == 0);

    auto r3 = make_pqr(U(c, "(z+1)^3"));
    auto o3 = compute_proper_eliminant(ex2_projected(r3, c), r3);
    CHECK(o3.inconsistent());
    CHECK(o3.e_q.is_one());

    auto r2 = make_pqr(U(c, "z^2"));
    auto oy = compute_proper_eliminant({Q(r2, c, "y")}, r2);
    CHECK(oy.e_q.is_zero());
    REQUIRE(oy.basis.size() == 1);
    CHECK(oy.basis[0] == Q(r2, c, "y"));
    CHECK(count_open_pairs(oy) == 0);
}

TEST_CASE("property: proper division identity and closure on random inputs") {
    std::mt19937_64 rng(5);
    const field k = field::prime(101);
    auto c = ctx_of(k, "z", {"y", "x"});
    for (int it = 0; it < 40; ++it) {
        auto ring = make_pqr(pow(random_monic(rng, k, 1, 9), 2 + static_cast<unsigned>(rng() % 2)) * random_monic(rng, k, 1, 9));
        std::vector<multi_poly_q> B;
        for (int j = 0; j < 3; ++j) {
            auto b = project(random_multi(rng, c, 3, 2, 2, 9), ring);
            if (!b.is_univariate()) B.push_back(b);
        }
        if (B.empty()) continue;
        auto f = project(random_multi(rng, c, 4, 3, 2, 9), ring);
        auto d = proper_divide(f, B, ring);
        CHECK(d.lambda.is_unit());
        multi_poly_q acc = f.mul_coeff(d.lambda) - d.rem;
        for (std::size_t j = 0; j < B.size(); ++j) acc -= d.quotients[j] * B[j];
        CHECK(acc.is_zero());
    }
}
