// Pseudo-division, S-polynomials, pruning rules and the pseudo-eliminant.
#include "doctest.h"

#include <algorithm>

#include "elim/pseudo.hpp"
#include "support.hpp"

using namespace elim;
using namespace elim::test;

namespace {

const char* ex1_f = "-x + y + z^2 - 1";
const char* ex1_g = "-z*x + y^3 + 2";
const char* ex1_h = "x^2 + x - z*y";
const char* ex1_chi = "z^12 - 3*z^10 - 2*z^8 + 4*z^7 + 6*z^6 + 14*z^5 - 15*z^4 - 17*z^3 + z^2 + 9*z + 6";

const char* ex2_f = "-z^2*(z+1)^3*x + y";
const char* ex2_g = "z^4*(z+1)^6*x - y^2";
const char* ex2_h = "-x^2*y + y^3 + z^4*(z-1)^5";
const char* p13 = "z^13 + 9*z^12 + 36*z^11 + 84*z^10 + 126*z^9 + 126*z^8 + 85*z^7 + 31*z^6 + 19*z^5 - 9*z^4 + 4*z^3 - 4*z^2 - 3*z - 1";

bool contains_up_to_constant(const std::vector<multi_poly>& B, const multi_poly& f) {
    return std::any_of(B.begin(), B.end(), [&](const multi_poly& b) { return proportional(b, f); });
}

} // namespace

TEST_CASE("S-polynomial examples") {
    auto yx = ctx_of(field::rationals(), "y", {"x"});
    CHECK(proportional(spoly_pid(P(yx, "y*(x^2+1)"), P(yx, "(y+1)*(2*x+1)")), P(yx, "-y*(y+1)*(x-2)")));
    auto c = zyx();
    CHECK(proportional(spoly_pid(P(c, ex1_f), P(c, ex1_g)), P(c, "-y^3 + z*y + z^3 - z - 2")));
    CHECK(proportional(spoly_pid(P(c, ex2_f), P(c, ex2_g)), P(c, "-y^2 + z^2*(z+1)^3*y")));
    CHECK_THROWS_AS(spoly_pid(P(c, "z"), P(c, "x")), domain_error);
}

TEST_CASE("pseudo-division examples") {
    auto c = zyx();
    multi_poly f = P(c, ex1_f);
    auto d = pseudo_divide(P(c, "x*y + z^2*x - z*y"), {f});
    CHECK(d.lambda.is_constant());
    CHECK(proportional(d.rem, P(c, "y^2 + (2*z^2 - z - 1)*y + z^2*(z^2 - 1)")));

    multi_poly cc = P(c, "(3*z^4 - 4*z^3 - 2*z^2 + z + 1)*y + 2*z^6 - z^5 - 3*z^4 + z^2 + z + 2");
    multi_poly dd = P(c, "y^2 + (2*z^2 - z - 1)*y + z^2*(z^2 - 1)");
    auto r = pseudo_divide(spoly_pid(cc, dd), {cc});
    CHECK(same_up_to_unit(r.lambda, U(c, "3*z^4 - 4*z^3 - 2*z^2 + z + 1")));
    REQUIRE(r.rem.is_univariate());
    CHECK(same_up_to_unit(r.rem.lc(), U(c, ex1_chi)));

    auto same = pseudo_divide(P(c, "y + 1"), {f});
    CHECK(same.lambda.is_one());
    CHECK(same.rem == P(c, "y + 1"));
    CHECK(same.quotients[0].is_zero());
}

TEST_CASE("coprime criterion examples") {
    auto c = zyx();
    CHECK(coprime_skip(P(c, "z*y^2 + 1"), P(c, "(z^2+z)*x")).value() == U(c, "z"));
    CHECK_FALSE(coprime_skip(P(c, "x*y"), P(c, "x")).has_value());
    multi_poly d = P(c, "z^2*(z+1)^3*((z^4*(z+1)^6 - 1)*y + z^4*(z-1)^5)");
    CHECK(coprime_skip(d, P(c, ex2_f)).value() == U(c, "z^2*(z+1)^3"));
}

TEST_CASE("triangular criterion examples") {
    auto c = zyx();
    std::vector<multi_poly> B1{P(c, ex1_f), P(c, ex1_g), P(c, ex1_h)};
    triplet_registry used;
    auto t = triangular_skip(1, 2, B1, used);
    REQUIRE(t.has_value());
    CHECK(t->h == 0);
    CHECK(t->lambda.is_one());
    CHECK(used.contains(0, 1, 2));
    CHECK_FALSE(triangular_skip(2, 1, B1, used).has_value());

    std::vector<multi_poly> B2{P(c, ex2_f), P(c, "-y^2 + z^2*(z+1)^3*y"), P(c, ex2_h)};
    triplet_registry used2;
    auto t2 = triangular_skip(1, 2, B2, used2);
    REQUIRE(t2.has_value());
    CHECK(t2->h == 0);
    CHECK(same_up_to_unit(t2->lambda, U(c, "z^2*(z+1)^3")));

    std::vector<multi_poly> B3{P(c, "y"), P(c, "x")};
    triplet_registry used3;
    CHECK_FALSE(triangular_skip(0, 1, B3, used3).has_value());
}

TEST_CASE("golden: simple pseudo-eliminant example") {
    auto c = zyx();
    auto out = compute_pseudo_eliminant({P(c, ex1_f), P(c, ex1_g), P(c, ex1_h)});
    CHECK_FALSE(out.inconsistent);
    CHECK(out.chi_eps == U(c, ex1_chi));
    REQUIRE(out.multipliers.size() == 1);
    CHECK(same_up_to_unit(out.multipliers[0], U(c, "3*z^4 - 4*z^3 - 2*z^2 + z + 1")));
    CHECK(out.basis.size() == 6);
    for (const char* s : {"(3*z^4 - 4*z^3 - 2*z^2 + z + 1)*y + 2*z^6 - z^5 - 3*z^4 + z^2 + z + 2",
                          "y^2 + (2*z^2 - z - 1)*y + z^2*(z^2 - 1)", "-y^3 + z*y + z^3 - z - 2", ex1_f, ex1_g, ex1_h}) {
        CHECK(contains_up_to_constant(out.basis, P(c, s)));
    }
    CHECK(out.stats.triangle_skipped == 2);
}

TEST_CASE("golden: multipliers-count example") {
    auto c = ctx_of(field::rationals(), "y", {"x"});
    auto out = compute_pseudo_eliminant({P(c, "y*(x^2+1)"), P(c, "(y+1)*(2*x+1)")});
    CHECK(out.chi_eps == U(c, "y*(y+1)"));
    CHECK(out.multipliers.empty());
    CHECK(out.basis.size() == 2);
    CHECK(contains_up_to_constant(out.basis, P(c, "y*(x^2+1)")));
    CHECK(contains_up_to_constant(out.basis, P(c, "(y+1)*(2*x+1)")));
}

TEST_CASE("golden: full modular example pseudo-eliminant") {
    auto c = zyx();
    auto out = compute_pseudo_eliminant({P(c, ex2_f), P(c, ex2_g), P(c, ex2_h)});
    CHECK(out.chi_eps == U(c, std::string("(z-1)^5*z^8*(z+1)^3*(") + p13 + ")"));
    REQUIRE(out.multipliers.size() == 2);
    CHECK(std::find(out.multipliers.begin(), out.multipliers.end(), U(c, "z^2*(z+1)^3")) != out.multipliers.end());
    CHECK(std::find(out.multipliers.begin(), out.multipliers.end(), U(c, "z^4*(z+1)^6 - 1")) != out.multipliers.end());
    CHECK(contains_up_to_constant(out.basis, P(c, "-y^2 + z^2*(z+1)^3*y")));
    CHECK(contains_up_to_constant(out.basis, P(c, "z^2*(z+1)^3*((z^4*(z+1)^6 - 1)*y + z^4*(z-1)^5)")));
}

TEST_CASE("inconsistent and positive-dimensional inputs") {
    auto c = zyx();
    auto out = compute_pseudo_eliminant({P(c, "x - 1"), P(c, "x - 2")});
    CHECK(out.inconsistent);
    CHECK(out.chi_eps.is_one());
    CHECK_THROWS_AS(compute_pseudo_eliminant({P(c, "x - y")}), not_zero_dimensional);
    auto u = compute_pseudo_eliminant({P(c, "x^2 - 1"), P(c, "y - z"), P(c, "z^2 - 4")});
    CHECK(u.chi_eps == U(c, "z^2 - 4"));
}

TEST_CASE("coprime univariate remainders make the ideal inconsistent") {
    auto c = zyx();
    for (auto F : {std::vector<multi_poly>{P(c, "x"), P(c, "z - 1"), P(c, "z - 2")},
                   std::vector<multi_poly>{P(c, "x*y - z"), P(c, "y - 1"), P(c, "x - z^2 + 1"), P(c, "z^2 - 4")}}) {
        auto out = compute_pseudo_eliminant(F);
        CHECK(out.inconsistent);
        CHECK(out.chi_eps.is_one());
    }
}
