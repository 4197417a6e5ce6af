// gcd-division, the normalization ladder, assembled eliminants, membership and normal forms.
#include "doctest.h"

#include <algorithm>
#include <random>

#include "elim/assembly.hpp"
#include "support.hpp"

using namespace elim;
using namespace elim::test;

namespace {

const char* ex1_f = "-x + y + z^2 - 1";
const char* ex1_g = "-z*x + y^3 + 2";
const char* ex1_h = "x^2 + x - z*y";
const char* ex1_c = "(3*z^4 - 4*z^3 - 2*z^2 + z + 1)*y + 2*z^6 - z^5 - 3*z^4 + z^2 + z + 2";
const char* ex1_b = "(3*z^4 - 4*z^3 - 2*z^2 + z + 1)*x - z^6 + 3*z^5 + 2*z^4 - 5*z^3 - 2*z^2 + 2*z + 3";

const char* ex2_f = "-z^2*(z+1)^3*x + y";
const char* ex2_g = "z^4*(z+1)^6*x - y^2";
const char* ex2_h = "-x^2*y + y^3 + z^4*(z-1)^5";
const char* p13 = "z^13 + 9*z^12 + 36*z^11 + 84*z^10 + 126*z^9 + 126*z^8 + 85*z^7 + 31*z^6 + 19*z^5 - 9*z^4 + 4*z^3 - 4*z^2 - 3*z - 1";

std::vector<multi_poly> gens(const ctx_ptr& c, std::initializer_list<const char*> s) {
    std::vector<multi_poly> out;
    for (const char* x : s) out.push_back(P(c, x));
    return out;
}

// Scales an element whose leading coefficient is a unit so that it becomes 1.
multi_poly_q unit_normalized(const multi_poly_q& f) { return f.mul_coeff(f.lc().inverse()); }

const component* find_component(const decomposition& d, const uni_poly& modulus) {
    for (const auto& c : d.components) {
        if (c.modulus == modulus) return &c;
    }
    return nullptr;
}

} // namespace

TEST_CASE("gcd-division examples") {
    auto c = zyx();
    uni_poly chi = U(c, "z^12 - 3*z^10 - 2*z^8 + 4*z^7 + 6*z^6 + 14*z^5 - 15*z^4 - 17*z^3 + z^2 + 9*z + 6");
    auto ring = make_pqr(chi);
    auto cq = project(P(c, ex1_c), ring);
    auto d = gcd_reduce(project(P(c, ex1_f), ring), {cq}, ring);
    CHECK(d.lambda.is_one());
    CHECK(unit_normalized(d.rem) == unit_normalized(project(P(c, ex1_b), ring)));
    CHECK(gcd_reduce(cq, {cq}, ring).rem.is_zero());
    auto plain = gcd_reduce(project(P(c, "z + 1"), ring), {cq}, ring);
    CHECK(plain.rem == project(P(c, "z + 1"), ring));

    auto r8 = make_pqr(U(c, "z^8"));
    auto b = project(P(c, "z^2*y"), r8);
    auto r = gcd_reduce(project(P(c, "(z^3 + z + 1)*y"), r8), {b}, r8);
    CHECK(r.rem == project(P(c, "(z + 1)*y"), r8));
    CHECK(is_gcd_reduced(r.rem, {b}));
}

TEST_CASE("golden: simple example assembles to the classical eliminant with the unique reduced basis") {
    auto c = zyx();
    auto res = run_pipeline(gens(c, {ex1_f, ex1_g, ex1_h}));
    const auto& dec = res.dec;
    uni_poly chi = U(c, "z^12 - 3*z^10 - 2*z^8 + 4*z^7 + 6*z^6 + 14*z^5 - 15*z^4 - 17*z^3 + z^2 + 9*z + 6");
    CHECK(dec.chi == chi);
    REQUIRE(dec.components.size() == 1);
    const auto& comp = dec.components[0];
    CHECK(comp.kind == component_kind::compatible);
    REQUIRE(comp.basis.size() == 2);
    CHECK(comp.basis[0] == unit_normalized(project(P(c, ex1_c), comp.ring)));
    CHECK(comp.basis[1] == unit_normalized(project(P(c, ex1_b), comp.ring)));

    auto lifted = lift_component_basis(comp);
    REQUIRE(lifted.size() == 3);
    CHECK(lifted[2] == multi_poly::constant(c, chi));

    for (const char* g : {ex1_f, ex1_g, ex1_h}) CHECK(is_member(P(c, g), dec));
    CHECK_FALSE(is_member(P(c, "1"), dec));
    CHECK(is_member(multi_poly::constant(c, chi), dec));

    auto nx = normal_form(P(c, "x"), dec);
    CHECK_FALSE(nx.combined.is_zero());
    CHECK(normal_form(nx.combined, dec).combined == nx.combined);
    CHECK(normal_form(multi_poly::constant(c, chi + uni_poly::constant(c->k, 1)), dec).combined == P(c, "1"));
}

TEST_CASE("golden: full modular example decomposition") {
    auto c = zyx();
    auto res = run_pipeline(gens(c, {ex2_f, ex2_g, ex2_h}));
    const auto& dec = res.dec;
    uni_poly cp = U(c, std::string("(z-1)^5*(") + p13 + ")");
    CHECK(dec.chi == cp * U(c, "z^6"));
    REQUIRE(dec.components.size() == 2);
    REQUIRE(dec.trivial.size() == 1);
    CHECK(dec.trivial[0].divisor == U(c, "(z+1)^3"));

    const component* a = find_component(dec, cp);
    REQUIRE(a);
    REQUIRE(a->basis.size() == 2);
    CHECK(a->basis[0] == unit_normalized(project(P(c, "z^2*(z+1)^3*((z^4*(z+1)^6 - 1)*y + z^4*(z-1)^5)"), a->ring)));
    CHECK(a->basis[1] == unit_normalized(project(P(c, "z^4*(z+1)^3*((z+1)^3*(z^4*(z+1)^6 - 1)*x + z^2*(z-1)^5)"), a->ring)));

    const component* b = find_component(dec, U(c, "z^6"));
    REQUIRE(b);
    CHECK(b->divisor == U(c, "z^8"));
    std::vector<multi_poly_q> expected;
    for (const char* s : {"z^2*(z+1)^3*y", "y^2", "z^2*(z+1)^3*x - y", "x^2*y - z^4*(z-1)^5"}) expected.push_back(project(P(c, s), b->ring));
    CHECK(b->basis == make_reduced(expected));
    REQUIRE(b->basis.size() == 4);
    CHECK(to_string(b->basis[0]) == "z^2*y");
    CHECK(to_string(b->basis[1]) == "y^2");
    for (const auto& p : expected) CHECK(gcd_reduce(p, b->basis, b->ring).rem.is_zero());
    for (const char* g : {ex2_f, ex2_g, ex2_h}) CHECK(is_member(P(c, g), dec));
}

TEST_CASE("inconsistent ideal") {
    auto c = zyx();
    auto res = run_pipeline(gens(c, {"x - 1", "x - 2"}));
    CHECK(res.dec.inconsistent);
    CHECK(res.dec.chi.is_one());
    CHECK(is_member(P(c, "1"), res.dec));
}

TEST_CASE("property: reduced bases do not depend on element order") {
    std::mt19937_64 rng(3);
    auto c = zyx();
    for (const auto& F : {gens(c, {ex1_f, ex1_g, ex1_h}), gens(c, {ex2_f, ex2_g, ex2_h})}) {
        auto res = run_pipeline(F);
        auto pb = res.pseudo.basis;
        for (const auto& comp : res.dec.components) {
            std::vector<multi_poly_q> B;
            for (const auto& b : comp.kind == component_kind::compatible ? pb : std::vector<multi_poly>{}) B.push_back(project(b, comp.ring));
            if (B.empty()) B = comp.basis;
            auto once = make_reduced(B);
            std::shuffle(B.begin(), B.end(), rng);
            std::reverse(B.begin(), B.end());
            CHECK(make_reduced(B) == once);
            CHECK(make_reduced(once) == once);
        }
    }
}
