// Monomial orders, sparse arithmetic, printing and parsing.
#include "doctest.h"

#include "support.hpp"

using namespace elim;
using namespace elim::test;

TEST_CASE("monomial comparison examples") {
    auto c = zyx();
    monomial x = monomial::var(1), y = monomial::var(0);
    CHECK(mono_cmp(*c, x, y) > 0);
    CHECK(mono_cmp(*c, x, x) == 0);
    CHECK(mono_cmp(*c, x * y, x * x) < 0);
    auto g = ctx_of(field::rationals(), "z", {"y", "x"}, mono_order::grevlex);
    CHECK(mono_cmp(*g, x * y, x * x) < 0);
    CHECK(mono_cmp(*g, y * y * y, x * x) > 0);
    // Same total degree: the one with the smaller power of the smallest variable wins.
    CHECK(mono_cmp(*g, x * x, x * y) > 0);
}

TEST_CASE("elimination order falls back to the x1-degree") {
    auto c = zyx();
    CHECK(term_cmp(P(c, "z^5*y"), P(c, "x")) < 0);
    CHECK(term_cmp(P(c, "z^2*x"), P(c, "z*x")) > 0);
    CHECK(term_cmp(P(c, "z*x"), P(c, "3*z*x + y")) == 0);
}

TEST_CASE("leading entities") {
    auto c = zyx();
    multi_poly f = P(c, "-z^2*(z+1)^3*x + y");
    CHECK(f.lm() == monomial::var(1));
    CHECK(f.lc() == U(c, "-z^2*(z+1)^3"));
    multi_poly e = P(c, "-y^2 + z^2*(z+1)^3*y");
    CHECK(e.lm() == monomial::var(0, 2));
    CHECK(e.lc() == U(c, "-1"));
    multi_poly g = P(c, "z^3 - 2");
    CHECK(g.is_univariate());
    CHECK(g.lm().is_one());
    CHECK(g.lc() == U(c, "z^3 - 2"));
}

TEST_CASE("arithmetic examples") {
    auto c = zyx();
    multi_poly f = P(c, "-x + y + z^2 - 1");
    multi_poly g = P(c, "-z*x + y^3 + 2");
    CHECK((f + (-f)).is_zero());
    CHECK(f.mul_coeff(U(c, "z")) - g == P(c, "-y^3 + z*y + z^3 - z - 2"));
    CHECK(P(c, "(x+y)*(x-y)") == P(c, "x^2 - y^2"));
    auto other = zyx(field::prime(5));
    CHECK_THROWS_AS(P(c, "x") + P(other, "x"), context_mismatch);
}

TEST_CASE("parser errors carry positions") {
    auto c = zyx();
    CHECK_THROWS_AS(P(c, "x + w"), parse_error);
    CHECK_THROWS_AS(P(c, "x / y"), parse_error);
    CHECK_THROWS_AS(P(c, "(x + y"), parse_error);
    CHECK_THROWS_AS(P(c, "x y"), parse_error);
    try {
        P(c, "x + $");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.col == 5);
    }
    CHECK(P(c, "x/2 + 3/4*y") == P(c, "1/2*x + 3/4*y"));
}

TEST_CASE("ideal file parsing") {
    auto in = parse_ideal("# comment\nfield GF 7\nvars z < y < x\norder grevlex\nideal:\nx^2 - y\ny^2 - z\n\nz^3 - 1\n");
    CHECK(in.ctx->k.characteristic() == 7);
    CHECK(in.ctx->x1 == "z");
    CHECK(in.ctx->xt == std::vector<std::string>{"y", "x"});
    CHECK(in.ctx->order == mono_order::grevlex);
    CHECK(in.generators.size() == 3);
    CHECK_THROWS_AS(parse_ideal("field Q\nideal:\nx\n"), parse_error);
    CHECK_THROWS_AS(parse_ideal("field GF 8\nvars z < x\nideal:\nx\n"), parse_error);
    CHECK_THROWS_AS(parse_ideal("field Q\nvars z < x\nideal:\nx +\n"), parse_error);
}

TEST_CASE("property: monomial orders are admissible total orders") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(0, 4);
    for (auto o : {mono_order::lex, mono_order::grevlex}) {
        auto c = ctx_of(field::rationals(), "t", {"a", "b", "c"}, o);
        auto rnd = [&] {
            monomial m;
            for (int i = 0; i < 3; ++i) m.e[i] = static_cast<std::uint16_t>(d(rng));
            return m;
        };
        for (int it = 0; it < 500; ++it) {
            monomial a = rnd(), b = rnd(), m = rnd();
            int ab = mono_cmp(*c, a, b), ba = mono_cmp(*c, b, a);
            CHECK(ab == -ba);
            CHECK((ab == 0) == (a == b));
            if (ab > 0) CHECK(mono_cmp(*c, a * m, b * m) > 0);
            CHECK(mono_cmp(*c, a, monomial{}) >= 0);
        }
    }
}

TEST_CASE("property: leading terms are multiplicative") {
    std::mt19937_64 rng(11);
    for (auto o : {mono_order::lex, mono_order::grevlex}) {
        auto c = ctx_of(field::rationals(), "z", {"y", "x"}, o);
        for (int it = 0; it < 200; ++it) {
            multi_poly f = random_multi(rng, c, 4, 3, 2, 5);
            multi_poly g = random_multi(rng, c, 4, 3, 2, 5);
            if (f.is_zero() || g.is_zero()) continue;
            multi_poly h = f * g;
            CHECK(h.lm() == f.lm() * g.lm());
            CHECK(h.lc() == f.lc() * g.lc());
        }
    }
}

TEST_CASE("property: printing round-trips through the parser") {
    std::mt19937_64 rng(5);
    for (field k : {field::rationals(), field::prime(5)}) {
        auto c = zyx(k);
        for (int it = 0; it < 300; ++it) {
            multi_poly f = random_multi(rng, c, 5, 3, 3, 7);
            if (k.is_rationals()) f = f.mul_coeff(uni_poly::constant(scalar(k, mpq_class(1, 3))));
            CHECK(P(c, to_string(f)) == f);
        }
    }
}
