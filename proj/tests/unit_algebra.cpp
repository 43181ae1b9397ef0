#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "igp2h10/multipoly.hpp"
#include "igp2h10/polydiv.hpp"
#include "igp2h10/ring.hpp"

using namespace igp2h10;

namespace {

RegistryPtr reg_q(std::initializer_list<std::string> names) {
    auto reg = make_registry(CoeffField::rationals());
    for (const auto& n : names) reg->add(n);
    return reg;
}

RegistryPtr reg_fp(long p, std::initializer_list<std::string> names) {
    auto reg = make_registry(CoeffField::prime(BigInt(p)));
    for (const auto& n : names) reg->add(n);
    return reg;
}

// independent long-division oracle over dense univariate coefficient vectors;
// kept deliberately separate from the multivariate reduction path it checks
std::vector<Scalar> dense_rem(std::vector<Scalar> p, const std::vector<Scalar>& f, const CoeffField& fld) {
    int d = static_cast<int>(f.size()) - 1;
    while (static_cast<int>(p.size()) > d) {
        Scalar lead = p.back();
        int shift = static_cast<int>(p.size()) - 1 - d;
        if (!lead.is_zero())
            for (int k = 0; k <= d; ++k) {
                size_t at = static_cast<size_t>(k + shift);
                p[at] = fld.sub(p[at], fld.mul(lead, f[static_cast<size_t>(k)]));
            }
        p.pop_back();
    }
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

std::vector<Scalar> dense_compose_then_rem(const std::vector<Scalar>& f, const std::vector<Scalar>& h,
                                           const CoeffField& fld) {
    // f(h(x)) by naive expansion, then remainder mod f
    std::vector<Scalar> acc{Scalar(0)};
    std::vector<Scalar> hp{Scalar(1)};
    auto mul = [&](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
        std::vector<Scalar> r(a.size() + b.size() - 1, Scalar(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] = fld.add(r[i + j], fld.mul(a[i], b[j]));
        return r;
    };
    for (size_t k = 0; k < f.size(); ++k) {
        if (acc.size() < hp.size()) acc.resize(hp.size(), Scalar(0));
        for (size_t i = 0; i < hp.size(); ++i) acc[i] = fld.add(acc[i], fld.mul(f[k], hp[i]));
        if (k + 1 < f.size()) hp = mul(hp, h);
    }
    return dense_rem(acc, f, fld);
}

MultiPoly rand_poly(const RegistryPtr& reg, std::mt19937& rng, int maxdeg, int maxterms) {
    std::uniform_int_distribution<int> dt(1, maxterms), de(0, maxdeg), dc(-4, 4);
    std::vector<MultiPoly::Term> terms;
    int nt = dt(rng);
    for (int t = 0; t < nt; ++t) {
        Monomial m;
        for (uint32_t v = 0; v < reg->size(); ++v) {
            int e = de(rng);
            if (e > 0) m = Monomial::mul(m, Monomial::var(v, static_cast<uint32_t>(e)));
        }
        terms.push_back(MultiPoly::Term{m, Scalar(dc(rng))});
    }
    return MultiPoly::from_terms(reg, std::move(terms));
}

} // namespace

TEST_CASE("scalar canonical form") {
    CoeffField q = CoeffField::rationals();
    Scalar s = q.canon(Scalar(BigInt(4), BigInt(-6)));
    REQUIRE(s.num == -2);
    REQUIRE(s.den == 3);
    CoeffField f5 = CoeffField::prime(5);
    REQUIRE(f5.canon(Scalar(-1)).num == 4);
    REQUIRE(f5.inv(Scalar(2)).num == 3);
    REQUIRE(f5.canon(Scalar(BigInt(1), BigInt(2))).num == 3); // 1/2 = 3 mod 5
}

TEST_CASE("poly_arith basics") {
    auto reg = reg_q({"x", "y"});
    MultiPoly x = MultiPoly::var(reg, "x");
    MultiPoly one = MultiPoly::constant(reg, Scalar(1));

    REQUIRE((x + (-x)).is_zero());
    REQUIRE(poly_text((x + one) * (x - one)) == "x^2 - 1");

    auto reg2 = reg_fp(2, {"x"});
    MultiPoly x2 = MultiPoly::var(reg2, "x");
    MultiPoly one2 = MultiPoly::constant(reg2, Scalar(1));
    REQUIRE(poly_text((x2 + one2) * (x2 + one2)) == "x^2 + 1");
}

TEST_CASE("registry mismatch is a structural error") {
    auto ra = reg_q({"x"});
    auto rb = reg_q({"x"});
    MultiPoly a = MultiPoly::var(ra, "x");
    MultiPoly b = MultiPoly::var(rb, "x");
    REQUIRE_THROWS_AS(a + b, structural_error);
}

TEST_CASE("substitute") {
    auto reg = reg_q({"x", "y", "t"});
    MultiPoly x = MultiPoly::var(reg, "x");
    MultiPoly y = MultiPoly::var(reg, "y");
    MultiPoly t = MultiPoly::var(reg, "t");
    MultiPoly one = MultiPoly::constant(reg, Scalar(1));

    std::map<std::string, MultiPoly> b1{{"x", t + one}};
    // binomial expansion; y precedes t in the registry, hence the term order
    REQUIRE(poly_text(substitute(x * x + y, b1)) == "t^2 + y + 2*t + 1");

    std::map<std::string, MultiPoly> b2{{"x", x}};
    REQUIRE(substitute(x, b2) == x);

    std::map<std::string, MultiPoly> b3{{"x", MultiPoly::zero(reg)}};
    REQUIRE(substitute(x * y, b3).is_zero());

    std::map<std::string, MultiPoly> bad{{"zz", one}};
    REQUIRE_THROWS_AS(substitute(x, bad), structural_error);
}

TEST_CASE("graded-lex canonical order") {
    auto reg = reg_q({"x", "y"});
    MultiPoly x = MultiPoly::var(reg, "x");
    MultiPoly y = MultiPoly::var(reg, "y");
    MultiPoly p = y * y + x * x * x + x * y + MultiPoly::constant(reg, Scalar(7)) + x;
    REQUIRE(poly_text(p) == "x^3 + x*y + y^2 + x + 7");
    REQUIRE(parse_poly(reg, poly_text(p)) == p);
}

TEST_CASE("reduce_mod_monic direct divisions") {
    auto reg = reg_q({"x"});
    MultiPoly x = MultiPoly::var(reg, "x");
    MultiPoly two = MultiPoly::constant(reg, Scalar(2));
    MultiPoly f = x * x - two;

    REQUIRE(poly_text(reduce_mod_monic(x * x, f, "x")) == "2");
    REQUIRE(poly_text(reduce_mod_monic(x * x * x * x, f, "x")) == "4");

    MultiPoly f3 = x * x * x - MultiPoly::constant(reg, Scalar(3)) * x - MultiPoly::constant(reg, Scalar(1));
    REQUIRE(poly_text(reduce_mod_monic(x * x * x, f3, "x")) == "3*x + 1");

    MultiPoly notmonic = two * x * x - two;
    REQUIRE_THROWS_AS(reduce_mod_monic(x, notmonic, "x"), contract_violation);
}

TEST_CASE("division identity on random instances") {
    std::mt19937 rng(12021);
    for (int mode = 0; mode < 2; ++mode) {
        auto reg = mode == 0 ? reg_q({"x", "u"}) : reg_fp(5, {"x", "u"});
        MultiPoly x = MultiPoly::var(reg, "x");
        for (int it = 0; it < 60; ++it) {
            MultiPoly p = rand_poly(reg, rng, 5, 6);
            int d = 1 + static_cast<int>(rng() % 3);
            MultiPoly f = MultiPoly::var(reg, "x", static_cast<uint32_t>(d)) + rand_poly(reg, rng, d - 1, 3);
            // keep modulus degree in x exactly d and monic
            auto dm = divmod_monic(p, f, "x");
            REQUIRE(dm.quotient * f + dm.remainder == p);
            REQUIRE(dm.remainder.degree_in(reg->index_of("x")) < d);
        }
    }
}

TEST_CASE("compose_mod against dense long-division oracle") {
    auto reg = reg_q({"x"});
    MultiPoly x = MultiPoly::var(reg, "x");
    MultiPoly one = MultiPoly::constant(reg, Scalar(1));
    MultiPoly two = MultiPoly::constant(reg, Scalar(2));
    MultiPoly three = MultiPoly::constant(reg, Scalar(3));

    SECTION("conjugate of sqrt2 is -sqrt2") {
        auto out = compose_mod(x * x - two, -x, "x");
        REQUIRE(out.size() == 2);
        REQUIRE(out[0].is_zero());
        REQUIRE(out[1].is_zero());
    }
    SECTION("f(x+1) mod x^2-2 = 2x+1") {
        auto out = compose_mod(x * x - two, x + one, "x");
        REQUIRE(poly_text(out[0]) == "1");
        REQUIRE(poly_text(out[1]) == "2");
    }
    SECTION("x^2-2 against the two cyclic cubics") {
        CoeffField fld = CoeffField::rationals();
        // oracle first: h = x^2-2 maps roots to roots for x^3-3x+1, not x^3-3x-1
        std::vector<Scalar> h{Scalar(-2), Scalar(0), Scalar(1)};
        std::vector<Scalar> fplus{Scalar(1), Scalar(-3), Scalar(0), Scalar(1)};
        std::vector<Scalar> fminus{Scalar(-1), Scalar(-3), Scalar(0), Scalar(1)};
        REQUIRE(dense_compose_then_rem(fplus, h, fld).empty());
        auto rm = dense_compose_then_rem(fminus, h, fld);
        REQUIRE(rm.size() == 1);
        REQUIRE(rm[0].num == -2);

        MultiPoly fp3 = x * x * x - three * x + one;
        auto out = compose_mod(fp3, x * x - two, "x");
        for (const auto& c : out) REQUIRE(c.is_zero());

        MultiPoly fm3 = x * x * x - three * x - one;
        auto out2 = compose_mod(fm3, x * x - two, "x");
        REQUIRE(poly_text(out2[0]) == "-2");
        REQUIRE(out2[1].is_zero());
        REQUIRE(out2[2].is_zero());
    }
    SECTION("compose_mod(f, x) is identically zero") {
        MultiPoly f = x * x * x + two * x - three;
        for (const auto& c : compose_mod(f, x, "x")) REQUIRE(c.is_zero());
    }
}

TEST_CASE("clear_denominators") {
    auto reg = reg_q({"T"});
    MultiPoly t = MultiPoly::var(reg, "T");
    MultiPoly half = MultiPoly::constant(reg, Scalar(BigInt(1), BigInt(2)));
    MultiPoly third = MultiPoly::constant(reg, Scalar(BigInt(1), BigInt(3)));

    auto [r1, b1] = clear_denominators(t * t - half, "T");
    REQUIRE(b1.num == 2);
    REQUIRE(poly_text(r1) == "T^2 - 2");

    auto [r2, b2] = clear_denominators(t * t * t - third * t, "T");
    REQUIRE(b2.num == 3);
    REQUIRE(poly_text(r2) == "T^3 - 3*T");

    MultiPoly q = t * t + MultiPoly::constant(reg, Scalar(7)) * t - MultiPoly::constant(reg, Scalar(2));
    auto [r3, b3] = clear_denominators(q, "T");
    REQUIRE(b3.num == 1);
    REQUIRE(r3 == q);

    // evaluating r at b*s equals b^d q(s): spot-check s = 5
    std::map<std::string, Scalar> at_bs{{"T", Scalar(10)}};
    std::map<std::string, Scalar> at_s{{"T", Scalar(5)}};
    CoeffField fld = CoeffField::rationals();
    Scalar lhs = evaluate(r1, at_bs);
    Scalar rhs = fld.mul(Scalar(4), evaluate(t * t - half, at_s));
    REQUIRE(lhs == rhs);
}

TEST_CASE("ring axioms hold on random triples") {
    std::mt19937 rng(777);
    std::vector<CoeffField> modes{CoeffField::rationals(), CoeffField::prime(2), CoeffField::prime(3),
                                  CoeffField::prime(5)};
    for (const auto& fld : modes) {
        auto reg = make_registry(fld);
        reg->add("x");
        reg->add("y");
        for (int it = 0; it < 250; ++it) {
            MultiPoly a = rand_poly(reg, rng, 3, 4);
            MultiPoly b = rand_poly(reg, rng, 3, 4);
            MultiPoly c = rand_poly(reg, rng, 3, 4);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a * b == b * a);
            REQUIRE(a + b == b + a);
        }
    }
}

TEST_CASE("ring spec round trip") {
    REQUIRE(parse_ring_spec("Q").spec_string() == "Q");
    REQUIRE(parse_ring_spec("Z").spec_string() == "Z");
    REQUIRE(parse_ring_spec("Fp p=5").spec_string() == "Fp p=5");
    auto nf = parse_ring_spec("numberfield minpoly=-2,0,1");
    REQUIRE(nf.n == 2);
    REQUIRE(nf.spec_string() == "numberfield minpoly=-2,0,1");
    REQUIRE_THROWS_AS(parse_ring_spec("Fp p=6"), parse_error);
    REQUIRE_THROWS_AS(parse_ring_spec("nonsense"), parse_error);
}
