#include "doctest.h"

#include "tamerep/ffield.hpp"
#include "tamerep/numutil.hpp"

using namespace tamerep;

TEST_CASE("deterministic moduli and generators") {
    auto F2 = Field::make(2, 1);
    CHECK(F2->modulus() == std::vector<int>{0, 1});  // degree-1 modulus is x

    auto F4 = Field::make(2, 2);
    CHECK(F4->modulus() == std::vector<int>{1, 1, 1});  // the only quadratic

    auto F9 = Field::make(3, 2);
    CHECK(F9->modulus() == std::vector<int>{1, 0, 1});  // lex-least: x^2 + 1
    CHECK(F9->multiplicative_order(F9->generator()) == 8);

    auto F8 = Field::make(2, 3);
    CHECK(F8->multiplicative_order(F8->generator()) == 7);

    // same (p, m) yields the same cached instance
    CHECK(Field::make(2, 3).get() == F8.get());
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(Field::make(4, 1), Error);
    CHECK_THROWS_AS(Field::make(1, 1), Error);
    CHECK_THROWS_AS(Field::make(2, 0), Error);
    CHECK_THROWS_AS(Field::make(2, 60), Error);
}

TEST_CASE("field axioms over F_8, exhaustively") {
    auto F = Field::make(2, 3);
    std::vector<FFElem> all;
    for (std::uint64_t i = 0; i < F->size(); ++i) all.push_back(F->element_at(i));
    for (const auto& a : all)
        for (const auto& b : all) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            for (const auto& c : all) {
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
            }
        }
    for (const auto& a : all) {
        CHECK(a + F->zero() == a);
        CHECK(a * F->one() == a);
        CHECK((a - a).is_zero());
        if (!a.is_zero()) CHECK(a * a.inverse() == F->one());
    }
}

TEST_CASE("Frobenius is additive and multiplicative when p^m <= 256") {
    for (auto [p, m] : {std::pair{2, 4}, {2, 8}, {3, 4}, {5, 2}}) {
        auto F = Field::make(p, m);
        auto frob = [&](const FFElem& x) { return x.pow(p); };
        for (std::uint64_t i = 0; i < F->size(); ++i)
            for (std::uint64_t j = 0; j < std::min<std::uint64_t>(F->size(), 16); ++j) {
                FFElem a = F->element_at(i), b = F->element_at(j);
                CHECK(frob(a + b) == frob(a) + frob(b));
                CHECK(frob(a * b) == frob(a) * frob(b));
            }
    }
}

TEST_CASE("roots of unity and discrete logs") {
    auto F = Field::make(2, 6);  // F_64, unit order 63
    for (std::int64_t d : {1, 3, 7, 9, 21, 63})
        CHECK(F->multiplicative_order(F->root_of_unity(d)) ==
              static_cast<std::uint64_t>(d));
    CHECK_THROWS_AS(F->root_of_unity(5), Error);
    for (std::int64_t k : {0, 1, 5, 17, 62})
        CHECK(F->discrete_log(F->pow(F->generator(), k)) == static_cast<std::uint64_t>(k));
}

TEST_CASE("embed is a field homomorphism with pull_back inverse") {
    auto sub = Field::make(2, 2), sup = Field::make(2, 4);
    for (std::uint64_t i = 0; i < sub->size(); ++i)
        for (std::uint64_t j = 0; j < sub->size(); ++j) {
            FFElem a = sub->element_at(i), b = sub->element_at(j);
            CHECK(embed(a + b, sub, sup) == embed(a, sub, sup) + embed(b, sub, sup));
            CHECK(embed(a * b, sub, sup) == embed(a, sub, sup) * embed(b, sub, sup));
        }
    CHECK(embed(sub->one(), sub, sup) == sup->one());
    for (std::uint64_t i = 0; i < sub->size(); ++i) {
        FFElem a = sub->element_at(i);
        CHECK(pull_back(embed(a, sub, sup), sub, sup) == a);
    }
    // prime subfield into an extension
    auto Fp = Field::make(3, 1), Fbig = Field::make(3, 4);
    for (int v = 0; v < 3; ++v)
        CHECK(embed(Fp->from_int(v), Fp, Fbig) == Fbig->from_int(v));
}

TEST_CASE("canonical_root is order-exact and embedding-coherent") {
    // mu_3 lives in F_4; the same reference root must appear in every target
    auto F4 = Field::make(2, 2), F16 = Field::make(2, 4);
    FFElem z4 = canonical_root(2, 3, F4);
    FFElem z16 = canonical_root(2, 3, F16);
    CHECK(F4->multiplicative_order(z4) == 3);
    CHECK(F16->multiplicative_order(z16) == 3);
    CHECK(embed(z4, F4, F16) == z16);

    auto F9 = Field::make(3, 2), F81 = Field::make(3, 4);
    CHECK(embed(canonical_root(3, 8, F9), F9, F81) == canonical_root(3, 8, F81));
    CHECK(canonical_root(3, 1, F9) == F9->one());
}

TEST_CASE("tilde_field dimensions") {
    // f' = prime-to-p part of f; l~ = F_{p^lcm(a f, ord(p mod f'))}
    CHECK(tilde_field(2, 1, 2)->m() == 2);   // f' = 1
    CHECK(tilde_field(2, 1, 3)->m() == 6);   // lcm(3, ord(2 mod 3) = 2)
    CHECK(tilde_field(2, 2, 1)->m() == 2);
    CHECK(tilde_field(3, 1, 4)->m() == 4);   // lcm(4, ord(3 mod 4) = 2)
}
