#include "doctest.h"

#include <algorithm>

#include "tamerep/modcheck.hpp"
#include "tamerep/rep_builder.hpp"

using namespace tamerep;

TEST_CASE("build_rho: relations, homomorphism, absolute irreducibility") {
    for (auto [p, a, e, f] : {std::tuple{2LL, 1LL, 3LL, 2LL}, {2LL, 1LL, 1LL, 3LL},
                              {2LL, 2LL, 3LL, 1LL}, {3LL, 1LL, 8LL, 2LL}}) {
        TwistedGroup G = make_group(p, a, e, f);
        for (const auto& pair : enumerate_pairs(G)) {
            MatrixRep rho = build_rho(G, pair);
            CHECK(rho.degree() == pair.orbit.s);
            CHECK_NOTHROW(verify_relations(rho));
            if (G.order() <= 200) CHECK_NOTHROW(verify_homomorphism(rho));
            CHECK(is_absolutely_irreducible_witness(rho));
        }
    }
}

TEST_CASE("recover_pair inverts build_rho") {
    for (auto [p, a, e, f] : {std::tuple{2LL, 1LL, 3LL, 2LL}, {2LL, 1LL, 1LL, 3LL},
                              {2LL, 2LL, 3LL, 1LL}, {3LL, 1LL, 13LL, 3LL},
                              {2LL, 1LL, 5LL, 4LL}}) {
        TwistedGroup G = make_group(p, a, e, f);
        for (const auto& pair : enumerate_pairs(G)) {
            PairClass back = recover_pair(build_rho(G, pair));
            CHECK(pair_key(back) == pair_key(pair));
        }
    }
}

TEST_CASE("restrict_scalars: the omega example") {
    // 1x1 representation sending sigma to omega in F_4 becomes a 2x2
    // representation over F_2 whose gen_s still has order 3.
    TwistedGroup G = make_group(2, 1, 1, 3);
    auto F4 = Field::make(2, 2);
    Matrix t = Matrix::identity(F4, 1);
    Matrix s(F4, 1, 1);
    s.at(0, 0) = F4->root_of_unity(3);
    MatrixRep rho{G, F4, t, s};
    MatrixRep res = restrict_scalars(rho);
    CHECK(res.degree() == 2);
    CHECK(res.base->m() == 1);
    CHECK(!res.gen_s.is_identity());
    CHECK(res.gen_s.pow(3).is_identity());
    CHECK_NOTHROW(verify_homomorphism(res));
}

TEST_CASE("build_pi degrees on the worked examples") {
    auto degrees = [](const TwistedGroup& G) {
        std::vector<std::int64_t> out;
        for (const auto& O : phi_orbits(G)) {
            MatrixRep pi = build_pi(G, O);
            CHECK(pi.degree() == O.degree);
            CHECK(pi.base->m() == 1);
            CHECK_NOTHROW(verify_relations(pi));
            out.push_back(pi.degree());
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    CHECK(degrees(make_group(2, 1, 3, 2)) == std::vector<std::int64_t>{1, 2});
    CHECK(degrees(make_group(2, 1, 1, 3)) == std::vector<std::int64_t>{1, 2});
    CHECK(degrees(make_group(2, 2, 3, 1)) == std::vector<std::int64_t>{1, 2});
}

TEST_CASE("decompose_pi_over_tilde returns the orbit, once each") {
    for (auto [p, a, e, f] : {std::tuple{2LL, 1LL, 3LL, 2LL}, {2LL, 1LL, 1LL, 3LL},
                              {2LL, 2LL, 3LL, 1LL}, {3LL, 1LL, 4LL, 2LL}}) {
        TwistedGroup G = make_group(p, a, e, f);
        for (const auto& O : phi_orbits(G)) {
            MatrixRep pi = build_pi(G, O);
            auto pieces = decompose_pi_over_tilde(pi, G);
            REQUIRE(pieces.size() == O.members.size());
            std::vector<PairKey> got, want;
            for (const auto& pr : pieces) got.push_back(pair_key(pr));
            for (const auto& pr : O.members) want.push_back(pair_key(pr));
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            CHECK(got == want);
        }
    }
}

TEST_CASE("MatrixRep::image is a homomorphism") {
    TwistedGroup G = make_group(2, 1, 3, 2);
    for (const auto& O : phi_orbits(G)) {
        MatrixRep pi = build_pi(G, O);
        for (std::int64_t t1 = 0; t1 < G.e; ++t1)
            for (std::int64_t i1 = 0; i1 < G.f; ++i1)
                for (std::int64_t t2 = 0; t2 < G.e; ++t2)
                    for (std::int64_t i2 = 0; i2 < G.f; ++i2) {
                        GroupElem g{t1, i1}, h{t2, i2};
                        CHECK(pi.image(group_law(g, h, G)) == pi.image(g) * pi.image(h));
                    }
    }
}
