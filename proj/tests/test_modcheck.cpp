#include "doctest.h"

#include "tamerep/modcheck.hpp"
#include "tamerep/numutil.hpp"
#include "tamerep/rep_builder.hpp"

using namespace tamerep;

namespace {

MatrixRep degree2_pi(const TwistedGroup& G) {
    for (const auto& O : phi_orbits(G))
        if (O.degree == 2) return build_pi(G, O);
    FAIL("no degree-2 orbit");
    throw 0;  // unreachable
}

// V + V as a block-diagonal representation.
MatrixRep direct_square(const MatrixRep& V) {
    const int n = V.degree();
    Matrix t(V.base, 2 * n, 2 * n), s(V.base, 2 * n, 2 * n);
    for (int b = 0; b < 2; ++b)
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                t.at(b * n + r, b * n + c) = V.gen_t.at(r, c);
                s.at(b * n + r, b * n + c) = V.gen_s.at(r, c);
            }
    return MatrixRep{V.group, V.base, std::move(t), std::move(s)};
}

}  // namespace

TEST_CASE("spin generates invariant subspaces") {
    TwistedGroup G = make_group(2, 1, 3, 2);
    MatrixRep pi = degree2_pi(G);
    std::vector<FFElem> e0{pi.base->one(), pi.base->zero()};
    auto basis = modcheck::spin(e0, pi);  // irreducible: any nonzero vector spans everything
    CHECK(basis.size() == 2);
}

TEST_CASE("is_irreducible distinguishes the worked example from a sum") {
    TwistedGroup G = make_group(2, 1, 3, 2);
    MatrixRep pi = degree2_pi(G);
    CHECK(modcheck::is_irreducible(pi));
    CHECK(!modcheck::proper_invariant_vector(pi).has_value());

    MatrixRep sum = direct_square(pi);
    CHECK(!modcheck::is_irreducible(sum));
    auto witness = modcheck::proper_invariant_vector(sum);
    REQUIRE(witness.has_value());
    auto sub = modcheck::spin(*witness, sum);
    CHECK(sub.size() < 4);
    CHECK(sub.size() >= 1);
}

TEST_CASE("is_irreducible over F_3") {
    TwistedGroup G = make_group(3, 1, 13, 3);
    for (const auto& O : phi_orbits(G)) {
        MatrixRep pi = build_pi(G, O);
        CHECK(modcheck::is_irreducible(pi));
        if (pi.degree() <= 4) CHECK(!modcheck::is_irreducible(direct_square(pi)));
    }
}

TEST_CASE("is_irreducible enforces the state bound") {
    TwistedGroup G = make_group(2, 1, 1, 1);
    auto F = Field::make(2, 1);
    MatrixRep big{G, F, Matrix::identity(F, 21), Matrix::identity(F, 21)};
    CHECK_THROWS_AS(modcheck::is_irreducible(big), Error);
    try {
        modcheck::is_irreducible(big);
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::TooLarge);
    }
}

TEST_CASE("are_isomorphic detects conjugate representations") {
    TwistedGroup G = make_group(2, 1, 3, 2);
    MatrixRep pi = degree2_pi(G);
    Matrix M(pi.base, 2, 2);  // invertible basis change [[1,1],[0,1]]
    M.at(0, 0) = M.at(0, 1) = M.at(1, 1) = pi.base->one();
    MatrixRep conj{G, pi.base, M * pi.gen_t * M.inverse(), M * pi.gen_s * M.inverse()};
    auto res = modcheck::are_isomorphic(pi, conj);
    CHECK(res.isomorphic);
    REQUIRE(res.intertwiner.has_value());
    const Matrix& X = *res.intertwiner;
    CHECK(X * pi.gen_t == conj.gen_t * X);
    CHECK(X * pi.gen_s == conj.gen_s * X);

    // different degrees are never isomorphic
    auto orbits = phi_orbits(G);
    MatrixRep pi1 = build_pi(G, orbits[0]);
    CHECK(!modcheck::are_isomorphic(pi1, pi).isomorphic);
}

TEST_CASE("constituents of an isotypic sum") {
    TwistedGroup G = make_group(2, 1, 3, 2);
    MatrixRep pi = degree2_pi(G);
    auto cs = modcheck::constituents(direct_square(pi));
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].first.degree() == 2);
    CHECK(cs[0].second == 2);
    CHECK(modcheck::are_isomorphic(cs[0].first, pi).isomorphic);
}

TEST_CASE("endomorphism fields of the worked examples") {
    CHECK(modcheck::endomorphism_field(degree2_pi(make_group(2, 1, 3, 2))) == 1);
    CHECK(modcheck::endomorphism_field(degree2_pi(make_group(2, 1, 1, 3))) == 2);
    CHECK(modcheck::endomorphism_field(degree2_pi(make_group(2, 2, 3, 1))) == 2);
}

TEST_CASE("submodule census matches the projective-line count") {
    MatrixRep s3 = degree2_pi(make_group(2, 1, 3, 2));   // End = F_2
    CHECK(modcheck::submodule_census(s3, 2) == 3);        // (2^2-1)/(2-1)
    MatrixRep a3 = degree2_pi(make_group(2, 2, 3, 1));   // End = F_4
    CHECK(modcheck::submodule_census(a3, 2) == 5);        // (4^2-1)/(4-1)
    CHECK(modcheck::submodule_census(s3, 1) == 1);
    CHECK(modcheck::submodule_census(s3, 3) == 7);        // (2^3-1)/(2-1)
}

TEST_CASE("berman_irreducible_count delegates to the class-orbit oracle") {
    for (auto [p, a, e, f] : {std::tuple{2LL, 1LL, 3LL, 2LL}, {2LL, 2LL, 3LL, 1LL},
                              {3LL, 1LL, 8LL, 2LL}}) {
        TwistedGroup G = make_group(p, a, e, f);
        CHECK(modcheck::berman_irreducible_count(G) == p_regular_class_orbits(G));
        CHECK(modcheck::berman_irreducible_count(G) ==
              static_cast<std::int64_t>(phi_orbits(G).size()));
    }
}
