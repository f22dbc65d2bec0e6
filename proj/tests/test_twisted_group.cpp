#include "doctest.h"

#include <set>

#include "tamerep/rep_builder.hpp"
#include "tamerep/twisted_group.hpp"

using namespace tamerep;

TEST_CASE("make_group validates parameters") {
    CHECK_NOTHROW(make_group(2, 1, 3, 2));   // 3 | 2^2 - 1
    CHECK_THROWS_AS(make_group(2, 1, 5, 2), Error);  // 5 does not divide 3
    CHECK_THROWS_AS(make_group(4, 1, 3, 2), Error);  // p not prime
    CHECK_THROWS_AS(make_group(2, 1, 0, 2), Error);
}

TEST_CASE("group law on G(2,1,3,2) (the symmetric group S3)") {
    TwistedGroup G = make_group(2, 1, 3, 2);
    CHECK(G.order() == 6);
    CHECK(!G.is_commutative());

    // exhaustive associativity and inverse law
    std::vector<GroupElem> all;
    for (std::int64_t t = 0; t < G.e; ++t)
        for (std::int64_t i = 0; i < G.f; ++i) all.push_back({t, i});
    for (const auto& g : all) {
        CHECK(group_law(g, group_inverse(g, G), G) == group_identity());
        for (const auto& h : all)
            for (const auto& k : all)
                CHECK(group_law(group_law(g, h, G), k, G) ==
                      group_law(g, group_law(h, k, G), G));
    }
    CHECK(element_order({1, 0}, G) == 3);
    CHECK(element_order({0, 1}, G) == 2);
    CHECK(element_order({1, 1}, G) == 2);  // a transposition

    auto classes = conjugacy_classes(G);
    std::multiset<std::size_t> sizes;
    for (const auto& cls : classes) sizes.insert(cls.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
}

TEST_CASE("conjugacy classes partition the group") {
    for (auto [p, a, e, f] : {std::tuple{3LL, 1LL, 8LL, 2LL}, {2LL, 2LL, 15LL, 2LL},
                              {2LL, 1LL, 7LL, 3LL}}) {
        TwistedGroup G = make_group(p, a, e, f);
        auto classes = conjugacy_classes(G);
        std::int64_t total = 0;
        for (const auto& cls : classes) {
            total += static_cast<std::int64_t>(cls.size());
            CHECK(G.order() % static_cast<std::int64_t>(cls.size()) == 0);
        }
        CHECK(total == G.order());
    }
}

TEST_CASE("Berman count via p-regular class orbits") {
    CHECK(p_regular_class_orbits(make_group(2, 2, 3, 1)) == 2);  // cyclic 3, p = 2
    CHECK(p_regular_class_orbits(make_group(2, 1, 3, 2)) == 2);  // S3
    CHECK(p_regular_class_orbits(make_group(2, 1, 1, 3)) == 2);  // cyclic 3 as Sigma
    CHECK(p_regular_class_orbits(make_group(3, 1, 2, 2)) == 4);  // abelian 2x2, p = 3
}

TEST_CASE("identify_small_group on a cyclic table") {
    const int n = 6;
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
        for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
    }
    CHECK(identify_small_group(make_table(n, labels, mul)) == "cyclic 6");
}

TEST_CASE("twist_by_rep worked examples") {
    {  // trivial degree-1 representation of cyclic 2: direct product
        TwistedGroup G = make_group(2, 1, 1, 2);
        auto F = Field::make(2, 1);
        MatrixRep triv{G, F, Matrix::identity(F, 1), Matrix::identity(F, 1)};
        CHECK(identify_small_group(twist_by_rep(triv, G)) == "elementary-abelian 2^2");
    }
    {  // degree-2 irreducible of cyclic 3 over F_2: A4
        TwistedGroup G = make_group(2, 1, 1, 3);
        for (const auto& O : phi_orbits(G))
            if (O.degree == 2)
                CHECK(identify_small_group(twist_by_rep(build_pi(G, O), G)) == "A4");
    }
    {  // trivial representation of S3: Z/2 x S3 = dihedral of order 12
        TwistedGroup G = make_group(2, 1, 3, 2);
        auto F = Field::make(2, 1);
        MatrixRep triv{G, F, Matrix::identity(F, 1), Matrix::identity(F, 1)};
        CHECK(identify_small_group(twist_by_rep(triv, G)) == "dihedral 6");
    }
}
