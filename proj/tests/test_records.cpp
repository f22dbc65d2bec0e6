#include "doctest.h"

#include "tamerep/records.hpp"

using namespace tamerep;

TEST_CASE("CSV header fixes the column order") {
    CHECK(csv_header() ==
          "p,a,e,f,char_rep,s,d,r,lambda_order,lambda_log,w,degree,defdeg,"
          "unramified,label_r,level");
}

TEST_CASE("classify_group_records: sorted, complete, stable") {
    TwistedGroup G = make_group(2, 1, 3, 2);
    auto recs = classify_group_records(G);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].degree == 1);
    CHECK(recs[1].degree == 2);
    CHECK(recs[1].char_rep == 1);
    CHECK(recs[1].s == 2);
    CHECK(recs[1].d == 3);
    CHECK(recs[1].r == 2);
    CHECK(to_csv_row(recs[1]) == "2,1,3,2,1,2,3,2,1,0,1,2,1,0,0,0");
    // deterministic across calls
    auto again = classify_group_records(G);
    for (std::size_t i = 0; i < recs.size(); ++i)
        CHECK(to_csv_row(recs[i]) == to_csv_row(again[i]));
}

TEST_CASE("classify_galois_records mirrors the rep list") {
    auto recs = classify_galois_records(PFieldParams{2, 1}, 2);
    REQUIRE(recs.size() == 3);
    int unram = 0;
    for (const auto& r : recs) {
        CHECK(r.level >= 1);
        CHECK(r.level <= 2);
        if (r.unramified) ++unram;
        else CHECK(r.label_r > 0);
    }
    CHECK(unram == 2);
}

TEST_CASE("verify_group passes on the worked examples") {
    for (auto [p, a, e, f] : {std::tuple{2LL, 1LL, 3LL, 2LL}, {2LL, 1LL, 1LL, 3LL},
                              {2LL, 2LL, 3LL, 1LL}}) {
        TwistedGroup G = make_group(p, a, e, f);
        for (const auto& check : verify_group(G, 2)) {
            INFO(check.name, ": ", check.detail);
            CHECK(check.passed);
        }
    }
}
