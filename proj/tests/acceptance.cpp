// Acceptance suite: one line of output per criterion, "pass" or "FAIL" with a
// short witness, plus the wall-clock time.  Exit code = number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tamerep/char_orbits.hpp"
#include "tamerep/modcheck.hpp"
#include "tamerep/numutil.hpp"
#include "tamerep/records.hpp"
#include "tamerep/rep_builder.hpp"
#include "tamerep/tame_galois.hpp"
#include "tamerep/twisted_group.hpp"

using namespace tamerep;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int idx, const char* name, bool passed, const std::string& detail,
            double seconds) {
    std::printf("criterion %d (%s): %s%s%s (%.2fs)\n", idx, name,
                passed ? "pass" : "FAIL", detail.empty() ? "" : " — ",
                detail.c_str(), seconds);
    std::fflush(stdout);
    if (!passed) ++g_failures;
}

template <typename Fn>
void criterion(int idx, const char* name, double budget_s, Fn&& body) {
    const auto t0 = Clock::now();
    std::string detail;
    bool passed;
    try {
        passed = body(detail);
    } catch (const Error& err) {
        passed = false;
        detail = std::string("unexpected error: ") + err.what();
    }
    const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    if (passed && budget_s > 0 && dt > budget_s) {
        passed = false;
        detail = "time budget " + std::to_string(budget_s) + "s exceeded";
    }
    report(idx, name, passed, detail, dt);
}

MatrixRep degree2_pi(const TwistedGroup& G) {
    for (const auto& O : phi_orbits(G))
        if (O.degree == 2) return build_pi(G, O);
    fail(ErrorKind::Internal, "no degree-2 orbit");
}

std::multiset<std::int64_t> degree_multiset(const TwistedGroup& G) {
    std::multiset<std::int64_t> degs;
    for (const auto& O : phi_orbits(G)) degs.insert(O.degree);
    return degs;
}

// Shared sweep domain: p in {2,3}, a in {1,2}, e*f <= 100, e | q^f - 1.
template <typename Fn>
void for_each_sweep_group(Fn&& fn) {
    for (std::int64_t p : {2LL, 3LL})
        for (std::int64_t a : {1LL, 2LL})
            for (std::int64_t f = 1; f <= 100; ++f)
                for (std::int64_t e = 1; e * f <= 100; ++e) {
                    if (e > 1 && num::mod_pow(num::ipow(p, a) % e, f, e) != 1) continue;
                    fn(make_group(p, a, e, f));
                }
}

// Brute-force count of monic irreducible degree-d polynomials over F_p with
// nonzero constant term (independent of the library's Moebius oracle).
std::int64_t brute_force_poly_count(std::int64_t p, int d) {
    auto mul_code = [&](std::int64_t ca, int da, std::int64_t cb, int db) {
        std::vector<std::int64_t> A(da + 1), B(db + 1), C(da + db + 1, 0);
        for (int i = 0; i < da; ++i) { A[i] = ca % p; ca /= p; }
        A[da] = 1;
        for (int i = 0; i < db; ++i) { B[i] = cb % p; cb /= p; }
        B[db] = 1;
        for (int i = 0; i <= da; ++i)
            for (int j = 0; j <= db; ++j) C[i + j] = (C[i + j] + A[i] * B[j]) % p;
        std::int64_t code = 0;
        for (int i = da + db - 1; i >= 0; --i) code = code * p + C[i];
        return code;
    };
    std::vector<std::vector<bool>> composite(d + 1);
    for (int k = 1; k <= d; ++k) composite[k].assign(num::ipow(p, k), false);
    for (int k = 2; k <= d; ++k)
        for (int da = 1; da <= k / 2; ++da)
            for (std::int64_t ca = 0; ca < num::ipow(p, da); ++ca)
                for (std::int64_t cb = 0; cb < num::ipow(p, k - da); ++cb)
                    composite[k][mul_code(ca, da, cb, k - da)] = true;
    std::int64_t count = 0;
    for (std::int64_t c = 0; c < num::ipow(p, d); ++c)
        if (!composite[d][c] && c % p != 0) ++count;
    return count;
}

}  // namespace

int main() {
    // 1. S3 worked example: two irreducibles of degrees {1,2}; the degree-2
    //    one is a bijection onto GL_2(F_2); the twisted product is S4.
    criterion(1, "S3 worked example", 1.0, [](std::string& detail) {
        TwistedGroup G = make_group(2, 1, 3, 2);
        if (degree_multiset(G) != std::multiset<std::int64_t>{1, 2}) {
            detail = "wrong degree multiset";
            return false;
        }
        MatrixRep pi = degree2_pi(G);
        std::set<std::vector<std::uint64_t>> image;
        for (std::int64_t t = 0; t < G.e; ++t)
            for (std::int64_t i = 0; i < G.f; ++i) {
                Matrix M = pi.image({t, i});
                std::vector<std::uint64_t> key;
                for (int r = 0; r < 2; ++r)
                    for (int c = 0; c < 2; ++c) key.push_back(M.at(r, c).key());
                image.insert(std::move(key));
            }
        if (image.size() != 6) {  // kernel trivial and image all of GL_2(F_2)
            detail = "pi not bijective onto GL_2(F_2): image size " +
                     std::to_string(image.size());
            return false;
        }
        std::string twist = identify_small_group(twist_by_rep(pi, G));
        if (twist != "S4") {
            detail = "twist identified as " + twist;
            return false;
        }
        return true;
    });

    // 2. Z/3 and A3 examples: degrees {1,2}, endomorphism field F_4, twist A4.
    criterion(2, "Z/3 and A3 worked examples", 1.0, [](std::string& detail) {
        for (auto [a, e, f] : {std::tuple{1LL, 1LL, 3LL}, {2LL, 3LL, 1LL}}) {
            TwistedGroup G = make_group(2, a, e, f);
            if (degree_multiset(G) != std::multiset<std::int64_t>{1, 2}) {
                detail = "wrong degree multiset";
                return false;
            }
            MatrixRep pi = degree2_pi(G);
            if (modcheck::endomorphism_field(pi) != 2) {
                detail = "endomorphism field is not F_4";
                return false;
            }
            std::string twist = identify_small_group(twist_by_rep(pi, G));
            if (twist != "A4") {
                detail = "twist identified as " + twist;
                return false;
            }
        }
        return true;
    });

    // 3. Degree-formula oracle sweep: exhaustive irreducibility, degree
    //    formula, Berman count, pairwise non-isomorphism.
    criterion(3, "degree-formula oracle sweep", 60.0, [](std::string& detail) {
        bool ok = true;
        for_each_sweep_group([&](const TwistedGroup& G) {
            if (!ok) return;
            auto orbits = phi_orbits(G);
            if (static_cast<std::int64_t>(orbits.size()) !=
                modcheck::berman_irreducible_count(G)) {
                detail = "Berman count mismatch at G(" + std::to_string(G.p) + "," +
                         std::to_string(G.a) + "," + std::to_string(G.e) + "," +
                         std::to_string(G.f) + ")";
                ok = false;
                return;
            }
            std::vector<MatrixRep> pis;
            for (const auto& O : orbits) {
                MatrixRep pi = [&]() -> MatrixRep {
                    try {
                        return build_pi(G, O);
                    } catch (const Error& err) {
                        if (err.kind() == ErrorKind::TooLarge) return MatrixRep{};
                        throw;
                    }
                }();
                if (pi.degree() == 0) continue;  // beyond desk bounds: skip
                if (pi.degree() != O.degree) {
                    detail = "degree formula violated at G(" + std::to_string(G.p) +
                             "," + std::to_string(G.a) + "," + std::to_string(G.e) +
                             "," + std::to_string(G.f) + ")";
                    ok = false;
                    return;
                }
                try {
                    if (!modcheck::is_irreducible(pi)) {
                        detail = "reducible pi at G(" + std::to_string(G.p) + "," +
                                 std::to_string(G.a) + "," + std::to_string(G.e) +
                                 "," + std::to_string(G.f) + ")";
                        ok = false;
                        return;
                    }
                } catch (const Error& err) {
                    if (err.kind() != ErrorKind::TooLarge) throw;
                }
                pis.push_back(std::move(pi));
            }
            for (std::size_t i = 0; i < pis.size() && ok; ++i)
                for (std::size_t j = i + 1; j < pis.size() && ok; ++j) {
                    if (pis[i].degree() != pis[j].degree() || pis[i].degree() > 12)
                        continue;
                    if (modcheck::are_isomorphic(pis[i], pis[j]).isomorphic) {
                        detail = "isomorphic pair at G(" + std::to_string(G.p) + "," +
                                 std::to_string(G.a) + "," + std::to_string(G.e) +
                                 "," + std::to_string(G.f) + ")";
                        ok = false;
                    }
                }
        });
        return ok;
    });

    // 4. Counting identities: |pairs| = p-regular classes; p does not divide f
    //    implies sum of s^2 = e*f.
    criterion(4, "counting identities", 0.0, [](std::string& detail) {
        bool ok = true;
        for_each_sweep_group([&](const TwistedGroup& G) {
            if (!ok) return;
            auto pairs = enumerate_pairs(G);
            std::int64_t p_regular = 0;
            if (G.order() <= 10000) {
                for (const auto& cls : conjugacy_classes(G))
                    if (element_order(cls.front(), G) % G.p != 0) ++p_regular;
                if (static_cast<std::int64_t>(pairs.size()) != p_regular) {
                    detail = "pair count != p-regular classes at G(" +
                             std::to_string(G.p) + "," + std::to_string(G.a) + "," +
                             std::to_string(G.e) + "," + std::to_string(G.f) + ")";
                    ok = false;
                    return;
                }
            }
            if (G.f % G.p != 0) {
                std::int64_t sum = 0;
                for (const auto& pr : pairs) sum += pr.orbit.s * pr.orbit.s;
                if (sum != G.order()) {
                    detail = "sum of s^2 != e*f at G(" + std::to_string(G.p) + "," +
                             std::to_string(G.a) + "," + std::to_string(G.e) + "," +
                             std::to_string(G.f) + ")";
                    ok = false;
                }
            }
        });
        return ok;
    });

    // 5. Descent identity: decompose_pi_over_tilde(build_pi(O)) = members of O
    //    exactly once, for orbits of degree <= 8 with l~ within bounds.
    criterion(5, "descent identity", 0.0, [](std::string& detail) {
        bool ok = true;
        std::int64_t checked = 0;
        for_each_sweep_group([&](const TwistedGroup& G) {
            if (!ok) return;
            FieldPtr lt;
            try {
                lt = tilde_field(G.p, G.a, G.f);
            } catch (const Error& err) {
                if (err.kind() == ErrorKind::TooLarge) return;
                throw;
            }
            if (lt->size() > 4096) return;  // keep the split over l~ desk-scale
            for (const auto& O : phi_orbits(G)) {
                if (O.degree > 8) continue;
                std::vector<PairClass> pieces;
                try {
                    pieces = decompose_pi_over_tilde(build_pi(G, O), G);
                } catch (const Error& err) {
                    if (err.kind() == ErrorKind::TooLarge) continue;
                    throw;
                }
                std::vector<PairKey> got, want;
                for (const auto& pr : pieces) got.push_back(pair_key(pr));
                for (const auto& pr : O.members) want.push_back(pair_key(pr));
                std::sort(got.begin(), got.end());
                std::sort(want.begin(), want.end());
                if (got != want) {
                    detail = "descent mismatch at G(" + std::to_string(G.p) + "," +
                             std::to_string(G.a) + "," + std::to_string(G.e) + "," +
                             std::to_string(G.f) + ")";
                    ok = false;
                    return;
                }
                ++checked;
            }
        });
        if (ok) detail = std::to_string(checked) + " orbits decomposed";
        return ok;
    });

    // 6. Submodule census on the worked examples.
    criterion(6, "submodule census", 5.0, [](std::string& detail) {
        MatrixRep s3 = degree2_pi(make_group(2, 1, 3, 2));
        MatrixRep a3 = degree2_pi(make_group(2, 2, 3, 1));
        const std::int64_t c1 = modcheck::submodule_census(s3, 2);
        const std::int64_t c2 = modcheck::submodule_census(a3, 2);
        const std::int64_t q1 = num::ipow(2, modcheck::endomorphism_field(s3));
        const std::int64_t q2 = num::ipow(2, modcheck::endomorphism_field(a3));
        if (c1 != 3 || c1 != (q1 * q1 - 1) / (q1 - 1)) {
            detail = "S3 census " + std::to_string(c1);
            return false;
        }
        if (c2 != 5 || c2 != (q2 * q2 - 1) / (q2 - 1)) {
            detail = "A3 census " + std::to_string(c2);
            return false;
        }
        return true;
    });

    // 7. Galois classification at q = 2 and q = 4, max degree 2.
    criterion(7, "tame Galois classification", 5.0, [](std::string& detail) {
        auto recs1 = classify_galois_reps(PFieldParams{2, 1}, 2);
        int trivial = 0, unram2 = 0, ram2 = 0;
        bool labels_ok = true;
        for (const auto& r : recs1) {
            if (r.degree == 1 && r.unramified) ++trivial;
            else if (r.degree == 2 && r.unramified) ++unram2;
            else if (r.degree == 2) {
                ++ram2;
                labels_ok = labels_ok && r.e == 3 && r.label_r == 2;
            }
        }
        if (recs1.size() != 3 || trivial != 1 || unram2 != 1 || ram2 != 1 ||
            !labels_ok) {
            detail = "q=2 records wrong";
            return false;
        }
        auto recs2 = classify_galois_reps(PFieldParams{2, 2}, 2);
        int unram2b = 0, ram2b = 0;
        bool e_ok = true;
        for (const auto& r : recs2) {
            if (r.degree != 2) continue;
            if (r.unramified) ++unram2b;
            else { ++ram2b; e_ok = e_ok && r.e == 3; }
        }
        if (unram2b != 1 || ram2b != 3 || !e_ok) {
            detail = "q=4 records wrong";
            return false;
        }
        return true;
    });

    // 8. Level invariants and quotient compatibility, n <= 4.
    criterion(8, "level invariants and compatibility", 0.0, [](std::string& detail) {
        for (std::int64_t p : {2LL, 3LL})
            for (std::int64_t a : {1LL, 2LL}) {
                PFieldParams K{p, a};
                const std::int64_t q = K.q();
                for (std::int64_t n = 1; n <= 4; ++n) {
                    LevelParams L;
                    try {
                        L = level_params(K, n);
                    } catch (const Error& err) {
                        if (err.kind() == ErrorKind::TooLarge) continue;
                        throw;
                    }
                    const std::string at = " at p=" + std::to_string(p) +
                                           " a=" + std::to_string(a) +
                                           " n=" + std::to_string(n);
                    if (L.f_n % L.s_n != 0) { detail = "s_n does not divide f_n" + at; return false; }
                    if (L.e_n > 1 && L.f_n % L.e_n != 0) { detail = "e_n does not divide f_n" + at; return false; }
                    const std::int64_t M = L.e_n * (num::ipow(q, L.s_n) - 1);
                    if (M > 1) {
                        if (num::mod_pow(q, L.f_n, M) != 1 % M) {
                            detail = "e_n(q^s_n - 1) does not divide q^f_n - 1" + at;
                            return false;
                        }
                        for (std::int64_t m = L.s_n; m < L.f_n; m += L.s_n)
                            if (num::mod_pow(q, m, M) == 1 % M) {
                                detail = "f_n not minimal" + at;
                                return false;
                            }
                    }
                }
                for (std::int64_t n = 1; n <= 4; ++n)
                    for (std::int64_t np = 2 * n; np <= 4; np += n) {
                        CompatibilityReport rep;
                        try {
                            rep = quotient_compatibility_check(K, n, np);
                        } catch (const Error& err) {
                            if (err.kind() == ErrorKind::TooLarge) continue;
                            throw;
                        }
                        if (!rep.all_compatible()) {
                            detail = "incompatible lift at p=" + std::to_string(p) +
                                     " a=" + std::to_string(a) + " " +
                                     std::to_string(n) + "|" + std::to_string(np);
                            return false;
                        }
                    }
            }
        return true;
    });

    // 9. Unramified count = irreducible polynomials with nonzero constant term.
    criterion(9, "unramified-count cross-check", 0.0, [](std::string& detail) {
        for (std::int64_t p : {2LL, 3LL}) {
            PFieldParams K{p, 1};
            std::map<std::int64_t, std::int64_t> unram_by_degree;
            for (const auto& r : classify_galois_reps(K, 4))
                if (r.unramified) ++unram_by_degree[r.degree];
            for (int d = 1; d <= 4; ++d) {
                const std::int64_t polys = brute_force_poly_count(p, d);
                const std::int64_t oracle = unramified_count_oracle(p, d);
                if (unram_by_degree[d] != polys || oracle != polys) {
                    detail = "p=" + std::to_string(p) + " d=" + std::to_string(d) +
                             ": records " + std::to_string(unram_by_degree[d]) +
                             ", oracle " + std::to_string(oracle) + ", polys " +
                             std::to_string(polys);
                    return false;
                }
            }
        }
        return true;
    });

    std::printf("%s: %d of 9 criteria passed\n",
                g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                9 - g_failures);
    return g_failures;
}
