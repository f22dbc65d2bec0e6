#include "tamerep/records.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <tuple>

#include "tamerep/modcheck.hpp"
#include "tamerep/numutil.hpp"
#include "tamerep/rep_builder.hpp"

namespace tamerep {

namespace {

auto sort_key(const OutputRecord& r) {
    return std::tie(r.degree, r.d, r.char_rep, r.lambda_order, r.lambda_log);
}

void sort_records(std::vector<OutputRecord>& recs) {
    std::sort(recs.begin(), recs.end(),
              [](const OutputRecord& x, const OutputRecord& y) { return sort_key(x) < sort_key(y); });
}

}  // namespace

OutputRecord to_output_record(const TwistedGroup& G, const PhiOrbit& orbit) {
    OutputRecord rec;
    rec.p = G.p;
    rec.a = G.a;
    rec.e = G.e;
    rec.f = G.f;
    rec.char_rep = orbit.canonical.orbit.rep_c;
    rec.s = orbit.canonical.orbit.s;
    rec.d = orbit.canonical.orbit.d;
    rec.r = orbit.canonical.orbit.r;
    rec.lambda_order = orbit.canonical.lambda.order;
    rec.lambda_log = orbit.canonical.lambda.log;
    rec.w = orbit.canonical.lambda.w;
    rec.degree = orbit.degree;
    rec.defdeg = orbit.defdeg;
    return rec;
}

OutputRecord to_output_record(const PFieldParams& K, const GaloisRepRecord& grec) {
    const LevelParams L = level_params(K, grec.level);
    OutputRecord rec = to_output_record(make_group(K.p, K.a, L.e_n, L.f_n), grec.orbit);
    rec.unramified = grec.unramified;
    rec.label_r = grec.label_r;
    rec.level = grec.level;
    return rec;
}

std::vector<OutputRecord> classify_group_records(const TwistedGroup& G) {
    std::vector<OutputRecord> out;
    for (const PhiOrbit& O : phi_orbits(G)) out.push_back(to_output_record(G, O));
    sort_records(out);
    return out;
}

std::vector<OutputRecord> classify_galois_records(const PFieldParams& K, std::int64_t N) {
    std::vector<OutputRecord> out;
    for (const GaloisRepRecord& rec : classify_galois_reps(K, N))
        out.push_back(to_output_record(K, rec));
    sort_records(out);
    return out;
}

std::string csv_header() {
    return "p,a,e,f,char_rep,s,d,r,lambda_order,lambda_log,w,degree,defdeg,"
           "unramified,label_r,level";
}

std::string to_csv_row(const OutputRecord& rec) {
    std::ostringstream os;
    os << rec.p << ',' << rec.a << ',' << rec.e << ',' << rec.f << ',' << rec.char_rep << ','
       << rec.s << ',' << rec.d << ',' << rec.r << ',' << rec.lambda_order << ','
       << rec.lambda_log << ',' << rec.w << ',' << rec.degree << ',' << rec.defdeg << ','
       << (rec.unramified ? 1 : 0) << ',' << rec.label_r << ',' << rec.level;
    return os.str();
}

namespace {

// Run one named check, translating TooLarge into an explicit skip-pass and
// any other failure into a failed result.
CheckResult run_check(const std::string& name, const std::function<std::string()>& body) {
    CheckResult res;
    res.name = name;
    try {
        res.detail = body();
        res.passed = true;
    } catch (const Error& err) {
        if (err.kind() == ErrorKind::TooLarge) {
            res.passed = true;
            res.detail = std::string("skipped: ") + err.what();
        } else {
            res.passed = false;
            res.detail = err.what();
        }
    }
    return res;
}

std::int64_t p_regular_class_count(const TwistedGroup& G) {
    std::int64_t count = 0;
    for (const auto& cls : conjugacy_classes(G))
        if (element_order(cls.front(), G) % G.p != 0) ++count;
    return count;
}

}  // namespace

std::vector<CheckResult> verify_group(const TwistedGroup& G, int census_m) {
    std::vector<CheckResult> out;
    const auto orbits = phi_orbits(G);
    const auto pairs = enumerate_pairs(G);

    out.push_back(run_check("berman_count", [&] {
        const std::int64_t want = modcheck::berman_irreducible_count(G);
        const std::int64_t got = static_cast<std::int64_t>(orbits.size());
        if (got != want)
            fail(ErrorKind::Verification,
                 std::to_string(got) + " Phi-orbits vs Berman count " + std::to_string(want));
        return std::to_string(got) + " irreducibles";
    }));

    out.push_back(run_check("pair_count_vs_p_regular_classes", [&] {
        const std::int64_t classes = p_regular_class_count(G);
        if (static_cast<std::int64_t>(pairs.size()) != classes)
            fail(ErrorKind::Verification,
                 std::to_string(pairs.size()) + " pairs vs " + std::to_string(classes) +
                     " p-regular classes");
        return std::to_string(pairs.size()) + " pairs";
    }));

    if (G.f % G.p != 0) {
        out.push_back(run_check("sum_s_squared", [&] {
            std::int64_t total = 0;
            for (const PairClass& pr : pairs) total += pr.orbit.s * pr.orbit.s;
            if (total != G.order())
                fail(ErrorKind::Verification,
                     "sum of s^2 = " + std::to_string(total) + " vs |G| = " +
                         std::to_string(G.order()));
            return "sum of s^2 = |G| = " + std::to_string(total);
        }));
    }

    out.push_back(run_check("degree_formula", [&] {
        for (const PhiOrbit& O : orbits) {
            const auto& o = O.canonical.orbit;
            if (O.degree != num::lcm(o.r, o.s * O.canonical.lambda.w))
                fail(ErrorKind::Verification, "degree formula fails at char " +
                                                  std::to_string(o.rep_c));
        }
        return std::to_string(orbits.size()) + " orbits";
    }));

    // build every pi within desk bounds and keep them for the later checks
    std::vector<MatrixRep> pis;
    std::vector<const PhiOrbit*> pi_orbits;
    std::int64_t skipped = 0;
    out.push_back(run_check("irreducibility", [&] {
        for (const PhiOrbit& O : orbits) {
            try {
                MatrixRep pi = build_pi(G, O);
                if (!modcheck::is_irreducible(pi))
                    fail(ErrorKind::Verification,
                         "pi reducible at char " + std::to_string(O.canonical.orbit.rep_c));
                pis.push_back(std::move(pi));
                pi_orbits.push_back(&O);
            } catch (const Error& err) {
                if (err.kind() != ErrorKind::TooLarge) throw;
                ++skipped;
            }
        }
        std::string detail = std::to_string(pis.size()) + " built";
        if (skipped) detail += ", " + std::to_string(skipped) + " beyond bounds";
        return detail;
    }));

    out.push_back(run_check("pairwise_non_isomorphic", [&] {
        std::int64_t compared = 0;
        for (size_t i = 0; i < pis.size(); ++i)
            for (size_t j = i + 1; j < pis.size(); ++j) {
                if (pis[i].degree() != pis[j].degree()) continue;
                if (pis[i].degree() > 12) continue;
                ++compared;
                if (modcheck::are_isomorphic(pis[i], pis[j]).isomorphic)
                    fail(ErrorKind::Verification,
                         "distinct Phi-orbits yield isomorphic representations");
            }
        return std::to_string(compared) + " pairs compared";
    }));

    out.push_back(run_check("descent_identity", [&] {
        std::int64_t checked = 0;
        const FieldPtr lt = tilde_field(G.p, G.a, G.f);
        for (size_t i = 0; i < pis.size(); ++i) {
            const PhiOrbit& O = *pi_orbits[i];
            if (O.degree > 8 || lt->size() > 1024) continue;
            auto recovered = decompose_pi_over_tilde(pis[i], G);
            std::vector<PairKey> got, want;
            for (const PairClass& pr : recovered) got.push_back(pair_key(pr));
            for (const PairClass& pr : O.members) want.push_back(pair_key(pr));
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            if (got != want)
                fail(ErrorKind::Verification,
                     "descent mismatch at char " + std::to_string(O.canonical.orbit.rep_c));
            ++checked;
        }
        return std::to_string(checked) + " orbits decomposed";
    }));

    out.push_back(run_check("build_recover_round_trip", [&] {
        std::int64_t checked = 0;
        for (const PairClass& pr : pairs) {
            PairClass back = recover_pair(build_rho(G, pr));
            if (pair_key(back) != pair_key(pr) || back.orbit.members != pr.orbit.members)
                fail(ErrorKind::Verification,
                     "round trip failed at char " + std::to_string(pr.orbit.rep_c));
            ++checked;
        }
        return std::to_string(checked) + " pairs";
    }));

    if (census_m > 0) {
        out.push_back(run_check("submodule_census", [&] {
            std::int64_t checked = 0;
            for (const MatrixRep& pi : pis) {
                std::int64_t states = 1;
                bool in_bounds = true;
                for (int i = 0; i < pi.degree() * census_m; ++i) {
                    states *= G.p;
                    if (states > (1 << 20)) {
                        in_bounds = false;
                        break;
                    }
                }
                if (!in_bounds) continue;
                const std::int64_t qE = num::ipow(G.p, modcheck::endomorphism_field(pi));
                std::int64_t expected = 0, power = 1;
                for (int i = 0; i < census_m; ++i) {
                    expected += power;
                    power *= qE;
                }
                const std::int64_t got = modcheck::submodule_census(pi, census_m);
                if (got != expected)
                    fail(ErrorKind::Verification,
                         "census " + std::to_string(got) + " vs (q^m-1)/(q-1) = " +
                             std::to_string(expected));
                ++checked;
            }
            return std::to_string(checked) + " modules counted";
        }));
    }

    return out;
}

}  // namespace tamerep
