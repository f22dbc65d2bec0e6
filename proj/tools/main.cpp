// Command-line interface: classification tables (JSON/CSV), the verification
// report suite, and the worked-example presets.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tamerep/char_orbits.hpp"
#include "tamerep/modcheck.hpp"
#include "tamerep/numutil.hpp"
#include "tamerep/records.hpp"
#include "tamerep/rep_builder.hpp"
#include "tamerep/tame_galois.hpp"
#include "tamerep/twisted_group.hpp"

using json = nlohmann::ordered_json;
using namespace tamerep;

namespace {

json record_to_json(const OutputRecord& r) {
    json j;
    j["p"] = r.p;
    j["a"] = r.a;
    j["e"] = r.e;
    j["f"] = r.f;
    j["char_rep"] = r.char_rep;
    j["s"] = r.s;
    j["d"] = r.d;
    j["r"] = r.r;
    j["lambda_order"] = r.lambda_order;
    j["lambda_log"] = r.lambda_log;
    j["w"] = r.w;
    j["degree"] = r.degree;
    j["defdeg"] = r.defdeg;
    j["unramified"] = r.unramified;
    j["label_r"] = r.label_r;
    j["level"] = r.level;
    return j;
}

json matrix_to_json(const Matrix& M) {
    json rows = json::array();
    for (int r = 0; r < M.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < M.cols(); ++c) row.push_back(M.at(r, c).coeffs());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string matrix_to_text(const Matrix& M) {
    std::string out;
    for (int r = 0; r < M.rows(); ++r) {
        out += "#   ";
        for (int c = 0; c < M.cols(); ++c) {
            out += "[";
            const auto& cf = M.at(r, c).coeffs();
            for (std::size_t i = 0; i < cf.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(cf[i]);
            }
            out += "]";
            if (c + 1 < M.cols()) out += " ";
        }
        out += "\n";
    }
    return out;
}

std::string modulus_to_text(const FieldPtr& F) {
    std::string out = "GF(" + std::to_string(F->p()) + "^" + std::to_string(F->m()) +
                      ") modulus [";
    const auto& mod = F->modulus();
    for (std::size_t i = 0; i < mod.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(mod[i]);
    }
    return out + "]";
}

// Sort key shared with classify_group_records.
auto record_key(const OutputRecord& r) {
    return std::tuple(r.degree, r.d, r.char_rep, r.lambda_order, r.lambda_log);
}

int exit_code_for(const Error& err) {
    switch (err.kind()) {
        case ErrorKind::Parameter: return 2;
        case ErrorKind::TooLarge: return 3;
        default: return 1;
    }
}

struct ClassifyGroupOpts {
    std::int64_t p = 0, a = 1, e = 1, f = 1;
    std::string format = "json";
    bool emit_matrices = false;
};

int run_classify_group(const ClassifyGroupOpts& o) {
    TwistedGroup G = make_group(o.p, o.a, o.e, o.f);
    std::vector<std::pair<OutputRecord, PhiOrbit>> table;
    for (const PhiOrbit& orbit : phi_orbits(G))
        table.emplace_back(to_output_record(G, orbit), orbit);
    std::sort(table.begin(), table.end(),
              [](const auto& x, const auto& y) { return record_key(x.first) < record_key(y.first); });

    if (o.format == "csv") {
        std::cout << csv_header() << "\n";
        for (const auto& [rec, orbit] : table) std::cout << to_csv_row(rec) << "\n";
        if (o.emit_matrices) {
            for (const auto& [rec, orbit] : table) {
                MatrixRep pi = build_pi(G, orbit);
                std::cout << "# pi char_rep=" << rec.char_rep << " lambda=("
                          << rec.lambda_order << "," << rec.lambda_log << ") "
                          << modulus_to_text(pi.base) << "\n"
                          << "# gen_t (row-major coefficient vectors):\n"
                          << matrix_to_text(pi.gen_t) << "# gen_s:\n"
                          << matrix_to_text(pi.gen_s);
            }
        }
        return 0;
    }

    json out;
    out["params"] = {{"p", G.p}, {"a", G.a}, {"e", G.e}, {"f", G.f}, {"q", G.q}};
    out["records"] = json::array();
    for (const auto& [rec, orbit] : table) {
        json j = record_to_json(rec);
        if (o.emit_matrices) {
            MatrixRep pi = build_pi(G, orbit);
            j["matrices"] = {{"field", modulus_to_text(pi.base)},
                             {"modulus", pi.base->modulus()},
                             {"gen_t", matrix_to_json(pi.gen_t)},
                             {"gen_s", matrix_to_json(pi.gen_s)}};
        }
        out["records"].push_back(std::move(j));
    }
    out["checks"] = json::array();
    std::cout << out.dump(2) << "\n";
    return 0;
}

struct ClassifyGaloisOpts {
    std::int64_t p = 0, a = 1, N = 2;
    std::string format = "json";
};

int run_classify_galois(const ClassifyGaloisOpts& o) {
    if (o.N < 1 || o.N > 6)
        fail(ErrorKind::Parameter, "Parameter: --max-degree must be in [1, 6]");
    PFieldParams K{o.p, o.a};
    auto reps = classify_galois_reps(K, o.N);
    std::vector<OutputRecord> records;
    for (const auto& rec : reps) {
        TwistedGroup G = galois_group_at_level(K, rec.level);
        OutputRecord out = to_output_record(K, rec);
        (void)G;
        records.push_back(out);
    }
    std::sort(records.begin(), records.end(),
              [](const auto& x, const auto& y) { return record_key(x) < record_key(y); });
    auto partition = ramification_partition(reps);
    std::int64_t unramified = 0;
    for (const auto& rec : reps)
        if (rec.unramified) ++unramified;

    if (o.format == "csv") {
        std::cout << csv_header() << "\n";
        for (const auto& rec : records) std::cout << to_csv_row(rec) << "\n";
        std::cout << "# unramified: " << unramified << "\n";
        for (const auto& [r, group] : partition)
            std::cout << "# ramified label_r=" << r << ": " << group.size() << "\n";
        return 0;
    }

    json out;
    out["params"] = {{"p", K.p}, {"a", K.a}, {"q", K.q()}, {"max_degree", o.N}};
    out["records"] = json::array();
    for (const auto& rec : records) out["records"].push_back(record_to_json(rec));
    json part = json::array();
    part.push_back({{"label_r", 0}, {"count", unramified}, {"unramified", true}});
    for (const auto& [r, group] : partition)
        part.push_back({{"label_r", r}, {"count", group.size()}, {"unramified", false}});
    out["partition"] = std::move(part);
    out["checks"] = json::array();
    std::cout << out.dump(2) << "\n";
    return 0;
}

struct VerifyOpts {
    std::int64_t p = 0, a = 0, e = 0, f = 0;
    std::int64_t sweep = 0;
    int census_m = 0;
    std::string format = "text";
};

int run_verify(const VerifyOpts& o) {
    std::vector<std::tuple<TwistedGroup, std::vector<CheckResult>>> reports;
    if (o.sweep > 0) {
        std::vector<std::int64_t> ps = o.p ? std::vector<std::int64_t>{o.p}
                                           : std::vector<std::int64_t>{2, 3};
        std::vector<std::int64_t> as = o.a ? std::vector<std::int64_t>{o.a}
                                           : std::vector<std::int64_t>{1, 2};
        for (std::int64_t p : ps)
            for (std::int64_t a : as)
                for (std::int64_t f = 1; f <= o.sweep; ++f)
                    for (std::int64_t e = 1; e * f <= o.sweep; ++e) {
                        if (e > 1 && num::mod_pow(num::ipow(p, a) % e, f, e) != 1) continue;
                        TwistedGroup G = make_group(p, a, e, f);
                        reports.emplace_back(G, verify_group(G, o.census_m));
                    }
    } else {
        if (o.p == 0 || o.e == 0 || o.f == 0)
            fail(ErrorKind::Parameter,
                 "Parameter: verify needs --p --a --e --f, or --sweep BOUND");
        TwistedGroup G = make_group(o.p, o.a ? o.a : 1, o.e, o.f);
        reports.emplace_back(G, verify_group(G, o.census_m));
    }

    bool all_passed = true;
    if (o.format == "json") {
        json out;
        out["params"] = o.sweep > 0
                            ? json{{"sweep", o.sweep}, {"census_m", o.census_m}}
                            : json{{"p", o.p}, {"a", o.a ? o.a : 1}, {"e", o.e},
                                   {"f", o.f}, {"census_m", o.census_m}};
        out["records"] = json::array();
        out["checks"] = json::array();
        for (const auto& [G, checks] : reports)
            for (const CheckResult& c : checks) {
                all_passed = all_passed && c.passed;
                out["checks"].push_back({{"group",
                                          {{"p", G.p}, {"a", G.a}, {"e", G.e}, {"f", G.f}}},
                                         {"name", c.name},
                                         {"passed", c.passed},
                                         {"detail", c.detail}});
            }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& [G, checks] : reports)
            for (const CheckResult& c : checks) {
                all_passed = all_passed && c.passed;
                std::cout << "G(" << G.p << "," << G.a << "," << G.e << "," << G.f
                          << ") " << c.name << ": " << (c.passed ? "pass" : "FAIL");
                if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
                std::cout << "\n";
            }
        std::cout << (all_passed ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return all_passed ? 0 : 1;
}

// Degrees of all irreducibles of G as a sorted multiset string like "{1,2}".
std::string degree_set(const TwistedGroup& G) {
    std::multiset<std::int64_t> degs;
    for (const auto& O : phi_orbits(G)) degs.insert(O.degree);
    std::string out = "{";
    for (auto it = degs.begin(); it != degs.end(); ++it) {
        if (it != degs.begin()) out += ",";
        out += std::to_string(*it);
    }
    return out + "}";
}

MatrixRep degree2_pi(const TwistedGroup& G) {
    for (const auto& O : phi_orbits(G))
        if (O.degree == 2) return build_pi(G, O);
    fail(ErrorKind::Internal, "Internal: preset group has no degree-2 irreducible");
}

int run_examples() {
    bool ok = true;
    auto expect = [&](const std::string& line, const std::string& golden) {
        std::cout << line << "\n";
        if (line != golden) {
            std::cerr << "preset deviation: expected \"" << golden << "\"\n";
            ok = false;
        }
    };

    {  // s3: G(2,1,3,2), pi_2 bijective onto GL_2(F_2), twist recognized as S4
        TwistedGroup G = make_group(2, 1, 3, 2);
        MatrixRep pi = degree2_pi(G);
        std::set<std::vector<std::uint64_t>> image;
        for (std::int64_t t = 0; t < G.e; ++t)
            for (std::int64_t i = 0; i < G.f; ++i) {
                Matrix M = pi.image({t, i});
                std::vector<std::uint64_t> key;
                for (int r = 0; r < M.rows(); ++r)
                    for (int c = 0; c < M.cols(); ++c) key.push_back(M.at(r, c).key());
                image.insert(std::move(key));
            }
        const bool bijective = static_cast<std::int64_t>(image.size()) == G.order() &&
                               G.order() == 6;  // |GL_2(F_2)| = 6
        std::string twist = identify_small_group(twist_by_rep(pi, G));
        expect("preset s3: degrees " + degree_set(G) +
                   (bijective ? "; pi: G = GL_2(F_2)" : "; pi NOT bijective") +
                   "; twist = " + twist,
               "preset s3: degrees {1,2}; pi: G = GL_2(F_2); twist = S4");
    }
    {  // z3: G(2,1,1,3)
        TwistedGroup G = make_group(2, 1, 1, 3);
        MatrixRep pi = degree2_pi(G);
        std::string twist = identify_small_group(twist_by_rep(pi, G));
        expect("preset z3: degrees " + degree_set(G) + "; endomorphism field F_" +
                   std::to_string(num::ipow(2, modcheck::endomorphism_field(pi))) +
                   "; twist = " + twist,
               "preset z3: degrees {1,2}; endomorphism field F_4; twist = A4");
    }
    {  // a3: G(2,2,3,1)
        TwistedGroup G = make_group(2, 2, 3, 1);
        MatrixRep pi = degree2_pi(G);
        std::string twist = identify_small_group(twist_by_rep(pi, G));
        expect("preset a3: degrees " + degree_set(G) + "; endomorphism field F_" +
                   std::to_string(num::ipow(2, modcheck::endomorphism_field(pi))) +
                   "; twist = " + twist,
               "preset a3: degrees {1,2}; endomorphism field F_4; twist = A4");
    }
    {  // galois-n2: p=2, q=2 and q=4, max degree 2
        PFieldParams K1{2, 1};
        auto recs1 = classify_galois_reps(K1, 2);
        std::int64_t trivial = 0, unram2 = 0, ram2 = 0, label = -1, ram_e = -1;
        for (const auto& rec : recs1) {
            if (rec.degree == 1 && rec.unramified && rec.e == 1) ++trivial;
            else if (rec.degree == 2 && rec.unramified) ++unram2;
            else if (rec.degree == 2 && !rec.unramified) {
                ++ram2;
                label = rec.label_r;
                ram_e = rec.e;
            }
        }
        expect("preset galois-n2 (q=2): trivial=" + std::to_string(trivial) +
                   " unramified-deg2=" + std::to_string(unram2) + " ramified-deg2=" +
                   std::to_string(ram2) + " (e=" + std::to_string(ram_e) +
                   ", r=" + std::to_string(label) + ")",
               "preset galois-n2 (q=2): trivial=1 unramified-deg2=1 ramified-deg2=1 "
               "(e=3, r=2)");

        PFieldParams K2{2, 2};
        auto recs2 = classify_galois_reps(K2, 2);
        std::int64_t unram2b = 0, ram2b = 0;
        bool all_e3 = true;
        for (const auto& rec : recs2) {
            if (rec.degree != 2) continue;
            if (rec.unramified) ++unram2b;
            else {
                ++ram2b;
                all_e3 = all_e3 && rec.e == 3;
            }
        }
        expect("preset galois-n2 (q=4): unramified-deg2=" + std::to_string(unram2b) +
                   " ramified-deg2=" + std::to_string(ram2b) +
                   (all_e3 ? " (all e=3)" : " (e mismatch)"),
               "preset galois-n2 (q=4): unramified-deg2=1 ramified-deg2=3 (all e=3)");
    }
    std::cout << (ok ? "all presets match" : "PRESET DEVIATION") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Classification of irreducible mod-p representations of twisted products "
        "T x_q Sigma and of tame local Galois groups"};
    app.require_subcommand(1);

    ClassifyGroupOpts cg;
    auto* sub_cg = app.add_subcommand("classify-group",
                                      "Classify the irreducible F_p-representations of "
                                      "G = T x_q Sigma");
    sub_cg->add_option("--p", cg.p, "residue characteristic (prime)")->required();
    sub_cg->add_option("--a", cg.a, "q = p^a")->required();
    sub_cg->add_option("--e", cg.e, "|T| (requires e | q^f - 1)")->required();
    sub_cg->add_option("--f", cg.f, "|Sigma|")->required();
    sub_cg->add_option("--format", cg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub_cg->add_flag("--emit-matrices", cg.emit_matrices,
                     "include generator matrices (coefficient vectors)");

    ClassifyGaloisOpts cgal;
    auto* sub_gal = app.add_subcommand("classify-galois",
                                       "Classify irreducible mod-p representations of the "
                                       "tame Galois group of a p-field");
    sub_gal->add_option("--p", cgal.p, "residue characteristic (prime)")->required();
    sub_gal->add_option("--a", cgal.a, "q = p^a")->required();
    sub_gal->add_option("--max-degree", cgal.N, "largest degree N (<= 6)");
    sub_gal->add_option("--format", cgal.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    VerifyOpts v;
    auto* sub_v = app.add_subcommand("verify", "Run the oracle suite");
    sub_v->add_option("--p", v.p, "residue characteristic");
    sub_v->add_option("--a", v.a, "q = p^a");
    sub_v->add_option("--e", v.e, "|T|");
    sub_v->add_option("--f", v.f, "|Sigma|");
    sub_v->add_option("--sweep", v.sweep, "verify all groups with e*f <= BOUND");
    sub_v->add_option("--census-m", v.census_m, "also run the submodule census of V^m");
    sub_v->add_option("--format", v.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* sub_ex = app.add_subcommand("examples", "Run the named presets");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sub_cg->parsed()) return run_classify_group(cg);
        if (sub_gal->parsed()) return run_classify_galois(cgal);
        if (sub_v->parsed()) return run_verify(v);
        if (sub_ex->parsed()) return run_examples();
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_code_for(err);
    }
    return 2;
}
