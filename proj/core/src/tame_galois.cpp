#include "tamerep/tame_galois.hpp"

#include <algorithm>

#include "tamerep/modcheck.hpp"
#include "tamerep/numutil.hpp"
#include "tamerep/rep_builder.hpp"

namespace tamerep {

std::int64_t PFieldParams::q() const { return num::ipow(p, a); }

LevelParams level_params(const PFieldParams& K, std::int64_t n) {
    if (!num::is_prime(K.p)) fail(ErrorKind::Parameter, "NonPrime: p = " + std::to_string(K.p));
    if (K.a < 1) fail(ErrorKind::Parameter, "Parameter: a must be >= 1");
    if (n < 1) fail(ErrorKind::Parameter, "Parameter: level must be >= 1");
    const std::int64_t q = K.q();
    LevelParams L;
    L.n = n;
    L.e_n = num::ipow(K.p, n) - 1;
    const std::int64_t e = L.e_n;
    L.s_n = e == 1 ? 1 : num::mult_order_mod(q % e == 0 ? q : q % e, e);
    const std::int64_t qs = num::ipow(q, L.s_n);  // q^{s_n}
    const std::int64_t mod = e * (qs - 1);
    if (mod > 1000000000)
        fail(ErrorKind::TooLarge, "TooLarge: level modulus " + std::to_string(mod));
    L.f_n = mod == 1 ? 1 : num::lcm(L.s_n, num::mult_order_mod(q % mod, mod));

    // invariants of the level data, plus minimality by direct scan
    if (L.f_n % L.s_n != 0) fail(ErrorKind::Verification, "level invariant s_n | f_n fails");
    if (L.f_n % e != 0 && e != 1)
        fail(ErrorKind::Verification, "level invariant e_n | f_n fails");
    if (num::mod_pow(q, L.f_n, mod) != 1 % mod)
        fail(ErrorKind::Verification, "level invariant e_n(q^{s_n}-1) | q^{f_n}-1 fails");
    for (std::int64_t f = L.s_n; f < L.f_n; f += L.s_n)
        if (num::mod_pow(q, f, mod) == 1 % mod)
            fail(ErrorKind::Verification, "level f_n not minimal");
    return L;
}

TwistedGroup galois_group_at_level(const PFieldParams& K, std::int64_t n) {
    const LevelParams L = level_params(K, n);
    return make_group(K.p, K.a, L.e_n, L.f_n);
}

std::vector<GaloisRepRecord> classify_galois_reps(const PFieldParams& K, std::int64_t N) {
    if (N < 1) fail(ErrorKind::Parameter, "Parameter: degree bound must be >= 1");
    std::vector<GaloisRepRecord> out;
    for (std::int64_t n = 1; n <= N; ++n) {
        const TwistedGroup G = galois_group_at_level(K, n);
        for (const PhiOrbit& O : phi_orbits(G)) {
            if (O.degree != n) continue;  // degree-n representations live at level n
            GaloisRepRecord rec;
            rec.degree = n;
            rec.level = n;
            rec.e = O.canonical.orbit.d;
            rec.unramified = rec.e == 1;
            rec.label_r = rec.unramified ? 0 : O.canonical.orbit.r;
            rec.defdeg = O.defdeg;
            rec.orbit = O;
            out.push_back(std::move(rec));
        }
    }
    return out;
}

std::map<std::int64_t, std::vector<GaloisRepRecord>> ramification_partition(
    const std::vector<GaloisRepRecord>& records) {
    std::map<std::int64_t, std::vector<GaloisRepRecord>> out;
    for (const GaloisRepRecord& rec : records)
        if (!rec.unramified) out[rec.label_r].push_back(rec);
    return out;
}

bool CompatibilityReport::all_compatible() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const CompatibilityEntry& e) { return e.compatible; });
}

CompatibilityReport quotient_compatibility_check(const PFieldParams& K, std::int64_t n,
                                                 std::int64_t n_prime) {
    if (n_prime % n != 0) fail(ErrorKind::Parameter, "Parameter: levels must satisfy n | n'");
    const TwistedGroup G = galois_group_at_level(K, n);
    const TwistedGroup Gp = galois_group_at_level(K, n_prime);
    if (Gp.e % G.e != 0 || Gp.f % G.f != 0)
        fail(ErrorKind::Verification, "quotient map undefined: e_n | e_n' or f_n | f_n' fails");
    const std::int64_t scale = Gp.e / G.e;

    // gamma : G_{n'} -> G_n, (t, i) -> (t mod e_n, i mod f_n).  This is a
    // homomorphism because e_n | q^{f_n} - 1.
    CompatibilityReport rep;
    rep.n = n;
    rep.n_prime = n_prime;
    const auto orbits_p = phi_orbits(Gp);
    for (const PhiOrbit& O : phi_orbits(G)) {
        CompatibilityEntry entry;
        entry.orbit_rep = O.canonical;

        // lift: character residue scaled by e_n'/e_n, same lambda
        const std::int64_t c_lift = O.canonical.orbit.rep_c * scale;
        PairClass lifted;
        {
            auto inv = char_invariants(c_lift, Gp);
            lifted.orbit.rep_c = c_lift;
            lifted.orbit.d = inv.d;
            lifted.orbit.r = inv.r;
            lifted.orbit.s = inv.s;
            std::int64_t cur = c_lift;
            do {
                lifted.orbit.members.push_back(cur);
                cur = cur * Gp.q_mod_e % Gp.e;
            } while (cur != c_lift);
            std::sort(lifted.orbit.members.begin(), lifted.orbit.members.end());
            lifted.orbit.rep_c = lifted.orbit.members.front();
            lifted.lambda = O.canonical.lambda;
        }
        if (lifted.orbit.d != O.canonical.orbit.d)
            fail(ErrorKind::Internal, "lifted character changed order");

        // locate the lifted pair's Phi-orbit in G_{n'}
        const PairKey want = pair_key(lifted);
        const PhiOrbit* lifted_orbit = nullptr;
        for (const PhiOrbit& Op : orbits_p) {
            for (const PairClass& mem : Op.members)
                if (pair_key(mem) == want) {
                    lifted_orbit = &Op;
                    break;
                }
            if (lifted_orbit) break;
        }
        if (!lifted_orbit) fail(ErrorKind::Internal, "lifted pair not found among Phi-orbits");

        MatrixRep pi = build_pi(G, O);
        MatrixRep pi_lift = build_pi(Gp, *lifted_orbit);
        // pi composed with gamma: generators go to pi(gamma(1,0)), pi(gamma(0,1))
        MatrixRep composed{Gp, pi.base, pi.gen_t.pow(1 % G.e), pi.gen_s.pow(1 % G.f)};
        verify_relations(composed);
        entry.compatible = modcheck::are_isomorphic(pi_lift, composed).isomorphic;
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

std::int64_t unramified_count_oracle(std::int64_t p, std::int64_t d) {
    if (d < 1) fail(ErrorKind::Parameter, "Parameter: degree must be >= 1");
    if (d == 1) return p - 1;  // x - c with c != 0
    std::int64_t total = 0;
    for (std::int64_t j : num::divisors(d))
        total += num::moebius(d / j) * (num::ipow(p, j) - 1);
    return total / d;
}

}  // namespace tamerep
