#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tamerep/char_orbits.hpp"
#include "tamerep/twisted_group.hpp"

namespace tamerep {

/// Residue data of a p-field K: residue characteristic p and q = p^a.
struct PFieldParams {
    std::int64_t p = 0;
    std::int64_t a = 1;
    std::int64_t q() const;
};

/// Numerical data of the level-n quotient G_n: e_n = p^n - 1, s_n the order
/// of q mod e_n, f_n the residue degree of the level-n extension.
struct LevelParams {
    std::int64_t n = 1;
    std::int64_t e_n = 0;
    std::int64_t s_n = 1;
    std::int64_t f_n = 1;
};

/// One irreducible mod-p representation of the tame Galois group.
struct GaloisRepRecord {
    std::int64_t degree = 1;
    std::int64_t level = 1;        // the level n = degree it was found at
    bool unramified = false;       // iff e == 1
    std::int64_t e = 1;            // ramification index of the fixed field (d_chi)
    std::int64_t label_r = 1;      // order of p mod e; defined when ramified
    std::int64_t defdeg = 1;
    PhiOrbit orbit;                // within G_degree
};

/// Compute (e_n, s_n, f_n) for level n: f_n is the least multiple of s_n
/// with e_n (q^{s_n} - 1) | q^{f_n} - 1.  Checks s_n | f_n and e_n | f_n.
LevelParams level_params(const PFieldParams& K, std::int64_t n);

/// The finite quotient G_n as a twisted group T x_q Sigma with |T| = e_n,
/// |Sigma| = f_n.
TwistedGroup galois_group_at_level(const PFieldParams& K, std::int64_t n);

/// All irreducible mod-p representations of the tame Galois group of degree
/// <= N: degree-d representations are collected from G_d only.
std::vector<GaloisRepRecord> classify_galois_reps(const PFieldParams& K, std::int64_t N);

/// Ramified records grouped by label r (the order of p mod e).
std::map<std::int64_t, std::vector<GaloisRepRecord>> ramification_partition(
    const std::vector<GaloisRepRecord>& records);

/// Per-orbit result of the compatibility check between levels n | n'.
struct CompatibilityEntry {
    PairClass orbit_rep;  // canonical pair at level n
    bool compatible = false;
};
struct CompatibilityReport {
    std::int64_t n = 0, n_prime = 0;
    std::vector<CompatibilityEntry> entries;
    bool all_compatible() const;
};

/// Checks that every Phi-orbit of G_n, lifted to G_{n'} (character residue
/// scaled by e_{n'}/e_n, same lambda), yields pi' isomorphic to pi composed
/// with the canonical projection G_{n'} -> G_n.
CompatibilityReport quotient_compatibility_check(const PFieldParams& K,
                                                 std::int64_t n, std::int64_t n_prime);

/// Number of monic irreducible degree-d polynomials over F_p with nonzero
/// constant term: (1/d) sum_{j|d} mu(d/j) (p^j - 1) for d > 1, and p - 1
/// minus the single root-zero polynomial handled for d = 1.  Used as the
/// independent oracle for the unramified count.
std::int64_t unramified_count_oracle(std::int64_t p, std::int64_t d);

}  // namespace tamerep
