#pragma once

#include <cstdint>
#include <vector>

#include "tamerep/twisted_group.hpp"

namespace tamerep {

/// Sigma-orbit of a character chi = theta^c of T, identified with the orbit
/// of the residue c mod e under multiplication by q.  d is the order of chi,
/// r and s the multiplicative orders of p and q mod d (s is also the orbit
/// size).
struct CharOrbit {
    std::int64_t rep_c = 0;           // smallest member
    std::vector<std::int64_t> members;  // sorted
    std::int64_t d = 1;
    std::int64_t r = 1;
    std::int64_t s = 1;
};

/// An admissible lambda: element of l~ of order dividing the prime-to-p part
/// of f/s, stored as (order, log) against the deterministic root of unity,
/// lambda = zeta_order^log with gcd(log, order) = 1.  w = [F_p(lambda):F_p].
struct Lambda {
    std::int64_t order = 1;
    std::int64_t log = 0;
    std::int64_t w = 1;
    bool operator==(const Lambda&) const = default;
};

/// Parameter of one absolutely irreducible representation over l~.
struct PairClass {
    CharOrbit orbit;
    Lambda lambda;
};

/// Phi-orbit of a PairClass under (chi-bar, lambda) -> (chi-bar^p, lambda^p);
/// one F_p-irreducible.  size = defdeg = lcm(r/s, w); degree = lcm(r, s*w).
struct PhiOrbit {
    PairClass canonical;             // lexicographically least member
    std::vector<PairClass> members;  // in action order starting from canonical
    std::int64_t size = 1;
    std::int64_t degree = 1;
    std::int64_t defdeg = 1;
};

/// (d, r, s) for the character theta^c: d = e/gcd(e,c), r = ord(p mod d),
/// s = ord(q mod d), with ord(x mod 1) = 1.
struct CharInvariants {
    std::int64_t d, r, s;
};
CharInvariants char_invariants(std::int64_t c, const TwistedGroup& G);

/// All Sigma-orbits of residues mod e, sorted by canonical representative.
std::vector<CharOrbit> enumerate_character_orbits(const TwistedGroup& G);

/// All lambda with order dividing the prime-to-p part of f/s, each element
/// listed exactly once, sorted by (order, log).
std::vector<Lambda> enumerate_lambda(const TwistedGroup& G, const CharOrbit& orbit);

/// The full list of absolutely irreducible parameters (chi-bar, lambda).
std::vector<PairClass> enumerate_pairs(const TwistedGroup& G);

/// Partition of all PairClass values into Phi-orbits, sorted by canonical
/// representative.  The count equals the Berman irreducible count of G.
std::vector<PhiOrbit> phi_orbits(const TwistedGroup& G);

}  // namespace tamerep
