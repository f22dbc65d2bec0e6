#pragma once

#include <vector>

#include "tamerep/char_orbits.hpp"
#include "tamerep/matrix.hpp"
#include "tamerep/twisted_group.hpp"

namespace tamerep {

/// A representation of G given by the matrix images of the two generators:
/// t0 (the distinguished generator of T) and sigma.  The defining relations
/// gen_t^e = I, gen_s^f = I, gen_s gen_t gen_s^-1 = gen_t^q are checked at
/// construction time by verify_relations.
struct MatrixRep {
    TwistedGroup group;
    FieldPtr base;
    Matrix gen_t;
    Matrix gen_s;

    int degree() const { return gen_t.rows(); }

    /// Image of (t, i) as gen_t^t * gen_s^i.
    Matrix image(const GroupElem& g) const;
};

/// Throws Verification if the defining relations of G fail.
void verify_relations(const MatrixRep& rep);

/// Exhaustive homomorphism check over the whole group (|G| <= 200).
void verify_homomorphism(const MatrixRep& rep);

/// The monomial model of rho_{chi-bar,lambda} over l~: gen_t diagonal with
/// the s distinct characters of the orbit, gen_s the lambda-twisted cyclic
/// permutation.
MatrixRep build_rho(const TwistedGroup& G, const PairClass& pair);

/// True iff the endomorphism algebra of rho over its base field has
/// dimension 1 (degree <= 12).
bool is_absolutely_irreducible_witness(const MatrixRep& rho);

/// Reads the character orbit from the eigenvalues of gen_t and lambda from
/// the homothety gen_s^s; inverse of build_rho up to basis change.
PairClass recover_pair(const MatrixRep& rho);

/// Restriction of scalars F_{p^m} -> F_p: degree multiplied by m, entries
/// replaced by multiplication matrices in the power basis.
MatrixRep restrict_scalars(const MatrixRep& rep);

/// The irreducible F_p-representation pi attached to a Phi-orbit: rho is
/// written over E0 = F_p(chi, lambda), scalars are restricted to F_p, and
/// one constituent is extracted (they are all isomorphic).  Degree is
/// exactly lcm(r, s*w).
MatrixRep build_pi(const TwistedGroup& G, const PhiOrbit& orbit);

/// Extends pi to l~, splits into constituents, and recovers each parameter
/// pair; for pi = build_pi(O) the result is exactly the members of O.
std::vector<PairClass> decompose_pi_over_tilde(const MatrixRep& pi, const TwistedGroup& G);

/// Canonical key (rep_c, lambda order, lambda log) used to compare pairs.
struct PairKey {
    std::int64_t c, order, log;
    auto operator<=>(const PairKey&) const = default;
};
PairKey pair_key(const PairClass& pr);

}  // namespace tamerep
