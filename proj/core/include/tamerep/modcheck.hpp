#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tamerep/rep_builder.hpp"

// Independent verification engine: spinning, exhaustive irreducibility,
// module isomorphism, constituent splitting, endomorphism fields, and the
// isotypic-submodule census.  Everything here is exhaustive at desk scale by
// design; the bounds below keep each call in the millisecond range for every
// case the classifier produces.

namespace tamerep::modcheck {

/// Echelonized basis of the smallest subspace containing v and closed under
/// gen_t and gen_s.  Deterministic (reduced row echelon form).
std::vector<std::vector<FFElem>> spin(const std::vector<FFElem>& v, const MatrixRep& rep);

/// Exhaustive test: every nonzero vector (up to scalar) spins to the full
/// space.  Requires field_size^dim <= 2^20.
bool is_irreducible(const MatrixRep& rep);

/// Witness form of is_irreducible: a vector spanning a proper invariant
/// subspace when one exists.
std::optional<std::vector<FFElem>> proper_invariant_vector(const MatrixRep& rep);

/// Solves the intertwiner system M rep1(g) = rep2(g) M for the generators;
/// true iff an invertible solution exists.  The intertwiner is returned.
struct IsoResult {
    bool isomorphic = false;
    std::optional<Matrix> intertwiner;
};
IsoResult are_isomorphic(const MatrixRep& rep1, const MatrixRep& rep2);

/// Composition factors via recursive splitting, with multiplicities, sorted
/// by (degree, then a deterministic matrix key).
std::vector<std::pair<MatrixRep, int>> constituents(const MatrixRep& rep);

/// Dimension over the representation's own base field of the commutant
/// algebra (the solution space of the intertwiner system with itself).
int endomorphism_dim_over_base(const MatrixRep& rep);

/// Degree over F_p of End(rep) for irreducible rep (a finite field by
/// Schur's lemma).
std::int64_t endomorphism_field(const MatrixRep& rep);

/// Exhaustive census of submodules of V^m isomorphic to V (diagonal action);
/// equals (q_E^m - 1)/(q_E - 1) with q_E the cardinality of End(V).
std::int64_t submodule_census(const MatrixRep& V, int m);

/// Delegates to twisted_group::p_regular_class_orbits.
std::int64_t berman_irreducible_count(const TwistedGroup& G);

}  // namespace tamerep::modcheck
