#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tamerep/common.hpp"

namespace tamerep {

/// The group G = T x_q Sigma: T cyclic of order e written additively as
/// Z/eZ, Sigma cyclic of order f, and the generator sigma of Sigma acting on
/// T by multiplication by q = p^a.  Multiplication law
/// (t,i)(u,j) = (t + q^i u mod e, i+j mod f).
struct TwistedGroup {
    std::int64_t p = 0;
    std::int64_t a = 0;
    std::int64_t e = 0;
    std::int64_t f = 0;
    std::int64_t q = 0;       // p^a
    std::int64_t q_mod_e = 0;

    std::int64_t order() const { return e * f; }
    bool is_commutative() const { return e == 1 || q_mod_e == 1 % e; }
};

struct GroupElem {
    std::int64_t t = 0;
    std::int64_t i = 0;
    bool operator==(const GroupElem&) const = default;
};

/// Construct G = T x_q Sigma.  Requires p prime, e >= 1, f >= 1, and
/// e | q^f - 1 (so that T embeds in l^x).
TwistedGroup make_group(std::int64_t p, std::int64_t a, std::int64_t e, std::int64_t f);

GroupElem group_identity();
GroupElem group_law(const GroupElem& g, const GroupElem& h, const TwistedGroup& G);
GroupElem group_inverse(const GroupElem& g, const TwistedGroup& G);
GroupElem group_power(GroupElem g, std::int64_t k, const TwistedGroup& G);
std::int64_t element_order(const GroupElem& g, const TwistedGroup& G);

/// Partition of all e*f elements into conjugacy classes, each sorted, the
/// list sorted by smallest member.  Exhaustive; requires e*f <= 10^4.
std::vector<std::vector<GroupElem>> conjugacy_classes(const TwistedGroup& G);

/// Berman's count: orbits of p-regular conjugacy classes under
/// class(g) -> class(g^p).  Equals the number of irreducible
/// F_p-representations of G.
std::int64_t p_regular_class_orbits(const TwistedGroup& G);

/// A finite group given by its full multiplication table.  Verified
/// associative with identity and inverses at construction (order <= 200).
struct FiniteGroupTable {
    int order = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> mul;  // mul[g][h]

    int identity() const;
    int inverse(int g) const;
    int element_order(int g) const;
};

FiniteGroupTable make_table(int order, std::vector<std::string> labels,
                            std::vector<std::vector<int>> mul);

/// Number of conjugacy classes of a table group.
int table_class_count(const FiniteGroupTable& T);

/// Subgroup generated by all commutators, as a sorted element list.
std::vector<int> derived_subgroup(const FiniteGroupTable& T);

/// Name the group by invariant signatures: cyclic n, elementary-abelian p^k,
/// dihedral n, S3, A4, S4, abelian invariants, or a generic signature string
/// when nothing matches.
std::string identify_small_group(const FiniteGroupTable& T);

struct MatrixRep;

/// The twisted product F_p^d x_pi G for a degree-d representation pi of G
/// over the prime field: elements (v, g), law (v,g)(w,h) = (v + pi(g)w, gh).
/// Verifies that pi is a homomorphism and that p^d * |G| <= 200.
FiniteGroupTable twist_by_rep(const MatrixRep& pi, const TwistedGroup& G);

}  // namespace tamerep
