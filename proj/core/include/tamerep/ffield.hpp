#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "tamerep/common.hpp"

namespace tamerep {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// An element of F_{p^m}, stored as a length-m coefficient vector over F_p
/// (coefficient i multiplies x^i modulo the field's defining polynomial).
class FFElem {
public:
    FFElem() : field_(nullptr) {}
    FFElem(const Field* field, std::vector<int> coeffs)
        : field_(field), coeffs_(std::move(coeffs)) {}

    const Field* field() const { return field_; }
    const std::vector<int>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool operator==(const FFElem& o) const;
    bool operator!=(const FFElem& o) const { return !(*this == o); }

    // Packed base-p encoding; total order and hash key for desk-scale sets.
    std::uint64_t key() const;

    FFElem operator+(const FFElem& o) const;
    FFElem operator-(const FFElem& o) const;
    FFElem operator*(const FFElem& o) const;
    FFElem operator-() const;
    FFElem inverse() const;
    FFElem pow(std::int64_t k) const;

private:
    const Field* field_;
    std::vector<int> coeffs_;
};

/// Deterministic model of F_{p^m}.  The defining modulus is the
/// lexicographically smallest monic irreducible of degree m over F_p
/// (coefficients compared low-degree-first) and the stored generator is the
/// lexicographically smallest element of multiplicative order p^m - 1, so the
/// same (p, m) always produces identical fields, discrete logs, and roots of
/// unity.  Instances are cached and shared; everything is immutable.
class Field {
public:
    /// Build (or fetch from the cache) F_{p^m}.  Requires p prime and
    /// 1 <= m <= 24 with p^m - 1 a machine integer.
    static FieldPtr make(std::int64_t p, int m);

    std::int64_t p() const { return p_; }
    int m() const { return m_; }
    std::uint64_t size() const { return size_; }           // p^m
    std::uint64_t unit_order() const { return size_ - 1; }  // p^m - 1
    const std::vector<int>& modulus() const { return modulus_; }

    FFElem zero() const;
    FFElem one() const;
    FFElem generator() const;

    /// Scalar of the prime field, v mod p.
    FFElem from_int(std::int64_t v) const;
    FFElem from_coeffs(std::vector<int> coeffs) const;

    /// Element at position idx in the deterministic lexicographic enumeration
    /// (coefficient of degree 0 is the most significant comparison key).
    FFElem element_at(std::uint64_t idx) const;

    std::uint64_t multiplicative_order(const FFElem& x) const;

    /// generator^((p^m-1)/d); exact order d.  Requires d | p^m - 1.
    FFElem root_of_unity(std::int64_t d) const;

    /// Exponent n in [0, p^m-1) with generator^n = x.  Baby-step/giant-step;
    /// requires the field size to be at most 2^24.
    std::uint64_t discrete_log(const FFElem& x) const;

    FFElem add(const FFElem& a, const FFElem& b) const;
    FFElem sub(const FFElem& a, const FFElem& b) const;
    FFElem mul(const FFElem& a, const FFElem& b) const;
    FFElem neg(const FFElem& a) const;
    FFElem inv(const FFElem& a) const;
    FFElem pow(const FFElem& a, std::int64_t k) const;

private:
    Field(std::int64_t p, int m);

    std::int64_t p_;
    int m_;
    std::uint64_t size_;
    std::vector<int> modulus_;     // length m+1, monic
    std::vector<int> generator_;   // coefficient vector
};

/// Image of x under the fixed embedding sub -> sup (the one sending the
/// subfield generator's residue class to the lexicographically smallest root
/// of the subfield modulus in sup).  Requires sub.m | sup.m, same p.
FFElem embed(const FFElem& x, const FieldPtr& sub, const FieldPtr& sup);

/// Inverse of embed on its image: the unique y in sub with embed(y) = x.
/// Fails if x is not in the embedded copy of sub.
FFElem pull_back(const FFElem& x, const FieldPtr& sub, const FieldPtr& sup);

/// The reference d-th root of unity: generator^((p^r-1)/d) computed in the
/// minimal field F_{p^r} containing mu_d (r = ord(p mod d)) and carried into
/// target along the fixed embedding.  Anchoring the reference in the minimal
/// field makes character and lambda values comparable across every group and
/// level that shares the same d.  Requires r | target.m.
FFElem canonical_root(std::int64_t p, std::int64_t d, const FieldPtr& target);

/// The field l~ = l(mu_{f'}) of the classification: F_{p^M} with
/// M = lcm(a*f, ord(p mod f')) where f' is the prime-to-p part of f.
FieldPtr tilde_field(std::int64_t p, std::int64_t a, std::int64_t f);

}  // namespace tamerep
