#include "tamerep/rep_builder.hpp"

#include <algorithm>
#include <map>

#include "tamerep/modcheck.hpp"
#include "tamerep/numutil.hpp"

namespace tamerep {

Matrix MatrixRep::image(const GroupElem& g) const {
    return gen_t.pow(g.t) * gen_s.pow(g.i);
}

void verify_relations(const MatrixRep& rep) {
    const auto& G = rep.group;
    const Matrix I = Matrix::identity(rep.base, rep.degree());
    if (rep.gen_t.pow(G.e) != I)
        fail(ErrorKind::Verification, "relation gen_t^e = I fails");
    if (rep.gen_s.pow(G.f) != I)
        fail(ErrorKind::Verification, "relation gen_s^f = I fails");
    if (rep.gen_s * rep.gen_t * rep.gen_s.inverse() != rep.gen_t.pow(G.q_mod_e))
        fail(ErrorKind::Verification, "relation gen_s gen_t gen_s^-1 = gen_t^q fails");
}

void verify_homomorphism(const MatrixRep& rep) {
    const auto& G = rep.group;
    if (G.order() > 200) fail(ErrorKind::TooLarge, "homomorphism check bounded at order 200");
    verify_relations(rep);
    std::vector<Matrix> images;
    images.reserve(G.order());
    for (std::int64_t t = 0; t < G.e; ++t)
        for (std::int64_t i = 0; i < G.f; ++i)
            images.push_back(rep.image(GroupElem{t, i}));
    auto idx = [&](const GroupElem& g) { return static_cast<size_t>(g.t * G.f + g.i); };
    for (std::int64_t t1 = 0; t1 < G.e; ++t1)
        for (std::int64_t i1 = 0; i1 < G.f; ++i1)
            for (std::int64_t t2 = 0; t2 < G.e; ++t2)
                for (std::int64_t i2 = 0; i2 < G.f; ++i2) {
                    GroupElem g{t1, i1}, h{t2, i2};
                    if (images[idx(g)] * images[idx(h)] != images[idx(group_law(g, h, G))])
                        fail(ErrorKind::Verification, "NotAHomomorphism");
                }
}

namespace {

// Value of the character theta^c at the distinguished generator of T: the
// reference d-th root of unity raised to the primitive residue c / (e/d).
FFElem char_value(std::int64_t c, const TwistedGroup& G, const FieldPtr& F) {
    const std::int64_t d = c == 0 ? 1 : G.e / num::gcd(G.e, c);
    return canonical_root(G.p, d, F).pow(c == 0 ? 0 : c / (G.e / d));
}

// The monomial model of rho over an arbitrary field containing mu_d and
// mu_{lambda order}: gen_t diagonal with the orbit of characters in
// q-inverse order, gen_s the lambda-twisted cyclic shift.
MatrixRep monomial_model(const TwistedGroup& G, const PairClass& pair, const FieldPtr& F) {
    const std::int64_t s = pair.orbit.s;
    const std::int64_t d = pair.orbit.d;
    Matrix gen_t(F, static_cast<int>(s), static_cast<int>(s));
    // Diagonal entry i carries chi^{q^-i}; with the shift convention below
    // this realizes the induced action with its lambda-twisted wrap-around.
    const std::int64_t q_inv = num::mod_inverse(G.q_mod_e % d == 0 ? 1 : G.q_mod_e % d, d);
    const FFElem zeta_d = canonical_root(G.p, d, F);
    std::int64_t exp = pair.orbit.rep_c == 0 ? 0 : pair.orbit.rep_c / (G.e / d);
    for (int i = 0; i < s; ++i) {
        gen_t.at(i, i) = zeta_d.pow(exp);
        exp = exp * q_inv % d;
    }

    const FFElem lambda = canonical_root(G.p, pair.lambda.order, F).pow(pair.lambda.log);
    Matrix gen_s(F, static_cast<int>(s), static_cast<int>(s));
    for (int i = 0; i + 1 < s; ++i) gen_s.at(i + 1, i) = F->one();
    gen_s.at(0, static_cast<int>(s) - 1) = lambda;

    MatrixRep rep{G, F, std::move(gen_t), std::move(gen_s)};
    verify_relations(rep);
    return rep;
}

}  // namespace

MatrixRep build_rho(const TwistedGroup& G, const PairClass& pair) {
    const FieldPtr lt = tilde_field(G.p, G.a, G.f);
    if (lt->size() > (1u << 24)) fail(ErrorKind::TooLarge, "FieldTooLarge: l~ beyond desk bound");
    return monomial_model(G, pair, lt);
}

bool is_absolutely_irreducible_witness(const MatrixRep& rho) {
    if (rho.degree() > 12) fail(ErrorKind::TooLarge, "DegreeTooLarge");
    return modcheck::endomorphism_dim_over_base(rho) == 1;
}

PairClass recover_pair(const MatrixRep& rho) {
    const auto& G = rho.group;
    const FieldPtr& lt = rho.base;
    const int n = rho.degree();
    const Matrix I = Matrix::identity(lt, n);

    // Eigenvalues of gen_t are the distinct character values.
    std::vector<std::int64_t> eigen;
    for (std::int64_t c = 0; c < G.e; ++c) {
        Matrix shifted = rho.gen_t;
        const FFElem z = char_value(c, G, lt);
        for (int i = 0; i < n; ++i) shifted.at(i, i) = shifted.at(i, i) - z;
        if (shifted.det().is_zero()) eigen.push_back(c);
    }
    if (static_cast<int>(eigen.size()) != n)
        fail(ErrorKind::Verification, "NotMonomialForm: gen_t eigenvalues not n distinct character values");

    // The eigenvalue set must be a single Sigma-orbit.
    const std::int64_t c0 = *std::min_element(eigen.begin(), eigen.end());
    std::vector<std::int64_t> orbit_members;
    {
        std::int64_t cur = c0;
        do {
            orbit_members.push_back(cur);
            cur = cur * G.q_mod_e % G.e;
        } while (cur != c0);
    }
    std::sort(orbit_members.begin(), orbit_members.end());
    std::vector<std::int64_t> sorted_eigen = eigen;
    std::sort(sorted_eigen.begin(), sorted_eigen.end());
    if (orbit_members != sorted_eigen)
        fail(ErrorKind::Verification, "NotMonomialForm: eigenvalues are not one Sigma-orbit");

    const std::int64_t s = static_cast<std::int64_t>(orbit_members.size());
    const Matrix hom = rho.gen_s.pow(s);
    if (!hom.is_scalar()) fail(ErrorKind::Verification, "NotAScalar: gen_s^s is not a homothety");
    const FFElem lam = hom.at(0, 0);

    PairClass pr;
    auto inv = char_invariants(c0, G);
    pr.orbit.rep_c = c0;
    pr.orbit.members = orbit_members;
    pr.orbit.d = inv.d;
    pr.orbit.r = inv.r;
    pr.orbit.s = inv.s;

    const std::int64_t order =
        lam == lt->one() ? 1 : static_cast<std::int64_t>(lt->multiplicative_order(lam));
    const FFElem zeta_o = canonical_root(G.p, order, lt);
    std::int64_t log = -1;
    FFElem cur = lt->one();
    for (std::int64_t k = 0; k < order; ++k) {
        if (cur == lam) { log = k; break; }
        cur = cur * zeta_o;
    }
    if (log < 0) fail(ErrorKind::Internal, "lambda log not found");
    pr.lambda = Lambda{order, log, num::mult_order_mod(G.p, order)};
    return pr;
}

MatrixRep restrict_scalars(const MatrixRep& rep) {
    const FieldPtr& E = rep.base;
    const int m = E->m();
    const int n = rep.degree();
    if (m * n > 64) fail(ErrorKind::TooLarge, "TooLarge: restricted degree exceeds 64");
    const FieldPtr Fp = Field::make(E->p(), 1);

    auto blow_up = [&](const Matrix& M) {
        Matrix out(Fp, m * n, m * n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                const FFElem& x = M.at(r, c);
                if (x.is_zero()) continue;
                // column j of the block = coefficients of x * xbar^j
                FFElem xj = x;
                const FFElem xbar = E->from_coeffs([&] {
                    std::vector<int> v(m, 0);
                    if (m > 1) v[1] = 1; else v[0] = 1;  // m = 1: xbar = 1
                    return v;
                }());
                for (int j = 0; j < m; ++j) {
                    for (int i = 0; i < m; ++i)
                        out.at(r * m + i, c * m + j) = Fp->from_int(xj.coeffs()[i]);
                    xj = xj * xbar;
                }
            }
        return out;
    };

    MatrixRep out{rep.group, Fp, blow_up(rep.gen_t), blow_up(rep.gen_s)};
    verify_relations(out);
    return out;
}

namespace {

// rho written over its field of values E0 = F_p(chi, lambda) = F_{p^lcm(r,w)}.
// Same monomial model, same reference roots; since the references live in
// minimal fields, this agrees with the l~ model up to a Galois twist, which
// extension of scalars cannot see.
MatrixRep rho_over_definition_field(const TwistedGroup& G, const PairClass& pair) {
    const std::int64_t deg = num::lcm(pair.orbit.r, pair.lambda.w);
    const FieldPtr E0 = Field::make(G.p, static_cast<int>(deg));
    return monomial_model(G, pair, E0);
}

}  // namespace

MatrixRep build_pi(const TwistedGroup& G, const PhiOrbit& orbit) {
    const auto& pr = orbit.canonical;
    if (orbit.degree > 16) fail(ErrorKind::TooLarge, "TooLarge: pi degree exceeds 16");

    MatrixRep res = restrict_scalars(rho_over_definition_field(G, pr));
    auto parts = modcheck::constituents(res);
    if (parts.empty()) fail(ErrorKind::Internal, "no constituents found");
    // all constituents must be pairwise isomorphic (isotypicity)
    for (size_t i = 1; i < parts.size(); ++i)
        if (!modcheck::are_isomorphic(parts[0].first, parts[i].first).isomorphic)
            fail(ErrorKind::Verification, "IsotypicityViolation");

    MatrixRep pi = parts.front().first;
    if (pi.degree() != orbit.degree)
        fail(ErrorKind::Verification,
             "degree formula violated: got " + std::to_string(pi.degree()) + ", expected " +
                 std::to_string(orbit.degree));
    return pi;
}

std::vector<PairClass> decompose_pi_over_tilde(const MatrixRep& pi, const TwistedGroup& G) {
    if (pi.degree() > 12) fail(ErrorKind::TooLarge, "TooLarge: degree exceeds 12");
    const FieldPtr lt = tilde_field(G.p, G.a, G.f);
    const FieldPtr& Fp = pi.base;
    auto up = [&](const FFElem& x) { return embed(x, Fp, lt); };
    MatrixRep ext{G, lt, pi.gen_t.map_entries(lt, up), pi.gen_s.map_entries(lt, up)};
    verify_relations(ext);

    std::vector<PairClass> out;
    for (const auto& [part, mult] : modcheck::constituents(ext))
        for (int i = 0; i < mult; ++i) out.push_back(recover_pair(part));
    std::sort(out.begin(), out.end(), [](const PairClass& x, const PairClass& y) {
        return pair_key(x) < pair_key(y);
    });
    return out;
}

PairKey pair_key(const PairClass& pr) {
    return PairKey{pr.orbit.rep_c, pr.lambda.order, pr.lambda.log};
}

}  // namespace tamerep
