#include "tamerep/twisted_group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tamerep/numutil.hpp"
#include "tamerep/rep_builder.hpp"

namespace tamerep {

namespace {

std::int64_t norm_mod(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

// index <-> element for exhaustive loops
int elem_index(const GroupElem& g, const TwistedGroup& G) {
    return static_cast<int>(g.t * G.f + g.i);
}
GroupElem elem_at(int idx, const TwistedGroup& G) {
    return GroupElem{idx / G.f, idx % G.f};
}

}  // namespace

TwistedGroup make_group(std::int64_t p, std::int64_t a, std::int64_t e, std::int64_t f) {
    if (!num::is_prime(p)) fail(ErrorKind::Parameter, "NonPrime: p = " + std::to_string(p));
    if (a < 1 || e < 1 || f < 1)
        fail(ErrorKind::Parameter, "IncompatibleParameters: a, e, f must be >= 1");
    const std::int64_t q = num::ipow(p, a);
    // e | q^f - 1, tested mod e
    if (num::mod_pow(q, f, e) != 1 % e)
        fail(ErrorKind::Parameter,
             "IncompatibleParameters: e = " + std::to_string(e) + " does not divide q^f - 1 (q = " +
                 std::to_string(q) + ", f = " + std::to_string(f) + ")");
    TwistedGroup G;
    G.p = p;
    G.a = a;
    G.e = e;
    G.f = f;
    G.q = q;
    G.q_mod_e = norm_mod(q, e);
    return G;
}

GroupElem group_identity() { return GroupElem{0, 0}; }

GroupElem group_law(const GroupElem& g, const GroupElem& h, const TwistedGroup& G) {
    const std::int64_t qi = num::mod_pow(G.q, norm_mod(g.i, G.f), G.e);
    return GroupElem{norm_mod(g.t + qi * h.t, G.e), norm_mod(g.i + h.i, G.f)};
}

GroupElem group_inverse(const GroupElem& g, const TwistedGroup& G) {
    // (t, i)^-1 = (-q^{-i} t, -i)
    const std::int64_t i_inv = norm_mod(-g.i, G.f);
    const std::int64_t q_pow = num::mod_pow(G.q, i_inv, G.e);
    return GroupElem{norm_mod(-q_pow * g.t, G.e), i_inv};
}

GroupElem group_power(GroupElem g, std::int64_t k, const TwistedGroup& G) {
    if (k < 0) return group_power(group_inverse(g, G), -k, G);
    GroupElem r = group_identity();
    while (k > 0) {
        if (k & 1) r = group_law(r, g, G);
        g = group_law(g, g, G);
        k >>= 1;
    }
    return r;
}

std::int64_t element_order(const GroupElem& g, const TwistedGroup& G) {
    GroupElem cur = g;
    std::int64_t n = 1;
    while (!(cur == group_identity())) {
        cur = group_law(cur, g, G);
        ++n;
        if (n > G.order()) fail(ErrorKind::Internal, "element order exceeded group order");
    }
    return n;
}

std::vector<std::vector<GroupElem>> conjugacy_classes(const TwistedGroup& G) {
    const std::int64_t n = G.order();
    if (n > 10000) fail(ErrorKind::TooLarge, "GroupTooLarge: order " + std::to_string(n));
    std::vector<bool> seen(n, false);
    std::vector<std::vector<GroupElem>> classes;
    for (int idx = 0; idx < n; ++idx) {
        if (seen[idx]) continue;
        GroupElem g = elem_at(idx, G);
        std::set<int> cls;
        for (int hid = 0; hid < n; ++hid) {
            GroupElem h = elem_at(hid, G);
            GroupElem c = group_law(group_law(h, g, G), group_inverse(h, G), G);
            cls.insert(elem_index(c, G));
        }
        std::vector<GroupElem> members;
        for (int cid : cls) {
            seen[cid] = true;
            members.push_back(elem_at(cid, G));
        }
        classes.push_back(std::move(members));
    }
    return classes;
}

std::int64_t p_regular_class_orbits(const TwistedGroup& G) {
    auto classes = conjugacy_classes(G);
    const int nc = static_cast<int>(classes.size());
    // class membership lookup
    std::vector<int> class_of(G.order(), -1);
    for (int c = 0; c < nc; ++c)
        for (const GroupElem& g : classes[c]) class_of[elem_index(g, G)] = c;

    std::vector<int> regular;  // indices of p-regular classes
    std::vector<int> power_class(nc, -1);
    for (int c = 0; c < nc; ++c) {
        const GroupElem& g = classes[c].front();
        if (element_order(g, G) % G.p == 0) continue;
        regular.push_back(c);
        power_class[c] = class_of[elem_index(group_power(g, G.p, G), G)];
    }
    // orbits of class -> class^p on the p-regular classes
    std::set<int> unseen(regular.begin(), regular.end());
    std::int64_t orbits = 0;
    while (!unseen.empty()) {
        int start = *unseen.begin();
        int cur = start;
        do {
            unseen.erase(cur);
            cur = power_class[cur];
        } while (cur != start && unseen.count(cur));
        ++orbits;
    }
    return orbits;
}

// ---------------------------------------------------------------------------
// Multiplication-table groups

int FiniteGroupTable::identity() const {
    for (int e = 0; e < order; ++e) {
        bool ok = true;
        for (int g = 0; g < order && ok; ++g)
            ok = mul[e][g] == g && mul[g][e] == g;
        if (ok) return e;
    }
    fail(ErrorKind::Verification, "table has no identity");
}

int FiniteGroupTable::inverse(int g) const {
    const int e = identity();
    for (int h = 0; h < order; ++h)
        if (mul[g][h] == e) return h;
    fail(ErrorKind::Verification, "element has no inverse");
}

int FiniteGroupTable::element_order(int g) const {
    const int e = identity();
    int cur = g, n = 1;
    while (cur != e) {
        cur = mul[cur][g];
        ++n;
    }
    return n;
}

FiniteGroupTable make_table(int order, std::vector<std::string> labels,
                            std::vector<std::vector<int>> mul) {
    if (order > 200) fail(ErrorKind::TooLarge, "TooLarge: table group order " + std::to_string(order));
    FiniteGroupTable T{order, std::move(labels), std::move(mul)};
    // exhaustive associativity
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (T.mul[T.mul[a][b]][c] != T.mul[a][T.mul[b][c]])
                    fail(ErrorKind::Verification, "table not associative");
    T.identity();           // throws if missing
    for (int g = 0; g < order; ++g) T.inverse(g);
    return T;
}

int table_class_count(const FiniteGroupTable& T) {
    std::vector<bool> seen(T.order, false);
    int count = 0;
    for (int g = 0; g < T.order; ++g) {
        if (seen[g]) continue;
        ++count;
        for (int h = 0; h < T.order; ++h) {
            int c = T.mul[T.mul[h][g]][T.inverse(h)];
            seen[c] = true;
        }
    }
    return count;
}

std::vector<int> derived_subgroup(const FiniteGroupTable& T) {
    std::set<int> gens;
    for (int a = 0; a < T.order; ++a)
        for (int b = 0; b < T.order; ++b) {
            int c = T.mul[T.mul[T.mul[a][b]][T.inverse(a)]][T.inverse(b)];
            gens.insert(c);
        }
    // closure
    std::set<int> sub(gens.begin(), gens.end());
    sub.insert(T.identity());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(sub.begin(), sub.end());
        for (int a : cur)
            for (int b : cur)
                if (sub.insert(T.mul[a][b]).second) grew = true;
    }
    return {sub.begin(), sub.end()};
}

namespace {

bool table_is_abelian(const FiniteGroupTable& T) {
    for (int a = 0; a < T.order; ++a)
        for (int b = 0; b < a; ++b)
            if (T.mul[a][b] != T.mul[b][a]) return false;
    return true;
}

// Element-order histogram as sorted (order, count) pairs.
std::map<int, int> order_histogram(const FiniteGroupTable& T) {
    std::map<int, int> h;
    for (int g = 0; g < T.order; ++g) ++h[T.element_order(g)];
    return h;
}

// All abelian groups of order n as invariant-factor lists, with their
// element-order histograms; used to name an abelian table by matching.
void abelian_candidates(int n, std::vector<std::vector<int>>& out,
                        std::vector<int> current, int max_factor) {
    if (n == 1) {
        out.push_back(current);
        return;
    }
    for (int d = 2; d <= std::min(n, max_factor); ++d) {
        if (n % d != 0) continue;
        auto next = current;
        next.insert(next.begin(), d);
        // invariant factors: each divides the next; we build smallest-first
        abelian_candidates(n / d, out, next, d);
    }
}

std::map<int, int> abelian_order_histogram(const std::vector<int>& factors) {
    // direct product of cyclic groups; histogram by enumerating orders
    std::map<int, int> h;
    std::vector<int> idx(factors.size(), 0);
    while (true) {
        int ord = 1;
        for (size_t i = 0; i < factors.size(); ++i)
            ord = static_cast<int>(num::lcm(ord, factors[i] / num::gcd(factors[i], idx[i])));
        ++h[ord];
        size_t pos = 0;
        while (pos < factors.size()) {
            if (++idx[pos] < factors[pos]) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == factors.size()) break;
    }
    return h;
}

std::string join_factors(const std::vector<int>& factors) {
    std::string s;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += " x ";
        s += "Z/" + std::to_string(factors[i]);
    }
    return s;
}

bool is_dihedral(const FiniteGroupTable& T) {
    const int n = T.order / 2;
    if (T.order % 2 != 0 || n < 3) return false;
    for (int r = 0; r < T.order; ++r) {
        if (T.element_order(r) != n) continue;
        for (int s = 0; s < T.order; ++s) {
            if (T.element_order(s) != 2) continue;
            // s r s^-1 == r^-1 and <r, s> = G
            if (T.mul[T.mul[s][r]][T.inverse(s)] != T.inverse(r)) continue;
            std::set<int> gen = {T.identity()};
            int cur = T.identity();
            for (int k = 0; k < n; ++k) {
                cur = T.mul[cur][r];
                gen.insert(cur);
                gen.insert(T.mul[s][cur]);
            }
            if (static_cast<int>(gen.size()) == T.order) return true;
        }
    }
    return false;
}

}  // namespace

std::string identify_small_group(const FiniteGroupTable& T) {
    if (T.order > 200) fail(ErrorKind::TooLarge, "TooLarge: order " + std::to_string(T.order));
    const int n = T.order;
    if (n == 1) return "trivial";

    if (table_is_abelian(T)) {
        for (int g = 0; g < n; ++g)
            if (T.element_order(g) == n) return "cyclic " + std::to_string(n);
        // elementary abelian p^k?
        {
            int p = 0;
            for (int g = 0; g < n; ++g)
                if (g != T.identity()) { p = T.element_order(g); break; }
            bool elementary = num::is_prime(p);
            for (int g = 0; g < n && elementary; ++g)
                if (g != T.identity() && T.element_order(g) != p) elementary = false;
            if (elementary) {
                int k = 0;
                for (int m = n; m > 1; m /= p) ++k;
                return "elementary-abelian " + std::to_string(p) + "^" + std::to_string(k);
            }
        }
        // match against all abelian groups of order n by order histogram
        std::vector<std::vector<int>> candidates;
        abelian_candidates(n, candidates, {}, n);
        auto hist = order_histogram(T);
        for (const auto& factors : candidates) {
            // require invariant-factor chain d1 | d2 | ...
            bool chain = true;
            for (size_t i = 0; i + 1 < factors.size(); ++i)
                if (factors[i + 1] % factors[i] != 0) chain = false;
            if (!chain) continue;
            if (abelian_order_histogram(factors) == hist)
                return "abelian " + join_factors(factors);
        }
        fail(ErrorKind::Internal, "abelian table matched no invariant-factor list");
    }

    const int classes = table_class_count(T);
    const int derived = static_cast<int>(derived_subgroup(T).size());
    if (n == 6) return "S3";
    if (n == 12 && derived == 4 && classes == 4) return "A4";
    if (n == 24 && derived == 12 && classes == 5) return "S4";
    if (is_dihedral(T)) return "dihedral " + std::to_string(n / 2);

    // generic signature: order, class count, derived series sizes, order histogram
    std::string sig = "group(order=" + std::to_string(n) + ", classes=" + std::to_string(classes) +
                      ", derived=" + std::to_string(derived) + ", orders={";
    bool first = true;
    for (auto [ord, cnt] : order_histogram(T)) {
        if (!first) sig += ", ";
        first = false;
        sig += std::to_string(ord) + ":" + std::to_string(cnt);
    }
    sig += "})";
    return sig;
}

FiniteGroupTable twist_by_rep(const MatrixRep& pi, const TwistedGroup& G) {
    const FieldPtr& F = pi.base;
    if (F->m() != 1) fail(ErrorKind::Parameter, "twist_by_rep: pi must be over the prime field");
    const int d = pi.degree();
    std::int64_t vcount = 1;
    for (int i = 0; i < d; ++i) vcount *= F->p();
    if (vcount * G.order() > 200)
        fail(ErrorKind::TooLarge, "TooLarge: twisted product order exceeds 200");

    verify_homomorphism(pi);  // throws NotAHomomorphism-style Verification error

    const std::int64_t n = G.order();
    const std::int64_t total = vcount * n;

    auto vec_at = [&](std::int64_t idx) {
        std::vector<FFElem> v(d, F->zero());
        for (int i = 0; i < d; ++i) {
            v[i] = F->from_int(idx % F->p());
            idx /= F->p();
        }
        return v;
    };
    auto vec_index = [&](const std::vector<FFElem>& v) {
        std::int64_t idx = 0;
        for (int i = d - 1; i >= 0; --i) idx = idx * F->p() + v[i].coeffs()[0];
        return idx;
    };

    std::vector<std::string> labels(total);
    std::vector<std::vector<int>> mul(total, std::vector<int>(total, 0));
    for (std::int64_t i = 0; i < total; ++i) {
        const std::int64_t vi = i / n;
        const GroupElem gi = elem_at(static_cast<int>(i % n), G);
        labels[i] = "(v" + std::to_string(vi) + ",t" + std::to_string(gi.t) + ",s" +
                    std::to_string(gi.i) + ")";
        const Matrix pg = pi.image(gi);
        const auto v = vec_at(vi);
        for (std::int64_t j = 0; j < total; ++j) {
            const std::int64_t vj = j / n;
            const GroupElem gj = elem_at(static_cast<int>(j % n), G);
            auto w = pg.apply(vec_at(vj));
            for (int x = 0; x < d; ++x) w[x] = w[x] + v[x];
            const GroupElem gk = group_law(gi, gj, G);
            mul[i][j] = static_cast<int>(vec_index(w) * n + elem_index(gk, G));
        }
    }
    return make_table(static_cast<int>(total), std::move(labels), std::move(mul));
}

}  // namespace tamerep
