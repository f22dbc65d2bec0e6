#include "tamerep/ffield.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <unordered_map>
#include <utility>

#include "tamerep/numutil.hpp"

namespace tamerep {

namespace {

using Poly = std::vector<int>;  // coefficient i multiplies x^i

int pmod(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

// Remainder of a modulo b over F_p; b monic.
Poly poly_rem(Poly a, const Poly& b, std::int64_t p) {
    const int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        int c = a[i];
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j)
            a[i - db + j] = pmod(a[i - db + j] - static_cast<std::int64_t>(c) * b[j], p);
    }
    a.resize(db);
    return a;
}

bool poly_is_zero(const Poly& a) {
    return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::int64_t p) {
    std::vector<std::int64_t> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] += static_cast<std::int64_t>(a[i]) * b[j];
    }
    Poly c(prod.size());
    for (size_t i = 0; i < prod.size(); ++i) c[i] = pmod(prod[i], p);
    return c.size() >= f.size() ? poly_rem(std::move(c), f, p) : [&] {
        c.resize(f.size() - 1, 0);
        return c;
    }();
}

// x^e mod f by binary exponentiation.
Poly poly_xpow(std::uint64_t e, const Poly& f, std::int64_t p) {
    const int m = static_cast<int>(f.size()) - 1;
    Poly result(m, 0), base(m, 0);
    result[0] = 1;
    if (m == 1) {
        // x = -f[0] in the residue ring
        base[0] = pmod(-f[0], p);
    } else {
        base[1] = 1;
    }
    while (e > 0) {
        if (e & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

int poly_deg(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
    while (poly_deg(b) >= 0) {
        int db = poly_deg(b);
        Poly bm(b.begin(), b.begin() + db + 1);
        // make monic
        const std::int64_t inv = num::mod_inverse(bm[db], p);
        for (int& c : bm) c = pmod(static_cast<std::int64_t>(c) * inv, p);
        Poly r = a.size() > static_cast<size_t>(db) ? poly_rem(std::move(a), bm, p) : std::move(a);
        a = std::move(bm);
        b = std::move(r);
    }
    return a;
}

// Rabin's criterion: f (monic, degree m) is irreducible over F_p iff
// x^{p^m} = x mod f and gcd(x^{p^{m/l}} - x, f) = 1 for every prime l | m.
bool is_irreducible(const Poly& f, std::int64_t p) {
    const int m = static_cast<int>(f.size()) - 1;
    if (m == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    auto pk = [&](int k) {
        std::uint64_t e = 1;
        for (int i = 0; i < k; ++i) e *= static_cast<std::uint64_t>(p);
        return e;
    };
    Poly frob = poly_xpow(pk(m), f, p);
    Poly x(m, 0);
    x[1] = 1;
    if (frob != x) return false;
    for (std::int64_t ell : num::prime_factors(m)) {
        Poly h = poly_xpow(pk(m / static_cast<int>(ell)), f, p);
        // h - x
        h[1] = pmod(h[1] - 1, p);
        if (poly_deg(poly_gcd(f, std::move(h), p)) != 0) return false;
    }
    return true;
}

struct FieldKey {
    std::int64_t p;
    int m;
    bool operator<(const FieldKey& o) const {
        return p != o.p ? p < o.p : m < o.m;
    }
};

std::mutex g_registry_mutex;
std::map<FieldKey, std::shared_ptr<Field>>& field_registry() {
    static std::map<FieldKey, std::shared_ptr<Field>> reg;
    return reg;
}

// Cache of embedding data: image of the subfield's residue class x-bar.
std::map<std::pair<FieldKey, FieldKey>, FFElem>& embed_registry() {
    static std::map<std::pair<FieldKey, FieldKey>, FFElem> reg;
    return reg;
}

}  // namespace

// ---------------------------------------------------------------------------
// FFElem

bool FFElem::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

bool FFElem::operator==(const FFElem& o) const {
    if (field_ != o.field_) fail(ErrorKind::Parameter, "FieldMismatch in comparison");
    return coeffs_ == o.coeffs_;
}

std::uint64_t FFElem::key() const {
    std::uint64_t k = 0;
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i)
        k = k * static_cast<std::uint64_t>(field_->p()) + static_cast<std::uint64_t>(coeffs_[i]);
    return k;
}

FFElem FFElem::operator+(const FFElem& o) const { return field_->add(*this, o); }
FFElem FFElem::operator-(const FFElem& o) const { return field_->sub(*this, o); }
FFElem FFElem::operator*(const FFElem& o) const { return field_->mul(*this, o); }
FFElem FFElem::operator-() const { return field_->neg(*this); }
FFElem FFElem::inverse() const { return field_->inv(*this); }
FFElem FFElem::pow(std::int64_t k) const { return field_->pow(*this, k); }

// ---------------------------------------------------------------------------
// Field

Field::Field(std::int64_t p, int m) : p_(p), m_(m) {
    size_ = 1;
    for (int i = 0; i < m; ++i) size_ *= static_cast<std::uint64_t>(p);

    // Lexicographically smallest monic irreducible of degree m,
    // low-degree coefficients compared first.
    bool found = false;
    std::uint64_t count = size_;
    // f[0] carries the most significant digit of idx; every candidate with
    // f[0] = 0 is divisible by x, so skip that entire leading block (m > 1).
    std::uint64_t start = 1;
    for (int i = 1; i < m; ++i) start *= static_cast<std::uint64_t>(p);
    if (m == 1) start = 0;
    for (std::uint64_t idx = start; idx < count && !found; ++idx) {
        Poly f(m + 1, 0);
        f[m] = 1;
        // digits assigned so that f[0] is the most significant key, giving
        // ascending lexicographic (low-degree-first) order
        std::uint64_t v = idx;
        for (int i = m - 1; i >= 0; --i) {
            f[i] = static_cast<int>(v % static_cast<std::uint64_t>(p));
            v /= static_cast<std::uint64_t>(p);
        }
        if (is_irreducible(f, p)) {
            modulus_ = f;
            found = true;
        }
    }
    if (!found) fail(ErrorKind::Internal, "NoIrreducibleFound");

    // Smallest element (same lexicographic order) of full multiplicative order.
    const std::uint64_t n = unit_order();
    const auto primes = num::prime_factors(static_cast<std::int64_t>(n));
    for (std::uint64_t idx = 1; idx < size_; ++idx) {
        FFElem cand = element_at(idx);
        if (cand.is_zero()) continue;
        bool full = true;
        for (std::int64_t ell : primes) {
            if (pow(cand, static_cast<std::int64_t>(n) / ell) == one()) {
                full = false;
                break;
            }
        }
        if (full) {
            generator_ = cand.coeffs();
            break;
        }
    }
    if (generator_.empty()) fail(ErrorKind::Internal, "no multiplicative generator found");
}

FieldPtr Field::make(std::int64_t p, int m) {
    if (!num::is_prime(p)) fail(ErrorKind::Parameter, "NonPrime: p = " + std::to_string(p));
    if (m < 1 || m > 24) fail(ErrorKind::TooLarge, "DegreeTooLarge: m = " + std::to_string(m));
    // p^m must fit a machine integer with margin
    double bits = m * std::log2(static_cast<double>(p));
    if (bits > 62) fail(ErrorKind::TooLarge, "DegreeTooLarge: p^m exceeds machine integers");

    std::lock_guard<std::mutex> lock(g_registry_mutex);
    auto& reg = field_registry();
    FieldKey key{p, m};
    auto it = reg.find(key);
    if (it != reg.end()) return it->second;
    auto f = std::shared_ptr<Field>(new Field(p, m));
    reg.emplace(key, f);
    return f;
}

FFElem Field::zero() const { return FFElem(this, std::vector<int>(m_, 0)); }

FFElem Field::one() const {
    std::vector<int> c(m_, 0);
    c[0] = 1;
    return FFElem(this, c);
}

FFElem Field::generator() const { return FFElem(this, generator_); }

FFElem Field::from_int(std::int64_t v) const {
    std::vector<int> c(m_, 0);
    c[0] = pmod(v, p_);
    return FFElem(this, c);
}

FFElem Field::from_coeffs(std::vector<int> coeffs) const {
    if (static_cast<int>(coeffs.size()) != m_)
        fail(ErrorKind::Parameter, "coefficient vector has wrong length");
    for (int& c : coeffs) c = pmod(c, p_);
    return FFElem(this, std::move(coeffs));
}

FFElem Field::element_at(std::uint64_t idx) const {
    std::vector<int> c(m_, 0);
    for (int i = m_ - 1; i >= 0; --i) {
        c[i] = static_cast<int>(idx % static_cast<std::uint64_t>(p_));
        idx /= static_cast<std::uint64_t>(p_);
    }
    // digit order chosen so that coeff 0 is the most significant key,
    // matching the lexicographic (low-degree-first) element order
    return FFElem(this, c);
}

FFElem Field::add(const FFElem& a, const FFElem& b) const {
    if (a.field() != this || b.field() != this) fail(ErrorKind::Parameter, "FieldMismatch");
    std::vector<int> c(m_);
    for (int i = 0; i < m_; ++i) c[i] = pmod(a.coeffs()[i] + b.coeffs()[i], p_);
    return FFElem(this, std::move(c));
}

FFElem Field::sub(const FFElem& a, const FFElem& b) const {
    if (a.field() != this || b.field() != this) fail(ErrorKind::Parameter, "FieldMismatch");
    std::vector<int> c(m_);
    for (int i = 0; i < m_; ++i) c[i] = pmod(a.coeffs()[i] - b.coeffs()[i], p_);
    return FFElem(this, std::move(c));
}

FFElem Field::neg(const FFElem& a) const {
    if (a.field() != this) fail(ErrorKind::Parameter, "FieldMismatch");
    std::vector<int> c(m_);
    for (int i = 0; i < m_; ++i) c[i] = pmod(-a.coeffs()[i], p_);
    return FFElem(this, std::move(c));
}

FFElem Field::mul(const FFElem& a, const FFElem& b) const {
    if (a.field() != this || b.field() != this) fail(ErrorKind::Parameter, "FieldMismatch");
    std::vector<std::int64_t> prod(2 * m_ - 1, 0);
    for (int i = 0; i < m_; ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (int j = 0; j < m_; ++j)
            prod[i + j] += static_cast<std::int64_t>(a.coeffs()[i]) * b.coeffs()[j];
    }
    // reduce mod modulus
    for (int i = 2 * m_ - 2; i >= m_; --i) {
        std::int64_t c = prod[i] % p_;
        if (c == 0) continue;
        for (int j = 0; j < m_; ++j)
            prod[i - m_ + j] -= c * modulus_[j];
        prod[i] = 0;
    }
    std::vector<int> c(m_);
    for (int i = 0; i < m_; ++i) c[i] = pmod(prod[i], p_);
    return FFElem(this, std::move(c));
}

FFElem Field::pow(const FFElem& a, std::int64_t k) const {
    if (a.field() != this) fail(ErrorKind::Parameter, "FieldMismatch");
    if (k < 0) return pow(inv(a), -k);
    FFElem r = one();
    FFElem base = a;
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

FFElem Field::inv(const FFElem& a) const {
    if (a.field() != this) fail(ErrorKind::Parameter, "FieldMismatch");
    if (a.is_zero()) fail(ErrorKind::Parameter, "DivisionByZero");
    return pow(a, static_cast<std::int64_t>(unit_order()) - 1);
}

std::uint64_t Field::multiplicative_order(const FFElem& x) const {
    if (x.field() != this) fail(ErrorKind::Parameter, "FieldMismatch");
    if (x.is_zero()) fail(ErrorKind::Parameter, "ZeroElement");
    std::int64_t ord = static_cast<std::int64_t>(unit_order());
    for (std::int64_t ell : num::prime_factors(ord)) {
        while (ord % ell == 0 && pow(x, ord / ell) == one()) ord /= ell;
    }
    return static_cast<std::uint64_t>(ord);
}

FFElem Field::root_of_unity(std::int64_t d) const {
    if (d <= 0 || static_cast<std::int64_t>(unit_order()) % d != 0)
        fail(ErrorKind::Parameter, "OrderNotAvailable: " + std::to_string(d));
    return pow(generator(), static_cast<std::int64_t>(unit_order()) / d);
}

std::uint64_t Field::discrete_log(const FFElem& x) const {
    if (x.field() != this) fail(ErrorKind::Parameter, "FieldMismatch");
    if (x.is_zero()) fail(ErrorKind::Parameter, "ZeroElement");
    if (size_ > (1u << 24)) fail(ErrorKind::TooLarge, "discrete_log: field larger than 2^24");
    const std::uint64_t n = unit_order();
    std::uint64_t step = 1;
    while (step * step < n) ++step;  // ceil(sqrt(n))
    std::unordered_map<std::uint64_t, std::uint64_t> baby;
    baby.reserve(step);
    FFElem cur = one();
    for (std::uint64_t j = 0; j < step; ++j) {
        baby.emplace(cur.key(), j);
        cur = mul(cur, generator());
    }
    const FFElem giant = pow(generator(), -static_cast<std::int64_t>(step));
    FFElem gamma = x;
    for (std::uint64_t i = 0; i <= step; ++i) {
        auto it = baby.find(gamma.key());
        if (it != baby.end()) return (i * step + it->second) % n;
        gamma = mul(gamma, giant);
    }
    fail(ErrorKind::Internal, "discrete_log: exhausted search");
}

// ---------------------------------------------------------------------------
// Embeddings and towers

namespace {

// Image of the residue class x-bar of sub inside sup: the lexicographically
// smallest root of sub's modulus among the elements of the (unique) subfield
// of sup of matching size.
FFElem embedding_root(const FieldPtr& sub, const FieldPtr& sup) {
    std::lock_guard<std::mutex> lock(g_registry_mutex);
    auto& reg = embed_registry();
    auto key = std::make_pair(FieldKey{sub->p(), sub->m()}, FieldKey{sup->p(), sup->m()});
    auto it = reg.find(key);
    if (it != reg.end()) return it->second;

    const std::uint64_t sub_units = sub->unit_order();
    const std::uint64_t stride = sup->unit_order() / sub_units;
    const auto& mod = sub->modulus();

    // Nonzero subfield candidates are generator^(j*stride); evaluate the
    // subfield modulus at each and keep the lexicographically smallest root.
    bool have = false;
    FFElem best = sup->zero();
    for (std::uint64_t j = 0; j < sub_units; ++j) {
        FFElem cand = sup->pow(sup->generator(), static_cast<std::int64_t>(j * stride));
        FFElem acc = sup->zero();
        FFElem power = sup->one();
        for (int i = 0; i < static_cast<int>(mod.size()); ++i) {
            if (mod[i] != 0) acc = acc + power * sup->from_int(mod[i]);
            power = power * cand;
        }
        if (acc.is_zero()) {
            if (!have) {
                best = cand;
                have = true;
            } else {
                // lexicographic low-degree-first comparison
                if (cand.coeffs() < best.coeffs()) best = cand;
            }
        }
    }
    if (!have) fail(ErrorKind::Internal, "embedding root not found");
    reg.emplace(key, best);
    return best;
}

}  // namespace

FFElem embed(const FFElem& x, const FieldPtr& sub, const FieldPtr& sup) {
    if (x.field() != sub.get()) fail(ErrorKind::Parameter, "FieldMismatch in embed");
    if (sub->p() != sup->p() || sup->m() % sub->m() != 0)
        fail(ErrorKind::Parameter, "NotASubfield");
    if (sub.get() == sup.get()) return x;
    // prime subfield: the scalar copy, independent of any root choice
    if (sub->m() == 1) return sup->from_int(x.coeffs()[0]);
    FFElem root = embedding_root(sub, sup);
    FFElem acc = sup->zero();
    FFElem power = sup->one();
    for (int i = 0; i < sub->m(); ++i) {
        if (x.coeffs()[i] != 0) acc = acc + power * sup->from_int(x.coeffs()[i]);
        power = power * root;
    }
    return acc;
}

FFElem pull_back(const FFElem& x, const FieldPtr& sub, const FieldPtr& sup) {
    if (x.field() != sup.get()) fail(ErrorKind::Parameter, "FieldMismatch in pull_back");
    if (sub->p() != sup->p() || sup->m() % sub->m() != 0)
        fail(ErrorKind::Parameter, "NotASubfield");
    if (sub.get() == sup.get()) return x;
    if (x.is_zero()) return sub->zero();
    if (sub->m() == 1) {
        for (std::int64_t c = 1; c < sub->p(); ++c)
            if (sup->from_int(c) == x) return sub->from_int(c);
        fail(ErrorKind::Parameter, "pull_back: element not in prime subfield");
    }
    // Solve via discrete logs: embed(g_sub) = g_sup^t with t a multiple of
    // (Q_sup-1)/(Q_sub-1); x = g_sup^n lies in the image iff that stride
    // divides n, and then the exponent over g_sub follows by modular division.
    const std::int64_t sub_units = static_cast<std::int64_t>(sub->unit_order());
    const std::int64_t stride =
        static_cast<std::int64_t>(sup->unit_order()) / sub_units;
    const std::int64_t n = static_cast<std::int64_t>(sup->discrete_log(x));
    if (n % stride != 0)
        fail(ErrorKind::Parameter, "pull_back: element not in subfield image");
    const std::int64_t t = static_cast<std::int64_t>(
        sup->discrete_log(embed(sub->generator(), sub, sup)));
    const std::int64_t u = (t / stride) % sub_units;  // unit mod sub_units
    const std::int64_t k =
        (n / stride) % sub_units * num::mod_inverse(u, sub_units) % sub_units;
    FFElem y = sub->pow(sub->generator(), k);
    if (embed(y, sub, sup) != x) fail(ErrorKind::Internal, "pull_back round-trip failed");
    return y;
}

FFElem canonical_root(std::int64_t p, std::int64_t d, const FieldPtr& target) {
    if (d <= 0) fail(ErrorKind::Parameter, "canonical_root: order must be positive");
    if (d == 1) return target->one();
    const std::int64_t r = num::mult_order_mod(p, d);
    const FieldPtr Fr = Field::make(p, static_cast<int>(r));
    const FFElem z = Fr->root_of_unity(d);
    return Fr.get() == target.get() ? z : embed(z, Fr, target);
}

FieldPtr tilde_field(std::int64_t p, std::int64_t a, std::int64_t f) {
    if (a < 1 || f < 1) fail(ErrorKind::Parameter, "tilde_field: a, f must be >= 1");
    const std::int64_t fp = num::prime_to_p_part(f, p);
    const std::int64_t M = num::lcm(a * f, num::mult_order_mod(p, fp));
    return Field::make(p, static_cast<int>(M));
}

}  // namespace tamerep
