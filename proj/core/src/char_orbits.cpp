#include "tamerep/char_orbits.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "tamerep/numutil.hpp"

namespace tamerep {

CharInvariants char_invariants(std::int64_t c, const TwistedGroup& G) {
    if (c < 0 || c >= G.e) fail(ErrorKind::Parameter, "character residue out of range");
    const std::int64_t d = c == 0 ? 1 : G.e / num::gcd(G.e, c);
    return CharInvariants{d, num::mult_order_mod(G.p, d), num::mult_order_mod(G.q, d)};
}

namespace {

CharOrbit orbit_of(std::int64_t c, const TwistedGroup& G) {
    CharOrbit o;
    std::set<std::int64_t> mem;
    std::int64_t cur = c;
    do {
        mem.insert(cur);
        cur = cur * G.q_mod_e % G.e;
    } while (cur != c);
    o.members.assign(mem.begin(), mem.end());
    o.rep_c = o.members.front();
    auto inv = char_invariants(o.rep_c, G);
    o.d = inv.d;
    o.r = inv.r;
    o.s = inv.s;
    if (o.s != static_cast<std::int64_t>(o.members.size()))
        fail(ErrorKind::Internal, "orbit size disagrees with ord(q mod d)");
    return o;
}

}  // namespace

std::vector<CharOrbit> enumerate_character_orbits(const TwistedGroup& G) {
    if (G.e > 100000) fail(ErrorKind::TooLarge, "GroupTooLarge: e = " + std::to_string(G.e));
    std::vector<bool> seen(G.e, false);
    std::vector<CharOrbit> orbits;
    for (std::int64_t c = 0; c < G.e; ++c) {
        if (seen[c]) continue;
        CharOrbit o = orbit_of(c, G);
        for (std::int64_t m : o.members) seen[m] = true;
        orbits.push_back(std::move(o));
    }
    return orbits;  // ascending rep_c by construction
}

std::vector<Lambda> enumerate_lambda(const TwistedGroup& G, const CharOrbit& orbit) {
    if (G.f % orbit.s != 0) fail(ErrorKind::Internal, "orbit size does not divide f");
    const std::int64_t bound = num::prime_to_p_part(G.f / orbit.s, G.p);
    // all elements of order dividing bound: zeta_bound^j for j in [0, bound)
    std::vector<Lambda> out;
    for (std::int64_t j = 0; j < bound; ++j) {
        Lambda l;
        const std::int64_t g = num::gcd(bound, j == 0 ? bound : j);
        l.order = bound / g;
        l.log = j / g;  // zeta_bound^j = zeta_{order}^{log}, gcd(log, order) = 1
        l.w = num::mult_order_mod(G.p, l.order);
        out.push_back(l);
    }
    std::sort(out.begin(), out.end(), [](const Lambda& x, const Lambda& y) {
        return std::tie(x.order, x.log) < std::tie(y.order, y.log);
    });
    return out;
}

std::vector<PairClass> enumerate_pairs(const TwistedGroup& G) {
    if (G.order() > 100000) fail(ErrorKind::TooLarge, "GroupTooLarge: order " + std::to_string(G.order()));
    std::vector<PairClass> pairs;
    for (const CharOrbit& o : enumerate_character_orbits(G))
        for (const Lambda& l : enumerate_lambda(G, o)) pairs.push_back(PairClass{o, l});
    return pairs;
}

namespace {

using Key = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

Key key_of(const PairClass& pr) {
    return {pr.orbit.rep_c, pr.lambda.order, pr.lambda.log};
}

PairClass phi_step(const PairClass& pr, const TwistedGroup& G) {
    PairClass next;
    next.orbit = [&] {
        const std::int64_t c = pr.orbit.rep_c * (G.p % G.e) % G.e;
        return orbit_of(c, G);
    }();
    next.lambda.order = pr.lambda.order;
    next.lambda.log = pr.lambda.log * (G.p % pr.lambda.order) % pr.lambda.order;
    next.lambda.w = pr.lambda.w;
    return next;
}

}  // namespace

std::vector<PhiOrbit> phi_orbits(const TwistedGroup& G) {
    auto pairs = enumerate_pairs(G);
    std::map<Key, const PairClass*> lookup;
    for (const auto& pr : pairs) lookup.emplace(key_of(pr), &pr);

    std::set<Key> unseen;
    for (const auto& pr : pairs) unseen.insert(key_of(pr));

    std::vector<PhiOrbit> orbits;
    // std::set iterates ascending, so each orbit starts from its least member
    while (!unseen.empty()) {
        const Key start = *unseen.begin();
        PhiOrbit O;
        O.canonical = *lookup.at(start);
        PairClass cur = O.canonical;
        do {
            unseen.erase(key_of(cur));
            O.members.push_back(cur);
            cur = phi_step(cur, G);
            if (static_cast<std::int64_t>(O.members.size()) > G.order())
                fail(ErrorKind::Internal, "phi action failed to cycle");
        } while (key_of(cur) != start);
        // canonical member must be the least over the whole cycle
        for (const auto& m : O.members)
            if (key_of(m) < key_of(O.canonical))
                fail(ErrorKind::Internal, "phi orbit canonical member not minimal");

        O.size = static_cast<std::int64_t>(O.members.size());
        const auto& o = O.canonical.orbit;
        const auto& l = O.canonical.lambda;
        if (o.r % o.s != 0)
            fail(ErrorKind::Verification,
                 "r/s non-integral for character orbit rep " + std::to_string(o.rep_c) +
                     " (r = " + std::to_string(o.r) + ", s = " + std::to_string(o.s) + ")");
        O.defdeg = num::lcm(o.r / o.s, l.w);
        O.degree = num::lcm(o.r, o.s * l.w);
        if (O.size != O.defdeg)
            fail(ErrorKind::Verification,
                 "measured phi-orbit size " + std::to_string(O.size) +
                     " differs from lcm(r/s, w) = " + std::to_string(O.defdeg));
        if (O.degree != o.s * O.size)
            fail(ErrorKind::Internal, "degree identity lcm(r, s*w) = s * size failed");
        orbits.push_back(std::move(O));
    }
    return orbits;
}

}  // namespace tamerep
