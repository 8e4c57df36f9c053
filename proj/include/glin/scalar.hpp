#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "glin/groupoid.hpp"

namespace glin {

/// A scalar: a finite groupoid together with a ±1 sign constant on each
/// connected component (the sign splitting into positive and negative parts).
struct SignedGroupoid {
    FiniteGroupoid g;
    std::vector<Component> components;  // canonical order (see pi0_plain)
    std::vector<Sign> sign;             // aligned with components

    int num_components() const { return static_cast<int>(components.size()); }

    Sign sign_of_object(int obj) const {
        for (int c = 0; c < num_components(); ++c)
            for (int o : components[c].members)
                if (o == obj) return sign[c];
        throw std::out_of_range("object not in any component");
    }
};

/// Builds a scalar from a groupoid and a per-object sign, checking that the
/// given sign is constant on each component.
inline SignedGroupoid make_scalar(FiniteGroupoid g, const std::vector<Sign>& object_sign) {
    SignedGroupoid sc;
    sc.g = std::move(g);
    sc.components = pi0_plain(sc.g);
    for (const auto& c : sc.components) {
        Sign s = object_sign[c.members[0]];
        for (int o : c.members)
            if (object_sign[o] != s)
                throw std::logic_error("sign not constant on a component");
        sc.sign.push_back(s);
    }
    return sc;
}

/// ‖Ŝ‖ = ‖S⊕‖ − ‖S⊖‖, an exact rational.
inline Rational scalar_cardinality(const SignedGroupoid& sc) {
    Rational total = 0;
    for (int c = 0; c < sc.num_components(); ++c)
        total += Rational(sc.sign[c].value(), static_cast<long long>(sc.components[c].aut_order));
    return total;
}

/// Full subgroupoid of a plain groupoid on a subset of objects.
inline FiniteGroupoid plain_full_subgroupoid(const FiniteGroupoid& g, const std::vector<int>& keep) {
    FiniteGroupoid out;
    std::vector<int> old_to_new(g.num_objects(), -1);
    for (int o : keep) old_to_new[o] = out.add_object(g.object_id(o));
    std::vector<int> mor_map(g.num_morphisms(), -1);
    for (int m = 0; m < g.num_morphisms(); ++m)
        if (old_to_new[g.src(m)] >= 0 && old_to_new[g.tgt(m)] >= 0)
            mor_map[m] = out.add_morphism(g.morphism(m).id, old_to_new[g.src(m)], old_to_new[g.tgt(m)]);
    for (int m = 0; m < g.num_morphisms(); ++m) {
        if (mor_map[m] < 0) continue;
        for (int h : g.out(g.tgt(m)))
            if (mor_map[h] >= 0) out.set_compose(mor_map[m], mor_map[h], mor_map[g.compose(h, m)]);
        if (g.inverse(m) >= 0 && mor_map[g.inverse(m)] >= 0) out.set_inverse(mor_map[m], mor_map[g.inverse(m)]);
    }
    for (int o : keep)
        if (g.identity(o) >= 0 && mor_map[g.identity(o)] >= 0) out.set_identity(old_to_new[o], mor_map[g.identity(o)]);
    out.finalize();
    return out;
}

/// The sum splitting (S⊕, S⊖) as two full subgroupoids.
inline std::pair<FiniteGroupoid, FiniteGroupoid> sign_split(const SignedGroupoid& sc) {
    std::vector<int> pos, neg;
    for (int c = 0; c < sc.num_components(); ++c)
        for (int o : sc.components[c].members)
            (sc.sign[c].positive() ? pos : neg).push_back(o);
    std::sort(pos.begin(), pos.end());
    std::sort(neg.begin(), neg.end());
    return {plain_full_subgroupoid(sc.g, pos), plain_full_subgroupoid(sc.g, neg)};
}

/// Product of scalars; sign(a,b) = sign(a)·sign(b) (the Brahmagupta rule).
inline SignedGroupoid scalar_multiply(const SignedGroupoid& s1, const SignedGroupoid& s2) {
    const FiniteGroupoid& a = s1.g;
    const FiniteGroupoid& b = s2.g;
    FiniteGroupoid prod;
    int nb = b.num_objects();
    int mb = b.num_morphisms();
    for (int i = 0; i < a.num_objects(); ++i)
        for (int j = 0; j < nb; ++j)
            prod.add_object("(" + a.object_id(i) + "," + b.object_id(j) + ")");
    auto obj = [nb](int i, int j) { return i * nb + j; };
    auto mor = [mb](int m, int n) { return m * mb + n; };
    for (int m = 0; m < a.num_morphisms(); ++m)
        for (int n = 0; n < mb; ++n)
            prod.add_morphism("(" + a.morphism(m).id + "," + b.morphism(n).id + ")",
                              obj(a.src(m), b.src(n)), obj(a.tgt(m), b.tgt(n)));
    for (int m = 0; m < a.num_morphisms(); ++m)
        for (int n = 0; n < mb; ++n) {
            for (int m2 : a.out(a.tgt(m)))
                for (int n2 : b.out(b.tgt(n)))
                    prod.set_compose(mor(m, n), mor(m2, n2), mor(a.compose(m2, m), b.compose(n2, n)));
            prod.set_inverse(mor(m, n), mor(a.inverse(m), b.inverse(n)));
        }
    for (int i = 0; i < a.num_objects(); ++i)
        for (int j = 0; j < nb; ++j)
            prod.set_identity(obj(i, j), mor(a.identity(i), b.identity(j)));
    prod.finalize();

    std::vector<Sign> obj_sign(prod.num_objects(), Sign::plus());
    for (int i = 0; i < a.num_objects(); ++i)
        for (int j = 0; j < nb; ++j)
            obj_sign[obj(i, j)] = s1.sign_of_object(i) * s2.sign_of_object(j);
    return make_scalar(std::move(prod), obj_sign);
}

/// Coproduct of scalars with relabeled ids.
inline SignedGroupoid scalar_disjoint_sum(const SignedGroupoid& s1, const SignedGroupoid& s2,
                                          const std::string& p1 = "a:", const std::string& p2 = "b:") {
    FiniteGroupoid sum;
    std::vector<Sign> obj_sign;
    auto copy_in = [&sum, &obj_sign](const SignedGroupoid& s, const std::string& prefix) {
        const FiniteGroupoid& g = s.g;
        int ob = sum.num_objects(), mb = sum.num_morphisms();
        for (int o = 0; o < g.num_objects(); ++o) {
            sum.add_object(prefix + g.object_id(o));
            obj_sign.push_back(s.sign_of_object(o));
        }
        for (int m = 0; m < g.num_morphisms(); ++m)
            sum.add_morphism(prefix + g.morphism(m).id, ob + g.src(m), ob + g.tgt(m));
        for (int m = 0; m < g.num_morphisms(); ++m) {
            for (int h : g.out(g.tgt(m))) sum.set_compose(mb + m, mb + h, mb + g.compose(h, m));
            if (g.inverse(m) >= 0) sum.set_inverse(mb + m, mb + g.inverse(m));
        }
        for (int o = 0; o < g.num_objects(); ++o)
            if (g.identity(o) >= 0) sum.set_identity(ob + o, mb + g.identity(o));
    };
    copy_in(s1, p1);
    copy_in(s2, p2);
    sum.finalize();
    return make_scalar(std::move(sum), obj_sign);
}

/// Flips the sign of every component.
inline SignedGroupoid scalar_negate(SignedGroupoid sc) {
    for (auto& s : sc.sign) s = -s;
    return sc;
}

/// The unit scalar 1 (one point, positive).
inline SignedGroupoid unit_scalar() {
    FiniteGroupoid g;
    int o = g.add_object("*");
    int e = g.add_morphism("id_*", o, o);
    g.set_compose(e, e, e);
    g.set_identity(o, e);
    g.set_inverse(e, e);
    g.finalize();
    return make_scalar(std::move(g), {Sign::plus()});
}

/// The scalar −1 (one point, negative).
inline SignedGroupoid minus_one_scalar() { return scalar_negate(unit_scalar()); }

inline SignedGroupoid empty_scalar() {
    FiniteGroupoid g;
    g.finalize();
    return make_scalar(std::move(g), {});
}

/// Equivalence-class invariant of a scalar: the sorted multiset of
/// (sign, |Aut|, component object count).
using Fingerprint = std::vector<std::tuple<int, uint64_t, int>>;

inline Fingerprint fingerprint(const SignedGroupoid& sc) {
    Fingerprint fp;
    for (int c = 0; c < sc.num_components(); ++c)
        fp.emplace_back(sc.sign[c].value(), sc.components[c].aut_order,
                        static_cast<int>(sc.components[c].members.size()));
    std::sort(fp.begin(), fp.end());
    return fp;
}

/// Coarser invariant used when two models of the same scalar are only
/// equivalent, not isomorphic: drops the object count.
using SignAutFingerprint = std::vector<std::pair<int, uint64_t>>;

inline SignAutFingerprint fingerprint_sign_aut(const SignedGroupoid& sc) {
    SignAutFingerprint fp;
    for (int c = 0; c < sc.num_components(); ++c)
        fp.emplace_back(sc.sign[c].value(), sc.components[c].aut_order);
    std::sort(fp.begin(), fp.end());
    return fp;
}

inline std::string fingerprint_string(const Fingerprint& fp) {
    std::string s;
    for (const auto& [sign, aut, size] : fp) {
        if (!s.empty()) s += ' ';
        s += "(" + std::string(sign > 0 ? "+" : "-") + "," + std::to_string(aut) + "," + std::to_string(size) + ")";
    }
    return s.empty() ? "(empty)" : s;
}

}  // namespace glin
