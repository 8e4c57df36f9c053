#pragma once

#include <string>
#include <vector>

#include "glin/groupoid.hpp"

namespace glin {

/// A finite group by multiplication table. Element 0 need not be the
/// identity; the identity index is stored explicitly.
struct FiniteGroup {
    std::vector<std::string> elements;
    std::vector<std::vector<int>> mult;  // mult[g][h] = g·h
    int identity = -1;
    std::vector<int> inverse;

    int order() const { return static_cast<int>(elements.size()); }

    int find(const std::string& id) const {
        for (int i = 0; i < order(); ++i)
            if (elements[i] == id) return i;
        return -1;
    }
};

inline ValidationReport validate_group(const FiniteGroup& g) {
    ValidationReport rep;
    int n = g.order();
    if (static_cast<int>(g.mult.size()) != n) {
        rep.fail("multiplication table has wrong number of rows");
        return rep;
    }
    for (const auto& row : g.mult) {
        if (static_cast<int>(row.size()) != n) {
            rep.fail("multiplication table has a wrong-length row");
            return rep;
        }
        for (int v : row)
            if (v < 0 || v >= n) {
                rep.fail("multiplication table entry out of range");
                return rep;
            }
    }
    if (g.identity < 0 || g.identity >= n) {
        rep.fail("group identity index out of range");
        return rep;
    }
    for (int a = 0; a < n; ++a) {
        if (g.mult[g.identity][a] != a || g.mult[a][g.identity] != a)
            rep.fail("identity not neutral at '" + g.elements[a] + "'");
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mult[g.mult[a][b]][c] != g.mult[a][g.mult[b][c]]) {
                    rep.fail("group multiplication not associative");
                    return rep;
                }
    }
    if (static_cast<int>(g.inverse.size()) != n) {
        rep.fail("inverse table has wrong size");
        return rep;
    }
    for (int a = 0; a < n; ++a)
        if (g.mult[a][g.inverse[a]] != g.identity || g.mult[g.inverse[a]][a] != g.identity)
            rep.fail("inverse wrong at '" + g.elements[a] + "'");
    return rep;
}

/// A right action of a finite group on a parity groupoid, with per-element
/// 2-cell parity data theta.
struct GroupAction {
    FiniteGroup group;
    ParityGroupoid target;
    // on_objects[g][x] = x.g; on_morphisms[g][m] = m.g; theta[g][x] = θ_g at x
    std::vector<std::vector<int>> on_objects;
    std::vector<std::vector<int>> on_morphisms;
    std::vector<std::vector<Sign>> theta;
};

inline ValidationReport validate_action(const GroupAction& act) {
    ValidationReport rep = validate_group(act.group);
    if (!rep.ok()) return rep;
    {
        ValidationReport t = validate_groupoid(act.target);
        if (!t.ok()) return t;
    }
    const FiniteGroupoid& x = act.target.g;
    int n = act.group.order();
    if (static_cast<int>(act.on_objects.size()) != n || static_cast<int>(act.on_morphisms.size()) != n ||
        static_cast<int>(act.theta.size()) != n) {
        rep.fail("action tables not indexed by all group elements");
        return rep;
    }
    for (int g = 0; g < n; ++g) {
        if (static_cast<int>(act.on_objects[g].size()) != x.num_objects() ||
            static_cast<int>(act.on_morphisms[g].size()) != x.num_morphisms() ||
            static_cast<int>(act.theta[g].size()) != x.num_objects()) {
            rep.fail("action table for '" + act.group.elements[g] + "' has wrong size");
            return rep;
        }
    }
    int e = act.group.identity;
    for (int o = 0; o < x.num_objects(); ++o)
        if (act.on_objects[e][o] != o)
            rep.fail("identity element moves object '" + x.object_id(o) + "'");
    for (int m = 0; m < x.num_morphisms(); ++m)
        if (act.on_morphisms[e][m] != m)
            rep.fail("identity element moves morphism '" + x.morphism(m).id + "'");
    for (int g = 0; g < n; ++g) {
        // functoriality of each g
        for (int m = 0; m < x.num_morphisms(); ++m) {
            int mg = act.on_morphisms[g][m];
            if (x.src(mg) != act.on_objects[g][x.src(m)] || x.tgt(mg) != act.on_objects[g][x.tgt(m)])
                rep.fail("action of '" + act.group.elements[g] + "' does not respect endpoints of '" + x.morphism(m).id + "'");
        }
        for (int o = 0; o < x.num_objects(); ++o)
            if (act.on_morphisms[g][x.identity(o)] != x.identity(act.on_objects[g][o]))
                rep.fail("action of '" + act.group.elements[g] + "' does not preserve the identity at '" + x.object_id(o) + "'");
        for (int f = 0; f < x.num_morphisms(); ++f)
            for (int h : x.out(x.tgt(f)))
                if (act.on_morphisms[g][x.compose(h, f)] != x.compose(act.on_morphisms[g][h], act.on_morphisms[g][f])) {
                    rep.fail("action of '" + act.group.elements[g] + "' does not preserve composition");
                    break;
                }
        // action law (x.g).h = x.(gh), on objects and morphisms
        for (int h = 0; h < n; ++h) {
            int gh = act.group.mult[g][h];
            for (int o = 0; o < x.num_objects(); ++o) {
                if (act.on_objects[h][act.on_objects[g][o]] != act.on_objects[gh][o])
                    rep.fail("action law fails on objects for ('" + act.group.elements[g] + "','" + act.group.elements[h] + "')");
                // θ_{gh at x} = θ_{g at x} · θ_{h at x.g}
                if (act.theta[gh][o] != act.theta[g][o] * act.theta[h][act.on_objects[g][o]])
                    rep.fail("theta incompatible with composition at ('" + act.group.elements[g] + "','" +
                             act.group.elements[h] + "','" + x.object_id(o) + "')");
            }
            for (int m = 0; m < x.num_morphisms(); ++m)
                if (act.on_morphisms[h][act.on_morphisms[g][m]] != act.on_morphisms[gh][m])
                    rep.fail("action law fails on morphisms for ('" + act.group.elements[g] + "','" + act.group.elements[h] + "')");
        }
    }
    return rep;
}

/// The weak quotient X/G: objects of X, morphisms x → y.g given by pairs
/// (a: x→y, g) with parity par(a)·θ_{g at y}. Whether the parity is actually
/// multiplicative depends on the θ data; callers check with validate_groupoid.
inline ParityGroupoid weak_quotient(const GroupAction& act) {
    const FiniteGroupoid& x = act.target.g;
    int n = act.group.order();
    ParityGroupoid out;
    for (int o = 0; o < x.num_objects(); ++o) out.g.add_object(x.object_id(o));
    auto mor = [n](int a, int g) { return a * n + g; };
    for (int a = 0; a < x.num_morphisms(); ++a)
        for (int g = 0; g < n; ++g) {
            int y = x.tgt(a);
            out.g.add_morphism("(" + x.morphism(a).id + "|" + act.group.elements[g] + ")",
                               x.src(a), act.on_objects[g][y]);
            out.parity.push_back(act.target.par(a) * act.theta[g][y]);
        }
    // (a: x→y, g) then (b: y.g→z, h) = ((b.g⁻¹)∘a, g·h)
    for (int a = 0; a < x.num_morphisms(); ++a)
        for (int g = 0; g < n; ++g) {
            int ginv = act.group.inverse[g];
            int yg = act.on_objects[g][x.tgt(a)];
            for (int b : x.out(yg))
                for (int h = 0; h < n; ++h) {
                    int c = x.compose(act.on_morphisms[ginv][b], a);
                    out.g.set_compose(mor(a, g), mor(b, h), mor(c, act.group.mult[g][h]));
                }
            // inverse of (a,g) is ((a⁻¹).g, g⁻¹)
            out.g.set_inverse(mor(a, g), mor(act.on_morphisms[g][x.inverse(a)], ginv));
        }
    for (int o = 0; o < x.num_objects(); ++o)
        out.g.set_identity(o, mor(x.identity(o), act.group.identity));
    out.g.finalize();
    return out;
}

}  // namespace glin
