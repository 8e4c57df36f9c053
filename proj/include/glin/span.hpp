#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "glin/groupoid.hpp"
#include "glin/scalar.hpp"

namespace glin {

/// A functor out of a span apex, as object and morphism index maps.
struct Functor {
    std::vector<int> on_obj;
    std::vector<int> on_mor;
};

/// A P-span S ⇐ M ⇒ T in simplified form: two parity-groupoid feet, a plain
/// apex, two functors and a per-apex-object sign ρ. The 2-cell data of the
/// fully-specified form is collapsed into ρ.
struct PSpan {
    ParityGroupoid left_foot;
    ParityGroupoid right_foot;
    FiniteGroupoid apex;
    Functor left_fun;
    Functor right_fun;
    std::vector<Sign> rho;
};

/// A state is a P-span whose left foot is the trivial point.
using State = PSpan;

/// Structural validation of a plain groupoid (no parity axioms).
inline ValidationReport validate_plain_groupoid(const FiniteGroupoid& g) {
    ParityGroupoid wrapped;
    wrapped.g = g;
    wrapped.parity.assign(g.num_morphisms(), Sign::plus());
    return validate_groupoid(wrapped);
}

inline ValidationReport validate_span(const PSpan& sp) {
    ValidationReport rep;
    {
        ValidationReport r = validate_groupoid(sp.left_foot);
        for (auto& e : r.errors) rep.fail("left foot: " + e);
        r = validate_groupoid(sp.right_foot);
        for (auto& e : r.errors) rep.fail("right foot: " + e);
        r = validate_plain_groupoid(sp.apex);
        for (auto& e : r.errors) rep.fail("apex: " + e);
    }
    if (!rep.ok()) return rep;

    auto check_functor = [&rep, &sp](const Functor& fun, const ParityGroupoid& foot, const char* which) {
        const FiniteGroupoid& m = sp.apex;
        const FiniteGroupoid& f = foot.g;
        if (static_cast<int>(fun.on_obj.size()) != m.num_objects() ||
            static_cast<int>(fun.on_mor.size()) != m.num_morphisms()) {
            rep.fail(std::string(which) + " functor tables have wrong size");
            return;
        }
        for (int o : fun.on_obj)
            if (o < 0 || o >= f.num_objects()) {
                rep.fail(std::string(which) + " functor maps an object out of range");
                return;
            }
        for (int a : fun.on_mor)
            if (a < 0 || a >= f.num_morphisms()) {
                rep.fail(std::string(which) + " functor maps a morphism out of range");
                return;
            }
        for (int a = 0; a < m.num_morphisms(); ++a) {
            int fa = fun.on_mor[a];
            if (f.src(fa) != fun.on_obj[m.src(a)] || f.tgt(fa) != fun.on_obj[m.tgt(a)])
                rep.fail(std::string(which) + " functor breaks endpoints on '" + m.morphism(a).id + "'");
        }
        for (int o = 0; o < m.num_objects(); ++o)
            if (fun.on_mor[m.identity(o)] != f.identity(fun.on_obj[o]))
                rep.fail(std::string(which) + " functor breaks the identity at '" + m.object_id(o) + "'");
        for (int a = 0; a < m.num_morphisms(); ++a)
            for (int b : m.out(m.tgt(a)))
                if (fun.on_mor[m.compose(b, a)] != f.compose(fun.on_mor[b], fun.on_mor[a])) {
                    rep.fail(std::string(which) + " functor breaks composition on '" + m.morphism(a).id + "'");
                    break;
                }
    };
    check_functor(sp.left_fun, sp.left_foot, "left");
    check_functor(sp.right_fun, sp.right_foot, "right");
    if (!rep.ok()) return rep;

    if (static_cast<int>(sp.rho.size()) != sp.apex.num_objects()) {
        rep.fail("rho table has wrong size");
        return rep;
    }
    // naturality square: par_S(L(a))·ρ(m′) = ρ(m)·par_T(R(a))
    for (int a = 0; a < sp.apex.num_morphisms(); ++a) {
        Sign lhs = sp.left_foot.par(sp.left_fun.on_mor[a]) * sp.rho[sp.apex.tgt(a)];
        Sign rhs = sp.rho[sp.apex.src(a)] * sp.right_foot.par(sp.right_fun.on_mor[a]);
        if (lhs != rhs)
            rep.fail("rho naturality fails on apex arrow '" + sp.apex.morphism(a).id + "'");
    }
    return rep;
}

inline PSpan identity_span(const ParityGroupoid& s) {
    PSpan sp;
    sp.left_foot = s;
    sp.right_foot = s;
    sp.apex = s.g;
    sp.left_fun.on_obj.resize(s.g.num_objects());
    sp.left_fun.on_mor.resize(s.g.num_morphisms());
    for (int o = 0; o < s.g.num_objects(); ++o) sp.left_fun.on_obj[o] = o;
    for (int m = 0; m < s.g.num_morphisms(); ++m) sp.left_fun.on_mor[m] = m;
    sp.right_fun = sp.left_fun;
    sp.rho.assign(s.g.num_objects(), Sign::plus());
    return sp;
}

/// Same data with ρ pointwise negated.
inline PSpan negative(PSpan sp) {
    for (auto& r : sp.rho) r = -r;
    return sp;
}

/// Swaps the feet; ρ is its own inverse so it is carried over unchanged.
inline PSpan transpose(PSpan sp) {
    std::swap(sp.left_foot, sp.right_foot);
    std::swap(sp.left_fun, sp.right_fun);
    return sp;
}

/// Homotopy pullback composition via the iso-comma construction: apex objects
/// are triples (m, γ: R_a(m) ≅ L_b(n), n), arrows are pairs (α, β) with
/// γ′ = L_b(β)∘γ∘R_a(α)⁻¹, and ρ(m,γ,n) = ρ_a(m)·par_J(γ)·ρ_b(n).
inline PSpan compose(const PSpan& a, const PSpan& b) {
    const FiniteGroupoid& j = a.right_foot.g;
    if (j.num_objects() != b.left_foot.g.num_objects() || j.num_morphisms() != b.left_foot.g.num_morphisms())
        throw std::invalid_argument("span composition: middle feet do not match");

    PSpan out;
    out.left_foot = a.left_foot;
    out.right_foot = b.right_foot;

    const FiniteGroupoid& m = a.apex;
    const FiniteGroupoid& n = b.apex;

    struct Obj { int m, gamma, n; };
    std::vector<Obj> objs;
    std::map<std::tuple<int, int, int>, int> obj_index;
    for (int mi = 0; mi < m.num_objects(); ++mi)
        for (int ni = 0; ni < n.num_objects(); ++ni)
            for (int g : j.hom(a.right_fun.on_obj[mi], b.left_fun.on_obj[ni])) {
                obj_index[{mi, g, ni}] = out.apex.add_object(
                    "(" + m.object_id(mi) + "|" + j.morphism(g).id + "|" + n.object_id(ni) + ")");
                objs.push_back({mi, g, ni});
                out.rho.push_back(a.rho[mi] * a.right_foot.par(g) * b.rho[ni]);
                out.left_fun.on_obj.push_back(a.left_fun.on_obj[mi]);
                out.right_fun.on_obj.push_back(b.right_fun.on_obj[ni]);
            }

    // arrows: one per (source object, α out of m, β out of n)
    struct Mor { int src_obj, alpha, beta, tgt_obj; };
    std::vector<Mor> mors;
    std::map<std::tuple<int, int, int>, int> mor_index;  // (src_obj, alpha, beta)
    for (int o = 0; o < static_cast<int>(objs.size()); ++o) {
        const Obj& ob = objs[o];
        for (int alpha : m.out(ob.m))
            for (int beta : n.out(ob.n)) {
                int ra = a.right_fun.on_mor[alpha];
                int lb = b.left_fun.on_mor[beta];
                int gamma2 = j.compose(lb, j.compose(ob.gamma, j.inverse(ra)));
                int tgt = obj_index.at({m.tgt(alpha), gamma2, n.tgt(beta)});
                int idx = out.apex.add_morphism(
                    "(" + m.morphism(alpha).id + "|" + n.morphism(beta).id + ")@" + out.apex.object_id(o), o, tgt);
                mor_index[{o, alpha, beta}] = idx;
                mors.push_back({o, alpha, beta, tgt});
                out.left_fun.on_mor.push_back(a.left_fun.on_mor[alpha]);
                out.right_fun.on_mor.push_back(b.right_fun.on_mor[beta]);
            }
    }
    for (int i = 0; i < static_cast<int>(mors.size()); ++i) {
        const Mor& f = mors[i];
        for (int alpha2 : m.out(m.tgt(f.alpha)))
            for (int beta2 : n.out(n.tgt(f.beta))) {
                int g = mor_index.at({f.tgt_obj, alpha2, beta2});
                int c = mor_index.at({f.src_obj, m.compose(alpha2, f.alpha), n.compose(beta2, f.beta)});
                out.apex.set_compose(i, g, c);
            }
        int o2 = f.tgt_obj;
        out.apex.set_inverse(i, mor_index.at({o2, m.inverse(f.alpha), n.inverse(f.beta)}));
    }
    for (int o = 0; o < static_cast<int>(objs.size()); ++o)
        out.apex.set_identity(o, mor_index.at({o, m.identity(objs[o].m), n.identity(objs[o].n)}));
    out.apex.finalize();
    return out;
}

/// One point of a two-sided fiber: (α: L(m)≅i, m, β: R(m)≅j) with its sign.
struct FiberPoint {
    int alpha = -1, m = -1, beta = -1;
    Sign sign;
};

/// A two-sided fiber with its point-level data retained (the scalar alone is
/// enough for cardinality; the points feed the cancellation involution).
struct TwoSidedFiber {
    SignedGroupoid scalar;
    std::vector<FiberPoint> points;  // aligned with scalar.g's object list
};

/// The fiber ᵢMⱼ in the homotopy-correct triple model. The point sign
/// par(α)·ρ(m)·par(β) is checked to be constant per component (make_scalar
/// throws otherwise, which would indicate an invalid span).
inline TwoSidedFiber two_sided_fiber_full(const PSpan& sp, int i, int j) {
    const FiniteGroupoid& m = sp.apex;
    const FiniteGroupoid& s = sp.left_foot.g;
    const FiniteGroupoid& t = sp.right_foot.g;

    TwoSidedFiber fib;
    FiniteGroupoid g;
    std::vector<Sign> obj_sign;
    std::map<std::tuple<int, int, int>, int> obj_index;  // (alpha, m, beta)
    for (int mi = 0; mi < m.num_objects(); ++mi)
        for (int alpha : s.hom(sp.left_fun.on_obj[mi], i))
            for (int beta : t.hom(sp.right_fun.on_obj[mi], j)) {
                int o = g.add_object("(" + s.morphism(alpha).id + "|" + m.object_id(mi) + "|" + t.morphism(beta).id + ")");
                obj_index[{alpha, mi, beta}] = o;
                Sign sg = sp.left_foot.par(alpha) * sp.rho[mi] * sp.right_foot.par(beta);
                obj_sign.push_back(sg);
                fib.points.push_back({alpha, mi, beta, sg});
            }

    // one arrow per (source point, θ out of m); target transports α, β along θ
    struct Arrow { int src_obj, theta, tgt_obj; };
    std::vector<Arrow> arrows;
    std::map<std::pair<int, int>, int> arrow_index;  // (src_obj, theta)
    for (const auto& [key, o] : obj_index) {
        auto [alpha, mi, beta] = key;
        for (int theta : m.out(mi)) {
            int alpha2 = s.compose(alpha, s.inverse(sp.left_fun.on_mor[theta]));
            int beta2 = t.compose(beta, t.inverse(sp.right_fun.on_mor[theta]));
            int tgt = obj_index.at({alpha2, m.tgt(theta), beta2});
            int idx = g.add_morphism("(" + m.morphism(theta).id + ")@" + g.object_id(o), o, tgt);
            arrow_index[{o, theta}] = idx;
            arrows.push_back({o, theta, tgt});
        }
    }
    for (int i2 = 0; i2 < static_cast<int>(arrows.size()); ++i2) {
        const Arrow& f = arrows[i2];
        for (int theta2 : m.out(m.tgt(f.theta))) {
            int g2 = arrow_index.at({f.tgt_obj, theta2});
            g.set_compose(i2, g2, arrow_index.at({f.src_obj, m.compose(theta2, f.theta)}));
        }
        g.set_inverse(i2, arrow_index.at({f.tgt_obj, m.inverse(f.theta)}));
    }
    for (const auto& [key, o] : obj_index)
        g.set_identity(o, arrow_index.at({o, m.identity(std::get<1>(key))}));
    g.finalize();
    fib.scalar = make_scalar(std::move(g), obj_sign);
    return fib;
}

inline SignedGroupoid two_sided_fiber(const PSpan& sp, int i, int j) {
    return two_sided_fiber_full(sp, i, j).scalar;
}

/// The stricter fiber model: objects (m, γ: R(m)≅j) with L(m) = i on the
/// nose, arrows θ with L(θ) = id_i and γ′ = γ∘R(θ)⁻¹; point sign ρ(m)·par(γ).
/// Homotopy equivalent to the triple model when L is a fibration; used for
/// element-level fiber tables and as a cross-check.
struct StrictFiberPoint {
    int m = -1, gamma = -1;
    Sign sign;
};

struct StrictFiber {
    SignedGroupoid scalar;
    std::vector<StrictFiberPoint> points;
};

inline StrictFiber strict_fiber(const PSpan& sp, int i, int j) {
    const FiniteGroupoid& m = sp.apex;
    const FiniteGroupoid& t = sp.right_foot.g;

    StrictFiber fib;
    FiniteGroupoid g;
    std::vector<Sign> obj_sign;
    std::map<std::pair<int, int>, int> obj_index;  // (m, gamma)
    for (int mi = 0; mi < m.num_objects(); ++mi) {
        if (sp.left_fun.on_obj[mi] != i) continue;
        for (int gamma : t.hom(sp.right_fun.on_obj[mi], j)) {
            int o = g.add_object("(" + m.object_id(mi) + "|" + t.morphism(gamma).id + ")");
            obj_index[{mi, gamma}] = o;
            Sign sg = sp.rho[mi] * sp.right_foot.par(gamma);
            obj_sign.push_back(sg);
            fib.points.push_back({mi, gamma, sg});
        }
    }
    struct Arrow { int src_obj, theta, tgt_obj; };
    std::vector<Arrow> arrows;
    std::map<std::pair<int, int>, int> arrow_index;
    for (const auto& [key, o] : obj_index) {
        auto [mi, gamma] = key;
        for (int theta : m.out(mi)) {
            if (sp.left_fun.on_mor[theta] != sp.left_foot.g.identity(i)) continue;
            int gamma2 = t.compose(gamma, t.inverse(sp.right_fun.on_mor[theta]));
            int tgt = obj_index.at({m.tgt(theta), gamma2});
            int idx = g.add_morphism("(" + m.morphism(theta).id + ")@" + g.object_id(o), o, tgt);
            arrow_index[{o, theta}] = idx;
            arrows.push_back({o, theta, tgt});
        }
    }
    for (int i2 = 0; i2 < static_cast<int>(arrows.size()); ++i2) {
        const Arrow& f = arrows[i2];
        for (int theta2 : m.out(m.tgt(f.theta))) {
            auto it = arrow_index.find({f.tgt_obj, theta2});
            if (it == arrow_index.end()) continue;
            g.set_compose(i2, it->second, arrow_index.at({f.src_obj, m.compose(theta2, f.theta)}));
        }
        g.set_inverse(i2, arrow_index.at({f.tgt_obj, m.inverse(f.theta)}));
    }
    for (const auto& [key, o] : obj_index)
        g.set_identity(o, arrow_index.at({o, m.identity(key.first)}));
    g.finalize();
    fib.scalar = make_scalar(std::move(g), obj_sign);
    return fib;
}

inline bool is_trivial_foot(const ParityGroupoid& pg) {
    return pg.g.num_objects() == 1 && pg.g.num_morphisms() == 1;
}

/// Reads a scalar span 1 ⇐ S ⇒ 1 as a SignedGroupoid (ρ is constant per
/// apex component by naturality over trivial feet).
inline SignedGroupoid scalar_of_span(const PSpan& sp) {
    if (!is_trivial_foot(sp.left_foot) || !is_trivial_foot(sp.right_foot))
        throw std::invalid_argument("scalar_of_span: both feet must be the trivial point");
    return make_scalar(sp.apex, sp.rho);
}

/// ⟨X̂, Ŷ⟩: compose x with the transpose of y and read off the apex scalar.
inline SignedGroupoid inner_product(const State& x, const State& y) {
    return scalar_of_span(compose(x, transpose(y)));
}

/// proj_j(X̂) = ‖fiber at j‖ / |Aut(j)|; j must be orientable.
inline Rational projection_coefficient(const State& st, int j) {
    const ParityGroupoid& t = st.right_foot;
    for (int m : t.g.hom(j, j))
        if (!t.par(m).positive())
            throw std::invalid_argument("projection_coefficient: object has an odd automorphism");
    // also reject odd automorphisms elsewhere in the component
    for (const auto& c : pi0(t)) {
        bool mine = false;
        for (int o : c.members) mine = mine || o == j;
        if (mine && !c.orientable)
            throw std::invalid_argument("projection_coefficient: component not orientable");
    }
    SignedGroupoid fib = two_sided_fiber(st, 0, j);
    return scalar_cardinality(fib) / Rational(static_cast<long long>(t.g.hom(j, j).size()));
}

/// The name of s with a sign: the state 1 ⇐ 1 ⇒ S picking out s.
inline State elementary_state(const ParityGroupoid& s, int obj, Sign sign) {
    State st;
    st.left_foot = trivial_point();
    st.right_foot = s;
    int a = st.apex.add_object(s.g.object_id(obj));
    int e = st.apex.add_morphism("id_" + s.g.object_id(obj), a, a);
    st.apex.set_compose(e, e, e);
    st.apex.set_identity(a, e);
    st.apex.set_inverse(e, e);
    st.apex.finalize();
    st.left_fun.on_obj = {0};
    st.left_fun.on_mor = {0};
    st.right_fun.on_obj = {obj};
    st.right_fun.on_mor = {s.g.identity(obj)};
    st.rho = {sign};
    return st;
}

}  // namespace glin
