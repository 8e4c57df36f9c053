#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "glin/action.hpp"
#include "glin/groupoid.hpp"
#include "glin/scalar.hpp"
#include "glin/span.hpp"

namespace glin {
namespace gen {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int n) { return static_cast<int>(rng() % static_cast<uint64_t>(n)); }
inline bool coin(Rng& rng) { return (rng() & 1) != 0; }

inline FiniteGroup trivial_group() {
    FiniteGroup g;
    g.elements = {"e"};
    g.mult = {{0}};
    g.identity = 0;
    g.inverse = {0};
    return g;
}

inline FiniteGroup cyclic_group(int n) {
    FiniteGroup g;
    for (int i = 0; i < n; ++i) g.elements.push_back(i == 0 ? "e" : "g" + std::to_string(i));
    g.mult.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.mult[a][b] = (a + b) % n;
    g.identity = 0;
    g.inverse.resize(n);
    for (int a = 0; a < n; ++a) g.inverse[a] = (n - a) % n;
    return g;
}

/// Σ₃ as permutations of {0,1,2}; element i stored as an image triple.
inline FiniteGroup symmetric_group3() {
    static const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    static const char* names[6] = {"e", "s01", "s12", "s02", "r1", "r2"};
    FiniteGroup g;
    for (int i = 0; i < 6; ++i) g.elements.push_back(names[i]);
    auto find = [&](const int* img) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == img[0] && perms[i][1] == img[1] && perms[i][2] == img[2]) return i;
        return -1;
    };
    g.mult.assign(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int img[3];
            // (a·b)(x) = a(b(x)): product in "apply b first" convention
            for (int x = 0; x < 3; ++x) img[x] = perms[a][perms[b][x]];
            g.mult[a][b] = find(img);
        }
    g.identity = 0;
    g.inverse.assign(6, -1);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            if (g.mult[a][b] == 0) g.inverse[a] = b;
    return g;
}

inline std::vector<Sign> trivial_hom(int order) { return std::vector<Sign>(order, Sign::plus()); }

/// The available parity homomorphisms G → O(1) for a catalog group.
struct CatalogEntry {
    FiniteGroup group;
    std::vector<std::vector<Sign>> parity_homs;  // [0] is always the trivial one
};

inline const std::vector<CatalogEntry>& group_catalog() {
    static const std::vector<CatalogEntry> catalog = [] {
        std::vector<CatalogEntry> c;
        c.push_back({trivial_group(), {trivial_hom(1)}});
        {
            CatalogEntry e{cyclic_group(2), {trivial_hom(2)}};
            e.parity_homs.push_back({Sign::plus(), Sign::minus()});
            c.push_back(e);
        }
        c.push_back({cyclic_group(3), {trivial_hom(3)}});
        {
            CatalogEntry e{symmetric_group3(), {trivial_hom(6)}};
            // sign homomorphism: transpositions odd, 3-cycles even
            e.parity_homs.push_back({Sign::plus(), Sign::minus(), Sign::minus(), Sign::minus(), Sign::plus(), Sign::plus()});
            c.push_back(e);
        }
        return c;
    }();
    return catalog;
}

/// All homomorphisms H → G, brute-forced over element image maps (both
/// groups have order ≤ 6, so at most 6^6 candidates).
inline std::vector<std::vector<int>> enumerate_homs(const FiniteGroup& h, const FiniteGroup& g) {
    std::vector<std::vector<int>> homs;
    int nh = h.order(), ng = g.order();
    std::vector<int> img(nh, 0);
    for (;;) {
        bool ok = img[h.identity] == g.identity;
        for (int a = 0; ok && a < nh; ++a)
            for (int b = 0; ok && b < nh; ++b)
                if (img[h.mult[a][b]] != g.mult[img[a]][img[b]]) ok = false;
        if (ok) homs.push_back(img);
        int i = nh - 1;
        while (i >= 0 && ++img[i] == ng) img[i--] = 0;
        if (i < 0) break;
    }
    return homs;
}

/// A generated foot with its per-component structure retained, so that spans
/// into it can be built functorially.
struct GenFoot {
    ParityGroupoid pg;

    struct Comp {
        int cat = 0;                  // catalog index of the automorphism group
        std::vector<Sign> hom;        // parity homomorphism in use
        std::vector<int> objects;     // 1 or 2 objects (fattened)
        int mor_base = 0;             // morphism (g, a, b) at mor_base + (a·L + b)·|G| + g
    };
    std::vector<Comp> comps;

    /// Index of the arrow labeled g from local object a to local object b.
    int mor_of(int comp, int g, int a, int b) const {
        const Comp& c = comps[comp];
        int order = group_catalog()[c.cat].group.order();
        int l = static_cast<int>(c.objects.size());
        (void)l;
        return c.mor_base + (a * static_cast<int>(c.objects.size()) + b) * order + g;
    }
};

struct FootOptions {
    int min_components = 1;
    int max_components = 3;
    int max_group_order = 6;  // restricts catalog picks
    bool allow_odd = true;    // permit nontrivial parity homs
    bool allow_fatten = true; // permit two-object components
    std::string prefix = "c";
};

/// A disjoint union of (possibly fattened) deloopings of catalog groups with
/// chosen parity homomorphisms. Arrows (g, a, b): a → b compose by the group
/// law, parity is the homomorphism applied to g.
inline GenFoot random_foot(Rng& rng, const FootOptions& opt) {
    GenFoot foot;
    const auto& catalog = group_catalog();
    int ncomp = opt.min_components + pick(rng, opt.max_components - opt.min_components + 1);
    for (int ci = 0; ci < ncomp; ++ci) {
        GenFoot::Comp comp;
        do {
            comp.cat = pick(rng, static_cast<int>(catalog.size()));
        } while (catalog[comp.cat].group.order() > opt.max_group_order);
        const auto& entry = catalog[comp.cat];
        int homi = opt.allow_odd ? pick(rng, static_cast<int>(entry.parity_homs.size())) : 0;
        comp.hom = entry.parity_homs[homi];
        int nlocal = (opt.allow_fatten && coin(rng)) ? 2 : 1;
        std::string base = opt.prefix + std::to_string(ci);
        for (int a = 0; a < nlocal; ++a) comp.objects.push_back(foot.pg.g.add_object(base + "o" + std::to_string(a)));
        comp.mor_base = foot.pg.g.num_morphisms();
        int order = entry.group.order();
        for (int a = 0; a < nlocal; ++a)
            for (int b = 0; b < nlocal; ++b)
                for (int g = 0; g < order; ++g) {
                    foot.pg.g.add_morphism(base + "m" + entry.group.elements[g] + "_" + std::to_string(a) + std::to_string(b),
                                           comp.objects[a], comp.objects[b]);
                    foot.pg.parity.push_back(comp.hom[g]);
                }
        foot.comps.push_back(comp);
        int c = static_cast<int>(foot.comps.size()) - 1;
        // composition: (h, b, d)∘(g, a, b) = (h·g, a, d)
        for (int a = 0; a < nlocal; ++a)
            for (int b = 0; b < nlocal; ++b)
                for (int g = 0; g < order; ++g)
                    for (int d = 0; d < nlocal; ++d)
                        for (int h = 0; h < order; ++h)
                            foot.pg.g.set_compose(foot.mor_of(c, g, a, b), foot.mor_of(c, h, b, d),
                                                  foot.mor_of(c, entry.group.mult[h][g], a, d));
        for (int a = 0; a < nlocal; ++a)
            for (int b = 0; b < nlocal; ++b)
                for (int g = 0; g < order; ++g)
                    foot.pg.g.set_inverse(foot.mor_of(c, g, a, b), foot.mor_of(c, entry.group.inverse[g], b, a));
        for (int a = 0; a < nlocal; ++a)
            foot.pg.g.set_identity(comp.objects[a], foot.mor_of(c, entry.group.identity, a, a));
    }
    foot.pg.g.finalize();
    return foot;
}

struct SpanOptions {
    int min_pieces = 1;
    int max_pieces = 3;
    int max_piece_group_order = 3;
    bool allow_fatten = true;
};

/// A random P-span between two generated feet. The apex is a disjoint union
/// of (possibly fattened) deloopings BH; each piece maps to one component of
/// each foot via a pair of homomorphisms whose parities agree, which makes a
/// constant ρ per piece natural.
inline PSpan random_span(Rng& rng, const GenFoot& s, const GenFoot& t, const SpanOptions& opt) {
    const auto& catalog = group_catalog();
    PSpan sp;
    sp.left_foot = s.pg;
    sp.right_foot = t.pg;

    int npieces = opt.min_pieces + pick(rng, opt.max_pieces - opt.min_pieces + 1);
    for (int pi = 0; pi < npieces; ++pi) {
        // choose an apex group and target components until a parity-compatible
        // pair of homomorphisms exists (the trivial group always works)
        int cat, cs, ct;
        std::vector<std::pair<std::vector<int>, std::vector<int>>> compatible;
        for (int attempt = 0;; ++attempt) {
            do {
                cat = pick(rng, static_cast<int>(catalog.size()));
            } while (catalog[cat].group.order() > opt.max_piece_group_order);
            if (attempt > 8) cat = 0;
            cs = pick(rng, static_cast<int>(s.comps.size()));
            ct = pick(rng, static_cast<int>(t.comps.size()));
            const FiniteGroup& h = catalog[cat].group;
            auto homs1 = enumerate_homs(h, catalog[s.comps[cs].cat].group);
            auto homs2 = enumerate_homs(h, catalog[t.comps[ct].cat].group);
            compatible.clear();
            for (const auto& f1 : homs1)
                for (const auto& f2 : homs2) {
                    bool ok = true;
                    for (int e = 0; ok && e < h.order(); ++e)
                        if (s.comps[cs].hom[f1[e]] != t.comps[ct].hom[f2[e]]) ok = false;
                    if (ok) compatible.emplace_back(f1, f2);
                }
            if (!compatible.empty()) break;
        }
        const FiniteGroup& h = catalog[cat].group;
        auto [phi1, phi2] = compatible[pick(rng, static_cast<int>(compatible.size()))];
        int nlocal = (opt.allow_fatten && coin(rng)) ? 2 : 1;
        Sign rho = coin(rng) ? Sign::plus() : Sign::minus();

        // each local apex object maps to a random object of the chosen foot components
        std::vector<int> sobj(nlocal), tobj(nlocal);
        std::vector<int> sloc(nlocal), tloc(nlocal);
        for (int a = 0; a < nlocal; ++a) {
            sloc[a] = pick(rng, static_cast<int>(s.comps[cs].objects.size()));
            tloc[a] = pick(rng, static_cast<int>(t.comps[ct].objects.size()));
            sobj[a] = s.comps[cs].objects[sloc[a]];
            tobj[a] = t.comps[ct].objects[tloc[a]];
        }

        std::string base = "p" + std::to_string(pi);
        std::vector<int> objs;
        int mor_base = sp.apex.num_morphisms();
        int order = h.order();
        auto mor_of = [mor_base, nlocal, order](int g, int a, int b) {
            return mor_base + (a * nlocal + b) * order + g;
        };
        for (int a = 0; a < nlocal; ++a) {
            objs.push_back(sp.apex.add_object(base + "o" + std::to_string(a)));
            sp.left_fun.on_obj.push_back(sobj[a]);
            sp.right_fun.on_obj.push_back(tobj[a]);
            sp.rho.push_back(rho);
        }
        for (int a = 0; a < nlocal; ++a)
            for (int b = 0; b < nlocal; ++b)
                for (int g = 0; g < order; ++g) {
                    sp.apex.add_morphism(base + "m" + h.elements[g] + "_" + std::to_string(a) + std::to_string(b),
                                         objs[a], objs[b]);
                    sp.left_fun.on_mor.push_back(s.mor_of(cs, phi1[g], sloc[a], sloc[b]));
                    sp.right_fun.on_mor.push_back(t.mor_of(ct, phi2[g], tloc[a], tloc[b]));
                }
        for (int a = 0; a < nlocal; ++a)
            for (int b = 0; b < nlocal; ++b)
                for (int g = 0; g < order; ++g)
                    for (int d = 0; d < nlocal; ++d)
                        for (int h2 = 0; h2 < order; ++h2)
                            sp.apex.set_compose(mor_of(g, a, b), mor_of(h2, b, d), mor_of(h.mult[h2][g], a, d));
        for (int a = 0; a < nlocal; ++a)
            for (int b = 0; b < nlocal; ++b)
                for (int g = 0; g < order; ++g)
                    sp.apex.set_inverse(mor_of(g, a, b), mor_of(h.inverse[g], b, a));
        for (int a = 0; a < nlocal; ++a) sp.apex.set_identity(objs[a], mor_of(h.identity, a, a));
    }
    sp.apex.finalize();
    return sp;
}

/// A random scalar: disjoint union of deloopings with a sign per component.
inline SignedGroupoid random_scalar(Rng& rng, int max_components = 4) {
    FootOptions opt;
    opt.max_components = max_components;
    opt.allow_odd = false;  // parity is irrelevant for a bare scalar
    GenFoot f = random_foot(rng, opt);
    std::vector<Sign> obj_sign(f.pg.g.num_objects(), Sign::plus());
    for (const auto& c : f.comps) {
        Sign sgn = coin(rng) ? Sign::plus() : Sign::minus();
        for (int o : c.objects) obj_sign[o] = sgn;
    }
    return make_scalar(f.pg.g, obj_sign);
}

/// G acting on |G| disjoint copies of Y by translation of the copy index;
/// θ ≡ +1. The weak quotient is equivalent to Y.
inline GroupAction translation_action(const FiniteGroup& g, const ParityGroupoid& y) {
    GroupAction act;
    act.group = g;
    int n = g.order();
    for (int c = 0; c < n; ++c) {
        const std::string prefix = g.elements[c] + ":";
        int ob = act.target.g.num_objects(), mb = act.target.g.num_morphisms();
        for (int o = 0; o < y.g.num_objects(); ++o) act.target.g.add_object(prefix + y.g.object_id(o));
        for (int m = 0; m < y.g.num_morphisms(); ++m) {
            act.target.g.add_morphism(prefix + y.g.morphism(m).id, ob + y.g.src(m), ob + y.g.tgt(m));
            act.target.parity.push_back(y.par(m));
        }
        for (int m = 0; m < y.g.num_morphisms(); ++m) {
            for (int h : y.g.out(y.g.tgt(m))) act.target.g.set_compose(mb + m, mb + h, mb + y.g.compose(h, m));
            act.target.g.set_inverse(mb + m, mb + y.g.inverse(m));
        }
        for (int o = 0; o < y.g.num_objects(); ++o) act.target.g.set_identity(ob + o, mb + y.g.identity(o));
    }
    act.target.g.finalize();
    int no = y.g.num_objects(), nm = y.g.num_morphisms();
    act.on_objects.assign(n, std::vector<int>(n * no));
    act.on_morphisms.assign(n, std::vector<int>(n * nm));
    act.theta.assign(n, std::vector<Sign>(n * no, Sign::plus()));
    for (int gg = 0; gg < n; ++gg)
        for (int c = 0; c < n; ++c) {
            int c2 = g.mult[c][gg];  // copy c moves to copy c·g under the right action
            for (int o = 0; o < no; ++o) act.on_objects[gg][c * no + o] = c2 * no + o;
            for (int m = 0; m < nm; ++m) act.on_morphisms[gg][c * nm + m] = c2 * nm + m;
        }
    return act;
}

/// G acting trivially on the point with θ_g given by a parity homomorphism;
/// the weak quotient is BG with that parity.
inline GroupAction point_action(const FiniteGroup& g, const std::vector<Sign>& parity_hom) {
    GroupAction act;
    act.group = g;
    act.target = trivial_point();
    int n = g.order();
    act.on_objects.assign(n, {0});
    act.on_morphisms.assign(n, {0});
    act.theta.assign(n, {Sign::plus()});
    for (int e = 0; e < n; ++e) act.theta[e][0] = parity_hom[e];
    return act;
}

}  // namespace gen
}  // namespace glin
