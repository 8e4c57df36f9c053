#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "glin/rational.hpp"
#include "glin/sign.hpp"

namespace glin {

struct MorphismData {
    std::string id;
    int src = -1;
    int tgt = -1;
};

/// Collects axiom violations instead of throwing; an empty report means valid.
struct ValidationReport {
    std::vector<std::string> errors;

    bool ok() const { return errors.empty(); }
    void fail(std::string msg) { errors.push_back(std::move(msg)); }

    std::string summary() const {
        if (ok()) return "valid";
        std::string s;
        for (const auto& e : errors) {
            s += e;
            s += '\n';
        }
        return s;
    }
};

/// An explicit finite groupoid: object list, morphism list, total composition
/// table, identities and inverses. Immutable once finalized.
class FiniteGroupoid {
public:
    int add_object(std::string id) {
        int i = static_cast<int>(objects_.size());
        objects_.push_back(std::move(id));
        identity_.push_back(-1);
        return i;
    }

    int add_morphism(std::string id, int src, int tgt) {
        int i = static_cast<int>(morphisms_.size());
        morphisms_.push_back({std::move(id), src, tgt});
        inverse_.push_back(-1);
        return i;
    }

    // g after f, i.e. g∘f = h (requires tgt(f) == src(g))
    void set_compose(int f, int g, int h) { table_[key(g, f)] = h; }
    void set_identity(int obj, int mor) { identity_[obj] = mor; }
    void set_inverse(int mor, int inv) { inverse_[mor] = inv; }

    /// Builds lookup structures and infers missing identities/inverses from
    /// the composition table where possible.
    void finalize() {
        obj_index_.clear();
        mor_index_.clear();
        for (int i = 0; i < num_objects(); ++i) obj_index_[objects_[i]] = i;
        for (int i = 0; i < num_morphisms(); ++i) mor_index_[morphisms_[i].id] = i;
        out_.assign(objects_.size(), {});
        in_.assign(objects_.size(), {});
        for (int m = 0; m < num_morphisms(); ++m) {
            const auto& md = morphisms_[m];
            if (md.src >= 0 && md.src < num_objects()) out_[md.src].push_back(m);
            if (md.tgt >= 0 && md.tgt < num_objects()) in_[md.tgt].push_back(m);
        }
        infer_identities();
        infer_inverses();
        hom_.clear();
        for (int m = 0; m < num_morphisms(); ++m)
            hom_[obj_pair_key(morphisms_[m].src, morphisms_[m].tgt)].push_back(m);
        finalized_ = true;
    }

    int num_objects() const { return static_cast<int>(objects_.size()); }
    int num_morphisms() const { return static_cast<int>(morphisms_.size()); }

    const std::string& object_id(int i) const { return objects_[i]; }
    const MorphismData& morphism(int i) const { return morphisms_[i]; }
    int src(int m) const { return morphisms_[m].src; }
    int tgt(int m) const { return morphisms_[m].tgt; }
    int identity(int obj) const { return identity_[obj]; }
    int inverse(int m) const { return inverse_[m]; }

    /// g∘f, or -1 when the pair is not in the table.
    int compose(int g, int f) const {
        auto it = table_.find(key(g, f));
        return it == table_.end() ? -1 : it->second;
    }

    int find_object(const std::string& id) const {
        auto it = obj_index_.find(id);
        return it == obj_index_.end() ? -1 : it->second;
    }
    int find_morphism(const std::string& id) const {
        auto it = mor_index_.find(id);
        return it == mor_index_.end() ? -1 : it->second;
    }

    const std::vector<int>& out(int obj) const { return out_[obj]; }
    const std::vector<int>& in(int obj) const { return in_[obj]; }

    const std::vector<int>& hom(int a, int b) const {
        static const std::vector<int> empty;
        auto it = hom_.find(obj_pair_key(a, b));
        return it == hom_.end() ? empty : it->second;
    }

    bool finalized() const { return finalized_; }

    size_t table_size() const { return table_.size(); }

private:
    static uint64_t key(int g, int f) { return (static_cast<uint64_t>(g) << 32) | static_cast<uint32_t>(f); }
    static uint64_t obj_pair_key(int a, int b) { return (static_cast<uint64_t>(a) << 32) | static_cast<uint32_t>(b); }

    void infer_identities() {
        for (int o = 0; o < num_objects(); ++o) {
            if (identity_[o] >= 0) continue;
            for (int m : out_[o]) {
                if (morphisms_[m].tgt != o) continue;
                bool neutral = true;
                for (int f : out_[o])
                    if (compose(f, m) != f) { neutral = false; break; }
                if (neutral)
                    for (int f : in_[o])
                        if (compose(m, f) != f) { neutral = false; break; }
                if (neutral) { identity_[o] = m; break; }
            }
        }
    }

    void infer_inverses() {
        for (int m = 0; m < num_morphisms(); ++m) {
            if (inverse_[m] >= 0) continue;
            int s = morphisms_[m].src, t = morphisms_[m].tgt;
            if (s < 0 || t < 0) continue;
            for (int n : out_[t]) {
                if (morphisms_[n].tgt != s) continue;
                if (compose(n, m) == identity_[s] && compose(m, n) == identity_[t]) {
                    inverse_[m] = n;
                    break;
                }
            }
        }
    }

    std::vector<std::string> objects_;
    std::vector<MorphismData> morphisms_;
    std::vector<int> identity_;
    std::vector<int> inverse_;
    std::unordered_map<uint64_t, int> table_;
    std::unordered_map<std::string, int> obj_index_;
    std::unordered_map<std::string, int> mor_index_;
    std::unordered_map<uint64_t, std::vector<int>> hom_;
    std::vector<std::vector<int>> out_, in_;
    bool finalized_ = false;
};

/// A finite groupoid with a multiplicative ±1 label on every morphism.
struct ParityGroupoid {
    FiniteGroupoid g;
    std::vector<Sign> parity;  // aligned with g's morphism list

    Sign par(int m) const { return parity[m]; }
};

/// A connected component: canonical representative (lexicographically least
/// object id), member objects, automorphism count at the representative, and
/// whether the component admits an orientation.
struct Component {
    int representative = -1;
    std::vector<int> members;
    uint64_t aut_order = 0;
    bool orientable = true;
};

namespace detail {

inline std::vector<std::vector<int>> object_partition(const FiniteGroupoid& g) {
    std::vector<int> parent(g.num_objects());
    for (int i = 0; i < g.num_objects(); ++i) parent[i] = i;
    std::vector<int>& p = parent;
    auto find = [&p](int x) {
        while (p[x] != x) { p[x] = p[p[x]]; x = p[x]; }
        return x;
    };
    for (int m = 0; m < g.num_morphisms(); ++m) {
        int a = find(g.src(m)), b = find(g.tgt(m));
        if (a != b) p[a] = b;
    }
    std::map<int, std::vector<int>> groups;
    for (int o = 0; o < g.num_objects(); ++o) groups[find(o)].push_back(o);
    std::vector<std::vector<int>> out;
    out.reserve(groups.size());
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

}  // namespace detail

/// Connected components of a plain groupoid (no orientability data).
inline std::vector<Component> pi0_plain(const FiniteGroupoid& g) {
    std::vector<Component> comps;
    for (auto& members : detail::object_partition(g)) {
        Component c;
        c.members = members;
        c.representative = members[0];
        for (int o : members)
            if (g.object_id(o) < g.object_id(c.representative)) c.representative = o;
        c.aut_order = g.hom(c.representative, c.representative).size();
        comps.push_back(std::move(c));
    }
    std::sort(comps.begin(), comps.end(), [&g](const Component& a, const Component& b) {
        return g.object_id(a.representative) < g.object_id(b.representative);
    });
    return comps;
}

/// Connected components of a parity groupoid, with orientability: a component
/// is orientable iff no member object has an odd automorphism.
inline std::vector<Component> pi0(const ParityGroupoid& pg) {
    auto comps = pi0_plain(pg.g);
    for (auto& c : comps) {
        c.orientable = true;
        for (int o : c.members) {
            for (int m : pg.g.hom(o, o)) {
                if (!pg.par(m).positive()) { c.orientable = false; break; }
            }
            if (!c.orientable) break;
        }
    }
    return comps;
}

inline ValidationReport validate_groupoid(const ParityGroupoid& pg) {
    ValidationReport rep;
    const FiniteGroupoid& g = pg.g;
    if (!g.finalized()) {
        rep.fail("groupoid not finalized");
        return rep;
    }
    if (static_cast<int>(pg.parity.size()) != g.num_morphisms())
        rep.fail("parity table size does not match morphism count");

    for (int m = 0; m < g.num_morphisms(); ++m) {
        if (g.src(m) < 0 || g.src(m) >= g.num_objects() || g.tgt(m) < 0 || g.tgt(m) >= g.num_objects())
            rep.fail("morphism '" + g.morphism(m).id + "' has out-of-range endpoints");
    }
    if (!rep.ok()) return rep;

    // identities
    for (int o = 0; o < g.num_objects(); ++o) {
        int e = g.identity(o);
        if (e < 0) {
            rep.fail("object '" + g.object_id(o) + "' has no identity morphism");
            continue;
        }
        if (g.src(e) != o || g.tgt(e) != o)
            rep.fail("identity of '" + g.object_id(o) + "' is not an endomorphism");
        for (int f : g.out(o))
            if (g.compose(f, e) != f)
                rep.fail("identity of '" + g.object_id(o) + "' not right-neutral for '" + g.morphism(f).id + "'");
        for (int f : g.in(o))
            if (g.compose(e, f) != f)
                rep.fail("identity of '" + g.object_id(o) + "' not left-neutral for '" + g.morphism(f).id + "'");
    }

    // composition totality and typing
    for (int f = 0; f < g.num_morphisms(); ++f) {
        for (int h : g.out(g.tgt(f))) {
            int c = g.compose(h, f);
            if (c < 0) {
                rep.fail("composition undefined for composable pair (" + g.morphism(f).id + ", " + g.morphism(h).id + ")");
            } else if (g.src(c) != g.src(f) || g.tgt(c) != g.tgt(h)) {
                rep.fail("composite of (" + g.morphism(f).id + ", " + g.morphism(h).id + ") has wrong endpoints");
            }
        }
    }
    if (!rep.ok()) return rep;

    // associativity
    for (int f = 0; f < g.num_morphisms() && rep.ok(); ++f) {
        for (int h : g.out(g.tgt(f))) {
            int hf = g.compose(h, f);
            for (int k : g.out(g.tgt(h))) {
                if (g.compose(k, hf) != g.compose(g.compose(k, h), f)) {
                    rep.fail("associativity fails on (" + g.morphism(f).id + ", " + g.morphism(h).id + ", " + g.morphism(k).id + ")");
                    break;
                }
            }
            if (!rep.ok()) break;
        }
    }

    // inverses
    for (int m = 0; m < g.num_morphisms(); ++m) {
        int n = g.inverse(m);
        if (n < 0) {
            rep.fail("morphism '" + g.morphism(m).id + "' has no inverse");
            continue;
        }
        if (g.compose(n, m) != g.identity(g.src(m)) || g.compose(m, n) != g.identity(g.tgt(m)))
            rep.fail("inverse of '" + g.morphism(m).id + "' is not two-sided");
    }

    // parity axioms
    if (static_cast<int>(pg.parity.size()) == g.num_morphisms()) {
        for (int o = 0; o < g.num_objects(); ++o) {
            int e = g.identity(o);
            if (e >= 0 && !pg.par(e).positive())
                rep.fail("parity(id_" + g.object_id(o) + ") != +1");
        }
        for (int f = 0; f < g.num_morphisms(); ++f) {
            for (int h : g.out(g.tgt(f))) {
                int c = g.compose(h, f);
                if (c >= 0 && pg.par(c) != pg.par(h) * pg.par(f))
                    rep.fail("parity not multiplicative on (" + g.morphism(f).id + ", " + g.morphism(h).id + ")");
            }
            int n = g.inverse(f);
            if (n >= 0 && pg.par(n) != pg.par(f))
                rep.fail("parity(inverse) != parity for '" + g.morphism(f).id + "'");
        }
    }
    return rep;
}

inline Rational homotopy_cardinality(const ParityGroupoid& pg) {
    Rational total = 0;
    for (const auto& c : pi0(pg))
        total += Rational(1, static_cast<long long>(c.aut_order));
    return total;
}

/// Full subgroupoid on a subset of objects (every morphism between retained
/// objects is retained). Also returns the object map new->old.
struct Subgroupoid {
    ParityGroupoid groupoid;
    std::vector<int> object_map;  // new object index -> old object index
};

inline Subgroupoid full_subgroupoid(const ParityGroupoid& pg, const std::vector<int>& keep) {
    Subgroupoid out;
    const FiniteGroupoid& g = pg.g;
    std::vector<int> old_to_new(g.num_objects(), -1);
    for (int o : keep) {
        old_to_new[o] = out.groupoid.g.add_object(g.object_id(o));
        out.object_map.push_back(o);
    }
    std::vector<int> mor_map(g.num_morphisms(), -1);
    for (int m = 0; m < g.num_morphisms(); ++m) {
        if (old_to_new[g.src(m)] >= 0 && old_to_new[g.tgt(m)] >= 0) {
            mor_map[m] = out.groupoid.g.add_morphism(g.morphism(m).id, old_to_new[g.src(m)], old_to_new[g.tgt(m)]);
            out.groupoid.parity.push_back(pg.par(m));
        }
    }
    for (int m = 0; m < g.num_morphisms(); ++m) {
        if (mor_map[m] < 0) continue;
        for (int h : g.out(g.tgt(m))) {
            if (mor_map[h] < 0) continue;
            out.groupoid.g.set_compose(mor_map[m], mor_map[h], mor_map[g.compose(h, m)]);
        }
        if (g.inverse(m) >= 0 && mor_map[g.inverse(m)] >= 0)
            out.groupoid.g.set_inverse(mor_map[m], mor_map[g.inverse(m)]);
    }
    for (int o : keep)
        if (g.identity(o) >= 0 && mor_map[g.identity(o)] >= 0)
            out.groupoid.g.set_identity(old_to_new[o], mor_map[g.identity(o)]);
    out.groupoid.g.finalize();
    return out;
}

/// Full subgroupoid on the objects of orientable components.
inline Subgroupoid orientable_locus(const ParityGroupoid& pg) {
    std::vector<int> keep;
    for (const auto& c : pi0(pg))
        if (c.orientable)
            for (int o : c.members) keep.push_back(o);
    std::sort(keep.begin(), keep.end());
    return full_subgroupoid(pg, keep);
}

/// Result of searching for orientations: either none exist (some component has
/// an odd automorphism) or there are 2^k of them with a concrete witness.
struct OrientationInfo {
    bool orientable = false;
    BigInt count = 0;
    std::vector<Sign> witness;  // per object; valid only when orientable
};

inline OrientationInfo enumerate_orientations(const ParityGroupoid& pg) {
    OrientationInfo info;
    const FiniteGroupoid& g = pg.g;
    auto comps = pi0(pg);
    info.witness.assign(g.num_objects(), Sign::plus());
    std::vector<bool> fixed(g.num_objects(), false);
    for (const auto& c : comps) {
        // propagate from the representative; conflict <=> odd automorphism
        std::vector<int> stack{c.representative};
        info.witness[c.representative] = Sign::plus();
        fixed[c.representative] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int m : g.out(x)) {
                int y = g.tgt(m);
                Sign required = info.witness[x] * pg.par(m);  // ω_x·par(a) = ω_y
                if (!fixed[y]) {
                    info.witness[y] = required;
                    fixed[y] = true;
                    stack.push_back(y);
                } else if (info.witness[y] != required) {
                    return info;  // not orientable
                }
            }
        }
    }
    info.orientable = true;
    info.count = BigInt(1) << comps.size();
    return info;
}

/// Coproduct with relabeled ids ("a:" / "b:" prefixes).
inline ParityGroupoid disjoint_sum(const ParityGroupoid& G, const ParityGroupoid& H) {
    ParityGroupoid out;
    auto copy_in = [&out](const ParityGroupoid& src_pg, const std::string& prefix) {
        const FiniteGroupoid& s = src_pg.g;
        int obj_base = out.g.num_objects();
        int mor_base = out.g.num_morphisms();
        for (int o = 0; o < s.num_objects(); ++o) out.g.add_object(prefix + s.object_id(o));
        for (int m = 0; m < s.num_morphisms(); ++m) {
            out.g.add_morphism(prefix + s.morphism(m).id, obj_base + s.src(m), obj_base + s.tgt(m));
            out.parity.push_back(src_pg.par(m));
        }
        for (int m = 0; m < s.num_morphisms(); ++m) {
            for (int h : s.out(s.tgt(m)))
                out.g.set_compose(mor_base + m, mor_base + h, mor_base + s.compose(h, m));
            if (s.inverse(m) >= 0) out.g.set_inverse(mor_base + m, mor_base + s.inverse(m));
        }
        for (int o = 0; o < s.num_objects(); ++o)
            if (s.identity(o) >= 0) out.g.set_identity(obj_base + o, mor_base + s.identity(o));
    };
    copy_in(G, "a:");
    copy_in(H, "b:");
    out.g.finalize();
    return out;
}

/// Convolution product: objects and morphisms are pairs, parity multiplies.
inline ParityGroupoid star_product(const ParityGroupoid& G, const ParityGroupoid& H) {
    ParityGroupoid out;
    const FiniteGroupoid& a = G.g;
    const FiniteGroupoid& b = H.g;
    int nb = b.num_objects();
    int mb = b.num_morphisms();
    for (int i = 0; i < a.num_objects(); ++i)
        for (int j = 0; j < nb; ++j)
            out.g.add_object("(" + a.object_id(i) + "," + b.object_id(j) + ")");
    auto obj = [nb](int i, int j) { return i * nb + j; };
    for (int m = 0; m < a.num_morphisms(); ++m)
        for (int n = 0; n < mb; ++n) {
            out.g.add_morphism("(" + a.morphism(m).id + "," + b.morphism(n).id + ")",
                               obj(a.src(m), b.src(n)), obj(a.tgt(m), b.tgt(n)));
            out.parity.push_back(G.par(m) * H.par(n));
        }
    auto mor = [mb](int m, int n) { return m * mb + n; };
    for (int m = 0; m < a.num_morphisms(); ++m)
        for (int n = 0; n < mb; ++n) {
            for (int m2 : a.out(a.tgt(m)))
                for (int n2 : b.out(b.tgt(n)))
                    out.g.set_compose(mor(m, n), mor(m2, n2), mor(a.compose(m2, m), b.compose(n2, n)));
            out.g.set_inverse(mor(m, n), mor(a.inverse(m), b.inverse(n)));
        }
    for (int i = 0; i < a.num_objects(); ++i)
        for (int j = 0; j < nb; ++j)
            out.g.set_identity(obj(i, j), mor(a.identity(i), b.identity(j)));
    out.g.finalize();
    return out;
}

/// The trivial point e with its unique (even) parity structure.
inline ParityGroupoid trivial_point(const std::string& obj_id = "*") {
    ParityGroupoid pt;
    int o = pt.g.add_object(obj_id);
    int e = pt.g.add_morphism("id_" + obj_id, o, o);
    pt.g.set_compose(e, e, e);
    pt.g.set_identity(o, e);
    pt.g.set_inverse(e, e);
    pt.parity.push_back(Sign::plus());
    pt.g.finalize();
    return pt;
}

/// A discrete groupoid (identities only, all even) on the given object ids.
inline ParityGroupoid discrete_groupoid(const std::vector<std::string>& ids) {
    ParityGroupoid out;
    for (const auto& id : ids) {
        int o = out.g.add_object(id);
        int e = out.g.add_morphism("id_" + id, o, o);
        out.g.set_compose(e, e, e);
        out.g.set_identity(o, e);
        out.g.set_inverse(e, e);
        out.parity.push_back(Sign::plus());
    }
    out.g.finalize();
    return out;
}

}  // namespace glin
