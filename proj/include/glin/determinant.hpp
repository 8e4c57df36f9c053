#pragma once

#include <string>
#include <vector>

#include "glin/exterior.hpp"
#include "glin/matrix.hpp"
#include "glin/scalar.hpp"
#include "glin/span.hpp"

namespace glin {

/// The canonical basepoint tuple (x₁,…,x_n), one object per orientable
/// component in canonical order, with |x₁!|·…·|x_n!|.
struct Basepoints {
    std::vector<int> objects;
    std::vector<std::string> ids;
    uint64_t aut_product = 1;

    int degree() const { return static_cast<int>(objects.size()); }
};

inline Basepoints basepoints(const ParityGroupoid& x) {
    Basepoints bp;
    for (int o : orientable_basepoints(x)) {
        bp.objects.push_back(o);
        bp.ids.push_back(x.g.object_id(o));
        bp.aut_product *= x.g.hom(o, o).size();
    }
    return bp;
}

/// The number of orientable components; the highest power with an orientable
/// point.
inline int top_degree(const ParityGroupoid& x) {
    return basepoints(x).degree();
}

inline void require_endo(const PSpan& sp) {
    const FiniteGroupoid& a = sp.left_foot.g;
    const FiniteGroupoid& b = sp.right_foot.g;
    bool same = a.num_objects() == b.num_objects() && a.num_morphisms() == b.num_morphisms();
    for (int o = 0; same && o < a.num_objects(); ++o) same = a.object_id(o) == b.object_id(o);
    for (int m = 0; same && m < a.num_morphisms(); ++m) same = a.morphism(m).id == b.morphism(m).id;
    if (!same) throw std::invalid_argument("expected an endo-span (equal feet)");
}

/// Det Â = Λⁿ of the span, n the top degree of the foot.
inline PSpan det_span(const PSpan& sp, uint64_t budget = kDefaultBudget) {
    require_endo(sp);
    return exterior_power_span(sp, top_degree(sp.left_foot), budget);
}

/// Index of the tuple (ids…) among the objects of a power groupoid.
inline int tuple_object(const ParityGroupoid& power, const std::vector<std::string>& ids) {
    std::string id = "(";
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) id += ",";
        id += ids[i];
    }
    id += ")";
    int o = power.g.find_object(id);
    if (o < 0) throw std::logic_error("basepoint tuple not found in power groupoid");
    return o;
}

/// ‖Det Â‖ / ‖x̄!‖: the one material entry of the top exterior power.
inline Rational det_cardinality(const PSpan& sp, uint64_t budget = kDefaultBudget) {
    require_endo(sp);
    Basepoints bp = basepoints(sp.left_foot);
    PSpan ds = exterior_power_span(sp, bp.degree(), budget);
    int xbar = bp.degree() == 0 ? 0 : tuple_object(ds.left_foot, bp.ids);
    Rational card = scalar_cardinality(two_sided_fiber(ds, xbar, xbar));
    return card / Rational(static_cast<long long>(bp.aut_product));
}

/// The Leibniz expansion ⊔_σ sign(σ)·Πᵢ fiber(xᵢ, x_{σ(i)}), built purely
/// from 1-fold fibers (no Λⁿ enumeration), so it is an independent pipeline
/// against the Λⁿ fiber.
inline SignedGroupoid leibniz_scalar(const PSpan& sp) {
    require_endo(sp);
    Basepoints bp = basepoints(sp.left_foot);
    int n = bp.degree();
    SignedGroupoid acc = empty_scalar();
    for (const Permutation& sigma : all_permutations(n)) {
        SignedGroupoid prod = unit_scalar();
        for (int i = 0; i < n; ++i)
            prod = scalar_multiply(prod, two_sided_fiber(sp, bp.objects[i], bp.objects[sigma.img[i]]));
        if (!permutation_sign(sigma).positive()) prod = scalar_negate(std::move(prod));
        acc = scalar_disjoint_sum(acc, prod, "", sigma.word() + "|");
    }
    return acc;
}

/// Permutation index carried by a morphism of a k-fold power groupoid
/// (positional encoding: index = σ_idx·|Mor|^k + radix(γ⃗)).
inline int power_morphism_perm_index(int base_num_morphisms, int k, int mor_idx) {
    int d = 1;
    for (int i = 0; i < k; ++i) d *= base_num_morphisms;
    return mor_idx / d;
}

struct FiberCellEntry {
    std::string element;      // apex tuple, components joined by "·"
    std::string permutation;  // "id", "tau" (k = 2) or the one-line word
    Sign sign;
};

struct FiberCell {
    std::string row, col;
    bool material = false;
    std::vector<FiberCellEntry> entries;
    Rational net = 0;
};

/// All two-sided fibres of ΛᵏA over component representatives of ΛᵏX, with
/// element-level listings; immaterial (non-orientable) cells included.
struct FiberTableReport {
    int k = 0;
    std::vector<std::string> labels;  // component representatives of ΛᵏX
    std::vector<FiberCell> cells;     // row-major over labels × labels

    const FiberCell& cell(int r, int c) const { return cells[r * labels.size() + c]; }
};

inline std::string render_permutation(const Permutation& p) {
    if (p.is_identity()) return "id";
    if (p.degree() == 2) return "tau";
    return p.word();
}

inline FiberTableReport fiber_table(const PSpan& sp, int k, uint64_t budget = kDefaultBudget) {
    require_endo(sp);
    PSpan es = exterior_power_span(sp, k, budget);
    auto perms = all_permutations(k);
    int nm_base = sp.right_foot.g.num_morphisms();
    int no_apex = sp.apex.num_objects();

    FiberTableReport rep;
    rep.k = k;
    auto comps = pi0(es.left_foot);
    for (const auto& c : comps) rep.labels.push_back(es.left_foot.g.object_id(c.representative));

    for (const auto& rc : comps)
        for (const auto& cc : comps) {
            FiberCell cell;
            cell.row = es.left_foot.g.object_id(rc.representative);
            cell.col = es.left_foot.g.object_id(cc.representative);
            cell.material = rc.orientable && cc.orientable;
            StrictFiber fib = strict_fiber(es, rc.representative, cc.representative);
            for (const auto& pt : fib.points) {
                FiberCellEntry e;
                // decode the apex tuple from the positional object index
                std::vector<int> t(k);
                int idx = pt.m;
                for (int i = k - 1; i >= 0; --i) {
                    t[i] = idx % no_apex;
                    idx /= no_apex;
                }
                for (int i = 0; i < k; ++i) {
                    if (i) e.element += "·";
                    e.element += sp.apex.object_id(t[i]);
                }
                e.permutation = render_permutation(perms[power_morphism_perm_index(nm_base, k, pt.gamma)]);
                e.sign = pt.sign;
                cell.entries.push_back(std::move(e));
            }
            cell.net = scalar_cardinality(fib.scalar);
            rep.cells.push_back(std::move(cell));
        }
    return rep;
}

/// Plain-text grid of net cardinalities; immaterial cells are bracketed.
inline std::string fiber_table_grid(const FiberTableReport& rep) {
    std::string s = ".";
    for (const auto& l : rep.labels) s += "\t" + l;
    s += "\n";
    int n = static_cast<int>(rep.labels.size());
    for (int r = 0; r < n; ++r) {
        s += rep.labels[r];
        for (int c = 0; c < n; ++c) {
            const FiberCell& cell = rep.cell(r, c);
            std::string v = to_string(cell.net);
            s += "\t" + (cell.material ? v : "[" + v + "]");
        }
        s += "\n";
    }
    return s;
}

/// One line per fiber element: row, col, element, permutation, sign.
inline std::string fiber_table_listing(const FiberTableReport& rep) {
    std::string s;
    for (const auto& cell : rep.cells)
        for (const auto& e : cell.entries)
            s += cell.row + "\t" + cell.col + "\t" + e.element + "\t" + e.permutation + "\t" + e.sign.str() + "\n";
    return s;
}

}  // namespace glin
