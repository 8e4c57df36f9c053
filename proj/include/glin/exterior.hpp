#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "glin/groupoid.hpp"
#include "glin/span.hpp"

namespace glin {

struct Permutation {
    std::vector<int> img;  // 0-based images; img[j] = σ(j)

    int degree() const { return static_cast<int>(img.size()); }

    Permutation inverse() const {
        Permutation p;
        p.img.resize(img.size());
        for (int j = 0; j < degree(); ++j) p.img[img[j]] = j;
        return p;
    }

    bool is_identity() const {
        for (int j = 0; j < degree(); ++j)
            if (img[j] != j) return false;
        return true;
    }

    std::string word() const {
        std::string s;
        for (int v : img) s += std::to_string(v + 1);
        return s;
    }
};

inline Sign permutation_sign(const Permutation& p) {
    int inv = 0;
    for (int i = 0; i < p.degree(); ++i)
        for (int j = i + 1; j < p.degree(); ++j)
            if (p.img[i] > p.img[j]) ++inv;
    return inv % 2 == 0 ? Sign::plus() : Sign::minus();
}

/// All permutations of degree k in lexicographic order of image words. This
/// order is shared between feet and apex of exterior-power spans.
inline std::vector<Permutation> all_permutations(int k) {
    std::vector<Permutation> out;
    Permutation p;
    p.img.resize(k);
    std::iota(p.img.begin(), p.img.end(), 0);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.img.begin(), p.img.end()));
    return out;
}

/// Thrown when a Λᵏ enumeration would exceed the morphism-candidate budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr uint64_t kDefaultBudget = 1000000;

namespace detail {

inline void check_power_budget(const FiniteGroupoid& g, int k, uint64_t budget) {
    BigInt fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    BigInt objs = fact, mors = fact;
    for (int i = 0; i < k; ++i) {
        objs *= g.num_objects();
        mors *= g.num_morphisms();
    }
    if (objs > budget || mors > budget)
        throw BudgetExceeded("power groupoid for k=" + std::to_string(k) + " exceeds the enumeration budget of " +
                             std::to_string(budget) + " candidates");
}

/// Shared builder for Λᵏ and Symᵏ. Objects are k-tuples (positional index,
/// big-endian base |Ob|); a morphism is (σ, γ⃗) with positional index
/// σ_idx·|Mor|^k + radix(γ⃗), source src(γ_j) at slot j and target
/// tgt(γ_{σ⁻¹(i)}) at slot i. Parity is [sign σ]·Π par(γ_j); the sign factor
/// is dropped for the symmetric power.
inline ParityGroupoid power_groupoid_core(const FiniteGroupoid& g, const std::vector<Sign>& par, int k,
                                          bool alternating, uint64_t budget) {
    if (k == 0) return trivial_point("()");
    if (g.num_objects() == 0) {
        ParityGroupoid empty;
        empty.g.finalize();
        return empty;
    }
    check_power_budget(g, k, budget);

    auto perms = all_permutations(k);
    int np = static_cast<int>(perms.size());
    int no = g.num_objects();
    int nm = g.num_morphisms();

    ParityGroupoid out;
    std::vector<int> tup(k, 0);
    auto obj_id = [&](const std::vector<int>& t) {
        std::string s = "(";
        for (int i = 0; i < k; ++i) {
            if (i) s += ",";
            s += g.object_id(t[i]);
        }
        return s + ")";
    };
    // objects in mixed-radix order, so index(tuple) = Σ t[i]·no^(k-1-i)
    for (;;) {
        out.g.add_object(obj_id(tup));
        int i = k - 1;
        while (i >= 0 && ++tup[i] == no) tup[i--] = 0;
        if (i < 0) break;
    }
    auto obj_index = [&](const std::vector<int>& t) {
        int idx = 0;
        for (int i = 0; i < k; ++i) idx = idx * no + t[i];
        return idx;
    };

    // morphisms: outer loop over σ, inner mixed-radix loop over γ⃗
    std::vector<int> gam(k, 0), st(k), tt(k);
    for (int s = 0; s < np; ++s) {
        const Permutation& sigma = perms[s];
        Permutation sinv = sigma.inverse();
        Sign base = alternating ? permutation_sign(sigma) : Sign::plus();
        std::fill(gam.begin(), gam.end(), 0);
        for (;;) {
            for (int i = 0; i < k; ++i) {
                st[i] = g.src(gam[i]);
                tt[i] = g.tgt(gam[sinv.img[i]]);
            }
            std::string id = "[" + sigma.word() + ";";
            for (int i = 0; i < k; ++i) {
                if (i) id += ",";
                id += g.morphism(gam[i]).id;
            }
            id += "]";
            out.g.add_morphism(id, obj_index(st), obj_index(tt));
            Sign p = base;
            for (int i = 0; i < k; ++i) p *= par[gam[i]];
            out.parity.push_back(p);
            int i = k - 1;
            while (i >= 0 && ++gam[i] == nm) gam[i--] = 0;
            if (i < 0) break;
        }
    }
    auto mor_index = [&](int sidx, const std::vector<int>& gs) {
        int idx = sidx;
        for (int i = 0; i < k; ++i) idx = idx * nm + gs[i];
        return idx;
    };

    // composition (σ,γ⃗) then (σ″,γ″⃗) = (σ″∘σ, j ↦ γ″_{σ(j)}∘γ_j)
    std::vector<int> sigma_compose(np * np);  // index of σ″∘σ
    std::vector<int> sigma_inverse(np);
    {
        std::map<std::vector<int>, int> perm_idx;
        for (int i = 0; i < np; ++i) perm_idx[perms[i].img] = i;
        for (int s1 = 0; s1 < np; ++s1) {
            sigma_inverse[s1] = perm_idx.at(perms[s1].inverse().img);
            for (int s2 = 0; s2 < np; ++s2) {
                std::vector<int> comp(k);
                for (int j = 0; j < k; ++j) comp[j] = perms[s2].img[perms[s1].img[j]];
                sigma_compose[s2 * np + s1] = perm_idx.at(comp);
            }
        }
    }
    std::vector<int> g2(k), cg(k);
    for (int s1 = 0; s1 < np; ++s1) {
        const Permutation& sigma = perms[s1];
        const Permutation sinv = sigma.inverse();
        std::fill(gam.begin(), gam.end(), 0);
        for (;;) {
            int m1 = mor_index(s1, gam);
            for (int i = 0; i < k; ++i) tt[i] = g.tgt(gam[sinv.img[i]]);
            // enumerate composable seconds: γ″_i ∈ out(tt[i]), any σ″
            for (int s2 = 0; s2 < np; ++s2) {
                std::vector<int> pos(k, 0);
                for (;;) {
                    for (int i = 0; i < k; ++i) g2[i] = g.out(tt[i])[pos[i]];
                    for (int j = 0; j < k; ++j) cg[j] = g.compose(g2[sigma.img[j]], gam[j]);
                    out.g.set_compose(m1, mor_index(s2, g2), mor_index(sigma_compose[s2 * np + s1], cg));
                    int i = k - 1;
                    while (i >= 0) {
                        if (++pos[i] < static_cast<int>(g.out(tt[i]).size())) break;
                        pos[i--] = 0;
                    }
                    if (i < 0) break;
                }
            }
            // inverse: (σ⁻¹, i ↦ γ_{σ⁻¹(i)}⁻¹)
            for (int i = 0; i < k; ++i) g2[i] = g.inverse(gam[sinv.img[i]]);
            out.g.set_inverse(m1, mor_index(sigma_inverse[s1], g2));
            int i = k - 1;
            while (i >= 0 && ++gam[i] == nm) gam[i--] = 0;
            if (i < 0) break;
        }
    }
    // identities: σ = id (index 0 in lexicographic order), γ_i = id
    for (int o = 0; o < out.g.num_objects(); ++o) {
        int rem = o;
        std::vector<int> t(k);
        for (int i = k - 1; i >= 0; --i) {
            t[i] = rem % no;
            rem /= no;
        }
        for (int i = 0; i < k; ++i) g2[i] = g.identity(t[i]);
        out.g.set_identity(o, mor_index(0, g2));
    }
    out.g.finalize();
    return out;
}

}  // namespace detail

/// Λᵏ X = Xᵏ/Σ_k with parity twisted by the permutation sign.
inline ParityGroupoid exterior_power_groupoid(const ParityGroupoid& x, int k, uint64_t budget = kDefaultBudget) {
    return detail::power_groupoid_core(x.g, x.parity, k, true, budget);
}

/// Symᵏ X: same underlying groupoid, parity without the sign(σ) factor.
inline ParityGroupoid symmetric_power_groupoid(const ParityGroupoid& x, int k, uint64_t budget = kDefaultBudget) {
    return detail::power_groupoid_core(x.g, x.parity, k, false, budget);
}

/// Λᵏ of a P-span, component-wise: Λᵏ on the feet, the plain power on the
/// apex, tuple-wise functors, ρ(m⃗) = Π ρ(mᵢ). The sign(σ) contributions live
/// in the feet parities.
inline PSpan exterior_power_span(const PSpan& sp, int k, uint64_t budget = kDefaultBudget) {
    PSpan out;
    out.left_foot = exterior_power_groupoid(sp.left_foot, k, budget);
    out.right_foot = exterior_power_groupoid(sp.right_foot, k, budget);
    {
        std::vector<Sign> even(sp.apex.num_morphisms(), Sign::plus());
        out.apex = detail::power_groupoid_core(sp.apex, even, k, false, budget).g;
    }
    if (k == 0) {
        out.left_fun.on_obj = {0};
        out.left_fun.on_mor = {0};
        out.right_fun = out.left_fun;
        out.rho = {Sign::plus()};
        return out;
    }

    int no_m = sp.apex.num_objects(), nm_m = sp.apex.num_morphisms();
    auto map_objects = [k, no_m](int idx, const std::vector<int>& fmap, int no_f) {
        std::vector<int> t(k);
        for (int i = k - 1; i >= 0; --i) {
            t[i] = idx % no_m;
            idx /= no_m;
        }
        int r = 0;
        for (int i = 0; i < k; ++i) r = r * no_f + fmap[t[i]];
        return r;
    };
    auto map_morphisms = [k, nm_m](int idx, const std::vector<int>& fmap, int nm_f) {
        std::vector<int> gs(k);
        for (int i = k - 1; i >= 0; --i) {
            gs[i] = idx % nm_m;
            idx /= nm_m;
        }
        int r = idx;  // remaining quotient is the permutation index, shared
        for (int i = 0; i < k; ++i) r = r * nm_f + fmap[gs[i]];
        return r;
    };
    for (int o = 0; o < out.apex.num_objects(); ++o) {
        out.left_fun.on_obj.push_back(map_objects(o, sp.left_fun.on_obj, sp.left_foot.g.num_objects()));
        out.right_fun.on_obj.push_back(map_objects(o, sp.right_fun.on_obj, sp.right_foot.g.num_objects()));
        int idx = o;
        Sign r = Sign::plus();
        for (int i = 0; i < k; ++i) {
            r *= sp.rho[idx % no_m];
            idx /= no_m;
        }
        out.rho.push_back(r);
    }
    for (int m = 0; m < out.apex.num_morphisms(); ++m) {
        out.left_fun.on_mor.push_back(map_morphisms(m, sp.left_fun.on_mor, sp.left_foot.g.num_morphisms()));
        out.right_fun.on_mor.push_back(map_morphisms(m, sp.right_fun.on_mor, sp.right_foot.g.num_morphisms()));
    }
    return out;
}

}  // namespace glin
