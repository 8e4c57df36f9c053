// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Randomized criteria are seeded from fixtures/seeds.json so reruns
// are bit-identical.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "glin/cli.hpp"
#include "glin/determinant.hpp"
#include "glin/generator.hpp"
#include "glin/matrix.hpp"

using namespace glin;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << name;
    if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

uint64_t seed(const std::string& key) {
    std::ifstream in(std::string(GLIN_FIXTURES_DIR) + "/seeds.json");
    return nlohmann::json::parse(in).at(key).get<uint64_t>();
}

PSpan split_idempotent_span() {
    return parse_document(std::string(GLIN_FIXTURES_DIR) + "/split_idempotent.json").spans.at("sp").span;
}

// ---- criterion 1: the worked split-idempotent example, end to end ----

void criterion1() {
    auto start = Clock::now();
    std::string detail;
    bool ok = true;
    try {
        PSpan sp = split_idempotent_span();
        RationalMatrix m = matrix_of_span(sp);
        if (matrix_to_bracket_string(m) != "[[1,1],[1,2]]") { ok = false; detail = "matrix mismatch"; }
        if (classical_det(m) != 1) { ok = false; detail = "classical det != 1"; }
        if (det_cardinality(sp) != 1) { ok = false; detail = "det cardinality != 1"; }

        ParityGroupoid l2 = exterior_power_groupoid(sp.left_foot, 2);
        auto comps = pi0(l2);
        int orientable = 0;
        for (const auto& c : comps) orientable += c.orientable;
        if (l2.g.num_objects() != 4 || comps.size() != 3 || orientable != 1) {
            ok = false;
            detail = "second power shape mismatch";
        }

        FiberTableReport rep = fiber_table(sp, 2);
        int material = 0, bad_immaterial = 0;
        bool cell_ok = false;
        for (const auto& cell : rep.cells) {
            if (!cell.material) {
                if (cell.net != 0) ++bad_immaterial;
                continue;
            }
            ++material;
            std::multiset<std::string> got, want = {"x·y/id/+1", "x·e/id/+1", "s·p/tau/-1"};
            for (const auto& e : cell.entries) got.insert(e.element + "/" + e.permutation + "/" + e.sign.str());
            cell_ok = got == want && cell.net == 1;
        }
        if (material != 1 || !cell_ok) { ok = false; detail = "material cell element list mismatch"; }
        if (bad_immaterial != 0 || rep.cells.size() != 9) { ok = false; detail = "immaterial cells do not vanish"; }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    double t = seconds_since(start);
    if (t >= 1.0) { ok = false; detail = "too slow"; }
    report(1, "worked example end to end", ok, detail);
}

// ---- criterion 2: matrix functoriality on random span pairs ----

void criterion2() {
    auto start = Clock::now();
    gen::Rng rng(seed("functoriality"));
    std::string detail;
    bool ok = true;
    gen::FootOptions fopt;
    fopt.max_components = 4;
    gen::SpanOptions sopt;
    sopt.max_pieces = 3;
    for (int trial = 0; ok && trial < 200; ++trial) {
        auto s = gen::random_foot(rng, fopt);
        auto j = gen::random_foot(rng, fopt);
        auto t = gen::random_foot(rng, fopt);
        PSpan a = gen::random_span(rng, s, j, sopt);
        PSpan b = gen::random_span(rng, j, t, sopt);
        auto res = check_functoriality(a, b);
        if (!res.ok) {
            ok = false;
            detail = "trial " + std::to_string(trial) + ": " + res.detail;
        }
    }
    double t = seconds_since(start);
    if (t >= 30.0) { ok = false; detail = "too slow"; }
    report(2, "functoriality on 200 random span pairs", ok, detail);
}

// ---- criteria 3 and 4: determinant identity and objective Leibniz ----

struct DetCorpusResult {
    int trials = 0;
    bool det_ok = true, leibniz_ok = true;
    std::string det_detail, leibniz_detail;
};

void run_det_trial(gen::Rng& rng, const gen::FootOptions& fopt, const gen::SpanOptions& sopt, int want_min_degree,
                   int want_max_degree, DetCorpusResult& res) {
    gen::GenFoot s;
    int n = 0;
    for (int attempt = 0; attempt < 50; ++attempt) {
        s = gen::random_foot(rng, fopt);
        n = top_degree(s.pg);
        if (n >= want_min_degree && n <= want_max_degree) break;
    }
    if (n < want_min_degree || n > want_max_degree) return;
    PSpan sp = gen::random_span(rng, s, s, sopt);
    ++res.trials;

    Rational cls = classical_det(matrix_of_span(sp));  // throws if its oracles disagree
    Rational det = det_cardinality(sp);
    if (det != cls && res.det_ok) {
        res.det_ok = false;
        res.det_detail = "n=" + std::to_string(n) + ": " + to_string(det) + " vs " + to_string(cls);
    }

    Basepoints bp = basepoints(sp.left_foot);
    PSpan ds = det_span(sp);
    int xbar = n == 0 ? 0 : tuple_object(ds.left_foot, bp.ids);
    SignedGroupoid fib = two_sided_fiber(ds, xbar, xbar);
    SignedGroupoid lei = leibniz_scalar(sp);
    if (fingerprint_sign_aut(fib) != fingerprint_sign_aut(lei) && res.leibniz_ok) {
        res.leibniz_ok = false;
        res.leibniz_detail = "fingerprints differ at n=" + std::to_string(n);
    }
}

void criteria3and4() {
    auto start = Clock::now();
    gen::Rng rng(seed("determinant"));
    DetCorpusResult res;
    std::string detail;
    bool ran_ok = true;
    try {
        // digraph corpus: discrete feet, degrees 1..3
        gen::FootOptions digraph;
        digraph.max_group_order = 1;
        digraph.allow_fatten = false;
        gen::SpanOptions dspan;
        dspan.max_piece_group_order = 1;
        for (int trial = 0; trial < 60; ++trial) {
            digraph.min_components = 1 + trial % 3;
            digraph.max_components = digraph.min_components;
            run_det_trial(rng, digraph, dspan, 1, 3, res);
        }
        // groupoid corpus: C2 automorphisms allowed, degrees 1..2
        gen::FootOptions grp;
        grp.max_components = 2;
        grp.max_group_order = 2;
        gen::SpanOptions gspan;
        gspan.max_pieces = 2;
        gspan.max_piece_group_order = 2;
        for (int trial = 0; trial < 60; ++trial) run_det_trial(rng, grp, gspan, 1, 2, res);
    } catch (const std::exception& e) {
        ran_ok = false;
        detail = e.what();
    }
    double t = seconds_since(start);
    bool enough = res.trials >= 100;
    bool ok3 = ran_ok && enough && res.det_ok && t < 60.0;
    if (!enough) detail = "only " + std::to_string(res.trials) + " trials";
    if (!res.det_ok) detail = res.det_detail;
    if (t >= 60.0) detail = "too slow";
    report(3, "determinant identity on " + std::to_string(res.trials) + " random endo-spans", ok3, detail);
    report(4, "objective Leibniz fingerprints on the same corpus", ran_ok && enough && res.leibniz_ok,
           res.leibniz_ok ? detail : res.leibniz_detail);
}

// ---- criterion 5: binomial count of orientable components ----

void criterion5() {
    bool ok = true;
    std::string detail;
    try {
        for (int n = 1; n <= 5 && ok; ++n) {
            std::vector<std::string> ids;
            for (int i = 0; i < n; ++i) ids.push_back("x" + std::to_string(i));
            ParityGroupoid x = discrete_groupoid(ids);
            for (int k = 1; k <= n && ok; ++k) {
                ParityGroupoid lk = exterior_power_groupoid(x, k);
                int orientable = 0;
                bool trivial_aut = true;
                for (const auto& c : pi0(lk)) {
                    if (!c.orientable) continue;
                    ++orientable;
                    trivial_aut = trivial_aut && c.aut_order == 1;
                }
                int binom = 1;
                for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
                if (orientable != binom || !trivial_aut) {
                    ok = false;
                    detail = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                }
            }
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(5, "binomial dimension of exterior powers of discrete sets", ok, detail);
}

// ---- criterion 6: cancellation over odd automorphisms ----

void criterion6() {
    gen::Rng rng(seed("cancellation"));
    bool ok = true;
    std::string detail;
    int checked = 0;
    for (int trial = 0; ok && trial < 40; ++trial) {
        auto s = gen::random_foot(rng, {});
        auto t = gen::random_foot(rng, {});
        PSpan sp = gen::random_span(rng, s, t, {});
        for (int j = 0; ok && j < t.pg.g.num_objects(); ++j) {
            int ups = -1;
            for (int m : t.pg.g.hom(j, j))
                if (!t.pg.par(m).positive()) ups = m;
            if (ups < 0) continue;
            for (int i = 0; ok && i < s.pg.g.num_objects(); ++i) {
                TwoSidedFiber fib = two_sided_fiber_full(sp, i, j);
                ++checked;
                if (scalar_cardinality(fib.scalar) != 0) {
                    ok = false;
                    detail = "nonzero fiber over an odd column";
                    break;
                }
                // sign-reversing pairing: post-composition with the odd
                // automorphism; it must map the component multiset of one
                // sign onto the other
                std::map<std::tuple<int, int, int>, int> by_data;
                for (size_t p = 0; p < fib.points.size(); ++p)
                    by_data[{fib.points[p].alpha, fib.points[p].m, fib.points[p].beta}] = static_cast<int>(p);
                std::multiset<uint64_t> plus, minus;
                for (int c = 0; c < fib.scalar.num_components(); ++c)
                    (fib.scalar.sign[c].positive() ? plus : minus).insert(fib.scalar.components[c].aut_order);
                if (plus != minus) {
                    ok = false;
                    detail = "component multisets unbalanced";
                    break;
                }
                for (size_t p = 0; ok && p < fib.points.size(); ++p) {
                    const FiberPoint& pt = fib.points[p];
                    auto it = by_data.find({pt.alpha, pt.m, t.pg.g.compose(ups, pt.beta)});
                    if (it == by_data.end() || fib.points[it->second].sign != -pt.sign) {
                        ok = false;
                        detail = "pairing is not sign-reversing";
                    }
                }
            }
        }
    }
    if (ok && checked == 0) { ok = false; detail = "no odd columns generated"; }
    report(6, "cancellation lemma with sign-reversing pairing", ok, detail);
}

// ---- criterion 7: the cardinality homomorphism ----

void criterion7() {
    gen::Rng rng(seed("actions"));
    bool ok = true;
    std::string detail;
    try {
        for (int trial = 0; ok && trial < 15; ++trial) {
            gen::FootOptions opt;
            opt.max_components = 2;
            auto a = gen::random_foot(rng, opt);
            auto b = gen::random_foot(rng, opt);
            if (homotopy_cardinality(disjoint_sum(a.pg, b.pg)) !=
                homotopy_cardinality(a.pg) + homotopy_cardinality(b.pg)) {
                ok = false;
                detail = "additivity";
            }
            if (homotopy_cardinality(star_product(a.pg, b.pg)) !=
                homotopy_cardinality(a.pg) * homotopy_cardinality(b.pg)) {
                ok = false;
                detail = "multiplicativity";
            }
            const auto& catalog = gen::group_catalog();
            const FiniteGroup& g = catalog[gen::pick(rng, static_cast<int>(catalog.size()))].group;
            GroupAction act = gen::translation_action(g, a.pg);
            if (homotopy_cardinality(weak_quotient(act)) != homotopy_cardinality(act.target) / g.order()) {
                ok = false;
                detail = "quotient rule";
            }
        }
        // ‖BG‖ = 1/|G| and empty basis when G has odd elements
        for (const auto& entry : gen::group_catalog())
            for (const auto& hom : entry.parity_homs) {
                ParityGroupoid bg = weak_quotient(gen::point_action(entry.group, hom));
                if (homotopy_cardinality(bg) != Rational(1, static_cast<long long>(entry.group.order()))) {
                    ok = false;
                    detail = "BG cardinality";
                }
                bool odd = false;
                for (Sign s : hom) odd = odd || !s.positive();
                if ((orientable_basepoints(bg).size() == 0) != odd) {
                    ok = false;
                    detail = "BG basis";
                }
            }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(7, "cardinality homomorphism (sums, products, quotients, BG)", ok, detail);
}

// ---- criterion 8: the Brahmagupta sign rule ----

void criterion8() {
    gen::Rng rng(seed("scalars"));
    bool ok = true;
    std::string detail;
    for (int trial = 0; ok && trial < 25; ++trial) {
        SignedGroupoid a = gen::random_scalar(rng, 3);
        SignedGroupoid b = gen::random_scalar(rng, 3);
        auto [ap, am] = sign_split(a);
        auto [bp, bm] = sign_split(b);
        auto [pp, pm] = sign_split(scalar_multiply(a, b));
        bool match = pp.num_objects() == ap.num_objects() * bp.num_objects() + am.num_objects() * bm.num_objects() &&
                     pm.num_objects() == ap.num_objects() * bm.num_objects() + am.num_objects() * bp.num_objects();
        if (!match) {
            ok = false;
            detail = "part sizes at trial " + std::to_string(trial);
        }
    }
    report(8, "Brahmagupta sign rule for scalar products", ok, detail);
}

// ---- criterion 9: property replacements for the universal properties ----

void criterion9() {
    gen::Rng rng(seed("exterior"));
    bool ok = true;
    std::string detail;
    try {
        // alternating arrows: every transposition acts as an odd arrow of Λ²
        for (int trial = 0; ok && trial < 8; ++trial) {
            gen::FootOptions opt;
            opt.max_components = 2;
            opt.max_group_order = 3;
            ParityGroupoid x = gen::random_foot(rng, opt).pg;
            ParityGroupoid l2 = exterior_power_groupoid(x, 2);
            for (int o1 = 0; ok && o1 < x.g.num_objects(); ++o1)
                for (int o2 = 0; ok && o2 < x.g.num_objects(); ++o2) {
                    std::string src = "(" + x.g.object_id(o1) + "," + x.g.object_id(o2) + ")";
                    std::string swap =
                        "[21;" + x.g.morphism(x.g.identity(o1)).id + "," + x.g.morphism(x.g.identity(o2)).id + "]";
                    int m = l2.g.find_morphism(swap);
                    if (m < 0 || l2.g.object_id(l2.g.src(m)) != src ||
                        l2.par(m) != Sign::minus() * x.par(x.g.identity(o1)) * x.par(x.g.identity(o2))) {
                        ok = false;
                        detail = "missing or mis-signed swap arrow";
                    }
                }
        }
        // a small functoriality spot check with a fresh stream, independent
        // of criterion 2's corpus
        for (int trial = 0; ok && trial < 20; ++trial) {
            gen::FootOptions fopt;
            fopt.max_components = 2;
            auto s = gen::random_foot(rng, fopt);
            auto j = gen::random_foot(rng, fopt);
            auto t = gen::random_foot(rng, fopt);
            PSpan a = gen::random_span(rng, s, j, {});
            PSpan b = gen::random_span(rng, j, t, {});
            if (!check_functoriality(a, b).ok) {
                ok = false;
                detail = "functoriality spot check";
            }
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(9, "property-based replacements (alternation and functoriality)", ok, detail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criteria3and4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
