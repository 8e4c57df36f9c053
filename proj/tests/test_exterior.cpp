#include <doctest.h>

#include <algorithm>

#include "glin/action.hpp"
#include "glin/exterior.hpp"
#include "glin/generator.hpp"
#include "glin/matrix.hpp"
#include "helpers.hpp"

using namespace glin;
using test::bc2;

namespace {

std::vector<std::tuple<uint64_t, bool, size_t>> component_fingerprint(const ParityGroupoid& pg) {
    std::vector<std::tuple<uint64_t, bool, size_t>> fp;
    for (const auto& c : pi0(pg)) fp.emplace_back(c.aut_order, c.orientable, c.members.size());
    std::sort(fp.begin(), fp.end());
    return fp;
}

/// Σ₂ swapping the factors of X ∗ X, with θ ≡ swap_theta on the generator.
GroupAction swap_action(const ParityGroupoid& x, Sign swap_theta) {
    GroupAction act;
    act.group = gen::cyclic_group(2);
    act.target = star_product(x, x);
    int n = x.g.num_objects(), nm = x.g.num_morphisms();
    act.on_objects.assign(2, std::vector<int>(n * n));
    act.on_morphisms.assign(2, std::vector<int>(nm * nm));
    act.theta.assign(2, std::vector<Sign>(n * n, Sign::plus()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            act.on_objects[0][i * n + j] = i * n + j;
            act.on_objects[1][i * n + j] = j * n + i;
            act.theta[1][i * n + j] = swap_theta;
        }
    for (int m = 0; m < nm; ++m)
        for (int m2 = 0; m2 < nm; ++m2) {
            act.on_morphisms[0][m * nm + m2] = m * nm + m2;
            act.on_morphisms[1][m * nm + m2] = m2 * nm + m;
        }
    return act;
}

}  // namespace

TEST_CASE("permutation signs and words") {
    auto perms = all_permutations(3);
    REQUIRE(perms.size() == 6);
    CHECK(perms[0].word() == "123");
    CHECK(perms[0].is_identity());
    CHECK(permutation_sign(perms[0]) == Sign::plus());
    for (const auto& p : perms) {
        CHECK(permutation_sign(p.inverse()) == permutation_sign(p));
        if (p.word() == "213") CHECK(permutation_sign(p) == Sign::minus());
        if (p.word() == "231") CHECK(permutation_sign(p) == Sign::plus());
    }
}

TEST_CASE("the second exterior power of a discrete 2-set") {
    auto l2 = exterior_power_groupoid(discrete_groupoid({"x", "y"}), 2);
    REQUIRE(validate_groupoid(l2).ok());
    CHECK(l2.g.num_objects() == 4);
    auto comps = pi0(l2);
    REQUIRE(comps.size() == 3);
    int orientable = 0;
    for (const auto& c : comps) orientable += c.orientable;
    CHECK(orientable == 1);
    // the orientable component is {(x,y),(y,x)} with representative (x,y)
    for (const auto& c : comps)
        if (c.orientable) {
            CHECK(l2.g.object_id(c.representative) == "(x,y)");
            CHECK(c.members.size() == 2);
            CHECK(c.aut_order == 1);
        }
}

TEST_CASE("a repeated tuple carries an odd automorphism") {
    auto l2 = exterior_power_groupoid(discrete_groupoid({"x", "y"}), 2);
    int xx = l2.g.find_object("(x,x)");
    REQUIRE(xx >= 0);
    bool found_odd = false;
    for (int m : l2.g.hom(xx, xx)) found_odd = found_odd || !l2.par(m).positive();
    CHECK(found_odd);
}

TEST_CASE("the swap arrow exists with the sign of the transposition") {
    auto l2 = exterior_power_groupoid(discrete_groupoid({"x", "y"}), 2);
    int m = l2.g.find_morphism("[21;id_x,id_y]");
    REQUIRE(m >= 0);
    CHECK(l2.g.object_id(l2.g.src(m)) == "(x,y)");
    CHECK(l2.g.object_id(l2.g.tgt(m)) == "(y,x)");
    CHECK(l2.par(m) == Sign::minus());
}

TEST_CASE("the second symmetric power of a discrete 2-set is fully orientable") {
    auto s2 = symmetric_power_groupoid(discrete_groupoid({"x", "y"}), 2);
    REQUIRE(validate_groupoid(s2).ok());
    auto comps = pi0(s2);
    REQUIRE(comps.size() == 3);
    for (const auto& c : comps) CHECK(c.orientable);
}

TEST_CASE("first powers are the groupoid itself") {
    auto x = disjoint_sum(discrete_groupoid({"x"}), bc2(Sign::minus()));
    auto l1 = exterior_power_groupoid(x, 1);
    auto s1 = symmetric_power_groupoid(x, 1);
    REQUIRE(l1.g.num_objects() == x.g.num_objects());
    REQUIRE(l1.g.num_morphisms() == x.g.num_morphisms());
    for (int m = 0; m < x.g.num_morphisms(); ++m) {
        CHECK(l1.par(m) == x.par(m));
        CHECK(s1.par(m) == x.par(m));
        CHECK(l1.g.src(m) == x.g.src(m));
        CHECK(l1.g.tgt(m) == x.g.tgt(m));
    }
}

TEST_CASE("zeroth powers are the point") {
    auto l0 = exterior_power_groupoid(bc2(Sign::minus()), 0);
    CHECK(l0.g.num_objects() == 1);
    CHECK(l0.g.num_morphisms() == 1);
    CHECK(homotopy_cardinality(l0) == 1);
}

TEST_CASE("orientable components of powers of a discrete n-set") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::string> ids;
        for (int i = 0; i < n; ++i) ids.push_back("x" + std::to_string(i));
        auto x = discrete_groupoid(ids);
        for (int k = 1; k <= n; ++k) {
            auto lk = exterior_power_groupoid(x, k);
            int orientable = 0;
            uint64_t kfact = 1;
            for (int i = 2; i <= k; ++i) kfact *= i;
            for (const auto& c : pi0(lk)) {
                if (!c.orientable) continue;
                ++orientable;
                CHECK(c.aut_order == 1);
                CHECK(c.members.size() == kfact);
            }
            int binom = 1;
            for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
            CHECK(orientable == binom);
        }
    }
}

TEST_CASE("power groupoids of random feet validate") {
    gen::Rng rng(glin::test::seed_from_fixture("exterior"));
    for (int trial = 0; trial < 6; ++trial) {
        gen::FootOptions opt;
        opt.max_components = 2;
        opt.max_group_order = 3;
        auto foot = gen::random_foot(rng, opt);
        for (int k = 1; k <= 2; ++k) {
            CHECK(validate_groupoid(exterior_power_groupoid(foot.pg, k)).ok());
            CHECK(validate_groupoid(symmetric_power_groupoid(foot.pg, k)).ok());
        }
    }
}

TEST_CASE("the second exterior power agrees with the weak quotient by the swap") {
    gen::Rng rng(71);
    for (int trial = 0; trial < 5; ++trial) {
        gen::FootOptions opt;
        opt.max_components = 2;
        opt.max_group_order = 3;
        auto x = gen::random_foot(rng, opt).pg;
        GroupAction act = swap_action(x, Sign::minus());
        REQUIRE(validate_action(act).ok());
        ParityGroupoid q = weak_quotient(act);
        REQUIRE(validate_groupoid(q).ok());
        auto l2 = exterior_power_groupoid(x, 2);
        CHECK(component_fingerprint(q) == component_fingerprint(l2));
        CHECK(homotopy_cardinality(q) == homotopy_cardinality(l2));

        GroupAction sact = swap_action(x, Sign::plus());
        REQUIRE(validate_action(sact).ok());
        auto s2 = symmetric_power_groupoid(x, 2);
        CHECK(component_fingerprint(weak_quotient(sact)) == component_fingerprint(s2));
    }
}

TEST_CASE("the budget stops an oversized enumeration") {
    auto x = discrete_groupoid({"a", "b", "c"});
    CHECK_THROWS_AS(exterior_power_groupoid(x, 3, 10), BudgetExceeded);
    CHECK_NOTHROW(exterior_power_groupoid(x, 2));
}

TEST_CASE("the second power of the split-idempotent span has a 25-object apex") {
    PSpan sp = glin::test::load_fixture("split_idempotent.json").spans.at("sp").span;
    PSpan l2 = exterior_power_span(sp, 2);
    CHECK(l2.apex.num_objects() == 25);
    CHECK(validate_span(l2).ok());
}

TEST_CASE("exterior powers of spans stay valid") {
    gen::Rng rng(72);
    gen::FootOptions fopt;
    fopt.max_components = 2;
    fopt.max_group_order = 2;
    gen::SpanOptions sopt;
    sopt.max_pieces = 2;
    sopt.max_piece_group_order = 2;
    for (int trial = 0; trial < 4; ++trial) {
        auto s = gen::random_foot(rng, fopt);
        auto t = gen::random_foot(rng, fopt);
        PSpan sp = gen::random_span(rng, s, t, sopt);
        for (int k = 0; k <= 2; ++k) CHECK(validate_span(exterior_power_span(sp, k)).ok());
    }
}

TEST_CASE("the exterior power respects composition at matrix level") {
    gen::Rng rng(73);
    gen::FootOptions fopt;
    fopt.max_components = 2;
    fopt.max_group_order = 1;
    fopt.allow_fatten = false;
    gen::SpanOptions sopt;
    sopt.max_pieces = 2;
    sopt.max_piece_group_order = 1;
    for (int trial = 0; trial < 3; ++trial) {
        auto s = gen::random_foot(rng, fopt);
        auto j = gen::random_foot(rng, fopt);
        auto t = gen::random_foot(rng, fopt);
        PSpan a = gen::random_span(rng, s, j, sopt);
        PSpan b = gen::random_span(rng, j, t, sopt);
        PSpan lhs = exterior_power_span(compose(a, b), 2);
        PSpan rhs = compose(exterior_power_span(a, 2), exterior_power_span(b, 2));
        CHECK(matrix_of_span(lhs) == matrix_of_span(rhs));
    }
}
