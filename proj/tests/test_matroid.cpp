#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "modmat/matroid.hpp"

using namespace modmat;

namespace {

// Brute-force count of 3-subsets of Z/nZ summing to 0 (independent oracle).
int count_zero_triples(int n) {
    int count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if ((i + j + k) % n == 0) ++count;
    return count;
}

Matrix<Rat> random_invertible(std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-5, 5);
    for (;;) {
        Matrix<Rat> m(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = coef(rng);
        if (!is_zero(m.det())) return m;
    }
}

} // namespace

TEST_CASE("tn_matroid: listed non-bases and brute-force counts") {
    // n = 8 list as printed in the source material
    Matroid3 t8 = tn_matroid(8);
    std::vector<Triple> expected = {{0, 1, 7}, {0, 2, 6}, {0, 3, 5}, {1, 2, 5},
                                    {1, 3, 4}, {3, 6, 7}, {4, 5, 7}};
    std::sort(expected.begin(), expected.end());
    CHECK(t8.nonbases() == expected);

    Matroid3 t5 = tn_matroid(5);
    std::vector<Triple> e5 = {{0, 1, 4}, {0, 2, 3}};
    CHECK(t5.nonbases() == e5);

    Matroid3 t7 = tn_matroid(7);
    CHECK(t7.is_nonbasis(0, 1, 6));
    CHECK_FALSE(t7.is_nonbasis(0, 1, 2));

    for (int n = 3; n <= 30; ++n)
        CHECK((int)tn_matroid(n).nonbases().size() == count_zero_triples(n));
}

TEST_CASE("det3 basics") {
    Configuration<Rat> c;
    c.points = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 7, 0}};
    CHECK(det3(c, 0, 1, 2) == 1);
    CHECK(det3(c, 0, 1, 4) == 0); // third point in the span of the first two
    CHECK(det3(c, 0, 1, 3) == 1); // canonical frame rows 0,1,3
    CHECK_THROWS_AS(det3(c, 0, 1, 9), Error);
    CHECK_THROWS_AS(det3(c, 0, 0, 1), Error);
}

TEST_CASE("small families realize T_n; excluded parameters degenerate") {
    // constant families
    CHECK(check_realization(small_family<Rat>(5, Rat(0)), tn_matroid(5)).is_realization);
    CHECK(check_realization(small_family<Rat>(6, Rat(0)), tn_matroid(6)).is_realization);

    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> num(-30, 30), den(1, 9);
    auto random_admissible = [&](std::set<Rat>& avoid) {
        for (;;) {
            Rat q(num(rng), den(rng));
            q.canonicalize();
            if (!avoid.count(q)) return q;
        }
    };
    std::set<Rat> ex7 = {Rat(0), Rat(1)};
    std::set<Rat> ex8 = {Rat(0), Rat(1), Rat(-1)};
    std::set<Rat> ex9 = {Rat(0), Rat(1)};
    struct Case {
        int n;
        std::set<Rat>* ex;
    } cases[] = {{7, &ex7}, {8, &ex8}, {9, &ex9}};
    for (const auto& cs : cases) {
        Matroid3 m = tn_matroid(cs.n);
        for (int i = 0; i < 20; ++i) {
            Rat t = random_admissible(*cs.ex);
            auto rep = check_realization(small_family<Rat>(cs.n, t), m);
            CHECK(rep.is_realization);
        }
        for (const Rat& t : *cs.ex) CHECK_THROWS_AS(small_family<Rat>(cs.n, t), Error);
    }

    // t = 1 for n = 7 degenerates a basis if forced through the raw points
    {
        Configuration<Rat> c;
        Rat t = 1;
        c.points = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1},
                    {0, 1, 1}, {1, 0, t}, {t - 1, t, 0}};
        auto rep = check_realization(c, tn_matroid(7));
        CHECK_FALSE(rep.is_realization);
        CHECK_FALSE(rep.degenerate_bases.empty());
    }
}

TEST_CASE("size mismatch and missing frame raise the named errors") {
    Configuration<Rat> c;
    c.points = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK_THROWS_AS(check_realization(c, tn_matroid(5)), Error); // SizeMismatch
    // five collinear points admit no frame
    Configuration<Rat> line;
    line.points = {{1, 0, 0}, {1, 1, 0}, {1, 2, 0}, {1, 3, 0}, {1, 4, 0}};
    CHECK_THROWS_AS(projective_equivalence(line, line), Error); // NoFrame
}

TEST_CASE("repeated point degenerates any basis through the pair") {
    Configuration<Rat> c;
    c.points = {{1, 0, 0}, {1, 0, 0}, {0, 0, 1}, {1, 1, 1}, {0, 1, 1}};
    auto rep = check_realization(c, tn_matroid(5));
    CHECK_FALSE(rep.is_realization);
    CHECK_FALSE(rep.degenerate_bases.empty());
}

TEST_CASE("special matroids T5' and T6'") {
    Matroid3 t5p = special_matroid(SpecialMatroid::T5prime);
    CHECK(t5p.ground_size() == 7);
    CHECK(t5p.nonbases().size() == 5);

    Matroid3 t6p = special_matroid(SpecialMatroid::T6prime);
    CHECK(t6p.ground_size() == 15);
    // block {1,2,3,4,5} contributes C(5,3) = 10 triples
    int count = 0;
    for (const Triple& t : t6p.nonbases())
        if (t[2] <= 4) ++count;
    CHECK(count == 10);
}

TEST_CASE("special families realize T5' and T6'") {
    // seventh point of T5' at theta = 2 is (0:1:3)
    auto f5 = special_family<Rat>(SpecialMatroid::T5prime, Rat(2));
    CHECK(proj_equal(f5.points[6], Point3<Rat>{0, 1, 3}));
    CHECK(check_realization(f5, special_matroid(SpecialMatroid::T5prime)).is_realization);

    auto f6 = special_family<Rat>(SpecialMatroid::T6prime, Rat(3));
    CHECK(f6.size() == 15);
    CHECK(check_realization(f6, special_matroid(SpecialMatroid::T6prime)).is_realization);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(2, 40);
    for (int i = 0; i < 5; ++i) {
        Rat t(num(rng), num(rng));
        t.canonicalize();
        if (t == 1) continue;
        CHECK(check_realization(special_family<Rat>(SpecialMatroid::T5prime, t),
                                special_matroid(SpecialMatroid::T5prime))
                  .is_realization);
        CHECK(check_realization(special_family<Rat>(SpecialMatroid::T6prime, t),
                                special_matroid(SpecialMatroid::T6prime))
                  .is_realization);
    }
    CHECK_THROWS_AS(special_family<Rat>(SpecialMatroid::T6prime, Rat(-1, 2)), Error);
}

TEST_CASE("check_realization is projectively invariant") {
    std::mt19937 rng(1729);
    auto c = small_family<Rat>(7, Rat(2));
    auto base = check_realization(c, tn_matroid(7));
    for (int iter = 0; iter < 10; ++iter) {
        Matrix<Rat> g = random_invertible(rng);
        auto moved = apply_transform(g, c);
        auto rep = check_realization(moved, tn_matroid(7));
        CHECK(rep.is_realization == base.is_realization);
        CHECK(rep.degenerate_bases == base.degenerate_bases);
        CHECK(rep.failed_nonbases == base.failed_nonbases);
    }
}

TEST_CASE("normalize_frame: identity case, idempotency, round trip") {
    auto c = small_family<Rat>(7, Rat(2));
    std::array<int, 4> frame{0, 1, 2, 3};
    auto once = normalize_frame(c, frame);
    for (int i = 0; i < c.size(); ++i) CHECK(proj_equal(once.points[i], c.points[i]));
    auto twice = normalize_frame(once, frame);
    CHECK(twice.points == once.points);

    std::mt19937 rng(31337);
    Matrix<Rat> g = random_invertible(rng);
    auto moved = apply_transform(g, c);
    auto back = normalize_frame(moved, frame);
    for (int i = 0; i < c.size(); ++i) CHECK(proj_equal(back.points[i], c.points[i]));

    // degenerate frame: three collinear points among the chosen four
    Configuration<Rat> bad;
    bad.points = {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 1, 1}, {0, 1, 1}};
    CHECK_THROWS_AS(normalize_frame(bad, {0, 1, 2, 3}), Error);
}

TEST_CASE("projective_equivalence recovers transformations") {
    auto a = small_family<Rat>(7, Rat(2));
    auto id = projective_equivalence(a, a);
    REQUIRE(id.has_value());
    for (int i = 0; i < a.size(); ++i)
        CHECK(proj_equal(apply_matrix(*id, a.points[i]), a.points[i]));

    // scaled copy: still the identity transformation
    Configuration<Rat> scaled = a;
    for (int i = 0; i < scaled.size(); ++i)
        for (auto& x : scaled.points[i]) x *= Rat(i + 2);
    auto id2 = projective_equivalence(a, scaled);
    REQUIRE(id2.has_value());

    std::mt19937 rng(11);
    Matrix<Rat> g = random_invertible(rng);
    auto b = apply_transform(g, a);
    auto rec = projective_equivalence(a, b);
    REQUIRE(rec.has_value());
    for (int i = 0; i < a.size(); ++i)
        CHECK(proj_equal(apply_matrix(*rec, a.points[i]), b.points[i]));

    // genuinely inequivalent configurations
    auto c7a = small_family<Rat>(7, Rat(2));
    auto c7b = small_family<Rat>(7, Rat(3));
    CHECK_FALSE(projective_equivalence(c7a, c7b).has_value());
}
