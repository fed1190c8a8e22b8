#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "qrep/corpus.hpp"
#include "qrep/roots.hpp"

using namespace qrep;

namespace {

// Every nonnegative nonzero vector with height <= h, by odometer.
template <class F>
void for_each_vector(int n, int h, F&& f) {
    DimVector d(static_cast<std::size_t>(n));
    while (true) {
        int i = 0;
        while (i < n) {
            ++d[i];
            if (d.height() <= h) break;
            d[i] = 0;
            ++i;
        }
        if (i == n) return;
        f(d);
    }
}

bool support_connected(const Quiver& q, const DimVector& d) { return induces_connected(q, d.support()); }

}  // namespace

TEST_CASE("reflect and classify_vector examples") {
    Quiver a3 = preset("A3");
    CHECK(reflect(a3, {1, 0, 0}, 0) == DimVector{-1, 0, 0});
    CHECK(reflect(a3, {1, 0, 0}, 1) == DimVector{1, 1, 0});

    CHECK(classify_vector(a3, {1, 1, 1}).verdict == RootVerdict::PositiveRealRoot);
    CHECK(classify_vector(a3, {1, 0, 1}).verdict == RootVerdict::NotRoot);
    CHECK(classify_vector(a3, {0, 2, 0}).verdict == RootVerdict::NotRoot);
    CHECK(classify_vector(a3, {0, 1, 0}).trace.empty());

    Quiver d4 = preset("tD4");
    CHECK(classify_vector(d4, {2, 1, 1, 1, 1}).verdict == RootVerdict::ImaginaryRoot);
    CHECK(classify_vector(d4, {4, 2, 2, 2, 2}).verdict == RootVerdict::ImaginaryRoot);
    CHECK(classify_vector(d4, {4, 1, 1, 1, 1}).verdict == RootVerdict::NotRoot);
    auto real = classify_vector(d4, {3, 2, 2, 1, 1});
    CHECK(real.verdict == RootVerdict::PositiveRealRoot);
    CHECK_FALSE(real.trace.empty());

    // Replaying the trace lands on a unit vector.
    DimVector d{3, 2, 2, 1, 1};
    for (Vertex i : real.trace) d = reflect(d4, d, i);
    CHECK(d.height() == 1);
}

TEST_CASE("tits form is reflection invariant") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coord(-3, 5);
    for (const char* name : {"A5", "D6", "E8", "tE7", "T5,4,2", "tA5", "S5"}) {
        Quiver q = preset(name);
        for (int trial = 0; trial < 200; ++trial) {
            DimVector d(static_cast<std::size_t>(q.n()));
            for (int i = 0; i < q.n(); ++i) d[i] = coord(rng);
            for (Vertex i = 0; i < q.n(); ++i) CHECK(tits_form(q, reflect(q, d, i)) == tits_form(q, d));
        }
    }
}

TEST_CASE("Dynkin and Euclidean roots are the connected vectors with q <= 1") {
    for (const char* name : {"A4", "D5", "E6", "tD4", "tA3", "tD5", "tE6"}) {
        Quiver q = preset(name);
        const int h = 10;
        std::set<DimVector> expected;
        for_each_vector(q.n(), h, [&](const DimVector& d) {
            if (tits_form(q, d) <= 1 && support_connected(q, d)) expected.insert(d);
        });
        auto roots = positive_roots_up_to_height(q, h);
        CAPTURE(name);
        CHECK(std::set<DimVector>(roots.begin(), roots.end()) == expected);
        for (const auto& r : roots) {
            RootVerdict v = classify_vector(q, r).verdict;
            CHECK(v == (tits_form(q, r) == 1 ? RootVerdict::PositiveRealRoot : RootVerdict::ImaginaryRoot));
        }
    }
}

TEST_CASE("scan real roots equal the reflection closure") {
    for (const char* name : {"E8", "tE8", "T5,4,2", "tA4", "S5", "T4,4,3"}) {
        Quiver q = preset(name);
        const int h = 11;
        std::vector<DimVector> real;
        for (const auto& r : positive_roots_up_to_height(q, h))
            if (classify_vector(q, r).verdict == RootVerdict::PositiveRealRoot) real.push_back(r);
        auto closure = reflection_closure(q, h);
        std::sort(closure.begin(), closure.end());
        std::sort(real.begin(), real.end());
        CAPTURE(name);
        CHECK(real == closure);
    }
}

TEST_CASE("positive root totals of Dynkin diagrams") {
    for (int n = 1; n <= 8; ++n) CHECK(kostant_check(preset("A", {n})).total == n * (n + 1) / 2);
    for (int n = 4; n <= 8; ++n) CHECK(kostant_check(preset("D", {n})).total == n * (n - 1));
    CHECK(kostant_check(preset("E6")).total == 36);
    CHECK(kostant_check(preset("E7")).total == 63);
    KostantReport e8 = kostant_check(preset("E8"));
    CHECK(e8.total == 120);
    CHECK(e8.highest_height == 29);
    CHECK(e8.ok());
    CHECK(kostant_check(preset("D4")).total == 12);
    CHECK_THROWS(kostant_check(preset("tD4")));
}

TEST_CASE("Kostant bound on every Dynkin orientation up to rank 8") {
    for (int n = 1; n <= 8; ++n)
        for (const Quiver& t : unlabeled_trees(n)) {
            if (!is_representation_finite(t)) continue;
            KostantReport k = kostant_check(t);
            CAPTURE(t.to_text());
            CHECK(k.ok());
            CHECK(k.max_count_above_one <= n - 1);
            if (n >= 2) CHECK(k.histogram.at(1) == n);
            if (n > 6) continue;  // orientation sweep kept to small ranks
            for (const Quiver& o : acyclic_orientations(t))
                CHECK(height_histogram(positive_roots_up_to_height(o, k.highest_height + 1, Exec::serial)) == k.histogram);
        }
}

TEST_CASE("serial and parallel scans agree and are deterministic") {
    for (const char* name : {"T7,3,2", "tE8", "tA6", "E8"}) {
        Quiver q = preset(name);
        auto serial = positive_roots_up_to_height(q, 12, Exec::serial);
        auto parallel = positive_roots_up_to_height(q, 12, Exec::parallel);
        CHECK(serial == parallel);
        CHECK(positive_roots_up_to_height(q, 12, Exec::parallel) == parallel);
        CHECK(std::is_sorted(serial.begin(), serial.end(), [](const DimVector& a, const DimVector& b) {
            return a.height() != b.height() ? a.height() < b.height() : a < b;
        }));
    }
}

TEST_CASE("height histogram and the height bound") {
    auto roots = positive_roots_up_to_height(preset("A3"), 10);
    CHECK(height_histogram(roots) == HeightHistogram{{1, 3}, {2, 2}, {3, 1}});
    CHECK(positive_roots_up_to_height(preset("tD4"), 6).back() == DimVector{2, 1, 1, 1, 1});
    CHECK_THROWS(positive_roots_up_to_height(preset("A3"), 0));
}
