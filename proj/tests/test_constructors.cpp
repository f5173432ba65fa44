#include <catch2/catch_amalgamated.hpp>

#include "balgen/constructors.hpp"
#include "balgen/dual_graph.hpp"
#include "balgen/flags.hpp"
#include "fixtures.hpp"

using balgen::ColoredComplex;
using balgen::Simplex;
using balgen::VertexId;

namespace {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

template <class F>
std::string error_code_of(F&& f) {
    try {
        f();
    } catch (const balgen::Error& e) {
        return e.code();
    }
    return "";
}

}  // namespace

TEST_CASE("octahedral spheres", "[constructors]") {
    SECTION("dimension 3 counts") {
        const ColoredComplex c = balgen::octahedral_sphere(3);
        CHECK(balgen::f_vector(c) == std::vector<std::int64_t>{1, 8, 24, 32, 16});
        CHECK(c.facet_count() == 16);
        CHECK(c.validation().balanced_normal_pseudomanifold());
    }

    SECTION("dimension 4 counts") {
        const ColoredComplex c = balgen::octahedral_sphere(4);
        CHECK(c.facet_count() == 32);
        for (int i = 0; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) {
                // (d-2)-faces avoiding colors i and j, by brute force
                std::set<int> rest;
                for (int k = 0; k <= 4; ++k)
                    if (k != i && k != j) rest.insert(k);
                CHECK(fixtures::oracle_flag_f(c, rest) == 8);
            }
    }

    SECTION("dimension 1 is the alternating 4-cycle") {
        const ColoredComplex c = balgen::octahedral_sphere(1);
        CHECK(c.dimension() == 1);
        CHECK(c.vertex_count() == 4);
        CHECK(c.facet_count() == 4);
        for (const Simplex& e : c.facets())
            CHECK(c.color(e[0]) != c.color(e[1]));
        CHECK(c.validation().balanced_normal_pseudomanifold());
    }

    SECTION("vertex pairs share colors") {
        const ColoredComplex c = balgen::octahedral_sphere(2);
        for (int i = 0; i <= 2; ++i) {
            int count = 0;
            for (VertexId v = 0; v < c.vertex_count(); ++v)
                if (c.color(v) == i) ++count;
            CHECK(count == 2);
        }
    }
}

TEST_CASE("joins", "[constructors]") {
    SECTION("two segment boundaries give the 4-cycle") {
        const ColoredComplex points = balgen::build_complex(
            {{"a0"}, {"b0"}}, {{"a0", 0}, {"b0", 0}}, 0);
        const ColoredComplex c = balgen::join(points, points);
        CHECK(c.dimension() == 1);
        CHECK(c.facet_count() == 4);
        CHECK(c.vertex_count() == 4);
        CHECK(balgen::f_vector(c) == balgen::f_vector(balgen::octahedral_sphere(1)));
    }

    SECTION("join of two 4-cycles is the octahedral 3-sphere") {
        const ColoredComplex o1 = balgen::octahedral_sphere(1);
        const ColoredComplex c = balgen::join(o1, o1);
        CHECK(c.dimension() == 3);
        CHECK(c.facet_count() == 16);  // 4 * 4
        CHECK(c.validation().balanced_normal_pseudomanifold());
        // every color class has two vertices and the facet set is every
        // transversal, which pins the complex up to relabeling
        for (int col = 0; col <= 3; ++col) {
            int n = 0;
            for (VertexId v = 0; v < c.vertex_count(); ++v)
                if (c.color(v) == col) ++n;
            CHECK(n == 2);
        }
        CHECK(balgen::f_vector(c) == balgen::f_vector(balgen::octahedral_sphere(3)));
    }

    SECTION("top face counts multiply") {
        const ColoredComplex a = balgen::octahedral_sphere(1);
        const ColoredComplex b = fixtures::torus9();
        const ColoredComplex c = balgen::join(a, b);
        CHECK(c.dimension() == 1 + 2 + 1);
        CHECK(c.facet_count() == a.facet_count() * b.facet_count());
    }

    SECTION("mixed-dimension joins of octahedral spheres stay octahedral") {
        const ColoredComplex c =
            balgen::join(balgen::octahedral_sphere(1), balgen::octahedral_sphere(2));
        CHECK(c.dimension() == 4);
        CHECK(balgen::f_vector(c) == balgen::f_vector(balgen::octahedral_sphere(4)));
        CHECK(c.validation().balanced_normal_pseudomanifold());
    }
}

TEST_CASE("connected sums", "[constructors]") {
    const ColoredComplex o3 = balgen::octahedral_sphere(3);
    const ColoredComplex s33 = balgen::connected_sum(o3, 0, o3, 0);

    SECTION("top and flag counts") {
        CHECK(s33.facet_count() == 30);
        for (int i = 0; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j) {
                std::set<int> rest;
                for (int k = 0; k <= 3; ++k)
                    if (k != i && k != j) rest.insert(k);
                CHECK(fixtures::oracle_flag_f(s33, rest) == 7);
            }
        CHECK(s33.validation().balanced_normal_pseudomanifold());
    }

    SECTION("dimension 4 instance") {
        const ColoredComplex o4 = balgen::octahedral_sphere(4);
        const ColoredComplex s44 = balgen::connected_sum(o4, 3, o4, 11);
        CHECK(s44.facet_count() == 62);
        std::set<int> rest{2, 3, 4};
        CHECK(fixtures::oracle_flag_f(s44, rest) == 15);
    }

    SECTION("face count identity across all dimensions") {
        // proper faces of the glued facet are identified in pairs, so
        // f_i(A # B) = f_i(A) + f_i(B) - C(d+1, i+1) for i < d; both copies
        // of the facet itself are removed
        const auto fa = balgen::f_vector(o3);
        const auto fs = balgen::f_vector(s33);
        for (int i = 0; i < 3; ++i)
            CHECK(fs[static_cast<std::size_t>(i) + 1] ==
                  2 * fa[static_cast<std::size_t>(i) + 1] - binomial(4, i + 1));
        CHECK(fs[4] == 2 * fa[4] - 2);
    }

    SECTION("random facet choices stay valid") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 5; ++trial) {
            const ColoredComplex c = fixtures::random_iterated_sum(rng, 3, 3);
            CHECK(c.facet_count() == 3 * 16 - 4);
            CHECK(c.validation().balanced_normal_pseudomanifold());
        }
    }

    SECTION("one-dimensional sums concatenate cycles") {
        const ColoredComplex o1 = balgen::octahedral_sphere(1);
        const ColoredComplex c = balgen::connected_sum(o1, 0, o1, 0);
        CHECK(balgen::f_vector(c) == std::vector<std::int64_t>{1, 6, 6});
        CHECK(c.validation().balanced_normal_pseudomanifold());
    }

    SECTION("errors") {
        CHECK(error_code_of([&] {
                  balgen::connected_sum(o3, 0, balgen::octahedral_sphere(4), 0);
              }) == "DimensionMismatch");
        CHECK(error_code_of([&] { balgen::connected_sum(o3, 99, o3, 0); }) ==
              "InvalidHandle");
        CHECK(error_code_of([&] {
                  balgen::connected_sum(fixtures::two_tetrahedra(), 0, o3, 0);
              }) == "PreconditionFailed");
    }
}

TEST_CASE("octahedral duals are bipartite up to dimension 7", "[constructors][property]") {
    for (int d = 1; d <= 7; ++d)
        CHECK(balgen::is_bipartite(balgen::dual_graph(balgen::octahedral_sphere(d))));
}
