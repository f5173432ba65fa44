#include <catch2/catch_amalgamated.hpp>

#include "balgen/constructors.hpp"
#include "balgen/genus.hpp"
#include "fixtures.hpp"

using balgen::ColoredComplex;
using balgen::Dyadic;
using balgen::GenusRecord;
using balgen::Necklace;

namespace {

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

TEST_CASE("necklace enumeration", "[genus]") {
    const auto n3 = balgen::necklaces(3);
    REQUIRE(n3.size() == 3);
    CHECK(n3[0].order == std::vector<int>{0, 1, 2, 3});
    CHECK(n3[1].order == std::vector<int>{0, 1, 3, 2});
    CHECK(n3[2].order == std::vector<int>{0, 2, 1, 3});

    CHECK(balgen::necklaces(4).size() == 12);
    CHECK(balgen::necklaces(5).size() == 60);

    SECTION("reversal folds into the same class") {
        CHECK(Necklace::canonical({0, 2, 1, 3}) == Necklace::canonical({0, 3, 1, 2}));
        CHECK(Necklace::canonical({1, 2, 0, 3}) == Necklace::canonical({0, 3, 1, 2}));
    }

    CHECK(error_code_of([] { balgen::necklaces(2); }) == "DimensionTooLow");
}

TEST_CASE("dyadic values", "[genus]") {
    CHECK(Dyadic{2}.str() == "1");
    CHECK(Dyadic{-4}.str() == "-2");
    CHECK(Dyadic{3}.str() == "3/2");
    CHECK(Dyadic{3}.is_integer() == false);
    CHECK(Dyadic{2} < Dyadic{3});
}

TEST_CASE("rho evaluation", "[genus]") {
    const ColoredComplex o3 = balgen::octahedral_sphere(3);
    const ColoredComplex o4 = balgen::octahedral_sphere(4);
    const ColoredComplex s33 = balgen::connected_sum(o3, 0, o3, 0);

    for (const Necklace& eps : balgen::necklaces(3)) {
        CHECK(balgen::rho(o3, eps) == Dyadic{2});   // rho = 1
        CHECK(balgen::rho(s33, eps) == Dyadic{4});  // rho = 2
    }
    for (const Necklace& eps : balgen::necklaces(4))
        CHECK(balgen::rho(o4, eps) == Dyadic{10});  // rho = 5

    SECTION("closed forms agree") {
        for (const Necklace& eps : balgen::necklaces(3)) {
            CHECK(balgen::rho_closed_form(o3, eps) == Dyadic{2});
            CHECK(balgen::rho_closed_form(s33, eps) == Dyadic{4});
        }
        for (const Necklace& eps : balgen::necklaces(4))
            CHECK(balgen::rho_closed_form(o4, eps) == Dyadic{10});
    }

    SECTION("closed form guards") {
        CHECK(error_code_of([&] {
                  balgen::rho_closed_form(balgen::octahedral_sphere(5),
                                          balgen::necklaces(5).front());
              }) == "UnsupportedDimension");
        CHECK(error_code_of([&] {
                  balgen::rho_closed_form(fixtures::two_tetrahedra(),
                                          balgen::necklaces(3).front());
              }) == "DehnSommervilleViolated");
    }

    SECTION("invariant under rotation and reversal of the raw order") {
        for (const ColoredComplex* c : {&o3, &s33}) {
            std::vector<int> base{0, 1, 2, 3};
            std::vector<int> order(base);
            do {
                std::vector<int> reversed(order.rbegin(), order.rend());
                std::vector<int> rotated(order.begin() + 1, order.end());
                rotated.push_back(order.front());
                CHECK(balgen::rho_raw(*c, order) == balgen::rho_raw(*c, reversed));
                CHECK(balgen::rho_raw(*c, order) == balgen::rho_raw(*c, rotated));
            } while (std::next_permutation(order.begin(), order.end()));
        }
    }
}

TEST_CASE("balanced genus records", "[genus]") {
    const ColoredComplex o3 = balgen::octahedral_sphere(3);
    const ColoredComplex o4 = balgen::octahedral_sphere(4);

    SECTION("spheres") {
        const GenusRecord r3 = balgen::balanced_genus(o3);
        CHECK(r3.genus == Dyadic{2});
        CHECK(r3.argmin.size() == 3);
        CHECK(r3.orientable);
        CHECK(r3.closed_form_used);

        const GenusRecord r4 = balgen::balanced_genus(o4);
        CHECK(r4.genus == Dyadic{10});
        CHECK(r4.argmin.size() == 12);
    }

    SECTION("octahedral genus formula for low dimensions") {
        for (int d = 3; d <= 4; ++d) {
            const GenusRecord r = balgen::balanced_genus(balgen::octahedral_sphere(d));
            const std::int64_t expected = 1 + (d - 3) * (std::int64_t{1} << (d - 2));
            CHECK(r.genus == Dyadic{2 * expected});
        }
    }

    SECTION("connected sum doubles the sphere value") {
        const GenusRecord r = balgen::balanced_genus(balgen::connected_sum(o3, 0, o3, 0));
        CHECK(r.genus == Dyadic{4});
        CHECK(r.argmin.size() == 3);
    }

    SECTION("additivity for every necklace on sample pairs") {
        std::mt19937 rng(5);
        for (int d : {3, 4}) {
            const ColoredComplex a = fixtures::random_iterated_sum(rng, d, 2);
            const ColoredComplex b = balgen::octahedral_sphere(d);
            const ColoredComplex sum = balgen::connected_sum(
                a, fixtures::pick(rng, a.facets().size()), b,
                fixtures::pick(rng, b.facets().size()));
            for (const Necklace& eps : balgen::necklaces(d))
                CHECK(balgen::rho(sum, eps).twice ==
                      balgen::rho(a, eps).twice + balgen::rho(b, eps).twice);
        }
    }

    CHECK(error_code_of([] { balgen::balanced_genus(fixtures::hexagon()); }) ==
          "DimensionTooLow");
}

TEST_CASE("non-manifold pseudomanifolds", "[genus]") {
    // suspension of a torus: valid input for the genus machinery, but the
    // manifold-only shortcuts must stay out of the way
    const ColoredComplex c = fixtures::suspended_torus();
    REQUIRE(c.validation().balanced_normal_pseudomanifold());
    CHECK_FALSE(balgen::dehn_sommerville_check(c));

    const GenusRecord rec = balgen::balanced_genus(c);
    CHECK(rec.genus == Dyadic{8});  // genus 4, all three necklaces
    CHECK(rec.argmin.size() == 3);
    CHECK(rec.orientable);
    CHECK_FALSE(rec.closed_form_used);

    SECTION("no sphere certificate despite a Gamma = 1 pair") {
        CHECK(balgen::gamma(c, balgen::color_mask({0, 3})).value == 1);
        const auto rep = balgen::verify_bounds(c);
        CHECK(rep.sphere_certificates.empty());
        CHECK(rep.all_pass());  // the pseudomanifold bounds still hold
    }

    SECTION("suspension is simply connected") {
        const auto rb = balgen::rank_bounds(c);
        CHECK(rb.lower == 0);
        CHECK(rb.upper == 0);
        CHECK(rb.simply_connected_witness);
    }
}

TEST_CASE("vertex links inherit the whole pipeline", "[genus][property]") {
    // the link of a vertex in a validated pseudomanifold is a validated
    // pseudomanifold one dimension down; the genus machinery must accept it
    std::mt19937 rng(31);
    const ColoredComplex big = fixtures::random_iterated_sum(rng, 4, 2);
    for (balgen::VertexId v = 0; v < big.vertex_count(); v += 3) {
        const ColoredComplex lk = balgen::link(big, balgen::Simplex({v}));
        REQUIRE(lk.dimension() == 3);
        REQUIRE(lk.validation().balanced_normal_pseudomanifold());
        const GenusRecord rec = balgen::balanced_genus(lk);
        // every vertex link here is a 3-sphere
        CHECK(rec.closed_form_used);
        CHECK(balgen::verify_bounds(lk).sphere_certificates.size() > 0);
        CHECK(rec.genus.twice <= 6);
    }
}

TEST_CASE("bound verification", "[genus]") {
    const ColoredComplex o3 = balgen::octahedral_sphere(3);

    SECTION("sphere certificates") {
        const auto rep = balgen::verify_bounds(o3);
        CHECK(rep.all_pass());
        REQUIRE_FALSE(rep.sphere_certificates.empty());
        bool has_genus_cert = false;
        for (const auto& cert : rep.sphere_certificates)
            if (cert.find("genus <= 3") != std::string::npos) has_genus_cert = true;
        CHECK(has_genus_cert);
    }

    SECTION("4-sphere sum threshold") {
        const ColoredComplex o4 = balgen::octahedral_sphere(4);
        const auto rep = balgen::verify_bounds(balgen::connected_sum(o4, 0, o4, 0));
        CHECK(rep.all_pass());
        bool has_chi_cert = false;
        for (const auto& cert : rep.sphere_certificates)
            if (cert.find("2*chi+10") != std::string::npos) has_chi_cert = true;
        CHECK(has_chi_cert);
    }

    SECTION("rank-zero assertion on the sphere") {
        const auto rep = balgen::verify_bounds(o3, 0);
        CHECK(rep.all_pass());
        // facet-count bound instantiates to 1 >= 1 in dimension 3
        bool saw = false;
        for (const auto& b : rep.checks)
            if (b.name == "facet count bound") {
                saw = true;
                CHECK(b.pass);
            }
        CHECK(saw);
    }

    SECTION("wrong rank assertion fails loudly") {
        const auto rep = balgen::verify_bounds(o3, 5);
        CHECK_FALSE(rep.all_pass());
    }

    SECTION("triple sum instantiates the pair rank bound") {
        const ColoredComplex s33 = balgen::connected_sum(o3, 0, o3, 0);
        const ColoredComplex s333 = balgen::connected_sum(s33, 1, o3, 4);
        const auto rep = balgen::verify_bounds(s333, 0);
        CHECK(rep.all_pass());
        int pair_checks = 0;
        for (const auto& b : rep.checks)
            if (b.name == "pair rank bound") ++pair_checks;
        CHECK(pair_checks == 6);  // every Gamma_S = 2 >= 2 qualifies
        bool forced = false;
        for (const auto& b : rep.checks)
            if (b.name == "Gamma = 2 forces m = 0") forced = b.pass;
        CHECK(forced);
    }
}
