#include "symhodge/growth.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace symhodge;

namespace {

std::vector<double> uniform_radii(double rmax, int count)
{
    std::vector<double> rs;
    for (int i = 1; i <= count; ++i)
        rs.push_back(rmax * i / count);
    return rs;
}

GrowthProfile synthetic(const std::vector<double>& radii, double (*f)(double))
{
    GrowthProfile p;
    p.radii = radii;
    for (double r : radii)
        p.sup_norm.push_back(f(r));
    return p;
}

} // namespace

TEST_CASE("euclidean plane profile is s(R) = R")
{
    const ModelCover cover = make_euclidean_plane();
    const GrowthProfile p = primitive_norm_profile(cover, uniform_radii(20.0, 16), 1024);
    for (std::size_t i = 0; i < p.radii.size(); ++i)
        CHECK(p.sup_norm[i] == Catch::Approx(p.radii[i]).epsilon(1e-6));
}

TEST_CASE("hyperbolic plane profile is tanh(R/2), below 1")
{
    const ModelCover cover = make_hyperbolic_plane();
    const GrowthProfile p = primitive_norm_profile(cover, uniform_radii(30.0, 16), 256);
    for (std::size_t i = 0; i < p.radii.size(); ++i) {
        CHECK(p.sup_norm[i] == Catch::Approx(std::tanh(p.radii[i] / 2.0)).epsilon(1e-9));
        CHECK(p.sup_norm[i] <= 1.0 + 1e-12);
        if (i > 0)
            CHECK(p.sup_norm[i] >= p.sup_norm[i - 1]);
    }
}

TEST_CASE("profile close to the base point tends to zero")
{
    for (const char* name : {"euclidean_plane", "hyperbolic_plane"}) {
        const ModelCover cover = make_cover(name);
        const GrowthProfile p =
            primitive_norm_profile(cover, {1e-4, 2e-4, 3e-4, 4e-4}, 64);
        CHECK(p.sup_norm.front() < 1e-3);
    }
}

TEST_CASE("profile input validation")
{
    const ModelCover cover = make_euclidean_plane();
    CHECK_THROWS_AS(primitive_norm_profile(cover, {1.0, 1.0}, 16), std::invalid_argument);
    CHECK_THROWS_AS(primitive_norm_profile(cover, {-1.0, 1.0}, 16), std::invalid_argument);
    CHECK_THROWS_AS(make_cover("nope"), std::invalid_argument);
    CHECK_THROWS_AS(make_euclidean_2n(3), std::invalid_argument);
}

TEST_CASE("classifier on synthetic profiles")
{
    const auto radii = uniform_radii(40.0, 32);
    const GrowthClassification constant =
        classify_growth(synthetic(radii, [](double) { return 0.9; }));
    CHECK(constant.cls == GrowthClass::Bounded);
    CHECK(constant.c == Catch::Approx(0.9));

    // the defining inequality c(ρ+1) admits exactly linear growth
    const GrowthClassification linear =
        classify_growth(synthetic(radii, [](double r) { return r; }));
    CHECK(linear.cls == GrowthClass::Sublinear);
    CHECK(linear.c <= 1.0 + 1e-12);
    CHECK(linear.c >= 0.9);

    const GrowthClassification quad =
        classify_growth(synthetic(radii, [](double r) { return r * r; }));
    CHECK(quad.cls == GrowthClass::Superlinear);

    CHECK_THROWS_AS(classify_growth(synthetic({1.0, 2.0, 3.0}, [](double r) { return r; })),
                    std::invalid_argument);
}

TEST_CASE("classification is stable under grid refinement")
{
    // refining the radius grid never flips bounded into superlinear
    for (const char* name : {"euclidean_plane", "euclidean_2n", "hyperbolic_plane"}) {
        const ModelCover cover = make_cover(name);
        GrowthClass coarse = GrowthClass::Superlinear;
        GrowthClass fine = GrowthClass::Superlinear;
        for (int count : {8, 64, 256}) {
            const GrowthProfile p =
                primitive_norm_profile(cover, uniform_radii(40.0, count), 128);
            const GrowthClass cls = classify_growth(p).cls;
            if (count == 8)
                coarse = cls;
            fine = cls;
            CHECK(cls != GrowthClass::Superlinear);
        }
        CHECK_FALSE((coarse == GrowthClass::Bounded && fine == GrowthClass::Superlinear));
    }
}

TEST_CASE("parabolicity verdicts for the built-in covers")
{
    const ParabolicityVerdict plane = parabolicity_verdict(make_euclidean_plane());
    CHECK(plane.verdict == "symplectic parabolic");
    CHECK(plane.classification.c == Catch::Approx(1.0).margin(0.05));

    const ParabolicityVerdict torus_cover = parabolicity_verdict(make_euclidean_2n(4));
    CHECK(torus_cover.verdict == "symplectic parabolic");
    CHECK(torus_cover.classification.c >= 0.95);
    CHECK(torus_cover.classification.c <= 1.05);

    const ParabolicityVerdict hyp = parabolicity_verdict(make_hyperbolic_plane());
    CHECK(hyp.verdict == "symplectic hyperbolic");
    CHECK(hyp.classification.c <= 1.0 + 1e-9);
    CHECK(hyp.notes.find("parabolic") != std::string::npos); // hyperbolic implies parabolic

    CHECK_THROWS_AS(parabolicity_verdict(make_euclidean_plane(), 40.0, 2, 64),
                    std::invalid_argument); // degenerate radius grid
}

TEST_CASE("d-eta equals omega at random sample points")
{
    for (const char* name : {"euclidean_plane", "euclidean_2n", "hyperbolic_plane"}) {
        const ModelCover cover = make_cover(name);
        CHECK(primitive_exactness_error(cover, 1000, 20.0) <= 1e-9);
    }
}
