#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace symhodge {

/// A universal-cover model with closed-form data on a global chart:
/// the lifted symplectic form ω̃, a candidate primitive η with dη = ω̃,
/// the inverse metric (for covector norms), and distance spheres around
/// the chart origin.
struct ModelCover {
    std::string name;
    int dim = 0;
    // covector components of η at a chart point
    std::function<std::vector<double>(const std::vector<double>&)> eta;
    // antisymmetric component matrix of ω̃ at a chart point
    std::function<std::vector<std::vector<double>>(const std::vector<double>&)> omega;
    // inverse metric at a chart point (covectors pair through it)
    std::function<std::vector<std::vector<double>>(const std::vector<double>&)> inv_metric;
    // j-th of m sample points on the distance sphere of radius r
    std::function<std::vector<double>(double, int, int)> sphere_point;
    // a sample point with distance roughly in (0, rmax], for spot checks
    std::function<std::vector<double>(std::mt19937&, double)> chart_point;
};

namespace detail {

inline std::vector<double> unit_direction(std::mt19937& rng, int dim)
{
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> v(static_cast<std::size_t>(dim));
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (auto& x : v) {
            x = gauss(rng);
            norm2 += x * x;
        }
    } while (norm2 < 1e-12);
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& x : v)
        x *= inv;
    return v;
}

} // namespace detail

inline ModelCover make_euclidean_plane()
{
    ModelCover c;
    c.name = "euclidean_plane";
    c.dim = 2;
    c.eta = [](const std::vector<double>& p) { return std::vector<double>{0.0, p[0]}; };
    c.omega = [](const std::vector<double>&) {
        return std::vector<std::vector<double>>{{0.0, 1.0}, {-1.0, 0.0}};
    };
    c.inv_metric = [](const std::vector<double>&) {
        return std::vector<std::vector<double>>{{1.0, 0.0}, {0.0, 1.0}};
    };
    c.sphere_point = [](double r, int j, int m) {
        const double th = 2.0 * M_PI * j / m;
        return std::vector<double>{r * std::cos(th), r * std::sin(th)};
    };
    c.chart_point = [](std::mt19937& rng, double rmax) {
        std::uniform_real_distribution<double> u(-rmax, rmax);
        return std::vector<double>{u(rng), u(rng)};
    };
    return c;
}

/// R^{2n} covering the torus; η = Σ x_{2i-1} dx_{2i}. Sphere samples
/// include the coordinate axis directions, where ‖η‖ attains its supremum.
inline ModelCover make_euclidean_2n(int dim = 4)
{
    if (dim < 2 || dim % 2 != 0)
        throw std::invalid_argument("euclidean_2n needs an even dimension >= 2");
    ModelCover c;
    c.name = "euclidean_2n";
    c.dim = dim;
    c.eta = [dim](const std::vector<double>& p) {
        std::vector<double> e(static_cast<std::size_t>(dim), 0.0);
        for (int i = 0; i + 1 < dim; i += 2)
            e[static_cast<std::size_t>(i + 1)] = p[static_cast<std::size_t>(i)];
        return e;
    };
    c.omega = [dim](const std::vector<double>&) {
        std::vector<std::vector<double>> w(static_cast<std::size_t>(dim),
                                           std::vector<double>(static_cast<std::size_t>(dim), 0.0));
        for (int i = 0; i + 1 < dim; i += 2) {
            w[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = 1.0;
            w[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = -1.0;
        }
        return w;
    };
    c.inv_metric = [dim](const std::vector<double>&) {
        std::vector<std::vector<double>> g(static_cast<std::size_t>(dim),
                                           std::vector<double>(static_cast<std::size_t>(dim), 0.0));
        for (int i = 0; i < dim; ++i)
            g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
        return g;
    };
    c.sphere_point = [dim](double r, int j, int m) {
        std::vector<double> p(static_cast<std::size_t>(dim), 0.0);
        if (j < 2 * dim) {
            p[static_cast<std::size_t>(j / 2)] = (j % 2 == 0) ? r : -r;
            return p;
        }
        std::mt19937 rng(static_cast<unsigned>(977 + j + 131 * m));
        const auto u = detail::unit_direction(rng, dim);
        for (int i = 0; i < dim; ++i)
            p[static_cast<std::size_t>(i)] = r * u[static_cast<std::size_t>(i)];
        return p;
    };
    c.chart_point = [dim](std::mt19937& rng, double rmax) {
        std::uniform_real_distribution<double> u(-rmax, rmax);
        std::vector<double> p(static_cast<std::size_t>(dim));
        for (auto& x : p)
            x = u(rng);
        return p;
    };
    return c;
}

/// Geodesic polar chart (r, θ): metric dr² + sinh²(r) dθ², area form
/// sinh(r) dr ∧ dθ, primitive η = (cosh r - 1) dθ. Covers a closed
/// hyperbolic surface.
inline ModelCover make_hyperbolic_plane()
{
    ModelCover c;
    c.name = "hyperbolic_plane";
    c.dim = 2;
    c.eta = [](const std::vector<double>& p) {
        return std::vector<double>{0.0, std::cosh(p[0]) - 1.0};
    };
    c.omega = [](const std::vector<double>& p) {
        const double s = std::sinh(p[0]);
        return std::vector<std::vector<double>>{{0.0, s}, {-s, 0.0}};
    };
    c.inv_metric = [](const std::vector<double>& p) {
        const double s = std::sinh(p[0]);
        return std::vector<std::vector<double>>{{1.0, 0.0}, {0.0, 1.0 / (s * s)}};
    };
    c.sphere_point = [](double r, int j, int m) {
        return std::vector<double>{r, 2.0 * M_PI * j / m};
    };
    c.chart_point = [](std::mt19937& rng, double rmax) {
        std::uniform_real_distribution<double> ur(0.2, rmax);
        std::uniform_real_distribution<double> ut(0.0, 2.0 * M_PI);
        return std::vector<double>{ur(rng), ut(rng)};
    };
    return c;
}

inline ModelCover make_cover(const std::string& name, int dim_for_euclidean = 4)
{
    if (name == "euclidean_plane")
        return make_euclidean_plane();
    if (name == "euclidean_2n")
        return make_euclidean_2n(dim_for_euclidean);
    if (name == "hyperbolic_plane")
        return make_hyperbolic_plane();
    throw std::invalid_argument("unknown cover name: " + name);
}

inline double covector_norm(const ModelCover& cover, const std::vector<double>& point,
                            const std::vector<double>& alpha)
{
    const auto ginv = cover.inv_metric(point);
    double s = 0.0;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (std::size_t j = 0; j < alpha.size(); ++j)
            s += alpha[i] * ginv[i][j] * alpha[j];
    return std::sqrt(std::max(0.0, s));
}

struct GrowthProfile {
    std::vector<double> radii;
    std::vector<double> sup_norm; // per-radius supremum of ‖η‖_g over the sphere
};

/// Pointwise g-norm of η on a dense angular sample of each distance sphere.
inline GrowthProfile primitive_norm_profile(const ModelCover& cover,
                                            const std::vector<double>& radii, int angular_samples)
{
    if (angular_samples < 1)
        throw std::invalid_argument("need at least one angular sample");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (radii[i] <= 0.0)
            throw std::invalid_argument("radii must be positive");
        if (i > 0 && radii[i] <= radii[i - 1])
            throw std::invalid_argument("radii must be strictly increasing");
    }
    GrowthProfile profile;
    profile.radii = radii;
    for (double r : radii) {
        double sup = 0.0;
        for (int j = 0; j < angular_samples; ++j) {
            const auto p = cover.sphere_point(r, j, angular_samples);
            sup = std::max(sup, covector_norm(cover, p, cover.eta(p)));
        }
        profile.sup_norm.push_back(sup);
    }
    return profile;
}

enum class GrowthClass { Bounded, Sublinear, Superlinear };

inline const char* growth_class_name(GrowthClass c)
{
    switch (c) {
    case GrowthClass::Bounded: return "bounded";
    case GrowthClass::Sublinear: return "sublinear";
    case GrowthClass::Superlinear: return "superlinear";
    }
    return "?";
}

struct GrowthClassification {
    GrowthClass cls = GrowthClass::Superlinear;
    double c = 0.0; // sup bound when bounded, else the fitted slope constant
};

/// Bounded: the tail of s(R) is flat within tol. Sublinear: the ratios
/// s(R)/(R+1) stabilize; the limiting ratio is the reported constant c.
/// Note the defining inequality c(ρ+1) admits exactly linear growth.
inline GrowthClassification classify_growth(const GrowthProfile& profile, double tol = 1e-3,
                                            double ratio_tol = 0.1)
{
    const std::size_t m = profile.radii.size();
    if (m < 4)
        throw std::invalid_argument("too few radii to classify growth (need >= 4)");
    const double s_end = profile.sup_norm[m - 1];
    const double s_mid = profile.sup_norm[m / 2];
    if (std::abs(s_end - s_mid) < tol) {
        double c = 0.0;
        for (double s : profile.sup_norm)
            c = std::max(c, s);
        return {GrowthClass::Bounded, c};
    }
    const double q_end = s_end / (profile.radii[m - 1] + 1.0);
    const double q_mid = s_mid / (profile.radii[m / 2] + 1.0);
    if (std::abs(q_end - q_mid) <= ratio_tol * std::max(q_end, 1e-300)) {
        double c = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            c = std::max(c, profile.sup_norm[i] / (profile.radii[i] + 1.0));
        return {GrowthClass::Sublinear, c};
    }
    return {GrowthClass::Superlinear, 0.0};
}

struct ParabolicityVerdict {
    std::string cover;
    GrowthClassification classification;
    std::string verdict; // "symplectic hyperbolic" | "symplectic parabolic" | "neither"
    std::string notes;
};

inline ParabolicityVerdict parabolicity_verdict(const ModelCover& cover, double rmax = 40.0,
                                                int radii_count = 32, int angular_samples = 1024,
                                                double tol = 1e-3, double ratio_tol = 0.1)
{
    std::vector<double> radii;
    for (int i = 1; i <= radii_count; ++i)
        radii.push_back(rmax * i / radii_count);
    const GrowthProfile profile = primitive_norm_profile(cover, radii, angular_samples);
    const GrowthClassification cls = classify_growth(profile, tol, ratio_tol);
    ParabolicityVerdict v;
    v.cover = cover.name;
    v.classification = cls;
    switch (cls.cls) {
    case GrowthClass::Bounded:
        v.verdict = "symplectic hyperbolic";
        v.notes = "omega lift is d(bounded); hyperbolic implies parabolic";
        break;
    case GrowthClass::Sublinear:
        v.verdict = "symplectic parabolic";
        v.notes = "omega lift is d(sublinear)";
        break;
    case GrowthClass::Superlinear:
        v.verdict = "neither";
        v.notes = "no sublinear primitive detected on the sampled profile";
        break;
    }
    return v;
}

/// Max relative error of the finite-difference exterior derivative of η
/// against the stored ω̃, over random chart points. Five-point stencils.
inline double primitive_exactness_error(const ModelCover& cover, int npoints = 1000,
                                        double rmax = 20.0, unsigned seed = 424242u)
{
    std::mt19937 rng(seed);
    const double h = 1e-3;
    double worst = 0.0;
    for (int t = 0; t < npoints; ++t) {
        const auto p = cover.chart_point(rng, rmax);
        const auto w = cover.omega(p);
        for (int i = 0; i < cover.dim; ++i)
            for (int j = i + 1; j < cover.dim; ++j) {
                auto partial = [&](int wrt, int comp) {
                    auto q = p;
                    auto eval = [&](double x) {
                        q[static_cast<std::size_t>(wrt)] = x;
                        return cover.eta(q)[static_cast<std::size_t>(comp)];
                    };
                    const double x0 = p[static_cast<std::size_t>(wrt)];
                    return (eval(x0 - 2 * h) - 8 * eval(x0 - h) + 8 * eval(x0 + h) -
                            eval(x0 + 2 * h)) /
                           (12 * h);
                };
                const double fd = partial(i, j) - partial(j, i);
                const double expected = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                const double scale = std::max(1.0, std::abs(expected));
                worst = std::max(worst, std::abs(fd - expected) / scale);
            }
    }
    return worst;
}

} // namespace symhodge
