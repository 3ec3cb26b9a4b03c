#pragma once

#include <cmath>
#include <stdexcept>

namespace symhodge {

// The mollifier chain f -> ψ -> a_ε. All evaluations are closed-form; the
// flat regions come out exactly 0 or exactly 1 because f vanishes exactly
// for nonpositive arguments.

inline double bump_f(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }
inline double bump_f1(double x) { return x > 0.0 ? bump_f(x) / (x * x) : 0.0; }
inline double bump_f2(double x)
{
    return x > 0.0 ? bump_f(x) * (1.0 - 2.0 * x) / (x * x * x * x) : 0.0;
}

/// ψ(x) = f(x) / (f(x) + f(1-x)); 0 for x <= 0, 1 for x >= 1.
inline double psi(double x)
{
    const double n = bump_f(x);
    const double d = n + bump_f(1.0 - x);
    return n / d;
}

inline double psi1(double x)
{
    const double n = bump_f(x), n1 = bump_f1(x);
    const double d = n + bump_f(1.0 - x);
    const double d1 = n1 - bump_f1(1.0 - x);
    return (n1 * d - n * d1) / (d * d);
}

inline double psi2(double x)
{
    const double n = bump_f(x), n1 = bump_f1(x), n2 = bump_f2(x);
    const double d = n + bump_f(1.0 - x);
    const double d1 = n1 - bump_f1(1.0 - x);
    const double d2 = n2 + bump_f2(1.0 - x);
    return (n2 * d - n * d2) / (d * d) - 2.0 * d1 * (n1 * d - n * d1) / (d * d * d);
}

struct CutoffValues {
    double a = 0.0;
    double a1 = 0.0; // a_ε'
    double a2 = 0.0; // a_ε''
};

/// a_ε(x) = ψ²(2 - εx) with the displayed closed-form derivatives
/// a' = -2ε ψψ'(2-εx) and a'' = 2ε²ψ'² + 2ε²ψψ'' at 2-εx.
inline CutoffValues cutoff_eval(double epsilon, double x)
{
    if (epsilon <= 0.0)
        throw std::invalid_argument("epsilon must be positive");
    if (x < 0.0)
        throw std::invalid_argument("cutoff family is defined for x >= 0");
    const double t = 2.0 - epsilon * x;
    const double p = psi(t), p1 = psi1(t), p2 = psi2(t);
    CutoffValues v;
    v.a = p * p;
    v.a1 = -2.0 * epsilon * p * p1;
    v.a2 = 2.0 * epsilon * epsilon * p1 * p1 + 2.0 * epsilon * epsilon * p * p2;
    return v;
}

struct CutoffCertificate {
    double epsilon = 0.0;
    int grid_points = 0;
    double c1 = 0.0; // smallest constant with -ε C1 √a_ε <= a_ε' <= 0
    double c2 = 0.0; // smallest constant with |a_ε''| <= C2 ε²
    bool aprime_nonpositive = false;
    bool range_ok = false; // 0 <= a_ε <= 1, exact 1 on [0, 1/ε], exact 0 on [2/ε, ∞)
    bool pass = false;
};

/// Sweep a uniform grid on [0, 2/ε + 1] and measure the derivative-bound
/// constants. Points with a_ε = 0 contribute nothing to C1 but must have
/// a_ε' = 0 there.
inline CutoffCertificate certify_bounds(double epsilon, int grid_points)
{
    if (epsilon <= 0.0)
        throw std::invalid_argument("epsilon must be positive");
    if (grid_points < 1000)
        throw std::invalid_argument("grid too coarse for certification (need >= 1000 points)");
    const double hi = 2.0 / epsilon + 1.0;
    CutoffCertificate cert;
    cert.epsilon = epsilon;
    cert.grid_points = grid_points;
    cert.aprime_nonpositive = true;
    cert.range_ok = true;
    for (int i = 0; i < grid_points; ++i) {
        const double x = hi * i / (grid_points - 1);
        const CutoffValues v = cutoff_eval(epsilon, x);
        if (v.a < 0.0 || v.a > 1.0)
            cert.range_ok = false;
        if (x <= 1.0 / epsilon && v.a != 1.0)
            cert.range_ok = false;
        if (x >= 2.0 / epsilon && v.a != 0.0)
            cert.range_ok = false;
        if (v.a1 > 0.0)
            cert.aprime_nonpositive = false;
        if (v.a > 0.0) {
            cert.c1 = std::max(cert.c1, -v.a1 / (epsilon * std::sqrt(v.a)));
        } else if (std::abs(v.a1) > 1e-100) {
            // a = ψ² underflows before a' = -2εψψ' does, so a tiny nonzero
            // a' can coexist with a == 0 near the outer edge; anything above
            // this guard is a genuine sign/flatness violation
            cert.aprime_nonpositive = false;
        }
        cert.c2 = std::max(cert.c2, std::abs(v.a2) / (epsilon * epsilon));
    }
    cert.pass = cert.aprime_nonpositive && cert.range_ok && std::isfinite(cert.c1) &&
                std::isfinite(cert.c2);
    return cert;
}

} // namespace symhodge
