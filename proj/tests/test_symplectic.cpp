#include "symhodge/catalog.hpp"
#include "symhodge/cohomology.hpp"
#include "symhodge/symplectic.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace symhodge;

namespace {

Form two_form(int n2, std::initializer_list<std::pair<std::pair<int, int>, Rational>> terms)
{
    Form f(n2);
    for (const auto& [ij, c] : terms)
        f.add_term(MultiIndex{ij.first, ij.second}, c);
    return f;
}

void check_triple_invariants(const CompatibleTriple& t)
{
    const int n2 = t.ambient_dimension();
    const Matrix& j = t.complex_structure();
    const Matrix& g = t.metric_gram();
    const Matrix& w = t.omega_darboux_skew();
    CHECK(j * j == Matrix::identity(n2) * Rational(-1));
    CHECK(g.is_symmetric());
    CHECK(is_positive_definite(g));
    CHECK(w * j == g);                       // g(u,v) = ω(u, Jv)
    CHECK(j.transposed() * w * j == w);      // ω(Ju, Jv) = ω(u,v)
    CHECK(t.basis_change() * t.basis_change_inverse() == Matrix::identity(n2));
}

} // namespace

TEST_CASE("symplectic validation on the torus")
{
    const LieModel m = catalog_model("t4");
    const Form omega = two_form(4, {{{1, 2}, Rational(1)}, {{3, 4}, Rational(1)}});
    const SymplecticVerdict v = validate_symplectic(m, omega);
    CHECK(v.ok());
    // ω²/2 = e1^e2^e3^e4
    Form half = v.top_power * Rational(1, 2);
    CHECK(half == Form::basis(4, {1, 2, 3, 4}));
}

TEST_CASE("Kodaira-Thurston omega is closed and nondegenerate")
{
    const LieModel m = catalog_model("kodaira-thurston");
    const SymplecticVerdict v = validate_symplectic(m);
    CHECK(v.closed());
    CHECK(v.nondegenerate());
}

TEST_CASE("degenerate omega rejected")
{
    const LieModel m = catalog_model("t4");
    const Form omega = two_form(4, {{{1, 2}, Rational(1)}});
    const SymplecticVerdict v = validate_symplectic(m, omega);
    CHECK(v.closed());
    CHECK_FALSE(v.nondegenerate());
    CHECK_THROWS_AS(darboux_basis(omega_skew_matrix(omega, 4)), std::invalid_argument);
}

TEST_CASE("standard omega gives the identity frame")
{
    const Form omega = two_form(4, {{{1, 2}, Rational(1)}, {{3, 4}, Rational(1)}});
    const CompatibleTriple t = darboux_basis(omega_skew_matrix(omega, 4));
    CHECK(t.basis_change() == Matrix::identity(4));
    check_triple_invariants(t);
}

TEST_CASE("scaled omega rescales the first pair")
{
    const Form omega = two_form(4, {{{1, 2}, Rational(2)}, {{3, 4}, Rational(1)}});
    const Matrix w = omega_skew_matrix(omega, 4);
    const CompatibleTriple t = darboux_basis(w);
    // skew Gram-Schmidt keeps e1 and divides e2 by the pairing 2
    CHECK(t.basis_change().at(0, 0) == 1);
    CHECK(t.basis_change().at(1, 1) == Rational(1, 2));
    CHECK(t.basis_change().transposed() * w * t.basis_change() == t.omega_darboux_skew());
    check_triple_invariants(t);
}

TEST_CASE("permuted omega yields an exact compatible triple")
{
    const Form omega = two_form(4, {{{1, 3}, Rational(1)}, {{2, 4}, Rational(1)}});
    const Matrix w = omega_skew_matrix(omega, 4);
    const CompatibleTriple t = darboux_basis(w);
    CHECK(t.basis_change().transposed() * w * t.basis_change() == t.omega_darboux_skew());
    check_triple_invariants(t);
}

TEST_CASE("triples of all catalog models pass the exact invariants")
{
    for (const auto& id : catalog_ids()) {
        const LieModel m = catalog_model(id);
        const CompatibleTriple t = darboux_basis(omega_skew_matrix(m.omega_form(), m.dim));
        check_triple_invariants(t);
        // omega expressed in the Darboux basis is the standard form
        const VecQ omega_coeffs = form_to_vector(m.omega_form(), 2);
        const VecQ darboux_coeffs = t.to_darboux(2) * omega_coeffs;
        CHECK(vector_to_form(darboux_coeffs, m.dim, 2) == t.omega_darboux());
    }
}

TEST_CASE("push_forward by the identity is a no-op")
{
    const LieModel m = catalog_model("kodaira-thurston");
    const GradedOperator d = exterior_derivative(m);
    CHECK(push_forward(d, Matrix::identity(4)) == d);
}

TEST_CASE("push_forward preserves d^2 = 0 and kernel dimensions")
{
    const LieModel m = catalog_model("kodaira-thurston");
    const GradedOperator d = exterior_derivative(m);
    std::mt19937 rng(55);
    std::uniform_int_distribution<int> entry(-2, 2);
    Matrix p(4, 4);
    do {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                p.at(i, j) = entry(rng);
    } while (!inverse(p).has_value());
    const GradedOperator moved = push_forward(d, p);
    CHECK(compose(moved, moved).is_zero());
    for (int k = 0; k <= 4; ++k)
        CHECK(nullspace(moved.block(k)).size() == nullspace(d.block(k)).size());
}

TEST_CASE("cohomology dimensions are independent of the Darboux pivot order")
{
    for (const auto& id : catalog_ids()) {
        const LieModel m = catalog_model(id);
        const AnalysisContext lex = build_context(m, Rational(1), PivotOrder::Lexicographic);
        const AnalysisContext rev = build_context(m, Rational(1), PivotOrder::Reverse);
        for (int k = 0; k <= m.dim; ++k) {
            CHECK(de_rham(lex, k).dimension == de_rham(rev, k).dimension);
            CHECK(h_dplus(lex, k).dimension == h_dplus(rev, k).dimension);
            CHECK(h_ddlambda(lex, k).dimension == h_ddlambda(rev, k).dimension);
        }
    }
}

TEST_CASE("dimensions survive a random symplectic change of basis")
{
    // conjugating the model by a symplectic P fixes the standard omega, so
    // the whole pipeline must reproduce every dimension
    const LieModel m = catalog_model("kodaira-thurston");
    const AnalysisContext base = build_context(m, Rational(1));

    // shear f2 -> f2 + 2 f1; it fixes the standard pairing exactly
    Matrix p = Matrix::identity(4);
    p.at(0, 1) = 2;
    const Matrix w_std = base.triple.omega_darboux_skew();
    REQUIRE(p.transposed() * w_std * p == w_std);

    const GradedOperator moved = push_forward(base.d, p);
    const OperatorSuite moved_ops(moved, w_std, base.triple.metric_gram(), Rational(1));
    for (int k = 0; k <= 4; ++k) {
        CHECK(nullspace(moved_ops.laplacian_dplus().block(k)).size() ==
              nullspace(base.ops.laplacian_dplus().block(k)).size());
        CHECK(nullspace(moved_ops.laplacian_ddlambda().block(k)).size() ==
              nullspace(base.ops.laplacian_ddlambda().block(k)).size());
        CHECK(nullspace(moved_ops.laplacian_d().block(k)).size() ==
              nullspace(base.ops.laplacian_d().block(k)).size());
    }
}
