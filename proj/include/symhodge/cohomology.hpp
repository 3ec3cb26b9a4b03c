#pragma once

#include "symhodge/lie_model.hpp"
#include "symhodge/operators.hpp"
#include "symhodge/symplectic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symhodge {

/// Everything downstream computations need, assembled once. All operators
/// live in the Darboux coordinates of the canonical compatible triple;
/// conversion back to the model's own basis goes through `triple`.
struct AnalysisContext {
    LieModel model;
    SymplecticVerdict symplectic;
    CompatibleTriple triple;
    GradedOperator d; // Darboux coordinates
    OperatorSuite ops;

    int dim() const { return model.dim; }
    int half_dim() const { return model.half_dim(); }
};

inline AnalysisContext build_context(const LieModel& model, const Rational& lambda,
                                     PivotOrder order = PivotOrder::Lexicographic)
{
    const ValidationReport rep = validate(model);
    if (!rep.ok())
        throw ModelError("invalid model '" + model.name + "': " + rep.summary());
    SymplecticVerdict verdict = validate_symplectic(model);
    if (!verdict.closed())
        throw ModelError("omega is not closed on model '" + model.name + "'");
    if (!verdict.nondegenerate())
        throw ModelError("omega is degenerate on model '" + model.name + "'");

    const Matrix w = omega_skew_matrix(model.omega_form(), model.dim);
    CompatibleTriple triple = darboux_basis(w, order);
    GradedOperator d = push_forward(exterior_derivative(model), triple.basis_change());
    OperatorSuite ops(d, triple.omega_darboux_skew(), triple.metric_gram(), lambda);
    return AnalysisContext{model, std::move(verdict), std::move(triple), std::move(d), std::move(ops)};
}

enum class Flavor { DeRham, DPlus, DdLambda };

inline const char* flavor_name(Flavor f)
{
    switch (f) {
    case Flavor::DeRham: return "dR";
    case Flavor::DPlus: return "dplus";
    case Flavor::DdLambda: return "ddlambda";
    }
    return "?";
}

struct CohomologySpace {
    int degree = 0;
    Flavor flavor = Flavor::DeRham;
    int dimension = 0;                 // quotient dimension, exact ranks
    std::vector<VecQ> representatives; // class representatives (Darboux coords)
    std::vector<VecQ> harmonic;        // kernel basis of the matching Laplacian
    bool dims_agree = false;           // quotient dimension == harmonic dimension
};

namespace detail {

/// Block of op with the given source degree, or a dim_target x 0 matrix
/// when the degree leaves [0, 2n].
inline Matrix source_block(const GradedOperator& op, int k, int target_dim)
{
    if (k < 0 || k > op.ambient_dimension())
        return Matrix(target_dim, 0);
    return op.block(k);
}

/// Deterministic class representatives: kernel-basis vectors (in canonical
/// RREF order) greedily kept while they enlarge the span of the boundary
/// image.
inline std::vector<VecQ> quotient_representatives(const std::vector<VecQ>& kernel,
                                                  const Matrix& image, int space_dim)
{
    std::vector<VecQ> reps;
    Matrix span = image;
    int current = rank(span);
    for (const auto& v : kernel) {
        Matrix cand = hstack(span, from_columns(space_dim, {v}));
        const int r = rank(cand);
        if (r > current) {
            reps.push_back(v);
            span = std::move(cand);
            current = r;
        }
    }
    return reps;
}

} // namespace detail

inline CohomologySpace de_rham(const AnalysisContext& ctx, int k)
{
    const int dim_k = static_cast<int>(degree_dimension(ctx.dim(), k));
    const auto kernel = nullspace(ctx.d.block(k));
    const Matrix boundary = detail::source_block(ctx.d, k - 1, dim_k);
    CohomologySpace space;
    space.degree = k;
    space.flavor = Flavor::DeRham;
    space.dimension = static_cast<int>(kernel.size()) - rank(boundary);
    space.representatives = detail::quotient_representatives(kernel, boundary, dim_k);
    space.harmonic = nullspace(ctx.ops.laplacian_d().block(k));
    space.dims_agree = static_cast<int>(space.harmonic.size()) == space.dimension;
    return space;
}

inline CohomologySpace h_dplus(const AnalysisContext& ctx, int k)
{
    const int dim_k = static_cast<int>(degree_dimension(ctx.dim(), k));
    // ker(d + d^Λ) ∩ Ω^k = ker d_k ∩ ker d^Λ_k
    const auto kernel = nullspace(vstack(ctx.d.block(k), ctx.ops.d_lambda().block(k)));
    const Matrix boundary = ctx.ops.dd_lambda().block(k);
    CohomologySpace space;
    space.degree = k;
    space.flavor = Flavor::DPlus;
    space.dimension = static_cast<int>(kernel.size()) - rank(boundary);
    space.representatives = detail::quotient_representatives(kernel, boundary, dim_k);
    space.harmonic = nullspace(ctx.ops.laplacian_dplus().block(k));
    space.dims_agree = static_cast<int>(space.harmonic.size()) == space.dimension;
    return space;
}

inline CohomologySpace h_ddlambda(const AnalysisContext& ctx, int k)
{
    const int dim_k = static_cast<int>(degree_dimension(ctx.dim(), k));
    const auto kernel = nullspace(ctx.ops.dd_lambda().block(k));
    const Matrix boundary = hstack(detail::source_block(ctx.d, k - 1, dim_k),
                                   detail::source_block(ctx.ops.d_lambda(), k + 1, dim_k));
    CohomologySpace space;
    space.degree = k;
    space.flavor = Flavor::DdLambda;
    space.dimension = static_cast<int>(kernel.size()) - rank(boundary);
    space.representatives = detail::quotient_representatives(kernel, boundary, dim_k);
    space.harmonic = nullspace(ctx.ops.laplacian_ddlambda().block(k));
    space.dims_agree = static_cast<int>(space.harmonic.size()) == space.dimension;
    return space;
}

inline CohomologySpace cohomology_space(const AnalysisContext& ctx, Flavor f, int k)
{
    switch (f) {
    case Flavor::DeRham: return de_rham(ctx, k);
    case Flavor::DPlus: return h_dplus(ctx, k);
    case Flavor::DdLambda: return h_ddlambda(ctx, k);
    }
    throw std::logic_error("unknown flavor");
}

/// One three-summand orthogonal decomposition of Ω^k.
struct DecompositionRecord {
    std::string name;
    int degree = 0;
    int dim_harmonic = 0;
    int dim_second = 0;
    int dim_third = 0;
    bool orthogonal = false;
    bool total_matches = false;
    bool pass() const { return orthogonal && total_matches; }
};

namespace detail {

inline DecompositionRecord check_decomposition(const AnalysisContext& ctx, std::string name, int k,
                                               const std::vector<VecQ>& harmonic,
                                               const std::vector<VecQ>& second,
                                               const std::vector<VecQ>& third)
{
    const int dim_k = static_cast<int>(degree_dimension(ctx.dim(), k));
    DecompositionRecord rec;
    rec.name = std::move(name);
    rec.degree = k;
    rec.dim_harmonic = static_cast<int>(harmonic.size());
    rec.dim_second = static_cast<int>(second.size());
    rec.dim_third = static_cast<int>(third.size());
    rec.total_matches = rec.dim_harmonic + rec.dim_second + rec.dim_third == dim_k;

    const auto& inner = ctx.ops.inner();
    auto all_orthogonal = [&](const std::vector<VecQ>& a, const std::vector<VecQ>& b) {
        for (const auto& u : a)
            for (const auto& v : b)
                if (inner.pair(k, u, v) != 0)
                    return false;
        return true;
    };
    rec.orthogonal = all_orthogonal(harmonic, second) && all_orthogonal(harmonic, third) &&
                     all_orthogonal(second, third);
    return rec;
}

} // namespace detail

/// The four decompositions at degree k, each checked exactly: pairwise
/// Gram-orthogonal summands whose dimensions sum to C(2n, k).
inline std::vector<DecompositionRecord> decomposition_audit(const AnalysisContext& ctx, int k)
{
    const int dim_k = static_cast<int>(degree_dimension(ctx.dim(), k));
    const auto& ops = ctx.ops;
    std::vector<DecompositionRecord> out;

    out.push_back(detail::check_decomposition(
        ctx, "dplus", k, nullspace(ops.laplacian_dplus().block(k)),
        image_basis(ops.dd_lambda().block(k)),
        image_basis(hstack(detail::source_block(ops.d_star(), k + 1, dim_k),
                           detail::source_block(ops.d_lambda_star(), k - 1, dim_k)))));

    out.push_back(detail::check_decomposition(
        ctx, "ddlambda", k, nullspace(ops.laplacian_ddlambda().block(k)),
        image_basis(ops.dd_lambda_star().block(k)),
        image_basis(hstack(detail::source_block(ctx.d, k - 1, dim_k),
                           detail::source_block(ops.d_lambda(), k + 1, dim_k)))));

    out.push_back(detail::check_decomposition(
        ctx, "dlambda", k, nullspace(ops.laplacian_dlambda().block(k)),
        image_basis(detail::source_block(ops.d_lambda(), k + 1, dim_k)),
        image_basis(detail::source_block(ops.d_lambda_star(), k - 1, dim_k))));

    out.push_back(detail::check_decomposition(
        ctx, "deRham", k, nullspace(ops.laplacian_d().block(k)),
        image_basis(detail::source_block(ctx.d, k - 1, dim_k)),
        image_basis(detail::source_block(ops.d_star(), k + 1, dim_k))));

    return out;
}

/// L^{n-k} between harmonic spaces of complementary degrees.
struct LefschetzAuditRecord {
    Flavor flavor = Flavor::DPlus;
    int degree = 0;
    bool lands_harmonic = false;
    bool bijective = false;
    bool pass() const { return lands_harmonic && bijective; }
};

inline LefschetzAuditRecord lefschetz_audit_flavor(const AnalysisContext& ctx, Flavor f, int k)
{
    if (k > ctx.half_dim())
        throw std::invalid_argument("lefschetz_audit: need k <= n");
    const int n2 = ctx.dim();
    const GradedOperator& lap =
        (f == Flavor::DPlus) ? ctx.ops.laplacian_dplus() : ctx.ops.laplacian_ddlambda();
    const auto h_low = nullspace(lap.block(k));
    const auto h_high = nullspace(lap.block(n2 - k));
    const Matrix power = ctx.ops.lefschetz_power(k, ctx.half_dim() - k);

    LefschetzAuditRecord rec;
    rec.flavor = f;
    rec.degree = k;
    rec.lands_harmonic = true;
    std::vector<VecQ> images;
    for (const auto& h : h_low) {
        VecQ img = power * h;
        if (!vec_is_zero(lap.block(n2 - k) * img))
            rec.lands_harmonic = false;
        images.push_back(std::move(img));
    }
    const int img_rank =
        images.empty() ? 0 : rank(from_columns(static_cast<int>(degree_dimension(n2, n2 - k)), images));
    rec.bijective = h_low.size() == h_high.size() && img_rank == static_cast<int>(h_low.size());
    return rec;
}

inline std::vector<LefschetzAuditRecord> lefschetz_audit(const AnalysisContext& ctx, int k)
{
    return {lefschetz_audit_flavor(ctx, Flavor::DPlus, k),
            lefschetz_audit_flavor(ctx, Flavor::DdLambda, k)};
}

struct ClassWitness {
    int degree = 0;
    VecQ coeffs; // Darboux coordinates of a representative form
};

/// Verdict of the wedge map [ω]^{n-k} ∧ · on de Rham classes, k <= n.
struct HardLefschetzVerdict {
    bool holds = false;
    bool surjectivity_matches = false; // per-k surjectivity flags agree with bijectivity
    std::optional<ClassWitness> witness;
};

namespace detail {

/// Coordinates of the class of w in the chosen representative basis:
/// solve [reps | boundary] x = w and keep the rep block.
inline std::optional<VecQ> class_coordinates(const std::vector<VecQ>& reps, const Matrix& boundary,
                                             const VecQ& w, int space_dim)
{
    Matrix sys = hstack(reps.empty() ? Matrix(space_dim, 0) : from_columns(space_dim, reps), boundary);
    const auto x = solve(sys, w);
    if (!x)
        return std::nullopt;
    return VecQ(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(reps.size()));
}

} // namespace detail

inline HardLefschetzVerdict hard_lefschetz(const AnalysisContext& ctx)
{
    const int n = ctx.half_dim();
    const int n2 = ctx.dim();
    HardLefschetzVerdict verdict;
    verdict.holds = true;
    verdict.surjectivity_matches = true;
    for (int k = 0; k <= n; ++k) {
        const CohomologySpace low = de_rham(ctx, k);
        const CohomologySpace high = de_rham(ctx, n2 - k);
        const int dim_high_space = static_cast<int>(degree_dimension(n2, n2 - k));
        const Matrix boundary_high = detail::source_block(ctx.d, n2 - k - 1, dim_high_space);
        const Matrix power = ctx.ops.lefschetz_power(k, n - k);

        Matrix class_map(high.dimension, low.dimension);
        for (int j = 0; j < low.dimension; ++j) {
            const VecQ image = power * low.representatives[static_cast<std::size_t>(j)];
            const auto coords =
                detail::class_coordinates(high.representatives, boundary_high, image, dim_high_space);
            if (!coords)
                throw std::logic_error("hard_lefschetz: image class not resolvable");
            for (int i = 0; i < high.dimension; ++i)
                class_map.at(i, j) = (*coords)[static_cast<std::size_t>(i)];
        }

        const int r = rank(class_map);
        const bool bijective = (low.dimension == high.dimension) && r == low.dimension;
        const bool surjective = r == high.dimension;
        if (bijective != surjective)
            verdict.surjectivity_matches = false;
        if (!bijective && verdict.holds) {
            verdict.holds = false;
            const auto ker = nullspace(class_map);
            if (!ker.empty()) {
                // lexicographically first kernel vector, expanded back to a form
                VecQ w(static_cast<std::size_t>(degree_dimension(n2, k)), Rational(0));
                for (int j = 0; j < low.dimension; ++j) {
                    const Rational& c = ker.front()[static_cast<std::size_t>(j)];
                    if (c == 0)
                        continue;
                    for (std::size_t t = 0; t < w.size(); ++t)
                        w[t] += c * low.representatives[static_cast<std::size_t>(j)][t];
                }
                verdict.witness = ClassWitness{k, std::move(w)};
            }
        }
    }
    return verdict;
}

struct MathieuVerdict {
    bool holds = false;
    std::optional<ClassWitness> witness;
};

/// Searches each de Rham class for a representative killed by both d and
/// d^Λ: solvability of (d^Λ ∘ d) x = -d^Λ r over the class's gauge freedom.
inline MathieuVerdict mathieu_check(const AnalysisContext& ctx)
{
    const int n2 = ctx.dim();
    MathieuVerdict verdict;
    verdict.holds = true;
    for (int k = 0; k <= n2; ++k) {
        const CohomologySpace space = de_rham(ctx, k);
        const int dim_km1 = static_cast<int>(degree_dimension(n2, k - 1));
        const Matrix a =
            ctx.ops.d_lambda().block(k) * detail::source_block(ctx.d, k - 1, static_cast<int>(degree_dimension(n2, k)));
        for (const auto& r : space.representatives) {
            VecQ b = ctx.ops.d_lambda().block(k) * r;
            for (auto& x : b)
                x = -x;
            if (b.size() != static_cast<std::size_t>(dim_km1))
                throw std::logic_error("mathieu_check: degree bookkeeping error");
            if (!solve(a, b)) {
                verdict.holds = false;
                if (!verdict.witness)
                    verdict.witness = ClassWitness{k, r};
            }
        }
    }
    return verdict;
}

/// *_g between the two harmonic families in complementary degrees.
struct StarDualityRecord {
    int degree = 0;
    bool lands_harmonic = false;
    bool bijective = false;
    bool betti_duality = false; // dim H^k_{ddΛ} == dim H^{2n-k}_{d+dΛ}
    bool pass() const { return lands_harmonic && bijective && betti_duality; }
};

inline StarDualityRecord star_duality_audit(const AnalysisContext& ctx, int k)
{
    const int n2 = ctx.dim();
    const auto h_dd = nullspace(ctx.ops.laplacian_ddlambda().block(k));
    const auto h_dp = nullspace(ctx.ops.laplacian_dplus().block(n2 - k));
    const Matrix& star = ctx.ops.hodge_star().block(k);

    StarDualityRecord rec;
    rec.degree = k;
    rec.lands_harmonic = true;
    std::vector<VecQ> images;
    for (const auto& h : h_dd) {
        VecQ img = star * h;
        if (!vec_is_zero(ctx.ops.laplacian_dplus().block(n2 - k) * img))
            rec.lands_harmonic = false;
        images.push_back(std::move(img));
    }
    const int img_rank =
        images.empty() ? 0 : rank(from_columns(static_cast<int>(degree_dimension(n2, n2 - k)), images));
    rec.bijective = img_rank == static_cast<int>(h_dd.size()) && h_dd.size() == h_dp.size();
    rec.betti_duality = h_dd.size() == h_dp.size();
    return rec;
}

} // namespace symhodge
