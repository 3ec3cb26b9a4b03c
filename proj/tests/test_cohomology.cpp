#include "symhodge/catalog.hpp"
#include "symhodge/cohomology.hpp"
#include "symhodge/report.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

using namespace symhodge;

namespace {

// Independent rank oracle: clear denominators, then fraction-free Bareiss
// elimination over __int128. Shares no code with the library's RREF path.
int oracle_rank(const Matrix& m)
{
    using I = __int128;
    BigInt common(1);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            common = lcm(common, rational_den(m.at(i, j)));
    std::vector<std::vector<I>> a(static_cast<std::size_t>(m.rows()),
                                  std::vector<I>(static_cast<std::size_t>(m.cols())));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const BigInt scaled = rational_num(m.at(i, j)) * (common / rational_den(m.at(i, j)));
            if (abs(scaled) > BigInt(1) << 62)
                throw std::overflow_error("oracle_rank: input too large");
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                static_cast<I>(scaled.convert_to<long long>());
        }

    const I limit = static_cast<I>(1) << 120;
    int rank = 0;
    I prev = 1;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
        for (int i = rank + 1; i < m.rows(); ++i) {
            for (int j = col + 1; j < m.cols(); ++j) {
                I v = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)] *
                          a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] *
                          a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
                v /= prev; // exact in Bareiss
                if (v > limit || v < -limit)
                    throw std::overflow_error("oracle_rank: overflow");
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            }
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] = 0;
        }
        prev = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
        ++rank;
    }
    return rank;
}

std::vector<std::int64_t> oracle_betti_dr(const AnalysisContext& ctx)
{
    std::vector<std::int64_t> b;
    for (int k = 0; k <= ctx.dim(); ++k) {
        const std::int64_t dim_k = degree_dimension(ctx.dim(), k);
        const int rank_k = oracle_rank(ctx.d.block(k));
        const int rank_prev = k > 0 ? oracle_rank(ctx.d.block(k - 1)) : 0;
        b.push_back(dim_k - rank_k - rank_prev);
    }
    return b;
}

std::vector<std::int64_t> oracle_betti_dplus(const AnalysisContext& ctx)
{
    std::vector<std::int64_t> b;
    for (int k = 0; k <= ctx.dim(); ++k) {
        const std::int64_t dim_k = degree_dimension(ctx.dim(), k);
        const int rank_pair = oracle_rank(vstack(ctx.d.block(k), ctx.ops.d_lambda().block(k)));
        const int rank_im = oracle_rank(ctx.ops.dd_lambda().block(k));
        b.push_back(dim_k - rank_pair - rank_im);
    }
    return b;
}

std::vector<std::int64_t> oracle_betti_ddlambda(const AnalysisContext& ctx)
{
    std::vector<std::int64_t> b;
    for (int k = 0; k <= ctx.dim(); ++k) {
        const int dim_k = static_cast<int>(degree_dimension(ctx.dim(), k));
        const int rank_ker = oracle_rank(ctx.ops.dd_lambda().block(k));
        const Matrix span = hstack(detail::source_block(ctx.d, k - 1, dim_k),
                                   detail::source_block(ctx.ops.d_lambda(), k + 1, dim_k));
        b.push_back(dim_k - rank_ker - oracle_rank(span));
    }
    return b;
}

} // namespace

TEST_CASE("torus Betti numbers are binomial")
{
    const AnalysisContext ctx = build_context(catalog_model("t4"), Rational(1));
    const std::vector<std::int64_t> expected = {1, 4, 6, 4, 1};
    for (int k = 0; k <= 4; ++k) {
        CHECK(de_rham(ctx, k).dimension == expected[static_cast<std::size_t>(k)]);
        CHECK(h_dplus(ctx, k).dimension == expected[static_cast<std::size_t>(k)]);
        CHECK(h_ddlambda(ctx, k).dimension == expected[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("Kodaira-Thurston regression fixtures from the rank oracle")
{
    const AnalysisContext ctx = build_context(catalog_model("kodaira-thurston"), Rational(1));
    // frozen output of oracle_betti_* (fraction-free elimination)
    const std::vector<std::int64_t> b = {1, 3, 4, 3, 1};
    const std::vector<std::int64_t> beta1 = {1, 3, 5, 3, 1};
    CHECK(oracle_betti_dr(ctx) == b);
    CHECK(oracle_betti_dplus(ctx) == beta1);
    CHECK(oracle_betti_ddlambda(ctx) == beta1); // palindromic here
    for (int k = 0; k <= 4; ++k) {
        CHECK(de_rham(ctx, k).dimension == b[static_cast<std::size_t>(k)]);
        CHECK(h_dplus(ctx, k).dimension == beta1[static_cast<std::size_t>(k)]);
        CHECK(h_ddlambda(ctx, k).dimension == beta1[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("nil6 regression fixtures from the rank oracle")
{
    const AnalysisContext ctx = build_context(catalog_model("nil6"), Rational(1));
    const std::vector<std::int64_t> b = {1, 4, 9, 12, 9, 4, 1};
    const std::vector<std::int64_t> beta = {1, 4, 11, 14, 11, 4, 1};
    CHECK(oracle_betti_dr(ctx) == b);
    CHECK(oracle_betti_dplus(ctx) == beta);
    CHECK(oracle_betti_ddlambda(ctx) == beta);
    for (int k = 0; k <= 6; ++k) {
        CHECK(de_rham(ctx, k).dimension == b[static_cast<std::size_t>(k)]);
        CHECK(h_dplus(ctx, k).dimension == beta[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("library dimensions agree with the oracle on every catalog model")
{
    for (const auto& id : catalog_ids()) {
        const AnalysisContext ctx = build_context(catalog_model(id), Rational(1));
        const auto odr = oracle_betti_dr(ctx);
        const auto odp = oracle_betti_dplus(ctx);
        const auto odd = oracle_betti_ddlambda(ctx);
        for (int k = 0; k <= ctx.dim(); ++k) {
            CHECK(de_rham(ctx, k).dimension == odr[static_cast<std::size_t>(k)]);
            CHECK(h_dplus(ctx, k).dimension == odp[static_cast<std::size_t>(k)]);
            CHECK(h_ddlambda(ctx, k).dimension == odd[static_cast<std::size_t>(k)]);
        }
    }
}

TEST_CASE("betti numbers are independent of lambda")
{
    const LieModel m = catalog_model("kodaira-thurston");
    const AnalysisContext half = build_context(m, Rational(1, 2));
    const AnalysisContext one = build_context(m, Rational(1));
    const AnalysisContext two = build_context(m, Rational(2));
    for (int k = 0; k <= 4; ++k) {
        CHECK(h_dplus(half, k).dimension == h_dplus(one, k).dimension);
        CHECK(h_dplus(two, k).dimension == h_dplus(one, k).dimension);
        CHECK(h_ddlambda(half, k).dimension == h_ddlambda(one, k).dimension);
        CHECK(h_ddlambda(two, k).dimension == h_ddlambda(one, k).dimension);
    }
}

TEST_CASE("harmonic representatives satisfy their closure conditions")
{
    const AnalysisContext ctx = build_context(catalog_model("kodaira-thurston"), Rational(1));
    for (int k = 0; k <= 4; ++k) {
        for (const auto& h : h_dplus(ctx, k).harmonic) {
            CHECK(vec_is_zero(ctx.d.block(k) * h));
            CHECK(vec_is_zero(ctx.ops.d_lambda().block(k) * h));
            CHECK(vec_is_zero(ctx.ops.dd_lambda_star().block(k) * h));
        }
        for (const auto& h : h_ddlambda(ctx, k).harmonic) {
            CHECK(vec_is_zero(ctx.ops.d_star().block(k) * h));
            CHECK(vec_is_zero(ctx.ops.d_lambda_star().block(k) * h));
            CHECK(vec_is_zero(ctx.ops.dd_lambda().block(k) * h));
        }
    }
}

TEST_CASE("abelian decompositions are concentrated in the harmonic summand")
{
    const AnalysisContext ctx = build_context(catalog_model("t4"), Rational(1));
    for (int k = 0; k <= 4; ++k)
        for (const auto& rec : decomposition_audit(ctx, k)) {
            CHECK(rec.pass());
            CHECK(rec.dim_harmonic == degree_dimension(4, k));
            CHECK(rec.dim_second == 0);
            CHECK(rec.dim_third == 0);
        }
}

TEST_CASE("decomposition audit passes on every catalog model and degree")
{
    for (const auto& id : catalog_ids()) {
        const AnalysisContext ctx = build_context(catalog_model(id), Rational(1));
        for (int k = 0; k <= ctx.dim(); ++k)
            for (const auto& rec : decomposition_audit(ctx, k)) {
                INFO(id << " degree " << k << " " << rec.name);
                CHECK(rec.orthogonal);
                CHECK(rec.total_matches);
            }
    }
}

TEST_CASE("lefschetz isomorphism on harmonic spaces")
{
    // k = n is the identity map
    const AnalysisContext t4 = build_context(catalog_model("t4"), Rational(1));
    for (const auto& rec : lefschetz_audit(t4, 2))
        CHECK(rec.pass());
    for (const auto& rec : lefschetz_audit(t4, 1))
        CHECK(rec.pass());

    // passes on Kodaira-Thurston even though the de Rham hard Lefschetz fails
    const AnalysisContext kt = build_context(catalog_model("kodaira-thurston"), Rational(1));
    for (int k = 0; k <= 2; ++k)
        for (const auto& rec : lefschetz_audit(kt, k)) {
            INFO("degree " << k);
            CHECK(rec.pass());
        }
    CHECK_THROWS_AS(lefschetz_audit(kt, 3), std::invalid_argument);
}

TEST_CASE("hard Lefschetz verdicts")
{
    for (const char* id : {"t2", "t4", "t6"}) {
        const AnalysisContext ctx = build_context(catalog_model(id), Rational(1));
        const HardLefschetzVerdict v = hard_lefschetz(ctx);
        CHECK(v.holds);
        CHECK(v.surjectivity_matches);
        CHECK_FALSE(v.witness.has_value());
    }

    const AnalysisContext kt = build_context(catalog_model("kodaira-thurston"), Rational(1));
    const HardLefschetzVerdict v = hard_lefschetz(kt);
    CHECK_FALSE(v.holds);
    CHECK(v.surjectivity_matches);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->degree == 1);
    // the witness is a closed 1-form whose wedge with ω^{n-k} is exact
    const VecQ& w = v.witness->coeffs;
    CHECK_FALSE(vec_is_zero(w));
    CHECK(vec_is_zero(kt.d.block(1) * w));
    const VecQ image = kt.ops.lefschetz_power(1, 1) * w;
    CHECK(solve(kt.d.block(2), image).has_value());
}

TEST_CASE("mathieu check matches hard Lefschetz on every model")
{
    for (const auto& id : catalog_ids()) {
        const AnalysisContext ctx = build_context(catalog_model(id), Rational(1));
        const HardLefschetzVerdict hlp = hard_lefschetz(ctx);
        const MathieuVerdict mat = mathieu_check(ctx);
        INFO(id);
        CHECK(hlp.holds == mat.holds);
        if (!mat.holds) {
            REQUIRE(mat.witness.has_value());
            // the witness class really has no d- and d^Λ-closed representative
            const int k = mat.witness->degree;
            const Matrix gauge = ctx.ops.d_lambda().block(k) *
                                 detail::source_block(ctx.d, k - 1,
                                                      static_cast<int>(degree_dimension(ctx.dim(), k)));
            VecQ rhs = ctx.ops.d_lambda().block(k) * mat.witness->coeffs;
            for (auto& x : rhs)
                x = -x;
            CHECK_FALSE(solve(gauge, rhs).has_value());
        }
    }
}

TEST_CASE("star duality and Betti duality")
{
    for (const auto& id : catalog_ids()) {
        const AnalysisContext ctx = build_context(catalog_model(id), Rational(1));
        for (int k = 0; k <= ctx.dim(); ++k) {
            const StarDualityRecord rec = star_duality_audit(ctx, k);
            INFO(id << " degree " << k);
            CHECK(rec.lands_harmonic);
            CHECK(rec.bijective);
            CHECK(rec.betti_duality);
        }
    }
}

TEST_CASE("euler reports")
{
    for (const char* id : {"t4", "t6"}) {
        const AnalysisContext ctx = build_context(catalog_model(id), Rational(1));
        const CohomologyReport rep = euler_report(ctx);
        CHECK(rep.chi == 0);
        CHECK(rep.chi_s1 == 0);
        CHECK(rep.chi_s2 == 0);
        CHECK(rep.hlp_holds);
        CHECK(rep.mathieu_holds);
        CHECK(rep.all_audits_pass());
    }

    const AnalysisContext kt = build_context(catalog_model("kodaira-thurston"), Rational(1));
    const CohomologyReport rep = euler_report(kt);
    CHECK(rep.betti_dr == std::vector<std::int64_t>{1, 3, 4, 3, 1});
    CHECK(rep.betti_dplus == std::vector<std::int64_t>{1, 3, 5, 3, 1});
    CHECK(rep.chi == 0);
    CHECK(rep.chi_s1 == 1); // HLP fails, so no equality with chi is asserted
    CHECK(rep.chi_s2 == 1);
    CHECK_FALSE(rep.hlp_holds);
    CHECK_FALSE(rep.mathieu_holds);
    REQUIRE(rep.hlp_witness.has_value());
    CHECK(rep.hlp_witness->degree == 1);
    CHECK(rep.all_audits_pass());

    // alternating sums recompute from the dims
    auto alt = [](const std::vector<std::int64_t>& v) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i % 2 == 0) ? v[i] : -v[i];
        return s;
    };
    CHECK(rep.chi == alt(rep.betti_dr));
    CHECK(rep.chi_s1 == alt(rep.betti_dplus));
    CHECK(rep.chi_s2 == alt(rep.betti_ddlambda));
}

TEST_CASE("reports are byte-stable")
{
    for (const auto& id : catalog_ids()) {
        const LieModel m = catalog_model(id);
        const std::string a = report_to_json_string(euler_report(build_context(m, Rational(1))));
        const std::string b = report_to_json_string(euler_report(build_context(m, Rational(1))));
        CHECK(a == b);
    }
}
