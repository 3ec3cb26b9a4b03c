#pragma once

#include "symhodge/form.hpp"
#include "symhodge/graded_operator.hpp"
#include "symhodge/matrix.hpp"
#include "symhodge/symplectic.hpp"

#include <vector>

namespace symhodge {

/// Inner products on each exterior power induced by a metric Gram matrix g
/// on vectors: covectors pair by h = g^{-1}, and degree-k basis forms pair
/// by the k x k minors of h.
class InnerProduct {
public:
    InnerProduct(Matrix metric_gram, Form volume)
        : g_(std::move(metric_gram)), volume_(std::move(volume))
    {
        if (!is_positive_definite(g_))
            throw std::invalid_argument("metric Gram matrix must be symmetric positive definite");
        const auto hinv = inverse(g_);
        h_ = *hinv;
        const int n2 = g_.rows();
        for (int k = 0; k <= n2; ++k)
            gram_.push_back(induced_power(h_, k));
    }

    int ambient_dimension() const { return g_.rows(); }
    const Matrix& metric() const { return g_; }
    const Matrix& gram(int k) const { return gram_.at(static_cast<std::size_t>(k)); }
    const Form& volume() const { return volume_; }

    Rational pair(int k, const VecQ& a, const VecQ& b) const
    {
        return dot(a, gram(k) * b);
    }

    /// Gram adjoint of a block m : Ω^source -> Ω^target.
    Matrix adjoint_block(const Matrix& m, int source_deg, int target_deg) const
    {
        const auto ginv = inverse(gram(source_deg));
        return *ginv * m.transposed() * gram(target_deg);
    }

private:
    Matrix g_;
    Matrix h_;
    std::vector<Matrix> gram_;
    Form volume_;
};

/// Every operator of the calculus as an exact graded matrix, assembled from
/// d, the symplectic pairing and the metric. Immutable after construction;
/// queries are read-only and thread-safe.
///
/// Both stars are obtained by solving the wedge-duality identity
/// α ∧ *β = P(α, β) · dvol against the complement-sign table, with
/// P the metric pairing for *_g and the (ω^{-1})-minor pairing for *_s,
/// and dvol = ω^n / n!.
class OperatorSuite {
public:
    OperatorSuite(const GradedOperator& d, const Matrix& omega_skew, const Matrix& metric_gram,
                  Rational lambda)
        : n2_(d.ambient_dimension()), lambda_(std::move(lambda)),
          inner_(metric_gram, volume_form(omega_skew, d.ambient_dimension())), d_(d)
    {
        if (lambda_ <= 0)
            throw std::invalid_argument("lambda must be positive");
        if (omega_skew.rows() != n2_ || omega_skew.cols() != n2_)
            throw std::invalid_argument("omega matrix shape mismatch");

        const Form vol = inner_.volume();
        const MultiIndex top(degree_basis(n2_, n2_).front());
        vol_coeff_ = vol.coefficient(top);

        const Matrix winv = *inverse(omega_skew);

        star_g_ = build_star([this](int k) { return inner_.gram(k); });
        star_s_ = build_star([&winv, this](int k) { return induced_power(winv, k); });

        d_lambda_ = with_targets(
            degree_sign(compose(star_s_, compose(d_, star_s_)),
                        [](int k) { return (k % 2 == 0) ? -1 : +1; }), // (-1)^{k+1}
            [](int k) { return k - 1; });
        d_star_ = with_targets(scale(compose(star_g_, compose(d_, star_g_)), Rational(-1)),
                               [](int k) { return k - 1; });
        d_lambda_star_ = with_targets(compose(star_g_, compose(d_lambda_, star_g_)),
                                      [](int k) { return k + 1; });
        dd_lambda_ = with_targets(compose(d_, d_lambda_), [](int k) { return k; });
        dd_lambda_star_ = with_targets(
            degree_sign(compose(star_g_, compose(dd_lambda_, star_g_)),
                        [](int k) { return (k % 2 == 0) ? -1 : +1; }), // (-1)^{k+1}
            [](int k) { return k; });

        lefschetz_ = build_lefschetz(omega_skew);
        dual_lefschetz_ = build_dual_lefschetz(winv);

        auto same = [](int k) { return k; };
        auto sq = [&](const GradedOperator& a, const GradedOperator& b) {
            return with_targets(compose(a, b), same);
        };

        laplacian_d_ = add(sq(d_star_, d_), sq(d_, d_star_));
        laplacian_dlambda_ = add(sq(d_lambda_star_, d_lambda_), sq(d_lambda_, d_lambda_star_));

        const GradedOperator second_order_dplus =
            scale(add(sq(d_star_, d_), sq(d_lambda_star_, d_lambda_)), lambda_);
        laplacian_dplus_ = add(sq(dd_lambda_, dd_lambda_star_), second_order_dplus);
        elliptic_dplus_ = add(
            add(sq(dd_lambda_, dd_lambda_star_), sq(dd_lambda_star_, dd_lambda_)),
            add(add(with_targets(compose(d_star_, compose(d_lambda_, compose(d_lambda_star_, d_))), same),
                    with_targets(compose(d_lambda_star_, compose(d_, compose(d_star_, d_lambda_))), same)),
                second_order_dplus));

        const GradedOperator second_order_ddlambda =
            scale(add(sq(d_, d_star_), sq(d_lambda_, d_lambda_star_)), lambda_);
        laplacian_ddlambda_ = add(sq(dd_lambda_star_, dd_lambda_), second_order_ddlambda);
        elliptic_ddlambda_ = add(
            add(sq(dd_lambda_star_, dd_lambda_), sq(dd_lambda_, dd_lambda_star_)),
            add(add(with_targets(compose(d_, compose(d_lambda_star_, compose(d_lambda_, d_star_))), same),
                    with_targets(compose(d_lambda_, compose(d_star_, compose(d_, d_lambda_star_))), same)),
                second_order_ddlambda));
    }

    int ambient_dimension() const { return n2_; }
    const Rational& lambda() const { return lambda_; }
    const InnerProduct& inner() const { return inner_; }
    const Rational& volume_coefficient() const { return vol_coeff_; }

    const GradedOperator& d() const { return d_; }
    const GradedOperator& hodge_star() const { return star_g_; }
    const GradedOperator& symplectic_star() const { return star_s_; }
    const GradedOperator& d_lambda() const { return d_lambda_; }
    const GradedOperator& d_star() const { return d_star_; }
    const GradedOperator& d_lambda_star() const { return d_lambda_star_; }
    const GradedOperator& dd_lambda() const { return dd_lambda_; }
    const GradedOperator& dd_lambda_star() const { return dd_lambda_star_; }
    const GradedOperator& lefschetz() const { return lefschetz_; }
    const GradedOperator& dual_lefschetz() const { return dual_lefschetz_; }
    const GradedOperator& laplacian_d() const { return laplacian_d_; }
    const GradedOperator& laplacian_dplus() const { return laplacian_dplus_; }
    const GradedOperator& elliptic_dplus() const { return elliptic_dplus_; }
    const GradedOperator& laplacian_ddlambda() const { return laplacian_ddlambda_; }
    const GradedOperator& elliptic_ddlambda() const { return elliptic_ddlambda_; }
    const GradedOperator& laplacian_dlambda() const { return laplacian_dlambda_; }

    /// L^p as a single block Ω^k -> Ω^{k+2p}; zero-row when k+2p > 2n.
    Matrix lefschetz_power(int k, int p) const
    {
        Matrix m = Matrix::identity(static_cast<int>(degree_dimension(n2_, k)));
        int deg = k;
        for (int i = 0; i < p; ++i) {
            if (deg > n2_)
                break; // already in a zero space
            m = lefschetz_.block(deg) * m;
            deg += 2;
        }
        return m;
    }

private:
    static Form volume_form(const Matrix& omega_skew, int n2)
    {
        Form omega(n2);
        for (int i = 0; i < n2; ++i)
            for (int j = i + 1; j < n2; ++j)
                if (omega_skew.at(i, j) != 0)
                    omega.add_term(MultiIndex{i + 1, j + 1}, omega_skew.at(i, j));
        Form top = wedge_power(omega, n2 / 2);
        Rational nfact(1);
        for (int i = 2; i <= n2 / 2; ++i)
            nfact *= i;
        top *= Rational(1) / nfact;
        if (top.is_zero())
            throw std::invalid_argument("omega is degenerate: omega^n = 0");
        return top;
    }

    template <typename PairingFn>
    GradedOperator build_star(PairingFn pairing) const
    {
        std::vector<int> targets;
        std::vector<Matrix> blocks;
        for (int k = 0; k <= n2_; ++k) {
            const auto basis_k = degree_basis(n2_, k);
            const int dim_k = static_cast<int>(basis_k.size());
            const int dim_t = static_cast<int>(degree_dimension(n2_, n2_ - k));
            const Matrix pk = pairing(k);
            Matrix block(dim_t, dim_k);
            for (int jj = 0; jj < dim_k; ++jj)
                for (int ii = 0; ii < dim_k; ++ii) {
                    if (pk.at(ii, jj) == 0)
                        continue;
                    // e^I ∧ (*e^J) picks out the complement of I with its sign
                    const auto [comp, sign] = complement_sign(basis_k[static_cast<std::size_t>(ii)], n2_);
                    const int row = static_cast<int>(basis_rank(comp, n2_));
                    block.at(row, jj) = Rational(sign) * vol_coeff_ * pk.at(ii, jj);
                }
            targets.push_back(n2_ - k);
            blocks.push_back(std::move(block));
        }
        return GradedOperator(n2_, std::move(targets), std::move(blocks));
    }

    GradedOperator build_lefschetz(const Matrix& omega_skew) const
    {
        Form omega(n2_);
        for (int i = 0; i < n2_; ++i)
            for (int j = i + 1; j < n2_; ++j)
                if (omega_skew.at(i, j) != 0)
                    omega.add_term(MultiIndex{i + 1, j + 1}, omega_skew.at(i, j));
        return GradedOperator::from_action(
            n2_, [](int k) { return k + 2; },
            [&omega](const MultiIndex& I) { return wedge(omega, Form::basis(omega.ambient_dimension(), I)); });
    }

    GradedOperator build_dual_lefschetz(const Matrix& winv) const
    {
        // Λ = 1/2 (ω^{-1})^{ij} i_i i_j, the j-contraction applied first
        return GradedOperator::from_action(
            n2_, [](int k) { return k - 2; },
            [&](const MultiIndex& I) {
                Form out(n2_);
                const Form base = Form::basis(n2_, I);
                for (int i = 0; i < n2_; ++i)
                    for (int j = 0; j < n2_; ++j) {
                        if (winv.at(i, j) == 0)
                            continue;
                        out += contract(i + 1, contract(j + 1, base)) *
                               (winv.at(i, j) / Rational(2));
                    }
                return out;
            });
    }

    int n2_;
    Rational lambda_;
    InnerProduct inner_;
    Rational vol_coeff_;
    GradedOperator d_;
    GradedOperator star_g_;
    GradedOperator star_s_;
    GradedOperator d_lambda_;
    GradedOperator d_star_;
    GradedOperator d_lambda_star_;
    GradedOperator dd_lambda_;
    GradedOperator dd_lambda_star_;
    GradedOperator lefschetz_;
    GradedOperator dual_lefschetz_;
    GradedOperator laplacian_d_;
    GradedOperator laplacian_dplus_;
    GradedOperator elliptic_dplus_;
    GradedOperator laplacian_ddlambda_;
    GradedOperator elliptic_ddlambda_;
    GradedOperator laplacian_dlambda_;
};

} // namespace symhodge
