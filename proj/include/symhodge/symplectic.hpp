#pragma once

#include "symhodge/form.hpp"
#include "symhodge/graded_operator.hpp"
#include "symhodge/lie_model.hpp"
#include "symhodge/matrix.hpp"

#include <utility>
#include <vector>

namespace symhodge {

/// Skew pairing matrix W with W[i][j] = ω(e_{i+1}, e_{j+1}).
inline Matrix omega_skew_matrix(const Form& omega, int n2)
{
    Matrix w(n2, n2);
    for (const auto& [I, c] : omega.terms()) {
        if (I.degree() != 2)
            throw std::invalid_argument("omega must be a pure 2-form");
        const int i = I.indices()[0] - 1;
        const int j = I.indices()[1] - 1;
        w.at(i, j) = c;
        w.at(j, i) = -c;
    }
    return w;
}

struct SymplecticVerdict {
    Form d_omega;
    Form top_power; // ω^n
    bool closed() const { return d_omega.is_zero(); }
    bool nondegenerate() const { return !top_power.is_zero(); }
    bool ok() const { return closed() && nondegenerate(); }
};

inline SymplecticVerdict validate_symplectic(const LieModel& model, const Form& omega)
{
    const GradedOperator d = exterior_derivative(model);
    return SymplecticVerdict{d.apply(omega), wedge_power(omega, model.half_dim())};
}

inline SymplecticVerdict validate_symplectic(const LieModel& model)
{
    return validate_symplectic(model, model.omega_form());
}

/// Λ^k M: entry (I, J) = det M[I, J] (rows I, cols J of M), in the
/// lexicographic degree-k bases.
inline Matrix induced_power(const Matrix& m, int k)
{
    const int n2 = m.rows();
    if (m.cols() != n2)
        throw std::invalid_argument("induced_power: matrix not square");
    const auto basis = degree_basis(n2, k);
    Matrix out(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
    for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t c = 0; c < basis.size(); ++c) {
            Matrix sub(k, k);
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b)
                    sub.at(a, b) = m.at(basis[r].indices()[a] - 1, basis[c].indices()[b] - 1);
            out.at(static_cast<int>(r), static_cast<int>(c)) = determinant(sub);
        }
    return out;
}

enum class PivotOrder { Lexicographic, Reverse };

/// Rational symplectic frame with the canonical compatible structures:
/// in the Darboux basis ω = Σ f^{2i-1} ∧ f^{2i}, the metric Gram matrix is
/// the identity, and J is the standard block map f_{2i-1} ↦ f_{2i}.
/// P's columns are the frame vectors in the original basis; Q = P^{-1}.
class CompatibleTriple {
public:
    CompatibleTriple(int n2, Matrix p, Matrix q)
        : n2_(n2), p_(std::move(p)), q_(std::move(q)), metric_(Matrix::identity(n2)),
          j_(n2, n2), w_std_(n2, n2)
    {
        for (int i = 0; i < n2 / 2; ++i) {
            j_.at(2 * i + 1, 2 * i) = 1;
            j_.at(2 * i, 2 * i + 1) = -1;
            w_std_.at(2 * i, 2 * i + 1) = 1;
            w_std_.at(2 * i + 1, 2 * i) = -1;
        }
    }

    int ambient_dimension() const { return n2_; }
    const Matrix& basis_change() const { return p_; }
    const Matrix& basis_change_inverse() const { return q_; }
    const Matrix& metric_gram() const { return metric_; }
    const Matrix& complex_structure() const { return j_; }
    const Matrix& omega_darboux_skew() const { return w_std_; }

    Form omega_darboux() const
    {
        Form f(n2_);
        for (int i = 1; i <= n2_ / 2; ++i)
            f.add_term(MultiIndex{2 * i - 1, 2 * i}, Rational(1));
        return f;
    }

    /// Coefficient change for degree-k forms, original basis -> Darboux.
    Matrix to_darboux(int k) const { return induced_power(p_, k).transposed(); }
    /// Coefficient change for degree-k forms, Darboux -> original basis.
    Matrix from_darboux(int k) const { return induced_power(q_, k).transposed(); }

private:
    int n2_;
    Matrix p_;
    Matrix q_;
    Matrix metric_;
    Matrix j_;
    Matrix w_std_;
};

/// Skew Gram–Schmidt over the rationals. Pivots on the first remaining
/// pair with nonzero pairing (lexicographic by construction order; Reverse
/// exists to exercise basis independence in tests).
inline CompatibleTriple darboux_basis(const Matrix& w, PivotOrder order = PivotOrder::Lexicographic)
{
    const int n2 = w.rows();
    if (w.cols() != n2 || n2 % 2 != 0)
        throw std::invalid_argument("darboux_basis: skew matrix must be even-dimensional");
    auto pairing = [&w](const VecQ& u, const VecQ& v) {
        Rational s(0);
        for (int i = 0; i < static_cast<int>(u.size()); ++i) {
            if (u[static_cast<std::size_t>(i)] == 0)
                continue;
            for (int j = 0; j < static_cast<int>(v.size()); ++j)
                if (w.at(i, j) != 0)
                    s += u[static_cast<std::size_t>(i)] * w.at(i, j) * v[static_cast<std::size_t>(j)];
        }
        return s;
    };

    std::vector<VecQ> remaining;
    for (int i = 0; i < n2; ++i) {
        VecQ e(static_cast<std::size_t>(n2), Rational(0));
        e[static_cast<std::size_t>(i)] = 1;
        remaining.push_back(std::move(e));
    }

    std::vector<VecQ> frame;
    while (!remaining.empty()) {
        int pa = -1, pb = -1;
        const int m = static_cast<int>(remaining.size());
        if (order == PivotOrder::Lexicographic) {
            for (int a = 0; a < m && pa < 0; ++a)
                for (int b = a + 1; b < m; ++b)
                    if (pairing(remaining[static_cast<std::size_t>(a)], remaining[static_cast<std::size_t>(b)]) != 0) {
                        pa = a;
                        pb = b;
                        break;
                    }
        } else {
            for (int a = m - 1; a >= 0 && pa < 0; --a)
                for (int b = m - 1; b > a; --b)
                    if (pairing(remaining[static_cast<std::size_t>(a)], remaining[static_cast<std::size_t>(b)]) != 0) {
                        pa = a;
                        pb = b;
                        break;
                    }
        }
        if (pa < 0)
            throw std::invalid_argument("darboux_basis: degenerate skew form");

        VecQ f1 = remaining[static_cast<std::size_t>(pa)];
        VecQ f2 = remaining[static_cast<std::size_t>(pb)];
        const Rational pv = pairing(f1, f2);
        for (auto& x : f2)
            x /= pv;
        // u' = u + ω(u, f1)·f2 − ω(u, f2)·f1 kills both pairings
        std::vector<VecQ> next;
        for (int t = 0; t < m; ++t) {
            if (t == pa || t == pb)
                continue;
            VecQ u = remaining[static_cast<std::size_t>(t)];
            const Rational c1 = pairing(u, f1);
            const Rational c2 = pairing(u, f2);
            for (int i = 0; i < n2; ++i)
                u[static_cast<std::size_t>(i)] += c1 * f2[static_cast<std::size_t>(i)] - c2 * f1[static_cast<std::size_t>(i)];
            next.push_back(std::move(u));
        }
        frame.push_back(std::move(f1));
        frame.push_back(std::move(f2));
        remaining = std::move(next);
    }

    Matrix p = from_columns(n2, frame);
    auto q = inverse(p);
    if (!q)
        throw std::logic_error("darboux_basis: frame not invertible");

    // the frame must bring ω to the standard block form, exactly
    Matrix check = p.transposed() * w * p;
    Matrix w_std(n2, n2);
    for (int i = 0; i < n2 / 2; ++i) {
        w_std.at(2 * i, 2 * i + 1) = 1;
        w_std.at(2 * i + 1, 2 * i) = -1;
    }
    if (check != w_std)
        throw std::logic_error("darboux_basis: frame does not standardize omega");

    return CompatibleTriple(n2, std::move(p), std::move(*q));
}

/// Conjugate each degree-k block by the coefficient maps induced by the
/// basis change P (columns = new frame vectors in old coordinates).
inline GradedOperator push_forward(const GradedOperator& op, const Matrix& p)
{
    const int n2 = op.ambient_dimension();
    if (p.rows() != n2 || p.cols() != n2)
        throw std::invalid_argument("push_forward: shape mismatch");
    const auto q = inverse(p);
    if (!q)
        throw std::invalid_argument("push_forward: basis change not invertible");
    std::vector<int> targets;
    std::vector<Matrix> blocks;
    for (int k = 0; k <= n2; ++k) {
        const int tk = op.target_degree(k);
        targets.push_back(tk);
        if (tk < 0 || tk > n2) {
            blocks.push_back(op.block(k) * induced_power(*q, k).transposed());
            continue;
        }
        blocks.push_back(induced_power(p, tk).transposed() * op.block(k) *
                         induced_power(*q, k).transposed());
    }
    return GradedOperator(n2, std::move(targets), std::move(blocks));
}

} // namespace symhodge
