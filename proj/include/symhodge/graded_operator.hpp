#pragma once

#include "symhodge/form.hpp"
#include "symhodge/matrix.hpp"
#include "symhodge/multi_index.hpp"

#include <functional>
#include <vector>

namespace symhodge {

/// Coefficient vector of the degree-k part of a form, in the lexicographic
/// degree-k basis.
inline VecQ form_to_vector(const Form& f, int k)
{
    const int n2 = f.ambient_dimension();
    VecQ v(static_cast<std::size_t>(degree_dimension(n2, k)), Rational(0));
    for (const auto& [I, c] : f.terms())
        if (I.degree() == k)
            v[static_cast<std::size_t>(basis_rank(I, n2))] = c;
    return v;
}

inline Form vector_to_form(const VecQ& v, int n2, int k)
{
    const auto basis = degree_basis(n2, k);
    if (v.size() != basis.size())
        throw std::invalid_argument("coefficient vector length mismatch");
    Form f(n2);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (v[i] != 0)
            f.add_term(basis[i], v[i]);
    return f;
}

/// One exact matrix per source degree k = 0..2n, acting on the lexicographic
/// bases. The target degree of each block is explicit; degrees outside
/// [0, 2n] are zero-dimensional, so edge blocks simply have 0 rows.
class GradedOperator {
public:
    GradedOperator() = default;

    GradedOperator(int n2, std::vector<int> targets, std::vector<Matrix> blocks)
        : n2_(n2), targets_(std::move(targets)), blocks_(std::move(blocks))
    {
        if (targets_.size() != static_cast<std::size_t>(n2_ + 1) || blocks_.size() != targets_.size())
            throw std::invalid_argument("graded operator needs one block per degree 0..2n");
        for (int k = 0; k <= n2_; ++k) {
            const auto& b = blocks_[static_cast<std::size_t>(k)];
            if (b.cols() != degree_dimension(n2_, k) || b.rows() != degree_dimension(n2_, targets_[static_cast<std::size_t>(k)]))
                throw std::invalid_argument("graded operator block shape mismatch");
        }
    }

    /// Assemble from a map on basis forms. target(k) may leave [0, 2n]; the
    /// block is then an empty matrix.
    static GradedOperator from_action(int n2, const std::function<int(int)>& target,
                                      const std::function<Form(const MultiIndex&)>& action)
    {
        std::vector<int> targets(static_cast<std::size_t>(n2 + 1));
        std::vector<Matrix> blocks(static_cast<std::size_t>(n2 + 1));
        for (int k = 0; k <= n2; ++k) {
            const int tk = target(k);
            targets[static_cast<std::size_t>(k)] = tk;
            const auto basis = degree_basis(n2, k);
            Matrix m(static_cast<int>(degree_dimension(n2, tk)), static_cast<int>(basis.size()));
            for (std::size_t j = 0; j < basis.size(); ++j) {
                const Form image = action(basis[j]);
                if (image.is_zero())
                    continue;
                if (!image.is_pure_degree(tk))
                    throw std::logic_error("graded action produced mixed degrees");
                const VecQ col = form_to_vector(image, tk);
                for (int i = 0; i < m.rows(); ++i)
                    m.at(i, static_cast<int>(j)) = col[static_cast<std::size_t>(i)];
            }
            blocks[static_cast<std::size_t>(k)] = std::move(m);
        }
        return GradedOperator(n2, std::move(targets), std::move(blocks));
    }

    static GradedOperator zero(int n2, const std::function<int(int)>& target)
    {
        return from_action(n2, target, [n2](const MultiIndex&) { return Form::zero(n2); });
    }

    int ambient_dimension() const { return n2_; }
    int target_degree(int k) const { return targets_.at(static_cast<std::size_t>(k)); }
    const Matrix& block(int k) const { return blocks_.at(static_cast<std::size_t>(k)); }

    Form apply(const Form& f) const
    {
        Form out(n2_);
        for (int k = 0; k <= n2_; ++k) {
            const VecQ v = form_to_vector(f, k);
            if (vec_is_zero(v))
                continue;
            const int tk = target_degree(k);
            if (tk < 0 || tk > n2_)
                continue;
            out += vector_to_form(block(k) * v, n2_, tk);
        }
        return out;
    }

    bool is_zero() const
    {
        for (const auto& b : blocks_)
            if (!b.is_zero())
                return false;
        return true;
    }

    friend bool operator==(const GradedOperator& a, const GradedOperator& b) = default;

private:
    int n2_ = 0;
    std::vector<int> targets_;
    std::vector<Matrix> blocks_;
};

/// (a ∘ b), degree-chained: block k is a.block(target_b(k)) · b.block(k).
inline GradedOperator compose(const GradedOperator& a, const GradedOperator& b)
{
    const int n2 = a.ambient_dimension();
    if (n2 != b.ambient_dimension())
        throw std::invalid_argument("compose: ambient dimension mismatch");
    std::vector<int> targets;
    std::vector<Matrix> blocks;
    for (int k = 0; k <= n2; ++k) {
        const int mid = b.target_degree(k);
        if (mid < 0 || mid > n2) {
            // b lands in a zero-dimensional space; record the empty block
            targets.push_back(mid);
            blocks.emplace_back(0, static_cast<int>(degree_dimension(n2, k)));
            continue;
        }
        targets.push_back(a.target_degree(mid));
        blocks.push_back(a.block(mid) * b.block(k));
    }
    return GradedOperator(n2, std::move(targets), std::move(blocks));
}

inline GradedOperator scale(GradedOperator op, const Rational& s)
{
    std::vector<int> targets;
    std::vector<Matrix> blocks;
    const int n2 = op.ambient_dimension();
    for (int k = 0; k <= n2; ++k) {
        targets.push_back(op.target_degree(k));
        blocks.push_back(op.block(k) * s);
    }
    return GradedOperator(n2, std::move(targets), std::move(blocks));
}

/// Per-degree sign twist s(k) applied at the source degree.
inline GradedOperator degree_sign(GradedOperator op, const std::function<int(int)>& sign)
{
    std::vector<int> targets;
    std::vector<Matrix> blocks;
    const int n2 = op.ambient_dimension();
    for (int k = 0; k <= n2; ++k) {
        targets.push_back(op.target_degree(k));
        blocks.push_back(op.block(k) * Rational(sign(k)));
    }
    return GradedOperator(n2, std::move(targets), std::move(blocks));
}

/// Reshape to the declared target map. Blocks whose recorded target
/// disagrees must be zero (composites through a zero-dimensional edge
/// degree); they become zero matrices of the declared shape.
inline GradedOperator with_targets(const GradedOperator& op, const std::function<int(int)>& target)
{
    const int n2 = op.ambient_dimension();
    std::vector<int> targets;
    std::vector<Matrix> blocks;
    for (int k = 0; k <= n2; ++k) {
        const int tk = target(k);
        targets.push_back(tk);
        if (op.target_degree(k) == tk) {
            blocks.push_back(op.block(k));
            continue;
        }
        if (!op.block(k).is_zero())
            throw std::logic_error("with_targets: nonzero block with mismatched target");
        blocks.emplace_back(static_cast<int>(degree_dimension(n2, tk)),
                            static_cast<int>(degree_dimension(n2, k)));
    }
    return GradedOperator(n2, std::move(targets), std::move(blocks));
}

inline GradedOperator add(const GradedOperator& a, const GradedOperator& b)
{
    const int n2 = a.ambient_dimension();
    if (n2 != b.ambient_dimension())
        throw std::invalid_argument("add: ambient dimension mismatch");
    std::vector<int> targets;
    std::vector<Matrix> blocks;
    for (int k = 0; k <= n2; ++k) {
        if (a.target_degree(k) != b.target_degree(k))
            throw std::invalid_argument("add: target degree mismatch");
        targets.push_back(a.target_degree(k));
        blocks.push_back(a.block(k) + b.block(k));
    }
    return GradedOperator(n2, std::move(targets), std::move(blocks));
}

inline GradedOperator subtract(const GradedOperator& a, const GradedOperator& b)
{
    return add(a, scale(b, Rational(-1)));
}

} // namespace symhodge
