#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace symhodge {

/// Strictly increasing tuple of indices in 1..2n; the empty tuple is the
/// degree-0 basis element. Ordering is (degree, lexicographic) so sorted
/// containers group entries by degree.
class MultiIndex {
public:
    MultiIndex() = default;

    explicit MultiIndex(std::vector<int> indices) : idx_(std::move(indices))
    {
        if (!std::is_sorted(idx_.begin(), idx_.end(), std::less_equal<int>()))
            throw std::invalid_argument("multi-index must be strictly increasing");
    }

    MultiIndex(std::initializer_list<int> indices) : MultiIndex(std::vector<int>(indices)) {}

    int degree() const { return static_cast<int>(idx_.size()); }
    const std::vector<int>& indices() const { return idx_; }
    bool contains(int i) const { return std::binary_search(idx_.begin(), idx_.end(), i); }
    bool valid_for(int n2) const
    {
        return idx_.empty() || (idx_.front() >= 1 && idx_.back() <= n2);
    }

    /// Position of index i within the tuple, or -1.
    int position_of(int i) const
    {
        auto it = std::lower_bound(idx_.begin(), idx_.end(), i);
        if (it == idx_.end() || *it != i)
            return -1;
        return static_cast<int>(it - idx_.begin());
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) = default;

    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b)
    {
        if (a.degree() != b.degree())
            return a.degree() <=> b.degree();
        return a.idx_ <=> b.idx_;
    }

private:
    std::vector<int> idx_;
};

/// C(n, k) in 64 bits; plenty for the desk-scale dimensions used here.
inline std::int64_t binomial(int n, int k)
{
    if (k < 0 || k > n || n < 0)
        return 0;
    if (k > n - k)
        k = n - k;
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

inline std::int64_t degree_dimension(int n2, int k) { return binomial(n2, k); }

/// All degree-k multi-indices on 1..n2, in lexicographic order.
inline std::vector<MultiIndex> degree_basis(int n2, int k)
{
    std::vector<MultiIndex> out;
    if (k < 0 || k > n2)
        return out;
    out.reserve(static_cast<std::size_t>(binomial(n2, k)));
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i)
        cur[i] = i + 1;
    while (true) {
        out.emplace_back(cur);
        int t = k - 1;
        while (t >= 0 && cur[t] == n2 - (k - 1 - t))
            --t;
        if (t < 0)
            break;
        ++cur[t];
        for (int s = t + 1; s < k; ++s)
            cur[s] = cur[s - 1] + 1;
    }
    return out;
}

/// Rank of I within the lexicographic degree-k basis.
inline std::int64_t basis_rank(const MultiIndex& I, int n2)
{
    const auto& v = I.indices();
    const int k = I.degree();
    std::int64_t rank = 0;
    int prev = 0;
    for (int t = 0; t < k; ++t) {
        for (int j = prev + 1; j < v[t]; ++j)
            rank += binomial(n2 - j, k - t - 1);
        prev = v[t];
    }
    return rank;
}

/// Complement K of I in {1..n2} together with the sign s such that
/// e^I ∧ e^K = s · e^{1..n2}. Sign is the parity of the concatenation
/// (I, K) as a permutation of (1..n2), counted by inversions.
inline std::pair<MultiIndex, int> complement_sign(const MultiIndex& I, int n2)
{
    if (!I.valid_for(n2))
        throw std::invalid_argument("multi-index out of range for dimension");
    std::vector<int> comp;
    comp.reserve(n2 - I.degree());
    for (int i = 1; i <= n2; ++i)
        if (!I.contains(i))
            comp.push_back(i);
    // inversions between the I block and the K block; both blocks are sorted
    std::int64_t inversions = 0;
    for (int a : I.indices())
        for (int b : comp)
            if (a > b)
                ++inversions;
    return {MultiIndex(std::move(comp)), (inversions % 2 == 0) ? +1 : -1};
}

} // namespace symhodge
