#pragma once

#include "symhodge/multi_index.hpp"
#include "symhodge/rational.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace symhodge {

/// Invariant form with exact rational coefficients on the multi-index basis.
/// Sparse: zero coefficients are pruned eagerly, so `terms().empty()` means
/// the zero form. Immutable in spirit; mutating helpers are private to the
/// arithmetic below.
class Form {
public:
    using TermMap = std::map<MultiIndex, Rational>;

    explicit Form(int n2) : n2_(n2)
    {
        if (n2 < 0)
            throw std::invalid_argument("negative ambient dimension");
    }

    static Form zero(int n2) { return Form(n2); }

    static Form basis(int n2, MultiIndex I, Rational c = Rational(1))
    {
        Form f(n2);
        f.add_term(std::move(I), std::move(c));
        return f;
    }

    static Form constant(int n2, Rational c) { return basis(n2, MultiIndex{}, std::move(c)); }

    int ambient_dimension() const { return n2_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const MultiIndex& I) const
    {
        auto it = terms_.find(I);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Degree when the form is pure (zero counts as pure of any degree).
    std::optional<int> pure_degree() const
    {
        if (terms_.empty())
            return std::nullopt;
        const int k = terms_.begin()->first.degree();
        if (terms_.rbegin()->first.degree() != k)
            return std::nullopt;
        return k;
    }

    bool is_pure_degree(int k) const
    {
        return terms_.empty() || pure_degree() == std::optional<int>(k);
    }

    void add_term(MultiIndex I, Rational c)
    {
        if (!I.valid_for(n2_))
            throw std::invalid_argument("multi-index out of range for form dimension");
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(std::move(I), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Form& operator+=(const Form& other)
    {
        check_same_dim(other);
        for (const auto& [I, c] : other.terms_)
            add_term(I, c);
        return *this;
    }

    Form& operator-=(const Form& other)
    {
        check_same_dim(other);
        for (const auto& [I, c] : other.terms_)
            add_term(I, -c);
        return *this;
    }

    Form& operator*=(const Rational& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [I, c] : terms_)
            c *= s;
        return *this;
    }

    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(Form a, const Rational& s) { return a *= s; }
    friend Form operator*(const Rational& s, Form a) { return a *= s; }
    friend bool operator==(const Form& a, const Form& b) = default;

private:
    void check_same_dim(const Form& other) const
    {
        if (n2_ != other.n2_)
            throw std::invalid_argument("ambient dimension mismatch");
    }

    int n2_ = 0;
    TermMap terms_;
};

/// Sign and merged index of e^I ∧ e^J, or nullopt when an index repeats.
inline std::optional<std::pair<MultiIndex, int>> merge_indices(const MultiIndex& I,
                                                               const MultiIndex& J)
{
    const auto& a = I.indices();
    const auto& b = J.indices();
    std::vector<int> merged;
    merged.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    std::int64_t inversions = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j])
            return std::nullopt;
        if (a[i] < b[j]) {
            merged.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining entries of a
            inversions += static_cast<std::int64_t>(a.size() - i);
            merged.push_back(b[j++]);
        }
    }
    while (i < a.size())
        merged.push_back(a[i++]);
    while (j < b.size())
        merged.push_back(b[j++]);
    return std::make_pair(MultiIndex(std::move(merged)), (inversions % 2 == 0) ? +1 : -1);
}

inline Form wedge(const Form& a, const Form& b)
{
    if (a.ambient_dimension() != b.ambient_dimension())
        throw std::invalid_argument("wedge: ambient dimension mismatch");
    Form out(a.ambient_dimension());
    for (const auto& [I, ca] : a.terms())
        for (const auto& [J, cb] : b.terms())
            if (auto m = merge_indices(I, J))
                out.add_term(m->first, ca * cb * m->second);
    return out;
}

/// Interior product with the basis vector e_{v_index}; antiderivation of
/// degree -1. i_{e_v} e^I = (-1)^pos e^{I \ v} with pos the 0-based slot of
/// v inside I.
inline Form contract(int v_index, const Form& a)
{
    if (v_index < 1 || v_index > a.ambient_dimension())
        throw std::invalid_argument("contract: vector index out of range");
    Form out(a.ambient_dimension());
    for (const auto& [I, c] : a.terms()) {
        const int pos = I.position_of(v_index);
        if (pos < 0)
            continue;
        std::vector<int> rest;
        rest.reserve(I.indices().size() - 1);
        for (int x : I.indices())
            if (x != v_index)
                rest.push_back(x);
        out.add_term(MultiIndex(std::move(rest)), (pos % 2 == 0) ? c : -c);
    }
    return out;
}

inline Form wedge_power(const Form& a, int p)
{
    Form out = Form::constant(a.ambient_dimension(), Rational(1));
    for (int i = 0; i < p; ++i)
        out = wedge(out, a);
    return out;
}

/// Render like "e1^e3 - 2 e2^e4"; degree-0 terms print as bare scalars.
inline std::string form_str(const Form& f)
{
    if (f.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [I, c] : f.terms()) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        std::string basis;
        for (std::size_t t = 0; t < I.indices().size(); ++t) {
            if (t)
                basis += "^";
            basis += "e" + std::to_string(I.indices()[t]);
        }
        if (basis.empty())
            os << rational_str(mag);
        else if (mag == 1)
            os << basis;
        else
            os << rational_str(mag) << " " << basis;
    }
    return os.str();
}

} // namespace symhodge
