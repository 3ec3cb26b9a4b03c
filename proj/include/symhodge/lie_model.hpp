#pragma once

#include "symhodge/form.hpp"
#include "symhodge/graded_operator.hpp"
#include "symhodge/matrix.hpp"
#include "symhodge/rational.hpp"

#include <nlohmann/json.hpp>

#include <set>
#include <string>
#include <vector>

namespace symhodge {

/// Raised for malformed or invalid model files; the CLI maps it to the
/// validation exit code.
class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// de^k contains c · e^i ∧ e^j, with i < j.
struct StructureTerm {
    int i = 0;
    int j = 0;
    int k = 0;
    Rational c;
};

/// ω contains c · e^i ∧ e^j, with i < j.
struct OmegaTerm {
    int i = 0;
    int j = 0;
    Rational c;
};

/// Finite model: the invariant-form complex of a Lie algebra, encoded by
/// the exterior derivative on degree-1 generators. The symplectic candidate
/// ω travels with the file.
struct LieModel {
    std::string name;
    int dim = 0; // 2n
    std::vector<StructureTerm> structure;
    std::vector<OmegaTerm> omega;
    std::string comment;

    int half_dim() const { return dim / 2; }

    /// de^g as a 2-form.
    Form d1(int g) const
    {
        Form out(dim);
        for (const auto& t : structure)
            if (t.k == g)
                out.add_term(MultiIndex{t.i, t.j}, t.c);
        return out;
    }

    Form omega_form() const
    {
        Form out(dim);
        for (const auto& t : omega)
            out.add_term(MultiIndex{t.i, t.j}, t.c);
        return out;
    }
};

namespace detail {

inline void reject_unknown_keys(const nlohmann::json& obj, const std::set<std::string>& allowed,
                                const std::string& where)
{
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw ModelError("unknown key '" + it.key() + "' in " + where);
}

inline Rational coefficient_field(const nlohmann::json& rec, const std::string& where)
{
    if (!rec.contains("c") || !rec["c"].is_string())
        throw ModelError("missing or non-string coefficient 'c' in " + where);
    try {
        return parse_rational(rec["c"].get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ModelError(std::string(e.what()) + " in " + where);
    }
}

inline int index_field(const nlohmann::json& rec, const char* key, const std::string& where)
{
    if (!rec.contains(key) || !rec[key].is_number_integer())
        throw ModelError(std::string("missing or non-integer '") + key + "' in " + where);
    return rec[key].get<int>();
}

} // namespace detail

/// Parse the model-file JSON. Checks syntax, field names, and index ranges;
/// the d² and unimodularity checks live in validate()/load_model().
inline LieModel parse_model(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ModelError(std::string("model parse error: ") + e.what());
    }
    if (!j.is_object())
        throw ModelError("model file must be a JSON object");
    detail::reject_unknown_keys(j, {"name", "dim", "structure", "omega", "comment"}, "model file");

    LieModel m;
    if (!j.contains("name") || !j["name"].is_string())
        throw ModelError("missing or non-string 'name'");
    m.name = j["name"].get<std::string>();
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw ModelError("missing or non-integer 'dim'");
    m.dim = j["dim"].get<int>();
    if (m.dim < 2 || m.dim % 2 != 0)
        throw ModelError("'dim' must be an even integer >= 2");
    if (j.contains("comment")) {
        if (!j["comment"].is_string())
            throw ModelError("'comment' must be a string");
        m.comment = j["comment"].get<std::string>();
    }

    if (!j.contains("structure") || !j["structure"].is_array())
        throw ModelError("missing or non-array 'structure'");
    for (const auto& rec : j["structure"]) {
        if (!rec.is_object())
            throw ModelError("structure entries must be objects");
        detail::reject_unknown_keys(rec, {"i", "j", "k", "c"}, "structure entry");
        StructureTerm t;
        t.i = detail::index_field(rec, "i", "structure entry");
        t.j = detail::index_field(rec, "j", "structure entry");
        t.k = detail::index_field(rec, "k", "structure entry");
        t.c = detail::coefficient_field(rec, "structure entry");
        if (t.i < 1 || t.i >= t.j || t.j > m.dim)
            throw ModelError("structure entry needs 1 <= i < j <= dim");
        if (t.k < 1 || t.k > m.dim)
            throw ModelError("structure entry needs 1 <= k <= dim");
        m.structure.push_back(std::move(t));
    }

    if (!j.contains("omega") || !j["omega"].is_array())
        throw ModelError("missing or non-array 'omega'");
    for (const auto& rec : j["omega"]) {
        if (!rec.is_object())
            throw ModelError("omega entries must be objects");
        detail::reject_unknown_keys(rec, {"i", "j", "c"}, "omega entry");
        OmegaTerm t;
        t.i = detail::index_field(rec, "i", "omega entry");
        t.j = detail::index_field(rec, "j", "omega entry");
        t.c = detail::coefficient_field(rec, "omega entry");
        if (t.i < 1 || t.i >= t.j || t.j > m.dim)
            throw ModelError("omega entry needs 1 <= i < j <= dim");
        m.omega.push_back(std::move(t));
    }
    return m;
}

/// Extend d from the generators to every degree as an antiderivation:
/// d(e^{i_1..i_k}) = Σ_t (-1)^{t-1} e^{i_1..} ∧ de^{i_t} ∧ ..e^{i_k}.
inline GradedOperator exterior_derivative(const LieModel& m)
{
    const int n2 = m.dim;
    std::vector<Form> gen(static_cast<std::size_t>(n2 + 1), Form(n2));
    for (int g = 1; g <= n2; ++g)
        gen[static_cast<std::size_t>(g)] = m.d1(g);
    return GradedOperator::from_action(
        n2, [](int k) { return k + 1; },
        [&](const MultiIndex& I) {
            Form out(n2);
            const auto& v = I.indices();
            for (std::size_t t = 0; t < v.size(); ++t) {
                std::vector<int> prefix(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(t));
                std::vector<int> suffix(v.begin() + static_cast<std::ptrdiff_t>(t) + 1, v.end());
                Form piece = wedge(Form::basis(n2, MultiIndex(std::move(prefix))),
                                   wedge(gen[static_cast<std::size_t>(v[t])],
                                         Form::basis(n2, MultiIndex(std::move(suffix)))));
                out += (t % 2 == 0) ? piece : piece * Rational(-1);
            }
            return out;
        });
}

struct ValidationReport {
    std::string model;
    std::vector<bool> d_squared_zero;   // indexed by source degree k = 0..2n
    bool unimodular = false;            // d vanishes on degree 2n-1
    std::vector<std::int64_t> degree_dims;

    bool ok() const
    {
        if (!unimodular)
            return false;
        for (bool b : d_squared_zero)
            if (!b)
                return false;
        return true;
    }

    std::string summary() const
    {
        std::string s;
        for (std::size_t k = 0; k < d_squared_zero.size(); ++k)
            if (!d_squared_zero[k])
                s += "d^2 != 0 on degree " + std::to_string(k) + "; ";
        if (!unimodular)
            s += "not unimodular (d does not vanish on degree 2n-1); ";
        if (s.empty())
            s = "all checks passed";
        return s;
    }
};

inline ValidationReport validate(const LieModel& m)
{
    const GradedOperator d = exterior_derivative(m);
    ValidationReport rep;
    rep.model = m.name;
    const GradedOperator dd = compose(d, d);
    for (int k = 0; k <= m.dim; ++k) {
        rep.d_squared_zero.push_back(dd.block(k).is_zero());
        rep.degree_dims.push_back(degree_dimension(m.dim, k));
    }
    rep.unimodular = d.block(m.dim - 1).is_zero();
    return rep;
}

/// Parse plus full validation; throws ModelError on any failure.
inline LieModel load_model(const std::string& text)
{
    LieModel m = parse_model(text);
    const ValidationReport rep = validate(m);
    if (!rep.ok())
        throw ModelError("invalid model '" + m.name + "': " + rep.summary());
    return m;
}

} // namespace symhodge
