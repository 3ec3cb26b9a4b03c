#pragma once

#include "symhodge/cohomology.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace symhodge {

struct AuditEntry {
    std::string name;
    int degree = -1; // -1 for model-wide entries
    bool pass = false;
    std::string detail;
};

struct RenderedWitness {
    int degree = 0;
    std::string form; // rendered in the model's own basis
};

/// Full per-model report. Payload is deterministic: exact arithmetic, fixed
/// orderings, no timestamps.
struct CohomologyReport {
    std::string model_name;
    Rational lambda;
    int dim = 0;
    std::vector<std::int64_t> betti_dr;
    std::vector<std::int64_t> betti_dplus;
    std::vector<std::int64_t> betti_ddlambda;
    std::int64_t chi = 0;
    std::int64_t chi_s1 = 0;
    std::int64_t chi_s2 = 0;
    bool hlp_holds = false;
    std::optional<RenderedWitness> hlp_witness;
    bool mathieu_holds = false;
    std::optional<RenderedWitness> mathieu_witness;
    std::vector<AuditEntry> audits;

    bool all_audits_pass() const
    {
        for (const auto& a : audits)
            if (!a.pass)
                return false;
        return true;
    }
};

namespace detail {

inline std::int64_t alternating_sum(const std::vector<std::int64_t>& dims)
{
    std::int64_t s = 0;
    for (std::size_t k = 0; k < dims.size(); ++k)
        s += (k % 2 == 0) ? dims[k] : -dims[k];
    return s;
}

inline RenderedWitness render_witness(const AnalysisContext& ctx, const ClassWitness& w)
{
    const VecQ original = ctx.triple.from_darboux(w.degree) * w.coeffs;
    return RenderedWitness{w.degree, form_str(vector_to_form(original, ctx.dim(), w.degree))};
}

} // namespace detail

/// Assemble the report: Betti vectors for the three flavors, Euler numbers,
/// Lefschetz/Mathieu verdicts with witnesses, and the audit battery.
inline CohomologyReport euler_report(const AnalysisContext& ctx)
{
    const int n2 = ctx.dim();
    CohomologyReport rep;
    rep.model_name = ctx.model.name;
    rep.lambda = ctx.ops.lambda();
    rep.dim = n2;

    std::vector<CohomologySpace> dr, dp, dd;
    for (int k = 0; k <= n2; ++k) {
        dr.push_back(de_rham(ctx, k));
        dp.push_back(h_dplus(ctx, k));
        dd.push_back(h_ddlambda(ctx, k));
        rep.betti_dr.push_back(dr.back().dimension);
        rep.betti_dplus.push_back(dp.back().dimension);
        rep.betti_ddlambda.push_back(dd.back().dimension);
    }
    rep.chi = detail::alternating_sum(rep.betti_dr);
    rep.chi_s1 = detail::alternating_sum(rep.betti_dplus);
    rep.chi_s2 = detail::alternating_sum(rep.betti_ddlambda);

    const HardLefschetzVerdict hlp = hard_lefschetz(ctx);
    rep.hlp_holds = hlp.holds;
    if (hlp.witness)
        rep.hlp_witness = detail::render_witness(ctx, *hlp.witness);
    const MathieuVerdict mathieu = mathieu_check(ctx);
    rep.mathieu_holds = mathieu.holds;
    if (mathieu.witness)
        rep.mathieu_witness = detail::render_witness(ctx, *mathieu.witness);

    for (int k = 0; k <= n2; ++k) {
        auto dim_detail = [](const CohomologySpace& s) {
            return "quotient=" + std::to_string(s.dimension) +
                   " harmonic=" + std::to_string(s.harmonic.size());
        };
        rep.audits.push_back({"quotient_vs_harmonic_dR", k, dr[static_cast<std::size_t>(k)].dims_agree,
                              dim_detail(dr[static_cast<std::size_t>(k)])});
        rep.audits.push_back({"quotient_vs_harmonic_dplus", k, dp[static_cast<std::size_t>(k)].dims_agree,
                              dim_detail(dp[static_cast<std::size_t>(k)])});
        rep.audits.push_back({"quotient_vs_harmonic_ddlambda", k,
                              dd[static_cast<std::size_t>(k)].dims_agree,
                              dim_detail(dd[static_cast<std::size_t>(k)])});
    }

    for (int k = 0; k <= n2; ++k)
        for (const auto& record : decomposition_audit(ctx, k))
            rep.audits.push_back({"decomposition_" + record.name, k, record.pass(),
                                  std::to_string(record.dim_harmonic) + "+" +
                                      std::to_string(record.dim_second) + "+" +
                                      std::to_string(record.dim_third) + "=C(2n,k)"});

    for (int k = 0; k <= ctx.half_dim(); ++k)
        for (const auto& record : lefschetz_audit(ctx, k))
            rep.audits.push_back({std::string("lefschetz_iso_") + flavor_name(record.flavor), k,
                                  record.pass(), ""});

    for (int k = 0; k <= n2; ++k) {
        const StarDualityRecord record = star_duality_audit(ctx, k);
        rep.audits.push_back({"star_duality", k, record.pass(), ""});
        rep.audits.push_back({"betti_duality", k,
                              rep.betti_ddlambda[static_cast<std::size_t>(k)] ==
                                  rep.betti_dplus[static_cast<std::size_t>(n2 - k)],
                              ""});
    }

    rep.audits.push_back({"hlp_equals_mathieu", -1, rep.hlp_holds == rep.mathieu_holds, ""});

    if (rep.hlp_holds) {
        bool ok = rep.chi == rep.chi_s1 && rep.chi == rep.chi_s2;
        for (int k = 0; k <= n2; ++k)
            ok = ok && rep.betti_dplus[static_cast<std::size_t>(k)] == rep.betti_dr[static_cast<std::size_t>(k)] &&
                 rep.betti_ddlambda[static_cast<std::size_t>(n2 - k)] == rep.betti_dr[static_cast<std::size_t>(k)];
        rep.audits.push_back({"hlp_betti_euler_consequences", -1, ok, ""});
    }

    return rep;
}

inline nlohmann::ordered_json report_to_json(const CohomologyReport& rep)
{
    nlohmann::ordered_json j;
    j["model"] = rep.model_name;
    j["lambda"] = rational_str(rep.lambda);
    j["dims"] = {{"dR", rep.betti_dr}, {"dplus", rep.betti_dplus}, {"ddlambda", rep.betti_ddlambda}};
    j["euler"] = {{"chi", rep.chi}, {"chi_s1", rep.chi_s1}, {"chi_s2", rep.chi_s2}};
    j["hlp"]["holds"] = rep.hlp_holds;
    if (rep.hlp_witness)
        j["hlp"]["witness"] = {{"degree", rep.hlp_witness->degree}, {"form", rep.hlp_witness->form}};
    j["mathieu"]["holds"] = rep.mathieu_holds;
    if (rep.mathieu_witness)
        j["mathieu"]["witness"] = {{"degree", rep.mathieu_witness->degree},
                                   {"form", rep.mathieu_witness->form}};
    j["audits"] = nlohmann::ordered_json::array();
    for (const auto& a : rep.audits) {
        nlohmann::ordered_json e;
        e["name"] = a.name;
        if (a.degree >= 0)
            e["degree"] = a.degree;
        e["pass"] = a.pass;
        if (!a.detail.empty())
            e["detail"] = a.detail;
        j["audits"].push_back(std::move(e));
    }
    return j;
}

inline std::string report_to_json_string(const CohomologyReport& rep)
{
    return report_to_json(rep).dump(2) + "\n";
}

inline std::string report_to_markdown(const CohomologyReport& rep)
{
    std::ostringstream os;
    os << "# Invariant-complex cohomology of `" << rep.model_name << "`\n\n";
    os << "- dimension: " << rep.dim << "\n";
    os << "- lambda: " << rational_str(rep.lambda) << "\n\n";
    os << "| k |";
    for (int k = 0; k <= rep.dim; ++k)
        os << " " << k << " |";
    os << "\n|---|";
    for (int k = 0; k <= rep.dim; ++k)
        os << "---|";
    os << "\n| b_k |";
    for (auto v : rep.betti_dr)
        os << " " << v << " |";
    os << "\n| beta^{s,1}_k |";
    for (auto v : rep.betti_dplus)
        os << " " << v << " |";
    os << "\n| beta^{s,2}_k |";
    for (auto v : rep.betti_ddlambda)
        os << " " << v << " |";
    os << "\n\n";
    os << "- chi = " << rep.chi << ", chi_s1 = " << rep.chi_s1 << ", chi_s2 = " << rep.chi_s2 << "\n";
    os << "- hard Lefschetz: " << (rep.hlp_holds ? "holds" : "fails");
    if (rep.hlp_witness)
        os << " (witness class, degree " << rep.hlp_witness->degree << ": `" << rep.hlp_witness->form
           << "`)";
    os << "\n";
    os << "- Mathieu (harmonic representatives in every class): "
       << (rep.mathieu_holds ? "holds" : "fails");
    if (rep.mathieu_witness)
        os << " (witness class, degree " << rep.mathieu_witness->degree << ": `"
           << rep.mathieu_witness->form << "`)";
    os << "\n\n";
    std::size_t passed = 0;
    for (const auto& a : rep.audits)
        if (a.pass)
            ++passed;
    os << "## Audits: " << passed << "/" << rep.audits.size() << " passed\n\n";
    for (const auto& a : rep.audits) {
        os << "- " << (a.pass ? "PASS" : "FAIL") << " " << a.name;
        if (a.degree >= 0)
            os << " (degree " << a.degree << ")";
        if (!a.detail.empty())
            os << ": " << a.detail;
        os << "\n";
    }
    return os.str();
}

} // namespace symhodge
