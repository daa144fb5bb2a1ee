// JSON and text renderings of analysis reports.

#include "fixlocus/report_io.hpp"

#include <sstream>

#include <json.hpp>

namespace fixlocus {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Pass: return "pass";
        case VerdictStatus::Fail: return "fail";
        case VerdictStatus::NotApplicable: return "not_applicable";
    }
    return "not_applicable";
}

const char* kind_name(FixedLocusKind k) {
    switch (k) {
        case FixedLocusKind::WholeSpace: return "whole_space";
        case FixedLocusKind::Unit: return "unit";
        case FixedLocusKind::Hypersurface: return "hypersurface";
    }
    return "unit";
}

const char* irr_name(IrreducibilityVerdict v) {
    switch (v) {
        case IrreducibilityVerdict::Irreducible: return "irreducible";
        case IrreducibilityVerdict::Reducible: return "reducible";
        case IrreducibilityVerdict::Unknown: return "unknown";
    }
    return "unknown";
}

}  // namespace

std::string polynomial_text(const Polynomial& p, const std::vector<std::string>& names) {
    return to_string(p, names);
}

std::string report_to_json(const FixReport& r) {
    ordered_json j;
    j["name"] = r.name;
    j["n"] = r.n;
    j["seed"] = r.seed;
    j["special"] = r.specialness.special;
    j["lambda"] = r.specialness.lambda.get_str();
    if (r.specialness.lambda_order)
        j["lambda_finite_order"] = *r.specialness.lambda_order;
    else
        j["lambda_finite_order"] = nullptr;

    ordered_json order;
    order["finite"] = r.order.finite;
    if (r.order.finite) order["m"] = r.order.m;
    j["order"] = order;

    ordered_json fixed;
    fixed["kind"] = kind_name(r.hpart.kind);
    if (r.hpart.kind == FixedLocusKind::Hypersurface)
        fixed["h"] = polynomial_text(*r.hpart.h, r.var_names);
    j["fixed_locus"] = fixed;
    j["h"] = r.hpart.kind == FixedLocusKind::Hypersurface
                 ? ordered_json(polynomial_text(*r.hpart.h, r.var_names))
                 : ordered_json(nullptr);

    j["smooth"] = r.smooth ? ordered_json(*r.smooth) : ordered_json(nullptr);
    j["supersmooth"] = r.supersmooth ? ordered_json(*r.supersmooth) : ordered_json(nullptr);

    if (r.irreducible) {
        ordered_json irr;
        irr["verdict"] = irr_name(r.irreducible->verdict);
        irr["absolute_certified"] = r.irreducible->absolute_certified;
        irr["note"] = r.irreducible->note;
        j["irreducible"] = irr;
    } else {
        j["irreducible"] = nullptr;
    }

    j["fix_equals_h"] = r.fix_equals_h ? ordered_json(*r.fix_equals_h) : ordered_json(nullptr);
    j["eigen_constant"] =
        r.eigen_constant ? ordered_json(r.eigen_constant->get_str()) : ordered_json(nullptr);

    ordered_json wits = ordered_json::array();
    for (const WitnessVerification& w : r.witness_results) {
        ordered_json jw;
        jw["ok"] = w.ok;
        jw["image_in_hypersurface"] = w.image_in_hypersurface;
        jw["nonconstant_in_t"] = w.nonconstant_in_t;
        jw["jacobian_rank_ok"] = w.jacobian_rank_ok;
        jw["rank_check_probabilistic"] = w.rank_check_probabilistic;
        jw["seed"] = w.seed;
        wits.push_back(jw);
    }
    j["witnesses"] = wits;

    ordered_json verdicts = ordered_json::array();
    for (const TheoremVerdict& v : r.theorem_verdicts) {
        ordered_json jv;
        jv["id"] = v.id;
        jv["status"] = status_name(v.status);
        jv["reason"] = v.reason;
        verdicts.push_back(jv);
    }
    j["theorem_verdicts"] = verdicts;

    return j.dump(2) + "\n";
}

std::string report_to_text(const FixReport& r) {
    std::ostringstream os;
    os << "== " << r.name << " (n = " << r.n << ", seed = " << r.seed << ") ==\n";
    os << "special:        " << (r.specialness.special ? "yes" : "no")
       << "  (lambda = " << r.specialness.lambda.get_str();
    if (r.specialness.lambda_order)
        os << ", finite multiplicative order " << *r.specialness.lambda_order;
    else
        os << ", no finite multiplicative order within the probe bound";
    os << ")\n";
    os << "order:          ";
    if (r.order.finite)
        os << "finite, m = " << r.order.m << "\n";
    else
        os << "exceeds bound (presumed infinite)\n";
    os << "fixed locus:    " << kind_name(r.hpart.kind);
    if (r.hpart.kind == FixedLocusKind::Hypersurface)
        os << "  h = " << polynomial_text(*r.hpart.h, r.var_names);
    os << "\n";
    auto tri = [&](const char* label, const std::optional<bool>& v) {
        os << label << (v ? (*v ? "yes" : "no") : "n/a") << "\n";
    };
    tri("smooth:         ", r.smooth);
    tri("super-smooth:   ", r.supersmooth);
    os << "irreducible:    ";
    if (r.irreducible) {
        os << irr_name(r.irreducible->verdict);
        if (r.irreducible->verdict == IrreducibilityVerdict::Irreducible)
            os << (r.irreducible->absolute_certified ? " (absolutely, by certificate)"
                                                     : " (over Q; absolute unverified)");
    } else {
        os << "n/a";
    }
    os << "\n";
    tri("Fix = V(h):     ", r.fix_equals_h);
    os << "eigen constant: "
       << (r.eigen_constant ? r.eigen_constant->get_str() : std::string("n/a")) << "\n";
    if (!r.witness_results.empty()) {
        os << "witnesses:\n";
        for (std::size_t i = 0; i < r.witness_results.size(); ++i) {
            const WitnessVerification& w = r.witness_results[i];
            os << "  [" << i << "] " << (w.ok ? "verified" : "FAILED")
               << " (in-hypersurface: " << (w.image_in_hypersurface ? "yes" : "no")
               << ", moves with t: " << (w.nonconstant_in_t ? "yes" : "no")
               << ", rank n-1: " << (w.jacobian_rank_ok ? "yes" : "no")
               << ", probabilistic rank check, seed " << w.seed << ")\n";
        }
    }
    os << "verdicts:\n";
    for (const TheoremVerdict& v : r.theorem_verdicts) {
        os << "  " << v.id << ": " << status_name(v.status);
        if (!v.reason.empty()) os << " — " << v.reason;
        os << "\n";
    }
    return os.str();
}

}  // namespace fixlocus
