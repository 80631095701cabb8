#include "dendrispec/serialize.hpp"

namespace dendrispec {

Json to_json(const ExactPolynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coefficients()) {
        coeffs.push_back(to_decimal(c));
    }
    return Json{{"coeffs", std::move(coeffs)}};
}

Json to_json(const FactoredCharPoly& fp) {
    Json factors = Json::array();
    for (const auto& f : fp.factors) {
        Json entry;
        entry["index"] = f.index;
        entry["coeffs"] = to_json(f.poly)["coeffs"];
        entry["multiplicity"] = to_decimal(f.multiplicity);
        factors.push_back(std::move(entry));
    }
    return factors;
}

Json to_json(const Spectrum& s) {
    Json entries = Json::array();
    for (const auto& e : s.entries) {
        Json entry;
        entry["value"] = e.value;
        entry["multiplicity"] = to_decimal(e.multiplicity);
        entry["factor"] = e.factor_index;
        entry["method"] = std::string(to_string(e.method));
        entries.push_back(std::move(entry));
    }
    Json out;
    out["n"] = to_decimal(s.total_vertices);
    out["entries"] = std::move(entries);
    return out;
}

Json to_json(const Interval& interval) { return Json::array({interval.lower, interval.upper}); }

Json to_json(const EnergyReport& report) {
    Json out;
    if (report.dendrimer) {
        out["l"] = report.dendrimer->l;
        out["k"] = report.dendrimer->k;
    } else {
        out["l"] = nullptr;
        out["k"] = nullptr;
    }
    out["energy"] = report.energy;
    out["method"] = std::string(to_string(report.method));
    out["ratio"] = report.normalized_ratio ? Json(*report.normalized_ratio) : Json(nullptr);
    out["thm51"] = report.thm51 ? to_json(*report.thm51) : Json(nullptr);
    out["thmB"] = report.thmB ? to_json(*report.thmB) : Json(nullptr);
    out["mu_k"] = report.mu ? Json(*report.mu) : Json(nullptr);
    if (report.thm51) {
        out["thm51_lower_negative"] = report.thm51_lower_negative;
    }
    return out;
}

Json to_json(const TreeVerification& v) {
    Json out;
    out["tree"] = v.label;
    out["n"] = std::to_string(v.n);
    out["charpoly"] = v.charpoly_ok;
    out["spectrum"] = v.spectrum_ok;
    out["energy"] = v.energy_ok;
    out["spectrum_max_diff"] = v.spectrum_max_diff;
    out["energy_diff"] = v.energy_diff;
    out["pass"] = v.ok();
    if (!v.detail.empty()) {
        out["detail"] = v.detail;
    }
    return out;
}

}  // namespace dendrispec
