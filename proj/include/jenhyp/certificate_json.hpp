#ifndef JENHYP_CERTIFICATE_JSON_HPP
#define JENHYP_CERTIFICATE_JSON_HPP

#include <ctime>
#include <string>
#include <vector>

#include <json.hpp>

#include "certify.hpp"
#include "sweep.hpp"

namespace jenhyp {

inline constexpr int certificate_schema_version = 1;

inline const char* to_string(SupStrategy s) {
    return s == SupStrategy::branch_and_bound ? "bnb" : "lemma41";
}

inline SupStrategy sup_strategy_from_string(const std::string& s) {
    if (s == "bnb") return SupStrategy::branch_and_bound;
    if (s == "lemma41") return SupStrategy::lemma_closed_form;
    throw std::invalid_argument("unknown sup strategy: " + s);
}

namespace detail {

inline int digits_for(mpfr_prec_t prec) { return static_cast<int>(prec * 0.302) + 5; }

inline nlohmann::json interval_json(const Interval& v, int digits) {
    return {{"lo", v.lo_string(digits)}, {"hi", v.hi_string(digits)}};
}

inline Interval interval_from_json(const nlohmann::json& j, mpfr_prec_t prec) {
    return Interval::from_endpoints(j.at("lo").get<std::string>(), j.at("hi").get<std::string>(),
                                    prec);
}

inline std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

} // namespace detail

inline nlohmann::json certificate_to_json(const ThresholdCertificate& c) {
    int digits = detail::digits_for(c.precision_bits);
    nlohmann::json j;
    j["schema_version"] = certificate_schema_version;
    j["kind"] = "threshold";
    j["d"] = c.d;
    j["s"] = c.s;
    j["epsilon"] = c.epsilon;
    j["precision_bits"] = static_cast<long>(c.precision_bits);
    j["sup_strategy"] = to_string(c.sup_strategy);
    j["error_bounds"] = nlohmann::json::array();
    for (std::size_t i = 0; i < c.error_bounds.size(); ++i)
        j["error_bounds"].push_back(
            {{"j", static_cast<long>(i) + 1}, {"bound", c.error_bounds[i].hi_string(digits)}});
    j["per_m"] = nlohmann::json::array();
    for (const auto& pm : c.per_m) {
        nlohmann::json e;
        e["m"] = pm.m;
        e["k"] = pm.k;
        e["coefficients"] = nlohmann::json::array();
        for (const auto& v : pm.coefficients)
            e["coefficients"].push_back(detail::interval_json(v, digits));
        e["value_at_epsilon"] = detail::interval_json(pm.value_at_epsilon, digits);
        e["sign_changes"] = pm.sign_changes;
        j["per_m"].push_back(std::move(e));
    }
    j["threshold_n0"] = c.threshold_n0;
    j["verified"] = c.verified;
    j["timestamp"] = detail::utc_timestamp();
    return j;
}

inline nlohmann::json certificate_to_json(const RatioInequalityCertificate& c) {
    int digits = detail::digits_for(c.precision_bits);
    nlohmann::json j;
    j["schema_version"] = certificate_schema_version;
    j["kind"] = "ratio_inequality";
    j["s"] = c.s;
    j["epsilon"] = c.epsilon;
    j["precision_bits"] = static_cast<long>(c.precision_bits);
    j["error_bounds"] = nlohmann::json::array();
    const long shifts[3] = {-1, 1, 2};
    for (std::size_t i = 0; i < c.error_bounds.size(); ++i)
        j["error_bounds"].push_back(
            {{"j", shifts[i]}, {"bound", c.error_bounds[i].hi_string(digits)}});
    nlohmann::json e;
    e["k"] = 10;
    e["coefficients"] = nlohmann::json::array();
    for (const auto& v : c.coefficients)
        e["coefficients"].push_back(detail::interval_json(v, digits));
    e["value_at_epsilon"] = detail::interval_json(c.value_at_epsilon, digits);
    j["expansion"] = std::move(e);
    j["leading"] = detail::interval_json(c.leading, digits);
    j["threshold_n0"] = c.threshold_n0;
    j["verified"] = c.verified;
    j["timestamp"] = detail::utc_timestamp();
    return j;
}

inline nlohmann::json sweep_to_json(const SweepResult& s) {
    nlohmann::json j;
    j["d"] = s.d;
    j["n_min"] = s.n_min;
    j["n_max"] = s.n_max;
    j["method"] = to_string(s.method);
    j["failures"] = s.failures;
    return j;
}

inline nlohmann::json find_n_to_json(const FindNResult& r) {
    nlohmann::json j;
    j["d"] = r.d;
    j["N_of_d"] = r.n_of_d;
    j["certificate"] = certificate_to_json(r.certificate);
    j["sweep"] = sweep_to_json(r.sweep);
    return j;
}

/// Outcome of re-validating a serialized certificate. The numeric codes
/// double as process exit codes.
enum class CertCheck : int { valid = 0, parse_error = 2, schema_error = 3, invariant_error = 4 };

/// Re-verify a certificate's invariants (threshold formula, sign pattern,
/// positivity at epsilon) without recomputing any sup bounds.
inline CertCheck check_certificate_json(const nlohmann::json& j, std::string* diagnostic = nullptr) {
    auto fail = [&](CertCheck code, const std::string& why) {
        if (diagnostic) *diagnostic = why;
        return code;
    };
    try {
        if (!j.contains("schema_version") || !j.at("schema_version").is_number_integer() ||
            j.at("schema_version").get<int>() != certificate_schema_version)
            return fail(CertCheck::schema_error, "bad schema_version");
        for (const char* key : {"kind", "epsilon", "precision_bits", "error_bounds",
                                "threshold_n0", "verified"})
            if (!j.contains(key)) return fail(CertCheck::schema_error, std::string("missing ") + key);
        std::string kind = j.at("kind").get<std::string>();
        if (kind != "threshold" && kind != "ratio_inequality")
            return fail(CertCheck::schema_error, "unknown kind");

        mpfr_prec_t prec = j.at("precision_bits").get<long>();
        if (prec < 53 || prec > 1 << 20) return fail(CertCheck::schema_error, "bad precision_bits");
        mpq_class eps_q = parse_decimal(j.at("epsilon").get<std::string>());
        if (eps_q <= 0) return fail(CertCheck::invariant_error, "epsilon not positive");
        Interval eps(eps_q, prec);

        long expect_n0 = detail::threshold_from_epsilon(eps_q, prec);
        if (j.at("threshold_n0").get<long>() != expect_n0)
            return fail(CertCheck::invariant_error, "threshold_n0 does not match epsilon");

        auto check_expansion = [&](const nlohmann::json& e, long expect_k,
                                   std::size_t n_exact) -> std::string {
            if (!e.contains("k") || !e.contains("coefficients") || !e.contains("value_at_epsilon"))
                return "__schema__";
            if (e.at("k").get<long>() != expect_k) return "k mismatch";
            std::vector<Interval> coeffs;
            for (const auto& cj : e.at("coefficients"))
                coeffs.push_back(detail::interval_from_json(cj, prec));
            if (coeffs.empty()) return "empty coefficients";
            if (!coeffs[0].is_positive()) return "leading coefficient not positive";
            for (std::size_t i = n_exact; i < coeffs.size(); ++i)
                if (coeffs[i].lower_endpoint().is_positive()) return "floored coefficient positive";
            int sc = detail::interval_sign_changes(coeffs);
            if (sc < 0 || sc > 1) return "sign pattern not a single Descartes change";
            Interval acc = Interval::zero(prec);
            for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * eps + coeffs[i];
            if (!acc.is_positive()) return "value at epsilon not positive";
            Interval stored = detail::interval_from_json(e.at("value_at_epsilon"), prec);
            if (!stored.intersects(acc)) return "stored value at epsilon inconsistent";
            return "";
        };

        if (kind == "threshold") {
            for (const char* key : {"d", "s", "per_m"})
                if (!j.contains(key))
                    return fail(CertCheck::schema_error, std::string("missing ") + key);
            long d = j.at("d").get<long>();
            if (d < 2) return fail(CertCheck::schema_error, "bad d");
            const auto& per_m = j.at("per_m");
            if (!per_m.is_array() || per_m.size() != static_cast<std::size_t>(d - 1))
                return fail(CertCheck::invariant_error, "per_m does not cover m = 2..d");
            long m = 2;
            for (const auto& e : per_m) {
                if (!e.contains("m") || e.at("m").get<long>() != m)
                    return fail(CertCheck::invariant_error, "per_m out of order");
                std::string why = check_expansion(e, 3 * m * (m - 1) / 2, 2);
                if (why == "__schema__") return fail(CertCheck::schema_error, "bad per_m entry");
                if (!why.empty())
                    return fail(CertCheck::invariant_error, "m=" + std::to_string(m) + ": " + why);
                ++m;
            }
        } else {
            if (!j.contains("expansion"))
                return fail(CertCheck::schema_error, "missing expansion");
            std::string why = check_expansion(j.at("expansion"), 10, 1);
            if (why == "__schema__") return fail(CertCheck::schema_error, "bad expansion entry");
            if (!why.empty()) return fail(CertCheck::invariant_error, why);
        }

        if (!j.at("verified").get<bool>())
            return fail(CertCheck::invariant_error, "certificate not marked verified");
        if (diagnostic) diagnostic->clear();
        return CertCheck::valid;
    } catch (const nlohmann::json::exception&) {
        return fail(CertCheck::schema_error, "wrong field type");
    } catch (const std::exception& ex) {
        return fail(CertCheck::invariant_error, ex.what());
    }
}

} // namespace jenhyp

#endif
