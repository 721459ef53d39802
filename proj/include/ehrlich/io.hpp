#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ehrlich/polynomial.hpp"
#include "ehrlich/solver.hpp"

namespace ehrlich {

inline nlohmann::json cvec_to_json(const CVec& x) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& z : x)
        arr.push_back({to_decimal(z.re()), to_decimal(z.im())});
    return arr;
}

inline CVec cvec_from_json(const nlohmann::json& j, const PrecisionContext& ctx) {
    if (!j.is_array())
        throw ParseError("cvec_from_json: expected an array of [re, im] pairs");
    CVec x;
    x.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw ParseError("cvec_from_json: each component must be a [re, im] string pair");
        x.push_back(BigComplex::parse(e[0].get<std::string>(), e[1].get<std::string>(), ctx));
    }
    return x;
}

/// {"degree": n, "coeffs": ["a0_re", "a0_im", ...]}, leading-first, flat.
inline nlohmann::json polynomial_to_json(const Polynomial& f) {
    nlohmann::json j;
    j["degree"] = f.degree();
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : f.coeffs()) {
        coeffs.push_back(to_decimal(c.re()));
        coeffs.push_back(to_decimal(c.im()));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline Polynomial polynomial_from_json(const nlohmann::json& j, const PrecisionContext& ctx) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs"))
        throw ParseError("polynomial_from_json: expected {\"degree\", \"coeffs\"}");
    long degree = j["degree"].get<long>();
    const auto& coeffs = j["coeffs"];
    if (!coeffs.is_array() || static_cast<long>(coeffs.size()) != 2 * (degree + 1))
        throw ParseError("polynomial_from_json: coeffs must hold 2*(degree+1) strings");
    CVec c;
    c.reserve(degree + 1);
    for (long i = 0; i <= degree; ++i) {
        if (!coeffs[2 * i].is_string() || !coeffs[2 * i + 1].is_string())
            throw ParseError("polynomial_from_json: coefficients must be decimal strings");
        c.push_back(BigComplex::parse(coeffs[2 * i].get<std::string>(),
                                      coeffs[2 * i + 1].get<std::string>(), ctx));
    }
    return Polynomial(std::move(c));
}

namespace detail {

inline nlohmann::json record_to_json(const IterateRecord& rec) {
    nlohmann::json j;
    j["k"] = rec.k;
    j["Ef"] = to_decimal(rec.Ef);
    j["eps"] = rec.eps ? nlohmann::json(to_decimal(*rec.eps)) : nlohmann::json(nullptr);
    j["x"] = cvec_to_json(rec.x);
    return j;
}

} // namespace detail

/// All reals appear as exact round-trip decimal strings; absent quantities
/// are null. "extra" is the iterate behind eps_k1, kept out of "trace".
inline nlohmann::json report_to_json(const SolveReport& rep) {
    nlohmann::json j;
    j["status"] = to_string(rep.status);
    j["N"] = rep.N;
    j["p"] = rep.pnorm.label();
    j["precision_bits"] = rep.precision_bits;
    j["m"] = rep.m ? nlohmann::json(*rep.m) : nlohmann::json(nullptr);
    j["k"] = rep.k_stop ? nlohmann::json(*rep.k_stop) : nlohmann::json(nullptr);
    j["eps_k"] = rep.eps_k ? nlohmann::json(to_decimal(*rep.eps_k)) : nlohmann::json(nullptr);
    j["eps_k1"] = rep.eps_k1 ? nlohmann::json(to_decimal(*rep.eps_k1)) : nlohmann::json(nullptr);
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& rec : rep.trace)
        trace.push_back(detail::record_to_json(rec));
    j["trace"] = std::move(trace);
    j["extra"] = rep.extra ? detail::record_to_json(*rep.extra) : nlohmann::json(nullptr);
    if (rep.failure)
        j["detail"] = describe(*rep.failure);
    return j;
}

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open for reading: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open for writing: " + path);
    out << content;
    if (!out)
        throw IoError("write failed: " + path);
}

} // namespace ehrlich
