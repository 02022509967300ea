#pragma once

// JSON schemas for the two file formats. Polynomials are stored normalized
// (weight zero), coefficients as ["num","den"] string pairs with index 0
// the constant term; point counts are decimal strings since they overflow
// 64-bit integers. Exact rationals are never rendered as floats.

#include "weilcheck/reconstruct.hpp"
#include "weilcheck/weil.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace weilcheck {

using Json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Json rat_to_json(const Rat& x) { return Json::array({num(x).str(), den(x).str()}); }

inline Rat rat_from_json(const Json& j) {
    if (j.is_array()) {
        if (j.size() != 2) throw InputError("rational must be [num, den]");
        BigInt n{j[0].get<std::string>()};
        BigInt d{j[1].get<std::string>()};
        if (d == 0) throw InputError("rational with zero denominator");
        return Rat(n, d);
    }
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return Rat(BigInt(j.get<std::string>()));
    throw InputError("cannot parse rational");
}

inline BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw InputError("cannot parse integer");
}

struct PolynomialFile {
    std::string name;
    FrobPolynomial fp;
    std::optional<HodgeVector> hodge;
    std::optional<SurfaceInvariants> surface;
};

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Json::parse(in, nullptr, true, /*ignore_comments=*/true);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("JSON parse error in ") + path + ": " + e.what());
    }
}

inline PolynomialFile polynomial_from_json(const Json& j) {
    try {
        WeilContext ctx;
        ctx.p = bigint_from_json(j.at("p"));
        ctx.k = j.at("k").get<long>();
        ctx.d = j.at("dim").get<long>();
        std::vector<Rat> coeffs;
        for (const auto& c : j.at("coefficients")) coeffs.push_back(rat_from_json(c));
        RatPoly phi{std::move(coeffs)};
        ctx.N = phi.degree();
        PolynomialFile pf{j.value("name", ""), FrobPolynomial{ctx, phi}, std::nullopt, std::nullopt};
        if (j.contains("hodge")) {
            HodgeVector h;
            for (const auto& v : j.at("hodge")) h.entries.push_back(v.get<long>());
            pf.hodge = h;
        }
        if (j.contains("surface")) {
            const auto& s = j.at("surface");
            pf.surface = SurfaceInvariants{s.at("h2_o").get<long>(), s.at("h1_o").get<long>(), s.at("b1").get<long>()};
        }
        return pf;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad polynomial file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("bad polynomial file: ") + e.what());
    }
}

inline PolynomialFile load_polynomial(const std::string& path) {
    return polynomial_from_json(load_json_file(path));
}

inline Json polynomial_to_json(const PolynomialFile& pf) {
    Json j;
    if (!pf.name.empty()) j["name"] = pf.name;
    j["p"] = pf.fp.ctx.p.str();
    j["k"] = pf.fp.ctx.k;
    j["dim"] = pf.fp.ctx.d;
    Json coeffs = Json::array();
    for (long r = 0; r <= pf.fp.ctx.N; ++r) coeffs.push_back(rat_to_json(pf.fp.phi[r]));
    j["coefficients"] = coeffs;
    if (pf.hodge) j["hodge"] = pf.hodge->entries;
    if (pf.surface)
        j["surface"] = Json{{"h2_o", pf.surface->h2_o}, {"h1_o", pf.surface->h1_o}, {"b1", pf.surface->b1}};
    return j;
}

inline VarietyDescriptor descriptor_from_json(const Json& j) {
    try {
        VarietyDescriptor vd;
        vd.name = j.value("name", "");
        vd.p = bigint_from_json(j.at("p"));
        vd.k = j.at("k").get<long>();
        vd.d = j.at("dim").get<long>();
        if (j.contains("N")) vd.middle_degree = j.at("N").get<long>();
        if (j.contains("hodge")) {
            HodgeVector h;
            for (const auto& v : j.at("hodge")) h.entries.push_back(v.get<long>());
            vd.hodge = h;
        }
        for (const auto& c : j.at("point_counts")) vd.point_counts.push_back(bigint_from_json(c));
        if (j.contains("ambient"))
            for (const auto& a : j.at("ambient")) {
                AmbientEigenvalue amb;
                amb.weight_exponent = a.at("weight_exponent").get<long>();
                amb.multiplicity = a.value("multiplicity", 1L);
                std::string parity = a.value("degree_parity", "even");
                if (parity != "even" && parity != "odd") throw InputError("degree_parity must be even or odd");
                amb.odd_degree = parity == "odd";
                vd.ambient.push_back(amb);
            }
        vd.forced_unit_root_multiplicity = j.value("forced_unit_root_multiplicity", 1L);
        return vd;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad variety descriptor: ") + e.what());
    }
}

inline VarietyDescriptor load_descriptor(const std::string& path) {
    return descriptor_from_json(load_json_file(path));
}

}  // namespace weilcheck
