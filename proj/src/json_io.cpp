#include "pvalent/json_io.hpp"

#include <set>

#include "json.hpp"

namespace pvalent {

using ordered = nlohmann::ordered_json;

std::string to_json(const PSeries& f) {
    ordered j;
    j["p"] = f.p();
    j["n"] = f.n();
    j["N"] = f.N();
    ordered coeffs = ordered::array();
    for (int k = f.p() + f.n(); k <= f.N(); ++k) {
        const cplx a = f.coeff(k);
        coeffs.push_back(ordered{{"k", k}, {"re", a.real()}, {"im", a.imag()}});
    }
    j["coeffs"] = std::move(coeffs);
    return j.dump();
}

namespace {

void require_keys(const ordered& j, std::initializer_list<const char*> keys,
                  const char* what) {
    for (const char* k : keys)
        if (!j.contains(k))
            throw parameter_error(std::string("series JSON: ") + what + " missing key '" +
                                  k + "'");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : keys)
            known = known || it.key() == k;
        if (!known)
            throw parameter_error(std::string("series JSON: ") + what +
                                  " has unknown key '" + it.key() + "'");
    }
}

} // namespace

PSeries pseries_from_json(const std::string& text) {
    ordered j;
    try {
        j = ordered::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parameter_error(std::string("series JSON: parse failed: ") + e.what());
    }
    if (!j.is_object())
        throw parameter_error("series JSON: top level must be an object");
    require_keys(j, {"p", "n", "N", "coeffs"}, "object");
    if (!j["p"].is_number_integer() || !j["n"].is_number_integer() ||
        !j["N"].is_number_integer())
        throw parameter_error("series JSON: p, n, N must be integers");
    PSeries f(j["p"].get<int>(), j["n"].get<int>(), j["N"].get<int>());
    if (!j["coeffs"].is_array())
        throw parameter_error("series JSON: coeffs must be an array");
    std::set<int> seen;
    for (const auto& entry : j["coeffs"]) {
        if (!entry.is_object())
            throw parameter_error("series JSON: coeffs entries must be objects");
        require_keys(entry, {"k", "re", "im"}, "coefficient");
        if (!entry["k"].is_number_integer() || !entry["re"].is_number() ||
            !entry["im"].is_number())
            throw parameter_error("series JSON: coefficient fields have wrong types");
        const int k = entry["k"].get<int>();
        if (!seen.insert(k).second)
            throw parameter_error("series JSON: duplicate coefficient for k=" +
                                  std::to_string(k));
        f.set_coeff(k, cplx(entry["re"].get<double>(), entry["im"].get<double>()));
    }
    return f;
}

std::string to_json(const VerifyReport& rep) {
    ordered j;
    j["pass"] = rep.pass;
    j["worst_violation"] = rep.worst_violation;
    j["witness"] = ordered{{"re", rep.witness.real()}, {"im", rep.witness.imag()}};
    j["radial_samples"] = rep.radial_samples;
    j["angular_samples"] = rep.angular_samples;
    j["tolerance"] = rep.tolerance;
    return j.dump();
}

} // namespace pvalent
