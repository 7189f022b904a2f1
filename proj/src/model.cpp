#include "rabi/model.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "rabi/errors.hpp"

namespace rabi {

void ModelParams::validate() const {
    if (!std::isfinite(delta) || delta < 0.0)
        throw DomainError("delta must be finite and non-negative");
    if (!std::isfinite(g) || g < 0.0) throw DomainError("g must be finite and non-negative");
    if (!std::isfinite(epsilon)) throw DomainError("epsilon must be finite");
}

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 7> kMethodNames{{
    {Method::exact, "exact"},
    {Method::zoa, "zoa"},
    {Method::dsc, "dsc"},
    {Method::vvp, "vvp"},
    {Method::grwa, "grwa"},
    {Method::brwa, "brwa"},
    {Method::variational, "variational"},
}};

}  // namespace

std::string_view to_string(Parity p) {
    switch (p) {
        case Parity::even: return "even";
        case Parity::odd: return "odd";
        case Parity::none: return "none";
    }
    return "none";
}

std::string_view to_string(Method m) {
    for (const auto& [method, name] : kMethodNames)
        if (method == m) return name;
    return "unknown";
}

std::optional<Parity> parse_parity(std::string_view s) {
    if (s == "even") return Parity::even;
    if (s == "odd") return Parity::odd;
    if (s == "none") return Parity::none;
    return std::nullopt;
}

std::optional<Method> parse_method(std::string_view s) {
    for (const auto& [method, name] : kMethodNames)
        if (name == s) return method;
    return std::nullopt;
}

}  // namespace rabi
