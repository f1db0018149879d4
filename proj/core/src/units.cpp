#include "leakycav/unit_value.hpp"

#include <array>
#include <optional>

#include "leakycav/units.hpp"

namespace leakycav {

namespace {
constexpr std::array<const char*, 11> kUnits = {
    "fm", "nm", "mm", "m", "s", "ms", "MeV", "GHz", "ohm", "uohm", "natural"};
}

bool is_known_unit(const std::string& unit) {
    if (unit.empty()) return true;
    for (const char* u : kUnits)
        if (unit == u) return true;
    return false;
}

std::optional<double> UnitValue::as_length_m() const {
    if (unit == "fm") return value * units::fm_m;
    if (unit == "nm") return value * units::nm_m;
    if (unit == "mm") return value * units::mm_m;
    if (unit == "m") return value;
    return std::nullopt;
}

std::optional<double> UnitValue::as_length_fm() const {
    if (auto m = as_length_m()) return *m / units::fm_m;
    return std::nullopt;
}

std::optional<double> UnitValue::as_time_s() const {
    if (unit == "s") return value;
    if (unit == "ms") return value * 1e-3;
    return std::nullopt;
}

std::optional<double> UnitValue::as_energy_MeV() const {
    if (unit == "MeV") return value;
    return std::nullopt;
}

std::optional<double> UnitValue::as_frequency_Hz() const {
    if (unit == "GHz") return value * 1e9;
    return std::nullopt;
}

std::optional<double> UnitValue::as_resistance_ohm() const {
    if (unit == "ohm") return value;
    if (unit == "uohm") return value * 1e-6;
    return std::nullopt;
}

std::optional<double> UnitValue::as_natural() const {
    if (is_natural()) return value;
    return std::nullopt;
}

} // namespace leakycav
