#pragma once

#include <optional>
#include <string>

namespace leakycav {

// A number as it appears in scenario files: magnitude plus declared unit.
// "natural" (or no unit at all) marks module-internal natural units.
struct UnitValue {
    double value = 0.0;
    std::string unit; // one of: fm nm mm m s ms MeV GHz ohm uohm natural

    bool is_natural() const { return unit.empty() || unit == "natural"; }

    // Dimension-checked conversions. Empty optional means the declared unit
    // does not belong to the requested dimension.
    std::optional<double> as_length_m() const;
    std::optional<double> as_length_fm() const;
    std::optional<double> as_time_s() const;
    std::optional<double> as_energy_MeV() const;
    std::optional<double> as_frequency_Hz() const;
    std::optional<double> as_resistance_ohm() const;
    std::optional<double> as_natural() const;
};

bool is_known_unit(const std::string& unit);

} // namespace leakycav
