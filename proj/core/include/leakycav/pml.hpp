#pragma once

#include <complex>

namespace leakycav {

// Perfectly matched layer via complex coordinate stretching. Inside a layer
// of the given thickness at each domain edge,
//   s(x) = 1 + i * sigma(x) / reference_k,
//   sigma(x) = strength * ((x - x_edge_of_interior) / thickness)^exponent,
// and the Laplacian picks up 1/s factors. Outside the layers s = 1.
struct PmlSpec {
    double thickness = 0.0;   // 0 disables the PML
    double strength = 2.5;    // sigma amplitude (units of reference_k)
    int exponent = 2;         // 2 or 3
    double reference_k = 1.0; // design wavenumber the layer is matched to

    bool enabled() const { return thickness > 0.0; }
    void validate() const;

    // Stretch factor at position x for a domain [x_min, x_max].
    std::complex<double> stretch(double x, double x_min, double x_max) const;
};

} // namespace leakycav
