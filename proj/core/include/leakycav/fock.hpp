#pragma once

#include <Eigen/Dense>
#include <complex>

namespace leakycav {

// Truncated cavity density matrix on Fock states |0..n_max> with the mode
// frequency and decay rate it evolves under.
struct FockDensityMatrix {
    int n_max = 24;
    Eigen::MatrixXcd rho; // (n_max+1) x (n_max+1)
    double omega = 1.0;
    double gamma = 0.0;

    int dim() const { return n_max + 1; }

    static FockDensityMatrix vacuum(int n_max, double omega, double gamma);
    static FockDensityMatrix fock(int n, int n_max, double omega, double gamma);
    static FockDensityMatrix coherent(std::complex<double> xi, int n_max,
                                      double omega, double gamma);
    static FockDensityMatrix from_matrix(Eigen::MatrixXcd rho, double omega,
                                         double gamma);

    // trace = 1 (1e-9), Hermitian (1e-12), eigenvalues >= -1e-10, and the
    // truncation guard: population beyond 0.9 n_max below 1e-6.
    void validate() const;

    double trace_error() const;
    double hermiticity_error() const;
    double min_eigenvalue() const;
    double tail_population() const; // beyond 0.9 n_max

    std::complex<double> mean_a() const;      // <a>
    double mean_n() const;                    // <a† a>
    double mean_x() const;                    // <a> + <a>*
    double purity() const;                    // tr(rho^2)
};

// Ladder operator a on the truncated space (a|n> = sqrt(n)|n-1>).
Eigen::MatrixXcd lowering_operator(int n_max);

// Normalized coherent-state amplitudes (xi^n/sqrt(n!)) e^{-|xi|^2/2}, n <= n_max.
Eigen::VectorXcd coherent_amplitudes(std::complex<double> xi, int n_max);

} // namespace leakycav
