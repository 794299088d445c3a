#pragma once

#include "yg/rng.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace yg {

using Complex = std::complex<double>;

/// Dense Hermitian matrix, row-major.
struct HermitianMatrix {
    int order = 0;
    std::vector<Complex> a;

    Complex& at(int r, int c) { return a[static_cast<std::size_t>(r) * order + c]; }
    const Complex& at(int r, int c) const { return a[static_cast<std::size_t>(r) * order + c]; }

    double frobenius() const;
    double hermiticity_defect() const; // ||H - H*||_F
    double trace_real() const;
};

struct Spectrum {
    std::vector<double> values; // sorted descending
    double trace_residual = 0.0;
};

/// Traceless GUE draw with joint eigenvalue density proportional to
/// prod_{a<b} (l_a - l_b)^2 exp(-sum l_a^2): diagonal N(0, 1/2), off-diagonal
/// real and imaginary parts N(0, 1/4), then the trace is projected out.
HermitianMatrix sample_traceless_gue(int k, Philox& rng);

struct JacobiOptions {
    double tol_factor = 1e-13;     // stop when off(H) <= tol_factor * ||H||_F
    int max_sweeps = 100;
    double hermitian_tol = 1e-12;  // input check, relative
    bool want_vectors = false;
};

struct EigenResult {
    std::vector<double> values; // ascending
    std::vector<Complex> vectors; // column-major, order x order; empty unless requested
};

/// Cyclic Jacobi diagonalization with complex 2x2 rotations.  Throws
/// input_error on non-Hermitian input and numeric_error on non-convergence.
EigenResult jacobi_hermitian(const HermitianMatrix& h, const JacobiOptions& opts = {});

/// Eigenvalues sorted descending plus the trace residual.
Spectrum eigenvalues(const HermitianMatrix& h);

/// Unnormalized Mehta density prod_{a<b} (l_a - l_b)^2 exp(-sum l_a^2).
double spectral_density_unnormalized(const std::vector<double>& lambda);

/// Monte Carlo spectra: values is trials x k, row t holding the descending
/// spectrum of trial t.  Trial t uses stream t of the seed, so the result is
/// identical for any thread count.
struct SpectrumSample {
    int k = 0;
    long long trials = 0;
    std::uint64_t seed = 0;
    std::vector<double> values;

    double value(long long trial, int i) const {
        return values[static_cast<std::size_t>(trial) * k + i];
    }
    std::vector<double> largest() const; // column 0, in trial order
    double mean_largest() const;
    double var_largest() const;
};

SpectrumSample sample_spectra(int k, long long trials, std::uint64_t seed, unsigned threads = 1);

} // namespace yg
