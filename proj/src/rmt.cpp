#include "yg/rmt.hpp"

#include "yg/errors.hpp"
#include "yg/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace yg {

double HermitianMatrix::frobenius() const {
    double s = 0.0;
    for (const Complex& z : a) s += std::norm(z);
    return std::sqrt(s);
}

double HermitianMatrix::hermiticity_defect() const {
    double s = 0.0;
    for (int r = 0; r < order; ++r) {
        for (int c = 0; c < order; ++c) {
            s += std::norm(at(r, c) - std::conj(at(c, r)));
        }
    }
    return std::sqrt(s);
}

double HermitianMatrix::trace_real() const {
    double t = 0.0;
    for (int i = 0; i < order; ++i) t += at(i, i).real();
    return t;
}

HermitianMatrix sample_traceless_gue(int k, Philox& rng) {
    if (k < 2) throw input_error("sample_traceless_gue: k must be at least 2");
    HermitianMatrix h;
    h.order = k;
    h.a.assign(static_cast<std::size_t>(k) * k, Complex{});
    const double diag_sigma = std::sqrt(0.5);
    for (int r = 0; r < k; ++r) {
        h.at(r, r) = Complex(diag_sigma * rng.normal(), 0.0);
        for (int c = r + 1; c < k; ++c) {
            const double re = 0.5 * rng.normal();
            const double im = 0.5 * rng.normal();
            h.at(r, c) = Complex(re, im);
            h.at(c, r) = Complex(re, -im);
        }
    }
    const double shift = h.trace_real() / k;
    for (int i = 0; i < k; ++i) h.at(i, i) -= shift;
    return h;
}

namespace {

double offdiag_norm(const HermitianMatrix& h) {
    double s = 0.0;
    for (int r = 0; r < h.order; ++r) {
        for (int c = 0; c < h.order; ++c) {
            if (r != c) s += std::norm(h.at(r, c));
        }
    }
    return std::sqrt(s);
}

} // namespace

EigenResult jacobi_hermitian(const HermitianMatrix& input, const JacobiOptions& opts) {
    const int n = input.order;
    const double scale = input.frobenius();
    if (scale > 0.0 && input.hermiticity_defect() > opts.hermitian_tol * scale)
        throw input_error("jacobi_hermitian: matrix is not Hermitian within tolerance");

    HermitianMatrix h = input;
    std::vector<Complex> u;
    if (opts.want_vectors) {
        u.assign(static_cast<std::size_t>(n) * n, Complex{});
        for (int i = 0; i < n; ++i) u[static_cast<std::size_t>(i) * n + i] = 1.0;
    }

    const double stop = opts.tol_factor * (scale > 0.0 ? scale : 1.0);
    int sweep = 0;
    while (offdiag_norm(h) > stop) {
        if (++sweep > opts.max_sweeps)
            throw numeric_error("jacobi_hermitian: no convergence after max sweeps");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex hpq = h.at(p, q);
                const double absq = std::abs(hpq);
                if (absq == 0.0) continue;
                const double app = h.at(p, p).real();
                const double aqq = h.at(q, q).real();
                // Unitary rotation J = [c, s; -conj(s), c] on the (p,q)
                // plane zeroing h_pq, with s carrying the phase of h_pq.
                const Complex phase = hpq / absq;
                const double theta = 0.5 * std::atan2(2.0 * absq, aqq - app);
                const double c = std::cos(theta);
                const Complex s = phase * std::sin(theta);

                for (int i = 0; i < n; ++i) { // H <- H J
                    const Complex hip = h.at(i, p);
                    const Complex hiq = h.at(i, q);
                    h.at(i, p) = c * hip - std::conj(s) * hiq;
                    h.at(i, q) = s * hip + c * hiq;
                }
                for (int i = 0; i < n; ++i) { // H <- J* H
                    const Complex hpi = h.at(p, i);
                    const Complex hqi = h.at(q, i);
                    h.at(p, i) = c * hpi - s * hqi;
                    h.at(q, i) = std::conj(s) * hpi + c * hqi;
                }
                h.at(p, q) = 0.0;
                h.at(q, p) = 0.0;
                if (opts.want_vectors) {
                    for (int i = 0; i < n; ++i) { // U <- U J
                        const Complex uip = u[static_cast<std::size_t>(i) * n + p];
                        const Complex uiq = u[static_cast<std::size_t>(i) * n + q];
                        u[static_cast<std::size_t>(i) * n + p] = c * uip - std::conj(s) * uiq;
                        u[static_cast<std::size_t>(i) * n + q] = s * uip + c * uiq;
                    }
                }
            }
        }
    }

    EigenResult r;
    r.values.resize(static_cast<std::size_t>(n));
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        r.values[static_cast<std::size_t>(i)] = h.at(i, i).real();
        idx[static_cast<std::size_t>(i)] = i;
    }
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return h.at(a, a).real() < h.at(b, b).real(); });
    std::sort(r.values.begin(), r.values.end());
    if (opts.want_vectors) {
        r.vectors.resize(static_cast<std::size_t>(n) * n);
        for (int col = 0; col < n; ++col) {
            const int src = idx[static_cast<std::size_t>(col)];
            for (int i = 0; i < n; ++i) {
                r.vectors[static_cast<std::size_t>(col) * n + i] =
                    u[static_cast<std::size_t>(i) * n + src];
            }
        }
    }
    return r;
}

Spectrum eigenvalues(const HermitianMatrix& h) {
    EigenResult e = jacobi_hermitian(h);
    Spectrum s;
    s.values.assign(e.values.rbegin(), e.values.rend());
    double t = 0.0;
    for (double v : s.values) t += v;
    s.trace_residual = t - h.trace_real();
    return s;
}

double spectral_density_unnormalized(const std::vector<double>& lambda) {
    double vdm = 1.0, sq = 0.0;
    for (std::size_t a = 0; a < lambda.size(); ++a) {
        sq += lambda[a] * lambda[a];
        for (std::size_t b = a + 1; b < lambda.size(); ++b) {
            const double d = lambda[a] - lambda[b];
            vdm *= d * d;
        }
    }
    return vdm * std::exp(-sq);
}

SpectrumSample sample_spectra(int k, long long trials, std::uint64_t seed, unsigned threads) {
    if (trials < 1) throw input_error("sample_spectra: trials must be positive");
    SpectrumSample s;
    s.k = k;
    s.trials = trials;
    s.seed = seed;
    s.values.assign(static_cast<std::size_t>(trials) * k, 0.0);
    parallel_chunks(static_cast<std::size_t>(trials), threads,
                    [&](std::size_t begin, std::size_t end, std::size_t) {
                        for (std::size_t t = begin; t < end; ++t) {
                            Philox rng(seed, t);
                            const HermitianMatrix h = sample_traceless_gue(k, rng);
                            const Spectrum sp = eigenvalues(h);
                            double* row = &s.values[t * static_cast<std::size_t>(k)];
                            for (int i = 0; i < k; ++i) row[i] = sp.values[static_cast<std::size_t>(i)];
                        }
                    },
                    256);
    return s;
}

std::vector<double> SpectrumSample::largest() const {
    std::vector<double> v(static_cast<std::size_t>(trials));
    for (long long t = 0; t < trials; ++t) v[static_cast<std::size_t>(t)] = value(t, 0);
    return v;
}

double SpectrumSample::mean_largest() const {
    double m = 0.0;
    for (long long t = 0; t < trials; ++t) m += value(t, 0);
    return m / static_cast<double>(trials);
}

double SpectrumSample::var_largest() const {
    const double m = mean_largest();
    double v = 0.0;
    for (long long t = 0; t < trials; ++t) {
        const double d = value(t, 0) - m;
        v += d * d;
    }
    return v / static_cast<double>(trials);
}

} // namespace yg
