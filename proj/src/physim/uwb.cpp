#include "csnet/physim/uwb.hpp"

#include "csnet/core/error.hpp"
#include "csnet/core/rng.hpp"
#include "csnet/core/sensing.hpp"

#include <algorithm>
#include <cmath>

namespace csnet {

Vector mexican_hat(double sigma) {
    require(sigma > 0.0, "mexican_hat: sigma must be positive");
    const auto half = static_cast<Index>(std::ceil(4.0 * sigma));
    Vector p(2 * half + 1);
    for (Index i = 0; i < p.size(); ++i) {
        const double t = static_cast<double>(i - half) / sigma;
        p(i) = (1.0 - t * t) * std::exp(-0.5 * t * t);
    }
    return p;
}

BasisMatrix shift_dictionary(const Vector& pulse, Index n) {
    require(pulse.size() >= 1 && pulse.size() <= n, "shift_dictionary: pulse length must be in [1, n]");
    const double norm = pulse.norm();
    require(norm > 0.0, "shift_dictionary: zero pulse");
    Matrix d = Matrix::Zero(n, n);
    for (Index shift = 0; shift < n; ++shift)
        for (Index t = 0; t < pulse.size(); ++t) d((shift + t) % n, shift) = pulse(t) / norm;
    return {std::move(d), BasisKind::ShiftDictionary, {}};
}

Vector uwb_waveform(const Vector& pulse, const UwbEchoes& echoes, Index n) {
    require(echoes.delays.size() == echoes.amplitudes.size(), "uwb_waveform: one amplitude per delay");
    require(pulse.size() <= n, "uwb_waveform: pulse longer than n");
    Vector x = Vector::Zero(n);
    for (std::size_t e = 0; e < echoes.delays.size(); ++e) {
        const Index d = echoes.delays[e];
        require(d >= 0 && d < n, "uwb_waveform: delay out of range");
        for (Index t = 0; t < pulse.size(); ++t) x((d + t) % n) += echoes.amplitudes[e] * pulse(t);
    }
    return x;
}

UwbEchoes make_echoes(Index n, Index k, Index min_separation, std::uint64_t seed) {
    require(k >= 0 && min_separation >= 1 && k * min_separation <= n, "make_echoes: echoes do not fit");
    Rng rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<Index> delays;
        for (Index e = 0; e < k; ++e) delays.push_back(static_cast<Index>(rng.below(static_cast<std::uint64_t>(n))));
        std::sort(delays.begin(), delays.end());
        bool ok = true;
        for (std::size_t e = 0; e < delays.size() && ok; ++e) {
            const Index next = e + 1 < delays.size() ? delays[e + 1] : delays.front() + n;
            if (k > 1 && next - delays[e] < min_separation) ok = false;
        }
        if (!ok) continue;
        UwbEchoes out;
        out.delays = delays;
        for (Index e = 0; e < k; ++e) out.amplitudes.push_back(rng.sign() * rng.uniform(0.5, 1.5));
        return out;
    }
    fail(ErrorKind::GenerationFailure, "make_echoes: no separated draw in 10000 attempts");
}

UwbEchoes uwb_detect(const Vector& pulse, const Vector& received, int k, const UwbParams& uwb,
                     const SolverParams& params) {
    require(k > 0, "uwb_detect: k must be positive");
    require(uwb.rate > 0.0 && uwb.rate <= 1.0, "uwb_detect: rate must be in (0, 1]");
    const Index n = received.size();
    const BasisMatrix dict = shift_dictionary(pulse, n);
    const Index m = std::max<Index>(1, static_cast<Index>(std::floor(uwb.rate * static_cast<double>(n))));
    const Matrix phi = gen_sensing_matrix(Recipe::Gaussian, m, n, uwb.seed).entries;
    const Matrix a = phi * dict.entries;
    const Vector norms = column_norms(a);
    SolverParams p = params;
    p.k = k;
    const auto r = recover(normalize_columns(a), phi * received, p);
    const double pulse_norm = pulse.norm();
    UwbEchoes out;
    for (Index j : r.support) {
        out.delays.push_back(j);
        out.amplitudes.push_back(r.estimate(j) / norms(j) / pulse_norm);
    }
    return out;
}

}  // namespace csnet
