/*
 * Copyright 2026 the v2xlink authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace v2xlink {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;

/// Bits are stored one per byte, values 0/1.
using BitVec = std::vector<std::uint8_t>;

/// Log-likelihood ratios for coded bits. Sign convention, repo-wide:
/// positive LLR means bit 0 is more likely.
using SoftBits = Eigen::VectorXd;

/// Hard LLR clip; keeps decoder metrics away from overflow.
inline constexpr double kLlrSaturation = 50.0;

/// Deterministic per-trial random stream. All randomness in the simulator
/// flows through explicitly passed Rng instances.
using Rng = std::mt19937_64;

struct ComplexWaveform {
    CVec samples;
    double sample_rate_hz = 0.0;

    ComplexWaveform() = default;
    ComplexWaveform(CVec s, double fs) : samples(std::move(s)), sample_rate_hz(fs) {
        if (sample_rate_hz <= 0.0) throw std::invalid_argument("sample_rate_hz must be > 0");
    }
    Eigen::Index size() const { return samples.size(); }
};

/// Frequency (subcarrier) x time (symbol) grid for one packet/subframe.
struct ResourceGrid {
    CMat cells;  // rows = subcarriers, cols = symbols

    ResourceGrid() = default;
    ResourceGrid(Eigen::Index num_subcarriers, Eigen::Index num_symbols)
        : cells(CMat::Zero(num_subcarriers, num_symbols)) {
        if (num_subcarriers <= 0 || num_symbols <= 0)
            throw std::invalid_argument("grid dimensions must be positive");
    }
    Eigen::Index num_subcarriers() const { return cells.rows(); }
    Eigen::Index num_symbols() const { return cells.cols(); }
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Derives an independent, reproducible stream from (seed, a, b).
/// Used to give every Monte Carlo trial its own engine so results do not
/// depend on scheduling or worker count.
inline Rng substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = splitmix64(seed ^ splitmix64(a + 1));
    s = splitmix64(s ^ splitmix64(b + 0x9E3779B97F4A7C15ULL));
    return Rng(s);
}

inline BitVec random_bits(Rng& rng, std::size_t n) {
    BitVec out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(rng() & 1u);
    return out;
}

}  // namespace v2xlink
