// Copyright 2026 The qinfo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only reference implementations. Everything here is written from the
// definitions (dense matrices, direct sums) and shares no code with the
// kernels it checks.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>
#include <span>
#include <algorithm>
#include <vector>

#include "qinfo/rng.hpp"
#include "qinfo/state.hpp"

namespace oracle {

using cplx = std::complex<double>;
using Matrix = std::vector<std::vector<cplx>>;

inline Matrix identity(std::size_t dim) {
    Matrix m(dim, std::vector<cplx>(dim, 0.0));
    for (std::size_t i = 0; i < dim; ++i) {
        m[i][i] = 1.0;
    }
    return m;
}

inline cplx entry(const qinfo::Gate1Q &g, std::size_t r, std::size_t c) { return g.m[2 * r + c]; }

/// Full 2^n x 2^n matrix of g on `target` (qubit q is bit q of the index).
inline Matrix single_qubit(std::size_t n, const qinfo::Gate1Q &g, std::size_t target) {
    const std::size_t dim = std::size_t{1} << n;
    Matrix m(dim, std::vector<cplx>(dim, 0.0));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            if ((r & ~(std::size_t{1} << target)) != (c & ~(std::size_t{1} << target))) {
                continue;
            }
            m[r][c] = entry(g, (r >> target) & 1U, (c >> target) & 1U);
        }
    }
    return m;
}

/// |0><0| (x) I + |1><1| (x) g on (control, target).
inline Matrix controlled(std::size_t n, const qinfo::Gate1Q &g, std::size_t control, std::size_t target) {
    const std::size_t dim = std::size_t{1} << n;
    Matrix m = identity(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        if (!((r >> control) & 1U)) {
            continue;
        }
        for (std::size_t c = 0; c < dim; ++c) {
            m[r][c] = 0.0;
        }
        for (std::size_t c = 0; c < dim; ++c) {
            if (((c >> control) & 1U) && (r & ~(std::size_t{1} << target)) == (c & ~(std::size_t{1} << target))) {
                m[r][c] = entry(g, (r >> target) & 1U, (c >> target) & 1U);
            }
        }
    }
    return m;
}

inline Matrix multiply(const Matrix &a, const Matrix &b) {
    const std::size_t d = a.size();
    Matrix out(d, std::vector<cplx>(d, 0.0));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            if (a[i][k] == cplx{0.0, 0.0}) {
                continue;
            }
            for (std::size_t j = 0; j < d; ++j) {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

inline std::vector<cplx> apply(const Matrix &m, std::span<const cplx> v) {
    std::vector<cplx> out(m.size(), 0.0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            out[i] += m[i][j] * v[j];
        }
    }
    return out;
}

/// Dense DFT on the whole register: out[k] = w^{-1/2} sum_x e^{2 pi i k x / w} in[x].
inline std::vector<cplx> dft(std::span<const cplx> in) {
    const std::size_t w = in.size();
    std::vector<cplx> out(w, 0.0);
    for (std::size_t k = 0; k < w; ++k) {
        for (std::size_t x = 0; x < w; ++x) {
            out[k] += std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k * x % w) / static_cast<double>(w)) * in[x];
        }
        out[k] /= std::sqrt(static_cast<double>(w));
    }
    return out;
}

inline double max_diff(std::span<const cplx> a, std::span<const cplx> b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

/// Haar-ish random state from Box-Muller normals.
inline qinfo::StateVector random_state(std::size_t n, qinfo::Rng &rng) {
    std::vector<cplx> amps(std::size_t{1} << n);
    std::normal_distribution<double> g;
    for (auto &a : amps) {
        a = {g(rng), g(rng)};
    }
    return qinfo::StateVector::normalized(std::move(amps));
}

inline qinfo::Gate1Q random_unitary(qinfo::Rng &rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    // e^{ia} Rz(b) Ry(c) Rz(d) written out.
    const cplx e = std::polar(1.0, a);
    return {{e * std::polar(1.0, -(b + d) / 2) * std::cos(c / 2), -e * std::polar(1.0, -(b - d) / 2) * std::sin(c / 2),
             e * std::polar(1.0, (b - d) / 2) * std::sin(c / 2), e * std::polar(1.0, (b + d) / 2) * std::cos(c / 2)}};
}

}  // namespace oracle
