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

#include "qinfo/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qinfo {

namespace {

constexpr double kTol = 1e-9;
constexpr double kEigenFloor = 1e-12;

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd &m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    Eigen::VectorXd ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        ev[i] = ev[i] > kEigenFloor ? std::sqrt(ev[i]) : 0.0;
    }
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

DensityMatrix::DensityMatrix(Eigen::MatrixXcd rho) : rho_(std::move(rho)) {
    if (rho_.rows() == 0 || rho_.rows() != rho_.cols()) {
        throw std::invalid_argument("DensityMatrix: matrix must be square and non-empty");
    }
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kTol) {
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    }
    if (std::abs(rho_.trace().real() - 1.0) > kTol) {
        throw std::invalid_argument("DensityMatrix: trace is not 1");
    }
    if (eigenvalues().minCoeff() < -kTol) {
        throw std::invalid_argument("DensityMatrix: matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::pure(const StateVector &s) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(s.dim()));
    for (std::size_t i = 0; i < s.dim(); ++i) {
        v[static_cast<Eigen::Index>(i)] = s[i];
    }
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::diagonal(const std::vector<double> &probs) {
    Eigen::VectorXcd d(static_cast<Eigen::Index>(probs.size()));
    for (std::size_t i = 0; i < probs.size(); ++i) {
        d[static_cast<Eigen::Index>(i)] = probs[i];
    }
    return DensityMatrix(d.asDiagonal().toDenseMatrix());
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return DensityMatrix(Eigen::MatrixXcd::Identity(n, n) / static_cast<double>(dim));
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho_, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

DensityMatrix reduced_density_matrix(const StateVector &s, std::span<const std::size_t> keep) {
    const std::size_t n = s.num_qubits();
    uint64_t keep_mask = 0;
    for (std::size_t q : keep) {
        if (q >= n) {
            throw std::out_of_range("reduced_density_matrix: qubit index out of range");
        }
        if (keep_mask & (uint64_t{1} << q)) {
            throw std::invalid_argument("reduced_density_matrix: duplicate qubit");
        }
        keep_mask |= uint64_t{1} << q;
    }
    const std::size_t dk = std::size_t{1} << keep.size();
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));

    // Split each basis index into (kept part, traced part) and accumulate
    // rho[a][b] = sum_env psi[a,env] conj(psi[b,env]).
    auto kept_index = [&](std::size_t j) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < keep.size(); ++i) {
            k |= ((j >> keep[i]) & 1U) << i;
        }
        return k;
    };
    std::vector<std::vector<std::pair<std::size_t, cplx>>> by_env(std::size_t{1} << (n - keep.size()));
    for (std::size_t j = 0; j < s.dim(); ++j) {
        if (s[j] == cplx{0.0, 0.0}) {
            continue;
        }
        std::size_t env = 0;
        std::size_t bit = 0;
        for (std::size_t q = 0; q < n; ++q) {
            if (!(keep_mask & (uint64_t{1} << q))) {
                env |= ((j >> q) & 1U) << bit++;
            }
        }
        by_env[env].emplace_back(kept_index(j), s[j]);
    }
    for (const auto &group : by_env) {
        for (const auto &[a, va] : group) {
            for (const auto &[b, vb] : group) {
                rho(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) += va * std::conj(vb);
            }
        }
    }
    // Absorb the rounding of the input norm.
    rho /= rho.trace().real();
    return DensityMatrix(rho);
}

double von_neumann_entropy(const DensityMatrix &rho) {
    double s = 0.0;
    for (double ev : rho.eigenvalues()) {
        if (ev > kEigenFloor) {
            s -= ev * std::log2(ev);
        }
    }
    return std::max(0.0, s);
}

double fidelity(const DensityMatrix &rho, const DensityMatrix &sigma) {
    if (rho.dim() != sigma.dim()) {
        throw std::invalid_argument("fidelity: dimension mismatch");
    }
    const Eigen::MatrixXcd root = psd_sqrt(rho.matrix());
    const Eigen::MatrixXcd inner = root * sigma.matrix() * root;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((inner + inner.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
    double tr = 0.0;
    // Roundoff eigenvalues of a rank-deficient product would otherwise add
    // their square roots (~1e-8) to the trace.
    for (double ev : es.eigenvalues()) {
        if (ev > kEigenFloor) {
            tr += std::sqrt(ev);
        }
    }
    return std::clamp(tr * tr, 0.0, 1.0);
}

double schumacher_qubit_count(const DensityMatrix &rho, std::size_t n) {
    if (rho.dim() != 2) {
        throw std::invalid_argument("schumacher_qubit_count: expected a single-qubit density matrix");
    }
    return static_cast<double>(n) * von_neumann_entropy(rho);
}

}  // namespace qinfo
