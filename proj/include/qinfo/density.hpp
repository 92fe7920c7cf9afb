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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qinfo/state.hpp"

namespace qinfo {

/// Density operator of a d-level system: Hermitian, unit trace, positive
/// semidefinite (each within 1e-9).
class DensityMatrix {
  public:
    /// Throws std::invalid_argument when the matrix is not a valid state.
    explicit DensityMatrix(Eigen::MatrixXcd rho);

    static DensityMatrix pure(const StateVector &s);
    static DensityMatrix diagonal(const std::vector<double> &probs);
    static DensityMatrix maximally_mixed(std::size_t dim);

    std::size_t dim() const { return static_cast<std::size_t>(rho_.rows()); }
    const Eigen::MatrixXcd &matrix() const { return rho_; }

    /// Ascending eigenvalues.
    Eigen::VectorXd eigenvalues() const;

  private:
    Eigen::MatrixXcd rho_;
};

/// Reduced state of the qubits in `keep`, ordered as listed (keep[0] becomes
/// qubit 0 of the result).
DensityMatrix reduced_density_matrix(const StateVector &s, std::span<const std::size_t> keep);

/// -Tr rho log2 rho from the spectrum; eigenvalues below 1e-12 count as 0.
double von_neumann_entropy(const DensityMatrix &rho);

/// (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double fidelity(const DensityMatrix &rho, const DensityMatrix &sigma);

/// Qubits needed to carry n copies of a single-qubit source rho, n S(rho).
double schumacher_qubit_count(const DensityMatrix &rho, std::size_t n);

}  // namespace qinfo
