// Copyright 2026 The clonebound developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "clonebound/errors.hpp"
#include "clonebound/tolerances.hpp"

namespace clonebound::circuit {

using Complex = std::complex<double>;

/// Dense statevector over a small qubit register. Bit p of an amplitude
/// index is the state of qubit p (qubit 0 = lowest-order bit). Gate
/// application mutates the single amplitude buffer; distinct instances are
/// independent.
class StateVector {
  public:
    /// |0...0> on num_qubits qubits. Throws RegisterTooLarge beyond the cap.
    explicit StateVector(int num_qubits, const Tolerances& tol = Tolerances{});

    /// Product state: qubits[p] is the (normalized) state of qubit p.
    static StateVector product(const std::vector<Eigen::Vector2cd>& qubits,
                               const Tolerances& tol = Tolerances{});

    void apply_single(int target, const Eigen::Matrix2cd& u);

    /// u is 4x4 in the basis |b_a b_b> with index 2*b_a + b_b.
    void apply_two(int target_a, int target_b, const Eigen::Matrix4cd& u);

    double norm() const;
    Complex inner(const StateVector& other) const;

    /// Removes `qubit`, keeping the bit=0 slice renormalized.
    /// residual receives the norm of the discarded bit=1 slice.
    StateVector drop_qubit(int qubit, double& residual) const;

    int num_qubits() const { return num_qubits_; }
    const std::vector<Complex>& amplitudes() const { return amps_; }
    Eigen::VectorXcd as_vector() const;

  private:
    StateVector() = default;
    int num_qubits_ = 0;
    std::vector<Complex> amps_;

    void check_target(int target) const;
};

} // namespace clonebound::circuit
