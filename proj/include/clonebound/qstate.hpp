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

/**
 * @file
 * Core state representations and fidelity-based distance measures.
 *
 * All types are immutable after construction and all operations are pure
 * functions, so everything here is safe to call from concurrent workers.
 */

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "clonebound/errors.hpp"
#include "clonebound/tolerances.hpp"

namespace clonebound::qstate {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

enum class Sign { plus, minus };

/// Hermitian, positive semidefinite, unit-trace operator. Construct through
/// make_density, which validates and clamps the tiny negative eigenvalues
/// that survive floating-point arithmetic.
class DensityOperator {
  public:
    Eigen::Index dim() const { return mat_.rows(); }
    const CMatrix& matrix() const { return mat_; }

  private:
    explicit DensityOperator(CMatrix m) : mat_(std::move(m)) {}
    CMatrix mat_;

    friend DensityOperator make_density(const CMatrix&, const Tolerances&);
};

/// Unit vector up to the configured norm tolerance; stored renormalized.
class PureState {
  public:
    Eigen::Index dim() const { return vec_.size(); }
    const CVector& vector() const { return vec_; }

  private:
    explicit PureState(CVector v) : vec_(std::move(v)) {}
    CVector vec_;

    friend PureState make_pure(const CVector&, const Tolerances&);
};

/// Operator-sum (Kraus) representation of a deterministic quantum operation.
class Channel {
  public:
    const std::vector<CMatrix>& kraus() const { return kraus_; }
    Eigen::Index dim_in() const { return kraus_.front().cols(); }
    Eigen::Index dim_out() const { return kraus_.front().rows(); }

  private:
    explicit Channel(std::vector<CMatrix> ks) : kraus_(std::move(ks)) {}
    std::vector<CMatrix> kraus_;

    friend Channel make_channel(std::vector<CMatrix>, const Tolerances&);
};

/// Fidelity together with the three equivalent distances derived from it:
/// cos^2(angle) = fidelity, sine_distance = sin(angle),
/// bures_metric = sqrt(2 - 2 sqrt(fidelity)).
struct MetricReport {
    double fidelity = 1.0;
    double angle = 0.0;
    double sine_distance = 0.0;
    double bures_metric = 0.0;
};

/// Validates Hermiticity, positivity (eigenvalues >= -floor, clamped to 0,
/// matrix reassembled) and unit trace.
/// Throws NotHermitian, NotPositive, BadTrace.
DensityOperator make_density(const CMatrix& matrix,
                             const Tolerances& tol = Tolerances{});

/// Throws DimensionMismatch on a zero vector or norm outside tolerance.
PureState make_pure(const CVector& vector, const Tolerances& tol = Tolerances{});

/// (cos a, +/- sin a) for a in [0, pi/4]. Throws AlphaOutOfRange.
PureState real_qubit_state(double alpha, Sign sign);

DensityOperator to_density(const PureState& psi);

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);
PureState tensor(const PureState& a, const PureState& b);

/// k-fold tensor power; refuses results beyond tol.dimension_cap
/// (DimensionCapExceeded). k >= 1.
DensityOperator tensor_power(const DensityOperator& rho, int k,
                             const Tolerances& tol = Tolerances{});
PureState tensor_power(const PureState& psi, int k,
                       const Tolerances& tol = Tolerances{});

/// Uhlmann fidelity (tr|sqrt(omega) sqrt(sigma)|)^2, clamped to [0, 1].
/// Symmetric in its arguments. Throws DimensionMismatch.
double fidelity(const DensityOperator& omega, const DensityOperator& sigma);

MetricReport metrics(const DensityOperator& omega, const DensityOperator& sigma);

/// Validates completeness sum K^dag K = I. Throws IncompleteKraus,
/// DimensionMismatch on inconsistent shapes.
Channel make_channel(std::vector<CMatrix> kraus_ops,
                     const Tolerances& tol = Tolerances{});

/// sum K rho K^dag, validated as a DensityOperator.
DensityOperator apply_channel(const Channel& ch, const DensityOperator& rho,
                              const Tolerances& tol = Tolerances{});

/// Square root of a Hermitian positive semidefinite matrix via
/// eigendecomposition, negative eigenvalues clamped to 0.
CMatrix sqrt_psd(const CMatrix& a);

/// tr|A| = sum of singular values of A.
double trace_abs(const CMatrix& a);

} // namespace clonebound::qstate
