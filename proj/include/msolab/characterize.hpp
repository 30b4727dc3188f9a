/*
   Copyright 2026 The msolab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "msolab/basis.hpp"
#include "msolab/operators.hpp"
#include "msolab/spaces.hpp"

namespace msolab {

struct Witness {
    std::string where;
    double deviation = 0.0;
};

/// Outcome of one identity test. pass <=> defect <= tolerance; failing
/// reports carry up to three witnesses.
struct DefectReport {
    std::string condition;
    double defect = 0.0;
    double tolerance = 0.0;
    bool pass = true;
    std::vector<Witness> witnesses;
};

/// Condition identifiers used in reports.
namespace condition_id {
inline constexpr const char* kShift = "dfshinv";
inline constexpr const char* kAnalytic = "danal";
inline constexpr const char* kBlockToeplitzHat = "thm5.7-1";
inline constexpr const char* kBlockToeplitzCheck = "thm5.7-2";
inline constexpr const char* kBlockHankelHat = "thm5.7-3";
inline constexpr const char* kBlockHankelCheck = "thm5.7-4";
inline constexpr const char* kAdttoShift = "th8.12-1";
inline constexpr const char* kAdttoCorner = "th8.12-2";
inline constexpr const char* kAdttoIntertwine = "th8.12-3";
inline constexpr const char* kAdttoBoundary = "th8.12-4";
}  // namespace condition_id

/// 1e-10, or 1e-8 when a zero of theta or alpha has modulus above 1/2.
double default_tolerance(const BlaschkeProduct& theta, const BlaschkeProduct& alpha);

/// max |<A z f, z g> - <A f, g>| over admissible basis pairs of both sides.
DefectReport shift_invariance_defect(const Eigen::MatrixXcd& a, const OrthonormalBasis& domain,
                                     const OrthonormalBasis& codomain, double tolerance = 1e-10);

/// Solution space of the homogeneous shift-invariance system.
struct ShiftInvariantSpace {
    int dimension = 0;
    /// Operator matrices in the bases below, orthonormal in Frobenius norm.
    std::vector<Eigen::MatrixXcd> basis;
    OrthonormalBasis domain;
    OrthonormalBasis codomain;
};

/// Subspace::Model uses the model-space bases; Subspace::ModelPerp uses
/// Kperp@depth and is restricted to monomial theta and alpha.
ShiftInvariantSpace solve_shift_invariant_space(const BlaschkeProduct& theta, const BlaschkeProduct& alpha,
                                                Subspace space, int depth = 0);

/// max |X(i,j) - X(i+1,j+1)| over i, j < n.
double toeplitz_deviation(const Eigen::MatrixXcd& x, Eigen::Index n);
/// max |X(i,j+1) - X(i+1,j)| over i, j < n.
double hankel_deviation(const Eigen::MatrixXcd& x, Eigen::Index n);

/// Per-block Toeplitz/Hankel tests on the interior window.
std::vector<DefectReport> check_block_conditions(const BlockOperator& d, double tolerance = 1e-10);

struct AdttoVerdict {
    std::vector<DefectReport> reports;
    bool pass = true;
};

/// The four-condition membership test for K_theta^perp -> K_alpha^perp.
AdttoVerdict check_adtto(const BlockOperator& d, double tolerance = 1e-10);

/// Right-hand side of the corner condition on the interior window: the
/// H2_- block predicted from That through C_alpha and multiplication by theta.
Eigen::MatrixXcd corner_condition_rhs(const BlockOperator& d);

enum class RecoveryMethod { Boundary, Zbar };

struct Recovery {
    SymbolFunction symbol;
    /// Largest spectral norm over the four interior blocks of D - D_symbol.
    double residual = 0.0;
};

/// Coefficients at or below this modulus are dropped from recovered symbols.
inline constexpr double kRecoveryChop = 1e-12;

Recovery recover_symbol(const BlockOperator& d, RecoveryMethod method);

struct AnalyticVerdict {
    bool analytic = true;
    DefectReport report;
};

/// Tests <D conj(z), conj(z)^(k+1)> = 0 for 1 <= k <= M.
AnalyticVerdict is_analytic_adtto(const BlockOperator& d, double tolerance = 1e-11);

}  // namespace msolab
