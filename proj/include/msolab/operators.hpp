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

#include <memory>

#include <Eigen/Dense>

#include "msolab/basis.hpp"
#include "msolab/inner.hpp"
#include "msolab/kernels.hpp"
#include "msolab/laurent.hpp"

namespace msolab {

/// phi = minus_part + plus_part with the mean assigned to plus_part.
struct SymbolFunction {
    LaurentPolynomial value;
    LaurentPolynomial plus_part;
    LaurentPolynomial minus_part;
    Scalar mean = 0.0;

    SymbolFunction() = default;
    explicit SymbolFunction(LaurentPolynomial phi);

    int degree() const noexcept { return value.degree(); }
    SymbolFunction conjugate() const { return SymbolFunction(conj_function(value)); }
};

/// Matrix of an operator between two orthonormal bases.
struct DenseComplexMatrix {
    Eigen::MatrixXcd entries;
    std::shared_ptr<const OrthonormalBasis> domain;
    std::shared_ptr<const OrthonormalBasis> codomain;
};

/**
 * Operator K_theta^perp -> K_alpha^perp truncated at depth M, stored as the
 * blocks of the decomposition (theta H2 (+) H2_-) -> (alpha H2 (+) H2_-):
 *
 *     [ That      GammaCheck ]
 *     [ GammaHat  TCheck     ]
 *
 * Every block is (M+1) x (M+1). Entries are exact compressions; products of
 * truncated blocks are only trusted on indices <= interior_limit().
 */
class BlockOperator {
public:
    BlockOperator(BlaschkeProduct theta, BlaschkeProduct alpha, int depth, int symbol_degree = 0);

    Eigen::MatrixXcd That;
    Eigen::MatrixXcd GammaCheck;
    Eigen::MatrixXcd GammaHat;
    Eigen::MatrixXcd TCheck;

    const BlaschkeProduct& theta() const noexcept { return theta_; }
    const BlaschkeProduct& alpha() const noexcept { return alpha_; }
    int depth() const noexcept { return depth_; }
    /// Width of the band tagged as truncation edge (degree of the symbol).
    int symbol_degree() const noexcept { return symbol_degree_; }
    /// Last index (inclusive) of the interior window of each block.
    int interior_limit() const noexcept;

    Eigen::Index block_size() const noexcept { return depth_ + 1; }
    const OrthonormalBasis& domain_basis() const noexcept { return *domain_; }
    const OrthonormalBasis& codomain_basis() const noexcept { return *codomain_; }
    std::shared_ptr<const OrthonormalBasis> domain_ptr() const noexcept { return domain_; }
    std::shared_ptr<const OrthonormalBasis> codomain_ptr() const noexcept { return codomain_; }

    /// Full (2M+2) x (2M+2) matrix in the Kperp basis order.
    Eigen::MatrixXcd assemble() const;
    /// Operator K_alpha^perp -> K_theta^perp.
    BlockOperator adjoint() const;

    /// D applied to a domain function / D* applied to a codomain function,
    /// both returned as functions.
    LaurentPolynomial image(const LaurentPolynomial& f) const;
    LaurentPolynomial adjoint_image(const LaurentPolynomial& g) const;

private:
    BlaschkeProduct theta_;
    BlaschkeProduct alpha_;
    int depth_;
    int symbol_degree_;
    std::shared_ptr<const OrthonormalBasis> domain_;
    std::shared_ptr<const OrthonormalBasis> codomain_;
};

/// deg(phi) + effective_degree(theta) + effective_degree(alpha) + 2.
int minimum_depth(const BlaschkeProduct& theta, const BlaschkeProduct& alpha, int symbol_degree);

/// Truncated Toeplitz operator P_alpha M_phi restricted to K_theta, in the
/// Takenaka-Malmquist bases.
DenseComplexMatrix build_tto(const BlaschkeProduct& theta, const BlaschkeProduct& alpha, const SymbolFunction& phi);

/// Dual truncated Toeplitz operator P_alpha^perp M_phi on K_theta^perp,
/// truncated at depth M. Throws InputError when M is below minimum_depth().
BlockOperator build_dtto(const BlaschkeProduct& theta, const BlaschkeProduct& alpha, const SymbolFunction& phi, int depth);

/// Same compression without the guard-band check; `window` limits each block
/// to its leading rows/columns (the rest is left zero).
BlockOperator compress_dtto(const BlaschkeProduct& theta, const BlaschkeProduct& alpha, const LaurentPolynomial& phi,
                            int depth, Window window = {});

Eigen::VectorXcd apply(const DenseComplexMatrix& op, const Eigen::VectorXcd& x);
Eigen::VectorXcd apply(const BlockOperator& op, const Eigen::VectorXcd& x);

/// Splits a full matrix on Kperp(theta)@M -> Kperp(alpha)@M into blocks.
BlockOperator split_blocks(const Eigen::MatrixXcd& full, const BlaschkeProduct& theta, const BlaschkeProduct& alpha,
                           int depth, int symbol_degree = 0);

/// Matrix of f (x) g : x -> <x, g> f with g in the domain span, f in the codomain span.
Eigen::MatrixXcd dyad_matrix(const LaurentPolynomial& f, const LaurentPolynomial& g, const OrthonormalBasis& domain,
                             const OrthonormalBasis& codomain);

}  // namespace msolab
