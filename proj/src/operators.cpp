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

#include "msolab/operators.hpp"

#include <string>

#include "msolab/error.hpp"
#include "msolab/spaces.hpp"

namespace msolab {
namespace {

std::span<const LaurentPolynomial> head(const OrthonormalBasis& b, int depth) {
    return std::span<const LaurentPolynomial>(b.vectors).first(static_cast<std::size_t>(depth + 1));
}

std::span<const LaurentPolynomial> tail(const OrthonormalBasis& b, int depth) {
    return std::span<const LaurentPolynomial>(b.vectors).subspan(static_cast<std::size_t>(depth + 1));
}

void check_square_blocks(const BlockOperator& op) {
    const Eigen::Index n = op.block_size();
    for (const auto* m : {&op.That, &op.GammaCheck, &op.GammaHat, &op.TCheck})
        if (m->rows() != n || m->cols() != n) throw InputError("block dimensions do not match truncation depth");
}

// Zero-padded copy of a windowed compression.
Eigen::MatrixXcd padded(const Eigen::MatrixXcd& m, Eigen::Index n) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
    out.topLeftCorner(m.rows(), m.cols()) = m;
    return out;
}

}  // namespace

SymbolFunction::SymbolFunction(LaurentPolynomial phi)
    : value(std::move(phi)),
      plus_part(positive_part(value)),
      minus_part(negative_part(value)),
      mean(value.coeff(0)) {}

BlockOperator::BlockOperator(BlaschkeProduct theta, BlaschkeProduct alpha, int depth, int symbol_degree)
    : theta_(std::move(theta)), alpha_(std::move(alpha)), depth_(depth), symbol_degree_(symbol_degree) {
    if (depth < 0) throw InputError("truncation depth must be nonnegative");
    if (symbol_degree < 0) throw InputError("symbol degree must be nonnegative");
    domain_ = std::make_shared<const OrthonormalBasis>(basis_Kperp(theta_, depth));
    codomain_ = std::make_shared<const OrthonormalBasis>(basis_Kperp(alpha_, depth));
    const Eigen::Index n = depth + 1;
    That = GammaCheck = GammaHat = TCheck = Eigen::MatrixXcd::Zero(n, n);
}

int BlockOperator::interior_limit() const noexcept {
    return depth_ - symbol_degree_ - theta_.effective_degree() - alpha_.effective_degree();
}

Eigen::MatrixXcd BlockOperator::assemble() const {
    const Eigen::Index n = block_size();
    Eigen::MatrixXcd full(2 * n, 2 * n);
    full.topLeftCorner(n, n) = That;
    full.topRightCorner(n, n) = GammaCheck;
    full.bottomLeftCorner(n, n) = GammaHat;
    full.bottomRightCorner(n, n) = TCheck;
    return full;
}

BlockOperator BlockOperator::adjoint() const {
    BlockOperator out(alpha_, theta_, depth_, symbol_degree_);
    out.That = That.adjoint();
    out.GammaCheck = GammaHat.adjoint();
    out.GammaHat = GammaCheck.adjoint();
    out.TCheck = TCheck.adjoint();
    return out;
}

LaurentPolynomial BlockOperator::image(const LaurentPolynomial& f) const {
    return codomain_->synthesize(msolab::apply(*this, domain_->coordinates(f)));
}

LaurentPolynomial BlockOperator::adjoint_image(const LaurentPolynomial& g) const {
    const Eigen::VectorXcd y = codomain_->coordinates(g);
    const Eigen::Index n = block_size();
    Eigen::VectorXcd x(2 * n);
    x.head(n) = That.adjoint() * y.head(n) + GammaHat.adjoint() * y.tail(n);
    x.tail(n) = GammaCheck.adjoint() * y.head(n) + TCheck.adjoint() * y.tail(n);
    return domain_->synthesize(x);
}

int minimum_depth(const BlaschkeProduct& theta, const BlaschkeProduct& alpha, int symbol_degree) {
    return symbol_degree + theta.effective_degree() + alpha.effective_degree() + 2;
}

DenseComplexMatrix build_tto(const BlaschkeProduct& theta, const BlaschkeProduct& alpha, const SymbolFunction& phi) {
    auto dom = std::make_shared<const OrthonormalBasis>(tm_basis(theta));
    auto cod = std::make_shared<const OrthonormalBasis>(tm_basis(alpha));
    return {compress(phi.value, dom->vectors, cod->vectors), dom, cod};
}

BlockOperator build_dtto(const BlaschkeProduct& theta, const BlaschkeProduct& alpha, const SymbolFunction& phi,
                         int depth) {
    const int need = minimum_depth(theta, alpha, phi.degree());
    if (depth < need)
        throw InputError("truncation depth M=" + std::to_string(depth) + " is inside the guard band; need M >= " +
                         std::to_string(need));
    return compress_dtto(theta, alpha, phi.value, depth);
}

BlockOperator compress_dtto(const BlaschkeProduct& theta, const BlaschkeProduct& alpha, const LaurentPolynomial& phi,
                            int depth, Window window) {
    BlockOperator op(theta, alpha, depth, phi.degree());
    const auto& dom = op.domain_basis();
    const auto& cod = op.codomain_basis();
    const Eigen::Index n = op.block_size();
    op.That = padded(compress(phi, head(dom, depth), head(cod, depth), window), n);
    op.GammaCheck = padded(compress(phi, tail(dom, depth), head(cod, depth), window), n);
    op.GammaHat = padded(compress(phi, head(dom, depth), tail(cod, depth), window), n);
    op.TCheck = padded(compress(phi, tail(dom, depth), tail(cod, depth), window), n);
    return op;
}

Eigen::VectorXcd apply(const DenseComplexMatrix& op, const Eigen::VectorXcd& x) {
    if (x.size() != op.entries.cols())
        throw InputError("vector of length " + std::to_string(x.size()) + " does not match domain dimension " +
                         std::to_string(op.entries.cols()));
    return op.entries * x;
}

Eigen::VectorXcd apply(const BlockOperator& op, const Eigen::VectorXcd& x) {
    const Eigen::Index n = op.block_size();
    if (x.size() != 2 * n)
        throw InputError("vector of length " + std::to_string(x.size()) + " does not match domain dimension " +
                         std::to_string(2 * n));
    Eigen::VectorXcd y(2 * n);
    y.head(n) = op.That * x.head(n) + op.GammaCheck * x.tail(n);
    y.tail(n) = op.GammaHat * x.head(n) + op.TCheck * x.tail(n);
    return y;
}

BlockOperator split_blocks(const Eigen::MatrixXcd& full, const BlaschkeProduct& theta, const BlaschkeProduct& alpha,
                           int depth, int symbol_degree) {
    const Eigen::Index n = depth + 1;
    if (full.rows() != 2 * n || full.cols() != 2 * n)
        throw InputError("matrix is " + std::to_string(full.rows()) + "x" + std::to_string(full.cols()) +
                         ", expected " + std::to_string(2 * n) + "x" + std::to_string(2 * n));
    BlockOperator op(theta, alpha, depth, symbol_degree);
    op.That = full.topLeftCorner(n, n);
    op.GammaCheck = full.topRightCorner(n, n);
    op.GammaHat = full.bottomLeftCorner(n, n);
    op.TCheck = full.bottomRightCorner(n, n);
    check_square_blocks(op);
    return op;
}

Eigen::MatrixXcd dyad_matrix(const LaurentPolynomial& f, const LaurentPolynomial& g, const OrthonormalBasis& domain,
                             const OrthonormalBasis& codomain) {
    return codomain.coordinates(f) * domain.coordinates(g).adjoint();
}

}  // namespace msolab
