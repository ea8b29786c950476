// SPDX-License-Identifier: Apache-2.0

/*
 * Polynomials with SymbolVector coefficients: Horner evaluation and Lagrange
 * interpolation. A vector polynomial is exactly L independent scalar
 * polynomials, one per symbol position, processed together.
 */

#ifndef PETS_POLYNOMIAL_HPP
#define PETS_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "pets/symbol_vector.hpp"

namespace pets {

using EvalPoint = std::pair<FieldElement, SymbolVector>;

class VectorPolynomial {
  public:
    // Coefficients in order of ascending degree, constant term first. All
    // must have the same length and field; at least one is required.
    explicit VectorPolynomial(std::vector<SymbolVector> coefficients);

    const Field& field() const { return coefficients_.front().field(); }
    size_t coefficient_count() const { return coefficients_.size(); }
    size_t value_length() const { return coefficients_.front().size(); }
    const SymbolVector& coefficient(size_t i) const { return coefficients_.at(i); }
    const SymbolVector& constant_term() const { return coefficients_.front(); }

    SymbolVector eval(FieldElement x) const;

    friend bool operator==(const VectorPolynomial& a, const VectorPolynomial& b);

  private:
    std::vector<SymbolVector> coefficients_;
};

// Unique polynomial of degree < points.size() through all points. Points
// must have pairwise-distinct x values and equal vector lengths. Exact
// inverse of eval: interpolating any t evaluations of a polynomial with t
// coefficients returns the same coefficient sequence.
VectorPolynomial interpolate(std::span<const EvalPoint> points);

// Constant-term-only fast path: f(0) without recovering the other
// coefficients. Requires nonzero, pairwise-distinct x values.
SymbolVector interpolate_constant(std::span<const EvalPoint> points);

// Lagrange weights w_j with f(0) = sum_j w_j f(x_j), for nonzero distinct
// points. For any such point set the weights sum to 1.
std::vector<uint8_t> lagrange_constant_weights(const Field& field,
                                               std::span<const uint8_t> xs);

} // namespace pets

#endif
