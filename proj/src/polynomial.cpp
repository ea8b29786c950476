// SPDX-License-Identifier: Apache-2.0

#include "pets/polynomial.hpp"

namespace pets {

namespace {

void check_points(std::span<const EvalPoint> points) {
    if (points.empty())
        throw ParamError("interpolation needs at least one point");
    const Field& field = points.front().first.field();
    const size_t length = points.front().second.size();
    for (const auto& [x, v] : points) {
        detail::require_same_field(field, x.field(), "interpolate");
        detail::require_same_field(field, v.field(), "interpolate");
        if (v.size() != length)
            throw ParamError("interpolation points have mismatched vector lengths");
    }
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw DuplicateIndexError("interpolation points share an x value");
}

} // namespace

VectorPolynomial::VectorPolynomial(std::vector<SymbolVector> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty())
        throw ParamError("polynomial needs at least one coefficient");
    const Field& field = coefficients_.front().field();
    const size_t length = coefficients_.front().size();
    for (const auto& c : coefficients_) {
        detail::require_same_field(field, c.field(), "polynomial");
        if (c.size() != length)
            throw ParamError("polynomial coefficients have mismatched lengths");
    }
}

SymbolVector VectorPolynomial::eval(FieldElement x) const {
    detail::require_same_field(field(), x.field(), "eval");
    // Horner, per symbol position.
    SymbolVector acc = coefficients_.back();
    for (size_t i = coefficients_.size() - 1; i-- > 0;) {
        SymbolVector next = coefficients_[i];
        next.add_scaled_in_place(acc, x.value());
        acc = std::move(next);
    }
    return acc;
}

bool operator==(const VectorPolynomial& a, const VectorPolynomial& b) {
    return a.coefficients_ == b.coefficients_;
}

VectorPolynomial interpolate(std::span<const EvalPoint> points) {
    check_points(points);
    const Field& field = points.front().first.field();
    const size_t t = points.size();
    const size_t length = points.front().second.size();

    // N(x) = prod_j (x + x_j), ascending coefficient order.
    std::vector<uint8_t> numerator(t + 1, 0);
    numerator[0] = 1;
    size_t degree = 0;
    for (const auto& [x, v] : points) {
        for (size_t k = degree + 1;; --k) {
            const uint8_t shifted = (k > 0) ? numerator[k - 1] : 0;
            numerator[k] = field.add(shifted, field.mul(numerator[k], x.value()));
            if (k == 0)
                break;
        }
        ++degree;
    }

    std::vector<SymbolVector> coeffs(t, SymbolVector(field, length));
    std::vector<uint8_t> basis(t);
    for (const auto& [xj, vj] : points) {
        // basis_j(x) = N(x) / (x + x_j), by synthetic division.
        uint8_t carry = 0;
        for (size_t k = t; k-- > 0;) {
            basis[k] = field.add(numerator[k + 1], field.mul(carry, xj.value()));
            carry = basis[k];
        }
        // denom_j = prod_{m != j} (x_j + x_m) = basis_j(x_j).
        uint8_t denom = 0;
        for (size_t k = t; k-- > 0;)
            denom = field.add(basis[k], field.mul(denom, xj.value()));
        const uint8_t scale = field.inv(denom);
        for (size_t k = 0; k < t; ++k)
            coeffs[k].add_scaled_in_place(vj, field.mul(basis[k], scale));
    }
    return VectorPolynomial(std::move(coeffs));
}

SymbolVector interpolate_constant(std::span<const EvalPoint> points) {
    check_points(points);
    const Field& field = points.front().first.field();
    std::vector<uint8_t> xs;
    xs.reserve(points.size());
    for (const auto& [x, v] : points)
        xs.push_back(x.value());
    const std::vector<uint8_t> weights = lagrange_constant_weights(field, xs);

    SymbolVector secret(field, points.front().second.size());
    for (size_t j = 0; j < points.size(); ++j)
        secret.add_scaled_in_place(points[j].second, weights[j]);
    return secret;
}

std::vector<uint8_t> lagrange_constant_weights(const Field& field,
                                               std::span<const uint8_t> xs) {
    std::vector<uint8_t> weights(xs.size());
    for (size_t j = 0; j < xs.size(); ++j) {
        if (xs[j] == 0)
            throw ParamError("constant-term weights need nonzero points");
        uint8_t numer = 1;
        uint8_t denom = 1;
        for (size_t m = 0; m < xs.size(); ++m) {
            if (m == j)
                continue;
            if (xs[m] == xs[j])
                throw DuplicateIndexError("constant-term weights need distinct points");
            numer = field.mul(numer, xs[m]);
            denom = field.mul(denom, field.add(xs[m], xs[j]));
        }
        weights[j] = field.div(numer, denom);
    }
    return weights;
}

} // namespace pets
