// SPDX-License-Identifier: Apache-2.0

#include "pets/ida.hpp"

#include <algorithm>

namespace pets {

void check_threshold_params(unsigned t, unsigned n, const Field& field) {
    if (t < 1 || t > n)
        throw ParamError("threshold must satisfy 1 <= t <= n");
    if (n >= field.order())
        throw EvaluationPointsExhaustedError("n exceeds field capacity: " + field.name() +
                                             " supports at most " +
                                             std::to_string(field.order() - 1) +
                                             " participants");
}

Dispersal disperse(const SymbolVector& message, unsigned t, unsigned n) {
    const Field& field = message.field();
    check_threshold_params(t, n, field);

    const size_t chunk_len = (message.size() + t - 1) / t;
    const size_t pad_len = chunk_len * t - message.size();

    SymbolVector padded = message;
    padded.resize(chunk_len * t);

    std::vector<SymbolVector> chunks;
    chunks.reserve(t);
    for (unsigned j = 0; j < t; ++j)
        chunks.push_back(padded.slice(j * chunk_len, chunk_len));
    const VectorPolynomial poly(std::move(chunks));

    Dispersal out;
    out.pad_len = pad_len;
    out.fragments.reserve(n);
    for (unsigned i = 1; i <= n; ++i)
        out.fragments.push_back({i, poly.eval(field.element_from_index(i))});
    return out;
}

SymbolVector reconstruct(std::span<const Fragment> fragments, unsigned t, size_t pad_len) {
    if (fragments.size() < t)
        throw InsufficientSharesError("reconstruction needs " + std::to_string(t) +
                                      " fragments, got " + std::to_string(fragments.size()));
    if (t == 0)
        throw ParamError("threshold must be positive");

    // Deterministic choice among the supplied fragments: the t smallest
    // indices. Interpolation itself rejects duplicates.
    std::vector<const Fragment*> picked;
    picked.reserve(fragments.size());
    for (const auto& f : fragments)
        picked.push_back(&f);
    std::sort(picked.begin(), picked.end(),
              [](const Fragment* a, const Fragment* b) { return a->index < b->index; });
    for (size_t i = 1; i < picked.size(); ++i)
        if (picked[i]->index == picked[i - 1]->index)
            throw DuplicateIndexError("duplicate fragment index " +
                                      std::to_string(picked[i]->index));
    picked.resize(t);

    const Field& field = picked.front()->data.field();
    std::vector<EvalPoint> points;
    points.reserve(t);
    for (const Fragment* f : picked)
        points.emplace_back(field.element_from_index(f->index), f->data);

    const VectorPolynomial poly = interpolate(points);
    SymbolVector message(field, 0);
    for (size_t j = 0; j < poly.coefficient_count(); ++j)
        message.append(poly.coefficient(j));
    if (pad_len > message.size())
        throw ParamError("pad length exceeds reconstructed message");
    message.resize(message.size() - pad_len);
    return message;
}

} // namespace pets
