// SPDX-License-Identifier: Apache-2.0

/*
 * Information dispersal: split a message into n fragments of
 * ceil(|M|/t) symbols such that any t of them reconstruct it exactly.
 * Fragments are Reed-Solomon evaluations and carry no secrecy; any erasure
 * code with the same any-t-of-n property could sit behind this interface.
 */

#ifndef PETS_IDA_HPP
#define PETS_IDA_HPP

#include <vector>

#include "pets/polynomial.hpp"

namespace pets {

struct Fragment {
    unsigned index; // participant index in [1, n]
    SymbolVector data;
};

struct Dispersal {
    std::vector<Fragment> fragments; // all of equal length
    size_t pad_len;                  // zero symbols appended to M before chunking
};

// Zero-pads M to a multiple of t, splits it into t chunks that become the
// coefficients of a degree-(t-1) vector polynomial, and evaluates at the
// canonical points alpha_1..alpha_n. Chunk j covers symbols [j*L, (j+1)*L).
Dispersal disperse(const SymbolVector& message, unsigned t, unsigned n);

// Exact inverse of disperse for any t fragments with distinct indices.
// Fewer than t fragments throw InsufficientSharesError.
SymbolVector reconstruct(std::span<const Fragment> fragments, unsigned t, size_t pad_len);

// Shared parameter validation: 1 <= t <= n <= q-1.
void check_threshold_params(unsigned t, unsigned n, const Field& field);

} // namespace pets

#endif
