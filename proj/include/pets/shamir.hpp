// SPDX-License-Identifier: Apache-2.0

/*
 * Information-theoretic (t,n)-threshold sharing. Used standalone as the
 * baseline scheme and as the key-sharing subroutine of the computational
 * schemes. Vector secrets are shared as independent scalar instances per
 * symbol position, with fresh uniform coefficients for each position.
 */

#ifndef PETS_SHAMIR_HPP
#define PETS_SHAMIR_HPP

#include <vector>

#include "pets/polynomial.hpp"
#include "pets/random.hpp"
#include "pets/share.hpp"

namespace pets {

struct ShamirShare {
    unsigned index;     // participant index in [1, n]
    SymbolVector value; // f(alpha_index), |S| symbols
};

// Shares S with a random polynomial f(x) = S + r_1 x + ... + r_{t-1} x^{t-1}
// per symbol position; share i is f(alpha_i). Each share is exactly as large
// as the secret.
std::vector<ShamirShare> shamir_share(const SymbolVector& secret, unsigned t, unsigned n,
                                      RandomSource& rng);

// Constant term of the polynomial through any t of the shares. Fewer than t
// shares throw InsufficientSharesError; duplicate indices throw.
SymbolVector shamir_reconstruct(std::span<const ShamirShare> shares, unsigned t);

// Byte-secret front end producing framed shares (scheme id 0x01).
std::vector<Share> shamir_split(std::span<const uint8_t> secret, unsigned t, unsigned n,
                                const Field& field, RandomSource& rng);
std::vector<uint8_t> shamir_join(std::span<const Share> shares);

// Exhaustive leakage census for scalar secrets over a small field: for every
// unauthorized subset of size t-1, the distribution of observed share tuples
// conditioned on each secret value. Perfect secrecy holds iff for each
// subset all conditionals are identical. Works by enumerating every secret
// and every coefficient tuple; throws SpaceTooLargeError beyond q^t = 2^16.
struct LeakageCensus {
    struct SubsetReport {
        std::vector<unsigned> subset; // observing participant indices
        // counts_per_secret[s][packed tuple] over all q^(t-1) coefficient
        // draws, where tuples pack observed values base q
        std::vector<std::vector<unsigned>> counts_per_secret;
    };
    std::vector<SubsetReport> subsets;
    bool perfect = false;
};

LeakageCensus shamir_leakage_census(unsigned t, unsigned n, const Field& field);

} // namespace pets

#endif
