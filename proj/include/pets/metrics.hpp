// SPDX-License-Identifier: Apache-2.0

/*
 * Share-size accounting and information rates. Payloads always come from
 * the schemes' own geometry calculators, never re-typed closed forms, and
 * rates are exact rationals so the agreement checks are equalities. Header
 * bytes are framing, not information, and are excluded throughout.
 */

#ifndef PETS_METRICS_HPP
#define PETS_METRICS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pets/share.hpp"

namespace pets {

// Minimal exact rational: normalized, positive denominator.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(int64_t num, int64_t den);

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }

    std::string str() const; // "8/15", integers without the "/1"

    friend Rational operator*(Rational a, Rational b);
    friend bool operator==(Rational a, Rational b) = default;
    friend bool operator<(Rational a, Rational b);

  private:
    int64_t num_;
    int64_t den_;
};

struct RateReport {
    SchemeId scheme;
    unsigned t = 0;
    unsigned n = 0;
    size_t sym_S = 0; // secret symbols, before any scheme padding
    size_t sym_K = 0; // key symbols; ignored by shamir
    size_t per_share_payload = 0;
    size_t total_payload = 0;
    Rational rate; // sym_S / total_payload
    bool pad_free = false;
};

// Payload measured through the scheme's live geometry for a secret of
// sym_S symbols and key of sym_K symbols.
RateReport rate_of(SchemeId scheme, size_t sym_S, size_t sym_K, unsigned t, unsigned n);

// The constant-rate limit when t = delta * n: delta * sym_S / (sym_S+sym_K).
// Matches rate_of for every pad-free instantiation with integral delta * n.
Rational rate_asymptotic_pets(Rational delta, size_t sym_S, size_t sym_K);

// Reports for every scheme and every 1 <= t <= n <= max_n over the given
// (sym_S, sym_K) geometries.
struct SweepGeometry {
    size_t sym_S;
    size_t sym_K;
};
std::vector<RateReport> scheme_sweep(unsigned max_n,
                                     std::span<const SweepGeometry> geometries);

std::string rate_table_text(std::span<const RateReport> rows);
std::string rate_table_csv(std::span<const RateReport> rows);

} // namespace pets

#endif
