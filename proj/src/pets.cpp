// SPDX-License-Identifier: Apache-2.0

#include "pets/pets.hpp"

#include <algorithm>

#include "pets/ida.hpp"
#include "pets/polynomial.hpp"

namespace pets {

PetsGeometry PetsGeometry::plan_symbols(size_t orig_sym, size_t sym_K, unsigned t, unsigned n) {
    if (t < 1 || t > n)
        throw ParamError("threshold must satisfy 1 <= t <= n");
    PetsGeometry g;
    g.t = t;
    g.n = n;
    g.sym_K = sym_K;
    g.head_blocks = t - 1;
    g.sym_S = std::max(orig_sym, size_t(t - 1) * sym_K);
    g.plain_pad = g.sym_S - orig_sym;
    g.tail_len = g.sym_S - size_t(t - 1) * sym_K;
    g.frag_len = (g.tail_len + t - 1) / t;
    g.tail_pad = g.frag_len * t - g.tail_len;
    g.payload = sym_K + g.frag_len;
    return g;
}

PetsGeometry pets_plan(size_t secret_len, unsigned t, unsigned n, const CipherSuite& suite,
                       const Field& field) {
    check_threshold_params(t, n, field);
    const unsigned per_byte = field.symbols_per_byte();
    PetsGeometry g = PetsGeometry::plan_symbols(secret_len * per_byte,
                                                suite.key_len() * per_byte, t, n);
    g.orig_len = secret_len;
    return g;
}

std::vector<Share> pets_split(std::span<const uint8_t> secret, unsigned t, unsigned n,
                              const CipherSuite& suite, const Field& field, RandomSource& rng) {
    if (field.id() == FieldId::none)
        throw ParamError("field has no wire id");
    const PetsGeometry g = pets_plan(secret.size(), t, n, suite, field);

    // Pad the plaintext, in bytes; sym_S and the original length are both
    // whole bytes because m divides 8.
    std::vector<uint8_t> plaintext(secret.begin(), secret.end());
    plaintext.resize(g.sym_S / field.symbols_per_byte());

    const SecretKey key = suite.keygen(rng);
    const SymbolVector cipher_symbols =
        SymbolVector::from_bytes(field, suite.enc(key, plaintext));
    const SymbolVector key_symbols = suite.key_symbols(field, key);

    // f(x) = K + E_1 x + ... + E_{t-1} x^{t-1}
    std::vector<SymbolVector> coeffs;
    coeffs.reserve(t);
    coeffs.push_back(key_symbols);
    for (unsigned j = 0; j + 1 < t; ++j)
        coeffs.push_back(cipher_symbols.slice(j * g.sym_K, g.sym_K));
    const VectorPolynomial poly(std::move(coeffs));

    const SymbolVector tail = cipher_symbols.slice((t - 1) * g.sym_K, g.tail_len);
    Dispersal dispersal = disperse(tail, t, n);

    ShareHeader head;
    head.scheme_id = SchemeId::pets;
    head.field_id = uint8_t(field.id());
    head.cipher_id = suite.id();
    head.t = uint8_t(t);
    head.n = uint8_t(n);
    head.orig_len = secret.size();
    head.plain_pad = uint32_t(g.plain_pad);
    head.tail_pad = uint32_t(g.tail_pad);
    head.poly_part_len = uint32_t(g.sym_K);
    head.frag_part_len = uint32_t(g.frag_len);

    std::vector<Share> shares;
    shares.reserve(n);
    for (unsigned i = 1; i <= n; ++i) {
        head.index = uint8_t(i);
        shares.push_back({head, poly.eval(field.element_from_index(i)),
                          std::move(dispersal.fragments[i - 1].data)});
    }
    return shares;
}

std::vector<uint8_t> pets_join(std::span<const Share> shares) {
    const ShareHeader& head = validate_share_set(shares);
    if (head.scheme_id != SchemeId::pets)
        throw HeaderMismatchError("not pets shares");
    const Field& field = Field::from_id(FieldId(head.field_id));
    const CipherSuite& suite = suite_from_id(head.cipher_id);
    const unsigned t = head.t;

    std::vector<Fragment> fragments;
    std::vector<EvalPoint> points;
    fragments.reserve(shares.size());
    points.reserve(t);
    for (const Share& s : shares) {
        fragments.push_back({s.index(), s.frag_part});
        if (points.size() < t)
            points.emplace_back(field.element_from_index(s.index()), s.poly_part);
    }

    const SymbolVector tail = reconstruct(fragments, t, head.tail_pad);
    const VectorPolynomial poly = interpolate(points);

    std::vector<uint8_t> key = poly.constant_term().to_bytes();
    key.resize(suite.key_len());

    SymbolVector cipher_symbols(field, 0);
    for (unsigned j = 1; j < t; ++j)
        cipher_symbols.append(poly.coefficient(j));
    cipher_symbols.append(tail);

    std::vector<uint8_t> plaintext = suite.dec(key, cipher_symbols.to_bytes());
    plaintext.resize(head.orig_len);
    return plaintext;
}

bool pets_uniformity_census(unsigned t, unsigned n, const Field& field) {
    check_threshold_params(t, n, field);
    const unsigned q = field.order();
    double work = 1.0;
    for (unsigned i = 0; i < t; ++i)
        work *= q;
    if (work > 65536.0 || n > 16)
        throw SpaceTooLargeError("uniformity census limited to q^t <= 2^16 and n <= 16");
    if (t == 1)
        return true; // vacuous: no nonempty subset below threshold

    const unsigned observed = t - 1;
    size_t block_space = 1; // (E_1, ..., E_{t-1}) tuples
    for (unsigned i = 0; i < t - 1; ++i)
        block_space *= q;

    // Subsets of size t-1 out of {1..n}.
    std::vector<unsigned> subset(observed);
    auto next_subset = [&](bool first) {
        if (first) {
            for (unsigned i = 0; i < observed; ++i)
                subset[i] = i + 1;
            return true;
        }
        unsigned i = observed;
        while (i-- > 0) {
            if (subset[i] < n - (observed - 1 - i)) {
                ++subset[i];
                for (unsigned j = i + 1; j < observed; ++j)
                    subset[j] = subset[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    std::vector<unsigned> counts(block_space);
    for (bool more = next_subset(true); more; more = next_subset(false)) {
        for (unsigned key = 0; key < q; ++key) {
            std::fill(counts.begin(), counts.end(), 0u);
            for (size_t draw = 0; draw < block_space; ++draw) {
                size_t rest = draw;
                std::vector<uint8_t> coeff(t, 0);
                coeff[0] = uint8_t(key);
                for (unsigned j = 1; j < t; ++j) {
                    coeff[j] = uint8_t(rest % q);
                    rest /= q;
                }
                size_t packed = 0;
                for (unsigned pos = 0; pos < observed; ++pos) {
                    const uint8_t x = uint8_t(subset[pos]);
                    uint8_t value = 0;
                    for (unsigned j = t; j-- > 0;)
                        value = field.add(coeff[j], field.mul(value, x));
                    packed = packed * q + value;
                }
                ++counts[packed];
            }
            // Exactly uniform: q^{t-1} draws over q^{t-1} observable tuples
            // must hit every tuple exactly once.
            for (unsigned c : counts)
                if (c != 1)
                    return false;
        }
    }
    return true;
}

} // namespace pets
