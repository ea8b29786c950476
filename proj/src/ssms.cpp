// SPDX-License-Identifier: Apache-2.0

#include "pets/ssms.hpp"

#include "pets/ida.hpp"
#include "pets/shamir.hpp"

namespace pets {

SsmsGeometry SsmsGeometry::plan_symbols(size_t sym_S, size_t sym_K, unsigned t, unsigned n) {
    if (t < 1 || t > n)
        throw ParamError("threshold must satisfy 1 <= t <= n");
    SsmsGeometry g;
    g.t = t;
    g.n = n;
    g.sym_S = sym_S;
    g.sym_K = sym_K;
    g.frag_len = (sym_S + t - 1) / t;
    g.tail_pad = g.frag_len * t - sym_S;
    g.payload = sym_K + g.frag_len;
    return g;
}

std::vector<Share> ssms_split(std::span<const uint8_t> secret, unsigned t, unsigned n,
                              const CipherSuite& suite, const Field& field, RandomSource& rng) {
    if (field.id() == FieldId::none)
        throw ParamError("field has no wire id");
    check_threshold_params(t, n, field);

    const SecretKey key = suite.keygen(rng);
    const std::vector<uint8_t> ciphertext = suite.enc(key, secret);
    const SymbolVector cipher_symbols = SymbolVector::from_bytes(field, ciphertext);
    const SymbolVector key_symbols = suite.key_symbols(field, key);

    std::vector<ShamirShare> key_shares = shamir_share(key_symbols, t, n, rng);
    Dispersal dispersal = disperse(cipher_symbols, t, n);

    ShareHeader head;
    head.scheme_id = SchemeId::ssms;
    head.field_id = uint8_t(field.id());
    head.cipher_id = suite.id();
    head.t = uint8_t(t);
    head.n = uint8_t(n);
    head.orig_len = secret.size();
    head.tail_pad = uint32_t(dispersal.pad_len);
    head.poly_part_len = uint32_t(key_symbols.size());
    head.frag_part_len = uint32_t(dispersal.fragments.front().data.size());

    std::vector<Share> shares;
    shares.reserve(n);
    for (unsigned i = 0; i < n; ++i) {
        head.index = uint8_t(i + 1);
        shares.push_back({head, std::move(key_shares[i].value),
                          std::move(dispersal.fragments[i].data)});
    }
    return shares;
}

std::vector<uint8_t> ssms_join(std::span<const Share> shares) {
    const ShareHeader& head = validate_share_set(shares);
    if (head.scheme_id != SchemeId::ssms)
        throw HeaderMismatchError("not ssms shares");
    const Field& field = Field::from_id(FieldId(head.field_id));
    const CipherSuite& suite = suite_from_id(head.cipher_id);

    std::vector<ShamirShare> key_shares;
    std::vector<Fragment> fragments;
    key_shares.reserve(shares.size());
    fragments.reserve(shares.size());
    for (const Share& s : shares) {
        key_shares.push_back({s.index(), s.poly_part});
        fragments.push_back({s.index(), s.frag_part});
    }

    const SymbolVector key_symbols = shamir_reconstruct(key_shares, head.t);
    const SymbolVector cipher_symbols = reconstruct(fragments, head.t, head.tail_pad);

    std::vector<uint8_t> key = key_symbols.to_bytes();
    key.resize(suite.key_len());
    std::vector<uint8_t> secret = suite.dec(key, cipher_symbols.to_bytes());
    secret.resize(head.orig_len);
    return secret;
}

} // namespace pets
