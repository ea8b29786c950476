// SPDX-License-Identifier: Apache-2.0

#include "pets/shamir.hpp"

#include <algorithm>

#include "pets/ida.hpp"

namespace pets {

namespace {

// All size-k subsets of {1, ..., n}, lexicographic.
std::vector<std::vector<unsigned>> subsets_of_size(unsigned n, unsigned k) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> current;
    auto recurse = [&](auto&& self, unsigned next) -> void {
        if (current.size() == k) {
            out.push_back(current);
            return;
        }
        for (unsigned i = next; i <= n; ++i) {
            current.push_back(i);
            self(self, i + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 1);
    return out;
}

} // namespace

std::vector<ShamirShare> shamir_share(const SymbolVector& secret, unsigned t, unsigned n,
                                      RandomSource& rng) {
    const Field& field = secret.field();
    check_threshold_params(t, n, field);

    std::vector<SymbolVector> coeffs;
    coeffs.reserve(t);
    coeffs.push_back(secret);
    for (unsigned j = 1; j < t; ++j)
        coeffs.push_back(rng.symbols(field, secret.size()));
    const VectorPolynomial poly(std::move(coeffs));

    std::vector<ShamirShare> shares;
    shares.reserve(n);
    for (unsigned i = 1; i <= n; ++i)
        shares.push_back({i, poly.eval(field.element_from_index(i))});
    return shares;
}

SymbolVector shamir_reconstruct(std::span<const ShamirShare> shares, unsigned t) {
    if (t == 0)
        throw ParamError("threshold must be positive");
    if (shares.size() < t)
        throw InsufficientSharesError("reconstruction needs " + std::to_string(t) +
                                      " shares, got " + std::to_string(shares.size()));

    std::vector<const ShamirShare*> picked;
    picked.reserve(shares.size());
    for (const auto& s : shares)
        picked.push_back(&s);
    std::sort(picked.begin(), picked.end(),
              [](const ShamirShare* a, const ShamirShare* b) { return a->index < b->index; });
    for (size_t i = 1; i < picked.size(); ++i)
        if (picked[i]->index == picked[i - 1]->index)
            throw DuplicateIndexError("duplicate share index " +
                                      std::to_string(picked[i]->index));
    picked.resize(t);

    const Field& field = picked.front()->value.field();
    std::vector<EvalPoint> points;
    points.reserve(t);
    for (const ShamirShare* s : picked)
        points.emplace_back(field.element_from_index(s->index), s->value);
    return interpolate_constant(points);
}

std::vector<Share> shamir_split(std::span<const uint8_t> secret, unsigned t, unsigned n,
                                const Field& field, RandomSource& rng) {
    if (field.id() == FieldId::none)
        throw ParamError("field has no wire id");
    const SymbolVector secret_symbols = SymbolVector::from_bytes(field, secret);
    std::vector<ShamirShare> raw = shamir_share(secret_symbols, t, n, rng);

    ShareHeader head;
    head.scheme_id = SchemeId::shamir;
    head.field_id = uint8_t(field.id());
    head.cipher_id = 0x00; // keyless
    head.t = uint8_t(t);
    head.n = uint8_t(n);
    head.orig_len = secret.size();
    head.poly_part_len = uint32_t(secret_symbols.size());

    std::vector<Share> shares;
    shares.reserve(n);
    for (auto& r : raw) {
        head.index = uint8_t(r.index);
        shares.push_back({head, std::move(r.value), SymbolVector(field, 0)});
    }
    return shares;
}

std::vector<uint8_t> shamir_join(std::span<const Share> shares) {
    const ShareHeader& head = validate_share_set(shares);
    if (head.scheme_id != SchemeId::shamir)
        throw HeaderMismatchError("not shamir shares");

    std::vector<ShamirShare> raw;
    raw.reserve(shares.size());
    for (const Share& s : shares)
        raw.push_back({s.index(), s.poly_part});
    const SymbolVector secret = shamir_reconstruct(raw, head.t);

    std::vector<uint8_t> bytes = secret.to_bytes();
    bytes.resize(head.orig_len);
    return bytes;
}

LeakageCensus shamir_leakage_census(unsigned t, unsigned n, const Field& field) {
    check_threshold_params(t, n, field);
    const unsigned q = field.order();
    double work = 1.0;
    for (unsigned i = 0; i < t; ++i)
        work *= q;
    if (work > 65536.0 || n > 16)
        throw SpaceTooLargeError("leakage census limited to q^t <= 2^16 and n <= 16");

    LeakageCensus census;
    census.perfect = true;
    if (t == 1)
        return census; // no nonempty unauthorized subset

    const unsigned observed = t - 1;
    size_t tuple_space = 1;
    for (unsigned i = 0; i < observed; ++i)
        tuple_space *= q;

    size_t coeff_space = 1;
    for (unsigned i = 0; i < t - 1; ++i)
        coeff_space *= q;

    for (const auto& subset : subsets_of_size(n, observed)) {
        LeakageCensus::SubsetReport report;
        report.subset = subset;
        report.counts_per_secret.assign(q, std::vector<unsigned>(tuple_space, 0));

        for (unsigned s = 0; s < q; ++s) {
            for (size_t draw = 0; draw < coeff_space; ++draw) {
                // Decode draw into coefficients r_1..r_{t-1}, base q.
                size_t rest = draw;
                std::vector<uint8_t> coeff(t, 0);
                coeff[0] = uint8_t(s);
                for (unsigned j = 1; j < t; ++j) {
                    coeff[j] = uint8_t(rest % q);
                    rest /= q;
                }
                size_t packed = 0;
                for (unsigned pos = 0; pos < observed; ++pos) {
                    const uint8_t x = uint8_t(subset[pos]);
                    uint8_t value = 0; // Horner at alpha_x
                    for (unsigned j = t; j-- > 0;)
                        value = field.add(coeff[j], field.mul(value, x));
                    packed = packed * q + value;
                }
                ++report.counts_per_secret[s][packed];
            }
        }

        for (unsigned s = 1; s < q && census.perfect; ++s)
            if (report.counts_per_secret[s] != report.counts_per_secret[0])
                census.perfect = false;
        census.subsets.push_back(std::move(report));
    }
    return census;
}

} // namespace pets
