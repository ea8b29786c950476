// SPDX-License-Identifier: Apache-2.0

#include "pets/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pets/errors.hpp"
#include "pets/pets.hpp"
#include "pets/ssms.hpp"

namespace pets {

Rational::Rational(int64_t num, int64_t den) : num_(num), den_(den) {
    if (den_ == 0)
        throw ParamError("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string Rational::str() const {
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator*(Rational a, Rational b) {
    // Cross-reduce before multiplying to keep intermediates small.
    const int64_t g1 = std::gcd(a.num_ < 0 ? -a.num_ : a.num_, b.den_);
    const int64_t g2 = std::gcd(b.num_ < 0 ? -b.num_ : b.num_, a.den_);
    return {(a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1)};
}

bool operator<(Rational a, Rational b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
}

RateReport rate_of(SchemeId scheme, size_t sym_S, size_t sym_K, unsigned t, unsigned n) {
    if (t < 1 || t > n)
        throw ParamError("threshold must satisfy 1 <= t <= n");
    RateReport r;
    r.scheme = scheme;
    r.t = t;
    r.n = n;
    r.sym_S = sym_S;
    r.sym_K = sym_K;
    switch (scheme) {
    case SchemeId::shamir:
        r.per_share_payload = sym_S; // share size equals the secret
        r.pad_free = true;
        break;
    case SchemeId::ssms: {
        const SsmsGeometry g = SsmsGeometry::plan_symbols(sym_S, sym_K, t, n);
        r.per_share_payload = g.payload;
        r.pad_free = g.tail_pad == 0;
        break;
    }
    case SchemeId::pets: {
        const PetsGeometry g = PetsGeometry::plan_symbols(sym_S, sym_K, t, n);
        r.per_share_payload = g.payload;
        r.pad_free = g.pad_free();
        break;
    }
    }
    r.total_payload = r.per_share_payload * n;
    r.rate = Rational(int64_t(sym_S), int64_t(r.total_payload));
    return r;
}

Rational rate_asymptotic_pets(Rational delta, size_t sym_S, size_t sym_K) {
    if (!(Rational(0, 1) < delta) || Rational(1, 1) < delta)
        throw ParamError("delta must lie in (0, 1]");
    return delta * Rational(int64_t(sym_S), int64_t(sym_S + sym_K));
}

std::vector<RateReport> scheme_sweep(unsigned max_n,
                                     std::span<const SweepGeometry> geometries) {
    std::vector<RateReport> rows;
    for (const auto& g : geometries)
        for (SchemeId scheme : {SchemeId::shamir, SchemeId::ssms, SchemeId::pets})
            for (unsigned n = 1; n <= max_n; ++n)
                for (unsigned t = 1; t <= n; ++t)
                    rows.push_back(rate_of(scheme, g.sym_S, g.sym_K, t, n));
    return rows;
}

namespace {

std::vector<std::string> row_cells(const RateReport& r) {
    return {scheme_name(r.scheme),
            std::to_string(r.t),
            std::to_string(r.n),
            std::to_string(r.sym_S),
            std::to_string(r.sym_K),
            std::to_string(r.per_share_payload),
            std::to_string(r.total_payload),
            r.rate.str(),
            r.pad_free ? "yes" : "no"};
}

const char* const kColumns[] = {"scheme", "t",     "n",    "sym_S",    "sym_K",
                                "share",  "total", "rate", "pad_free"};

} // namespace

std::string rate_table_text(std::span<const RateReport> rows) {
    constexpr size_t ncols = std::size(kColumns);
    std::vector<size_t> width(ncols);
    for (size_t c = 0; c < ncols; ++c)
        width[c] = std::string(kColumns[c]).size();
    std::vector<std::vector<std::string>> cells;
    cells.reserve(rows.size());
    for (const auto& r : rows) {
        cells.push_back(row_cells(r));
        for (size_t c = 0; c < ncols; ++c)
            width[c] = std::max(width[c], cells.back()[c].size());
    }
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& row) {
        for (size_t c = 0; c < ncols; ++c) {
            out << (c ? "  " : "");
            out << row[c] << std::string(width[c] - row[c].size(), ' ');
        }
        out << '\n';
    };
    emit({kColumns, kColumns + ncols});
    for (const auto& row : cells)
        emit(row);
    return out.str();
}

std::string rate_table_csv(std::span<const RateReport> rows) {
    std::ostringstream out;
    for (size_t c = 0; c < std::size(kColumns); ++c)
        out << (c ? "," : "") << kColumns[c];
    out << '\n';
    for (const auto& r : rows) {
        const auto cells = row_cells(r);
        for (size_t c = 0; c < cells.size(); ++c)
            out << (c ? "," : "") << cells[c];
        out << '\n';
    }
    return out.str();
}

} // namespace pets
