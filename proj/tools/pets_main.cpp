// SPDX-License-Identifier: Apache-2.0

/*
 * Command-line front end: split a secret into share files, join shares back
 * into the secret, inspect share headers, and print share-size/rate tables.
 *
 * Exit codes: 0 success, 2 invalid parameters, 3 I/O failure, 4 seed given
 * with the entropy-backed production suite, 5 insufficient shares, 6 share
 * header mismatch, 7 malformed share file.
 */

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pets/cipher.hpp"
#include "pets/metrics.hpp"
#include "pets/pets.hpp"
#include "pets/shamir.hpp"
#include "pets/share_format.hpp"
#include "pets/ssms.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitInvalidParams = 2;
constexpr int kExitIo = 3;
constexpr int kExitSeedPolicy = 4;
constexpr int kExitInsufficientShares = 5;
constexpr int kExitHeaderMismatch = 6;
constexpr int kExitBadFormat = 7;

std::vector<uint8_t> read_input(const std::string& path) {
    if (path == "-") {
        std::vector<uint8_t> data((std::istreambuf_iterator<char>(std::cin)),
                                  std::istreambuf_iterator<char>());
        if (std::cin.bad())
            throw pets::IoError("failed to read standard input");
        return data;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw pets::IoError("cannot open " + path);
    std::vector<uint8_t> data((std::istreambuf_iterator<char>(in)),
                              std::istreambuf_iterator<char>());
    if (in.bad())
        throw pets::IoError("read failed: " + path);
    return data;
}

void write_output(const std::string& path, std::span<const uint8_t> data) {
    if (path == "-") {
        std::cout.write(reinterpret_cast<const char*>(data.data()),
                        std::streamsize(data.size()));
        std::cout.flush();
        if (!std::cout)
            throw pets::IoError("failed to write standard output");
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw pets::IoError("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(data.data()), std::streamsize(data.size()));
    if (!out)
        throw pets::IoError("write failed: " + path);
}

struct SplitArgs {
    std::string secret_path;
    std::string scheme = "pets";
    unsigned t = 0;
    unsigned n = 0;
    std::string suite = "stream256";
    bool suite_given = false;
    std::string field = "gf256";
    std::string out_dir = ".";
    std::optional<uint64_t> seed;
};

int run_split(const SplitArgs& args) {
    const pets::SchemeId scheme = pets::scheme_from_name(args.scheme);
    const pets::Field& field = pets::Field::from_name(args.field);

    if (scheme == pets::SchemeId::shamir && args.suite_given) {
        std::cerr << "error: shamir is keyless; --suite does not apply\n";
        return kExitInvalidParams;
    }
    if (args.t < 1 || args.t > args.n || args.n > 255) {
        std::cerr << "error: threshold must satisfy 1 <= t <= n <= 255\n";
        return kExitInvalidParams;
    }
    if (args.n >= field.order()) {
        std::cerr << "error: n exceeds field capacity (" << field.name() << " supports at most "
                  << field.order() - 1 << " participants)\n";
        return kExitInvalidParams;
    }

    const pets::CipherSuite& suite = pets::suite_from_name(args.suite);
    if (args.seed && scheme != pets::SchemeId::shamir && suite.id() == pets::stream256().id()) {
        std::cerr << "error: --seed with stream256 defeats its entropy source; seeded runs "
                     "are limited to the test suites\n";
        return kExitSeedPolicy;
    }

    std::unique_ptr<pets::RandomSource> rng;
    if (args.seed) {
        std::cerr << "WARNING: deterministic seed in effect; shares are reproducible and the "
                     "key is NOT secret. Test use only.\n";
        rng = std::make_unique<pets::SeededRandom>(*args.seed);
    } else {
        rng = std::make_unique<pets::SystemRandom>();
    }

    const std::vector<uint8_t> secret = read_input(args.secret_path);

    std::vector<pets::Share> shares;
    switch (scheme) {
    case pets::SchemeId::shamir:
        shares = pets::shamir_split(secret, args.t, args.n, field, *rng);
        break;
    case pets::SchemeId::ssms:
        shares = pets::ssms_split(secret, args.t, args.n, suite, field, *rng);
        break;
    case pets::SchemeId::pets:
        shares = pets::pets_split(secret, args.t, args.n, suite, field, *rng);
        break;
    }

    std::error_code ec;
    fs::create_directories(args.out_dir, ec);
    if (ec)
        throw pets::IoError("cannot create output directory " + args.out_dir);
    for (const auto& share : shares) {
        const fs::path path =
            fs::path(args.out_dir) / ("share_" + std::to_string(share.index()) + ".pet");
        pets::write_share_file(path, share);
        std::cout << path.string() << "\n";
    }
    return 0;
}

struct JoinArgs {
    std::vector<std::string> share_paths;
    std::string out_path = "-";
};

int run_join(const JoinArgs& args) {
    std::vector<pets::Share> shares;
    shares.reserve(args.share_paths.size());
    for (const auto& p : args.share_paths)
        shares.push_back(pets::read_share_file(p));

    std::vector<uint8_t> secret;
    switch (pets::validate_share_set(shares).scheme_id) {
    case pets::SchemeId::shamir:
        secret = pets::shamir_join(shares);
        break;
    case pets::SchemeId::ssms:
        secret = pets::ssms_join(shares);
        break;
    case pets::SchemeId::pets:
        secret = pets::pets_join(shares);
        break;
    }
    write_output(args.out_path, secret);
    return 0;
}

std::string cipher_label(uint8_t id) {
    if (id == 0x00)
        return "none";
    return std::string(pets::suite_from_id(id).name());
}

char hex_digit(unsigned v) {
    return v < 10 ? char('0' + v) : char('a' + v - 10);
}

std::string hex_byte(uint8_t b) {
    return {hex_digit(b >> 4), hex_digit(b & 0xF)};
}

int run_inspect(const std::string& path) {
    const pets::Share share = pets::read_share_file(path);
    const pets::ShareHeader& h = share.header;
    const pets::Field& field = pets::Field::from_id(pets::FieldId(h.field_id));

    std::string nonce_hex;
    for (uint8_t b : h.nonce)
        nonce_hex += hex_byte(b);

    std::cout << "magic:          PET1\n"
              << "version:        " << unsigned(h.version) << "\n"
              << "scheme:         " << pets::scheme_name(h.scheme_id) << " (0x"
              << hex_byte(uint8_t(h.scheme_id)) << ")\n"
              << "field:          " << field.name() << " (0x" << hex_byte(h.field_id) << ")\n"
              << "cipher:         " << cipher_label(h.cipher_id) << " (0x"
              << hex_byte(h.cipher_id) << ")\n"
              << "t:              " << unsigned(h.t) << "\n"
              << "n:              " << unsigned(h.n) << "\n"
              << "index:          " << unsigned(h.index) << "\n"
              << "nonce:          " << nonce_hex << "\n"
              << "orig_len:       " << h.orig_len << "\n"
              << "plain_pad:      " << h.plain_pad << "\n"
              << "tail_pad:       " << h.tail_pad << "\n"
              << "poly_part_len:  " << h.poly_part_len << "\n"
              << "frag_part_len:  " << h.frag_part_len << "\n"
              << "payload_bytes:  "
              << field.packed_size(size_t(h.poly_part_len) + h.frag_part_len) << "\n";
    return 0;
}

struct RatesArgs {
    bool paper_examples = false;
    bool sweep = false;
    bool csv = false;
    std::string scheme;
    unsigned t = 0;
    unsigned n = 0;
    unsigned max_n = 8;
    size_t sym_s = 0;
    size_t sym_k = 0;
    std::string delta;
};

pets::Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        return {std::stoll(text), 1};
    return {std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1))};
}

int run_rates(const RatesArgs& args) {
    std::vector<pets::RateReport> rows;
    std::vector<std::string> extra_lines;

    if (args.paper_examples) {
        // The (2,3) reference instances: 1024-bit secret, 256-bit key,
        // 512/128 symbols over gf4.
        for (auto scheme :
             {pets::SchemeId::shamir, pets::SchemeId::ssms, pets::SchemeId::pets})
            rows.push_back(pets::rate_of(scheme, 512, 128, 2, 3));
    } else if (args.sweep) {
        const pets::SweepGeometry geometry{args.sym_s, args.sym_k};
        rows = pets::scheme_sweep(args.max_n, {{geometry}});
    } else {
        if (args.scheme.empty() || args.n == 0) {
            std::cerr << "error: need --scheme and -n (or --paper-examples / --sweep)\n";
            return kExitInvalidParams;
        }
        const pets::SchemeId scheme = pets::scheme_from_name(args.scheme);
        unsigned t = args.t;
        if (!args.delta.empty()) {
            const pets::Rational delta = parse_rational(args.delta);
            if (delta.num() <= 0 || delta.num() * int64_t(args.n) % delta.den() != 0) {
                std::cerr << "error: delta*n must be a positive integer\n";
                return kExitInvalidParams;
            }
            t = unsigned(delta.num() * int64_t(args.n) / delta.den());
            if (scheme == pets::SchemeId::pets)
                extra_lines.push_back(
                    "asymptotic rate (t = delta*n): " +
                    pets::rate_asymptotic_pets(delta, args.sym_s, args.sym_k).str());
        }
        if (t == 0) {
            std::cerr << "error: need -t or --delta\n";
            return kExitInvalidParams;
        }
        rows.push_back(pets::rate_of(scheme, args.sym_s, args.sym_k, t, args.n));
    }

    std::cout << (args.csv ? pets::rate_table_csv(rows) : pets::rate_table_text(rows));
    for (const auto& line : extra_lines)
        std::cout << line << "\n";
    return 0;
}

int dispatch(const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (dynamic_cast<const pets::ShareFormatError*>(&e))
        return kExitBadFormat;
    if (dynamic_cast<const pets::HeaderMismatchError*>(&e) ||
        dynamic_cast<const pets::DuplicateIndexError*>(&e))
        return kExitHeaderMismatch;
    if (dynamic_cast<const pets::InsufficientSharesError*>(&e))
        return kExitInsufficientShares;
    if (dynamic_cast<const pets::IoError*>(&e))
        return kExitIo;
    return kExitInvalidParams;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"threshold secret sharing over binary fields (shamir, ssms, pets)"};
    app.require_subcommand(1);

    SplitArgs split_args;
    CLI::App* split = app.add_subcommand("split", "split a secret into n share files");
    split->add_option("secret", split_args.secret_path, "secret file, or - for stdin")
        ->required();
    split->add_option("--scheme", split_args.scheme, "shamir, ssms, or pets")
        ->default_val("pets");
    split->add_option("-t,--threshold", split_args.t, "reconstruction threshold")->required();
    split->add_option("-n,--shares", split_args.n, "number of participants")->required();
    split->add_option("--suite", split_args.suite, "toy-otp, test-keystream, or stream256")
        ->default_val("stream256");
    split->add_option("--field", split_args.field, "gf4 or gf256")->default_val("gf256");
    split->add_option("-o,--out", split_args.out_dir, "output directory")->default_val(".");
    split->add_option("--seed", split_args.seed,
                      "deterministic key/coefficient seed (test use only)");

    JoinArgs join_args;
    CLI::App* join = app.add_subcommand("join", "reconstruct the secret from share files");
    join->add_option("shares", join_args.share_paths, "share files (at least t)")
        ->required()
        ->expected(-1);
    join->add_option("-o,--out", join_args.out_path, "output file, or - for stdout")
        ->default_val("-");

    std::string inspect_path;
    CLI::App* inspect = app.add_subcommand("inspect", "print a share file header");
    inspect->add_option("share", inspect_path, "share file")->required();

    RatesArgs rates_args;
    CLI::App* rates = app.add_subcommand("rates", "share-size and information-rate tables");
    rates->add_flag("--paper-examples", rates_args.paper_examples,
                    "the (2,3) reference trio: 512-symbol secret, 128-symbol key, gf4");
    rates->add_flag("--sweep", rates_args.sweep, "full (t, n) grid for one geometry");
    rates->add_flag("--csv", rates_args.csv, "emit comma-separated values");
    rates->add_option("--scheme", rates_args.scheme, "shamir, ssms, or pets");
    rates->add_option("-t,--threshold", rates_args.t, "reconstruction threshold");
    rates->add_option("-n,--shares", rates_args.n, "number of participants");
    rates->add_option("--max-n", rates_args.max_n, "sweep upper bound")->default_val(8);
    rates->add_option("--sym-s", rates_args.sym_s, "secret size in symbols");
    rates->add_option("--sym-k", rates_args.sym_k, "key size in symbols");
    rates->add_option("--delta", rates_args.delta, "threshold fraction t/n, e.g. 2/3");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidParams;
    }

    try {
        if (split->parsed()) {
            split_args.suite_given = split->count("--suite") > 0;
            return run_split(split_args);
        }
        if (join->parsed())
            return run_join(join_args);
        if (inspect->parsed())
            return run_inspect(inspect_path);
        if (rates->parsed())
            return run_rates(rates_args);
    } catch (const std::exception& e) {
        return dispatch(e);
    }
    return kExitInvalidParams;
}
