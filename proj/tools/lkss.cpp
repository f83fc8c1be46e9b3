#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "lkss/converse.hpp"
#include "lkss/oracle.hpp"
#include "lkss/planner.hpp"
#include "lkss/share_io.hpp"

namespace fs = std::filesystem;
using namespace lkss;

namespace {

// Exit codes: 0 ok, 1 usage or bad input, 2 insufficient shares,
// 3 verification failure.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInsufficientShares = 2;
constexpr int kExitVerificationFailed = 3;

struct CommonParams {
    int servers = 0;
    int tau = 0;
    int z = 0;
    std::string alpha = "0/1";
    uint64_t q = 65537;

    SchemeParams build() const {
        return SchemeParams(servers, tau, z, Rational::parse(alpha), PrimeField(q));
    }
};

void add_scheme_options(CLI::App* cmd, CommonParams& p, bool with_field) {
    cmd->add_option("-T,--servers", p.servers, "number of servers")->required();
    cmd->add_option("--tau", p.tau, "reconstruction threshold")->required();
    cmd->add_option("-z", p.z, "privacy threshold")->required();
    cmd->add_option("--alpha", p.alpha, "leakage fraction, e.g. 1/4")->required();
    if (with_field) cmd->add_option("-q,--modulus", p.q, "prime field modulus");
}

std::vector<uint8_t> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    return std::vector<uint8_t>((std::istreambuf_iterator<char>(in)),
                                std::istreambuf_iterator<char>());
}

void write_file(const fs::path& path, std::span<const uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("short write to " + path.string());
}

int run_plan(const CommonParams& cp) {
    SchemePlan p = plan(cp.build());
    std::cout << "case:             "
              << (p.scheme_case == SchemePlan::Case::RampOnly ? "ramp-only" : "composed") << "\n"
              << "lambda/H(F):      " << p.lambda.str() << "\n"
              << "lambda_sum/H(F):  " << p.lambda_sum.str() << "\n"
              << "rho/H(F):         " << p.rho.str() << "\n"
              << "superblock symbols (n'):        " << p.layout.n_prime << "\n"
              << "  via plain ramp blocks:        " << p.layout.n1 << " (" << p.layout.blocks1
              << " blocks)\n"
              << "  via private ramp blocks:      " << p.layout.n2 << " (" << p.layout.blocks2
              << " blocks)\n"
              << "share symbols per server:       " << p.layout.share_symbols_per_server << "\n"
              << "random symbols per superblock:  " << p.layout.rand_per_superblock << "\n";
    return kExitOk;
}

int run_sweep(int servers, int tau, int z_lo, int z_hi, int alpha_den) {
    if (z_lo == 0) z_lo = 1;
    if (z_hi == 0) z_hi = tau - 1;
    if (alpha_den == 0) alpha_den = 4 * tau;
    std::cout << sweep_csv(sweep_grid(servers, tau, z_lo, z_hi, alpha_den));
    return kExitOk;
}

int run_split(const CommonParams& cp, const std::string& input, const std::string& out_dir,
              bool seeded, uint64_t seed) {
    SchemeParams params = cp.build();
    std::vector<uint8_t> bytes = read_file(input);

    std::array<uint8_t, 16> scheme_id{};
    std::vector<ShareBundle> bundles;
    if (seeded) {
        EngineStream stream(params.field, seed);
        scheme_id = stream.next_id();
        bundles = split_bytes(bytes, params, scheme_id, stream);
    } else {
        std::random_device rd;
        for (auto& b : scheme_id) b = static_cast<uint8_t>(rd());
        EngineStream stream(params.field);
        bundles = split_bytes(bytes, params, scheme_id, stream);
    }

    fs::path dir(out_dir);
    fs::create_directories(dir);
    for (const auto& b : bundles) {
        fs::path p = dir / ("share_" + std::to_string(b.server_index) + ".lkss");
        write_share_file(p, b);
        std::cout << p.string() << "\n";
    }
    return kExitOk;
}

int run_recover(const std::vector<std::string>& share_paths, const std::string& output) {
    std::vector<ShareBundle> bundles;
    bundles.reserve(share_paths.size());
    for (const auto& p : share_paths) bundles.push_back(read_share_file(p));
    std::vector<uint8_t> bytes = recover_bytes(bundles);
    write_file(output, bytes);
    std::cout << "recovered " << bytes.size() << " bytes to " << output << "\n";
    return kExitOk;
}

int run_verify(const CommonParams& cp, bool csv, bool profile_csv) {
    LeakageReport rep = check_scheme(cp.build());
    if (csv) {
        std::cout << report_csv(rep);
    } else if (profile_csv) {
        if (!rep.measured_g) {
            std::cerr << "leakage is not symmetric; no single profile to print\n";
            return kExitVerificationFailed;
        }
        std::cout << to_csv(*rep.measured_g);
    } else {
        std::cout << report_text(rep);
    }
    return rep.passed ? kExitOk : kExitVerificationFailed;
}

int run_converse(int tau, int z, const std::string& alpha, int grid_den) {
    Theorem1Certificate cert = certify_theorem1_bound(z, tau, Rational::parse(alpha), grid_den);
    auto print_branch = [](const char* name, const GridMinResult& r, const Rational& bound) {
        std::cout << name << ": min objective " << r.min_value.str() << " over "
                  << r.profiles_searched << " profiles, bound " << bound.str() << "\n";
        std::cout << "  argmin:";
        for (int i = r.argmin.lo(); i <= r.argmin.hi(); ++i)
            std::cout << " " << r.argmin.at(i).str();
        std::cout << "\n";
    };
    print_branch("private branch (pinned at alpha)", cert.private_branch, cert.private_bound);
    print_branch("size branch (z -> 0)", cert.size_branch, cert.size_bound);
    std::cout << (cert.ok ? "PASS" : "FAIL") << "\n";
    return cert.ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"(alpha, z)-private distributed storage: plan, build, and audit "
                 "composed ramp sharing schemes"};
    app.require_subcommand(1);

    CommonParams plan_p;
    CLI::App* plan_cmd = app.add_subcommand("plan", "closed-form share size and randomness");
    add_scheme_options(plan_cmd, plan_p, true);

    int sweep_T = 0, sweep_tau = 0, sweep_zlo = 0, sweep_zhi = 0, sweep_den = 0;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "CSV of optimal rates over (z, alpha)");
    sweep_cmd->add_option("-T,--servers", sweep_T, "number of servers")->required();
    sweep_cmd->add_option("--tau", sweep_tau, "reconstruction threshold")->required();
    sweep_cmd->add_option("--z-min", sweep_zlo, "lowest z (default 1)");
    sweep_cmd->add_option("--z-max", sweep_zhi, "highest z (default tau-1)");
    sweep_cmd->add_option("--alpha-den", sweep_den, "alpha grid denominator (default 4*tau)");

    CommonParams split_p;
    std::string split_input, split_outdir = ".";
    uint64_t split_seed = 0;
    bool insecure_seed_ok = false;
    CLI::App* split_cmd = app.add_subcommand("split", "encode a file into T share files");
    add_scheme_options(split_cmd, split_p, true);
    split_cmd->add_option("input", split_input, "file to split")->required();
    split_cmd->add_option("-o,--out-dir", split_outdir, "directory for share files");
    CLI::Option* seed_opt =
        split_cmd->add_option("--seed", split_seed, "deterministic randomness (test mode)");
    split_cmd->add_flag("--insecure-seed-ok", insecure_seed_ok,
                        "acknowledge that a seeded split is not private");

    std::vector<std::string> recover_shares;
    std::string recover_out;
    CLI::App* recover_cmd = app.add_subcommand("recover", "rebuild a file from share files");
    recover_cmd->add_option("shares", recover_shares, "share files")->required()->expected(-1);
    recover_cmd->add_option("-o,--output", recover_out, "output path")->required();

    CommonParams verify_p;
    bool verify_csv = false, verify_profile_csv = false;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "exhaustive leakage audit of the built scheme");
    add_scheme_options(verify_cmd, verify_p, true);
    verify_cmd->add_flag("--csv", verify_csv, "per-subset CSV instead of text");
    verify_cmd->add_flag("--profile-csv", verify_profile_csv,
                         "measured access profile as t,numerator,denominator");

    int conv_tau = 0, conv_z = 0, conv_den = 12;
    std::string conv_alpha = "0/1";
    CLI::App* conv_cmd =
        app.add_subcommand("converse", "exhaustive grid search against the lower bound");
    conv_cmd->add_option("--tau", conv_tau, "reconstruction threshold")->required();
    conv_cmd->add_option("-z", conv_z, "privacy threshold")->required();
    conv_cmd->add_option("--alpha", conv_alpha, "leakage fraction, e.g. 1/4")->required();
    conv_cmd->add_option("-D,--grid-den", conv_den, "grid denominator (default 12)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (plan_cmd->parsed()) return run_plan(plan_p);
        if (sweep_cmd->parsed()) return run_sweep(sweep_T, sweep_tau, sweep_zlo, sweep_zhi, sweep_den);
        if (split_cmd->parsed()) {
            const bool seeded = seed_opt->count() > 0;
            if (seeded && !insecure_seed_ok) {
                std::cerr << "--seed makes shares predictable; pass --insecure-seed-ok to "
                             "confirm this is a test\n";
                return kExitUsage;
            }
            return run_split(split_p, split_input, split_outdir, seeded, split_seed);
        }
        if (recover_cmd->parsed()) return run_recover(recover_shares, recover_out);
        if (verify_cmd->parsed()) return run_verify(verify_p, verify_csv, verify_profile_csv);
        if (conv_cmd->parsed()) return run_converse(conv_tau, conv_z, conv_alpha, conv_den);
    } catch (const InsufficientSharesError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInsufficientShares;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;  // unreachable: a subcommand is required
}
