#include "lkss/oracle.hpp"

#include <cmath>
#include <cstring>
#include <sstream>
#include <unordered_map>

#include "lkss/leaky.hpp"

namespace lkss {

namespace {

void check_subset(std::span<const int> subset, int servers) {
    std::vector<bool> seen(static_cast<size_t>(servers) + 1, false);
    if (subset.empty()) throw InvalidParamsError("subset must be nonempty");
    for (int t : subset) {
        if (t < 1 || t > servers)
            throw InvalidParamsError("server id " + std::to_string(t) + " outside 1.." +
                                     std::to_string(servers));
        if (seen[static_cast<size_t>(t)])
            throw InvalidParamsError("duplicate server id " + std::to_string(t));
        seen[static_cast<size_t>(t)] = true;
    }
}

}  // namespace

double enum_leakage(const EnumEncoder& encoder, int n_f, int n_r, const PrimeField& field,
                    std::span<const int> subset) {
    if (n_f < 1 || n_r < 0) throw InvalidParamsError("need n_f >= 1 and n_r >= 0");
    const uint64_t q = field.modulus();
    const int n = n_f + n_r;

    double states_f = std::pow(static_cast<double>(q), n);
    if (states_f > 1e7)
        throw StateSpaceError("q^(n_f+n_r) = " + std::to_string(states_f) +
                              " exceeds 1e7 states; use rank_leakage for larger schemes");
    uint64_t states = 1;
    for (int i = 0; i < n; ++i) states *= q;

    // Keys pack symbol values as fixed-width bytes; exact counts, no hashing
    // of floats anywhere.
    auto pack = [](std::string& key, uint64_t v) {
        char buf[8];
        std::memcpy(buf, &v, 8);
        key.append(buf, 8);
    };

    std::unordered_map<std::string, uint64_t> count_m;    // shares of S
    std::unordered_map<std::string, uint64_t> count_fm;   // (file, shares of S)
    count_m.reserve(static_cast<size_t>(states));
    count_fm.reserve(static_cast<size_t>(states));

    std::vector<FieldElement> input;
    input.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) input.push_back(field.zero());
    std::vector<uint64_t> digits(static_cast<size_t>(n), 0);

    if (subset.empty()) throw InvalidParamsError("subset must be nonempty");
    for (size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 1) throw InvalidParamsError("server ids are 1-based");
        for (size_t j = i + 1; j < subset.size(); ++j) {
            if (subset[i] == subset[j])
                throw InvalidParamsError("duplicate server id " + std::to_string(subset[i]));
        }
    }
    std::string mkey, fmkey;
    for (uint64_t s = 0;; ++s) {
        auto file = std::span<const FieldElement>(input).first(static_cast<size_t>(n_f));
        auto rand = std::span<const FieldElement>(input).subspan(static_cast<size_t>(n_f));
        auto shares = encoder(file, rand);

        mkey.clear();
        for (int t : subset) {
            if (static_cast<size_t>(t) > shares.size())
                throw InvalidParamsError("server id " + std::to_string(t) +
                                         " outside the encoder's share vector");
            for (const auto& sym : shares[static_cast<size_t>(t - 1)]) pack(mkey, sym.value());
        }
        fmkey = mkey;
        for (int i = 0; i < n_f; ++i) pack(fmkey, input[static_cast<size_t>(i)].value());
        ++count_m[mkey];
        ++count_fm[fmkey];

        if (s + 1 == states) break;
        // Odometer over base-q digits.
        for (int i = 0; i < n; ++i) {
            digits[static_cast<size_t>(i)] = (digits[static_cast<size_t>(i)] + 1) % q;
            input[static_cast<size_t>(i)] = field.element(digits[static_cast<size_t>(i)]);
            if (digits[static_cast<size_t>(i)] != 0) break;
        }
    }

    // I(F; M_S) = H(F) + H(M_S) - H(F, M_S) with H(F) = n_f log2 q exactly
    // (F is uniform: each file value appears q^n_r times).
    const double total = static_cast<double>(states);
    auto entropy = [&](const std::unordered_map<std::string, uint64_t>& counts) {
        double acc = 0.0;
        for (const auto& [key, c] : counts) {
            (void)key;
            acc += static_cast<double>(c) * std::log2(static_cast<double>(c));
        }
        return std::log2(total) - acc / total;
    };
    const double h_f = static_cast<double>(n_f) * std::log2(static_cast<double>(q));
    return h_f + entropy(count_m) - entropy(count_fm);
}

Rational rank_leakage(const Matrix& A, const Matrix& B, int rows_per_server,
                      std::span<const int> subset) {
    if (A.rows() != B.rows()) throw InvalidParamsError("A and B must have equal row counts");
    if (rows_per_server < 1 || A.rows() % static_cast<size_t>(rows_per_server) != 0)
        throw InvalidParamsError("rows_per_server does not divide the row count");
    const int servers = static_cast<int>(A.rows()) / rows_per_server;
    check_subset(subset, servers);

    std::vector<size_t> rows;
    rows.reserve(subset.size() * static_cast<size_t>(rows_per_server));
    for (int t : subset) {
        for (int r = 0; r < rows_per_server; ++r)
            rows.push_back(static_cast<size_t>(t - 1) * static_cast<size_t>(rows_per_server) +
                           static_cast<size_t>(r));
    }
    Matrix as = A.select_rows(rows);
    Matrix bs = B.select_rows(rows);
    size_t joint = Matrix::hconcat(as, bs).rank();
    size_t noise = bs.rank();
    return Rational(static_cast<long long>(joint) - static_cast<long long>(noise),
                    static_cast<long long>(A.cols()));
}

LeakageReport check_scheme(const SchemeParams& params) {
    if (params.servers > 12)
        throw InvalidParamsError("exhaustive subset audit is capped at T = 12 servers");

    const SuperblockLayout lay = layout(params);
    GlobalMatrices gm = global_encoding_matrices(params);
    const int T = params.servers;

    AccessFunction planned = params.ramp_only()
                                 ? linear_ramp_g(params.tau, params.tau, T)
                                 : optimal_g(params);

    LeakageReport rep{.servers = T,
                      .subsets = {},
                      .leakage_by_size = std::vector<std::set<Rational>>(static_cast<size_t>(T) + 1),
                      .symmetric = false,
                      .measured_g = std::nullopt,
                      .planned_g = planned,
                      .server_entropy_ratios = {},
                      .sum_entropy_ratio = Rational(0),
                      .randomness_ratio = Rational(lay.rand_per_superblock, lay.n_prime),
                      .violations = {},
                      .passed = false};

    auto note = [&rep](const std::string& v) { rep.violations.push_back(v); };

    for (uint32_t mask = 1; mask < (1u << T); ++mask) {
        std::vector<int> subset;
        for (int t = 1; t <= T; ++t) {
            if (mask & (1u << (t - 1))) subset.push_back(t);
        }
        const int size = static_cast<int>(subset.size());
        Rational leak = rank_leakage(gm.A, gm.B, gm.rows_per_server, subset);
        const bool recoverable = leak == Rational(1);
        rep.subsets.push_back({mask, size, leak, recoverable});
        rep.leakage_by_size[static_cast<size_t>(size)].insert(leak);

        if (size <= params.z && leak > params.alpha)
            note("subset mask " + std::to_string(mask) + " of size " + std::to_string(size) +
                 " leaks " + leak.str() + " > alpha = " + params.alpha.str());
        if (size >= params.tau && !recoverable)
            note("subset mask " + std::to_string(mask) + " of size " + std::to_string(size) +
                 " cannot reconstruct the file");
        if (leak != planned.at(size))
            note("subset mask " + std::to_string(mask) + " of size " + std::to_string(size) +
                 " leaks " + leak.str() + ", planned profile says " + planned.at(size).str());
    }

    rep.symmetric = true;
    for (int s = 1; s <= T; ++s) {
        if (rep.leakage_by_size[static_cast<size_t>(s)].size() != 1) {
            rep.symmetric = false;
            note("subsets of size " + std::to_string(s) + " leak unequally");
        }
    }
    if (rep.symmetric) {
        std::vector<Rational> g;
        g.emplace_back(0);
        for (int s = 1; s <= T; ++s) g.push_back(*rep.leakage_by_size[static_cast<size_t>(s)].begin());
        try {
            rep.measured_g = AccessFunction(std::move(g));
            if (*rep.measured_g != planned) note("measured profile differs from the planned one");
        } catch (const InvalidParamsError& e) {
            note(std::string("measured leakage is not a valid access function: ") + e.what());
        }
    }

    // Per-server share entropy: H(M_t) = rank(server t's rows of [A B]) log q.
    Matrix AB = Matrix::hconcat(gm.A, gm.B);
    Rational sum(0);
    for (int t = 1; t <= T; ++t) {
        std::vector<size_t> rows;
        for (int r = 0; r < gm.rows_per_server; ++r)
            rows.push_back(static_cast<size_t>(t - 1) * static_cast<size_t>(gm.rows_per_server) +
                           static_cast<size_t>(r));
        Rational h(static_cast<long long>(AB.select_rows(rows).rank()),
                   static_cast<long long>(lay.n_prime));
        rep.server_entropy_ratios.push_back(h);
        sum += h;
    }
    rep.sum_entropy_ratio = sum;

    rep.passed = rep.violations.empty();
    return rep;
}

std::string report_text(const LeakageReport& report) {
    std::ostringstream out;
    out << "servers: " << report.servers << "\n";
    out << "planned g:  ";
    for (int t = 0; t <= report.servers; ++t)
        out << (t ? " " : "") << report.planned_g.at(t).str();
    out << "\n";
    if (report.measured_g) {
        out << "measured g: ";
        for (int t = 0; t <= report.servers; ++t)
            out << (t ? " " : "") << report.measured_g->at(t).str();
        out << "\n";
    }
    out << "leakage symmetric across same-size subsets: " << (report.symmetric ? "yes" : "no")
        << "\n";
    out << "sum share entropy / H(F): " << report.sum_entropy_ratio.str() << "\n";
    out << "randomness / H(F): " << report.randomness_ratio.str() << "\n";
    for (const auto& v : report.violations) out << "violation: " << v << "\n";
    out << (report.passed ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string report_csv(const LeakageReport& report) {
    std::ostringstream out;
    out << "subset_bitmask,size,leak_num,leak_den,recoverable\n";
    for (const auto& row : report.subsets) {
        out << row.mask << "," << row.size << "," << row.leakage.num() << "," << row.leakage.den()
            << "," << (row.recoverable ? 1 : 0) << "\n";
    }
    return out.str();
}

}  // namespace lkss
