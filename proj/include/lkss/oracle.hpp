#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lkss/access.hpp"
#include "lkss/matrix.hpp"
#include "lkss/rational.hpp"
#include "lkss/scheme_params.hpp"

namespace lkss {

/// Maps (file symbols, randomness symbols) to the per-server share vectors.
/// Must be pure; the enumeration oracle calls it once per input state.
using EnumEncoder = std::function<std::vector<std::vector<FieldElement>>(
    std::span<const FieldElement>, std::span<const FieldElement>)>;

/// Exact leakage I(F; M_S) in bits, by enumerating all q^(n_f + n_r) input
/// states and tabulating the joint distribution of the file and the shares
/// of the servers in `subset` (1-based ids). Definitionally correct and
/// deliberately independent of any linear-algebra shortcut; refuses state
/// spaces above 10^7.
double enum_leakage(const EnumEncoder& encoder, int n_f, int n_r, const PrimeField& field,
                    std::span<const int> subset);

/// Exact leakage as a fraction of H(F) for the linear scheme
/// shares = A * F + B * R with independent uniform F and R:
/// (rank[A_S B_S] - rank[B_S]) / cols(A). Rows of server t (1-based) are
/// rows [(t-1)*rows_per_server, t*rows_per_server) of A and B.
Rational rank_leakage(const Matrix& A, const Matrix& B, int rows_per_server,
                      std::span<const int> subset);

/// Everything check_scheme measured about one built scheme.
struct LeakageReport {
    struct SubsetRow {
        uint32_t mask;  // bit t-1 set means server t is in S
        int size;
        Rational leakage;   // fraction of H(F)
        bool recoverable;   // leakage == 1
    };

    int servers = 0;
    std::vector<SubsetRow> subsets;  // all nonempty S, ascending mask
    std::vector<std::set<Rational>> leakage_by_size;  // index s = |S|, 0..T
    bool symmetric = false;                 // same-size subsets leak equally
    std::optional<AccessFunction> measured_g;  // present when symmetric
    AccessFunction planned_g;

    std::vector<Rational> server_entropy_ratios;  // H(M_t)/H(F) per server
    Rational sum_entropy_ratio;                   // sum of the above
    Rational randomness_ratio;                    // randomness per file symbol

    std::vector<std::string> violations;  // human-readable, empty iff passed
    bool passed = false;
};

/// Builds the scheme's global encoding matrices and audits every nonempty
/// subset with the rank oracle: privacy at sizes <= z, recoverability at
/// sizes >= tau, leakage symmetry, and agreement with the planned profile.
/// Exhaustive, so T is capped at 12.
LeakageReport check_scheme(const SchemeParams& params);

std::string report_text(const LeakageReport& report);

/// CSV with header "subset_bitmask,size,leak_num,leak_den,recoverable".
std::string report_csv(const LeakageReport& report);

}  // namespace lkss
