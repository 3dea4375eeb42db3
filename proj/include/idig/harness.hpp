#ifndef IDIG_HARNESS_HPP
#define IDIG_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idig/digraph.hpp"

namespace idig {

enum class StatementId {
    T1_1,
    T1_2,
    T1_3,
    T2,
    L_DIPATH,
    L_INDEG0,
    T_PATHS,
    T_TREES,
    L_REV,
    L_ARBS,
    T_DAG,
    L_EVENCYC,
    C_NOTALL,
    T_CYCLES,
    C_CYCLES_IFF,
    L_KMN,
    L_XDOMY,
    L_NOZEROS,
    T_ALLBIS,
    COR_ID_TOURN,
    COR_ID_PATH,
    COR_ID_CYCLE,
    COR_ID_ARB,
};

inline constexpr int kStatementCount = 23;

const std::vector<StatementId>& all_statements();
std::string to_string(StatementId id);
std::optional<StatementId> statement_from_string(std::string_view s);

struct Failure {
    std::string digraph; // compact edge list
    std::string detail;
};

struct HarnessReport {
    StatementId statement{};
    std::uint64_t instances = 0;
    std::vector<Failure> failures;
    double elapsed_ms = 0.0;
    int bound = 0;
    bool passed() const { return failures.empty(); }
};

struct Profile {
    int path_n = 10;
    int cycle_n = 10;
    int tournament_n = 5;
    int tree_n = 6;
    int kmn_total = 6;
    int random_n = 10;
    int samples = 200;       // sampled digraph instances per statement
    int graph_samples = 100; // sampled base graphs for orientation statements
    std::uint64_t seed = 12345;
};

Profile quick_profile();
Profile full_profile();

// Runs one statement. `bound` overrides the profile's size parameter
// for the statement's primary family when positive.
HarnessReport verify(StatementId id, const Profile& profile, int bound = 0);

// Every registered statement, in registry order.
std::vector<HarnessReport> verify_all(const Profile& profile);

// One line per statement: `<id> <instances> <failures> <elapsed_ms>`,
// counterexamples appended below. Timings print as 0 unless requested
// so reports stay byte-identical across runs.
std::string format_report(const HarnessReport& r, bool timings = false);
std::string format_reports(const std::vector<HarnessReport>& rs, bool timings = false);

} // namespace idig

#endif
