#pragma once

#include <functional>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "hilb/operators.hpp"

namespace hilb {

inline constexpr const char* kEngineVersion = "hilb-0.1.0";

// Grid parameters for a verification run. Non-positive n_max means "use the
// case's own default" (8 for pushforward suites, 6 for operator suites).
struct CaseParams {
    int n_max = -1;
    int m_min = -3;
    int m_max = 6;
    std::string cache_dir;  // empty disables the on-disk cache
};

struct CaseResult {
    std::string id;
    bool pass = true;
    bool internal = false;  // an integrality/soundness guard fired
    int checks = 0;
    std::vector<std::string> witnesses;  // first few failures
    std::vector<std::string> notes;      // informational only
};

// On-disk + in-memory cache of pushforward tuples keyed by (theory, n, m),
// invalidated by the engine version string. Reads are shared through the
// in-memory map; disk writes are serialized.
class PushCache {
  public:
    explicit PushCache(std::string dir);
    PushCache(const PushCache&) = delete;
    PushCache& operator=(const PushCache&) = delete;

    EquivClass push_Q(int n, int m);    // K-theory pi_*[Q^m]
    EquivClass push_c1Q(int n, int m);  // cohomology pi_*(c_1(Q)^m)

  private:
    EquivClass get(Theory theory, int n, int m);

    std::string dir_;
    std::mutex mutex_;
    std::map<std::tuple<Theory, int, int>, EquivClass> memory_;
};

struct TheoremCase {
    std::string id;
    std::string description;
    int default_n;  // per-suite default for n_max
    std::function<CaseResult(const CaseParams&, PushCache&)> run;
};

const std::vector<TheoremCase>& theorem_registry();
bool registry_has(const std::string& id);

struct Report {
    CaseParams params;
    std::vector<CaseResult> results;

    bool all_pass() const;
    std::string to_json() const;  // schema 1, byte-stable for fixed inputs
    std::string to_csv() const;
    std::string to_text() const;
};

// Runs the listed case ids (in registry order) on a pool of `jobs` workers.
Report run_cases(const std::vector<std::string>& ids, const CaseParams& params,
                 int jobs);

// The T_y-equivariant closed form for the pushforward of Q^m on
// Hilb^{target_n}, shared by several theorem cases.
EquivClass push_Ty_closed_form(int target_n, int m);

}  // namespace hilb
