#pragma once

#include <string>
#include <vector>

#include "kappalab/constructions.hpp"
#include "kappalab/sieve.hpp"

namespace kappalab {

struct CensusOptions {
    SieveBudget sieve;
    unsigned threads = 1;
    // When nonempty, one "segment_end<TAB>count" line is appended per
    // completed segment and an existing file resumes the scan past its last
    // recorded segment (same lo and segment size required for alignment).
    std::string checkpoint_path;
};

struct CensusReport {
    Func func = Func::Phi;
    u64 k = 0;
    u64 lo = 1;
    u64 hi = 1;
    std::vector<SolutionRecord> solutions;
    std::size_t sporadic_count = 0;
    bool classified = false;
};

// Exactly the n in [lo, hi] with func(n) = func(n+k), by sieving [lo, hi+k]
// once per segment and comparing. Records come back unclassified.
CensusReport enumerate_solutions(Func func, u64 k, u64 lo, u64 hi,
                                 const CensusOptions& options = {});

// Fills provenance on a phi census: n is tagged ghp(j) when some divisor
// j | n replays through ghp_solution's verifier onto exactly this solution,
// else sporadic. Throws std::invalid_argument for sigma reports.
void classify(CensusReport& report);

// Starts n of runs phi(n) = phi(n+1) = ... = phi(n+m-1), one sieve pass.
std::vector<u64> find_runs(u64 m, u64 lo, u64 hi, const CensusOptions& options = {});

struct FriendGroup {
    AbundancyIndex index;
    std::vector<u64> members;  // ascending
};

// Groups of >= min_size integers in [lo, hi] sharing an exact abundancy
// index, keyed by the reduced fraction, ordered by smallest member.
std::vector<FriendGroup> friend_groups(u64 lo, u64 hi, std::size_t min_size,
                                       const CensusOptions& options = {});

// All m in [lo, hi] with abundancy(m) = abundancy(m+1); these are the only
// inputs yamada_sigma_pair can accept.
std::vector<u64> consecutive_friends(u64 lo, u64 hi, const CensusOptions& options = {});

}  // namespace kappalab
