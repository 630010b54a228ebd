#include "kappalab/rng.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kappalab {

std::vector<u64> SplitMix64::distinct_in_range(u64 lo, u64 hi, std::size_t count) {
    if (lo > hi || hi - lo + 1 < count) {
        throw std::invalid_argument("distinct_in_range: range too small");
    }
    std::set<u64> seen;
    while (seen.size() < count) seen.insert(in_range(lo, hi));
    return std::vector<u64>(seen.begin(), seen.end());
}

}  // namespace kappalab
