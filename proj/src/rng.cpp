#include "plink/rng.hpp"

#include <stdexcept>
#include <unordered_set>

namespace plink {

std::vector<long long> SeededRng::sample_distinct(long long lo, long long hi, std::size_t count) {
    if (hi < lo || static_cast<std::uint64_t>(hi - lo) + 1 < count)
        throw std::invalid_argument("sample_distinct: range smaller than requested count");
    std::vector<long long> out;
    out.reserve(count);
    std::unordered_set<long long> seen;
    while (out.size() < count) {
        long long v = uniform(lo, hi);
        if (seen.insert(v).second) out.push_back(v);
    }
    return out;
}

}  // namespace plink
