#pragma once

/**
 * @file semigroup.hpp
 * @brief Membership in the additive monoid N-spanned by a set of positive
 *        generators (0 is always a member: the empty combination).
 */

#include "absirr/error.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace absirr {

class GeneratorSet {
public:
    GeneratorSet() = default;
    GeneratorSet(std::initializer_list<std::uint64_t> gens) : GeneratorSet(std::vector<std::uint64_t>(gens)) {}
    explicit GeneratorSet(std::vector<std::uint64_t> gens) : g_(std::move(gens)) {
        std::sort(g_.begin(), g_.end());
        g_.erase(std::unique(g_.begin(), g_.end()), g_.end());
        if (!g_.empty() && g_.front() == 0) throw Error(ErrorCode::BadIndex, "generators must be positive");
    }

    const std::vector<std::uint64_t>& generators() const { return g_; }
    bool empty() const { return g_.empty(); }
    std::size_t size() const { return g_.size(); }

private:
    std::vector<std::uint64_t> g_;
};

/// reachable[t] for t = 0..bound, by forward coin-change closure.
inline std::vector<bool> span_table(std::uint64_t bound, const GeneratorSet& gens) {
    std::vector<bool> reachable(bound + 1, false);
    reachable[0] = true;
    for (std::uint64_t t = 1; t <= bound; ++t) {
        for (auto g : gens.generators()) {
            if (g > t) break;
            if (reachable[t - g]) {
                reachable[t] = true;
                break;
            }
        }
    }
    return reachable;
}

inline bool span_membership(std::uint64_t target, const GeneratorSet& gens) {
    return span_table(target, gens)[target];
}

/// All 0 < t < bound outside the span, ascending.
inline std::vector<std::uint64_t> gaps_below(std::uint64_t bound, const GeneratorSet& gens) {
    std::vector<std::uint64_t> out;
    if (bound == 0) return out;
    const auto table = span_table(bound, gens);
    for (std::uint64_t t = 1; t < bound; ++t)
        if (!table[t]) out.push_back(t);
    return out;
}

/// For an increasing gap sequence g_1 < ... < g_m, entry i says whether
/// g_{i+1} lies in span{g_1, ..., g_i} (entry 0 uses the empty set).
inline std::vector<bool> span_status(std::span<const std::uint64_t> gaps) {
    std::vector<bool> out;
    out.reserve(gaps.size());
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        GeneratorSet prefix(std::vector<std::uint64_t>(gaps.begin(), gaps.begin() + static_cast<std::ptrdiff_t>(i)));
        out.push_back(span_membership(gaps[i], prefix));
    }
    return out;
}

}  // namespace absirr
