#pragma once

// Shared parsing of scalar systems indexed by the strict pairs of a poset.

#include <vector>

#include "incidence/algebra.hpp"
#include "incidence/error.hpp"

namespace incidence::detail {

/// Dense values over all intervals: `fill` on one-point intervals and on strict
/// pairs left out of `values` (allowed only when `allow_missing`).
inline std::vector<Scalar> pair_values(const Poset& poset, const FieldSpec& field,
                                       const std::vector<Term<Interval>>& values,
                                       const Scalar& fill, bool allow_missing) {
    const auto m = poset.comparable_pairs();
    std::vector<Scalar> out(m, fill);
    std::vector<bool> seen(m, false);
    for (const auto& [pair, c] : values) {
        if (c.field() != field) throw DomainError("system value is in the wrong field");
        if (pair.lo >= poset.size() || pair.hi >= poset.size() || !poset.less(pair.lo, pair.hi)) {
            throw DomainError("system value given for a pair that is not strict: (" +
                              (pair.lo < poset.size() ? poset.name(pair.lo) : "?") + "," +
                              (pair.hi < poset.size() ? poset.name(pair.hi) : "?") + ")");
        }
        const auto k = *poset.interval_index(pair.lo, pair.hi);
        if (seen[k]) throw DomainError("system value repeated for " + poset.pair_name(k));
        seen[k] = true;
        out[k] = c;
    }
    if (!allow_missing) {
        for (std::size_t k = 0; k < m; ++k) {
            if (!poset.interval(k).is_point() && !seen[k]) {
                throw DomainError("system value missing for " + poset.pair_name(k));
            }
        }
    }
    return out;
}

/// Throws DomainError at the first strict interval whose value differs from
/// combine(left, right) for a split through an interior point.
template <typename Combine>
void check_pair_relation(const Poset& poset, const std::vector<Scalar>& values, Combine combine,
                         const char* relation) {
    for (std::size_t k = 0; k < poset.comparable_pairs(); ++k) {
        if (poset.interval(k).is_point()) continue;
        for (const auto& split : poset.splits(k)) {
            if (poset.interval(split.left).is_point() || poset.interval(split.right).is_point()) {
                continue;
            }
            if (values[k] != combine(values[split.left], values[split.right])) {
                const auto& mid = poset.name(poset.interval(split.left).hi);
                throw DomainError(std::string("relation ") + relation + " fails at " +
                                  poset.pair_name(k) + " through " + mid);
            }
        }
    }
}

}  // namespace incidence::detail
