#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "incidence/poset.hpp"

namespace incidence {

/// The identities checked by the predicates of this library.
enum class Identity {
    Coassociativity,
    LeftCounit,
    RightCounit,
    Comultiplication,  // (phi (x) phi) Delta = Delta phi
    Counit,            // epsilon phi = epsilon
    Bijectivity,
    CoLeibniz,         // Delta d = (d (x) 1) Delta + (1 (x) d) Delta
    Multiplicativity,  // psi(ab) = psi(a) psi(b) on basis elements
    UnitPreservation,  // psi(delta) = delta
    Leibniz,           // d(ab) = d(a) b + a d(b) on basis elements
};

std::string identity_name(Identity id);

struct Counterexample {
    Identity identity;
    /// Basis interval where the identity fails (the first factor for pairwise identities).
    std::size_t interval = 0;
    /// Second basis element for identities checked on pairs.
    std::optional<std::size_t> partner;
    std::string detail;
};

/// Outcome of an exhaustive check; converts to true when the property holds.
struct CheckResult {
    std::optional<Counterexample> failure;

    explicit operator bool() const { return !failure.has_value(); }
    bool holds() const { return !failure.has_value(); }
    /// "pass" or a one-line description of the first counterexample.
    std::string describe(const Poset& poset) const;
};

}  // namespace incidence
