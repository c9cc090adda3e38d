#include "incidence/check.hpp"

namespace incidence {

std::string identity_name(Identity id) {
    switch (id) {
        case Identity::Coassociativity: return "coassociativity";
        case Identity::LeftCounit: return "left counit";
        case Identity::RightCounit: return "right counit";
        case Identity::Comultiplication: return "comultiplication";
        case Identity::Counit: return "counit";
        case Identity::Bijectivity: return "bijectivity";
        case Identity::CoLeibniz: return "co-Leibniz";
        case Identity::Multiplicativity: return "multiplicativity";
        case Identity::UnitPreservation: return "unit";
        case Identity::Leibniz: return "Leibniz";
    }
    return "unknown";
}

std::string CheckResult::describe(const Poset& poset) const {
    if (!failure) return "pass";
    std::string out = identity_name(failure->identity);
    switch (failure->identity) {
        case Identity::Bijectivity:
        case Identity::UnitPreservation: break;
        case Identity::Multiplicativity:
        case Identity::Leibniz:
            out += " fails at e" + poset.pair_name(failure->interval);
            if (failure->partner) out += ", e" + poset.pair_name(*failure->partner);
            break;
        default: out += " fails at " + poset.interval_name(failure->interval); break;
    }
    if (!failure->detail.empty()) out += ": " + failure->detail;
    return out;
}

}  // namespace incidence
