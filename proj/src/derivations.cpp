#include "incidence/derivations.hpp"

#include "incidence/error.hpp"
#include "pair_system.hpp"

namespace incidence {

namespace {

std::vector<std::vector<Scalar>> zero_columns(std::size_t m, const FieldSpec& field) {
    return std::vector<std::vector<Scalar>>(m, std::vector<Scalar>(m, Scalar::zero(field)));
}

}  // namespace

AdditiveSystem AdditiveSystem::zero(PosetPtr poset, FieldSpec field) {
    const auto m = poset->comparable_pairs();
    return AdditiveSystem(std::move(poset), field, std::vector<Scalar>(m, Scalar::zero(field)));
}

AdditiveSystem AdditiveSystem::from_values(PosetPtr poset, FieldSpec field,
                                           const std::vector<Term<Interval>>& values) {
    auto dense = detail::pair_values(*poset, field, values, Scalar::zero(field), true);
    detail::check_pair_relation(
        *poset, dense, [](const Scalar& a, const Scalar& b) { return a + b; }, "c_xy = c_xz + c_zy");
    return AdditiveSystem(std::move(poset), field, std::move(dense));
}

AdditiveSystem AdditiveSystem::from_potential(PosetPtr poset, FieldSpec field,
                                              const std::vector<Scalar>& potential) {
    if (potential.size() != poset->size()) throw DomainError("potential has the wrong size");
    std::vector<Scalar> dense;
    dense.reserve(poset->comparable_pairs());
    for (const auto& iv : poset->intervals()) dense.push_back(potential[iv.hi] - potential[iv.lo]);
    return AdditiveSystem(std::move(poset), field, std::move(dense));
}

const Scalar& AdditiveSystem::value(Element x, Element y) const {
    return values_[poset_->require_interval(x, y)];
}

std::vector<Term<Interval>> AdditiveSystem::entries() const {
    std::vector<Term<Interval>> out;
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (!poset_->interval(k).is_point()) out.push_back({poset_->interval(k), values_[k]});
    }
    return out;
}

bool AdditiveSystem::is_zero() const {
    for (const auto& v : values_) {
        if (!v.is_zero()) return false;
    }
    return true;
}

bool operator==(const AdditiveSystem& a, const AdditiveSystem& b) {
    return a.field_ == b.field_ && same_poset(a.poset_, b.poset_) && a.values_ == b.values_;
}

// ---------------------------------------------------------------------------

CoalgebraEndomap additive_derivation_C(const AdditiveSystem& sys) {
    const auto m = sys.poset()->comparable_pairs();
    auto columns = zero_columns(m, sys.field());
    for (std::size_t k = 0; k < m; ++k) columns[k][k] = sys.at(k);
    return CoalgebraEndomap::from_columns(sys.poset(), sys.field(), std::move(columns));
}

CoalgebraEndomap inner_derivation_C(const IncidenceFunction& g) {
    const auto& poset = *g.poset();
    const auto m = poset.comparable_pairs();
    auto columns = zero_columns(m, g.field());
    for (std::size_t k = 0; k < m; ++k) {
        const auto [x, y] = poset.interval(k);
        for (const auto z : poset.interval_elements(k)) {
            columns[k][*poset.interval_index(x, z)] += g(z, y);
            columns[k][*poset.interval_index(z, y)] -= g(x, z);
        }
    }
    return CoalgebraEndomap::from_columns(g.poset(), g.field(), std::move(columns));
}

AlgebraEndomap inner_derivation_A(const IncidenceFunction& c) {
    const auto& poset = c.poset();
    std::vector<IncidenceFunction> images;
    images.reserve(poset->comparable_pairs());
    for (std::size_t k = 0; k < poset->comparable_pairs(); ++k) {
        const auto e = basis_function(poset, c.field(), k);
        images.push_back(e * c - c * e);
    }
    return AlgebraEndomap::from_images(poset, c.field(), std::move(images));
}

AlgebraEndomap additive_derivation_A(const AdditiveSystem& sys) {
    const auto m = sys.poset()->comparable_pairs();
    auto columns = zero_columns(m, sys.field());
    for (std::size_t k = 0; k < m; ++k) columns[k][k] = sys.at(k);
    return AlgebraEndomap::from_columns(sys.poset(), sys.field(), std::move(columns));
}

AlgebraEndomap algebra_derivation(const PosetPtr& poset, const FieldSpec& field, DerKind kind,
                                  const DerPayload& payload) {
    const auto check = [&](const PosetPtr& p, const FieldSpec& f) {
        if (!same_poset(p, poset)) throw DomainError("poset mismatch");
        if (f != field) throw DomainError("field mismatch");
    };
    switch (kind) {
        case DerKind::Inner:
            if (const auto* c = std::get_if<IncidenceFunction>(&payload)) {
                check(c->poset(), c->field());
                return inner_derivation_A(*c);
            }
            break;
        case DerKind::Additive:
            if (const auto* sys = std::get_if<AdditiveSystem>(&payload)) {
                check(sys->poset(), sys->field());
                return additive_derivation_A(*sys);
            }
            break;
    }
    throw DomainError("payload does not match the derivation kind");
}

std::pair<IncidenceFunction, IncidenceFunction> split_inner_derivation(const IncidenceFunction& c) {
    return split_L1_M1(c);
}

// ---------------------------------------------------------------------------

AlgebraEndomap compose_algebra_derivation(const DerDecomposition& parts) {
    return inner_derivation_A(parts.inner_part) + additive_derivation_A(parts.additive_system);
}

CoalgebraDerFactors coalgebra_der_factors(const DerDecomposition& parts) {
    return CoalgebraDerFactors{
        .nu = inner_derivation_C(parts.inner_part),
        .lambda = additive_derivation_C(parts.additive_system),
        .witness = parts,
    };
}

CoalgebraEndomap compose_coalgebra_derivation(const DerDecomposition& parts) {
    const auto f = coalgebra_der_factors(parts);
    return f.nu + f.lambda;
}

DerDecomposition decompose_algebra_derivation(const AlgebraEndomap& d) {
    const auto& poset = d.poset();
    const auto& field = d.field();
    if (const auto check = is_algebra_derivation(d); !check) {
        throw DomainError("not an algebra derivation: " + check.describe(*poset));
    }
    // g = sum_x e_x d(e_x) lies in M1 and d - d_g vanishes on L1.
    auto g = IncidenceFunction::zero(poset, field);
    for (Element x = 0; x < poset->size(); ++x) {
        const auto k = *poset->interval_index(x, x);
        g += basis_function(poset, field, k) * d.image(k);
    }
    if (!is_off_diagonal(g)) throw DomainError("not an algebra derivation: d(e_x) has a diagonal part");
    const auto rest = d - inner_derivation_A(g);
    std::vector<Term<Interval>> values;
    for (std::size_t k = 0; k < poset->comparable_pairs(); ++k) {
        if (!poset->interval(k).is_point()) values.push_back({poset->interval(k), rest.image(k).at(k)});
    }
    DerDecomposition parts{
        .inner_part = g,
        .additive_system = AdditiveSystem::from_values(poset, field, values),
    };
    if (compose_algebra_derivation(parts) != d) {
        throw DomainError("not an algebra derivation: recomposition differs from the input");
    }
    return parts;
}

CoalgebraDerFactors decompose_coalgebra_derivation(const CoalgebraEndomap& d) {
    if (const auto check = is_coalgebra_derivation(d); !check) {
        throw DomainError("not a coalgebra derivation: " + check.describe(*d.poset()));
    }
    auto factors = coalgebra_der_factors(decompose_algebra_derivation(theta(d)));
    if (factors.nu + factors.lambda != d) {
        throw DomainError("not a coalgebra derivation: recomposition differs from the input");
    }
    return factors;
}

}  // namespace incidence
