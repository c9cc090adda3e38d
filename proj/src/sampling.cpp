#include "incidence/sampling.hpp"

namespace incidence {

namespace {

std::vector<std::vector<Scalar>> random_columns(std::size_t m, const FieldSpec& field, Rng& rng) {
    std::vector<std::vector<Scalar>> columns(m);
    for (auto& col : columns) {
        col.reserve(m);
        for (std::size_t i = 0; i < m; ++i) col.push_back(random_scalar(field, rng));
    }
    return columns;
}

}  // namespace

Scalar random_scalar(const FieldSpec& field, Rng& rng) {
    if (field.is_rational()) return Scalar::from_int(field, static_cast<std::int64_t>(rng() % 7) - 3);
    return Scalar::from_int(field, static_cast<std::int64_t>(rng() % field.modulus()));
}

Scalar random_nonzero_scalar(const FieldSpec& field, Rng& rng) {
    if (field.is_rational()) {
        const auto r = static_cast<std::int64_t>(rng() % 6);
        return Scalar::from_int(field, r < 3 ? r - 3 : r - 2);  // -3..-1, 1..3
    }
    return Scalar::from_int(field, static_cast<std::int64_t>(1 + rng() % (field.modulus() - 1)));
}

IncidenceFunction random_function(const PosetPtr& poset, const FieldSpec& field, Rng& rng) {
    std::vector<Scalar> values;
    values.reserve(poset->comparable_pairs());
    for (std::size_t k = 0; k < poset->comparable_pairs(); ++k) values.push_back(random_scalar(field, rng));
    return IncidenceFunction::from_values(poset, field, std::move(values));
}

IncidenceFunction random_unit(const PosetPtr& poset, const FieldSpec& field, Rng& rng) {
    std::vector<Scalar> values;
    values.reserve(poset->comparable_pairs());
    for (const auto& iv : poset->intervals()) {
        values.push_back(iv.is_point() ? random_nonzero_scalar(field, rng) : random_scalar(field, rng));
    }
    return IncidenceFunction::from_values(poset, field, std::move(values));
}

IncidenceFunction random_off_diagonal(const PosetPtr& poset, const FieldSpec& field, Rng& rng) {
    std::vector<Scalar> values;
    values.reserve(poset->comparable_pairs());
    for (const auto& iv : poset->intervals()) {
        values.push_back(iv.is_point() ? Scalar::zero(field) : random_scalar(field, rng));
    }
    return IncidenceFunction::from_values(poset, field, std::move(values));
}

MultiplicativeSystem random_mult_system(const PosetPtr& poset, const FieldSpec& field, Rng& rng) {
    std::vector<Scalar> s;
    for (std::size_t x = 0; x < poset->size(); ++x) s.push_back(random_nonzero_scalar(field, rng));
    return MultiplicativeSystem::from_potential(poset, field, s);
}

AdditiveSystem random_additive_system(const PosetPtr& poset, const FieldSpec& field, Rng& rng) {
    std::vector<Scalar> s;
    for (std::size_t x = 0; x < poset->size(); ++x) s.push_back(random_scalar(field, rng));
    return AdditiveSystem::from_potential(poset, field, s);
}

PosetAutomorphism random_order_automorphism(const Poset& poset, Rng& rng) {
    const auto group = enumerate_automorphisms(poset);
    return group[rng() % group.size()];
}

AutDecomposition random_aut_parts(const PosetPtr& poset, const FieldSpec& field, Rng& rng) {
    auto u = delta(poset, field) + random_off_diagonal(poset, field, rng);
    auto sys = random_mult_system(poset, field, rng);
    auto tau = random_order_automorphism(*poset, rng);
    return AutDecomposition{.inner_unit = std::move(u), .mult_system = std::move(sys), .order_part = std::move(tau)};
}

DerDecomposition random_der_parts(const PosetPtr& poset, const FieldSpec& field, Rng& rng) {
    auto g = random_off_diagonal(poset, field, rng);
    auto sys = random_additive_system(poset, field, rng);
    return DerDecomposition{.inner_part = std::move(g), .additive_system = std::move(sys)};
}

CoalgebraEndomap random_coalgebra_endomap(const PosetPtr& poset, const FieldSpec& field, Rng& rng) {
    return CoalgebraEndomap::from_columns(poset, field,
                                          random_columns(poset->comparable_pairs(), field, rng));
}

AlgebraEndomap random_algebra_endomap(const PosetPtr& poset, const FieldSpec& field, Rng& rng) {
    return AlgebraEndomap::from_columns(poset, field,
                                        random_columns(poset->comparable_pairs(), field, rng));
}

}  // namespace incidence
