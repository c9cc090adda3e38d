#include "incidence/automorphisms.hpp"

#include "incidence/error.hpp"
#include "pair_system.hpp"

namespace incidence {

namespace {

std::vector<std::vector<Scalar>> zero_columns(std::size_t m, const FieldSpec& field) {
    return std::vector<std::vector<Scalar>>(m, std::vector<Scalar>(m, Scalar::zero(field)));
}

void require_field(const FieldSpec& a, const FieldSpec& b) {
    if (a != b) throw DomainError("field mismatch: " + a.to_string() + " vs " + b.to_string());
}

void require_order_map(const Poset& poset, const PosetAutomorphism& tau) {
    if (tau.size() != poset.size()) throw DomainError("order automorphism has the wrong size");
    // from_map re-validates order preservation and reflection.
    (void)PosetAutomorphism::from_map(poset, tau.forward());
}

}  // namespace

// ---------------------------------------------------------------------------

MultiplicativeSystem MultiplicativeSystem::trivial(PosetPtr poset, FieldSpec field) {
    const auto m = poset->comparable_pairs();
    return MultiplicativeSystem(std::move(poset), field, std::vector<Scalar>(m, Scalar::one(field)));
}

MultiplicativeSystem MultiplicativeSystem::from_values(PosetPtr poset, FieldSpec field,
                                                       const std::vector<Term<Interval>>& values) {
    auto dense = detail::pair_values(*poset, field, values, Scalar::one(field), false);
    for (std::size_t k = 0; k < dense.size(); ++k) {
        if (dense[k].is_zero()) {
            throw DomainError("multiplicative system value is zero at " + poset->pair_name(k));
        }
    }
    detail::check_pair_relation(
        *poset, dense, [](const Scalar& a, const Scalar& b) { return a * b; }, "c_xy = c_xz c_zy");
    return MultiplicativeSystem(std::move(poset), field, std::move(dense));
}

MultiplicativeSystem MultiplicativeSystem::from_potential(PosetPtr poset, FieldSpec field,
                                                          const std::vector<Scalar>& potential) {
    if (potential.size() != poset->size()) throw DomainError("potential has the wrong size");
    std::vector<Scalar> dense;
    dense.reserve(poset->comparable_pairs());
    for (const auto& iv : poset->intervals()) {
        require_field(potential[iv.lo].field(), field);
        dense.push_back(potential[iv.hi] / potential[iv.lo]);
    }
    return MultiplicativeSystem(std::move(poset), field, std::move(dense));
}

const Scalar& MultiplicativeSystem::value(Element x, Element y) const {
    return values_[poset_->require_interval(x, y)];
}

std::vector<Term<Interval>> MultiplicativeSystem::entries() const {
    std::vector<Term<Interval>> out;
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (!poset_->interval(k).is_point()) out.push_back({poset_->interval(k), values_[k]});
    }
    return out;
}

bool MultiplicativeSystem::is_trivial() const {
    for (const auto& v : values_) {
        if (!v.is_one()) return false;
    }
    return true;
}

bool operator==(const MultiplicativeSystem& a, const MultiplicativeSystem& b) {
    return a.field_ == b.field_ && same_poset(a.poset_, b.poset_) && a.values_ == b.values_;
}

// ---------------------------------------------------------------------------

CoalgebraEndomap mult_automorphism_C(const MultiplicativeSystem& sys) {
    const auto m = sys.poset()->comparable_pairs();
    auto columns = zero_columns(m, sys.field());
    for (std::size_t k = 0; k < m; ++k) columns[k][k] = sys.at(k);
    return CoalgebraEndomap::from_columns(sys.poset(), sys.field(), std::move(columns));
}

CoalgebraEndomap order_automorphism_C(const PosetPtr& poset, const FieldSpec& field,
                                      const PosetAutomorphism& tau) {
    require_order_map(*poset, tau);
    const auto m = poset->comparable_pairs();
    auto columns = zero_columns(m, field);
    for (std::size_t k = 0; k < m; ++k) {
        const auto& iv = poset->interval(k);
        columns[k][*poset->interval_index(tau(iv.lo), tau(iv.hi))] = Scalar::one(field);
    }
    return CoalgebraEndomap::from_columns(poset, field, std::move(columns));
}

InnerCoefficients::InnerCoefficients(const IncidenceFunction& h) : h_(h), h_inv_(invert_function(h)) {}

Scalar InnerCoefficients::value(const IncidenceFunction& f, Element a, Element b) const {
    if (!h_.poset()->leq(a, b)) return Scalar::zero(h_.field());
    return f(a, b);
}

Scalar InnerCoefficients::alpha(Element x, Element y, Element s, Element t) const {
    return value(h_inv_, x, s) * value(h_, t, y);
}

Scalar InnerCoefficients::beta(Element x, Element y, Element s, Element t) const {
    return value(h_inv_, t, y) * value(h_, x, s);
}

CoalgebraEndomap inner_automorphism_C(const IncidenceFunction& h, InnerDirection direction) {
    const InnerCoefficients coeffs(h);
    const auto& poset = *h.poset();
    const auto m = poset.comparable_pairs();
    auto columns = zero_columns(m, h.field());
    for (std::size_t k = 0; k < m; ++k) {
        const auto [x, y] = poset.interval(k);
        const auto between = poset.interval_elements(k);
        for (const auto s : between) {
            for (const auto t : between) {
                if (!poset.leq(s, t)) continue;
                columns[k][*poset.interval_index(s, t)] = direction == InnerDirection::Forward
                                                              ? coeffs.alpha(x, y, s, t)
                                                              : coeffs.beta(x, y, s, t);
            }
        }
    }
    return CoalgebraEndomap::from_columns(h.poset(), h.field(), std::move(columns));
}

// ---------------------------------------------------------------------------

AlgebraEndomap inner_automorphism_A(const IncidenceFunction& v) {
    const auto v_inv = invert_function(v);
    const auto& poset = v.poset();
    std::vector<IncidenceFunction> images;
    images.reserve(poset->comparable_pairs());
    for (std::size_t k = 0; k < poset->comparable_pairs(); ++k) {
        images.push_back(v_inv * basis_function(poset, v.field(), k) * v);
    }
    return AlgebraEndomap::from_images(poset, v.field(), std::move(images));
}

AlgebraEndomap mult_automorphism_A(const MultiplicativeSystem& sys) {
    const auto m = sys.poset()->comparable_pairs();
    auto columns = zero_columns(m, sys.field());
    for (std::size_t k = 0; k < m; ++k) columns[k][k] = sys.at(k);
    return AlgebraEndomap::from_columns(sys.poset(), sys.field(), std::move(columns));
}

AlgebraEndomap order_automorphism_A(const PosetPtr& poset, const FieldSpec& field,
                                    const PosetAutomorphism& tau) {
    require_order_map(*poset, tau);
    const auto m = poset->comparable_pairs();
    auto columns = zero_columns(m, field);
    // eta_tau(e_st) = e_{tau^-1 s, tau^-1 t}
    for (std::size_t k = 0; k < m; ++k) {
        const auto& iv = poset->interval(k);
        columns[k][*poset->interval_index(tau.inverse_of(iv.lo), tau.inverse_of(iv.hi))] =
            Scalar::one(field);
    }
    return AlgebraEndomap::from_columns(poset, field, std::move(columns));
}

AlgebraEndomap algebra_automorphism(const PosetPtr& poset, const FieldSpec& field, AutKind kind,
                                    const AutPayload& payload) {
    switch (kind) {
        case AutKind::Inner:
            if (const auto* v = std::get_if<IncidenceFunction>(&payload)) {
                if (!same_poset(v->poset(), poset)) throw DomainError("poset mismatch");
                require_field(v->field(), field);
                return inner_automorphism_A(*v);
            }
            break;
        case AutKind::Mult:
            if (const auto* sys = std::get_if<MultiplicativeSystem>(&payload)) {
                if (!same_poset(sys->poset(), poset)) throw DomainError("poset mismatch");
                require_field(sys->field(), field);
                return mult_automorphism_A(*sys);
            }
            break;
        case AutKind::Order:
            if (const auto* tau = std::get_if<PosetAutomorphism>(&payload)) {
                return order_automorphism_A(poset, field, *tau);
            }
            break;
    }
    throw DomainError("payload does not match the automorphism kind");
}

// ---------------------------------------------------------------------------

AlgebraEndomap compose_algebra_automorphism(const AutDecomposition& parts) {
    const auto& poset = parts.inner_unit.poset();
    const auto& field = parts.inner_unit.field();
    const auto inner = inner_automorphism_A(parts.inner_unit);
    const auto mult = mult_automorphism_A(parts.mult_system);
    const auto order = order_automorphism_A(poset, field, parts.order_part);
    return compose_algebra_endomaps(compose_algebra_endomaps(inner, mult), order);
}

CoalgebraAutFactors coalgebra_factors(const AutDecomposition& parts) {
    const auto& poset = parts.inner_unit.poset();
    const auto& field = parts.inner_unit.field();
    return CoalgebraAutFactors{
        .sigma = order_automorphism_C(poset, field, parts.order_part),
        .lambda = mult_automorphism_C(parts.mult_system),
        .nu = inner_automorphism_C(parts.inner_unit, InnerDirection::Forward),
        .witness = parts,
    };
}

CoalgebraEndomap compose_coalgebra_automorphism(const AutDecomposition& parts) {
    const auto f = coalgebra_factors(parts);
    return compose_endomaps(f.sigma, compose_endomaps(f.lambda, f.nu));
}

AutDecomposition decompose_algebra_automorphism(const AlgebraEndomap& psi) {
    const auto& poset = psi.poset();
    const auto& field = psi.field();
    if (const auto check = is_algebra_automorphism(psi); !check) {
        throw DomainError("not an algebra automorphism: " + check.describe(*poset));
    }
    const auto n = poset->size();

    // tau^-1(x) is the unique y with psi(e_x)(y,y) = 1.
    std::vector<Element> backward(n);
    for (Element x = 0; x < n; ++x) {
        const auto img = psi.image(*poset->interval_index(x, x));
        std::optional<Element> found;
        for (Element y = 0; y < n; ++y) {
            if (img(y, y).is_zero()) continue;
            if (!img(y, y).is_one() || found) {
                throw DomainError("not an algebra automorphism: image of e" + poset->pair_name(
                                      *poset->interval_index(x, x)) + " is not a primitive idempotent");
            }
            found = y;
        }
        if (!found) throw DomainError("not an algebra automorphism: idempotent mapped off the diagonal");
        backward[x] = *found;
    }
    const auto tau_inv = PosetAutomorphism::from_map(*poset, backward);
    const auto tau = tau_inv.inverse();

    // psi1 = psi o eta_{tau^-1} fixes each e_x modulo M1.
    const auto psi1 = compose_algebra_endomaps(psi, order_automorphism_A(poset, field, tau_inv));
    auto u = IncidenceFunction::zero(poset, field);
    for (Element x = 0; x < n; ++x) {
        const auto k = *poset->interval_index(x, x);
        u += basis_function(poset, field, k) * psi1.image(k);
    }
    const auto u_inv = invert_function(u);

    // u psi1(e_xy) u^-1 = c_xy e_xy.
    std::vector<Term<Interval>> values;
    for (std::size_t k = 0; k < poset->comparable_pairs(); ++k) {
        if (poset->interval(k).is_point()) continue;
        const auto img = u * psi1.image(k) * u_inv;
        values.push_back({poset->interval(k), img.at(k)});
    }
    AutDecomposition parts{
        .inner_unit = u,
        .mult_system = MultiplicativeSystem::from_values(poset, field, values),
        .order_part = tau,
    };
    if (compose_algebra_automorphism(parts) != psi) {
        throw DomainError("not an algebra automorphism: recomposition differs from the input");
    }
    return parts;
}

CoalgebraAutFactors decompose_coalgebra_automorphism(const CoalgebraEndomap& phi) {
    if (const auto check = is_coalgebra_automorphism(phi); !check) {
        throw DomainError("not a coalgebra automorphism: " + check.describe(*phi.poset()));
    }
    auto factors = coalgebra_factors(decompose_algebra_automorphism(theta(phi)));
    if (compose_endomaps(factors.sigma, compose_endomaps(factors.lambda, factors.nu)) != phi) {
        throw DomainError("not a coalgebra automorphism: recomposition differs from the input");
    }
    return factors;
}

}  // namespace incidence
