#include "incidence/duality.hpp"

#include "incidence/error.hpp"
#include "incidence/kernels.hpp"
#include "incidence/linalg.hpp"

namespace incidence {

namespace {

void require_same(const PosetPtr& pa, const FieldSpec& fa, const PosetPtr& pb, const FieldSpec& fb) {
    if (fa != fb) throw DomainError("field mismatch: " + fa.to_string() + " vs " + fb.to_string());
    if (!same_poset(pa, pb)) throw DomainError("poset mismatch");
}

std::vector<std::vector<Scalar>> zero_table(std::size_t m, const FieldSpec& field) {
    return std::vector<std::vector<Scalar>>(m, std::vector<Scalar>(m, Scalar::zero(field)));
}

std::string function_mismatch(const Poset& poset, const IncidenceFunction& lhs,
                              const IncidenceFunction& rhs) {
    for (std::size_t k = 0; k < poset.comparable_pairs(); ++k) {
        if (lhs.at(k) != rhs.at(k)) {
            return "value at " + poset.pair_name(k) + " is " + lhs.at(k).to_string() + " vs " +
                   rhs.at(k).to_string();
        }
    }
    return {};
}

/// e_a e_b for basis intervals a, b.
IncidenceFunction basis_product(const PosetPtr& poset, const FieldSpec& field, std::size_t a,
                                std::size_t b) {
    const auto& ia = poset->interval(a);
    const auto& ib = poset->interval(b);
    if (ia.hi != ib.lo) return IncidenceFunction::zero(poset, field);
    return matrix_unit(poset, field, ia.lo, ib.hi);
}

}  // namespace

// ---------------------------------------------------------------------------

AlgebraEndomap AlgebraEndomap::zero(PosetPtr poset, FieldSpec field) {
    const auto m = poset->comparable_pairs();
    return AlgebraEndomap(std::move(poset), field, zero_table(m, field));
}

AlgebraEndomap AlgebraEndomap::identity(PosetPtr poset, FieldSpec field) {
    auto psi = zero(std::move(poset), field);
    for (std::size_t k = 0; k < psi.columns_.size(); ++k) psi.columns_[k][k] = Scalar::one(field);
    return psi;
}

AlgebraEndomap AlgebraEndomap::from_images(PosetPtr poset, FieldSpec field,
                                           std::vector<IncidenceFunction> images) {
    if (images.size() != poset->comparable_pairs()) {
        throw DomainError("an image is required for every basis function");
    }
    std::vector<std::vector<Scalar>> columns;
    columns.reserve(images.size());
    for (auto& img : images) {
        require_same(poset, field, img.poset(), img.field());
        columns.push_back(std::move(img.mutable_values()));
    }
    return AlgebraEndomap(std::move(poset), field, std::move(columns));
}

AlgebraEndomap AlgebraEndomap::from_columns(PosetPtr poset, FieldSpec field,
                                            std::vector<std::vector<Scalar>> columns) {
    const auto m = poset->comparable_pairs();
    if (columns.size() != m) throw DomainError("an image is required for every basis function");
    for (const auto& col : columns) {
        if (col.size() != m) throw DomainError("image has the wrong dimension");
    }
    return AlgebraEndomap(std::move(poset), field, std::move(columns));
}

IncidenceFunction AlgebraEndomap::image(std::size_t interval) const {
    return IncidenceFunction::from_values(poset_, field_, columns_.at(interval));
}

AlgebraEndomap& AlgebraEndomap::operator+=(const AlgebraEndomap& rhs) {
    require_same(poset_, field_, rhs.poset_, rhs.field_);
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        for (std::size_t j = 0; j < columns_[i].size(); ++j) columns_[i][j] += rhs.columns_[i][j];
    }
    return *this;
}

AlgebraEndomap& AlgebraEndomap::operator-=(const AlgebraEndomap& rhs) {
    require_same(poset_, field_, rhs.poset_, rhs.field_);
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        for (std::size_t j = 0; j < columns_[i].size(); ++j) columns_[i][j] -= rhs.columns_[i][j];
    }
    return *this;
}

AlgebraEndomap& AlgebraEndomap::operator*=(const Scalar& c) {
    for (auto& col : columns_) {
        for (auto& v : col) v *= c;
    }
    return *this;
}

bool operator==(const AlgebraEndomap& a, const AlgebraEndomap& b) {
    return a.field_ == b.field_ && same_poset(a.poset_, b.poset_) && a.columns_ == b.columns_;
}

// ---------------------------------------------------------------------------

Scalar psi_eval(const IncidenceFunction& f, const CoalgebraVector& v) {
    require_same(f.poset(), f.field(), v.poset(), v.field());
    auto sum = Scalar::zero(f.field());
    for (std::size_t k = 0; k < v.coeffs().size(); ++k) {
        if (!v.at(k).is_zero()) sum += v.at(k) * f.at(k);
    }
    return sum;
}

IncidenceFunction dual_product(const IncidenceFunction& f, const IncidenceFunction& g) {
    require_compatible(f, g);
    const auto& poset = f.poset();
    auto out = IncidenceFunction::zero(poset, f.field());
    for (std::size_t k = 0; k < poset->comparable_pairs(); ++k) {
        // (chi o xi)(c) = sum_i chi(a_i) xi(b_i) for Delta(c) = sum_i a_i (x) b_i.
        const auto delta_c = comultiply(CoalgebraVector::basis(poset, f.field(), k));
        auto sum = Scalar::zero(f.field());
        for (const auto& [pair, coeff] : delta_c.terms()) {
            const auto a = CoalgebraVector::from_terms(poset, f.field(), {{pair.first, coeff}});
            const auto b = CoalgebraVector::from_terms(poset, f.field(),
                                                       {{pair.second, Scalar::one(f.field())}});
            sum += psi_eval(f, a) * psi_eval(g, b);
        }
        out.set_at(k, std::move(sum));
    }
    return out;
}

AlgebraEndomap theta(const CoalgebraEndomap& phi) {
    // Theta(phi)(e_st)(x,y) is the coefficient of [s,t] in phi([x,y]).
    auto columns = zero_table(phi.dimension(), phi.field());
    kernels::omp::transpose(phi.columns(), columns);
    return AlgebraEndomap::from_columns(phi.poset(), phi.field(), std::move(columns));
}

IncidenceFunction theta_apply(const CoalgebraEndomap& phi, const IncidenceFunction& f) {
    require_same(phi.poset(), phi.field(), f.poset(), f.field());
    auto out = IncidenceFunction::zero(f.poset(), f.field());
    for (std::size_t k = 0; k < phi.dimension(); ++k) out.set_at(k, psi_eval(f, phi.image(k)));
    return out;
}

IncidenceFunction apply_algebra_endomap(const AlgebraEndomap& psi, const IncidenceFunction& f) {
    require_same(psi.poset(), psi.field(), f.poset(), f.field());
    auto out = IncidenceFunction::zero(f.poset(), f.field());
    kernels::omp::combine(f.values(), psi.columns(), out.mutable_values());
    return out;
}

AlgebraEndomap compose_algebra_endomaps(const AlgebraEndomap& a, const AlgebraEndomap& b) {
    require_same(a.poset(), a.field(), b.poset(), b.field());
    auto columns = zero_table(a.dimension(), a.field());
    kernels::omp::compose(a.columns(), b.columns(), columns);
    return AlgebraEndomap::from_columns(a.poset(), a.field(), std::move(columns));
}

bool is_bijective(const AlgebraEndomap& psi) {
    return exact_rank(psi.columns(), psi.field()) == psi.dimension();
}

CheckResult is_algebra_automorphism(const AlgebraEndomap& psi) {
    const auto& poset = psi.poset();
    const auto& field = psi.field();
    const auto one = delta(poset, field);
    const auto image_of_one = apply_algebra_endomap(psi, one);
    if (image_of_one != one) {
        return {Counterexample{.identity = Identity::UnitPreservation,
                               .detail = "ψ(δ) ≠ δ: " + function_mismatch(*poset, image_of_one, one)}};
    }
    const auto m = psi.dimension();
    std::vector<std::optional<Counterexample>> found(m);
    const auto first = kernels::omp::first_failure(m, [&](std::size_t a) {
        const auto psi_a = psi.image(a);
        for (std::size_t b = 0; b < m; ++b) {
            const auto lhs = apply_algebra_endomap(psi, basis_product(poset, field, a, b));
            const auto rhs = convolve(psi_a, psi.image(b));
            if (lhs != rhs) {
                found[a] = Counterexample{.identity = Identity::Multiplicativity,
                                          .interval = a,
                                          .partner = b,
                                          .detail = function_mismatch(*poset, lhs, rhs)};
                return true;
            }
        }
        return false;
    });
    if (first) return {found[*first]};
    if (!is_bijective(psi)) {
        return {Counterexample{.identity = Identity::Bijectivity,
                               .detail = "images of the basis are linearly dependent"}};
    }
    return {};
}

CheckResult is_algebra_derivation(const AlgebraEndomap& d) {
    const auto& poset = d.poset();
    const auto& field = d.field();
    const auto m = d.dimension();
    std::vector<std::optional<Counterexample>> found(m);
    const auto first = kernels::omp::first_failure(m, [&](std::size_t a) {
        const auto e_a = basis_function(poset, field, a);
        const auto d_a = d.image(a);
        for (std::size_t b = 0; b < m; ++b) {
            const auto e_b = basis_function(poset, field, b);
            const auto lhs = apply_algebra_endomap(d, basis_product(poset, field, a, b));
            const auto rhs = convolve(d_a, e_b) + convolve(e_a, d.image(b));
            if (lhs != rhs) {
                found[a] = Counterexample{.identity = Identity::Leibniz,
                                          .interval = a,
                                          .partner = b,
                                          .detail = function_mismatch(*poset, lhs, rhs)};
                return true;
            }
        }
        return false;
    });
    if (first) return {found[*first]};
    return {};
}

}  // namespace incidence
