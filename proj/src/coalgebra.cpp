#include "incidence/coalgebra.hpp"

#include <array>
#include <map>

#include "incidence/error.hpp"
#include "incidence/kernels.hpp"
#include "incidence/linalg.hpp"

namespace incidence {

namespace {

void require_same(const PosetPtr& pa, const FieldSpec& fa, const PosetPtr& pb, const FieldSpec& fb) {
    if (fa != fb) throw DomainError("field mismatch: " + fa.to_string() + " vs " + fb.to_string());
    if (!same_poset(pa, pb)) throw DomainError("poset mismatch");
}

std::vector<Scalar> zeros(std::size_t n, const FieldSpec& field) {
    return std::vector<Scalar>(n, Scalar::zero(field));
}

}  // namespace

// ---------------------------------------------------------------------------
// CoalgebraVector

CoalgebraVector CoalgebraVector::zero(PosetPtr poset, FieldSpec field) {
    const auto m = poset->comparable_pairs();
    return CoalgebraVector(std::move(poset), field, zeros(m, field));
}

CoalgebraVector CoalgebraVector::basis(PosetPtr poset, FieldSpec field, std::size_t interval) {
    auto v = zero(std::move(poset), field);
    v.coeffs_.at(interval) = Scalar::one(field);
    return v;
}

CoalgebraVector CoalgebraVector::from_terms(PosetPtr poset, FieldSpec field,
                                            const std::vector<Term<Interval>>& terms) {
    auto v = zero(std::move(poset), field);
    for (const auto& [iv, c] : terms) v.coeffs_[v.poset_->require_interval(iv.lo, iv.hi)] += c;
    return v;
}

CoalgebraVector CoalgebraVector::from_coeffs(PosetPtr poset, FieldSpec field,
                                             std::vector<Scalar> coeffs) {
    if (coeffs.size() != poset->comparable_pairs()) {
        throw DomainError("coefficient count does not match the number of intervals");
    }
    return CoalgebraVector(std::move(poset), field, std::move(coeffs));
}

const Scalar& CoalgebraVector::coefficient(Element lo, Element hi) const {
    return coeffs_[poset_->require_interval(lo, hi)];
}

std::vector<Term<Interval>> CoalgebraVector::terms() const {
    std::vector<Term<Interval>> out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (!coeffs_[k].is_zero()) out.push_back({poset_->interval(k), coeffs_[k]});
    }
    return out;
}

bool CoalgebraVector::is_zero() const {
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

CoalgebraVector& CoalgebraVector::operator+=(const CoalgebraVector& rhs) {
    require_same(poset_, field_, rhs.poset_, rhs.field_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

CoalgebraVector& CoalgebraVector::operator-=(const CoalgebraVector& rhs) {
    require_same(poset_, field_, rhs.poset_, rhs.field_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

CoalgebraVector& CoalgebraVector::operator*=(const Scalar& c) {
    for (auto& v : coeffs_) v *= c;
    return *this;
}

bool operator==(const CoalgebraVector& a, const CoalgebraVector& b) {
    return a.field_ == b.field_ && same_poset(a.poset_, b.poset_) && a.coeffs_ == b.coeffs_;
}

// ---------------------------------------------------------------------------
// TensorVector

TensorVector TensorVector::zero(PosetPtr poset, FieldSpec field) {
    const auto m = poset->comparable_pairs();
    return TensorVector(std::move(poset), field, m);
}

TensorVector TensorVector::product(const CoalgebraVector& a, const CoalgebraVector& b) {
    require_same(a.poset(), a.field(), b.poset(), b.field());
    auto t = zero(a.poset(), a.field());
    for (std::size_t i = 0; i < t.dim_; ++i) {
        if (a.at(i).is_zero()) continue;
        for (std::size_t j = 0; j < t.dim_; ++j) {
            if (!b.at(j).is_zero()) t.add(i, j, a.at(i) * b.at(j));
        }
    }
    return t;
}

std::vector<Term<TensorVector::Pair>> TensorVector::terms() const {
    std::vector<Term<Pair>> out;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            const auto& c = at(i, j);
            if (!c.is_zero()) out.push_back({{poset_->interval(i), poset_->interval(j)}, c});
        }
    }
    return out;
}

bool TensorVector::is_zero() const {
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

TensorVector& TensorVector::operator+=(const TensorVector& rhs) {
    require_same(poset_, field_, rhs.poset_, rhs.field_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& rhs) {
    require_same(poset_, field_, rhs.poset_, rhs.field_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

TensorVector& TensorVector::operator*=(const Scalar& c) {
    for (auto& v : coeffs_) v *= c;
    return *this;
}

bool operator==(const TensorVector& a, const TensorVector& b) {
    return a.field_ == b.field_ && same_poset(a.poset_, b.poset_) && a.coeffs_ == b.coeffs_;
}

// ---------------------------------------------------------------------------
// CoalgebraEndomap

CoalgebraEndomap CoalgebraEndomap::zero(PosetPtr poset, FieldSpec field) {
    const auto m = poset->comparable_pairs();
    return CoalgebraEndomap(std::move(poset), field,
                            std::vector<std::vector<Scalar>>(m, zeros(m, field)));
}

CoalgebraEndomap CoalgebraEndomap::identity(PosetPtr poset, FieldSpec field) {
    return scaled_identity(std::move(poset), field, Scalar::one(field));
}

CoalgebraEndomap CoalgebraEndomap::scaled_identity(PosetPtr poset, FieldSpec field, const Scalar& c) {
    auto phi = zero(std::move(poset), field);
    for (std::size_t k = 0; k < phi.columns_.size(); ++k) phi.columns_[k][k] = c;
    return phi;
}

CoalgebraEndomap CoalgebraEndomap::from_images(PosetPtr poset, FieldSpec field,
                                               std::vector<CoalgebraVector> images) {
    if (images.size() != poset->comparable_pairs()) {
        throw DomainError("an image is required for every interval");
    }
    std::vector<std::vector<Scalar>> columns;
    columns.reserve(images.size());
    for (auto& img : images) {
        require_same(poset, field, img.poset(), img.field());
        columns.push_back(std::move(img.mutable_coeffs()));
    }
    return CoalgebraEndomap(std::move(poset), field, std::move(columns));
}

CoalgebraEndomap CoalgebraEndomap::from_columns(PosetPtr poset, FieldSpec field,
                                                std::vector<std::vector<Scalar>> columns) {
    const auto m = poset->comparable_pairs();
    if (columns.size() != m) throw DomainError("an image is required for every interval");
    for (const auto& col : columns) {
        if (col.size() != m) throw DomainError("image has the wrong dimension");
    }
    return CoalgebraEndomap(std::move(poset), field, std::move(columns));
}

CoalgebraVector CoalgebraEndomap::image(std::size_t interval) const {
    return CoalgebraVector::from_coeffs(poset_, field_, columns_.at(interval));
}

void CoalgebraEndomap::set_coefficient(std::size_t source, std::size_t target, Scalar c) {
    if (c.field() != field_) throw DomainError("field mismatch in endomap coefficient");
    columns_.at(source).at(target) = std::move(c);
}

CoalgebraEndomap& CoalgebraEndomap::operator+=(const CoalgebraEndomap& rhs) {
    require_same(poset_, field_, rhs.poset_, rhs.field_);
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        for (std::size_t j = 0; j < columns_[i].size(); ++j) columns_[i][j] += rhs.columns_[i][j];
    }
    return *this;
}

CoalgebraEndomap& CoalgebraEndomap::operator-=(const CoalgebraEndomap& rhs) {
    require_same(poset_, field_, rhs.poset_, rhs.field_);
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        for (std::size_t j = 0; j < columns_[i].size(); ++j) columns_[i][j] -= rhs.columns_[i][j];
    }
    return *this;
}

CoalgebraEndomap& CoalgebraEndomap::operator*=(const Scalar& c) {
    for (auto& col : columns_) {
        for (auto& v : col) v *= c;
    }
    return *this;
}

bool operator==(const CoalgebraEndomap& a, const CoalgebraEndomap& b) {
    return a.field_ == b.field_ && same_poset(a.poset_, b.poset_) && a.columns_ == b.columns_;
}

// ---------------------------------------------------------------------------
// Structure maps

TensorVector comultiply(const CoalgebraVector& v) {
    auto t = TensorVector::zero(v.poset(), v.field());
    const auto& poset = *v.poset();
    for (std::size_t k = 0; k < poset.comparable_pairs(); ++k) {
        if (v.at(k).is_zero()) continue;
        for (const auto& s : poset.splits(k)) t.add(s.left, s.right, v.at(k));
    }
    return t;
}

Scalar counit(const CoalgebraVector& v) {
    auto sum = Scalar::zero(v.field());
    const auto& poset = *v.poset();
    for (std::size_t k = 0; k < poset.comparable_pairs(); ++k) {
        if (poset.interval(k).is_point()) sum += v.at(k);
    }
    return sum;
}

TensorVector apply_tensor(const CoalgebraEndomap* left, const CoalgebraEndomap* right,
                          const TensorVector& t) {
    if (left) require_same(left->poset(), left->field(), t.poset(), t.field());
    if (right) require_same(right->poset(), right->field(), t.poset(), t.field());
    const auto m = t.dimension();
    auto out = TensorVector::zero(t.poset(), t.field());
    std::vector<std::pair<std::size_t, const Scalar*>> lhs, rhs;
    const auto one = Scalar::one(t.field());
    auto expand = [&](const CoalgebraEndomap* f, std::size_t idx,
                      std::vector<std::pair<std::size_t, const Scalar*>>& into) {
        into.clear();
        if (!f) {
            into.emplace_back(idx, &one);
            return;
        }
        const auto& col = f->columns()[idx];
        for (std::size_t a = 0; a < m; ++a) {
            if (!col[a].is_zero()) into.emplace_back(a, &col[a]);
        }
    };
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const auto& c = t.at(i, j);
            if (c.is_zero()) continue;
            expand(left, i, lhs);
            expand(right, j, rhs);
            for (const auto& [a, ca] : lhs) {
                const auto scaled = c * *ca;
                for (const auto& [b, cb] : rhs) out.add(a, b, scaled * *cb);
            }
        }
    }
    return out;
}

CoalgebraVector apply_endomap(const CoalgebraEndomap& phi, const CoalgebraVector& v) {
    require_same(phi.poset(), phi.field(), v.poset(), v.field());
    auto out = CoalgebraVector::zero(v.poset(), v.field());
    kernels::omp::combine(v.coeffs(), phi.columns(), out.mutable_coeffs());
    return out;
}

CoalgebraEndomap compose_endomaps(const CoalgebraEndomap& phi, const CoalgebraEndomap& psi) {
    require_same(phi.poset(), phi.field(), psi.poset(), psi.field());
    auto out = CoalgebraEndomap::zero(phi.poset(), phi.field());
    auto columns = out.columns();
    kernels::omp::compose(phi.columns(), psi.columns(), columns);
    return CoalgebraEndomap::from_columns(phi.poset(), phi.field(), std::move(columns));
}

// ---------------------------------------------------------------------------
// Predicates

namespace {

std::string tensor_mismatch(const Poset& poset, const TensorVector& lhs, const TensorVector& rhs) {
    for (std::size_t i = 0; i < lhs.dimension(); ++i) {
        for (std::size_t j = 0; j < lhs.dimension(); ++j) {
            if (lhs.at(i, j) != rhs.at(i, j)) {
                return "coefficient of " + poset.interval_name(i) + "⊗" + poset.interval_name(j) +
                       " is " + lhs.at(i, j).to_string() + " vs " + rhs.at(i, j).to_string();
            }
        }
    }
    return {};
}

std::string vector_mismatch(const Poset& poset, const CoalgebraVector& lhs, const CoalgebraVector& rhs) {
    for (std::size_t k = 0; k < poset.comparable_pairs(); ++k) {
        if (lhs.at(k) != rhs.at(k)) {
            return "coefficient of " + poset.interval_name(k) + " is " + lhs.at(k).to_string() +
                   " vs " + rhs.at(k).to_string();
        }
    }
    return {};
}

using Triple = std::array<std::size_t, 3>;
using TripleTensor = std::map<Triple, Scalar>;

void accumulate(TripleTensor& t, const Triple& key, const Scalar& c) {
    auto [it, inserted] = t.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

/// Evaluates `check` on every basis interval and keeps the first failure.
CheckResult scan_intervals(std::size_t m,
                           const std::function<std::optional<Counterexample>(std::size_t)>& check) {
    std::vector<std::optional<Counterexample>> found(m);
    const auto first = kernels::omp::first_failure(m, [&](std::size_t k) {
        found[k] = check(k);
        return found[k].has_value();
    });
    if (!first) return {};
    return {found[*first]};
}

}  // namespace

CheckResult check_coalgebra_axioms(const PosetPtr& poset, const FieldSpec& field) {
    const auto m = poset->comparable_pairs();
    return scan_intervals(m, [&](std::size_t k) -> std::optional<Counterexample> {
        const auto b = CoalgebraVector::basis(poset, field, k);
        const auto delta_b = comultiply(b);

        TripleTensor left, right;  // (Delta (x) 1) Delta b, (1 (x) Delta) Delta b
        for (const auto& [pair, c] : delta_b.terms()) {
            const auto i = *poset->interval_index(pair.first.lo, pair.first.hi);
            const auto j = *poset->interval_index(pair.second.lo, pair.second.hi);
            const auto inner_left = comultiply(CoalgebraVector::basis(poset, field, i));
            for (const auto& [p, c2] : inner_left.terms()) {
                accumulate(left,
                           {*poset->interval_index(p.first.lo, p.first.hi),
                            *poset->interval_index(p.second.lo, p.second.hi), j},
                           c * c2);
            }
            const auto inner_right = comultiply(CoalgebraVector::basis(poset, field, j));
            for (const auto& [p, c2] : inner_right.terms()) {
                accumulate(right,
                           {i, *poset->interval_index(p.first.lo, p.first.hi),
                            *poset->interval_index(p.second.lo, p.second.hi)},
                           c * c2);
            }
        }
        if (left != right) {
            return Counterexample{.identity = Identity::Coassociativity, .interval = k, .detail =
                                  "(Δ⊗1)Δ has " + std::to_string(left.size()) + " terms, (1⊗Δ)Δ has " +
                                      std::to_string(right.size())};
        }

        // (epsilon (x) 1) Delta b and (1 (x) epsilon) Delta b under F (x) C = C = C (x) F.
        auto eps_left = CoalgebraVector::zero(poset, field);
        auto eps_right = CoalgebraVector::zero(poset, field);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                const auto& c = delta_b.at(i, j);
                if (c.is_zero()) continue;
                eps_left.mutable_coeffs()[j] += c * counit(CoalgebraVector::basis(poset, field, i));
                eps_right.mutable_coeffs()[i] += c * counit(CoalgebraVector::basis(poset, field, j));
            }
        }
        if (eps_left != b) {
            return Counterexample{.identity = Identity::LeftCounit, .interval = k, .detail = vector_mismatch(*poset, eps_left, b)};
        }
        if (eps_right != b) {
            return Counterexample{.identity = Identity::RightCounit, .interval = k, .detail = vector_mismatch(*poset, eps_right, b)};
        }
        return std::nullopt;
    });
}

CheckResult is_coalgebra_morphism(const CoalgebraEndomap& phi) {
    const auto& poset = phi.poset();
    return scan_intervals(phi.dimension(), [&](std::size_t k) -> std::optional<Counterexample> {
        const auto b = CoalgebraVector::basis(poset, phi.field(), k);
        const auto image = phi.image(k);
        const auto lhs = apply_tensor(&phi, &phi, comultiply(b));
        const auto rhs = comultiply(image);
        if (lhs != rhs) {
            return Counterexample{.identity = Identity::Comultiplication, .interval = k, .detail =
                                  "(φ⊗φ)Δ vs Δφ: " + tensor_mismatch(*poset, lhs, rhs)};
        }
        const auto eps_image = counit(image);
        const auto eps_b = counit(b);
        if (eps_image != eps_b) {
            return Counterexample{.identity = Identity::Counit, .interval = k, .detail =
                                  "εφ = " + eps_image.to_string() + " but ε = " + eps_b.to_string()};
        }
        return std::nullopt;
    });
}

CheckResult is_coalgebra_derivation(const CoalgebraEndomap& d) {
    const auto& poset = d.poset();
    return scan_intervals(d.dimension(), [&](std::size_t k) -> std::optional<Counterexample> {
        const auto delta_b = comultiply(CoalgebraVector::basis(poset, d.field(), k));
        const auto lhs = comultiply(d.image(k));
        const auto rhs = apply_tensor(&d, nullptr, delta_b) + apply_tensor(nullptr, &d, delta_b);
        if (lhs != rhs) {
            return Counterexample{.identity = Identity::CoLeibniz, .interval = k, .detail =
                                  "Δd vs (d⊗1)Δ+(1⊗d)Δ: " + tensor_mismatch(*poset, lhs, rhs)};
        }
        return std::nullopt;
    });
}

bool is_bijective(const CoalgebraEndomap& phi) {
    return exact_rank(phi.columns(), phi.field()) == phi.dimension();
}

CheckResult is_coalgebra_automorphism(const CoalgebraEndomap& phi) {
    auto result = is_coalgebra_morphism(phi);
    if (!result) return result;
    if (!is_bijective(phi)) {
        return {Counterexample{.identity = Identity::Bijectivity, .interval = 0, .detail = "basis images are linearly dependent"}};
    }
    return {};
}

}  // namespace incidence
