#include "incidence/algebra.hpp"

#include <algorithm>
#include <numeric>

#include "incidence/error.hpp"
#include "incidence/kernels.hpp"

namespace incidence {

IncidenceFunction IncidenceFunction::zero(PosetPtr poset, FieldSpec field) {
    const auto m = poset->comparable_pairs();
    return IncidenceFunction(std::move(poset), field, std::vector<Scalar>(m, Scalar::zero(field)));
}

IncidenceFunction IncidenceFunction::from_entries(PosetPtr poset, FieldSpec field,
                                                  const std::vector<Term<Interval>>& entries) {
    auto f = zero(std::move(poset), field);
    for (const auto& [iv, c] : entries) {
        const auto k = f.poset_->require_interval(iv.lo, iv.hi);
        f.values_[k] += c;
    }
    return f;
}

IncidenceFunction IncidenceFunction::from_values(PosetPtr poset, FieldSpec field,
                                                 std::vector<Scalar> values) {
    if (values.size() != poset->comparable_pairs()) {
        throw DomainError("value count does not match the number of intervals");
    }
    for (const auto& v : values) {
        if (v.field() != field) throw DomainError("field mismatch in function values");
    }
    return IncidenceFunction(std::move(poset), field, std::move(values));
}

const Scalar& IncidenceFunction::operator()(Element x, Element y) const {
    return values_[poset_->require_interval(x, y)];
}

void IncidenceFunction::set(Element x, Element y, Scalar value) {
    set_at(poset_->require_interval(x, y), std::move(value));
}

void IncidenceFunction::set_at(std::size_t interval, Scalar value) {
    if (value.field() != field_) throw DomainError("field mismatch in function value");
    values_[interval] = std::move(value);
}

std::vector<Term<Interval>> IncidenceFunction::entries() const {
    std::vector<Term<Interval>> out;
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (!values_[k].is_zero()) out.push_back({poset_->interval(k), values_[k]});
    }
    return out;
}

std::size_t IncidenceFunction::support_size() const {
    return static_cast<std::size_t>(
        std::count_if(values_.begin(), values_.end(), [](const Scalar& s) { return !s.is_zero(); }));
}

bool IncidenceFunction::is_zero() const { return support_size() == 0; }

IncidenceFunction& IncidenceFunction::operator+=(const IncidenceFunction& rhs) {
    require_compatible(*this, rhs);
    for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += rhs.values_[k];
    return *this;
}

IncidenceFunction& IncidenceFunction::operator-=(const IncidenceFunction& rhs) {
    require_compatible(*this, rhs);
    for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= rhs.values_[k];
    return *this;
}

IncidenceFunction& IncidenceFunction::operator*=(const Scalar& c) {
    for (auto& v : values_) v *= c;
    return *this;
}

IncidenceFunction IncidenceFunction::operator-() const {
    auto out = *this;
    for (auto& v : out.values_) v = -v;
    return out;
}

bool operator==(const IncidenceFunction& a, const IncidenceFunction& b) {
    return a.field_ == b.field_ && same_poset(a.poset_, b.poset_) && a.values_ == b.values_;
}

void require_compatible(const IncidenceFunction& f, const IncidenceFunction& g) {
    if (f.field() != g.field()) {
        throw DomainError("field mismatch: " + f.field().to_string() + " vs " +
                          g.field().to_string());
    }
    if (!same_poset(f.poset(), g.poset())) throw DomainError("poset mismatch");
}

// ---------------------------------------------------------------------------

IncidenceFunction delta(const PosetPtr& poset, const FieldSpec& field) {
    auto f = IncidenceFunction::zero(poset, field);
    for (Element x = 0; x < poset->size(); ++x) f.set(x, x, Scalar::one(field));
    return f;
}

IncidenceFunction zeta(const PosetPtr& poset, const FieldSpec& field) {
    auto f = IncidenceFunction::zero(poset, field);
    for (auto& v : f.mutable_values()) v = Scalar::one(field);
    return f;
}

IncidenceFunction idempotent(const PosetPtr& poset, const FieldSpec& field, Element x) {
    return matrix_unit(poset, field, x, x);
}

IncidenceFunction matrix_unit(const PosetPtr& poset, const FieldSpec& field, Element x, Element y) {
    auto f = IncidenceFunction::zero(poset, field);
    f.set(x, y, Scalar::one(field));
    return f;
}

IncidenceFunction basis_function(const PosetPtr& poset, const FieldSpec& field,
                                 std::size_t interval) {
    auto f = IncidenceFunction::zero(poset, field);
    f.set_at(interval, Scalar::one(field));
    return f;
}

IncidenceFunction standard_function(const PosetPtr& poset, const FieldSpec& field,
                                    StandardKind kind, Element x, Element y) {
    switch (kind) {
        case StandardKind::Delta: return delta(poset, field);
        case StandardKind::Zeta: return zeta(poset, field);
        case StandardKind::Idempotent:
            if (x >= poset->size()) throw DomainError("unknown element index");
            return idempotent(poset, field, x);
        case StandardKind::MatrixUnit: return matrix_unit(poset, field, x, y);
    }
    throw DomainError("unknown standard function");
}

IncidenceFunction convolve(const IncidenceFunction& f, const IncidenceFunction& g) {
    require_compatible(f, g);
    auto out = IncidenceFunction::zero(f.poset(), f.field());
    kernels::omp::convolve(*f.poset(), f.values(), g.values(), out.mutable_values());
    return out;
}

bool is_invertible(const IncidenceFunction& f) {
    const auto& poset = *f.poset();
    for (Element x = 0; x < poset.size(); ++x) {
        if (f(x, x).is_zero()) return false;
    }
    return true;
}

IncidenceFunction invert_function(const IncidenceFunction& f) {
    const auto& poset = *f.poset();
    for (Element x = 0; x < poset.size(); ++x) {
        if (f(x, x).is_zero()) {
            throw DomainError("not invertible: f(" + poset.name(x) + "," + poset.name(x) + ") = 0");
        }
    }
    const auto m = poset.comparable_pairs();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return poset.interval_elements(a).size() < poset.interval_elements(b).size();
    });

    auto inv = IncidenceFunction::zero(f.poset(), f.field());
    auto& out = inv.mutable_values();
    for (const auto k : order) {
        const auto [x, y] = poset.interval(k);
        const auto head = f(x, x).inverse();
        if (x == y) {
            out[k] = head;
            continue;
        }
        auto sum = Scalar::zero(f.field());
        for (const auto& s : poset.splits(k)) {
            if (poset.interval(s.left).is_point()) continue;  // z = x
            sum += f.at(s.left) * out[s.right];
        }
        out[k] = -(head * sum);
    }

    const auto id = delta(f.poset(), f.field());
    if (convolve(f, inv) != id || convolve(inv, f) != id) {
        throw DomainError("internal error: inverse failed the two-sided check");
    }
    return inv;
}

std::pair<IncidenceFunction, IncidenceFunction> split_L1_M1(const IncidenceFunction& f) {
    auto diag = IncidenceFunction::zero(f.poset(), f.field());
    auto off = IncidenceFunction::zero(f.poset(), f.field());
    const auto& poset = *f.poset();
    for (std::size_t k = 0; k < poset.comparable_pairs(); ++k) {
        (poset.interval(k).is_point() ? diag : off).set_at(k, f.at(k));
    }
    return {std::move(diag), std::move(off)};
}

std::pair<IncidenceFunction, IncidenceFunction> factor_unit(const IncidenceFunction& v) {
    if (!is_invertible(v)) throw DomainError("factor_unit: argument is not invertible");
    auto [diag, rest] = split_L1_M1(v);
    auto w = convolve(invert_function(diag), v);
    return {std::move(diag), std::move(w)};
}

bool is_diagonal(const IncidenceFunction& f) {
    const auto& poset = *f.poset();
    for (std::size_t k = 0; k < poset.comparable_pairs(); ++k) {
        if (!poset.interval(k).is_point() && !f.at(k).is_zero()) return false;
    }
    return true;
}

bool is_off_diagonal(const IncidenceFunction& f) {
    const auto& poset = *f.poset();
    for (std::size_t k = 0; k < poset.comparable_pairs(); ++k) {
        if (poset.interval(k).is_point() && !f.at(k).is_zero()) return false;
    }
    return true;
}

}  // namespace incidence
