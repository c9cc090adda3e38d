#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace incidence {

/// Index of an element in the poset's fixed index order.
using Element = std::size_t;

/// A basis interval [lo, hi] with lo <= hi.
struct Interval {
    Element lo = 0;
    Element hi = 0;

    bool is_point() const { return lo == hi; }
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// One term [lo, mid] (x) [mid, hi] of the comultiplication of an interval,
/// stored as interval indices.
struct Split {
    std::size_t left = 0;
    std::size_t right = 0;
};

/// A finite partially ordered set. Immutable after construction.
///
/// Intervals are numbered in the canonical basis order (lo-major, hi-minor in
/// the element index order); that numbering is used by every dense container
/// in the library.
class Poset {
public:
    /// Reflexive-transitive closure of `pairs`. Throws DomainError on duplicate
    /// names, unknown names or an antisymmetry violation.
    static Poset build(std::vector<std::string> names,
                       const std::vector<std::pair<std::string, std::string>>& pairs);
    static Poset build(std::vector<std::string> names,
                       const std::vector<std::pair<Element, Element>>& pairs);

    std::size_t size() const { return names_.size(); }
    const std::string& name(Element x) const { return names_[x]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<Element> find(std::string_view name) const;
    /// Throws DomainError for an unknown name.
    Element index_of(std::string_view name) const;

    bool leq(Element x, Element y) const { return leq_[x * size() + y] != 0; }
    bool less(Element x, Element y) const { return x != y && leq(x, y); }
    bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

    /// Number of pairs x <= y, equal to the number of intervals.
    std::size_t comparable_pairs() const { return intervals_.size(); }
    std::span<const Interval> intervals() const { return intervals_; }
    const Interval& interval(std::size_t index) const { return intervals_[index]; }
    std::optional<std::size_t> interval_index(Element x, Element y) const;
    /// Throws DomainError unless x <= y.
    std::size_t require_interval(Element x, Element y) const;

    /// Sorted elements z with x <= z <= y. Throws DomainError unless x <= y.
    std::span<const Element> interval_elements(Element x, Element y) const;
    std::span<const Element> interval_elements(std::size_t interval) const {
        return between_[interval];
    }
    /// The terms of Delta applied to the interval, ordered by the middle element.
    std::span<const Split> splits(std::size_t interval) const { return splits_[interval]; }

    std::size_t up_degree(Element x) const { return up_degree_[x]; }
    std::size_t down_degree(Element x) const { return down_degree_[x]; }

    std::string interval_name(std::size_t interval) const;
    std::string pair_name(std::size_t interval) const;

    /// Structural equality: same names in the same order and the same order relation.
    friend bool operator==(const Poset& a, const Poset& b) {
        return a.names_ == b.names_ && a.leq_ == b.leq_;
    }

private:
    Poset() = default;
    void index();

    std::vector<std::string> names_;
    std::vector<std::uint8_t> leq_;  // row-major size() x size()
    std::vector<Interval> intervals_;
    std::vector<std::int64_t> interval_lookup_;  // row-major, -1 when x is not <= y
    std::vector<std::vector<Element>> between_;
    std::vector<std::vector<Split>> splits_;
    std::vector<std::size_t> up_degree_;
    std::vector<std::size_t> down_degree_;
};

using PosetPtr = std::shared_ptr<const Poset>;

inline PosetPtr share(Poset p) { return std::make_shared<const Poset>(std::move(p)); }

/// Pointer identity or structural equality.
bool same_poset(const PosetPtr& a, const PosetPtr& b);

// ---------------------------------------------------------------------------
// Generators

PosetPtr make_chain(std::size_t n);
PosetPtr make_antichain(std::size_t n);
/// Subset lattice of {1..n}, n <= 5; elements ordered by bitmask, named "{}", "{1}", "{1,2}", ...
PosetPtr make_boolean(std::size_t n);
/// n <= 16; each pair i < j of the index order is related with probability `density`.
PosetPtr make_random(std::size_t n, double density, std::uint64_t seed);

enum class PosetKind { Chain, Antichain, Boolean, Random };

struct PosetParams {
    std::size_t n = 1;
    double density = 0.5;
    std::uint64_t seed = 0;
};

PosetPtr generate_poset(PosetKind kind, const PosetParams& params);

/// "chain:3", "antichain:2", "boolean:2", "random:7:0.3:1".
PosetPtr poset_from_spec(std::string_view spec);

// ---------------------------------------------------------------------------
// Automorphisms

/// An order automorphism tau of a poset: x <= y iff tau(x) <= tau(y).
class PosetAutomorphism {
public:
    static PosetAutomorphism identity(std::size_t n);
    /// Throws DomainError unless `forward` is a bijection preserving and reflecting <=.
    static PosetAutomorphism from_map(const Poset& poset, std::vector<Element> forward);

    std::size_t size() const { return forward_.size(); }
    Element operator()(Element x) const { return forward_[x]; }
    Element inverse_of(Element x) const { return backward_[x]; }
    const std::vector<Element>& forward() const { return forward_; }
    const std::vector<Element>& backward() const { return backward_; }

    PosetAutomorphism inverse() const;
    /// (this o other)(x) = this(other(x)).
    PosetAutomorphism compose(const PosetAutomorphism& other) const;
    bool is_identity() const;

    friend bool operator==(const PosetAutomorphism& a, const PosetAutomorphism& b) {
        return a.forward_ == b.forward_;
    }

private:
    PosetAutomorphism(std::vector<Element> forward, std::vector<Element> backward)
        : forward_(std::move(forward)), backward_(std::move(backward)) {}

    std::vector<Element> forward_;
    std::vector<Element> backward_;
};

inline constexpr std::size_t kMaxAutomorphismSearch = 10;

/// The whole group Aut X by backtracking, identity first, remaining maps in
/// lexicographic order of their forward images. Throws DomainError when the
/// poset has more than kMaxAutomorphismSearch elements.
std::vector<PosetAutomorphism> enumerate_automorphisms(const Poset& poset);

}  // namespace incidence
