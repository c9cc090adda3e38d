#include "incidence/poset.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <unordered_set>

#include "incidence/error.hpp"

namespace incidence {

Poset Poset::build(std::vector<std::string> names,
                   const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::unordered_set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw DomainError("element names must be non-empty");
        if (!seen.insert(n).second) throw DomainError("duplicate element: " + n);
    }
    auto lookup = [&](const std::string& n) -> Element {
        auto it = std::find(names.begin(), names.end(), n);
        if (it == names.end()) throw DomainError("unknown element: " + n);
        return static_cast<Element>(it - names.begin());
    };
    std::vector<std::pair<Element, Element>> indexed;
    indexed.reserve(pairs.size());
    for (const auto& [x, y] : pairs) indexed.emplace_back(lookup(x), lookup(y));
    return build(std::move(names), indexed);
}

Poset Poset::build(std::vector<std::string> names,
                   const std::vector<std::pair<Element, Element>>& pairs) {
    Poset p;
    p.names_ = std::move(names);
    const std::size_t n = p.names_.size();
    {
        std::unordered_set<std::string> seen;
        for (const auto& name : p.names_) {
            if (!seen.insert(name).second) throw DomainError("duplicate element: " + name);
        }
    }
    p.leq_.assign(n * n, 0);
    for (Element x = 0; x < n; ++x) p.leq_[x * n + x] = 1;
    for (const auto& [x, y] : pairs) {
        if (x >= n || y >= n) throw DomainError("unknown element index in relation");
        p.leq_[x * n + y] = 1;
    }
    // Warshall closure.
    for (Element k = 0; k < n; ++k) {
        for (Element i = 0; i < n; ++i) {
            if (!p.leq_[i * n + k]) continue;
            for (Element j = 0; j < n; ++j) {
                if (p.leq_[k * n + j]) p.leq_[i * n + j] = 1;
            }
        }
    }
    for (Element x = 0; x < n; ++x) {
        for (Element y = x + 1; y < n; ++y) {
            if (p.leq_[x * n + y] && p.leq_[y * n + x]) {
                throw DomainError("antisymmetry violated: " + p.names_[x] + "≤" +
                                  p.names_[y] + "≤" + p.names_[x]);
            }
        }
    }
    p.index();
    return p;
}

void Poset::index() {
    const std::size_t n = size();
    intervals_.clear();
    interval_lookup_.assign(n * n, -1);
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            if (leq(x, y)) {
                interval_lookup_[x * n + y] = static_cast<std::int64_t>(intervals_.size());
                intervals_.push_back({x, y});
            }
        }
    }
    between_.assign(intervals_.size(), {});
    splits_.assign(intervals_.size(), {});
    for (std::size_t k = 0; k < intervals_.size(); ++k) {
        const auto [x, y] = intervals_[k];
        for (Element z = 0; z < n; ++z) {
            if (leq(x, z) && leq(z, y)) {
                between_[k].push_back(z);
                splits_[k].push_back({static_cast<std::size_t>(interval_lookup_[x * n + z]),
                                      static_cast<std::size_t>(interval_lookup_[z * n + y])});
            }
        }
    }
    up_degree_.assign(n, 0);
    down_degree_.assign(n, 0);
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            if (leq(x, y)) {
                ++up_degree_[x];
                ++down_degree_[y];
            }
        }
    }
}

std::optional<Element> Poset::find(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<Element>(it - names_.begin());
}

Element Poset::index_of(std::string_view name) const {
    if (auto x = find(name)) return *x;
    throw DomainError("unknown element: " + std::string(name));
}

std::optional<std::size_t> Poset::interval_index(Element x, Element y) const {
    if (x >= size() || y >= size()) return std::nullopt;
    const auto k = interval_lookup_[x * size() + y];
    if (k < 0) return std::nullopt;
    return static_cast<std::size_t>(k);
}

std::size_t Poset::require_interval(Element x, Element y) const {
    if (auto k = interval_index(x, y)) return *k;
    throw DomainError("not an interval: " + (x < size() ? names_[x] : std::string("?")) +
                      " is not ≤ " + (y < size() ? names_[y] : std::string("?")));
}

std::span<const Element> Poset::interval_elements(Element x, Element y) const {
    return between_[require_interval(x, y)];
}

std::string Poset::interval_name(std::size_t interval) const {
    const auto& iv = intervals_[interval];
    return "[" + names_[iv.lo] + "," + names_[iv.hi] + "]";
}

std::string Poset::pair_name(std::size_t interval) const {
    const auto& iv = intervals_[interval];
    return "(" + names_[iv.lo] + "," + names_[iv.hi] + ")";
}

bool same_poset(const PosetPtr& a, const PosetPtr& b) {
    return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> numbered(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return names;
}

}  // namespace

PosetPtr make_chain(std::size_t n) {
    if (n < 1) throw DomainError("chain needs at least one element");
    std::vector<std::pair<Element, Element>> covers;
    for (Element i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    return share(Poset::build(numbered(n), covers));
}

PosetPtr make_antichain(std::size_t n) {
    if (n < 1) throw DomainError("antichain needs at least one element");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i))
                               : "x" + std::to_string(i));
    }
    return share(Poset::build(std::move(names), std::vector<std::pair<Element, Element>>{}));
}

PosetPtr make_boolean(std::size_t n) {
    if (n > 5) throw DomainError("boolean lattice limited to n <= 5");
    const std::size_t count = std::size_t{1} << n;
    std::vector<std::string> names;
    for (std::size_t mask = 0; mask < count; ++mask) {
        std::string name = "{";
        bool first = true;
        for (std::size_t bit = 0; bit < n; ++bit) {
            if (mask & (std::size_t{1} << bit)) {
                if (!first) name += ",";
                name += std::to_string(bit + 1);
                first = false;
            }
        }
        names.push_back(name + "}");
    }
    std::vector<std::pair<Element, Element>> covers;
    for (std::size_t mask = 0; mask < count; ++mask) {
        for (std::size_t bit = 0; bit < n; ++bit) {
            if (!(mask & (std::size_t{1} << bit))) covers.emplace_back(mask, mask | (std::size_t{1} << bit));
        }
    }
    return share(Poset::build(std::move(names), covers));
}

PosetPtr make_random(std::size_t n, double density, std::uint64_t seed) {
    if (n < 1 || n > 16) throw DomainError("random poset size must be in [1, 16]");
    if (!(density >= 0.0 && density <= 1.0)) throw DomainError("density must lie in [0, 1]");
    std::mt19937_64 engine(seed);
    std::vector<std::pair<Element, Element>> pairs;
    for (Element i = 0; i < n; ++i) {
        for (Element j = i + 1; j < n; ++j) {
            const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
            if (u < density) pairs.emplace_back(i, j);
        }
    }
    return share(Poset::build(numbered(n), pairs));
}

PosetPtr generate_poset(PosetKind kind, const PosetParams& params) {
    switch (kind) {
        case PosetKind::Chain: return make_chain(params.n);
        case PosetKind::Antichain: return make_antichain(params.n);
        case PosetKind::Boolean: return make_boolean(params.n);
        case PosetKind::Random: return make_random(params.n, params.density, params.seed);
    }
    throw DomainError("unknown poset kind");
}

PosetPtr poset_from_spec(std::string_view spec) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto colon = spec.find(':', start);
        parts.emplace_back(spec.substr(start, colon - start));
        if (colon == std::string_view::npos) break;
        start = colon + 1;
    }
    auto as_uint = [&](const std::string& s) -> std::uint64_t {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size()) {
            throw DomainError("bad number '" + s + "' in poset spec");
        }
        return v;
    };
    const auto& kind = parts[0];
    if (kind == "chain" && parts.size() == 2) return make_chain(as_uint(parts[1]));
    if (kind == "antichain" && parts.size() == 2) return make_antichain(as_uint(parts[1]));
    if (kind == "boolean" && parts.size() == 2) return make_boolean(as_uint(parts[1]));
    if (kind == "random" && parts.size() == 4) {
        double density = 0.0;
        try {
            std::size_t used = 0;
            density = std::stod(parts[2], &used);
            if (used != parts[2].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw DomainError("bad density '" + parts[2] + "' in poset spec");
        }
        return make_random(as_uint(parts[1]), density, as_uint(parts[3]));
    }
    throw DomainError("unknown poset spec '" + std::string(spec) + "'");
}

// ---------------------------------------------------------------------------

PosetAutomorphism PosetAutomorphism::identity(std::size_t n) {
    std::vector<Element> id(n);
    for (Element i = 0; i < n; ++i) id[i] = i;
    return PosetAutomorphism(id, id);
}

PosetAutomorphism PosetAutomorphism::from_map(const Poset& poset, std::vector<Element> forward) {
    const std::size_t n = poset.size();
    if (forward.size() != n) throw DomainError("automorphism has the wrong size");
    std::vector<Element> backward(n, n);
    for (Element x = 0; x < n; ++x) {
        if (forward[x] >= n || backward[forward[x]] != n) {
            throw DomainError("map is not a bijection of the ground set");
        }
        backward[forward[x]] = x;
    }
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            if (poset.leq(x, y) != poset.leq(forward[x], forward[y])) {
                throw DomainError("map does not preserve the order at (" + poset.name(x) + "," +
                                  poset.name(y) + ")");
            }
        }
    }
    return PosetAutomorphism(std::move(forward), std::move(backward));
}

PosetAutomorphism PosetAutomorphism::inverse() const { return PosetAutomorphism(backward_, forward_); }

PosetAutomorphism PosetAutomorphism::compose(const PosetAutomorphism& other) const {
    const std::size_t n = size();
    std::vector<Element> fwd(n), bwd(n);
    for (Element x = 0; x < n; ++x) {
        fwd[x] = forward_[other.forward_[x]];
        bwd[fwd[x]] = x;
    }
    return PosetAutomorphism(std::move(fwd), std::move(bwd));
}

bool PosetAutomorphism::is_identity() const {
    for (Element x = 0; x < size(); ++x) {
        if (forward_[x] != x) return false;
    }
    return true;
}

namespace {

class AutomorphismSearch {
public:
    explicit AutomorphismSearch(const Poset& poset)
        : poset_(poset), image_(poset.size()), used_(poset.size(), false) {}

    std::vector<PosetAutomorphism> run() {
        extend(0);
        return std::move(found_);
    }

private:
    bool compatible(Element x, Element candidate) const {
        if (poset_.up_degree(x) != poset_.up_degree(candidate) ||
            poset_.down_degree(x) != poset_.down_degree(candidate)) {
            return false;
        }
        for (Element y = 0; y < x; ++y) {
            if (poset_.leq(x, y) != poset_.leq(candidate, image_[y]) ||
                poset_.leq(y, x) != poset_.leq(image_[y], candidate)) {
                return false;
            }
        }
        return true;
    }

    void extend(Element x) {
        const std::size_t n = poset_.size();
        if (x == n) {
            found_.push_back(PosetAutomorphism::from_map(poset_, image_));
            return;
        }
        for (Element c = 0; c < n; ++c) {
            if (used_[c] || !compatible(x, c)) continue;
            used_[c] = true;
            image_[x] = c;
            extend(x + 1);
            used_[c] = false;
        }
    }

    const Poset& poset_;
    std::vector<Element> image_;
    std::vector<bool> used_;
    std::vector<PosetAutomorphism> found_;
};

}  // namespace

std::vector<PosetAutomorphism> enumerate_automorphisms(const Poset& poset) {
    if (poset.size() > kMaxAutomorphismSearch) {
        throw DomainError("automorphism enumeration limited to " +
                          std::to_string(kMaxAutomorphismSearch) + " elements");
    }
    return AutomorphismSearch(poset).run();
}

}  // namespace incidence
