#include "incidence/io.hpp"

#include <fstream>
#include <sstream>

#include "incidence/error.hpp"

namespace incidence::io {

namespace {

const Json& member(const Json& obj, const char* key) {
    if (!obj.is_object()) throw ParseError(std::string("expected an object holding \"") + key + "\"");
    const auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(std::string("missing key \"") + key + "\"");
    return *it;
}

const Json& array_member(const Json& obj, const char* key) {
    const auto& j = member(obj, key);
    if (!j.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
    return j;
}

const std::string& as_string(const Json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
    return j.get_ref<const std::string&>();
}

Element element(const Poset& poset, const Json& j) {
    return poset.index_of(as_string(j, "element name"));
}

/// A triple ["x", "y", "c"].
std::pair<Interval, Scalar> triple(const Poset& poset, const Json& j, const FieldSpec& field) {
    if (!j.is_array() || j.size() != 3) throw ParseError("expected a triple [x, y, scalar]");
    return {{element(poset, j[0]), element(poset, j[1])}, scalar_from_json(j[2], field)};
}

std::vector<Term<Interval>> triples(const Poset& poset, const Json& list, const FieldSpec& field) {
    if (!list.is_array()) throw ParseError("expected a list of triples");
    std::vector<Term<Interval>> out;
    for (const auto& j : list) {
        auto [iv, c] = triple(poset, j, field);
        out.push_back({iv, std::move(c)});
    }
    return out;
}

Json triple_json(const Poset& poset, const Interval& iv, const Scalar& c) {
    return Json::array({poset.name(iv.lo), poset.name(iv.hi), scalar_to_json(c)});
}

/// Parses "<open>x,y<close>"; names may contain commas, so every split is tried.
std::size_t interval_key(const Poset& poset, const std::string& key, char open, char close) {
    if (key.size() < 3 || key.front() != open || key.back() != close) {
        throw ParseError("bad interval key '" + key + "'");
    }
    const auto body = key.substr(1, key.size() - 2);
    std::optional<std::pair<Element, Element>> match;
    for (auto comma = body.find(','); comma != std::string::npos; comma = body.find(',', comma + 1)) {
        const auto x = poset.find(body.substr(0, comma));
        const auto y = poset.find(body.substr(comma + 1));
        if (!x || !y) continue;
        if (match) throw ParseError("ambiguous interval key '" + key + "'");
        match = {*x, *y};
    }
    if (!match) throw DomainError("unknown elements in key '" + key + "'");
    const auto k = poset.interval_index(match->first, match->second);
    if (!k) throw DomainError("key '" + key + "' is not a comparable pair");
    return *k;
}

Json context(const PosetPtr& poset, const FieldSpec& field) {
    Json doc = Json::object();
    doc["poset"] = poset_to_json(*poset);
    doc["field"] = field.to_string();
    return doc;
}

}  // namespace

// ---------------------------------------------------------------------------

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << dump(doc);
    if (!out) throw ParseError("cannot write " + path);
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

Json poset_to_json(const Poset& poset) {
    Json covers = Json::array();
    for (std::size_t k = 0; k < poset.comparable_pairs(); ++k) {
        if (poset.interval_elements(k).size() == 2) {
            const auto& iv = poset.interval(k);
            covers.push_back(Json::array({poset.name(iv.lo), poset.name(iv.hi)}));
        }
    }
    return Json{{"elements", poset.names()}, {"covers", std::move(covers)}};
}

PosetPtr poset_from_json(const Json& doc) {
    if (doc.is_string()) return poset_from_spec(doc.get<std::string>());
    std::vector<std::string> names;
    for (const auto& j : array_member(doc, "elements")) names.push_back(as_string(j, "element name"));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& j : array_member(doc, "covers")) {
        if (!j.is_array() || j.size() != 2) throw ParseError("a cover must be a pair [x, y]");
        pairs.emplace_back(as_string(j[0], "element name"), as_string(j[1], "element name"));
    }
    return share(Poset::build(std::move(names), pairs));
}

FieldSpec field_of(const Json& doc, const FieldSpec& fallback) {
    if (!doc.is_object() || !doc.contains("field")) return fallback;
    return FieldSpec::parse(as_string(doc["field"], "\"field\""));
}

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j, const FieldSpec& field) {
    if (j.is_number_integer()) return Scalar::from_int(field, j.get<std::int64_t>());
    return parse_scalar(as_string(j, "scalar"), field);
}

// ---------------------------------------------------------------------------

Json entries_to_json(const IncidenceFunction& f) {
    Json out = Json::array();
    for (const auto& [iv, c] : f.entries()) out.push_back(triple_json(*f.poset(), iv, c));
    return out;
}

IncidenceFunction entries_from_json(const Json& j, const PosetPtr& poset, const FieldSpec& field) {
    auto f = IncidenceFunction::zero(poset, field);
    for (const auto& [iv, c] : triples(*poset, j, field)) {
        if (!poset->leq(iv.lo, iv.hi)) {
            throw DomainError("entry (" + poset->name(iv.lo) + "," + poset->name(iv.hi) +
                              ") is not a comparable pair");
        }
        f.set(iv.lo, iv.hi, f(iv.lo, iv.hi) + c);
    }
    return f;
}

Json function_to_json(const IncidenceFunction& f) {
    auto doc = context(f.poset(), f.field());
    doc["entries"] = entries_to_json(f);
    return doc;
}

IncidenceFunction function_from_json(const Json& doc, const FieldSpec& fallback) {
    const auto poset = poset_from_json(member(doc, "poset"));
    return entries_from_json(array_member(doc, "entries"), poset, field_of(doc, fallback));
}

// ---------------------------------------------------------------------------

Json coalgebra_map_to_json(const CoalgebraEndomap& phi) {
    const auto& poset = *phi.poset();
    Json images = Json::object();
    for (std::size_t k = 0; k < phi.dimension(); ++k) {
        Json terms = Json::array();
        for (std::size_t t = 0; t < phi.dimension(); ++t) {
            const auto& c = phi.coefficient(k, t);
            if (c.is_zero()) continue;
            const auto& iv = poset.interval(t);
            terms.push_back(Json{{"interval", Json::array({poset.name(iv.lo), poset.name(iv.hi)})},
                                 {"coeff", scalar_to_json(c)}});
        }
        images[poset.interval_name(k)] = std::move(terms);
    }
    auto doc = context(phi.poset(), phi.field());
    doc["images"] = std::move(images);
    return doc;
}

CoalgebraEndomap coalgebra_map_from_json(const Json& doc, const FieldSpec& fallback) {
    const auto poset = poset_from_json(member(doc, "poset"));
    const auto field = field_of(doc, fallback);
    const auto& images = member(doc, "images");
    if (!images.is_object()) throw ParseError("\"images\" must be an object");
    auto phi = CoalgebraEndomap::zero(poset, field);
    std::vector<bool> seen(poset->comparable_pairs(), false);
    for (const auto& [key, terms] : images.items()) {
        const auto k = interval_key(*poset, key, '[', ']');
        if (seen[k]) throw ParseError("interval " + key + " listed twice");
        seen[k] = true;
        if (!terms.is_array()) throw ParseError("image of " + key + " must be a list of terms");
        for (const auto& term : terms) {
            const auto& iv = member(term, "interval");
            if (!iv.is_array() || iv.size() != 2) throw ParseError("\"interval\" must be a pair");
            const auto s = element(*poset, iv[0]);
            const auto t = element(*poset, iv[1]);
            const auto target = poset->interval_index(s, t);
            if (!target) {
                throw DomainError("[" + poset->name(s) + "," + poset->name(t) + "] is not an interval");
            }
            phi.set_coefficient(k, *target,
                                phi.coefficient(k, *target) + scalar_from_json(member(term, "coeff"), field));
        }
    }
    for (std::size_t k = 0; k < seen.size(); ++k) {
        if (!seen[k]) throw DomainError("no image given for " + poset->interval_name(k));
    }
    return phi;
}

Json algebra_map_to_json(const AlgebraEndomap& psi) {
    const auto& poset = *psi.poset();
    Json images = Json::object();
    for (std::size_t k = 0; k < psi.dimension(); ++k) {
        images[poset.pair_name(k)] = entries_to_json(psi.image(k));
    }
    auto doc = context(psi.poset(), psi.field());
    doc["images"] = std::move(images);
    return doc;
}

AlgebraEndomap algebra_map_from_json(const Json& doc, const FieldSpec& fallback) {
    const auto poset = poset_from_json(member(doc, "poset"));
    const auto field = field_of(doc, fallback);
    const auto& images = member(doc, "images");
    if (!images.is_object()) throw ParseError("\"images\" must be an object");
    std::vector<std::optional<IncidenceFunction>> found(poset->comparable_pairs());
    for (const auto& [key, entries] : images.items()) {
        const auto k = interval_key(*poset, key, '(', ')');
        if (found[k]) throw ParseError("pair " + key + " listed twice");
        found[k] = entries_from_json(entries, poset, field);
    }
    std::vector<IncidenceFunction> out;
    for (std::size_t k = 0; k < found.size(); ++k) {
        if (!found[k]) throw DomainError("no image given for e" + poset->pair_name(k));
        out.push_back(std::move(*found[k]));
    }
    return AlgebraEndomap::from_images(poset, field, std::move(out));
}

// ---------------------------------------------------------------------------

Json mult_system_to_json(const MultiplicativeSystem& sys) {
    Json values = Json::array();
    for (const auto& [iv, c] : sys.entries()) values.push_back(triple_json(*sys.poset(), iv, c));
    return Json{{"values", std::move(values)}};
}

MultiplicativeSystem mult_system_from_json(const Json& j, const PosetPtr& poset,
                                           const FieldSpec& field) {
    return MultiplicativeSystem::from_values(poset, field, triples(*poset, array_member(j, "values"), field));
}

Json additive_system_to_json(const AdditiveSystem& sys) {
    Json values = Json::array();
    for (const auto& [iv, c] : sys.entries()) values.push_back(triple_json(*sys.poset(), iv, c));
    return Json{{"values", std::move(values)}};
}

AdditiveSystem additive_system_from_json(const Json& j, const PosetPtr& poset,
                                         const FieldSpec& field) {
    return AdditiveSystem::from_values(poset, field, triples(*poset, array_member(j, "values"), field));
}

Json order_to_json(const Poset& poset, const PosetAutomorphism& tau) {
    Json map = Json::object();
    for (Element x = 0; x < poset.size(); ++x) map[poset.name(x)] = poset.name(tau(x));
    return Json{{"map", std::move(map)}};
}

PosetAutomorphism order_from_json(const Json& j, const Poset& poset) {
    const auto& map = member(j, "map");
    if (!map.is_object()) throw ParseError("\"map\" must be an object");
    std::vector<std::optional<Element>> forward(poset.size());
    for (const auto& [key, value] : map.items()) {
        const auto x = poset.index_of(key);
        if (forward[x]) throw ParseError("element " + key + " mapped twice");
        forward[x] = element(poset, value);
    }
    std::vector<Element> images;
    for (Element x = 0; x < poset.size(); ++x) {
        if (!forward[x]) throw DomainError("order map misses element " + poset.name(x));
        images.push_back(*forward[x]);
    }
    return PosetAutomorphism::from_map(poset, std::move(images));
}

Json aut_report_to_json(const AutDecomposition& parts) {
    const auto& poset = parts.inner_unit.poset();
    auto doc = context(poset, parts.inner_unit.field());
    doc["inner_unit"] = Json{{"entries", entries_to_json(parts.inner_unit)}};
    doc["mult_system"] = mult_system_to_json(parts.mult_system);
    doc["order"] = order_to_json(*poset, parts.order_part);
    return doc;
}

AutDecomposition aut_report_from_json(const Json& doc, const FieldSpec& fallback) {
    const auto poset = poset_from_json(member(doc, "poset"));
    const auto field = field_of(doc, fallback);
    auto u = entries_from_json(array_member(member(doc, "inner_unit"), "entries"), poset, field);
    for (Element x = 0; x < poset->size(); ++x) {
        if (!u(x, x).is_one()) throw DomainError("inner unit must have all-ones diagonal");
    }
    return AutDecomposition{
        .inner_unit = std::move(u),
        .mult_system = mult_system_from_json(member(doc, "mult_system"), poset, field),
        .order_part = order_from_json(member(doc, "order"), *poset),
    };
}

Json der_report_to_json(const DerDecomposition& parts) {
    auto doc = context(parts.inner_part.poset(), parts.inner_part.field());
    doc["inner_part"] = Json{{"entries", entries_to_json(parts.inner_part)}};
    doc["additive_system"] = additive_system_to_json(parts.additive_system);
    return doc;
}

DerDecomposition der_report_from_json(const Json& doc, const FieldSpec& fallback) {
    const auto poset = poset_from_json(member(doc, "poset"));
    const auto field = field_of(doc, fallback);
    auto g = entries_from_json(array_member(member(doc, "inner_part"), "entries"), poset, field);
    if (!is_off_diagonal(g)) throw DomainError("inner part must vanish on the diagonal");
    return DerDecomposition{
        .inner_part = std::move(g),
        .additive_system = additive_system_from_json(member(doc, "additive_system"), poset, field),
    };
}

}  // namespace incidence::io
