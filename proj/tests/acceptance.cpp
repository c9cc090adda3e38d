// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "incidence/automorphisms.hpp"
#include "incidence/derivations.hpp"
#include "incidence/error.hpp"
#include "incidence/io.hpp"
#include "incidence/sampling.hpp"
#include "oracles.hpp"

using namespace incidence;
namespace fs = std::filesystem;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec GF5 = FieldSpec::prime(5);
const std::vector<FieldSpec> kFields = {Q, GF5};

/// Collects failures; a criterion passes when none were recorded.
class Tally {
public:
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failures_.size() < 5) failures_.push_back(what);
        failed_ += ok ? 0 : 1;
    }
    bool passed() const { return failed_ == 0; }
    std::size_t checks() const { return checks_; }
    std::string summary() const {
        std::ostringstream out;
        out << checks_ << " checks";
        if (failed_ > 0) {
            out << ", " << failed_ << " failed";
            for (const auto& f : failures_) out << "; " << f;
        }
        return out.str();
    }

private:
    std::size_t checks_ = 0;
    std::size_t failed_ = 0;
    std::vector<std::string> failures_;
};

// ---------------------------------------------------------------------------

void coalgebra_axioms(Tally& t) {
    for (const auto& field : kFields) {
        for (const auto& [label, p] : corpus::posets()) {
            const auto r = check_coalgebra_axioms(p, field);
            t.check(r.holds(), label + " " + field.to_string() + ": " + r.describe(*p));
        }
    }
}

void duality_consistency(Tally& t) {
    Rng rng(2);
    for (const auto& field : kFields) {
        for (const auto& [label, p] : corpus::posets()) {
            for (int i = 0; i < 50; ++i) {
                const auto f = random_function(p, field, rng);
                const auto g = random_function(p, field, rng);
                t.check(dual_product(f, g) == f * g, label + ": dual product differs from convolution");
            }
            // Psi(delta) is the counit.
            std::vector<Scalar> coeffs;
            for (std::size_t k = 0; k < p->comparable_pairs(); ++k) coeffs.push_back(random_scalar(field, rng));
            const auto v = CoalgebraVector::from_coeffs(p, field, coeffs);
            t.check(psi_eval(delta(p, field), v) == counit(v), label + ": Psi(delta) differs from the counit");
            const auto f = random_function(p, field, rng);
            t.check(dual_product(delta(p, field), f) == f && dual_product(f, delta(p, field)) == f,
                    label + ": Psi(delta) is not the identity of the dual algebra");
        }
    }
}

void theta_properties(Tally& t) {
    Rng rng(3);
    for (const auto& field : kFields) {
        for (const auto& [label, p] : corpus::posets()) {
            for (int i = 0; i < 20; ++i) {
                const auto phi = random_coalgebra_endomap(p, field, rng);
                const auto psi = random_coalgebra_endomap(p, field, rng);
                t.check(theta(compose_endomaps(phi, psi)) == compose_algebra_endomaps(theta(psi), theta(phi)),
                        label + ": theta is not an anti-homomorphism");
            }
            // Basis maps E_st: [s] -> [t]. Each theta(E_st) has a single nonzero
            // coefficient, at a position no other basis map uses.
            const auto m = p->comparable_pairs();
            std::set<std::pair<std::size_t, std::size_t>> positions;
            bool single = true;
            for (std::size_t s = 0; s < m; ++s) {
                for (std::size_t u = 0; u < m; ++u) {
                    auto e = CoalgebraEndomap::zero(p, field);
                    e.set_coefficient(s, u, Scalar::one(field));
                    const auto img = theta(e);
                    std::size_t nonzero = 0;
                    for (std::size_t a = 0; a < m; ++a) {
                        for (std::size_t b = 0; b < m; ++b) {
                            if (img.columns()[a][b].is_zero()) continue;
                            ++nonzero;
                            positions.emplace(a, b);
                        }
                    }
                    single = single && nonzero == 1;
                }
            }
            t.check(single && positions.size() == m * m, label + ": theta of basis maps not distinct");
        }
    }
}

void inner_coefficient_identities(Tally& t) {
    Rng rng(4);
    for (const auto& field : kFields) {
        for (const auto& [label, p] : corpus::posets()) {
            for (int i = 0; i < 20; ++i) {
                const InnerCoefficients a(random_unit(p, field, rng));
                bool chains = true;
                bool vanishing = true;
                bool diagonal = true;
                for (const auto& [x, y] : p->intervals()) {
                    const auto between = p->interval_elements(x, y);
                    for (auto s : between) {
                        for (auto r : between) {
                            if (!p->leq(s, r)) continue;
                            for (auto u : between) {
                                if (!p->leq(r, u)) continue;
                                chains = chains && a.alpha(x, y, s, u) == a.alpha(x, r, s, r) * a.alpha(r, y, r, u);
                            }
                        }
                    }
                    // sum_{q<=z<=u} alpha_xz(p,q) alpha_zy(u,v) = 0 for p <= q < u <= v in [x,y].
                    for (auto pp : between) {
                        for (auto qq : between) {
                            if (!p->leq(pp, qq)) continue;
                            for (auto uu : between) {
                                if (!p->less(qq, uu)) continue;
                                for (auto vv : between) {
                                    if (!p->leq(uu, vv)) continue;
                                    auto sum = Scalar::zero(field);
                                    for (auto z : p->interval_elements(qq, uu)) {
                                        sum += a.alpha(x, z, pp, qq) * a.alpha(z, y, uu, vv);
                                    }
                                    vanishing = vanishing && sum.is_zero();
                                }
                            }
                        }
                    }
                    if (x == y) {
                        diagonal = diagonal && a.alpha(x, x, x, x).is_one();
                    } else {
                        auto sum = Scalar::zero(field);
                        for (auto s : between) sum += a.alpha(x, y, s, s);
                        diagonal = diagonal && sum.is_zero();
                    }
                }
                t.check(chains, label + ": alpha does not factor along chains");
                t.check(vanishing, label + ": mixed alpha sums do not vanish");
                t.check(diagonal, label + ": diagonal alpha sums wrong");
            }
        }
    }
}

void constructor_transfers(Tally& t) {
    Rng rng(5);
    for (const auto& field : kFields) {
        for (const auto& [label, p] : corpus::posets()) {
            for (int i = 0; i < 20; ++i) {
                const auto h = random_unit(p, field, rng);
                t.check(theta(inner_automorphism_C(h)) == algebra_automorphism(p, field, AutKind::Inner, h),
                        label + ": inner transfer");
                const auto sys = random_mult_system(p, field, rng);
                t.check(theta(mult_automorphism_C(sys)) == algebra_automorphism(p, field, AutKind::Mult, sys),
                        label + ": multiplicative transfer");
                const auto tau = random_order_automorphism(*p, rng);
                t.check(theta(order_automorphism_C(p, field, tau)) ==
                            algebra_automorphism(p, field, AutKind::Order, tau),
                        label + ": order transfer");
            }
        }
    }
}

void automorphism_round_trip(Tally& t) {
    const auto posets = corpus::posets();
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto& [label, p] = posets[seed % posets.size()];
        const auto& field = kFields[seed % 2];
        Rng rng(seed);
        const auto parts = random_aut_parts(p, field, rng);
        const auto phi = compose_coalgebra_automorphism(parts);
        const auto f = decompose_coalgebra_automorphism(phi);
        t.check(f.witness == parts, label + " seed " + std::to_string(seed) + ": parts differ");
        t.check(compose_endomaps(f.sigma, compose_endomaps(f.lambda, f.nu)) == phi,
                label + " seed " + std::to_string(seed) + ": recomposition differs");
    }
    for (const auto& field : kFields) {
        for (const auto& [label, p] : posets) {
            const auto f = decompose_coalgebra_automorphism(CoalgebraEndomap::identity(p, field));
            t.check(f.witness.inner_unit == delta(p, field) && f.witness.mult_system.is_trivial() &&
                        f.witness.order_part.is_identity(),
                    label + ": identity does not decompose trivially");
        }
    }
}

void derivation_round_trip(Tally& t) {
    const auto posets = corpus::posets();
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto& [label, p] = posets[seed % posets.size()];
        const auto& field = kFields[seed % 2];
        Rng rng(seed);
        const auto parts = random_der_parts(p, field, rng);
        const auto d = compose_coalgebra_derivation(parts);
        const auto f = decompose_coalgebra_derivation(d);
        const auto tag = label + " seed " + std::to_string(seed);
        t.check(f.witness == parts, tag + ": parts differ");
        t.check(f.nu + f.lambda == d, tag + ": recomposition differs");
        // Uniqueness: d_{g-g'} = add(s'-s) vanishes on L1, so the extraction
        // sum_x e_x d_{g-g'}(e_x) returns g - g', which must then be zero.
        const auto diff = parts.inner_part - f.witness.inner_part;
        const auto dd = inner_derivation_A(diff);
        auto extracted = IncidenceFunction::zero(p, field);
        bool vanishes_on_l1 = true;
        for (Element x = 0; x < p->size(); ++x) {
            const auto k = *p->interval_index(x, x);
            const auto img = dd.image(k);
            vanishes_on_l1 = vanishes_on_l1 && img.is_zero();
            extracted += basis_function(p, field, k) * img;
        }
        t.check(vanishes_on_l1 && extracted == diff && diff.is_zero(), tag + ": inner part not unique");
    }
}

/// A single coefficient of `map` perturbed, where the source or the target
/// interval is a one-point interval.
CoalgebraEndomap corrupt(const CoalgebraEndomap& map, Rng& rng, std::string& where) {
    const auto& p = *map.poset();
    const auto m = p.comparable_pairs();
    std::vector<std::size_t> points;
    for (std::size_t k = 0; k < m; ++k) {
        if (p.interval(k).is_point()) points.push_back(k);
    }
    const auto source = static_cast<std::size_t>(rng() % m);
    const auto target = p.interval(source).is_point() ? static_cast<std::size_t>(rng() % m)
                                                      : points[rng() % points.size()];
    auto out = map;
    out.set_coefficient(source, target, map.coefficient(source, target) + random_nonzero_scalar(map.field(), rng));
    where = p.interval_name(target) + " in the image of " + p.interval_name(source);
    return out;
}

void predicate_soundness(Tally& t) {
    Rng rng(8);
    for (const auto& field : kFields) {
        for (const auto& [label, p] : corpus::posets()) {
            const auto h = random_unit(p, field, rng);
            t.check(is_coalgebra_automorphism(inner_automorphism_C(h)).holds(), label + ": inner");
            t.check(is_coalgebra_automorphism(inner_automorphism_C(h, InnerDirection::Inverse)).holds(),
                    label + ": inner inverse");
            t.check(is_coalgebra_automorphism(mult_automorphism_C(random_mult_system(p, field, rng))).holds(),
                    label + ": multiplicative");
            for (const auto& tau : enumerate_automorphisms(*p)) {
                t.check(is_coalgebra_automorphism(order_automorphism_C(p, field, tau)).holds(), label + ": order");
            }
            t.check(is_coalgebra_derivation(inner_derivation_C(random_function(p, field, rng))).holds(),
                    label + ": inner derivation");
            t.check(is_coalgebra_derivation(additive_derivation_C(random_additive_system(p, field, rng))).holds(),
                    label + ": additive derivation");
        }
    }
    const auto posets = corpus::posets();
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng r(800 + seed);
        const auto& [label, p] = posets[seed % posets.size()];
        const auto& field = kFields[(seed / 2) % 2];
        std::string where;
        if (seed % 2 == 0) {
            const auto phi = compose_coalgebra_automorphism(random_aut_parts(p, field, r));
            const auto bad = corrupt(phi, r, where);
            const auto result = is_coalgebra_morphism(bad);
            t.check(!result.holds() && !result.describe(*p).empty(),
                    label + ": corrupted automorphism accepted (" + where + ")");
        } else {
            const auto d = compose_coalgebra_derivation(random_der_parts(p, field, r));
            const auto bad = corrupt(d, r, where);
            const auto result = is_coalgebra_derivation(bad);
            t.check(!result.holds() && !result.describe(*p).empty(),
                    label + ": corrupted derivation accepted (" + where + ")");
        }
    }
}

/// mu(x,x) = 1, mu(x,y) = -sum_{x<=z<y} mu(x,z).
oracle::Matrix mobius_recurrence(const Poset& p, const FieldSpec& field) {
    auto mu = oracle::zeros(p.size(), field);
    std::vector<Element> order(p.size());
    for (Element x = 0; x < p.size(); ++x) {
        // Process y in an order compatible with <=: by number of elements below.
        std::vector<std::pair<std::size_t, Element>> ys;
        for (Element y = 0; y < p.size(); ++y) {
            if (!p.leq(x, y)) continue;
            std::size_t below = 0;
            for (Element z = 0; z < p.size(); ++z) below += p.leq(z, y);
            ys.emplace_back(below, y);
        }
        std::sort(ys.begin(), ys.end());
        for (const auto& [_, y] : ys) {
            if (x == y) {
                mu[x][y] = Scalar::one(field);
                continue;
            }
            auto sum = Scalar::zero(field);
            for (Element z = 0; z < p.size(); ++z) {
                if (p.leq(x, z) && p.less(z, y)) sum += mu[x][z];
            }
            mu[x][y] = -sum;
        }
    }
    return mu;
}

void mobius_sanity(Tally& t) {
    for (const auto& field : kFields) {
        for (const auto& [label, p] : corpus::posets()) {
            const auto z = zeta(p, field);
            const auto mu = invert_function(z);
            t.check(z * mu == delta(p, field) && mu * z == delta(p, field), label + ": zeta mu is not delta");
            t.check(oracle::to_matrix(mu) == mobius_recurrence(*p, field), label + ": differs from recurrence");
        }
        for (std::size_t n = 1; n <= 5; ++n) {
            const auto c = make_chain(n);
            const auto mu = invert_function(zeta(c, field));
            bool ok = true;
            for (Element i = 0; i < n; ++i) {
                for (Element j = i; j < n; ++j) {
                    const auto expected = j == i ? 1 : (j == i + 1 ? -1 : 0);
                    ok = ok && mu(i, j) == Scalar::from_int(field, expected);
                }
            }
            t.check(ok, "chain:" + std::to_string(n) + ": Moebius values");
        }
    }
}

// ---------------------------------------------------------------------------
// CLI

struct Run {
    int code = -1;
    std::string out;
};

class Workspace {
public:
    Workspace() : dir_(fs::temp_directory_path() / ("incidence-acceptance-" + std::to_string(::getpid()))) {
        fs::create_directories(dir_);
    }
    ~Workspace() {
        std::error_code ec;
        fs::remove_all(dir_, ec);
    }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

    std::string read(const std::string& name) const {
        std::ifstream in(path(name), std::ios::binary);
        std::stringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    Run run(const std::string& args) const {
        const auto out = path("stdout.txt");
        const auto cmd = std::string("'") + INCIDENCE_CLI + "' " + args + " > '" + out + "' 2>/dev/null";
        const int status = std::system(cmd.c_str());
        Run r;
        r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        r.out = read("stdout.txt");
        return r;
    }

private:
    fs::path dir_;
};

bool contains(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

void cli_golden(Tally& t) {
    const Workspace ws;
    const auto q = [&](const std::string& name) { return "'" + ws.path(name) + "'"; };

    // Round trips reproduce the sidecar byte for byte.
    for (const auto& [kind, seed] : {std::pair<std::string, int>{"aut", 7}, {"der", 3}}) {
        for (const std::string poset : {"boolean:3", "random:7:0.4:5"}) {
            const auto map = kind + "-" + std::to_string(seed) + ".json";
            const auto report = kind + "-report.json";
            const auto r1 = ws.run(kind + " random " + poset + " --seed " + std::to_string(seed) + " --out " + q(map));
            const auto r2 = ws.run(kind + " decompose " + q(map) + " --out " + q(report));
            const auto sidecar = ws.read(map + ".parts.json");
            t.check(r1.code == 0 && r2.code == 0 && !sidecar.empty() && ws.read(report) == sidecar,
                    kind + " random/decompose on " + poset + " does not reproduce the sidecar");
            const auto r3 = ws.run(kind + " compose " + q(map + ".parts.json") + " --out " + q("again.json"));
            t.check(r3.code == 0 && ws.read("again.json") == ws.read(map), kind + " compose differs from random");
            const auto first = ws.read(map);
            ws.run(kind + " random " + poset + " --seed " + std::to_string(seed) + " --out " + q(map));
            t.check(ws.read(map) == first, kind + " random is not deterministic");
        }
    }
    const auto gf = ws.run("--field gf:5 aut random boolean:3 --seed 7 --out " + q("g.json"));
    const auto gd = ws.run("aut decompose " + q("g.json") + " --out " + q("g-report.json"));
    t.check(gf.code == 0 && gd.code == 0 && ws.read("g-report.json") == ws.read("g.json.parts.json"),
            "aut round trip over gf:5");

    // Exit-code contract.
    ws.run("poset generate chain:3 --out " + q("chain3.json"));
    const auto valid = ws.run("poset check " + q("chain3.json"));
    t.check(valid.code == 0 && contains(valid.out, "elements=3 pairs=6"), "valid poset: " + valid.out);
    ws.write("cyclic.json", R"({"elements": ["0", "1"], "covers": [["0", "1"], ["1", "0"]]})");
    const auto cyclic = ws.run("poset check " + q("cyclic.json"));
    t.check(cyclic.code == 1 && contains(cyclic.out, "antisymmetry violated: 0≤1≤0"), "cyclic poset: " + cyclic.out);
    t.check(ws.run("poset check " + q("missing.json")).code == 2, "missing file");
    ws.write("broken.json", "{\"elements\": [");
    t.check(ws.run("poset check " + q("broken.json")).code == 2, "malformed JSON");
    t.check(ws.run("aut decompose " + q("missing.json")).code == 2, "missing map");
    t.check(ws.run("--field gf:4 mobius chain:2").code == 2, "invalid field flag");
    t.check(ws.run("frobnicate").code == 2, "unknown command");

    const auto c2 = make_chain(2);
    ws.write("identity.json", io::dump(io::coalgebra_map_to_json(CoalgebraEndomap::identity(c2, Q))));
    ws.write("zero.json", io::dump(io::coalgebra_map_to_json(CoalgebraEndomap::zero(c2, Q))));
    const auto axioms = ws.run("coalgebra check " + q("chain3.json"));
    t.check(axioms.code == 0 && contains(axioms.out, "coalgebra axioms: pass"), "coalgebra check: " + axioms.out);
    const auto id = ws.run("coalgebra check chain:2 --map " + q("identity.json"));
    t.check(id.code == 0 && contains(id.out, "morphism: yes, derivation: no"), "identity map: " + id.out);
    const auto zero = ws.run("coalgebra check chain:2 --map " + q("zero.json"));
    t.check(zero.code == 0 && contains(zero.out, "morphism: no (counit), derivation: yes"), "zero map: " + zero.out);

    const auto trivial = ws.run("aut decompose " + q("identity.json"));
    t.check(trivial.code == 0 &&
                io::aut_report_from_json(io::Json::parse(trivial.out)) ==
                    AutDecomposition{delta(c2, Q), MultiplicativeSystem::trivial(c2, Q), PosetAutomorphism::identity(2)},
            "identity decomposes trivially");
    t.check(ws.run("aut decompose " + q("zero.json")).code == 1, "non-morphism rejected");
    const auto zero_der = ws.run("der decompose " + q("zero.json"));
    t.check(zero_der.code == 0 &&
                io::der_report_from_json(io::Json::parse(zero_der.out)) ==
                    DerDecomposition{IncidenceFunction::zero(c2, Q), AdditiveSystem::zero(c2, Q)},
            "zero derivation decomposes to (0, 0)");
    t.check(ws.run("der decompose " + q("identity.json")).code == 1, "identity is not a derivation");

    const auto mu = ws.run("mobius chain:3");
    t.check(mu.code == 0 && io::function_from_json(io::Json::parse(mu.out)) == invert_function(zeta(make_chain(3), Q)),
            "mobius output");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<void(Tally&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "coalgebra axioms on the poset corpus", coalgebra_axioms},
        {2, "dual product equals convolution; Psi(delta) is the counit", duality_consistency},
        {3, "theta reverses composition and separates basis maps", theta_properties},
        {4, "inner automorphism coefficient identities", inner_coefficient_identities},
        {5, "theta carries coalgebra constructors to algebra constructors", constructor_transfers},
        {6, "automorphism decomposition round trip", automorphism_round_trip},
        {7, "derivation decomposition round trip", derivation_round_trip},
        {8, "predicates accept constructions and reject corruptions", predicate_soundness},
        {9, "Moebius function sanity", mobius_sanity},
        {10, "CLI golden round trips and exit codes", cli_golden},
    };
    bool all = true;
    for (const auto& c : criteria) {
        Tally t;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(t);
        } catch (const std::exception& e) {
            t.check(false, std::string("exception: ") + e.what());
        }
        const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << c.id << ": " << (t.passed() ? "PASS" : "FAIL") << "  " << c.title << " ("
                  << t.summary() << ", " << std::fixed << std::setprecision(2) << secs << "s)" << std::endl;
        all = all && t.passed();
    }
    return all ? 0 : 1;
}
