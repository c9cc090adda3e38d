// incidence: command-line front end for the incidence algebra library.
//
// Exit codes: 0 success, 1 semantic failure (with a counterexample or reason),
// 2 usage, I/O or parse failure.

#include <filesystem>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "incidence/automorphisms.hpp"
#include "incidence/derivations.hpp"
#include "incidence/error.hpp"
#include "incidence/io.hpp"
#include "incidence/sampling.hpp"

using namespace incidence;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct Config {
    std::string field_text = "q";
    std::uint64_t seed = 0;
    std::string out;
    FieldSpec field;
};

void emit(const Config& cfg, const io::Json& doc) {
    if (cfg.out.empty()) {
        std::cout << io::dump(doc);
    } else {
        io::write_json_file(cfg.out, doc);
    }
}

/// A poset file, or a generator spec such as "chain:3" when no such file exists.
PosetPtr load_poset(const std::string& arg) {
    if (!std::filesystem::exists(arg)) {
        for (const char* kind : {"chain:", "antichain:", "boolean:", "random:"}) {
            if (arg.starts_with(kind)) return poset_from_spec(arg);
        }
    }
    return io::poset_from_json(io::read_json_file(arg));
}

int poset_check(const std::string& path) {
    const auto doc = io::read_json_file(path);
    PosetPtr poset;
    try {
        poset = io::poset_from_json(doc);
    } catch (const DomainError& e) {
        std::cout << e.what() << "\n";
        return kFailure;
    }
    std::cout << "elements=" << poset->size() << " pairs=" << poset->comparable_pairs()
              << " intervals=" << poset->intervals().size() << "\n";
    return kOk;
}

int poset_autgroup(const Config& cfg, const std::string& path) {
    const auto poset = load_poset(path);
    io::Json list = io::Json::array();
    for (const auto& tau : enumerate_automorphisms(*poset)) list.push_back(io::order_to_json(*poset, tau));
    emit(cfg, io::Json{{"order", list.size()}, {"automorphisms", std::move(list)}});
    return kOk;
}

int poset_generate(const Config& cfg, const std::string& spec) {
    emit(cfg, io::poset_to_json(*poset_from_spec(spec)));
    return kOk;
}

int coalgebra_check(const Config& cfg, const std::string& path, const std::string& map_path) {
    const auto poset = load_poset(path);
    const auto axioms = check_coalgebra_axioms(poset, cfg.field);
    std::cout << "coalgebra axioms: " << axioms.describe(*poset) << "\n";
    if (!axioms) return kFailure;
    if (map_path.empty()) return kOk;

    const auto phi = io::coalgebra_map_from_json(io::read_json_file(map_path), cfg.field);
    if (!same_poset(phi.poset(), poset)) throw DomainError("the map is defined on a different poset");
    const auto morphism = is_coalgebra_morphism(phi);
    const auto derivation = is_coalgebra_derivation(phi);
    std::cout << "morphism: "
              << (morphism ? "yes" : "no (" + identity_name(morphism.failure->identity) + ")")
              << ", derivation: " << (derivation ? "yes" : "no") << "\n";
    std::string kind = "neither";
    if (morphism && is_bijective(phi)) {
        kind = "automorphism";
    } else if (derivation) {
        kind = "derivation";
    }
    std::cout << "classification: " << kind << "\n";
    if (!morphism) std::cout << "  morphism counterexample: " << morphism.describe(*poset) << "\n";
    if (!derivation) std::cout << "  derivation counterexample: " << derivation.describe(*poset) << "\n";
    return kOk;
}

std::string sidecar_path(const Config& cfg, const std::string& parts) {
    if (!parts.empty()) return parts;
    if (cfg.out.empty()) throw ParseError("random needs --out or --parts for the generating parts");
    return cfg.out + ".parts.json";
}

int aut_random(const Config& cfg, const std::string& path, const std::string& parts_path) {
    const auto poset = load_poset(path);
    const auto sidecar = sidecar_path(cfg, parts_path);
    Rng rng(cfg.seed);
    const auto parts = random_aut_parts(poset, cfg.field, rng);
    emit(cfg, io::coalgebra_map_to_json(compose_coalgebra_automorphism(parts)));
    io::write_json_file(sidecar, io::aut_report_to_json(parts));
    return kOk;
}

int aut_decompose(const Config& cfg, const std::string& path) {
    const auto phi = io::coalgebra_map_from_json(io::read_json_file(path), cfg.field);
    emit(cfg, io::aut_report_to_json(decompose_coalgebra_automorphism(phi).witness));
    return kOk;
}

int aut_compose(const Config& cfg, const std::string& path) {
    const auto parts = io::aut_report_from_json(io::read_json_file(path), cfg.field);
    emit(cfg, io::coalgebra_map_to_json(compose_coalgebra_automorphism(parts)));
    return kOk;
}

int der_random(const Config& cfg, const std::string& path, const std::string& parts_path) {
    const auto poset = load_poset(path);
    const auto sidecar = sidecar_path(cfg, parts_path);
    Rng rng(cfg.seed);
    const auto parts = random_der_parts(poset, cfg.field, rng);
    emit(cfg, io::coalgebra_map_to_json(compose_coalgebra_derivation(parts)));
    io::write_json_file(sidecar, io::der_report_to_json(parts));
    return kOk;
}

int der_decompose(const Config& cfg, const std::string& path) {
    const auto d = io::coalgebra_map_from_json(io::read_json_file(path), cfg.field);
    emit(cfg, io::der_report_to_json(decompose_coalgebra_derivation(d).witness));
    return kOk;
}

int der_compose(const Config& cfg, const std::string& path) {
    const auto parts = io::der_report_from_json(io::read_json_file(path), cfg.field);
    emit(cfg, io::coalgebra_map_to_json(compose_coalgebra_derivation(parts)));
    return kOk;
}

int mobius(const Config& cfg, const std::string& path) {
    const auto poset = load_poset(path);
    const auto z = zeta(poset, cfg.field);
    const auto mu = invert_function(z);
    const auto one = delta(poset, cfg.field);
    if (z * mu != one || mu * z != one) throw DomainError("zeta * mu differs from delta");
    emit(cfg, io::function_to_json(mu));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Incidence algebras and coalgebras of finite posets"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    app.add_option("--field", cfg.field_text, "Ground field: q or gf:<p>")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for the random subcommands")->capture_default_str();
    app.add_option("--out", cfg.out, "Output file (default: stdout)");

    std::function<int()> action;
    std::string path;
    std::string extra;

    auto* poset = app.add_subcommand("poset", "Validate and inspect posets")->require_subcommand(1);
    auto* p_check = poset->add_subcommand("check", "Validate a poset file");
    p_check->add_option("file", path, "Poset JSON file")->required();
    p_check->callback([&] { action = [&] { return poset_check(path); }; });
    auto* p_aut = poset->add_subcommand("autgroup", "List the order automorphisms");
    p_aut->add_option("file", path, "Poset JSON file or generator spec")->required();
    p_aut->callback([&] { action = [&] { return poset_autgroup(cfg, path); }; });
    auto* p_gen = poset->add_subcommand("generate", "Write a generated poset");
    p_gen->add_option("spec", path, "chain:n, antichain:n, boolean:n or random:n:density:seed")->required();
    p_gen->callback([&] { action = [&] { return poset_generate(cfg, path); }; });

    auto* coalg = app.add_subcommand("coalgebra", "Coalgebra checks")->require_subcommand(1);
    auto* c_check = coalg->add_subcommand("check", "Check the coalgebra axioms and classify a map");
    c_check->add_option("file", path, "Poset JSON file or generator spec")->required();
    c_check->add_option("--map", extra, "Linear map JSON file to classify");
    c_check->callback([&] { action = [&] { return coalgebra_check(cfg, path, extra); }; });

    auto* aut = app.add_subcommand("aut", "Coalgebra automorphisms")->require_subcommand(1);
    auto* a_rand = aut->add_subcommand("random", "Random automorphism sigma o lambda o nu");
    a_rand->add_option("file", path, "Poset JSON file or generator spec")->required();
    a_rand->add_option("--parts", extra, "Sidecar for the parts (default: <out>.parts.json)");
    a_rand->callback([&] { action = [&] { return aut_random(cfg, path, extra); }; });
    auto* a_dec = aut->add_subcommand("decompose", "Decompose an automorphism");
    a_dec->add_option("file", path, "Linear map JSON file")->required();
    a_dec->callback([&] { action = [&] { return aut_decompose(cfg, path); }; });
    auto* a_comp = aut->add_subcommand("compose", "Compose parts into an automorphism");
    a_comp->add_option("file", path, "Parts JSON file")->required();
    a_comp->callback([&] { action = [&] { return aut_compose(cfg, path); }; });

    auto* der = app.add_subcommand("der", "Coalgebra derivations")->require_subcommand(1);
    auto* d_rand = der->add_subcommand("random", "Random derivation nu + lambda");
    d_rand->add_option("file", path, "Poset JSON file or generator spec")->required();
    d_rand->add_option("--parts", extra, "Sidecar for the parts (default: <out>.parts.json)");
    d_rand->callback([&] { action = [&] { return der_random(cfg, path, extra); }; });
    auto* d_dec = der->add_subcommand("decompose", "Decompose a derivation");
    d_dec->add_option("file", path, "Linear map JSON file")->required();
    d_dec->callback([&] { action = [&] { return der_decompose(cfg, path); }; });
    auto* d_comp = der->add_subcommand("compose", "Compose parts into a derivation");
    d_comp->add_option("file", path, "Parts JSON file")->required();
    d_comp->callback([&] { action = [&] { return der_compose(cfg, path); }; });

    auto* mob = app.add_subcommand("mobius", "Write the Moebius function");
    mob->add_option("file", path, "Poset JSON file or generator spec")->required();
    mob->callback([&] { action = [&] { return mobius(cfg, path); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        cfg.field = FieldSpec::parse(cfg.field_text);
    } catch (const Error& e) {
        std::cerr << "error: --field: " << e.what() << "\n";
        return kUsage;
    }

    try {
        return action();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const io::Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
}
