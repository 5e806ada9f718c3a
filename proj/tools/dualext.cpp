#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "dualext/dual_extension.hpp"
#include "dualext/fixtures.hpp"
#include "dualext/json_io.hpp"
#include "dualext/peirce.hpp"
#include "dualext/random_quiver.hpp"
#include "dualext/spaces.hpp"
#include "dualext/verify.hpp"

using namespace dualext;

namespace {

constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

struct Loaded {
    Quiver quiver;
    FiniteDimAlgebra algebra;
    bool is_dual = false;
    DualExtensionAlgebra dual;  // valid when mode is dual or onepoint
};

Loaded load(const std::string& file, const std::string& mode) {
    Loaded out;
    out.quiver = parse_quiver(read_file(file));
    if (mode == "plain") {
        out.algebra = build_path_algebra(out.quiver, out.quiver.relations,
                                         longest_path_length(out.quiver));
    } else if (mode == "dual") {
        out.dual = build_dual_extension(out.quiver);
        out.algebra = out.dual.algebra;
        out.is_dual = true;
    } else if (mode == "onepoint") {
        out.dual = build_one_point_extension(out.quiver);
        out.algebra = out.dual.algebra;
        out.is_dual = true;
    } else {
        throw QuiverError("unknown mode: " + mode);
    }
    return out;
}

std::vector<std::string> subspace_element_strings(const FiniteDimAlgebra& alg,
                                                 const Subspace& s) {
    std::vector<std::string> out;
    for (const auto& v : s.basis()) {
        Element e;
        e.coeffs = v;
        out.push_back(element_to_string(alg, e));
    }
    return out;
}

void print_report(const ReportBundle& rep, bool as_json) {
    if (as_json) {
        json j = json::array();
        for (const auto& r : rep.records)
            j.push_back({{"name", r.name},
                         {"anchor", r.anchor},
                         {"pass", r.pass},
                         {"detail", r.detail},
                         {"millis", r.millis}});
        std::cout << json{{"checks", j}, {"all_pass", rep.all_pass()}}.dump(2) << "\n";
        return;
    }
    for (const auto& r : rep.records) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
    }
    std::cout << (rep.all_pass() ? "all checks passed" : "some checks failed") << "\n";
}

int cmd_build(const std::string& file, const std::string& mode, bool as_json) {
    Loaded l = load(file, mode);
    if (as_json) {
        std::cout << (l.is_dual ? dual_extension_to_json(l.dual) : algebra_to_json(l.algebra))
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "dim " << l.algebra.dim << "\n";
    for (const auto& label : l.algebra.labels) std::cout << "  " << label << "\n";
    return 0;
}

int cmd_spaces(const std::string& file, const std::string& mode, bool as_json) {
    Loaded l = load(file, mode);
    MapSpace der = derivation_space(l.algebra);
    MapSpace lie = lie_derivation_space(l.algebra);
    MapSpace cann = central_annihilating_maps(l.algebra);
    Subspace z = center(l.algebra);
    if (as_json) {
        json j;
        j["derivations"] = map_space_to_json(l.algebra, der);
        j["lie_derivations"] = map_space_to_json(l.algebra, lie);
        j["central_annihilating"] = map_space_to_json(l.algebra, cann);
        j["center"] = {{"dim", z.dim()},
                       {"basis", subspace_element_strings(l.algebra, z)}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "derivations          " << der.dim() << "\n"
              << "Lie derivations      " << lie.dim() << "\n"
              << "center               " << z.dim() << "\n"
              << "central annihilating " << cann.dim() << "\n";
    return 0;
}

int cmd_verify(const std::string& file, std::uint64_t seed, bool have_seed, bool as_json) {
    Quiver q = have_seed ? random_acyclic_quiver(seed) : parse_quiver(read_file(file));
    ReportBundle rep = verify_quiver(q);
    print_report(rep, as_json);
    return rep.all_pass() ? 0 : kExitCheckFailure;
}

int cmd_decompose(const std::string& file, const std::string& mode,
                  const std::string& map_file, bool as_json) {
    Loaded l = load(file, mode);
    LinearMap theta =
        linear_map_from_json(l.algebra, json::parse(read_file(map_file)));
    StandardDecomposition sd;
    try {
        sd = decompose_standard(l.algebra, theta);
    } catch (const DecompositionError& e) {
        if (as_json)
            std::cout << json{{"ok", false}, {"error", e.what()}}.dump(2) << "\n";
        else
            std::cout << "FAIL  " << e.what() << "\n";
        return kExitCheckFailure;
    }
    if (as_json) {
        json j;
        j["ok"] = true;
        j["unique"] = sd.unique;
        j["derivation_part"] = linear_map_to_json(l.algebra, sd.derivation_part);
        j["central_part"] = linear_map_to_json(l.algebra, sd.central_part);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "unique: " << (sd.unique ? "yes" : "no") << "\n";
    for (std::size_t c = 0; c < l.algebra.dim; ++c) {
        std::cout << "D(" << l.algebra.labels[c]
                  << ") = " << element_to_string(l.algebra, sd.derivation_part.column(c))
                  << "    Delta(" << l.algebra.labels[c]
                  << ") = " << element_to_string(l.algebra, sd.central_part.column(c)) << "\n";
    }
    return 0;
}

int cmd_peirce(const std::string& file, const std::string& mode,
               const std::vector<std::string>& vertices, bool as_json) {
    Loaded l = load(file, mode);
    const FiniteDimAlgebra& alg = l.algebra;
    Element e(alg.dim);
    if (vertices.empty()) {
        e = alg.unit -
            alg.basis_element(alg.vertex_idempotents.at(source_vertices(l.quiver).front()));
    } else {
        for (const auto& v : vertices) {
            auto it = alg.vertex_idempotents.find(v);
            if (it == alg.vertex_idempotents.end())
                throw QuiverError("unknown vertex: " + v);
            e += alg.basis_element(it->second);
        }
    }
    PeirceView view = peirce_decompose(alg, e);
    MapSpace lie = lie_derivation_space(alg);
    MapSpace der = derivation_space(alg);

    bool closure = check_block_closure(view);
    bool lie_conditions = true, der_conditions = true, defect = true;
    for (const auto& f : lie.basis) {
        BlockMapData d = extract_block_data(view, f);
        if (!verify_lie_block_conditions(view, d).all()) lie_conditions = false;
        if (!g_defect(view, d.delta1, d.mu1).all()) defect = false;
    }
    for (const auto& f : der.basis)
        if (!verify_der_block_conditions(view, extract_block_data(view, f)).all())
            der_conditions = false;

    int mn = pairing_image(view, PairingSide::MN).dim();
    int nm = pairing_image(view, PairingSide::NM).dim();
    auto ann = [&](char m, BimoduleSide s) {
        return subspace_element_strings(alg, bimodule_annihilator(view, m, s));
    };
    if (as_json) {
        json j;
        j["idempotent"] = element_to_string(alg, view.e);
        j["blocks"] = {
            {"A", {{"dim", view.A.dim()}, {"basis", subspace_element_strings(alg, view.A)}}},
            {"M", {{"dim", view.M.dim()}, {"basis", subspace_element_strings(alg, view.M)}}},
            {"N", {{"dim", view.N.dim()}, {"basis", subspace_element_strings(alg, view.N)}}},
            {"B", {{"dim", view.B.dim()}, {"basis", subspace_element_strings(alg, view.B)}}}};
        j["pairings"] = {{"MN_dim", mn}, {"NM_dim", nm}};
        j["annihilators"] = {{"M_left", ann('M', BimoduleSide::Left)},
                             {"M_right", ann('M', BimoduleSide::Right)},
                             {"N_left", ann('N', BimoduleSide::Left)},
                             {"N_right", ann('N', BimoduleSide::Right)}};
        j["conditions"] = {{"block_closure", closure},
                           {"lie_block_conditions", lie_conditions},
                           {"derivation_block_conditions", der_conditions},
                           {"defect_identities", defect}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "e = " << element_to_string(alg, view.e) << "\n"
                  << "dims A " << view.A.dim() << ", M " << view.M.dim() << ", N "
                  << view.N.dim() << ", B " << view.B.dim() << "\n"
                  << "pairing images: MN " << mn << ", NM " << nm << "\n"
                  << "block closure: " << (closure ? "ok" : "violated") << "\n"
                  << "Lie block conditions: " << (lie_conditions ? "ok" : "violated") << "\n"
                  << "derivation block conditions: " << (der_conditions ? "ok" : "violated")
                  << "\n"
                  << "defect identities: " << (defect ? "ok" : "violated") << "\n";
    }
    bool all = closure && lie_conditions && der_conditions && defect;
    return all ? 0 : kExitCheckFailure;
}

int cmd_corpus(std::uint64_t seed, bool have_seed, bool as_json) {
    std::vector<std::pair<std::string, Quiver>> inputs = {
        {"a2", parse_quiver(fixtures::a2)},
        {"ex2_2", parse_quiver(fixtures::ex2_2)},
        {"ex2_3", parse_quiver(fixtures::ex2_3)},
        {"ex4_9", parse_quiver(fixtures::ex4_9)},
    };
    if (have_seed) inputs.emplace_back("random", random_acyclic_quiver(seed));
    bool all = true;
    json out = json::array();
    for (const auto& [name, q] : inputs) {
        ReportBundle rep = verify_quiver(q);
        all = all && rep.all_pass();
        if (as_json) {
            json checks = json::array();
            for (const auto& r : rep.records)
                checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            out.push_back({{"entry", name}, {"all_pass", rep.all_pass()}, {"checks", checks}});
        } else {
            std::cout << name << ": " << (rep.all_pass() ? "all checks passed" : "FAILED")
                      << "\n";
            for (const auto& r : rep.records)
                if (!r.pass) std::cout << "  FAIL  " << r.name << "  (" << r.detail << ")\n";
        }
    }
    if (as_json) std::cout << json{{"entries", out}, {"all_pass", all}}.dump(2) << "\n";
    return all ? 0 : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dual extensions of path algebras: builders, derivation spaces, checks"};
    app.require_subcommand(1);

    std::string file, mode = "dual", map_file;
    std::vector<std::string> vertices;
    std::uint64_t seed = 0;
    bool as_json = false;

    auto add_common = [&](CLI::App* sub, bool needs_file) {
        if (needs_file) sub->add_option("file", file, "quiver file")->required();
        sub->add_flag("--json", as_json, "emit JSON");
    };
    auto add_mode = [&](CLI::App* sub) {
        sub->add_option("--mode", mode, "plain, dual or onepoint")
            ->check(CLI::IsMember({"plain", "dual", "onepoint"}));
    };

    CLI::App* build = app.add_subcommand("build", "build an algebra and dump it");
    add_common(build, true);
    add_mode(build);

    CLI::App* spaces = app.add_subcommand("spaces", "derivation and center spaces");
    add_common(spaces, true);
    add_mode(spaces);

    CLI::App* verify = app.add_subcommand("verify", "run the full check suite");
    verify->add_option("file", file, "quiver file");
    verify->add_flag("--json", as_json, "emit JSON");
    CLI::Option* vseed = verify->add_option("--seed", seed, "verify a generated quiver");

    CLI::App* decompose = app.add_subcommand("decompose", "split a Lie derivation");
    add_common(decompose, true);
    add_mode(decompose);
    decompose->add_option("--map", map_file, "linear map JSON file")->required();

    CLI::App* peirce = app.add_subcommand("peirce", "block decomposition report");
    add_common(peirce, true);
    add_mode(peirce);
    peirce->add_option("--vertex", vertices, "vertex idempotent summand (repeatable)");

    CLI::App* corpus = app.add_subcommand("corpus", "verify the bundled examples");
    corpus->add_flag("--json", as_json, "emit JSON");
    CLI::Option* cseed = corpus->add_option("--seed", seed, "also verify a generated quiver");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (build->parsed()) return cmd_build(file, mode, as_json);
        if (spaces->parsed()) return cmd_spaces(file, mode, as_json);
        if (verify->parsed()) {
            if (file.empty() && vseed->count() == 0) {
                std::cerr << "verify needs a file or --seed\n";
                return kExitInputError;
            }
            return cmd_verify(file, seed, vseed->count() > 0, as_json);
        }
        if (decompose->parsed()) return cmd_decompose(file, mode, map_file, as_json);
        if (peirce->parsed()) return cmd_peirce(file, mode, vertices, as_json);
        if (corpus->parsed()) return cmd_corpus(seed, cseed->count() > 0, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
