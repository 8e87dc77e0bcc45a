#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "prefcone/instance_io.hpp"

using namespace prefcone;

namespace {

// Exit codes: 0 success, 1 I/O or parse failure, 2 precondition failure,
// 3 internal invariant falsified (an implementation bug certificate).
constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write '" + path + "'");
    out << text;
}

struct Analysis {
    SignCone cone;
    ValidationReport validation;
    ComponentLattice lattice;
    Subspace lin;
};

Analysis analyze(const std::string& path) {
    Analysis a{instance_from_json(read_file(path)), {}, {}, {}};
    a.validation = validate_partial_preference(a.cone);
    if (!a.validation.pass())
        throw precondition_error("instance is not a compatible partial preference (run 'validate')");
    a.lattice = components(a.cone);
    a.lin = lineality(a.cone, a.lattice);
    return a;
}

int run_validate(const std::string& path) {
    SignCone cone = instance_from_json(read_file(path));
    const ValidationReport report = validate_partial_preference(cone);
    std::cout << validation_to_json(cone, report);
    return report.pass() ? kExitOk : kExitPrecondition;
}

int run_components(const std::string& path, const std::string& dot_path) {
    const Analysis a = analyze(path);
    const std::optional<int> strong = strong_positives(a.cone, a.lattice);
    std::cout << components_to_json(a.cone, a.lattice, strong,
                                    is_relatively_open_preference(a.cone, a.lattice));
    if (!dot_path.empty()) write_file(dot_path, components_to_dot(a.lattice));
    return kExitOk;
}

int run_lineality(const std::string& path) {
    const Analysis a = analyze(path);
    std::cout << lineality_to_json(a.lin);
    return kExitOk;
}

int run_weak(const std::string& path) {
    const Analysis a = analyze(path);
    const WeakAnalysis w = analyze_weak(a.cone, a.lattice);
    std::cout << weak_to_json(w, a.lattice);
    return kExitOk;
}

int run_cortege(const std::string& path, const std::string& out_path) {
    const Analysis a = analyze(path);
    WeakAnalysis w = analyze_weak(a.cone, a.lattice);
    if (!w.is_weak) {
        std::cerr << "not a weak preference: no cortege\n";
        return kExitPrecondition;
    }
    const Cortege c = extract_cortege(w, a.cone, a.lattice);
    verify_structure_equalities(w, a.cone, a.lattice);
    const std::string text = cortege_to_json(c);
    std::cout << text;
    if (!out_path.empty()) write_file(out_path, text);
    return kExitOk;
}

int run_eval(const std::string& cortege_path, const std::string& point) {
    const Cortege c = cortege_from_json(read_file(cortege_path));
    const RatVector y = point_from_string(point, c.ambient_dim);
    std::cout << format_rational(eval(StepLinearFn{c}, y)) << "\n";
    return kExitOk;
}

int run_represent(const std::string& path, const std::string& cortege_path) {
    const Analysis a = analyze(path);
    const Cortege c = cortege_from_json(read_file(cortege_path));
    const bool ok = check_represents(StepLinearFn{c}, a.cone, a.lin);
    std::cout << (ok ? "{\n  \"represents\": true\n}\n" : "{\n  \"represents\": false\n}\n");
    return kExitOk;
}

int run_linear(const std::string& path) {
    const Analysis a = analyze(path);
    const WeakAnalysis w = analyze_weak(a.cone, a.lattice);
    const LinearVerdict verdict = linear_representability(a.cone, a.lattice, w);
    std::cout << "{\n  \"linear\": " << (verdict.phi ? "true" : "false") << ",\n  \"reason\": \""
              << verdict.reason << "\"";
    if (verdict.phi) std::cout << ",\n  \"phi\": [" << [&] {
        std::string s;
        for (std::size_t i = 0; i < verdict.phi->size(); ++i) {
            if (i) s += ", ";
            s += "\"" + format_rational((*verdict.phi)[i]) + "\"";
        }
        return s;
    }() << "]";
    std::cout << "\n}\n";
    return kExitOk;
}

int run_extend(const std::string& path, const std::string& out_path) {
    const Analysis a = analyze(path);
    const ExtensionResult r = extend_regular(a.cone, a.lattice, a.lin);
    const std::string text = extension_to_json(r);
    std::cout << text;
    if (!out_path.empty()) write_file(out_path, text);
    return kExitOk;
}

int run_witness(const std::string& path, const std::string& y_text, const std::string& z_text) {
    const Analysis a = analyze(path);
    const RatVector y = point_from_string(y_text, a.cone.dim());
    const RatVector z = point_from_string(z_text, a.cone.dim());
    WitnessFamily family;
    const Witness w = witness_non_preference(a.cone, a.lattice, a.lin, family, y, z);
    std::cout << witness_to_json(w);
    return kExitOk;
}

int run_selftest(std::uint64_t seed, int count, int pair_count, int forced_dim) {
    int weak_count = 0;
    for (int i = 0; i < count; ++i) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
        SignCone cone = random_instance(s, forced_dim);
        const ComponentLattice lattice = components(cone); // verifies partition/openness/join
        const Subspace lin = lineality(cone, lattice);     // verifies the translation cross-check

        const SampleSet samples = sample(cone, 24, s);
        WeakAnalysis w = analyze_weak(cone, lattice);
        const AxiomReport axioms = replay_axioms(cone, samples, &lin, w.is_weak);
        if (!axioms.pass()) {
            std::cerr << "axiom replay failed on instance " << s << "\n"
                      << axiom_report_to_json(axioms);
            return kExitInternal;
        }
        if (w.is_weak) {
            ++weak_count;
            const Cortege c = extract_cortege(w, cone, lattice);
            verify_structure_equalities(w, cone, lattice);
            if (!check_represents(StepLinearFn{c}, cone, lin)) {
                std::cerr << "extracted cortege fails to represent instance " << s << "\n";
                return kExitInternal;
            }
        }
        // Majorization concordance with the grid oracle.
        const std::vector<RatVector> pos = samples.positives();
        for (std::size_t a1 = 0; a1 < pos.size() && a1 < 8; ++a1) {
            for (std::size_t b1 = 0; b1 < pos.size() && b1 < 8; ++b1) {
                if (grid_majorize(cone, pos[a1], pos[b1], 6) &&
                    !majorizes(cone, pos[a1], pos[b1])) {
                    std::cerr << "grid oracle contradicts majorizes on instance " << s << "\n";
                    return kExitInternal;
                }
            }
        }
        WitnessFamily family;
        const IntersectionReport rep = check_intersection_representation(
            cone, lattice, lin, random_pairs(cone, lin, pair_count, s), family);
        if (!rep.pass()) {
            std::cerr << "intersection representation violated on instance " << s << "\n";
            return kExitInternal;
        }
    }
    std::cout << "{\n  \"instances\": " << count << ",\n  \"weak_instances\": " << weak_count
              << ",\n  \"pass\": true\n}\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of compatible preference relations given as sign cones"};
    app.require_subcommand(1);

    std::string file, dot_path, out_path, cortege_path, point_a, point_b;
    std::uint64_t seed = 1;
    int count = 20;
    int pairs = 40;
    int forced_dim = 0;

    auto* validate = app.add_subcommand("validate", "Check asymmetry and convexity of an instance");
    validate->add_option("file", file)->required();

    auto* comps = app.add_subcommand("components", "Open components, order, joins and Hasse diagram");
    comps->add_option("file", file)->required();
    comps->add_option("--dot", dot_path, "Write the Hasse diagram in DOT format");

    auto* lin = app.add_subcommand("lineality", "Basis of the associated subspace");
    lin->add_option("file", file)->required();

    auto* weak = app.add_subcommand("weak", "Weakness verdict, chain and rest space");
    weak->add_option("file", file)->required();

    auto* cortege = app.add_subcommand("cortege", "Extract the cortege of a weak preference");
    cortege->add_option("file", file)->required();
    cortege->add_option("--out", out_path, "Also write the cortege to a file");

    auto* ev = app.add_subcommand("eval", "Evaluate a step-linear function at a point");
    ev->add_option("cortege", cortege_path)->required();
    ev->add_option("point", point_a)->required();

    auto* rep = app.add_subcommand("represent", "Verify a cortege represents an instance");
    rep->add_option("file", file)->required();
    rep->add_option("cortege", cortege_path)->required();

    auto* linear = app.add_subcommand("linear", "Linear representability verdict");
    linear->add_option("file", file)->required();

    auto* extend = app.add_subcommand("extend", "Regular weak extension");
    extend->add_option("file", file)->required();
    extend->add_option("--out", out_path, "Also write the extension to a file");

    auto* wit = app.add_subcommand("witness", "Step-linear non-preference witness for a pair");
    wit->add_option("file", file)->required();
    wit->add_option("y", point_a)->required();
    wit->add_option("z", point_b)->required();

    auto* selftest = app.add_subcommand("selftest", "Random-instance property sweep");
    selftest->add_option("--seed", seed, "Base seed");
    selftest->add_option("--count", count, "Number of instances");
    selftest->add_option("--pairs", pairs, "Pairs per instance");
    selftest->add_option("--n", forced_dim, "Pin the instance dimension (default: mixed 2..4)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return run_validate(file);
        if (comps->parsed()) return run_components(file, dot_path);
        if (lin->parsed()) return run_lineality(file);
        if (weak->parsed()) return run_weak(file);
        if (cortege->parsed()) return run_cortege(file, out_path);
        if (ev->parsed()) return run_eval(cortege_path, point_a);
        if (rep->parsed()) return run_represent(file, cortege_path);
        if (linear->parsed()) return run_linear(file);
        if (extend->parsed()) return run_extend(file, out_path);
        if (wit->parsed()) return run_witness(file, point_a, point_b);
        if (selftest->parsed()) return run_selftest(seed, count, pairs, forced_dim);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const internal_error& e) {
        std::cerr << "internal invariant falsified: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}
