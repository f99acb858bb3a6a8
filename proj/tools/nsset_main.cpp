// nsset: build, transform, and check finite simplicial sets from the
// command line.  Pipelines pass files between verbs, so every intermediate
// is inspectable.
//
// Exit codes: 0 pass, 1 check failure, 2 usage or I/O error.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "nsset/acceptance.hpp"
#include "nsset/corpus.hpp"
#include "nsset/homology.hpp"
#include "nsset/io.hpp"
#include "nsset/strom.hpp"

namespace fs = std::filesystem;
using namespace nsset;

namespace {

struct CliError : std::runtime_error {
    explicit CliError(const std::string& what) : std::runtime_error(what) {}
};

Complex load_complex(const std::string& path) {
    return complex_from_json(nlohmann::json::parse(read_text_file(path)));
}

void save_json(const nlohmann::json& j, const std::string& path) {
    fs::path parent = fs::path(path).parent_path();
    if (!parent.empty()) fs::create_directories(parent);
    write_text_file(path, canonical_dump(j) + "\n");
}

std::vector<std::string> split_tokens(const std::string& text) {
    std::istringstream is(text);
    std::vector<std::string> out;
    std::string token;
    while (is >> token) out.push_back(token);
    return out;
}

// "simplex:2", "boundary:3", "horn:2:0", "nerve-chain:3"
Complex named_complex(const std::string& spec) {
    std::vector<std::string> parts;
    std::istringstream is(spec);
    std::string part;
    while (std::getline(is, part, ':')) parts.push_back(part);
    auto arg = [&](size_t i) { return std::stoi(parts.at(i)); };
    if (parts.empty()) throw CliError("empty object spec");
    if (parts[0] == "simplex" && parts.size() == 2) return standard_simplex(arg(1));
    if (parts[0] == "boundary" && parts.size() == 2) return standard_boundary(arg(1));
    if (parts[0] == "horn" && parts.size() == 3) return standard_horn(arg(1), arg(2));
    if (parts[0] == "nerve-chain" && parts.size() == 2) return nerve(FinPoset::chain(arg(1))).complex;
    throw CliError("unknown object spec: " + spec);
}

// A named part (boundary, horn) embedded in a named ambient complex by
// matching the vertex-set labels the standard constructions carry.
Subcomplex sub_from_named(const Complex& ambient, const Complex& part) {
    std::vector<SimplexId> gens;
    for (int n = 0; n <= part->dim(); ++n)
        for (int i = 0; i < part->count(n); ++i) {
            bool found = false;
            for (int j = 0; j < ambient->count(n) && !found; ++j)
                if (!part->label({n, i}).empty() && ambient->label({n, j}) == part->label({n, i})) {
                    gens.push_back({n, j});
                    found = true;
                }
            if (!found) throw CliError("cannot embed the named part into the ambient complex");
        }
    return subcomplex_closure(ambient, gens);
}

Subcomplex load_subcomplex_in(const std::string& path, const Complex& ambient) {
    Subcomplex a = subcomplex_from_json(nlohmann::json::parse(read_text_file(path)));
    if (!structural_equal(*a.ambient, *ambient)) throw CliError("subcomplex ambient differs from input");
    a.ambient = ambient;
    return a;
}

std::string write_bundle(const StromStructure& s, const std::string& stem) {
    save_json(map_to_json(s.k), stem + ".k.json");
    save_json(subcomplex_to_json(s.w), stem + ".w.json");
    save_json(map_to_json(s.i), stem + ".i.json");
    save_json(map_to_json(s.j), stem + ".j.json");
    save_json(map_to_json(s.r), stem + ".r.json");
    save_json(map_to_json(s.eps.map), stem + ".eps.json");
    nlohmann::json bundle;
    for (const char* piece : {"k", "w", "i", "j", "r", "eps"})
        bundle[piece] = fs::path(stem + "." + piece + ".json").filename().string();
    std::string path = stem + ".bundle.json";
    save_json(bundle, path);
    return path;
}

StromStructure read_bundle(const std::string& path) {
    nlohmann::json bundle = nlohmann::json::parse(read_text_file(path));
    fs::path dir = fs::path(path).parent_path();
    auto piece = [&](const char* name) { return (dir / bundle.at(name).get<std::string>()).string(); };
    SimpMap k = map_from_json(nlohmann::json::parse(read_text_file(piece("k"))));
    Subcomplex w = subcomplex_from_json(nlohmann::json::parse(read_text_file(piece("w"))));
    SimpMap i = map_from_json(nlohmann::json::parse(read_text_file(piece("i"))));
    SimpMap j = map_from_json(nlohmann::json::parse(read_text_file(piece("j"))));
    SimpMap r = map_from_json(nlohmann::json::parse(read_text_file(piece("r"))));
    SimpMap eps = map_from_json(nlohmann::json::parse(read_text_file(piece("eps"))));
    if (!structural_equal(*w.ambient, k.target())) throw CliError("bundle: w is not in B");
    w.ambient = k.target_ptr();
    Complex wset = i.target_ptr();
    // The product complex is rebuilt deterministically; the stored homotopy
    // must live on it.
    ProductResult prod = product_with_interval(wset);
    if (!structural_equal(eps.source(), *prod.product))
        throw CliError("bundle: homotopy source is not W x Delta[1]");
    std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(prod.product->dim()) + 1);
    for (int n = 0; n <= prod.product->dim(); ++n)
        for (int idx = 0; idx < prod.product->count(n); ++idx)
            images[static_cast<size_t>(n)].push_back(eps.apply(SimplexId{n, idx}));
    SimpMap eps_fixed(prod.product, wset, std::move(images));
    return StromStructure{std::move(k), std::move(w), wset,          std::move(i),
                          std::move(j), std::move(r), {std::move(prod), std::move(eps_fixed)}};
}

int run_pipeline(const std::string& pipeline, const std::string& input, const std::string& work_dir,
                 bool log) {
    fs::create_directories(work_dir);
    std::string current = input;
    int stage = 0;
    bool checks_passed = true;

    std::vector<std::string> verbs;
    {
        std::istringstream is(pipeline);
        std::string verb;
        while (std::getline(is, verb, '|')) verbs.push_back(verb);
    }
    for (const auto& verb_text : verbs) {
        auto tokens = split_tokens(verb_text);
        if (tokens.empty()) throw CliError("empty pipeline stage");
        const std::string& verb = tokens[0];
        std::string next = work_dir + "/stage" + std::to_string(stage++) + ".json";

        if (verb == "sd") {
            int iterations = 1;
            for (size_t i = 1; i < tokens.size(); ++i)
                if (tokens[i] == "--iterations" && i + 1 < tokens.size()) iterations = std::stoi(tokens[++i]);
            Complex x = load_complex(current);
            for (int k = 0; k < iterations; ++k) x = sd(x).sd;
            save_json(complex_to_json(*x), next);
            current = next;
        } else if (verb == "barratt") {
            Complex x = load_complex(current);
            save_json(complex_to_json(*barratt(x).nerve.complex), next);
            current = next;
        } else if (verb == "desing") {
            Complex x = load_complex(current);
            DesingResult r = desingularize(x);
            if (log) {
                for (const auto& step : r.steps)
                    std::cout << "collapse " << step.simplex.dim << "/" << step.simplex.index
                              << " interval [" << step.i << ".." << step.j << "]\n";
                std::cout << r.steps.size() << " steps\n";
            }
            save_json(complex_to_json(*r.dx), next);
            current = next;
        } else if (verb == "pushout") {
            if (tokens.size() != 3) throw CliError("pushout needs two map files");
            SimpMap f = map_from_json(nlohmann::json::parse(read_text_file(tokens[1])));
            SimpMap g = map_from_json(nlohmann::json::parse(read_text_file(tokens[2])));
            save_json(complex_to_json(*pushout(f, g).apex), next);
            current = next;
        } else if (verb == "collapse") {
            if (tokens.size() != 2) throw CliError("collapse needs a subcomplex file");
            Complex x = load_complex(current);
            Subcomplex a = load_subcomplex_in(tokens[1], x);
            save_json(complex_to_json(*collapse(x, a).apex), next);
            current = next;
        } else if (verb == "product-interval") {
            Complex x = load_complex(current);
            save_json(complex_to_json(*product_with_interval(x).product), next);
            current = next;
        } else if (verb == "pc") {
            Complex x = load_complex(current);
            save_json(poset_to_json(pc(*x).poset), next);
            current = next;
        } else if (verb == "homology") {
            Complex x = load_complex(current);
            std::cout << homology(*x).to_string();
            std::cout << "f-vector:";
            for (int c : f_vector(*x)) std::cout << ' ' << c;
            std::cout << "\nchi = " << euler_characteristic(*x) << "\n";
        } else if (verb == "check") {
            if (tokens.size() < 2) throw CliError("check needs a predicate");
            Complex x = load_complex(current);
            bool pass = false;
            if (tokens[1] == "nonsingular") {
                pass = x->is_nonsingular();
            } else if (tokens[1] == "iso" && tokens.size() == 3) {
                pass = are_isomorphic(x, load_complex(tokens[2])).has_value();
            } else if ((tokens[1] == "eden" || tokens[1] == "abyss" || tokens[1] == "full") &&
                       tokens.size() == 3) {
                Subcomplex a = load_subcomplex_in(tokens[2], x);
                pass = tokens[1] == "eden" ? is_eden(a) : tokens[1] == "abyss" ? is_abyss(a) : is_full(a);
            } else {
                throw CliError("unknown check: " + tokens[1]);
            }
            std::cout << "check " << tokens[1] << ": " << (pass ? "pass" : "fail") << "\n";
            checks_passed = checks_passed && pass;
        } else if (verb == "strom") {
            if (tokens.size() < 2) throw CliError("strom needs a subcommand");
            if (tokens[1] == "build" || tokens[1] == "sd2") {
                if (tokens.size() != 3) throw CliError("strom build|sd2 needs an eden subcomplex file");
                Complex x = load_complex(current);
                Subcomplex a = load_subcomplex_in(tokens[2], x);
                StromStructure s = tokens[1] == "build" ? strom_from_barratt_eden(x, a) : strom_sd2(x, a);
                std::string bundle = write_bundle(s, work_dir + "/strom" + std::to_string(stage));
                std::cout << "bundle: " << bundle << "\n";
                current = bundle;
            } else if (tokens[1] == "verify") {
                std::string path = tokens.size() == 3 ? tokens[2] : current;
                StromReport report = verify_strom(read_bundle(path));
                std::cout << "eden_embedding: " << (report.eden_embedding ? "pass" : "fail") << "\n"
                          << "abyss_factorization: " << (report.abyss_factorization ? "pass" : "fail")
                          << "\n"
                          << "retraction: " << (report.retraction ? "pass" : "fail") << "\n"
                          << "deformation: " << (report.deformation ? "pass" : "fail") << "\n";
                checks_passed = checks_passed && report.all();
            } else if (tokens[1] == "cobase") {
                if (tokens.size() != 4) throw CliError("strom cobase needs a bundle and a map file");
                StromStructure s = read_bundle(tokens[2]);
                SimpMap f = map_from_json(nlohmann::json::parse(read_text_file(tokens[3])));
                StromStructure hat = cobase_change_strom(s, f);
                std::string bundle = write_bundle(hat, work_dir + "/strom" + std::to_string(stage));
                std::cout << "bundle: " << bundle << "\n";
                std::cout << "gluing-iso: " << (gluing_isomorphism_check(s, f) ? "pass" : "fail") << "\n";
                current = bundle;
            } else {
                throw CliError("unknown strom subcommand: " + tokens[1]);
            }
        } else {
            throw CliError("unknown pipeline verb: " + verb);
        }
    }
    return checks_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite simplicial sets: subdivision, desingularization, Strom structures"};
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build", "materialize a standard object to a file");
    std::vector<std::string> build_args;
    std::string build_out = "out.json";
    build
        ->add_option("object", build_args,
                     "simplex N | boundary N | horn N K | nerve-chain N | collapse AMB:N PART:N | sub AMB:N PART:N")
        ->required()
        ->expected(-1);
    build->add_option("--out", build_out, "output file");

    auto* run = app.add_subcommand("run", "run a pipeline of verbs separated by '|'");
    std::string pipeline, input, work_dir = "nsset-work";
    bool log = false;
    run->add_option("pipeline", pipeline, "e.g. \"sd --iterations 2 | desing | homology\"")->required();
    run->add_option("input", input, "input complex file");
    run->add_option("--work-dir", work_dir, "directory for intermediate files");
    run->add_flag("--log", log, "print desingularization step logs");

    auto* corpus_cmd = app.add_subcommand("corpus", "generate deterministic random complexes");
    CorpusSpec spec;
    std::string corpus_out = "corpus";
    corpus_cmd->add_option("--seed", spec.seed, "seed");
    corpus_cmd->add_option("--count", spec.count, "number of complexes");
    corpus_cmd->add_option("--max-dim", spec.max_dim, "maximum simplex dimension (<= 3)");
    corpus_cmd->add_option("--max-cells", spec.max_cells, "maximum nondegenerate simplices (<= 12)");
    corpus_cmd->add_option("--out", corpus_out, "output directory");

    auto* accept = app.add_subcommand("accept", "run the acceptance suite");
    AcceptanceOptions acc;
    std::string format = "text";
    accept->add_option("--seed", acc.seed, "corpus seed");
    accept->add_flag("--skip-slow", acc.skip_slow, "skip the n = 3 instance of the unit criterion");
    accept->add_option("--format", format, "text | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) {
            if (build_args.empty()) throw CliError("build: missing object");
            Complex x;
            if (build_args[0] == "collapse") {
                if (build_args.size() != 3) throw CliError("build collapse AMBIENT PART");
                Complex ambient = named_complex(build_args[1]);
                Complex part = named_complex(build_args[2]);
                x = collapse(ambient, sub_from_named(ambient, part)).apex;
            } else if (build_args[0] == "sub") {
                if (build_args.size() != 3) throw CliError("build sub AMBIENT PART");
                Complex ambient = named_complex(build_args[1]);
                Complex part = named_complex(build_args[2]);
                save_json(subcomplex_to_json(sub_from_named(ambient, part)), build_out);
                std::cout << build_out << "\n";
                return 0;
            } else {
                std::ostringstream spec_text;
                spec_text << build_args[0];
                for (size_t i = 1; i < build_args.size(); ++i) spec_text << ':' << build_args[i];
                x = named_complex(spec_text.str());
            }
            save_json(complex_to_json(*x), build_out);
            std::cout << build_out << "\n";
            return 0;
        }
        if (run->parsed()) return run_pipeline(pipeline, input, work_dir, log);
        if (corpus_cmd->parsed()) {
            fs::create_directories(corpus_out);
            auto items = corpus_complexes(spec);
            for (size_t k = 0; k < items.size(); ++k) {
                std::string path = corpus_out + "/corpus" + std::to_string(k) + ".json";
                save_json(complex_to_json(*items[k]), path);
                std::cout << path << "\n";
            }
            return 0;
        }
        if (accept->parsed()) {
            if (format == "json") {
                auto results = run_acceptance(acc, nullptr);
                nlohmann::json j = nlohmann::json::array();
                for (const auto& r : results)
                    j.push_back({{"detail", r.detail},
                                 {"id", r.id},
                                 {"name", r.name},
                                 {"pass", r.pass},
                                 {"seconds", r.seconds}});
                std::cout << canonical_dump(j) << "\n";
                return all_passed(results) ? 0 : 1;
            }
            auto results = run_acceptance(acc, &std::cout);
            bool ok = all_passed(results);
            std::cout << (ok ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << "\n";
            return ok ? 0 : 1;
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
