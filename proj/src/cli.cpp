#include "nhtopo/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nhtopo/census.hpp"
#include "nhtopo/classify.hpp"
#include "nhtopo/homology.hpp"
#include "nhtopo/io.hpp"

namespace nhtopo {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

SimplicialComplex load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_complex(text.str());
}

Simplex split_vertices(const std::string& csv) {
    Simplex out;
    std::string cur;
    for (char ch : csv) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string compact(const SimplicialComplex& k) {
    if (k.is_void()) return "void";
    std::string s = "{";
    bool first_f = true;
    for (const Simplex& f : k.facets()) {
        if (!first_f) s += '|';
        first_f = false;
        bool first_v = true;
        for (const Vertex& v : f) {
            if (!first_v) s += ' ';
            first_v = false;
            s += v;
        }
    }
    return s + "}";
}

json terminal_to_json(const TraceTerminal& t) {
    json j;
    if (const auto* full = std::get_if<FullSimplexTerminal>(&t)) {
        j["kind"] = "full-simplex";
        j["dim"] = full->dim;
    } else if (const auto* bd = std::get_if<BoundarySimplexTerminal>(&t)) {
        j["kind"] = "boundary-simplex";
        j["dim"] = bd->dim;
    } else if (const auto* cyc = std::get_if<CycleTerminal>(&t)) {
        j["kind"] = "cycle";
        j["entry"] = cyc->entry;
        j["period"] = cyc->period;
    } else {
        j["kind"] = "step-cap";
        j["cap"] = std::get<StepCapTerminal>(t).cap;
    }
    return j;
}

std::string terminal_to_text(const TraceTerminal& t) {
    std::ostringstream s;
    if (const auto* full = std::get_if<FullSimplexTerminal>(&t))
        s << "full simplex (dim " << full->dim << ")";
    else if (const auto* bd = std::get_if<BoundarySimplexTerminal>(&t))
        s << "boundary of simplex (dim " << bd->dim << ")";
    else if (const auto* cyc = std::get_if<CycleTerminal>(&t))
        s << "cycle entry=" << cyc->entry << " period=" << cyc->period;
    else
        s << "step cap " << std::get<StepCapTerminal>(t).cap;
    return s.str();
}

int cmd_classify(const SimplicialComplex& k, bool with_trace, bool as_json, std::ostream& out) {
    const Classification c = classify(k);
    if (as_json) {
        json j;
        if (const auto* sphere = std::get_if<MinimalNHSphere>(&c.verdict)) {
            j["verdict"] = "minimal-nh-sphere";
            j["d"] = sphere->dim;
            j["k"] = sphere->homotopy_dim;
        } else if (const auto* ball = std::get_if<MinimalNHBall>(&c.verdict)) {
            j["verdict"] = "minimal-nh-ball";
            j["d"] = ball->dim;
        } else {
            j["verdict"] = "not-minimal";
        }
        j["steps_to_terminal"] = c.steps_to_terminal;
        j["terminal"] = terminal_to_json(c.trace.terminal);
        if (with_trace) {
            j["trace"] = json::array();
            for (const SimplicialComplex& step : c.trace.steps)
                j["trace"].push_back(complex_to_json(step));
        }
        out << j.dump(2) << '\n';
        return 0;
    }
    if (const auto* sphere = std::get_if<MinimalNHSphere>(&c.verdict))
        out << "minimal NH-sphere d=" << sphere->dim << " k=" << sphere->homotopy_dim << '\n';
    else if (const auto* ball = std::get_if<MinimalNHBall>(&c.verdict))
        out << "minimal NH-ball d=" << ball->dim << '\n';
    else
        out << "not minimal (" << terminal_to_text(c.trace.terminal) << ")\n";
    if (with_trace) {
        for (std::size_t i = 0; i < c.trace.steps.size(); ++i)
            out << "step " << i << ": " << compact(c.trace.steps[i]) << '\n';
        out << "terminal: " << terminal_to_text(c.trace.terminal) << '\n';
    }
    return 0;
}

int cmd_iterate(const SimplicialComplex& k, int max_steps, bool as_json, std::ostream& out) {
    const DualTrace trace = iterate_duals(k, max_steps);
    if (as_json) {
        json j;
        j["steps"] = json::array();
        for (const SimplicialComplex& step : trace.steps) j["steps"].push_back(complex_to_json(step));
        j["terminal"] = terminal_to_json(trace.terminal);
        j["dual_steps"] = trace.dual_steps();
        out << j.dump(2) << '\n';
        return 0;
    }
    for (std::size_t i = 0; i < trace.steps.size(); ++i)
        out << "step " << i << ": " << compact(trace.steps[i]) << '\n';
    out << "terminal: " << terminal_to_text(trace.terminal) << '\n';
    return 0;
}

int cmd_homology(const SimplicialComplex& k, const std::string& coeff_text, bool as_json,
                 std::ostream& out) {
    Coefficients coeff = Coefficients::integers();
    std::string name = "integers";
    if (coeff_text == "z") {
        coeff = Coefficients::integers();
    } else if (coeff_text == "q") {
        coeff = Coefficients::rationals();
        name = "rationals";
    } else if (coeff_text.rfind("p:", 0) == 0) {
        std::int64_t p = 0;
        try {
            p = std::stoll(coeff_text.substr(2));
        } catch (const std::exception&) {
            throw UsageError("bad characteristic in --coeff " + coeff_text);
        }
        coeff = Coefficients::prime(p);
        name = "F_" + std::to_string(p);
    } else {
        throw UsageError("--coeff must be q, z or p:<prime>");
    }

    const HomologyProfile profile = reduced_homology(k, coeff);
    if (as_json) {
        json j;
        j["coeff"] = name;
        j["betti"] = json::object();
        for (const auto& [deg, b] : profile.betti) j["betti"][std::to_string(deg)] = b;
        j["torsion"] = json::object();
        for (const auto& [deg, factors] : profile.torsion) {
            json arr = json::array();
            for (const BigInt& f : factors) arr.push_back(f.str());
            j["torsion"][std::to_string(deg)] = arr;
        }
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "coeff: " << name << '\n';
    for (const auto& [deg, b] : profile.betti)
        out << "betti[" << deg << "]=" << b << '\n';
    for (const auto& [deg, factors] : profile.torsion) {
        out << "torsion[" << deg << "]:";
        for (const BigInt& f : factors) out << ' ' << f;
        out << '\n';
    }
    return 0;
}

int cmd_census(const std::string& kind, int d, int hdim, bool count_only,
               const std::string& emit_dir, bool as_json, std::ostream& out) {
    std::vector<CensusEntry> entries;
    std::map<int, int> counts_by_k;
    if (kind == "sphere") {
        const int klo = hdim >= 0 ? hdim : 0;
        const int khi = hdim >= 0 ? hdim : d;
        for (int k = klo; k <= khi; ++k) {
            std::vector<CensusEntry> part = census_spheres(d, k);
            counts_by_k[k] = static_cast<int>(part.size());
            entries.insert(entries.end(), part.begin(), part.end());
        }
    } else if (kind == "ball") {
        if (hdim >= 0) throw UsageError("--hdim applies to spheres only");
        entries = census_balls(d);
    } else {
        throw UsageError("--kind must be sphere or ball");
    }

    if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        int idx = 0;
        for (const CensusEntry& e : entries) {
            std::ostringstream name;
            name << kind << "_d" << e.dim;
            if (e.kind == CensusEntry::Kind::Sphere) name << "_k" << e.homotopy_dim;
            name << '_' << std::setw(3) << std::setfill('0') << idx++ << ".cplx";
            std::ofstream f(std::filesystem::path(emit_dir) / name.str());
            f << "# " << e.construction << '\n' << serialize_complex(e.complex);
        }
    }

    if (as_json) {
        json j;
        j["kind"] = kind;
        j["dim"] = d;
        j["total"] = entries.size();
        if (kind == "sphere") {
            j["counts"] = json::object();
            for (const auto& [k, c] : counts_by_k) j["counts"][std::to_string(k)] = c;
        }
        if (!count_only) {
            j["entries"] = json::array();
            for (const CensusEntry& e : entries) {
                json je = complex_to_json(e.complex);
                je["construction"] = e.construction;
                if (e.kind == CensusEntry::Kind::Sphere) je["k"] = e.homotopy_dim;
                j["entries"].push_back(je);
            }
        }
        out << j.dump(2) << '\n';
        return 0;
    }

    if (!count_only) {
        for (const CensusEntry& e : entries) {
            out << kind << " d=" << e.dim;
            if (e.kind == CensusEntry::Kind::Sphere) out << " k=" << e.homotopy_dim;
            out << ": " << compact(e.complex) << '\n';
        }
    }
    if (kind == "sphere") {
        for (const auto& [k, c] : counts_by_k) out << "k=" << k << ":" << c << ' ';
    }
    out << "total:" << entries.size() << '\n';
    return 0;
}

// Small deterministic complex generator for the verify suites.
SimplicialComplex random_complex(std::mt19937& rng, int max_vertices) {
    const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_vertices));
    std::vector<Vertex> ground;
    for (int i = 0; i < n; ++i) ground.push_back(std::string(1, static_cast<char>('a' + i)));
    const FaceMask full = (FaceMask{1} << n) - 1;
    const int count = 1 + static_cast<int>(rng() % static_cast<unsigned>(n + 2));
    std::vector<FaceMask> facets;
    for (int i = 0; i < count; ++i) {
        const FaceMask m = rng() & full;
        if (m) facets.push_back(m);
    }
    if (facets.empty()) facets.push_back(1);
    return SimplicialComplex::from_facet_masks(ground, facets);
}

int cmd_verify(const std::string& suite, int dim_max, int samples, unsigned seed,
               std::ostream& out) {
    long long checks = 0, failures = 0;
    auto expect = [&](bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            out << "FAIL " << what << '\n';
        }
    };

    std::vector<CensusEntry> members;
    for (int d = 0; d <= dim_max; ++d) {
        for (int k = 0; k <= d; ++k) {
            auto part = census_spheres(d, k);
            members.insert(members.end(), part.begin(), part.end());
        }
        auto part = census_balls(d);
        members.insert(members.end(), part.begin(), part.end());
    }

    if (suite == "duality") {
        for (const CensusEntry& e : members) {
            expect(check_alexander_duality(e.complex, e.complex.support(),
                                           Coefficients::rationals()),
                   "duality/Q on " + compact(e.complex));
            expect(check_alexander_duality(e.complex, e.complex.support(), Coefficients::prime(2)),
                   "duality/F2 on " + compact(e.complex));
        }
        std::mt19937 rng(seed);
        for (int i = 0; i < samples; ++i) {
            const SimplicialComplex k = random_complex(rng, 8);
            expect(check_alexander_duality(k, k.ground(), Coefficients::rationals()),
                   "duality/Q on random " + compact(k));
            expect(check_alexander_duality(k, k.ground(), Coefficients::prime(2)),
                   "duality/F2 on random " + compact(k));
            if (is_full_simplex(k)) continue;
            const SimplicialComplex kstar = alexander_dual(k, k.support());
            const auto dual_support = kstar.support();
            Simplex rho;
            for (const Vertex& v : k.support())
                if (!std::binary_search(dual_support.begin(), dual_support.end(), v))
                    rho.push_back(v);
            expect(same_faces(dual_rel_simplex(kstar, rho), k.restricted_to_support()),
                   "double dual on random " + compact(k));
        }
    } else if (suite == "links") {
        for (const CensusEntry& e : members) {
            for (const auto& level : e.complex.faces_by_dim())
                for (FaceMask face : level)
                    expect(classify(link(e.complex, e.complex.simplex_of(face))).is_minimal(),
                           "link closure on " + compact(e.complex));
        }
    } else if (suite == "deletion") {
        for (const CensusEntry& e : members) {
            for (const Vertex& v : e.complex.support())
                expect(classify(deletion(e.complex, v)).is_minimal(),
                       "deletion closure on " + compact(e.complex));
        }
    } else if (suite == "decomposition") {
        const auto check_fixture = [&](const SimplicialComplex& s, const SimplicialComplex& b,
                                       const SimplicialComplex& l, const std::string& name) {
            expect(verify_decomposition(s, b, l).all_passed(), "decomposition " + name);
        };
        check_fixture(SimplicialComplex::make({{"a", "b"}, {"c"}}),
                      SimplicialComplex::make({{"a", "b"}}), SimplicialComplex::make({{"c"}}),
                      "edge+point");
        check_fixture(boundary_simplex({"a", "b", "c"}),
                      SimplicialComplex::make({{"a", "b"}, {"a", "c"}}),
                      SimplicialComplex::make({{"b", "c"}}), "triangle boundary");
        check_fixture(
            SimplicialComplex::make({{"x", "a", "b"}, {"y", "a", "b"}, {"x", "y"}}),
            SimplicialComplex::make({{"x", "a", "b"}, {"y", "a", "b"}}),
            SimplicialComplex::make({{"x", "y"}}), "suspension-with-chord sphere");
    } else {
        throw UsageError("--suite must be duality, links, deletion or decomposition");
    }

    out << suite << ": " << checks << " checks, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"combinatorics of non-homogeneous balls and spheres"};
    app.name("nhtopo");
    app.require_subcommand(1);

    std::string file, tau_csv, ground_csv, simplex_csv, vertex, new_vertex;
    std::string kind = "sphere", coeff = "z", emit_dir, suite;
    bool with_trace = false, as_json = false, count_only = false;
    int max_steps = 0, dim = 0, hdim = -1, dim_max = 3, samples = 100;
    unsigned seed = 20240901u;

    auto* c_classify = app.add_subcommand("classify", "decide minimal NH-sphere / NH-ball");
    c_classify->add_option("file", file)->required();
    c_classify->add_flag("--trace", with_trace);
    c_classify->add_flag("--json", as_json);

    auto* c_dual = app.add_subcommand("dual", "Alexander dual (relative to --ground or --tau)");
    c_dual->add_option("file", file)->required();
    c_dual->add_option("--tau", tau_csv, "comma-separated fresh simplex for K^tau");
    c_dual->add_option("--ground", ground_csv, "comma-separated ground set for K^{*_V}");
    c_dual->add_flag("--json", as_json);

    auto* c_iterate = app.add_subcommand("iterate", "iterated Alexander duals");
    c_iterate->add_option("file", file)->required();
    c_iterate->add_option("--max-steps", max_steps);
    c_iterate->add_flag("--json", as_json);

    auto* c_homology = app.add_subcommand("homology", "reduced homology profile");
    c_homology->add_option("file", file)->required();
    c_homology->add_option("--coeff", coeff, "q, z or p:<prime>");
    c_homology->add_flag("--json", as_json);

    auto* c_census = app.add_subcommand("census", "minimal NH-spheres/balls per dimension");
    c_census->add_option("--kind", kind)->required();
    c_census->add_option("--dim", dim)->required();
    c_census->add_option("--hdim", hdim);
    c_census->add_flag("--count-only", count_only);
    c_census->add_option("--emit-dir", emit_dir);
    c_census->add_flag("--json", as_json);

    auto* c_nerve = app.add_subcommand("nerve", "nerve of the facets");
    c_nerve->add_option("file", file)->required();
    c_nerve->add_flag("--json", as_json);

    auto* c_link = app.add_subcommand("link", "link of a simplex");
    c_link->add_option("file", file)->required();
    c_link->add_option("--simplex", simplex_csv);
    c_link->add_flag("--json", as_json);

    auto* c_star = app.add_subcommand("star", "star of a simplex");
    c_star->add_option("file", file)->required();
    c_star->add_option("--simplex", simplex_csv);
    c_star->add_flag("--json", as_json);

    auto* c_delete = app.add_subcommand("delete", "deletion of a vertex");
    c_delete->add_option("file", file)->required();
    c_delete->add_option("--vertex", vertex)->required();
    c_delete->add_flag("--json", as_json);

    auto* c_starring = app.add_subcommand("starring", "elementary starring (tau, new vertex)");
    c_starring->add_option("file", file)->required();
    c_starring->add_option("--simplex", simplex_csv)->required();
    c_starring->add_option("--new-vertex", new_vertex)->required();
    c_starring->add_flag("--json", as_json);

    auto* c_verify = app.add_subcommand("verify", "built-in property suites");
    c_verify->add_option("--suite", suite)->required();
    c_verify->add_option("--dim-max", dim_max);
    c_verify->add_option("--samples", samples);
    c_verify->add_option("--seed", seed);

    std::vector<std::string> argv{"nhtopo"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::vector<const char*> cargv;
    for (const std::string& a : argv) cargv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    // Input documents are loaded first; problems with them are usage errors.
    SimplicialComplex input;
    try {
        if (!file.empty()) input = load_document(file);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    const auto emit = [&](const SimplicialComplex& k) {
        if (as_json)
            out << complex_to_json(k).dump(2) << '\n';
        else
            out << serialize_complex(k);
        return 0;
    };

    try {
        if (*c_classify) return cmd_classify(input, with_trace, as_json, out);
        if (*c_dual) {
            if (!tau_csv.empty() && !ground_csv.empty())
                throw UsageError("--tau and --ground are mutually exclusive");
            if (!tau_csv.empty()) return emit(dual_rel_simplex(input, split_vertices(tau_csv)));
            if (!ground_csv.empty())
                return emit(alexander_dual(input, split_vertices(ground_csv)));
            return emit(alexander_dual(input, input.ground()));
        }
        if (*c_iterate) return cmd_iterate(input, max_steps, as_json, out);
        if (*c_homology) return cmd_homology(input, coeff, as_json, out);
        if (*c_census) return cmd_census(kind, dim, hdim, count_only, emit_dir, as_json, out);
        if (*c_nerve) return emit(nerve(input));
        if (*c_link) return emit(link(input, split_vertices(simplex_csv)));
        if (*c_star) return emit(star(input, split_vertices(simplex_csv)));
        if (*c_delete) return emit(deletion(input, vertex));
        if (*c_starring)
            return emit(elementary_starring(input, split_vertices(simplex_csv), new_vertex));
        if (*c_verify) return cmd_verify(suite, dim_max, samples, seed, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 2; // unreachable with require_subcommand(1)
}

} // namespace nhtopo
