#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "l1top/io.hpp"

using namespace l1top;
using io::Json;

namespace
{

enum ExitCode
{
    exit_ok = 0,
    exit_usage = 2,
    exit_truncated = 3,
    exit_domain = 4,
};

struct Failure
{
    int code;
    std::string message;
    Json details = Json::object();
};

[[noreturn]] void fail(int code, std::string message, Json details = Json::object())
{
    throw Failure{code, std::move(message), std::move(details)};
}

struct Output
{
    std::string path;
    std::string format = "json";

    void emit(const std::string& text) const
    {
        if (path.empty())
        {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out)
            fail(exit_usage, "cannot write '" + path + "'");
        out << text;
    }

    void emit(const Json& j) const { emit(j.dump(2) + "\n"); }
};

unsigned thread_cap()
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("L1TOP_THREADS"))
    {
        long cap = 0;
        try
        {
            std::size_t used = 0;
            cap = std::stol(env, &used);
            if (env[used] != '\0')
                cap = 0;
        }
        catch (const std::exception&)
        {
        }
        if (cap < 1)
            fail(exit_usage, std::string("L1TOP_THREADS must be a positive integer, got '") + env + "'");
        n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return n;
}

// Inputs

Json load(const std::string& path)
{
    try
    {
        return io::read_json_file(path);
    }
    catch (const nlohmann::json::parse_error& e)
    {
        fail(exit_usage, "malformed JSON in '" + path + "'", Json{{"parse_error", e.what()}, {"byte", e.byte}});
    }
    catch (const std::runtime_error& e)
    {
        fail(exit_usage, e.what());
    }
}

const Json& complex_part(const Json& j)
{
    return j.is_object() && j.contains("complex") ? j.at("complex") : j;
}

ComplexPtr load_complex(const std::string& path)
{
    const Json j = load(path);
    auto complex = std::make_shared<const DeltaComplex>(io::complex_from_json(complex_part(j)));
    const ValidationReport report = validate_complex(*complex);
    if (!report.ok())
        fail(exit_domain, "invalid complex in '" + path + "'", Json{{"violations", io::to_json(report)}});
    return complex;
}

// A chain file, a bundle with a "cycles" object, or (when `path` is empty)
// the complex bundle itself.
IntChain load_cycle(const std::string& complex_path, const std::string& path, const std::string& name,
                    const ComplexPtr& complex)
{
    const Json j = load(path.empty() ? complex_path : path);
    const Json* chain_json = &j;
    if (j.is_object() && j.contains("cycles"))
    {
        const Json& cycles = j.at("cycles");
        if (!cycles.is_object() || cycles.empty())
            fail(exit_usage, "bundle has no cycles");
        std::string key = name;
        if (key.empty())
            key = cycles.contains("fundamental") ? "fundamental" : cycles.begin().key();
        if (!cycles.contains(key))
            fail(exit_usage, "bundle has no cycle named '" + key + "'");
        chain_json = &cycles.at(key);
    }
    else if (path.empty())
        fail(exit_usage, "no cycle given and '" + complex_path + "' is not a bundle");

    const Chain c = io::chain_from_json(*chain_json, complex);
    IntChain z;
    try
    {
        z = to_integer_chain(c);
    }
    catch (const std::domain_error& e)
    {
        fail(exit_domain, e.what());
    }
    if (z.degree() > 0 && !is_cycle(z))
        fail(exit_domain, "input chain is not a cycle", Json{{"boundary", io::to_json(boundary(z))}});
    return z;
}

struct ClassInput
{
    std::string complex_path;
    std::string cycle_path;
    std::string cycle_name;

    void add_to(CLI::App* cmd)
    {
        cmd->add_option("complex", complex_path, "complex JSON or corpus bundle")->required();
        cmd->add_option("cycle", cycle_path, "chain JSON or bundle (defaults to the complex bundle)");
        cmd->add_option("--cycle-name", cycle_name, "cycle to take from a bundle");
    }

    HomologyClass load_class() const
    {
        const ComplexPtr complex = load_complex(complex_path);
        const IntChain z = load_cycle(complex_path, cycle_path, cycle_name, complex);
        return class_of(homology(complex, z.degree()), z);
    }

    UnitChain load_unit(bool expand) const
    {
        const ComplexPtr complex = load_complex(complex_path);
        const IntChain z = load_cycle(complex_path, cycle_path, cycle_name, complex);
        if (expand)
            return expand_to_unit(z);
        try
        {
            return as_unit_chain(z);
        }
        catch (const std::domain_error& e)
        {
            fail(exit_domain, std::string(e.what()) + " (use --expand)");
        }
    }
};

// homology

void cmd_homology(const std::string& path, std::optional<int> degree, const Output& out)
{
    const ComplexPtr complex = load_complex(path);
    if (degree)
    {
        if (*degree < 0 || *degree > complex->dims())
            fail(exit_usage, "degree " + std::to_string(*degree) + " is outside 0.." + std::to_string(complex->dims()));
        out.emit(io::to_json(*homology(complex, *degree)));
        return;
    }
    Json all = Json::array();
    for (int n = 0; n <= complex->dims(); ++n)
        all.push_back(io::to_json(*homology(complex, n)));
    out.emit(Json{{"groups", all}});
}

// norm

struct NormArgs
{
    std::string mode = "rational";
    Index window = 4;
    long box = 2;
    Index budget = 20000;
    bool probe = false;
};

int cmd_norm(const ClassInput& input, const NormArgs& args, const Output& out)
{
    if (out.format == "csv" && args.mode != "stable")
        fail(exit_usage, "csv output is only available for --mode stable");
    const HomologyClass a = input.load_class();
    IntegralOptions integral{BigInt(args.box), args.budget};

    if (args.mode == "rational")
    {
        out.emit(io::to_json(rational_norm(a, RationalOptions{args.probe})));
        return exit_ok;
    }
    if (args.mode == "integral")
    {
        const NormReport r = integral_norm(a, integral);
        out.emit(io::to_json(r));
        return r.interval.status == SearchStatus::exact ? exit_ok : exit_truncated;
    }
    SequenceOptions options{integral, true, thread_cap()};
    const StableNorm s = stable_norm(a, args.window, options);
    if (out.format == "csv")
        out.emit(io::sequence_csv(s.sequence));
    else
        out.emit(io::to_json(s));
    return s.sequence.any_truncated() ? exit_truncated : exit_ok;
}

// combtype

Json cell_counts(const DeltaComplex& k)
{
    return Json(k.cell_counts());
}

std::string space_size(Index k, int n)
{
    const Index slots = k * (n + 1);
    BigInt size = 1;
    size <<= static_cast<unsigned>(slots * slots);
    return to_string(size);
}

Json realization_json(const GluedComplex& y, const SignVector& eps)
{
    const CanonicalChain z = canonical_chain(y, eps);
    Json j;
    j["cell_counts"] = cell_counts(*y.complex);
    j["complex"] = io::to_json(*y.complex);
    j["tau"] = y.tau;
    j["chain"] = io::to_json(z.chain);
    j["is_cycle"] = z.is_cycle;
    return j;
}

void cmd_extract(const ClassInput& input, bool expand, const Output& out)
{
    const UnitChain c = input.load_unit(expand);
    const auto [t, eps] = extract_type(c);
    Json j;
    j["type"] = io::to_json(t, eps);
    j["cells"] = c.cells;
    j["choices"] = space_size(t.k(), t.n());
    out.emit(j);
}

void cmd_realize(const std::string& path, const Output& out)
{
    const auto [t, eps] = io::type_from_json(load(path));
    const GluedComplex y = realize(t);
    Json j;
    j["type"] = io::to_json(t, eps);
    j["realization"] = realization_json(y, eps);
    out.emit(j);
}

int cmd_roundtrip(const ClassInput& input, bool expand, const Output& out)
{
    const UnitChain c = input.load_unit(expand);
    const auto [t, eps] = extract_type(c);
    const GluedComplex y = realize(t);
    const CanonicalChain z = canonical_chain(y, eps);
    const CellMap f = induced_map(c, y);
    const bool map_valid = validate_cell_map(f).ok();

    const GroupPtr target = homology(c.complex, c.degree);
    const HomologyClass original = class_of(target, c.to_chain());
    bool equal = false;
    if (z.is_cycle && map_valid)
        equal = classes_equal(class_of(target, push_chain(f, z.chain)), original);

    Json j;
    j["type"] = io::to_json(t, eps);
    j["realized_cells"] = cell_counts(*y.complex);
    j["canonical_is_cycle"] = z.is_cycle;
    j["map_valid"] = map_valid;
    j["verdict"] = equal ? "equal" : "different";
    out.emit(j);
    return equal ? exit_ok : exit_domain;
}

void cmd_random(Index k, int n, std::uint64_t seed, const Output& out)
{
    if (k < 1 || n < 1)
        fail(exit_usage, "random types need k >= 1 and n >= 1");
    std::mt19937_64 rng(seed);
    const CombinatorialType t = random_type(k, n, rng);
    std::bernoulli_distribution coin(0.5);
    SignVector eps(k);
    for (auto& e : eps)
        e = coin(rng) ? 1 : -1;
    out.emit(io::to_json(t, eps));
}

// flexprobe

struct FlexArgs
{
    std::optional<Index> torsion;
    std::optional<Index> sequence;
    std::string family;
    std::string cover;
    int max_degree = 3;
    long box = 2;
    Index budget = 20000;
};

std::vector<FamilyMember> cover_family(const std::string& kind, int max_degree)
{
    std::vector<FamilyMember> family;
    for (int d = 1; d <= max_degree; ++d)
    {
        CoverEntry cover = kind == "circle" ? circle_cover(d) : torus_cover(d);
        const IntChain& z = cover.source.cycles.at("fundamental");
        family.push_back({class_of(homology(cover.source.complex, z.degree()), z), cover.map});
    }
    return family;
}

int cmd_flexprobe(const ClassInput& input, const FlexArgs& args, const Output& out)
{
    const int modes = int(args.torsion.has_value()) + int(args.sequence.has_value()) + int(!args.family.empty())
                      + int(!args.cover.empty());
    if (modes != 1)
        fail(exit_usage, "choose exactly one of --torsion, --sequence, --family, --cover-family");
    const HomologyClass alpha = input.load_class();

    if (args.torsion)
    {
        try
        {
            out.emit(io::to_json(torsion_flexibility(alpha, *args.torsion)));
        }
        catch (const std::domain_error& e)
        {
            fail(exit_domain, e.what());
        }
        return exit_ok;
    }
    if (args.sequence)
    {
        SequenceOptions options{IntegralOptions{BigInt(args.box), args.budget}, true, thread_cap()};
        const FlexReport r = weak_flex_evidence(alpha, *args.sequence, options);
        out.emit(io::to_json(r));
        return r.sequence->any_truncated() ? exit_truncated : exit_ok;
    }

    std::vector<FamilyMember> family;
    if (!args.family.empty())
    {
        const Json j = load(args.family);
        if (!j.is_object() || !j.contains("members") || !j.at("members").is_array())
            fail(exit_usage, "family file needs a 'members' array");
        for (const Json& m : j.at("members"))
        {
            if (!m.is_object() || !m.contains("complex") || !m.contains("cycle") || !m.contains("map"))
                fail(exit_usage, "family members need 'complex', 'cycle' and 'map'");
            auto source = std::make_shared<const DeltaComplex>(io::complex_from_json(m.at("complex")));
            const ValidationReport report = validate_complex(*source);
            if (!report.ok())
                fail(exit_domain, "invalid member complex", Json{{"violations", io::to_json(report)}});
            const IntChain z = to_integer_chain(io::chain_from_json(m.at("cycle"), source));
            if (!is_cycle(z))
                fail(exit_domain, "member chain is not a cycle", Json{{"boundary", io::to_json(boundary(z))}});
            CellMap f = io::cell_map_from_json(m.at("map"), source, alpha.group()->complex());
            family.push_back({class_of(homology(source, z.degree()), z), std::move(f)});
        }
    }
    else
    {
        if (args.cover != "circle" && args.cover != "torus")
            fail(exit_usage, "--cover-family must be circle or torus");
        if (args.max_degree < 1)
            fail(exit_usage, "--max-degree must be positive");
        family = cover_family(args.cover, args.max_degree);
    }
    if (family.empty())
        fail(exit_usage, "empty family");
    out.emit(io::to_json(degree_set(family, alpha)));
    return exit_ok;
}

// corpus

Json cover_json(const CoverEntry& cover)
{
    Json j = io::to_json(cover.source);
    j["map"] = io::to_json(cover.map);
    j["base"] = io::to_json(*cover.map.target);
    j["degree"] = cover.degree;
    return j;
}

void cmd_corpus_make(const std::string& name, std::optional<int> param, const std::string& emit,
                     const std::string& cycle_name, const Output& out)
{
    Json bundle;
    try
    {
        if (name == "sphere")
            bundle = io::to_json(make_sphere(param.value_or(2)));
        else if (name == "circle")
            bundle = io::to_json(make_circle(param.value_or(1)));
        else if (name == "torus")
            bundle = io::to_json(make_torus());
        else if (name == "rp2")
            bundle = io::to_json(make_rp2());
        else if (name == "surface")
            bundle = io::to_json(make_surface(param.value_or(2)));
        else if (name == "circle-cover")
            bundle = cover_json(circle_cover(param.value_or(2)));
        else if (name == "torus-cover")
            bundle = cover_json(torus_cover(param.value_or(2)));
        else
            fail(exit_usage, "unknown corpus entry '" + name + "'");
    }
    catch (const std::invalid_argument& e)
    {
        fail(exit_usage, e.what());
    }

    if (emit == "bundle")
        out.emit(bundle);
    else if (emit == "complex")
        out.emit(bundle.at("complex"));
    else if (emit == "cycle")
    {
        const Json& cycles = bundle.at("cycles");
        std::string key = cycle_name;
        if (key.empty())
            key = cycles.contains("fundamental") ? "fundamental" : cycles.begin().key();
        if (!cycles.contains(key))
            fail(exit_usage, "'" + name + "' has no cycle named '" + key + "'");
        out.emit(cycles.at(key));
    }
    else if (emit == "map")
    {
        if (!bundle.contains("map"))
            fail(exit_usage, "'" + name + "' is not a cover");
        out.emit(bundle.at("map"));
    }
    else
        fail(exit_usage, "--emit must be bundle, complex, cycle or map");
}

void report_failure(int code, const std::string& message, const Json& details = Json::object())
{
    Json j;
    j["error"] = message;
    j["code"] = code;
    for (const auto& [key, value] : details.items())
        j[key] = value;
    std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact l1 semi-norms on homology of Delta-complexes"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    app.add_option("-o,--output", out.path, "write the report here instead of stdout");
    app.add_option("--format", out.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    std::string complex_path;
    std::optional<int> degree;
    auto* homology_cmd = app.add_subcommand("homology", "integral homology groups");
    homology_cmd->add_option("complex", complex_path, "complex JSON or corpus bundle")->required();
    homology_cmd->add_option("-n,--degree", degree, "degree (all degrees if omitted)");

    ClassInput norm_input;
    NormArgs norm_args;
    auto* norm_cmd = app.add_subcommand("norm", "rational, integral or stable l1 norm of a class");
    norm_input.add_to(norm_cmd);
    norm_cmd->add_option("--mode", norm_args.mode, "default rational")->check(CLI::IsMember({"rational", "integral", "stable"}));
    norm_cmd->add_option("-D", norm_args.window, "stable norm window")->check(CLI::PositiveNumber);
    norm_cmd->add_option("--box", norm_args.box, "integral search box")->check(CLI::NonNegativeNumber);
    norm_cmd->add_option("--budget", norm_args.budget, "branch-and-bound node budget")->check(CLI::PositiveNumber);
    norm_cmd->add_flag("--degenerate-probe", norm_args.probe, "also solve with degenerate simplices adjoined");

    auto* comb_cmd = app.add_subcommand("combtype", "combinatorial types of unit cycles");
    comb_cmd->require_subcommand(1);
    comb_cmd->fallthrough();
    ClassInput extract_input, roundtrip_input;
    bool expand = false;
    auto* extract_cmd = comb_cmd->add_subcommand("extract", "type and signs of a unit cycle");
    extract_input.add_to(extract_cmd);
    extract_cmd->add_flag("--expand", expand, "split coefficients into unit slots");
    std::string type_path;
    auto* realize_cmd = comb_cmd->add_subcommand("realize", "glue the simplices of a type");
    realize_cmd->add_option("type", type_path, "type JSON")->required();
    auto* roundtrip_cmd = comb_cmd->add_subcommand("roundtrip", "extract, realize and push back");
    roundtrip_input.add_to(roundtrip_cmd);
    roundtrip_cmd->add_flag("--expand", expand, "split coefficients into unit slots");
    Index random_k = 2;
    int random_n = 1;
    std::uint64_t seed = 0;
    auto* random_cmd = comb_cmd->add_subcommand("random", "draw a random type");
    random_cmd->add_option("-k", random_k)->check(CLI::Range(1, 64));
    random_cmd->add_option("-n,--degree", random_n)->check(CLI::Range(1, 20));
    random_cmd->add_option("--seed", seed);

    ClassInput flex_input;
    FlexArgs flex_args;
    auto* flex_cmd = app.add_subcommand("flexprobe", "degrees of maps onto a class");
    flex_input.add_to(flex_cmd);
    flex_cmd->add_option("--torsion", flex_args.torsion, "identity-map degrees 1 + k m, k <= K");
    flex_cmd->add_option("--sequence", flex_args.sequence, "integral norms of d a for d <= D")
        ->check(CLI::PositiveNumber);
    flex_cmd->add_option("--family", flex_args.family, "JSON file of source classes and maps");
    flex_cmd->add_option("--cover-family", flex_args.cover, "circle or torus covers");
    flex_cmd->add_option("--max-degree", flex_args.max_degree, "largest cover degree");
    flex_cmd->add_option("--box", flex_args.box, "integral search box for the sequence")->check(CLI::NonNegativeNumber);
    flex_cmd->add_option("--budget", flex_args.budget, "branch-and-bound node budget")->check(CLI::PositiveNumber);

    auto* corpus_cmd = app.add_subcommand("corpus", "built-in complexes");
    corpus_cmd->require_subcommand(1);
    corpus_cmd->fallthrough();
    std::string corpus_name, emit = "bundle", corpus_cycle;
    std::optional<int> param;
    auto* make_cmd = corpus_cmd->add_subcommand("make", "emit a corpus entry");
    make_cmd->add_option("name", corpus_name, "sphere|circle|torus|rp2|surface|circle-cover|torus-cover")
        ->required();
    make_cmd->add_option("--param", param, "dimension, length, genus or cover degree");
    make_cmd->add_option("--emit", emit, "bundle, complex, cycle or map");
    make_cmd->add_option("--cycle-name", corpus_cycle);
    auto* list_cmd = corpus_cmd->add_subcommand("list", "names of corpus entries");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        report_failure(exit_usage, e.what());
        return exit_usage;
    }

    try
    {
        if (*homology_cmd)
            cmd_homology(complex_path, degree, out);
        else if (*norm_cmd)
            return cmd_norm(norm_input, norm_args, out);
        else if (*extract_cmd)
            cmd_extract(extract_input, expand, out);
        else if (*realize_cmd)
            cmd_realize(type_path, out);
        else if (*roundtrip_cmd)
            return cmd_roundtrip(roundtrip_input, expand, out);
        else if (*random_cmd)
            cmd_random(random_k, random_n, seed, out);
        else if (*flex_cmd)
            return cmd_flexprobe(flex_input, flex_args, out);
        else if (*make_cmd)
            cmd_corpus_make(corpus_name, param, emit, corpus_cycle, out);
        else if (*list_cmd)
            out.emit(Json{"sphere", "circle", "torus", "rp2", "surface", "circle-cover", "torus-cover"});
        return exit_ok;
    }
    catch (const Failure& f)
    {
        report_failure(f.code, f.message, f.details);
        return f.code;
    }
    catch (const io::FormatError& e)
    {
        report_failure(exit_usage, e.what());
        return exit_usage;
    }
    catch (const nlohmann::json::exception& e)
    {
        report_failure(exit_usage, e.what());
        return exit_usage;
    }
    catch (const std::domain_error& e)
    {
        report_failure(exit_domain, e.what());
        return exit_domain;
    }
    catch (const std::invalid_argument& e)
    {
        report_failure(exit_usage, e.what());
        return exit_usage;
    }
    catch (const std::exception& e)
    {
        report_failure(1, e.what());
        return 1;
    }
}
