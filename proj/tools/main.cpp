// supergraph: build super graphs on D_2n, Q_4n and SD_8n, compute exact
// Laplacian spectra and check them against the known closed forms.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "supergraph/report.hpp"

using namespace supergraph;

namespace {

enum Exit { Ok = 0, Mismatch = 1, BadInput = 2, NotLIntegral = 3, IoFailure = 4 };

struct Selector {
    std::string kind;
    std::string base;
    std::string relation;
    bool literal = false;

    void attach(CLI::App* cmd)
    {
        auto* k = cmd->add_option("--kind", kind, "csep or cscom");
        auto* b = cmd->add_option("--base", base, "power, enhanced or commuting");
        auto* r = cmd->add_option("--relation", relation, "equality, conjugacy or order");
        k->excludes(b)->excludes(r);
        cmd->add_flag("--literal", literal, "only link same-class vertices joined by a base edge");
    }

    GraphSelector resolve() const
    {
        GraphSelector s;
        if (!kind.empty()) {
            s = GraphSelector::of(parse_graph_kind(kind));
        } else {
            if (base.empty() || relation.empty()) throw CLI::ValidationError("give --kind, or both --base and --relation");
            s.base = parse_base_graph(base);
            s.relation = parse_relation(relation);
        }
        s.class_cliques = !literal;
        return s;
    }
};

std::pair<unsigned, unsigned> parse_range(const std::string& text)
{
    auto number = [&](std::string_view part) {
        unsigned v = 0;
        const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || end != part.data() + part.size())
            throw CLI::ValidationError("--range", "expected a..b, got '" + text + "'");
        return v;
    };
    const std::string_view view(text);
    const auto dots = view.find("..");
    if (dots == std::string_view::npos) {
        const unsigned v = number(view);
        return {v, v};
    }
    return {number(view.substr(0, dots)), number(view.substr(dots + 2))};
}

void emit(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out.flush()) throw std::runtime_error("write to " + path + " failed");
}

int default_threads()
{
    if (const char* env = std::getenv("SUPERGRAPH_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return thread_count();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Laplacian spectra of super graphs on finite groups"};
    app.require_subcommand(1);
    int threads = default_threads();
    app.add_option("--threads", threads, "worker threads (default $SUPERGRAPH_THREADS)")
        ->check(CLI::PositiveNumber);

    std::string family;
    unsigned n = 0;
    std::string out_path;
    std::string format;

    auto* group_cmd = app.add_subcommand("group", "print order, center, classes and maximal cyclic subgroups");
    bool group_json_flag = false;
    group_cmd->add_option("--family", family, "d2n, q4n, sd8n or cyclic")->required();
    group_cmd->add_option("--n", n, "family parameter")->required();
    group_cmd->add_flag("--json", group_json_flag, "JSON instead of text");

    auto* spectrum_cmd = app.add_subcommand("spectrum", "exact Laplacian spectrum and spanning-tree count");
    Selector spectrum_sel;
    spectrum_sel.attach(spectrum_cmd);
    spectrum_cmd->add_option("--family", family)->required();
    spectrum_cmd->add_option("--n", n)->required();
    std::string spectrum_format = "json";
    spectrum_cmd->add_option("--format", spectrum_format)->check(CLI::IsMember({"json", "text"}));
    spectrum_cmd->add_option("--out", out_path);

    auto* verify_cmd = app.add_subcommand("verify", "compare computed spectra with the closed forms");
    std::string verify_kind, range_text, csv_path;
    bool strict = false;
    std::size_t nullity_limit = VerifyOptions{}.nullity_limit;
    verify_cmd->add_option("--kind", verify_kind)->required();
    verify_cmd->add_option("--family", family)->required();
    verify_cmd->add_option("--range", range_text, "a..b")->required();
    verify_cmd->add_flag("--strict", strict, "also fail on theorem-polynomial mismatches");
    verify_cmd->add_option("--out", out_path, "JSON report path");
    verify_cmd->add_option("--csv", csv_path, "CSV rows path");
    verify_cmd->add_option("--nullity-limit", nullity_limit, "largest N cross-checked by nullities");

    auto* sweep_cmd = app.add_subcommand("sweep", "CSV over a range of n");
    std::string sweep_kind, sweep_range;
    sweep_cmd->add_option("--kind", sweep_kind)->required();
    sweep_cmd->add_option("--family", family)->required();
    sweep_cmd->add_option("--range", sweep_range)->required();
    sweep_cmd->add_option("--out", out_path);

    auto* export_cmd = app.add_subcommand("export", "write a graph as DOT, edge list or JSON");
    Selector export_sel;
    export_sel.attach(export_cmd);
    export_cmd->add_option("--family", family)->required();
    export_cmd->add_option("--n", n)->required();
    format = "dot";
    export_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "edgelist", "json"}));
    export_cmd->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);
    set_thread_count(threads);

    try {
        if (*group_cmd) {
            const GroupTable g = build_group(parse_family(family), n);
            emit(out_path, group_json_flag ? group_json(g).dump(2) + "\n" : group_text(g));
            return Ok;
        }
        if (*spectrum_cmd) {
            const SpectrumArtifact a = spectrum_artifact(parse_family(family), n, spectrum_sel.resolve());
            if (spectrum_format == "json") {
                emit(out_path, to_json(a).dump(2) + "\n");
            } else {
                std::ostringstream text;
                text << a.graph << " on " << a.family << " n=" << a.n << ": N=" << a.order << " |E|=" << a.edges
                     << "\nspectrum " << a.spectrum.compact() << "\nchar poly " << a.char_poly_factored
                     << "\ntrees " << a.trees.get_str() << "\n";
                emit(out_path, text.str());
            }
            if (!a.integral) {
                std::cerr << "not L-integral: residual factor " << a.residual << "\n";
                return NotLIntegral;
            }
            return Ok;
        }
        if (*verify_cmd) {
            const auto [first, last] = parse_range(range_text);
            VerifyOptions options;
            options.nullity_limit = nullity_limit;
            const VerificationReport r = verify(parse_graph_kind(verify_kind), parse_family(family), first, last, options);
            std::cout << verification_table(r);
            if (!out_path.empty()) emit(out_path, to_json(r).dump(2) + "\n");
            if (!csv_path.empty()) emit(csv_path, csv_header() + csv_rows(r));
            if (!r.all_adjudicated()) return Mismatch;
            if (strict && r.discrepancy_count() > 0) {
                std::cerr << "strict: " << r.discrepancy_count() << " theorem/corollary variant mismatch(es)\n";
                for (const auto& c : r.cases)
                    for (const auto* v : c.mismatched_variants())
                        std::cerr << "  n=" << c.n << " " << source_name(v->prediction.source) << " stated degree "
                                  << v->prediction.stated_degree() << " (N=" << c.order << ")\n";
                return Mismatch;
            }
            return Ok;
        }
        if (*sweep_cmd) {
            const auto [first, last] = parse_range(sweep_range);
            const VerificationReport r = verify(parse_graph_kind(sweep_kind), parse_family(family), first, last);
            emit(out_path, csv_header() + csv_rows(r));
            return r.all_adjudicated() ? Ok : Mismatch;
        }
        if (*export_cmd) {
            auto g = std::make_shared<const GroupTable>(build_group(parse_family(family), n));
            const GraphSelector sel = export_sel.resolve();
            const SimpleGraph graph = sel.build(g);
            std::string text;
            if (format == "dot")
                text = export_dot(graph, sel.name() + "_" + family + "_" + std::to_string(n));
            else if (format == "edgelist")
                text = export_edgelist(graph);
            else
                text = export_json(graph).dump(2) + "\n";
            emit(out_path, text);
            return Ok;
        }
    } catch (const CLI::Error& e) {
        app.exit(e);
        return BadInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadInput;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return IoFailure;
    }
    return Ok;
}
