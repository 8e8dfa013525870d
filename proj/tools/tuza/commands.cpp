#include "commands.hpp"

#include "tuza/errors.hpp"
#include "tuza/io.hpp"
#include "tuza/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

namespace tuza::cli {

namespace {

using json = nlohmann::ordered_json;

Graph load_graph(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot read graph file '" + path + "'");
    return read_edge_list(in);
}

std::string read_text(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot read file '" + path + "'");
    std::stringstream text;
    text << in.rdbuf();
    return text.str();
}

const std::map<std::string, GraphClass> class_names{
    {"auto", GraphClass::automatic},
    {"threshold", GraphClass::threshold},
    {"cochain", GraphClass::cochain},
};

std::string witness_note(const ClassMembershipError& e)
{
    return e.witness() ? " (witness vertex " + std::to_string(*e.witness()) + ")" : "";
}

CoChainRepr balanced_cochain(const Graph& g)
{
    auto repr = recognize_cochain(g);
    if (!repr.even_balanced())
        throw ClassMembershipError("co-chain but not even balanced (|K1| = " + std::to_string(repr.k1.size()) +
                                   ", |K2| = " + std::to_string(repr.k2.size()) + ")");
    return repr;
}

}  // namespace

std::uint64_t default_budget()
{
    const char* env = std::getenv("TUZA_ORACLE_BUDGET");
    if (env == nullptr || *env == '\0')
        return default_node_budget;
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(env, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || env[used] != '\0')
        throw InputError(std::string("TUZA_ORACLE_BUDGET is not a node count: '") + env + "'");
    return value;
}

Classified classify(const FamilyItem& item, GraphClass wanted)
{
    if (wanted == GraphClass::automatic) {
        if (item.threshold)
            return {"threshold", normalize_threshold(*item.threshold), std::nullopt};
        if (item.cochain)
            return {"cochain", std::nullopt, *item.cochain};
    }
    if (wanted == GraphClass::threshold)
        return {"threshold", normalize_threshold(recognize_threshold(item.g)), std::nullopt};
    if (wanted == GraphClass::cochain) {
        if (item.cochain)
            return {"cochain", std::nullopt, *item.cochain};
        return {"cochain", std::nullopt, balanced_cochain(item.g)};
    }

    try {
        return {"threshold", normalize_threshold(recognize_threshold(item.g)), std::nullopt};
    } catch (const ClassMembershipError& not_threshold) {
        try {
            return {"cochain", std::nullopt, balanced_cochain(item.g)};
        } catch (const ClassMembershipError& not_cochain) {
            throw ClassMembershipError(std::string("not threshold: ") + not_threshold.what() +
                                           witness_note(not_threshold) + "; not an even balanced co-chain graph: " +
                                           not_cochain.what(),
                                       not_threshold.witness());
        }
    }
}

ConstructionReport construct(const Classified& c, std::uint64_t budget)
{
    if (c.threshold)
        return threshold_construct(*c.threshold);
    return cochain_construct(*c.cochain, budget);
}

SweepRow sweep_row(const FamilyItem& item, const SweepOptions& options)
{
    SweepRow row;
    row.graph_id = item.id;
    row.n = item.g.size();
    ConstructionReport report;
    try {
        const auto c = classify(item, options.wanted);
        row.graph_class = c.name;
        report = construct(c, options.budget);
    } catch (const ClassMembershipError&) {
        row.case_label = "CLASS_ERROR";
        row.class_failure = true;
        return row;
    } catch (const PreconditionError&) {
        row.case_label = "CLASS_ERROR";
        row.class_failure = true;
        return row;
    } catch (const InexactError&) {
        row.case_label = std::string(to_string(CaseLabel::ORACLE_FALLBACK));
        row.inexact = true;
        return row;
    }
    row.case_label = std::string(to_string(report.case_label));
    row.pack_size = static_cast<long long>(report.packing.size());
    row.hit_size = static_cast<long long>(report.hitting.size());
    row.pass = verify_certificates(item.g, report).pass && report.ratio_ok && report.flags.empty();

    long long num = row.hit_size;
    long long den = row.pack_size;
    if (row.n < options.exact_below) {
        const auto mu = exact_mu(item.g, options.budget);
        const auto tau = exact_tau(item.g, options.budget, report.hitting);
        row.mu = mu.value;
        row.tau = tau.value;
        row.exact = mu.exact && tau.exact;
        row.inexact = !row.exact;
        if (row.exact) {
            row.pass = row.pass && tau.value <= 2 * mu.value && row.pack_size <= mu.value && row.hit_size >= tau.value;
            num = tau.value;
            den = mu.value;
        }
    }
    if (num == 0) {
        row.ratio_num = 0;
        row.ratio_den = 1;
    } else {
        const auto d = den == 0 ? num : std::gcd(num, den);
        row.ratio_num = num / d;
        row.ratio_den = den / d;
    }
    return row;
}

std::string to_csv(const SweepRow& row)
{
    auto opt = [](const std::optional<long long>& v) { return v ? std::to_string(*v) : std::string(); };
    std::string out = row.graph_id;
    for (const auto& field : {std::to_string(row.n), row.graph_class, row.case_label, std::to_string(row.pack_size),
                              std::to_string(row.hit_size), opt(row.mu), opt(row.tau),
                              std::string(row.exact ? "true" : "false"), std::to_string(row.ratio_num),
                              std::to_string(row.ratio_den), std::string(row.pass ? "true" : "false")})
        out += "," + field;
    return out;
}

std::vector<SweepRow> run_sweep(const Family& family, const SweepOptions& options, int jobs)
{
    std::vector<SweepRow> rows(family.count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto worker = [&] {
        for (auto i = next++; i < family.count; i = next++) {
            try {
                rows[i] = sweep_row(family.item(i), options);
            } catch (...) {
                const std::lock_guard lock(failure_lock);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    const auto workers = static_cast<std::size_t>(std::clamp(jobs, 1, 256));
    if (workers == 1 || family.count < 2) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < std::min(workers, family.count); ++w)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);
    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) { return a.graph_id < b.graph_id; });
    return rows;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Triangle packings and hittings for threshold and co-chain graphs", "tuza"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "tuza 0.1.0");

    std::string family_arg;
    std::string graph_path;
    std::string report_path;
    std::string out_dir = ".";
    std::string out_path;
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> budget_arg;
    GraphClass wanted = GraphClass::automatic;
    int exact_below = 0;
    int jobs = 1;
    bool want_mu = false;
    bool want_tau = false;
    bool allow_inexact = false;

    auto* gen = app.add_subcommand("gen", "Write the graphs of a family as edge lists plus manifest.json");
    gen->add_option("family", family_arg, "Family descriptor")->required();
    gen->add_option("--seed", seed, "Seed for random families");
    gen->add_option("--out-dir", out_dir, "Output directory")->capture_default_str();

    auto add_class = [&](CLI::App* cmd) {
        cmd->add_option("--class", wanted, "Graph class: auto, threshold or cochain")
            ->transform(CLI::CheckedTransformer(class_names, CLI::ignore_case));
    };
    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--budget", budget_arg, "Oracle node budget (default: TUZA_ORACLE_BUDGET or 1e8)");
    };

    auto* pack = app.add_subcommand("pack", "Construct packing and hitting certificates for a graph file");
    pack->add_option("graph", graph_path, "Edge-list file")->required();
    add_class(pack);
    add_budget(pack);
    auto* hit = app.add_subcommand("hit", "Same certificates as pack");
    hit->add_option("graph", graph_path, "Edge-list file")->required();
    add_class(hit);
    add_budget(hit);

    auto* verify = app.add_subcommand("verify", "Check a certificate report against a graph");
    verify->add_option("graph", graph_path, "Edge-list file")->required();
    verify->add_option("report", report_path, "Report JSON from pack or hit")->required();

    auto* oracle = app.add_subcommand("oracle", "Exact mu or tau of a graph file");
    oracle->add_option("graph", graph_path, "Edge-list file")->required();
    auto* mu_flag = oracle->add_flag("--mu", want_mu, "Maximum triangle packing");
    oracle->add_flag("--tau", want_tau, "Minimum triangle hitting")->excludes(mu_flag);
    add_budget(oracle);
    oracle->add_flag("--allow-inexact", allow_inexact, "Exit 0 even when the budget runs out");

    auto* sweep = app.add_subcommand("sweep", "Construct, verify and optionally solve every graph of a family");
    sweep->add_option("family", family_arg, "Family descriptor")->required();
    sweep->add_option("--exact-below", exact_below, "Run the exact oracle on graphs with fewer vertices");
    sweep->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
    sweep->add_option("--out", out_path, "CSV output file (default stdout)");
    sweep->add_option("--seed", seed, "Seed for random families");
    add_class(sweep);
    add_budget(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ExitCode::ok : ExitCode::usage_error;
    }

    try {
        const auto budget = budget_arg ? *budget_arg : default_budget();

        if (*gen) {
            const auto family = parse_family(family_arg, seed);
            std::filesystem::create_directories(out_dir);
            json manifest;
            manifest["family"] = family.descriptor;
            manifest["seed"] = seed;
            manifest["graphs"] = json::array();
            for (std::size_t i = 0; i < family.count; ++i) {
                const auto item = family.item(i);
                const auto file = item.id + ".txt";
                std::ofstream(std::filesystem::path(out_dir) / file) << format_edge_list(item.g);
                manifest["graphs"].push_back(
                    {{"graphId", item.id}, {"file", file}, {"n", item.g.size()}, {"m", item.g.edge_count()}});
            }
            std::ofstream(std::filesystem::path(out_dir) / "manifest.json") << manifest.dump(2) << "\n";
            out << "wrote " << family.count << " graphs to " << out_dir << "\n";
            return ExitCode::ok;
        }

        if (*pack || *hit) {
            const FamilyItem item{graph_path, load_graph(graph_path), std::nullopt, std::nullopt};
            Classified c;
            try {
                c = classify(item, wanted);
            } catch (const ClassMembershipError& e) {
                err << "error: " << e.what() << "\n";
                return ExitCode::class_error;
            }
            const auto report = construct(c, budget);
            out << to_json(report) << "\n";
            const auto outcome = verify_certificates(item.g, report);
            if (!outcome.pass || !report.ratio_ok) {
                err << "verification failed: " << outcome.message << "\n";
                return ExitCode::verification_failure;
            }
            for (const auto& flag : report.flags)
                err << "warning: " << flag << "\n";
            return report.flags.empty() ? ExitCode::ok : ExitCode::verification_failure;
        }

        if (*verify) {
            const auto g = load_graph(graph_path);
            const auto report = report_from_json(read_text(report_path));
            const auto outcome = verify_certificates(g, report);
            json doc;
            doc["pass"] = outcome.pass;
            doc["failedCheck"] = outcome.failed ? json(std::string(to_string(*outcome.failed))) : json(nullptr);
            doc["message"] = outcome.message;
            out << doc.dump() << "\n";
            return outcome.pass ? ExitCode::ok : ExitCode::verification_failure;
        }

        if (*oracle) {
            if (want_mu == want_tau) {
                err << "error: oracle needs exactly one of --mu or --tau\n";
                return ExitCode::usage_error;
            }
            const auto g = load_graph(graph_path);
            bool exact = false;
            if (want_mu) {
                const auto r = exact_mu(g, budget);
                out << to_json(r) << "\n";
                exact = r.exact;
            } else {
                const auto r = exact_tau(g, budget);
                out << to_json(r) << "\n";
                exact = r.exact;
            }
            if (!exact && !allow_inexact) {
                err << "error: node budget " << budget << " exceeded\n";
                return ExitCode::budget_exceeded;
            }
            return ExitCode::ok;
        }

        if (*sweep) {
            const auto family = parse_family(family_arg, seed);
            const auto rows = run_sweep(family, {exact_below, budget, wanted}, jobs);
            std::ofstream file;
            if (!out_path.empty()) {
                file.open(out_path);
                if (!file)
                    throw InputError("cannot write '" + out_path + "'");
            }
            std::ostream& csv = out_path.empty() ? out : file;
            csv << csv_header << "\n";
            bool failed = false;
            bool class_failed = false;
            bool inexact = false;
            for (const auto& row : rows) {
                csv << to_csv(row) << "\n";
                class_failed = class_failed || row.class_failure;
                inexact = inexact || row.inexact;
                failed = failed || (!row.pass && !row.class_failure && !row.inexact);
            }
            if (failed)
                return ExitCode::verification_failure;
            if (class_failed)
                return ExitCode::class_error;
            if (inexact)
                return ExitCode::budget_exceeded;
            return ExitCode::ok;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::usage_error;
    } catch (const ClassMembershipError& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::class_error;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::class_error;
    } catch (const InexactError& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::budget_exceeded;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::usage_error;
    }
    return ExitCode::usage_error;
}

}  // namespace tuza::cli
