// Command-line driver. run_cli() parses argv and dispatches to run(); both
// write the payload to `out` (or the --out file) and diagnostics to `err`.
//
// Exit codes: 0 success, 1 a mathematical check failed, 2 invalid input.

#ifndef HYPERSIMPLEX_CLI_HPP
#define HYPERSIMPLEX_CLI_HPP

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "combinatorics.hpp"
#include "dual_graph.hpp"
#include "geometry.hpp"
#include "serialization.hpp"
#include "subdivision.hpp"

namespace hypersimplex::cli {

enum class Command { Identity, Sweep, Subdivide, Verify, DualGraph, Volume, Locate };
enum class OutputFormat { Text, Json, Dot };

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalid = 2;

inline constexpr int kMaxUnforcedDimension = 7;
inline constexpr std::uint64_t kMaxUnforcedCells = 1'000'000;

struct RunConfig
{
    Command command = Command::Identity;
    int d = 0;
    int i = 0;
    int r = 0;
    int d_max = 0;
    int r_max = 0;
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    std::size_t pair_limit = 500;
    std::size_t pair_samples = 10000;
    OutputFormat format = OutputFormat::Text;
    std::optional<std::string> out;
    std::optional<std::string> in;
    std::optional<std::string> point;
    std::string oracle = "eulerian";
    bool force = false;
};

class InvalidInput : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require_subdivision_size(const RunConfig& cfg)
{
    if (cfg.force)
        return;
    if (cfg.d > kMaxUnforcedDimension)
        throw InvalidInput("d=" + std::to_string(cfg.d) + " exceeds " + std::to_string(kMaxUnforcedDimension) +
                           "; pass --force to enumerate anyway");
    const BigInt cells = subdivision_cell_count(cfg.r, cfg.d, cfg.i);
    if (cells > kMaxUnforcedCells)
        throw InvalidInput("H(" + std::to_string(cfg.r) + "," + std::to_string(cfg.d) + "," +
                           std::to_string(cfg.i) + ") has " + cells.str() +
                           " cells; pass --force to enumerate anyway");
}

inline std::string bool_text(bool b) { return b ? "true" : "false"; }

inline std::string verify_report_text(const Subdivision& s, const VerifyReport& rep)
{
    std::ostringstream out;
    out << "H(r=" << rep.r << ",d=" << rep.d << ",i=" << rep.i << "): " << rep.cells << " cells, seed " << rep.seed
        << "\n";
    out << "containment: " << (rep.containment ? "pass" : "FAIL") << "\n";
    for (const auto& f : rep.containment_failures)
        out << "  " << f << "\n";
    out << "coverage: " << rep.coverage_samples << " samples, " << rep.coverage_failures.size() << " failures\n";
    for (const auto& f : rep.coverage_failures)
        out << "  " << f << "\n";
    out << "faces: " << rep.face_pairs << " pairs (" << (rep.faces_exhaustive ? "exhaustive" : "sampled") << "), "
        << rep.face_failures.size() << " failures\n";
    for (const auto& f : rep.face_failures)
        out << "  " << f << "\n";

    std::map<int, std::size_t> per_level;
    for (const auto& c : s.cells)
        ++per_level[c.j];
    out << "volume: ";
    bool first = true;
    for (const auto& [j, n] : per_level) {
        out << (first ? "" : " + ") << n << "*A(" << s.d << "," << j << ")";
        first = false;
    }
    if (first)
        out << "0";
    out << " = " << rep.volume_lhs << "; " << rep.r << "^" << rep.d << "*A(" << rep.d << "," << rep.i
        << ") = " << rep.volume_rhs << ": " << (rep.volume_equal ? "pass" : "FAIL") << "\n";
    out << (rep.passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

inline std::string format_index_set_1based(const IndexSet& s)
{
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k)
        out += (k ? "," : "") + std::to_string(s[k] + 1);
    return out + "}";
}

}  // namespace detail

/// Executes a validated configuration. Throws InvalidInput (or
/// std::invalid_argument) for bad parameters; run_cli maps those to exit 2.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    std::ostringstream payload;
    int status = kExitOk;
    const bool json = cfg.format == OutputFormat::Json;

    switch (cfg.command) {
    case Command::Identity: {
        const IdentityResult res = identity_check(cfg.r, cfg.d, cfg.i);
        if (json)
            payload << Json{{"d", cfg.d}, {"i", cfg.i}, {"r", cfg.r}, {"lhs", res.lhs.str()},
                            {"rhs", res.rhs.str()}, {"equal", res.equal}}
                           .dump()
                    << "\n";
        else
            payload << "lhs=" << res.lhs << " rhs=" << res.rhs << " equal=" << detail::bool_text(res.equal) << "\n";
        if (!res.equal)
            status = kExitCheckFailed;
        break;
    }
    case Command::Sweep: {
        const SweepReport rep = identity_sweep(cfg.d_max, cfg.r_max);
        if (json) {
            payload << sweep_report_to_json(rep).dump() << "\n";
        } else {
            for (const auto& e : rep.entries)
                payload << "d=" << e.d << " i=" << e.i << " r=" << e.r << " lhs=" << e.result.lhs
                        << " rhs=" << e.result.rhs << (e.result.equal ? " pass" : " FAIL") << "\n";
            payload << rep.entries.size() << " triples, " << rep.failures() << " failures\n";
        }
        if (!rep.all_pass()) {
            err << rep.failures() << " identity failures\n";
            status = kExitCheckFailed;
        }
        break;
    }
    case Command::Subdivide: {
        detail::require_subdivision_size(cfg);
        payload << subdivision_to_json(build_subdivision(cfg.r, cfg.d, cfg.i)).dump() << "\n";
        break;
    }
    case Command::Verify: {
        Subdivision s;
        if (cfg.in) {
            std::ifstream file(*cfg.in);
            if (!file)
                throw InvalidInput("cannot read " + *cfg.in);
            Json doc;
            try {
                doc = Json::parse(file);
            } catch (const nlohmann::json::exception& e) {
                throw InvalidInput("cannot parse " + *cfg.in + ": " + e.what());
            }
            s = subdivision_from_json(doc);
        } else {
            detail::require_subdivision_size(cfg);
            s = build_subdivision(cfg.r, cfg.d, cfg.i);
        }
        VerifyOptions opts;
        opts.samples = cfg.samples;
        opts.seed = cfg.seed;
        opts.exhaustive_pair_limit = cfg.pair_limit;
        opts.sampled_pairs = cfg.pair_samples;
        const VerifyReport rep = verify_subdivision(s, opts);
        if (json)
            payload << verify_report_to_json(rep).dump() << "\n";
        else
            payload << detail::verify_report_text(s, rep);
        if (!rep.passed()) {
            err << "verification failed for H(" << s.r << "," << s.d << "," << s.i << ")\n";
            status = kExitCheckFailed;
        }
        break;
    }
    case Command::DualGraph: {
        detail::require_subdivision_size(cfg);
        const DualGraph g = build_dual_graph(build_subdivision(cfg.r, cfg.d, cfg.i));
        payload << export_graph(g, json ? GraphFormat::Json : GraphFormat::Dot);
        break;
    }
    case Command::Volume: {
        validate_parameters(1, cfg.d, cfg.i);
        BigInt volume;
        if (cfg.oracle == "ehrhart")
            volume = ehrhart_normalized_volume(cfg.d, cfg.i);
        else if (cfg.oracle == "eulerian")
            volume = eulerian(cfg.d, cfg.i);
        else
            throw InvalidInput("unknown oracle '" + cfg.oracle + "' (expected ehrhart or eulerian)");
        if (json)
            payload << Json{{"d", cfg.d}, {"i", cfg.i}, {"oracle", cfg.oracle}, {"volume", volume.str()}}.dump()
                    << "\n";
        else
            payload << volume << "\n";
        break;
    }
    case Command::Locate: {
        if (!cfg.point)
            throw InvalidInput("locate needs --point");
        validate_parameters(cfg.r, cfg.d, cfg.i);
        const RationalPoint x = parse_point(*cfg.point);
        if (x.dimension() != cfg.d)
            throw InvalidInput("point has " + std::to_string(x.size()) + " coordinates, expected " +
                               std::to_string(cfg.d + 1));
        const FracProfile profile = frac_profile(x);
        const Cell witness = covering_witness(x, cfg.r, cfg.d, cfg.i);
        const std::vector<Cell> family = containing_translates(x);
        if (json) {
            Json cells = Json::array();
            for (const auto& c : family)
                cells.push_back(cell_to_json(c));
            payload << Json{{"point", format_point(x)},
                            {"fractional", profile.fractional},
                            {"excess", profile.excess},
                            {"floor", profile.floor},
                            {"witness", cell_to_json(witness)},
                            {"containing", std::move(cells)}}
                           .dump()
                    << "\n";
        } else {
            payload << "point: " << format_point(x) << "\n";
            payload << "fractional indices: " << detail::format_index_set_1based(profile.fractional)
                    << ", excess o(x) = " << profile.excess << ", floor " << format_vector(profile.floor) << "\n";
            payload << "witness: " << format_cell(witness) << "\n";
            payload << "containing translates (" << family.size() << "):\n";
            for (const auto& c : family)
                payload << "  " << format_cell(c) << "\n";
        }
        break;
    }
    }

    if (cfg.out) {
        std::ofstream file(*cfg.out, std::ios::binary);
        if (!file)
            throw InvalidInput("cannot write " + *cfg.out);
        file << payload.str();
    } else {
        out << payload.str();
    }
    return status;
}

/// Parses arguments (argv[0] is the program name) and runs the command.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact construction and verification of hypersimplicial subdivisions"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string format = "text";
    const std::map<std::string, OutputFormat> formats{
        {"text", OutputFormat::Text}, {"json", OutputFormat::Json}, {"dot", OutputFormat::Dot}};

    auto add_dir = [&](CLI::App* sub, bool with_r, bool required = true) {
        sub->add_option("--d", cfg.d, "hypersimplex dimension")->required(required);
        sub->add_option("--i", cfg.i, "hypersimplex level, 1 <= i <= d")->required(required);
        if (with_r)
            sub->add_option("--r", cfg.r, "dilation factor")->required(required);
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
        sub->add_option("--out", cfg.out, "write the payload to this file");
    };

    auto* identity = app.add_subcommand("identity", "evaluate both sides of the Brenti-Welker identity");
    add_dir(identity, true);

    auto* sweep = app.add_subcommand("sweep", "check the identity for all d <= d-max, r <= r-max");
    sweep->add_option("--d-max", cfg.d_max)->required();
    sweep->add_option("--r-max", cfg.r_max)->required();
    sweep->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    sweep->add_option("--out", cfg.out);

    auto* subdivide = app.add_subcommand("subdivide", "emit H(r,d,i) as JSON");
    add_dir(subdivide, true);
    subdivide->add_flag("--force", cfg.force, "allow very large subdivisions");

    auto* verify = app.add_subcommand("verify", "verify that H(r,d,i) subdivides r*Delta(d,i)");
    add_dir(verify, true, false);  // --in supplies the parameters instead
    verify->add_option("--samples", cfg.samples, "random coverage points");
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_option("--pair-limit", cfg.pair_limit, "exhaustive face checks up to this many cells");
    verify->add_option("--pair-samples", cfg.pair_samples, "sampled face checks above the limit");
    verify->add_option("--in", cfg.in, "verify cells read from a subdivision JSON file");
    verify->add_flag("--force", cfg.force, "allow very large subdivisions");

    auto* dual = app.add_subcommand("dual-graph", "emit the dual graph as DOT or JSON");
    add_dir(dual, true);
    dual->add_flag("--force", cfg.force, "allow very large subdivisions");

    auto* volume = app.add_subcommand("volume", "normalized volume of Delta(d,i)");
    add_dir(volume, false);
    volume->add_option("--oracle", cfg.oracle, "ehrhart or eulerian")->check(CLI::IsMember({"ehrhart", "eulerian"}));

    auto* locate = app.add_subcommand("locate", "find the cells containing a point of r*Delta(d,i)");
    add_dir(locate, true);
    locate->add_option("--point", cfg.point, "comma-separated coordinates, each a or a/b")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty())
        reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitInvalid;
    }

    const std::map<CLI::App*, Command> commands{
        {identity, Command::Identity}, {sweep, Command::Sweep},   {subdivide, Command::Subdivide},
        {verify, Command::Verify},     {dual, Command::DualGraph}, {volume, Command::Volume},
        {locate, Command::Locate}};
    for (const auto& [sub, command] : commands)
        if (sub->parsed())
            cfg.command = command;
    cfg.format = formats.at(format);

    if (cfg.format == OutputFormat::Dot && cfg.command != Command::DualGraph) {
        err << "--format dot applies only to dual-graph\n";
        return kExitInvalid;
    }
    if (cfg.command == Command::Verify && cfg.in)
        cfg.force = true;  // size comes from the file

    try {
        return run(cfg, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}

}  // namespace hypersimplex::cli

#endif  // HYPERSIMPLEX_CLI_HPP
