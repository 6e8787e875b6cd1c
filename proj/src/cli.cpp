#include "lyucalc/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "lyucalc/parse.hpp"
#include "lyucalc/report.hpp"
#include "lyucalc/veronese.hpp"

namespace lyu {

namespace {

std::string read_file(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read input file: " + path);
    buf << in.rdbuf();
    return buf.str();
}

unsigned resolve_threads(unsigned cli_value) {
    if (cli_value > 0) return cli_value;
    if (const char* s = std::getenv("LYUCALC_THREADS")) {
        int v = std::atoi(s);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
}

// everything shared by the subcommands
struct Ctx {
    std::string input_path;
    bool json = false;
    bool csv = false;
    bool no_minimize = false;
    bool no_spot_checks = false;
    bool inject = false; // hidden: forces an internal error for testing
    std::string cache_dir;
    u64 seed = 20260819;
    unsigned threads = 0; // 0 = LYUCALC_THREADS or 1
    std::vector<std::size_t> cell;
    std::vector<int> veronese;
    std::size_t ei = 0, ej = 0;
    std::string degrees = "0..0";
};

void add_common(CLI::App* cmd, Ctx& ctx) {
    cmd->add_option("input", ctx.input_path, "problem file (p=, vars=, gens=, label=), or - for stdin")
        ->required();
    cmd->add_flag("--no-minimize", ctx.no_minimize, "keep resolutions unminimized");
    cmd->add_flag("--no-spot-checks", ctx.no_spot_checks,
                  "skip the randomized per-cell invariant checks");
    cmd->add_option("--cache-dir", ctx.cache_dir, "directory for the resolution cache");
    cmd->add_option("--seed", ctx.seed, "seed for the spot checks");
    cmd->add_option("--threads", ctx.threads,
                    "worker threads (default: LYUCALC_THREADS or 1)");
    cmd->add_flag("--inject-internal-error", ctx.inject, "")->group("");
}

EngineOptions engine_options(const Ctx& ctx) {
    EngineOptions opt;
    opt.minimize = !ctx.no_minimize;
    opt.seed = ctx.seed;
    opt.cache_dir = ctx.cache_dir;
    opt.spot_checks = !ctx.no_spot_checks;
    return opt;
}

std::string label_of(const Problem& pb, const std::string& path) {
    if (!pb.label.empty()) return pb.label;
    return std::filesystem::path(path).stem().string();
}

void check_indices(const Ring& ring, std::size_t i, std::size_t j) {
    if (i > ring->nvars() || j > ring->nvars())
        throw Error("cell indices must be at most n+1 = " + std::to_string(ring->nvars()));
}

std::string write_repro_bundle(const std::vector<std::string>& args,
                               const std::string& input_path,
                               const std::string& error_text) {
    namespace fs = std::filesystem;
    auto stamp = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::system_clock::now().time_since_epoch())
                     .count();
    fs::path dir = "lyucalc-repro-" + std::to_string(stamp) + "-" +
                   std::to_string(::getpid());
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) return "";
    {
        std::ofstream out(dir / "error.txt");
        out << error_text << '\n';
    }
    {
        std::ofstream out(dir / "cmdline.txt");
        for (std::size_t k = 0; k < args.size(); ++k)
            out << (k ? " " : "") << args[k];
        out << '\n';
    }
    if (!input_path.empty()) {
        fs::copy_file(input_path, dir / fs::path(input_path).filename(),
                      fs::copy_options::overwrite_existing, ec);
    }
    return dir.string();
}

int run_table(const Ctx& ctx) {
    std::string text = read_file(ctx.input_path);
    Problem pb = parse_problem(text);
    Ring ring = problem_ring(pb);
    std::vector<Poly> gens = problem_gens(pb, ring);
    if (ctx.inject) throw InternalError("injected failure (--inject-internal-error)");
    TableEngine eng(ring, gens, engine_options(ctx));

    if (!ctx.cell.empty()) {
        std::size_t i = ctx.cell[0], j = ctx.cell[1];
        check_indices(ring, i, j);
        std::size_t lam = eng.lambda(i, j);
        if (ctx.json) {
            nlohmann::ordered_json out;
            out["format"] = 1;
            out["version"] = kVersion;
            out["entries"] = nlohmann::ordered_json::array({{i, j, lam}});
            std::cout << out.dump(2) << '\n';
        } else if (ctx.csv) {
            std::cout << "i,j,lambda\n" << i << ',' << j << ',' << lam << '\n';
        } else {
            std::cout << "lambda(" << i << "," << j << ") = " << lam << '\n';
        }
        return 0;
    }

    LyubeznikTable table = lyubeznik_table(eng, resolve_threads(ctx.threads));
    TableReport rep = make_report(eng, table, label_of(pb, ctx.input_path));
    if (ctx.json)
        std::cout << to_json(rep);
    else if (ctx.csv)
        std::cout << to_csv(rep);
    else
        std::cout << to_text(rep);
    return 0;
}

int run_verify(const Ctx& ctx) {
    std::string text = read_file(ctx.input_path);
    Problem pb = parse_problem(text);
    Ring ring = problem_ring(pb);
    std::vector<Poly> gens = problem_gens(pb, ring);
    if (ctx.inject) throw InternalError("injected failure (--inject-internal-error)");
    unsigned threads = resolve_threads(ctx.threads);

    TableEngine eng(ring, gens, engine_options(ctx));
    LyubeznikTable base = lyubeznik_table(eng, threads);
    TableReport base_rep = make_report(eng, base, label_of(pb, ctx.input_path));

    std::vector<int> degrees = ctx.veronese;
    if (degrees.empty()) degrees.push_back(2);

    nlohmann::ordered_json jout;
    if (ctx.json) {
        jout["base"] = nlohmann::ordered_json::parse(to_json(base_rep));
        jout["embeddings"] = nlohmann::ordered_json::array();
    } else {
        std::cout << to_text(base_rep) << '\n';
    }

    int rc = 0;
    for (int d : degrees) {
        VeroneseResult vr = veronese_ideal(ring, gens, d);
        TableEngine veng(vr.ring, vr.gens, engine_options(ctx));
        LyubeznikTable vt = lyubeznik_table(veng, threads);
        bool ok = base.same_numbers(vt);
        if (!ok) rc = 1;
        std::string vlabel = label_of(pb, ctx.input_path) + " / veronese d=" +
                             std::to_string(d);
        TableReport vrep = make_report(veng, vt, vlabel);
        if (ctx.json) {
            nlohmann::ordered_json entry;
            entry["d"] = d;
            entry["match"] = ok;
            entry["report"] = nlohmann::ordered_json::parse(to_json(vrep));
            jout["embeddings"].push_back(std::move(entry));
        } else {
            std::cout << "veronese d=" << d << " (" << vr.ring->nvars()
                      << " coordinates): " << (ok ? "table matches" : "TABLE MISMATCH")
                      << '\n';
            if (!ok) std::cout << to_text(vrep) << '\n';
        }
    }
    if (ctx.json) std::cout << jout.dump(2) << '\n';
    return rc;
}

int run_ext_dims(Ctx& ctx) {
    std::string text = read_file(ctx.input_path);
    Problem pb = parse_problem(text);
    Ring ring = problem_ring(pb);
    std::vector<Poly> gens = problem_gens(pb, ring);
    if (ctx.inject) throw InternalError("injected failure (--inject-internal-error)");
    check_indices(ring, ctx.ei, ctx.ej);

    auto dots = ctx.degrees.find("..");
    if (dots == std::string::npos)
        throw Error("--degrees wants the form lo..hi, got: " + ctx.degrees);
    int lo = 0, hi = 0;
    try {
        lo = std::stoi(ctx.degrees.substr(0, dots));
        hi = std::stoi(ctx.degrees.substr(dots + 2));
    } catch (const std::exception&) {
        throw Error("--degrees wants the form lo..hi, got: " + ctx.degrees);
    }
    if (lo > hi) throw Error("--degrees range is empty: " + ctx.degrees);

    TableEngine eng(ring, gens, engine_options(ctx));
    std::vector<std::size_t> dims = eng.degree_dims(ctx.ei, ctx.ej, lo, hi);
    if (ctx.json) {
        nlohmann::ordered_json out;
        out["i"] = ctx.ei;
        out["j"] = ctx.ej;
        auto arr = nlohmann::ordered_json::array();
        for (int d = lo; d <= hi; ++d)
            arr.push_back({{"degree", d}, {"dim", dims[static_cast<std::size_t>(d - lo)]}});
        out["dims"] = std::move(arr);
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "graded dimensions of E(" << ctx.ei << "," << ctx.ej << "):\n";
        for (int d = lo; d <= hi; ++d)
            std::cout << "  degree " << d << ": "
                      << dims[static_cast<std::size_t>(d - lo)] << '\n';
    }
    return 0;
}

} // namespace

int run_cli(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    CLI::App app{"exact Lyubeznik numbers of cone singularities in char p"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    Ctx ctx;
    CLI::App* table = app.add_subcommand("table", "compute the full lambda table");
    add_common(table, ctx);
    table->add_flag("--json", ctx.json, "emit JSON to stdout");
    table->add_flag("--csv", ctx.csv, "emit CSV to stdout");
    table->add_option("--cell", ctx.cell, "compute a single cell i j")
        ->expected(2);

    CLI::App* verify =
        app.add_subcommand("verify-embedding",
                           "recompute the table after Veronese re-embeddings and compare");
    add_common(verify, ctx);
    verify->add_flag("--json", ctx.json, "emit JSON to stdout");
    verify->add_option("--veronese", ctx.veronese,
                       "Veronese degree to re-embed by (repeatable; default 2)")
        ->check(CLI::PositiveNumber);

    CLI::App* extd = app.add_subcommand("ext-dims",
                                        "graded dimensions of one double-Ext layer");
    add_common(extd, ctx);
    extd->add_flag("--json", ctx.json, "emit JSON to stdout");
    extd->add_option("--i", ctx.ei, "first index")->required();
    extd->add_option("--j", ctx.ej, "second index")->required();
    extd->add_option("--degrees", ctx.degrees, "degree window lo..hi (default 0..0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (table->parsed()) return run_table(ctx);
        if (verify->parsed()) return run_verify(ctx);
        return run_ext_dims(ctx);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InhomogeneousError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        std::string dir = write_repro_bundle(args, ctx.input_path, e.what());
        if (!dir.empty()) std::cerr << "repro bundle written to: " << dir << '\n';
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        std::string dir = write_repro_bundle(args, ctx.input_path, e.what());
        if (!dir.empty()) std::cerr << "repro bundle written to: " << dir << '\n';
        return 4;
    }
}

} // namespace lyu
