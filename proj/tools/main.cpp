/*
 * sfc3d command-line driver.
 *
 * Subcommands configure an ordering sweep, run the analysis or benchmark,
 * and emit CSV. Every command is deterministic given its configuration and
 * seed, except for wall-clock timing fields. Output goes to stdout or, with
 * --out, through a write-then-rename so a failed run never leaves a partial
 * file. Numeric sweeps are expressed by repeating a flag (e.g. --g 1 --g 2),
 * producing one row or group per combination.
 */

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sfc3d/cache_model.hpp"
#include "sfc3d/grid.hpp"
#include "sfc3d/halo.hpp"
#include "sfc3d/histogram.hpp"
#include "sfc3d/layout.hpp"

using namespace sfc3d;

namespace {

std::string fmt_g9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

double clock_resolution_ns() {
    using period = std::chrono::steady_clock::period;
    return 1e9 * static_cast<double>(period::num) / static_cast<double>(period::den);
}

// Whole-document buffer: nothing reaches the filesystem until the run
// succeeded, and file output lands via rename.
struct CsvDoc {
    std::string buf = "# schema=1\n";

    void comment(const std::string& line) { buf += "# " + line + "\n"; }
    void line(const std::string& l) {
        buf += l;
        buf += '\n';
    }

    void emit(const std::optional<std::string>& out_path) const {
        if (!out_path) {
            std::cout << buf;
            return;
        }
        namespace fs = std::filesystem;
        const fs::path target(*out_path);
        const fs::path tmp = target.string() + ".tmp";
        {
            std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
            if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
            os << buf;
            if (!os.flush()) throw std::runtime_error("write failed: " + tmp.string());
        }
        fs::rename(tmp, target);
    }
};

BlockOrder parse_block_order(const std::string& name) {
    if (name == "rowmajor") return BlockOrder::row_major;
    if (name == "morton") return BlockOrder::morton;
    if (name == "hilbert") return BlockOrder::hilbert;
    throw std::invalid_argument("unknown block ordering '" + name +
                                "' (expected rowmajor|morton|hilbert)");
}

struct OrderingFlags {
    std::vector<std::string> kinds;
    std::vector<unsigned> levels;      // morton recursion depths
    std::vector<unsigned> block_exps;  // hybrid block exponents
    std::string inner = "rowmajor";
    std::string outer = "morton";

    void attach(CLI::App* cmd, bool single = false) {
        auto* o = cmd->add_option("--ordering", kinds,
                                  "ordering kind: rowmajor|morton|hilbert|hybrid");
        o->required();
        if (single) o->expected(1);
        cmd->add_option("--level", levels, "Morton recursion depth r (default m-1)");
        cmd->add_option("--block-exp", block_exps, "hybrid block side exponent t");
        cmd->add_option("--inner", inner, "hybrid in-block ordering (default rowmajor)");
        cmd->add_option("--outer", outer, "hybrid between-block ordering (default morton)");
    }

    // One spec per requested combination, in flag order.
    std::vector<OrderingSpec> expand(Dims d) const {
        std::vector<OrderingSpec> specs;
        for (const auto& kind : kinds) {
            if (kind == "rowmajor") {
                specs.push_back(OrderingSpec::row_major(d));
            } else if (kind == "morton") {
                if (levels.empty()) {
                    specs.push_back(OrderingSpec::morton(d, d.m > 0 ? d.m - 1 : 0));
                } else {
                    for (unsigned r : levels) specs.push_back(OrderingSpec::morton(d, r));
                }
            } else if (kind == "hilbert") {
                specs.push_back(OrderingSpec::hilbert(d));
            } else if (kind == "hybrid") {
                if (block_exps.empty())
                    throw std::invalid_argument("hybrid ordering requires --block-exp");
                for (unsigned t : block_exps)
                    specs.push_back(OrderingSpec::hybrid(d, parse_block_order(inner),
                                                         parse_block_order(outer), t));
            } else {
                throw std::invalid_argument("unknown ordering '" + kind +
                                            "' (expected rowmajor|morton|hilbert|hybrid)");
            }
        }
        return specs;
    }
};

struct ModePoint {
    std::string mode;  // interior | border | surface
    std::optional<SurfaceId> surface;
};

ModePoint parse_mode(const std::string& text) {
    if (text == "interior") return {"interior", std::nullopt};
    if (text == "border") return {"border", std::nullopt};
    if (text.rfind("surface:", 0) == 0) {
        const auto id = surface_from_string(text.substr(8));
        if (!id)
            throw std::invalid_argument("unknown surface '" + text.substr(8) +
                                        "' (expected rc|cs|sr -front|-back)");
        return {"surface", *id};
    }
    throw std::invalid_argument("unknown mode '" + text +
                                "' (expected interior|border|surface:<id>)");
}

struct Stats {
    double mean = 0, stddev = 0;
};

Stats mean_stddev(const std::vector<double>& xs) {
    Stats s;
    for (double x : xs) s.mean += x;
    s.mean /= static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double var = 0;
        for (double x : xs) var += (x - s.mean) * (x - s.mean);
        s.stddev = std::sqrt(var / static_cast<double>(xs.size() - 1));
    }
    return s;
}

// Runs jobs either in order or concurrently, concatenating their CSV
// fragments in submission order either way.
std::string run_jobs(std::vector<std::function<std::string()>> jobs, bool parallel) {
    std::string out;
    if (!parallel) {
        for (auto& job : jobs) out += job();
        return out;
    }
    std::vector<std::future<std::string>> futures;
    futures.reserve(jobs.size());
    for (auto& job : jobs) futures.push_back(std::async(std::launch::async, job));
    for (auto& f : futures) out += f.get();
    return out;
}

// ---- subcommands ----------------------------------------------------------

int cmd_dump_order(unsigned m, const OrderingFlags& ordering,
                   const std::optional<std::string>& out) {
    const Dims d = Dims::from_exponent(m);
    const auto specs = ordering.expand(d);
    if (specs.size() != 1)
        throw std::invalid_argument("dump-order takes exactly one ordering configuration");
    const auto layout = build_layout(specs.front());
    CsvDoc doc;
    doc.comment("ordering=" + specs.front().label() + " M=" + std::to_string(d.M));
    doc.line("path_index,k,i,j");
    for (std::uint64_t l = 0; l < d.volume(); ++l) {
        const Coord3 c = coord_of_rmo(layout.path_to_rmo[l], d);
        doc.line(std::to_string(l) + "," + std::to_string(c.k) + "," + std::to_string(c.i) +
                 "," + std::to_string(c.j));
    }
    doc.emit(out);
    return 0;
}

int cmd_hist(const std::vector<unsigned>& ms, const OrderingFlags& ordering,
             const std::vector<unsigned>& gs, bool parallel,
             const std::optional<std::string>& out) {
    std::vector<std::function<std::string()>> jobs;
    for (unsigned m : ms) {
        const Dims d = Dims::from_exponent(m);
        for (const auto& spec : ordering.expand(d))
            for (unsigned g : gs) {
                require_stencil(StencilSpec{g}, d, "hist");
                jobs.push_back([spec, g, d] {
                    const auto h = offset_histogram(build_layout(spec), StencilSpec{g});
                    std::string rows;
                    const std::string prefix =
                        spec.label() + "," + std::to_string(d.M) + "," + std::to_string(g) + ",";
                    for (const auto& [offset, count] : h.bins)
                        rows += prefix + std::to_string(offset) + "," + std::to_string(count) +
                                "\n";
                    return rows;
                });
            }
    }
    CsvDoc doc;
    doc.line("ordering,M,g,offset,count");
    doc.buf += run_jobs(std::move(jobs), parallel);
    doc.emit(out);
    return 0;
}

int cmd_cachesim(const std::vector<unsigned>& ms, const OrderingFlags& ordering,
                 const std::vector<unsigned>& gs, const std::vector<unsigned>& bs,
                 const std::vector<unsigned>& cs, const std::vector<std::string>& modes,
                 const std::string& access, bool parallel,
                 const std::optional<std::string>& out) {
    SurfaceAccess acc;
    if (access == "stencil")
        acc = SurfaceAccess::full_stencil;
    else if (access == "center")
        acc = SurfaceAccess::center_only;
    else
        throw std::invalid_argument("unknown --surface-access '" + access +
                                    "' (expected stencil|center)");
    std::vector<ModePoint> mode_points;
    for (const auto& text : modes) mode_points.push_back(parse_mode(text));

    std::vector<std::function<std::string()>> jobs;
    for (unsigned m : ms) {
        const Dims d = Dims::from_exponent(m);
        for (const auto& spec : ordering.expand(d))
            for (unsigned g : gs) {
                require_stencil(StencilSpec{g}, d, "cachesim");
                for (unsigned b : bs) {
                    require_cache(CacheConfig{b, 1}, d, "cachesim");
                    for (unsigned c : cs)
                        for (const auto& mp : mode_points)
                            jobs.push_back([spec, g, b, c, mp, acc, d] {
                                const auto layout = build_layout(spec);
                                CacheStats stats;
                                std::string mode_label = mp.mode;
                                if (mp.mode == "interior") {
                                    stats = cache_model(layout, StencilSpec{g},
                                                        CacheConfig{b, c});
                                } else {
                                    stats = surface_cache_model(layout, StencilSpec{g},
                                                                CacheConfig{b, c}, mp.surface,
                                                                acc);
                                    if (acc == SurfaceAccess::center_only)
                                        mode_label += "-center";
                                }
                                return spec.label() + "," + std::to_string(d.M) + "," +
                                       std::to_string(g) + "," + std::to_string(b) + "," +
                                       std::to_string(c) + "," + mode_label + "," +
                                       (mp.surface ? to_string(*mp.surface) : "-") + "," +
                                       std::to_string(stats.nmisses) + "," +
                                       std::to_string(stats.naccesses) + "\n";
                            });
                }
            }
    }
    CsvDoc doc;
    doc.line("ordering,M,g,b,c,mode,surface,nmisses,naccesses");
    doc.buf += run_jobs(std::move(jobs), parallel);
    doc.emit(out);
    return 0;
}

struct GridRunFlags {
    double density = 0.3;
    std::uint64_t seed = 1;
    unsigned iterations = 10;
    unsigned repeats = 10;
    std::optional<unsigned> survive_lo, survive_hi, born_lo, born_hi;

    RuleSpec rule(unsigned g) const {
        RuleSpec r = RuleSpec::defaults(g);
        if (survive_lo) r.survive_lo = *survive_lo;
        if (survive_hi) r.survive_hi = *survive_hi;
        if (born_lo) r.born_lo = *born_lo;
        if (born_hi) r.born_hi = *born_hi;
        return r;
    }
};

int cmd_bench_stencil(const std::vector<unsigned>& ms, const OrderingFlags& ordering,
                      const std::vector<unsigned>& gs, const GridRunFlags& flags,
                      const std::optional<std::string>& out) {
    CsvDoc doc;
    doc.comment("clock=steady resolution_ns=" + fmt_g9(clock_resolution_ns()));
    doc.line("ordering,M,g,iterations,mean_cell_update_s,stddev_cell_update_s");
    for (unsigned m : ms) {
        const Dims d = Dims::from_exponent(m);
        for (const auto& spec : ordering.expand(d)) {
            const auto layout = build_layout(spec);
            for (unsigned g : gs) {
                const RuleSpec rule = flags.rule(g);
                require_rule(rule, d);
                const Grid initial = init_grid(layout, flags.density, flags.seed);
                std::vector<double> per_cell(flags.repeats);
                for (unsigned rep = 0; rep < flags.repeats; ++rep)
                    per_cell[rep] = run(initial, layout, rule, flags.iterations)
                                        .per_cell_update_s;
                const Stats s = mean_stddev(per_cell);
                doc.line(spec.label() + "," + std::to_string(d.M) + "," + std::to_string(g) +
                         "," + std::to_string(flags.iterations) + "," + fmt_g9(s.mean) + "," +
                         fmt_g9(s.stddev));
            }
        }
    }
    doc.emit(out);
    return 0;
}

int cmd_bench_pack(const std::vector<unsigned>& ms, const OrderingFlags& ordering,
                   const std::vector<unsigned>& gs, const GridRunFlags& flags,
                   const std::optional<std::string>& out) {
    CsvDoc doc;
    doc.comment("clock=steady resolution_ns=" + fmt_g9(clock_resolution_ns()));
    doc.line("ordering,M,g,surface,mean_time_s,stddev_time_s");
    for (unsigned m : ms) {
        const Dims d = Dims::from_exponent(m);
        for (const auto& spec : ordering.expand(d)) {
            const auto layout = build_layout(spec);
            const Grid grid = init_grid(layout, flags.density, flags.seed);
            for (unsigned g : gs) {
                const auto lists = build_surface_lists(layout, g);
                for (const auto& rec : bench_pack(grid, lists, flags.repeats))
                    doc.line(spec.label() + "," + std::to_string(d.M) + "," +
                             std::to_string(g) + "," + to_string(rec.surface) + "," +
                             fmt_g9(rec.mean_s) + "," + fmt_g9(rec.stddev_s));
            }
        }
    }
    doc.emit(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"space-filling-curve data orderings: locality analyses and benchmarks"};
    app.require_subcommand(1);

    std::vector<unsigned> ms, gs{1}, bs, cs;
    std::vector<std::string> modes{"interior"};
    std::string access = "stencil";
    unsigned single_m = 0;
    bool parallel = false;
    std::optional<std::string> out;
    OrderingFlags ordering_single, ordering_sweep;
    GridRunFlags grid_flags;

    auto add_out = [&out](CLI::App* cmd) {
        cmd->add_option("--out", out, "output CSV path (stdout when omitted)");
    };

    auto* dump = app.add_subcommand("dump-order", "emit the full path of one ordering");
    dump->add_option("--m", single_m, "side exponent, M = 2^m")->required();
    ordering_single.attach(dump, /*single=*/true);
    add_out(dump);

    auto* hist = app.add_subcommand("hist", "memory-offset histograms for stencil sweeps");
    hist->add_option("--m", ms, "side exponent, repeatable")->required();
    hist->add_option("--g", gs, "stencil half-width, repeatable");
    ordering_sweep.attach(hist);
    hist->add_flag("--parallel", parallel, "compute sweep points concurrently");
    add_out(hist);

    auto* sim = app.add_subcommand("cachesim", "LRU cache-model miss counts");
    sim->add_option("--m", ms, "side exponent, repeatable")->required();
    sim->add_option("--g", gs, "stencil half-width, repeatable");
    sim->add_option("--b", bs, "items per cache line, repeatable")->required();
    sim->add_option("--c", cs, "cache lines held, repeatable")->required();
    sim->add_option("--mode", modes,
                    "centers to process: interior|border|surface:<id>, repeatable");
    sim->add_option("--surface-access", access,
                    "border/surface modes: stencil (full stencil per center) or center "
                    "(center item only)");
    ordering_sweep.attach(sim);
    sim->add_flag("--parallel", parallel, "compute sweep points concurrently");
    add_out(sim);

    auto add_grid_flags = [&grid_flags](CLI::App* cmd, bool with_iterations) {
        cmd->add_option("--density", grid_flags.density, "live-cell fill fraction");
        cmd->add_option("--seed", grid_flags.seed, "fill seed");
        if (with_iterations) {
            cmd->add_option("--iterations", grid_flags.iterations, "grid updates per run");
            cmd->add_option("--survive-lo", grid_flags.survive_lo);
            cmd->add_option("--survive-hi", grid_flags.survive_hi);
            cmd->add_option("--born-lo", grid_flags.born_lo);
            cmd->add_option("--born-hi", grid_flags.born_hi);
        }
        cmd->add_option("--repeats", grid_flags.repeats, "timed repetitions per row");
    };

    auto* bench = app.add_subcommand("bench-stencil", "time gol3d updates per ordering");
    bench->add_option("--m", ms, "side exponent, repeatable")->required();
    bench->add_option("--g", gs, "stencil half-width, repeatable");
    ordering_sweep.attach(bench);
    add_grid_flags(bench, true);
    add_out(bench);

    auto* pack = app.add_subcommand("bench-pack", "time halo-surface buffer packing");
    pack->add_option("--m", ms, "side exponent, repeatable")->required();
    pack->add_option("--g", gs, "halo width, repeatable");
    ordering_sweep.attach(pack);
    add_grid_flags(pack, false);
    add_out(pack);

    CLI11_PARSE(app, argc, argv);

    try {
        if (dump->parsed()) return cmd_dump_order(single_m, ordering_single, out);
        if (hist->parsed()) return cmd_hist(ms, ordering_sweep, gs, parallel, out);
        if (sim->parsed())
            return cmd_cachesim(ms, ordering_sweep, gs, bs, cs, modes, access, parallel, out);
        if (bench->parsed()) return cmd_bench_stencil(ms, ordering_sweep, gs, grid_flags, out);
        if (pack->parsed()) return cmd_bench_pack(ms, ordering_sweep, gs, grid_flags, out);
    } catch (const std::exception& e) {
        std::cerr << "sfc3d: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
