// Command-line front end; talks to the library only through vclab.h.
#include "vclab/vclab.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>

namespace {

struct Common {
    std::string cls = "boxes";
    std::string anchor;
    unsigned jobs = 0;
    std::size_t cap = 20;
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> budget;
    std::string out;
    bool no_timing = false;
    bool no_verify = false;
};

using Options = std::unique_ptr<vclab_options, decltype(&vclab_options_free)>;
using Points = std::unique_ptr<vclab_points, decltype(&vclab_points_free)>;
using Report = std::unique_ptr<vclab_report, decltype(&vclab_report_free)>;

struct Text {
    char *p;
    ~Text() { vclab_string_free(p); }
};

int error_exit(vclab_status status)
{
    std::cerr << "vclab: " << vclab_last_error() << "\n";
    return status;
}

Options make_options(const Common &c, bool with_class)
{
    Options o(vclab_options_new(), vclab_options_free);
    unsigned jobs = c.jobs ? c.jobs : std::max(1U, std::thread::hardware_concurrency());
    vclab_options_set_jobs(o.get(), jobs);
    vclab_options_set_cap(o.get(), c.cap);
    vclab_options_set_seed(o.get(), c.seed);
    vclab_options_set_verify(o.get(), !c.no_verify);
    if (c.budget)
        vclab_options_set_budget(o.get(), *c.budget);
    if (with_class) {
        if (auto s = vclab_options_set_class(o.get(), c.cls.c_str()); s != VCLAB_OK)
            throw s;
        if (!c.anchor.empty())
            if (auto s = vclab_options_set_anchor(o.get(), c.anchor.c_str()); s != VCLAB_OK)
                throw s;
    }
    return o;
}

bool write_file(const std::string &path, const std::string &text)
{
    std::ofstream f(path, std::ios::binary);
    f << text << "\n";
    return static_cast<bool>(f);
}

/// Prints or writes the report and returns the command status as the exit code.
int finish(vclab_status status, vclab_report *raw, const Common &c)
{
    Report report(raw, vclab_report_free);
    if (!report)
        return error_exit(status);
    Text text{vclab_report_json(report.get(), c.no_timing ? 0 : 1)};
    if (c.out.empty()) {
        std::cout << text.p << "\n";
    } else if (!write_file(c.out, text.p)) {
        std::cerr << "vclab: cannot write '" << c.out << "'\n";
        return VCLAB_IO;
    }
    return status;
}

void add_common(CLI::App *cmd, Common &c, bool with_class)
{
    if (with_class) {
        cmd->add_option("--class", c.cls, "boxes, boxes-nd, cubes, degenerate, d0 (anchored), cuts")->capture_default_str();
        cmd->add_option("--anchor", c.anchor, "anchor box as JSON [[\"lo\",\"hi\"],...] or 'origin' (anchored class)");
    }
    cmd->add_option("--jobs,-j", c.jobs, "worker threads (default: available parallelism)")->envname("VCLAB_JOBS");
    cmd->add_option("--out,-o", c.out, "write the report here instead of stdout");
    cmd->add_flag("--no-timing", c.no_timing, "omit wall-clock fields from the report");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact VC-dimension laboratory for axis-aligned concept classes"};
    app.set_version_flag("--version", vclab_version());
    app.require_subcommand(1);

    Common c;
    std::string file, mask, kind = "cubes", level = "fast", points_out;
    std::size_t dim = 2, n_max = 0, n = 3, keep = 5, climb = 0;
    std::uint64_t trials = 1000;
    std::uint32_t range = 16;

    auto *carve = app.add_subcommand("carve", "find a region carving a subset out of a point set");
    carve->add_option("file", file, "point-set JSON file")->required();
    carve->add_option("--mask,-m", mask, "bit string (\"101\", point i is character i) or index list (\"{0,2}\")")->required();
    add_common(carve, c, true);

    auto *shatter = app.add_subcommand("shatter", "decide whether the class shatters the point set");
    auto *vcdim = app.add_subcommand("vcdim", "largest subset of the file that the class shatters");
    auto *coeff = app.add_subcommand("coeff", "number of subsets the class carves out of the point set");
    for (auto *cmd : {shatter, vcdim, coeff}) {
        cmd->add_option("file", file, "point-set JSON file")->required();
        cmd->add_option("--cap", c.cap, "largest set size accepted")->capture_default_str();
        add_common(cmd, c, true);
    }

    auto *witness = app.add_subcommand("witness", "emit a shattered construction");
    witness->add_option("--kind", kind, "d0 or cubes")->check(CLI::IsMember({"d0", "cubes"}))->capture_default_str();
    witness->add_option("--dim,-d", dim, "dimension")->required()->check(CLI::Range(1, 64));
    witness->add_flag("--no-verify", c.no_verify, "skip the shattering check");
    witness->add_option("--points-out", points_out, "also write the point set as a point-set file");
    witness->add_option("--cap", c.cap, "largest set size verified")->capture_default_str();
    add_common(witness, c, false);

    auto *ordinal = app.add_subcommand("ordinal-vc", "exact VC dimension of an ordinal class by exhaustive search");
    ordinal->add_option("--dim,-d", dim, "dimension")->required()->check(CLI::Range(1, 8));
    ordinal->add_option("--n-max", n_max, "largest set size searched (default: one past the expected value)");
    ordinal->add_option("--budget", c.budget, "configurations examined before giving up");
    add_common(ordinal, c, true);

    auto *resolve = app.add_subcommand("resolve-d2", "settle the degenerate-ball value for an even dimension");
    resolve->add_option("--dim,-d", dim, "even dimension")->capture_default_str();
    resolve->add_option("--budget", c.budget, "configurations examined before giving up");
    add_common(resolve, c, false);

    auto *search = app.add_subcommand("search-cubes", "randomised hill-climbing search for cube-shattered sets");
    search->add_option("--dim,-d", dim, "dimension")->capture_default_str();
    search->add_option("--n", n, "set size")->capture_default_str();
    search->add_option("--trials", trials, "random starts")->capture_default_str();
    search->add_option("--seed", c.seed, "random seed")->capture_default_str();
    search->add_option("--range", range, "coordinates drawn from [0, range)")->capture_default_str();
    search->add_option("--keep", keep, "best candidates reported")->capture_default_str();
    search->add_option("--climb", climb, "hill-climbing moves per trial (0: 2 * n * dim)");
    add_common(search, c, false);

    auto *verify = app.add_subcommand("verify-paper", "run the reproduction suite");
    verify->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}))->capture_default_str();
    verify->add_option("--seed", c.seed, "random seed")->capture_default_str();
    add_common(verify, c, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return VCLAB_USAGE;
    }

    try {
        vclab_report *report = nullptr;
        if (carve->parsed() || shatter->parsed() || vcdim->parsed() || coeff->parsed()) {
            auto o = make_options(c, true);
            vclab_points *raw = nullptr;
            if (auto s = vclab_points_load(file.c_str(), &raw); s != VCLAB_OK)
                return error_exit(s);
            Points pts(raw, vclab_points_free);
            vclab_status s = carve->parsed()    ? vclab_carve(pts.get(), mask.c_str(), o.get(), &report)
                             : shatter->parsed() ? vclab_shatter(pts.get(), o.get(), &report)
                             : vcdim->parsed()   ? vclab_vcdim(pts.get(), o.get(), &report)
                                                 : vclab_coeff(pts.get(), o.get(), &report);
            return finish(s, report, c);
        }
        if (witness->parsed()) {
            auto o = make_options(c, false);
            auto s = vclab_witness(kind.c_str(), dim, o.get(), &report);
            if (report && !points_out.empty()) {
                Text text{vclab_report_result_json(report)};
                auto points = nlohmann::ordered_json::parse(text.p).at("points");
                if (!write_file(points_out, points.dump(2))) {
                    vclab_report_free(report);
                    std::cerr << "vclab: cannot write '" << points_out << "'\n";
                    return VCLAB_IO;
                }
            }
            return finish(s, report, c);
        }
        if (ordinal->parsed()) {
            auto o = make_options(c, true);
            auto s = vclab_ordinal_vc(dim, n_max, o.get(), &report);
            return finish(s, report, c);
        }
        if (resolve->parsed()) {
            auto o = make_options(c, false);
            auto s = vclab_resolve_even(dim, o.get(), &report);
            return finish(s, report, c);
        }
        if (search->parsed()) {
            auto o = make_options(c, false);
            auto s = vclab_search_cubes(dim, n, trials, range, keep, climb, o.get(), &report);
            return finish(s, report, c);
        }
        if (verify->parsed()) {
            auto o = make_options(c, false);
            auto s = vclab_reproduce(level.c_str(), o.get(), &report);
            if (report) {
                Text text{vclab_report_result_json(report)};
                auto result = nlohmann::ordered_json::parse(text.p);
                for (const auto &item : result.at("items"))
                    std::cerr << (item.at("passed").get<bool>() ? "PASS " : "FAIL ") << item.at("id").get<int>() << "  "
                              << item.at("title").get<std::string>() << ": " << item.at("detail").get<std::string>()
                              << "\n";
            }
            return finish(s, report, c);
        }
    } catch (vclab_status s) {
        return error_exit(s);
    }
    return VCLAB_USAGE;
}
