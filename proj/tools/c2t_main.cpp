// c2t: mod 2 cohomology of C_2(T^d) as a Sigma_2-module, its spectral
// sequence pages, and the verification sweep.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "c2t/cli.hpp"

namespace {

using namespace c2t::cli;

int emit(const OutputDocument& doc, Format format, const std::string& out_path)
{
    if (out_path.empty())
    {
        render(std::cout, doc, format);
        std::cout.flush();
    }
    else
    {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
        {
            std::cerr << "error: cannot write " << out_path << '\n';
            return kExitUsage;
        }
        render(out, doc, format);
    }
    return doc.exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Mod 2 cohomology of the ordered configuration space of two points on a torus"};
    app.require_subcommand(1);

    std::string format_text = "json";
    std::string out_path;
    int d = 0;
    int i = 0;
    int dmax = kCheckDefaultCap;
    std::string page = "2";
    std::optional<int> pmax;
    bool reduced = false;
    bool allow_large = false;
    unsigned jobs = 0;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", format_text, "json, csv, markdown or latex")
            ->check(CLI::IsMember({"json", "csv", "markdown", "latex"}));
        sub->add_option("--out", out_path, "write to FILE instead of stdout");
    };

    CLI::App* compute = app.add_subcommand("compute", "decompose H^i(C_2(T^d)) and compare closed forms");
    compute->add_option("--d", d, "torus dimension")->required();
    compute->add_option("--i", i, "cohomological degree")->required();
    common(compute);

    CLI::App* table = app.add_subcommand("table", "all degrees 0..2d for the torus square and C_2(T^d)");
    table->add_option("--d", d, "torus dimension")->required();
    table->add_flag("--reduced", reduced, "reduced cohomology (drop the unit in degree 0)");
    common(table);

    CLI::App* ss = app.add_subcommand("ss", "a page of the Borel spectral sequence");
    ss->add_option("--d", d, "torus dimension")->required();
    ss->add_option("--page", page, "2, 3 or inf")->capture_default_str();
    ss->add_option("--pmax", pmax, "last column");
    common(ss);

    CLI::App* check = app.add_subcommand("check", "run the invariant sweep for d = 1..dmax");
    check->add_option("--dmax", dmax, "largest torus dimension")->capture_default_str();
    check->add_flag("--allow-large", allow_large, "accept dmax above the default cap");
    check->add_option("--jobs", jobs, "worker threads (0: all cores)");
    common(check);

    CLI::App* poincare = app.add_subcommand("poincare", "Poincare polynomial of C_2(T^d)");
    poincare->add_option("--d", d, "torus dimension")->required();
    common(poincare);

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
        app.exit(e);
        return kExitUsage;
    }

    try
    {
        const Format format = parse_format(format_text);
        if (compute->parsed())
            return emit(cmd_compute(d, i, format), format, out_path);
        if (table->parsed())
            return emit(cmd_table(d, reduced, format), format, out_path);
        if (ss->parsed())
            return emit(cmd_ss(d, page, pmax, format), format, out_path);
        if (poincare->parsed())
            return emit(cmd_poincare(d, format), format, out_path);

        CheckOptions options;
        options.dmax = dmax;
        options.allow_large = allow_large;
        options.jobs = jobs;
        options.log = &std::cerr;
        const OutputDocument doc = cmd_check(options, format);
        if (doc.exit_code != kExitOk)
            std::cerr << "check failed: " << doc.payload.at("first_failure").get<std::string>() << '\n';
        return emit(doc, format, out_path);
    }
    catch (const UsageError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerificationFailed;
    }
}
