#include "c2t/cli.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "c2t/borel_ss.hpp"
#include "c2t/conf_quotient.hpp"
#include "c2t/rep_decomp.hpp"
#include "c2t/verify.hpp"

namespace c2t::cli {

namespace {

// Largest Kunneth degree space a single command will hold as a dense matrix
// (C(18, 9) = 48620 fits, C(20, 10) does not).
constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 16;

void require_dense(int d, int i)
{
    const std::uint64_t n = binomial(2 * d, i);
    if (n > kDenseLimit)
        throw UsageError("degree " + std::to_string(i) + " of T^" + std::to_string(d) + " x T^" + std::to_string(d) +
                         " has dimension " + std::to_string(n) + ", past the dense-matrix limit " +
                         std::to_string(kDenseLimit));
}

void require_torus(int d)
{
    if (d < 0)
        throw UsageError("--d must be non-negative, got " + std::to_string(d));
    if (d > kMaxTorusDimension)
        throw UsageError("--d must be at most " + std::to_string(kMaxTorusDimension));
}

ordered_json counts(const Decomposition& m)
{
    return {{"dim", m.dim}, {"trivial", m.trivial}, {"regular", m.regular}, {"text", m.to_string()}};
}

const char* printed_flag(const ClosedFormReport& r)
{
    if (!r.as_printed.integral())
        return "non-integer";
    return r.printed_matches_brute() ? "agrees" : "integer, differs";
}

OutputDocument make(const std::string& command, ordered_json parameters, Format format)
{
    OutputDocument doc;
    std::string echo = "c2t " + command;
    for (const auto& [key, value] : parameters.items())
    {
        if (value.is_boolean())
        {
            if (value.get<bool>())
                echo += " --" + key;
            continue;
        }
        echo += " --" + key + " " + (value.is_string() ? value.get<std::string>() : value.dump());
    }
    echo += std::string(" --format ") + to_string(format);
    parameters["format"] = to_string(format);
    doc.command = echo;
    doc.parameters = std::move(parameters);
    return doc;
}

} // namespace

OutputDocument cmd_compute(int d, int i, Format format)
{
    require_torus(d);
    if (i < 0)
        throw UsageError("--i must be non-negative, got " + std::to_string(i));
    require_dense(d, std::min(i, 2 * d));

    OutputDocument doc = make("compute", {{"d", d}, {"i", i}}, format);
    const ClosedFormReport r = closed_form_report(d, i);
    const PrintedFormula& printed = r.as_printed;

    ordered_json payload;
    payload["d"] = d;
    payload["i"] = i;
    payload["dim"] = r.brute.dim;
    payload["trivial"] = r.brute.trivial;
    payload["regular"] = r.brute.regular;
    payload["decomposition"] = r.brute.to_string();
    payload["closed_form"] = {
        {"degree_case", to_string(r.degree_case)},
        {"corrected", counts(r.corrected_formula)},
        {"brute_matches_corrected", r.brute_matches_corrected()},
        {"printed",
         {{"dim", HalfInteger{printed.trivial.twice + 2 * printed.regular.twice}.to_string()},
          {"trivial", printed.trivial.to_string()},
          {"regular", printed.regular.to_string()},
          {"integral", printed.integral()},
          {"matches_brute", r.printed_matches_brute()},
          {"flag", printed_flag(r)}}},
    };
    doc.payload = std::move(payload);
    if (!r.brute_matches_corrected())
        doc.exit_code = kExitVerificationFailed;
    return doc;
}

OutputDocument cmd_table(int d, bool reduced, Format format)
{
    require_torus(d);
    if (reduced && d == 0)
        throw UsageError("--reduced needs d >= 1 (C_2 of a point is empty)");
    require_dense(d, d);

    OutputDocument doc = make("table", {{"d", d}, {"reduced", reduced}}, format);
    ordered_json rows = ordered_json::array();
    for (int i = 0; i <= 2 * d; ++i)
    {
        Decomposition torus = decompose(torus_module(d, i));
        Decomposition conf = decompose(conf_module(d, i));
        if (reduced && i == 0)
        {
            for (Decomposition* m : {&torus, &conf})
            {
                m->trivial -= 1;
                m->dim -= 1;
            }
        }
        rows.push_back({{"degree", i}, {"torus_square", counts(torus)}, {"configuration", counts(conf)}});
    }
    doc.payload = {{"d", d}, {"reduced", reduced}, {"rows", std::move(rows)}};
    return doc;
}

OutputDocument cmd_ss(int d, const std::string& page_text, std::optional<int> pmax, Format format)
{
    require_torus(d);
    int page = 0;
    try
    {
        page = ss::parse_page(page_text);
    }
    catch (const std::invalid_argument& e)
    {
        throw UsageError(e.what());
    }
    if (pmax && *pmax < 0)
        throw UsageError("--pmax must be non-negative");

    ss::SSPage result;
    try
    {
        if (page == 2)
        {
            if (d < 1)
                throw UsageError("E2 needs d >= 1 (C_2 of a point is empty)");
            require_dense(d, d);
            result = ss::e2_page(d, pmax.value_or(ss::default_pmax(d)));
        }
        else
        {
            result = ss::later_page_fixture(d, page);
            if (pmax)
                result = result.with_pmax(*pmax);
        }
    }
    catch (const ss::UnsupportedPage& e)
    {
        throw UsageError(e.what());
    }

    OutputDocument doc =
        make("ss", {{"d", d}, {"page", ss::page_name(page)}, {"pmax", result.pmax}}, format);

    nlohmann::json page_json = result;
    ordered_json payload(page_json);
    ordered_json labels = ordered_json::array();
    for (int p = 0; p <= result.pmax; ++p)
        labels.push_back(p == 0 ? std::string("1") : p == 1 ? std::string("a") : "a^" + std::to_string(p));
    payload["column_labels"] = std::move(labels);

    // Complete only up to total degree pmax; past it columns leave the window.
    ordered_json diagonals = ordered_json::array();
    for (int n = 0; n <= result.pmax; ++n)
        diagonals.push_back(result.anti_diagonal(n));
    payload["anti_diagonals"] = std::move(diagonals);

    if (result.provenance == ss::Provenance::Fixture && page == ss::kInfinity)
    {
        const ss::UconfModule m = ss::uconf_fixture(d);
        payload["limit_module"] = {{"text", m.to_string()}, {"graded_dims", m.graded_dims(result.pmax)}};
    }
    doc.payload = std::move(payload);
    return doc;
}

OutputDocument cmd_check(const CheckOptions& options, Format format)
{
    const int dmax = options.dmax;
    if (dmax < 1)
        throw UsageError("--dmax must be at least 1");
    if (dmax > kCheckHardCap)
        throw UsageError("--dmax is capped at " + std::to_string(kCheckHardCap));
    if (dmax > kCheckDefaultCap && !options.allow_large)
        throw UsageError("--dmax above " + std::to_string(kCheckDefaultCap) +
                         " needs --allow-large (dense degree spaces grow as C(2d, d))");
    if (dmax > kCheckDefaultCap && options.log)
        *options.log << "warning: --dmax " << dmax << " builds dense matrices of side up to "
                     << binomial(2 * dmax, dmax) << "; expect large memory use\n";

    OutputDocument doc = make("check", {{"dmax", dmax}}, format);
    const unsigned jobs = options.jobs;

    using verify::CheckResult;
    using Step = std::function<CheckResult()>;
    const std::vector<Step> steps = {
        [&] { return verify::conf_sweep(dmax, jobs); },
        [&] { return verify::printed_formula_agreement(dmax); },
        [&] { return verify::published_tables(dmax); },
        [&] { return verify::torus_sweep(dmax, jobs); },
        [&] { return verify::poincare_identity(dmax); },
        [&] { return verify::phi_star_laws(dmax); },
        [&] { return verify::kernel_structure(dmax); },
        [&] { return verify::fixed_elements(dmax, jobs); },
        [&] { return verify::spectral_fixtures(2); },
        [&] { return verify::spectral_fixtures(3); },
        [&] { return verify::sw_heights(dmax); },
        [&] { return verify::duality_observation(dmax); },
    };

    ordered_json checks = ordered_json::array();
    ordered_json first_failure = nullptr;
    for (const Step& step : steps)
    {
        const auto start = std::chrono::steady_clock::now();
        const CheckResult r = step();
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        if (options.log)
        {
            *options.log << (r.passed ? "pass " : "FAIL ") << std::fixed << std::setprecision(3) << took.count()
                         << " s  " << r.name << '\n';
        }
        checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"notes", r.notes}});
        if (!r.passed && first_failure.is_null())
            first_failure = r.name + ": " + r.detail;
    }

    const bool passed = first_failure.is_null();
    doc.payload = {{"dmax", dmax},
                   {"passed", passed},
                   {"first_failure", first_failure},
                   {"checks", std::move(checks)}};
    if (!passed)
        doc.exit_code = kExitVerificationFailed;
    return doc;
}

OutputDocument cmd_poincare(int d, Format format)
{
    require_torus(d);
    require_dense(d, d);
    OutputDocument doc = make("poincare", {{"d", d}}, format);
    const std::vector<std::int64_t> brute = verify::poincare_brute(d);
    const std::vector<std::int64_t> product = verify::poincare_product(d);

    std::string text;
    for (std::size_t i = 0; i < brute.size(); ++i)
    {
        if (brute[i] == 0)
            continue;
        std::string term = i == 0 ? std::to_string(brute[i]) : brute[i] == 1 ? "" : std::to_string(brute[i]);
        if (i == 1)
            term += "t";
        else if (i > 1)
            term += "t^" + std::to_string(i);
        text += (text.empty() ? "" : " + ") + term;
    }
    doc.payload = {{"d", d},
                   {"coefficients", brute},
                   {"closed_form", "(1+t)^d ((1+t)^d - t^d)"},
                   {"closed_form_coefficients", product},
                   {"polynomial", text.empty() ? "0" : text},
                   {"equal", brute == product}};
    if (brute != product)
        doc.exit_code = kExitVerificationFailed;
    return doc;
}

} // namespace c2t::cli
