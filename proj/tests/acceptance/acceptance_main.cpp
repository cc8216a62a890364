// Acceptance gate: one [PASS]/[FAIL] line per criterion, exact equality
// throughout.  Exit status is non-zero if any criterion fails.
//
// usage: c2t_acceptance PATH_TO_C2T

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "c2t/borel_ss.hpp"
#include "c2t/conf_quotient.hpp"
#include "c2t/rep_decomp.hpp"
#include "c2t/verify.hpp"

using namespace c2t;

namespace {

struct Verdict
{
    bool passed = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (passed)
            detail = why;
        passed = false;
    }
};

std::string at(int d, int i) { return "(" + std::to_string(d) + "," + std::to_string(i) + ")"; }

std::string join(const std::vector<std::uint64_t>& v)
{
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
}

// 1
Verdict oracle_equivalence()
{
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    int cells = 0;
    for (int d = 1; d <= 8; ++d)
    {
        for (int i = 0; i <= 2 * d; ++i, ++cells)
        {
            const Decomposition brute = decompose(conf_module(d, i));
            const Decomposition formula = conf_closed_form(d, i);
            if (brute != formula)
                v.fail("at " + at(d, i) + ": brute " + brute.to_string() + ", formula " + formula.to_string());
        }
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    if (took.count() >= 60.0)
        v.fail("sweep took " + std::to_string(took.count()) + " s single-threaded");
    if (v.passed)
    {
        std::ostringstream os;
        os.precision(2);
        os << std::fixed << cells << " cells, " << took.count() << " s single-threaded";
        v.detail = os.str();
    }
    return v;
}

// 2
Verdict printed_theorem_reconciliation()
{
    Verdict v;
    const ClosedFormReport r = closed_form_report(3, 3);
    if (r.as_printed.integral() || r.as_printed.regular.twice != 15)
        v.fail("printed odd case at (3,3) is " + r.as_printed.regular.to_string() + ", expected 15/2");
    if (r.brute.regular != 9)
        v.fail("brute regular at (3,3) is " + std::to_string(r.brute.regular));
    int compared = 0;
    for (int d = 1; d <= 8; ++d)
    {
        for (int i = 0; i <= 2 * d; ++i)
        {
            if (i % 2 != 0 && i >= d)
                continue;
            ++compared;
            const ClosedFormReport c = closed_form_report(d, i);
            if (!c.printed_matches_brute())
                v.fail("printed formula disagrees at " + at(d, i));
        }
    }
    if (v.passed)
        v.detail = "(3,3): printed 15/2 vs brute 9; " + std::to_string(compared) + " even or i < d cells agree";
    return v;
}

// 3
Verdict printed_tables()
{
    Verdict v;
    std::vector<std::string> mismatches;
    for (int d = 1; d <= 3; ++d)
    {
        const auto table = reduced_table(d);
        const auto published = verify::published_reduced_list(d);
        if (table.size() != published.size())
        {
            v.fail("d=" + std::to_string(d) + ": table length differs");
            continue;
        }
        for (std::size_t i = 0; i < table.size(); ++i)
        {
            const Decomposition expected = Decomposition::from_counts(published[i].first, published[i].second);
            if (table[i] != expected)
                mismatches.push_back("d=" + std::to_string(d) + " i=" + std::to_string(i) + ": computed " +
                                     table[i].to_string() + ", published " + expected.to_string());
        }
    }
    for (const std::string& m : mismatches)
        v.fail(m);
    if (mismatches.size() > 1)
        v.detail += " (+" + std::to_string(mismatches.size() - 1) + " more)";
    if (v.passed)
        v.detail = "d = 1, 2, 3 match cell for cell";
    return v;
}

// 4
Verdict torus_sweep()
{
    Verdict v;
    for (int d = 0; d <= 8; ++d)
        for (int i = 0; i <= 2 * d; ++i)
            if (decompose(torus_module(d, i)) != torus_closed_form(d, i))
                v.fail("at " + at(d, i));
    if (v.passed)
        v.detail = "d = 0..8, i = 0..2d";
    return v;
}

// 5
Verdict poincare()
{
    Verdict v;
    for (int d = 0; d <= 8; ++d)
    {
        std::vector<std::int64_t> lhs;
        for (int i = 0; i <= 2 * d; ++i)
            lhs.push_back(static_cast<std::int64_t>(conf_module(d, i).dim()));
        // (1+t)^d ((1+t)^d - t^d), coefficient of t^i.
        std::vector<std::int64_t> rhs(static_cast<std::size_t>(2 * d) + 1, 0);
        for (int a = 0; a <= d; ++a)
            for (int b = 0; b <= d; ++b)
                rhs[static_cast<std::size_t>(a + b)] +=
                    static_cast<std::int64_t>(binomial(d, a)) *
                    (static_cast<std::int64_t>(binomial(d, b)) - (b == d ? 1 : 0));
        if (lhs != rhs)
            v.fail("polynomials differ at d=" + std::to_string(d));
    }
    if (v.passed)
        v.detail = "d = 0..8";
    return v;
}

Verdict from_check(const verify::CheckResult& r)
{
    return {r.passed, r.detail};
}

// 8
Verdict e2_pages()
{
    using Rows = std::vector<std::vector<std::uint64_t>>;
    auto constant = [](std::uint64_t first, std::uint64_t rest, int n) {
        std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1, rest);
        row[0] = first;
        return row;
    };
    // Published E2 pages for d = 2 (p = 0..5) and d = 3 (p = 0..7), rows q = 0 up.
    const Rows figure2 = {constant(1, 1, 5), constant(2, 0, 5), constant(4, 3, 5), constant(2, 2, 5)};
    const Rows figure5 = {constant(1, 1, 7), constant(3, 0, 7), constant(9, 3, 7),
                          constant(10, 1, 7), constant(9, 6, 7), constant(3, 3, 7)};
    Verdict v;
    for (auto [d, pmax, figure] : {std::tuple{2, 5, &figure2}, std::tuple{3, 7, &figure5}})
    {
        const ss::SSPage page = ss::e2_page(d, pmax);
        if (page.qmax() + 1 != static_cast<int>(figure->size()))
            v.fail("d=" + std::to_string(d) + ": row count");
        for (int q = 0; q < static_cast<int>(figure->size()); ++q)
            for (int p = 0; p <= pmax; ++p)
                if (page.at(p, q) != (*figure)[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)])
                    v.fail("d=" + std::to_string(d) + " cell (" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
    if (v.passed)
        v.detail = "e2_page(2,5) and e2_page(3,7) match entry for entry";
    return v;
}

// 9
Verdict fixture_consistency()
{
    Verdict v;
    const std::vector<std::vector<std::uint64_t>> expected = {{1, 3, 4, 2, 0}, {1, 4, 10, 13, 9, 3, 0}};
    std::string summary;
    for (int d : {2, 3})
    {
        const ss::ConsistencyReport r = ss::consistency_check(d);
        if (r.checks.size() != 4)
            v.fail("d=" + std::to_string(d) + ": expected four checks");
        for (const ss::CheckOutcome& c : r.checks)
            if (!c.passed)
                v.fail("d=" + std::to_string(d) + " (" + c.id + "): " + c.detail);

        const auto graded = ss::uconf_fixture(d).graded_dims(2 * d);
        const ss::SSPage einf = ss::page_fixture(d, ss::kInfinity);
        std::vector<std::uint64_t> diagonal;
        for (int n = 0; n <= 2 * d; ++n)
            diagonal.push_back(einf.anti_diagonal(n));
        const auto& want = expected[static_cast<std::size_t>(d - 2)];
        if (graded != want || diagonal != want)
            v.fail("d=" + std::to_string(d) + ": graded " + join(graded) + ", anti-diagonals " + join(diagonal));
        summary += (summary.empty() ? "" : ", ") + std::string("d=") + std::to_string(d) + " " + join(want);
    }
    if (v.passed)
        v.detail = "checks a-d pass; graded dims " + summary;
    return v;
}

// 10
Verdict sw_height()
{
    Verdict v;
    for (int d = 2; d <= 30; ++d)
        if (ss::sw_height(d).height != d)
            v.fail("height at d=" + std::to_string(d));
    for (int d : {2, 3})
    {
        if (ss::sw_height(d).evidence != ss::HeightEvidence::FixtureVerified)
            v.fail("d=" + std::to_string(d) + " not fixture-verified");
        const ss::SSPage einf = ss::page_fixture(d, ss::kInfinity);
        if (einf.at(d, 0) == 0 || einf.at(d + 1, 0) != 0)
            v.fail("d=" + std::to_string(d) + ": q=0 row does not stop at alpha^" + std::to_string(d));
    }
    if (v.passed)
        v.detail = "d = 2..30; alpha^d != 0 = alpha^(d+1) in E_inf for d = 2, 3";
    return v;
}

// 11
std::string run(const std::string& command, int& status)
{
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
    {
        status = -1;
        return out;
    }
    char buffer[4096];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        out.append(buffer, n);
    status = pclose(pipe);
    return out;
}

Verdict determinism(const std::string& binary)
{
    Verdict v;
    const std::string command = "\"" + binary + "\" check --dmax 6 --format json 2>/dev/null";
    int s1 = 0, s2 = 0;
    const std::string first = run(command, s1);
    const std::string second = run(command, s2);
    if (s1 != 0 || s2 != 0)
        v.fail("check exited with status " + std::to_string(s1) + " / " + std::to_string(s2));
    if (first.empty())
        v.fail("no output");
    if (first != second)
        v.fail("outputs differ");
    if (v.passed)
        v.detail = std::to_string(first.size()) + " bytes, identical";
    return v;
}

} // namespace

int main(int argc, char** argv)
{
    if (argc < 2)
    {
        std::cerr << "usage: " << argv[0] << " PATH_TO_C2T\n";
        return 2;
    }
    const std::string binary = argv[1];

    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"oracle equivalence, d <= 8", oracle_equivalence},
        {"printed theorem reconciliation", printed_theorem_reconciliation},
        {"printed reduced tables d = 1, 2, 3", printed_tables},
        {"torus-square sweep, d <= 8", torus_sweep},
        {"Poincare identity, d <= 8", poincare},
        {"phi* laws, d <= 5", [] { return from_check(verify::phi_star_laws(5)); }},
        {"fixed element x, d <= 8", [] { return from_check(verify::fixed_elements(8, 1)); }},
        {"E2 pages d = 2, 3", e2_pages},
        {"fixture consistency d = 2, 3", fixture_consistency},
        {"Stiefel-Whitney height", sw_height},
        {"determinism of check --dmax 6 --format json", [&] { return determinism(binary); }},
    };

    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k)
    {
        Verdict v;
        try
        {
            v = criteria[k].second();
        }
        catch (const std::exception& e)
        {
            v.fail(std::string("exception: ") + e.what());
        }
        failed += !v.passed;
        std::cout << (v.passed ? "[PASS] " : "[FAIL] ") << k + 1 << ". " << criteria[k].first << ": " << v.detail
                  << '\n';
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size()
              << " acceptance criteria pass\n";
    return failed == 0 ? 0 : 1;
}
