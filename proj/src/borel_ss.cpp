#include "c2t/borel_ss.hpp"

#include <algorithm>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>

#include "c2t/conf_quotient.hpp"
#include "c2t/rep_decomp.hpp"
#include "fixtures_data.hpp"

namespace c2t::ss {

namespace {

constexpr int kSchemaVersion = 1;

void require_fixture_dimension(int d)
{
    if (d != 2 && d != 3)
        throw UnsupportedPage("fixtures exist only for d = 2 and d = 3 (requested d = " + std::to_string(d) +
                              "); later pages are not computed, there is no differential engine");
}

std::string cell_name(int page, int p, int q)
{
    return "(" + page_name(page) + ", " + std::to_string(p) + ", " + std::to_string(q) + ")";
}

std::string dims_string(const std::vector<std::uint64_t>& v)
{
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
}

nlohmann::json load_fixture(const std::string& name)
{
    return nlohmann::json::parse(detail::embedded_fixture(name));
}

AlphaModuleSummand summand_from_json(const nlohmann::json& j)
{
    AlphaModuleSummand s;
    s.generator_degree = j.at("degree").get<int>();
    s.truncation = j.at("truncation").get<int>();
    s.multiplicity = j.at("multiplicity").get<int>();
    s.generator = j.at("generator").get<std::string>();
    if (s.truncation < 1 || s.multiplicity < 0 || s.generator_degree < 0)
        throw std::invalid_argument("malformed alpha-module summand in fixture");
    return s;
}

UconfModule load_uconf(int d, const char* key)
{
    require_fixture_dimension(d);
    const nlohmann::json j = load_fixture("uconf_d" + std::to_string(d));
    UconfModule m;
    m.d = j.at("d").get<int>();
    const nlohmann::json& list = j.contains(key) ? j.at(key) : j.at("summands");
    for (const auto& item : list)
        m.summands.push_back(summand_from_json(item));
    return m;
}

// ---------------------------------------------------------------- differential bookkeeping

using FlowTraits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<boost::edge_capacity_t, long,
                    boost::property<boost::edge_residual_capacity_t, long,
                                    boost::property<boost::edge_reverse_t, FlowTraits::edge_descriptor>>>>;
using FlowEdge = FlowTraits::edge_descriptor;

class FlowNetwork
{
    public:
        explicit FlowNetwork(std::size_t nodes) : g_(nodes) {}

        FlowEdge add(std::size_t from, std::size_t to, long capacity)
        {
            auto capacity_map = get(boost::edge_capacity, g_);
            auto reverse_map = get(boost::edge_reverse, g_);
            const FlowEdge e = boost::add_edge(from, to, g_).first;
            const FlowEdge r = boost::add_edge(to, from, g_).first;
            capacity_map[e] = capacity;
            capacity_map[r] = 0;
            reverse_map[e] = r;
            reverse_map[r] = e;
            return e;
        }

        long max_flow(std::size_t source, std::size_t sink)
        {
            return boost::push_relabel_max_flow(g_, source, sink);
        }

        bool saturated(FlowEdge e) const { return get(boost::edge_residual_capacity, g_, e) == 0; }

    private:
        FlowGraph g_;
};

/**
 * Pairs the drops from page `from` to page `to` along differentials of length
 * in [rmin, rmax].  Each unit of drop is matched with one unit in a cell one
 * total degree away, so the problem is a bipartite b-matching between cells
 * of even and odd total degree.  Cells with p <= pmax must be matched in full;
 * the columns just past pmax may absorb targets of differentials that leave
 * the window.  Solved as a max-flow with lower bounds.
 */
CheckOutcome check_differentials(const SSPage& from, const SSPage& to, int rmin, int rmax)
{
    CheckOutcome out{"d", "drops between E" + page_name(from.page) + " and E" + page_name(to.page) +
                              " pair along differentials", true, ""};
    const int pmax = std::min(from.pmax, to.pmax);
    const int rows = static_cast<int>(std::max(from.rows.size(), to.rows.size()));
    const int pext = pmax + rmax;
    const int columns = pext + 1;
    constexpr long kUnbounded = 1L << 40;

    auto node = [&](int p, int q) { return static_cast<std::size_t>(4 + q * columns + p); };
    auto required = [&](int p) { return p <= pmax; };

    std::vector<long> drop(static_cast<std::size_t>(rows * columns), 0);
    for (int q = 0; q < rows; ++q)
    {
        for (int p = 0; p <= pext; ++p)
        {
            long value = kUnbounded;
            try
            {
                value = static_cast<long>(from.at(p, q)) - static_cast<long>(to.at(p, q));
            }
            catch (const std::out_of_range&)
            {
                // unknown past the window; leave unbounded
            }
            if (value < 0)
            {
                out.passed = false;
                out.detail = "cell " + cell_name(from.page, p, q) + " grows from E" + page_name(from.page) +
                             " to E" + page_name(to.page);
                return out;
            }
            drop[static_cast<std::size_t>(q * columns + p)] = value;
        }
    }
    auto drop_at = [&](int p, int q) { return drop[static_cast<std::size_t>(q * columns + p)]; };

    // 0 = S', 1 = T', 2 = S, 3 = T, then cells.
    FlowNetwork net(static_cast<std::size_t>(4 + rows * columns));
    struct Lower
    {
        int p, q;
        FlowEdge edge;
    };
    std::vector<Lower> lower;
    long lower_even = 0;
    long lower_odd = 0;
    long demand = 0;

    for (int q = 0; q < rows; ++q)
    {
        for (int p = 0; p <= pext; ++p)
        {
            const long units = drop_at(p, q);
            if (units == 0)
                continue;
            const bool even = (p + q) % 2 == 0;
            if (required(p))
            {
                if (even)
                {
                    lower.push_back({p, q, net.add(0, node(p, q), units)});
                    lower_even += units;
                }
                else
                {
                    lower.push_back({p, q, net.add(node(p, q), 1, units)});
                    lower_odd += units;
                }
                demand += units;
            }
            else if (even)
                net.add(2, node(p, q), units);
            else
                net.add(node(p, q), 3, units);
        }
    }
    if (lower_even > 0)
        net.add(2, 1, lower_even);
    if (lower_odd > 0)
        net.add(0, 3, lower_odd);
    net.add(3, 2, kUnbounded);

    for (int q = 0; q < rows; ++q)
    {
        for (int p = 0; p <= pmax; ++p)
        {
            if (drop_at(p, q) == 0)
                continue;
            for (int r = rmin; r <= rmax; ++r)
            {
                const int tp = p + r;
                const int tq = q - r + 1;
                if (tq < 0 || tq >= rows || tp > pext || drop_at(tp, tq) == 0)
                    continue;
                const bool source_even = (p + q) % 2 == 0;
                if (source_even)
                    net.add(node(p, q), node(tp, tq), kUnbounded);
                else
                    net.add(node(tp, tq), node(p, q), kUnbounded);
            }
        }
    }

    const long flow = net.max_flow(0, 1);
    if (flow == demand)
    {
        out.detail = "all drops paired with differentials d_r, r in [" + std::to_string(rmin) + ", " +
                     std::to_string(rmax) + "]";
        return out;
    }
    out.passed = false;
    for (const Lower& l : lower)
    {
        if (!net.saturated(l.edge))
        {
            out.detail = "rank drop at cell " + cell_name(from.page, l.p, l.q) +
                         " has no matching drop at the other end of a differential";
            return out;
        }
    }
    out.detail = "drops do not pair up (flow " + std::to_string(flow) + " of " + std::to_string(demand) + ")";
    return out;
}

} // namespace

// ---------------------------------------------------------------- pages

std::string page_name(int page) { return page == kInfinity ? "inf" : std::to_string(page); }

int parse_page(const std::string& text)
{
    if (text == "inf" || text == "infinity")
        return kInfinity;
    std::size_t used = 0;
    int value = 0;
    try
    {
        value = std::stoi(text, &used);
    }
    catch (const std::exception&)
    {
        throw std::invalid_argument("page must be an integer >= 2 or 'inf', got '" + text + "'");
    }
    if (used != text.size() || value < 2)
        throw std::invalid_argument("page must be an integer >= 2 or 'inf', got '" + text + "'");
    return value;
}

std::uint64_t SSPage::at(int p, int q) const
{
    if (p < 0 || q < 0 || q > qmax())
        return 0;
    const PageRow& row = rows[static_cast<std::size_t>(q)];
    if (p <= pmax)
        return row.dims[static_cast<std::size_t>(p)];
    if (!row.eventually_constant)
        throw std::out_of_range("column " + std::to_string(p) + " lies past pmax of a row that is not eventually constant");
    return row.dims.back();
}

SSPage SSPage::with_pmax(int new_pmax) const
{
    if (new_pmax < 0)
        throw std::invalid_argument("pmax must be non-negative");
    SSPage out = *this;
    out.pmax = new_pmax;
    for (PageRow& row : out.rows)
    {
        std::vector<std::uint64_t> dims;
        for (int p = 0; p <= new_pmax; ++p)
            dims.push_back(at(p, row.q));
        row.dims = std::move(dims);
    }
    return out;
}

std::uint64_t SSPage::anti_diagonal(int n) const
{
    std::uint64_t total = 0;
    for (int q = 0; q <= std::min(n, qmax()); ++q)
        total += at(n - q, q);
    return total;
}

void to_json(nlohmann::json& j, const SSPage& page)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const PageRow& row : page.rows)
        rows.push_back({{"q", row.q}, {"dims", row.dims}, {"eventually_constant", row.eventually_constant}});
    j = nlohmann::json{{"schema_version", kSchemaVersion}, {"d", page.d}};
    if (page.page == kInfinity)
        j["page"] = "inf";
    else
        j["page"] = page.page;
    j["pmax"] = page.pmax;
    j["provenance"] = page.provenance == Provenance::Fixture ? "fixture" : "computed";
    j["source_figure"] = page.source_figure;
    j["rows"] = std::move(rows);
}

void from_json(const nlohmann::json& j, SSPage& page)
{
    if (j.value("schema_version", kSchemaVersion) != kSchemaVersion)
        throw std::invalid_argument("unsupported page schema version");
    page.d = j.at("d").get<int>();
    const auto& pg = j.at("page");
    page.page = pg.is_string() ? parse_page(pg.get<std::string>()) : pg.get<int>();
    page.source_figure = j.value("source_figure", std::string{});
    const std::string provenance = j.value("provenance", page.source_figure.empty() ? "computed" : "fixture");
    page.provenance = provenance == "fixture" ? Provenance::Fixture : Provenance::Computed;
    page.rows.clear();
    std::size_t width = 0;
    for (const auto& r : j.at("rows"))
    {
        PageRow row;
        row.q = r.at("q").get<int>();
        row.dims = r.at("dims").get<std::vector<std::uint64_t>>();
        row.eventually_constant = r.value("eventually_constant", true);
        if (row.q != static_cast<int>(page.rows.size()))
            throw std::invalid_argument("page rows must be listed for q = 0, 1, 2, ... in order");
        if (row.dims.empty() || (width != 0 && row.dims.size() != width))
            throw std::invalid_argument("page rows must have equal non-zero length");
        width = row.dims.size();
        page.rows.push_back(std::move(row));
    }
    page.pmax = static_cast<int>(width) - 1;
    if (j.contains("pmax") && j.at("pmax").get<int>() != page.pmax)
        throw std::invalid_argument("pmax does not match the row length");
}

int default_pmax(int d) { return 2 * d + 2; }

SSPage e2_page(int d, int pmax)
{
    if (d < 1)
        throw std::invalid_argument("E2 page needs d >= 1");
    if (pmax < 0)
        throw std::invalid_argument("pmax must be non-negative");
    SSPage page;
    page.d = d;
    page.page = 2;
    page.pmax = pmax;
    for (int q = 0; q < 2 * d; ++q)
    {
        const Decomposition dcmp = decompose(conf_module(d, q));
        PageRow row;
        row.q = q;
        row.dims.assign(static_cast<std::size_t>(pmax) + 1, dcmp.trivial);
        row.dims[0] = dcmp.trivial + dcmp.regular;
        page.rows.push_back(std::move(row));
    }
    return page;
}

SSPage page_fixture(int d, int page)
{
    require_fixture_dimension(d);
    std::string stem;
    if (page == 2)
        stem = "e2";
    else if (page == 3)
        stem = "e3";
    else if (page == kInfinity || (d == 2 && page == 4))
        stem = "einf";
    else
        throw UnsupportedPage("no fixture for E" + page_name(page) + " at d = " + std::to_string(d) +
                              "; later pages are not computed, there is no differential engine");
    SSPage result = load_fixture(stem + "_d" + std::to_string(d)).get<SSPage>();
    result.provenance = Provenance::Fixture;
    return result;
}

SSPage later_page_fixture(int d, int page)
{
    if (page == 2)
        throw UnsupportedPage("E2 is computed, not a later page");
    return page_fixture(d, page);
}

// ---------------------------------------------------------------- alpha-modules

std::vector<std::uint64_t> UconfModule::graded_dims(int max_degree) const
{
    std::vector<std::uint64_t> dims(static_cast<std::size_t>(max_degree) + 1, 0);
    for (const AlphaModuleSummand& s : summands)
    {
        for (int k = 0; k < s.truncation; ++k)
        {
            const int degree = s.generator_degree + k;
            if (degree <= max_degree)
                dims[static_cast<std::size_t>(degree)] += static_cast<std::uint64_t>(s.multiplicity);
        }
    }
    return dims;
}

std::string UconfModule::to_string() const
{
    std::ostringstream os;
    for (std::size_t k = 0; k < summands.size(); ++k)
    {
        const AlphaModuleSummand& s = summands[k];
        if (k)
            os << " + ";
        os << (s.truncation == 1 ? std::string("F2") : "F2[a]/(a^" + std::to_string(s.truncation) + ")");
        if (s.generator != "1")
            os << " " << s.generator;
        if (s.multiplicity != 1)
            os << "^" << s.multiplicity;
    }
    return os.str();
}

UconfModule uconf_fixture(int d) { return load_uconf(d, "summands"); }

UconfModule uconf_as_printed(int d) { return load_uconf(d, "printed_summands"); }

// ---------------------------------------------------------------- height

const char* to_string(HeightEvidence e)
{
    switch (e)
    {
        case HeightEvidence::FixtureVerified: return "fixture-verified";
        case HeightEvidence::Theorem: return "theorem";
        case HeightEvidence::LowDimension: return "low-dimension";
    }
    return "?";
}

SwHeight sw_height(int d)
{
    if (d < 1)
        throw std::invalid_argument("Stiefel-Whitney height needs d >= 1");
    SwHeight h;
    h.d = d;
    h.height = d;
    if (d == 1)
    {
        h.evidence = HeightEvidence::LowDimension;
        h.upper_bound = "UC2(S^1) is homotopy equivalent to S^1, so alpha^2 = 0";
        h.lower_bound = "alpha restricts to the generator of H^1(UC2(S^1))";
        return h;
    }
    h.upper_bound = "T^d embeds in R^(d+1); C2(R^(d+1)) is Sigma2-equivalent to S^d, so alpha^(d+1) = 0";
    h.lower_bound = "E2 of the torus square surjects onto E2 in rows q <= d, so alpha^d survives";
    if (d > 3)
    {
        h.evidence = HeightEvidence::Theorem;
        return h;
    }
    const SSPage einf = page_fixture(d, kInfinity);
    int leading = 0;
    while (leading <= einf.pmax && einf.at(leading, 0) == 1)
        ++leading;
    for (int p = leading; p <= einf.pmax; ++p)
    {
        if (einf.at(p, 0) != 0)
            throw std::logic_error("E_infinity row q = 0 is not of the form 1..1 0..0");
    }
    if (leading != d + 1)
        throw std::logic_error("E_infinity fixture gives height " + std::to_string(leading - 1) + ", expected " +
                               std::to_string(d));
    h.evidence = HeightEvidence::FixtureVerified;
    return h;
}

// ---------------------------------------------------------------- consistency

bool ConsistencyReport::passed() const noexcept
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed; });
}

FixtureSet builtin_fixtures(int d)
{
    return {page_fixture(d, 2), page_fixture(d, 3), page_fixture(d, kInfinity), uconf_fixture(d)};
}

ConsistencyReport consistency_check(const FixtureSet& f)
{
    ConsistencyReport report;
    const int d = f.e2.d;
    report.d = d;

    // (a)
    {
        CheckOutcome c{"a", "E2 fixture equals computed E2", true, "all cells agree"};
        const SSPage computed = e2_page(d, f.e2.pmax);
        for (int q = 0; q < 2 * d && c.passed; ++q)
        {
            for (int p = 0; p <= f.e2.pmax; ++p)
            {
                if (f.e2.at(p, q) != computed.at(p, q))
                {
                    c.passed = false;
                    c.detail = "cell " + cell_name(2, p, q) + ": fixture " + std::to_string(f.e2.at(p, q)) +
                               ", computed " + std::to_string(computed.at(p, q));
                    break;
                }
            }
        }
        if (c.passed && f.e2.qmax() != 2 * d - 1)
        {
            c.passed = false;
            c.detail = "E2 fixture has " + std::to_string(f.e2.rows.size()) + " rows, expected " +
                       std::to_string(2 * d);
        }
        report.checks.push_back(std::move(c));
    }

    // (b)
    {
        CheckOutcome c{"b", "E_infinity anti-diagonals equal graded dimensions of the module table", true, ""};
        const std::vector<std::uint64_t> graded = f.uconf.graded_dims(2 * d);
        std::vector<std::uint64_t> diagonal;
        for (int n = 0; n <= 2 * d; ++n)
            diagonal.push_back(f.e_infinity.anti_diagonal(n));
        if (graded == diagonal)
            c.detail = "graded dims " + dims_string(graded);
        else
        {
            c.passed = false;
            for (int n = 0; n <= 2 * d; ++n)
            {
                if (graded[static_cast<std::size_t>(n)] != diagonal[static_cast<std::size_t>(n)])
                {
                    c.detail = "total degree " + std::to_string(n) + ": E_infinity anti-diagonal " +
                               std::to_string(diagonal[static_cast<std::size_t>(n)]) + ", module table " +
                               std::to_string(graded[static_cast<std::size_t>(n)]);
                    break;
                }
            }
        }
        report.checks.push_back(std::move(c));
    }

    // (c)
    {
        CheckOutcome c{"c", "pages shrink entrywise E2 >= E3 >= E_infinity", true, "monotone"};
        const int pmax = std::min({f.e2.pmax, f.e3.pmax, f.e_infinity.pmax});
        const SSPage* chain[] = {&f.e2, &f.e3, &f.e_infinity};
        for (int k = 0; k + 1 < 3 && c.passed; ++k)
        {
            for (int q = 0; q < 2 * d && c.passed; ++q)
            {
                for (int p = 0; p <= pmax; ++p)
                {
                    if (chain[k + 1]->at(p, q) > chain[k]->at(p, q))
                    {
                        c.passed = false;
                        c.detail = "cell " + cell_name(chain[k + 1]->page, p, q) + " exceeds E" +
                                   page_name(chain[k]->page);
                        break;
                    }
                }
            }
        }
        report.checks.push_back(std::move(c));
    }

    // (d)
    {
        CheckOutcome first = check_differentials(f.e2, f.e3, 2, 2);
        CheckOutcome second = check_differentials(f.e3, f.e_infinity, 3, 2 * d);
        CheckOutcome c{"d", "rank drops pair along differentials of bidegree (r, 1 - r)", true,
                       "E2->E3: " + first.detail + "; E3->Einf: " + second.detail};
        if (!first.passed)
        {
            c.passed = false;
            c.detail = "E2->E3: " + first.detail;
        }
        else if (!second.passed)
        {
            c.passed = false;
            c.detail = "E3->Einf: " + second.detail;
        }
        report.checks.push_back(std::move(c));
    }
    return report;
}

ConsistencyReport consistency_check(int d)
{
    ConsistencyReport report = consistency_check(builtin_fixtures(d));
    if (d == 2)
    {
        const UconfModule printed = uconf_as_printed(2);
        const UconfModule used = uconf_fixture(2);
        const SSPage einf = page_fixture(2, kInfinity);
        std::vector<std::uint64_t> diagonal;
        for (int n = 0; n <= 4; ++n)
            diagonal.push_back(einf.anti_diagonal(n));
        report.notes.push_back("module table as published: " + printed.to_string() + " -> graded dims " +
                               dims_string(printed.graded_dims(4)));
        report.notes.push_back("module table used (x2 truncated at a^2): " + used.to_string() +
                               " -> graded dims " + dims_string(used.graded_dims(4)));
        report.notes.push_back("E_infinity anti-diagonals " + dims_string(diagonal) +
                               "; degree 4 must vanish on the open 4-manifold UC2(T^2)");
    }
    return report;
}

} // namespace c2t::ss
