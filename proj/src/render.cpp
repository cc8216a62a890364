#include <sstream>

#include "c2t/cli.hpp"

namespace c2t::cli {

Format parse_format(const std::string& text)
{
    if (text == "json")
        return Format::Json;
    if (text == "csv")
        return Format::Csv;
    if (text == "markdown" || text == "md")
        return Format::Markdown;
    if (text == "latex" || text == "tex")
        return Format::Latex;
    throw UsageError("unknown format '" + text + "' (json, csv, markdown, latex)");
}

const char* to_string(Format f)
{
    switch (f)
    {
        case Format::Json: return "json";
        case Format::Csv: return "csv";
        case Format::Markdown: return "markdown";
        case Format::Latex: return "latex";
    }
    return "?";
}

void to_json(ordered_json& j, const OutputDocument& doc)
{
    j = ordered_json{{"artifact_version", doc.artifact_version},
                     {"command", doc.command},
                     {"parameters", doc.parameters},
                     {"payload", doc.payload}};
}

void from_json(const ordered_json& j, OutputDocument& doc)
{
    doc.artifact_version = j.at("artifact_version").get<std::string>();
    doc.command = j.at("command").get<std::string>();
    doc.parameters = j.at("parameters");
    doc.payload = j.at("payload");
}

std::string latex_decomposition(std::uint64_t trivial, std::uint64_t regular)
{
    if (trivial == 0 && regular == 0)
        return "0";
    std::string s;
    if (trivial)
        s = "\\mathbb{F}_2^{\\oplus " + std::to_string(trivial) + "}";
    if (regular)
        s += (s.empty() ? "" : "\\oplus") + std::string("\\mathbb{F}_2[\\Sigma_2]^{\\oplus ") +
             std::to_string(regular) + "}";
    return s;
}

// ---------------------------------------------------------------- tables

namespace {

Cell num(const ordered_json& v) { return {v.is_string() ? v.get<std::string>() : v.dump(), ""}; }

Cell text(std::string s) { return {std::move(s), ""}; }

Cell decomposition(const ordered_json& m)
{
    return {m.at("text").get<std::string>(),
            latex_decomposition(m.at("trivial").get<std::uint64_t>(), m.at("regular").get<std::uint64_t>())};
}

std::vector<Table> compute_tables(const ordered_json& p)
{
    const ordered_json& cf = p.at("closed_form");
    const ordered_json& corrected = cf.at("corrected");
    const ordered_json& printed = cf.at("printed");

    Table t;
    t.title = "H^" + p.at("i").dump() + "(C_2(T^" + p.at("d").dump() + "); F_2), " +
              cf.at("degree_case").get<std::string>();
    t.header = {"quantity", "brute force", "corrected formula", "printed formula"};
    for (const char* key : {"dim", "trivial", "regular"})
        t.rows.push_back({text(key), num(p.at(key)), num(corrected.at(key)), num(printed.at(key))});
    const Cell brute = {p.at("decomposition").get<std::string>(),
                        latex_decomposition(p.at("trivial").get<std::uint64_t>(), p.at("regular").get<std::uint64_t>())};
    t.rows.push_back({text("decomposition"), brute, decomposition(corrected), text(printed.at("flag").get<std::string>())});
    return {t};
}

std::vector<Table> table_tables(const ordered_json& p)
{
    Table t;
    t.title = std::string(p.at("reduced").get<bool>() ? "reduced " : "") + "cohomology of T^" + p.at("d").dump() +
              " x T^" + p.at("d").dump() + " and C_2(T^" + p.at("d").dump() + ")";
    t.header = {"i", "torus dim", "torus trivial", "torus regular", "torus module",
                "C2 dim", "C2 trivial", "C2 regular", "C2 module"};
    for (const ordered_json& row : p.at("rows"))
    {
        std::vector<Cell> cells{num(row.at("degree"))};
        for (const char* side : {"torus_square", "configuration"})
        {
            const ordered_json& m = row.at(side);
            cells.push_back(num(m.at("dim")));
            cells.push_back(num(m.at("trivial")));
            cells.push_back(num(m.at("regular")));
            cells.push_back(decomposition(m));
        }
        t.rows.push_back(std::move(cells));
    }
    return {t};
}

std::vector<Table> ss_tables(const ordered_json& p)
{
    const ordered_json& rows = p.at("rows");
    const ordered_json& labels = p.at("column_labels");
    const std::string page = p.at("page").is_string() ? p.at("page").get<std::string>() : p.at("page").dump();

    Table t;
    t.title = "E_" + page + " page, d = " + p.at("d").dump() + " (" + p.at("provenance").get<std::string>() +
              (p.at("source_figure").get<std::string>().empty() ? "" : ", " + p.at("source_figure").get<std::string>()) +
              ")";
    t.header = {"q \\ p"};
    for (const ordered_json& l : labels)
        t.header.push_back(l.get<std::string>());
    t.header.push_back("later columns");
    // Top row first, as pages are usually drawn.
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
    {
        std::vector<Cell> cells{num(it->at("q"))};
        for (const ordered_json& v : it->at("dims"))
            cells.push_back(num(v));
        cells.push_back(it->at("eventually_constant").get<bool>() ? num(it->at("dims").back()) : text("?"));
        t.rows.push_back(std::move(cells));
    }

    Table diag;
    diag.title = "anti-diagonal sums p + q = n";
    diag.header = {"n", "sum"};
    const ordered_json& sums = p.at("anti_diagonals");
    for (std::size_t n = 0; n < sums.size(); ++n)
        diag.rows.push_back({text(std::to_string(n)), num(sums[n])});

    std::vector<Table> out{t, diag};
    if (p.contains("limit_module"))
    {
        const ordered_json& lim = p.at("limit_module");
        Table m;
        m.title = "H^*(UC_2(T^" + p.at("d").dump() + ")) = " + lim.at("text").get<std::string>();
        m.header = {"degree", "dim"};
        const ordered_json& dims = lim.at("graded_dims");
        for (std::size_t n = 0; n < dims.size(); ++n)
            m.rows.push_back({text(std::to_string(n)), num(dims[n])});
        out.push_back(m);
    }
    return out;
}

std::vector<Table> check_tables(const ordered_json& p)
{
    Table t;
    t.title = "check --dmax " + p.at("dmax").dump() + ": " + (p.at("passed").get<bool>() ? "passed" : "FAILED");
    t.header = {"check", "status", "detail"};
    for (const ordered_json& c : p.at("checks"))
        t.rows.push_back({text(c.at("name").get<std::string>()), text(c.at("passed").get<bool>() ? "pass" : "FAIL"),
                          text(c.at("detail").get<std::string>())});
    Table n;
    n.title = "notes";
    n.header = {"note"};
    for (const ordered_json& c : p.at("checks"))
        for (const ordered_json& note : c.at("notes"))
            n.rows.push_back({text(note.get<std::string>())});
    return {t, n};
}

std::vector<Table> poincare_tables(const ordered_json& p)
{
    Table t;
    t.title = "Poincare polynomial of C_2(T^" + p.at("d").dump() + "): " + p.at("polynomial").get<std::string>();
    t.header = {"i", "dim H^i", p.at("closed_form").get<std::string>()};
    const ordered_json& a = p.at("coefficients");
    const ordered_json& b = p.at("closed_form_coefficients");
    for (std::size_t i = 0; i < a.size(); ++i)
        t.rows.push_back({text(std::to_string(i)), num(a[i]), num(b[i])});
    return {t};
}

std::string command_name(const std::string& echo)
{
    std::istringstream in(echo);
    std::string program, name;
    in >> program >> name;
    return name;
}

// ---------------------------------------------------------------- writers

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string md_field(const std::string& s)
{
    std::string out;
    for (char c : s)
        out += c == '|' ? std::string("\\|") : std::string(1, c);
    return out;
}

std::string tex_text(const std::string& s)
{
    std::string out;
    for (char c : s)
    {
        switch (c)
        {
            case '\\': out += "\\textbackslash{}"; break;
            case '^': out += "\\^{}"; break;
            case '~': out += "\\~{}"; break;
            case '&': case '%': case '$': case '#': case '_': case '{': case '}':
                out += '\\';
                out += c;
                break;
            default: out += c;
        }
    }
    return out;
}

void write_csv(std::ostream& out, const std::vector<Table>& ts)
{
    for (std::size_t k = 0; k < ts.size(); ++k)
    {
        if (k)
            out << '\n';
        out << "# " << ts[k].title << '\n';
        for (std::size_t c = 0; c < ts[k].header.size(); ++c)
            out << (c ? "," : "") << csv_field(ts[k].header[c]);
        out << '\n';
        for (const auto& row : ts[k].rows)
        {
            for (std::size_t c = 0; c < row.size(); ++c)
                out << (c ? "," : "") << csv_field(row[c].text);
            out << '\n';
        }
    }
}

void write_markdown(std::ostream& out, const std::vector<Table>& ts)
{
    for (const Table& t : ts)
    {
        out << "\n### " << md_field(t.title) << "\n\n|";
        for (const std::string& h : t.header)
            out << ' ' << md_field(h) << " |";
        out << "\n|";
        for (std::size_t c = 0; c < t.header.size(); ++c)
            out << " --- |";
        out << '\n';
        for (const auto& row : t.rows)
        {
            out << '|';
            for (const Cell& cell : row)
                out << ' ' << md_field(cell.text) << " |";
            out << '\n';
        }
    }
}

void write_latex(std::ostream& out, const std::vector<Table>& ts)
{
    for (const Table& t : ts)
    {
        out << "\n% " << t.title << "\n\\begin{tabular}{l" << std::string(t.header.size() - 1, 'r') << "}\n\\hline\n";
        for (std::size_t c = 0; c < t.header.size(); ++c)
            out << (c ? " & " : "") << tex_text(t.header[c]);
        out << " \\\\\n\\hline\n";
        for (const auto& row : t.rows)
        {
            for (std::size_t c = 0; c < row.size(); ++c)
                out << (c ? " & " : "") << (row[c].latex.empty() ? tex_text(row[c].text) : "$" + row[c].latex + "$");
            out << " \\\\\n";
        }
        out << "\\hline\n\\end{tabular}\n";
    }
}

} // namespace

std::vector<Table> tables(const OutputDocument& doc)
{
    const std::string name = command_name(doc.command);
    if (name == "compute")
        return compute_tables(doc.payload);
    if (name == "table")
        return table_tables(doc.payload);
    if (name == "ss")
        return ss_tables(doc.payload);
    if (name == "check")
        return check_tables(doc.payload);
    if (name == "poincare")
        return poincare_tables(doc.payload);
    throw std::invalid_argument("no table layout for command '" + name + "'");
}

void render(std::ostream& out, const OutputDocument& doc, Format format)
{
    if (format == Format::Json)
    {
        out << ordered_json(doc).dump(2) << '\n';
        return;
    }
    const std::vector<Table> ts = tables(doc);
    const std::string banner = "c2t artifact " + doc.artifact_version + ": " + doc.command;
    switch (format)
    {
        case Format::Csv:
            out << "# " << banner << '\n';
            write_csv(out, ts);
            break;
        case Format::Markdown:
            out << "<!-- " << banner << " -->\n";
            write_markdown(out, ts);
            break;
        case Format::Latex:
            out << "% " << banner << '\n';
            write_latex(out, ts);
            break;
        case Format::Json: break;
    }
}

std::string render(const OutputDocument& doc, Format format)
{
    std::ostringstream os;
    render(os, doc, format);
    return os.str();
}

} // namespace c2t::cli
