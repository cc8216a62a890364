#include "c2t/rep_decomp.hpp"

#include "c2t/conf_quotient.hpp"

namespace c2t {

Decomposition decompose(const Sigma2Module& m)
{
    const gf2::BitMatrix& sigma = m.sigma;
    if (sigma.rows() != sigma.cols())
        throw NotAnInvolution("sigma is not square");
    const gf2::BitMatrix id = gf2::BitMatrix::identity(sigma.rows());
    if (sigma * sigma != id)
        throw NotAnInvolution("sigma squared is not the identity (d=" + std::to_string(m.torus_dimension) +
                              ", i=" + std::to_string(m.degree) + ")");
    const std::uint64_t dim = sigma.rows();
    const std::uint64_t regular = gf2::rank(sigma + id);
    return {dim, dim - 2 * regular, regular};
}

Decomposition conf_closed_form(int d, int i)
{
    require_torus_dimension(d);
    if (i < 0 || i >= 2 * d)
        return {};
    if (i < d)
        return torus_closed_form(d, i);
    std::uint64_t total = 0;
    for (int j = 0; j <= i; ++j)
        total += binomial(d, j) * binomial(d, i - j);
    const std::uint64_t relations = binomial(d, i - d);
    if (i % 2 == 0)
    {
        const std::uint64_t fixed = binomial(d, i / 2);
        return Decomposition::from_counts(fixed + relations, (total - fixed) / 2 - relations);
    }
    return Decomposition::from_counts(relations, total / 2 - relations);
}

// ---------------------------------------------------------------- printed formula

std::string HalfInteger::to_string() const
{
    if (is_integer())
        return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

bool PrintedFormula::matches(const Decomposition& dcmp) const noexcept
{
    return integral() && trivial.twice == 2 * static_cast<std::int64_t>(dcmp.trivial) &&
           regular.twice == 2 * static_cast<std::int64_t>(dcmp.regular);
}

DegreeCase classify_degree(int d, int i)
{
    if (i >= 2 * d)
        return DegreeCase::Vanishing;
    if (i < d)
        return i % 2 == 0 ? DegreeCase::BelowMiddleEven : DegreeCase::BelowMiddleOdd;
    return i % 2 == 0 ? DegreeCase::MiddleEven : DegreeCase::MiddleOdd;
}

const char* to_string(DegreeCase c)
{
    switch (c)
    {
        case DegreeCase::BelowMiddleEven: return "even, i < d";
        case DegreeCase::BelowMiddleOdd: return "odd, i < d";
        case DegreeCase::MiddleEven: return "even, d <= i < 2d";
        case DegreeCase::MiddleOdd: return "odd, d <= i < 2d";
        case DegreeCase::Vanishing: return "i >= 2d";
    }
    return "?";
}

PrintedFormula printed_formula(int d, int i)
{
    require_torus_dimension(d);
    auto b = [](int m, int n) { return static_cast<std::int64_t>(binomial(m, n)); };
    std::int64_t total = 0;
    for (int j = 0; j <= i; ++j)
        total += b(d, j) * b(d, i - j);
    const int k = i / 2;

    // Values are stored doubled so that the factor 1/2 stays exact.
    PrintedFormula f;
    switch (classify_degree(d, i))
    {
        case DegreeCase::BelowMiddleEven:
            f.trivial.twice = 2 * b(d, k);
            f.regular.twice = total - b(d, k);
            break;
        case DegreeCase::BelowMiddleOdd:
            f.regular.twice = total;
            break;
        case DegreeCase::MiddleEven:
            f.trivial.twice = 2 * (b(d, k) + b(d, i - d));
            f.regular.twice = total - b(d, k) - 2 * b(d, i - d);
            break;
        case DegreeCase::MiddleOdd:
            f.trivial.twice = 2 * b(d, i - d);
            f.regular.twice = total - b(d, k) - 2 * b(d, i - d);
            break;
        case DegreeCase::Vanishing:
            break;
    }
    return f;
}

ClosedFormReport closed_form_report(int d, int i)
{
    ClosedFormReport r;
    r.d = d;
    r.i = i;
    r.degree_case = classify_degree(d, i);
    r.brute = decompose(conf_module(d, i));
    r.corrected_formula = conf_closed_form(d, i);
    r.as_printed = printed_formula(d, i);
    return r;
}

std::vector<Decomposition> reduced_table(int d)
{
    require_torus_dimension(d);
    if (d < 1)
        throw std::invalid_argument("reduced table needs d >= 1");
    std::vector<Decomposition> rows;
    for (int i = 0; i < 2 * d; ++i)
        rows.push_back(decompose(conf_module(d, i)));
    rows[0].trivial -= 1;
    rows[0].dim -= 1;
    return rows;
}

} // namespace c2t
