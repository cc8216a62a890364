/**
 * Pages of the Serre spectral sequence of C_2(T^d) -> UC_2(T^d) -> RP^infinity.
 *
 * E_2^{p,q} = H^p(RP^infinity; H^q(C_2(T^d))) with local coefficients.  A
 * trivial summand F_2 of H^q contributes to every column, a regular summand
 * F_2[Sigma_2] only to column p = 0.  Later pages for d = 2, 3 are stored
 * as fixtures; there is no differential engine.
 */
#ifndef C2T_BOREL_SS_HPP
#define C2T_BOREL_SS_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace c2t::ss {

/// Page index of E_infinity.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

std::string page_name(int page); // "2", "3", "inf"
int parse_page(const std::string& text); // inverse of page_name; throws std::invalid_argument

class UnsupportedPage : public std::invalid_argument
{
    public:
        using std::invalid_argument::invalid_argument;
};

enum class Provenance
{
    Computed,
    Fixture,
};

struct PageRow
{
    int q = 0;
    std::vector<std::uint64_t> dims; // columns p = 0 .. pmax
    bool eventually_constant = true; // dims(p, q) = dims(pmax, q) for p > pmax

    bool operator==(const PageRow&) const = default;
};

struct SSPage
{
    int d = 0;
    int page = 2;
    int pmax = 0;
    std::vector<PageRow> rows; // q = 0 .. 2d-1
    Provenance provenance = Provenance::Computed;
    std::string source_figure; // empty for computed pages

    int qmax() const noexcept { return static_cast<int>(rows.size()) - 1; }

    /// dims(p, q); zero outside 0 <= q <= qmax.  Columns past pmax use the
    /// eventually-constant tail and throw std::out_of_range otherwise.
    std::uint64_t at(int p, int q) const;

    /// Same page with columns 0 .. new_pmax.
    SSPage with_pmax(int new_pmax) const;

    /// sum over p + q = n of dims(p, q).
    std::uint64_t anti_diagonal(int n) const;

    bool operator==(const SSPage&) const = default;
};

void to_json(nlohmann::json& j, const SSPage& page);
void from_json(const nlohmann::json& j, SSPage& page);

/// Default column count used by fixtures and the CLI.
int default_pmax(int d);

/// Computed E_2 from the module decompositions; requires d >= 1, pmax >= 0.
SSPage e2_page(int d, int pmax);

/// Transcribed page (2, 3, 4 or kInfinity) for d in {2, 3}, columns as printed.
SSPage page_fixture(int d, int page);

/// Pages past E_2: page in {3, kInfinity}, or 4 as a synonym of kInfinity when d = 2.
SSPage later_page_fixture(int d, int page);

// ---------------------------------------------------------------- F_2[alpha]-modules

/// multiplicity copies of F_2[alpha]/(alpha^truncation) on a generator of degree generator_degree.
struct AlphaModuleSummand
{
    int generator_degree = 0;
    int truncation = 1;
    int multiplicity = 1;
    std::string generator;

    bool operator==(const AlphaModuleSummand&) const = default;
};

struct UconfModule
{
    int d = 0;
    std::vector<AlphaModuleSummand> summands;

    /// Dimensions in degrees 0 .. max_degree.
    std::vector<std::uint64_t> graded_dims(int max_degree) const;

    /// e.g. "F2[a]/(a^3) + F2 u1^2 + ..."
    std::string to_string() const;
};

/// H^*(UC_2(T^d); F_2) for d in {2, 3}; for d = 2 with the x_2 truncation read as alpha^2.
UconfModule uconf_fixture(int d);

/// The summand list exactly as published (differs from uconf_fixture only for d = 2).
UconfModule uconf_as_printed(int d);

// ---------------------------------------------------------------- height

enum class HeightEvidence
{
    FixtureVerified, // alpha^d != 0 and alpha^{d+1} = 0 read off the E_infinity fixture
    Theorem,         // general d >= 2, from the embedding and surjectivity bounds
    LowDimension,    // d = 1: UC_2(S^1) is homotopy equivalent to a circle
};

const char* to_string(HeightEvidence e);

struct SwHeight
{
    int d = 0;
    int height = 0;
    HeightEvidence evidence = HeightEvidence::Theorem;
    std::string upper_bound;
    std::string lower_bound;
};

/// Requires d >= 1.  Throws std::logic_error if a fixture contradicts height d.
SwHeight sw_height(int d);

// ---------------------------------------------------------------- consistency

struct CheckOutcome
{
    std::string id;   // "a" .. "d"
    std::string name;
    bool passed = true;
    std::string detail; // names the failing cell "(r, p, q)" when not passed
};

struct ConsistencyReport
{
    int d = 0;
    std::vector<CheckOutcome> checks;
    std::vector<std::string> notes;

    bool passed() const noexcept;
};

struct FixtureSet
{
    SSPage e2;
    SSPage e3;
    SSPage e_infinity;
    UconfModule uconf;
};

FixtureSet builtin_fixtures(int d);

/// Checks (a) E_2 fixture = computed E_2, (b) E_infinity anti-diagonals = uconf
/// graded dimensions, (c) pages shrink entrywise, (d) every drop between pages
/// pairs off along differentials d_r : (p, q) -> (p + r, q - r + 1).
ConsistencyReport consistency_check(const FixtureSet& fixtures);
ConsistencyReport consistency_check(int d);

} // namespace c2t::ss

#endif
