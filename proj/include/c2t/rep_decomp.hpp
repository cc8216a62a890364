/**
 * Splitting F_2[Sigma_2]-modules into trivial and regular summands, and the
 * closed-form multiplicities for H^i(C_2(T^d); F_2).
 */
#ifndef C2T_REP_DECOMP_HPP
#define C2T_REP_DECOMP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "c2t/torus_algebra.hpp"

namespace c2t {

class NotAnInvolution : public std::domain_error
{
    public:
        using std::domain_error::domain_error;
};

/// regular = rank(sigma + 1), trivial = dim - 2 regular.  Throws NotAnInvolution.
Decomposition decompose(const Sigma2Module& m);

/// Multiplicities for H^i(C_2(T^d)), with the odd case in the form the dimension count forces.
Decomposition conf_closed_form(int d, int i);

/// An exact value with denominator 1 or 2.
struct HalfInteger
{
    std::int64_t twice = 0; // the value times two

    bool is_integer() const noexcept { return twice % 2 == 0; }
    std::int64_t numerator() const noexcept { return is_integer() ? twice / 2 : twice; }
    std::int64_t denominator() const noexcept { return is_integer() ? 1 : 2; }

    /// "7" or "15/2".
    std::string to_string() const;

    bool operator==(const HalfInteger&) const = default;
};

/// The published case formula, evaluated literally (odd case keeps its -C(d,k) term).
struct PrintedFormula
{
    HalfInteger trivial;
    HalfInteger regular;

    bool integral() const noexcept { return trivial.is_integer() && regular.is_integer(); }
    bool matches(const Decomposition& dcmp) const noexcept;
};

PrintedFormula printed_formula(int d, int i);

enum class DegreeCase
{
    BelowMiddleEven, // i = 2k < d
    BelowMiddleOdd,  // i = 2k + 1 < d
    MiddleEven,      // d <= i = 2k < 2d
    MiddleOdd,       // d <= i = 2k + 1 < 2d
    Vanishing,       // i >= 2d
};

DegreeCase classify_degree(int d, int i);
const char* to_string(DegreeCase c);

struct ClosedFormReport
{
    int d = 0;
    int i = 0;
    DegreeCase degree_case = DegreeCase::Vanishing;
    Decomposition brute;
    Decomposition corrected_formula;
    PrintedFormula as_printed;

    bool brute_matches_corrected() const noexcept { return brute == corrected_formula; }
    bool printed_matches_brute() const noexcept { return as_printed.matches(brute); }
};

ClosedFormReport closed_form_report(int d, int i);

/// Decompositions of the reduced groups in degrees 0 .. 2d-1.  Requires d >= 1.
std::vector<Decomposition> reduced_table(int d);

} // namespace c2t

#endif
