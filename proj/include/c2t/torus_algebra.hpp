/**
 * Mod 2 cellular cohomology of the torus T^d and of T^d x T^d.
 *
 * H^*(T^d; F_2) is the exterior algebra on the duals e*_1, ..., e*_d of the
 * 1-cells; a square-free monomial e*_S is stored as the bit mask of S (bit
 * j-1 for e*_j).  H^*(T^d x T^d; F_2) has the Kunneth basis of pairs
 * e*_S (x) e*_T, on which the coordinate swap acts by (S, T) -> (T, S).
 */
#ifndef C2T_TORUS_ALGEBRA_HPP
#define C2T_TORUS_ALGEBRA_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "c2t/gf2.hpp"

namespace c2t {

/// Largest torus dimension representable by the mask types.
inline constexpr int kMaxTorusDimension = 30;

/// C(m, n), zero when n < 0 or n > m.
std::uint64_t binomial(int m, int n);

/// Throws std::invalid_argument unless 0 <= d <= kMaxTorusDimension.
void require_torus_dimension(int d);

struct Monomial
{
    std::uint32_t mask = 0;

    int degree() const noexcept;
    bool contains(int index) const noexcept { return (mask >> (index - 1)) & 1u; }
    bool disjoint(Monomial other) const noexcept { return (mask & other.mask) == 0; }

    /// "1" for the unit, otherwise e.g. "e1e3".
    std::string to_string() const;

    static Monomial of(std::initializer_list<int> indices);

    auto operator<=>(const Monomial&) const = default;
};

struct TensorClass
{
    Monomial left;
    Monomial right;

    int degree() const noexcept { return left.degree() + right.degree(); }
    TensorClass swapped() const noexcept { return {right, left}; }
    bool is_swap_fixed() const noexcept { return left == right; }

    /// e.g. "e1e2|e3", with "1" for empty factors.
    std::string to_string() const;

    auto operator<=>(const TensorClass&) const = default;
};

/// Size-k subsets of {1..d} ordered by mask value; empty when k > d.
std::vector<Monomial> monomials(int d, int k);

/// Degree-i Kunneth basis ordered by (left.mask, right.mask); C(2d, i) entries.
std::vector<TensorClass> kunneth_basis(int d, int i);

/// Cup product of basis classes; nullopt when either side repeats a generator.
std::optional<TensorClass> cup(TensorClass a, TensorClass b);

/// A mod 2 sum of Kunneth basis classes.
class ClassSum
{
    public:
        ClassSum() = default;
        explicit ClassSum(TensorClass c) { terms_.insert(c); }

        void toggle(TensorClass c);
        ClassSum& operator+=(const ClassSum& other);
        friend ClassSum operator+(ClassSum lhs, const ClassSum& rhs) { return lhs += rhs; }

        /// Bilinear extension of cup().
        friend ClassSum operator*(const ClassSum& lhs, const ClassSum& rhs);

        bool empty() const noexcept { return terms_.empty(); }
        std::size_t size() const noexcept { return terms_.size(); }
        const std::set<TensorClass>& terms() const noexcept { return terms_; }

        bool operator==(const ClassSum&) const = default;

    private:
        std::set<TensorClass> terms_;
};

/// The degree-i Kunneth basis with index lookup and vector conversion.
class KunnethSpace
{
    public:
        KunnethSpace(int d, int degree);

        int torus_dimension() const noexcept { return d_; }
        int degree() const noexcept { return degree_; }
        std::size_t size() const noexcept { return basis_.size(); }
        const std::vector<TensorClass>& basis() const noexcept { return basis_; }

        /// Throws std::out_of_range for classes of another degree.
        std::size_t index_of(TensorClass c) const;

        gf2::BitVector to_vector(const ClassSum& s) const;
        ClassSum to_sum(const gf2::BitVector& v) const;

    private:
        int d_;
        int degree_;
        std::vector<TensorClass> basis_;
};

/// Permutation matrix of the swap (S, T) -> (T, S) on kunneth_basis(d, i).
gf2::BitMatrix sigma_matrix(int d, int i);

/**
 * Quotient presentation V / K of a module: V is the degree-i Kunneth space,
 * K the span of `kernel_generators`.
 */
struct QuotientPresentation
{
    std::vector<TensorClass> ambient_basis;
    std::vector<gf2::BitVector> kernel_generators;
    gf2::QuotientBasis quotient;
    gf2::BitMatrix ambient_sigma;
};

/**
 * A finite dimensional F_2[Sigma_2]-module given by an involution on a
 * labelled basis.  For quotients the label of basis vector k is the Kunneth
 * class whose coset it is.
 */
struct Sigma2Module
{
    int torus_dimension = 0;
    int degree = 0;
    std::vector<TensorClass> basis_labels;
    gf2::BitMatrix sigma;
    std::optional<QuotientPresentation> presentation;

    std::size_t dim() const noexcept { return sigma.rows(); }
};

/// Krull-Schmidt multiplicities: dim = trivial + 2 * regular.
struct Decomposition
{
    std::uint64_t dim = 0;
    std::uint64_t trivial = 0;
    std::uint64_t regular = 0;

    static Decomposition from_counts(std::uint64_t trivial, std::uint64_t regular)
    {
        return {trivial + 2 * regular, trivial, regular};
    }

    /// e.g. "F2^3 + F2[S2]^1", or "0".
    std::string to_string() const;

    bool operator==(const Decomposition&) const = default;
};

Sigma2Module torus_module(int d, int i);

Decomposition torus_closed_form(int d, int i);

} // namespace c2t

#endif
