/**
 * Dense bit-packed linear algebra over the two-element field.
 *
 * Vectors are stored as 64-bit words, bit j of the vector living in bit
 * (j % 64) of word (j / 64).  Matrices are lists of row vectors and act on
 * column vectors: (M v)_r = <row_r, v>.  Column j of a matrix is therefore
 * the image of the j-th standard basis vector.
 *
 * Echelon forms always pivot on the leftmost available column, so coset
 * representatives and kernel bases are reproducible across runs.
 */
#ifndef C2T_GF2_HPP
#define C2T_GF2_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace c2t::gf2 {

class DimensionMismatch : public std::invalid_argument
{
    public:
        using std::invalid_argument::invalid_argument;
};

/// Raised when a map does not carry a subspace into itself.
class SubspaceNotInvariant : public std::domain_error
{
    public:
        using std::domain_error::domain_error;
};

class BitVector
{
    public:
        static constexpr std::size_t npos = static_cast<std::size_t>(-1);

        BitVector() = default;
        explicit BitVector(std::size_t n);

        static BitVector unit(std::size_t n, std::size_t i);

        /// Parses "0110"; character j becomes coordinate j.
        static BitVector from_string(std::string_view bits);

        std::size_t size() const noexcept { return n_; }

        bool test(std::size_t i) const
        {
            return (words_[i >> 6] >> (i & 63)) & 1u;
        }

        void set(std::size_t i, bool value = true)
        {
            const std::uint64_t mask = std::uint64_t{1} << (i & 63);
            if (value)
                words_[i >> 6] |= mask;
            else
                words_[i >> 6] &= ~mask;
        }

        void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

        BitVector& operator^=(const BitVector& other);
        friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }

        bool any() const noexcept;
        bool none() const noexcept { return !any(); }
        std::size_t count() const noexcept;

        /// Index of the lowest set coordinate at or after `from`, or npos.
        std::size_t first_set(std::size_t from = 0) const noexcept;

        /// Inner product <this, other> in GF(2).
        bool dot(const BitVector& other) const;

        template <typename F>
        void for_each_set(F&& f) const
        {
            for (std::size_t w = 0; w < words_.size(); ++w)
            {
                std::uint64_t word = words_[w];
                while (word)
                {
                    f(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
                    word &= word - 1;
                }
            }
        }

        std::span<const std::uint64_t> words() const noexcept { return words_; }

        std::string to_string() const;

        bool operator==(const BitVector&) const = default;

    private:
        std::size_t n_ = 0;
        std::vector<std::uint64_t> words_;
};

class BitMatrix
{
    public:
        BitMatrix() = default;
        BitMatrix(std::size_t rows, std::size_t cols);

        /// All rows must have length `cols`.
        BitMatrix(std::size_t cols, std::vector<BitVector> rows);

        static BitMatrix identity(std::size_t n);

        /// Rows given as bit strings, e.g. {"110", "011"}.
        static BitMatrix from_strings(std::size_t cols, const std::vector<std::string>& rows);

        std::size_t rows() const noexcept { return rows_.size(); }
        std::size_t cols() const noexcept { return cols_; }

        const BitVector& row(std::size_t r) const { return rows_[r]; }
        const std::vector<BitVector>& row_vectors() const noexcept { return rows_; }

        bool test(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
        void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }

        /// M v.
        BitVector apply(const BitVector& v) const;

        BitMatrix transposed() const;

        bool is_zero() const noexcept;

        BitMatrix& operator+=(const BitMatrix& other);
        friend BitMatrix operator+(BitMatrix lhs, const BitMatrix& rhs) { return lhs += rhs; }

        /// Product; cost scales with the number of set bits of the left factor.
        friend BitMatrix operator*(const BitMatrix& lhs, const BitMatrix& rhs);

        bool operator==(const BitMatrix&) const = default;

    private:
        std::size_t cols_ = 0;
        std::vector<BitVector> rows_;
};

std::size_t rank(const BitMatrix& m);

/// Basis of {v : M v = 0}; one vector per non-pivot column of the reduced form.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

/**
 * A quotient V / K of an ambient coordinate space V = GF(2)^n.
 *
 * K is kept in reduced row echelon form.  The non-pivot coordinates index a
 * basis of V / K: the coset of e_f for each free coordinate f.  reduce(v)
 * clears every pivot coordinate of v using the rows of K and is the canonical
 * representative of v + K.
 */
class QuotientBasis
{
    public:
        QuotientBasis() = default;
        QuotientBasis(std::size_t ambient_dim, std::span<const BitVector> subspace);

        std::size_t ambient_dim() const noexcept { return ambient_dim_; }
        std::size_t dim() const noexcept { return free_.size(); }
        std::size_t subspace_dim() const noexcept { return basis_.size(); }

        const std::vector<BitVector>& subspace_basis() const noexcept { return basis_; }
        const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
        const std::vector<std::size_t>& free_coordinates() const noexcept { return free_; }

        BitVector reduce(const BitVector& v) const;

        /// Coordinates of v + K with respect to the free-coordinate basis.
        BitVector coordinates(const BitVector& v) const;

        /// Canonical ambient representative of a coset given in coordinates.
        BitVector lift(const BitVector& coords) const;

        bool contains(const BitVector& v) const { return reduce(v).none(); }

    private:
        std::size_t ambient_dim_ = 0;
        std::vector<BitVector> basis_;
        std::vector<std::size_t> pivots_;
        std::vector<std::size_t> free_;
        std::vector<std::size_t> free_index_; // ambient coordinate -> quotient coordinate or npos
};

QuotientBasis quotient_structure(std::size_t ambient_dim, std::span<const BitVector> subspace);

/// Matrix of the map V/K -> V/K induced by M; throws SubspaceNotInvariant if M K is not inside K.
BitMatrix induced_map_on_quotient(const BitMatrix& m, const QuotientBasis& q);

} // namespace c2t::gf2

#endif
