#include "c2t/gf2.hpp"

#include <algorithm>
#include <numeric>

namespace c2t::gf2 {

namespace {

std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

struct Echelon
{
    std::vector<BitVector> rows;     // sorted by pivot
    std::vector<std::size_t> pivots; // ascending
};

// Leading-bit elimination against a growing pivot table.  Every stored row
// has a distinct leading coordinate and no set bits to its left.
Echelon forward_reduce(std::span<const BitVector> input, std::size_t ncols)
{
    std::vector<std::size_t> owner(ncols, BitVector::npos);
    Echelon e;
    for (const BitVector& original : input)
    {
        BitVector v = original;
        std::size_t pos = v.first_set();
        while (pos != BitVector::npos && owner[pos] != BitVector::npos)
        {
            v ^= e.rows[owner[pos]];
            pos = v.first_set(pos + 1);
        }
        if (pos == BitVector::npos)
            continue;
        owner[pos] = e.rows.size();
        e.rows.push_back(std::move(v));
        e.pivots.push_back(pos);
    }

    std::vector<std::size_t> order(e.rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return e.pivots[a] < e.pivots[b]; });
    Echelon sorted;
    sorted.rows.reserve(order.size());
    sorted.pivots.reserve(order.size());
    for (std::size_t k : order)
    {
        sorted.rows.push_back(std::move(e.rows[k]));
        sorted.pivots.push_back(e.pivots[k]);
    }
    return sorted;
}

// Clears each pivot column above its pivot row, largest pivot first.
void back_substitute(Echelon& e)
{
    for (std::size_t j = e.rows.size(); j-- > 0;)
    {
        const std::size_t p = e.pivots[j];
        for (std::size_t i = 0; i < j; ++i)
        {
            if (e.rows[i].test(p))
                e.rows[i] ^= e.rows[j];
        }
    }
}

} // namespace

// ---------------------------------------------------------------- BitVector

BitVector::BitVector(std::size_t n) : n_(n), words_(word_count(n), 0) {}

BitVector BitVector::unit(std::size_t n, std::size_t i)
{
    BitVector v(n);
    v.set(i);
    return v;
}

BitVector BitVector::from_string(std::string_view bits)
{
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
    {
        if (bits[i] == '1')
            v.set(i);
        else if (bits[i] != '0')
            throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
    return v;
}

BitVector& BitVector::operator^=(const BitVector& other)
{
    if (other.n_ != n_)
        throw DimensionMismatch("vector lengths differ: " + std::to_string(n_) + " vs " +
                                std::to_string(other.n_));
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] ^= other.words_[w];
    return *this;
}

bool BitVector::any() const noexcept
{
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::count() const noexcept
{
    std::size_t total = 0;
    for (std::uint64_t w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::size_t BitVector::first_set(std::size_t from) const noexcept
{
    if (from >= n_)
        return npos;
    std::size_t w = from >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true)
    {
        if (word)
            return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        if (++w == words_.size())
            return npos;
        word = words_[w];
    }
}

bool BitVector::dot(const BitVector& other) const
{
    if (other.n_ != n_)
        throw DimensionMismatch("vector lengths differ in inner product");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
        acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
}

std::string BitVector::to_string() const
{
    std::string s(n_, '0');
    for_each_set([&](std::size_t i) { s[i] = '1'; });
    return s;
}

// ---------------------------------------------------------------- BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix::BitMatrix(std::size_t cols, std::vector<BitVector> rows) : cols_(cols), rows_(std::move(rows))
{
    for (const BitVector& r : rows_)
    {
        if (r.size() != cols_)
            throw DimensionMismatch("matrix row has length " + std::to_string(r.size()) +
                                    ", expected " + std::to_string(cols_));
    }
}

BitMatrix BitMatrix::identity(std::size_t n)
{
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_strings(std::size_t cols, const std::vector<std::string>& rows)
{
    std::vector<BitVector> parsed;
    parsed.reserve(rows.size());
    for (const std::string& r : rows)
        parsed.push_back(BitVector::from_string(r));
    return BitMatrix(cols, std::move(parsed));
}

BitVector BitMatrix::apply(const BitVector& v) const
{
    if (v.size() != cols_)
        throw DimensionMismatch("matrix has " + std::to_string(cols_) + " columns, vector has length " +
                                std::to_string(v.size()));
    BitVector out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
    {
        if (rows_[r].dot(v))
            out.set(r);
    }
    return out;
}

BitMatrix BitMatrix::transposed() const
{
    BitMatrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        rows_[r].for_each_set([&](std::size_t c) { t.set(c, r); });
    return t;
}

bool BitMatrix::is_zero() const noexcept
{
    return std::all_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.none(); });
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& other)
{
    if (other.rows() != rows() || other.cols_ != cols_)
        throw DimensionMismatch("matrix shapes differ in sum");
    for (std::size_t r = 0; r < rows_.size(); ++r)
        rows_[r] ^= other.rows_[r];
    return *this;
}

BitMatrix operator*(const BitMatrix& lhs, const BitMatrix& rhs)
{
    if (lhs.cols_ != rhs.rows())
        throw DimensionMismatch("inner dimensions differ in product");
    BitMatrix out(lhs.rows(), rhs.cols_);
    for (std::size_t r = 0; r < lhs.rows(); ++r)
        lhs.rows_[r].for_each_set([&](std::size_t k) { out.rows_[r] ^= rhs.rows_[k]; });
    return out;
}

// ---------------------------------------------------------------- rank / kernel

std::size_t rank(const BitMatrix& m)
{
    return forward_reduce(m.row_vectors(), m.cols()).rows.size();
}

std::vector<BitVector> kernel_basis(const BitMatrix& m)
{
    Echelon e = forward_reduce(m.row_vectors(), m.cols());
    back_substitute(e);

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots)
        is_pivot[p] = true;

    // For a free column f the vector e_f + sum of e_{pivot_j} over rows j
    // with a 1 in column f solves the reduced system.
    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f)
    {
        if (is_pivot[f])
            continue;
        BitVector v = BitVector::unit(m.cols(), f);
        for (std::size_t j = 0; j < e.rows.size(); ++j)
        {
            if (e.rows[j].test(f))
                v.set(e.pivots[j]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------- quotients

QuotientBasis::QuotientBasis(std::size_t ambient_dim, std::span<const BitVector> subspace)
    : ambient_dim_(ambient_dim)
{
    for (const BitVector& v : subspace)
    {
        if (v.size() != ambient_dim)
            throw DimensionMismatch("subspace vector has length " + std::to_string(v.size()) +
                                    ", ambient dimension is " + std::to_string(ambient_dim));
    }
    Echelon e = forward_reduce(subspace, ambient_dim);
    back_substitute(e);
    basis_ = std::move(e.rows);
    pivots_ = std::move(e.pivots);

    free_index_.assign(ambient_dim, BitVector::npos);
    std::vector<bool> is_pivot(ambient_dim, false);
    for (std::size_t p : pivots_)
        is_pivot[p] = true;
    for (std::size_t c = 0; c < ambient_dim; ++c)
    {
        if (!is_pivot[c])
        {
            free_index_[c] = free_.size();
            free_.push_back(c);
        }
    }
}

BitVector QuotientBasis::reduce(const BitVector& v) const
{
    if (v.size() != ambient_dim_)
        throw DimensionMismatch("vector does not live in the ambient space of the quotient");
    BitVector out = v;
    for (std::size_t j = 0; j < basis_.size(); ++j)
    {
        if (out.test(pivots_[j]))
            out ^= basis_[j];
    }
    return out;
}

BitVector QuotientBasis::coordinates(const BitVector& v) const
{
    BitVector out(free_.size());
    reduce(v).for_each_set([&](std::size_t c) { out.set(free_index_[c]); });
    return out;
}

BitVector QuotientBasis::lift(const BitVector& coords) const
{
    if (coords.size() != free_.size())
        throw DimensionMismatch("coordinate vector does not match the quotient dimension");
    BitVector out(ambient_dim_);
    coords.for_each_set([&](std::size_t k) { out.set(free_[k]); });
    return out;
}

QuotientBasis quotient_structure(std::size_t ambient_dim, std::span<const BitVector> subspace)
{
    return QuotientBasis(ambient_dim, subspace);
}

BitMatrix induced_map_on_quotient(const BitMatrix& m, const QuotientBasis& q)
{
    const std::size_t n = q.ambient_dim();
    if (m.rows() != n || m.cols() != n)
        throw DimensionMismatch("map must be an endomorphism of the ambient space");

    for (std::size_t j = 0; j < q.subspace_basis().size(); ++j)
    {
        if (!q.contains(m.apply(q.subspace_basis()[j])))
            throw SubspaceNotInvariant("image of subspace basis vector " + std::to_string(j) +
                                       " (pivot " + std::to_string(q.pivots()[j]) +
                                       ") leaves the subspace");
    }

    // Row f of the transpose is M e_f.
    const BitMatrix columns = m.transposed();
    const auto& free = q.free_coordinates();
    std::vector<BitVector> images;
    images.reserve(free.size());
    for (std::size_t f : free)
        images.push_back(q.coordinates(columns.row(f)));
    return BitMatrix(free.size(), std::move(images)).transposed();
}

} // namespace c2t::gf2
