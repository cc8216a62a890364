#include "c2t/torus_algebra.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace c2t {

std::uint64_t binomial(int m, int n)
{
    if (n < 0 || m < 0 || n > m)
        return 0;
    n = std::min(n, m - n);
    std::uint64_t result = 1;
    for (int k = 1; k <= n; ++k)
        result = result * static_cast<std::uint64_t>(m - n + k) / static_cast<std::uint64_t>(k);
    return result;
}

void require_torus_dimension(int d)
{
    if (d < 0 || d > kMaxTorusDimension)
        throw std::invalid_argument("torus dimension must lie in [0, " + std::to_string(kMaxTorusDimension) +
                                    "], got " + std::to_string(d));
}

// ---------------------------------------------------------------- Monomial

int Monomial::degree() const noexcept { return std::popcount(mask); }

std::string Monomial::to_string() const
{
    if (mask == 0)
        return "1";
    std::string s;
    for (int j = 1; j <= 32; ++j)
    {
        if (contains(j))
            s += "e" + std::to_string(j);
    }
    return s;
}

Monomial Monomial::of(std::initializer_list<int> indices)
{
    Monomial m;
    for (int j : indices)
        m.mask |= std::uint32_t{1} << (j - 1);
    return m;
}

std::string TensorClass::to_string() const { return left.to_string() + "|" + right.to_string(); }

std::vector<Monomial> monomials(int d, int k)
{
    require_torus_dimension(d);
    if (k < 0)
        throw std::invalid_argument("monomial degree must be non-negative");
    std::vector<Monomial> out;
    if (k > d)
        return out;
    if (k == 0)
        return {Monomial{}};

    // Gosper's hack walks the k-subsets of d bits in increasing mask order.
    const std::uint64_t limit = std::uint64_t{1} << d;
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    while (mask < limit)
    {
        out.push_back(Monomial{static_cast<std::uint32_t>(mask)});
        const std::uint64_t low = mask & (~mask + 1);
        const std::uint64_t ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
    return out;
}

std::vector<TensorClass> kunneth_basis(int d, int i)
{
    require_torus_dimension(d);
    if (i < 0)
        throw std::invalid_argument("cohomological degree must be non-negative");
    std::vector<TensorClass> out;
    if (i > 2 * d)
        return out;
    out.reserve(binomial(2 * d, i));
    for (int j = std::max(0, i - d); j <= std::min(i, d); ++j)
    {
        const auto lefts = monomials(d, j);
        const auto rights = monomials(d, i - j);
        for (Monomial l : lefts)
            for (Monomial r : rights)
                out.push_back({l, r});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<TensorClass> cup(TensorClass a, TensorClass b)
{
    if (!a.left.disjoint(b.left) || !a.right.disjoint(b.right))
        return std::nullopt;
    return TensorClass{{a.left.mask | b.left.mask}, {a.right.mask | b.right.mask}};
}

// ---------------------------------------------------------------- ClassSum

void ClassSum::toggle(TensorClass c)
{
    auto [it, inserted] = terms_.insert(c);
    if (!inserted)
        terms_.erase(it);
}

ClassSum& ClassSum::operator+=(const ClassSum& other)
{
    for (TensorClass c : other.terms_)
        toggle(c);
    return *this;
}

ClassSum operator*(const ClassSum& lhs, const ClassSum& rhs)
{
    ClassSum out;
    for (TensorClass a : lhs.terms_)
        for (TensorClass b : rhs.terms_)
            if (auto c = cup(a, b))
                out.toggle(*c);
    return out;
}

// ---------------------------------------------------------------- KunnethSpace

KunnethSpace::KunnethSpace(int d, int degree) : d_(d), degree_(degree), basis_(kunneth_basis(d, degree)) {}

std::size_t KunnethSpace::index_of(TensorClass c) const
{
    auto it = std::lower_bound(basis_.begin(), basis_.end(), c);
    if (it == basis_.end() || *it != c)
        throw std::out_of_range("class " + c.to_string() + " is not in the degree-" + std::to_string(degree_) +
                                " Kunneth basis for d=" + std::to_string(d_));
    return static_cast<std::size_t>(it - basis_.begin());
}

gf2::BitVector KunnethSpace::to_vector(const ClassSum& s) const
{
    gf2::BitVector v(basis_.size());
    for (TensorClass c : s.terms())
        v.set(index_of(c));
    return v;
}

ClassSum KunnethSpace::to_sum(const gf2::BitVector& v) const
{
    if (v.size() != basis_.size())
        throw gf2::DimensionMismatch("vector length does not match the Kunneth space");
    ClassSum s;
    v.for_each_set([&](std::size_t k) { s.toggle(basis_[k]); });
    return s;
}

gf2::BitMatrix sigma_matrix(int d, int i)
{
    const KunnethSpace space(d, i);
    gf2::BitMatrix m(space.size(), space.size());
    for (std::size_t k = 0; k < space.size(); ++k)
        m.set(space.index_of(space.basis()[k].swapped()), k);
    return m;
}

// ---------------------------------------------------------------- modules

std::string Decomposition::to_string() const
{
    if (dim == 0)
        return "0";
    std::string s;
    if (trivial > 0)
        s += "F2^" + std::to_string(trivial);
    if (regular > 0)
    {
        if (!s.empty())
            s += " + ";
        s += "F2[S2]^" + std::to_string(regular);
    }
    return s;
}

Sigma2Module torus_module(int d, int i)
{
    Sigma2Module m;
    m.torus_dimension = d;
    m.degree = i;
    m.basis_labels = kunneth_basis(d, i);
    m.sigma = sigma_matrix(d, i);
    return m;
}

Decomposition torus_closed_form(int d, int i)
{
    require_torus_dimension(d);
    if (i < 0 || i > 2 * d)
        return {};
    std::uint64_t total = 0;
    for (int j = 0; j <= i; ++j)
        total += binomial(d, j) * binomial(d, i - j);
    if (i % 2 == 1)
        return Decomposition::from_counts(0, total / 2);
    const std::uint64_t fixed = binomial(d, i / 2);
    return Decomposition::from_counts(fixed, (total - fixed) / 2);
}

} // namespace c2t
