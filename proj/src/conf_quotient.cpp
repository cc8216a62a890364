#include "c2t/conf_quotient.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace c2t {

namespace {

std::uint32_t full_mask(int d) { return d == 0 ? 0u : (~std::uint32_t{0} >> (32 - d)); }

ClassSum unit_class() { return ClassSum(TensorClass{}); }

void require_degree(int i)
{
    if (i < 0)
        throw std::invalid_argument("cohomological degree must be non-negative, got " + std::to_string(i));
}

Sigma2Module zero_module(int d, int i)
{
    Sigma2Module m;
    m.torus_dimension = d;
    m.degree = i;
    return m;
}

} // namespace

// ---------------------------------------------------------------- PhiStar

ClassSum PhiStar::image(TensorClass c)
{
    ClassSum result = unit_class();
    for (int j = 1; j <= 32; ++j)
    {
        const Monomial e = Monomial::of({j});
        if (c.left.contains(j))
            result = result * ClassSum(TensorClass{e, {}});
        if (c.right.contains(j))
            result = result * (ClassSum(TensorClass{e, {}}) + ClassSum(TensorClass{{}, e}));
    }
    return result;
}

PhiStar PhiStar::build(int d)
{
    require_torus_dimension(d);
    if (d < 1)
        throw std::invalid_argument("phi* needs a torus of dimension at least 1");
    PhiStar phi;
    phi.d_ = d;
    for (int i = 0; i <= 2 * d; ++i)
    {
        const KunnethSpace space(d, i);
        std::vector<gf2::BitVector> columns;
        columns.reserve(space.size());
        for (TensorClass c : space.basis())
            columns.push_back(space.to_vector(image(c)));
        phi.matrices_.push_back(gf2::BitMatrix(space.size(), std::move(columns)).transposed());
    }
    return phi;
}

const gf2::BitMatrix& PhiStar::matrix(int degree) const
{
    if (degree < 0 || degree > 2 * d_)
        throw std::out_of_range("phi* has no matrix in degree " + std::to_string(degree));
    return matrices_[static_cast<std::size_t>(degree)];
}

// ---------------------------------------------------------------- relations

ClassSum top_relation_terms(int d)
{
    require_torus_dimension(d);
    return PhiStar::image(TensorClass{{}, {full_mask(d)}});
}

gf2::BitVector top_relation(int d)
{
    if (d < 1)
        throw std::invalid_argument("the top relation needs d >= 1");
    return KunnethSpace(d, d).to_vector(top_relation_terms(d));
}

KernelPresentation kernel_generators(int d, int i)
{
    require_torus_dimension(d);
    require_degree(i);
    const KunnethSpace space(d, i);
    KernelPresentation k;
    k.torus_dimension = d;
    k.degree = i;
    if (i >= d && i <= 2 * d)
    {
        const ClassSum top = top_relation_terms(d);
        for (Monomial m : monomials(d, i - d))
            k.generators.push_back(space.to_vector(ClassSum(TensorClass{m, {}}) * top));
    }
    k.span = gf2::QuotientBasis(space.size(), k.generators);
    return k;
}

Sigma2Module conf_module(int d, int i)
{
    require_torus_dimension(d);
    require_degree(i);
    if (i >= 2 * d)
        return zero_module(d, i);
    if (i < d)
        return torus_module(d, i);

    KernelPresentation kernel = kernel_generators(d, i);
    QuotientPresentation p;
    p.ambient_basis = kunneth_basis(d, i);
    p.ambient_sigma = sigma_matrix(d, i);
    p.kernel_generators = std::move(kernel.generators);
    p.quotient = std::move(kernel.span);

    Sigma2Module m;
    m.torus_dimension = d;
    m.degree = i;
    m.sigma = gf2::induced_map_on_quotient(p.ambient_sigma, p.quotient);
    for (std::size_t f : p.quotient.free_coordinates())
        m.basis_labels.push_back(p.ambient_basis[f]);
    m.presentation = std::move(p);
    return m;
}

gf2::BitVector fixed_element_x(int d, int i, Monomial m)
{
    require_torus_dimension(d);
    if (i < d || i >= 2 * d)
        throw std::invalid_argument("fixed element needs d <= i < 2d, got d=" + std::to_string(d) +
                                    ", i=" + std::to_string(i));
    const std::uint32_t all = full_mask(d);
    if ((m.mask & ~all) != 0 || m.degree() != i - d)
        throw std::invalid_argument("M = " + m.to_string() + " is not an (i-d)-subset of {1.." +
                                    std::to_string(d) + "}");

    // Terms of the generator for M are (all \ J, J u M) for J inside N = all \ M;
    // J and N \ J are swapped by sigma.  Keep |J| < n/2, and on the middle
    // layer the subsets missing the largest element of N.
    const std::uint32_t rest = all & ~m.mask;
    const int n = std::popcount(rest);
    const std::uint32_t top_bit = rest == 0 ? 0u : std::uint32_t{1} << (31 - std::countl_zero(rest));

    const KunnethSpace space(d, i);
    gf2::BitVector x(space.size());
    for (std::uint32_t j = rest;; j = (j - 1) & rest)
    {
        const int size = std::popcount(j);
        const bool keep = 2 * size < n || (2 * size == n && (j & top_bit) == 0);
        if (keep)
            x.set(space.index_of(TensorClass{{all & ~j}, {j | m.mask}}));
        if (j == 0)
            break;
    }
    return x;
}

} // namespace c2t
