#include <catch2/catch_amalgamated.hpp>

#include "c2t/conf_quotient.hpp"
#include "c2t/rep_decomp.hpp"
#include "oracles.hpp"

using namespace c2t;

namespace {

TensorClass tc(std::initializer_list<int> left, std::initializer_list<int> right)
{
    return {Monomial::of(left), Monomial::of(right)};
}

ClassSum sum(std::initializer_list<TensorClass> classes)
{
    ClassSum s;
    for (TensorClass c : classes)
        s.toggle(c);
    return s;
}

std::set<oracle::Pair> as_pairs(const ClassSum& s)
{
    std::set<oracle::Pair> out;
    for (TensorClass c : s.terms())
        out.insert({c.left.mask, c.right.mask});
    return out;
}

} // namespace

TEST_CASE("phi* on degree one")
{
    CHECK(PhiStar::image(tc({1}, {})) == sum({tc({1}, {})}));
    CHECK(PhiStar::image(tc({}, {1})) == sum({tc({1}, {}), tc({}, {1})}));
    CHECK(PhiStar::image(TensorClass{}) == sum({TensorClass{}}));
    CHECK_THROWS_AS(PhiStar::build(0), std::invalid_argument);
}

TEST_CASE("phi* matrices equal exterior powers of the shear")
{
    for (int d = 1; d <= 3; ++d)
    {
        const PhiStar phi = PhiStar::build(d);
        for (int i = 0; i <= 2 * d; ++i)
        {
            const auto basis = oracle::pairs_of_degree(d, i);
            const gf2::BitMatrix& m = phi.matrix(i);
            REQUIRE(m.rows() == basis.size());
            for (std::size_t r = 0; r < basis.size(); ++r)
                for (std::size_t c = 0; c < basis.size(); ++c)
                    REQUIRE(m.test(r, c) == oracle::phi_coefficient(d, basis[r], basis[c]));
        }
    }
}

TEST_CASE("phi* is an involution of full rank")
{
    for (int d = 1; d <= 5; ++d)
    {
        const PhiStar phi = PhiStar::build(d);
        for (int i = 0; i <= 2 * d; ++i)
        {
            const gf2::BitMatrix& m = phi.matrix(i);
            REQUIRE(gf2::rank(m) == m.rows());
            REQUIRE(m * m == gf2::BitMatrix::identity(m.rows()));
        }
    }
    CHECK(PhiStar::build(2).matrix(0) == gf2::BitMatrix::identity(1));
}

TEST_CASE("top relation")
{
    CHECK(top_relation_terms(1) == sum({tc({1}, {}), tc({}, {1})}));
    CHECK(top_relation_terms(2) == sum({tc({1, 2}, {}), tc({1}, {2}), tc({2}, {1}), tc({}, {1, 2})}));
    for (int d = 1; d <= 8; ++d)
    {
        const ClassSum terms = top_relation_terms(d);
        REQUIRE(terms.size() == (std::size_t{1} << d));
        for (TensorClass c : terms.terms())
            REQUIRE(terms.terms().count(c.swapped()) == 1);
        REQUIRE(top_relation(d).count() == (std::size_t{1} << d));
        REQUIRE(terms == PhiStar::image(TensorClass{Monomial{}, Monomial{(1u << d) - 1}}));
    }
}

TEST_CASE("kernel generators")
{
    CHECK(kernel_generators(2, 3).generators.size() == 2);
    CHECK(kernel_generators(3, 2).generators.empty());
    CHECK(kernel_generators(3, 2).span.subspace_dim() == 0);
    for (const gf2::BitVector& g : kernel_generators(2, 3).generators)
        CHECK(g.count() == 2);

    for (int d = 1; d <= 6; ++d)
    {
        CHECK(kernel_generators(d, d).generators.front() == top_relation(d));
        CHECK(kernel_generators(d, 2 * d).span.dim() == 0);
    }
}

TEST_CASE("kernel generators equal the term-by-term relation")
{
    for (int d = 1; d <= 4; ++d)
    {
        for (int i = d; i <= 2 * d; ++i)
        {
            const KunnethSpace space(d, i);
            const KernelPresentation k = kernel_generators(d, i);
            const auto subsets = monomials(d, i - d);
            REQUIRE(k.generators.size() == subsets.size());
            for (std::size_t s = 0; s < subsets.size(); ++s)
            {
                const auto expected = oracle::relation_terms(d, subsets[s].mask);
                REQUIRE(as_pairs(space.to_sum(k.generators[s])) == expected);
                REQUIRE(expected.size() == (std::size_t{1} << (2 * d - i)));
            }
        }
    }
}

TEST_CASE("kernel is independent and swap-stable")
{
    for (int d = 1; d <= 7; ++d)
    {
        for (int i = d; i < 2 * d; ++i)
        {
            const KernelPresentation k = kernel_generators(d, i);
            REQUIRE(k.span.subspace_dim() == oracle::choose(d, i - d));
            const gf2::BitMatrix s = sigma_matrix(d, i);
            for (const gf2::BitVector& g : k.generators)
                REQUIRE(k.span.contains(s.apply(g)));
        }
    }
}

TEST_CASE("configuration-space module examples")
{
    CHECK(conf_module(2, 2).dim() == 5);
    CHECK(conf_module(3, 5).dim() == 3);
    CHECK(decompose(conf_module(3, 5)) == Decomposition{3, 3, 0});
    CHECK(conf_module(1, 2).dim() == 0);
    CHECK(conf_module(0, 0).dim() == 0);
    CHECK(conf_module(3, 1).presentation == std::nullopt);
    REQUIRE(conf_module(3, 4).presentation.has_value());
    CHECK(conf_module(3, 4).presentation->kernel_generators.size() == 3);
}

TEST_CASE("configuration-space dimensions")
{
    for (int d = 1; d <= 7; ++d)
    {
        for (int i = 0; i <= 2 * d + 1; ++i)
        {
            const std::uint64_t expected =
                i >= 2 * d ? 0 : oracle::choose(2 * d, i) - oracle::choose(d, i - d);
            const Sigma2Module m = conf_module(d, i);
            REQUIRE(m.dim() == expected);
            REQUIRE(m.basis_labels.size() == expected);
        }
    }
}

TEST_CASE("configuration-space modules agree with the counting oracle")
{
    for (int d = 1; d <= 3; ++d)
    {
        for (int i = 0; i < 2 * d; ++i)
        {
            const oracle::Counts c = oracle::decompose_by_counting(oracle::small_quotient(d, i));
            const Decomposition m = decompose(conf_module(d, i));
            INFO("d=" << d << " i=" << i);
            REQUIRE(m.dim == c.dim);
            REQUIRE(m.trivial == c.trivial);
            REQUIRE(m.regular == c.regular);
        }
    }
}

TEST_CASE("fixed element examples")
{
    for (auto [d, i] : {std::pair{2, 2}, std::pair{3, 3}})
    {
        const Sigma2Module m = conf_module(d, i);
        const gf2::BitVector coords = m.presentation->quotient.coordinates(fixed_element_x(d, i, Monomial{}));
        CHECK(coords.any());
        CHECK(m.sigma.apply(coords) == coords);
    }
    CHECK_THROWS_AS(fixed_element_x(3, 2, Monomial{}), std::invalid_argument);
    CHECK_THROWS_AS(fixed_element_x(3, 6, Monomial::of({1, 2, 3})), std::invalid_argument);
    CHECK_THROWS_AS(fixed_element_x(3, 4, Monomial::of({1, 2})), std::invalid_argument);
}

TEST_CASE("fixed element against the relation oracle")
{
    // x + sigma x is the whole relation, and x itself is not in the kernel.
    for (int d = 1; d <= 3; ++d)
    {
        for (int i = d; i < 2 * d; ++i)
        {
            const oracle::SmallQuotient q = oracle::small_quotient(d, i);
            const auto kernel = oracle::span(q.kernel_rows);
            for (Monomial m : monomials(d, i - d))
            {
                const gf2::BitVector x = fixed_element_x(d, i, m);
                oracle::Mask mask = 0;
                x.for_each_set([&](std::size_t k) { mask |= oracle::Mask{1} << k; });
                INFO("d=" << d << " i=" << i << " M=" << m.to_string());
                REQUIRE(kernel.count(mask) == 0);
                REQUIRE(kernel.count(mask ^ oracle::apply_swap(q.swap, mask)) == 1);
            }
        }
    }
}

TEST_CASE("fixed element sweep", "[slow]")
{
    for (int d = 1; d <= 8; ++d)
    {
        for (int i = d; i < 2 * d; ++i)
        {
            const Sigma2Module m = conf_module(d, i);
            for (Monomial subset : monomials(d, i - d))
            {
                const gf2::BitVector coords = m.presentation->quotient.coordinates(fixed_element_x(d, i, subset));
                REQUIRE(coords.any());
                REQUIRE(m.sigma.apply(coords) == coords);
            }
        }
    }
}
