#include <catch2/catch_amalgamated.hpp>

#include "c2t/rep_decomp.hpp"
#include "c2t/torus_algebra.hpp"
#include "oracles.hpp"

using namespace c2t;

namespace {

TensorClass tc(std::initializer_list<int> left, std::initializer_list<int> right)
{
    return {Monomial::of(left), Monomial::of(right)};
}

} // namespace

TEST_CASE("monomials")
{
    CHECK(monomials(3, 0) == std::vector<Monomial>{Monomial{}});
    CHECK(monomials(3, 1) == std::vector<Monomial>{Monomial::of({1}), Monomial::of({2}), Monomial::of({3})});
    CHECK(monomials(2, 3).empty());
    CHECK(Monomial::of({1, 3}).to_string() == "e1e3");
    CHECK(Monomial{}.to_string() == "1");
    for (int d = 0; d <= 8; ++d)
    {
        for (int k = 0; k <= d + 1; ++k)
        {
            const auto ms = monomials(d, k);
            REQUIRE(ms.size() == oracle::choose(d, k));
            REQUIRE(std::is_sorted(ms.begin(), ms.end()));
            for (Monomial m : ms)
                REQUIRE(m.degree() == k);
        }
    }
    CHECK_THROWS_AS(monomials(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(monomials(31, 0), std::invalid_argument);
}

TEST_CASE("Kunneth basis")
{
    CHECK(kunneth_basis(1, 1) == std::vector<TensorClass>{tc({}, {1}), tc({1}, {})});
    CHECK(kunneth_basis(2, 2).size() == 6);
    CHECK(kunneth_basis(3, 3).size() == 20);
    CHECK(kunneth_basis(2, 5).empty());
    for (int d = 0; d <= 5; ++d)
    {
        for (int i = 0; i <= 2 * d; ++i)
        {
            std::vector<oracle::Pair> expected = oracle::pairs_of_degree(d, i);
            const auto basis = kunneth_basis(d, i);
            REQUIRE(basis.size() == oracle::choose(2 * d, i));
            REQUIRE(basis.size() == expected.size());
            for (std::size_t k = 0; k < basis.size(); ++k)
            {
                REQUIRE(basis[k].left.mask == expected[k].left);
                REQUIRE(basis[k].right.mask == expected[k].right);
            }
        }
    }
}

TEST_CASE("cup products")
{
    CHECK_FALSE(cup(tc({1}, {}), tc({1}, {})));
    CHECK(cup(TensorClass{}, tc({2}, {1, 3})) == tc({2}, {1, 3}));
    CHECK(cup(tc({1}, {2}), tc({2}, {1})) == tc({1, 2}, {1, 2}));

    const auto all = [] {
        std::vector<TensorClass> v;
        for (int i = 0; i <= 6; ++i)
            for (TensorClass c : kunneth_basis(3, i))
                v.push_back(c);
        return v;
    }();
    for (TensorClass a : all)
    {
        REQUIRE(cup(TensorClass{}, a) == a);
        for (TensorClass b : all)
        {
            const auto ab = cup(a, b);
            REQUIRE(ab.has_value() == (a.left.disjoint(b.left) && a.right.disjoint(b.right)));
            REQUIRE(ab == cup(b, a));
            if (ab)
                REQUIRE(ab->degree() == a.degree() + b.degree());
        }
    }
    // Associativity on a sample of triples.
    for (std::size_t x = 0; x < all.size(); x += 3)
        for (std::size_t y = 0; y < all.size(); y += 5)
            for (std::size_t z = 0; z < all.size(); z += 7)
            {
                auto left = cup(all[x], all[y]);
                auto right = cup(all[y], all[z]);
                auto l = left ? cup(*left, all[z]) : std::nullopt;
                auto r = right ? cup(all[x], *right) : std::nullopt;
                REQUIRE(l == r);
            }
}

TEST_CASE("class sums")
{
    ClassSum s(tc({1}, {}));
    s.toggle(tc({}, {1}));
    CHECK(s.size() == 2);
    s += ClassSum(tc({1}, {}));
    CHECK(s == ClassSum(tc({}, {1})));

    // (e1|1 + 1|e1)(e2|1 + 1|e2) has four terms.
    const ClassSum a = ClassSum(tc({1}, {})) + ClassSum(tc({}, {1}));
    const ClassSum b = ClassSum(tc({2}, {})) + ClassSum(tc({}, {2}));
    CHECK((a * b).size() == 4);
    CHECK((a * a).empty());

    const KunnethSpace space(2, 2);
    const ClassSum p = a * b;
    CHECK(space.to_sum(space.to_vector(p)) == p);
    CHECK_THROWS_AS(space.index_of(tc({1}, {})), std::out_of_range);
}

TEST_CASE("swap matrix")
{
    CHECK(sigma_matrix(4, 0) == gf2::BitMatrix::identity(1));
    CHECK(sigma_matrix(1, 1) == gf2::BitMatrix::from_strings(2, {"01", "10"}));
    for (int d = 0; d <= 6; ++d)
    {
        for (int i = 0; i <= 2 * d; ++i)
        {
            const gf2::BitMatrix s = sigma_matrix(d, i);
            REQUIRE(s * s == gf2::BitMatrix::identity(s.rows()));
            std::size_t fixed = 0;
            for (std::size_t r = 0; r < s.rows(); ++r)
            {
                REQUIRE(s.row(r).count() == 1);
                fixed += s.test(r, r);
            }
            REQUIRE(fixed == (i % 2 == 0 ? oracle::choose(d, i / 2) : 0));
        }
    }
}

TEST_CASE("torus-square module examples")
{
    CHECK(decompose(torus_module(2, 1)) == Decomposition{4, 0, 2});
    CHECK(decompose(torus_module(2, 2)) == Decomposition{6, 2, 2});
    for (int d = 0; d <= 6; ++d)
        CHECK(decompose(torus_module(d, 2 * d)) == Decomposition{1, 1, 0});
    CHECK(torus_closed_form(3, 2) == Decomposition{15, 3, 6});
    CHECK(torus_closed_form(1, 1) == Decomposition{2, 0, 1});
    CHECK(torus_closed_form(4, 9) == Decomposition{});
    CHECK(decompose(torus_module(4, 9)).dim == 0);
    CHECK(torus_module(2, 1).presentation == std::nullopt);
}

TEST_CASE("torus-square module agrees with counting oracle")
{
    for (int d = 0; d <= 3; ++d)
    {
        for (int i = 0; i <= 2 * d; ++i)
        {
            oracle::SmallQuotient q = oracle::small_quotient(d, i);
            q.kernel_rows.clear();
            const oracle::Counts c = oracle::decompose_by_counting(q);
            const Decomposition m = decompose(torus_module(d, i));
            INFO("d=" << d << " i=" << i);
            REQUIRE(m.dim == c.dim);
            REQUIRE(m.trivial == c.trivial);
            REQUIRE(m.regular == c.regular);
        }
    }
}

TEST_CASE("torus-square sweep against closed form", "[slow]")
{
    for (int d = 0; d <= 8; ++d)
        for (int i = 0; i <= 2 * d + 1; ++i)
            REQUIRE(decompose(torus_module(d, i)) == torus_closed_form(d, i));
}

TEST_CASE("decomposition text")
{
    CHECK(Decomposition::from_counts(3, 1).to_string() == "F2^3 + F2[S2]^1");
    CHECK(Decomposition::from_counts(0, 2).to_string() == "F2[S2]^2");
    CHECK(Decomposition{}.to_string() == "0");
}
