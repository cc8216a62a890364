/**
 * H^i(C_2(T^d); F_2) as a quotient of H^i(T^d x T^d; F_2).
 *
 * The shear (x, y) -> (x, y - x) carries C_2(T^d) onto T^d x (T^d \ 0).  On
 * cohomology it fixes e*_j (x) 1 and sends 1 (x) e*_j to e*_j (x) 1 + 1 (x) e*_j;
 * the restriction to the configuration space is onto, with kernel spanned in
 * degree i >= d by (e*_M (x) 1) . phi*(1 (x) e*_1...e*_d) for |M| = i - d.
 */
#ifndef C2T_CONF_QUOTIENT_HPP
#define C2T_CONF_QUOTIENT_HPP

#include <vector>

#include "c2t/gf2.hpp"
#include "c2t/torus_algebra.hpp"

namespace c2t {

/// phi* as a graded ring endomorphism of H^*(T^d x T^d; F_2).
class PhiStar
{
    public:
        /// Requires d >= 1.
        static PhiStar build(int d);

        int torus_dimension() const noexcept { return d_; }

        /// Matrix on kunneth_basis(d, i), 0 <= i <= 2d.
        const gf2::BitMatrix& matrix(int degree) const;

        /// Image of one basis class by multiplicative extension of the degree-1 rules.
        static ClassSum image(TensorClass c);

    private:
        int d_ = 0;
        std::vector<gf2::BitMatrix> matrices_;
};

/// phi*(1 (x) e*_1...e*_d) = sum over J of e*_{J^c} (x) e*_J, as a sum of classes.
ClassSum top_relation_terms(int d);

/// The same class as a degree-d vector over kunneth_basis(d, d).
gf2::BitVector top_relation(int d);

struct KernelPresentation
{
    int torus_dimension = 0;
    int degree = 0;
    std::vector<gf2::BitVector> generators; // one per (i-d)-subset M, in monomials() order
    gf2::QuotientBasis span;
};

/// Generators of the kernel of restriction to C_2(T^d) in degree i.
KernelPresentation kernel_generators(int d, int i);

Sigma2Module conf_module(int d, int i);

/**
 * Half of the kernel generator attached to M: one term from every
 * swap-paired couple.  Its coset is non-zero and swap-fixed.  Throws
 * std::invalid_argument unless d <= i < 2d and M is an (i-d)-subset of {1..d}.
 */
gf2::BitVector fixed_element_x(int d, int i, Monomial m);

} // namespace c2t

#endif
