#pragma once

#include <complex>

#include "asymcg/blocks.hpp"

namespace asymcg {

/// The Phi part of an operator, as an object of its own: a finite Gaussian
/// rational block (rows over range wrists, columns over domain wrists) acting
/// on H+ together with e_k -> e_sigma(k) off the support. Products of Phi's of
/// different operators stay in this class, which is what the determinant
/// cocycles need.
struct PolarizedOp {
    TreePairElement pair;
    GrMat mat;

    PolarizedOp expand_at(const EdgeAddress& domain_leaf) const;
    PolarizedOp expand_domain_to(const FiniteSubtree& target) const;
    PolarizedOp expand_range_to(const FiniteSubtree& target) const;
};

PolarizedOp phi_of(const FinSymplectic& f);
PolarizedOp pol_mul(const PolarizedOp& f, const PolarizedOp& g);
PolarizedOp pol_inverse(const PolarizedOp& f);

/// Exact determinant of Phi(g); defined when the end map is trivial (the
/// operator is the identity off its support). Never zero.
GaussianRational det_phi(const FinSymplectic& g);

/// C1(g,h) = det(Phi(g)·Phi(h)·Phi(gh)^{-1}), exact. The argument of the
/// determinant differs from the identity only on a finite block (the end
/// permutations telescope), so the determinant is that of the principal
/// minor carrying the difference.
GaussianRational c1_cocycle(const FinSymplectic& g, const FinSymplectic& h);

/// ell(g) = det Phi(g) / |det Phi(g)|; requires a trivial end map.
std::complex<double> ell(const FinSymplectic& g);

/// Cn(g,h) = det((Phi(g)Phi(h)Phi(gh)^{-1})^{1/n}) via the principal branch
/// on the finite block's eigenvalues; n a nonzero rational. Eigenvalues
/// within 1e-12 of the log branch cut raise Error(BranchAmbiguous).
std::complex<double> cn_cocycle(const FinSymplectic& g, const FinSymplectic& h,
                                const BigRational& n);

} // namespace asymcg
