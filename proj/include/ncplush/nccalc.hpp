/*
 * nccalc.hpp
 * ----------
 * NC differentiation: directional partials, the full first derivative,
 * l-th derivatives via scalar-perturbation expansion, the complex hessian
 * and the full hessian.
 *
 * Direction letters h_j live in the same alphabet; a polynomial that
 * already contains H-letters may be differentiated again, the H-letters
 * are inert.
 */
#pragma once

#include "ncplush/freealg.hpp"

namespace ncplush {

// Sum over all single replacements of one x_j letter by h_j; transposed
// letters are untouched. Linear, and zero when no plain x_j occurs.
Polynomial partial_x(const Polynomial& p, int j);

// Mirror of partial_x: replaces one x_j' by h_j'.
Polynomial partial_xt(const Polynomial& p, int j);

// Full first derivative: sum of all partials in x_j and x_j'. Symmetric
// input gives symmetric output.
Polynomial derivative(const Polynomial& p);

// l-th directional derivative: expand p(x+t*h, x'+t*h') in the central
// scalar t and return l! times the coefficient of t^l. Computed by
// distributing the per-letter substitution, independently of the
// single-replacement route, so the two cross-validate.
Polynomial lth_derivative(const Polynomial& p, int l);

// Mixed second derivative, one x'->h' replacement then one x->h. Every
// term of the result carries exactly one h and one h' letter; the two
// application orders agree.
Polynomial complex_hessian(const Polynomial& p);

// Full second derivative: lth_derivative(p, 2), which also equals
// 2*complex_hessian(p) plus the pure-x and pure-x' second derivatives.
Polynomial full_hessian(const Polynomial& p);

}  // namespace ncplush
