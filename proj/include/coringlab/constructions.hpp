#pragma once

#include "coringlab/algebra.hpp"

namespace coringlab {

/// The base field as a 1-dimensional algebra.
Algebra scalar_algebra(const Field& f);

/// k[x]/(f) for a monic polynomial with the given low-order coefficients,
/// i.e. x^n = c_0 + c_1 x + ... + c_{n-1} x^{n-1}.
Algebra quotient_polynomial_algebra(const Field& f, const std::vector<Scalar>& low_coeffs,
                                    const std::string& var = "x");

/// Full matrix algebra M_n(k); basis E_{ij} at index i*n + j.
Algebra matrix_algebra(const Field& f, std::size_t n);

/// Dual numbers k[eps]/(eps^2).
Algebra dual_numbers(const Field& f);

/// Upper triangular 2x2 matrices; basis E11, E12, E22.
Algebra upper_triangular2(const Field& f);

Algebra direct_product(const Algebra& a, const Algebra& b);

/// Group algebra of the cyclic group of order n.
Algebra cyclic_group_algebra(const Field& f, std::size_t n);

/// Skew group algebra A * G for a finite group acting by algebra
/// automorphisms.  Basis (g, b_i) at index g * dim A + i; the product is
/// (g, a)(h, b) = (gh, sigma_{h^{-1}}(a) b), matching the convention that
/// the ring is free as a right A-module with basis G.
/// `mult[g][h]` = index of gh, `inverse[g]` = index of g^{-1},
/// `autos[g]` = matrix of sigma_g on A.
Algebra skew_group_algebra(const Algebra& a, const std::vector<std::vector<std::size_t>>& mult,
                           const std::vector<std::size_t>& inverse,
                           const std::vector<Mat>& autos);

/// All algebra automorphisms of a (small) algebra found by brute force over
/// algebra-generator images; practical only for tiny commutative cases such
/// as finite fields.  Returns matrices on coordinates.
std::vector<Mat> field_automorphisms(const Algebra& a);

/// Generalized upper triangular ring [[R, M], [0, S]] for an (R, S)-bimodule
/// M given by its two actions.  Basis order: R basis, M basis, S basis.
Algebra triangular_ring(const Algebra& r, const Algebra& s, std::size_t dim_m,
                        const std::vector<Mat>& r_on_m, const std::vector<Mat>& s_on_m);

}  // namespace coringlab
