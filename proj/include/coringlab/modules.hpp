#pragma once

#include <optional>

#include "coringlab/algebra.hpp"

namespace coringlab {

/// Right module: coords(x * b_i) = act[i] * coords(x).
struct RightModule {
  Algebra alg;
  std::size_t dim = 0;
  std::vector<Mat> act;

  Mat act_of(const Mat& a) const;  // action of an arbitrary algebra element
};

/// Left module: coords(b_i * x) = act[i] * coords(x).
struct LeftModule {
  Algebra alg;
  std::size_t dim = 0;
  std::vector<Mat> act;

  Mat act_of(const Mat& a) const;
};

/// B-A-bimodule with commuting left and right actions.
struct Bimodule {
  Algebra left_alg;
  Algebra right_alg;
  std::size_t dim = 0;
  std::vector<Mat> left_act;
  std::vector<Mat> right_act;

  RightModule right_part() const { return {right_alg, dim, right_act}; }
  LeftModule left_part() const { return {left_alg, dim, left_act}; }
  Mat left_of(const Mat& b) const { return left_part().act_of(b); }
  Mat right_of(const Mat& a) const { return right_part().act_of(a); }
};

CheckResult check_right_module(const RightModule& m);
CheckResult check_left_module(const LeftModule& m);
CheckResult check_bimodule(const Bimodule& m);

RightModule regular_right_module(const Algebra& a);
LeftModule regular_left_module(const Algebra& a);
Bimodule regular_bimodule(const Algebra& a);

/// Basis of Hom_A(M, N) for right modules, as matrices (N.dim x M.dim).
std::vector<Mat> hom_right(const RightModule& m, const RightModule& n);
/// Basis of Hom_A(M, N) for left modules.
std::vector<Mat> hom_left(const LeftModule& m, const LeftModule& n);

/// Right dual of a B-A-bimodule: Sigma* = Hom_A(Sigma_A, A_A) as an
/// A-B-bimodule, together with the concrete functionals realizing the
/// basis (each one a (dim A x dim Sigma) matrix).
struct DualModule {
  Bimodule bim;                  // A-B-bimodule structure on the dual
  std::vector<Mat> functionals;  // concrete basis functionals

  std::size_t dim() const { return bim.dim; }
  /// Functional with coordinate vector `c` applied to module element `u`.
  Mat eval(const Mat& c, const Mat& u) const;
};

DualModule dual_module(const Bimodule& sigma);

/// Finite dual basis { (e_i, e_i^*) } with u = sum_i e_i * e_i^*(u).
struct DualBasis {
  Mat elements;                     // columns e_i (dim Sigma x n)
  std::vector<Mat> functionals;     // concrete e_i^* (dim A x dim Sigma)
  Mat functional_coords;            // coords of e_i^* in the dual basis (dim Sigma* x n)

  std::size_t size() const { return elements.cols(); }
};

/// Solves u = sum_j m_j phi_j(u) over unknown functionals phi_j for the
/// generating set given by the columns of `generators` (defaults to the
/// standard basis).  nullopt iff Sigma_A is not finitely generated
/// projective.
std::optional<DualBasis> dual_basis(const Bimodule& sigma, const DualModule& dual);
std::optional<DualBasis> dual_basis_for_generators(const Bimodule& sigma, const DualModule& dual,
                                                   const Mat& generators);

/// Verifies u = sum_i e_i e_i^*(u) on every basis vector.
CheckResult check_dual_basis(const Bimodule& sigma, const DualBasis& db);

/// Basis of Hom_T(M, T) for a left module (left-linear functionals).
std::vector<Mat> left_functionals(const LeftModule& m);

/// Mirrored dual basis for left modules: u = sum_j phi_j(u) m_j.
struct LeftDualBasis {
  Mat elements;
  std::vector<Mat> functionals;
};
std::optional<LeftDualBasis> left_dual_basis(const LeftModule& m);

/// Finite-dimensional flat = projective; decided by the dual-basis system.
bool is_flat_fd(const LeftModule& m);
bool is_projective_right(const RightModule& m);

/// Basis (rows) of the two-sided trace ideal sum phi(M) inside T.
Mat trace_ideal(const LeftModule& m);

/// Projective with full trace ideal, i.e. a generator.
bool is_faithfully_flat_fgp(const LeftModule& m);

/// Restricts operator matrices to an invariant subspace given by basis rows;
/// throws input_error when the subspace is not invariant.
std::vector<Mat> restrict_actions(const std::vector<Mat>& acts, const Mat& rows);
/// Coordinates of ambient columns in the row basis (throws if outside).
Mat coords_in_rows(const Mat& rows, const Mat& ambient_cols);

}  // namespace coringlab
