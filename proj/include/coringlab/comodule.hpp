#pragma once

#include "coringlab/coring.hpp"

namespace coringlab {

/// Right comodule over a coring: coaction rho: M -> M (x)_A C, stored as an
/// ambient matrix into M (x)_k C plus its projection.
struct RightComodule {
  Coring coring;
  RightModule mod;
  Tensor2 mc;   // M (x)_A C
  Mat rho_amb;  // (dim M * dim C x dim M)
  Mat rho;      // mc projection * rho_amb
};

struct LeftComodule {
  Coring coring;
  LeftModule mod;
  Tensor2 cm;      // C (x)_A M
  Mat lambda_amb;  // (dim C * dim M x dim M)
  Mat lambda;
};

RightComodule make_right_comodule(const Coring& c, const RightModule& m, const Mat& rho_amb);
LeftComodule make_left_comodule(const Coring& c, const LeftModule& m, const Mat& lambda_amb);

CheckResult check_right_comodule(const RightComodule& m);
CheckResult check_left_comodule(const LeftComodule& m);

/// C as a right comodule over itself (rho = Delta).
RightComodule regular_right_comodule(const Coring& c);
LeftComodule regular_left_comodule(const Coring& c);

/// A as a right comodule determined by a grouplike: rho(a) = 1 (x) (g.a).
RightComodule comodule_from_grouplike(const Coring& c, const Mat& g);

/// Any right module as a comodule over the trivial coring: rho(m) = m (x) 1.
RightComodule comodule_over_trivial_coring(const Coring& triv, const RightModule& m);

/// The canonical coaction u -> sum_i e_i (x) (e_i* (x) u) on Sigma over the
/// comatrix coring; left B-linearity is verified.
RightComodule canonical_comatrix_comodule(const ComatrixCoring& cm);

/// Sigma* as a left comodule over the comatrix coring:
/// phi -> sum_i (phi (x) e_i) (x) e_i*.
LeftComodule comatrix_dual_left_comodule(const ComatrixCoring& cm);

/// Basis of Hom^C(M, N): right A-linear maps commuting with the coactions.
std::vector<Mat> colinear_homs(const RightComodule& m, const RightComodule& n);

/// S = End_A(Sigma) and T = End_C(Sigma) materialized as algebras, with the
/// optional factorization of B -> S through T when a left B-action is given.
struct EndoRings {
  Algebra S;
  std::vector<Mat> s_basis;
  SubalgebraPresentation T_in_S;
  std::vector<Mat> t_basis;
  std::optional<AlgebraHom> b_to_t;
  /// Coordinates of the B-action endomorphisms in the T basis (when the
  /// factorization exists); lambda in the descent theorem.
  std::optional<Mat> lambda_matrix;
};

EndoRings endo_rings(const RightComodule& sc);
EndoRings endo_rings(const RightComodule& sc, const Algebra& b, const std::vector<Mat>& left_b_acts);

/// The subspace { f in S : f (x)_B x = 1 (x)_B f(x) for all x }, as rows of
/// coordinates in the S basis.
Mat balanced_endo_description(const ComatrixCoring& cm, const EndoRings& er);

/// can: Sigma* (x)_T Sigma -> C, phi (x) u -> (phi (x) C) rho(u); verified
/// to be a homomorphism of corings (throws logic_error otherwise).
struct CanMap {
  ComatrixCoring source;  // comatrix coring over T
  CoringHom hom;
  EndoRings endos;
};

CanMap canonical_map(const RightComodule& sc);

bool is_galois(const RightComodule& sc);

/// Induction along a coring morphism: coaction (M (x) f) rho.
RightComodule induce_along(const CoringHom& f, const RightComodule& m);

/// Cotensor product M box_C N inside M (x)_A N.
struct Cotensor {
  Tensor2 mn;
  Mat basis;  // rows, in the coordinates of M (x)_A N
  std::size_t dim() const { return basis.rows(); }
};

Cotensor cotensor(const RightComodule& m, const LeftComodule& n);

/// Full descent verification for a bimodule with Sigma_A f.g. projective.
struct DescentReport {
  bool faithfully_flat = false;                            // (a) _B Sigma
  bool lambda_bijective = false;                           // (b) B -> T
  bool lemma_can_iso = false;                              // (c) over T
  std::vector<std::pair<std::string, bool>> unit_checks;   // (d) unit per test module
  std::vector<std::pair<std::string, bool>> counit_checks; // (d) counit per comodule
  bool all() const;
};

DescentReport descent_verify(const Bimodule& sigma, const DualModule& dual, const DualBasis& db,
                             const std::vector<RightModule>& test_modules);

/// Default test modules over B: regular module, its square, and the cyclic
/// quotients by radical powers.
std::vector<RightModule> default_test_modules(const Algebra& b);

/// Finite-scale evaluation of the generator-theorem conditions.
struct GeneratorReport {
  bool c_left_flat = false;
  bool sigma_fgp = false;
  bool can_bijective = false;
  bool t_sigma_faithfully_flat = false;
  bool t_s_faithfully_flat = false;
  bool t_equals_s = false;
  bool consistent = false;      // (iii) and (iv) agree as evaluated
  bool remark_pattern = false;  // can iso and T = S but _A C not flat
};

GeneratorReport generator_report(const RightComodule& sc);

}  // namespace coringlab
