#pragma once

#include "coringlab/tensor.hpp"

namespace coringlab {

/// A-coring: an A-bimodule C with comultiplication and counit.  The
/// comultiplication is stored as a matrix into the ambient C (x)_k C
/// followed by the quotient projection onto C (x)_A C; all identities are
/// tested after projection.
struct Coring {
  Algebra base;      // A
  Bimodule bim;      // C as an A-bimodule (left_alg = right_alg = A)
  Tensor2 cc;        // C (x)_A C on the abstract coordinates of C
  Mat delta_amb;     // (dim^2 x dim), ambient representative of Delta
  Mat delta;         // cc.q.projection * delta_amb
  Mat counit;        // (A.dim x dim)

  std::size_t dim() const { return bim.dim; }
  /// Outer actions of A on C (x)_A C.
  Mat cc_left_action(std::size_t i) const;
  Mat cc_right_action(std::size_t i) const;
};

/// Assembles a Coring from its parts and caches the tensor square.
Coring make_coring(const Algebra& base, const Bimodule& bim, const Mat& delta_amb,
                   const Mat& counit);

/// Coassociativity, counit laws, and A-bilinearity of both structure maps.
CheckResult check_coring(const Coring& c);

/// Morphism of A-corings f: source -> target.
struct CoringHom {
  Coring source;
  Coring target;
  Mat matrix;  // (target.dim x source.dim)
};

/// A-bilinearity plus Delta' f = (f (x) f) Delta and eps' f = eps.
CheckResult check_coring_hom(const CoringHom& h);

/// The trivial coring C = A with Delta the unit isomorphism and eps = id.
Coring trivial_coring(const Algebra& a);

/// Direct sum of two corings over the same base algebra.
Coring direct_sum_coring(const Coring& a, const Coring& b);

/// Comatrix coring Sigma* (x)_B Sigma of a B-A-bimodule with Sigma_A
/// finitely generated projective, together with the data the construction
/// produced along the way.
struct ComatrixCoring {
  Coring coring;
  Bimodule sigma;     // the B-A-bimodule
  DualModule dual;    // Sigma* with its A-B-bimodule structure
  DualBasis db;
  Tensor2 csp;        // Sigma* (x)_B Sigma as a quotient of Sigma* (x)_k Sigma

  /// Class of phi (x) u given coordinates in Sigma* and Sigma.
  Mat pure(const Mat& phi_coords, const Mat& u) const { return csp.pure(phi_coords, u); }
};

ComatrixCoring comatrix_coring(const Bimodule& sigma, const DualModule& dual, const DualBasis& db);

/// Sweedler coring A (x)_B A of a ring map B -> A, built directly on the
/// tensor quotient; `grouplike` holds the class of 1 (x) 1.
struct SweedlerCoring {
  Coring coring;
  AlgebraHom h;
  Tensor2 taa;    // A (x)_B A
  Mat grouplike;  // class of 1 (x) 1
};

SweedlerCoring sweedler_coring(const AlgebraHom& h);

/// Canonical identification of the Sweedler coring with the comatrix coring
/// of the bimodule _B A _A; returns the iso matrix (comatrix coords <-
/// Sweedler coords) after asserting it transports Delta and eps exactly.
Mat sweedler_comatrix_identification(const SweedlerCoring& sw, const ComatrixCoring& cm);

/// Dual coring on B* for a ring map A -> B with B_A finitely generated
/// projective, obtained from the comatrix coring of _B B _A through
/// B* (x)_B B = B*.
struct DualCoringResult {
  Coring coring;     // lives on the coordinates of B*
  DualModule bstar;  // B* as an A-B-bimodule with concrete functionals
  AlgebraHom h;
};

DualCoringResult dual_coring(const AlgebraHom& h);

bool verify_grouplike(const Coring& c, const Mat& g);
/// Exhaustive search over small finite fields; throws too_large_error when
/// |F|^dim exceeds 10^6 and is not attempted over Q.
std::vector<Mat> grouplike_search(const Coring& c);

enum class DualSide { Left, Right };

/// Convolution algebra on Hom_A(C, A).  Left dual: (f*g)(c) = f((C (x) g)
/// Delta c); right dual mirrors it: (F*G)(c) = G((F (x) C) Delta c).
struct ConvolutionAlgebra {
  DualSide side = DualSide::Left;
  Algebra alg;
  std::vector<Mat> functionals;  // basis, each (A.dim x C.dim)
};

ConvolutionAlgebra convolution_algebra(const Coring& c, DualSide side);

/// Module action of the convolution algebra on C itself: for the left dual
/// f -> (C (x) f) Delta (a left module), for the right dual F -> (F (x) C)
/// Delta (a right module).  One matrix per basis functional.
std::vector<Mat> convolution_action_on_coring(const Coring& c, const ConvolutionAlgebra& conv);

/// The anti-isomorphism *(Sigma* (x)_B Sigma) -> End(_B Sigma),
/// f -> f^ with f^(u) = sum_i e_i f(e_i* (x) u).
struct HatIso {
  ConvolutionAlgebra left_dual;
  std::vector<Mat> hat;    // image endomorphisms, one per basis functional
  Mat coord_map;           // coordinates of the images in a hom basis of End(_B Sigma)
  bool bijective = false;
};

HatIso hat_anti_iso(const ComatrixCoring& cm);

/// Exhaustive verification: bijectivity, (f*g)^ = f^ g^ on all basis pairs,
/// eps -> identity.
CheckResult check_hat_anti_iso(const ComatrixCoring& cm, const HatIso& hi);

/// Mirror map (Sigma* (x)_B Sigma)* -> End(Sigma*_B), F -> F~ with
/// F~(phi) = sum_i F(phi (x) e_i) . e_i*; anti-multiplicative for the right
/// dual convolution.
CheckResult check_right_dual_anti_iso(const ComatrixCoring& cm);

/// Precomposition *C' -> *C along a coring morphism; a unital algebra map
/// for the convolution products.
AlgebraHom left_dual_hom(const CoringHom& h, const ConvolutionAlgebra& target_dual,
                         const ConvolutionAlgebra& source_dual);

/// Transport of the coring structure along an A-bimodule isomorphism
/// iso: C -> new coordinates carrying the bimodule structure `new_bim`.
Coring transport_coring(const Coring& c, const Bimodule& new_bim, const Mat& iso);

}  // namespace coringlab
