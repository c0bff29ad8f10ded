#pragma once

#include "coringlab/comodule.hpp"

namespace coringlab {

/// Unit/counit data of the adjunction - (x)_B Sigma -| - (x)_A Sigma*
/// realized as matrices over chosen test modules, with exact triangle
/// identities and the hom-set bijection round trip.
struct AdjunctionData {
  std::vector<std::pair<std::string, bool>> triangle_left;   // per right B-module Y
  std::vector<std::pair<std::string, bool>> triangle_right;  // per right A-module X
  bool eta_bijective = false;
  bool eta_round_trip = false;

  bool all() const {
    bool ok = eta_bijective && eta_round_trip;
    for (const auto& [n, v] : triangle_left) ok = ok && v;
    for (const auto& [n, v] : triangle_right) ok = ok && v;
    return ok;
  }
};

AdjunctionData build_adjunction(const ComatrixCoring& cm,
                                const std::vector<RightModule>& y_tests,
                                const std::vector<RightModule>& x_tests);

/// The coendomorphism coring recovered from the adjunction condition
/// (F(N) (x) theta_N) theta_N = (Delta (x) N) theta_N with N = Sigma*;
/// Delta is the unique right A-linear solution and the counit comes from
/// the hom-set bijection applied to the canonical isomorphism.
struct CoendCoringResult {
  Mat delta;    // quotient coordinates, directly comparable with cm.coring.delta
  Mat counit;
  bool unique = false;
  Coring coring;
};

CoendCoringResult coend_coring(const ComatrixCoring& cm);

/// lambda_{Sigma*}: Sigma* -> C (x)_A Sigma* induced by the coaction of a
/// comodule Sigma; makes Sigma* a left C-comodule.
LeftComodule dual_left_comodule_over(const RightComodule& sc, const ComatrixCoring& cm_t);

/// The morphism chi_C (lambda_{Sigma*} (x)_T Sigma) equals can exactly.
bool f_equals_can(const RightComodule& sc, const CanMap& can);

}  // namespace coringlab
