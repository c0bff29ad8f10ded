#pragma once

#include <cstdint>

#include "coringlab/comodule.hpp"

namespace coringlab {

/// One simple block of a cosemisimple coring: the isotypic component of a
/// simple right comodule, recomputed in block coordinates.
struct CosemisimpleBlock {
  Mat embedding;             // RREF rows: the block inside C
  Coring block_coring;       // subcoring structure in block coordinates
  RightComodule simple;      // a simple right comodule Sigma over the block
  Mat simple_in_c;           // rows: Sigma inside C
  Algebra division;          // D = End(Sigma) over the block coring
  std::vector<Mat> division_basis;
  Tri division_certified = Tri::Undecided;
  std::size_t comatrix_dim = 0;  // dim Sigma* (x)_D Sigma
  bool can_bijective = false;
};

struct CosemisimpleReport {
  bool cosemisimple = false;
  bool c_projective = false;        // C_A projective
  bool semisimple_module = false;   // C semisimple over the right dual
  std::vector<CosemisimpleBlock> blocks;
  bool blocks_complementary = false;
  std::vector<std::string> notes;
};

/// Theorem-style test: C_A projective and C semisimple as a right module
/// over the right convolution dual.
bool is_cosemisimple(const Coring& c);

/// Full decomposition into simple subcorings with per-block comatrix models
/// and can-isomorphism certificates.  Throws input_error when the coring is
/// not cosemisimple.
CosemisimpleReport decompose(const Coring& c, std::uint64_t seed = 0);

/// Witness check: g is a right A-module isomorphism Sigma -> Xi conjugating
/// the division subring D onto E.
bool verify_conjugacy(const RightModule& sigma, const std::vector<Mat>& d_basis,
                      const RightModule& xi, const std::vector<Mat>& e_basis, const Mat& g);

/// Exhaustive witness search over small hom spaces (bound 10^6 candidates).
std::optional<Mat> conjugacy_search(const RightModule& sigma, const std::vector<Mat>& d_basis,
                                    const RightModule& xi, const std::vector<Mat>& e_basis);

/// Wraps a right module as a bimodule with trivial scalar left action.
Bimodule trivial_left_bimodule(const RightModule& m);

}  // namespace coringlab
