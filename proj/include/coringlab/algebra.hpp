#pragma once

#include <string>
#include <vector>

#include "coringlab/mat.hpp"

namespace coringlab {

/// Outcome of a checker: pass, or the first violated axiom with a witness.
struct CheckResult {
  bool ok = true;
  std::string axiom;
  std::string witness;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string ax, std::string wit) {
    return {false, std::move(ax), std::move(wit)};
  }
};

/// Partial decision value for procedures that may be inconclusive over Q.
enum class Tri { True, False, Undecided };

std::string to_string(Tri t);

/// Finite-dimensional unital associative algebra given by structure
/// constants.  lmul[i] is the left-multiplication matrix of basis element
/// b_i, so column j of lmul[i] holds the coordinates of b_i * b_j.
struct Algebra {
  Field field;
  std::size_t dim = 0;
  std::vector<std::string> basis;  // labels, defaulted to e0, e1, ...
  std::vector<Mat> lmul;
  Mat unit;  // column vector

  /// c[i][j][k] with b_i b_j = sum_k c[i][j][k] b_k.
  Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return lmul[i].get(k, j);
  }

  Mat lmul_of(const Mat& x) const;          // left multiplication by element x
  Mat rmul_of(const Mat& x) const;          // right multiplication by element x
  Mat rmul(std::size_t i) const;            // right multiplication by b_i
  Mat mul(const Mat& x, const Mat& y) const { return lmul_of(x) * y; }

  bool is_commutative() const;
};

/// Builds an algebra from labels, a full multiplication table
/// table[i][j] = coordinates of b_i * b_j (columns), and the unit.
Algebra make_algebra(const Field& f, std::vector<std::string> basis,
                     const std::vector<std::vector<Mat>>& table, Mat unit);

/// Associativity on all basis triples plus two-sided unit law.
CheckResult check_algebra(const Algebra& a);

/// Linear map between algebras; matrix is (target.dim x source.dim).
struct AlgebraHom {
  Algebra source;
  Algebra target;
  Mat matrix;

  Mat apply(const Mat& x) const { return matrix * x; }
};

/// Unit preservation and multiplicativity on all basis pairs.
CheckResult check_algebra_hom(const AlgebraHom& h);

/// Subalgebra of `parent` spanned by the rows of `embedding`, carrying the
/// induced multiplication.
struct SubalgebraPresentation {
  Algebra parent;
  Mat embedding;  // rows = basis of the subspace, in parent coordinates
  Algebra sub;

  /// Parent coordinates of subalgebra element x.
  Mat embed(const Mat& x) const { return embedding.transpose() * x; }
};

/// Builds the induced algebra on a multiplicatively closed subspace that
/// contains the unit; throws input_error otherwise.
SubalgebraPresentation subalgebra_from_rows(const Algebra& parent, const Mat& rows);

/// Basis of the Jacobson radical, as rows.  Over Q this is the kernel of the
/// trace form of the regular representation; over GF(p) the iterated
/// p-power trace-function chain is used.
Mat jacobson_radical(const Algebra& a);

/// Right module data used by the semisimplicity test: act[i] is the matrix
/// of the right action of basis element b_i.
bool is_semisimple_right_module(const Algebra& a, const std::vector<Mat>& act);

/// Exhaustive over small finite fields (throws too_large_error above 10^6
/// elements); structural necessary conditions plus sampling over Q, which
/// may return Undecided.
Tri is_division_ring(const Algebra& a);

Algebra opposite(const Algebra& a);

/// b_i |-> b_i as a right module over a (regular representation).
std::vector<Mat> regular_right_action(const Algebra& a);
std::vector<Mat> regular_left_action(const Algebra& a);

/// Center of the algebra, as rows.
Mat center(const Algebra& a);

/// Structure constants of the span of the given (closed) operator set,
/// i.e. the image algebra of a representation.  Rows of the returned
/// embedding express the chosen basis inside flattened operator space.
Algebra image_algebra(const Field& f, const std::vector<Mat>& operators, Mat* embedding = nullptr);

}  // namespace coringlab
