#pragma once

#include <map>
#include <string>

#include "coringlab/coend.hpp"
#include "coringlab/cosemisimple.hpp"
#include "coringlab/constructions.hpp"

namespace coringlab {

/// Declarative fixture format.  Matrices are row-major nested arrays of
/// strings ("3/2" over Q, decimal residues over GF(p)) so that exactness
/// survives serialization.
struct AlgebraDecl {
  std::vector<std::string> basis;
  std::vector<std::vector<Mat>> table;  // table[i][j] = coords of b_i * b_j
  Mat unit;
  bool operator==(const AlgebraDecl&) const = default;
};

struct HomDecl {
  std::string source, target;
  Mat matrix;
  bool operator==(const HomDecl&) const = default;
};

struct BimoduleDecl {
  std::string left, right;
  std::size_t dim = 0;
  std::vector<Mat> left_action, right_action;
  bool operator==(const BimoduleDecl&) const = default;
};

struct ModuleDecl {  // right module
  std::string algebra;
  std::size_t dim = 0;
  std::vector<Mat> action;
  bool operator==(const ModuleDecl&) const = default;
};

struct CoringDecl {
  std::string construct;  // comatrix | sweedler | dual | trivial | direct_sum | explicit
  std::string hom;        // sweedler, dual
  std::string bimodule;   // comatrix
  std::string algebra;    // trivial, explicit
  std::vector<std::string> parts;  // direct_sum
  std::size_t dim = 0;             // explicit
  std::vector<Mat> left_action, right_action;
  Mat delta_ambient, counit;
  bool operator==(const CoringDecl&) const = default;
};

struct ComoduleDecl {
  std::string coring;
  std::string construct;  // grouplike | canonical | regular | trivial | explicit
  std::string grouplike;  // grouplike
  std::string bimodule;   // canonical
  std::string module;     // trivial (module over the trivial coring)
  std::size_t dim = 0;    // explicit
  std::vector<Mat> action;
  Mat coaction_ambient;
  bool operator==(const ComoduleDecl&) const = default;
};

struct GrouplikeDecl {
  std::string coring;
  Mat coords;
  bool operator==(const GrouplikeDecl&) const = default;
};

struct CoringHomDecl {
  std::string source, target;
  Mat matrix;
  bool operator==(const CoringHomDecl&) const = default;
};

struct FixtureFile {
  std::string schema = "coring-lab/1";
  std::string name;
  Field field;
  std::map<std::string, AlgebraDecl> algebras;
  std::map<std::string, HomDecl> homs;
  std::map<std::string, BimoduleDecl> bimodules;
  std::map<std::string, ModuleDecl> modules;
  std::map<std::string, CoringDecl> corings;
  std::map<std::string, ComoduleDecl> comodules;
  std::map<std::string, GrouplikeDecl> grouplikes;
  std::map<std::string, CoringHomDecl> coring_homs;
  bool operator==(const FixtureFile&) const = default;
};

/// Parses a fixture document; throws input_error with a message naming the
/// offending key on malformed input.
FixtureFile parse_fixture(const std::string& json_text);
std::string serialize_fixture(const FixtureFile& fx);
FixtureFile load_fixture_file(const std::string& path);

/// Structurally resolved objects (shapes and name references validated;
/// axiom checking is left to the commands).
struct ResolvedFixture {
  FixtureFile decl;
  std::map<std::string, Algebra> algebras;
  std::map<std::string, AlgebraHom> homs;
  std::map<std::string, Bimodule> bimodules;
  std::map<std::string, RightModule> modules;
  std::map<std::string, Coring> corings;
  std::map<std::string, RightComodule> comodules;
};

ResolvedFixture resolve_fixture(const FixtureFile& fx);

/// Built-in fixtures: FIX-TRIV, FIX-GF4, FIX-SW, FIX-MAT, FIX-XPROD,
/// FIX-NONFLAT, FIX-NONGALOIS and the mutation fixtures MUT-ALGEBRA,
/// MUT-CORING, MUT-COMODULE, MUT-CORINGHOM.
std::vector<std::string> builtin_fixture_names();
FixtureFile builtin_fixture(const std::string& name);

}  // namespace coringlab
