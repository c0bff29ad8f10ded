#include "coringlab/fixture.hpp"

#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace coringlab {

using json = nlohmann::ordered_json;

namespace {

json mat_to_json(const Mat& m) {
  if (m.cols() == 1) {  // column vectors as flat arrays
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(m.get(i, 0).str());
    return a;
  }
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.get(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

Mat mat_from_json(const Field& f, const json& j, const std::string& where) {
  if (!j.is_array()) throw input_error(where + ": expected an array");
  if (j.empty()) return Mat(f, 0, 0);
  if (j[0].is_string()) {  // flat array: column vector
    Mat m(f, j.size(), 1);
    for (std::size_t i = 0; i < j.size(); ++i) m.set(i, 0, f.parse(j[i].get<std::string>()));
    return m;
  }
  const std::size_t rows = j.size(), cols = j[0].size();
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw input_error(where + ": ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(i, c, f.parse(j[i][c].get<std::string>()));
  }
  return m;
}

std::vector<Mat> mats_from_json(const Field& f, const json& j, const std::string& where) {
  std::vector<Mat> out;
  if (!j.is_array()) throw input_error(where + ": expected an array of matrices");
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(mat_from_json(f, j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

json mats_to_json(const std::vector<Mat>& ms) {
  json a = json::array();
  for (const auto& m : ms) a.push_back(mat_to_json(m));
  return a;
}

Field field_from_string(const std::string& s) {
  if (s == "Q") return Field::rationals();
  if (s.rfind("GF:", 0) == 0) return Field::gf(static_cast<std::uint32_t>(std::stoul(s.substr(3))));
  throw input_error("field: expected \"Q\" or \"GF:p\", got '" + s + "'");
}

std::string field_to_string(const Field& f) {
  return f.is_rational() ? "Q" : "GF:" + std::to_string(f.characteristic());
}

std::string get_string(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_string())
    throw input_error(where + ": missing string field '" + key + "'");
  return j[key].get<std::string>();
}

}  // namespace

FixtureFile parse_fixture(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw input_error(std::string("fixture parse error: ") + e.what());
  }
  FixtureFile fx;
  fx.schema = get_string(j, "schema", "fixture");
  if (fx.schema != "coring-lab/1")
    throw input_error("fixture: unsupported schema '" + fx.schema + "'");
  fx.name = j.value("name", "");
  fx.field = field_from_string(get_string(j, "field", "fixture"));
  const Field& f = fx.field;

  json sec_algebras = j.value("algebras", json::object());
  for (auto& [name, a] : sec_algebras.items()) {
    AlgebraDecl d;
    for (const auto& b : a.value("basis", json::array())) d.basis.push_back(b.get<std::string>());
    d.unit = mat_from_json(f, a.at("unit"), name + ".unit");
    const json& t = a.at("table");
    const std::size_t n = t.size();
    d.table.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (t[i].size() != n) throw input_error(name + ".table: ragged");
      for (std::size_t k = 0; k < n; ++k)
        d.table[i].push_back(mat_from_json(f, t[i][k], name + ".table"));
    }
    fx.algebras[name] = std::move(d);
  }
  json sec_homs = j.value("homs", json::object());
  for (auto& [name, h] : sec_homs.items())
    fx.homs[name] = {get_string(h, "source", name), get_string(h, "target", name),
                     mat_from_json(f, h.at("matrix"), name + ".matrix")};
  json sec_bimodules = j.value("bimodules", json::object());
  for (auto& [name, b] : sec_bimodules.items()) {
    BimoduleDecl d;
    d.left = get_string(b, "left", name);
    d.right = get_string(b, "right", name);
    d.dim = b.at("dim").get<std::size_t>();
    d.left_action = mats_from_json(f, b.at("left_action"), name + ".left_action");
    d.right_action = mats_from_json(f, b.at("right_action"), name + ".right_action");
    fx.bimodules[name] = std::move(d);
  }
  json sec_modules = j.value("modules", json::object());
  for (auto& [name, m] : sec_modules.items()) {
    ModuleDecl d;
    d.algebra = get_string(m, "algebra", name);
    d.dim = m.at("dim").get<std::size_t>();
    d.action = mats_from_json(f, m.at("action"), name + ".action");
    fx.modules[name] = std::move(d);
  }
  json sec_corings = j.value("corings", json::object());
  for (auto& [name, c] : sec_corings.items()) {
    CoringDecl d;
    d.construct = get_string(c, "construct", name);
    d.hom = c.value("hom", "");
    d.bimodule = c.value("bimodule", "");
    d.algebra = c.value("algebra", "");
    for (const auto& p : c.value("parts", json::array())) d.parts.push_back(p.get<std::string>());
    d.dim = c.value("dim", 0);
    if (c.contains("left_action")) d.left_action = mats_from_json(f, c["left_action"], name);
    if (c.contains("right_action")) d.right_action = mats_from_json(f, c["right_action"], name);
    if (c.contains("delta_ambient")) d.delta_ambient = mat_from_json(f, c["delta_ambient"], name);
    if (c.contains("counit")) d.counit = mat_from_json(f, c["counit"], name);
    fx.corings[name] = std::move(d);
  }
  json sec_comodules = j.value("comodules", json::object());
  for (auto& [name, c] : sec_comodules.items()) {
    ComoduleDecl d;
    d.coring = get_string(c, "coring", name);
    d.construct = get_string(c, "construct", name);
    d.grouplike = c.value("grouplike", "");
    d.bimodule = c.value("bimodule", "");
    d.module = c.value("module", "");
    d.dim = c.value("dim", 0);
    if (c.contains("action")) d.action = mats_from_json(f, c["action"], name);
    if (c.contains("coaction_ambient"))
      d.coaction_ambient = mat_from_json(f, c["coaction_ambient"], name);
    fx.comodules[name] = std::move(d);
  }
  json sec_grouplikes = j.value("grouplikes", json::object());
  for (auto& [name, g] : sec_grouplikes.items())
    fx.grouplikes[name] = {get_string(g, "coring", name),
                           mat_from_json(f, g.at("coords"), name + ".coords")};
  json sec_coring_homs = j.value("coring_homs", json::object());
  for (auto& [name, h] : sec_coring_homs.items())
    fx.coring_homs[name] = {get_string(h, "source", name), get_string(h, "target", name),
                            mat_from_json(f, h.at("matrix"), name + ".matrix")};
  return fx;
}

std::string serialize_fixture(const FixtureFile& fx) {
  json j;
  j["schema"] = fx.schema;
  j["name"] = fx.name;
  j["field"] = field_to_string(fx.field);
  if (!fx.algebras.empty()) {
    json all = json::object();
    for (const auto& [name, d] : fx.algebras) {
      json a;
      a["basis"] = d.basis;
      a["unit"] = mat_to_json(d.unit);
      json t = json::array();
      for (const auto& row : d.table) {
        json r = json::array();
        for (const auto& m : row) r.push_back(mat_to_json(m));
        t.push_back(r);
      }
      a["table"] = t;
      all[name] = a;
    }
    j["algebras"] = all;
  }
  if (!fx.homs.empty()) {
    json all = json::object();
    for (const auto& [name, d] : fx.homs)
      all[name] = {{"source", d.source}, {"target", d.target}, {"matrix", mat_to_json(d.matrix)}};
    j["homs"] = all;
  }
  if (!fx.bimodules.empty()) {
    json all = json::object();
    for (const auto& [name, d] : fx.bimodules)
      all[name] = {{"left", d.left},
                   {"right", d.right},
                   {"dim", d.dim},
                   {"left_action", mats_to_json(d.left_action)},
                   {"right_action", mats_to_json(d.right_action)}};
    j["bimodules"] = all;
  }
  if (!fx.modules.empty()) {
    json all = json::object();
    for (const auto& [name, d] : fx.modules)
      all[name] = {{"algebra", d.algebra}, {"dim", d.dim}, {"action", mats_to_json(d.action)}};
    j["modules"] = all;
  }
  if (!fx.corings.empty()) {
    json all = json::object();
    for (const auto& [name, d] : fx.corings) {
      json c;
      c["construct"] = d.construct;
      if (!d.hom.empty()) c["hom"] = d.hom;
      if (!d.bimodule.empty()) c["bimodule"] = d.bimodule;
      if (!d.algebra.empty()) c["algebra"] = d.algebra;
      if (!d.parts.empty()) c["parts"] = d.parts;
      if (d.construct == "explicit") {
        c["dim"] = d.dim;
        c["left_action"] = mats_to_json(d.left_action);
        c["right_action"] = mats_to_json(d.right_action);
        c["delta_ambient"] = mat_to_json(d.delta_ambient);
        c["counit"] = mat_to_json(d.counit);
      }
      all[name] = c;
    }
    j["corings"] = all;
  }
  if (!fx.comodules.empty()) {
    json all = json::object();
    for (const auto& [name, d] : fx.comodules) {
      json c;
      c["coring"] = d.coring;
      c["construct"] = d.construct;
      if (!d.grouplike.empty()) c["grouplike"] = d.grouplike;
      if (!d.bimodule.empty()) c["bimodule"] = d.bimodule;
      if (!d.module.empty()) c["module"] = d.module;
      if (d.construct == "explicit") {
        c["dim"] = d.dim;
        c["action"] = mats_to_json(d.action);
        c["coaction_ambient"] = mat_to_json(d.coaction_ambient);
      }
      all[name] = c;
    }
    j["comodules"] = all;
  }
  if (!fx.grouplikes.empty()) {
    json all = json::object();
    for (const auto& [name, d] : fx.grouplikes)
      all[name] = {{"coring", d.coring}, {"coords", mat_to_json(d.coords)}};
    j["grouplikes"] = all;
  }
  if (!fx.coring_homs.empty()) {
    json all = json::object();
    for (const auto& [name, d] : fx.coring_homs)
      all[name] = {{"source", d.source}, {"target", d.target}, {"matrix", mat_to_json(d.matrix)}};
    j["coring_homs"] = all;
  }
  return j.dump(2) + "\n";
}

FixtureFile load_fixture_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open fixture file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_fixture(ss.str());
}

namespace {

template <typename M>
const typename M::mapped_type& lookup(const M& m, const std::string& name,
                                      const std::string& what) {
  auto it = m.find(name);
  if (it == m.end()) throw input_error("unknown " + what + " '" + name + "'");
  return it->second;
}

}  // namespace

ResolvedFixture resolve_fixture(const FixtureFile& fx) {
  ResolvedFixture r;
  r.decl = fx;
  const Field& f = fx.field;

  for (const auto& [name, d] : fx.algebras) {
    Algebra a = make_algebra(f, d.basis, d.table, d.unit);
    r.algebras[name] = std::move(a);
  }
  for (const auto& [name, d] : fx.homs) {
    const Algebra& s = lookup(r.algebras, d.source, "algebra");
    const Algebra& t = lookup(r.algebras, d.target, "algebra");
    if (d.matrix.rows() != t.dim || d.matrix.cols() != s.dim)
      throw input_error("hom '" + name + "': matrix shape mismatch");
    r.homs[name] = AlgebraHom{s, t, d.matrix};
  }
  for (const auto& [name, d] : fx.bimodules) {
    Bimodule b;
    b.left_alg = lookup(r.algebras, d.left, "algebra");
    b.right_alg = lookup(r.algebras, d.right, "algebra");
    b.dim = d.dim;
    b.left_act = d.left_action;
    b.right_act = d.right_action;
    if (b.left_act.size() != b.left_alg.dim || b.right_act.size() != b.right_alg.dim)
      throw input_error("bimodule '" + name + "': action count mismatch");
    for (const auto& m : b.left_act)
      if (m.rows() != b.dim || m.cols() != b.dim)
        throw input_error("bimodule '" + name + "': left action shape");
    for (const auto& m : b.right_act)
      if (m.rows() != b.dim || m.cols() != b.dim)
        throw input_error("bimodule '" + name + "': right action shape");
    r.bimodules[name] = std::move(b);
  }
  for (const auto& [name, d] : fx.modules) {
    RightModule m{lookup(r.algebras, d.algebra, "algebra"), d.dim, d.action};
    if (m.act.size() != m.alg.dim) throw input_error("module '" + name + "': action count");
    r.modules[name] = std::move(m);
  }

  // corings may reference each other through direct sums
  std::set<std::string> visiting;
  std::function<const Coring&(const std::string&)> get_coring = [&](const std::string& name)
      -> const Coring& {
    auto done = r.corings.find(name);
    if (done != r.corings.end()) return done->second;
    if (visiting.count(name)) throw input_error("coring '" + name + "': cyclic definition");
    visiting.insert(name);
    const CoringDecl& d = lookup(fx.corings, name, "coring");
    Coring c;
    if (d.construct == "trivial") {
      c = trivial_coring(lookup(r.algebras, d.algebra, "algebra"));
    } else if (d.construct == "comatrix") {
      const Bimodule& sigma = lookup(r.bimodules, d.bimodule, "bimodule");
      DualModule dual = dual_module(sigma);
      auto db = dual_basis(sigma, dual);
      if (!db) throw input_error("coring '" + name + "': bimodule is not f.g. projective");
      c = comatrix_coring(sigma, dual, *db).coring;
    } else if (d.construct == "sweedler") {
      c = sweedler_coring(lookup(r.homs, d.hom, "hom")).coring;
    } else if (d.construct == "dual") {
      c = dual_coring(lookup(r.homs, d.hom, "hom")).coring;
    } else if (d.construct == "direct_sum") {
      if (d.parts.size() < 2) throw input_error("coring '" + name + "': need at least 2 parts");
      Coring acc = get_coring(d.parts[0]);
      for (std::size_t i = 1; i < d.parts.size(); ++i)
        acc = direct_sum_coring(acc, get_coring(d.parts[i]));
      c = std::move(acc);
    } else if (d.construct == "explicit") {
      Bimodule bim;
      bim.left_alg = lookup(r.algebras, d.algebra, "algebra");
      bim.right_alg = bim.left_alg;
      bim.dim = d.dim;
      bim.left_act = d.left_action;
      bim.right_act = d.right_action;
      c = make_coring(bim.left_alg, bim, d.delta_ambient, d.counit);
    } else {
      throw input_error("coring '" + name + "': unknown construct '" + d.construct + "'");
    }
    visiting.erase(name);
    return r.corings.emplace(name, std::move(c)).first->second;
  };
  for (const auto& [name, d] : fx.corings) get_coring(name);

  for (const auto& [name, d] : fx.grouplikes) {
    const Coring& c = lookup(r.corings, d.coring, "coring");
    if (d.coords.rows() != c.dim() || d.coords.cols() != 1)
      throw input_error("grouplike '" + name + "': coordinate shape");
  }

  for (const auto& [name, d] : fx.comodules) {
    const Coring& c = lookup(r.corings, d.coring, "coring");
    if (d.construct == "grouplike") {
      const GrouplikeDecl& g = lookup(fx.grouplikes, d.grouplike, "grouplike");
      r.comodules.emplace(name, comodule_from_grouplike(c, g.coords));
    } else if (d.construct == "canonical") {
      const Bimodule& sigma = lookup(r.bimodules, d.bimodule, "bimodule");
      DualModule dual = dual_module(sigma);
      auto db = dual_basis(sigma, dual);
      if (!db) throw input_error("comodule '" + name + "': bimodule not f.g. projective");
      ComatrixCoring cm = comatrix_coring(sigma, dual, *db);
      if (cm.coring.dim() != c.dim() || cm.coring.delta != c.delta || cm.coring.counit != c.counit)
        throw input_error("comodule '" + name + "': coring is not the comatrix coring of '" +
                          d.bimodule + "'");
      RightComodule sc = canonical_comatrix_comodule(cm);
      r.comodules.emplace(name, std::move(sc));
    } else if (d.construct == "regular") {
      r.comodules.emplace(name, regular_right_comodule(c));
    } else if (d.construct == "trivial") {
      const RightModule& m = lookup(r.modules, d.module, "module");
      r.comodules.emplace(name, comodule_over_trivial_coring(c, m));
    } else if (d.construct == "explicit") {
      RightModule m{c.base, d.dim, d.action};
      r.comodules.emplace(name, make_right_comodule(c, m, d.coaction_ambient));
    } else {
      throw input_error("comodule '" + name + "': unknown construct '" + d.construct + "'");
    }
  }

  for (const auto& [name, d] : fx.coring_homs) {
    const Coring& s = lookup(r.corings, d.source, "coring");
    const Coring& t = lookup(r.corings, d.target, "coring");
    if (d.matrix.rows() != t.dim() || d.matrix.cols() != s.dim())
      throw input_error("coring hom '" + name + "': matrix shape mismatch");
  }
  return r;
}

namespace {

AlgebraDecl decl_from_algebra(const Algebra& a) {
  AlgebraDecl d;
  d.basis = a.basis;
  d.unit = a.unit;
  d.table.resize(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) d.table[i].push_back(a.lmul[i].col(j));
  return d;
}

BimoduleDecl decl_from_bimodule(const Bimodule& b, const std::string& left,
                                const std::string& right) {
  BimoduleDecl d;
  d.left = left;
  d.right = right;
  d.dim = b.dim;
  d.left_action = b.left_act;
  d.right_action = b.right_act;
  return d;
}

Algebra gf4_builtin() {
  Field g2 = Field::gf(2);
  return quotient_polynomial_algebra(g2, {g2.one(), g2.one()});
}

Algebra gf9_builtin() {
  Field g3 = Field::gf(3);
  return quotient_polynomial_algebra(g3, {g3.one(), g3.one()});
}

AlgebraHom unit_inclusion_of(const Algebra& a) {
  return {scalar_algebra(a.field), a, a.unit};
}

Bimodule bimodule_along_hom(const AlgebraHom& h) {
  Bimodule b;
  b.left_alg = h.source;
  b.right_alg = h.target;
  b.dim = h.target.dim;
  for (std::size_t i = 0; i < h.source.dim; ++i)
    b.left_act.push_back(h.target.lmul_of(h.matrix.col(i)));
  b.right_act = regular_right_action(h.target);
  return b;
}

FixtureFile fix_triv_file() {
  FixtureFile fx;
  fx.name = "FIX-TRIV";
  fx.field = Field::rationals();
  Algebra k = scalar_algebra(fx.field);
  fx.algebras["k"] = decl_from_algebra(k);
  fx.bimodules["Sigma"] = decl_from_bimodule(regular_bimodule(k), "k", "k");
  fx.corings["C"] = CoringDecl{.construct = "comatrix", .bimodule = "Sigma"};
  fx.comodules["S"] = ComoduleDecl{.coring = "C", .construct = "canonical", .bimodule = "Sigma"};
  return fx;
}

FixtureFile fix_gf4_file() {
  FixtureFile fx;
  fx.name = "FIX-GF4";
  fx.field = Field::gf(2);
  Algebra a = gf4_builtin();
  Algebra b = scalar_algebra(fx.field);
  fx.algebras["A"] = decl_from_algebra(a);
  fx.algebras["B"] = decl_from_algebra(b);
  fx.bimodules["Sigma"] = decl_from_bimodule(bimodule_along_hom(unit_inclusion_of(a)), "B", "A");
  fx.corings["C"] = CoringDecl{.construct = "comatrix", .bimodule = "Sigma"};
  fx.comodules["S"] = ComoduleDecl{.coring = "C", .construct = "canonical", .bimodule = "Sigma"};
  return fx;
}

FixtureFile fix_sw_file() {
  FixtureFile fx;
  fx.name = "FIX-SW";
  fx.field = Field::gf(2);
  Algebra a = gf4_builtin();
  Algebra b = scalar_algebra(fx.field);
  fx.algebras["A"] = decl_from_algebra(a);
  fx.algebras["B"] = decl_from_algebra(b);
  AlgebraHom incl = unit_inclusion_of(a);
  fx.homs["incl"] = HomDecl{"B", "A", incl.matrix};
  fx.bimodules["Sigma"] = decl_from_bimodule(bimodule_along_hom(incl), "B", "A");
  fx.corings["C"] = CoringDecl{.construct = "sweedler", .hom = "incl"};
  SweedlerCoring sw = sweedler_coring(incl);
  fx.grouplikes["g"] = GrouplikeDecl{"C", sw.grouplike};
  fx.comodules["S"] = ComoduleDecl{.coring = "C", .construct = "grouplike", .grouplike = "g"};
  return fx;
}

FixtureFile fix_mat_file() {
  FixtureFile fx;
  fx.name = "FIX-MAT";
  fx.field = Field::gf(3);
  Algebra m2 = matrix_algebra(fx.field, 2);
  fx.algebras["A"] = decl_from_algebra(m2);
  fx.corings["C"] = CoringDecl{.construct = "trivial", .algebra = "A"};
  // the simple right module: row vectors with act[E_ij] = E_ji
  ModuleDecl md;
  md.algebra = "A";
  md.dim = 2;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Mat e(fx.field, 2, 2);
      e.set_int(j, i, 1);
      md.action.push_back(e);
    }
  fx.modules["S"] = md;
  fx.comodules["SC"] = ComoduleDecl{.coring = "C", .construct = "trivial", .module = "S"};
  return fx;
}

FixtureFile fix_xprod_file() {
  FixtureFile fx;
  fx.name = "FIX-XPROD";
  fx.field = Field::gf(3);
  Algebra a = gf9_builtin();
  Mat id2 = Mat::identity(fx.field, 2);
  auto autos = field_automorphisms(a);
  Mat frob = autos[0] == id2 ? autos[1] : autos[0];
  Algebra r = skew_group_algebra(a, {{0, 1}, {1, 0}}, {0, 1}, {id2, frob});
  fx.algebras["A"] = decl_from_algebra(a);
  fx.algebras["R"] = decl_from_algebra(r);
  Mat embm(fx.field, 4, 2);
  embm.set_block(0, 0, id2);
  fx.homs["emb"] = HomDecl{"A", "R", embm};
  fx.corings["C"] = CoringDecl{.construct = "dual", .hom = "emb"};
  // trace functional in the coordinates of B* = R*
  DualCoringResult dc = dual_coring({a, r, embm});
  Mat tr(fx.field, 2, 4);
  tr.set_block(0, 0, id2);
  tr.set_block(0, 2, id2);
  Mat rows(fx.field, dc.bstar.dim(), 8);
  for (std::size_t t = 0; t < dc.bstar.dim(); ++t)
    rows.set_block(t, 0, dc.bstar.functionals[t].vec().transpose());
  fx.grouplikes["g"] = GrouplikeDecl{"C", coords_in_rows(rows, tr.vec())};
  fx.comodules["S"] = ComoduleDecl{.coring = "C", .construct = "grouplike", .grouplike = "g"};
  return fx;
}

FixtureFile fix_nonflat_file() {
  FixtureFile fx;
  fx.name = "FIX-NONFLAT";
  fx.field = Field::gf(2);
  const Field& f = fx.field;
  Algebra r0 = dual_numbers(f);
  Algebra k = scalar_algebra(f);
  Algebra a = triangular_ring(r0, k, 1, {Mat::identity(f, 1), Mat(f, 1, 1)},
                              {Mat::identity(f, 1)});
  fx.algebras["A"] = decl_from_algebra(a);

  Mat e(f, 4, 1);
  e.set_int(0, 0, 1);
  RowReducer red(f, 4);
  for (std::size_t j = 0; j < 4; ++j)
    red.add_row((a.lmul_of(e) * Mat::unit(f, 4, j)).transpose());
  Mat ideal_rows = red.basis();
  const std::size_t d = ideal_rows.rows();
  CoringDecl cd;
  cd.construct = "explicit";
  cd.algebra = "A";
  cd.dim = d;
  cd.left_action = restrict_actions(regular_left_action(a), ideal_rows);
  cd.right_action = restrict_actions(regular_right_action(a), ideal_rows);
  Mat e_coords = coords_in_rows(ideal_rows, e);
  cd.delta_ambient = Mat(f, d * d, d);
  for (std::size_t w = 0; w < d; ++w)
    cd.delta_ambient.set_block(0, w, Mat::kron(e_coords, Mat::unit(f, d, w)));
  cd.counit = ideal_rows.transpose();
  fx.corings["I"] = std::move(cd);
  fx.comodules["S"] = ComoduleDecl{.coring = "I", .construct = "regular"};
  return fx;
}

FixtureFile fix_nongalois_file() {
  FixtureFile fx;
  fx.name = "FIX-NONGALOIS";
  fx.field = Field::gf(2);
  Algebra k = scalar_algebra(fx.field);
  fx.algebras["k"] = decl_from_algebra(k);
  fx.corings["C1"] = CoringDecl{.construct = "trivial", .algebra = "k"};
  fx.corings["C2"] = CoringDecl{.construct = "trivial", .algebra = "k"};
  fx.corings["C"] = CoringDecl{.construct = "direct_sum", .parts = {"C1", "C2"}};
  Mat g(fx.field, 2, 1);
  g.set_int(0, 0, 1);
  fx.grouplikes["g"] = GrouplikeDecl{"C", g};
  fx.comodules["S"] = ComoduleDecl{.coring = "C", .construct = "grouplike", .grouplike = "g"};
  return fx;
}

FixtureFile mut_algebra_file() {
  FixtureFile fx;
  fx.name = "MUT-ALGEBRA";
  fx.field = Field::gf(2);
  AlgebraDecl d = decl_from_algebra(gf4_builtin());
  // x * 1 := 0: the unit stops acting on the right
  d.table[1][0] = Mat(fx.field, 2, 1);
  fx.algebras["A"] = d;
  return fx;
}

FixtureFile mut_coring_file() {
  FixtureFile fx;
  fx.name = "MUT-CORING";
  fx.field = Field::gf(2);
  Algebra a = gf4_builtin();
  fx.algebras["A"] = decl_from_algebra(a);
  Coring c = trivial_coring(a);
  CoringDecl cd;
  cd.construct = "explicit";
  cd.algebra = "A";
  cd.dim = c.dim();
  cd.left_action = c.bim.left_act;
  cd.right_action = c.bim.right_act;
  cd.delta_ambient = c.delta_amb;
  // swap two entries of the first column
  Scalar x = cd.delta_ambient.get(0, 0), y = cd.delta_ambient.get(1, 0);
  cd.delta_ambient.set(0, 0, y);
  cd.delta_ambient.set(1, 0, x);
  cd.counit = c.counit;
  fx.corings["C"] = std::move(cd);
  return fx;
}

FixtureFile mut_comodule_file() {
  FixtureFile fx;
  fx.name = "MUT-COMODULE";
  fx.field = Field::gf(2);
  Algebra a = gf4_builtin();
  fx.algebras["A"] = decl_from_algebra(a);
  fx.corings["C"] = CoringDecl{.construct = "trivial", .algebra = "A"};
  Coring c = trivial_coring(a);
  RightComodule reg = regular_right_comodule(c);
  ComoduleDecl cd;
  cd.coring = "C";
  cd.construct = "explicit";
  cd.dim = reg.mod.dim;
  cd.action = reg.mod.act;
  cd.coaction_ambient = reg.rho_amb;
  cd.coaction_ambient.set(0, 0, cd.coaction_ambient.get(0, 0) + fx.field.one());
  fx.comodules["S"] = std::move(cd);
  return fx;
}

FixtureFile mut_coringhom_file() {
  FixtureFile fx;
  fx.name = "MUT-CORINGHOM";
  fx.field = Field::gf(2);
  Algebra a = gf4_builtin();
  fx.algebras["A"] = decl_from_algebra(a);
  fx.corings["C1"] = CoringDecl{.construct = "trivial", .algebra = "A"};
  fx.corings["C2"] = CoringDecl{.construct = "trivial", .algebra = "A"};
  Mat m = Mat::identity(fx.field, 2);
  m.set_int(0, 1, 1);  // breaks the counit identity
  fx.coring_homs["f"] = CoringHomDecl{"C1", "C2", m};
  return fx;
}

}  // namespace

std::vector<std::string> builtin_fixture_names() {
  return {"FIX-TRIV", "FIX-GF4",     "FIX-SW",      "FIX-MAT",      "FIX-XPROD", "FIX-NONFLAT",
          "FIX-NONGALOIS", "MUT-ALGEBRA", "MUT-CORING", "MUT-COMODULE", "MUT-CORINGHOM"};
}

FixtureFile builtin_fixture(const std::string& name) {
  if (name == "FIX-TRIV") return fix_triv_file();
  if (name == "FIX-GF4") return fix_gf4_file();
  if (name == "FIX-SW") return fix_sw_file();
  if (name == "FIX-MAT") return fix_mat_file();
  if (name == "FIX-XPROD") return fix_xprod_file();
  if (name == "FIX-NONFLAT") return fix_nonflat_file();
  if (name == "FIX-NONGALOIS") return fix_nongalois_file();
  if (name == "MUT-ALGEBRA") return mut_algebra_file();
  if (name == "MUT-CORING") return mut_coring_file();
  if (name == "MUT-COMODULE") return mut_comodule_file();
  if (name == "MUT-CORINGHOM") return mut_coringhom_file();
  throw input_error("unknown builtin fixture '" + name + "'");
}

}  // namespace coringlab
