#ifndef GPDHOM_JSON_IO_HPP
#define GPDHOM_JSON_IO_HPP

// JSON schemas for groupoids, modules, correspondences, inverse semigroups,
// homomorphisms and G-sets. Composition tables are exhaustive; units are
// recovered from the tables. Serializers emit exactly what the parsers read,
// so counterexample dumps reload bit-for-bit.
//
//   groupoid        {"objects":[str], "arrows":[{"id","src","dst"}],
//                    "mul":[[a,b,ab]], "inv":{a:ainv}}
//   module          {"groupoid":name, "fibers":{obj:rank}, "action":{arrow:[[int]]}}
//   correspondence  {"source":name, "target":name, "points":[str], "rho":{},
//                    "sigma":{}, "left":[[g,w,w2]], "right":[[w,h,w2]]}
//   semigroup       {"elements":[str], "mul":[[names]], "star":{}?, "zero":str?}
//   homomorphism    {"source":name, "target":name, "objects":{}, "arrows":{}}
//   gset            {"groupoid":name, "points":[str], "tau":{}, "action":[[g,p,p2]]}

#include <json.hpp>

#include <fstream>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "gpdhom/correspondence.hpp"
#include "gpdhom/invsemi.hpp"

namespace gpdhom {

using Json = nlohmann::json;

namespace detail {

inline Json parse_json_text(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_json_text(text, path);
}

inline const Json& field(const Json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

inline std::string require_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

inline int require_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<int>();
}

// Name index with duplicate detection.
class NameIndex {
public:
  NameIndex(const Json& names, const std::string& where) : where_(where) {
    if (!names.is_array()) throw ParseError(where + ": expected an array of names");
    for (const auto& n : names) {
      std::string s = require_string(n, where);
      if (index_.count(s)) throw ParseError(where + ": duplicate name '" + s + "'");
      index_[s] = static_cast<int>(list_.size());
      list_.push_back(std::move(s));
    }
  }
  explicit NameIndex(const std::vector<std::string>& names, const std::string& where)
      : where_(where) {
    for (const auto& s : names) {
      if (index_.count(s)) throw ParseError(where + ": duplicate name '" + s + "'");
      index_[s] = static_cast<int>(list_.size());
      list_.push_back(s);
    }
  }
  int at(const std::string& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw ParseError(where_ + ": unknown name '" + s + "'");
    return it->second;
  }
  int at(const Json& j) const { return at(require_string(j, where_)); }
  const std::vector<std::string>& names() const { return list_; }
  int size() const { return static_cast<int>(list_.size()); }

private:
  std::string where_;
  std::map<std::string, int> index_;
  std::vector<std::string> list_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Groupoids

inline GroupoidPtr groupoid_from_json(const Json& j, const std::string& where = "groupoid") {
  using detail::field;
  detail::NameIndex objects(field(j, "objects", where), where + ".objects");
  const Json& arrows = field(j, "arrows", where);
  if (!arrows.is_array()) throw ParseError(where + ".arrows: expected an array");
  GroupoidData d;
  d.object_names = objects.names();
  std::vector<std::string> arrow_names;
  for (const auto& a : arrows)
    arrow_names.push_back(detail::require_string(field(a, "id", where + ".arrows"),
                                                 where + ".arrows.id"));
  detail::NameIndex arrow_index(arrow_names, where + ".arrows");
  d.arrow_names = arrow_index.names();
  const int A = arrow_index.size();
  d.source.resize(A);
  d.range.resize(A);
  d.inverse.assign(A, -1);
  for (int i = 0; i < A; ++i) {
    const Json& a = arrows[i];
    d.source[i] = objects.at(field(a, "src", where + ".arrows"));
    d.range[i] = objects.at(field(a, "dst", where + ".arrows"));
  }
  const Json& inv = field(j, "inv", where);
  if (!inv.is_object()) throw ParseError(where + ".inv: expected an object");
  for (const auto& [key, val] : inv.items()) d.inverse[arrow_index.at(key)] = arrow_index.at(val);
  for (int i = 0; i < A; ++i)
    if (d.inverse[i] == -1)
      throw ParseError(where + ".inv: missing inverse for '" + d.arrow_names[i] + "'");
  const Json& mul = field(j, "mul", where);
  if (!mul.is_array()) throw ParseError(where + ".mul: expected an array of triples");
  d.compose.assign(A * A, -1);
  for (const auto& t : mul) {
    if (!t.is_array() || t.size() != 3)
      throw ParseError(where + ".mul: entries must be triples [a, b, ab]");
    const int a = arrow_index.at(t[0]), b = arrow_index.at(t[1]), ab = arrow_index.at(t[2]);
    if (d.compose_at(a, b) != -1 && d.compose_at(a, b) != ab)
      throw ParseError(where + ".mul: contradictory entries for ('" + d.arrow_names[a] + "','" +
                       d.arrow_names[b] + "')");
    d.set_compose(a, b, ab);
  }
  // units are determined by the tables: an arrow at x absorbing on both sides
  d.unit.assign(objects.size(), -1);
  for (int x = 0; x < objects.size(); ++x) {
    for (int u = 0; u < A; ++u) {
      if (d.source[u] != x || d.range[u] != x) continue;
      bool is_unit = d.compose_at(u, u) == u;
      for (int a = 0; a < A && is_unit; ++a) {
        if (d.range[a] == x && d.compose_at(u, a) != a) is_unit = false;
        if (d.source[a] == x && d.compose_at(a, u) != a) is_unit = false;
      }
      if (is_unit) {
        d.unit[x] = u;
        break;
      }
    }
    if (d.unit[x] == -1)
      throw ValidationError(where + ": no unit arrow found for object '" + d.object_names[x] +
                            "'");
  }
  return make_groupoid(std::move(d));  // full validation happens here
}

inline Json groupoid_to_json(const FiniteGroupoid& g) {
  Json j;
  j["objects"] = Json::array();
  for (int x = 0; x < g.object_count(); ++x) j["objects"].push_back(g.object_name(x));
  j["arrows"] = Json::array();
  for (int a = 0; a < g.arrow_count(); ++a)
    j["arrows"].push_back({{"id", g.arrow_name(a)},
                           {"src", g.object_name(g.source(a))},
                           {"dst", g.object_name(g.range(a))}});
  j["mul"] = Json::array();
  for (int a = 0; a < g.arrow_count(); ++a)
    for (int b = 0; b < g.arrow_count(); ++b)
      if (g.composable(a, b))
        j["mul"].push_back({g.arrow_name(a), g.arrow_name(b), g.arrow_name(g.compose(a, b))});
  j["inv"] = Json::object();
  for (int a = 0; a < g.arrow_count(); ++a) j["inv"][g.arrow_name(a)] = g.arrow_name(g.inverse(a));
  return j;
}

// ---------------------------------------------------------------------------
// Modules

inline GModule module_from_json(const Json& j, GroupoidPtr g,
                                const std::string& groupoid_name = "",
                                const std::string& where = "module") {
  using detail::field;
  const std::string declared = detail::require_string(field(j, "groupoid", where), where);
  if (!groupoid_name.empty() && declared != groupoid_name)
    throw ParseError(where + ": module references groupoid '" + declared +
                     "' but the file provides '" + groupoid_name + "'");
  detail::NameIndex objects(g->data().object_names, where);
  detail::NameIndex arrows(g->data().arrow_names, where);
  const Json& fibers = field(j, "fibers", where);
  if (!fibers.is_object()) throw ParseError(where + ".fibers: expected an object");
  std::vector<int> ranks(g->object_count(), -1);
  for (const auto& [key, val] : fibers.items()) {
    const int r = detail::require_int(val, where + ".fibers");
    if (r < 0) throw ParseError(where + ".fibers: negative rank");
    ranks[objects.at(key)] = r;
  }
  for (int x = 0; x < g->object_count(); ++x)
    if (ranks[x] == -1)
      throw ParseError(where + ".fibers: missing fiber for object '" + g->object_name(x) + "'");
  const Json& action = field(j, "action", where);
  if (!action.is_object()) throw ParseError(where + ".action: expected an object");
  std::vector<IntMatrix> act(g->arrow_count());
  std::vector<bool> seen(g->arrow_count(), false);
  for (const auto& [key, val] : action.items()) {
    const int a = arrows.at(key);
    if (!val.is_array()) throw ParseError(where + ".action: expected a matrix for '" + key + "'");
    const int rows = ranks[g->range(a)], cols = ranks[g->source(a)];
    if (static_cast<int>(val.size()) != rows)
      throw ParseError(where + ".action: wrong row count for '" + key + "'");
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      if (!val[i].is_array() || static_cast<int>(val[i].size()) != cols)
        throw ParseError(where + ".action: ragged matrix for '" + key + "'");
      for (int c = 0; c < cols; ++c)
        m.set(i, c, detail::require_int(val[i][c], where + ".action"));
    }
    act[a] = std::move(m);
    seen[a] = true;
  }
  for (int a = 0; a < g->arrow_count(); ++a)
    if (!seen[a])
      throw ParseError(where + ".action: missing action for arrow '" + g->arrow_name(a) + "'");
  return GModule::create(std::move(g), std::move(ranks), std::move(act));
}

inline Json module_to_json(const GModule& m, const std::string& groupoid_name) {
  const FiniteGroupoid& g = *m.groupoid();
  Json j;
  j["groupoid"] = groupoid_name;
  j["fibers"] = Json::object();
  for (int x = 0; x < g.object_count(); ++x) j["fibers"][g.object_name(x)] = m.fiber_rank(x);
  j["action"] = Json::object();
  for (int a = 0; a < g.arrow_count(); ++a) {
    Json rows = Json::array();
    for (int i = 0; i < m.action(a).rows(); ++i) {
      Json row = Json::array();
      for (int c = 0; c < m.action(a).cols(); ++c) {
        const Int& v = m.action(a).at(i, c);
        if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
          throw InternalError("module_to_json: entry does not fit in an integer field");
        row.push_back(static_cast<long long>(v));
      }
      rows.push_back(std::move(row));
    }
    j["action"][g.arrow_name(a)] = std::move(rows);
  }
  return j;
}

// ---------------------------------------------------------------------------
// Correspondences

inline EtaleCorrespondence correspondence_from_json(const Json& j, GroupoidPtr source,
                                                    GroupoidPtr target,
                                                    const std::string& where = "correspondence") {
  using detail::field;
  detail::NameIndex points(field(j, "points", where), where + ".points");
  detail::NameIndex gobj(source->data().object_names, where + ".rho");
  detail::NameIndex hobj(target->data().object_names, where + ".sigma");
  detail::NameIndex garr(source->data().arrow_names, where + ".left");
  detail::NameIndex harr(target->data().arrow_names, where + ".right");
  CorrespondenceData d;
  d.point_names = points.names();
  const int P = points.size();
  d.rho.assign(P, -1);
  d.sigma.assign(P, -1);
  const Json& rho = field(j, "rho", where);
  for (const auto& [key, val] : rho.items()) d.rho[points.at(key)] = gobj.at(val);
  const Json& sigma = field(j, "sigma", where);
  for (const auto& [key, val] : sigma.items()) d.sigma[points.at(key)] = hobj.at(val);
  for (int w = 0; w < P; ++w)
    if (d.rho[w] == -1 || d.sigma[w] == -1)
      throw ParseError(where + ": missing rho/sigma for point '" + d.point_names[w] + "'");
  d.left.assign(source->arrow_count() * P, -1);
  d.right.assign(P * target->arrow_count(), -1);
  const Json& left = field(j, "left", where);
  for (const auto& t : left) {
    if (!t.is_array() || t.size() != 3)
      throw ParseError(where + ".left: entries must be triples [g, w, w2]");
    d.left[garr.at(t[0]) * P + points.at(t[1])] = points.at(t[2]);
  }
  const Json& right = field(j, "right", where);
  for (const auto& t : right) {
    if (!t.is_array() || t.size() != 3)
      throw ParseError(where + ".right: entries must be triples [w, h, w2]");
    d.right[points.at(t[0]) * target->arrow_count() + harr.at(t[1])] = points.at(t[2]);
  }
  return EtaleCorrespondence::create(std::move(source), std::move(target), std::move(d));
}

inline Json correspondence_to_json(const EtaleCorrespondence& c, const std::string& source_name,
                                   const std::string& target_name) {
  Json j;
  j["source"] = source_name;
  j["target"] = target_name;
  j["points"] = Json::array();
  for (int w = 0; w < c.point_count(); ++w) j["points"].push_back(c.point_name(w));
  j["rho"] = Json::object();
  j["sigma"] = Json::object();
  const FiniteGroupoid& g = *c.source_groupoid();
  const FiniteGroupoid& h = *c.target_groupoid();
  for (int w = 0; w < c.point_count(); ++w) {
    j["rho"][c.point_name(w)] = g.object_name(c.rho(w));
    j["sigma"][c.point_name(w)] = h.object_name(c.sigma(w));
  }
  j["left"] = Json::array();
  for (int a = 0; a < g.arrow_count(); ++a)
    for (int w = 0; w < c.point_count(); ++w)
      if (g.source(a) == c.rho(w))
        j["left"].push_back({g.arrow_name(a), c.point_name(w), c.point_name(c.left_act(a, w))});
  j["right"] = Json::array();
  for (int w = 0; w < c.point_count(); ++w)
    for (int b = 0; b < h.arrow_count(); ++b)
      if (c.sigma(w) == h.range(b))
        j["right"].push_back({c.point_name(w), h.arrow_name(b), c.point_name(c.right_act(w, b))});
  return j;
}

// ---------------------------------------------------------------------------
// Inverse semigroups

inline FiniteInverseSemigroup semigroup_from_json(const Json& j,
                                                  const std::string& where = "semigroup") {
  using detail::field;
  detail::NameIndex elems(field(j, "elements", where), where + ".elements");
  SemigroupData d;
  d.element_names = elems.names();
  const Json& mul = field(j, "mul", where);
  if (!mul.is_array() || static_cast<int>(mul.size()) != elems.size())
    throw ParseError(where + ".mul: expected a row-major table with one row per element");
  for (const auto& row : mul) {
    if (!row.is_array() || static_cast<int>(row.size()) != elems.size())
      throw ParseError(where + ".mul: ragged table");
    std::vector<int> r;
    for (const auto& v : row) r.push_back(elems.at(v));
    d.mul.push_back(std::move(r));
  }
  if (j.contains("star")) {
    d.star.assign(elems.size(), -1);
    for (const auto& [key, val] : j["star"].items()) d.star[elems.at(key)] = elems.at(val);
    for (int a = 0; a < elems.size(); ++a)
      if (d.star[a] == -1)
        throw ParseError(where + ".star: missing entry for '" + d.element_names[a] + "'");
  }
  if (j.contains("zero")) d.zero = elems.at(j["zero"]);
  return FiniteInverseSemigroup::create(std::move(d));
}

inline Json semigroup_to_json(const FiniteInverseSemigroup& s) {
  Json j;
  j["elements"] = Json::array();
  for (int a = 0; a < s.size(); ++a) j["elements"].push_back(s.name(a));
  j["mul"] = Json::array();
  for (int a = 0; a < s.size(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < s.size(); ++b) row.push_back(s.name(s.mul(a, b)));
    j["mul"].push_back(std::move(row));
  }
  j["star"] = Json::object();
  for (int a = 0; a < s.size(); ++a) j["star"][s.name(a)] = s.name(s.star(a));
  if (s.zero()) j["zero"] = s.name(*s.zero());
  return j;
}

// ---------------------------------------------------------------------------
// Homomorphisms and G-sets

inline GroupoidHom hom_from_json(const Json& j, GroupoidPtr source, GroupoidPtr target,
                                 const std::string& where = "homomorphism") {
  using detail::field;
  detail::NameIndex sobj(source->data().object_names, where + ".objects");
  detail::NameIndex tobj(target->data().object_names, where + ".objects");
  detail::NameIndex sarr(source->data().arrow_names, where + ".arrows");
  detail::NameIndex tarr(target->data().arrow_names, where + ".arrows");
  std::vector<int> omap(source->object_count(), -1), amap(source->arrow_count(), -1);
  for (const auto& [key, val] : field(j, "objects", where).items())
    omap[sobj.at(key)] = tobj.at(val);
  for (const auto& [key, val] : field(j, "arrows", where).items())
    amap[sarr.at(key)] = tarr.at(val);
  for (int x = 0; x < source->object_count(); ++x)
    if (omap[x] == -1)
      throw ParseError(where + ".objects: missing image of '" + source->object_name(x) + "'");
  for (int a = 0; a < source->arrow_count(); ++a)
    if (amap[a] == -1)
      throw ParseError(where + ".arrows: missing image of '" + source->arrow_name(a) + "'");
  return GroupoidHom::create(std::move(source), std::move(target), std::move(omap),
                             std::move(amap));
}

inline GSet gset_from_json(const Json& j, GroupoidPtr g, const std::string& where = "gset") {
  using detail::field;
  detail::NameIndex points(field(j, "points", where), where + ".points");
  detail::NameIndex objects(g->data().object_names, where + ".tau");
  detail::NameIndex arrows(g->data().arrow_names, where + ".action");
  GSetData d;
  d.point_names = points.names();
  d.anchor.assign(points.size(), -1);
  for (const auto& [key, val] : field(j, "tau", where).items())
    d.anchor[points.at(key)] = objects.at(val);
  for (int p = 0; p < points.size(); ++p)
    if (d.anchor[p] == -1)
      throw ParseError(where + ".tau: missing anchor for '" + d.point_names[p] + "'");
  d.action.assign(g->arrow_count() * points.size(), -1);
  for (const auto& t : field(j, "action", where)) {
    if (!t.is_array() || t.size() != 3)
      throw ParseError(where + ".action: entries must be triples [g, p, p2]");
    d.action[arrows.at(t[0]) * points.size() + points.at(t[1])] = points.at(t[2]);
  }
  return GSet::create(std::move(g), std::move(d));
}

}  // namespace gpdhom

#endif  // GPDHOM_JSON_IO_HPP
