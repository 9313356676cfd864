#include "galdesc/io.hpp"

#include "galdesc/errors.hpp"

namespace galdesc {

json rational_to_json(const Rational& r) {
  std::string s = r.get_num().get_str();
  if (r.get_den() != 1) s += "/" + r.get_den().get_str();
  return json(s);
}

Rational rational_from_json(const json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
      Rational r(j.get<std::string>());
      r.canonicalize();
      return r;
    }
  } catch (const std::exception&) {
    throw ParseError("malformed rational: " + j.dump());
  }
  throw ParseError("expected a rational, got " + j.dump());
}

json element_to_json(const FieldElement& x) {
  if (x.is_rational()) return rational_to_json(x.coords()[0]);
  json arr = json::array();
  for (const Rational& c : x.coords()) arr.push_back(rational_to_json(c));
  return arr;
}

FieldElement element_from_json(const json& j, const FieldPtr& field) {
  if (j.is_array()) {
    size_t degree = static_cast<size_t>(field_degree(field));
    if (j.size() > degree) throw ParseError("too many coordinates for the field");
    std::vector<Rational> coords(degree, Rational(0));
    for (size_t i = 0; i < j.size(); ++i) coords[i] = rational_from_json(j[i]);
    return FieldElement(field, std::move(coords));
  }
  return FieldElement::constant(field, rational_from_json(j));
}

json matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(element_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrix_from_json(const json& j, const FieldPtr& field) {
  if (!j.is_array()) throw ParseError("expected a matrix (array of rows)");
  int rows = static_cast<int>(j.size());
  int cols = rows ? static_cast<int>(j[0].size()) : 0;
  RatMatrix m(rows, cols, field);
  for (int i = 0; i < rows; ++i) {
    if (!j[static_cast<size_t>(i)].is_array() ||
        static_cast<int>(j[static_cast<size_t>(i)].size()) != cols)
      throw ParseError("ragged matrix rows");
    for (int c = 0; c < cols; ++c)
      m.at(i, c) = element_from_json(j[static_cast<size_t>(i)][static_cast<size_t>(c)], field);
  }
  return m;
}

json object_to_json(const Obj& x) {
  json out;
  out["dim"] = x.dim;
  if (x.is_rep()) {
    json act = json::array();
    for (const RatMatrix& a : x.action) act.push_back(matrix_to_json(a));
    out["action"] = std::move(act);
  }
  return out;
}

Obj object_from_json(const json& j, const MatCategory& cat) {
  if (j.is_number_integer()) {
    if (cat.is_rep_category()) throw ParseError("representation objects need acting matrices");
    return cat.object(j.get<int>());
  }
  if (!j.is_object() || !j.contains("dim")) throw ParseError("object needs a \"dim\" field");
  int dim = j.at("dim").get<int>();
  if (!cat.is_rep_category()) return cat.object(dim);
  if (!j.contains("action")) throw ParseError("representation objects need an \"action\" list");
  std::vector<RatMatrix> action;
  for (const json& a : j.at("action")) action.push_back(matrix_from_json(a, cat.field()));
  if (static_cast<int>(action.size()) != cat.group().order)
    throw ParseError("need one acting matrix per group element");
  return cat.object(dim, std::move(action));
}

json extension_to_json(const GaloisExtension& ext) {
  json out;
  json mp = json::array();
  for (const Rational& c : ext.top()->minpoly()) mp.push_back(rational_to_json(c));
  out["minpoly"] = std::move(mp);
  json gens = json::array();
  for (int g = 0; g < ext.degree(); ++g) {
    json coords = json::array();
    for (const Rational& c : ext.generator_image(g).coords()) coords.push_back(rational_to_json(c));
    gens.push_back(std::move(coords));
  }
  out["generators"] = std::move(gens);
  out["names"] = ext.group().names;
  return out;
}

GaloisExtension extension_from_json(const json& j) {
  if (!j.is_object() || !j.contains("minpoly") || !j.contains("generators"))
    throw ParseError("extension file needs \"minpoly\" and \"generators\"");
  Poly mp;
  for (const json& c : j.at("minpoly")) mp.push_back(rational_from_json(c));
  FieldPtr top = NumberField::make(std::move(mp));
  std::vector<FieldElement> images;
  for (const json& g : j.at("generators")) images.push_back(element_from_json(g, top));
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  return GaloisExtension::make(top, std::move(images), std::move(names));
}

json group_to_json(const GroupTable& g, const std::vector<int>& normal, const FieldPtr& field) {
  json out;
  out["order"] = g.order;
  out["table"] = g.table;
  out["names"] = g.names;
  out["normal"] = normal;
  if (field) {
    json mp = json::array();
    for (const Rational& c : field->minpoly()) mp.push_back(rational_to_json(c));
    out["field"] = std::move(mp);
  }
  return out;
}

GroupFile group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("table") || !j.contains("normal"))
    throw ParseError("group file needs \"table\" and \"normal\"");
  auto table = j.at("table").get<std::vector<std::vector<int>>>();
  if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
    throw ParseError("declared order disagrees with the table");
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  GroupFile out;
  try {
    out.group = GroupTable::from_table(std::move(table), std::move(names));
  } catch (const Error& e) {
    throw ParseError(std::string("bad group table: ") + e.what());
  }
  out.normal = j.at("normal").get<std::vector<int>>();
  if (j.contains("field")) {
    Poly mp;
    for (const json& c : j.at("field")) mp.push_back(rational_from_json(c));
    out.field = NumberField::make(std::move(mp));
  } else if (out.group.order == 6) {
    out.field = NumberField::make({Rational(1), Rational(1), Rational(1)});
  } else if (out.group.order == 8) {
    out.field = NumberField::make({Rational(1), Rational(0), Rational(1)});
  }
  return out;
}

namespace {

std::vector<RatMatrix> named_matrices(const json& j, const GroupTable& grp, const FieldPtr& field) {
  if (!j.is_object()) throw ParseError("expected an object keyed by group-element names");
  std::vector<RatMatrix> out;
  out.reserve(static_cast<size_t>(grp.order));
  for (int g = 0; g < grp.order; ++g) {
    const std::string& name = grp.names[static_cast<size_t>(g)];
    if (!j.contains(name)) throw ParseError("missing matrix for group element \"" + name + "\"");
    out.push_back(matrix_from_json(j.at(name), field));
  }
  if (j.size() != static_cast<size_t>(grp.order))
    throw ParseError("unknown group-element names in matrix table");
  return out;
}

}  // namespace

Problem problem_from_json(const json& j) {
  if (!j.is_object() || !j.contains("setting"))
    throw ParseError("problem file needs a \"setting\" field");
  Problem p;
  std::string kind = j.at("setting").get<std::string>();
  if (kind == "semilinear") {
    if (!j.contains("extension")) throw ParseError("semilinear problems need \"extension\"");
    p.setting = make_semilinear(extension_from_json(j.at("extension")));
  } else if (kind == "group-rep") {
    if (!j.contains("groups")) throw ParseError("group-rep problems need \"groups\"");
    GroupFile gf = group_from_json(j.at("groups"));
    p.setting = make_grouprep(std::move(gf.group), std::move(gf.normal), std::move(gf.field));
  } else {
    throw ParseError("unknown setting kind \"" + kind + "\"");
  }
  if (j.contains("object")) p.object = object_from_json(j.at("object"), p.setting->upstairs());
  if (j.contains("b")) {
    if (!p.object) throw ParseError("a datum \"b\" needs an \"object\"");
    p.b = named_matrices(j.at("b"), p.setting->gamma(), p.setting->upstairs().field());
  }
  if (j.contains("rep"))
    p.rep = named_matrices(j.at("rep"), p.setting->gamma(), p.setting->base().field());
  if (j.contains("checks")) p.checks = j.at("checks").get<std::vector<std::string>>();
  return p;
}

json datum_to_json(const DescentSetting& s, const DescentDatum& d) {
  json out;
  out["object"] = object_to_json(d.c);
  json b;
  for (int g = 0; g < s.gamma().order; ++g)
    b[s.gamma().names[static_cast<size_t>(g)]] = matrix_to_json(d.b[static_cast<size_t>(g)]);
  out["b"] = std::move(b);
  return out;
}

}  // namespace galdesc
