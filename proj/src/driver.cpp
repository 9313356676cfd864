#include "galdesc/driver.hpp"

#include <algorithm>
#include <sstream>

#include "galdesc/errors.hpp"
#include "galdesc/monoid.hpp"

namespace galdesc {

json report_to_json(const Report& r, double elapsed_ms) {
  json out;
  out["tool"] = "galdesc";
  out["version"] = kToolVersion;
  out["command"] = r.command;
  out["seed"] = r.seed;
  json checks = json::array();
  for (const CheckResult& c : r.checks) {
    json item;
    item["check"] = c.check;
    item["status"] = c.pass ? "pass" : "fail";
    item["witness"] = c.witness;
    checks.push_back(std::move(item));
  }
  out["checks"] = std::move(checks);
  if (!r.artifact.is_null()) out["artifact"] = r.artifact;
  if (elapsed_ms >= 0) out["elapsed_ms"] = elapsed_ms;
  return out;
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  int failed = 0;
  for (const CheckResult& c : r.checks) {
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.check;
    if (!c.pass) {
      os << ": " << c.witness;
      ++failed;
    }
    os << "\n";
  }
  os << r.command << ": " << (r.checks.size() - static_cast<size_t>(failed)) << "/"
     << r.checks.size() << " checks passed\n";
  return os.str();
}

namespace {

std::vector<Obj> sample_objects(const DescentSetting& s) {
  const MatCategory& up = s.upstairs();
  std::vector<Obj> out = {up.unit()};
  out.push_back(up.is_rep_category() ? regular_object(up) : up.object(2));
  return out;
}

CheckResult run_check(const std::string& name, const std::function<std::string()>& body) {
  CheckResult r{name, false, ""};
  try {
    r.witness = body();
    r.pass = r.witness.empty();
  } catch (const Error& e) {
    r.witness = e.what();
  }
  return r;
}

std::string check_adjunction(const DescentEngine& eng) {
  const DescentSetting& s = eng.setting();
  for (const Obj& c : sample_objects(s)) {
    auto rep = eng.left_adjoint_check(s.push_obj(c), c);
    if (!rep.first_identity || !rep.second_identity) return "triangle identity fails";
  }
  return "";
}

std::string check_cartesian(const DescentEngine& eng, const std::optional<Obj>& extra) {
  const DescentSetting& s = eng.setting();
  std::vector<Obj> objs = sample_objects(s);
  if (extra) objs.push_back(*extra);
  for (const Obj& c : objs) {
    auto cart = eng.cartesian(c);  // throws NotCartesian with a message
    if (s.counit(c) * cart.sigma != s.upstairs().id(c)) return "counit section fails";
  }
  return "";
}

std::string check_trace(const DescentEngine& eng) {
  const DescentSetting& s = eng.setting();
  Rational order(s.gamma().order);
  for (const Obj& c : sample_objects(s)) {
    Obj a = s.push_obj(c);
    if (eng.trace_map(a) * s.unit(a) != s.base().id(a).scaled(order))
      return "trace of the unit is not multiplication by the group order";
  }
  return "";
}

std::string check_weak_projection(const DescentEngine& eng) {
  const DescentSetting& s = eng.setting();
  for (const Obj& c : sample_objects(s)) {
    Obj a = s.push_obj(c);
    if (!is_invertible(eng.weak_projection(a))) return "weak projection is not invertible";
  }
  return "";
}

std::string check_datum(const DescentEngine& eng, const DescentDatum& d) {
  const DescentSetting& s = eng.setting();
  const GroupTable& grp = s.gamma();
  if (static_cast<int>(d.b.size()) != grp.order) return "wrong number of maps";
  for (int g = 0; g < grp.order; ++g) {
    if (!s.upstairs().valid_morphism(s.twist_obj(g, d.c), d.c, d.b[static_cast<size_t>(g)]))
      return "b at " + grp.names[static_cast<size_t>(g)] + " is not a morphism of the right shape";
    if (!is_invertible(d.b[static_cast<size_t>(g)]))
      return "b at " + grp.names[static_cast<size_t>(g)] + " is singular";
  }
  if (!d.b[static_cast<size_t>(grp.identity)].is_identity()) return "b at the identity is not the identity";
  for (int g = 0; g < grp.order; ++g)
    for (int h = 0; h < grp.order; ++h) {
      RatMatrix lhs = d.b[static_cast<size_t>(h)] * s.twist_mor(h, d.b[static_cast<size_t>(g)]);
      RatMatrix rhs = d.b[static_cast<size_t>(grp.mul(g, h))] * s.cocycle(g, h, d.c);
      if (lhs != rhs)
        return "cocycle violated at (g, h) = (" + grp.names[static_cast<size_t>(g)] + ", " +
               grp.names[static_cast<size_t>(h)] + ")";
    }
  return "";
}

std::string check_descend_roundtrip(const DescentEngine& eng, const DescentDatum& d) {
  const DescentSetting& s = eng.setting();
  DescentResult res = eng.descend(d);
  if (res.idempotent * res.idempotent != res.idempotent) return "averaging map is not idempotent";
  if (!is_invertible(res.iso)) return "comparison map is singular";
  if (res.iso * res.iso_inverse != s.upstairs().id(d.c)) return "inverse fails on the left";
  DescentDatum canon = eng.canonical_datum(res.descended);
  if (res.iso_inverse * res.iso != s.upstairs().id(canon.c)) return "inverse fails on the right";
  for (int g = 0; g < s.gamma().order; ++g)
    if (res.iso * canon.b[static_cast<size_t>(g)] !=
        d.b[static_cast<size_t>(g)] * s.twist_mor(g, res.iso))
      return "comparison is not a map of descent data at " +
             s.gamma().names[static_cast<size_t>(g)];
  return "";
}

}  // namespace

Report cmd_verify(const Problem& p) {
  Report rep;
  rep.command = "verify";
  DescentEngine eng{p.setting};
  std::optional<DescentDatum> datum;
  if (p.b) datum = DescentDatum{*p.object, *p.b};

  std::vector<std::string> wanted;
  if (p.checks) {
    wanted = *p.checks;
  } else {
    wanted = {"adjunction", "cartesian", "trace", "weak-projection"};
    if (datum) wanted.push_back("datum");
  }
  for (const std::string& name : wanted) {
    if (name == "adjunction")
      rep.checks.push_back(run_check(name, [&] { return check_adjunction(eng); }));
    else if (name == "cartesian")
      rep.checks.push_back(run_check(name, [&] { return check_cartesian(eng, p.object); }));
    else if (name == "trace")
      rep.checks.push_back(run_check(name, [&] { return check_trace(eng); }));
    else if (name == "weak-projection")
      rep.checks.push_back(run_check(name, [&] { return check_weak_projection(eng); }));
    else if (name == "datum") {
      if (!datum) throw ParseError("check \"datum\" needs an object and b");
      rep.checks.push_back(run_check(name, [&] { return check_datum(eng, *datum); }));
    } else {
      throw ParseError("unknown check \"" + name + "\"");
    }
  }
  return rep;
}

Report cmd_descend(const Problem& p) {
  if (!p.object || !p.b) throw ParseError("descend needs an \"object\" and a datum \"b\"");
  Report rep;
  rep.command = "descend";
  DescentEngine eng{p.setting};
  DescentDatum d{*p.object, *p.b};
  eng.require_valid(d);  // CocycleViolation -> invalid-datum exit code
  DescentResult res = eng.descend(d);
  rep.checks.push_back(run_check("round-trip", [&] { return check_descend_roundtrip(eng, d); }));
  rep.artifact["descended"] = object_to_json(res.descended);
  rep.artifact["iso"] = matrix_to_json(res.iso);
  rep.artifact["iso_inverse"] = matrix_to_json(res.iso_inverse);
  rep.artifact["idempotent"] = matrix_to_json(res.idempotent);
  return rep;
}

Report cmd_artin(const Problem& p) {
  if (!p.rep) throw ParseError("artin needs a \"rep\" table of matrices");
  Report rep;
  rep.command = "artin";
  DescentEngine eng{p.setting};
  ArtinImage image;
  image.action = *p.rep;
  image.rank = image.action.empty() ? 0 : image.action.front().rows();
  ArtinResult res = eng.artin_inverse(image);  // NotArtin -> invalid-datum exit code
  rep.checks.push_back(run_check("round-trip", [&] {
    ArtinImage back = eng.artin_functor(res.object, res.witness);
    if (back.rank != image.rank) return std::string("rank changed on the round trip");
    for (size_t g = 0; g < image.action.size(); ++g)
      if (back.action[g] != image.action[g])
        return "action differs at " + eng.gamma().names[g];
    return std::string();
  }));
  rep.artifact["object"] = object_to_json(res.object);
  rep.artifact["witness"] = matrix_to_json(res.witness);
  return rep;
}

Report cmd_exactseq(const std::shared_ptr<GroupRepSetting>& pair) {
  Report rep;
  rep.command = "exactseq";
  rep.checks = exact_sequence_check(pair);
  return rep;
}

Report cmd_selftest(uint32_t seed, int cases) {
  Report rep;
  rep.command = "selftest";
  rep.seed = seed;
  if (cases <= 0) return rep;

  struct Entry {
    std::string name;
    SettingPtr setting;
  };
  std::vector<Entry> entries = {
      {"gaussian", make_semilinear(gaussian_extension())},
      {"cyclic-cubic", make_semilinear(cyclic_cubic_extension())},
      {"biquadratic", make_semilinear(biquadratic_extension())},
      {"s3-a3", s3_pair()},
      {"d4-c4", d4_pair()},
  };
  for (const Entry& e : entries) {
    DescentEngine eng{e.setting};
    rep.checks.push_back(
        run_check("adjunction " + e.name, [&] { return check_adjunction(eng); }));
    rep.checks.push_back(
        run_check("cartesian " + e.name, [&] { return check_cartesian(eng, std::nullopt); }));
    rep.checks.push_back(run_check("trace " + e.name, [&] { return check_trace(eng); }));
    rep.checks.push_back(
        run_check("weak-projection " + e.name, [&] { return check_weak_projection(eng); }));
    rep.checks.push_back(run_check("etale " + e.name, [&] {
      UniversalExtension ue = universal_extension(eng);
      EtaleAlgebra et = etale_algebra(eng, ue);
      if (et.e.carrier.dim != eng.gamma().order) return std::string("wrong algebra dimension");
      if (!is_invertible(et.comparison)) return std::string("splitting comparison is singular");
      return std::string();
    }));
    for (int i = 0; i < cases; ++i) {
      rep.checks.push_back(run_check("descend " + e.name + " #" + std::to_string(i), [&] {
        const MatCategory& down = e.setting->base();
        int dim = 1 + i % 3;
        Obj a = down.is_rep_category()
                    ? (dim == 1 ? down.unit() : regular_object(down))
                    : down.object(dim);
        DescentDatum d = eng.random_datum(a, seed + static_cast<uint32_t>(i));
        if (!eng.datum_valid(d)) return std::string("generated datum is invalid");
        return check_descend_roundtrip(eng, d);
      }));
    }
  }
  return rep;
}

}  // namespace galdesc
