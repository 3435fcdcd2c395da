#include "m21/scenario.hpp"

#include <omp.h>

#include <chrono>
#include <fstream>

#include "m21/error.hpp"
#include "m21/graded.hpp"
#include "m21/parallel.hpp"
#include "m21/parse.hpp"
#include "m21/version.hpp"

namespace m21::suite {

const char* kind_name(CheckKind k) {
  switch (k) {
    case CheckKind::IdealEqual: return "IDEAL_EQUAL";
    case CheckKind::Member: return "MEMBER";
    case CheckKind::NotMember: return "NOT_MEMBER";
    case CheckKind::PatchingDerive: return "PATCHING_DERIVE";
    case CheckKind::MapValid: return "MAP_VALID";
    case CheckKind::Nzd: return "NZD";
    case CheckKind::PushforwardEq: return "PUSHFORWARD_EQ";
    case CheckKind::ClassConsistency: return "CLASS_CONSISTENCY";
    case CheckKind::GradedComponent: return "GRADED_COMPONENT";
    case CheckKind::IdentityEq: return "IDENTITY_EQ";
    case CheckKind::ContainmentReport: return "CONTAINMENT_REPORT";
  }
  return "?";
}

std::optional<CheckKind> kind_from(const std::string& s) {
  for (CheckKind k :
       {CheckKind::IdealEqual, CheckKind::Member, CheckKind::NotMember, CheckKind::PatchingDerive,
        CheckKind::MapValid, CheckKind::Nzd, CheckKind::PushforwardEq,
        CheckKind::ClassConsistency, CheckKind::GradedComponent, CheckKind::IdentityEq,
        CheckKind::ContainmentReport})
    if (s == kind_name(k)) return k;
  return std::nullopt;
}

const chow::ChowPresentation* Scenario::find_ring(const std::string& name) const {
  for (const auto& r : rings)
    if (r.name == name) return &r;
  return nullptr;
}

const Scenario::NamedMap* Scenario::find_map(const std::string& name) const {
  for (const auto& m : maps)
    if (m.map.name == name) return &m;
  return nullptr;
}

const Scenario::NamedClass* Scenario::find_class(const std::string& name) const {
  for (const auto& c : classes)
    if (c.name == name) return &c;
  return nullptr;
}

const Scenario::NamedOperator* Scenario::find_operator(const std::string& name) const {
  for (const auto& o : operators)
    if (o.name == name) return &o;
  return nullptr;
}

namespace {

[[noreturn]] void bad(Errc code, const std::string& loc, const std::string& msg) {
  fail(code, loc + ": " + msg);
}

const Json& field(const Json& j, const char* key, const std::string& loc) {
  if (!j.is_object() || !j.contains(key))
    bad(Errc::TypeMismatch, loc, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string str_field(const Json& j, const char* key, const std::string& loc) {
  const Json& v = field(j, key, loc);
  if (!v.is_string()) bad(Errc::TypeMismatch, loc + "." + key, "expected a string");
  return v.get<std::string>();
}

std::string opt_str(const Json& j, const char* key, const std::string& fallback) {
  if (j.is_object() && j.contains(key) && j.at(key).is_string())
    return j.at(key).get<std::string>();
  return fallback;
}

Polynomial parse_in(const std::string& text, const Ring& ring, const std::string& loc) {
  try {
    return parse_poly(text, ring);
  } catch (const Error& e) {
    bad(e.code(), loc, std::string(e.what()) + " in \"" + text + "\"");
  }
}

const chow::ChowPresentation& named_ring(const Scenario& s, const std::string& name,
                                         const std::string& loc) {
  const auto* r = s.find_ring(name);
  if (!r) bad(Errc::UnresolvedName, loc, "unknown ring '" + name + "'");
  return *r;
}

/// A ring reference: a name, an inline {vars, relations} presentation, or an
/// {excise: {base, classes}} derivation.
chow::ChowPresentation resolve_ring_ref(const Scenario& s, const Json& ref,
                                        const std::string& loc) {
  if (ref.is_string()) return named_ring(s, ref.get<std::string>(), loc);
  if (ref.is_object() && ref.contains("excise")) {
    const Json& ex = ref.at("excise");
    const auto& base = named_ring(s, str_field(ex, "base", loc + ".excise"), loc + ".excise");
    std::vector<Polynomial> classes;
    const Json& cl = field(ex, "classes", loc + ".excise");
    if (!cl.is_array()) bad(Errc::TypeMismatch, loc + ".excise.classes", "expected an array");
    for (size_t i = 0; i < cl.size(); ++i) {
      if (!cl[i].is_string())
        bad(Errc::TypeMismatch, loc + ".excise.classes", "expected polynomial strings");
      classes.push_back(parse_in(cl[i].get<std::string>(), base.ring, loc + ".excise.classes"));
    }
    return chow::excise(base, classes, opt_str(ex, "name", base.name + "_excised"));
  }
  if (ref.is_object() && ref.contains("vars")) {
    Ring ring;
    try {
      ring = parse_ring(str_field(ref, "vars", loc));
    } catch (const Error& e) {
      bad(e.code(), loc + ".vars", e.what());
    }
    std::vector<Polynomial> rels;
    if (ref.contains("relations")) {
      const Json& rl = ref.at("relations");
      if (!rl.is_array()) bad(Errc::TypeMismatch, loc + ".relations", "expected an array");
      for (const auto& r : rl) {
        if (!r.is_string()) bad(Errc::TypeMismatch, loc + ".relations", "expected strings");
        rels.push_back(parse_in(r.get<std::string>(), ring, loc + ".relations"));
      }
    }
    return chow::ChowPresentation::make(opt_str(ref, "name", "(inline)"), ring, std::move(rels));
  }
  bad(Errc::TypeMismatch, loc, "expected a ring name, inline presentation, or excise derivation");
}

/// Polynomial expressions inside checks: a plain string, {"product": [...]}
/// (a weight-class product), or {"subst": {"map": m, "poly": p}}.
Polynomial resolve_expr(const Scenario& s, const Ring& ring, const Json& e,
                        const std::string& loc) {
  if (e.is_string()) return parse_in(e.get<std::string>(), ring, loc);
  if (e.is_object() && e.contains("product")) {
    const Json& arr = e.at("product");
    if (!arr.is_array()) bad(Errc::TypeMismatch, loc + ".product", "expected an array");
    std::vector<Polynomial> chars;
    for (const auto& c : arr) {
      if (!c.is_string()) bad(Errc::TypeMismatch, loc + ".product", "expected strings");
      chars.push_back(parse_in(c.get<std::string>(), ring, loc + ".product"));
    }
    return chow::weight_class(ring, chars);
  }
  if (e.is_object() && e.contains("subst")) {
    const Json& su = e.at("subst");
    const auto* nm = s.find_map(str_field(su, "map", loc + ".subst"));
    if (!nm) bad(Errc::UnresolvedName, loc + ".subst", "unknown map");
    Polynomial p = parse_in(str_field(su, "poly", loc + ".subst"), nm->map.source, loc + ".subst");
    Polynomial img = chow::apply(nm->map, p);
    if (!same_ring(img.ring(), ring))
      bad(Errc::TypeMismatch, loc + ".subst", "substitution lands in a different ring");
    return Polynomial::from_terms(ring, img.terms());
  }
  bad(Errc::TypeMismatch, loc, "expected a polynomial string, product, or subst expression");
}

std::string torsion_str(const std::vector<mpz_class>& t) {
  std::string s = "[";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += t[i].get_str();
  }
  return s + "]";
}

} // namespace

Scenario load_scenario_json(const Json& doc, const std::string& origin) {
  Scenario s;
  if (!doc.is_object()) bad(Errc::ParseError, origin, "scenario document must be an object");
  s.id = opt_str(doc, "scenario", origin);
  s.description = opt_str(doc, "description", "");
  if (doc.contains("datasets")) {
    for (const auto& d : doc.at("datasets"))
      if (d.is_string()) s.datasets.push_back(d.get<std::string>());
  }

  if (doc.contains("rings")) {
    const Json& rings = doc.at("rings");
    if (!rings.is_array()) bad(Errc::TypeMismatch, origin + ".rings", "expected an array");
    for (size_t i = 0; i < rings.size(); ++i) {
      std::string loc = origin + ".rings[" + std::to_string(i) + "]";
      const Json& rj = rings[i];
      std::string name = str_field(rj, "name", loc);
      if (s.find_ring(name)) bad(Errc::ParseError, loc, "duplicate ring name '" + name + "'");
      Ring ring;
      try {
        ring = parse_ring(str_field(rj, "vars", loc));
      } catch (const Error& e) {
        bad(e.code(), loc + ".vars", e.what());
      }
      std::vector<Polynomial> rels;
      if (rj.contains("relations")) {
        const Json& rl = rj.at("relations");
        if (!rl.is_array()) bad(Errc::TypeMismatch, loc + ".relations", "expected an array");
        for (size_t k = 0; k < rl.size(); ++k) {
          if (!rl[k].is_string()) bad(Errc::TypeMismatch, loc + ".relations", "expected strings");
          rels.push_back(parse_in(rl[k].get<std::string>(), ring,
                                  loc + ".relations[" + std::to_string(k) + "]"));
        }
      }
      std::map<std::string, std::string> docs;
      if (rj.contains("doc") && rj.at("doc").is_object()) {
        for (const auto& [k, v] : rj.at("doc").items())
          if (v.is_string()) docs[k] = v.get<std::string>();
      }
      try {
        s.rings.push_back(
            chow::ChowPresentation::make(name, ring, std::move(rels), std::move(docs)));
      } catch (const Error& e) {
        bad(e.code(), loc, e.what());
      }
    }
  }

  if (doc.contains("maps")) {
    const Json& maps = doc.at("maps");
    if (!maps.is_array()) bad(Errc::TypeMismatch, origin + ".maps", "expected an array");
    for (size_t i = 0; i < maps.size(); ++i) {
      std::string loc = origin + ".maps[" + std::to_string(i) + "]";
      const Json& mj = maps[i];
      std::string name = str_field(mj, "name", loc);
      if (s.find_map(name)) bad(Errc::ParseError, loc, "duplicate map name '" + name + "'");

      std::string src = str_field(mj, "source", loc);
      Ring source;
      IdealPresentation source_rel;
      if (src.find('[') != std::string::npos) {
        try {
          source = parse_ring(src);
        } catch (const Error& e) {
          bad(e.code(), loc + ".source", e.what());
        }
        source_rel = IdealPresentation::make(source, {});
      } else {
        const auto& r = named_ring(s, src, loc + ".source");
        source = r.ring;
        source_rel = r.relations;
      }
      const auto& target = named_ring(s, str_field(mj, "target", loc), loc + ".target");
      const Json& imgs = field(mj, "images", loc);
      if (!imgs.is_object()) bad(Errc::TypeMismatch, loc + ".images", "expected an object");
      std::vector<Polynomial> images;
      for (size_t v = 0; v < source->nvars(); ++v) {
        const std::string& vn = source->var_name(v);
        if (!imgs.contains(vn))
          bad(Errc::TypeMismatch, loc + ".images", "missing image for '" + vn + "'");
        if (!imgs.at(vn).is_string())
          bad(Errc::TypeMismatch, loc + ".images." + vn, "expected a string");
        images.push_back(
            parse_in(imgs.at(vn).get<std::string>(), target.ring, loc + ".images." + vn));
      }
      for (const auto& [k, v] : imgs.items())
        if (!source->index_of(k))
          bad(Errc::TypeMismatch, loc + ".images", "'" + k + "' is not a source variable");
      Scenario::NamedMap nm;
      try {
        nm.map = chow::RingMap::make(name, source, target, std::move(images));
      } catch (const Error& e) {
        bad(e.code(), loc, e.what());
      }
      nm.source_relations = std::move(source_rel);
      s.maps.push_back(std::move(nm));
    }
  }

  if (doc.contains("classes")) {
    const Json& cls = doc.at("classes");
    if (!cls.is_array()) bad(Errc::TypeMismatch, origin + ".classes", "expected an array");
    for (size_t i = 0; i < cls.size(); ++i) {
      std::string loc = origin + ".classes[" + std::to_string(i) + "]";
      const Json& cj = cls[i];
      Scenario::NamedClass nc;
      nc.name = str_field(cj, "name", loc);
      if (s.find_class(nc.name)) bad(Errc::ParseError, loc, "duplicate class name");
      nc.ring_name = str_field(cj, "ring", loc);
      const auto& ring = named_ring(s, nc.ring_name, loc + ".ring");
      nc.value = parse_in(str_field(cj, "value", loc), ring.ring, loc + ".value");
      s.classes.push_back(std::move(nc));
    }
  }

  if (doc.contains("operators")) {
    const Json& ops = doc.at("operators");
    if (!ops.is_array()) bad(Errc::TypeMismatch, origin + ".operators", "expected an array");
    for (size_t i = 0; i < ops.size(); ++i) {
      std::string loc = origin + ".operators[" + std::to_string(i) + "]";
      const Json& oj = ops[i];
      std::string name = str_field(oj, "name", loc);
      if (s.find_operator(name)) bad(Errc::ParseError, loc, "duplicate operator name");
      std::string shape = str_field(oj, "shape", loc);
      const auto& into = named_ring(s, str_field(oj, "into", loc), loc + ".into");
      const auto* pb = s.find_map(str_field(oj, "pullback", loc));
      if (!pb) bad(Errc::UnresolvedName, loc + ".pullback", "unknown map");
      if (!same_ring(pb->map.source, into.ring))
        bad(Errc::TypeMismatch, loc, "pullback must start from the 'into' ring");

      if (shape == "surjective_pullback") {
        chow::SurjectivePullback op;
        op.into = into;
        op.pullback = pb->map;
        op.unit_image = parse_in(str_field(oj, "unit_image", loc), into.ring, loc + ".unit_image");
        const Json& pre = field(oj, "preimages", loc);
        const GradedRingSpec& up = *pb->map.target.ring;
        for (size_t v = 0; v < up.nvars(); ++v) {
          const std::string& vn = up.var_name(v);
          if (!pre.contains(vn) || !pre.at(vn).is_string())
            bad(Errc::TypeMismatch, loc + ".preimages", "missing preimage for '" + vn + "'");
          op.preimages.push_back(
              parse_in(pre.at(vn).get<std::string>(), into.ring, loc + ".preimages." + vn));
        }
        s.operators.push_back(Scenario::NamedOperator{name, std::move(op)});
      } else if (shape == "quadratic_transfer") {
        chow::QuadraticTransfer op;
        op.into = into;
        op.pullback = pb->map;
        const GradedRingSpec& up = *pb->map.target.ring;
        auto var_index = [&](const char* key) {
          std::string vn = str_field(oj, key, loc);
          auto idx = up.index_of(vn);
          if (!idx) bad(Errc::UnresolvedName, loc, "'" + vn + "' is not an upstream variable");
          return *idx;
        };
        op.tau = var_index("tau");
        op.cogen = var_index("cogen");
        op.tau_p = parse_in(str_field(oj, "tau_p", loc), into.ring, loc + ".tau_p");
        op.tau_q = parse_in(str_field(oj, "tau_q", loc), into.ring, loc + ".tau_q");
        op.cogen_a = parse_in(str_field(oj, "cogen_a", loc), into.ring, loc + ".cogen_a");
        op.cogen_b = parse_in(str_field(oj, "cogen_b", loc), into.ring, loc + ".cogen_b");
        op.push_unit = parse_in(str_field(oj, "push_unit", loc), into.ring, loc + ".push_unit");
        op.push_tau = parse_in(str_field(oj, "push_tau", loc), into.ring, loc + ".push_tau");
        s.operators.push_back(Scenario::NamedOperator{name, std::move(op)});
      } else {
        bad(Errc::TypeMismatch, loc + ".shape", "unknown operator shape '" + shape + "'");
      }
    }
  }

  if (doc.contains("checks")) {
    const Json& checks = doc.at("checks");
    if (!checks.is_array()) bad(Errc::TypeMismatch, origin + ".checks", "expected an array");
    for (size_t i = 0; i < checks.size(); ++i) {
      std::string loc = origin + ".checks[" + std::to_string(i) + "]";
      const Json& cj = checks[i];
      Scenario::Check c;
      c.name = str_field(cj, "name", loc);
      for (const auto& prev : s.checks)
        if (prev.name == c.name)
          bad(Errc::ParseError, loc, "duplicate check name '" + c.name + "'");
      auto kind = kind_from(str_field(cj, "kind", loc));
      if (!kind) bad(Errc::TypeMismatch, loc + ".kind", "unknown check kind");
      c.kind = *kind;
      c.args = cj;
      s.checks.push_back(std::move(c));
    }
  }

  // Resolve every reference once, so loading reports dangling names and
  // malformed arguments up front; the mathematical work runs later.
  for (const auto& c : s.checks) {
    std::string loc = origin + ".checks(" + c.name + ")";
    const Json& a = c.args;
    switch (c.kind) {
      case CheckKind::IdealEqual: {
        auto L = resolve_ring_ref(s, field(a, "left", loc), loc + ".left");
        auto R = resolve_ring_ref(s, field(a, "right", loc), loc + ".right");
        if (!same_ring(L.ring, R.ring)) bad(Errc::TypeMismatch, loc, "rings differ");
        break;
      }
      case CheckKind::Member:
      case CheckKind::NotMember: {
        auto Rr = resolve_ring_ref(s, field(a, "ring", loc), loc + ".ring");
        parse_in(str_field(a, "poly", loc), Rr.ring, loc + ".poly");
        break;
      }
      case CheckKind::PatchingDerive: {
        Ring gens;
        try {
          gens = parse_ring(str_field(a, "generators", loc));
        } catch (const Error& e) {
          bad(e.code(), loc + ".generators", e.what());
        }
        const auto* op = s.find_map(str_field(a, "open", loc));
        const auto* cl = s.find_map(str_field(a, "closed", loc));
        if (!op || !cl) bad(Errc::UnresolvedName, loc, "unknown restriction map");
        if (!same_ring(op->map.source, gens) || !same_ring(cl->map.source, gens))
          bad(Errc::TypeMismatch, loc, "restriction maps must start from the generator ring");
        parse_in(str_field(a, "top_chern", loc), cl->map.target.ring, loc + ".top_chern");
        resolve_ring_ref(s, field(a, "expected", loc), loc + ".expected");
        break;
      }
      case CheckKind::MapValid: {
        if (!s.find_map(str_field(a, "map", loc)))
          bad(Errc::UnresolvedName, loc + ".map", "unknown map");
        break;
      }
      case CheckKind::Nzd: {
        auto Rr = resolve_ring_ref(s, field(a, "ring", loc), loc + ".ring");
        parse_in(str_field(a, "class", loc), Rr.ring, loc + ".class");
        if (!field(a, "expected", loc).is_boolean())
          bad(Errc::TypeMismatch, loc + ".expected", "expected a boolean");
        break;
      }
      case CheckKind::PushforwardEq: {
        if (!s.find_operator(str_field(a, "operator", loc)))
          bad(Errc::UnresolvedName, loc + ".operator", "unknown operator");
        str_field(a, "input", loc);
        str_field(a, "expected", loc);
        break;
      }
      case CheckKind::ClassConsistency: {
        if (!s.find_class(str_field(a, "class", loc)))
          bad(Errc::UnresolvedName, loc + ".class", "unknown class");
        const Json& rs = field(a, "restrictions", loc);
        if (!rs.is_array()) bad(Errc::TypeMismatch, loc + ".restrictions", "expected an array");
        for (const auto& row : rs) {
          const auto* m = s.find_map(str_field(row, "map", loc + ".restrictions"));
          if (!m) bad(Errc::UnresolvedName, loc + ".restrictions", "unknown map");
          parse_in(str_field(row, "expected", loc + ".restrictions"), m->map.target.ring,
                   loc + ".restrictions.expected");
        }
        break;
      }
      case CheckKind::GradedComponent: {
        resolve_ring_ref(s, field(a, "ring", loc), loc + ".ring");
        const Json& comps = field(a, "components", loc);
        if (!comps.is_array() || comps.empty())
          bad(Errc::TypeMismatch, loc + ".components", "expected a nonempty array");
        for (const auto& comp : comps)
          if (!comp.contains("degree") || !comp.at("degree").is_number_integer())
            bad(Errc::TypeMismatch, loc + ".components", "each entry needs an integer degree");
        break;
      }
      case CheckKind::IdentityEq: {
        auto Rr = resolve_ring_ref(s, field(a, "ring", loc), loc + ".ring");
        resolve_expr(s, Rr.ring, field(a, "left", loc), loc + ".left");
        resolve_expr(s, Rr.ring, field(a, "right", loc), loc + ".right");
        break;
      }
      case CheckKind::ContainmentReport: {
        if (a.contains("left")) {
          auto L = resolve_ring_ref(s, a.at("left"), loc + ".left");
          auto R = resolve_ring_ref(s, field(a, "right", loc), loc + ".right");
          if (!same_ring(L.ring, R.ring)) bad(Errc::TypeMismatch, loc, "rings differ");
        } else if (a.contains("candidates")) {
          auto Rr = resolve_ring_ref(s, field(a, "ring", loc), loc + ".ring");
          resolve_expr(s, Rr.ring, field(a, "value", loc), loc + ".value");
          if (!a.at("candidates").is_object())
            bad(Errc::TypeMismatch, loc + ".candidates", "expected an object");
          for (const auto& [k, v] : a.at("candidates").items()) {
            if (!v.is_string()) bad(Errc::TypeMismatch, loc + ".candidates", "expected strings");
            parse_in(v.get<std::string>(), Rr.ring, loc + ".candidates." + k);
          }
        } else {
          bad(Errc::TypeMismatch, loc, "containment report needs left/right or candidates");
        }
        break;
      }
    }
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in, nullptr, true, true); // comments allowed
  } catch (const std::exception& e) {
    fail(Errc::ParseError, path + ": " + e.what());
  }
  return load_scenario_json(doc, path);
}

namespace {

struct Outcome {
  Status status;
  std::string witness;
};

/// First generator of `what` that does not reduce to zero against `against`.
std::optional<std::pair<Polynomial, Polynomial>> containment_witness(
    const IdealPresentation& what, const IdealPresentation& against) {
  GroebnerBasis G = groebner_basis(against);
  std::vector<Polynomial> nf = normal_forms(what.generators, G);
  for (size_t i = 0; i < nf.size(); ++i)
    if (!nf[i].is_zero()) return std::make_pair(what.generators[i], nf[i]);
  return std::nullopt;
}

IdealPresentation reparent(const IdealPresentation& I, const Ring& ring) {
  std::vector<Polynomial> v;
  v.reserve(I.generators.size());
  for (const auto& g : I.generators) v.push_back(Polynomial::from_terms(ring, g.terms()));
  return IdealPresentation::make(ring, std::move(v));
}

Outcome run_ideal_equal(const Scenario& s, const Json& a, const std::string& loc) {
  auto L = resolve_ring_ref(s, a.at("left"), loc);
  auto R = resolve_ring_ref(s, a.at("right"), loc);
  IdealPresentation right = reparent(R.relations, L.ring);
  auto lr = containment_witness(L.relations, right);
  if (lr)
    return {Status::Fail, "generator " + lr->first.str() + " of " + L.name + " is not in " +
                              R.name + " (residue " + lr->second.str() + ")"};
  auto rl = containment_witness(right, L.relations);
  if (rl)
    return {Status::Fail, "generator " + rl->first.str() + " of " + R.name + " is not in " +
                              L.name + " (residue " + rl->second.str() + ")"};
  return {Status::Pass, ""};
}

Outcome run_member(const Scenario& s, const Json& a, const std::string& loc, bool expect_in) {
  auto Rr = resolve_ring_ref(s, a.at("ring"), loc);
  Polynomial p = parse_in(a.at("poly").get<std::string>(), Rr.ring, loc);
  Polynomial nf = normal_form(p, groebner_basis(Rr.relations));
  if (expect_in) {
    if (nf.is_zero()) return {Status::Pass, ""};
    return {Status::Fail, "residue " + nf.str()};
  }
  if (!nf.is_zero()) return {Status::Pass, ""};
  return {Status::Fail, p.str() + " reduces to zero in " + Rr.name};
}

Outcome run_patching(const Scenario& s, const Json& a, const std::string& loc) {
  Ring gens = parse_ring(a.at("generators").get<std::string>());
  const auto& open = s.find_map(a.at("open").get<std::string>())->map;
  const auto& closed = s.find_map(a.at("closed").get<std::string>())->map;
  Polynomial top = parse_in(a.at("top_chern").get<std::string>(), closed.target.ring, loc);
  chow::PatchingProblem prob{gens, open, closed, top};
  IdealPresentation derived = chow::patching_relations(prob);
  auto expected = resolve_ring_ref(s, a.at("expected"), loc);
  IdealPresentation want = reparent(expected.relations, derived.ring);
  auto d1 = containment_witness(derived, want);
  if (d1)
    return {Status::Fail, "derived relation " + d1->first.str() + " is not in " + expected.name +
                              " (residue " + d1->second.str() + ")"};
  auto d2 = containment_witness(want, derived);
  if (d2)
    return {Status::Fail, "expected relation " + d2->first.str() +
                              " is not derivable (residue " + d2->second.str() + ")"};
  return {Status::Pass, ""};
}

Outcome run_map_valid(const Scenario& s, const Json& a, const std::string&) {
  const auto* nm = s.find_map(a.at("map").get<std::string>());
  bool expected = a.contains("expected") ? a.at("expected").get<bool>() : true;
  chow::MapValidity v = chow::validate_ringmap(nm->map, nm->source_relations);
  if (v.valid == expected) {
    if (!v.valid)
      return {Status::Pass, "relation " + v.offending->str() +
                                " maps outside the ideal (residue " + v.residue->str() +
                                "), as expected"};
    return {Status::Pass, ""};
  }
  if (!v.valid)
    return {Status::Fail,
            "relation " + v.offending->str() + " maps to residue " + v.residue->str()};
  return {Status::Fail, "map is valid but was expected not to be"};
}

Outcome run_nzd(const Scenario& s, const Json& a, const std::string& loc) {
  auto Rr = resolve_ring_ref(s, a.at("ring"), loc);
  Polynomial c = parse_in(a.at("class").get<std::string>(), Rr.ring, loc);
  bool expected = a.at("expected").get<bool>();
  bool got = chow::nonzerodivisor(Rr, c);
  if (got == expected) return {Status::Pass, ""};
  if (!got) {
    IdealPresentation quot = ideal_quotient_element(Rr.relations, c);
    auto w = containment_witness(quot, Rr.relations);
    std::string extra = w ? "; witness " + w->first.str() : "";
    return {Status::Fail, c.str() + " is a zero divisor in " + Rr.name + extra};
  }
  return {Status::Fail, c.str() + " is a non-zero-divisor in " + Rr.name + ", expected not"};
}

Outcome run_pushforward(const Scenario& s, const Json& a, const std::string& loc) {
  const auto& named = *s.find_operator(a.at("operator").get<std::string>());
  chow::validate_operator(named.op);
  const chow::ChowPresentation& into = std::holds_alternative<chow::SurjectivePullback>(named.op)
                                           ? std::get<chow::SurjectivePullback>(named.op).into
                                           : std::get<chow::QuadraticTransfer>(named.op).into;
  const Ring& up = std::holds_alternative<chow::SurjectivePullback>(named.op)
                       ? std::get<chow::SurjectivePullback>(named.op).pullback.target.ring
                       : std::get<chow::QuadraticTransfer>(named.op).pullback.target.ring;
  Polynomial input = parse_in(a.at("input").get<std::string>(), up, loc);
  Polynomial expected = parse_in(a.at("expected").get<std::string>(), into.ring, loc);
  Polynomial got = chow::pushforward_apply(named.op, input);
  Polynomial residue = normal_form(got - expected, groebner_basis(into.relations));
  if (residue.is_zero()) return {Status::Pass, ""};
  return {Status::Fail, "push(" + input.str() + ") = " + got.str() + ", differs from " +
                            expected.str() + " by residue " + residue.str()};
}

Outcome run_class_consistency(const Scenario& s, const Json& a, const std::string& loc) {
  const auto& cls = *s.find_class(a.at("class").get<std::string>());
  std::vector<std::pair<chow::RingMap, Polynomial>> rows;
  for (const auto& row : a.at("restrictions")) {
    const auto& nm = *s.find_map(row.at("map").get<std::string>());
    rows.emplace_back(nm.map,
                      parse_in(row.at("expected").get<std::string>(), nm.map.target.ring, loc));
  }
  chow::ConsistencyReport rep = chow::class_consistency(cls.value, rows);
  if (rep.all_pass) return {Status::Pass, ""};
  std::string w = "restriction mismatches:";
  for (const auto& r : rep.rows)
    if (!r.pass) w += " [" + r.label + "] residue " + r.residue.str() + ";";
  return {Status::Fail, w};
}

Outcome run_graded(const Scenario& s, const Json& a, const std::string& loc) {
  auto Rr = resolve_ring_ref(s, a.at("ring"), loc);
  std::string mismatches;
  for (const auto& comp : a.at("components")) {
    long d = comp.at("degree").get<long>();
    GradedComponent got = graded_component(Rr.relations, d);
    long want_free = comp.contains("free") ? comp.at("free").get<long>() : 0;
    std::vector<mpz_class> want_tors;
    if (comp.contains("torsion"))
      for (const auto& t : comp.at("torsion")) want_tors.emplace_back(t.get<long>());
    if (got.free_rank != want_free || got.torsion != want_tors) {
      mismatches += " d=" + std::to_string(d) + ": computed free " +
                    std::to_string(got.free_rank) + " torsion " + torsion_str(got.torsion) +
                    ", expected free " + std::to_string(want_free) + " torsion " +
                    torsion_str(want_tors) + ";";
    }
  }
  if (mismatches.empty()) return {Status::Pass, ""};
  return {Status::Fail, "graded component mismatch:" + mismatches};
}

Outcome run_identity(const Scenario& s, const Json& a, const std::string& loc) {
  auto Rr = resolve_ring_ref(s, a.at("ring"), loc);
  Polynomial L = resolve_expr(s, Rr.ring, a.at("left"), loc);
  Polynomial R = resolve_expr(s, Rr.ring, a.at("right"), loc);
  std::string mode = opt_str(a, "mode", "exact");
  Polynomial diff = L - R;
  if (diff.is_zero()) return {Status::Pass, ""};
  if (mode == "exact") return {Status::Fail, "sides differ by " + diff.str()};
  Polynomial residue = normal_form(diff, groebner_basis(Rr.relations));
  if (residue.is_zero())
    return {Status::Pass, "not an exact identity; difference " + diff.str() +
                              " lies in the relations of " + Rr.name};
  return {Status::Fail, "sides differ by " + diff.str() + " with residue " + residue.str() +
                            " modulo " + Rr.name};
}

Outcome run_containment_report(const Scenario& s, const Json& a, const std::string& loc) {
  std::string out;
  if (a.contains("left")) {
    auto L = resolve_ring_ref(s, a.at("left"), loc);
    auto R = resolve_ring_ref(s, a.at("right"), loc);
    IdealPresentation right = reparent(R.relations, L.ring);
    GroebnerBasis GL = groebner_basis(L.relations);
    GroebnerBasis GR = groebner_basis(right);
    auto summarize = [&](const IdealPresentation& what, const GroebnerBasis& against,
                         const std::string& dir) {
      std::vector<Polynomial> nf = normal_forms(what.generators, against);
      size_t in = 0;
      std::string bad_list;
      for (size_t i = 0; i < nf.size(); ++i) {
        if (nf[i].is_zero())
          ++in;
        else
          bad_list += "\n    " + what.generators[i].str() + " -> residue " + nf[i].str();
      }
      out += dir + ": " + std::to_string(in) + "/" + std::to_string(nf.size()) +
             " generators contained" + bad_list + "\n";
    };
    summarize(L.relations, GR, L.name + " in " + R.name);
    summarize(right, GL, R.name + " in " + L.name);
    long upto = a.contains("graded_upto") ? a.at("graded_upto").get<long>() : 5;
    for (long d = 0; d <= upto; ++d) {
      GradedComponent cl = graded_component(L.relations, d);
      GradedComponent cr = graded_component(right, d);
      bool agree = cl.free_rank == cr.free_rank && cl.torsion == cr.torsion;
      out += "degree " + std::to_string(d) + ": " + L.name + " free " +
             std::to_string(cl.free_rank) + " torsion " + torsion_str(cl.torsion) + " | " +
             R.name + " free " + std::to_string(cr.free_rank) + " torsion " +
             torsion_str(cr.torsion) + (agree ? " (agree)" : " (DISAGREE)") + "\n";
    }
  } else {
    auto Rr = resolve_ring_ref(s, a.at("ring"), loc);
    Polynomial value = resolve_expr(s, Rr.ring, a.at("value"), loc);
    GroebnerBasis G = groebner_basis(Rr.relations);
    out += "value = " + value.str() + "\n";
    for (const auto& [label, cand] : a.at("candidates").items()) {
      Polynomial c = parse_in(cand.get<std::string>(), Rr.ring, loc);
      Polynomial diff = value - c;
      if (diff.is_zero()) {
        out += label + ": exact match\n";
        continue;
      }
      Polynomial residue = normal_form(diff, G);
      if (residue.is_zero())
        out += label + ": matches modulo relations (exact difference " + diff.str() + ")\n";
      else
        out += label + ": differs, residue " + residue.str() + "\n";
    }
  }
  if (!out.empty() && out.back() == '\n') out.pop_back();
  return {Status::Report, out};
}

} // namespace

CheckResult run_check(const Scenario& s, const Scenario::Check& c) {
  CheckResult res;
  res.name = c.name;
  res.kind = c.kind;
  auto t0 = std::chrono::steady_clock::now();
  try {
    std::string loc = "check '" + c.name + "'";
    Outcome o{Status::Fail, "unreachable"};
    switch (c.kind) {
      case CheckKind::IdealEqual: o = run_ideal_equal(s, c.args, loc); break;
      case CheckKind::Member: o = run_member(s, c.args, loc, true); break;
      case CheckKind::NotMember: o = run_member(s, c.args, loc, false); break;
      case CheckKind::PatchingDerive: o = run_patching(s, c.args, loc); break;
      case CheckKind::MapValid: o = run_map_valid(s, c.args, loc); break;
      case CheckKind::Nzd: o = run_nzd(s, c.args, loc); break;
      case CheckKind::PushforwardEq: o = run_pushforward(s, c.args, loc); break;
      case CheckKind::ClassConsistency: o = run_class_consistency(s, c.args, loc); break;
      case CheckKind::GradedComponent: o = run_graded(s, c.args, loc); break;
      case CheckKind::IdentityEq: o = run_identity(s, c.args, loc); break;
      case CheckKind::ContainmentReport: o = run_containment_report(s, c.args, loc); break;
    }
    res.status = o.status;
    res.witness = o.witness;
  } catch (const Error& e) {
    res.status = Status::Fail;
    res.witness = e.what();
  } catch (const std::exception& e) {
    res.status = Status::Fail;
    res.witness = std::string("unexpected error: ") + e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  res.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return res;
}

bool glob_match(std::string_view pattern, std::string_view text) {
  if (pattern.empty()) return text.empty();
  if (pattern[0] == '*')
    return glob_match(pattern.substr(1), text) ||
           (!text.empty() && glob_match(pattern, text.substr(1)));
  if (text.empty()) return false;
  if (pattern[0] == '?' || pattern[0] == text[0])
    return glob_match(pattern.substr(1), text.substr(1));
  return false;
}

Report run_checks(const Scenario& s, const std::string& filter) {
  std::vector<const Scenario::Check*> selected;
  for (const auto& c : s.checks)
    if (glob_match(filter, c.name)) selected.push_back(&c);

  Report rep;
  rep.scenario = s.id;
  rep.version = M21_VERSION;
  rep.results.resize(selected.size());
#pragma omp parallel for schedule(dynamic) num_threads(par::max_threads()) \
    if (par::enabled() && selected.size() > 1)
  for (long i = 0; i < static_cast<long>(selected.size()); ++i)
    rep.results[static_cast<size_t>(i)] = run_check(s, *selected[static_cast<size_t>(i)]);

  for (const auto& r : rep.results) {
    if (r.status == Status::Pass)
      ++rep.passed;
    else if (r.status == Status::Fail)
      ++rep.failed;
    else
      ++rep.reports;
  }
  return rep;
}

} // namespace m21::suite
