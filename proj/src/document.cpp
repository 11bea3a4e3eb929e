#include "moorekit/document.hpp"

#include <fstream>
#include <sstream>

#include "moorekit/zoo.hpp"

namespace moorekit {

namespace {

const json& field(const json& j, const char* key, const std::string& ctx) {
  auto it = j.find(key);
  if (it == j.end())
    fail("DocumentInvalid", "missing field", {{"entry", ctx}, {"field", key}});
  return *it;
}

std::string as_string(const json& j, const std::string& ctx) {
  if (!j.is_string())
    fail("DocumentInvalid", "expected a string", {{"entry", ctx}, {"got", j}});
  return j.get<std::string>();
}

int as_int(const json& j, const std::string& ctx) {
  if (!j.is_number_integer())
    fail("DocumentInvalid", "expected an integer", {{"entry", ctx}, {"got", j}});
  return j.get<int>();
}

std::vector<Elt> as_elt_vector(const json& j, const std::string& ctx) {
  if (!j.is_array())
    fail("DocumentInvalid", "expected an array of element indices", {{"entry", ctx}});
  std::vector<Elt> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(as_int(v, ctx));
  return out;
}

std::vector<std::vector<Elt>> as_elt_table(const json& j, const std::string& ctx) {
  if (!j.is_array())
    fail("DocumentInvalid", "expected an array of rows", {{"entry", ctx}});
  std::vector<std::vector<Elt>> out;
  out.reserve(j.size());
  for (const auto& row : j) out.push_back(as_elt_vector(row, ctx));
  return out;
}

}  // namespace

TheoryId parse_theory_spec(const std::string& spec) {
  std::string s = spec;
  for (char& c : s)
    if (c == '_') c = '-';
  auto colon = s.find(':');
  if (colon != std::string::npos) {
    const std::string head = s.substr(0, colon), tail = s.substr(colon + 1);
    if (!tail.empty() && tail.find_first_not_of("0123456789") == std::string::npos) {
      int n = std::stoi(tail);
      if (head == "mu-ngeq") return TheoryId::mu_ngeq(n);
      if (head == "mu-geq") return TheoryId::mu_geq(n);
    }
  }
  fail("DocumentInvalid", "theory spec must be mu-ngeq:N or mu-geq:N", {{"spec", spec}});
}

// Resolves the raw sections with memoization; `building` guards against
// reference cycles (chains -> simplicial -> crossed -> chains is expressible
// in the grammar).
struct DocumentBuilder {
  const json& doc;
  Document& out;
  std::map<std::string, int> building;  // "section/name" -> 1 while in progress

  DocumentBuilder(const json& d, Document& o) : doc(d), out(o) {}

  struct Guard {
    DocumentBuilder& b;
    std::string key;
    Guard(DocumentBuilder& b_, const std::string& section, const std::string& name)
        : b(b_), key(section + "/" + name) {
      if (b.building.count(key))
        fail("CircularReference", "entries reference each other", {{"entry", key}});
      b.building[key] = 1;
    }
    ~Guard() { b.building.erase(key); }
  };

  const json& raw(const char* section, const std::string& name) {
    auto sec = doc.find(section);
    if (sec != doc.end()) {
      auto it = sec->find(name);
      if (it != sec->end()) return *it;
    }
    fail("UnknownName", "no entry with this name", {{"section", section}, {"name", name}});
  }

  const FiniteGroup& group(const std::string& name) {
    auto hit = out.groups_.find(name);
    if (hit != out.groups_.end()) return hit->second;
    Guard guard(*this, "groups", name);
    const json& spec = raw("groups", name);
    FiniteGroup g;
    if (spec.is_string()) {
      g = by_name(spec.get<std::string>()).with_label(name);
    } else if (spec.is_object()) {
      g = FiniteGroup::from_table(as_elt_table(field(spec, "table", name), name), name);
    } else {
      fail("DocumentInvalid", "group entry must be a stock name or a table", {{"entry", name}});
    }
    return out.groups_.emplace(name, std::move(g)).first->second;
  }

  // Hom in a known-endpoint position: homs-entry name, "zero"/"identity", or
  // an inline {"map": [..]}.
  GroupHom hom_spec(const json& spec, const FiniteGroup& src, const FiniteGroup& dst,
                    const std::string& ctx) {
    if (spec.is_string()) {
      const std::string s = spec.get<std::string>();
      if (s == "zero") return GroupHom::zero(src, dst);
      if (s == "identity") {
        if (!src.same_instance(dst))
          fail("DocumentInvalid", "identity needs equal endpoints", {{"entry", ctx}});
        return GroupHom::identity(src);
      }
      const GroupHom& h = hom(s);
      if (!h.source().same_instance(src) || !h.target().same_instance(dst))
        fail("InstanceMismatch", "named hom endpoints differ from the referencing entry",
             {{"entry", ctx}, {"hom", s}});
      return h;
    }
    if (spec.is_object())
      return GroupHom(src, dst, as_elt_vector(field(spec, "map", ctx), ctx));
    fail("DocumentInvalid", "hom position must be a name or {\"map\": [..]}", {{"entry", ctx}});
  }

  const GroupHom& hom(const std::string& name) {
    auto hit = out.homs_.find(name);
    if (hit != out.homs_.end()) return hit->second;
    Guard guard(*this, "homs", name);
    const json& spec = raw("homs", name);
    const FiniteGroup& src = group(as_string(field(spec, "from", name), name));
    const FiniteGroup& dst = group(as_string(field(spec, "to", name), name));
    GroupHom h(src, dst, as_elt_vector(field(spec, "map", name), name));
    return out.homs_.emplace(name, std::move(h)).first->second;
  }

  GroupAction action_spec(const json& spec, const FiniteGroup& actor, const FiniteGroup& space,
                          const GroupHom* delta, const std::string& ctx) {
    if (spec.is_string()) {
      const std::string s = spec.get<std::string>();
      if (s == "trivial") return GroupAction::trivial(actor, space);
      if (s == "conjugation") {
        if (delta == nullptr || !delta->is_injective())
          fail("DocumentInvalid", "conjugation action needs an injective delta",
               {{"entry", ctx}});
        // ^b a = the unique preimage of b delta(a) b^-1
        std::vector<Elt> pos(actor.order(), -1);
        for (Elt a = 0; a < space.order(); ++a) pos[(*delta)(a)] = a;
        std::vector<std::vector<Elt>> perms(actor.order(), std::vector<Elt>(space.order()));
        for (Elt b = 0; b < actor.order(); ++b)
          for (Elt a = 0; a < space.order(); ++a) {
            Elt t = actor.conj(b, (*delta)(a));
            if (pos[t] < 0)
              fail("DocumentInvalid", "conjugate leaves the image of delta",
                   {{"entry", ctx}, {"actor", b}, {"element", a}});
            perms[b][a] = pos[t];
          }
        return GroupAction(actor, space, std::move(perms));
      }
    }
    if (spec.is_object())
      return GroupAction(actor, space, as_elt_table(field(spec, "perms", ctx), ctx));
    fail("DocumentInvalid",
         "action must be \"trivial\", \"conjugation\", or {\"perms\": [..]}", {{"entry", ctx}});
  }

  const SimplicialGroup& simplicial(const std::string& name) {
    auto hit = out.simplicial_.find(name);
    if (hit != out.simplicial_.end()) return hit->second;
    Guard guard(*this, "simplicial", name);
    const json& spec = raw("simplicial", name);
    const std::string kind = as_string(field(spec, "kind", name), name);
    SimplicialGroup x;
    if (kind == "dis" || kind == "ind") {
      const FiniteGroup& g = group(as_string(field(spec, "group", name), name));
      int d = as_int(field(spec, "degree", name), name);
      x = (kind == "dis" ? dis(g, d) : ind(g, d)).with_label(name);
    } else if (kind == "eilenberg_maclane") {
      const FiniteGroup& g = group(as_string(field(spec, "group", name), name));
      int n = as_int(field(spec, "n", name), name);
      int d = as_int(field(spec, "degree", name), name);
      ChainComplex concentrated(n, {g}, {}, name);
      x = dold_kan_gamma(concentrated, d).with_label(name);
    } else if (kind == "nerve") {
      const CrossedEntry& e = crossed(as_string(field(spec, "crossed", name), name));
      if (!e.crossed_module)
        fail("DocumentInvalid", "nerve needs a crossed_module entry", {{"entry", name}});
      x = nerve_of_crossed_module(*e.crossed_module, as_int(field(spec, "degree", name), name))
              .with_label(name);
    } else if (kind == "tables") {
      const json& lraw = field(spec, "levels", name);
      if (!lraw.is_array())
        fail("DocumentInvalid", "levels must be an array of group names", {{"entry", name}});
      std::vector<FiniteGroup> levels;
      for (const auto& gname : lraw) levels.push_back(group(as_string(gname, name)));
      auto hom_rows = [&](const json& rows, bool faces) {
        if (!rows.is_array())
          fail("DocumentInvalid", "faces/degens must be arrays of hom rows", {{"entry", name}});
        std::vector<std::vector<GroupHom>> out_rows;
        for (size_t n = 0; n < rows.size(); ++n) {
          if (!rows[n].is_array())
            fail("DocumentInvalid", "faces/degens rows must be arrays", {{"entry", name}});
          std::vector<GroupHom> row;
          for (const auto& h : rows[n]) {
            const FiniteGroup& src = levels.at(faces ? n + 1 : n);
            const FiniteGroup& dst = levels.at(faces ? n : n + 1);
            row.push_back(hom_spec(h, src, dst, name));
          }
          out_rows.push_back(std::move(row));
        }
        return out_rows;
      };
      x = SimplicialGroup(levels, hom_rows(field(spec, "faces", name), true),
                          hom_rows(field(spec, "degens", name), false), std::nullopt, name);
    } else {
      fail("DocumentInvalid", "unknown simplicial kind", {{"entry", name}, {"kind", kind}});
    }
    return out.simplicial_.emplace(name, std::move(x)).first->second;
  }

  const ChainComplex& chain(const std::string& name) {
    auto hit = out.chains_.find(name);
    if (hit != out.chains_.end()) return hit->second;
    Guard guard(*this, "chains", name);
    const json& spec = raw("chains", name);
    ChainComplex c;
    if (spec.contains("kind") && as_string(spec["kind"], name) == "moore") {
      const SimplicialGroup& x = simplicial(as_string(field(spec, "simplicial", name), name));
      c = moore(x).chain.complex().with_label(name);
    } else {
      int lo = as_int(field(spec, "lo", name), name);
      const json& graw = field(spec, "groups", name);
      const json& draw = field(spec, "diffs", name);
      if (!graw.is_array() || !draw.is_array() || draw.size() + 1 != graw.size())
        fail("DocumentInvalid", "chain needs groups (k+1 names) and diffs (k homs)",
             {{"entry", name}});
      std::vector<FiniteGroup> groups;
      for (const auto& gname : graw) groups.push_back(group(as_string(gname, name)));
      std::vector<GroupHom> diffs;
      for (size_t i = 0; i < draw.size(); ++i)
        diffs.push_back(hom_spec(draw[i], groups.at(i + 1), groups.at(i), name));
      c = ChainComplex(lo, std::move(groups), std::move(diffs), name);
    }
    return out.chains_.emplace(name, std::move(c)).first->second;
  }

  const CrossedEntry& crossed(const std::string& name) {
    auto hit = out.crossed_.find(name);
    if (hit != out.crossed_.end()) return hit->second;
    Guard guard(*this, "crossed", name);
    const json& spec = raw("crossed", name);
    CrossedEntry e;
    e.kind = as_string(field(spec, "kind", name), name);
    if (e.kind == "crossed_module") {
      const FiniteGroup& a = group(as_string(field(spec, "a", name), name));
      const FiniteGroup& b = group(as_string(field(spec, "b", name), name));
      GroupHom delta = hom_spec(field(spec, "delta", name), a, b, name);
      GroupAction act = action_spec(field(spec, "action", name), b, a, &delta, name);
      e.crossed_module = CrossedModule(a, b, std::move(delta), std::move(act), name);
    } else if (e.kind == "reduced_two_crossed" || e.kind == "stable") {
      FiniteGroup l, m;
      GroupHom delta;
      std::vector<Elt> lifting;
      if (spec.contains("group")) {
        const FiniteGroup& g = group(as_string(spec["group"], name));
        l = m = g;
        delta = GroupHom::identity(g);
        lifting = commutator_lifting(g);
      } else {
        l = group(as_string(field(spec, "l", name), name));
        m = group(as_string(field(spec, "m", name), name));
        delta = hom_spec(field(spec, "delta", name), l, m, name);
        const json& lraw = field(spec, "lifting", name);
        if (lraw.is_string() && lraw.get<std::string>() == "commutator") {
          if (!l.same_instance(m))
            fail("DocumentInvalid", "commutator lifting needs l == m", {{"entry", name}});
          lifting = commutator_lifting(m);
        } else {
          lifting = as_elt_vector(lraw, name);
        }
      }
      if (e.kind == "stable")
        e.stable = StableCrossedModule(l, m, std::move(delta), std::move(lifting), name);
      else
        e.reduced = ReducedTwoCrossedModule(l, m, std::move(delta), std::move(lifting), name);
    } else if (e.kind == "two_crossed") {
      const FiniteGroup& l = group(as_string(field(spec, "l", name), name));
      const FiniteGroup& m = group(as_string(field(spec, "m", name), name));
      const FiniteGroup& n = group(as_string(field(spec, "n", name), name));
      GroupHom d2 = hom_spec(field(spec, "delta2", name), l, m, name);
      GroupHom d1 = hom_spec(field(spec, "delta1", name), m, n, name);
      GroupAction al = action_spec(field(spec, "action_on_l", name), n, l, nullptr, name);
      GroupAction am = action_spec(field(spec, "action_on_m", name), n, m, &d1, name);
      e.two_crossed = TwoCrossedModule(l, m, n, std::move(d2), std::move(d1), std::move(al),
                                       std::move(am),
                                       as_elt_vector(field(spec, "lifting", name), name), name);
    } else if (e.kind == "crossed_complex") {
      const ChainComplex& c = chain(as_string(field(spec, "chain", name), name));
      const json& araw = field(spec, "actions", name);
      if (!araw.is_array())
        fail("DocumentInvalid", "actions must be an array, one entry per degree >= 1",
             {{"entry", name}});
      std::vector<GroupAction> actions;
      for (size_t i = 0; i < araw.size(); ++i) {
        int degree = c.lo() + 1 + static_cast<int>(i);
        GroupHom d1 = c.diff(c.lo() + 1);
        actions.push_back(action_spec(araw[i], c.at(c.lo()), c.at(degree),
                                      degree == c.lo() + 1 ? &d1 : nullptr, name));
      }
      e.crossed_complex = CrossedComplex(c, std::move(actions), name);
    } else {
      fail("DocumentInvalid", "unknown crossed kind", {{"entry", name}, {"kind", e.kind}});
    }
    return out.crossed_.emplace(name, std::move(e)).first->second;
  }

  void theory(const std::string& name) {
    if (out.theories_.count(name)) return;
    out.theories_.emplace(name, parse_theory_spec(as_string(raw("theories", name), name)));
  }

  void corpus(const std::string& name) {
    if (out.corpora_.count(name)) return;
    const json& spec = raw("corpora", name);
    if (!spec.is_array())
      fail("DocumentInvalid", "corpus entry must be an array of chain names", {{"entry", name}});
    std::vector<ChainComplex> members;
    for (const auto& cname : spec) members.push_back(chain(as_string(cname, name)));
    out.corpora_.emplace(name, std::move(members));
  }

  void run() {
    static const char* known[] = {"groups", "homs",     "simplicial", "chains",
                                  "crossed", "theories", "corpora"};
    for (const auto& [section, entries] : doc.items()) {
      bool ok = false;
      for (const char* k : known) ok = ok || section == k;
      if (!ok) fail("DocumentInvalid", "unknown section", {{"section", section}});
      if (!entries.is_object())
        fail("DocumentInvalid", "section must be an object of named entries",
             {{"section", section}});
    }
    auto each = [&](const char* section, auto&& fn) {
      auto sec = doc.find(section);
      if (sec == doc.end()) return;
      for (auto it = sec->begin(); it != sec->end(); ++it) fn(it.key());
    };
    each("groups", [&](const std::string& n) { group(n); });
    each("homs", [&](const std::string& n) { hom(n); });
    each("simplicial", [&](const std::string& n) { simplicial(n); });
    each("chains", [&](const std::string& n) { chain(n); });
    each("crossed", [&](const std::string& n) { crossed(n); });
    each("theories", [&](const std::string& n) { theory(n); });
    each("corpora", [&](const std::string& n) { corpus(n); });
  }
};

Document Document::load(const json& doc, std::string origin) {
  if (!doc.is_object())
    fail("DocumentInvalid", "document root must be an object", {{"origin", origin}});
  Document d;
  DocumentBuilder builder(doc, d);
  builder.run();
  return d;
}

Document Document::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("FileNotFound", "cannot open document", {{"path", path}});
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    fail("ParseError", e.what(), {{"path", path}});
  }
  return load(doc, path);
}

namespace {

template <typename Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& section,
                                        const std::string& name) {
  auto it = m.find(name);
  if (it == m.end())
    fail("UnknownName", "no entry with this name", {{"section", section}, {"name", name}});
  return it->second;
}

}  // namespace

const FiniteGroup& Document::group(const std::string& name) const {
  return lookup(groups_, "groups", name);
}
const GroupHom& Document::hom(const std::string& name) const {
  return lookup(homs_, "homs", name);
}
const SimplicialGroup& Document::simplicial(const std::string& name) const {
  return lookup(simplicial_, "simplicial", name);
}
const ChainComplex& Document::chain(const std::string& name) const {
  return lookup(chains_, "chains", name);
}
const CrossedEntry& Document::crossed(const std::string& name) const {
  return lookup(crossed_, "crossed", name);
}
TheoryId Document::theory(const std::string& name) const {
  return lookup(theories_, "theories", name);
}
const std::vector<ChainComplex>& Document::corpus(const std::string& name) const {
  return lookup(corpora_, "corpora", name);
}

bool Document::has(const std::string& section, const std::string& name) const {
  if (section == "groups") return groups_.count(name) != 0;
  if (section == "homs") return homs_.count(name) != 0;
  if (section == "simplicial") return simplicial_.count(name) != 0;
  if (section == "chains") return chains_.count(name) != 0;
  if (section == "crossed") return crossed_.count(name) != 0;
  if (section == "theories") return theories_.count(name) != 0;
  if (section == "corpora") return corpora_.count(name) != 0;
  fail("DocumentInvalid", "unknown section", {{"section", section}});
}

std::vector<std::string> Document::names(const std::string& section) const {
  std::vector<std::string> out;
  auto collect = [&](const auto& m) {
    for (const auto& [k, v] : m) out.push_back(k);
  };
  if (section == "groups") collect(groups_);
  else if (section == "homs") collect(homs_);
  else if (section == "simplicial") collect(simplicial_);
  else if (section == "chains") collect(chains_);
  else if (section == "crossed") collect(crossed_);
  else if (section == "theories") collect(theories_);
  else if (section == "corpora") collect(corpora_);
  else fail("DocumentInvalid", "unknown section", {{"section", section}});
  return out;  // map iteration is already sorted
}

namespace {

json orders_json(const ChainComplex& c) {
  json out = json::object();
  for (int k = c.lo(); k <= c.hi(); ++k)
    if (!c.trivial_at(k)) out[std::to_string(k)] = c.at(k).order();
  return out;
}

std::vector<std::vector<Elt>> rebuild_table(const FiniteGroup& g) {
  std::vector<std::vector<Elt>> t(g.order(), std::vector<Elt>(g.order()));
  for (Elt a = 0; a < g.order(); ++a)
    for (Elt b = 0; b < g.order(); ++b) t[a][b] = g.mul(a, b);
  return t;
}

}  // namespace

json Document::validate_object(const std::string& name) const {
  for (const char* s : {"groups", "homs", "simplicial", "chains", "crossed", "theories",
                        "corpora"})
    if (has(s, name)) return validate_object(s, name);
  fail("UnknownName", "no entry with this name in any section", {{"name", name}});
}

json Document::validate_object(const std::string& section, const std::string& name) const {
  auto missing = [&] {
    fail("UnknownName", "no entry with this name in the section",
         {{"section", section}, {"name", name}});
  };
  if (section == "groups") {
    if (!groups_.count(name)) missing();
    const FiniteGroup& g = groups_.at(name);
    FiniteGroup::from_table(rebuild_table(g), g.label());  // re-certifies the axioms
    return {{"object", name}, {"kind", "group"}, {"ok", true},
            {"order", g.order()}, {"abelian", g.is_abelian()}};
  }
  if (section == "homs") {
    if (!homs_.count(name)) missing();
    const GroupHom& h = homs_.at(name);
    auto bad = GroupHom::find_violation(h.source(), h.target(), h.map());
    return {{"object", name},
            {"kind", "hom"},
            {"ok", !bad.has_value()},
            {"injective", h.is_injective()},
            {"surjective", h.is_surjective()},
            {"kernel_order", kernel(h).order()}};
  }
  if (section == "simplicial") {
    if (!simplicial_.count(name)) missing();
    const SimplicialGroup& x = simplicial_.at(name);
    std::vector<FiniteGroup> levels;
    std::vector<std::vector<GroupHom>> faces, degens;
    for (int n = 0; n <= x.degree(); ++n) {
      levels.push_back(x.level(n));
      if (n >= 1) {
        faces.emplace_back();
        for (int i = 0; i <= n; ++i) faces.back().push_back(x.face(n, i));
      }
      if (n < x.degree()) {
        degens.emplace_back();
        for (int i = 0; i <= n; ++i) degens.back().push_back(x.degen(n, i));
      }
    }
    auto bad = SimplicialGroup::find_violation(levels, faces, degens);
    json orders = json::array();
    for (const auto& g : levels) orders.push_back(g.order());
    return {{"object", name},
            {"kind", "simplicial"},
            {"ok", !bad.has_value()},
            {"degree", x.degree()},
            {"level_orders", orders},
            {"t_complex", is_group_T_complex(x).is_t_complex}};
  }
  if (section == "chains") {
    if (!chains_.count(name)) missing();
    const ChainComplex& c = chains_.at(name);
    auto bad = properness_violation(c);
    json report{{"object", name}, {"kind", "chain"},  {"ok", true},
                {"lo", c.lo()},   {"hi", c.hi()},     {"orders", orders_json(c)},
                {"proper", !bad.has_value()}};
    if (bad) report["properness_witness"] = *bad;
    return report;
  }
  if (section == "crossed") {
    if (!crossed_.count(name)) missing();
    const CrossedEntry& e = crossed_.at(name);
    AxiomReport report;
    json extra = json::object();
    if (e.crossed_module) {
      const CrossedModule& x = *e.crossed_module;
      report = CrossedModule::validate(x.a(), x.b(), x.delta(), x.action());
      extra["classes"] = json(classify_crossed_module(x).names());
    } else if (e.two_crossed) {
      const TwoCrossedModule& x = *e.two_crossed;
      report = TwoCrossedModule::validate(x.l(), x.m(), x.n(), x.delta2(), x.delta1(),
                                          x.action_on_l(), x.action_on_m(), x.peiffer());
    } else if (e.reduced) {
      const ReducedTwoCrossedModule& x = *e.reduced;
      report = ReducedTwoCrossedModule::validate(x.l(), x.m(), x.delta(), x.peiffer());
    } else if (e.stable) {
      const StableCrossedModule& x = *e.stable;
      report = StableCrossedModule::validate(x.l(), x.m(), x.delta(), x.peiffer());
    } else {
      const CrossedComplex& x = *e.crossed_complex;
      std::vector<GroupAction> actions;
      for (int i = 1; i <= x.hi(); ++i) actions.push_back(x.action(i));
      report = CrossedComplex::validate(x.chain(), actions);
    }
    json out{{"object", name}, {"kind", e.kind}, {"ok", report.all_ok()},
             {"axioms", report.to_json()}};
    for (const auto& [k, v] : extra.items()) out[k] = v;
    return out;
  }
  if (theories_.count(name))
    return {{"object", name}, {"kind", "theory"}, {"ok", true},
            {"theory", theories_.at(name).name()}};
  if (section == "corpora") {
    if (!corpora_.count(name)) missing();
    json members = json::array();
    for (const auto& c : corpora_.at(name)) members.push_back(c.label());
    return {{"object", name}, {"kind", "corpus"}, {"ok", true}, {"members", members}};
  }
  fail("UnknownName", "no such section",
       {{"section", section},
        {"sections", {"groups", "homs", "simplicial", "chains", "crossed", "theories",
                      "corpora"}}});
}

}  // namespace moorekit
