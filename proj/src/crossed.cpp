#include "moorekit/crossed.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace moorekit {

// ---- AxiomReport -----------------------------------------------------------

bool AxiomReport::all_ok() const {
  for (const auto& e : entries)
    if (!e.ok) return false;
  return true;
}

const AxiomReport::Entry* AxiomReport::find(const std::string& axiom) const {
  for (const auto& e : entries)
    if (e.axiom == axiom) return &e;
  return nullptr;
}

std::string AxiomReport::first_failure() const {
  for (const auto& e : entries)
    if (!e.ok) return e.axiom;
  return "";
}

json AxiomReport::to_json() const {
  json axioms = json::array();
  for (const auto& e : entries) {
    json row{{"axiom", e.axiom}, {"ok", e.ok}};
    if (!e.ok) row["witness"] = e.witness;
    axioms.push_back(std::move(row));
  }
  return json{{"ok", all_ok()}, {"axioms", axioms}};
}

namespace {

void push(AxiomReport& r, std::string axiom, bool ok, json witness = json::object()) {
  r.entries.push_back({std::move(axiom), ok, std::move(witness)});
}

// Shape problems of a hom against its expected endpoints, safe on raw or even
// default-constructed handles.
std::optional<json> hom_data_problem(const FiniteGroup& src, const FiniteGroup& dst,
                                     const GroupHom& f, const char* name) {
  if (!f.source().same_instance(src) || !f.target().same_instance(dst))
    return json{{"map", name}, {"problem", "endpoint instances"}};
  if (static_cast<int>(f.map().size()) != src.order())
    return json{{"map", name}, {"problem", "map size"}, {"size", f.map().size()}};
  for (Elt a = 0; a < src.order(); ++a)
    if (f(a) < 0 || f(a) >= dst.order())
      return json{{"map", name}, {"problem", "value out of range"}, {"at", a}};
  return std::nullopt;
}

std::optional<json> action_data_problem(const FiniteGroup& actor, const FiniteGroup& space,
                                        const GroupAction& act, const char* name) {
  if (!act.actor().same_instance(actor) || !act.space().same_instance(space))
    return json{{"action", name}, {"problem", "endpoint instances"}};
  if (static_cast<int>(act.perms().size()) != actor.order())
    return json{{"action", name}, {"problem", "permutation count"}};
  for (const auto& p : act.perms()) {
    if (static_cast<int>(p.size()) != space.order())
      return json{{"action", name}, {"problem", "permutation size"}};
    for (Elt v : p)
      if (v < 0 || v >= space.order())
        return json{{"action", name}, {"problem", "value out of range"}};
  }
  return std::nullopt;
}

AxiomReport xmod_report(const FiniteGroup& a, const FiniteGroup& b, const GroupHom& delta,
                        const GroupAction& action, bool with_peiffer) {
  AxiomReport r;
  json problems = json::array();
  if (auto p = hom_data_problem(a, b, delta, "delta")) problems.push_back(*p);
  if (auto p = action_data_problem(b, a, action, "action")) problems.push_back(*p);
  push(r, "data", problems.empty(), problems.empty() ? json::object() : json{{"problems", problems}});
  if (!problems.empty()) return r;

  auto dv = GroupHom::find_violation(a, b, delta.map());
  push(r, "delta_hom", !dv, dv ? json{{"pair", {dv->first, dv->second}}} : json::object());
  auto av = GroupAction::find_violation(b, a, action.perms());
  push(r, "action", !av, av ? *av : json::object());

  bool ok = true;
  json w = json::object();
  for (Elt b0 = 0; ok && b0 < b.order(); ++b0)
    for (Elt a0 = 0; a0 < a.order(); ++a0) {
      const Elt lhs = delta(action.apply(b0, a0));
      const Elt rhs = b.conj(b0, delta(a0));
      if (lhs != rhs) {
        ok = false;
        w = {{"b", b0}, {"a", a0}, {"lhs", lhs}, {"rhs", rhs}};
        break;
      }
    }
  push(r, "equivariance", ok, std::move(w));

  if (with_peiffer) {
    ok = true;
    w = json::object();
    for (Elt a0 = 0; ok && a0 < a.order(); ++a0)
      for (Elt a1 = 0; a1 < a.order(); ++a1) {
        const Elt lhs = action.apply(delta(a0), a1);
        const Elt rhs = a.conj(a0, a1);
        if (lhs != rhs) {
          ok = false;
          w = {{"a0", a0}, {"a1", a1}, {"lhs", lhs}, {"rhs", rhs}};
          break;
        }
      }
    push(r, "peiffer", ok, std::move(w));
  }
  return r;
}

}  // namespace

// ---- CrossedModule ---------------------------------------------------------

CrossedModule::CrossedModule(FiniteGroup a, FiniteGroup b, GroupHom delta, GroupAction action,
                             std::string label)
    : a_(std::move(a)), b_(std::move(b)), delta_(std::move(delta)), action_(std::move(action)),
      label_(std::move(label)) {
  AxiomReport r = validate(a_, b_, delta_, action_);
  if (!r.all_ok())
    fail("CrossedModuleViolation", "crossed module axiom " + r.first_failure() + " fails",
         r.to_json());
}

CrossedModule CrossedModule::unchecked(FiniteGroup a, FiniteGroup b, GroupHom delta,
                                       GroupAction action, std::string label) {
  CrossedModule x;
  x.a_ = std::move(a);
  x.b_ = std::move(b);
  x.delta_ = std::move(delta);
  x.action_ = std::move(action);
  x.label_ = std::move(label);
  return x;
}

AxiomReport CrossedModule::validate(const FiniteGroup& a, const FiniteGroup& b,
                                    const GroupHom& delta, const GroupAction& action) {
  return xmod_report(a, b, delta, action, true);
}

AxiomReport CrossedModule::validate_precrossed(const FiniteGroup& a, const FiniteGroup& b,
                                               const GroupHom& delta, const GroupAction& action) {
  return xmod_report(a, b, delta, action, false);
}

CrossedModule CrossedModule::with_label(std::string label) const {
  CrossedModule x = *this;
  x.label_ = std::move(label);
  return x;
}

CrossedModule CrossedModule::discrete(const FiniteGroup& g, std::string label) {
  FiniteGroup zero = trivial_group();
  if (label.empty()) label = "dis(" + (g.label().empty() ? "G" : g.label()) + ")";
  GroupHom delta = GroupHom::zero(zero, g);
  GroupAction action = GroupAction::trivial(g, zero);
  return CrossedModule(std::move(zero), g, std::move(delta), std::move(action), std::move(label));
}

ChainComplex CrossedModule::underlying_chain() const {
  return ChainComplex(0, {b_, a_}, {delta_}, label_);
}

bool CrossedModule::same_instances(const CrossedModule& o) const {
  return a_.same_instance(o.a_) && b_.same_instance(o.b_);
}

// ---- CrossedModuleMap ------------------------------------------------------

CrossedModuleMap::CrossedModuleMap(CrossedModule from_, CrossedModule to_, GroupHom fa_,
                                   GroupHom fb_)
    : from(std::move(from_)), to(std::move(to_)), fa(std::move(fa_)), fb(std::move(fb_)) {
  if (auto v = find_violation(from, to, fa, fb))
    fail("XModMapInvalid", "not a morphism of crossed modules", *v);
}

std::optional<json> CrossedModuleMap::find_violation(const CrossedModule& from,
                                                     const CrossedModule& to, const GroupHom& fa,
                                                     const GroupHom& fb) {
  if (!fa.source().same_instance(from.a()) || !fa.target().same_instance(to.a()) ||
      !fb.source().same_instance(from.b()) || !fb.target().same_instance(to.b()))
    return json{{"kind", "endpoints"}};
  for (Elt a = 0; a < from.a().order(); ++a)
    if (fb(from.delta()(a)) != to.delta()(fa(a)))
      return json{{"kind", "square"}, {"a", a}, {"lhs", fb(from.delta()(a))},
                  {"rhs", to.delta()(fa(a))}};
  for (Elt b = 0; b < from.b().order(); ++b)
    for (Elt a = 0; a < from.a().order(); ++a) {
      const Elt lhs = fa(from.action().apply(b, a));
      const Elt rhs = to.action().apply(fb(b), fa(a));
      if (lhs != rhs) return json{{"kind", "action"}, {"b", b}, {"a", a}, {"lhs", lhs}, {"rhs", rhs}};
    }
  return std::nullopt;
}

// ---- TwoCrossedModule ------------------------------------------------------

TwoCrossedModule::TwoCrossedModule(FiniteGroup l, FiniteGroup m, FiniteGroup n, GroupHom delta2,
                                   GroupHom delta1, GroupAction action_on_l,
                                   GroupAction action_on_m, std::vector<Elt> peiffer,
                                   std::string label)
    : l_(std::move(l)), m_(std::move(m)), n_(std::move(n)), delta2_(std::move(delta2)),
      delta1_(std::move(delta1)), act_l_(std::move(action_on_l)), act_m_(std::move(action_on_m)),
      pf_(std::move(peiffer)), label_(std::move(label)) {
  AxiomReport r = validate(l_, m_, n_, delta2_, delta1_, act_l_, act_m_, pf_);
  if (!r.all_ok())
    fail("TwoCrossedViolation", "2-crossed module axiom " + r.first_failure() + " fails",
         r.to_json());
}

TwoCrossedModule TwoCrossedModule::unchecked(FiniteGroup l, FiniteGroup m, FiniteGroup n,
                                             GroupHom delta2, GroupHom delta1,
                                             GroupAction action_on_l, GroupAction action_on_m,
                                             std::vector<Elt> peiffer, std::string label) {
  TwoCrossedModule t;
  t.l_ = std::move(l);
  t.m_ = std::move(m);
  t.n_ = std::move(n);
  t.delta2_ = std::move(delta2);
  t.delta1_ = std::move(delta1);
  t.act_l_ = std::move(action_on_l);
  t.act_m_ = std::move(action_on_m);
  t.pf_ = std::move(peiffer);
  t.label_ = std::move(label);
  return t;
}

AxiomReport TwoCrossedModule::validate(const FiniteGroup& l, const FiniteGroup& m,
                                       const FiniteGroup& n, const GroupHom& delta2,
                                       const GroupHom& delta1, const GroupAction& action_on_l,
                                       const GroupAction& action_on_m,
                                       const std::vector<Elt>& peiffer) {
  const double lo = l.order(), mo = m.order(), no = n.order();
  const double cost = mo * mo * mo + no * mo * mo + mo * lo * lo + mo * mo * lo;
  if (cost > search_budget())
    fail("BudgetExceeded", "2-crossed validation cost exceeds the budget", {{"cost", cost}});

  AxiomReport r;
  json problems = json::array();
  if (auto p = hom_data_problem(l, m, delta2, "delta2")) problems.push_back(*p);
  if (auto p = hom_data_problem(m, n, delta1, "delta1")) problems.push_back(*p);
  if (auto p = action_data_problem(n, l, action_on_l, "action_on_l")) problems.push_back(*p);
  if (auto p = action_data_problem(n, m, action_on_m, "action_on_m")) problems.push_back(*p);
  if (static_cast<long long>(peiffer.size()) != static_cast<long long>(m.order()) * m.order())
    problems.push_back(json{{"table", "peiffer"}, {"problem", "size"}, {"size", peiffer.size()}});
  else
    for (size_t i = 0; i < peiffer.size(); ++i)
      if (peiffer[i] < 0 || peiffer[i] >= l.order()) {
        problems.push_back(json{{"table", "peiffer"}, {"problem", "value out of range"}, {"at", i}});
        break;
      }
  push(r, "data", problems.empty(), problems.empty() ? json::object() : json{{"problems", problems}});
  if (!problems.empty()) return r;

  auto pf = [&](Elt m0, Elt m1) { return peiffer[static_cast<size_t>(m0) * m.order() + m1]; };

  auto d2v = GroupHom::find_violation(l, m, delta2.map());
  push(r, "delta2_hom", !d2v, d2v ? json{{"pair", {d2v->first, d2v->second}}} : json::object());
  auto d1v = GroupHom::find_violation(m, n, delta1.map());
  push(r, "delta1_hom", !d1v, d1v ? json{{"pair", {d1v->first, d1v->second}}} : json::object());
  auto alv = GroupAction::find_violation(n, l, action_on_l.perms());
  push(r, "action_on_l", !alv, alv ? *alv : json::object());
  auto amv = GroupAction::find_violation(n, m, action_on_m.perms());
  push(r, "action_on_m", !amv, amv ? *amv : json::object());

  bool ok = true;
  json w = json::object();
  for (Elt x = 0; x < l.order(); ++x)
    if (delta1(delta2(x)) != FiniteGroup::id) {
      ok = false;
      w = {{"l", x}, {"value", delta1(delta2(x))}};
      break;
    }
  push(r, "composite", ok, std::move(w));

  ok = true;
  w = json::object();
  for (Elt n0 = 0; ok && n0 < n.order(); ++n0) {
    for (Elt x = 0; x < l.order(); ++x)
      if (delta2(action_on_l.apply(n0, x)) != action_on_m.apply(n0, delta2(x))) {
        ok = false;
        w = {{"map", "delta2"}, {"n", n0}, {"l", x}};
        break;
      }
    for (Elt m0 = 0; ok && m0 < m.order(); ++m0)
      if (delta1(action_on_m.apply(n0, m0)) != n.conj(n0, delta1(m0))) {
        ok = false;
        w = {{"map", "delta1"}, {"n", n0}, {"m", m0}};
      }
  }
  push(r, "equivariance", ok, std::move(w));

  // 2XM1: delta2{m0,m1} = m0 m1 m0^-1 ^{delta1(m0)}(m1^-1)
  ok = true;
  w = json::object();
  for (Elt m0 = 0; ok && m0 < m.order(); ++m0)
    for (Elt m1 = 0; m1 < m.order(); ++m1) {
      const Elt lhs = delta2(pf(m0, m1));
      const Elt rhs = m.mul(m.conj(m0, m1), action_on_m.apply(delta1(m0), m.inv(m1)));
      if (lhs != rhs) {
        ok = false;
        w = {{"m0", m0}, {"m1", m1}, {"lhs", lhs}, {"rhs", rhs}};
        break;
      }
    }
  push(r, "2XM1", ok, std::move(w));

  // 2XM2: {delta2(l0), delta2(l1)} = [l0, l1]
  ok = true;
  w = json::object();
  for (Elt l0 = 0; ok && l0 < l.order(); ++l0)
    for (Elt l1 = 0; l1 < l.order(); ++l1)
      if (pf(delta2(l0), delta2(l1)) != l.comm(l0, l1)) {
        ok = false;
        w = {{"l0", l0}, {"l1", l1}};
        break;
      }
  push(r, "2XM2", ok, std::move(w));

  // 2XM3: {delta2(l), m}{m, delta2(l)} = l ^{delta1(m)}(l^-1)
  ok = true;
  w = json::object();
  for (Elt l0 = 0; ok && l0 < l.order(); ++l0)
    for (Elt m0 = 0; m0 < m.order(); ++m0) {
      const Elt lhs = l.mul(pf(delta2(l0), m0), pf(m0, delta2(l0)));
      const Elt rhs = l.mul(l0, action_on_l.apply(delta1(m0), l.inv(l0)));
      if (lhs != rhs) {
        ok = false;
        w = {{"l", l0}, {"m", m0}, {"lhs", lhs}, {"rhs", rhs}};
        break;
      }
    }
  push(r, "2XM3", ok, std::move(w));

  // 2XM4: {m0, m1 m2} = {m0,m1}{m0,m2}{delta2({m0,m2})^-1, ^{delta1(m0)}m1}
  ok = true;
  w = json::object();
  for (Elt m0 = 0; ok && m0 < m.order(); ++m0)
    for (Elt m1 = 0; ok && m1 < m.order(); ++m1)
      for (Elt m2 = 0; m2 < m.order(); ++m2) {
        const Elt lhs = pf(m0, m.mul(m1, m2));
        const Elt tail = pf(m.inv(delta2(pf(m0, m2))), action_on_m.apply(delta1(m0), m1));
        const Elt rhs = l.mul(l.mul(pf(m0, m1), pf(m0, m2)), tail);
        if (lhs != rhs) {
          ok = false;
          w = {{"m0", m0}, {"m1", m1}, {"m2", m2}, {"lhs", lhs}, {"rhs", rhs}};
          break;
        }
      }
  push(r, "2XM4", ok, std::move(w));

  // 2XM5: {m0 m1, m2} = {m0, m1 m2 m1^-1} ^{delta1(m0)}{m1, m2}
  ok = true;
  w = json::object();
  for (Elt m0 = 0; ok && m0 < m.order(); ++m0)
    for (Elt m1 = 0; ok && m1 < m.order(); ++m1)
      for (Elt m2 = 0; m2 < m.order(); ++m2) {
        const Elt lhs = pf(m.mul(m0, m1), m2);
        const Elt rhs = l.mul(pf(m0, m.conj(m1, m2)), action_on_l.apply(delta1(m0), pf(m1, m2)));
        if (lhs != rhs) {
          ok = false;
          w = {{"m0", m0}, {"m1", m1}, {"m2", m2}, {"lhs", lhs}, {"rhs", rhs}};
          break;
        }
      }
  push(r, "2XM5", ok, std::move(w));

  // 2XM6: ^n{m0, m1} = {^n m0, ^n m1}
  ok = true;
  w = json::object();
  for (Elt n0 = 0; ok && n0 < n.order(); ++n0)
    for (Elt m0 = 0; ok && m0 < m.order(); ++m0)
      for (Elt m1 = 0; m1 < m.order(); ++m1)
        if (action_on_l.apply(n0, pf(m0, m1)) !=
            pf(action_on_m.apply(n0, m0), action_on_m.apply(n0, m1))) {
          ok = false;
          w = {{"n", n0}, {"m0", m0}, {"m1", m1}};
          break;
        }
  push(r, "2XM6", ok, std::move(w));

  // ^m(l) = l {delta2(l)^-1, m} must be an action of M on L making delta2 a
  // crossed module.
  std::vector<std::vector<Elt>> perms(m.order(), std::vector<Elt>(l.order()));
  for (Elt m0 = 0; m0 < m.order(); ++m0)
    for (Elt l0 = 0; l0 < l.order(); ++l0)
      perms[m0][l0] = l.mul(l0, pf(m.inv(delta2(l0)), m0));
  AxiomReport sub =
      CrossedModule::validate(l, m, delta2, GroupAction::unchecked(m, l, std::move(perms)));
  push(r, "derived_action", sub.all_ok(), sub.all_ok() ? json::object() : sub.to_json());
  return r;
}

GroupAction TwoCrossedModule::derived_action() const {
  std::vector<std::vector<Elt>> perms(m_.order(), std::vector<Elt>(l_.order()));
  for (Elt m0 = 0; m0 < m_.order(); ++m0)
    for (Elt l0 = 0; l0 < l_.order(); ++l0)
      perms[m0][l0] = l_.mul(l0, pf(m_.inv(delta2_(l0)), m0));
  return GroupAction::unchecked(m_, l_, std::move(perms));
}

TwoCrossedModule TwoCrossedModule::from_crossed_module(const CrossedModule& xm,
                                                       std::string label) {
  FiniteGroup zero = trivial_group();
  if (label.empty()) label = "2xm(" + xm.label() + ")";
  const size_t sq = static_cast<size_t>(xm.a().order()) * xm.a().order();
  return TwoCrossedModule(zero, xm.a(), xm.b(), GroupHom::zero(zero, xm.a()), xm.delta(),
                          GroupAction::trivial(xm.b(), zero), xm.action(),
                          std::vector<Elt>(sq, FiniteGroup::id), std::move(label));
}

// ---- ReducedTwoCrossedModule -------------------------------------------------

namespace {

// Shared data screen for the two lifting-only variants.
bool lifting_data_entry(AxiomReport& r, const FiniteGroup& l, const FiniteGroup& m,
                        const GroupHom& delta, const std::vector<Elt>& peiffer) {
  json problems = json::array();
  if (auto p = hom_data_problem(l, m, delta, "delta")) problems.push_back(*p);
  if (static_cast<long long>(peiffer.size()) != static_cast<long long>(m.order()) * m.order())
    problems.push_back(json{{"table", "peiffer"}, {"problem", "size"}, {"size", peiffer.size()}});
  else
    for (size_t i = 0; i < peiffer.size(); ++i)
      if (peiffer[i] < 0 || peiffer[i] >= l.order()) {
        problems.push_back(json{{"table", "peiffer"}, {"problem", "value out of range"}, {"at", i}});
        break;
      }
  push(r, "data", problems.empty(), problems.empty() ? json::object() : json{{"problems", problems}});
  return problems.empty();
}

void lifting_budget_guard(const FiniteGroup& l, const FiniteGroup& m) {
  const double lo = l.order(), mo = m.order();
  const double cost = mo * mo * mo + mo * lo * lo + mo * mo * lo;
  if (cost > search_budget())
    fail("BudgetExceeded", "lifting validation cost exceeds the budget", {{"cost", cost}});
}

void lifting_crossed_entry(AxiomReport& r, const FiniteGroup& l, const FiniteGroup& m,
                           const GroupHom& delta, const std::vector<Elt>& peiffer) {
  std::vector<std::vector<Elt>> perms(m.order(), std::vector<Elt>(l.order()));
  for (Elt m0 = 0; m0 < m.order(); ++m0)
    for (Elt l0 = 0; l0 < l.order(); ++l0)
      perms[m0][l0] =
          l.mul(l0, peiffer[static_cast<size_t>(m.inv(delta(l0))) * m.order() + m0]);
  AxiomReport sub =
      CrossedModule::validate(l, m, delta, GroupAction::unchecked(m, l, std::move(perms)));
  push(r, "underlying_crossed", sub.all_ok(), sub.all_ok() ? json::object() : sub.to_json());
}

}  // namespace

ReducedTwoCrossedModule::ReducedTwoCrossedModule(FiniteGroup l, FiniteGroup m, GroupHom delta,
                                                 std::vector<Elt> peiffer, std::string label)
    : l_(std::move(l)), m_(std::move(m)), delta_(std::move(delta)), pf_(std::move(peiffer)),
      label_(std::move(label)) {
  AxiomReport r = validate(l_, m_, delta_, pf_);
  if (!r.all_ok())
    fail("ReducedTwoCrossedViolation",
         "reduced 2-crossed axiom " + r.first_failure() + " fails", r.to_json());
}

AxiomReport ReducedTwoCrossedModule::validate(const FiniteGroup& l, const FiniteGroup& m,
                                              const GroupHom& delta,
                                              const std::vector<Elt>& peiffer) {
  lifting_budget_guard(l, m);
  AxiomReport r;
  if (!lifting_data_entry(r, l, m, delta, peiffer)) return r;
  auto pf = [&](Elt m0, Elt m1) { return peiffer[static_cast<size_t>(m0) * m.order() + m1]; };

  auto dv = GroupHom::find_violation(l, m, delta.map());
  push(r, "delta_hom", !dv, dv ? json{{"pair", {dv->first, dv->second}}} : json::object());

  // R1: delta{m0,m1} = [m0,m1]
  bool ok = true;
  json w = json::object();
  for (Elt m0 = 0; ok && m0 < m.order(); ++m0)
    for (Elt m1 = 0; m1 < m.order(); ++m1)
      if (delta(pf(m0, m1)) != m.comm(m0, m1)) {
        ok = false;
        w = {{"m0", m0}, {"m1", m1}};
        break;
      }
  push(r, "R1", ok, std::move(w));

  // R2: {delta(l0), delta(l1)} = [l0,l1]
  ok = true;
  w = json::object();
  for (Elt l0 = 0; ok && l0 < l.order(); ++l0)
    for (Elt l1 = 0; l1 < l.order(); ++l1)
      if (pf(delta(l0), delta(l1)) != l.comm(l0, l1)) {
        ok = false;
        w = {{"l0", l0}, {"l1", l1}};
        break;
      }
  push(r, "R2", ok, std::move(w));

  // R3: {delta(l), m}{m, delta(l)} = 1
  ok = true;
  w = json::object();
  for (Elt l0 = 0; ok && l0 < l.order(); ++l0)
    for (Elt m0 = 0; m0 < m.order(); ++m0)
      if (l.mul(pf(delta(l0), m0), pf(m0, delta(l0))) != FiniteGroup::id) {
        ok = false;
        w = {{"l", l0}, {"m", m0}};
        break;
      }
  push(r, "R3", ok, std::move(w));

  // R4: {m0, m1 m2} = {m0,m1}{m0,m2}{[m2,m0], m1}
  ok = true;
  w = json::object();
  for (Elt m0 = 0; ok && m0 < m.order(); ++m0)
    for (Elt m1 = 0; ok && m1 < m.order(); ++m1)
      for (Elt m2 = 0; m2 < m.order(); ++m2) {
        const Elt lhs = pf(m0, m.mul(m1, m2));
        const Elt rhs = l.mul(l.mul(pf(m0, m1), pf(m0, m2)), pf(m.comm(m2, m0), m1));
        if (lhs != rhs) {
          ok = false;
          w = {{"m0", m0}, {"m1", m1}, {"m2", m2}, {"lhs", lhs}, {"rhs", rhs}};
          break;
        }
      }
  push(r, "R4", ok, std::move(w));

  // R5: {m0 m1, m2} = {m0, m1 m2 m1^-1}{m1, m2}
  ok = true;
  w = json::object();
  for (Elt m0 = 0; ok && m0 < m.order(); ++m0)
    for (Elt m1 = 0; ok && m1 < m.order(); ++m1)
      for (Elt m2 = 0; m2 < m.order(); ++m2) {
        const Elt lhs = pf(m.mul(m0, m1), m2);
        const Elt rhs = l.mul(pf(m0, m.conj(m1, m2)), pf(m1, m2));
        if (lhs != rhs) {
          ok = false;
          w = {{"m0", m0}, {"m1", m1}, {"m2", m2}, {"lhs", lhs}, {"rhs", rhs}};
          break;
        }
      }
  push(r, "R5", ok, std::move(w));

  lifting_crossed_entry(r, l, m, delta, peiffer);
  return r;
}

GroupAction ReducedTwoCrossedModule::induced_action() const {
  std::vector<std::vector<Elt>> perms(m_.order(), std::vector<Elt>(l_.order()));
  for (Elt m0 = 0; m0 < m_.order(); ++m0)
    for (Elt l0 = 0; l0 < l_.order(); ++l0)
      perms[m0][l0] = l_.mul(l0, pf(m_.inv(delta_(l0)), m0));
  return GroupAction::unchecked(m_, l_, std::move(perms));
}

CrossedModule ReducedTwoCrossedModule::underlying_crossed_module() const {
  return CrossedModule::unchecked(l_, m_, delta_, induced_action(), label_);
}

// ---- StableCrossedModule -----------------------------------------------------

StableCrossedModule::StableCrossedModule(FiniteGroup l, FiniteGroup m, GroupHom delta,
                                         std::vector<Elt> peiffer, std::string label)
    : l_(std::move(l)), m_(std::move(m)), delta_(std::move(delta)), pf_(std::move(peiffer)),
      label_(std::move(label)) {
  AxiomReport r = validate(l_, m_, delta_, pf_);
  if (!r.all_ok())
    fail("StableCrossedViolation", "stable crossed axiom " + r.first_failure() + " fails",
         r.to_json());
}

AxiomReport StableCrossedModule::validate(const FiniteGroup& l, const FiniteGroup& m,
                                          const GroupHom& delta,
                                          const std::vector<Elt>& peiffer) {
  lifting_budget_guard(l, m);
  AxiomReport r;
  if (!lifting_data_entry(r, l, m, delta, peiffer)) return r;
  auto pf = [&](Elt m0, Elt m1) { return peiffer[static_cast<size_t>(m0) * m.order() + m1]; };

  auto dv = GroupHom::find_violation(l, m, delta.map());
  push(r, "delta_hom", !dv, dv ? json{{"pair", {dv->first, dv->second}}} : json::object());

  // S1: delta{m0,m1} = [m0,m1]
  bool ok = true;
  json w = json::object();
  for (Elt m0 = 0; ok && m0 < m.order(); ++m0)
    for (Elt m1 = 0; m1 < m.order(); ++m1)
      if (delta(pf(m0, m1)) != m.comm(m0, m1)) {
        ok = false;
        w = {{"m0", m0}, {"m1", m1}};
        break;
      }
  push(r, "S1", ok, std::move(w));

  // S2: {delta(l0), delta(l1)} = [l0,l1]
  ok = true;
  w = json::object();
  for (Elt l0 = 0; ok && l0 < l.order(); ++l0)
    for (Elt l1 = 0; l1 < l.order(); ++l1)
      if (pf(delta(l0), delta(l1)) != l.comm(l0, l1)) {
        ok = false;
        w = {{"l0", l0}, {"l1", l1}};
        break;
      }
  push(r, "S2", ok, std::move(w));

  // S3: {m1,m0} = {m0,m1}^-1
  ok = true;
  w = json::object();
  for (Elt m0 = 0; ok && m0 < m.order(); ++m0)
    for (Elt m1 = 0; m1 < m.order(); ++m1)
      if (pf(m1, m0) != l.inv(pf(m0, m1))) {
        ok = false;
        w = {{"m0", m0}, {"m1", m1}};
        break;
      }
  push(r, "S3", ok, std::move(w));

  // S4: {m0 m1, m2} = {m0 m1 m0^-1, m0 m2 m0^-1}{m0, m2}
  ok = true;
  w = json::object();
  for (Elt m0 = 0; ok && m0 < m.order(); ++m0)
    for (Elt m1 = 0; ok && m1 < m.order(); ++m1)
      for (Elt m2 = 0; m2 < m.order(); ++m2) {
        const Elt lhs = pf(m.mul(m0, m1), m2);
        const Elt rhs = l.mul(pf(m.conj(m0, m1), m.conj(m0, m2)), pf(m0, m2));
        if (lhs != rhs) {
          ok = false;
          w = {{"m0", m0}, {"m1", m1}, {"m2", m2}, {"lhs", lhs}, {"rhs", rhs}};
          break;
        }
      }
  push(r, "S4", ok, std::move(w));

  lifting_crossed_entry(r, l, m, delta, peiffer);
  return r;
}

GroupAction StableCrossedModule::induced_action() const {
  std::vector<std::vector<Elt>> perms(m_.order(), std::vector<Elt>(l_.order()));
  for (Elt m0 = 0; m0 < m_.order(); ++m0)
    for (Elt l0 = 0; l0 < l_.order(); ++l0)
      perms[m0][l0] = l_.mul(l0, pf(m_.inv(delta_(l0)), m0));
  return GroupAction::unchecked(m_, l_, std::move(perms));
}

CrossedModule StableCrossedModule::underlying_crossed_module() const {
  return CrossedModule::unchecked(l_, m_, delta_, induced_action(), label_);
}

// ---- CrossedComplex ----------------------------------------------------------

CrossedComplex::CrossedComplex(ChainComplex chain, std::vector<GroupAction> actions,
                               std::string label)
    : chain_(std::move(chain)), actions_(std::move(actions)), label_(std::move(label)) {
  AxiomReport r = validate(chain_, actions_);
  if (!r.all_ok())
    fail("CrossedComplexViolation", "crossed complex axiom " + r.first_failure() + " fails",
         r.to_json());
  proper_.emplace(chain_);
}

CrossedComplex CrossedComplex::unchecked(ChainComplex chain, std::vector<GroupAction> actions,
                                         std::string label) {
  CrossedComplex c;
  c.chain_ = std::move(chain);
  c.proper_.emplace(c.chain_);
  c.actions_ = std::move(actions);
  c.label_ = std::move(label);
  return c;
}

AxiomReport CrossedComplex::validate(const ChainComplex& chain,
                                     const std::vector<GroupAction>& actions) {
  AxiomReport r;
  json problems = json::array();
  if (chain.lo() != 0)
    problems.push_back(json{{"problem", "window must start at degree 0"}, {"lo", chain.lo()}});
  if (static_cast<int>(actions.size()) != std::max(chain.hi(), 0))
    problems.push_back(
        json{{"problem", "one action required per degree 1..hi"}, {"count", actions.size()}});
  if (problems.empty())
    for (int i = 1; i <= chain.hi(); ++i)
      if (auto p = action_data_problem(chain.at(0), chain.at(i), actions[i - 1], "action"))
        problems.push_back(json{{"degree", i}, {"problem", *p}});
  push(r, "data", problems.empty(), problems.empty() ? json::object() : json{{"problems", problems}});
  if (!problems.empty()) return r;

  auto pv = properness_violation(chain);
  push(r, "proper", !pv, pv ? *pv : json::object());

  bool ok = true;
  json w = json::object();
  for (int i = 2; i <= chain.hi(); ++i)
    if (!chain.at(i).is_abelian()) {
      ok = false;
      w = {{"degree", i}};
      break;
    }
  push(r, "abelian", ok, std::move(w));

  ok = true;
  w = json::object();
  for (int i = 2; ok && i <= chain.hi(); ++i) {
    auto av = GroupAction::find_violation(chain.at(0), chain.at(i), actions[i - 1].perms());
    if (av) {
      ok = false;
      w = {{"degree", i}, {"witness", *av}};
    }
  }
  push(r, "actions", ok, std::move(w));

  ok = true;
  w = json::object();
  for (int i = 2; ok && i <= chain.hi(); ++i) {
    const GroupHom d = chain.diff(i);
    for (Elt g = 0; ok && g < chain.at(0).order(); ++g)
      for (Elt x = 0; x < chain.at(i).order(); ++x)
        if (d(actions[i - 1].apply(g, x)) != actions[i - 2].apply(g, d(x))) {
          ok = false;
          w = {{"degree", i}, {"m0", g}, {"x", x}};
          break;
        }
  }
  push(r, "equivariance", ok, std::move(w));

  ok = true;
  w = json::object();
  if (chain.hi() >= 2) {
    const GroupHom d1 = chain.diff(1);
    for (Elt m1 = 0; ok && m1 < chain.at(1).order(); ++m1)
      for (int i = 2; ok && i <= chain.hi(); ++i)
        for (Elt x = 0; x < chain.at(i).order(); ++x)
          if (actions[i - 1].apply(d1(m1), x) != x) {
            ok = false;
            w = {{"degree", i}, {"m1", m1}, {"x", x}};
            break;
          }
  }
  push(r, "delta1_image_trivial", ok, std::move(w));

  if (chain.hi() >= 1) {
    AxiomReport sub = CrossedModule::validate(chain.at(1), chain.at(0), chain.diff(1), actions[0]);
    push(r, "bottom_crossed_module", sub.all_ok(), sub.all_ok() ? json::object() : sub.to_json());
  } else {
    push(r, "bottom_crossed_module", true);
  }
  return r;
}

const GroupAction& CrossedComplex::action(int i) const {
  if (i < 1 || i > hi())
    fail("OrderViolation", "no action at that degree", {{"degree", i}, {"hi", hi()}});
  return actions_[i - 1];
}

CrossedModule CrossedComplex::bottom() const {
  if (hi() < 1) return CrossedModule::discrete(chain_.at(0));
  return CrossedModule::unchecked(chain_.at(1), chain_.at(0), chain_.diff(1), actions_[0],
                                  label_.empty() ? "" : label_ + ".bottom");
}

// ---- stock constructions -----------------------------------------------------

CrossedModule identity_crossed_module(const FiniteGroup& g) {
  const std::string name = g.label().empty() ? "G" : g.label();
  return CrossedModule(g, g, GroupHom::identity(g), GroupAction::conjugation(g),
                       "id(" + name + ")");
}

CrossedModule inclusion_crossed_module(const Subgroup& n, std::string label) {
  const FiniteGroup& g = n.parent();
  if (!n.is_normal())
    for (Elt t = 0; t < g.order(); ++t)
      for (Elt a : n.elements())
        if (!n.contains(g.conj(t, a)))
          fail("NotNormal", "inclusion requires a normal subgroup", {{"g", t}, {"a", a}});
  Subgroup::AsGroup ag = n.as_group();
  std::vector<std::vector<Elt>> perms(g.order(), std::vector<Elt>(n.order()));
  for (Elt t = 0; t < g.order(); ++t)
    for (int i = 0; i < n.order(); ++i)
      perms[t][static_cast<size_t>(i)] = ag.index_in_sub[g.conj(t, n.elements()[i])];
  if (label.empty())
    label = "incl(" + std::to_string(n.order()) + " in " +
            (g.label().empty() ? "G" : g.label()) + ")";
  return CrossedModule(ag.group, g, ag.embed, GroupAction(g, ag.group, std::move(perms)),
                       std::move(label));
}

CrossedModule central_quotient_crossed_module(const FiniteGroup& g, const Subgroup& z,
                                              std::string label) {
  if (!z.parent().same_instance(g))
    fail("OrderViolation", "subgroup belongs to a different group", {{"label", g.label()}});
  Subgroup zg = center(g);
  for (Elt a : z.elements())
    if (!zg.contains(a)) fail("NotCentral", "subgroup is not central", {{"element", a}});
  const std::string name = g.label().empty() ? "G" : g.label();
  Quotient q = quotient(g, z, name + "/Z");
  std::vector<std::vector<Elt>> perms(q.group.order(), std::vector<Elt>(g.order()));
  for (Elt b = 0; b < q.group.order(); ++b)
    for (Elt a = 0; a < g.order(); ++a) perms[b][a] = g.conj(q.rep[b], a);
  if (label.empty()) label = "cext(" + name + ")";
  return CrossedModule(g, q.group, q.project, GroupAction(q.group, g, std::move(perms)),
                       std::move(label));
}

std::vector<Elt> commutator_lifting(const FiniteGroup& g) {
  std::vector<Elt> table(static_cast<size_t>(g.order()) * g.order());
  for (Elt a = 0; a < g.order(); ++a)
    for (Elt b = 0; b < g.order(); ++b)
      table[static_cast<size_t>(a) * g.order() + b] = g.comm(a, b);
  return table;
}

ReducedTwoCrossedModule commutator_reduced(const FiniteGroup& g) {
  const std::string name = g.label().empty() ? "G" : g.label();
  return ReducedTwoCrossedModule(g, g, GroupHom::identity(g), commutator_lifting(g),
                                 "red(" + name + ")");
}

StableCrossedModule commutator_stable(const FiniteGroup& g) {
  const std::string name = g.label().empty() ? "G" : g.label();
  return StableCrossedModule(g, g, GroupHom::identity(g), commutator_lifting(g),
                             "st(" + name + ")");
}

// ---- nerve / extraction ------------------------------------------------------

SimplicialGroup nerve_of_crossed_module(const CrossedModule& xm, int degree) {
  if (degree < 0)
    fail("OrderViolation", "nerve degree must be nonnegative", {{"degree", degree}});
  const FiniteGroup& A = xm.a();
  const FiniteGroup& B = xm.b();
  const GroupHom& delta = xm.delta();
  const GroupAction& act = xm.action();
  const long long na = A.order(), nb = B.order();
  const std::string name = xm.label().empty() ? "xm" : xm.label();

  std::vector<long long> order_at(degree + 1);
  order_at[0] = nb;
  for (int n = 1; n <= degree; ++n) {
    order_at[n] = order_at[n - 1] * na;
    if (static_cast<double>(order_at[n]) * static_cast<double>(order_at[n]) > search_budget())
      fail("BudgetExceeded", "nerve level exceeds the table budget",
           {{"degree", n}, {"order", order_at[n]}});
  }

  auto decode = [&](int n, Elt e, std::vector<Elt>& a, Elt& b) {
    b = static_cast<Elt>(e % nb);
    long long rest = e / nb;
    a.assign(n, 0);
    for (int i = n - 1; i >= 0; --i) {
      a[i] = static_cast<Elt>(rest % na);
      rest /= na;
    }
  };
  auto encode = [&](const std::vector<Elt>& a, Elt b) {
    long long e = 0;
    for (Elt ai : a) e = e * na + ai;
    return static_cast<Elt>(e * nb + b);
  };

  std::vector<FiniteGroup> levels;
  levels.push_back(B);
  for (int n = 1; n <= degree; ++n) {
    const int total = static_cast<int>(order_at[n]);
    std::vector<Elt> table(static_cast<size_t>(total) * total);
    std::vector<Elt> ax, ay, c(n);
    Elt bx = 0, by = 0;
    for (Elt xe = 0; xe < total; ++xe) {
      decode(n, xe, ax, bx);
      for (Elt ye = 0; ye < total; ++ye) {
        decode(n, ye, ay, by);
        Elt prefix = FiniteGroup::id;  // a_{i-1} ... a_1
        for (int i = 0; i < n; ++i) {
          const Elt w = B.mul(delta(prefix), bx);
          c[i] = A.mul(ax[i], act.apply(w, ay[i]));
          prefix = A.mul(ax[i], prefix);
        }
        table[static_cast<size_t>(xe) * total + ye] = encode(c, B.mul(bx, by));
      }
    }
    levels.push_back(FiniteGroup::unchecked(total, std::move(table),
                                            "nv" + std::to_string(n) + "(" + name + ")"));
  }

  std::vector<std::vector<GroupHom>> faces, degens;
  for (int n = 1; n <= degree; ++n) {
    const int total = static_cast<int>(order_at[n]);
    std::vector<GroupHom> row;
    std::vector<Elt> a, out(n - 1);
    Elt b = 0;
    for (int i = 0; i <= n; ++i) {
      std::vector<Elt> map(total);
      for (Elt e = 0; e < total; ++e) {
        decode(n, e, a, b);
        Elt nb2 = b;
        if (i == 0) {
          for (int t = 1; t < n; ++t) out[t - 1] = a[t];
          nb2 = B.mul(delta(a[0]), b);
        } else if (i == n) {
          for (int t = 0; t + 1 < n; ++t) out[t] = a[t];
        } else {
          for (int t = 0; t + 1 < i; ++t) out[t] = a[t];
          out[i - 1] = A.mul(a[i], a[i - 1]);
          for (int t = i + 1; t < n; ++t) out[t - 1] = a[t];
        }
        map[e] = encode(out, nb2);
      }
      row.push_back(GroupHom::unchecked(levels[n], levels[n - 1], std::move(map)));
    }
    faces.push_back(std::move(row));
  }
  for (int n = 0; n < degree; ++n) {
    const int total = static_cast<int>(order_at[n]);
    std::vector<GroupHom> row;
    std::vector<Elt> a, out(n + 1);
    Elt b = 0;
    for (int j = 0; j <= n; ++j) {
      std::vector<Elt> map(total);
      for (Elt e = 0; e < total; ++e) {
        decode(n, e, a, b);
        for (int t = 0; t < j; ++t) out[t] = a[t];
        out[j] = FiniteGroup::id;
        for (int t = j; t < n; ++t) out[t + 1] = a[t];
        map[e] = encode(out, b);
      }
      row.push_back(GroupHom::unchecked(levels[n], levels[n + 1], std::move(map)));
    }
    degens.push_back(std::move(row));
  }

  return SimplicialGroup(std::move(levels), std::move(faces), std::move(degens), std::nullopt,
                         "nerve(" + name + ")@" + std::to_string(degree));
}

CrossedModule extract_crossed_module(const SimplicialGroup& x) {
  MooreComplex mc = moore(x);
  const ChainComplex& ch = mc.chain.complex();
  for (int k = 2; k <= x.degree(); ++k)
    if (!ch.at(k).is_trivial())
      fail("NotTruncatedAt1", "normalized complex is nontrivial above degree 1",
           {{"degree", k}, {"order", ch.at(k).order()}});
  const std::string label = "xmod(" + (x.label().empty() ? "X" : x.label()) + ")";
  if (x.degree() == 0) return CrossedModule::discrete(ch.at(0), label);

  const FiniteGroup& A = ch.at(1);
  const FiniteGroup& B = ch.at(0);
  const GroupHom& e1 = mc.embed[1];
  const GroupHom& e0 = mc.embed[0];
  const FiniteGroup& x1 = x.level(1);
  const GroupHom& s0 = x.degen(0, 0);
  const auto& members = mc.n_in_level[1].elements();
  auto member_index = [&](Elt t) {
    auto it = std::lower_bound(members.begin(), members.end(), t);
    if (it == members.end() || *it != t)
      fail("IdentityViolation", "conjugation by a degenerate element leaves N_1",
           {{"element", t}});
    return static_cast<Elt>(it - members.begin());
  };
  std::vector<std::vector<Elt>> perms(B.order(), std::vector<Elt>(A.order()));
  for (Elt b = 0; b < B.order(); ++b) {
    const Elt sb = s0(e0(b));
    for (Elt a = 0; a < A.order(); ++a) perms[b][a] = member_index(x1.conj(sb, e1(a)));
  }
  GroupAction action(B, A, std::move(perms));
  return CrossedModule(A, B, ch.diff(1), std::move(action), label);
}

// ---- classification ----------------------------------------------------------

std::vector<std::string> CrossedModuleClasses::names() const {
  std::vector<std::string> out;
  if (ab) out.push_back("Ab");
  if (norm) out.push_back("Norm");
  if (cext) out.push_back("CExt");
  if (dis) out.push_back("Dis");
  if (mod) out.push_back("Mod");
  return out;
}

json CrossedModuleClasses::to_json() const { return json{{"classes", names()}}; }

CrossedModuleClasses classify_crossed_module(const CrossedModule& xm) {
  CrossedModuleClasses c;
  c.ab = xm.b().is_trivial() && xm.a().is_abelian();
  bool conj_action = true;
  for (Elt b = 0; conj_action && b < xm.b().order(); ++b)
    for (Elt a = 0; a < xm.a().order(); ++a)
      if (xm.delta()(xm.action().apply(b, a)) != xm.b().conj(b, xm.delta()(a))) {
        conj_action = false;
        break;
      }
  c.norm = xm.delta().is_injective() && image(xm.delta()).is_normal() && conj_action;
  c.cext = is_central_extension(xm.delta());
  c.dis = xm.a().is_trivial();
  c.mod = xm.delta().is_zero();
  return c;
}

std::vector<CrossedModuleMap> enumerate_xmod_maps(const CrossedModule& x,
                                                  const CrossedModule& y) {
  std::vector<CrossedModuleMap> out;
  const auto fas = enumerate_homs(x.a(), y.a());
  const auto fbs = enumerate_homs(x.b(), y.b());
  for (const auto& fb : fbs)
    for (const auto& fa : fas)
      if (!CrossedModuleMap::find_violation(x, y, fa, fb)) out.emplace_back(x, y, fa, fb);
  return out;
}

std::optional<CrossedModuleMap> find_xmod_isomorphism(const CrossedModule& x,
                                                      const CrossedModule& y) {
  if (x.a().order() != y.a().order() || x.b().order() != y.b().order()) return std::nullopt;
  const auto fas = enumerate_homs(x.a(), y.a());
  for (const auto& fb : enumerate_homs(x.b(), y.b())) {
    if (!fb.is_bijective()) continue;
    for (const auto& fa : fas) {
      if (!fa.is_bijective()) continue;
      if (!CrossedModuleMap::find_violation(x, y, fa, fb))
        return CrossedModuleMap(x, y, fa, fb);
    }
  }
  return std::nullopt;
}

// ---- torsion sequences ---------------------------------------------------------

json XModCtf::describe() const {
  json out{{"counit_injective", counit.injective()}, {"in_e", in_e}};
  if (!in_e) out["not_in_e"] = not_in_e;
  if (e_sequence) out["sequence"] = e_sequence->describe();
  return out;
}

XModCtf xmod_ctf_sequences(const CrossedModule& xm) {
  CrossedModule disb = CrossedModule::discrete(xm.b());
  CrossedModuleMap counit(disb, xm, GroupHom::zero(disb.a(), xm.a()),
                          GroupHom::identity(xm.b()));

  bool in_e = true;
  json witness = json::object();
  for (Elt b = 0; in_e && b < xm.b().order(); ++b)
    for (Elt a = 0; a < xm.a().order(); ++a)
      if (xm.action().apply(b, a) != a) {
        in_e = false;
        witness = {{"b", b}, {"a", a}};
        break;
      }

  std::optional<ChainSES> seq;
  if (in_e) {
    // Trivial action plus Peiffer forces A abelian, so the quotient lands in
    // Ab; the checked constructor is the proof.
    FiniteGroup one = trivial_group();
    CrossedModule quo_xm(xm.a(), one, GroupHom::zero(xm.a(), one),
                         GroupAction::trivial(one, xm.a()),
                         "ab(" + (xm.a().label().empty() ? "A" : xm.a().label()) + ")");
    ChainComplex mid = xm.underlying_chain();
    ChainComplex subc = disb.underlying_chain();
    ChainComplex quoc = quo_xm.underlying_chain();
    ChainMap iota(subc, mid,
                  {{0, GroupHom::identity(xm.b())}, {1, GroupHom::zero(subc.at(1), mid.at(1))}});
    ChainMap pi(mid, quoc,
                {{0, GroupHom::zero(mid.at(0), quoc.at(0))}, {1, GroupHom::identity(xm.a())}});
    seq.emplace(subc, mid, quoc, iota, pi);
    // The projection is a morphism of crossed modules exactly inside E.
    CrossedModuleMap(xm, quo_xm, GroupHom::identity(xm.a()),
                     GroupHom::zero(xm.b(), quo_xm.b()));
  }
  return XModCtf{std::move(counit), in_e, std::move(witness), std::move(seq)};
}

ChainSES mod_e_torsion(const CrossedModule& xm) {
  if (!xm.delta().is_zero()) {
    Elt a = 0;
    while (xm.delta()(a) == FiniteGroup::id) ++a;
    fail("NotAModule", "differential is nonzero", {{"a", a}, {"delta", xm.delta()(a)}});
  }
  FiniteGroup t1 = trivial_group(), t2 = trivial_group();
  ChainComplex mid = xm.underlying_chain();
  ChainComplex subc(0, {t1, xm.a()}, {GroupHom::zero(xm.a(), t1)},
                    "ab(" + (xm.a().label().empty() ? "A" : xm.a().label()) + ")");
  ChainComplex quoc(0, {xm.b(), t2}, {GroupHom::zero(t2, xm.b())},
                    "dis(" + (xm.b().label().empty() ? "B" : xm.b().label()) + ")");
  ChainMap iota(subc, mid,
                {{1, GroupHom::identity(xm.a())}, {0, GroupHom::zero(t1, xm.b())}});
  ChainMap pi(mid, quoc,
              {{1, GroupHom::zero(xm.a(), t2)}, {0, GroupHom::identity(xm.b())}});
  return ChainSES(std::move(subc), std::move(mid), std::move(quoc), std::move(iota),
                  std::move(pi));
}

std::optional<json> crossed_complex_map_violation(const CrossedComplex& from,
                                                  const CrossedComplex& to, const ChainMap& f) {
  if (!f.from().same_instances(from.chain()) || !f.to().same_instances(to.chain()))
    fail("OrderViolation", "chain map endpoints do not match the crossed complexes",
         {{"from", from.label()}, {"to", to.label()}});
  const GroupHom f0 = f.comp(0);
  for (int i = 1; i <= from.hi(); ++i) {
    const GroupHom fi = f.comp(i);
    const bool live = i <= to.hi();
    for (Elt g = 0; g < from.chain().at(0).order(); ++g)
      for (Elt t = 0; t < from.chain().at(i).order(); ++t) {
        const Elt lhs = fi(from.action(i).apply(g, t));
        const Elt rhs = live ? to.action(i).apply(f0(g), fi(t)) : fi(t);
        if (lhs != rhs)
          return json{{"degree", i}, {"m0", g}, {"x", t}, {"lhs", lhs}, {"rhs", rhs}};
      }
  }
  return std::nullopt;
}

json CrsETorsion::describe() const {
  json out{{"counit_injective", ctf_counit.injective_everywhere()},
           {"in_e", in_e},
           {"delta1_central_extension", delta1_central_extension}};
  if (!in_e) out["not_in_e"] = not_in_e;
  if (sequence) out["sequence"] = sequence->describe();
  return out;
}

CrsETorsion crs_e_torsion(const CrossedComplex& c, int n) {
  if (n < 2)
    fail("OrderViolation", "the crossed-complex torsion level must be at least 2", {{"n", n}});
  const ChainComplex& ch = c.chain();

  ChainComplex subch = tr(ch, n - 1);
  std::vector<GroupAction> sub_actions;
  for (int i = 1; i <= subch.hi(); ++i) sub_actions.push_back(c.action(i));
  CrossedComplex sub(subch, std::move(sub_actions), subch.label());

  std::map<int, GroupHom> legs;
  for (int k = 0; k <= subch.hi(); ++k) legs[k] = GroupHom::identity(ch.at(k));
  ChainMap counit(subch, ch, std::move(legs));
  if (auto v = crossed_complex_map_violation(sub, c, counit))
    fail("Internal", "coreflection counit must preserve actions", *v);

  bool in_e = true;
  json witness = json::object();
  for (int i = n; in_e && i <= ch.hi(); ++i) {
    const GroupAction& act = c.action(i);
    for (Elt g = 0; in_e && g < ch.at(0).order(); ++g)
      for (Elt t = 0; t < ch.at(i).order(); ++t)
        if (act.apply(g, t) != t) {
          in_e = false;
          witness = {{"degree", i}, {"m0", g}, {"x", t}};
          break;
        }
  }
  const bool ce = is_central_extension(ch.diff(1));
  if (ce && !in_e)
    fail("Internal", "a surjective bottom differential must force trivial high actions", witness);

  std::optional<ChainSES> seq;
  if (in_e) {
    ChainComplex quoch = sk_prime(tr_prime(ch, n), 0);
    std::map<int, GroupHom> pis;
    for (int k = 0; k <= ch.hi(); ++k)
      pis[k] = k >= n ? GroupHom::identity(ch.at(k)) : GroupHom::zero(ch.at(k), quoch.at(k));
    ChainMap pi(ch, quoch, std::move(pis));
    seq.emplace(subch, ch, quoch, counit, pi);
    std::vector<GroupAction> qacts;
    for (int i = 1; i <= quoch.hi(); ++i)
      qacts.push_back(GroupAction::trivial(quoch.at(0), quoch.at(i)));
    CrossedComplex quo(quoch, std::move(qacts), quoch.label());
    if (auto v = crossed_complex_map_violation(c, quo, pi))
      fail("Internal", "the truncation projection must preserve actions inside E", *v);
  }
  return CrsETorsion{std::move(sub), std::move(counit), in_e, std::move(witness), std::move(seq),
                     ce};
}

}  // namespace moorekit
