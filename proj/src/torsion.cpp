#include "moorekit/torsion.hpp"

#include <algorithm>
#include <numeric>

#include "moorekit/common.hpp"

namespace moorekit {
namespace {

// Corpus indices in deterministic report order: by label, ties by position.
std::vector<size_t> by_label(const std::vector<ChainComplex>& corpus) {
  std::vector<size_t> idx(corpus.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return corpus[a].label() < corpus[b].label();
  });
  return idx;
}

bool chain_maps_equal(const ChainMap& a, const ChainMap& b) {
  for (int k = a.from().lo(); k <= a.from().hi(); ++k)
    if (a.comp(k).map() != b.comp(k).map()) return false;
  return true;
}

// u with u ∘ e = alpha, for degreewise-surjective e. Well-definedness needs
// ker(e) <= ker(alpha) in every degree; violations are invariant breaches in
// every caller, hence hard failures.
ChainMap hom_through_epi(const ChainMap& e, const ChainMap& alpha) {
  const ChainComplex& q = e.to();
  std::map<int, GroupHom> comps;
  for (int k = q.lo(); k <= q.hi(); ++k) {
    GroupHom ek = e.comp(k), ak = alpha.comp(k);
    std::vector<Elt> val(q.at(k).order(), -1);
    for (Elt x = 0; x < ek.source().order(); ++x) {
      Elt z = ek(x);
      if (val[z] < 0)
        val[z] = ak(x);
      else if (val[z] != ak(x))
        fail("Internal", "map does not descend along the quotient",
             {{"degree", k}, {"witness", x}});
    }
    for (Elt z = 0; z < q.at(k).order(); ++z)
      if (val[z] < 0)
        fail("Internal", "quotient leg is not surjective", {{"degree", k}, {"element", z}});
    comps.emplace(k, GroupHom(q.at(k), alpha.to().at(k), std::move(val)));
  }
  ChainMap u(q, alpha.to(), std::move(comps));
  if (!chain_maps_equal(e.then(u), alpha))
    fail("Internal", "epi factorization does not recover the map", {});
  return u;
}

// u with m ∘ u = alpha, for degreewise-injective m. Needs im(alpha) inside
// im(m) in every degree; again a hard invariant in every caller.
ChainMap hom_through_mono(const ChainMap& m, const ChainMap& alpha) {
  const ChainComplex& s = m.from();
  const ChainComplex& x = alpha.from();
  std::map<int, GroupHom> comps;
  for (int k = x.lo(); k <= x.hi(); ++k) {
    GroupHom mk = m.comp(k), ak = alpha.comp(k);
    std::map<Elt, Elt> pos;
    for (Elt a = 0; a < mk.source().order(); ++a) pos.emplace(mk(a), a);
    std::vector<Elt> val(x.at(k).order());
    for (Elt e = 0; e < x.at(k).order(); ++e) {
      auto it = pos.find(ak(e));
      if (it == pos.end())
        fail("Internal", "image escapes the subobject", {{"degree", k}, {"witness", e}});
      val[e] = it->second;
    }
    comps.emplace(k, GroupHom(x.at(k), s.at(k), std::move(val)));
  }
  ChainMap u(x, s, std::move(comps));
  if (!chain_maps_equal(u.then(m), alpha))
    fail("Internal", "mono factorization does not recover the map", {});
  return u;
}

// Nontrivial degrees only, so a zero complex reports as {}.
json orders_of(const ChainComplex& c) {
  json o = json::object();
  for (int k = c.lo(); k <= c.hi(); ++k)
    if (!c.trivial_at(k)) o[std::to_string(k)] = c.at(k).order();
  return o;
}

// All delta-closed degreewise subgroup families of x (normal subgroups only
// when for_quotients), fed to the visitor. Families are built from the top
// degree down so the closure constraint delta(K_{k+1}) <= K_k prunes early.
void delta_closed_families(const ChainComplex& x, bool for_quotients,
                           const std::function<void(const std::map<int, Subgroup>&)>& visit) {
  const int lo = x.lo(), hi = x.hi();
  std::vector<std::vector<Subgroup>> cand;
  long long combos = 1;
  for (int k = lo; k <= hi; ++k) {
    cand.push_back(for_quotients ? normal_subgroups(x.at(k)) : all_subgroups(x.at(k)));
    combos *= static_cast<long long>(cand.back().size());
    if (combos > search_budget())
      fail("BudgetExceeded", "too many subgroup families",
           {{"object", x.label()}, {"families", combos}});
  }
  std::map<int, Subgroup> family;
  std::function<void(int)> descend = [&](int k) {
    if (k < lo) {
      visit(family);
      return;
    }
    for (const Subgroup& s : cand[k - lo]) {
      if (k < hi) {
        // the choice one degree up must map into s
        const Subgroup& upper = family.at(k + 1);
        GroupHom d = x.diff(k + 1);
        bool closed = true;
        for (Elt e : upper.elements())
          if (!s.contains(d(e))) {
            closed = false;
            break;
          }
        if (!closed) continue;
      }
      family.insert_or_assign(k, s);
      descend(k - 1);
    }
    family.erase(k);
  };
  descend(hi);
}

bool zero_image(const std::vector<GroupHom>& homs) {
  return std::all_of(homs.begin(), homs.end(), [](const GroupHom& h) { return h.is_zero(); });
}

}  // namespace

// ---- ambients ----------------------------------------------------------------

std::string Ambient::name() const {
  switch (kind) {
    case Kind::Simp: return "Simp";
    case Kind::MNGeq: return "M_ngeq(" + std::to_string(m) + ")";
    case Kind::MGeq: return "M_geq(" + std::to_string(m) + ")";
    case Kind::Crs: return "Crs";
    case Kind::CrsNGeq: return "Crs_ngeq(" + std::to_string(m) + ")";
    case Kind::Ch: return "ch";
    case Kind::Pch: return "pch";
  }
  return "?";
}

bool restricts_trivially(TheoryId t, const Ambient& a) {
  if (a.kind != Ambient::Kind::MNGeq && a.kind != Ambient::Kind::CrsNGeq) return false;
  return t.leq(TheoryId::mu_ngeq(a.m));
}

json restriction_collapse_check(int m, TheoryId below,
                                const std::vector<ChainComplex>& corpus) {
  if (!restricts_trivially(below, Ambient::m_ngeq(m)))
    fail("OrderViolation", "theory does not collapse in this ambient",
         {{"ambient", Ambient::m_ngeq(m).name()}, {"theory", below.name()}});
  for (const ChainComplex& x : corpus)
    if (x.support_hi() > m)
      fail("OrderViolation", "corpus object leaves the ambient window",
           {{"object", x.label()}, {"support_hi", x.support_hi()}, {"ambient_level", m}});
  json rows = json::array();
  bool ok = true;
  for (size_t i : by_label(corpus)) {
    const ChainComplex& x = corpus[i];
    bool parts_trivial = true;
    for (const auto& [k, s] : torsion_part_subgroups(x, below))
      parts_trivial = parts_trivial && s.is_trivial_subgroup();
    bool sub_zero = chain_torsion_decompose(x, below).sub.is_zero_complex();
    bool good = parts_trivial && sub_zero;
    ok = ok && good;
    rows.push_back({{"object", x.label()}, {"torsion_zero", good}});
  }
  return {{"ambient", Ambient::m_ngeq(m).name()},
          {"theory", below.name()},
          {"rows", rows},
          {"ok", ok}};
}

// ---- torsion-theory axiom audits ----------------------------------------------

json tt_axioms_check(TheoryId theory, const std::vector<ChainComplex>& corpus) {
  auto order = by_label(corpus);
  json objects = json::array();
  std::vector<size_t> torsion_idx, free_idx;
  for (size_t i : order) {
    ChainClass cls = classify_chain(corpus[i], theory);
    if (cls.torsion) torsion_idx.push_back(i);
    if (cls.torsion_free) free_idx.push_back(i);
    objects.push_back({{"object", corpus[i].label()},
                       {"torsion", cls.torsion},
                       {"free", cls.torsion_free}});
  }

  bool ok = true;
  json tt1 = json::array();
  for (size_t i : torsion_idx)
    for (size_t j : free_idx) {
      auto maps = enumerate_chain_maps(corpus[i], corpus[j]);
      bool all_zero = std::all_of(maps.begin(), maps.end(),
                                  [](const ChainMap& f) { return f.is_zero(); });
      ok = ok && all_zero;
      tt1.push_back({{"torsion", corpus[i].label()},
                     {"free", corpus[j].label()},
                     {"maps", maps.size()},
                     {"all_zero", all_zero}});
    }

  json tt2 = json::array();
  for (size_t i : order) {
    ChainSES ses = chain_torsion_decompose(corpus[i], theory);
    bool sub_torsion = classify_chain(ses.sub, theory).torsion;
    bool quo_free = classify_chain(ses.quo, theory).torsion_free;
    ok = ok && sub_torsion && quo_free;
    tt2.push_back({{"object", corpus[i].label()},
                   {"sub_torsion", sub_torsion},
                   {"quo_free", quo_free},
                   {"sub_orders", orders_of(ses.sub)},
                   {"quo_orders", orders_of(ses.quo)}});
  }

  return {{"theory", theory.name()},
          {"objects", objects},
          {"tt1", tt1},
          {"tt2", tt2},
          {"ok", ok}};
}

json lattice_order_check(TheoryId t1, TheoryId t2,
                         const std::vector<ChainComplex>& corpus) {
  if (!t1.leq(t2))
    fail("OrderViolation", "lattice check needs t1 <= t2",
         {{"t1", t1.name()}, {"t2", t2.name()}});
  json rows = json::array();
  bool ok = true;
  for (size_t i : by_label(corpus)) {
    const ChainComplex& x = corpus[i];
    auto small = torsion_part_subgroups(x, t1);
    auto large = torsion_part_subgroups(x, t2);
    bool contained = true;
    json degrees = json::object();
    for (const auto& [k, s] : small) {
      bool c = large.at(k).contains_subgroup(s);
      contained = contained && c;
      degrees[std::to_string(k)] = {{"small", s.order()}, {"large", large.at(k).order()}};
    }
    ok = ok && contained;
    rows.push_back({{"object", x.label()}, {"contained", contained}, {"degrees", degrees}});
  }
  return {{"t1", t1.name()}, {"t2", t2.name()}, {"rows", rows}, {"ok", ok}};
}

json heredity_check(TheoryId theory, const std::vector<ChainComplex>& corpus) {
  bool hereditary = true, cohereditary = true;
  long long subs_checked = 0, quos_checked = 0;
  json sub_witness, quo_witness;

  for (size_t i : by_label(corpus)) {
    const ChainComplex& x = corpus[i];
    ChainClass cls = classify_chain(x, theory);
    if (cls.torsion) {
      delta_closed_families(x, /*for_quotients=*/false, [&](const std::map<int, Subgroup>& fam) {
        ++subs_checked;
        ChainComplex sub = subcomplex(x, fam).complex;
        if (!classify_chain(sub, theory).torsion && hereditary) {
          hereditary = false;
          sub_witness = {{"object", x.label()}, {"subcomplex_orders", orders_of(sub)}};
        }
      });
    }
    if (cls.torsion_free) {
      delta_closed_families(x, /*for_quotients=*/true, [&](const std::map<int, Subgroup>& fam) {
        ++quos_checked;
        ChainComplex quo = quotient_complex(x, fam).complex;
        if (!classify_chain(quo, theory).torsion_free && cohereditary) {
          cohereditary = false;
          quo_witness = {{"object", x.label()}, {"quotient_orders", orders_of(quo)}};
        }
      });
    }
  }

  json out = {{"theory", theory.name()},
              {"hereditary", hereditary},
              {"cohereditary", cohereditary},
              {"subobjects_checked", subs_checked},
              {"quotients_checked", quos_checked}};
  if (!hereditary) out["subobject_witness"] = sub_witness;
  if (!cohereditary) out["quotient_witness"] = quo_witness;
  return out;
}

// ---- pretorsion decomposition --------------------------------------------------

json PretorsionDecomposition::describe() const {
  return {{"object", larger_seq.mid.label()},
          {"smaller", smaller.name()},
          {"larger", larger.name()},
          {"torsion_orders", orders_of(larger_seq.sub)},
          {"smaller_torsion_orders", orders_of(smaller_seq.sub)},
          {"quotient_orders", orders_of(smaller_seq.quo)},
          {"middle_orders", orders_of(middle)},
          {"middle_torsion_larger", middle_torsion_larger},
          {"middle_free_smaller", middle_free_smaller}};
}

PretorsionDecomposition pretorsion_decompose(const ChainComplex& x, TheoryId smaller,
                                             TheoryId larger) {
  if (!smaller.leq(larger))
    fail("OrderViolation", "pretorsion pair needs smaller <= larger",
         {{"smaller", smaller.name()}, {"larger", larger.name()}});

  // degreewise nesting S(X) <= T(X) underlies the Noether identification of
  // the middle; certify it before building anything
  auto sparts = torsion_part_subgroups(x, smaller);
  auto tparts = torsion_part_subgroups(x, larger);
  for (const auto& [k, s] : sparts)
    if (!tparts.at(k).contains_subgroup(s))
      fail("Internal", "torsion parts are not nested",
           {{"degree", k}, {"object", x.label()}});

  ChainSES lseq = chain_torsion_decompose(x, larger);
  ChainSES sseq = chain_torsion_decompose(x, smaller);
  ChainMap t = lseq.iota;
  ChainMap g = sseq.pi;
  ChainMap gt = t.then(g);

  SubcomplexResult mid = subcomplex(sseq.quo, gt.image_subgroups());
  const ChainComplex& M = mid.complex;

  // T(X) ->> middle : invert the inclusion legs degreewise
  std::map<int, GroupHom> up;
  const ChainComplex& T = lseq.sub;
  for (int k = std::max(T.lo(), M.lo()); k <= std::min(T.hi(), M.hi()); ++k) {
    GroupHom inc = mid.include.comp(k), c = gt.comp(k);
    std::map<Elt, Elt> pos;
    for (Elt s = 0; s < M.at(k).order(); ++s) pos.emplace(inc(s), s);
    std::vector<Elt> val(T.at(k).order());
    for (Elt a = 0; a < T.at(k).order(); ++a) {
      auto it = pos.find(c(a));
      if (it == pos.end())
        fail("Internal", "composite escapes its own image", {{"degree", k}, {"witness", a}});
      val[a] = it->second;
    }
    up.emplace(k, GroupHom(T.at(k), M.at(k), std::move(val)));
  }
  ChainMap t_onto_middle(T, M, std::move(up));
  if (!chain_maps_equal(t_onto_middle.then(mid.include), gt))
    fail("Internal", "middle factorization does not recover g∘t", {});

  // |middle_k| = |T(X)_k| / |S(X)_k| degreewise
  for (int k = x.lo(); k <= x.hi(); ++k) {
    int ts = tparts.at(k).order(), ss = sparts.at(k).order();
    int ms = M.in_window(k) ? M.at(k).order() : 1;
    if (ms * ss != ts)
      fail("Internal", "middle object has the wrong order",
           {{"degree", k}, {"middle", ms}, {"torsion", ts}, {"smaller_torsion", ss}});
  }

  PretorsionDecomposition out{smaller,
                              larger,
                              std::move(lseq),
                              std::move(sseq),
                              std::move(t),
                              std::move(g),
                              M,
                              std::move(t_onto_middle),
                              mid.include,
                              classify_chain(M, larger).torsion,
                              classify_chain(M, smaller).torsion_free};
  return out;
}

// ---- relative-zero class and pre-exactness -------------------------------------

ZPredicate z_class_of(TheoryId smaller, TheoryId larger) {
  return [smaller, larger](const ChainComplex& c) {
    return classify_chain(c, larger).torsion && classify_chain(c, smaller).torsion_free;
  };
}

ZTrivialResult z_trivial(const ChainMap& f, const ZPredicate& in_z) {
  ChainComplex img = subcomplex(f.to(), f.image_subgroups()).complex;
  bool t = in_z(img);
  return ZTrivialResult{t, std::move(img)};
}

json verify_preexact(const PretorsionDecomposition& dec,
                     const std::vector<ChainComplex>& probes) {
  const ChainComplex& x = dec.larger_seq.mid;
  const ChainComplex& tx = dec.larger_seq.sub;
  const ChainComplex& gx = dec.smaller_seq.quo;
  ZPredicate in_z = z_class_of(dec.smaller, dec.larger);

  bool ok = z_trivial(dec.t.then(dec.g), in_z).trivial;
  json rows = json::array();
  for (size_t i : by_label(probes)) {
    const ChainComplex& p = probes[i];
    int pk_tested = 0, pk_failures = 0;
    auto cand_u = enumerate_chain_maps(p, tx);
    for (const ChainMap& k : enumerate_chain_maps(p, x)) {
      if (!z_trivial(k.then(dec.g), in_z).trivial) continue;
      ++pk_tested;
      int found = 0;
      for (const ChainMap& u : cand_u)
        if (chain_maps_equal(u.then(dec.t), k)) ++found;
      if (found != 1) ++pk_failures;
    }
    int pc_tested = 0, pc_failures = 0;
    auto cand_v = enumerate_chain_maps(gx, p);
    for (const ChainMap& h : enumerate_chain_maps(x, p)) {
      if (!z_trivial(dec.t.then(h), in_z).trivial) continue;
      ++pc_tested;
      int found = 0;
      for (const ChainMap& v : cand_v)
        if (chain_maps_equal(dec.g.then(v), h)) ++found;
      if (found != 1) ++pc_failures;
    }
    ok = ok && pk_failures == 0 && pc_failures == 0;
    rows.push_back({{"probe", p.label()},
                    {"prekernel_tested", pk_tested},
                    {"prekernel_failures", pk_failures},
                    {"precokernel_tested", pc_tested},
                    {"precokernel_failures", pc_failures}});
  }
  return {{"object", x.label()},
          {"smaller", dec.smaller.name()},
          {"larger", dec.larger.name()},
          {"probes", rows},
          {"ok", ok}};
}

json remark_factorizations(const ChainMap& alpha, TheoryId smaller, TheoryId larger) {
  if (!smaller.leq(larger))
    fail("OrderViolation", "factorization remark needs smaller <= larger",
         {{"smaller", smaller.name()}, {"larger", larger.name()}});
  const ChainComplex& x = alpha.from();
  const ChainComplex& y = alpha.to();
  if (!classify_chain(x, larger).torsion)
    fail("NotTorsion", "source is not torsion for the larger theory",
         {{"object", x.label()}, {"theory", larger.name()}});
  if (!classify_chain(y, smaller).torsion_free)
    fail("NotTorsionFree", "target is not torsion-free for the smaller theory",
         {{"object", y.label()}, {"theory", smaller.name()}});

  ZPredicate in_z = z_class_of(smaller, larger);

  // image factorization alpha = m ∘ e
  SubcomplexResult img = subcomplex(y, alpha.image_subgroups());
  ChainMap e = hom_through_mono(img.include, alpha);

  // through the smaller quotient of the source and the larger torsion part of
  // the target
  ChainSES xs = chain_torsion_decompose(x, smaller);
  ChainSES yl = chain_torsion_decompose(y, larger);
  ChainMap bar = hom_through_epi(xs.pi, alpha);      // G(X) -> Y
  ChainMap tilde = hom_through_mono(yl.iota, alpha); // X -> T(Y)

  // comparison maps gluing the three factorizations
  ChainMap beta = hom_through_epi(xs.pi, e);             // G(X) -> im(alpha)
  ChainMap gamma = hom_through_mono(yl.iota, img.include);  // im(alpha) -> T(Y)
  bool glue_bar = chain_maps_equal(beta.then(img.include), bar);
  bool glue_tilde = chain_maps_equal(e.then(gamma), tilde);

  bool z_img = in_z(img.complex), z_gx = in_z(xs.quo), z_ty = in_z(yl.sub);
  bool ok = glue_bar && glue_tilde && z_img && z_gx && z_ty;
  return {{"source", x.label()},
          {"target", y.label()},
          {"smaller", smaller.name()},
          {"larger", larger.name()},
          {"image_in_z", z_img},
          {"source_quotient_in_z", z_gx},
          {"target_torsion_in_z", z_ty},
          {"beta_glues", glue_bar},
          {"gamma_glues", glue_tilde},
          {"image_orders", orders_of(img.complex)},
          {"ok", ok}};
}

json torsion_naturality_check(TheoryId theory, const std::vector<ChainComplex>& corpus) {
  auto order = by_label(corpus);
  std::vector<ChainSES> ses;
  ses.reserve(corpus.size());
  for (const ChainComplex& c : corpus) ses.push_back(chain_torsion_decompose(c, theory));

  long long homs_checked = 0;
  json objects = json::array();
  for (size_t i : order) objects.push_back(corpus[i].label());
  for (size_t i = 0; i < corpus.size(); ++i)
    for (size_t j = 0; j < corpus.size(); ++j)
      for (const ChainMap& f : enumerate_chain_maps(corpus[i], corpus[j])) {
        // both induced maps exist and their squares commute, or the helpers
        // fail hard
        hom_through_mono(ses[j].iota, ses[i].iota.then(f));
        hom_through_epi(ses[i].pi, f.then(ses[j].pi));
        ++homs_checked;
      }
  return {{"theory", theory.name()},
          {"objects", objects},
          {"homs_checked", homs_checked},
          {"ok", true}};
}

// ---- trivial-class classifier --------------------------------------------------

json TrivialPattern::to_json() const {
  switch (kind) {
    case Kind::EilenbergMacLane:
      return {{"pattern", "eilenberg_maclane"},
              {"group", group.label()},
              {"order", group.order()},
              {"degree", lo}};
    case Kind::GroupLike:
      return {{"pattern", "group_like"},
              {"group", group.label()},
              {"order", group.order()},
              {"lo", lo},
              {"hi", hi}};
    case Kind::Window:
      return {{"pattern", "window"}, {"lo", lo}, {"hi", hi}};
    case Kind::NotTrivial: break;
  }
  return {{"pattern", "not_trivial"}};
}

TrivialPattern classify_trivial_object(const ChainComplex& x, TheoryId smaller,
                                       TheoryId larger) {
  if (!smaller.leq(larger))
    fail("OrderViolation", "classifier needs smaller <= larger",
         {{"smaller", smaller.name()}, {"larger", larger.name()}});
  TrivialPattern p;
  if (!(classify_chain(x, larger).torsion && classify_chain(x, smaller).torsion_free))
    return p;  // NotTrivial
  if (x.is_zero_complex()) {
    p.kind = TrivialPattern::Kind::EilenbergMacLane;
    p.group = trivial_group();
    p.lo = p.hi = larger.n;
    return p;
  }
  const int a = x.support_lo(), b = x.support_hi();
  // K(A, n) needs A abelian in positive degrees; in degree 0 the discrete
  // complex on any group is the Eilenberg-MacLane object for pi_0.
  if (a == b && (a == 0 || x.at(a).is_abelian())) {
    p.kind = TrivialPattern::Kind::EilenbergMacLane;
    p.group = x.at(a);
    p.lo = p.hi = a;
    return p;
  }
  if (b == a + 1 && x.diff(b).is_bijective()) {
    p.kind = TrivialPattern::Kind::GroupLike;
    p.group = x.at(a);
    p.lo = a;
    p.hi = b;
    return p;
  }
  p.kind = TrivialPattern::Kind::Window;
  p.lo = a;
  p.hi = b;
  return p;
}

// ---- torsion theories relative to a subcategory E ------------------------------

ETorsionSpec mu_ngeq_e_spec(int n) {
  TheoryId theory = TheoryId::mu_ngeq(n);
  ETorsionSpec spec;
  spec.name = theory.name() + "/normal-image";
  spec.in_torsion = [theory](const ChainComplex& c) { return classify_chain(c, theory).torsion; };
  spec.in_free = [theory](const ChainComplex& c) { return classify_chain(c, theory).torsion_free; };
  spec.in_e = [n](const ChainComplex& c) { return image(c.diff(n + 1)).is_normal(); };
  spec.decompose = [theory](const ChainComplex& c) { return chain_torsion_decompose(c, theory); };
  return spec;
}

json e_torsion_check(const ETorsionSpec& spec, const std::vector<ChainComplex>& corpus) {
  auto order = by_label(corpus);
  bool ok = true;
  json objects = json::array();
  std::vector<size_t> torsion_idx, free_idx, e_idx;
  for (size_t i : order) {
    bool t = spec.in_torsion(corpus[i]);
    bool f = spec.in_free(corpus[i]);
    bool e = spec.in_e(corpus[i]);
    if (t) torsion_idx.push_back(i);
    if (f) free_idx.push_back(i);
    if (e) e_idx.push_back(i);
    objects.push_back(
        {{"object", corpus[i].label()}, {"torsion", t}, {"free", f}, {"in_e", e}});
  }

  json tt1 = json::array();
  for (size_t i : torsion_idx)
    for (size_t j : free_idx) {
      auto maps = enumerate_chain_maps(corpus[i], corpus[j]);
      bool all_zero = std::all_of(maps.begin(), maps.end(),
                                  [](const ChainMap& f) { return f.is_zero(); });
      ok = ok && all_zero;
      tt1.push_back({{"torsion", corpus[i].label()},
                     {"free", corpus[j].label()},
                     {"maps", maps.size()},
                     {"all_zero", all_zero}});
    }

  json tt2 = json::array();
  for (size_t i : e_idx) {
    ChainSES ses = spec.decompose(corpus[i]);
    bool sub_torsion = spec.in_torsion(ses.sub);
    bool quo_free = spec.in_free(ses.quo);
    ok = ok && sub_torsion && quo_free;
    tt2.push_back({{"object", corpus[i].label()},
                   {"sub_torsion", sub_torsion},
                   {"quo_free", quo_free}});
  }

  return {{"name", spec.name}, {"objects", objects}, {"tt1", tt1}, {"tt2", tt2}, {"ok", ok}};
}

// ---- the perfect/abelian pair on plain groups ----------------------------------

Subgroup perfect_core(const FiniteGroup& g) {
  Subgroup s = Subgroup::whole(g);
  for (;;) {
    auto sg = s.as_group();
    Subgroup d = commutator_subgroup(sg.group);
    if (d.is_whole()) return s;  // s is perfect (the trivial subgroup included)
    std::vector<Elt> elems;
    elems.reserve(d.order());
    for (Elt e : d.elements()) elems.push_back(sg.embed(e));
    s = Subgroup(g, std::move(elems));
  }
}

bool is_perfect(const FiniteGroup& g) { return commutator_subgroup(g).is_whole(); }

json perf_ab_check(const std::vector<FiniteGroup>& corpus) {
  std::vector<size_t> order(corpus.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return corpus[a].label() < corpus[b].label();
  });

  bool ok = true;
  json rows = json::array();
  std::vector<size_t> perfect_idx, abelian_idx;
  for (size_t i : order) {
    const FiniteGroup& g = corpus[i];
    Subgroup d = commutator_subgroup(g);
    auto dg = d.as_group(g.label() + "'");
    bool in_e = commutator_subgroup(dg.group).is_whole();
    if (is_perfect(g)) perfect_idx.push_back(i);
    if (g.is_abelian()) abelian_idx.push_back(i);
    json row = {{"group", g.label()},
                {"order", g.order()},
                {"derived_order", d.order()},
                {"in_e", in_e}};
    if (in_e) {
      Quotient q = quotient(g, d, g.label() + "/ab");
      bool split_ok = is_perfect(dg.group) && q.group.is_abelian();
      ok = ok && split_ok;
      row["torsion_order"] = d.order();
      row["free_order"] = q.group.order();
      row["split_ok"] = split_ok;
    }
    rows.push_back(std::move(row));
  }

  json tt1 = json::array();
  json skipped = json::array();
  for (size_t i : perfect_idx)
    for (size_t j : abelian_idx) {
      if (corpus[i].order() > 24) {
        skipped.push_back({{"source", corpus[i].label()}, {"target", corpus[j].label()}});
        continue;
      }
      bool all_zero = zero_image(enumerate_homs(corpus[i], corpus[j]));
      ok = ok && all_zero;
      tt1.push_back({{"source", corpus[i].label()},
                     {"target", corpus[j].label()},
                     {"all_zero", all_zero}});
    }

  return {{"name", "perf-ab"},
          {"groups", rows},
          {"tt1", tt1},
          {"tt1_skipped", skipped},
          {"ok", ok}};
}

}  // namespace moorekit
