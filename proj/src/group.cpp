#include "moorekit/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace moorekit {

long long search_budget() {
  static const long long value = [] {
    if (const char* env = std::getenv("MOORE_KIT_BUDGET")) {
      char* end = nullptr;
      long long v = std::strtoll(env, &end, 10);
      if (end != env && v > 0) return v;
    }
    return 10'000'000LL;
  }();
  return value;
}

// ---- FiniteGroup -----------------------------------------------------------

static std::vector<Elt> derive_inverses(int n, const std::vector<Elt>& table,
                                        const std::string& label) {
  std::vector<Elt> inverse(n, -1);
  for (Elt a = 0; a < n; ++a) {
    for (Elt b = 0; b < n; ++b) {
      if (table[static_cast<size_t>(a) * n + b] == 0) {
        if (table[static_cast<size_t>(b) * n + a] != 0)
          fail("NotAGroup", "element has a right inverse that is not a left inverse",
               {{"group", label}, {"element", a}, {"right_inverse", b}});
        inverse[a] = b;
        break;
      }
    }
    if (inverse[a] < 0)
      fail("NotAGroup", "element has no inverse", {{"group", label}, {"element", a}});
  }
  return inverse;
}

static bool derive_abelian(int n, const std::vector<Elt>& table) {
  for (Elt a = 0; a < n; ++a)
    for (Elt b = a + 1; b < n; ++b)
      if (table[static_cast<size_t>(a) * n + b] != table[static_cast<size_t>(b) * n + a])
        return false;
  return true;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Elt>>& table,
                                    std::string label) {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail("NotAGroup", "empty table", {{"group", label}});
  std::vector<Elt> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      fail("NotAGroup", "table is not square", {{"group", label}, {"row", i}});
    for (int j = 0; j < n; ++j) {
      Elt v = table[i][j];
      if (v < 0 || v >= n)
        fail("NotAGroup", "entry out of range",
             {{"group", label}, {"row", i}, {"col", j}, {"value", v}});
      flat.push_back(v);
    }
  }
  // identity pinned at index 0
  for (int j = 0; j < n; ++j) {
    if (flat[j] != j)
      fail("NotAGroup", "row 0 is not the identity", {{"group", label}, {"col", j}});
    if (flat[static_cast<size_t>(j) * n] != j)
      fail("NotAGroup", "column 0 is not the identity", {{"group", label}, {"row", j}});
  }
  std::vector<Elt> inverse = derive_inverses(n, flat, label);
  // full associativity sweep
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b) {
      const Elt ab = flat[static_cast<size_t>(a) * n + b];
      for (Elt c = 0; c < n; ++c) {
        const Elt bc = flat[static_cast<size_t>(b) * n + c];
        if (flat[static_cast<size_t>(ab) * n + c] != flat[static_cast<size_t>(a) * n + bc])
          fail("NotAGroup", "associativity fails",
               {{"group", label}, {"triple", {a, b, c}}});
      }
    }
  auto d = std::make_shared<Data>();
  d->order = n;
  d->table = std::move(flat);
  d->inverse = std::move(inverse);
  d->abelian = derive_abelian(n, d->table);
  d->label = std::move(label);
  return FiniteGroup(std::move(d));
}

FiniteGroup FiniteGroup::unchecked(int order, std::vector<Elt> flat_table, std::string label) {
  auto d = std::make_shared<Data>();
  d->order = order;
  d->table = std::move(flat_table);
  d->inverse = derive_inverses(order, d->table, label);
  d->abelian = derive_abelian(order, d->table);
  d->label = std::move(label);
  return FiniteGroup(std::move(d));
}

int FiniteGroup::element_order(Elt a) const {
  int k = 1;
  Elt x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

FiniteGroup FiniteGroup::with_label(std::string label) const {
  auto d = std::make_shared<Data>(*d_);
  d->label = std::move(label);
  return FiniteGroup(std::move(d));
}

bool FiniteGroup::same_table(const FiniteGroup& o) const {
  return d_->order == o.d_->order && d_->table == o.d_->table;
}

FiniteGroup trivial_group() { return FiniteGroup::unchecked(1, {0}, "1"); }

// ---- GroupHom --------------------------------------------------------------

std::optional<std::pair<Elt, Elt>> GroupHom::find_violation(const FiniteGroup& a,
                                                            const FiniteGroup& b,
                                                            const std::vector<Elt>& map) {
  for (Elt x = 0; x < a.order(); ++x)
    for (Elt y = 0; y < a.order(); ++y)
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return std::make_pair(x, y);
  return std::nullopt;
}

GroupHom::GroupHom(FiniteGroup source, FiniteGroup target, std::vector<Elt> map)
    : src_(std::move(source)), dst_(std::move(target)), map_(std::move(map)) {
  if (static_cast<int>(map_.size()) != src_.order())
    fail("HomInvalid", "map length does not match source order",
         {{"source", src_.label()}, {"size", map_.size()}});
  for (Elt v : map_)
    if (v < 0 || v >= dst_.order())
      fail("HomInvalid", "image out of range", {{"target", dst_.label()}, {"value", v}});
  if (auto bad = find_violation(src_, dst_, map_))
    fail("HomInvalid", "not a homomorphism",
         {{"source", src_.label()}, {"target", dst_.label()}, {"pair", {bad->first, bad->second}}});
}

GroupHom GroupHom::unchecked(FiniteGroup source, FiniteGroup target, std::vector<Elt> map) {
  GroupHom h;
  h.src_ = std::move(source);
  h.dst_ = std::move(target);
  h.map_ = std::move(map);
  return h;
}

GroupHom GroupHom::identity(const FiniteGroup& g) {
  std::vector<Elt> m(g.order());
  std::iota(m.begin(), m.end(), 0);
  return unchecked(g, g, std::move(m));
}

GroupHom GroupHom::zero(const FiniteGroup& source, const FiniteGroup& target) {
  return unchecked(source, target, std::vector<Elt>(source.order(), 0));
}

bool GroupHom::is_injective() const {
  std::vector<char> seen(dst_.order(), 0);
  for (Elt v : map_) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool GroupHom::is_surjective() const {
  std::vector<char> seen(dst_.order(), 0);
  int count = 0;
  for (Elt v : map_)
    if (!seen[v]) {
      seen[v] = 1;
      ++count;
    }
  return count == dst_.order();
}

bool GroupHom::is_zero() const {
  return std::all_of(map_.begin(), map_.end(), [](Elt v) { return v == 0; });
}

GroupHom GroupHom::then(const GroupHom& g) const {
  if (!dst_.same_instance(g.src_))
    fail("MismatchedParent", "composition endpoints do not match",
         {{"first_target", dst_.label()}, {"second_source", g.src_.label()}});
  std::vector<Elt> m(map_.size());
  for (size_t i = 0; i < map_.size(); ++i) m[i] = g.map_[map_[i]];
  return unchecked(src_, g.dst_, std::move(m));
}

GroupHom GroupHom::recast(FiniteGroup new_source, FiniteGroup new_target) const {
  if (!new_source.same_table(src_) || !new_target.same_table(dst_))
    fail("MismatchedParent", "recast endpoints differ structurally",
         {{"source", src_.label()}, {"target", dst_.label()}});
  return unchecked(std::move(new_source), std::move(new_target), map_);
}

// ---- Subgroup --------------------------------------------------------------

Subgroup::Subgroup(FiniteGroup parent, std::vector<Elt> elements)
    : parent_(std::move(parent)), elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  mask_.assign(parent_.order(), 0);
  for (Elt e : elems_) {
    if (e < 0 || e >= parent_.order())
      fail("NotAGroup", "subgroup element out of range", {{"element", e}});
    mask_[e] = 1;
  }
  if (elems_.empty() || elems_[0] != 0)
    fail("NotAGroup", "subgroup does not contain the identity", {{"parent", parent_.label()}});
  for (Elt a : elems_) {
    if (!mask_[parent_.inv(a)])
      fail("NotAGroup", "subgroup not closed under inverses", {{"element", a}});
    for (Elt b : elems_)
      if (!mask_[parent_.mul(a, b)])
        fail("NotAGroup", "subgroup not closed under multiplication",
             {{"pair", {a, b}}});
  }
}

Subgroup Subgroup::whole(const FiniteGroup& g) {
  std::vector<Elt> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, std::move(all));
}

Subgroup Subgroup::trivial(const FiniteGroup& g) { return Subgroup(g, {0}); }

bool Subgroup::is_normal() const {
  for (Elt g = 0; g < parent_.order(); ++g)
    for (Elt a : elems_)
      if (!mask_[parent_.conj(g, a)]) return false;
  return true;
}

bool Subgroup::contains_subgroup(const Subgroup& o) const {
  for (Elt e : o.elems_)
    if (!mask_[e]) return false;
  return true;
}

bool Subgroup::same_as(const Subgroup& o) const { return elems_ == o.elems_; }

Subgroup::AsGroup Subgroup::as_group(std::string label) const {
  const int n = order();
  std::vector<Elt> index_in_sub(parent_.order(), -1);
  for (int i = 0; i < n; ++i) index_in_sub[elems_[i]] = i;
  std::vector<Elt> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<size_t>(i) * n + j] = index_in_sub[parent_.mul(elems_[i], elems_[j])];
  if (label.empty()) label = parent_.label().empty() ? "sub" : parent_.label() + ".sub";
  FiniteGroup g = FiniteGroup::unchecked(n, std::move(table), std::move(label));
  GroupHom embed = GroupHom::unchecked(g, parent_, elems_);
  return AsGroup{std::move(g), std::move(embed), std::move(index_in_sub)};
}

// ---- GroupAction -----------------------------------------------------------

std::optional<json> GroupAction::find_violation(const FiniteGroup& actor,
                                                const FiniteGroup& space,
                                                const std::vector<std::vector<Elt>>& perms) {
  const int n = actor.order(), m = space.order();
  if (static_cast<int>(perms.size()) != n)
    return json{{"kind", "shape"}, {"expected_rows", n}, {"rows", perms.size()}};
  for (Elt a = 0; a < n; ++a) {
    if (static_cast<int>(perms[a].size()) != m)
      return json{{"kind", "shape"}, {"actor", a}, {"expected_cols", m}};
    std::vector<char> seen(m, 0);
    for (Elt x = 0; x < m; ++x) {
      Elt y = perms[a][x];
      if (y < 0 || y >= m || seen[y])
        return json{{"kind", "not_a_permutation"}, {"actor", a}, {"point", x}};
      seen[y] = 1;
    }
    if (auto bad = GroupHom::find_violation(space, space, perms[a]))
      return json{{"kind", "not_an_automorphism"},
                  {"actor", a},
                  {"pair", {bad->first, bad->second}}};
  }
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b) {
      const Elt ab = actor.mul(a, b);
      for (Elt x = 0; x < m; ++x)
        if (perms[ab][x] != perms[a][perms[b][x]])
          return json{{"kind", "not_functorial"}, {"pair", {a, b}}, {"point", x}};
    }
  return std::nullopt;
}

GroupAction::GroupAction(FiniteGroup actor, FiniteGroup space, std::vector<std::vector<Elt>> perms)
    : actor_(std::move(actor)), space_(std::move(space)), perms_(std::move(perms)) {
  if (auto bad = find_violation(actor_, space_, perms_))
    fail("NotAnAction", "action axioms fail", *bad);
}

GroupAction GroupAction::unchecked(FiniteGroup actor, FiniteGroup space,
                                   std::vector<std::vector<Elt>> perms) {
  GroupAction a;
  a.actor_ = std::move(actor);
  a.space_ = std::move(space);
  a.perms_ = std::move(perms);
  return a;
}

GroupAction GroupAction::trivial(const FiniteGroup& actor, const FiniteGroup& space) {
  std::vector<Elt> idperm(space.order());
  std::iota(idperm.begin(), idperm.end(), 0);
  return unchecked(actor, space, std::vector<std::vector<Elt>>(actor.order(), idperm));
}

GroupAction GroupAction::conjugation(const FiniteGroup& g) {
  std::vector<std::vector<Elt>> perms(g.order(), std::vector<Elt>(g.order()));
  for (Elt a = 0; a < g.order(); ++a)
    for (Elt x = 0; x < g.order(); ++x) perms[a][x] = g.conj(a, x);
  return unchecked(g, g, std::move(perms));
}

bool GroupAction::is_trivial() const {
  for (const auto& p : perms_)
    for (Elt x = 0; x < space_.order(); ++x)
      if (p[x] != x) return false;
  return true;
}

// ---- constructions ---------------------------------------------------------

Subgroup kernel(const GroupHom& f) {
  std::vector<Elt> ker;
  for (Elt a = 0; a < f.source().order(); ++a)
    if (f(a) == 0) ker.push_back(a);
  return Subgroup(f.source(), std::move(ker));
}

Subgroup image(const GroupHom& f) {
  std::vector<char> seen(f.target().order(), 0);
  for (Elt a = 0; a < f.source().order(); ++a) seen[f(a)] = 1;
  std::vector<Elt> im;
  for (Elt b = 0; b < f.target().order(); ++b)
    if (seen[b]) im.push_back(b);
  return Subgroup(f.target(), std::move(im));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (!a.parent().same_instance(b.parent()))
    fail("MismatchedParent", "intersecting subgroups of different groups",
         {{"left", a.parent().label()}, {"right", b.parent().label()}});
  std::vector<Elt> both;
  for (Elt e : a.elements())
    if (b.contains(e)) both.push_back(e);
  return Subgroup(a.parent(), std::move(both));
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Elt>& seeds) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elt> members{0};
  in[0] = 1;
  std::vector<Elt> work = seeds;
  for (Elt s : work)
    if (s < 0 || s >= g.order()) fail("NotAGroup", "seed out of range", {{"element", s}});
  size_t head = 0;
  for (Elt s : seeds)
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
    }
  // BFS closure under products (inverses follow in a finite group)
  for (head = 0; head < members.size(); ++head) {
    const Elt a = members[head];
    for (size_t i = 0; i <= head; ++i) {
      for (Elt c : {g.mul(a, members[i]), g.mul(members[i], a)}) {
        if (!in[c]) {
          in[c] = 1;
          members.push_back(c);
        }
      }
    }
  }
  return Subgroup(g, std::move(members));
}

Subgroup normal_closure(const FiniteGroup& g, const std::vector<Elt>& seeds) {
  std::vector<Elt> current = seeds;
  while (true) {
    Subgroup h = generated_subgroup(g, current);
    std::vector<Elt> extended = h.elements();
    bool grew = false;
    for (Elt x = 0; x < g.order(); ++x)
      for (Elt a : h.elements()) {
        Elt c = g.conj(x, a);
        if (!h.contains(c)) {
          extended.push_back(c);
          grew = true;
        }
      }
    if (!grew) return h;
    current = std::move(extended);
  }
}

Subgroup center(const FiniteGroup& g) {
  std::vector<Elt> z;
  for (Elt a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elt b = 0; b < g.order() && central; ++b)
      if (g.mul(a, b) != g.mul(b, a)) central = false;
    if (central) z.push_back(a);
  }
  return Subgroup(g, std::move(z));
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::vector<Elt> comms;
  for (Elt a = 0; a < g.order(); ++a)
    for (Elt b = 0; b < g.order(); ++b) comms.push_back(g.comm(a, b));
  return normal_closure(g, comms);
}

Quotient quotient(const FiniteGroup& g, const Subgroup& n, std::string label) {
  if (!n.parent().same_instance(g))
    fail("MismatchedParent", "subgroup does not live in the group being quotiented",
         {{"group", g.label()}});
  if (!n.is_normal()) {
    // locate a witness for the error payload
    for (Elt x = 0; x < g.order(); ++x)
      for (Elt a : n.elements())
        if (!n.contains(g.conj(x, a)))
          fail("NotNormal", "subgroup is not normal",
               {{"group", g.label()}, {"conjugator", x}, {"element", a}});
  }
  const int ord = g.order();
  std::vector<Elt> coset_rep(ord, -1);  // element -> minimal element of its coset
  std::vector<Elt> reps;
  for (Elt a = 0; a < ord; ++a) {
    if (coset_rep[a] >= 0) continue;
    // a is the minimal element of a fresh left coset aN
    std::vector<Elt> members;
    for (Elt x : n.elements()) members.push_back(g.mul(a, x));
    for (Elt m : members) coset_rep[m] = a;
    reps.push_back(a);
  }
  // reps is ascending by construction; identity coset (containing 0) is first
  const int q = static_cast<int>(reps.size());
  std::vector<Elt> index_of_rep(ord, -1);
  for (int i = 0; i < q; ++i) index_of_rep[reps[i]] = i;
  std::vector<Elt> table(static_cast<size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[static_cast<size_t>(i) * q + j] = index_of_rep[coset_rep[g.mul(reps[i], reps[j])]];
  if (label.empty())
    label = (g.label().empty() ? std::string("G") : g.label()) + "/N";
  FiniteGroup qg = FiniteGroup::unchecked(q, std::move(table), std::move(label));
  std::vector<Elt> proj(ord);
  for (Elt a = 0; a < ord; ++a) proj[a] = index_of_rep[coset_rep[a]];
  GroupHom project = GroupHom::unchecked(g, qg, std::move(proj));
  return Quotient{std::move(qg), std::move(project), std::move(reps)};
}

bool is_central_extension(const GroupHom& f) {
  if (!f.is_surjective()) return false;
  Subgroup z = center(f.source());
  for (Elt a = 0; a < f.source().order(); ++a)
    if (f(a) == 0 && !z.contains(a)) return false;
  return true;
}

Product direct_product(const FiniteGroup& a, const FiniteGroup& b, std::string label) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Elt> table(static_cast<size_t>(n) * n);
  for (Elt x = 0; x < n; ++x) {
    const Elt xa = x / nb, xb = x % nb;
    for (Elt y = 0; y < n; ++y) {
      const Elt ya = y / nb, yb = y % nb;
      table[static_cast<size_t>(x) * n + y] = a.mul(xa, ya) * nb + b.mul(xb, yb);
    }
  }
  if (label.empty()) label = a.label() + "x" + b.label();
  FiniteGroup p = FiniteGroup::unchecked(n, std::move(table), std::move(label));
  std::vector<Elt> inl(na), inr(nb), prl(n), prr(n);
  for (Elt x = 0; x < na; ++x) inl[x] = x * nb;
  for (Elt x = 0; x < nb; ++x) inr[x] = x;
  for (Elt x = 0; x < n; ++x) {
    prl[x] = x / nb;
    prr[x] = x % nb;
  }
  return Product{p, GroupHom::unchecked(a, p, std::move(inl)),
                 GroupHom::unchecked(b, p, std::move(inr)),
                 GroupHom::unchecked(p, a, std::move(prl)),
                 GroupHom::unchecked(p, b, std::move(prr))};
}

Semidirect semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                              const GroupAction& act, std::string label) {
  if (!act.actor().same_instance(h) || !act.space().same_instance(n))
    fail("MismatchedParent", "semidirect action endpoints do not match",
         {{"normal", n.label()}, {"actor", h.label()}});
  const int nn = n.order(), nh = h.order(), total = nn * nh;
  std::vector<Elt> table(static_cast<size_t>(total) * total);
  for (Elt x = 0; x < total; ++x) {
    const Elt xa = x / nh, xb = x % nh;
    for (Elt y = 0; y < total; ++y) {
      const Elt ya = y / nh, yb = y % nh;
      table[static_cast<size_t>(x) * total + y] =
          n.mul(xa, act.apply(xb, ya)) * nh + h.mul(xb, yb);
    }
  }
  if (label.empty()) label = n.label() + ":" + h.label();
  FiniteGroup p = FiniteGroup::unchecked(total, std::move(table), std::move(label));
  std::vector<Elt> en(nn), eh(nh), ph(total);
  for (Elt x = 0; x < nn; ++x) en[x] = x * nh;
  for (Elt x = 0; x < nh; ++x) eh[x] = x;
  for (Elt x = 0; x < total; ++x) ph[x] = x % nh;
  return Semidirect{p, GroupHom::unchecked(n, p, std::move(en)),
                    GroupHom::unchecked(h, p, std::move(eh)),
                    GroupHom::unchecked(p, h, std::move(ph))};
}

std::vector<Elt> PowerGroup::decode(Elt e) const {
  std::vector<Elt> coords(exponent);
  const int b = base.order();
  for (int j = exponent - 1; j >= 0; --j) {
    coords[j] = e % b;
    e /= b;
  }
  return coords;
}

Elt PowerGroup::encode(const std::vector<Elt>& coords) const {
  const int b = base.order();
  Elt e = 0;
  for (int j = 0; j < exponent; ++j) e = e * b + coords[j];
  return e;
}

PowerGroup power_group(const FiniteGroup& g, int k, std::string label) {
  long long total = 1;
  for (int i = 0; i < k; ++i) {
    total *= g.order();
    if (total > search_budget())
      fail("BudgetExceeded", "power group too large",
           {{"base", g.label()}, {"exponent", k}, {"size", total}});
  }
  const int n = static_cast<int>(total);
  PowerGroup pg;
  pg.base = g;
  pg.exponent = k;
  if (k == 0) {
    pg.group = trivial_group();
    return pg;
  }
  std::vector<Elt> table(static_cast<size_t>(n) * n);
  const int b = g.order();
  for (Elt x = 0; x < n; ++x) {
    // decode x once, then walk y in mixed-radix order
    std::vector<Elt> xc(k);
    Elt t = x;
    for (int j = k - 1; j >= 0; --j) {
      xc[j] = t % b;
      t /= b;
    }
    for (Elt y = 0; y < n; ++y) {
      Elt u = y, e = 0;
      std::vector<Elt> yc(k);
      for (int j = k - 1; j >= 0; --j) {
        yc[j] = u % b;
        u /= b;
      }
      for (int j = 0; j < k; ++j) e = e * b + g.mul(xc[j], yc[j]);
      table[static_cast<size_t>(x) * n + y] = e;
    }
  }
  if (label.empty()) label = g.label() + "^" + std::to_string(k);
  pg.group = FiniteGroup::unchecked(n, std::move(table), std::move(label));
  return pg;
}

// ---- searches --------------------------------------------------------------

namespace {

// Product schedule: with map[0] = 0 and the generator images supplied, replay
// steps z = x·y (x, y already defined) to define every element exactly once.
struct GenPlan {
  std::vector<Elt> gens;
  struct Step {
    Elt z, x, y;
  };
  std::vector<Step> steps;
};

GenPlan make_gen_plan(const FiniteGroup& g) {
  GenPlan plan;
  const int n = g.order();
  std::vector<char> defined(n, 0);
  std::vector<Elt> order{0};
  defined[0] = 1;
  while (static_cast<int>(order.size()) < n) {
    Elt fresh = -1;
    for (Elt e = 0; e < n; ++e)
      if (!defined[e]) {
        fresh = e;
        break;
      }
    plan.gens.push_back(fresh);
    defined[fresh] = 1;
    order.push_back(fresh);
    // close under products, recording each new definition
    for (size_t head = 0; head < order.size(); ++head) {
      const Elt a = order[head];
      for (size_t i = 0; i <= head; ++i) {
        const Elt b = order[i];
        for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
          const Elt z = g.mul(x, y);
          if (!defined[z]) {
            defined[z] = 1;
            order.push_back(z);
            plan.steps.push_back({z, x, y});
          }
        }
      }
    }
  }
  return plan;
}

}  // namespace

std::vector<Elt> greedy_generators(const FiniteGroup& g) { return make_gen_plan(g).gens; }

std::vector<GroupHom> enumerate_homs(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() > 24)
    fail("BudgetExceeded", "hom search source too large",
         {{"source", a.label()}, {"order", a.order()}});
  const GenPlan plan = make_gen_plan(a);
  const int k = static_cast<int>(plan.gens.size());
  long long candidates = 1;
  for (int i = 0; i < k; ++i) {
    candidates *= b.order();
    if (candidates > search_budget())
      fail("BudgetExceeded", "hom search space too large",
           {{"source", a.label()}, {"target", b.label()}, {"candidates", candidates}});
  }
  std::vector<GroupHom> found;
  std::vector<Elt> images(k, 0);
  std::vector<Elt> map(a.order());
  while (true) {
    map.assign(a.order(), -1);
    map[0] = 0;
    bool ok = true;
    for (int i = 0; i < k; ++i) map[plan.gens[i]] = images[i];
    for (const auto& st : plan.steps) map[st.z] = b.mul(map[st.x], map[st.y]);
    // the schedule defines everything; verify the hom property in full
    if (ok && !GroupHom::find_violation(a, b, map))
      found.push_back(GroupHom::unchecked(a, b, map));
    // lexicographic increment of generator images
    int pos = k - 1;
    while (pos >= 0 && images[pos] == b.order() - 1) {
      images[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++images[pos];
  }
  return found;
}

std::vector<GroupHom> automorphisms(const FiniteGroup& g) {
  std::vector<GroupHom> autos;
  for (auto& h : enumerate_homs(g, g))
    if (h.is_bijective()) autos.push_back(std::move(h));
  return autos;
}

std::optional<GroupHom> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.order() == 1) return GroupHom::unchecked(a, b, {0});
  if (a.is_abelian() != b.is_abelian()) return std::nullopt;
  // order-spectrum prune
  std::vector<int> ord_a(a.order()), ord_b(b.order());
  for (Elt e = 0; e < a.order(); ++e) ord_a[e] = a.element_order(e);
  for (Elt e = 0; e < b.order(); ++e) ord_b[e] = b.element_order(e);
  {
    auto sa = ord_a, sb = ord_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  const GenPlan plan = make_gen_plan(a);
  const int k = static_cast<int>(plan.gens.size());
  // candidate images per generator: matching element order
  std::vector<std::vector<Elt>> cands(k);
  long long total = 1;
  for (int i = 0; i < k; ++i) {
    for (Elt e = 0; e < b.order(); ++e)
      if (ord_b[e] == ord_a[plan.gens[i]]) cands[i].push_back(e);
    total *= std::max<size_t>(cands[i].size(), 1);
    if (total > search_budget())
      fail("BudgetExceeded", "isomorphism search space too large",
           {{"source", a.label()}, {"target", b.label()}, {"candidates", total}});
  }
  std::vector<int> idx(k, 0);
  std::vector<Elt> map(a.order());
  while (true) {
    map.assign(a.order(), -1);
    map[0] = 0;
    for (int i = 0; i < k; ++i) map[plan.gens[i]] = cands[i][idx[i]];
    for (const auto& st : plan.steps) map[st.z] = b.mul(map[st.x], map[st.y]);
    GroupHom h = GroupHom::unchecked(a, b, map);
    if (!GroupHom::find_violation(a, b, map) && h.is_bijective()) return h;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] + 1 == static_cast<int>(cands[pos].size())) {
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) return std::nullopt;
    ++idx[pos];
  }
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  std::vector<std::vector<Elt>> seen;
  std::vector<Subgroup> out;
  std::vector<Subgroup> work{Subgroup::trivial(g)};
  seen.push_back(work[0].elements());
  while (!work.empty()) {
    Subgroup h = std::move(work.back());
    work.pop_back();
    out.push_back(h);
    for (Elt e = 0; e < g.order(); ++e) {
      if (h.contains(e)) continue;
      std::vector<Elt> seeds = h.elements();
      seeds.push_back(e);
      Subgroup bigger = generated_subgroup(g, seeds);
      if (std::find(seen.begin(), seen.end(), bigger.elements()) == seen.end()) {
        seen.push_back(bigger.elements());
        work.push_back(std::move(bigger));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.elements() < y.elements();
  });
  return out;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
  std::vector<Subgroup> out;
  for (auto& h : all_subgroups(g))
    if (h.is_normal()) out.push_back(std::move(h));
  return out;
}

}  // namespace moorekit
