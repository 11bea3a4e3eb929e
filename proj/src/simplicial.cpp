#include "moorekit/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace moorekit {

namespace {

std::string level_tag(const std::string& base, int n) {
  std::ostringstream os;
  os << base << n;
  return os.str();
}

// Tuples (y_0 .. y_{m+1}) over `level` with d_i(y_j) = d_{j-1}(y_i) for all
// i < j. `faces` are the face maps out of `level` (empty when the level is
// degree 0, where there are no matching conditions). Output is in
// lexicographic order, so the all-identity tuple comes first.
std::vector<std::vector<Elt>> simplicial_kernel(const FiniteGroup& level,
                                                const std::vector<GroupHom>& faces) {
  // Level m carries faces d_0..d_m (none when m = 0); tuples have m+2 slots.
  const int m = faces.empty() ? 0 : static_cast<int>(faces.size()) - 1;
  const int slots = m + 2;
  const long long budget = search_budget();
  long long nodes = 0;
  std::vector<std::vector<Elt>> out;
  std::vector<Elt> cur(slots);
  auto rec = [&](auto&& self, int j) -> void {
    if (j == slots) {
      out.push_back(cur);
      return;
    }
    for (Elt y = 0; y < level.order(); ++y) {
      if (++nodes > budget)
        fail("BudgetExceeded", "simplicial kernel search exceeded the budget",
             {{"budget", budget}, {"slots", slots}, {"level_order", level.order()}});
      bool ok = true;
      if (!faces.empty())  // degree 0 has no faces, hence no matching conditions
        for (int i = 0; i < j && ok; ++i) ok = faces[i](y) == faces[j - 1](cur[i]);
      if (!ok) continue;
      cur[j] = y;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

std::optional<json> SimplicialGroup::find_violation(
    const std::vector<FiniteGroup>& levels, const std::vector<std::vector<GroupHom>>& faces,
    const std::vector<std::vector<GroupHom>>& degens) {
  if (levels.empty()) return json{{"kind", "shape"}, {"detail", "no levels"}};
  const int d = static_cast<int>(levels.size()) - 1;
  for (int n = 0; n <= d; ++n)
    if (!levels[n].valid()) return json{{"kind", "shape"}, {"detail", "missing level"}, {"degree", n}};
  if (static_cast<int>(faces.size()) != d || static_cast<int>(degens.size()) != d)
    return json{{"kind", "shape"},
                {"detail", "face/degeneracy row count"},
                {"face_rows", faces.size()},
                {"degeneracy_rows", degens.size()},
                {"degree", d}};
  for (int n = 1; n <= d; ++n)
    if (static_cast<int>(faces[n - 1].size()) != n + 1)
      return json{{"kind", "shape"}, {"detail", "face count"}, {"degree", n},
                  {"have", faces[n - 1].size()}, {"want", n + 1}};
  for (int n = 0; n < d; ++n)
    if (static_cast<int>(degens[n].size()) != n + 1)
      return json{{"kind", "shape"}, {"detail", "degeneracy count"}, {"degree", n},
                  {"have", degens[n].size()}, {"want", n + 1}};

  auto check_hom = [](const GroupHom& f, const FiniteGroup& src, const FiniteGroup& dst,
                      const char* what, int n, int i) -> std::optional<json> {
    if (!f.source().same_instance(src) || !f.target().same_instance(dst))
      return json{{"kind", "endpoints"}, {"map", what}, {"degree", n}, {"index", i}};
    if (static_cast<int>(f.map().size()) != src.order())
      return json{{"kind", "shape"}, {"map", what}, {"degree", n}, {"index", i},
                  {"detail", "map length"}};
    for (Elt v : f.map())
      if (v < 0 || v >= dst.order())
        return json{{"kind", "shape"}, {"map", what}, {"degree", n}, {"index", i},
                    {"detail", "value out of range"}, {"value", v}};
    if (auto bad = GroupHom::find_violation(src, dst, f.map()))
      return json{{"kind", "not_a_hom"}, {"map", what}, {"degree", n}, {"index", i},
                  {"pair", {bad->first, bad->second}}};
    return std::nullopt;
  };
  for (int n = 1; n <= d; ++n)
    for (int i = 0; i <= n; ++i)
      if (auto v = check_hom(faces[n - 1][i], levels[n], levels[n - 1], "face", n, i)) return v;
  for (int n = 0; n < d; ++n)
    for (int i = 0; i <= n; ++i)
      if (auto v = check_hom(degens[n][i], levels[n], levels[n + 1], "degeneracy", n, i)) return v;

  // d_i d_j = d_{j-1} d_i for i < j.
  for (int n = 2; n <= d; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (Elt x = 0; x < levels[n].order(); ++x) {
          Elt lhs = faces[n - 2][i](faces[n - 1][j](x));
          Elt rhs = faces[n - 2][j - 1](faces[n - 1][i](x));
          if (lhs != rhs)
            return json{{"kind", "face_face"}, {"degree", n}, {"i", i}, {"j", j},
                        {"witness", x}, {"lhs", lhs}, {"rhs", rhs}};
        }
  // s_i s_j = s_{j+1} s_i for i <= j.
  for (int n = 0; n + 2 <= d; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        for (Elt x = 0; x < levels[n].order(); ++x) {
          Elt lhs = degens[n + 1][i](degens[n][j](x));
          Elt rhs = degens[n + 1][j + 1](degens[n][i](x));
          if (lhs != rhs)
            return json{{"kind", "degen_degen"}, {"degree", n}, {"i", i}, {"j", j},
                        {"witness", x}, {"lhs", lhs}, {"rhs", rhs}};
        }
  // d_i s_j: identity for i = j, j+1; s_{j-1} d_i for i < j; s_j d_{i-1} for i > j+1.
  for (int n = 0; n + 1 <= d; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i)
        for (Elt x = 0; x < levels[n].order(); ++x) {
          Elt got = faces[n][i](degens[n][j](x));
          Elt want;
          if (i == j || i == j + 1) want = x;
          else if (i < j) want = degens[n - 1][j - 1](faces[n - 1][i](x));
          else want = degens[n - 1][j](faces[n - 1][i - 1](x));
          if (got != want)
            return json{{"kind", "face_degen"}, {"degree", n}, {"i", i}, {"j", j},
                        {"witness", x}, {"lhs", got}, {"rhs", want}};
        }
  return std::nullopt;
}

SimplicialGroup::SimplicialGroup(std::vector<FiniteGroup> levels,
                                 std::vector<std::vector<GroupHom>> faces,
                                 std::vector<std::vector<GroupHom>> degens,
                                 std::optional<int> coskeletal_above, std::string label)
    : levels_(std::move(levels)),
      faces_(std::move(faces)),
      degens_(std::move(degens)),
      coskeletal_above_(coskeletal_above),
      label_(std::move(label)) {
  if (auto v = find_violation(levels_, faces_, degens_))
    fail("IdentityViolation", "simplicial identities do not hold", *v);
  if (!coskeletal_above_) return;

  const int k = *coskeletal_above_;
  if (k < 0 || k > degree())
    fail("NotCoskeletal", "coskeletal flag outside the degree window",
         {{"k", k}, {"degree", degree()}});
  // Level by level above k, the face tuple map X_{m+1} -> simplicial kernel
  // over X_m must be a bijection; the degeneracies are then automatically the
  // induced ones because the simplicial identities already hold.
  for (int m = k; m < degree(); ++m) {
    auto kern = simplicial_kernel(levels_[m], m >= 1 ? faces_[m - 1] : std::vector<GroupHom>{});
    if (static_cast<int>(kern.size()) != levels_[m + 1].order())
      fail("NotCoskeletal", "level order differs from its simplicial kernel",
           {{"degree", m + 1}, {"level_order", levels_[m + 1].order()},
            {"kernel_order", kern.size()}});
    std::set<std::vector<Elt>> seen;
    for (Elt x = 0; x < levels_[m + 1].order(); ++x) {
      std::vector<Elt> tup(m + 2);
      for (int i = 0; i <= m + 1; ++i) tup[i] = faces_[m][i](x);
      if (!seen.insert(tup).second)
        fail("NotCoskeletal", "two simplices share all faces", {{"degree", m + 1}, {"witness", x}});
    }
  }
}

SimplicialGroup SimplicialGroup::unchecked(std::vector<FiniteGroup> levels,
                                           std::vector<std::vector<GroupHom>> faces,
                                           std::vector<std::vector<GroupHom>> degens,
                                           std::optional<int> coskeletal_above,
                                           std::string label) {
  SimplicialGroup x;
  x.levels_ = std::move(levels);
  x.faces_ = std::move(faces);
  x.degens_ = std::move(degens);
  x.coskeletal_above_ = coskeletal_above;
  x.label_ = std::move(label);
  return x;
}

SimplicialGroup SimplicialGroup::with_label(std::string label) const {
  SimplicialGroup x = *this;
  x.label_ = std::move(label);
  return x;
}

SimplicialGroup dis(const FiniteGroup& g, int d) {
  if (d < 0) fail("OrderViolation", "negative degree", {{"degree", d}});
  std::vector<FiniteGroup> levels(d + 1, g);
  std::vector<std::vector<GroupHom>> faces, degens;
  for (int n = 1; n <= d; ++n)
    faces.emplace_back(n + 1, GroupHom::identity(g));
  for (int n = 0; n < d; ++n)
    degens.emplace_back(n + 1, GroupHom::identity(g));
  std::ostringstream os;
  os << "Dis(" << g.label() << "," << d << ")";
  return SimplicialGroup(std::move(levels), std::move(faces), std::move(degens), std::nullopt,
                         os.str());
}

SimplicialGroup ind(const FiniteGroup& g, int d) {
  if (d < 0) fail("OrderViolation", "negative degree", {{"degree", d}});
  std::ostringstream os;
  os << "Ind(" << g.label() << "," << d << ")";
  std::vector<PowerGroup> pows;
  std::vector<FiniteGroup> levels;
  for (int n = 0; n <= d; ++n) {
    pows.push_back(power_group(g, n + 1, level_tag(g.label() + "^", n + 1)));
    levels.push_back(pows.back().group);
  }
  std::vector<std::vector<GroupHom>> faces, degens;
  for (int n = 1; n <= d; ++n) {
    std::vector<GroupHom> row;
    for (int i = 0; i <= n; ++i) {
      std::vector<Elt> map(levels[n].order());
      for (Elt e = 0; e < levels[n].order(); ++e) {
        auto coords = pows[n].decode(e);
        coords.erase(coords.begin() + i);
        map[e] = pows[n - 1].encode(coords);
      }
      row.push_back(GroupHom::unchecked(levels[n], levels[n - 1], std::move(map)));
    }
    faces.push_back(std::move(row));
  }
  for (int n = 0; n < d; ++n) {
    std::vector<GroupHom> row;
    for (int i = 0; i <= n; ++i) {
      std::vector<Elt> map(levels[n].order());
      for (Elt e = 0; e < levels[n].order(); ++e) {
        auto coords = pows[n].decode(e);
        const Elt dup = coords[i];
        coords.insert(coords.begin() + i, dup);
        map[e] = pows[n + 1].encode(coords);
      }
      row.push_back(GroupHom::unchecked(levels[n], levels[n + 1], std::move(map)));
    }
    degens.push_back(std::move(row));
  }
  return SimplicialGroup(std::move(levels), std::move(faces), std::move(degens), std::nullopt,
                         os.str());
}

Quotient pi0(const SimplicialGroup& x) {
  const FiniteGroup& base = x.level(0);
  std::vector<Elt> seeds;
  if (x.degree() >= 1) {
    const GroupHom& d0 = x.face(1, 0);
    const GroupHom& d1 = x.face(1, 1);
    for (Elt y = 0; y < x.level(1).order(); ++y)
      seeds.push_back(base.mul(d0(y), base.inv(d1(y))));
  }
  Subgroup rels = normal_closure(base, seeds);
  return quotient(base, rels, "pi0(" + x.label() + ")");
}

MooreComplex moore(const SimplicialGroup& x) {
  const int d = x.degree();
  const std::string tag = x.label().empty() ? std::string("X") : x.label();
  std::vector<Subgroup> nsub, dsub;
  std::vector<Subgroup::AsGroup> ngrp;
  for (int n = 0; n <= d; ++n) {
    Subgroup s = Subgroup::whole(x.level(n));
    for (int i = 0; i < n; ++i) s = intersect(s, kernel(x.face(n, i)));
    nsub.push_back(s);
    ngrp.push_back(s.as_group(level_tag("N", n) + "(" + tag + ")"));
  }
  dsub.push_back(Subgroup::trivial(x.level(0)));
  for (int n = 1; n <= d; ++n) {
    std::vector<Elt> seeds;
    for (int i = 0; i < n; ++i)
      for (Elt a = 0; a < x.level(n - 1).order(); ++a) seeds.push_back(x.degen(n - 1, i)(a));
    dsub.push_back(generated_subgroup(x.level(n), seeds));
  }

  std::vector<FiniteGroup> groups;
  for (auto& g : ngrp) groups.push_back(g.group);
  std::vector<GroupHom> diffs;
  std::vector<GroupHom> embeds;
  embeds.push_back(ngrp[0].embed);
  for (int n = 1; n <= d; ++n) {
    std::vector<Elt> map(ngrp[n].group.order());
    for (Elt idx = 0; idx < ngrp[n].group.order(); ++idx) {
      Elt img = x.face(n, n)(ngrp[n].embed(idx));
      Elt t = ngrp[n - 1].index_in_sub[img];
      if (t < 0)
        fail("IdentityViolation", "normalized boundary leaves the normalized subgroup",
             {{"degree", n}, {"witness", idx}});
      map[idx] = t;
    }
    diffs.emplace_back(ngrp[n].group, ngrp[n - 1].group, std::move(map));
    embeds.push_back(ngrp[n].embed);
  }
  ChainComplex chain(0, std::move(groups), std::move(diffs), "N(" + tag + ")");
  return MooreComplex{ProperChainComplex(std::move(chain)), std::move(nsub), std::move(dsub),
                      std::move(embeds)};
}

std::vector<FiniteGroup> homotopy_groups(const SimplicialGroup& x, int max_n) {
  if (max_n < 0) fail("OrderViolation", "negative homotopy range", {{"max_n", max_n}});
  if (x.degree() < max_n + 1)
    fail("OrderViolation", "degree too low for the requested homotopy range",
         {{"degree", x.degree()}, {"max_n", max_n}});
  MooreComplex m = moore(x);
  std::vector<FiniteGroup> out;
  for (int n = 0; n <= max_n; ++n) out.push_back(homology(m.chain, n));
  return out;
}

SimplicialGroup coskeleton_extend(const SimplicialGroup& x, int k, int d) {
  if (k < 0 || k > x.degree() || d < k)
    fail("OrderViolation", "coskeleton parameters outside the degree window",
         {{"k", k}, {"d", d}, {"degree", x.degree()}});
  std::vector<FiniteGroup> levels;
  std::vector<std::vector<GroupHom>> faces, degens;
  for (int n = 0; n <= k && n <= d; ++n) levels.push_back(x.level(n));
  for (int n = 1; n <= k && n <= d; ++n) {
    std::vector<GroupHom> row;
    for (int i = 0; i <= n; ++i) row.push_back(x.face(n, i));
    faces.push_back(std::move(row));
  }
  for (int n = 0; n < k && n < d; ++n) {
    std::vector<GroupHom> row;
    for (int i = 0; i <= n; ++i) row.push_back(x.degen(n, i));
    degens.push_back(std::move(row));
  }

  for (int m = k; m < d; ++m) {
    auto kern = simplicial_kernel(levels[m], m >= 1 ? faces[m - 1] : std::vector<GroupHom>{});
    const int order = static_cast<int>(kern.size());
    if (static_cast<long long>(order) * order > search_budget())
      fail("BudgetExceeded", "simplicial kernel too large to tabulate",
           {{"degree", m + 1}, {"order", order}});
    std::map<std::vector<Elt>, Elt> index;
    for (Elt e = 0; e < order; ++e) index[kern[e]] = e;
    std::vector<Elt> flat(static_cast<size_t>(order) * order);
    std::vector<Elt> prod(m + 2);
    for (Elt a = 0; a < order; ++a)
      for (Elt b = 0; b < order; ++b) {
        for (int i = 0; i <= m + 1; ++i) prod[i] = levels[m].mul(kern[a][i], kern[b][i]);
        auto it = index.find(prod);
        if (it == index.end())
          fail("NotCoskeletal", "simplicial kernel not closed under multiplication",
               {{"degree", m + 1}});  // unreachable on valid data
        flat[static_cast<size_t>(a) * order + b] = it->second;
      }
    FiniteGroup K = FiniteGroup::unchecked(order, std::move(flat), level_tag("K", m + 1));

    std::vector<GroupHom> frow;
    for (int i = 0; i <= m + 1; ++i) {
      std::vector<Elt> map(order);
      for (Elt e = 0; e < order; ++e) map[e] = kern[e][i];
      frow.push_back(GroupHom::unchecked(K, levels[m], std::move(map)));
    }
    std::vector<GroupHom> drow;
    for (int j = 0; j <= m; ++j) {
      std::vector<Elt> map(levels[m].order());
      std::vector<Elt> tup(m + 2);
      for (Elt e = 0; e < levels[m].order(); ++e) {
        for (int i = 0; i <= m + 1; ++i) {
          if (i == j || i == j + 1) tup[i] = e;
          else if (i < j) tup[i] = degens[m - 1][j - 1](faces[m - 1][i](e));
          else tup[i] = degens[m - 1][j](faces[m - 1][i - 1](e));
        }
        auto it = index.find(tup);
        if (it == index.end())
          fail("NotCoskeletal", "induced degeneracy misses the simplicial kernel",
               {{"degree", m}, {"index", j}, {"witness", e}});  // unreachable on valid data
        map[e] = it->second;
      }
      drow.push_back(GroupHom::unchecked(levels[m], K, std::move(map)));
    }
    levels.push_back(K);
    faces.push_back(std::move(frow));
    degens.push_back(std::move(drow));
  }

  if (auto v = SimplicialGroup::find_violation(levels, faces, degens))
    fail("IdentityViolation", "coskeleton extension violates the simplicial identities", *v);
  std::ostringstream os;
  os << "cosk" << k << "(" << x.label() << ")@" << d;
  return SimplicialGroup::unchecked(std::move(levels), std::move(faces), std::move(degens), k,
                                    os.str());
}

// ---- Dold-Kan reconstruction ----------------------------------------------

namespace {

// All monotone surjections [m] ->> [k] in lexicographic order.
std::vector<std::vector<int>> monotone_surjections(int m, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > m) return out;
  std::vector<int> cur(m + 1);
  cur[0] = 0;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == m + 1) {
      if (cur[m] == k) out.push_back(cur);
      return;
    }
    for (int step = 0; step <= 1; ++step) {
      int v = cur[pos - 1] + step;
      if (v > k) continue;
      if (k - v > m - pos) continue;  // not enough room to climb to k
      cur[pos] = v;
      self(self, pos + 1);
    }
  };
  if (m == 0) {
    if (k == 0) out.push_back(cur);
    return out;
  }
  rec(rec, 1);
  return out;
}

struct GammaSummand {
  int k = 0;
  std::vector<int> sigma;
};

struct GammaLevel {
  std::vector<GammaSummand> summands;
  std::vector<FiniteGroup> parts;
  std::vector<long long> suffix;  // suffix[i] = product of orders of parts i..end
  FiniteGroup group;
  std::map<std::pair<int, std::vector<int>>, int> position;

  std::vector<Elt> decode(Elt e) const {
    std::vector<Elt> vals(parts.size());
    long long rest = e;
    for (size_t i = 0; i < parts.size(); ++i) {
      vals[i] = static_cast<Elt>(rest / suffix[i + 1]);
      rest %= suffix[i + 1];
    }
    return vals;
  }
  Elt encode(const std::vector<Elt>& vals) const {
    long long e = 0;
    for (size_t i = 0; i < parts.size(); ++i) e += vals[i] * suffix[i + 1];
    return static_cast<Elt>(e);
  }
};

GammaLevel build_gamma_level(const ChainComplex& c, int m) {
  GammaLevel level;
  long long total = 1;
  for (int k = 0; k <= m; ++k) {
    if (c.trivial_at(k)) continue;
    for (auto& sigma : monotone_surjections(m, k)) {
      level.position[{k, sigma}] = static_cast<int>(level.summands.size());
      level.summands.push_back({k, sigma});
      level.parts.push_back(c.at(k));
      total *= c.at(k).order();
      if (total > search_budget())
        fail("BudgetExceeded", "reconstruction level exceeds the budget",
             {{"degree", m}, {"partial_order", total}});
    }
  }
  const size_t s = level.parts.size();
  level.suffix.assign(s + 1, 1);
  for (size_t i = s; i-- > 0;) level.suffix[i] = level.suffix[i + 1] * level.parts[i].order();
  const int order = static_cast<int>(level.suffix[0]);
  if (static_cast<long long>(order) * order > search_budget())
    fail("BudgetExceeded", "reconstruction level too large to tabulate",
         {{"degree", m}, {"order", order}});

  std::vector<std::vector<Elt>> dec(order);
  for (Elt e = 0; e < order; ++e) dec[e] = level.decode(e);
  std::vector<Elt> flat(static_cast<size_t>(order) * order);
  std::vector<Elt> vals(s);
  for (Elt a = 0; a < order; ++a)
    for (Elt b = 0; b < order; ++b) {
      for (size_t i = 0; i < s; ++i) vals[i] = level.parts[i].mul(dec[a][i], dec[b][i]);
      flat[static_cast<size_t>(a) * order + b] = level.encode(vals);
    }
  level.group = FiniteGroup::unchecked(order, std::move(flat), level_tag("Gamma", m));
  return level;
}

// The simplicial operator Gamma(theta) for monotone theta : [m'] -> [m],
// assembled from the epi-mono factorizations sigma∘theta = iota∘tau: the
// (sigma, tau) component is the identity when iota is the identity, the
// boundary delta_k when iota is the top coface, and zero otherwise.
GroupHom gamma_operator(const ChainComplex& c, const GammaLevel& src, const GammaLevel& dst,
                        const std::vector<int>& theta) {
  struct Route {
    int src_pos;
    int dst_pos;
    bool boundary;
  };
  std::vector<Route> routes;
  for (size_t p = 0; p < src.summands.size(); ++p) {
    const auto& sm = src.summands[p];
    std::vector<int> g(theta.size());
    for (size_t i = 0; i < theta.size(); ++i) g[i] = sm.sigma[theta[i]];
    std::vector<int> values(g);
    values.erase(std::unique(values.begin(), values.end()), values.end());
    const int j = static_cast<int>(values.size()) - 1;
    bool copy = (j == sm.k);  // iota surjective, hence the identity
    bool boundary = (j == sm.k - 1 && values.back() == sm.k - 1);  // misses only the top
    if (!copy && !boundary) continue;
    std::vector<int> tau(g.size());
    for (size_t i = 0; i < g.size(); ++i)
      tau[i] = static_cast<int>(std::lower_bound(values.begin(), values.end(), g[i]) -
                                values.begin());
    auto it = dst.position.find({j, tau});
    if (it == dst.position.end()) continue;  // target part is trivial
    routes.push_back({static_cast<int>(p), it->second, boundary});
  }

  std::vector<Elt> map(src.group.order());
  std::vector<Elt> out(dst.parts.size());
  for (Elt e = 0; e < src.group.order(); ++e) {
    auto vals = src.decode(e);
    std::fill(out.begin(), out.end(), FiniteGroup::id);
    for (const auto& r : routes) {
      Elt v = vals[r.src_pos];
      if (r.boundary) v = c.diff(src.summands[r.src_pos].k)(v);
      out[r.dst_pos] = dst.parts[r.dst_pos].mul(out[r.dst_pos], v);
    }
    map[e] = dst.encode(out);
  }
  return GroupHom::unchecked(src.group, dst.group, std::move(map));
}

}  // namespace

SimplicialGroup dold_kan_gamma(const ChainComplex& c, int d) {
  if (d < 0) fail("OrderViolation", "negative degree", {{"degree", d}});
  if (!c.is_zero_complex() && (c.support_lo() < 0 || c.support_hi() > d))
    fail("OrderViolation", "complex not supported in [0, d]",
         {{"support_lo", c.support_lo()}, {"support_hi", c.support_hi()}, {"d", d}});
  for (int k = c.lo(); k <= c.hi(); ++k)
    if (!c.at(k).is_abelian())
      fail("NotAbelian", "reconstruction needs an abelian complex",
           {{"degree", k}, {"group", c.at(k).label()}});

  std::vector<GammaLevel> levels;
  for (int m = 0; m <= d; ++m) levels.push_back(build_gamma_level(c, m));

  std::vector<FiniteGroup> groups;
  for (auto& l : levels) groups.push_back(l.group);
  std::vector<std::vector<GroupHom>> faces, degens;
  for (int m = 1; m <= d; ++m) {
    std::vector<GroupHom> row;
    for (int i = 0; i <= m; ++i) {
      std::vector<int> theta(m);  // coface [m-1] -> [m] missing i
      for (int t = 0; t < m; ++t) theta[t] = t < i ? t : t + 1;
      row.push_back(gamma_operator(c, levels[m], levels[m - 1], theta));
    }
    faces.push_back(std::move(row));
  }
  for (int m = 0; m < d; ++m) {
    std::vector<GroupHom> row;
    for (int i = 0; i <= m; ++i) {
      std::vector<int> theta(m + 2);  // codegeneracy [m+1] -> [m] repeating i
      for (int t = 0; t <= m + 1; ++t) theta[t] = t <= i ? t : t - 1;
      row.push_back(gamma_operator(c, levels[m], levels[m + 1], theta));
    }
    degens.push_back(std::move(row));
  }
  SimplicialGroup gamma(std::move(groups), std::move(faces), std::move(degens), std::nullopt,
                        "Gamma(" + c.label() + ")@" + std::to_string(d));

  // Round-trip assurance: normalizing the reconstruction recovers the input.
  MooreComplex n = moore(gamma);
  for (int k = 0; k <= d; ++k)
    if (n.chain.complex().at(k).order() != c.at(k).order())
      fail("RoundTripFailed", "normalized reconstruction has the wrong order",
           {{"degree", k}, {"got", n.chain.complex().at(k).order()}, {"want", c.at(k).order()}});
  std::vector<FiniteGroup> padded_groups;
  std::vector<GroupHom> padded_diffs;
  for (int k = 0; k <= d; ++k) padded_groups.push_back(c.at(k));
  for (int k = 1; k <= d; ++k) padded_diffs.push_back(c.diff(k));
  ChainComplex padded(0, std::move(padded_groups), std::move(padded_diffs), c.label());
  if (!find_chain_isomorphism(n.chain.complex(), padded))
    fail("RoundTripFailed", "normalized reconstruction is not isomorphic to the input",
         {{"complex", c.label()}, {"degree", d}});
  return gamma;
}

std::vector<MembershipFlags> classify_membership(const SimplicialGroup& x) {
  MooreComplex m = moore(x);
  const ChainComplex& n = m.chain.complex();
  const int d = x.degree();
  std::vector<MembershipFlags> out(d + 1);
  for (int level = 0; level <= d; ++level) {
    MembershipFlags f;
    f.m_ngeq = true;
    for (int i = level + 1; i <= d; ++i) f.m_ngeq = f.m_ngeq && n.trivial_at(i);
    f.m_geq = true;
    for (int i = 0; i < level; ++i) f.m_geq = f.m_geq && n.trivial_at(i);
    GroupHom next = n.diff(level + 1);  // the zero hom at the truncation edge
    Subgroup img = image(next);
    bool epi = normal_closure(n.at(level), img.elements()).is_whole();
    f.ker_cot = f.m_geq && epi;
    bool above = true;
    for (int i = level + 2; i <= d; ++i) above = above && n.trivial_at(i);
    f.f_tr = above && next.is_injective();
    out[level] = f;
  }
  return out;
}

TComplexReport is_group_T_complex(const SimplicialGroup& x) {
  MooreComplex m = moore(x);
  for (int n = 1; n <= x.degree(); ++n) {
    Subgroup inter = intersect(m.n_in_level[n], m.d_in_level[n]);
    if (!inter.is_trivial_subgroup())
      return TComplexReport{false, n, inter.elements()[1]};
  }
  return TComplexReport{true, -1, -1};
}

}  // namespace moorekit
