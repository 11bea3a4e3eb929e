#include "moorekit/zoo.hpp"

#include <algorithm>
#include <map>

namespace moorekit {

FiniteGroup cyclic(int n) {
  if (n < 1) fail("NotAGroup", "cyclic order must be positive", {{"n", n}});
  std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup::from_table(t, "C" + std::to_string(n));
}

FiniteGroup klein4() {
  return direct_product(cyclic(2), cyclic(2), "V4").group;
}

FiniteGroup dihedral(int n) {
  if (n < 1) fail("NotAGroup", "dihedral parameter must be positive", {{"n", n}});
  // elements (r, s), r rotation, s flip; encoded r*2 + s
  const int total = 2 * n;
  std::vector<std::vector<Elt>> t(total, std::vector<Elt>(total));
  auto enc = [&](int r, int s) { return r * 2 + s; };
  for (int r1 = 0; r1 < n; ++r1)
    for (int s1 = 0; s1 < 2; ++s1)
      for (int r2 = 0; r2 < n; ++r2)
        for (int s2 = 0; s2 < 2; ++s2) {
          const int r = s1 == 0 ? (r1 + r2) % n : ((r1 - r2) % n + n) % n;
          t[enc(r1, s1)][enc(r2, s2)] = enc(r, s1 ^ s2);
        }
  return FiniteGroup::from_table(t, "D" + std::to_string(n));
}

FiniteGroup dicyclic(int m) {
  if (m < 1) fail("NotAGroup", "dicyclic parameter must be positive", {{"m", m}});
  // <a, b | a^(2m) = e, b^2 = a^m, b a b^-1 = a^-1>, elements a^i b^j,
  // encoded i*2 + j with i mod 2m, j in {0,1}
  const int n2 = 2 * m, total = 4 * m;
  std::vector<std::vector<Elt>> t(total, std::vector<Elt>(total));
  auto enc = [&](int i, int j) { return i * 2 + j; };
  auto wrap = [&](int i) { return ((i % n2) + n2) % n2; };
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n2; ++k)
        for (int l = 0; l < 2; ++l) {
          int r, s;
          if (j == 0) {
            r = wrap(i + k);
            s = l;
          } else if (l == 0) {
            r = wrap(i - k);
            s = 1;
          } else {
            r = wrap(i - k + m);
            s = 0;
          }
          t[enc(i, j)][enc(k, l)] = enc(r, s);
        }
  std::string label = m == 2 ? "Q8" : "Dic" + std::to_string(m);
  return FiniteGroup::from_table(t, std::move(label));
}

FiniteGroup perm_group(int points, const std::vector<std::vector<Elt>>& gens,
                       std::string label) {
  std::vector<Elt> idperm(points);
  for (int i = 0; i < points; ++i) idperm[i] = i;
  std::vector<std::vector<Elt>> members{idperm};
  auto known = [&](const std::vector<Elt>& p) {
    return std::find(members.begin(), members.end(), p) != members.end();
  };
  for (const auto& g : gens)
    if (!known(g)) members.push_back(g);
  auto compose = [&](const std::vector<Elt>& p, const std::vector<Elt>& q) {
    std::vector<Elt> r(points);
    for (int i = 0; i < points; ++i) r[i] = p[q[i]];
    return r;
  };
  for (size_t head = 0; head < members.size(); ++head)
    for (size_t i = 0; i < members.size(); ++i) {
      for (const auto& c : {compose(members[head], members[i]),
                            compose(members[i], members[head])})
        if (!known(c)) members.push_back(c);
    }
  std::sort(members.begin(), members.end());  // identity is lexicographically first
  const int n = static_cast<int>(members.size());
  std::map<std::vector<Elt>, int> index;
  for (int i = 0; i < n; ++i) index[members[i]] = i;
  std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = index.at(compose(members[i], members[j]));
  return FiniteGroup::from_table(t, std::move(label));
}

FiniteGroup symmetric3() {
  return perm_group(3, {{1, 0, 2}, {1, 2, 0}}, "S3");
}

FiniteGroup alternating4() {
  return perm_group(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4");
}

FiniteGroup alternating5() {
  return perm_group(5, {{1, 2, 0, 3, 4}, {1, 2, 3, 4, 0}}, "A5");
}

FiniteGroup by_name(const std::string& name) {
  auto x = name.find('x');
  if (x != std::string::npos) {
    FiniteGroup left = by_name(name.substr(0, x));
    FiniteGroup right = by_name(name.substr(x + 1));
    return direct_product(left, right, name).group;
  }
  if (name == "1" || name == "C1") return trivial_group();
  if (name == "V4") return klein4();
  if (name == "S3") return symmetric3();
  if (name == "A4") return alternating4();
  if (name == "A5") return alternating5();
  if (name == "Q8") return dicyclic(2);
  auto numeric_tail = [&](size_t prefix) -> int {
    const std::string digits = name.substr(prefix);
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      return -1;
    return std::stoi(digits);
  };
  if (name.size() > 1 && name[0] == 'C') {
    int n = numeric_tail(1);
    if (n > 0) return cyclic(n);
  }
  if (name.size() > 1 && name[0] == 'D' && name.rfind("Dic", 0) != 0) {
    int n = numeric_tail(1);
    if (n > 0) return dihedral(n);
  }
  if (name.rfind("Dic", 0) == 0) {
    int m = numeric_tail(3);
    if (m > 0) return dicyclic(m);
  }
  fail("UnknownGroup", "no stock group with this name", {{"name", name}});
}

std::vector<FiniteGroup> iso_classes_upto(int max_order) {
  static const char* names[] = {
      "C1", "C2", "C3", "C4", "V4", "C5", "C6", "S3", "C7",
      "C8", "C4xC2", "C2xC2xC2", "D4", "Q8",
      "C9", "C3xC3", "C10", "D5", "C11",
      "C12", "C6xC2", "D6", "A4", "Dic3"};
  std::vector<FiniteGroup> out;
  for (const char* n : names) {
    FiniteGroup g = by_name(n);
    if (g.order() <= max_order) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace moorekit
