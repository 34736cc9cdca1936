#include "nmg/group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace nmg {

const char* errc_name(errc c) {
  switch (c) {
    case errc::parse_error: return "ParseError";
    case errc::size_cap: return "SizeCapExceeded";
    case errc::closure_cap: return "ClosureCapExceeded";
    case errc::group_mismatch: return "GroupMismatch";
    case errc::unsupported: return "Unsupported";
    case errc::bad_weight: return "BadWeight";
    case errc::zero_element: return "ZeroElement";
    case errc::nonabelian: return "NonAbelian";
    case errc::not_idempotent: return "NotIdempotent";
    case errc::not_norm_one: return "NotNormOne";
    case errc::inconsistent_structure: return "InconsistentStructure";
    case errc::not_nm: return "NotNM";
    case errc::not_a_group: return "NotAGroup";
    case errc::inconsistent_images: return "InconsistentImages";
    case errc::not_generating: return "NotGenerating";
    case errc::no_extension: return "NoExtension";
    case errc::not_positive: return "NotPositive";
    case errc::not_bijective: return "NotBijective";
    case errc::recomposition_mismatch: return "RecompositionMismatch";
    case errc::io_error: return "IoError";
  }
  return "Error";
}

cplx root_of_unity(long long num, long long den) {
  const double two_pi = 6.283185307179586476925286766559;
  long long r = num % den;
  if (r < 0) r += den;
  // exact quarter turns, so +-1 and +-i carry no floating dust
  if ((4 * r) % den == 0) {
    switch (4 * r / den) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
    }
  }
  double ang = two_pi * static_cast<double>(r) / static_cast<double>(den);
  return {std::cos(ang), std::sin(ang)};
}

int FiniteGroup::element_order(int a) const {
  int x = a, n = 1;
  while (x != 0) {
    x = op(x, a);
    ++n;
  }
  return n;
}

bool FiniteGroup::is_abelian() const {
  int n = order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

int FiniteGroup::exponent() const {
  long long e = 1;
  for (int a = 0; a < order(); ++a) e = std::lcm(e, static_cast<long long>(element_order(a)));
  return static_cast<int>(e);
}

bool Subgroup::contains(int g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
  if (&a == &b) return true;
  return a.name == b.name && a.table == b.table;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return same_group(*a, *b);
}

// ---- validation ----------------------------------------------------------

namespace {

void validate_table(const FiniteGroup& g) {
  int n = g.order();
  if (n <= 0) throw Error(errc::inconsistent_structure, "empty group");
  if (g.table.size() != static_cast<size_t>(n) * n)
    throw Error(errc::inconsistent_structure, "table size mismatch");
  for (int v : g.table)
    if (v < 0 || v >= n) throw Error(errc::inconsistent_structure, "table entry out of range");
  for (int a = 0; a < n; ++a)
    if (g.op(0, a) != a || g.op(a, 0) != a)
      throw Error(errc::inconsistent_structure, "index 0 is not a two-sided identity");
  // two-sided inverses
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n; ++b)
      if (g.op(a, b) == 0 && g.op(b, a) == 0) { found = true; break; }
    if (!found) throw Error(errc::inconsistent_structure, "missing inverse");
  }
  // associativity: exhaustive for small tables, Light's test via a
  // generating set otherwise
  if (n <= 300) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
            throw Error(errc::inconsistent_structure, "not associative");
  } else {
    std::vector<int> gens = generating_set(g);
    for (int t : gens)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (g.op(g.op(a, b), t) != g.op(a, g.op(b, t)))
            throw Error(errc::inconsistent_structure, "not associative");
  }
}

}  // namespace

GroupPtr finish_group(FiniteGroup g) {
  validate_table(g);
  int n = g.order();
  g.inverse.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.op(a, b) == 0) { g.inverse[a] = b; break; }
  return std::make_shared<const FiniteGroup>(std::move(g));
}

// ---- constructions -------------------------------------------------------

GroupPtr make_cyclic(int n) {
  FiniteGroup g;
  g.name = "C" + std::to_string(n);
  g.elem_names.resize(n);
  g.table.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) g.elem_names[i] = std::to_string(i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.table[static_cast<size_t>(i) * n + j] = (i + j) % n;
  return finish_group(std::move(g));
}

namespace {

GroupPtr make_dihedral(int n) {
  // indices 0..n-1 rotations r^i, n..2n-1 reflections r^i f
  int m = 2 * n;
  FiniteGroup g;
  g.name = "D" + std::to_string(n);
  g.elem_names.resize(m);
  for (int i = 0; i < m; ++i) g.elem_names[i] = std::to_string(i);
  g.table.resize(static_cast<size_t>(m) * m);
  auto mul = [n](int x, int y) {
    if (x < n && y < n) return (x + y) % n;
    if (x < n && y >= n) return (y - n + x) % n + n;
    if (x >= n && y < n) return (x - n - y + n) % n + n;
    return (x - y + n) % n;  // both reflections
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g.table[static_cast<size_t>(i) * m + j] = mul(i, j);
  return finish_group(std::move(g));
}

GroupPtr make_quaternion() {
  // 0:+1 1:-1 2:+i 3:-i 4:+j 5:-j 6:+k 7:-k
  // unit products with sign: u in {1,i,j,k} -> 0..3
  static const int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{+1, +1, +1, +1},
                                      {+1, -1, +1, -1},
                                      {+1, -1, -1, +1},
                                      {+1, +1, -1, -1}};
  // unit_prod/unit_sign encode: i*i=-1, i*j=k, i*k=-j, j*i=-k, j*j=-1,
  // j*k=i, k*i=j, k*j=-i, k*k=-1
  FiniteGroup g;
  g.name = "Q8";
  g.elem_names = {"0", "1", "2", "3", "4", "5", "6", "7"};
  g.table.resize(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, sa = a % 2 ? -1 : 1;
      int ub = b / 2, sb = b % 2 ? -1 : 1;
      int u = unit_prod[ua][ub];
      int s = sa * sb * unit_sign[ua][ub];
      g.table[static_cast<size_t>(a) * 8 + b] = 2 * u + (s < 0 ? 1 : 0);
    }
  return finish_group(std::move(g));
}

GroupPtr make_symmetric(int n) {
  // elements: permutation words of {0..n-1} in lexicographic order, so the
  // identity word is index 0; product (p*q)(i) = p[q[i]]
  std::vector<std::vector<int>> perms;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 0);
  do {
    perms.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  int m = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index_of;
  for (int i = 0; i < m; ++i) index_of[perms[i]] = i;
  FiniteGroup g;
  g.name = "S" + std::to_string(n);
  g.elem_names.resize(m);
  for (int i = 0; i < m; ++i) g.elem_names[i] = std::to_string(i);
  g.table.resize(static_cast<size_t>(m) * m);
  std::vector<int> prod(n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      for (int i = 0; i < n; ++i) prod[i] = perms[a][perms[b][i]];
      g.table[static_cast<size_t>(a) * m + b] = index_of[prod];
    }
  return finish_group(std::move(g));
}

}  // namespace

GroupPtr direct_product(const std::vector<GroupPtr>& factors, const std::string& name) {
  if (factors.empty()) throw Error(errc::parse_error, "empty product");
  if (factors.size() == 1) return factors[0];
  long long total = 1;
  for (const auto& f : factors) total *= f->order();
  int n = static_cast<int>(total);
  int k = static_cast<int>(factors.size());
  FiniteGroup g;
  g.name = name;
  g.product_literals = true;
  g.elem_names.resize(n);
  g.table.resize(static_cast<size_t>(n) * n);
  // mixed-radix decode, lexicographic tuple order
  auto decode = [&](int idx, std::vector<int>& tuple) {
    for (int i = k - 1; i >= 0; --i) {
      int o = factors[i]->order();
      tuple[i] = idx % o;
      idx /= o;
    }
  };
  std::vector<int> ta(k), tb(k);
  for (int a = 0; a < n; ++a) {
    decode(a, ta);
    std::string nm = "(";
    for (int i = 0; i < k; ++i) {
      if (i) nm += ",";
      nm += std::to_string(ta[i]);
    }
    nm += ")";
    g.elem_names[a] = nm;
  }
  for (int a = 0; a < n; ++a) {
    decode(a, ta);
    for (int b = 0; b < n; ++b) {
      decode(b, tb);
      int idx = 0;
      for (int i = 0; i < k; ++i) idx = idx * factors[i]->order() + factors[i]->op(ta[i], tb[i]);
      g.table[static_cast<size_t>(a) * n + b] = idx;
    }
  }
  return finish_group(std::move(g));
}

namespace {

GroupPtr parse_atom(const std::string& tok, int size_cap) {
  if (tok.empty()) throw Error(errc::parse_error, "empty group token");
  if (tok == "Q8") return make_quaternion();
  char kind = tok[0];
  if (kind != 'C' && kind != 'D' && kind != 'S')
    throw Error(errc::parse_error, "unknown group token '" + tok + "'");
  if (tok.size() < 2) throw Error(errc::parse_error, "missing order in '" + tok + "'");
  for (size_t i = 1; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i])))
      throw Error(errc::parse_error, "bad order in '" + tok + "'");
  long long n = 0;
  try {
    n = std::stoll(tok.substr(1));
  } catch (...) {
    throw Error(errc::parse_error, "bad order in '" + tok + "'");
  }
  if (kind == 'C') {
    if (n < 1) throw Error(errc::parse_error, "C<n> requires n >= 1");
    if (n > size_cap) throw Error(errc::size_cap, tok);
    return make_cyclic(static_cast<int>(n));
  }
  if (kind == 'D') {
    if (n < 2) throw Error(errc::parse_error, "D<n> requires n >= 2");
    if (2 * n > size_cap) throw Error(errc::size_cap, tok);
    return make_dihedral(static_cast<int>(n));
  }
  if (n < 2 || n > 5) throw Error(errc::parse_error, "S<n> requires 2 <= n <= 5");
  return make_symmetric(static_cast<int>(n));
}

}  // namespace

ParsedGroup parse_group_expr(const std::string& spec, int size_cap) {
  if (spec == "Z") return ParsedGroup{nullptr, true};
  std::vector<std::string> toks;
  std::string cur;
  for (char c : spec) {
    if (c == 'x') {
      toks.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  toks.push_back(cur);
  std::vector<GroupPtr> factors;
  long long total = 1;
  for (const auto& t : toks) {
    if (t == "Z")
      throw Error(errc::parse_error, "Z cannot appear in a product");
    factors.push_back(parse_atom(t, size_cap));
    total *= factors.back()->order();
    if (total > size_cap) throw Error(errc::size_cap, spec);
  }
  if (factors.size() == 1) return ParsedGroup{factors[0], false};
  return ParsedGroup{direct_product(factors, spec), false};
}

GroupPtr make_group(const std::string& spec, int size_cap) {
  ParsedGroup p = parse_group_expr(spec, size_cap);
  if (p.is_integer) throw Error(errc::unsupported, "operation not available on Z");
  return p.finite;
}

int parse_element_literal(const FiniteGroup& g, const std::string& lit) {
  if (!lit.empty() && lit.front() == '(') {
    // tuple literal; match against the canonical names
    std::string norm;
    for (char c : lit)
      if (!std::isspace(static_cast<unsigned char>(c))) norm += c;
    for (int i = 0; i < g.order(); ++i)
      if (g.elem_names[i] == norm) return i;
    throw Error(errc::parse_error, "unknown element literal '" + lit + "'");
  }
  try {
    size_t pos = 0;
    long long v = std::stoll(lit, &pos);
    if (pos != lit.size()) throw Error(errc::parse_error, "bad element literal '" + lit + "'");
    if (v < 0 || v >= g.order())
      throw Error(errc::parse_error, "element index out of range: " + lit);
    return static_cast<int>(v);
  } catch (const Error&) {
    throw;
  } catch (...) {
    throw Error(errc::parse_error, "bad element literal '" + lit + "'");
  }
}

// ---- structure -----------------------------------------------------------

std::vector<int> closure(const FiniteGroup& g, std::vector<int> seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> work;
  auto push = [&](int v) {
    if (!in[v]) {
      in[v] = 1;
      work.push_back(v);
    }
  };
  push(0);
  for (int s : seed) push(s);
  for (size_t i = 0; i < work.size(); ++i)
    for (size_t j = 0; j < work.size(); ++j) {
      push(g.op(work[i], work[j]));
      if (in[g.op(work[j], work[i])] == 0) push(g.op(work[j], work[i]));
    }
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

Subgroup subgroup_from_members(GroupPtr g, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members[0] != 0)
    throw Error(errc::inconsistent_structure, "subgroup must contain the identity");
  for (int a : members) {
    if (a < 0 || a >= g->order())
      throw Error(errc::inconsistent_structure, "member out of range");
    if (!std::binary_search(members.begin(), members.end(), g->inv(a)))
      throw Error(errc::inconsistent_structure, "member set not closed under inverses");
    for (int b : members)
      if (!std::binary_search(members.begin(), members.end(), g->op(a, b)))
        throw Error(errc::inconsistent_structure, "member set not closed under products");
  }
  return Subgroup{std::move(g), std::move(members)};
}

Subgroup whole_group(GroupPtr g) {
  std::vector<int> m(g->order());
  std::iota(m.begin(), m.end(), 0);
  return Subgroup{std::move(g), std::move(m)};
}

Subgroup trivial_subgroup(GroupPtr g) { return Subgroup{std::move(g), {0}}; }

Subgroup generated_subgroup(GroupPtr g, const std::vector<int>& gens) {
  auto m = closure(*g, gens);
  return Subgroup{std::move(g), std::move(m)};
}

std::vector<Subgroup> subgroups(const GroupPtr& g, int size_cap) {
  if (g->order() > size_cap) throw Error(errc::size_cap, g->name);
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work;
  std::vector<int> triv{0};
  seen.insert(triv);
  work.push_back(triv);
  for (size_t i = 0; i < work.size(); ++i) {
    std::vector<int> h = work[i];
    for (int x = 1; x < g->order(); ++x) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      std::vector<int> seed = h;
      seed.push_back(x);
      auto ext = closure(*g, seed);
      if (seen.insert(ext).second) work.push_back(std::move(ext));
    }
  }
  std::vector<std::vector<int>> all(seen.begin(), seen.end());
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Subgroup> out;
  out.reserve(all.size());
  for (auto& m : all) out.push_back(Subgroup{g, std::move(m)});
  return out;
}

bool is_normal(const Subgroup& h, const Subgroup& ambient) {
  if (!same_group(h.parent, ambient.parent))
    throw Error(errc::group_mismatch, "subgroups of different groups");
  const FiniteGroup& g = *h.parent;
  for (int n : h.members)
    if (!ambient.contains(n)) return false;
  for (int a : ambient.members)
    for (int n : h.members)
      if (!h.contains(g.op(g.op(a, n), g.inv(a)))) return false;
  return true;
}

MaterializedSubgroup materialize(const Subgroup& h) {
  const GroupPtr& parent = h.parent;
  int n = h.order();
  if (n == parent->order()) {
    MaterializedSubgroup m;
    m.group = parent;
    m.embed.resize(n);
    std::iota(m.embed.begin(), m.embed.end(), 0);
    m.to_local = m.embed;
    return m;
  }
  MaterializedSubgroup m;
  m.embed = h.members;
  m.to_local.assign(parent->order(), -1);
  for (int i = 0; i < n; ++i) m.to_local[m.embed[i]] = i;
  FiniteGroup g;
  g.name = parent->name + "<" + std::to_string(n) + ">";
  g.elem_names.resize(n);
  g.table.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) g.elem_names[i] = parent->elem_names[m.embed[i]];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g.table[static_cast<size_t>(i) * n + j] = m.to_local[parent->op(m.embed[i], m.embed[j])];
  m.group = finish_group(std::move(g));
  return m;
}

QuotientGroup quotient(const Subgroup& h, const Subgroup& k) {
  if (!same_group(h.parent, k.parent))
    throw Error(errc::group_mismatch, "subgroups of different groups");
  for (int m : k.members)
    if (!h.contains(m)) throw Error(errc::inconsistent_structure, "K not contained in H");
  if (!is_normal(k, h)) throw Error(errc::inconsistent_structure, "K not normal in H");
  const FiniteGroup& g = *h.parent;

  QuotientGroup q;
  q.parent = h.parent;
  q.coset_of.assign(g.order(), -1);
  // cosets keyed by minimal member, reps in ascending order; the coset of
  // the identity has rep 0, hence quotient identity lands at index 0
  for (int a : h.members) {
    if (q.coset_of[a] != -1) continue;
    int rep = a;
    std::vector<int> coset;
    for (int kk : k.members) coset.push_back(g.op(a, kk));
    for (int c : coset) rep = std::min(rep, c);
    int idx = static_cast<int>(q.rep.size());
    q.rep.push_back(rep);
    for (int c : coset) q.coset_of[c] = idx;
  }
  // reps were discovered in ascending member order and each coset is keyed
  // by its minimum, so q.rep is sorted already; re-sort defensively is not
  // needed but a stable canonical order is: sort and remap
  std::vector<int> order_idx(q.rep.size());
  std::iota(order_idx.begin(), order_idx.end(), 0);
  std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) { return q.rep[a] < q.rep[b]; });
  std::vector<int> new_pos(q.rep.size());
  for (size_t i = 0; i < order_idx.size(); ++i) new_pos[order_idx[i]] = static_cast<int>(i);
  std::vector<int> reps_sorted(q.rep.size());
  for (size_t i = 0; i < q.rep.size(); ++i) reps_sorted[new_pos[i]] = q.rep[i];
  q.rep = std::move(reps_sorted);
  for (int& c : q.coset_of)
    if (c != -1) c = new_pos[c];

  int n = static_cast<int>(q.rep.size());
  FiniteGroup qg;
  qg.name = h.parent->name + "/K" + std::to_string(k.order());
  qg.elem_names.resize(n);
  for (int i = 0; i < n; ++i) qg.elem_names[i] = g.elem_names[q.rep[i]] + "K";
  qg.table.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      qg.table[static_cast<size_t>(i) * n + j] = q.coset_of[g.op(q.rep[i], q.rep[j])];
  q.group = finish_group(std::move(qg));

  MaterializedSubgroup hm = materialize(h);
  q.h_group = hm.group;
  q.h_embed = hm.embed;
  GroupHom proj;
  proj.domain = q.h_group;
  proj.codomain = q.group;
  proj.image.resize(h.order());
  for (int i = 0; i < h.order(); ++i) proj.image[i] = q.coset_of[hm.embed[i]];
  q.projection = std::move(proj);
  return q;
}

Subgroup center(const Subgroup& h) {
  const FiniteGroup& g = *h.parent;
  std::vector<int> z;
  for (int a : h.members) {
    bool central = true;
    for (int b : h.members)
      if (g.op(a, b) != g.op(b, a)) { central = false; break; }
    if (central) z.push_back(a);
  }
  return Subgroup{h.parent, std::move(z)};
}

Subgroup center(const GroupPtr& g) { return center(whole_group(g)); }

std::vector<int> generating_set(const FiniteGroup& g) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> members{0};
  in[0] = 1;
  std::vector<int> gens;
  auto extend = [&](int x) {
    size_t start = members.size();
    members.push_back(x);
    in[x] = 1;
    for (size_t i = 0; i < members.size(); ++i) {
      size_t jfrom = i >= start ? 0 : start;
      for (size_t j = jfrom; j < members.size(); ++j) {
        int p = g.op(members[i], members[j]);
        if (!in[p]) { in[p] = 1; members.push_back(p); }
        p = g.op(members[j], members[i]);
        if (!in[p]) { in[p] = 1; members.push_back(p); }
      }
    }
  };
  for (int x = 1; x < g.order(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    extend(x);
  }
  return gens;
}

bool is_group_hom(const GroupHom& h) {
  const FiniteGroup& f = *h.domain;
  const FiniteGroup& g = *h.codomain;
  if (h.image.size() != static_cast<size_t>(f.order())) return false;
  if (h.image[0] != 0) return false;
  for (int a = 0; a < f.order(); ++a)
    for (int b = 0; b < f.order(); ++b)
      if (h.image[f.op(a, b)] != g.op(h.image[a], h.image[b])) return false;
  return true;
}

std::vector<GroupHom> group_homomorphisms(const GroupPtr& f, const GroupPtr& g, int size_cap) {
  if (f->order() > size_cap || g->order() > size_cap) throw Error(errc::size_cap, "hom enumeration");
  // greedy generators of F with derivation chains u = parent * gen
  std::vector<int> gens;
  std::vector<int> parent(f->order(), -1), via(f->order(), -1);
  std::vector<int> added_order;  // elements in derivation order
  {
    std::vector<char> in(f->order(), 0);
    in[0] = 1;
    added_order.push_back(0);
    auto grow = [&]() {
      bool changed = true;
      while (changed) {
        changed = false;
        for (size_t i = 0; i < added_order.size(); ++i) {
          int u = added_order[i];
          for (size_t gi = 0; gi < gens.size(); ++gi) {
            int v = f->op(u, gens[gi]);
            if (!in[v]) {
              in[v] = 1;
              parent[v] = u;
              via[v] = static_cast<int>(gi);
              added_order.push_back(v);
              changed = true;
            }
          }
        }
      }
    };
    for (int x = 1; x < f->order(); ++x) {
      if (in[x]) continue;
      gens.push_back(x);
      parent[x] = 0;
      via[x] = static_cast<int>(gens.size()) - 1;
      in[x] = 1;
      added_order.push_back(x);
      grow();
    }
  }
  int k = static_cast<int>(gens.size());
  std::vector<int> gen_order(k);
  for (int i = 0; i < k; ++i) gen_order[i] = f->element_order(gens[i]);
  // candidate images per generator: order must divide the generator's order
  std::vector<std::vector<int>> cands(k);
  for (int i = 0; i < k; ++i)
    for (int t = 0; t < g->order(); ++t)
      if (gen_order[i] % g->element_order(t) == 0) cands[i].push_back(t);

  std::vector<GroupHom> out;
  std::vector<int> choice(k, 0);
  std::vector<int> image(f->order());
  auto try_tuple = [&](const std::vector<int>& tuple) {
    image[0] = 0;
    for (size_t i = 1; i < added_order.size(); ++i) {
      int u = added_order[i];
      image[u] = g->op(image[parent[u]], tuple[via[u]]);
    }
    for (int a = 0; a < f->order(); ++a)
      for (int b = 0; b < f->order(); ++b)
        if (image[f->op(a, b)] != g->op(image[a], image[b])) return false;
    return true;
  };
  // lexicographic sweep over candidate tuples
  std::vector<int> tuple(k);
  std::vector<size_t> pos(k, 0);
  if (k == 0) {
    GroupHom h{f, g, {0}};
    out.push_back(std::move(h));
    return out;
  }
  bool done = false;
  while (!done) {
    for (int i = 0; i < k; ++i) tuple[i] = cands[i][pos[i]];
    if (try_tuple(tuple)) out.push_back(GroupHom{f, g, image});
    int i = k - 1;
    while (i >= 0) {
      if (++pos[i] < cands[i].size()) break;
      pos[i] = 0;
      --i;
    }
    if (i < 0) done = true;
  }
  return out;
}

// ---- characters ----------------------------------------------------------

namespace {

int subgroup_exponent(const Subgroup& k) {
  long long e = 1;
  for (int m : k.members) e = std::lcm(e, static_cast<long long>(k.parent->element_order(m)));
  return static_cast<int>(e);
}

}  // namespace

cplx Character::value(int g) const {
  return root_of_unity(exponent_of(g), modulus);
}

int Character::exponent_of(int g) const {
  auto it = std::lower_bound(subgroup.members.begin(), subgroup.members.end(), g);
  if (it == subgroup.members.end() || *it != g)
    throw Error(errc::inconsistent_structure, "element not in character domain");
  return exponents[it - subgroup.members.begin()];
}

bool Character::is_trivial() const {
  for (int e : exponents)
    if (e != 0) return false;
  return true;
}

int Character::order() const {
  long long o = 1;
  for (int e : exponents)
    if (e != 0) o = std::lcm(o, static_cast<long long>(modulus / std::gcd(e, modulus)));
  return static_cast<int>(o);
}

Subgroup Character::kernel() const {
  std::vector<int> ker;
  for (size_t i = 0; i < subgroup.members.size(); ++i)
    if (exponents[i] == 0) ker.push_back(subgroup.members[i]);
  return Subgroup{subgroup.parent, std::move(ker)};
}

Character trivial_character(const Subgroup& k) {
  Character c;
  c.subgroup = k;
  c.modulus = 1;
  c.exponents.assign(k.members.size(), 0);
  return c;
}

std::vector<Character> characters(const Subgroup& k) {
  int m = subgroup_exponent(k);
  MaterializedSubgroup km = materialize(k);
  GroupPtr zm = make_cyclic(m);
  auto homs = group_homomorphisms(km.group, zm);
  std::vector<Character> out;
  out.reserve(homs.size());
  for (const auto& h : homs) {
    Character c;
    c.subgroup = k;
    c.modulus = m;
    c.exponents.resize(k.members.size());
    for (size_t i = 0; i < k.members.size(); ++i) c.exponents[i] = h.image[i];
    out.push_back(std::move(c));
  }
  return out;
}

Subgroup commutator_subgroup(const Subgroup& h) {
  const FiniteGroup& g = *h.parent;
  std::vector<int> comms;
  for (int a : h.members)
    for (int b : h.members)
      comms.push_back(g.op(g.op(a, b), g.op(g.inv(a), g.inv(b))));
  auto m = closure(g, comms);
  // restrict to H (commutators of H lie in H already)
  return Subgroup{h.parent, std::move(m)};
}

}  // namespace nmg
