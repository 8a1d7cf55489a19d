#include "twistrep/group.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <queue>
#include <set>

namespace twistrep {

namespace {

std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
  // (a o b)(x) = a[b[x]]
  std::vector<int> c(a.size());
  for (size_t x = 0; x < a.size(); ++x) c[x] = a[b[x]];
  return c;
}

bool is_permutation(const std::vector<int>& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::string perm_label(const std::vector<int>& p) {
  // Cycle notation; identity prints as "e".
  std::string out;
  std::vector<char> done(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = static_cast<size_t>(p[j]);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

}  // namespace

GroupPtr FiniteGroup::from_table(std::string name, std::vector<std::string> labels,
                                 int identity, std::vector<std::vector<int>> table,
                                 int order_cap) {
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->name_ = std::move(name);
  g->labels_ = std::move(labels);
  g->identity_ = identity;
  g->table_ = std::move(table);
  if (g->labels_.empty()) {
    g->labels_.resize(g->table_.size());
    for (size_t i = 0; i < g->labels_.size(); ++i) g->labels_[i] = "g" + std::to_string(i);
  }
  g->validate(order_cap);
  g->finalize();
  return g;
}

GroupPtr FiniteGroup::from_permutations(std::string name, int degree,
                                        const std::vector<std::vector<int>>& generators,
                                        std::optional<int> declared_order, int order_cap) {
  if (degree <= 0) throw InputError("group '" + name + "': degree must be positive");
  if (generators.empty()) throw InputError("group '" + name + "': no generators given");
  for (const auto& p : generators) {
    if (!is_permutation(p, degree))
      throw InputError("group '" + name + "': generator is not a permutation of 0.." +
                       std::to_string(degree - 1));
  }

  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);

  // BFS closure, discovery order fixes element indices.
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop();
    for (const auto& gen : generators) {
      auto prod = compose_perm(elems[cur], gen);
      if (index.emplace(prod, static_cast<int>(elems.size())).second) {
        elems.push_back(prod);
        todo.push(static_cast<int>(elems.size()) - 1);
        if (declared_order && static_cast<int>(elems.size()) > *declared_order)
          throw InputError("group '" + name + "': generator closure exceeds declared order " +
                           std::to_string(*declared_order));
        if (static_cast<int>(elems.size()) > order_cap)
          throw InputError("group '" + name + "': generator closure exceeds order cap " +
                           std::to_string(order_cap));
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  if (declared_order && *declared_order != n)
    throw InputError("group '" + name + "': generator closure has order " + std::to_string(n) +
                     ", declared " + std::to_string(*declared_order));

  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto prod = compose_perm(elems[i], elems[j]);
      auto it = index.find(prod);
      if (it == index.end())
        throw InputError("group '" + name + "': closure not closed (internal)");
      table[i][j] = it->second;
    }

  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = perm_label(elems[i]);

  return from_table(std::move(name), std::move(labels), 0, std::move(table), order_cap);
}

void FiniteGroup::validate(int order_cap) const {
  const int n = static_cast<int>(table_.size());
  if (n == 0) throw InputError("group '" + name_ + "': empty table");
  if (n > order_cap)
    throw InputError("group '" + name_ + "': order " + std::to_string(n) +
                     " exceeds cap " + std::to_string(order_cap));
  if (static_cast<int>(labels_.size()) != n)
    throw InputError("group '" + name_ + "': " + std::to_string(labels_.size()) +
                     " labels for " + std::to_string(n) + " elements");
  if (identity_ < 0 || identity_ >= n)
    throw InputError("group '" + name_ + "': identity index out of range");

  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table_[i].size()) != n)
      throw InputError("group '" + name_ + "': row " + std::to_string(i) + " has wrong length");
    std::vector<char> row(n, 0), col(n, 0);
    for (int j = 0; j < n; ++j) {
      int r = table_[i][j], c = table_[j][i];
      if (r < 0 || r >= n || c < 0 || c >= n)
        throw InputError("group '" + name_ + "': table entry out of range");
      if (row[r]++) throw InputError("group '" + name_ + "': not a Latin square (row " +
                                     std::to_string(i) + ")");
      if (col[c]++) throw InputError("group '" + name_ + "': not a Latin square (column " +
                                     std::to_string(i) + ")");
    }
  }
  for (int i = 0; i < n; ++i)
    if (table_[identity_][i] != i || table_[i][identity_] != i)
      throw InputError("group '" + name_ + "': declared identity is not an identity");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table_[table_[i][j]][k] != table_[i][table_[j][k]])
          throw InputError("group '" + name_ + "': associativity fails at (" +
                           std::to_string(i) + "," + std::to_string(j) + "," +
                           std::to_string(k) + ")");
}

void FiniteGroup::finalize() {
  const int n = order();
  inverse_.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (table_[i][j] == identity_) {
        inverse_[i] = j;
        break;
      }

  element_order_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    int x = i, ord = 1;
    while (x != identity_) {
      x = table_[x][i];
      ++ord;
    }
    element_order_[i] = ord;
  }

  abelian_ = true;
  for (int i = 0; i < n && abelian_; ++i)
    for (int j = i + 1; j < n; ++j)
      if (table_[i][j] != table_[j][i]) {
        abelian_ = false;
        break;
      }

  // Conjugacy classes, canonical order: (size, least element index).
  std::vector<char> assigned(n, 0);
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    std::set<int> cls;
    for (int g = 0; g < n; ++g) cls.insert(table_[table_[g][i]][inverse_[g]]);
    std::vector<int> v(cls.begin(), cls.end());
    for (int x : v) assigned[x] = 1;
    classes.push_back(std::move(v));
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  classes_ = std::move(classes);
  class_of_.assign(n, -1);
  for (size_t c = 0; c < classes_.size(); ++c)
    for (int x : classes_[c]) class_of_[x] = static_cast<int>(c);

  // Greedy generating set over element indices.
  std::vector<int> gens;
  std::vector<int> span = generated_subgroup({});
  while (static_cast<int>(span.size()) < n) {
    std::vector<char> in_span(n, 0);
    for (int x : span) in_span[x] = 1;
    int next = -1;
    for (int i = 0; i < n; ++i)
      if (!in_span[i]) {
        next = i;
        break;
      }
    gens.push_back(next);
    span = generated_subgroup(gens);
  }
  generators_ = std::move(gens);
}

int FiniteGroup::pow(int g, long long e) const {
  int base = g;
  if (e < 0) {
    base = inverse_[g];
    e = -e;
  }
  int acc = identity_;
  while (e > 0) {
    acc = table_[acc][base];
    --e;
  }
  return acc;
}

std::vector<int> FiniteGroup::generated_subgroup(const std::vector<int>& gens) const {
  std::set<int> span{identity_};
  std::queue<int> todo;
  todo.push(identity_);
  for (int g : gens)
    if (span.insert(g).second) todo.push(g);
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop();
    for (int g : gens) {
      int p = table_[cur][g];
      if (span.insert(p).second) todo.push(p);
      p = table_[g][cur];
      if (span.insert(p).second) todo.push(p);
    }
    int iv = inverse_[cur];
    if (span.insert(iv).second) todo.push(iv);
  }
  return {span.begin(), span.end()};
}

FiniteGroup::Words FiniteGroup::words(const std::vector<int>& gens) const {
  const int n = order();
  Words w;
  w.parent.assign(n, -2);
  w.via.assign(n, -2);
  w.parent[identity_] = -1;
  w.via[identity_] = -1;
  w.bfs_order.push_back(identity_);
  std::queue<int> todo;
  todo.push(identity_);
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop();
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      int nxt = table_[cur][gens[gi]];
      if (w.parent[nxt] == -2) {
        w.parent[nxt] = cur;
        w.via[nxt] = static_cast<int>(gi);
        w.bfs_order.push_back(nxt);
        todo.push(nxt);
      }
    }
  }
  if (static_cast<int>(w.bfs_order.size()) != n)
    throw InputError("group '" + name_ + "': given elements do not generate the group");
  return w;
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<int> members, std::string group_name)
    : parent_(std::move(parent)), members_(std::move(members)) {
  const int n = parent_->order();
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty()) throw InputError("subgroup: empty member set");
  for (int m : members_)
    if (m < 0 || m >= n) throw InputError("subgroup: member index out of range");

  to_local_.assign(n, -1);
  for (size_t i = 0; i < members_.size(); ++i) to_local_[members_[i]] = static_cast<int>(i);

  if (to_local_[parent_->identity()] < 0)
    throw InputError("subgroup of '" + parent_->name() + "': does not contain the identity");
  for (int a : members_) {
    if (to_local_[parent_->inv(a)] < 0)
      throw InputError("subgroup of '" + parent_->name() + "': not closed under inverse at " +
                       parent_->label(a));
    for (int b : members_)
      if (to_local_[parent_->mul(a, b)] < 0)
        throw InputError("subgroup of '" + parent_->name() + "': not closed at " +
                         parent_->label(a) + "*" + parent_->label(b));
  }

  const int m = order();
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = parent_->label(members_[i]);
    for (int j = 0; j < m; ++j)
      table[i][j] = to_local_[parent_->mul(members_[i], members_[j])];
  }
  if (group_name.empty()) group_name = parent_->name() + "_sub";
  local_group_ = FiniteGroup::from_table(std::move(group_name), std::move(labels),
                                         to_local_[parent_->identity()], std::move(table),
                                         std::max(kDefaultOrderCap, m));
}

bool Subgroup::is_normal() const {
  for (int g = 0; g < parent_->order(); ++g)
    for (int k : members_)
      if (!contains(parent_->mul(parent_->mul(g, k), parent_->inv(g)))) return false;
  return true;
}

// ---------------------------------------------------------------------------

Character::Character(GroupPtr group, int order_n, std::vector<int> exponents)
    : group_(std::move(group)), n_(order_n), exponents_(std::move(exponents)) {
  if (n_ <= 0) throw InputError("character: order must be positive");
  const int n = group_->order();
  if (static_cast<int>(exponents_.size()) != n)
    throw InputError("character: exponent array length " + std::to_string(exponents_.size()) +
                     " does not match group order " + std::to_string(n));
  for (int& e : exponents_) {
    e %= n_;
    if (e < 0) e += n_;
  }
  if (exponents_[group_->identity()] != 0)
    throw InputError("character: exponent of identity is not 0");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (exponents_[group_->mul(i, j)] != (exponents_[i] + exponents_[j]) % n_)
        throw InputError("character: homomorphism fails at " + group_->label(i) + "*" +
                         group_->label(j));
}

std::complex<double> Character::value(int g) const {
  double arg = 2.0 * std::numbers::pi * exponents_[g] / n_;
  return {std::cos(arg), std::sin(arg)};
}

bool Character::is_trivial() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e == 0; });
}

int Character::image_order() const {
  int g = n_;
  for (int e : exponents_) g = std::gcd(g, e);
  return n_ / g;
}

Character Character::trivial(GroupPtr group, int order_n) {
  return Character(group, order_n, std::vector<int>(group->order(), 0));
}

// ---------------------------------------------------------------------------

ActionValidation validate_action(const FiniteGroup& g, int order_n,
                                 const std::vector<std::vector<int>>& auts) {
  ActionValidation report;
  const int n = g.order();
  if (order_n <= 0) {
    report.violations.push_back("order must be positive");
    return report;
  }
  if (static_cast<int>(auts.size()) != order_n) {
    report.violations.push_back("expected " + std::to_string(order_n) + " permutations, got " +
                                std::to_string(auts.size()));
    return report;
  }
  for (int k = 0; k < order_n; ++k) {
    if (!is_permutation(auts[k], n)) {
      report.violations.push_back("auts[" + std::to_string(k) +
                                  "] is not a permutation of the element indices");
      return report;
    }
  }
  for (int i = 0; i < n; ++i)
    if (auts[0][i] != i) {
      report.violations.push_back("auts[0] is not the identity permutation");
      break;
    }
  for (int k = 0; k < order_n; ++k) {
    if (auts[k][g.identity()] != g.identity())
      report.violations.push_back("auts[" + std::to_string(k) + "] does not fix the identity");
    bool hom_ok = true;
    for (int i = 0; i < n && hom_ok; ++i)
      for (int j = 0; j < n; ++j)
        if (auts[k][g.mul(i, j)] != g.mul(auts[k][i], auts[k][j])) {
          report.violations.push_back("auts[" + std::to_string(k) +
                                      "] is not an automorphism: breaks at " + g.label(i) + "*" +
                                      g.label(j));
          hom_ok = false;
          break;
        }
  }
  for (int a = 0; a < order_n; ++a)
    for (int b = 0; b < order_n; ++b) {
      int c = (a + b) % order_n;
      bool ok = true;
      for (int i = 0; i < n; ++i)
        if (auts[a][auts[b][i]] != auts[c][i]) {
          ok = false;
          break;
        }
      if (!ok)
        report.violations.push_back("auts[" + std::to_string(a) + "] o auts[" +
                                    std::to_string(b) + "] != auts[" + std::to_string(c) + "]");
    }
  return report;
}

CyclicAction::CyclicAction(GroupPtr group, int order_n, std::vector<std::vector<int>> auts)
    : group_(std::move(group)), n_(order_n), auts_(std::move(auts)) {
  auto report = validate_action(*group_, n_, auts_);
  if (!report.ok()) {
    std::string msg = "cyclic action invalid:";
    for (const auto& v : report.violations) msg += "\n  - " + v;
    throw InputError(msg);
  }
}

CyclicAction CyclicAction::trivial(GroupPtr group, int order_n) {
  std::vector<int> id(group->order());
  std::iota(id.begin(), id.end(), 0);
  return CyclicAction(group, order_n, std::vector<std::vector<int>>(order_n, id));
}

bool CyclicAction::is_trivial() const {
  for (const auto& a : auts_)
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != static_cast<int>(i)) return false;
  return true;
}

// ---------------------------------------------------------------------------

Subgroup kernel(const Character& chi) {
  std::vector<int> members;
  for (int i = 0; i < chi.group().order(); ++i)
    if (chi.exponent(i) == 0) members.push_back(i);
  Subgroup k(chi.group_ptr(), std::move(members), chi.group().name() + "_K");
  if (!k.is_normal())
    throw InputError("kernel: not normal (internal inconsistency)");  // unreachable for characters
  return k;
}

QuotientData quotient(GroupPtr g, const Subgroup& k) {
  if (&k.parent() != g.get())
    throw InputError("quotient: subgroup does not belong to the given group");
  if (!k.is_normal()) throw InputError("quotient: subgroup is not normal");

  const int n = g->order();
  QuotientData q;
  q.projection.assign(n, -1);
  // Cosets ordered by least member; the least member is the canonical lift.
  for (int i = 0; i < n; ++i) {
    if (q.projection[i] >= 0) continue;
    int idx = static_cast<int>(q.lifts.size());
    q.lifts.push_back(i);
    for (int h : k.members()) q.projection[g->mul(i, h)] = idx;
  }
  const int m = static_cast<int>(q.lifts.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int a = 0; a < m; ++a) {
    labels[a] = "[" + g->label(q.lifts[a]) + "]";
    for (int b = 0; b < m; ++b) table[a][b] = q.projection[g->mul(q.lifts[a], q.lifts[b])];
  }
  q.gamma = FiniteGroup::from_table(g->name() + "/" + std::to_string(k.order()), std::move(labels),
                                    q.projection[g->identity()], std::move(table),
                                    std::max(kDefaultOrderCap, m));
  // Surjective homomorphism with the right kernel by construction; spot-check.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (q.projection[g->mul(i, j)] != q.gamma->mul(q.projection[i], q.projection[j]))
        throw InputError("quotient: projection is not a homomorphism (internal)");
  return q;
}

bool check_star(const Character& chi, const CyclicAction& act) {
  if (&chi.group() != &act.group())
    throw InputError("check_star: character and action live on different groups");
  if (chi.modulus() != act.modulus())
    throw InputError("check_star: order mismatch (character mod " +
                     std::to_string(chi.modulus()) + ", action mod " +
                     std::to_string(act.modulus()) + ")");
  for (int k = 0; k < act.modulus(); ++k)
    for (int i = 0; i < chi.group().order(); ++i)
      if (chi.exponent(act.apply(k, i)) != chi.exponent(i)) return false;
  return true;
}

std::vector<Character> characters_into(GroupPtr g, int n) {
  if (n <= 0) throw InputError("characters_into: order must be positive");
  const auto& gens = g->generating_set();
  std::vector<Character> result;
  if (gens.empty()) {
    result.push_back(Character::trivial(g, n));
    return result;
  }
  auto w = g->words(gens);
  const int ng = static_cast<int>(gens.size());
  std::vector<int> assign(ng, 0);
  std::vector<int> exps(g->order());
  while (true) {
    // Propagate exponents along BFS words, then verify the full hom property.
    exps[g->identity()] = 0;
    for (int x : w.bfs_order)
      if (x != g->identity()) exps[x] = (exps[w.parent[x]] + assign[w.via[x]]) % n;
    bool ok = true;
    for (int i = 0; i < g->order() && ok; ++i)
      for (int j = 0; j < g->order(); ++j)
        if (exps[g->mul(i, j)] != (exps[i] + exps[j]) % n) {
          ok = false;
          break;
        }
    if (ok) result.emplace_back(g, n, exps);

    int pos = ng - 1;
    while (pos >= 0 && assign[pos] == n - 1) assign[pos--] = 0;
    if (pos < 0) break;
    ++assign[pos];
  }
  return result;
}

}  // namespace twistrep
