#include "twistrep/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace twistrep {

namespace {

// Order profile: multiset of element orders. Cheap isomorphism invariant.
std::map<int, int> order_profile(const FiniteGroup& g) {
  std::map<int, int> prof;
  for (int i = 0; i < g.order(); ++i) ++prof[g.element_order(i)];
  return prof;
}

struct Search {
  const FiniteGroup& a;
  const FiniteGroup& b;
  const std::vector<int>& gens;      // generating set of a
  const FiniteGroup::Words words;    // a's elements as words in gens
  std::vector<int> image;            // a-index -> b-index, -1 if unset

  Search(const FiniteGroup& a_, const FiniteGroup& b_, const std::vector<int>& gens_)
      : a(a_), b(b_), gens(gens_), words(a_.words(gens_)), image(a_.order(), -1) {}

  // With all generator images fixed, propagate along BFS words and check
  // bijectivity plus the full homomorphism property.
  bool complete(const std::vector<int>& gen_images) {
    std::fill(image.begin(), image.end(), -1);
    image[a.identity()] = b.identity();
    std::vector<char> used(b.order(), 0);
    used[b.identity()] = 1;
    for (int x : words.bfs_order) {
      if (x == a.identity()) continue;
      int img = b.mul(image[words.parent[x]], gen_images[words.via[x]]);
      if (image[x] == -1) {
        if (used[img]) return false;
        image[x] = img;
        used[img] = 1;
      } else if (image[x] != img) {
        return false;
      }
    }
    for (int i = 0; i < a.order(); ++i)
      for (int j = 0; j < a.order(); ++j)
        if (image[a.mul(i, j)] != b.mul(image[i], image[j])) return false;
    return true;
  }

  bool extend(size_t pos, std::vector<int>& gen_images) {
    if (pos == gens.size()) return complete(gen_images);
    int want_order = a.element_order(gens[pos]);
    for (int cand = 0; cand < b.order(); ++cand) {
      if (b.element_order(cand) != want_order) continue;
      gen_images[pos] = cand;
      if (extend(pos + 1, gen_images)) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.is_abelian() != b.is_abelian()) return std::nullopt;
  if (order_profile(a) != order_profile(b)) return std::nullopt;

  Search s(a, b, a.generating_set());
  std::vector<int> gen_images(a.generating_set().size(), -1);
  if (a.generating_set().empty()) {
    // Trivial group.
    return std::vector<int>{b.identity()};
  }
  if (s.extend(0, gen_images)) return s.image;
  return std::nullopt;
}

bool isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace twistrep
