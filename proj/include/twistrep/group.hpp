#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twistrep/error.hpp"

namespace twistrep {

inline constexpr int kDefaultOrderCap = 96;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group given by its Cayley table. Immutable after construction;
/// the constructor verifies the table is a Latin square, associative, and
/// consistent with the declared identity (exact integer checks, no tolerance).
class FiniteGroup {
 public:
  static GroupPtr from_table(std::string name, std::vector<std::string> labels,
                             int identity, std::vector<std::vector<int>> table,
                             int order_cap = kDefaultOrderCap);

  /// Builds the group generated by permutations of {0..degree-1} via closure.
  /// `declared_order`, when present, must match the closure size exactly.
  static GroupPtr from_permutations(std::string name, int degree,
                                    const std::vector<std::vector<int>>& generators,
                                    std::optional<int> declared_order = std::nullopt,
                                    int order_cap = kDefaultOrderCap);

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int i, int j) const { return table_[i][j]; }
  int inv(int i) const { return inverse_[i]; }
  int identity() const { return identity_; }

  /// g^e for any integer exponent (negative uses the inverse).
  int pow(int g, long long e) const;

  const std::string& name() const { return name_; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  int element_order(int i) const { return element_order_[i]; }
  bool is_abelian() const { return abelian_; }

  /// Conjugacy classes in canonical order: sorted by (size, least element
  /// index); indices inside a class ascend.
  const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
  int class_of(int i) const { return class_of_[i]; }

  /// Small generating set, chosen greedily over element indices. Deterministic.
  const std::vector<int>& generating_set() const { return generators_; }

  /// Closure of a subset under multiplication and inverse.
  std::vector<int> generated_subgroup(const std::vector<int>& gens) const;

  /// BFS word decomposition over `gens`: every element is reached as
  /// parent * gens[via]; identity has parent = via = -1. Order of `order()`
  /// entries in BFS discovery order. Throws InputError if gens do not generate.
  struct Words {
    std::vector<int> parent;
    std::vector<int> via;
    std::vector<int> bfs_order;
  };
  Words words(const std::vector<int>& gens) const;

  bool same_table(const FiniteGroup& other) const {
    return table_ == other.table_ && identity_ == other.identity_;
  }

 private:
  FiniteGroup() = default;
  void validate(int order_cap) const;
  void finalize();  // inverse, orders, classes, generators

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
  std::vector<int> element_order_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::vector<int> generators_;
  bool abelian_ = false;
};

/// A subgroup as a sorted set of parent element indices. Construction checks
/// closure, identity and inverses; `as_group` reindexes to a standalone group.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<int> members, std::string group_name = "");

  const FiniteGroup& parent() const { return *parent_; }
  GroupPtr parent_ptr() const { return parent_; }
  const std::vector<int>& members() const { return members_; }
  int order() const { return static_cast<int>(members_.size()); }
  int index_in_parent() const { return parent_->order() / order(); }

  bool contains(int parent_index) const { return to_local_[parent_index] >= 0; }
  int to_local(int parent_index) const { return to_local_[parent_index]; }
  int to_parent(int local_index) const { return members_[local_index]; }

  bool is_normal() const;

  /// The subgroup as a FiniteGroup in its own right (local indices).
  GroupPtr as_group() const { return local_group_; }

 private:
  GroupPtr parent_;
  std::vector<int> members_;
  std::vector<int> to_local_;
  GroupPtr local_group_;
};

/// An exact character G -> mu_n, stored as exponents mod n:
/// chi(g_i) = exp(2*pi*i * exponents[i] / n). Construction verifies the
/// homomorphism property with integer arithmetic.
class Character {
 public:
  Character(GroupPtr group, int order_n, std::vector<int> exponents);

  const FiniteGroup& group() const { return *group_; }
  GroupPtr group_ptr() const { return group_; }
  int modulus() const { return n_; }
  int exponent(int g) const { return exponents_[g]; }
  const std::vector<int>& exponents() const { return exponents_; }
  std::complex<double> value(int g) const;

  bool is_trivial() const;
  /// Order of Im(chi) as a subgroup of mu_n.
  int image_order() const;

  static Character trivial(GroupPtr group, int order_n = 1);

 private:
  GroupPtr group_;
  int n_;
  std::vector<int> exponents_;
};

/// Outcome of validating a candidate cyclic action; empty violation list
/// means the data defines a genuine homomorphism mu_n -> Aut(G).
struct ActionValidation {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ActionValidation validate_action(const FiniteGroup& g, int order_n,
                                 const std::vector<std::vector<int>>& auts);

/// A homomorphism mu_n -> Aut(G) given as permutations of element indices;
/// auts[k] is the automorphism attached to exp(2*pi*i*k/n). Constructor
/// validates (throws InputError listing the violations).
class CyclicAction {
 public:
  CyclicAction(GroupPtr group, int order_n, std::vector<std::vector<int>> auts);

  static CyclicAction trivial(GroupPtr group, int order_n);

  const FiniteGroup& group() const { return *group_; }
  GroupPtr group_ptr() const { return group_; }
  int modulus() const { return n_; }
  /// Image of element g under the automorphism indexed by k (taken mod n).
  int apply(int k, int g) const { return auts_[((k % n_) + n_) % n_][g]; }
  const std::vector<std::vector<int>>& auts() const { return auts_; }

  bool is_trivial() const;

 private:
  GroupPtr group_;
  int n_;
  std::vector<std::vector<int>> auts_;
};

/// Quotient G/K for normal K: the quotient group, the projection array and
/// canonical lifts (least element index in each coset).
struct QuotientData {
  GroupPtr gamma;
  std::vector<int> projection;  // |G| -> |Gamma|
  std::vector<int> lifts;       // |Gamma| -> |G|
};

/// ker(chi) as a subgroup of chi's group; verified normal.
Subgroup kernel(const Character& chi);

QuotientData quotient(GroupPtr g, const Subgroup& k);

/// Condition tying the character to the action: chi(g^lambda) = chi(g) for
/// all g and all lambda in mu_n. Throws InputError on order mismatch.
bool check_star(const Character& chi, const CyclicAction& act);

/// All exact characters G -> mu_n (homomorphisms, not necessarily onto),
/// enumerated by brute force over generator exponent assignments.
/// Deterministic order (lexicographic in the exponent vector).
std::vector<Character> characters_into(GroupPtr g, int n);

}  // namespace twistrep
