#pragma once

#include <span>
#include <string>
#include <vector>

namespace qm {

/// Dense element index; the identity is always 0.
using Elem = int;

/// A finite group given by its multiplication table. Immutable once built;
/// every constructor validates the group axioms exhaustively.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(cyclic(1)) {}

  static FiniteGroup cyclic(int n);
  /// Mixed-radix product: the first factor is the most significant digit.
  static FiniteGroup direct_product(std::span<const FiniteGroup> factors);
  /// Row-major table, table[x][y] = x*y. Throws ValidationError naming the
  /// failing element or triple. Associativity is checked exhaustively.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table);

  int order() const { return order_; }
  Elem mul(Elem x, Elem y) const { return mult_[static_cast<std::size_t>(x) * order_ + y]; }
  Elem inv(Elem x) const { return inv_[x]; }
  bool contains(Elem x) const { return x >= 0 && x < order_; }
  bool is_abelian() const;
  int element_order(Elem x) const;
  /// x^k for any integer k.
  Elem pow(Elem x, long long k) const;

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  // Cyclic and product tables are associative by construction; explicit
  // tables are checked on every triple.
  FiniteGroup(int order, std::vector<Elem> mult, bool check_associativity);
  void validate(bool check_associativity);

  int order_ = 0;
  std::vector<Elem> mult_;
  std::vector<Elem> inv_;
};

/// A subgroup as a sorted element set of some parent group.
class Subgroup {
 public:
  Subgroup() = default;
  /// Validates closure; throws ValidationError otherwise.
  Subgroup(const FiniteGroup& parent, std::vector<Elem> elements);

  const std::vector<Elem>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  int parent_order() const { return static_cast<int>(member_.size()); }
  bool contains(Elem x) const {
    return x >= 0 && x < static_cast<int>(member_.size()) && member_[x];
  }
  /// Position of x within elements(), or -1.
  int index_of(Elem x) const;

 private:
  std::vector<Elem> elements_;
  std::vector<char> member_;
};

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Elem> generators);

/// The subgroup re-indexed as a group in its own right: element k of the
/// result is subgroup.elements()[k].
FiniteGroup induced_group(const FiniteGroup& parent, const Subgroup& h);

struct DoubleCosetPartition {
  std::vector<std::vector<Elem>> classes;  // each sorted; ordered by least member
  std::vector<int> class_of;               // element -> class index
  int count() const { return static_cast<int>(classes.size()); }
};

/// Partition of G into classes H g K.
DoubleCosetPartition double_cosets(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

/// Validated injective homomorphism source -> target.
class Embedding {
 public:
  Embedding() = default;
  /// map[x] is the image of source element x. Throws ValidationError naming the
  /// failing pair when map is not an injective homomorphism.
  Embedding(FiniteGroup source, FiniteGroup target, std::vector<Elem> map);

  const FiniteGroup& source() const { return source_; }
  const FiniteGroup& target() const { return target_; }
  Elem operator()(Elem x) const { return map_[x]; }
  const std::vector<Elem>& map() const { return map_; }
  const Subgroup& image() const { return image_; }
  /// Preimage of an image element, or -1 when y is outside the image.
  Elem preimage(Elem y) const { return preimage_[y]; }

 private:
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Elem> map_;
  std::vector<Elem> preimage_;
  Subgroup image_;
};

/// Free-function form of the Embedding constructor.
Embedding check_embedding(const FiniteGroup& source, const FiniteGroup& target,
                          std::vector<Elem> map);

}  // namespace qm
