#include "qm/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qm/error.hpp"

namespace qm {

FiniteGroup::FiniteGroup(int order, std::vector<Elem> mult, bool check_associativity)
    : order_(order), mult_(std::move(mult)), inv_(order, -1) {
  validate(check_associativity);
}

void FiniteGroup::validate(bool check_associativity) {
  if (order_ < 1) throw ValidationError("group order must be positive");
  if (mult_.size() != static_cast<std::size_t>(order_) * order_)
    throw ValidationError("multiplication table is not order x order");
  for (Elem v : mult_)
    if (v < 0 || v >= order_) throw ValidationError("table entry out of range: " + std::to_string(v));
  for (Elem x = 0; x < order_; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x)
      throw ValidationError("0 is not an identity: fails at element " + std::to_string(x));
  }
  auto& inv = inv_;
  for (Elem x = 0; x < order_; ++x) {
    inv[x] = -1;
    for (Elem y = 0; y < order_; ++y) {
      if (mul(x, y) == 0 && mul(y, x) == 0) {
        inv[x] = y;
        break;
      }
    }
    if (inv[x] < 0) throw ValidationError("element " + std::to_string(x) + " has no inverse");
  }
  if (!check_associativity) return;
  for (Elem x = 0; x < order_; ++x)
    for (Elem y = 0; y < order_; ++y)
      for (Elem z = 0; z < order_; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
          std::ostringstream os;
          os << "table is not associative at (" << x << ", " << y << ", " << z << ")";
          throw ValidationError(os.str());
        }
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw ValidationError("cyclic order must be positive, got " + std::to_string(n));
  std::vector<Elem> mult(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mult[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  return FiniteGroup(n, std::move(mult), false);
}

FiniteGroup FiniteGroup::direct_product(std::span<const FiniteGroup> factors) {
  if (factors.empty()) return cyclic(1);
  long long order = 1;
  for (const auto& f : factors) {
    order *= f.order();
    if (order > 1024) throw ValidationError("direct product too large");
  }
  const int n = static_cast<int>(order);
  auto digits = [&](int x) {
    std::vector<int> d(factors.size());
    for (std::size_t k = factors.size(); k-- > 0;) {
      d[k] = x % factors[k].order();
      x /= factors[k].order();
    }
    return d;
  };
  std::vector<Elem> mult(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    auto dx = digits(x);
    for (int y = 0; y < n; ++y) {
      auto dy = digits(y);
      int z = 0;
      for (std::size_t k = 0; k < factors.size(); ++k) z = z * factors[k].order() + factors[k].mul(dx[k], dy[k]);
      mult[static_cast<std::size_t>(x) * n + y] = z;
    }
  }
  return FiniteGroup(n, std::move(mult), false);
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw ValidationError("empty multiplication table");
  std::vector<Elem> mult;
  mult.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw ValidationError("table row " + std::to_string(i) + " has wrong length");
    mult.insert(mult.end(), table[i].begin(), table[i].end());
  }
  return FiniteGroup(n, std::move(mult), true);
}

bool FiniteGroup::is_abelian() const {
  for (Elem x = 0; x < order_; ++x)
    for (Elem y = x + 1; y < order_; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

int FiniteGroup::element_order(Elem x) const {
  int k = 1;
  for (Elem y = x; y != 0; y = mul(y, x)) ++k;
  return k;
}

Elem FiniteGroup::pow(Elem x, long long k) const {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  k %= element_order(x);
  Elem r = 0;
  for (long long i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<Elem> elements)
    : elements_(std::move(elements)), member_(parent.order(), 0) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (Elem x : elements_) {
    if (!parent.contains(x)) throw ValidationError("subgroup element out of range: " + std::to_string(x));
    member_[x] = 1;
  }
  if (elements_.empty() || elements_.front() != 0) throw ValidationError("subgroup must contain the identity 0");
  for (Elem x : elements_) {
    if (!member_[parent.inv(x)])
      throw ValidationError("subgroup not closed under inverse at " + std::to_string(x));
    for (Elem y : elements_)
      if (!member_[parent.mul(x, y)])
        throw ValidationError("subgroup not closed under product at (" + std::to_string(x) + ", " +
                              std::to_string(y) + ")");
  }
}

int Subgroup::index_of(Elem x) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || *it != x) return -1;
  return static_cast<int>(it - elements_.begin());
}

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Elem> generators) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> members{0};
  in[0] = 1;
  for (Elem x : generators)
    if (!g.contains(x)) throw ValidationError("generator out of range: " + std::to_string(x));
  // Right-multiply by generators until closed; in a finite group this also
  // yields inverses.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Elem s : generators) {
      Elem y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  return Subgroup(g, std::move(members));
}

FiniteGroup induced_group(const FiniteGroup& parent, const Subgroup& h) {
  const auto& el = h.elements();
  const int n = h.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = h.index_of(parent.mul(el[i], el[j]));
  return FiniteGroup::from_table(table);
}

DoubleCosetPartition double_cosets(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  if (h.parent_order() != g.order() || k.parent_order() != g.order())
    throw ValidationError("subgroups do not belong to the given group");
  DoubleCosetPartition out;
  out.class_of.assign(g.order(), -1);
  for (Elem x = 0; x < g.order(); ++x) {
    if (out.class_of[x] >= 0) continue;
    const int id = out.count();
    std::vector<Elem> cls;
    for (Elem a : h.elements())
      for (Elem b : k.elements()) {
        Elem y = g.mul(g.mul(a, x), b);
        if (out.class_of[y] < 0) {
          out.class_of[y] = id;
          cls.push_back(y);
        }
      }
    std::sort(cls.begin(), cls.end());
    out.classes.push_back(std::move(cls));
  }
  return out;
}

Embedding::Embedding(FiniteGroup source, FiniteGroup target, std::vector<Elem> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (static_cast<int>(map_.size()) != source_.order())
    throw ValidationError("embedding map must be total on the source");
  for (Elem y : map_)
    if (!target_.contains(y)) throw ValidationError("embedding image out of range: " + std::to_string(y));
  for (Elem x = 0; x < source_.order(); ++x)
    for (Elem y = 0; y < source_.order(); ++y)
      if (map_[source_.mul(x, y)] != target_.mul(map_[x], map_[y])) {
        std::ostringstream os;
        os << "not a homomorphism: map(" << x << "*" << y << ") = " << map_[source_.mul(x, y)]
           << " but map(" << x << ")*map(" << y << ") = " << target_.mul(map_[x], map_[y]);
        throw ValidationError(os.str());
      }
  preimage_.assign(target_.order(), -1);
  for (Elem x = 0; x < source_.order(); ++x) {
    if (preimage_[map_[x]] >= 0) {
      std::ostringstream os;
      os << "not injective: " << preimage_[map_[x]] << " and " << x << " both map to " << map_[x];
      throw ValidationError(os.str());
    }
    preimage_[map_[x]] = x;
  }
  image_ = Subgroup(target_, map_);
}

Embedding check_embedding(const FiniteGroup& source, const FiniteGroup& target, std::vector<Elem> map) {
  return Embedding(source, target, std::move(map));
}

}  // namespace qm
