#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrc {

using Elem = std::uint32_t;

struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyFamily : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultGroupCap = 100000;

// Finite group stored as a full Cayley table. Element 0 is not required to be
// the identity, but every constructor here puts it there.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  FiniteGroup(std::vector<Elem> cayley, std::size_t n, std::vector<std::string> labels);

  std::size_t order() const { return n_; }
  Elem identity() const { return id_; }
  Elem op(Elem a, Elem b) const { return cayley_[std::size_t(a) * n_ + b]; }
  Elem inverse(Elem a) const { return inv_[a]; }
  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool abelian() const { return abelian_; }

  // n·a with the group operation, by doubling.
  Elem power(Elem a, std::uint64_t n) const;
  std::size_t element_order(Elem a) const;

  // Position of a in the declared total order. Defaults to index order.
  std::size_t rank(Elem a) const { return rank_.empty() ? a : rank_[a]; }
  void set_order(std::vector<std::size_t> rank);

  Elem find_label(const std::string& s) const;

 private:
  std::size_t n_ = 0;
  Elem id_ = 0;
  std::vector<Elem> cayley_;
  std::vector<Elem> inv_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> rank_;
  bool abelian_ = true;
};

FiniteGroup make_cyclic(std::size_t k);

// Permutations are 0-based images; composition applies the left factor first:
// (p*q)(i) = q(p(i)).
using Perm = std::vector<std::uint32_t>;
FiniteGroup make_perm_group(const std::vector<Perm>& gens, std::size_t cap = kDefaultGroupCap);
FiniteGroup make_product(const FiniteGroup& a, const FiniteGroup& b,
                         std::size_t cap = kDefaultGroupCap);

Perm parse_cycles(const std::string& s, std::size_t degree = 0);
std::string cycle_string(const Perm& p);

// Left-to-right fold starting at the identity.
Elem total(const FiniteGroup& g, std::span<const Elem> x);

// Grammar: Z:k | prod:SPEC,SPEC | perm:(..)(..);(..)  (brackets nest for prod).
FiniteGroup parse_group(const std::string& spec);

}  // namespace lrc
