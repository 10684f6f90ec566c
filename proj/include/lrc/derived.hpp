#pragma once

#include <string>
#include <vector>

#include "lrc/restriction.hpp"

namespace lrc {

// Compressed rows. For pull use, row i lists the sources of arcs into i.
struct Csr {
  std::vector<std::uint32_t> rp{0};
  std::vector<std::uint32_t> col;
  std::size_t rows() const { return rp.size() - 1; }
};

// Product of a restriction graph with its group: vertex (v, a) = v*|G| + a, and
// ((u,a),(v,b)) is an arc iff u->v in D and a + last(v) = b.
class DerivedDigraph {
 public:
  explicit DerivedDigraph(GraphPtr base, std::size_t cap = kDefaultVertexCap);

  const DeBruijnSubgraph& base() const { return *base_; }
  GraphPtr base_ptr() const { return base_; }
  const FiniteGroup& group() const { return base_->group(); }
  std::size_t size() const { return n_; }
  std::size_t id(std::size_t v, Elem a) const { return v * group().order() + a; }
  std::size_t vertex_of(std::size_t x) const { return x / group().order(); }
  Elem elem_of(std::size_t x) const { return Elem(x % group().order()); }

  const Csr& in() const { return in_; }
  const Csr& out() const { return out_; }

  // Strong components in reverse topological order of discovery.
  const std::vector<std::uint32_t>& scc() const { return scc_; }
  std::size_t component_count() const { return comp_size_.size(); }
  std::size_t component_size(std::size_t c) const { return comp_size_[c]; }
  std::size_t component_arcs(std::size_t c) const { return comp_arcs_[c]; }
  // gcd of cycle lengths; 0 for a component without arcs.
  std::size_t period(std::size_t c) const { return period_[c]; }
  bool inter_component_arcs() const { return inter_arcs_; }

  std::vector<std::size_t> start_set() const;
  std::vector<std::size_t> finish_set(Elem s) const;

 private:
  GraphPtr base_;
  std::size_t n_;
  Csr in_, out_;
  std::vector<std::uint32_t> scc_;
  std::vector<std::size_t> comp_size_, comp_arcs_, period_;
  bool inter_arcs_ = false;
};

DerivedDigraph derive(GraphPtr D);

// Strong components of an arbitrary digraph given as out-CSR.
std::vector<std::uint32_t> strong_components(const Csr& out, std::size_t* count);

struct RegularityReport {
  bool base_strong = false;
  bool base_two_or_more = false;
  bool derived_strong = false;
  std::size_t derived_components = 0;   // nontrivial ones
  std::size_t derived_period = 0;        // of the single component, or 0
  bool equal_hypotheses = false;        // one component, aperiodic
  bool regular() const { return base_strong && base_two_or_more; }
  std::string text() const;
};

RegularityReport regularity_report(const DerivedDigraph& Dx);

// Checks that (v,a) -> (v, c+a) maps arcs to arcs, bijectively.
bool shift_is_automorphism(const DerivedDigraph& Dx, Elem c);

}  // namespace lrc
