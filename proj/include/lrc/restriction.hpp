#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lrc/group.hpp"

namespace lrc {

inline constexpr std::size_t kDefaultVertexCap = 1000000;

// Span-sigma subgraph of the de Bruijn graph over a finite group. Vertices are
// sigma-tuples encoded base |G| with the first letter most significant. Arcs
// follow the overlap rule unless an explicit arc list is given, in which case
// that list (a subset of the overlap arcs) is the arc set.
class DeBruijnSubgraph {
 public:
  using Code = std::uint64_t;

  DeBruijnSubgraph(std::shared_ptr<const FiniteGroup> g, std::size_t sigma,
                   std::vector<Code> vertices, std::size_t cap = kDefaultVertexCap);

  const FiniteGroup& group() const { return *g_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return g_; }
  std::size_t sigma() const { return sigma_; }
  std::size_t size() const { return codes_.size(); }
  std::size_t arc_count() const { return out_col_.size(); }

  Code code(std::size_t v) const { return codes_[v]; }
  std::vector<Elem> tuple(std::size_t v) const { return decode(codes_[v]); }
  std::vector<Elem> decode(Code c) const;
  Code encode(const std::vector<Elem>& t) const;
  // Vertex index of a tuple code, or -1.
  long index_of(Code c) const;
  Elem first(std::size_t v) const { return first_[v]; }
  Elem last(std::size_t v) const { return last_[v]; }
  Elem vsum(std::size_t v) const { return sum_[v]; }

  const std::vector<std::uint32_t>& out_rp() const { return out_rp_; }
  const std::vector<std::uint32_t>& out_col() const { return out_col_; }
  const std::vector<std::uint32_t>& in_rp() const { return in_rp_; }
  const std::vector<std::uint32_t>& in_col() const { return in_col_; }
  bool has_arc(std::size_t u, std::size_t v) const;

  const std::vector<char>& start() const { return start_; }
  const std::vector<char>& finish() const { return finish_; }
  void set_start(std::vector<char> s);
  void set_finish(std::vector<char> f);
  void set_arcs(const std::vector<std::pair<std::size_t, std::size_t>>& arcs);
  bool explicit_arcs() const { return explicit_arcs_; }

  // Tuples removed from the full graph when built by subtraction.
  std::vector<Code> forbidden;
  std::vector<std::string> warnings;
  std::string descriptor;

  // Legality of a word of any length: every sigma-window is a vertex and
  // consecutive windows are arcs. Words shorter than sigma are legal.
  bool legal(const std::vector<Elem>& w) const;

 private:
  void build_arcs(std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs);

  std::shared_ptr<const FiniteGroup> g_;
  std::size_t sigma_;
  std::vector<Code> codes_;
  std::vector<std::int32_t> index_;
  std::vector<Elem> first_, last_, sum_;
  std::vector<std::uint32_t> out_rp_, out_col_, in_rp_, in_col_;
  std::vector<char> start_, finish_;
  bool explicit_arcs_ = false;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;
using GraphPtr = std::shared_ptr<const DeBruijnSubgraph>;

std::size_t checked_tuple_count(std::size_t n, std::size_t sigma, std::size_t cap);

DeBruijnSubgraph full_debruijn(GroupPtr g, std::size_t sigma);
DeBruijnSubgraph restrict_carlitz(GroupPtr g, std::size_t d);
DeBruijnSubgraph restrict_forbidden_subwords(GroupPtr g, std::size_t sigma,
                                             const std::vector<std::vector<Elem>>& U);
DeBruijnSubgraph restrict_mullen(GroupPtr g, std::size_t d);
DeBruijnSubgraph restrict_window_sum(GroupPtr g, std::size_t d);
DeBruijnSubgraph restrict_subword_pattern(GroupPtr g, const std::string& tau);
DeBruijnSubgraph restrict_smooth(GroupPtr g, std::size_t p);
DeBruijnSubgraph from_vertex_list(GroupPtr g, std::size_t sigma,
                                  const std::vector<std::vector<Elem>>& vertices,
                                  const std::vector<std::pair<std::vector<Elem>, std::vector<Elem>>>& arcs,
                                  std::string descriptor = "graph");

// Restriction spec grammar: carlitz:d mullen:d windowsum:d subword:TAU smooth:p
// full:sigma noinverse: forbid:@file graph:@file. File names are read relative to cwd.
DeBruijnSubgraph parse_restriction(GroupPtr g, const std::string& spec);

// Tuple text: labels separated by commas at bracket depth 0.
std::vector<Elem> parse_tuple(const FiniteGroup& g, const std::string& s);
std::string tuple_string(const FiniteGroup& g, const std::vector<Elem>& t);

}  // namespace lrc
