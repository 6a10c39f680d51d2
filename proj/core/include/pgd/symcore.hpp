#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pgd/common.hpp"
#include "pgd/groups.hpp"

namespace pgd {

struct EdgeInfo {
  std::string name;
  int src = -1;
  int tgt = -1;
  int inv = -1;
  bool identity = false;
};

// Simplex membership for sorted, duplicate-free sets of non-identity edges sharing
// the source object. Such a set is the top row of a nondegenerate simplex.
using StarPredicate = std::function<bool(int object, std::span<const int> star)>;

// Data attached to partial groupoids that sit inside a group.
struct GroupEmbedding {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<int> element;  // edge -> group element
  std::vector<int> edge_of;  // group element -> edge or -1
  // Name of the simplex predicate: "all", "commuting", "all-acting" or "explicit".
  std::string predicate = "explicit";
};

// Characteristic partial action recorded alongside a partial groupoid built from one.
struct NativeAction {
  std::vector<std::string> carrier;
  std::vector<int> anchor;                 // point -> object
  std::vector<std::vector<int>> edge_map;  // edge -> point image or -1
};

// A spiny symmetric set given by objects, edges, partial composition and the
// nondegenerate simplices in starry form (sets of non-identity edges from one object).
class PartialGroupoid {
 public:
  enum class Kind { Explicit, Predicate };

  std::string label;

  int add_object(const std::string& name);
  int add_edge(const std::string& name, int src, int tgt);
  void set_inverse(int f, int g);
  void set_identity(int object, int edge);
  // Records the 2-simplex [f|g] whose inner face is gf = g∘f.
  void add_composite(int f, int g, int gf);
  // Explicit mode: record a nondegenerate simplex by its starry set.
  void add_star(int object, std::vector<int> star);
  // Predicate mode: simplex membership is delegated to pred.
  void set_star_predicate(StarPredicate pred);
  // Rebuilds indexes; call after construction.
  void finalize();

  Kind kind() const { return kind_; }
  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::string& object_name(int a) const { return objects_[a]; }
  const EdgeInfo& edge(int e) const { return edges_[e]; }
  const std::string& edge_name(int e) const { return edges_[e].name; }
  int src(int e) const { return edges_[e].src; }
  int tgt(int e) const { return edges_[e].tgt; }
  int inverse(int e) const { return edges_[e].inv; }
  bool is_identity(int e) const { return edges_[e].identity; }
  int identity(int object) const { return identity_[object]; }
  std::optional<int> find_object(const std::string& name) const;
  std::optional<int> find_edge(const std::string& name) const;

  // g∘f when [f|g] is a 2-simplex, else -1.
  int compose(int f, int g) const;
  const std::unordered_map<std::uint64_t, int>& composites() const { return comp_; }
  // Non-identity edges with the given source, ascending.
  const std::vector<int>& edges_from(int object) const { return from_[object]; }

  bool is_star_simplex(int object, std::span<const int> star) const;
  // Top rows may contain identities and repeats.
  bool top_is_simplex(int object, std::span<const int> top) const;
  std::optional<std::vector<int>> top_row(std::span<const int> spine) const;
  bool spine_is_simplex(std::span<const int> spine) const;
  std::vector<int> spine_from_top(int object, std::span<const int> top) const;
  // Entry (i,j) is the coedge restriction to vertices i,j; -1 where undefined.
  std::vector<std::vector<int>> matrix_form(int object, std::span<const int> top) const;
  bool is_nondegenerate(int object, std::span<const int> top) const;

  // Visits nondegenerate starry sets at an object with size <= max_size (empty set first).
  // The visitor returns false to stop. Returns false if stopped.
  bool for_each_star(int object, int max_size, const std::function<bool(const std::vector<int>&)>& visit,
                     std::size_t budget = 50'000'000) const;
  std::vector<std::vector<int>> stars(int object, int max_size = 1 << 20) const;
  // Explicit-mode star sets exactly as stored.
  const std::unordered_set<std::vector<int>, VectorHash>& stored_stars(int object) const { return stars_[object]; }

  int dimension(std::size_t budget = 50'000'000) const;
  bool is_groupoid() const;
  bool is_group() const { return num_objects() == 1 && is_groupoid(); }
  bool empty() const { return objects_.empty(); }

  PartialGroupoid reduction() const;
  PartialGroupoid opposite() const;

  // Problems recorded while loading (e.g. listed words whose coedges are undefined).
  std::vector<std::string> load_issues;
  std::optional<GroupEmbedding> embedding;
  std::shared_ptr<const NativeAction> native_action;
  std::optional<int> dimension_hint;

 private:
  Kind kind_ = Kind::Explicit;
  std::vector<std::string> objects_;
  std::vector<EdgeInfo> edges_;
  std::vector<int> identity_;
  std::unordered_map<std::uint64_t, int> comp_;
  std::vector<std::vector<int>> from_;
  std::vector<std::unordered_set<std::vector<int>, VectorHash>> stars_;
  StarPredicate pred_;
  std::unordered_map<std::string, int> object_index_;
  std::unordered_map<std::string, int> edge_index_;
};

std::vector<std::string> validate(const PartialGroupoid& pg, std::size_t budget = 2'000'000);

// Adds every simplex supported on `verts`; edge(u, v) names the edge u -> v, identities on the diagonal.
void add_chaotic_cell(PartialGroupoid& pg, const std::vector<int>& verts, const std::function<int(int, int)>& edge);

// Symmetric subset of the chaotic groupoid on `vertices` whose simplices are the vertex
// tuples supported in one of `faces`. The edge u->v is named "u>v".
PartialGroupoid chaotic_subcomplex(const std::vector<std::string>& vertices,
                                   const std::vector<std::vector<int>>& faces,
                                   const std::string& label);

// Nerve of a group: one object, every word a simplex.
PartialGroupoid group_nerve(std::shared_ptr<const FiniteGroup> g);
// Symmetric subset of BG given by a predicate on sets of non-identity elements.
PartialGroupoid group_embedded(std::shared_ptr<const FiniteGroup> g,
                               std::function<bool(std::span<const int>)> pred,
                               const std::string& label);

}  // namespace pgd
