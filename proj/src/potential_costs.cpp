#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

#include "dynplanar/potential_oracle.hpp"
#include "dynplanar/static_oracle.hpp"

namespace dynplanar {

namespace {

VertexPair ordered(VertexId a, VertexId b) { return a < b ? VertexPair{a, b} : VertexPair{b, a}; }

bool has_edge(const EdgeListGraph& g, VertexId x, VertexId y) {
  const VertexPair want = ordered(x, y);
  for (auto [a, b] : g.edges)
    if (ordered(a, b) == want) return true;
  return false;
}

// Planarity of G + (x, y), memoized per pair.
class PlanarityCache {
 public:
  explicit PlanarityCache(const EdgeListGraph& g) : g_(g) {}
  bool with(VertexId x, VertexId y) {
    const VertexPair key = ordered(x, y);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    EdgeListGraph h = g_;
    if (x != y && !has_edge(g_, x, y)) h.edges.emplace_back(key);
    return cache_[key] = find_embedding_static(h).has_value();
  }

 private:
  const EdgeListGraph& g_;
  std::map<VertexPair, bool> cache_;
};

bool shares_face_with_edge(const std::vector<SkeletonFace>& faces, VertexId w, VertexPair edge) {
  for (const SkeletonFace& f : faces)
    if (std::binary_search(f.vertices.begin(), f.vertices.end(), w) &&
        std::find(f.edges.begin(), f.edges.end(), edge) != f.edges.end())
      return true;
  return false;
}

bool edges_share_face(const std::vector<SkeletonFace>& faces, VertexPair e1, VertexPair e2) {
  for (const SkeletonFace& f : faces)
    if (std::find(f.edges.begin(), f.edges.end(), e1) != f.edges.end() &&
        std::find(f.edges.begin(), f.edges.end(), e2) != f.edges.end())
      return true;
  return false;
}

// Smallest-labelled skeleton vertex off the separation pair that shares a
// face with it; `preferred` ranks below every label.
VertexId face_partner(const SPQRNode& node, const std::vector<SkeletonFace>& faces, VertexPair pair, VertexId preferred) {
  VertexId best = kNone;
  for (VertexId w : node.vertices) {
    if (w == pair.first || w == pair.second || !shares_face_with_edge(faces, w, pair)) continue;
    if (w == preferred) return w;
    if (best == kNone) best = w;
  }
  return best;
}

// Struts of one block for its designated pair, split by path criticality.
void block_struts(const BlockSolidPaths& bp, PlanarityCache& planar,
                  std::set<VertexPair>& critical, std::set<VertexPair>& off) {
  if (!bp.spqr) return;
  const SPQRTree& tree = *bp.spqr;
  const VertexId u = bp.first, v = bp.last;
  std::map<int, std::vector<SkeletonFace>> faces;
  auto faces_of = [&](int x) -> const std::vector<SkeletonFace>& {
    auto it = faces.find(x);
    if (it == faces.end()) it = faces.emplace(x, skeleton_faces(tree.nodes[x])).first;
    return it->second;
  };
  for (const SolidPath& path : bp.paths) {
    std::set<VertexPair>& out = path.critical ? critical : off;
    std::vector<int> rel = path.nodes;
    while (!rel.empty() && tree.nodes[rel.back()].kind == SPQRKind::P) rel.pop_back();
    while (!rel.empty() && tree.nodes[rel.front()].kind == SPQRKind::P) rel.erase(rel.begin());
    if (rel.size() <= 1) {
      bool in_block = false;
      for (auto [a, b] : tree.block.edges) in_block = in_block || ordered(a, b) == ordered(u, v);
      if (path.critical && !in_block && planar.with(u, v)) out.insert(ordered(u, v));
      continue;
    }
    const int d = static_cast<int>(rel.size());
    std::vector<VertexPair> pairs;
    for (int j = 0; j + 1 < d; ++j) {
      const SkeletonEdge& e = tree.nodes[rel[j]].virtual_toward(rel[j + 1]);
      pairs.push_back(ordered(e.a, e.b));
    }
    std::vector<int> bounds{0};
    for (int j = 1; j + 1 < d; ++j)
      if (tree.nodes[rel[j]].kind == SPQRKind::R && !edges_share_face(faces_of(rel[j]), pairs[j - 1], pairs[j]))
        bounds.push_back(j);
    bounds.push_back(d - 1);
    for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
      const int lo = bounds[k], hi = bounds[k + 1];
      const VertexId x = face_partner(tree.nodes[rel[lo]], faces_of(rel[lo]), pairs[lo], u);
      const VertexId y = face_partner(tree.nodes[rel[hi]], faces_of(rel[hi]), pairs[hi - 1], v);
      if (x != kNone && y != kNone && x != y) out.insert(ordered(x, y));
    }
  }
}

}  // namespace

std::set<VertexPair> StrutSet::solid() const {
  std::set<VertexPair> out = critical;
  out.insert(off_critical.begin(), off_critical.end());
  return out;
}

StrutSet struts(const EdgeListGraph& g, VertexId u, VertexId v) {
  if (u == v || !has_edge(g, u, v)) return struts(g, presplit_decomposition(g, u, v));
  // With (u,v) present the critical path is contracted away: every other
  // solid path is the one of G - (u,v), so only its off-critical struts remain.
  EdgeListGraph without{g.n, {}};
  for (auto [a, b] : g.edges)
    if (ordered(a, b) != ordered(u, v)) without.edges.emplace_back(a, b);
  StrutSet out;
  out.off_critical = struts(without, presplit_decomposition(without, u, v)).off_critical;
  return out;
}

StrutSet struts(const EdgeListGraph& g, const SolidPathSet& paths) {
  StrutSet out;
  PlanarityCache planar(g);
  // Different components: the pair itself is always insertable.
  if (!paths.same_component && paths.u != paths.v) out.critical.insert(ordered(paths.u, paths.v));

  for (const ComponentSolidPaths& comp : paths.components) {
    for (const SolidPath& alpha : comp.paths) {
      std::vector<int> rel = alpha.nodes;
      while (!rel.empty() && comp.tree.nodes[rel.back()].kind == BCKind::Cut) rel.pop_back();
      while (!rel.empty() && comp.tree.nodes[rel.front()].kind == BCKind::Cut) rel.erase(rel.begin());
      if (rel.empty()) continue;
      std::vector<int> blocks;
      std::vector<VertexId> cut{alpha.first};
      for (std::size_t k = 0; k < rel.size(); ++k) {
        if (comp.tree.nodes[rel[k]].kind == BCKind::Block) blocks.push_back(rel[k]);
        else cut.push_back(comp.tree.nodes[rel[k]].vertices[0]);
      }
      cut.push_back(alpha.last);
      const int k = static_cast<int>(blocks.size());

      std::set<VertexPair> crit, off;
      for (int i = 1; i <= k; ++i) {
        std::set<VertexPair> block_crit, block_off;
        block_struts(comp.block_at(blocks[i - 1]), planar, block_crit, block_off);
        if (!planar.with(cut[i - 1], cut[i])) crit.insert(block_crit.begin(), block_crit.end());
        off.insert(block_off.begin(), block_off.end());
      }
      for (int lo = 1; lo <= k; ++lo)
        for (int hi = lo; hi <= k; ++hi) {
          if (!planar.with(cut[lo - 1], cut[hi])) continue;
          bool maximal = true;
          for (int a = 1; a <= lo && maximal; ++a)
            for (int b = hi; b <= k && maximal; ++b)
              if ((a != lo || b != hi) && planar.with(cut[a - 1], cut[b])) maximal = false;
          if (maximal && cut[lo - 1] != cut[hi] && !has_edge(g, cut[lo - 1], cut[hi]))
            crit.insert(ordered(cut[lo - 1], cut[hi]));
        }

      if (alpha.critical) {
        out.critical.insert(crit.begin(), crit.end());
        out.off_critical.insert(off.begin(), off.end());
      } else {
        out.off_critical.insert(crit.begin(), crit.end());
        out.off_critical.insert(off.begin(), off.end());
      }
    }
  }
  return out;
}

int CostVector::get(DistKind kind) const {
  switch (kind) {
    case DistKind::Clean: return clean;
    case DistKind::Sep: return sep;
    case DistKind::P: return p;
  }
  return 0;
}

CostEvaluator::CostEvaluator(const EmbeddingSpace& space) : space_(space) {}

const std::vector<int>& CostEvaluator::strut_distances(VertexPair strut, DistKind kind) {
  auto key = std::pair{strut, kind};
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  return cache_[key] = distances_to(space_, kind, embeddings_admitting(space_, strut.first, strut.second));
}

int CostEvaluator::cost(const std::set<VertexPair>& strut_set, DistKind kind, int node) {
  int total = 0;
  for (const VertexPair& s : strut_set) {
    const int d = strut_distances(s, kind)[node];
    if (d == kUnreachable)
      throw Error(ErrorCode::InfiniteCost, "strut (" + std::to_string(s.first) + "," + std::to_string(s.second) +
                                               ") is unreachable from embedding " + std::to_string(node));
    total += d;
  }
  return total;
}

CostVector CostEvaluator::costs(const std::set<VertexPair>& strut_set, int node) {
  return {cost(strut_set, DistKind::Clean, node), cost(strut_set, DistKind::Sep, node), cost(strut_set, DistKind::P, node)};
}

int cost(EmbeddingSpace& space, DistKind kind, int node, VertexId u, VertexId v, CostWhich which) {
  if (space.flips.size() != space.nodes.size()) build_flip_graph(space);
  const StrutSet s = struts(space.graph, u, v);
  CostEvaluator eval(space);
  return eval.cost(which == CostWhich::Critical ? s.critical : s.solid(), kind, node);
}

// ------------------------------------------------------------- reporting

std::vector<std::string> property_names() {
  return {"struts-planar",
          "struts-independent",
          "struts-insert",
          "struts-subset",
          "struts-existing",
          "struts-admissible",
          "struts-nonadmissible-block",
          "struts-nonadmissible-path",
          "cost-order",
          "cost-step",
          "cost-descent",
          "insert-consistency",
          "dirty-decomposition",
          "type-locality",
          "critical-cost-is-distance",
          "solid-cost-is-distance"};
}

bool PropertyReport::ok() const {
  return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.ok(); });
}

PropertyResult& PropertyReport::at(const std::string& name) {
  for (PropertyResult& r : results)
    if (r.name == name) return r;
  PropertyResult fresh;
  fresh.name = name;
  results.push_back(std::move(fresh));
  return results.back();
}

const PropertyResult* PropertyReport::find(const std::string& name) const {
  for (const PropertyResult& r : results)
    if (r.name == name) return &r;
  return nullptr;
}

void PropertyReport::merge(const PropertyReport& other) {
  for (const PropertyResult& r : other.results) {
    PropertyResult& mine = at(r.name);
    mine.checked += r.checked;
    if (mine.failures == 0 && r.failures > 0) mine.counterexample = r.counterexample;
    mine.failures += r.failures;
  }
  good_embedding_max_dist = std::max(good_embedding_max_dist, other.good_embedding_max_dist);
  pairs += other.pairs;
}

std::string PropertyReport::summary() const {
  std::ostringstream os;
  for (const PropertyResult& r : results) {
    os << (r.ok() ? "ok   " : "FAIL ") << r.name << "  checked=" << r.checked << " failures=" << r.failures << '\n';
    if (!r.ok()) os << "     first counterexample: " << r.counterexample << '\n';
  }
  os << "good-embedding max distance (recorded): " << good_embedding_max_dist << '\n';
  return os.str();
}

// --------------------------------------------------------------- checker

struct PropertyChecker::Inserted {
  EmbeddingSpace space;
  std::unique_ptr<CostEvaluator> evaluator;
  std::set<VertexPair> solid;
};

PropertyChecker::PropertyChecker(const EdgeListGraph& g, PropertyOptions options)
    : g_(g), options_(options), space_(enumerate_embeddings(g)), evaluator_(space_) {
  build_flip_graph(space_);
}

bool PropertyChecker::planar_with(VertexId x, VertexId y) {
  const VertexPair key = ordered(x, y);
  auto it = planar_cache_.find(key);
  if (it != planar_cache_.end()) return it->second;
  EdgeListGraph h = g_;
  if (!has_edge(g_, x, y)) h.edges.emplace_back(key);
  return planar_cache_[key] = find_embedding_static(h).has_value();
}

const PropertyChecker::Inserted& PropertyChecker::inserted(VertexId u, VertexId v) {
  const VertexPair key{u, v};
  auto it = inserted_.find(key);
  if (it != inserted_.end()) return *it->second;
  auto ins = std::make_shared<Inserted>();
  EdgeListGraph h = g_;
  h.edges.emplace_back(ordered(u, v));
  ins->space = enumerate_embeddings(h, h.edges.size());
  build_flip_graph(ins->space);
  ins->evaluator = std::make_unique<CostEvaluator>(ins->space);
  ins->solid = struts(h, u, v).solid();
  inserted_[key] = ins;
  return *ins;
}

std::string PropertyChecker::describe(int node) const {
  std::string text = space_.nodes[node].to_text();
  std::replace(text.begin(), text.end(), '\n', ' ');
  return "embedding " + std::to_string(node) + " [" + text + "]";
}

namespace {

std::string pair_text(VertexPair p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; }

std::string set_text(const std::set<VertexPair>& s) {
  std::string out = "{";
  for (const VertexPair& p : s) out += pair_text(p);
  return out + "}";
}

struct Tally {
  PropertyReport& report;
  std::string prefix;
  void operator()(const std::string& name, bool ok, const std::string& detail = {}) {
    PropertyResult& r = report.at(name);
    ++r.checked;
    if (ok) return;
    if (r.failures++ == 0) r.counterexample = prefix + detail;
  }
};

// Vertex x and y stay connected after removing any one or two other vertices.
bool three_connected_pair(const std::vector<VertexPair>& edges, VertexId x, VertexId y) {
  std::set<VertexId> verts;
  for (auto [a, b] : edges) verts.insert(a), verts.insert(b);
  std::vector<VertexId> others;
  for (VertexId w : verts)
    if (w != x && w != y) others.push_back(w);
  auto linked = [&](VertexId r1, VertexId r2) {
    std::set<VertexId> seen{x};
    std::vector<VertexId> stack{x};
    while (!stack.empty()) {
      VertexId a = stack.back();
      stack.pop_back();
      for (auto [p, q] : edges) {
        VertexId next = p == a ? q : q == a ? p : kNone;
        if (next == kNone || next == r1 || next == r2 || seen.count(next)) continue;
        seen.insert(next);
        stack.push_back(next);
      }
    }
    return seen.count(y) > 0;
  };
  for (std::size_t i = 0; i < others.size(); ++i) {
    if (!linked(others[i], kNone)) return false;
    for (std::size_t j = i + 1; j < others.size(); ++j)
      if (!linked(others[i], others[j])) return false;
  }
  return true;
}

// Properties of the strut sets alone, needing no embedding enumeration.
void check_strut_structure(const EdgeListGraph& g, VertexId u, VertexId v, const StrutSet& st,
                           const SolidPathSet& paths, const std::function<bool(VertexId, VertexId)>& planar_with,
                           Tally& tally) {
  const std::set<VertexPair> solid = st.solid();
  const bool edge_uv = has_edge(g, u, v);
  const bool insertable = planar_with(u, v);

  // Struts themselves.
  {
    bool ok = true;
    EdgeListGraph h = g;
    for (const VertexPair& s : solid) {
      ok = ok && s.first != s.second && !has_edge(g, s.first, s.second);
      h.edges.push_back(s);
    }
    ok = ok && find_embedding_static(h).has_value();
    tally("struts-planar", ok, "solid struts " + set_text(solid));
  }
  tally("struts-subset", std::includes(solid.begin(), solid.end(), st.critical.begin(), st.critical.end()));
  if (edge_uv) tally("struts-existing", st.critical.empty(), "critical struts " + set_text(st.critical));
  if (!edge_uv) {
    const bool single = st.critical == std::set<VertexPair>{ordered(u, v)};
    tally("struts-admissible", single == insertable, "critical struts " + set_text(st.critical));
  }
  if (!insertable) {
    // Blocks and cut vertices along u..v, straight from the critical path.
    const ComponentSolidPaths* comp = nullptr;
    for (const ComponentSolidPaths& c : paths.components)
      if (!c.paths.empty() && c.paths[0].critical) comp = &c;
    if (comp) {
      const SolidPath& crit = comp->paths[0];
      std::vector<int> blocks;
      std::vector<VertexId> cuts{u};
      for (int x : crit.nodes) {
        if (comp->tree.nodes[x].kind == BCKind::Block) blocks.push_back(x);
        else if (x != crit.nodes.front() && x != crit.nodes.back()) cuts.push_back(comp->tree.nodes[x].vertices[0]);
      }
      cuts.push_back(v);
      const int k = static_cast<int>(blocks.size());
      for (int i = 1; i <= k; ++i) {
        const BCNode& b = comp->tree.nodes[blocks[i - 1]];
        EdgeListGraph with{g.n, b.edges};
        with.edges.push_back(ordered(cuts[i - 1], cuts[i]));
        if (find_embedding_static(with).has_value()) continue;
        std::vector<VertexPair> augmented(b.edges.begin(), b.edges.end());
        for (const VertexPair& s : st.critical)
          if (std::binary_search(b.vertices.begin(), b.vertices.end(), s.first) &&
              std::binary_search(b.vertices.begin(), b.vertices.end(), s.second))
            augmented.push_back(s);
        const bool planar = find_embedding_static(EdgeListGraph{g.n, augmented}).has_value();
        tally("struts-nonadmissible-block", planar && three_connected_pair(augmented, cuts[i - 1], cuts[i]),
              "block " + std::to_string(i) + " critical struts " + set_text(st.critical));
      }
      for (int lo = 1; lo <= k; ++lo)
        for (int hi = lo; hi <= k; ++hi) {
          if (!planar_with(cuts[lo - 1], cuts[hi])) continue;
          bool maximal = true;
          for (int a = 1; a <= lo && maximal; ++a)
            for (int b = hi; b <= k && maximal; ++b)
              if ((a != lo || b != hi) && planar_with(cuts[a - 1], cuts[b])) maximal = false;
          bool has_block = false;
          for (int i = lo; i <= hi; ++i) has_block = has_block || comp->tree.nodes[blocks[i - 1]].edges.size() > 1;
          if (!maximal || !has_block) continue;
          const VertexPair s = ordered(cuts[lo - 1], cuts[hi]);
          tally("struts-nonadmissible-path", st.critical.count(s) > 0 || has_edge(g, s.first, s.second),
                "missing " + pair_text(s) + " in " + set_text(st.critical));
        }
    }
  }

}

}  // namespace

void PropertyChecker::check_pair(VertexId u, VertexId v, PropertyReport& report) {
  ++report.pairs;
  Tally tally{report, "G=" + set_text(std::set<VertexPair>(g_.edges.begin(), g_.edges.end())) + " u=" +
                          std::to_string(u) + " v=" + std::to_string(v) + ": "};
  const SolidPathSet paths = presplit_decomposition(g_, u, v);
  const StrutSet st = struts(g_, u, v);
  const std::set<VertexPair> solid = st.solid();
  const bool edge_uv = has_edge(g_, u, v);
  const bool insertable = planar_with(u, v);
  const int n_nodes = space_.size();

  check_strut_structure(g_, u, v, st, paths, [this](VertexId x, VertexId y) { return planar_with(x, y); }, tally);
  if (!edge_uv && insertable && options_.check_insert_consistency) {
    std::set<VertexPair> expect = inserted(u, v).solid;
    expect.insert(ordered(u, v));
    tally("struts-insert", expect == solid, "solid " + set_text(solid) + " vs after insert " + set_text(expect));
  }

  // Costs at every embedding.
  std::vector<CostVector> crit(n_nodes), sol(n_nodes);
  try {
    for (int h = 0; h < n_nodes; ++h) {
      crit[h] = evaluator_.costs(st.critical, h);
      sol[h] = evaluator_.costs(solid, h);
    }
  } catch (const Error& e) {
    tally("struts-planar", false, e.what());
    return;
  }
  constexpr DistKind kinds[] = {DistKind::Clean, DistKind::Sep, DistKind::P};
  const std::vector<int> admitting = embeddings_admitting(space_, u, v);
  std::vector<char> admits(n_nodes, 0);
  for (int h : admitting) admits[h] = 1;

  for (int h = 0; h < n_nodes; ++h) {
    bool ok = true;
    for (DistKind k : kinds) ok = ok && sol[h].get(k) >= crit[h].get(k) && crit[h].get(k) >= 0;
    ok = ok && crit[h].clean >= crit[h].sep && crit[h].sep >= crit[h].p;
    ok = ok && sol[h].clean >= sol[h].sep && sol[h].sep >= sol[h].p;
    if (insertable) ok = ok && ((crit[h].clean == 0) == (admits[h] != 0));
    tally("cost-order", ok, describe(h));
  }

  auto differs = [&](int a, int b) { return !(crit[a] == crit[b]) || !(sol[a] == sol[b]); };
  for (int h = 0; h < n_nodes; ++h)
    for (const FlipEdge& e : space_.flips[h]) {
      const int t = e.target;
      bool step = true;
      for (DistKind k : kinds) {
        const int dc = crit[t].get(k) - crit[h].get(k), ds = sol[t].get(k) - sol[h].get(k);
        step = step && dc >= -1 && dc <= 1 && ds >= -1 && ds <= 1;
        if (dc != 0) step = step && ds == dc && e.critical_for(u, v);
      }
      tally("cost-step", step,
            describe(h) + " -> " + std::to_string(t) + " kind " + flip_kind_name(e.kind) + (e.clean ? " clean" : " dirty"));

      if (e.kind == FlipKind::Articulation || e.kind == FlipKind::SR) {
        bool local = crit[t].p == crit[h].p && sol[t].p == sol[h].p;
        if (e.kind == FlipKind::Articulation) local = local && crit[t].sep == crit[h].sep && sol[t].sep == sol[h].sep;
        tally("type-locality", local, describe(h) + " -> " + std::to_string(t) + " kind " + flip_kind_name(e.kind));
      }

      if (e.clean) {
        int changed = 0;
        for (const VertexPair& s : solid)
          if (evaluator_.strut_distances(s, DistKind::Clean)[h] != evaluator_.strut_distances(s, DistKind::Clean)[t])
            ++changed;
        tally("struts-independent", changed <= 1, describe(h) + " -> " + std::to_string(t));
      }

      if (!e.clean && e.kind != FlipKind::Articulation && options_.check_dirty_decomposition) {
        // Replace with at most one clean separation flip and up to four
        // articulation flips, at most one of which changes a cost. The
        // separation flip may be trivial when the poles' block has a single
        // embedding; then articulation flips alone do the job.
        struct State {
          int node, sep, changes;
          bool operator<(const State& o) const { return std::tie(node, sep, changes) < std::tie(o.node, o.sep, o.changes); }
        };
        std::set<State> seen{{h, 0, 0}};
        std::vector<State> layer{{h, 0, 0}};
        bool found = false;
        for (int depth = 0; depth < 5 && !found && !layer.empty(); ++depth) {
          std::vector<State> next;
          for (const State& s : layer)
            for (const FlipEdge& f : space_.flips[s.node]) {
              if (!f.clean) continue;
              const int sep = s.sep + (f.kind == FlipKind::Articulation ? 0 : 1);
              const int changes = s.changes + (differs(s.node, f.target) ? 1 : 0);
              if (sep > 1 || changes > 1) continue;
              State ns{f.target, sep, changes};
              if (ns.node == t) found = true;
              if (seen.insert(ns).second) next.push_back(ns);
            }
          layer = std::move(next);
        }
        tally("dirty-decomposition", found, describe(h) + " -> " + std::to_string(t));
      }
    }

  for (int h = 0; h < n_nodes; ++h)
    for (CostWhich which : {CostWhich::Critical, CostWhich::Solid})
      for (DistKind k : kinds) {
        const auto& costs = which == CostWhich::Critical ? crit : sol;
        const int here = costs[h].get(k);
        if (here == 0) continue;
        bool down = false;
        for (const FlipEdge& e : space_.flips[h]) down = down || (e.clean && costs[e.target].get(k) < here);
        tally("cost-descent", down,
              describe(h) + (which == CostWhich::Critical ? " critical " : " solid ") + dist_kind_name(k));
      }

  if (insertable)
    for (DistKind k : kinds) {
      const std::vector<int> d = distances_to(space_, k, admitting);
      for (int h = 0; h < n_nodes; ++h)
        tally("critical-cost-is-distance", d[h] == crit[h].get(k), describe(h) + " " + dist_kind_name(k));
    }
  std::vector<int> good;
  for (int h = 0; h < n_nodes; ++h)
    if (sol[h].clean == 0) good.push_back(h);
  good_[{u, v}] = good;
  for (DistKind k : kinds) {
    const std::vector<int> d = distances_to(space_, k, good);
    for (int h = 0; h < n_nodes; ++h)
      tally("solid-cost-is-distance", d[h] == sol[h].get(k), describe(h) + " " + dist_kind_name(k));
  }

  if (!edge_uv && insertable && options_.check_insert_consistency) {
    const Inserted& ins = inserted(u, v);
    for (int h : admitting) {
      const EmbeddedGraph& base = space_.nodes[h];
      std::vector<std::pair<Corner, Corner>> choices;
      if (base.component_of(u) != base.component_of(v)) {
        for (Corner cu : base.corners_at(u))
          for (Corner cv : base.corners_at(v)) choices.emplace_back(cu, cv);
      } else {
        for (FaceId f : base.faces_at(u)) {
          if (!base.vertex_on_face(v, f)) continue;
          for (Corner cu : base.corners_between(u, f))
            for (Corner cv : base.corners_between(v, f)) choices.emplace_back(cu, cv);
        }
      }
      std::set<int> targets;
      for (auto [cu, cv] : choices) {
        EmbeddedGraph after = base;
        after.insert_edge_at(cu, cv);
        const int t = ins.space.find(after);
        if (t < 0 || !targets.insert(t).second) continue;
        bool same = true;
        std::string why;
        try {
          same = ins.evaluator->costs(ins.solid, t) == sol[h];
        } catch (const Error& e) {
          same = false;
          why = e.what();
        }
        tally("insert-consistency", same, describe(h) + " inserted as node " + std::to_string(t) + " " + why);
      }
      if (targets.empty()) tally("insert-consistency", false, describe(h) + " has no insertion in the larger space");
    }
  }
}

void PropertyChecker::check_all_pairs(PropertyReport& report) {
  for (VertexId u = 0; u < g_.n; ++u)
    for (VertexId v = 0; v < g_.n; ++v)
      if (u != v) check_pair(u, v, report);
  std::vector<int> all_good;
  for (auto& [pair, good] : good_) all_good.insert(all_good.end(), good.begin(), good.end());
  std::sort(all_good.begin(), all_good.end());
  all_good.erase(std::unique(all_good.begin(), all_good.end()), all_good.end());
  for (auto& [pair, good] : good_) {
    const std::vector<int> d = distances_to(space_, DistKind::Clean, good);
    for (int h : all_good)
      if (d[h] != kUnreachable) report.good_embedding_max_dist = std::max(report.good_embedding_max_dist, d[h]);
  }
}

void check_strut_structure(const EdgeListGraph& g, VertexId u, VertexId v, PropertyReport& report) {
  ++report.pairs;
  Tally tally{report, "G=" + set_text(std::set<VertexPair>(g.edges.begin(), g.edges.end())) + " u=" +
                          std::to_string(u) + " v=" + std::to_string(v) + ": "};
  std::map<VertexPair, bool> cache;
  auto planar_with = [&](VertexId x, VertexId y) {
    const VertexPair key = ordered(x, y);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    EdgeListGraph h = g;
    if (!has_edge(g, x, y)) h.edges.emplace_back(key);
    return cache[key] = find_embedding_static(h).has_value();
  };
  check_strut_structure(g, u, v, struts(g, u, v), presplit_decomposition(g, u, v), planar_with, tally);
}

PropertyReport check_properties(const EdgeListGraph& g, VertexId u, VertexId v, PropertyOptions options) {
  PropertyReport report;
  for (const std::string& name : property_names()) report.at(name);
  PropertyChecker checker(g, options);
  checker.check_pair(u, v, report);
  return report;
}

}  // namespace dynplanar
