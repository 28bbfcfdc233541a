#include "openworld/knowledge_graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>

#include "openworld/error.hpp"

namespace openworld {

namespace {

constexpr std::uint32_t kNoNode = std::numeric_limits<std::uint32_t>::max();

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        std::size_t tab = line.find('\t', pos);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(pos));
            break;
        }
        fields.push_back(line.substr(pos, tab - pos));
        pos = tab + 1;
    }
    return fields;
}

bool parse_finite_double(std::string_view s, double& out) {
    try {
        std::size_t consumed = 0;
        std::string tmp(s);
        double v = std::stod(tmp, &consumed);
        while (consumed < tmp.size() && std::isspace(static_cast<unsigned char>(tmp[consumed]))) {
            ++consumed;
        }
        if (consumed != tmp.size() || !std::isfinite(v)) return false;
        out = v;
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

struct RawRecord {
    std::string relation;
    ConceptId start;
    ConceptId end;
    double weight;
};

// Parses one line; returns false on a malformed row (message in `error`),
// nullopt-style skip via `skipped` for rows that are valid but out of scope
// (comments, blank lines, non-English official rows).
bool parse_record(std::string_view line, RawRecord& rec, bool& skipped, std::string& error) {
    skipped = false;
    std::string_view trimmed = line;
    while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == '\n')) {
        trimmed.remove_suffix(1);
    }
    if (trimmed.empty() || trimmed.front() == '#') {
        skipped = true;
        return true;
    }
    auto fields = split_tabs(trimmed);
    if (fields.size() == 5 && fields[0].rfind("/a/", 0) == 0) {
        // Official dump row: uri, relation, start, end, json metadata.
        if (fields[1].rfind("/r/", 0) != 0) {
            error = "official row: relation field is not a /r/ URI";
            return false;
        }
        if (fields[2].rfind("/c/", 0) != 0 || fields[3].rfind("/c/", 0) != 0) {
            error = "official row: endpoint is not a /c/ concept URI";
            return false;
        }
        if (concept_uri_language(fields[2]) != "en" || concept_uri_language(fields[3]) != "en") {
            skipped = true;
            return true;
        }
        nlohmann::json meta = nlohmann::json::parse(fields[4], nullptr, false);
        if (meta.is_discarded() || !meta.is_object() || !meta.contains("weight") ||
            !meta["weight"].is_number()) {
            error = "official row: metadata JSON missing numeric \"weight\"";
            return false;
        }
        rec.relation = normalize_relation(fields[1]);
        rec.start = normalize_concept(fields[2]);
        rec.end = normalize_concept(fields[3]);
        rec.weight = meta["weight"].get<double>();
        if (!std::isfinite(rec.weight)) {
            error = "official row: non-finite weight";
            return false;
        }
    } else if (fields.size() == 4) {
        rec.relation = normalize_relation(fields[0]);
        rec.start = normalize_concept(fields[1]);
        rec.end = normalize_concept(fields[2]);
        if (!parse_finite_double(fields[3], rec.weight)) {
            error = "weight is not a finite number";
            return false;
        }
    } else {
        error = "expected 4 tab-separated fields (or a 5-field official dump row)";
        return false;
    }
    if (rec.relation.empty() || rec.start.empty() || rec.end.empty()) {
        error = "empty relation or concept after normalization";
        return false;
    }
    return true;
}

}  // namespace

KnowledgeGraph KnowledgeGraph::ingest(std::istream& in, std::vector<std::string>* warnings) {
    // Dedup on (relation, start, end), keeping the maximum weight.
    std::map<std::tuple<std::string, ConceptId, ConceptId>, double> dedup;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        RawRecord rec;
        bool skipped = false;
        std::string error;
        if (!parse_record(line, rec, skipped, error)) {
            if (warnings) {
                warnings->push_back("line " + std::to_string(line_no) + ": " + error);
            }
            continue;
        }
        if (skipped) continue;
        auto key = std::make_tuple(rec.relation, rec.start, rec.end);
        auto [it, inserted] = dedup.emplace(key, rec.weight);
        if (!inserted && rec.weight > it->second) it->second = rec.weight;
    }
    if (dedup.empty()) {
        throw IngestError("no valid assertion rows in input");
    }

    KnowledgeGraph g;
    auto intern_node = [&g](const ConceptId& c) -> std::uint32_t {
        auto it = g.node_index_.find(c);
        if (it != g.node_index_.end()) return it->second;
        std::uint32_t id = static_cast<std::uint32_t>(g.node_names_.size());
        g.node_names_.push_back(c);
        g.node_index_.emplace(c, id);
        return id;
    };
    auto intern_relation = [&g](const std::string& r) -> std::uint32_t {
        auto it = g.relation_index_.find(r);
        if (it != g.relation_index_.end()) return it->second;
        std::uint32_t id = static_cast<std::uint32_t>(g.relation_names_.size());
        g.relation_names_.push_back(r);
        g.relation_index_.emplace(r, id);
        g.relations_.insert(r);
        return id;
    };

    for (const auto& [key, weight] : dedup) {
        const auto& [relation, start, end] = key;
        Edge e;
        e.relation = intern_relation(relation);
        e.start = intern_node(start);
        e.end = intern_node(end);
        e.weight = weight;
        g.edges_.push_back(e);
    }

    std::size_t n = g.node_names_.size();
    g.out_edges_.resize(n);
    g.in_edges_.resize(n);
    g.adjacency_.resize(n);
    g.action_like_.assign(n, false);
    for (std::uint32_t ei = 0; ei < g.edges_.size(); ++ei) {
        const Edge& e = g.edges_[ei];
        g.out_edges_[e.start].push_back(ei);
        g.in_edges_[e.end].push_back(ei);
        g.pair_index_[pair_key(e.start, e.end)].push_back(ei);
        if (e.start != e.end) {
            g.adjacency_[e.start].push_back(e.end);
            g.adjacency_[e.end].push_back(e.start);
        }
        const std::string& rel = g.relation_names_[e.relation];
        if (rel == "UsedFor" || rel == "CapableOf" || rel == "ReceivesAction") {
            g.action_like_[e.end] = true;
        }
    }
    for (auto& adj : g.adjacency_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
    return g;
}

KnowledgeGraph KnowledgeGraph::ingest_file(const std::string& path,
                                           std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw IngestError("cannot open assertions file: " + path);
    return ingest(in, warnings);
}

bool KnowledgeGraph::contains(const ConceptId& c) const {
    return node_index_.count(c) > 0;
}

std::vector<ConceptId> KnowledgeGraph::nodes() const {
    std::vector<ConceptId> out(node_names_.begin(), node_names_.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Assertion> KnowledgeGraph::all_assertions() const {
    std::vector<Assertion> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) {
        out.push_back({relation_names_[e.relation], node_names_[e.start], node_names_[e.end],
                       e.weight});
    }
    std::sort(out.begin(), out.end(), [](const Assertion& a, const Assertion& b) {
        return std::tie(a.relation, a.start, a.end) < std::tie(b.relation, b.start, b.end);
    });
    return out;
}

std::uint32_t KnowledgeGraph::node_id(const ConceptId& c) const {
    auto it = node_index_.find(c);
    if (it == node_index_.end()) throw MissingConceptError(c);
    return it->second;
}

std::optional<std::uint32_t> KnowledgeGraph::find_node(const ConceptId& c) const {
    auto it = node_index_.find(c);
    if (it == node_index_.end()) return std::nullopt;
    return it->second;
}

const std::vector<std::uint32_t>* KnowledgeGraph::pair_edges(std::uint32_t a,
                                                             std::uint32_t b) const {
    auto it = pair_index_.find(pair_key(a, b));
    return it == pair_index_.end() ? nullptr : &it->second;
}

double KnowledgeGraph::pair_weight(std::uint32_t a, std::uint32_t b) const {
    const auto* ids = pair_edges(a, b);
    if (!ids) return 0.0;
    double best = -std::numeric_limits<double>::infinity();
    for (std::uint32_t ei : *ids) {
        const Edge& e = edges_[ei];
        double w = is_negated_relation(relation_names_[e.relation]) ? -e.weight : e.weight;
        best = std::max(best, w);
    }
    return best;
}

bool KnowledgeGraph::pair_has_compositional(std::uint32_t a, std::uint32_t b) const {
    const auto* ids = pair_edges(a, b);
    if (!ids) return false;
    for (std::uint32_t ei : *ids) {
        if (compositional_.count(relation_names_[edges_[ei].relation])) return true;
    }
    return false;
}

double KnowledgeGraph::assertion_weight(const ConceptId& a, const ConceptId& b) const {
    std::uint32_t ia = node_id(a);
    std::uint32_t ib = node_id(b);
    const auto* ids = pair_edges(ia, ib);
    if (!ids) return 0.0;
    return pair_weight(ia, ib);
}

std::optional<Assertion> KnowledgeGraph::strongest_assertion(const ConceptId& a,
                                                             const ConceptId& b) const {
    std::uint32_t ia = node_id(a);
    std::uint32_t ib = node_id(b);
    const auto* ids = pair_edges(ia, ib);
    if (!ids) return std::nullopt;
    const Edge* best = nullptr;
    double best_w = -std::numeric_limits<double>::infinity();
    std::string best_rel;
    for (std::uint32_t ei : *ids) {
        const Edge& e = edges_[ei];
        const std::string& rel = relation_names_[e.relation];
        double w = is_negated_relation(rel) ? -e.weight : e.weight;
        if (w > best_w || (w == best_w && best && rel < best_rel)) {
            best = &e;
            best_w = w;
            best_rel = rel;
        }
    }
    return Assertion{relation_names_[best->relation], node_names_[best->start],
                     node_names_[best->end], best->weight};
}

std::optional<ContextualPath> KnowledgeGraph::contextual_path(const ConceptId& a,
                                                              const ConceptId& b,
                                                              int hop_bound) const {
    std::uint32_t src = node_id(a);
    std::uint32_t dst = node_id(b);
    if (src == dst) return std::nullopt;  // zero-edge self path carries no compositional edge
    if (hop_bound < 1) return std::nullopt;

    // Unconstrained hop distances to the target, for pruning.
    std::vector<int> dist(node_names_.size(), -1);
    {
        std::deque<std::uint32_t> queue{dst};
        dist[dst] = 0;
        while (!queue.empty()) {
            std::uint32_t v = queue.front();
            queue.pop_front();
            if (dist[v] >= hop_bound) continue;
            for (std::uint32_t u : adjacency_[v]) {
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
    }
    if (dist[src] < 0) return std::nullopt;

    // Lower bound on qualifying hops: shortest walk in the (node, seen
    // compositional edge) product graph.
    int lower = -1;
    {
        std::vector<std::array<int, 2>> pdist(node_names_.size(), {{-1, -1}});
        std::deque<std::pair<std::uint32_t, int>> queue;
        pdist[src][0] = 0;
        queue.emplace_back(src, 0);
        while (!queue.empty()) {
            auto [v, flag] = queue.front();
            queue.pop_front();
            int d = pdist[v][flag];
            if (v == dst && flag == 1) {
                lower = d;
                break;
            }
            if (d >= hop_bound) continue;
            for (std::uint32_t u : adjacency_[v]) {
                int nflag = (flag == 1 || pair_has_compositional(v, u)) ? 1 : 0;
                if (pdist[u][nflag] < 0) {
                    pdist[u][nflag] = d + 1;
                    queue.emplace_back(u, nflag);
                }
            }
        }
    }
    if (lower < 0) return std::nullopt;

    // Enumerate simple paths of exactly L hops, shortest length first, keeping
    // the best candidate by (max total signed pair weight, then lexicographic
    // node sequence). Recursion depth is bounded by the hop bound.
    std::vector<std::uint32_t> stack;
    std::vector<bool> on_stack(node_names_.size(), false);
    bool found = false;
    double best_weight = 0.0;
    std::vector<std::uint32_t> best_nodes;

    auto better = [this, &found, &best_weight, &best_nodes](
                      double weight, const std::vector<std::uint32_t>& nodes) {
        if (!found) return true;
        if (weight != best_weight) return weight > best_weight;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (nodes[i] != best_nodes[i]) {
                return node_names_[nodes[i]] < node_names_[best_nodes[i]];
            }
        }
        return false;
    };

    std::function<void(std::uint32_t, int, double, bool, int)> extend =
        [&](std::uint32_t v, int hops_used, double weight, bool has_comp, int length) {
            int remaining = length - hops_used - 1;
            for (std::uint32_t u : adjacency_[v]) {
                if (on_stack[u]) continue;
                if (dist[u] < 0 || dist[u] > remaining) continue;
                if (u == dst && remaining != 0) continue;  // cannot pass through the target
                bool comp = has_comp || pair_has_compositional(v, u);
                double w = weight + pair_weight(v, u);
                if (remaining == 0) {
                    if (!comp) continue;  // u == dst here
                    stack.push_back(u);
                    if (better(w, stack)) {
                        found = true;
                        best_weight = w;
                        best_nodes = stack;
                    }
                    stack.pop_back();
                    continue;
                }
                stack.push_back(u);
                on_stack[u] = true;
                extend(u, hops_used + 1, w, comp, length);
                on_stack[u] = false;
                stack.pop_back();
            }
        };

    for (int length = std::max(lower, 1); length <= hop_bound; ++length) {
        stack.assign(1, src);
        on_stack[src] = true;
        found = false;
        extend(src, 0, 0.0, false, length);
        on_stack[src] = false;
        if (found) {
            ContextualPath path;
            path.has_compositional = true;
            for (std::uint32_t id : best_nodes) path.nodes.push_back(node_names_[id]);
            for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i) {
                path.edges.push_back(*strongest_assertion(path.nodes[i], path.nodes[i + 1]));
            }
            return path;
        }
    }
    return std::nullopt;
}

std::vector<Assertion> KnowledgeGraph::neighbors(
    const ConceptId& c, const std::optional<std::set<std::string>>& relation_filter,
    EdgeDirection direction) const {
    std::uint32_t id = node_id(c);
    std::vector<std::uint32_t> edge_ids;
    if (direction == EdgeDirection::Out || direction == EdgeDirection::Both) {
        edge_ids.insert(edge_ids.end(), out_edges_[id].begin(), out_edges_[id].end());
    }
    if (direction == EdgeDirection::In || direction == EdgeDirection::Both) {
        for (std::uint32_t ei : in_edges_[id]) {
            // self-loops already collected from the out list
            if (direction == EdgeDirection::Both && edges_[ei].start == id) continue;
            edge_ids.push_back(ei);
        }
    }
    std::vector<Assertion> out;
    for (std::uint32_t ei : edge_ids) {
        const Edge& e = edges_[ei];
        const std::string& rel = relation_names_[e.relation];
        if (relation_filter && !relation_filter->count(rel)) continue;
        out.push_back({rel, node_names_[e.start], node_names_[e.end], e.weight});
    }
    std::sort(out.begin(), out.end(), [](const Assertion& a, const Assertion& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        return std::tie(a.relation, a.start, a.end) < std::tie(b.relation, b.start, b.end);
    });
    return out;
}

std::set<ConceptId> KnowledgeGraph::reachable(const std::vector<ConceptId>& seeds,
                                              int hops) const {
    std::vector<int> dist(node_names_.size(), -1);
    std::deque<std::uint32_t> queue;
    for (const ConceptId& c : seeds) {
        std::uint32_t id = node_id(c);
        if (dist[id] < 0) {
            dist[id] = 0;
            queue.push_back(id);
        }
    }
    while (!queue.empty()) {
        std::uint32_t v = queue.front();
        queue.pop_front();
        if (dist[v] >= hops) continue;
        for (std::uint32_t u : adjacency_[v]) {
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    std::set<ConceptId> out;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        if (dist[i] >= 0) out.insert(node_names_[i]);
    }
    return out;
}

bool KnowledgeGraph::is_action_like(const ConceptId& c) const {
    return action_like_[node_id(c)];
}

}  // namespace openworld
