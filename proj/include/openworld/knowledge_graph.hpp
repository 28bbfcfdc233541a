#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "openworld/concept_id.hpp"

namespace openworld {

// One directed, weighted, labeled edge of the commonsense graph.
struct Assertion {
    std::string relation;
    ConceptId start;
    ConceptId end;
    double weight = 1.0;

    bool operator==(const Assertion&) const = default;
};

// Shortest qualifying path between two concepts. `edges[i]` is the strongest
// assertion connecting `nodes[i]` and `nodes[i+1]` (either direction).
struct ContextualPath {
    std::vector<ConceptId> nodes;
    std::vector<Assertion> edges;
    bool has_compositional = false;

    std::size_t hops() const { return edges.size(); }
};

enum class EdgeDirection { Out, In, Both };

// In-memory indexed multigraph over normalized concepts. Immutable after
// ingestion; all queries are const and safe to run concurrently.
class KnowledgeGraph {
public:
    // Accepts simplified TSV rows (relation \t start \t end \t weight, '#'
    // comments ignored) and official ConceptNet 5.x CSV dump rows (5
    // tab-separated fields, weight inside the JSON metadata), mixed freely.
    // Malformed rows are reported to `warnings` with their line number and
    // skipped; non-English concepts in official rows are skipped silently.
    // Throws IngestError when no valid row survives.
    static KnowledgeGraph ingest(std::istream& in, std::vector<std::string>* warnings = nullptr);
    static KnowledgeGraph ingest_file(const std::string& path,
                                      std::vector<std::string>* warnings = nullptr);

    bool contains(const ConceptId& c) const;
    std::size_t node_count() const { return node_names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    // Concept names in lexicographic order.
    std::vector<ConceptId> nodes() const;
    // Edges sorted by (relation, start, end); canonical form for dumps and
    // graph comparison.
    std::vector<Assertion> all_assertions() const;

    // phi(a, b): strongest signed assertion weight between a and b in either
    // direction ("Not*" relations contribute negative weight); 0 when no edge
    // connects them. Throws MissingConceptError.
    double assertion_weight(const ConceptId& a, const ConceptId& b) const;

    // The assertion achieving assertion_weight, when any edge exists.
    std::optional<Assertion> strongest_assertion(const ConceptId& a, const ConceptId& b) const;

    // Minimum-hop simple path from a to b containing at least one
    // compositional assertion, edges traversable in both directions. Ties are
    // broken by larger total signed pair weight, then lexicographic node
    // sequence. Returns nullopt when no qualifying path exists within
    // hop_bound.
    std::optional<ContextualPath> contextual_path(const ConceptId& a, const ConceptId& b,
                                                  int hop_bound = kDefaultHopBound) const;

    // Edges incident to c, optionally filtered by relation, sorted by
    // descending weight (ties: relation, then far endpoint).
    std::vector<Assertion> neighbors(const ConceptId& c,
                                     const std::optional<std::set<std::string>>& relation_filter,
                                     EdgeDirection direction) const;

    // Concepts reachable from the seed set within `hops` undirected steps
    // (the seeds themselves are included). Unknown seeds throw.
    std::set<ConceptId> reachable(const std::vector<ConceptId>& seeds, int hops) const;

    // True when c appears as the end of a UsedFor/CapableOf/ReceivesAction
    // edge, i.e. the graph asserts something can be done with/to it.
    bool is_action_like(const ConceptId& c) const;

    const std::set<std::string>& compositional_relations() const { return compositional_; }
    const std::set<std::string>& registered_relations() const { return relations_; }

    static constexpr int kDefaultHopBound = 4;

private:
    struct Edge {
        std::uint32_t relation;
        std::uint32_t start;
        std::uint32_t end;
        double weight;
    };

    std::uint32_t node_id(const ConceptId& c) const;  // throws MissingConceptError
    std::optional<std::uint32_t> find_node(const ConceptId& c) const;
    double pair_weight(std::uint32_t a, std::uint32_t b) const;
    const std::vector<std::uint32_t>* pair_edges(std::uint32_t a, std::uint32_t b) const;
    bool pair_has_compositional(std::uint32_t a, std::uint32_t b) const;

    std::vector<std::string> node_names_;
    std::unordered_map<std::string, std::uint32_t> node_index_;
    std::vector<std::string> relation_names_;
    std::unordered_map<std::string, std::uint32_t> relation_index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::uint32_t>> out_edges_;  // per node
    std::vector<std::vector<std::uint32_t>> in_edges_;
    // (min(a,b) << 32 | max(a,b)) -> edge ids connecting the unordered pair
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> pair_index_;
    std::vector<std::vector<std::uint32_t>> adjacency_;  // unordered neighbor node ids
    std::set<std::string> relations_;
    std::set<std::string> compositional_{"IsA", "HasProperty"};
    std::vector<bool> action_like_;
};

}  // namespace openworld
