#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "openworld/embedding_table.hpp"
#include "openworld/knowledge_graph.hpp"

namespace openworld {

// Path decay: weight of the k-th hop from the source is gamma * (1-epsilon)^k.
struct DecayParams {
    double gamma = 1.0;
    double epsilon = 0.5;
};

// Open-world mapping score between a source-domain and a target-domain
// concept. The contextual path is kept only when it contributes positive
// similarity.
struct MappingScore {
    ConceptId source;
    ConceptId target;
    double d_rel = 0.0;  // cosine relatedness, in [-1, 1]
    double d_cs = 0.0;   // decayed path similarity, clamped at 0
    double f_k = 0.5;    // logistic(d_cs / clamped d_rel), in (0, 1)
    std::optional<ContextualPath> path;
};

// Per target concept: sources ranked by descending f_k. Every target concept
// of the expanded vocabulary has at least one entry.
using VocabularyMapping = std::map<ConceptId, std::vector<MappingScore>>;

double logistic(double x);

// Cosine similarity of the two concept embeddings. Throws
// MissingEmbeddingError.
double relatedness(const EmbeddingTable& emb, const ConceptId& a, const ConceptId& b);

// gamma * (1 - epsilon)^k.
double decay_weight(int k, const DecayParams& params);

struct ContextualSimilarity {
    double d_cs = 0.0;
    std::optional<ContextualPath> path;
};

// Sum of decayed signed pair weights along the contextual path from `from` to
// `to`; the decay index counts edges from `from`. (0, nullopt) when no
// qualifying path exists.
ContextualSimilarity contextual_similarity(const KnowledgeGraph& kg, const ConceptId& from,
                                           const ConceptId& to, const DecayParams& params,
                                           int hop_bound = KnowledgeGraph::kDefaultHopBound);

inline constexpr double kRelatednessClamp = 0.05;

// f_k = logistic(d_cs / max(d_rel, rel_clamp)). Negative path similarity is
// clamped to the 0.5 no-path baseline. Throws on unknown concepts or missing
// embeddings.
MappingScore map_score(const KnowledgeGraph& kg, const EmbeddingTable& emb,
                       const ConceptId& source, const ConceptId& target,
                       const DecayParams& params,
                       int hop_bound = KnowledgeGraph::kDefaultHopBound,
                       double rel_clamp = kRelatednessClamp);

// Ranks the top_k sources for every target concept. Shared concepts map to
// themselves with f_k = 1. Pairs that cannot be scored (concept missing from
// the graph or the table) fall back to the 0.5 baseline so that every target
// concept still receives entries. Throws ConfigError on empty vocabularies.
VocabularyMapping expand_vocabulary(const KnowledgeGraph& kg, const EmbeddingTable& emb,
                                    const std::set<ConceptId>& source_vocab,
                                    const std::set<ConceptId>& target_vocab,
                                    const DecayParams& params, int top_k,
                                    int hop_bound = KnowledgeGraph::kDefaultHopBound,
                                    double rel_clamp = kRelatednessClamp);

// f_k for a (target, source) pair recorded in the mapping; 0 when absent.
double mapping_f_k(const VocabularyMapping& mapping, const ConceptId& target,
                   const ConceptId& source);

}  // namespace openworld
