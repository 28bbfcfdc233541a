#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "openworld/concept_id.hpp"

namespace openworld {

// Concept -> dense vector table, loaded from word2vec-style text. Row-major
// contiguous storage so similarity scans run through the simd kernels.
// Immutable after load.
class EmbeddingTable {
public:
    // Format: optional "<count> <dim>" header, then "<token> v1 ... vd" rows.
    // The dimension is fixed by the first vector; rows with a different
    // dimension, zero-norm rows, and repeated tokens are skipped with a
    // warning. Throws IngestError when no vector survives.
    static EmbeddingTable load(std::istream& in, std::vector<std::string>* warnings = nullptr);
    static EmbeddingTable load_file(const std::string& path,
                                    std::vector<std::string>* warnings = nullptr);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return index_.size(); }
    bool contains(const ConceptId& c) const { return index_.count(c) > 0; }

    // Throws MissingEmbeddingError.
    std::span<const float> vector_of(const ConceptId& c) const;

    // Cosine similarity in [-1, 1]. Throws MissingEmbeddingError.
    double cosine(const ConceptId& a, const ConceptId& b) const;

    // Tokens in insertion order, aligned with row storage.
    const std::vector<ConceptId>& tokens() const { return tokens_; }
    const float* row_data() const { return data_.data(); }

private:
    std::size_t dim_ = 0;
    std::vector<float> data_;
    std::vector<ConceptId> tokens_;
    std::unordered_map<ConceptId, std::size_t> index_;
};

}  // namespace openworld
