#include "openworld/embedding_table.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "openworld/error.hpp"
#include "openworld/simd/vec_ops.hpp"

namespace openworld {

EmbeddingTable EmbeddingTable::load(std::istream& in, std::vector<std::string>* warnings) {
    EmbeddingTable table;
    auto warn = [warnings](std::size_t line_no, const std::string& msg) {
        if (warnings) warnings->push_back("line " + std::to_string(line_no) + ": " + msg);
    };

    std::string line;
    std::size_t line_no = 0;
    bool first_content_line = true;
    std::vector<float> values;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::string token;
        if (!(row >> token)) continue;

        // "<count> <dim>" header: two integer fields on the first line.
        if (first_content_line) {
            first_content_line = false;
            std::istringstream probe(line);
            long long count = 0, dim = 0;
            std::string extra;
            if (probe >> count >> dim && !(probe >> extra) && count >= 0 && dim > 0) {
                continue;
            }
        }

        values.clear();
        float v = 0.0f;
        while (row >> v) values.push_back(v);
        if (!row.eof()) {
            warn(line_no, "non-numeric vector component for token '" + token + "'");
            continue;
        }
        if (values.empty()) {
            warn(line_no, "no vector components for token '" + token + "'");
            continue;
        }
        if (table.dim_ == 0) {
            table.dim_ = values.size();
        } else if (values.size() != table.dim_) {
            warn(line_no, "dimension mismatch for token '" + token + "': got " +
                              std::to_string(values.size()) + ", expected " +
                              std::to_string(table.dim_));
            continue;
        }
        double norm_sq = 0.0;
        for (float x : values) norm_sq += static_cast<double>(x) * x;
        if (!(norm_sq > 0.0) || !std::isfinite(norm_sq)) {
            warn(line_no, "zero-norm or non-finite vector for token '" + token + "'");
            continue;
        }
        ConceptId id = normalize_concept(token);
        if (id.empty()) {
            warn(line_no, "empty token after normalization");
            continue;
        }
        if (table.index_.count(id)) {
            warn(line_no, "duplicate token '" + id + "', keeping the first vector");
            continue;
        }
        table.index_.emplace(id, table.tokens_.size());
        table.tokens_.push_back(id);
        table.data_.insert(table.data_.end(), values.begin(), values.end());
    }
    if (table.tokens_.empty()) {
        throw IngestError("no valid embedding rows in input");
    }
    return table;
}

EmbeddingTable EmbeddingTable::load_file(const std::string& path,
                                         std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw IngestError("cannot open embeddings file: " + path);
    return load(in, warnings);
}

std::span<const float> EmbeddingTable::vector_of(const ConceptId& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) throw MissingEmbeddingError(c);
    return {data_.data() + it->second * dim_, dim_};
}

double EmbeddingTable::cosine(const ConceptId& a, const ConceptId& b) const {
    return simd::cosine(vector_of(a), vector_of(b));
}

}  // namespace openworld
