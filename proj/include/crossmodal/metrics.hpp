#pragma once

#include "crossmodal/embeddings.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crossmodal {

struct ClosestMatch {
    std::size_t index = 0;  // 0-based position in the other sentence
    double distance = 0.0;  // cosine distance
};

/// Index of the semantically closest token in `other`. Ties are broken by
/// smaller positional distance to `token_index`, then by smaller index.
ClosestMatch closest_in(std::span<const std::string> other, std::string_view token,
                        std::size_t token_index, const EmbeddingTable& table);

struct SsdTokenTerm {
    std::string token;
    double cos_part = 0.0;
    double pos_part = 0.0;
};

struct SsdBreakdown {
    double gr = 0.0;   // generated -> reference direction
    double rg = 0.0;   // reference -> generated direction
    double ssd = 0.0;  // (gr + rg) / 2
    std::vector<SsdTokenTerm> gr_terms;
    std::vector<SsdTokenTerm> rg_terms;
};

/// Semantic and sequential distance between two sentences. Each token is
/// charged its cosine distance to the closest token on the other side plus
/// the positional offset of that match normalised by the longer sentence
/// length. Lower is better; 0 only for identical sentences; unbounded
/// above. Throws on an empty sentence.
SsdBreakdown ssd(std::span<const std::string> generated, std::span<const std::string> reference,
                 const EmbeddingTable& table);

/// Exact-match analogue of ssd for categorical sequences: each label is
/// charged the normalised offset to the nearest occurrence of the same
/// label on the other side, or a flat 1 when the label is absent there;
/// the two directions are averaged. Throws on an empty sequence.
double oss(std::span<const std::string> path_a, std::span<const std::string> path_b);

/// Cosine similarity of the two mean sentence vectors, in [-1, 1].
double bow_sentence_similarity(std::span<const std::string> a_tokens,
                               std::span<const std::string> b_tokens,
                               const EmbeddingTable& table);

/// Cosine similarity of label-frequency vectors, in [0, 1].
double bow_scanpath_similarity(std::span<const std::string> a_labels,
                               std::span<const std::string> b_labels);

enum class SsdAggregation { PerReferenceMean, OneToOne };

struct EvalPair {
    std::vector<std::string> generated;
    std::vector<std::vector<std::string>> references;
};

/// Mean over items of the mean ssd against each reference in the item's
/// set. One-to-one scoring is expressed by supplying single-element
/// reference sets.
double corpus_ssd(std::span<const EvalPair> pairs, const EmbeddingTable& table);

}  // namespace crossmodal
