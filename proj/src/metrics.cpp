#include "crossmodal/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace crossmodal {

namespace {

std::size_t index_gap(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

}  // namespace

ClosestMatch closest_in(std::span<const std::string> other, std::string_view token,
                        std::size_t token_index, const EmbeddingTable& table) {
    if (other.empty()) throw std::invalid_argument("closest_in: empty sentence");
    ClosestMatch best{0, cos_distance(token, other[0], table)};
    for (std::size_t j = 1; j < other.size(); ++j) {
        const double d = cos_distance(token, other[j], table);
        if (d < best.distance) {
            best = {j, d};
        } else if (d == best.distance &&
                   index_gap(j, token_index) < index_gap(best.index, token_index)) {
            best = {j, d};
        }
        // equal distance and equal positional gap keeps the earlier index
    }
    return best;
}

SsdBreakdown ssd(std::span<const std::string> generated, std::span<const std::string> reference,
                 const EmbeddingTable& table) {
    if (generated.empty() || reference.empty()) {
        throw std::invalid_argument("ssd: sentences must be non-empty");
    }
    const double longest = double(std::max(generated.size(), reference.size()));

    auto direction = [&](std::span<const std::string> from, std::span<const std::string> to,
                         std::vector<SsdTokenTerm>& terms) {
        double sum = 0.0;
        terms.reserve(from.size());
        for (std::size_t i = 0; i < from.size(); ++i) {
            const ClosestMatch match = closest_in(to, from[i], i, table);
            // index differences are the same 0-based or 1-based
            const double pos = double(index_gap(i, match.index)) / longest;
            terms.push_back({from[i], match.distance, pos});
            sum += match.distance + pos;
        }
        return sum;
    };

    SsdBreakdown breakdown;
    breakdown.gr = direction(generated, reference, breakdown.gr_terms);
    breakdown.rg = direction(reference, generated, breakdown.rg_terms);
    breakdown.ssd = (breakdown.gr + breakdown.rg) / 2.0;
    return breakdown;
}

double oss(std::span<const std::string> path_a, std::span<const std::string> path_b) {
    if (path_a.empty() || path_b.empty()) {
        throw std::invalid_argument("oss: scanpaths must be non-empty");
    }
    const double longest = double(std::max(path_a.size(), path_b.size()));

    auto direction = [&](std::span<const std::string> from, std::span<const std::string> to) {
        double sum = 0.0;
        for (std::size_t i = 0; i < from.size(); ++i) {
            bool found = false;
            std::size_t best_gap = 0;
            for (std::size_t j = 0; j < to.size(); ++j) {
                if (to[j] != from[i]) continue;
                const std::size_t gap = index_gap(i, j);
                if (!found || gap < best_gap) {
                    found = true;
                    best_gap = gap;
                }
            }
            sum += found ? double(best_gap) / longest : 1.0;
        }
        return sum;
    };

    return (direction(path_a, path_b) + direction(path_b, path_a)) / 2.0;
}

double bow_sentence_similarity(std::span<const std::string> a_tokens,
                               std::span<const std::string> b_tokens,
                               const EmbeddingTable& table) {
    const std::vector<double> va = sentence_vector(a_tokens, table);
    const std::vector<double> vb = sentence_vector(b_tokens, table);
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t k = 0; k < va.size(); ++k) {
        dot += va[k] * vb[k];
        na += va[k] * va[k];
        nb += vb[k] * vb[k];
    }
    if (na == 0.0 || nb == 0.0) {
        throw std::invalid_argument("bow_sentence_similarity: zero-norm sentence vector");
    }
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

double bow_scanpath_similarity(std::span<const std::string> a_labels,
                               std::span<const std::string> b_labels) {
    if (a_labels.empty() || b_labels.empty()) {
        throw std::invalid_argument("bow_scanpath_similarity: scanpaths must be non-empty");
    }
    std::map<std::string, std::pair<double, double>> freq;
    for (const std::string& l : a_labels) freq[l].first += 1.0;
    for (const std::string& l : b_labels) freq[l].second += 1.0;
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (const auto& [label, f] : freq) {
        dot += f.first * f.second;
        na += f.first * f.first;
        nb += f.second * f.second;
    }
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

double corpus_ssd(std::span<const EvalPair> pairs, const EmbeddingTable& table) {
    if (pairs.empty()) throw std::invalid_argument("corpus_ssd: no items");
    double total = 0.0;
    for (const EvalPair& pair : pairs) {
        if (pair.references.empty()) throw std::invalid_argument("corpus_ssd: item with no references");
        double item = 0.0;
        for (const auto& ref : pair.references) {
            item += ssd(pair.generated, ref, table).ssd;
        }
        total += item / double(pair.references.size());
    }
    return total / double(pairs.size());
}

}  // namespace crossmodal
