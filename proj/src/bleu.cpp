#include "crossmodal/ngram_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace crossmodal {

namespace {

constexpr int kMaxOrder = 4;

using Counts = std::unordered_map<std::string, std::uint64_t>;

// tokens never contain 0x1f, so it is a safe join separator
std::string ngram_key(const Sentence& s, std::size_t start, int order) {
    std::string key = s[start];
    for (int k = 1; k < order; ++k) {
        key.push_back('\x1f');
        key += s[start + std::size_t(k)];
    }
    return key;
}

Counts ngram_counts(const Sentence& s, int order) {
    Counts counts;
    if (s.size() < std::size_t(order)) return counts;
    for (std::size_t i = 0; i + std::size_t(order) <= s.size(); ++i) {
        ++counts[ngram_key(s, i, order)];
    }
    return counts;
}

}  // namespace

double bleu4(const std::vector<Sentence>& candidates,
             const std::vector<SentenceSet>& reference_sets) {
    if (candidates.empty() || candidates.size() != reference_sets.size()) {
        throw std::invalid_argument("bleu4: need equally many candidates and reference sets");
    }
    std::uint64_t matched[kMaxOrder] = {0, 0, 0, 0};
    std::uint64_t total[kMaxOrder] = {0, 0, 0, 0};
    std::uint64_t candidate_len = 0;
    std::uint64_t effective_ref_len = 0;

    for (std::size_t item = 0; item < candidates.size(); ++item) {
        const Sentence& cand = candidates[item];
        const SentenceSet& refs = reference_sets[item];
        if (refs.empty()) throw std::invalid_argument("bleu4: item with no references");

        candidate_len += cand.size();
        // reference closest in length to the candidate; ties prefer the shorter
        std::size_t best_len = refs.front().size();
        for (const Sentence& ref : refs) {
            const auto gap = [&](std::size_t len) {
                return len > cand.size() ? len - cand.size() : cand.size() - len;
            };
            if (gap(ref.size()) < gap(best_len) ||
                (gap(ref.size()) == gap(best_len) && ref.size() < best_len)) {
                best_len = ref.size();
            }
        }
        effective_ref_len += best_len;

        for (int order = 1; order <= kMaxOrder; ++order) {
            const Counts cand_counts = ngram_counts(cand, order);
            if (cand_counts.empty()) continue;
            Counts clip;
            for (const Sentence& ref : refs) {
                for (const auto& [gram, count] : ngram_counts(ref, order)) {
                    auto it = clip.find(gram);
                    if (it == clip.end()) {
                        clip.emplace(gram, count);
                    } else {
                        it->second = std::max(it->second, count);
                    }
                }
            }
            for (const auto& [gram, count] : cand_counts) {
                total[order - 1] += count;
                auto it = clip.find(gram);
                if (it != clip.end()) matched[order - 1] += std::min(count, it->second);
            }
        }
    }

    double log_precision = 0.0;
    for (int n = 0; n < kMaxOrder; ++n) {
        if (matched[n] == 0 || total[n] == 0) return 0.0;
        log_precision += 0.25 * std::log(double(matched[n]) / double(total[n]));
    }
    double brevity = 1.0;
    if (candidate_len < effective_ref_len) {
        if (candidate_len == 0) return 0.0;
        brevity = std::exp(1.0 - double(effective_ref_len) / double(candidate_len));
    }
    return 100.0 * brevity * std::exp(log_precision);
}

}  // namespace crossmodal
