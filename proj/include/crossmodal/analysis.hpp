#pragma once

#include "crossmodal/corpus.hpp"
#include "crossmodal/embeddings.hpp"
#include "crossmodal/stats.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace crossmodal {

struct PairwiseList {
    std::string image_id;
    std::vector<std::pair<std::string, std::string>> pair_keys;
    std::vector<double> values;
};

/// Enumerates the C(k,2) unordered pairs in canonical order: participants
/// sorted lexicographically, pairs in nested (i, j>i) order. value_fn is
/// called with the original indices of the two participants. Requires at
/// least 3 distinct participants.
PairwiseList pairwise_matrix(const std::string& image_id,
                             std::span<const std::string> participant_ids,
                             const std::function<double(std::size_t, std::size_t)>& value_fn);

enum class StudyCondition { Sequential, Bow, Random };

struct CorrelationResult {
    std::string image_id;
    double rho = 0.0;
    double p_value = 1.0;
    int n_pairs = 0;
    bool defined = false;
    bool significant = false;
};

struct StudyRunSummary {
    int n_images = 0;       // images analysed in this run
    int n_significant = 0;  // rho > 0 and p < alpha
    int n_undefined = 0;    // constant similarity lists, excluded from counts
    double pct_significant = 0.0;
    double rho_min_significant = 0.0;  // valid only when n_significant > 0
    double rho_max_significant = 0.0;
};

struct SkippedImage {
    std::string image_id;
    std::string reason;
};

struct StudyReport {
    StudyCondition condition;
    double alpha = 0.05;
    std::uint64_t seed = 0;
    int n_runs = 1;  // n_shuffles for the random condition, otherwise 1

    std::vector<std::vector<CorrelationResult>> per_run;  // [run][image]
    std::vector<StudyRunSummary> run_summaries;

    // Across runs (equal to the single run for sequential/bow).
    double count_mean = 0.0, count_std = 0.0;
    double pct_mean = 0.0, pct_std = 0.0;
    double rho_min_mean = 0.0, rho_min_std = 0.0;
    double rho_max_mean = 0.0, rho_max_std = 0.0;

    std::vector<SkippedImage> skipped;
};

/// Per-image correlation between caption-pair and scanpath-pair
/// similarities. Sequential pairs ssd with oss; bow pairs mean-embedding
/// cosine with label-frequency cosine; random re-runs the sequential
/// measures after seeded shuffling of the caption<->scanpath assignment
/// within each image, n_shuffles times. Images with fewer than 3 usable
/// trials are listed and skipped. Deterministic for a fixed seed,
/// independent of the job count.
StudyReport coordination_study(const CorpusHandle& corpus, const EmbeddingTable& table,
                               StudyCondition condition, double alpha, std::uint64_t seed,
                               int n_shuffles, int jobs = 1);

struct DiversityGroupStats {
    std::string name;
    int n_images = 0;
    double mean_unique_per_image = 0.0;
    double pct_unique_mean = 0.0;
};

struct ImageDiversity {
    std::string image_id;
    int n_captions = 0;
    int n_unique = 0;
    double pct_unique = 0.0;
};

struct DiversityReport {
    int n_images = 0;
    int n_captions = 0;
    double mean_unique_per_image = 0.0;
    double pct_unique_mean = 0.0;  // mean of per-image unique fractions
    std::size_t vocab_size = 0;
    double mean_caption_length = 0.0;
    std::optional<std::size_t> ref_vocab_size;
    std::optional<double> ref_mean_caption_length;
    std::vector<ImageDiversity> per_image;
    std::vector<DiversityGroupStats> groups;  // filled when group A ids given
};

using GenerationMap = std::map<std::string, std::vector<std::vector<std::string>>>;

/// Uniqueness, vocabulary and length statistics for generated captions,
/// with an optional A/B split over a list of image ids (group A).
DiversityReport diversity_stats(const GenerationMap& generations, const GenerationMap* references,
                                std::span<const std::string> group_a_ids);

}  // namespace crossmodal
