#pragma once

#include "crossmodal/types.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace crossmodal {

class CorpusError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TrialKey {
    std::string image_id;
    std::string participant_id;
    auto operator<=>(const TrialKey&) const = default;
};

struct FixationTrial {
    std::string image_id;
    std::string participant_id;
    std::vector<FixationEvent> events;  // time-ordered
};

/// Immutable view over a validated corpus. Safe to share across threads.
class CorpusHandle {
public:
    /// Builds a handle from in-memory records, applying the same
    /// normalisation and validation as load_corpus.
    static CorpusHandle from_records(std::vector<ImageRecord> images,
                                     std::vector<TimedCaption> captions,
                                     std::vector<FixationTrial> trials);

    const std::map<std::string, ImageRecord>& images() const { return images_; }
    const ImageRecord& image(const std::string& image_id) const;

    /// Captions in file order.
    const std::vector<TimedCaption>& captions() const { return captions_; }
    const TimedCaption* caption(const std::string& image_id, const std::string& participant_id) const;
    std::vector<const TimedCaption*> captions_for(const std::string& image_id) const;

    const std::map<TrialKey, FixationTrial>& trials() const { return trials_; }
    const FixationTrial* trial(const std::string& image_id, const std::string& participant_id) const;

    /// Captions with no matching fixation trial. Reported, not fatal.
    const std::vector<TrialKey>& captions_without_fixations() const { return missing_fixations_; }

private:
    std::map<std::string, ImageRecord> images_;
    std::vector<TimedCaption> captions_;
    std::map<TrialKey, std::size_t> caption_index_;
    std::map<TrialKey, FixationTrial> trials_;
    std::vector<TrialKey> missing_fixations_;
};

/// Loads and validates the three line-delimited corpus files. Throws
/// CorpusError naming the file and line for any malformed record,
/// caption/onset length mismatch or duplicate (image, participant) key.
CorpusHandle load_corpus(const std::string& captions_path,
                         const std::string& fixations_path,
                         const std::string& boxes_path);

/// Drops saccades, blinks and out-of-image fixations, then merges each
/// maximal uninterrupted run of surviving fixations into one window.
/// Window centroids are duration-weighted means of the member points.
std::vector<FixationWindow> extract_windows(std::span<const FixationEvent> events,
                                            const ImageRecord& image);

/// Maps each window to the label of the smallest-area bounding box that
/// contains its centroid, in time order. Windows outside every box
/// contribute nothing; consecutive duplicate labels are kept.
Scanpath extract_scanpath(std::span<const FixationWindow> windows, const ImageRecord& image,
                          const std::string& participant_id);

struct SplitAssignment {
    std::vector<std::string> train;
    std::vector<std::string> val;
    std::vector<std::string> test;
};

/// Seeded image-level split: floor(val_frac*n) validation images,
/// floor(test_frac*n) test images, everything else train.
SplitAssignment random_split(std::span<const std::string> image_ids, double val_frac,
                             double test_frac, std::uint64_t seed);

struct SplitStats {
    int n_images = 0;
    int n_captions = 0;
    double avg_captions_per_image = 0.0;
    int min_captions = 0;
    int max_captions = 0;
};

/// Per-split image/caption bookkeeping, keyed "train"/"val"/"test"/"total".
std::map<std::string, SplitStats> split_stats(const CorpusHandle& corpus,
                                              const SplitAssignment& split);

}  // namespace crossmodal
