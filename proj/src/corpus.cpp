#include "crossmodal/corpus.hpp"

#include "crossmodal/jsonl.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <random>
#include <utility>

namespace crossmodal {

namespace {

std::string key_str(const std::string& image_id, const std::string& participant_id) {
    return "(" + image_id + ", " + participant_id + ")";
}

bool punctuation_only(const std::string& tok) {
    if (tok.empty()) return true;
    for (unsigned char c : tok) {
        if (!std::ispunct(c)) return false;
    }
    return true;
}

// Lowercase and drop punctuation-only tokens together with their onsets.
// Requires tokens/onsets of equal length.
void normalize_caption(TimedCaption& cap) {
    std::vector<std::string> tokens;
    std::vector<std::int64_t> onsets;
    tokens.reserve(cap.tokens.size());
    onsets.reserve(cap.onsets_ms.size());
    for (std::size_t i = 0; i < cap.tokens.size(); ++i) {
        std::string tok = cap.tokens[i];
        for (char& c : tok) c = char(std::tolower(static_cast<unsigned char>(c)));
        if (punctuation_only(tok)) continue;
        tokens.push_back(std::move(tok));
        onsets.push_back(cap.onsets_ms[i]);
    }
    cap.tokens = std::move(tokens);
    cap.onsets_ms = std::move(onsets);
}

void validate_image(const ImageRecord& img) {
    const std::string where = "image '" + img.image_id + "'";
    if (img.image_id.empty()) throw CorpusError("image record with empty image_id");
    if (img.width_px <= 0 || img.height_px <= 0) {
        throw CorpusError(where + ": non-positive dimensions");
    }
    for (const BoundingBox& b : img.boxes) {
        if (b.w <= 0.0 || b.h <= 0.0) {
            throw CorpusError(where + ": box '" + b.label + "' has non-positive size");
        }
        bool intersects = b.x < double(img.width_px) && b.x + b.w > 0.0 &&
                          b.y < double(img.height_px) && b.y + b.h > 0.0;
        if (!intersects) {
            throw CorpusError(where + ": box '" + b.label + "' lies outside the image");
        }
    }
}

void validate_caption(const TimedCaption& cap) {
    const std::string where = "caption " + key_str(cap.image_id, cap.participant_id);
    if (cap.tokens.size() != cap.onsets_ms.size()) {
        throw CorpusError(where + ": " + std::to_string(cap.tokens.size()) + " tokens but " +
                          std::to_string(cap.onsets_ms.size()) + " onsets");
    }
    if (cap.tokens.empty()) throw CorpusError(where + ": no tokens left after preprocessing");
    for (std::size_t i = 0; i < cap.onsets_ms.size(); ++i) {
        if (cap.onsets_ms[i] < 0) throw CorpusError(where + ": negative onset");
        if (i > 0 && cap.onsets_ms[i] < cap.onsets_ms[i - 1]) {
            throw CorpusError(where + ": onsets are not non-decreasing");
        }
    }
}

void validate_trial(const FixationTrial& trial) {
    const std::string where = "fixation trial " + key_str(trial.image_id, trial.participant_id);
    std::int64_t prev_start = std::numeric_limits<std::int64_t>::min();
    for (const FixationEvent& e : trial.events) {
        if (e.t_end_ms <= e.t_start_ms) {
            throw CorpusError(where + ": event with t_end_ms <= t_start_ms");
        }
        if (e.t_start_ms < prev_start) {
            throw CorpusError(where + ": events are not time-ordered");
        }
        prev_start = e.t_start_ms;
    }
}

}  // namespace

CorpusHandle CorpusHandle::from_records(std::vector<ImageRecord> images,
                                        std::vector<TimedCaption> captions,
                                        std::vector<FixationTrial> trials) {
    CorpusHandle handle;
    for (ImageRecord& img : images) {
        validate_image(img);
        std::string id = img.image_id;
        if (!handle.images_.emplace(id, std::move(img)).second) {
            throw CorpusError("duplicate image record for '" + id + "'");
        }
    }
    for (TimedCaption& cap : captions) {
        if (cap.tokens.size() != cap.onsets_ms.size()) {
            validate_caption(cap);  // throws the mismatch error before normalisation
        }
        normalize_caption(cap);
        validate_caption(cap);
        if (!handle.images_.contains(cap.image_id)) {
            throw CorpusError("caption " + key_str(cap.image_id, cap.participant_id) +
                              " references unknown image '" + cap.image_id + "'");
        }
        TrialKey key{cap.image_id, cap.participant_id};
        if (!handle.caption_index_.emplace(key, handle.captions_.size()).second) {
            throw CorpusError("duplicate caption for " + key_str(cap.image_id, cap.participant_id));
        }
        handle.captions_.push_back(std::move(cap));
    }
    for (FixationTrial& trial : trials) {
        validate_trial(trial);
        if (!handle.images_.contains(trial.image_id)) {
            throw CorpusError("fixation trial " + key_str(trial.image_id, trial.participant_id) +
                              " references unknown image '" + trial.image_id + "'");
        }
        TrialKey key{trial.image_id, trial.participant_id};
        if (!handle.trials_.emplace(key, std::move(trial)).second) {
            throw CorpusError("duplicate fixation trial for " +
                              key_str(key.image_id, key.participant_id));
        }
    }
    for (const TimedCaption& cap : handle.captions_) {
        if (!handle.trials_.contains({cap.image_id, cap.participant_id})) {
            handle.missing_fixations_.push_back({cap.image_id, cap.participant_id});
        }
    }
    return handle;
}

const ImageRecord& CorpusHandle::image(const std::string& image_id) const {
    auto it = images_.find(image_id);
    if (it == images_.end()) throw CorpusError("unknown image '" + image_id + "'");
    return it->second;
}

const TimedCaption* CorpusHandle::caption(const std::string& image_id,
                                          const std::string& participant_id) const {
    auto it = caption_index_.find({image_id, participant_id});
    return it == caption_index_.end() ? nullptr : &captions_[it->second];
}

std::vector<const TimedCaption*> CorpusHandle::captions_for(const std::string& image_id) const {
    std::vector<const TimedCaption*> out;
    for (const TimedCaption& cap : captions_) {
        if (cap.image_id == image_id) out.push_back(&cap);
    }
    return out;
}

const FixationTrial* CorpusHandle::trial(const std::string& image_id,
                                         const std::string& participant_id) const {
    auto it = trials_.find({image_id, participant_id});
    return it == trials_.end() ? nullptr : &it->second;
}

CorpusHandle load_corpus(const std::string& captions_path, const std::string& fixations_path,
                         const std::string& boxes_path) {
    return CorpusHandle::from_records(read_boxes_jsonl(boxes_path),
                                      read_captions_jsonl(captions_path),
                                      read_fixations_jsonl(fixations_path));
}

std::vector<FixationWindow> extract_windows(std::span<const FixationEvent> events,
                                            const ImageRecord& image) {
    std::vector<FixationWindow> windows;
    std::vector<const FixationEvent*> run;

    auto flush = [&] {
        if (run.empty()) return;
        FixationWindow w;
        w.t_start_ms = run.front()->t_start_ms;
        w.t_end_ms = run.back()->t_end_ms;
        double sum_x = 0.0, sum_y = 0.0;
        std::int64_t total = 0;
        for (const FixationEvent* e : run) {
            const double d = double(e->duration_ms());
            sum_x += d * e->x_px;
            sum_y += d * e->y_px;
            total += e->duration_ms();
        }
        w.duration_ms = total;
        w.centroid_x_px = sum_x / double(total);
        w.centroid_y_px = sum_y / double(total);
        windows.push_back(w);
        run.clear();
    };

    for (const FixationEvent& e : events) {
        const bool survives = e.kind == GazeEventKind::Fixation && image.contains(e.x_px, e.y_px);
        if (survives) {
            run.push_back(&e);
        } else {
            flush();  // saccade, blink or out-of-image fixation breaks the run
        }
    }
    flush();
    return windows;
}

Scanpath extract_scanpath(std::span<const FixationWindow> windows, const ImageRecord& image,
                          const std::string& participant_id) {
    Scanpath path{image.image_id, participant_id, {}};
    for (const FixationWindow& w : windows) {
        const BoundingBox* best = nullptr;
        for (const BoundingBox& b : image.boxes) {
            if (!b.contains(w.centroid_x_px, w.centroid_y_px)) continue;
            if (!best || b.area() < best->area()) best = &b;
        }
        if (best) path.labels.push_back(best->label);
    }
    return path;
}

SplitAssignment random_split(std::span<const std::string> image_ids, double val_frac,
                             double test_frac, std::uint64_t seed) {
    if (val_frac < 0.0 || test_frac < 0.0 || val_frac + test_frac >= 1.0) {
        throw CorpusError("invalid split fractions");
    }
    std::vector<std::string> ids(image_ids.begin(), image_ids.end());
    std::mt19937_64 rng(seed);
    // explicit Fisher-Yates so the assignment is pinned to the raw engine
    // output rather than a distribution implementation
    for (std::size_t i = ids.size(); i > 1; --i) {
        std::size_t j = std::size_t(rng() % i);
        std::swap(ids[i - 1], ids[j]);
    }
    const std::size_t n = ids.size();
    const std::size_t n_val = std::size_t(val_frac * double(n));
    const std::size_t n_test = std::size_t(test_frac * double(n));
    SplitAssignment out;
    out.val.assign(ids.begin(), ids.begin() + n_val);
    out.test.assign(ids.begin() + n_val, ids.begin() + n_val + n_test);
    out.train.assign(ids.begin() + n_val + n_test, ids.end());
    return out;
}

std::map<std::string, SplitStats> split_stats(const CorpusHandle& corpus,
                                              const SplitAssignment& split) {
    std::map<std::string, int> captions_per_image;
    for (const auto& [id, img] : corpus.images()) captions_per_image[id] = 0;
    for (const TimedCaption& cap : corpus.captions()) ++captions_per_image[cap.image_id];

    auto stats_for = [&](std::span<const std::string> ids) {
        SplitStats s;
        s.n_images = int(ids.size());
        bool first = true;
        for (const std::string& id : ids) {
            auto it = captions_per_image.find(id);
            if (it == captions_per_image.end()) {
                throw CorpusError("split references unknown image '" + id + "'");
            }
            const int k = it->second;
            s.n_captions += k;
            s.min_captions = first ? k : std::min(s.min_captions, k);
            s.max_captions = first ? k : std::max(s.max_captions, k);
            first = false;
        }
        if (!ids.empty()) s.avg_captions_per_image = double(s.n_captions) / double(s.n_images);
        return s;
    };

    std::map<std::string, SplitStats> out;
    out["train"] = stats_for(split.train);
    out["val"] = stats_for(split.val);
    out["test"] = stats_for(split.test);

    std::vector<std::string> all;
    all.insert(all.end(), split.train.begin(), split.train.end());
    all.insert(all.end(), split.val.begin(), split.val.end());
    all.insert(all.end(), split.test.begin(), split.test.end());
    out["total"] = stats_for(all);
    return out;
}

}  // namespace crossmodal
