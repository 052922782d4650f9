#pragma once

#include <string>
#include <vector>

namespace crossmodal {

using Sentence = std::vector<std::string>;
using SentenceSet = std::vector<Sentence>;

/// Corpus-level BLEU with uniform weights over 1..4-grams and the standard
/// brevity penalty, scaled to [0, 100]. Effective reference length per
/// item is the reference closest in length to the candidate (ties go to
/// the shorter one). Returns 0 when any order has no match.
double bleu4(const std::vector<Sentence>& candidates,
             const std::vector<SentenceSet>& reference_sets);

/// CIDEr-D: tf-idf weighted n-gram cosine against each reference, with
/// count clipping and a Gaussian length penalty (sigma 6), averaged over
/// n = 1..4 and scaled by 10. Document frequencies are computed over the
/// reference sets, one document per item.
double cider_d(const std::vector<Sentence>& candidates,
               const std::vector<SentenceSet>& reference_sets);

}  // namespace crossmodal
