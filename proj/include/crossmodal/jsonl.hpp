#pragma once

#include "crossmodal/corpus.hpp"
#include "crossmodal/types.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crossmodal {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& path, std::size_t line, const std::string& message)
        : std::runtime_error(path + ":" + std::to_string(line) + ": " + message) {}
};

struct GeneratedCaption {
    std::string image_id;
    std::optional<std::string> participant_id;
    std::vector<std::string> tokens;
};

// Readers for the line-delimited corpus formats. Each throws ParseError
// with the offending line number; validation beyond field shape happens
// in load_corpus.
std::vector<TimedCaption> read_captions_jsonl(const std::string& path);
std::vector<FixationTrial> read_fixations_jsonl(const std::string& path);
std::vector<ImageRecord> read_boxes_jsonl(const std::string& path);
std::vector<GeneratedCaption> read_generated_jsonl(const std::string& path);

}  // namespace crossmodal
