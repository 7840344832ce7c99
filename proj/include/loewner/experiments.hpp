#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "loewner/image.hpp"

namespace loewner {

struct ExperimentConfig {
    std::filesystem::path output_dir;
    /// Natural image for the gallery and transitivity runs; the bundled 64x64 image when empty.
    std::optional<std::filesystem::path> input;
    bool write_images = true;
};

/// Named metrics and pass/fail flags. Serialised as sorted `key=value` lines.
struct ExperimentReport {
    std::map<std::string, double> metrics;
    std::map<std::string, bool> flags;
    std::map<std::string, std::string> notes;

    std::string to_key_value() const;
    std::string to_json() const;
    bool all_passed() const;
};

/// Path of the natural test image shipped in data/.
std::filesystem::path bundled_image_path();

/// Blue/green halves, LES dilation/erosion and the channel-wise baseline with a 9x9 square.
void run_halves_experiment(ExperimentReport& report, const std::filesystem::path* out_dir);

/// LES dilation, erosion, opening, closing and finite-m dilations with a 3x3 square.
void run_gallery_experiment(const RgbImage8& img, ExperimentReport& report, const std::filesystem::path* out_dir);

/// 5x5 vs twice 3x3 and 9x9 vs four times 3x3 for the LES and trace back-ends.
void run_transitivity_experiment(const RgbImage8& img, ExperimentReport& report, const std::filesystem::path* out_dir);

/// Runs all three experiments, writes images plus report.txt / report.json to output_dir.
ExperimentReport run_experiment_suite(const ExperimentConfig& config);

}  // namespace loewner
