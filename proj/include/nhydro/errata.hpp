#pragma once

#include <string>
#include <vector>

namespace nhydro::errata {

/// A defect or ambiguity in the source formulas, with the resolution adopted
/// here and the verify suite that exercises it.
struct Entry {
  std::string id;
  std::string topic;
  std::string issue;
  std::string resolution;
  std::string suite;
};

const std::vector<Entry>& ledger();

/// Plain-text rendering, byte-identical across runs.
std::string render_text();

std::string render_json();

}  // namespace nhydro::errata
