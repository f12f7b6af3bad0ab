#pragma once

// Character appearance frequencies and hapax / dis legomena counts.

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "charnet/corpus_format.hpp"
#include "charnet/error.hpp"

namespace charnet {

struct Appearance {
  std::string label;
  unsigned count = 0;

  bool operator==(const Appearance&) const = default;
};

// f_i = number of cliques containing label i, in order of first appearance.
inline std::vector<Appearance> appearance_frequencies(const ParsedBook& book) {
  std::vector<Appearance> out;
  std::unordered_map<std::string, std::size_t> slot;
  for (const auto& rec : book.encounters) {
    for (const auto& clique : rec.cliques) {
      for (const auto& code : clique) {
        auto [it, inserted] = slot.try_emplace(code, out.size());
        if (inserted) out.push_back({code, 0});
        ++out[it->second].count;
      }
    }
  }
  return out;
}

struct HapaxReport {
  std::size_t n_characters = 0;
  std::size_t hapax_count = 0;  // f_i == 1
  std::size_t dis_count = 0;    // f_i == 2
  double hapax_ratio = 0.0;
  double dis_ratio = 0.0;
};

inline HapaxReport hapax_report(const ParsedBook& book) {
  const auto freq = appearance_frequencies(book);
  if (freq.empty()) throw DomainError("hapax report of a book without appearances");
  HapaxReport r;
  r.n_characters = freq.size();
  for (const auto& a : freq) {
    if (a.count == 1) ++r.hapax_count;
    if (a.count == 2) ++r.dis_count;
  }
  r.hapax_ratio = static_cast<double>(r.hapax_count) / static_cast<double>(r.n_characters);
  r.dis_ratio = static_cast<double>(r.dis_count) / static_cast<double>(r.n_characters);
  return r;
}

}  // namespace charnet
