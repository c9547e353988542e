#pragma once

#include <span>
#include <vector>

namespace qm {

/// Failure function of a sequence: fail[i] is the length of the longest
/// proper border of pat[0..i].
template <class T>
std::vector<int> failure_function(std::span<const T> pat) {
  std::vector<int> fail(pat.size(), 0);
  for (std::size_t i = 1, k = 0; i < pat.size(); ++i) {
    while (k > 0 && !(pat[i] == pat[k])) k = fail[k - 1];
    if (pat[i] == pat[k]) ++k;
    fail[i] = static_cast<int>(k);
  }
  return fail;
}

/// Maximum number of pairwise non-overlapping occurrences of pat in text.
/// Greedy leftmost matching with a restart after each hit is optimal for a
/// single pattern.
template <class T>
int count_nonoverlap(std::span<const T> text, std::span<const T> pat) {
  if (pat.empty()) return 0;
  const auto fail = failure_function(pat);
  int count = 0;
  std::size_t k = 0;
  for (const T& x : text) {
    while (k > 0 && !(x == pat[k])) k = fail[k - 1];
    if (x == pat[k]) ++k;
    if (k == pat.size()) {
      ++count;
      k = 0;
    }
  }
  return count;
}

template <class T>
int count_nonoverlap(const std::vector<T>& text, const std::vector<T>& pat) {
  return count_nonoverlap(std::span<const T>(text), std::span<const T>(pat));
}

/// Deterministic matcher for one pattern over a dense letter alphabet.
/// States 0..m-1 record match progress; step() returning m signals a
/// complete occurrence, after which callers restart from 0.
class PatternAutomaton {
 public:
  PatternAutomaton() = default;
  PatternAutomaton(std::span<const int> pattern, int alphabet);

  int length() const { return length_; }
  int alphabet() const { return alphabet_; }
  int step(int state, int code) const { return table_[static_cast<std::size_t>(state) * alphabet_ + code]; }

 private:
  int length_ = 0;
  int alphabet_ = 0;
  std::vector<int> table_;
};

}  // namespace qm
