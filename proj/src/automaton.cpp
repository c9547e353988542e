#include "qm/automaton.hpp"

#include "qm/error.hpp"

namespace qm {

PatternAutomaton::PatternAutomaton(std::span<const int> pattern, int alphabet)
    : length_(static_cast<int>(pattern.size())), alphabet_(alphabet) {
  if (pattern.empty()) throw PreconditionError("pattern must be nonempty");
  for (int c : pattern)
    if (c < 0 || c >= alphabet) throw ValidationError("pattern letter code out of range");
  table_.assign(static_cast<std::size_t>(length_) * alphabet_, 0);
  table_[pattern[0]] = 1;
  // Standard KMP automaton: row j copies the row of the restart state, then
  // overrides the advancing transition.
  for (int j = 1, restart = 0; j < length_; ++j) {
    for (int c = 0; c < alphabet_; ++c)
      table_[static_cast<std::size_t>(j) * alphabet_ + c] = table_[static_cast<std::size_t>(restart) * alphabet_ + c];
    table_[static_cast<std::size_t>(j) * alphabet_ + pattern[j]] = j + 1;
    restart = table_[static_cast<std::size_t>(restart) * alphabet_ + pattern[j]];
  }
}

}  // namespace qm
