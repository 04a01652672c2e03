#ifndef VALENCE_VERDICT_HPP_
#define VALENCE_VERDICT_HPP_

#include <string_view>

namespace valence {

  // Three-valued answer of every bounded decision procedure. Undetermined
  // means a budget ran out before the search space was exhausted; it is
  // never folded into No.
  enum class Verdict { Yes, No, Undetermined };

  constexpr std::string_view to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::Yes:
        return "Yes";
      case Verdict::No:
        return "No";
      case Verdict::Undetermined:
        return "Undetermined";
    }
    return "Undetermined";
  }

}  // namespace valence

#endif  // VALENCE_VERDICT_HPP_
