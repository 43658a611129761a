#pragma once

#include <string>
#include <string_view>

namespace kov {

/// Handle to a named symbolic parameter. Identity is the id; the label lives
/// in the process-wide registry.
struct Param {
  int id = 0;

  friend bool operator==(Param a, Param b) { return a.id == b.id; }
  friend auto operator<=>(Param a, Param b) { return a.id <=> b.id; }
};

/// The distinguished Laurent variable. Always id 0, label "eps".
inline constexpr Param kEps{0};

/// Returns the parameter with this label, creating it on first use.
/// Thread-safe; ids are never reused.
Param intern(std::string_view label);

/// Looks up a label without creating it.
bool lookup(std::string_view label, Param& out);

const std::string& label(Param p);

/// Number of parameters registered so far.
int registry_size();

}  // namespace kov
