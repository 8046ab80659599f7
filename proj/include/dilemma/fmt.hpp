#ifndef DILEMMA_FMT_HPP
#define DILEMMA_FMT_HPP

#include <cstdio>
#include <string>

namespace dilemma {

// Compact decimal form: "4" for 4.0, "2.5", "0.669741...". 12 significant
// digits is enough to make equal doubles print equally everywhere.
inline std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Fixed-point form used by the CSV emitters (bit-identical output matters).
inline std::string fmt_fixed(double v, int places) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  return buf;
}

}  // namespace dilemma

#endif  // DILEMMA_FMT_HPP
