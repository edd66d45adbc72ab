#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tiler {

enum class error_code {
  parse_error,
  not_connected,
  empty,
  too_large,
  arc_not_in_figure,
  not_a_cycle,
  not_elementary,
  not_clockwise,
  not_a_domino,
  overlap,
  gap,
  domino_outside_figure,
  inconsistent_cycle,
  not_a_height_function,
  different_figures,
  flip_not_available,
  not_tileable,
  unreachable,
  window_cap_exceeded,
  sandwich_violated,
};

inline std::string_view to_string(error_code code) noexcept {
  switch (code) {
    case error_code::parse_error: return "parse error";
    case error_code::not_connected: return "figure is not 4-connected";
    case error_code::empty: return "figure is empty";
    case error_code::too_large: return "figure too large";
    case error_code::arc_not_in_figure: return "arc not in figure";
    case error_code::not_a_cycle: return "not a cycle";
    case error_code::not_elementary: return "cycle is not elementary";
    case error_code::not_clockwise: return "cycle is not clockwise";
    case error_code::not_a_domino: return "cells do not form a domino";
    case error_code::overlap: return "dominoes overlap";
    case error_code::gap: return "dominoes leave a gap";
    case error_code::domino_outside_figure: return "domino outside figure";
    case error_code::inconsistent_cycle: return "inconsistent cycle";
    case error_code::not_a_height_function: return "not a height function";
    case error_code::different_figures: return "height functions of different figures";
    case error_code::flip_not_available: return "flip not available";
    case error_code::not_tileable: return "untileable";
    case error_code::unreachable: return "unreachable";
    case error_code::window_cap_exceeded: return "coupling window cap exceeded";
    case error_code::sandwich_violated: return "monotone coupling violated";
  }
  return "unknown error";
}

class error : public std::runtime_error {
 public:
  explicit error(error_code code)
      : std::runtime_error(std::string(to_string(code))), code_(code) {}
  error(error_code code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  error_code code() const noexcept { return code_; }

 private:
  error_code code_;
};

}  // namespace tiler
