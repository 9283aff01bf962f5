#pragma once

/**
 * Canonical outcome orderings shared by every module.
 *
 * Two-valued outcomes over n propositions are indexed 0..2^n-1 with
 * proposition 0 as the most significant digit and T < F, so for n = 2 the
 * order is TT, TF, FT, FF.  Three-valued outcomes (T, F, U where U means
 * "not observable") are indexed 0..3^n-1 the same way with T < F < U:
 * TT, TF, TU, FT, FF, FU, UT, UF, UU.
 *
 * Dense tables are capped at n = 20 propositions for two-valued joints
 * (2^20 cells) and n = 12 for three-valued joints (3^12 cells).
 */

#include <cstddef>
#include <cstdint>
#include <string>

#include "ontoprob/errors.hpp"

namespace ontoprob {

using PropositionId = int;

inline constexpr int kMaxClassicalPropositions = 20;
inline constexpr int kMaxTfuPropositions = 12;

// Truth values in canonical digit order.
enum class Tfu : std::uint8_t { T = 0, F = 1, U = 2 };

inline std::size_t pow2(int n) { return std::size_t{1} << n; }

inline std::size_t pow3(int n) {
  std::size_t r = 1;
  for (int i = 0; i < n; ++i) r *= 3;
  return r;
}

// True iff proposition `prop` holds in two-valued outcome `cell`.
inline bool classical_truth(std::uint32_t cell, int n, PropositionId prop) {
  return ((cell >> (n - 1 - prop)) & 1u) == 0;
}

// Three-valued digit of proposition `prop` in outcome `cell`.
inline Tfu tfu_digit(std::size_t cell, int n, PropositionId prop) {
  for (int i = n - 1; i > prop; --i) cell /= 3;
  return static_cast<Tfu>(cell % 3);
}

// Outcome index with proposition `prop` set to `value`, other digits kept.
std::size_t tfu_with_digit(std::size_t cell, int n, PropositionId prop, Tfu value);

// "TF", "TU", ... labels in canonical order.
std::string classical_label(std::uint32_t cell, int n);
std::string tfu_label(std::size_t cell, int n);

// Inverse of the label functions; throws std::invalid_argument on bad input.
std::uint32_t classical_cell(const std::string& label, int n);
std::size_t tfu_cell(const std::string& label, int n);

inline char tfu_char(Tfu v) { return v == Tfu::T ? 'T' : (v == Tfu::F ? 'F' : 'U'); }

}  // namespace ontoprob
