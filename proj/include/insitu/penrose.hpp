#pragma once

#include <array>
#include <optional>
#include <string>

#include "insitu/matrix.hpp"

namespace insitu {

// Which of the four Penrose conditions a candidate inverse G of A satisfies:
//   (1) A G A = A      (2) G A G = G
//   (3) A G = (A G)^*  (4) G A = (G A)^*
// defects[k] is the relative Frobenius defect of condition k+1; holds[k] is
// defects[k] <= tol.
struct PenroseReport {
  std::array<bool, 4> holds{};
  std::array<double, 4> defects{};
  std::string class_label;  // e.g. "{124}", "{1234}", "{}"
  double tol = 0.0;

  /// True when every condition listed in `conditions` (digits 1-4) holds.
  bool satisfies(const std::string& conditions) const;
};

/// Default classification threshold, 1e-8 * max(m, n).
double default_penrose_tol(const Matrix& a) noexcept;

// Defect denominators: |A| for (1), |G| for (2), max(1, |AG|) and
// max(1, |GA|) for (3) and (4). A zero |A| or |G| is replaced by 1.
PenroseReport penrose_check(const Matrix& a, const Matrix& g,
                            std::optional<double> tol = std::nullopt);

/// Factorize in row form, G = (A')^* M, then penrose_check. Always {1,2,4}.
PenroseReport classify_row_method(const Matrix& a, std::optional<double> tol = std::nullopt);
/// Factorize in column form, G = M (A')^*, then penrose_check. Always {1,2,3}.
PenroseReport classify_col_method(const Matrix& a, std::optional<double> tol = std::nullopt);

}  // namespace insitu
