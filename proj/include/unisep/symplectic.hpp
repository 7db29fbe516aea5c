#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "unisep/gf/matrix.hpp"
#include "unisep/jordan.hpp"

namespace unisep {

/// Non-degenerate alternating bilinear form beta(v, w) = v^T G w.
class SymplecticForm {
 public:
  /// Validates that gram is square, invertible, alternating.
  explicit SymplecticForm(gf::Matrix gram);
  /// Anti-diagonal Gram matrix on GF(p)^n (n even): ones on the upper half
  /// of the anti-diagonal and -1 on the lower half.
  static SymplecticForm anti_diagonal(unsigned prime, std::size_t n);

  const gf::Matrix& gram() const noexcept { return gram_; }
  std::size_t dim() const noexcept { return gram_.rows(); }
  unsigned prime() const noexcept { return gram_.prime(); }

 private:
  gf::Matrix gram_;
};

/// m^T G m == G.
bool is_isometry(const gf::Matrix& m, const SymplecticForm& form);

/// Smallest n >= 0 with beta(X^n v, X^(n+1) v) = 0 on all of Ker X^m, X = u - I.
/// Checked on a kernel basis together with the polarization cross terms.
std::size_t chi(const gf::Matrix& u, const SymplecticForm& form, std::size_t m);

struct LabelPart {
  std::size_t size;
  std::size_t chi;
  std::size_t multiplicity;
  friend bool operator==(const LabelPart&, const LabelPart&) = default;
  friend auto operator<=>(const LabelPart&, const LabelPart&) = default;
};

/// Jordan type decorated with chi of each block size, e.g. (2_1^2, 6_3).
class HesselinkLabel {
 public:
  HesselinkLabel() = default;
  /// Parts must have strictly increasing sizes and positive multiplicities.
  explicit HesselinkLabel(std::vector<LabelPart> parts);
  /// Accepts the to_string() form, e.g. "(2_1^2, 6_3)".
  static HesselinkLabel parse(std::string_view text);

  const std::vector<LabelPart>& parts() const noexcept { return parts_; }
  JordanType jordan_type() const;
  std::string to_string() const;

  friend bool operator==(const HesselinkLabel&, const HesselinkLabel&) = default;
  friend auto operator<=>(const HesselinkLabel&, const HesselinkLabel&) = default;

 private:
  std::vector<LabelPart> parts_;
};

HesselinkLabel hesselink_label(const gf::Matrix& u, const SymplecticForm& form);

}  // namespace unisep
