#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gammacoh/cohomology.hpp"

namespace gammacoh {

/// The Eisenstein cocycle of weight 2k on SL2(Z) with values in the dual
/// module of degree 2k: A -> ex^2k - ey^2k, B -> 0.
class EisensteinClass {
 public:
  unsigned k() const { return k_; }
  const CocycleClass& cocycle() const { return cocycle_; }

  /// (1 + A + A^2 + A^3) f(A), zero for a cocycle.
  HomogeneousPoly order_four_defect() const;
  /// (1 + A) f(A) - (1 + B + B^2) f(B), zero for a cocycle.
  HomogeneousPoly braid_defect() const;

  friend EisensteinClass e2k(unsigned k);

 private:
  EisensteinClass(unsigned k, CocycleClass c) : k_(k), cocycle_(std::move(c)) {}
  unsigned k_;
  CocycleClass cocycle_;
};

/// Throws std::invalid_argument for k = 0 and std::logic_error if either
/// relator condition fails.
EisensteinClass e2k(unsigned k);

/// 2kn + 2k + 1
unsigned long class_degree(unsigned k, unsigned n);

enum class SeriesVariant { verbatim_sl2z, corrected_sl2z, verbatim_theta };

std::string to_string(SeriesVariant v);
SeriesVariant parse_series_variant(std::string_view text);
/// The group whose cohomology a series variant describes.
GroupName series_group(SeriesVariant v);
/// corrected_sl2z for SL2(Z), verbatim_theta for the theta group.
SeriesVariant default_series(GroupName g);

struct PoincareSeries {
  unsigned n = 1;
  unsigned ell = 2;
  SeriesVariant variant = SeriesVariant::corrected_sl2z;
  /// coefficients[d] is the coefficient of z^d, d = 0..max_degree.
  std::vector<Integer> coefficients;

  Integer coefficient(std::size_t degree) const;
  /// Nonzero (degree, count) pairs.
  std::vector<std::pair<std::size_t, Integer>> nonzero() const;
};

/// Exact power-series expansion up to z^max_degree.  Throws
/// std::invalid_argument if n is even or the variant does not match n
/// (the SL2(Z) variants need n in {1, 3, 7}, the theta variant needs n
/// outside it).
PoincareSeries poincare_coefficients(unsigned n, SeriesVariant variant, std::size_t max_degree);

/// Odd n whose automorphism group is the given group (1 and 5).
unsigned default_sphere_dimension(GroupName g);

/// Dimension of the space of cusp forms of even weight >= 4.
unsigned long cusp_form_dim(unsigned weight, GroupName g);
/// (#cusps) + 2 dim S_{2m+2}, for m >= 1.
unsigned long h1_dim_oracle(unsigned m, GroupName g);
std::size_t cusp_count(GroupName g);

enum class BundleKind { theta_gamma, mq11, mp, mp10 };
std::string to_string(BundleKind b);

struct BundleEvaluation {
  BundleKind bundle = BundleKind::theta_gamma;
  std::optional<IntMatrix2> gamma;
  /// Reduced restriction (theta_gamma) or the specialized polynomial.
  std::variant<HomogeneousPoly, UnivariateTerm> value;
  bool nonzero = false;

  std::string value_string() const;
};

/// Throws std::domain_error if gamma is not in the class's group.
BundleEvaluation evaluate_on_theta_gamma(const CocycleClass& c, const IntMatrix2& gamma);
/// delta_star of the Eisenstein cocycle at (2 -1; 1 0).
BundleEvaluation evaluate_on_MQ11(unsigned k);
/// pr_x of the Eisenstein cocycle at T (SL2(Z)) or T^2 (theta).
BundleEvaluation evaluate_on_MP(unsigned k, GroupName g);
BundleEvaluation evaluate_on_MP10(unsigned k, GroupName g);

/// Generator of the unipotent subgroup P of the group: T or T^2.
IntMatrix2 unipotent_generator(GroupName g);

struct CuspDetection {
  CuspClass cusp;
  std::optional<std::size_t> class_index;
};

struct DetectionReport {
  GroupName group = GroupName::SL2Z;
  unsigned weight = 1;
  unsigned radius = 8;
  std::size_t dim_h1 = 0;
  std::vector<ClassDetection> detections;
  std::vector<CuspDetection> cusp_detections;
  SpanningCertificate spanning;

  bool complete() const;
};

DetectionReport detection_report(GroupName g, unsigned m, unsigned radius);

/// One row of the dimension table for weight index m (module degree 2m).
struct DimensionRow {
  unsigned m = 0;
  std::size_t dim_h0 = 0;
  std::optional<std::size_t> dim_h1_presentation;
  std::optional<std::size_t> dim_h1_shapiro;
  Integer series_coefficient;
  std::optional<unsigned long> oracle;
  bool agree = true;
};

enum class DimensionMethod { presentation, shapiro, both };

/// Rows m = 0..weight_max.  The Shapiro route only applies to theta and is
/// ignored for SL2(Z).
std::vector<DimensionRow> dimension_table(GroupName g, unsigned weight_max, DimensionMethod method,
                                          bool with_oracle, SeriesVariant series, unsigned n);

/// Verbatim vs corrected SL2(Z) series against the computed dimensions.
struct DiscrepancyRow {
  unsigned m = 0;
  std::size_t degree = 0;
  Integer verbatim;
  Integer corrected;
  std::size_t computed = 0;
  bool verbatim_agrees() const { return verbatim == Integer(computed); }
  bool corrected_agrees() const { return corrected == Integer(computed); }
};

std::vector<DiscrepancyRow> series_discrepancy(unsigned n, unsigned weight_max);

}  // namespace gammacoh
