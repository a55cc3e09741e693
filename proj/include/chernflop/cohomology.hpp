#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chernflop/rational.hpp"
#include "chernflop/xseries.hpp"

namespace chernflop {

inline constexpr int kMaxGenerators = 8;
using Exponents = std::array<std::uint8_t, kMaxGenerators>;

class CohSpace;
using SpacePtr = std::shared_ptr<const CohSpace>;

/// Graded element of a modeled cohomology ring. Terms above the ambient
/// dimension, and base terms violating h_i^{n_i+1} = 0, are dropped.
class CohElement {
 public:
  CohElement() = default;
  explicit CohElement(SpacePtr space) : space_(std::move(space)) {}

  static CohElement constant(SpacePtr space, const Rational& c);
  static CohElement generator(SpacePtr space, int index, const Rational& c = 1);

  const SpacePtr& space() const { return space_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Every term has total degree d (the zero element is homogeneous of any degree).
  bool is_homogeneous(int d) const;
  CohElement homogeneous_part(int d) const;
  Rational coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);

  CohElement operator-() const;
  CohElement& operator+=(const CohElement& other);
  CohElement& operator-=(const CohElement& other);
  CohElement& operator*=(const Rational& c);
  friend CohElement operator+(CohElement a, const CohElement& b) { return a += b; }
  friend CohElement operator-(CohElement a, const CohElement& b) { return a -= b; }
  friend CohElement operator*(const CohElement& a, const CohElement& b);
  friend CohElement operator*(CohElement a, const Rational& c) { return a *= c; }
  friend CohElement operator*(const Rational& c, CohElement a) { return a *= c; }
  friend bool operator==(const CohElement& a, const CohElement& b) { return a.terms_ == b.terms_; }

  CohElement pow(int e) const;
  // Integral over the fundamental class of the ambient space.
  Rational integrate() const;

 private:
  SpacePtr space_;
  std::map<Exponents, Rational> terms_;
};

int degree(const Exponents& e);

struct BundleLayer {
  int rank = 0;
  std::vector<CohElement> roots;   // Chern roots of V, living on the base
  std::vector<CohElement> segre;   // segre[d] = [prod 1/(1+v_j)]_d on the base
};

/// Product of projective spaces, optionally with one projective-bundle layer
/// P(V) on top. Generators: one hyperplane class per factor, then u.
class CohSpace {
 public:
  const std::vector<int>& base_dims() const { return base_dims_; }
  const std::optional<BundleLayer>& layer() const { return layer_; }
  const SpacePtr& base() const { return base_; }
  int num_generators() const { return static_cast<int>(base_dims_.size()) + (layer_ ? 1 : 0); }
  int base_dim() const { return base_dim_; }
  int dim() const { return dim_; }
  // Largest exponent that survives for a generator.
  int cap(int generator) const;
  int fiber_generator() const { return static_cast<int>(base_dims_.size()); }
  Rational integrate_monomial(const Exponents& e) const;

 private:
  friend SpacePtr make_base(const std::vector<int>& dims);
  friend SpacePtr add_projective_bundle(const SpacePtr& space, const std::vector<CohElement>& roots);

  std::vector<int> base_dims_;
  std::optional<BundleLayer> layer_;
  SpacePtr base_;  // the space below the layer (null without a layer)
  int base_dim_ = 0;
  int dim_ = 0;
};

SpacePtr make_base(const std::vector<int>& dims);

/// P(V) over a base without layers; integration pushes u^i down via
/// pi_*(u^i) = [c(V)^{-1}]_{i-(r-1)}.
SpacePtr add_projective_bundle(const SpacePtr& space, const std::vector<CohElement>& roots);

/// pi_*(u^i) as an element of the base.
CohElement pushforward_power(const SpacePtr& bundle, int i);

/// Re-expresses an element on `target`, sending generator j to gen_map[j].
CohElement pull(const CohElement& x, const SpacePtr& target, const std::vector<int>& gen_map);

struct ProductSpace {
  SpacePtr space;
  std::vector<int> map_a;
  std::vector<int> map_b;
};

/// Product of two models; at most one factor may carry a bundle layer.
ProductSpace product_space(const SpacePtr& a, const SpacePtr& b);

/// Sum_j c[j] x^j in the ring of x.
CohElement apply_series(const CohElement& x, const xseries::Coeffs& c);

enum class ClassKind { chern_total, chern_character, todd };

/// Multiplicative (chern_total, todd) or additive (chern_character) class of
/// the virtual bundle sum(pos) - sum(neg), truncated above degree dim.
CohElement char_class(const std::vector<CohElement>& roots_pos, const std::vector<CohElement>& roots_neg,
                      ClassKind kind, int dim);

std::string to_string(const CohElement& x);

}  // namespace chernflop
