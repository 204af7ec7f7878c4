#pragma once

#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "jetlift/multiindex.hpp"
#include "jetlift/rational.hpp"

namespace jetlift {

/// The truncated polynomial algebra D^r_k together with its ordered monomial
/// basis. Copies share one immutable basis table.
class AlgebraParams {
 public:
  AlgebraParams(unsigned r, std::size_t k);

  unsigned r() const { return data_->r; }
  std::size_t k() const { return data_->k; }
  std::size_t dim() const { return data_->basis.size(); }
  std::span<const MultiIndex> basis() const { return data_->basis; }
  const MultiIndex& monomial(std::size_t position) const { return data_->basis.at(position); }

  /// Basis position of a monomial, or nullopt if its degree exceeds r or its
  /// length is not k.
  std::optional<std::size_t> position(const MultiIndex& a) const;
  std::optional<std::size_t> position(std::span<const MultiIndex::Exponent> entries) const;

  /// Same as `position` but throws ContractViolation on a miss.
  std::size_t position_of(const MultiIndex& a) const;

  friend bool operator==(const AlgebraParams& a, const AlgebraParams& b) {
    return a.r() == b.r() && a.k() == b.k();
  }

 private:
  struct Data {
    unsigned r;
    std::size_t k;
    std::vector<MultiIndex> basis;
    // Dense mixed-radix table over [0, r]^k when small enough, else a hash map.
    std::vector<std::int32_t> dense;
    std::unordered_map<std::uint64_t, std::size_t> sparse;
    bool use_dense;
  };
  std::shared_ptr<const Data> data_;
};

/// x^z * x^e in D^r_k: z + e, or nullopt when the product is truncated to 0.
/// Throws ContractViolation if either factor has degree > r.
std::optional<MultiIndex> multiply_monomials(const AlgebraParams& p, const MultiIndex& z,
                                             const MultiIndex& e);

/// Element of D^r_k stored densely over the canonical basis.
class AlgebraElement {
 public:
  explicit AlgebraElement(AlgebraParams params);
  AlgebraElement(AlgebraParams params, std::vector<Rational> coeffs);

  static AlgebraElement zero(const AlgebraParams& p) { return AlgebraElement(p); }
  static AlgebraElement one(const AlgebraParams& p);
  static AlgebraElement monomial(const AlgebraParams& p, const MultiIndex& a,
                                 const Rational& c = 1);

  const AlgebraParams& params() const { return params_; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  const Rational& coeff(std::size_t position) const { return coeffs_.at(position); }
  const Rational& coeff(const MultiIndex& a) const;
  void set_coeff(const MultiIndex& a, const Rational& c);
  bool is_zero() const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.params_ == b.params_ && a.coeffs_ == b.coeffs_;
  }

 private:
  AlgebraParams params_;
  std::vector<Rational> coeffs_;
};

/// Bilinear extension of multiply_monomials.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

/// a + c * b.
AlgebraElement add_scaled(const AlgebraElement& a, const Rational& c, const AlgebraElement& b);

/// Uniformly random small rational coefficients on every basis monomial.
AlgebraElement random_element(const AlgebraParams& p, std::mt19937_64& rng);

}  // namespace jetlift
