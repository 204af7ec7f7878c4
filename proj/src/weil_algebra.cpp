#include "jetlift/weil_algebra.hpp"

#include <algorithm>
#include <string>

namespace jetlift {

namespace {

constexpr std::size_t kDenseLimit = std::size_t{1} << 20;

void require_same(const AlgebraParams& a, const AlgebraParams& b) {
  if (!(a == b)) {
    throw StructuralError("algebra mismatch: D^" + std::to_string(a.r()) + "_" +
                          std::to_string(a.k()) + " vs D^" + std::to_string(b.r()) + "_" +
                          std::to_string(b.k()));
  }
}

}  // namespace

AlgebraParams::AlgebraParams(unsigned r, std::size_t k) {
  auto data = std::make_shared<Data>();
  data->r = r;
  data->k = k;
  data->basis = enumerate_degree_at_most(k, r);

  // radix^k, saturating at the dense limit
  std::size_t table = 1;
  bool fits = true;
  for (std::size_t i = 0; i < k && fits; ++i) {
    table *= r + 1;
    fits = table <= kDenseLimit;
  }
  data->use_dense = fits;
  if (fits) data->dense.assign(table, -1);
  for (std::size_t pos = 0; pos < data->basis.size(); ++pos) {
    std::uint64_t key = 0;
    const auto e = data->basis[pos].entries();
    for (std::size_t i = k; i-- > 0;) key = key * (r + 1) + e[i];
    if (fits) {
      data->dense[key] = static_cast<std::int32_t>(pos);
    } else {
      data->sparse.emplace(key, pos);
    }
  }
  data_ = std::move(data);
}

std::optional<std::size_t> AlgebraParams::position(const MultiIndex& a) const {
  if (a.size() != data_->k) return std::nullopt;
  return position(a.entries());
}

std::optional<std::size_t> AlgebraParams::position(
    std::span<const MultiIndex::Exponent> e) const {
  if (e.size() != data_->k) return std::nullopt;
  unsigned total = 0;
  for (auto v : e) total += v;
  if (total > data_->r) return std::nullopt;
  std::uint64_t key = 0;
  for (std::size_t i = data_->k; i-- > 0;) key = key * (data_->r + 1) + e[i];
  if (data_->use_dense) return static_cast<std::size_t>(data_->dense[key]);
  return data_->sparse.at(key);
}

std::size_t AlgebraParams::position_of(const MultiIndex& a) const {
  if (a.size() != k()) {
    throw ContractViolation("monomial of length " + std::to_string(a.size()) +
                            " in an algebra with k = " + std::to_string(k()));
  }
  auto pos = position(a);
  if (!pos) {
    throw ContractViolation("monomial of degree " + std::to_string(degree(a)) +
                            " exceeds r = " + std::to_string(r()));
  }
  return *pos;
}

std::optional<MultiIndex> multiply_monomials(const AlgebraParams& p, const MultiIndex& z,
                                             const MultiIndex& e) {
  p.position_of(z);
  p.position_of(e);
  MultiIndex product = add(z, e);
  if (degree(product) > p.r()) return std::nullopt;
  return product;
}

AlgebraElement::AlgebraElement(AlgebraParams params)
    : params_(std::move(params)), coeffs_(params_.dim()) {}

AlgebraElement::AlgebraElement(AlgebraParams params, std::vector<Rational> coeffs)
    : params_(std::move(params)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != params_.dim()) {
    throw StructuralError("coefficient vector of length " + std::to_string(coeffs_.size()) +
                          " for an algebra of dimension " + std::to_string(params_.dim()));
  }
}

AlgebraElement AlgebraElement::one(const AlgebraParams& p) {
  return monomial(p, MultiIndex(p.k()));
}

AlgebraElement AlgebraElement::monomial(const AlgebraParams& p, const MultiIndex& a,
                                        const Rational& c) {
  AlgebraElement out(p);
  out.coeffs_[p.position_of(a)] = c;
  return out;
}

const Rational& AlgebraElement::coeff(const MultiIndex& a) const {
  return coeffs_[params_.position_of(a)];
}

void AlgebraElement::set_coeff(const MultiIndex& a, const Rational& c) {
  coeffs_[params_.position_of(a)] = c;
}

bool AlgebraElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a.params(), b.params());
  const AlgebraParams& p = a.params();
  std::vector<Rational> coeffs(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (a.coeff(i) == 0) continue;
    for (std::size_t j = 0; j < p.dim(); ++j) {
      if (b.coeff(j) == 0) continue;
      // basis entries have degree <= r already; only the sum needs a test
      MultiIndex prod = add(p.monomial(i), p.monomial(j));
      if (auto pos = p.position(prod)) coeffs[*pos] += a.coeff(i) * b.coeff(j);
    }
  }
  return AlgebraElement(p, std::move(coeffs));
}

AlgebraElement add_scaled(const AlgebraElement& a, const Rational& c, const AlgebraElement& b) {
  require_same(a.params(), b.params());
  std::vector<Rational> coeffs(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += c * b.coeff(i);
  return AlgebraElement(a.params(), std::move(coeffs));
}

AlgebraElement random_element(const AlgebraParams& p, std::mt19937_64& rng) {
  std::vector<Rational> coeffs(p.dim());
  for (auto& q : coeffs) q = random_rational(rng);
  return AlgebraElement(p, std::move(coeffs));
}

}  // namespace jetlift
