#include "cybe/tensor.hpp"

#include <utility>

#include "cybe/errors.hpp"
#include "cybe/residual_core.hpp"

namespace cybe {

Tensor2 Tensor2::zero(const FieldPtr& f, int dim) {
  Tensor2 r;
  r.field_ = f;
  r.dim_ = dim;
  r.k_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), Scalar::zero(f));
  return r;
}

Tensor2 Tensor2::from_entries(const FieldPtr& f, int dim, std::vector<Scalar> entries) {
  if (entries.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim))
    throw Error("tensor entry count does not match dimension");
  for (const auto& s : entries)
    if (!s.field() || !s.field()->same(*f))
      throw FieldMismatchError("tensor entry not in the declared field");
  Tensor2 r;
  r.field_ = f;
  r.dim_ = dim;
  r.k_ = std::move(entries);
  return r;
}

Tensor2 Tensor2::n3(const FieldPtr& f, const Scalar& x, const Scalar& y, const Scalar& z,
                    const Scalar& p, const Scalar& q, const Scalar& s, const Scalar& t,
                    const Scalar& u, const Scalar& v) {
  return from_entries(f, 3, {x, p, s, q, y, u, t, v, z});
}

bool Tensor2::is_zero() const {
  for (const auto& s : k_)
    if (!s.is_zero()) return false;
  return true;
}

bool Tensor2::operator==(const Tensor2& rhs) const {
  return dim_ == rhs.dim_ && field_->same(*rhs.field_) && k_ == rhs.k_;
}

Tensor2 Tensor2::lifted(const FieldPtr& ext) const {
  std::vector<Scalar> entries;
  entries.reserve(k_.size());
  for (const auto& s : k_) entries.push_back(s.lifted(ext));
  return from_entries(ext, dim_, std::move(entries));
}

Tensor3 Tensor3::zero(const FieldPtr& f, int dim) {
  Tensor3 r;
  r.field_ = f;
  r.dim_ = dim;
  r.t_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim) *
                  static_cast<std::size_t>(dim),
              Scalar::zero(f));
  return r;
}

bool Tensor3::is_zero() const {
  for (const auto& s : t_)
    if (!s.is_zero()) return false;
  return true;
}

bool Tensor3::operator==(const Tensor3& rhs) const {
  return dim_ == rhs.dim_ && field_->same(*rhs.field_) && t_ == rhs.t_;
}

Tensor3 Tensor3::operator+(const Tensor3& rhs) const {
  if (dim_ != rhs.dim_) throw Error("tensor dimension mismatch");
  Tensor3 r = *this;
  for (std::size_t i = 0; i < t_.size(); ++i) r.t_[i] = r.t_[i] + rhs.t_[i];
  return r;
}

std::optional<std::tuple<int, int, int, Scalar>> Tensor3::first_nonzero() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int m = 0; m < dim_; ++m)
        if (!at(i, j, m).is_zero()) return std::make_tuple(i, j, m, at(i, j, m));
  return std::nullopt;
}

namespace {

std::vector<SparseBracket<Scalar>> sparse_brackets(const LieAlgebra& L) {
  std::vector<SparseBracket<Scalar>> out;
  for (int a = 0; a < L.dim(); ++a)
    for (int b = 0; b < L.dim(); ++b)
      for (int m = 0; m < L.dim(); ++m)
        if (!L.c(a, b, m).is_zero()) out.push_back({a, b, m, L.c(a, b, m)});
  return out;
}

void require_over(const LieAlgebra& L, const Tensor2& r) {
  if (r.dim() != L.dim()) throw Error("tensor dimension does not match the algebra");
  if (!r.field()->same(*L.field()))
    throw FieldMismatchError("tensor field " + r.field()->to_string() +
                             " does not match algebra field " + L.field()->to_string());
}

}  // namespace

ResidualTerms cybe_residual_terms(const LieAlgebra& algebra, const Tensor2& r) {
  require_over(algebra, r);
  const int n = algebra.dim();
  const FieldPtr& f = algebra.field();
  ResidualTerms out{Tensor3::zero(f, n), Tensor3::zero(f, n), Tensor3::zero(f, n)};
  const auto brackets = sparse_brackets(algebra);
  std::vector<Scalar> t1(static_cast<std::size_t>(n) * n * n, Scalar::zero(f));
  std::vector<Scalar> t2 = t1, t3 = t1;
  residual_terms_core<Scalar>(n, brackets, r.entries().data(), t1.data(), t2.data(), t3.data());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m) {
        const std::size_t idx = static_cast<std::size_t>((i * n + j) * n + m);
        out.r12_13.at(i, j, m) = t1[idx];
        out.r12_23.at(i, j, m) = t2[idx];
        out.r13_23.at(i, j, m) = t3[idx];
      }
  return out;
}

Tensor3 cybe_residual(const LieAlgebra& algebra, const Tensor2& r) {
  return cybe_residual_terms(algebra, r).total();
}

bool is_cybe_solution(const LieAlgebra& algebra, const Tensor2& r) {
  return cybe_residual(algebra, r).is_zero();
}

bool is_symmetric(const Tensor2& r) {
  for (int i = 0; i < r.dim(); ++i)
    for (int j = i + 1; j < r.dim(); ++j)
      if (!(r.at(i, j) == r.at(j, i))) return false;
  return true;
}

bool is_antisymmetric(const Tensor2& r) {
  for (int i = 0; i < r.dim(); ++i) {
    if (!r.at(i, i).is_zero()) return false;
    for (int j = i + 1; j < r.dim(); ++j)
      if (!(r.at(i, j) + r.at(j, i)).is_zero()) return false;
  }
  return true;
}

bool is_strongly_symmetric(const Tensor2& r) {
  if (!is_symmetric(r)) return false;
  for (int i = 0; i < r.dim(); ++i)
    for (int j = i + 1; j < r.dim(); ++j)
      for (int a = 0; a < r.dim(); ++a)
        for (int b = a + 1; b < r.dim(); ++b)
          if (!(r.at(i, a) * r.at(j, b) - r.at(i, b) * r.at(j, a)).is_zero()) return false;
  return true;
}

Tensor2 transform_coefficients(const Tensor2& r, const Matrix3& q_inverse) {
  if (r.dim() != 3) throw Error("transform_coefficients expects a dim-3 tensor");
  if (q_inverse.det().is_zero()) throw Error("basis-change matrix is singular");
  const FieldPtr& f = r.field();
  Tensor2 out = Tensor2::zero(f, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Scalar acc = Scalar::zero(f);
      for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n)
          acc = acc + r.at(m, n) * q_inverse.at(i, m) * q_inverse.at(j, n);
      out.at(i, j) = acc;
    }
  return out;
}

Tensor3 transform_tensor3(const Tensor3& t, const Matrix3& q_inverse) {
  if (t.dim() != 3) throw Error("transform_tensor3 expects a dim-3 tensor");
  if (q_inverse.det().is_zero()) throw Error("basis-change matrix is singular");
  const FieldPtr& f = t.field();
  Tensor3 out = Tensor3::zero(f, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int m = 0; m < 3; ++m) {
        Scalar acc = Scalar::zero(f);
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
              acc = acc + t.at(a, b, c) * q_inverse.at(i, a) * q_inverse.at(j, b) *
                              q_inverse.at(m, c);
        out.at(i, j, m) = acc;
      }
  return out;
}

// ---------------------------------------------------------------------------
// QuadPoly

QuadPoly::QuadPoly(FieldPtr f) : field_(std::move(f)), constant_(Scalar::zero(field_)) {
  linear_.fill(Scalar::zero(field_));
  quad_.fill(Scalar::zero(field_));
}

int QuadPoly::qindex(int i, int j) {
  if (i > j) std::swap(i, j);
  // rows of the upper triangle: i*(19-i)/2 skips the first i rows of 9,8,...
  return i * (19 - i) / 2 + (j - i);
}

QuadPoly QuadPoly::constant(const Scalar& c) {
  QuadPoly r(c.field());
  r.constant_ = c;
  return r;
}

QuadPoly QuadPoly::variable(const FieldPtr& f, int index) {
  if (index < 0 || index >= 9) throw Error("QuadPoly variable index out of range");
  QuadPoly r(f);
  r.linear_[static_cast<std::size_t>(index)] = Scalar::one(f);
  return r;
}

QuadPoly QuadPoly::operator+(const QuadPoly& rhs) const {
  QuadPoly r(field_);
  r.constant_ = constant_ + rhs.constant_;
  for (std::size_t i = 0; i < 9; ++i) r.linear_[i] = linear_[i] + rhs.linear_[i];
  for (std::size_t i = 0; i < 45; ++i) r.quad_[i] = quad_[i] + rhs.quad_[i];
  return r;
}

QuadPoly QuadPoly::operator-() const {
  QuadPoly r(field_);
  r.constant_ = -constant_;
  for (std::size_t i = 0; i < 9; ++i) r.linear_[i] = -linear_[i];
  for (std::size_t i = 0; i < 45; ++i) r.quad_[i] = -quad_[i];
  return r;
}

QuadPoly QuadPoly::operator*(const QuadPoly& rhs) const {
  auto lhs_quad_zero = [&] {
    for (const auto& s : quad_)
      if (!s.is_zero()) return false;
    return true;
  };
  auto rhs_quad_zero = [&] {
    for (const auto& s : rhs.quad_)
      if (!s.is_zero()) return false;
    return true;
  };
  auto lhs_lin_zero = [&] {
    for (const auto& s : linear_)
      if (!s.is_zero()) return false;
    return true;
  };
  auto rhs_lin_zero = [&] {
    for (const auto& s : rhs.linear_)
      if (!s.is_zero()) return false;
    return true;
  };
  if (!lhs_quad_zero() && !(rhs_lin_zero() && rhs_quad_zero()))
    throw Error("QuadPoly product would exceed degree 2");
  if (!rhs_quad_zero() && !(lhs_lin_zero() && lhs_quad_zero()))
    throw Error("QuadPoly product would exceed degree 2");

  QuadPoly r(field_);
  r.constant_ = constant_ * rhs.constant_;
  for (int i = 0; i < 9; ++i) {
    const auto si = static_cast<std::size_t>(i);
    r.linear_[si] = constant_ * rhs.linear_[si] + linear_[si] * rhs.constant_;
  }
  for (int i = 0; i < 45; ++i) {
    const auto si = static_cast<std::size_t>(i);
    r.quad_[si] = constant_ * rhs.quad_[si] + quad_[si] * rhs.constant_;
  }
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      const Scalar prod =
          linear_[static_cast<std::size_t>(i)] * rhs.linear_[static_cast<std::size_t>(j)];
      if (prod.is_zero()) continue;
      const auto qi = static_cast<std::size_t>(qindex(i, j));
      r.quad_[qi] = r.quad_[qi] + prod;
    }
  return r;
}

bool QuadPoly::is_zero() const {
  if (!constant_.is_zero()) return false;
  for (const auto& s : linear_)
    if (!s.is_zero()) return false;
  for (const auto& s : quad_)
    if (!s.is_zero()) return false;
  return true;
}

bool QuadPoly::operator==(const QuadPoly& rhs) const {
  return constant_ == rhs.constant_ && linear_ == rhs.linear_ && quad_ == rhs.quad_;
}

Scalar QuadPoly::eval(const std::array<Scalar, 9>& k) const {
  Scalar acc = constant_;
  for (int i = 0; i < 9; ++i) {
    const auto si = static_cast<std::size_t>(i);
    if (!linear_[si].is_zero()) acc = acc + linear_[si] * k[si];
  }
  for (int i = 0; i < 9; ++i)
    for (int j = i; j < 9; ++j) {
      const auto qi = static_cast<std::size_t>(qindex(i, j));
      if (!quad_[qi].is_zero())
        acc = acc + quad_[qi] * k[static_cast<std::size_t>(i)] * k[static_cast<std::size_t>(j)];
    }
  return acc;
}

Scalar QuadPoly::eval(const Tensor2& r) const {
  if (r.dim() != 3) throw Error("condition evaluation expects a dim-3 tensor");
  std::array<Scalar, 9> k;
  for (int i = 0; i < 9; ++i) k[static_cast<std::size_t>(i)] = r.entries()[static_cast<std::size_t>(i)];
  return eval(k);
}

QuadPoly QuadPoly::substituted(const std::array<int, 9>& target,
                               const std::array<Scalar, 9>& coeff) const {
  QuadPoly r(field_);
  r.constant_ = constant_;
  auto sub_var = [&](int i) -> QuadPoly {
    if (target[static_cast<std::size_t>(i)] < 0) return QuadPoly(field_);
    QuadPoly v = variable(field_, target[static_cast<std::size_t>(i)]);
    return constant(coeff[static_cast<std::size_t>(i)]) * v;
  };
  for (int i = 0; i < 9; ++i) {
    const auto si = static_cast<std::size_t>(i);
    if (!linear_[si].is_zero()) r = r + constant(linear_[si]) * sub_var(i);
  }
  for (int i = 0; i < 9; ++i)
    for (int j = i; j < 9; ++j) {
      const auto qi = static_cast<std::size_t>(qindex(i, j));
      if (!quad_[qi].is_zero()) r = r + constant(quad_[qi]) * sub_var(i) * sub_var(j);
    }
  return r;
}

std::string QuadPoly::str() const {
  static const char* names[9] = {"x", "p", "s", "q", "y", "u", "t", "v", "z"};
  std::string out;
  auto add_term = [&](const std::string& c, const std::string& mono) {
    if (!out.empty()) out += " + ";
    out += "(" + c + ")" + (mono.empty() ? "" : "*" + mono);
  };
  if (!constant_.is_zero()) add_term(constant_.str(), "");
  for (int i = 0; i < 9; ++i)
    if (!linear_[static_cast<std::size_t>(i)].is_zero())
      add_term(linear_[static_cast<std::size_t>(i)].str(), names[i]);
  for (int i = 0; i < 9; ++i)
    for (int j = i; j < 9; ++j) {
      const auto qi = static_cast<std::size_t>(qindex(i, j));
      if (!quad_[qi].is_zero())
        add_term(quad_[qi].str(), std::string(names[i]) + "*" + names[j]);
    }
  return out.empty() ? "0" : out;
}

std::vector<Condition> condition_system(const CanonicalParams& params) {
  const FieldPtr& f = params.field();
  const LieAlgebra L = canonical_algebra(params);
  std::vector<SparseBracket<QuadPoly>> brackets;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int m = 0; m < 3; ++m)
        if (!L.c(a, b, m).is_zero()) brackets.push_back({a, b, m, QuadPoly::constant(L.c(a, b, m))});
  std::vector<QuadPoly> k;
  k.reserve(9);
  for (int i = 0; i < 9; ++i) k.push_back(QuadPoly::variable(f, i));
  std::vector<QuadPoly> t1(27, QuadPoly::constant(Scalar::zero(f)));
  std::vector<QuadPoly> t2 = t1, t3 = t1;
  residual_terms_core<QuadPoly>(3, brackets, k.data(), t1.data(), t2.data(), t3.data());

  std::vector<Condition> out;
  out.reserve(27);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int m = 0; m < 3; ++m) {
        const std::size_t idx = static_cast<std::size_t>((i * 3 + j) * 3 + m);
        Condition c{i, j, m,
                    "C(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                        std::to_string(m + 1) + ")",
                    t1[idx] + t2[idx] + t3[idx]};
        out.push_back(std::move(c));
      }
  return out;
}

}  // namespace cybe
