#include "lieclass/lie_algebra.hpp"

#include <string>

namespace lieclass {

LieAlgebra4::LieAlgebra4(Tensor3 constants) : c_(std::move(constants)) {
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = i; j < kDim; ++j) {
      for (std::size_t k = 0; k < kDim; ++k) {
        if (!(c_(i, j, k) + c_(j, i, k)).is_zero()) {
          throw std::invalid_argument(std::string("structure constants not antisymmetric at [") +
                                      kBasisNames[i] + "," + kBasisNames[j] + "]");
        }
      }
    }
  }
}

LieAlgebra4 LieAlgebra4::abelian(ScalarMode mode) { return LieAlgebra4(Tensor3::zero(mode)); }

LieAlgebra4 LieAlgebra4::from_brackets(ScalarMode mode, std::initializer_list<Bracket> table) {
  return from_brackets(mode, std::vector<Bracket>(table));
}

LieAlgebra4 LieAlgebra4::from_brackets(ScalarMode mode, const std::vector<Bracket>& table) {
  Tensor3 c = Tensor3::zero(mode);
  bool seen[kDim][kDim] = {};
  for (const auto& b : table) {
    if (b.left == b.right) {
      if (!b.value.is_zero()) throw std::invalid_argument("bracket of a basis vector with itself must vanish");
      continue;
    }
    if (seen[b.left][b.right]) {
      throw std::invalid_argument(std::string("bracket [") + kBasisNames[b.left] + "," +
                                  kBasisNames[b.right] + "] given twice");
    }
    seen[b.left][b.right] = seen[b.right][b.left] = true;
    for (std::size_t k = 0; k < kDim; ++k) {
      c(b.left, b.right, k) = b.value[k];
      c(b.right, b.left, k) = -b.value[k];
    }
  }
  return LieAlgebra4(std::move(c));
}

Vec4 LieAlgebra4::bracket(std::size_t i, std::size_t j) const {
  return Vec4(c_(i, j, 0), c_(i, j, 1), c_(i, j, 2), c_(i, j, 3));
}

Scalar antisymmetry_defect(const Tensor3& c) {
  Scalar m = Scalar::zero(c.mode());
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      for (std::size_t k = 0; k < kDim; ++k) {
        Scalar d = (c(i, j, k) + c(j, i, k)).abs();
        if (m < d) m = d;
      }
    }
  }
  return m;
}

Vec4 bracket(const LieAlgebra4& L, const Vec4& u, const Vec4& v) {
  Vec4 r = Vec4::zero(L.mode());
  const Tensor3& c = L.constants();
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      if (i == j || u[i].is_literal_zero() || v[j].is_literal_zero()) continue;
      Scalar uv = u[i] * v[j];
      for (std::size_t k = 0; k < kDim; ++k) {
        if (!c(i, j, k).is_literal_zero()) r[k] += uv * c(i, j, k);
      }
    }
  }
  return r;
}

Scalar jacobi_defect(const LieAlgebra4& L) {
  ScalarMode mode = L.mode();
  Scalar m = Scalar::zero(mode);
  // The Jacobiator of an antisymmetric bracket is alternating, so i < j < k suffices.
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = i + 1; j < kDim; ++j) {
      for (std::size_t k = j + 1; k < kDim; ++k) {
        Vec4 ei = Vec4::basis(i, mode), ej = Vec4::basis(j, mode), ek = Vec4::basis(k, mode);
        Vec4 s = bracket(L, L.bracket(i, j), ek) + bracket(L, L.bracket(j, k), ei) +
                 bracket(L, L.bracket(k, i), ej);
        Scalar d = s.max_abs();
        if (m < d) m = d;
      }
    }
  }
  return m;
}

namespace {

/// Row-reduced spanning set of a subspace of R^4.
std::vector<Vec4> reduced_span(std::vector<Vec4> rows) {
  std::vector<Vec4> basis;
  for (std::size_t col = 0; col < kDim && !rows.empty(); ++col) {
    std::size_t best = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      if (best == rows.size() || rows[best][col].abs() < rows[r][col].abs()) best = r;
    }
    if (best == rows.size()) continue;
    Vec4 pivot = rows[best];
    pivot *= Scalar::one(pivot.mode()) / pivot[col];
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
    for (auto& r : rows) r -= r[col] * pivot;
    basis.push_back(pivot);
  }
  return basis;
}

std::vector<Vec4> bracket_span(const LieAlgebra4& L, const std::vector<Vec4>& a, const std::vector<Vec4>& b) {
  std::vector<Vec4> out;
  for (const auto& u : a) {
    for (const auto& v : b) out.push_back(bracket(L, u, v));
  }
  return reduced_span(std::move(out));
}

std::vector<Vec4> full_space(ScalarMode mode) {
  std::vector<Vec4> all;
  for (std::size_t i = 0; i < kDim; ++i) all.push_back(Vec4::basis(i, mode));
  return all;
}

}  // namespace

std::vector<std::size_t> derived_series_dimensions(const LieAlgebra4& L) {
  std::vector<Vec4> current = full_space(L.mode());
  std::vector<std::size_t> dims{current.size()};
  while (!current.empty()) {
    std::vector<Vec4> next = bracket_span(L, current, current);
    if (next.size() == current.size()) break;
    current = std::move(next);
    dims.push_back(current.size());
  }
  return dims;
}

std::vector<std::size_t> lower_central_series_dimensions(const LieAlgebra4& L) {
  const std::vector<Vec4> all = full_space(L.mode());
  std::vector<Vec4> current = all;
  std::vector<std::size_t> dims{current.size()};
  while (!current.empty()) {
    std::vector<Vec4> next = bracket_span(L, all, current);
    if (next.size() == current.size()) break;
    current = std::move(next);
    dims.push_back(current.size());
  }
  return dims;
}

bool is_solvable(const LieAlgebra4& L) { return derived_series_dimensions(L).back() == 0; }

bool is_nilpotent(const LieAlgebra4& L) { return lower_central_series_dimensions(L).back() == 0; }

}  // namespace lieclass
