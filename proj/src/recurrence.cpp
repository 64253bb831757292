#include "perron/digit_sets.hpp"

namespace perron {

namespace {

// Solves the square system a x = b over Q; nullopt when singular.
std::optional<std::vector<mpq_class>> solve(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b) {
  const std::size_t r = b.size();
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t pivot = col;
    while (pivot < r && a[pivot][col] == 0) ++pivot;
    if (pivot == r) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < r; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const mpq_class f = a[row][col] / a[col][col];
      for (std::size_t k = col; k < r; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  std::vector<mpq_class> x(r);
  for (std::size_t i = 0; i < r; ++i) {
    x[i] = b[i] / a[i][i];
    x[i].canonicalize();
  }
  return x;
}

}  // namespace

std::optional<LinearRecurrence> guess_recurrence(std::span<const mpz_class> terms) {
  const std::size_t len = terms.size();
  if (len < 8) return std::nullopt;  // too short to say anything
  for (std::size_t r = 1; 2 * r <= len; ++r) {
    // a_i = sum_{k=1}^{r} c_k a_{i-k} for i = r .. 2r-1
    std::vector<std::vector<mpq_class>> a(r, std::vector<mpq_class>(r));
    std::vector<mpq_class> b(r);
    for (std::size_t row = 0; row < r; ++row) {
      const std::size_t i = r + row;
      for (std::size_t k = 1; k <= r; ++k) a[row][k - 1] = terms[i - k];
      b[row] = terms[i];
    }
    const auto x = solve(std::move(a), std::move(b));
    if (!x) continue;
    LinearRecurrence rec;
    bool integral = true;
    for (const auto& q : *x) {
      integral = integral && q.get_den() == 1;
      rec.coeffs.push_back(q.get_num());
    }
    if (!integral) continue;
    bool fits = true;
    for (std::size_t i = r; i < len && fits; ++i) {
      mpz_class acc = 0;
      for (std::size_t k = 1; k <= r; ++k) acc += rec.coeffs[k - 1] * terms[i - k];
      fits = acc == terms[i];
    }
    if (fits) return rec;
  }
  return std::nullopt;
}

std::optional<LinearRecurrence> guess_recurrence(std::span<const std::uint64_t> terms) {
  std::vector<mpz_class> big;
  big.reserve(terms.size());
  for (auto t : terms) big.emplace_back(static_cast<unsigned long>(t));
  return guess_recurrence(std::span<const mpz_class>(big));
}

}  // namespace perron
