#include "capelli/catalog.hpp"

#include <functional>
#include <numeric>

namespace capelli {

namespace {

std::vector<CaseSpec> build_specs() {
  std::vector<CaseSpec> rows(8);
  rows[0] = {1, "(SO(n) x C*, C^n)", "n >= 2", "2", "(s+1)(s+n/2)", "(s+1)(s+n/2)",
             "SO(1) x SO(n-1)", "SO(1) x SO(n-1)", false, "", 2, std::nullopt, false, 31};
  rows[1] = {2, "(GL(n), S^2 C^n)", "n >= 2", "n", "prod_{i=1..n} (s+(i+1)/2)", "prod_{i=1..n} (s+(i+1)/2)",
             "O(n)", "SO(n)", false, "", 2, std::nullopt, false, 7};
  rows[2] = {3,
             "(GL(n), Lambda^2 C^n), n even",
             "n >= 4, n even",
             "n/2",
             "prod_{i=1..n} (s+2i-1)",
             "prod_{i=1..n/2} (s+2i-1)",
             "Sp(n/2)",
             "Sp(n/2)",
             true,
             "printed product has n factors but deg f = n/2",
             4,
             std::nullopt,
             true,
             8};
  rows[3] = {4, "(GL(n) x SL(n), M_n(C))", "n >= 2", "n", "prod_{i=1..n} (s+i)", "prod_{i=1..n} (s+i)",
             "Sp(1) x Sp(n-1)", "Sp(1) x Sp(n-1)", false, "", 2, std::nullopt, false, 5};
  rows[4] = {5, "(Sp(n) x GL(2), (C^{2n})^2)", "n >= 2", "2", "(s+1)(s+2n)", "(s+1)(s+2n)",
             "SL(n)", "SL(n)", false, "", 2, std::nullopt, false, 7};
  rows[5] = {6,
             "(SO(7) x C*, spin = C^8)",
             "fixed: 8",
             "2",
             "(s+2)(s+4)",
             "(s+1)(s+4)",
             "SO(1) x SO(6)",
             "SO(1) x SO(6)",
             true,
             "printed (s+2)(s+4); a nondegenerate quadric on C^8 gives (s+1)(s+4) as in row (1)",
             8,
             8,
             false,
             8};
  rows[6] = {7, "(G2 x C*, C^7)", "fixed: 7", "2", "(s+1)(s+7/2)", "(s+1)(s+7/2)", "", "", false, "", 7, 7, false, 7};
  rows[7] = {8, "(GL(4) x Sp(2), M_4(C))", "fixed: 4", "4", "(s+1)(s+2)(s+3)(s+4)", "(s+1)(s+2)(s+3)(s+4)",
             "", "", false, "", 4, 4, false, 4};
  return rows;
}

std::vector<Rational> offsets(int case_id, int n, bool printed) {
  std::vector<Rational> r;
  switch (case_id) {
    case 1:
      return {Rational(1), make_rational(n, 2)};
    case 2:
      for (int i = 1; i <= n; ++i) r.push_back(make_rational(i + 1, 2));
      return r;
    case 3:
      for (int i = 1; i <= (printed ? n : n / 2); ++i) r.push_back(Rational(2 * i - 1));
      return r;
    case 4:
      for (int i = 1; i <= n; ++i) r.push_back(Rational(i));
      return r;
    case 5:
      return {Rational(1), Rational(2 * n)};
    case 6:
      return printed ? std::vector<Rational>{Rational(2), Rational(4)} : std::vector<Rational>{Rational(1), Rational(4)};
    case 7:
      return {Rational(1), make_rational(7, 2)};
    case 8:
      return {Rational(1), Rational(2), Rational(3), Rational(4)};
  }
  throw std::out_of_range("case id must be in 1..8");
}

void require_valid(int case_id, int size) {
  const CaseSpec& spec = case_spec(case_id);
  if (!valid_size(case_id, size))
    throw InvalidSize("case " + std::to_string(case_id) + " requires " + spec.size_rule + " (max " +
                      std::to_string(spec.max_size) + "), got " + std::to_string(size));
}

std::string pair_name(const char* stem, int i, int j, int n) {
  if (n < 10) return stem + std::to_string(i) + std::to_string(j);
  return stem + std::to_string(i) + "_" + std::to_string(j);
}

using Matrix = std::vector<std::vector<MultiPoly>>;

MultiPoly determinant(const Matrix& m, std::size_t arity) {
  const std::size_t n = m.size();
  std::vector<std::size_t> cols(n);
  std::iota(cols.begin(), cols.end(), 0);
  // Laplace expansion along successive rows.
  std::function<MultiPoly(std::size_t, std::vector<std::size_t>&)> expand = [&](std::size_t row,
                                                                                 std::vector<std::size_t>& free) {
    if (row == n) return MultiPoly::constant(arity, Rational(1));
    MultiPoly total(arity);
    for (std::size_t k = 0; k < free.size(); ++k) {
      const std::size_t col = free[k];
      if (m[row][col].is_zero()) continue;
      free.erase(free.begin() + static_cast<long>(k));
      MultiPoly minor = expand(row + 1, free);
      free.insert(free.begin() + static_cast<long>(k), col);
      MultiPoly term = m[row][col] * minor;
      total = (k % 2 == 0) ? total + term : total - term;
    }
    return total;
  };
  return expand(0, cols);
}

// Pf of the skew matrix with upper entries a[i][j], i < j.
MultiPoly pfaffian(const Matrix& a, std::vector<std::size_t> idx, std::size_t arity) {
  if (idx.empty()) return MultiPoly::constant(arity, Rational(1));
  const std::size_t first = idx.front();
  MultiPoly total(arity);
  for (std::size_t k = 1; k < idx.size(); ++k) {
    std::vector<std::size_t> rest;
    for (std::size_t t = 1; t < idx.size(); ++t)
      if (t != k) rest.push_back(idx[t]);
    MultiPoly term = a[first][idx[k]] * pfaffian(a, rest, arity);
    total = (k % 2 == 1) ? total + term : total - term;
  }
  return total;
}

struct Built {
  std::vector<std::string> names;
  MultiPoly f;
  MultiPoly delta_symbol;
};

Built build_quadric(int dim) {
  Built b;
  const std::size_t arity = static_cast<std::size_t>(dim);
  b.f = MultiPoly(arity);
  for (int i = 0; i < dim; ++i) {
    b.names.push_back("x" + std::to_string(i + 1));
    MultiPoly x = MultiPoly::variable(arity, static_cast<std::size_t>(i));
    b.f = b.f + x * x;
  }
  b.delta_symbol = b.f;
  return b;
}

Built build_full_matrix(int n) {
  Built b;
  const std::size_t arity = static_cast<std::size_t>(n * n);
  Matrix m(static_cast<std::size_t>(n), std::vector<MultiPoly>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      b.names.push_back(pair_name("x", i + 1, j + 1, n));
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          MultiPoly::variable(arity, static_cast<std::size_t>(i * n + j));
    }
  b.f = determinant(m, arity);
  b.delta_symbol = b.f;
  return b;
}

Built build_symmetric(int n) {
  Built b;
  std::vector<std::vector<std::size_t>> index(static_cast<std::size_t>(n), std::vector<std::size_t>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = b.names.size();
      index[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = b.names.size();
      b.names.push_back(pair_name("x", i + 1, j + 1, n));
    }
  const std::size_t arity = b.names.size();
  Matrix x(static_cast<std::size_t>(n), std::vector<MultiPoly>(static_cast<std::size_t>(n)));
  Matrix dual = x;
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
      x[i][j] = MultiPoly::variable(arity, index[i][j]);
      // d*_ii = d_ii, d*_ij = d_ij / 2 off the diagonal.
      dual[i][j] = i == j ? x[i][j] : x[i][j].scaled(make_rational(1, 2));
    }
  b.f = determinant(x, arity);
  b.delta_symbol = determinant(dual, arity);
  return b;
}

Built build_skew(int n) {
  Built b;
  const std::size_t un = static_cast<std::size_t>(n);
  Matrix a(un, std::vector<MultiPoly>(un));
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = i + 1; j < un; ++j) {
      slots.emplace_back(i, j);
      b.names.push_back(pair_name("x", static_cast<int>(i + 1), static_cast<int>(j + 1), n));
    }
  const std::size_t arity = b.names.size();
  for (std::size_t k = 0; k < slots.size(); ++k) a[slots[k].first][slots[k].second] = MultiPoly::variable(arity, k);
  std::vector<std::size_t> idx(un);
  std::iota(idx.begin(), idx.end(), 0);
  b.f = pfaffian(a, idx, arity);
  b.delta_symbol = b.f;
  return b;
}

Built build_symplectic_pair(int n) {
  Built b;
  const int half = 2 * n;
  const std::size_t arity = static_cast<std::size_t>(2 * half);
  for (int i = 1; i <= half; ++i) b.names.push_back("x" + std::to_string(i));
  for (int i = 1; i <= half; ++i) b.names.push_back("y" + std::to_string(i));
  auto x = [&](int i) { return MultiPoly::variable(arity, static_cast<std::size_t>(i - 1)); };
  auto y = [&](int i) { return MultiPoly::variable(arity, static_cast<std::size_t>(half + i - 1)); };
  b.f = MultiPoly(arity);
  for (int i = 1; i <= n; ++i) b.f = b.f + x(i) * y(n + i) - x(n + i) * y(i);
  b.delta_symbol = b.f;
  return b;
}

}  // namespace

const std::vector<CaseSpec>& list_cases() {
  static const std::vector<CaseSpec> rows = build_specs();
  return rows;
}

const CaseSpec& case_spec(int case_id) {
  if (case_id < 1 || case_id > 8) throw std::out_of_range("case id must be in 1..8, got " + std::to_string(case_id));
  return list_cases()[static_cast<std::size_t>(case_id - 1)];
}

bool valid_size(int case_id, int size) {
  const CaseSpec& spec = case_spec(case_id);
  if (spec.fixed_size) return size == *spec.fixed_size;
  if (size < spec.min_size || size > spec.max_size) return false;
  return !spec.even_only || size % 2 == 0;
}

int minimal_size(int case_id) { return case_spec(case_id).min_size; }

int degree_of_f(int case_id, int size) {
  switch (case_id) {
    case 2:
    case 4:
      return size;
    case 3:
      return size / 2;
    case 8:
      return 4;
    default:
      return 2;
  }
}

UniPoly printed_b(int case_id, int size) {
  require_valid(case_id, size);
  return UniPoly::from_root_offsets(Symbol::S, offsets(case_id, size, true));
}

UniPoly expected_b(int case_id, int size) {
  require_valid(case_id, size);
  return UniPoly::from_root_offsets(Symbol::S, offsets(case_id, size, false));
}

CaseInstance instantiate(int case_id, int size) {
  require_valid(case_id, size);
  Built built;
  switch (case_id) {
    case 1:
    case 6:
    case 7:
      built = build_quadric(size);
      break;
    case 2:
      built = build_symmetric(size);
      break;
    case 3:
      built = build_skew(size);
      break;
    case 4:
    case 8:
      built = build_full_matrix(size);
      break;
    case 5:
      built = build_symplectic_pair(size);
      break;
  }
  CaseInstance inst;
  inst.case_id = case_id;
  inst.size = size;
  inst.variables = std::move(built.names);
  inst.f = std::move(built.f);
  inst.delta = WeylOp::from_symbol(built.delta_symbol);
  inst.theta = WeylOp::euler(inst.variables.size());
  inst.d = degree_of_f(case_id, size);
  inst.expected_b = expected_b(case_id, size);
  inst.printed_b = printed_b(case_id, size);
  inst.disputed = case_spec(case_id).disputed;
  return inst;
}

}  // namespace capelli
