#include "psiq/algebra/binomial_system.hpp"

#include <cstdlib>
#include <functional>

#include "psiq/errors.hpp"

namespace psiq {

const char* to_string(BinomialStatus s) {
  switch (s) {
    case BinomialStatus::kUnique: return "unique";
    case BinomialStatus::kMultiple: return "multiple";
    case BinomialStatus::kUnderdetermined: return "underdetermined";
    case BinomialStatus::kInconsistent: return "inconsistent";
  }
  return "unknown";
}

namespace {

struct Pivot {
  std::size_t column;
  std::size_t row;
};

bool satisfies(const BinomialEquation& eq, const std::vector<std::optional<BigRational>>& vals, bool& complete) {
  BigRational acc = 1;
  complete = true;
  for (std::size_t i = 0; i < eq.exponents.size(); ++i) {
    if (eq.exponents[i] == 0) continue;
    if (!vals[i]) {
      complete = false;
      return true;
    }
    acc *= pow(*vals[i], eq.exponents[i]);
  }
  return acc == eq.value;
}

}  // namespace

BinomialSolution solve_binomial_system(const std::vector<BinomialEquation>& equations, std::size_t variables) {
  for (const auto& eq : equations) {
    if (eq.exponents.size() != variables) throw DomainError("binomial equation has the wrong number of exponents");
    if (sgn(eq.value) == 0) throw DomainError("binomial equation with zero right-hand side");
  }
  std::vector<BinomialEquation> rows = equations;
  std::vector<Pivot> pivots;
  std::vector<bool> pivot_column(variables, false);
  std::size_t prow = 0;
  for (std::size_t col = 0; col < variables && prow < rows.size(); ++col) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = prow; r < rows.size(); ++r) {
        const long e = rows[r].exponents[col];
        if (e != 0 && (best == rows.size() || std::labs(e) < std::labs(rows[best].exponents[col]))) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[best], rows[prow]);
      bool remaining = false;
      const BinomialEquation& p = rows[prow];
      for (std::size_t r = prow + 1; r < rows.size(); ++r) {
        const long e = rows[r].exponents[col];
        if (e == 0) continue;
        const long q = e / p.exponents[col];
        for (std::size_t c = 0; c < variables; ++c) rows[r].exponents[c] -= q * p.exponents[c];
        rows[r].value /= pow(p.value, q);
        remaining = remaining || rows[r].exponents[col] != 0;
      }
      if (!remaining) {
        pivots.push_back({col, prow});
        pivot_column[col] = true;
        ++prow;
        break;
      }
    }
  }

  BinomialSolution out;
  out.values.assign(variables, std::nullopt);
  for (std::size_t c = 0; c < variables; ++c)
    if (!pivot_column[c]) out.free_variables.push_back(c);
  for (std::size_t r = prow; r < rows.size(); ++r) {
    if (rows[r].value != 1) {
      out.status = BinomialStatus::kInconsistent;
      return out;
    }
  }

  std::vector<std::vector<std::optional<BigRational>>> leaves;
  std::vector<std::optional<BigRational>> vals(variables);
  std::function<void(std::size_t)> descend = [&](std::size_t k) {
    if (k == 0) {
      for (const auto& eq : equations) {
        bool complete = false;
        if (!satisfies(eq, vals, complete)) return;
      }
      leaves.push_back(vals);
      return;
    }
    const Pivot& pv = pivots[k - 1];
    const BinomialEquation& row = rows[pv.row];
    BigRational rhs = row.value;
    bool known = true;
    for (std::size_t c = 0; c < variables; ++c) {
      if (c == pv.column || row.exponents[c] == 0) continue;
      if (!vals[c]) {
        known = false;
        break;
      }
      rhs /= pow(*vals[c], row.exponents[c]);
    }
    if (!known) {
      vals[pv.column].reset();
      descend(k - 1);
      return;
    }
    long a = row.exponents[pv.column];
    if (a < 0) {
      rhs = BigRational(1) / rhs;
      a = -a;
    }
    BigRational root;
    if (!exact_root(rhs, static_cast<unsigned>(a), root)) return;
    vals[pv.column] = root;
    descend(k - 1);
    if (a % 2 == 0) {
      vals[pv.column] = -root;
      descend(k - 1);
    }
    vals[pv.column].reset();
  };
  descend(pivots.size());

  if (leaves.empty()) {
    out.status = BinomialStatus::kInconsistent;
    return out;
  }
  for (std::size_t c = 0; c < variables; ++c) {
    std::optional<BigRational> common = leaves.front()[c];
    for (const auto& leaf : leaves)
      if (!leaf[c] || !common || *leaf[c] != *common) common.reset();
    out.values[c] = common;
  }
  if (!out.free_variables.empty()) {
    out.status = BinomialStatus::kUnderdetermined;
    return out;
  }
  for (const auto& leaf : leaves) {
    std::vector<BigRational> s;
    for (const auto& v : leaf) s.push_back(*v);
    out.solutions.push_back(std::move(s));
  }
  out.status = out.solutions.size() == 1 ? BinomialStatus::kUnique : BinomialStatus::kMultiple;
  return out;
}

}  // namespace psiq
