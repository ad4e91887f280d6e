#pragma once

// Verification suites: formula paths against enumeration and against each
// other. Each suite contributes one line per check family; a failing line
// carries the first failing cell and both values.

#include "consets/aggregate.hpp"
#include "consets/charpoly_recurrence.hpp"
#include "consets/layer_engine.hpp"
#include "consets/oracle.hpp"
#include "consets/order_engine.hpp"
#include "consets/pell_ladder.hpp"

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace consets {

struct CheckLine {
  std::string name;
  std::string cell;  // range exercised, or the first failing cell
  bool ok = true;
  std::string detail;
};

class VerifyReport {
 public:
  void add(CheckLine line) { lines_.push_back(std::move(line)); }
  void append(const VerifyReport& other) {
    lines_.insert(lines_.end(), other.lines_.begin(), other.lines_.end());
  }

  const std::vector<CheckLine>& lines() const { return lines_; }
  bool ok() const {
    for (const auto& l : lines_)
      if (!l.ok) return false;
    return true;
  }

  void print(std::ostream& out) const {
    for (const auto& l : lines_) {
      out << (l.ok ? "PASS " : "FAIL ") << l.name << " [" << l.cell << "]";
      if (!l.detail.empty()) out << ": " << l.detail;
      out << '\n';
    }
  }

 private:
  std::vector<CheckLine> lines_;
};

namespace detail {

inline std::string cell(std::size_t m, std::size_t n) {
  return "m=" + std::to_string(m) + " n=" + std::to_string(n);
}

// Runs `probe` over a sequence of cells; the first failure stops the scan.
// `probe` returns an empty string on success, otherwise the mismatch detail.
template <typename Cells, typename Probe>
CheckLine scan(std::string name, std::string range, const Cells& cells, Probe&& probe) {
  for (const auto& c : cells) {
    std::string detail = probe(c);
    if (!detail.empty()) return {std::move(name), c.label(), false, std::move(detail)};
  }
  return {std::move(name), std::move(range), true, {}};
}

struct Cell {
  std::size_t m = 0;
  std::size_t n = 0;
  std::string label() const { return cell(m, n); }
};

inline std::string mismatch(const std::string& what, const std::string& lhs,
                            const std::string& rhs) {
  return what + ": " + lhs + " vs " + rhs;
}

}  // namespace detail

// N, S, A and D against enumeration for one cell.
inline VerifyReport verify_against_oracle(std::size_t m, std::size_t n,
                                          std::size_t cap = oracle::kDefaultCap) {
  VerifyReport report;
  const auto lg = oracle::build_km_pn(m, n, cap);
  const auto census = oracle::census(lg.graph(), cap);
  const ProductResult r = compute_product(m, n);
  const BigRational oracle_d = census.A() / BigRational(BigInt(m) * n);
  std::string detail;
  if (r.count_N != census.N())
    detail = detail::mismatch("N formula vs enumeration", r.count_N.str(), census.N().str());
  else if (r.total_S != census.S())
    detail = detail::mismatch("S formula vs enumeration", r.total_S.str(), census.S().str());
  else if (r.average_A != census.A())
    detail = detail::mismatch("A formula vs enumeration", r.average_A.str(), census.A().str());
  else if (r.density_D != oracle_d)
    detail = detail::mismatch("D formula vs enumeration", r.density_D.str(), oracle_d.str());
  report.add({"N, S, A, D vs exhaustive enumeration", detail::cell(m, n), detail.empty(), detail});
  return report;
}

// The desk-scale oracle grid.
inline std::vector<detail::Cell> oracle_grid() {
  std::vector<detail::Cell> cells;
  const std::pair<std::size_t, std::size_t> rows[] = {{1, 10}, {2, 8}, {3, 5}, {4, 4}, {5, 3}};
  for (auto [m, n_max] : rows)
    for (std::size_t n = 1; n <= n_max; ++n) cells.push_back({m, n});
  return cells;
}

inline VerifyReport verify_oracle_grid(std::size_t cap = oracle::kDefaultCap) {
  VerifyReport report;
  for (const auto& c : oracle_grid()) {
    if (c.m * c.n > cap) continue;
    report.append(verify_against_oracle(c.m, c.n, cap));
  }
  return report;
}

inline VerifyReport verify_ladder(std::size_t n_max) {
  VerifyReport report;
  std::vector<detail::Cell> cells;
  for (std::size_t n = 1; n <= n_max; ++n) cells.push_back({2, n});
  const std::string range = "m=2 n=1.." + std::to_string(n_max);
  ProductEngine engine(2, n_max);

  report.add(detail::scan("ladder count closed form = transfer-matrix count", range, cells,
                          [&](const detail::Cell& c) {
                            const BigInt closed = ladder_count(c.n);
                            const BigInt general = engine.count(c.n);
                            return closed == general
                                       ? std::string{}
                                       : detail::mismatch("N", closed.str(), general.str());
                          }));
  report.add(detail::scan("ladder average closed form = transfer-matrix average", range, cells,
                          [&](const detail::Cell& c) {
                            const BigRational closed = ladder_average(c.n);
                            const BigRational general = engine.result(c.n).average_A;
                            return closed == general
                                       ? std::string{}
                                       : detail::mismatch("A", closed.str(), general.str());
                          }));
  report.add(detail::scan("ladder average = Pell/Pell-Lucas ladder formula", range, cells,
                          [&](const detail::Cell& c) {
                            const BigRational closed = ladder_average(c.n);
                            const BigRational vince = vince_average(c.n);
                            return closed == vince
                                       ? std::string{}
                                       : detail::mismatch("A", closed.str(), vince.str());
                          }));
  report.add(detail::scan("ladder density closed form = transfer-matrix density", range, cells,
                          [&](const detail::Cell& c) {
                            const BigRational closed = ladder_density(c.n);
                            const BigRational general = engine.result(c.n).density_D;
                            return closed == general
                                       ? std::string{}
                                       : detail::mismatch("D", closed.str(), general.str());
                          }));
  report.add(detail::scan("ladder summation identities vs direct sums", range, cells,
                          [&](const detail::Cell& c) {
                            return ladder_sum_identities(c.n).failure();
                          }));
  return report;
}

inline VerifyReport verify_charpoly(std::size_t m_max) {
  VerifyReport report;
  for (std::size_t m = 2; m <= m_max; ++m) {
    const auto coeffs = validate_coefficients(m);
    for (const auto& c : coeffs.checks)
      report.add({"char poly coefficient " + c.name +
                      (m == 2 ? " = claimed value" : c.name.ends_with(",1}")
                                                         ? " = 1"
                                                         : " = F(m+1) - 2^m"),
                  "m=" + std::to_string(m), c.holds(),
                  c.holds() ? std::string{}
                            : "claimed " + c.claimed.str() + ", observed " + c.observed.str() +
                                  " (" + coeffs.poly.str() + ")"});
    const IntMatrix a = build_recurrence_matrix(m).matrix;
    const bool cayley = coeffs.poly.evaluate(a).is_zero();
    report.add({"Cayley-Hamilton p(A_m) = 0", "m=" + std::to_string(m), cayley,
                cayley ? std::string{} : coeffs.poly.str()});
  }
  return report;
}

inline VerifyReport verify_recurrence(std::size_t m_max, std::size_t k_max) {
  VerifyReport report;
  for (std::size_t m = 1; m <= m_max; ++m) {
    const auto streamed = stream_f(build_recurrence(m), k_max);
    const FTable ft(m, k_max);
    std::string detail, where = "m=" + std::to_string(m) + " k=1.." + std::to_string(k_max);
    for (std::size_t k = 1; k <= k_max && detail.empty(); ++k)
      if (streamed[k - 1] != ft.total(k)) {
        where = "m=" + std::to_string(m) + " k=" + std::to_string(k);
        detail = detail::mismatch("f(m,k)", streamed[k - 1].str(), ft.total(k).str());
      }
    report.add({"scalar recurrence = transfer-matrix f(m,k)", where, detail.empty(), detail});
  }
  return report;
}

inline VerifyReport verify_symmetry(std::size_t m_max, std::size_t k_max) {
  VerifyReport report;
  for (std::size_t m = 2; m <= m_max; ++m) {
    const FTable ft(m, k_max);
    std::string detail, where = "m=" + std::to_string(m) + " k=1.." + std::to_string(k_max);
    for (std::size_t k = 1; k <= k_max && detail.empty(); ++k) {
      if (!check_weighted_symmetry(m, k)) {
        where = detail::cell(m, k);
        detail = "C_m A_m^k not symmetric";
      }
      for (std::size_t i = 1; i <= m && detail.empty(); ++i) {
        const BigInt lhs = weighted_profile_sum(m, i, k);
        const BigInt rhs = ft.binomials()(m, i) * ft.f(i, k);
        if (lhs != rhs) {
          where = "m=" + std::to_string(m) + " i=" + std::to_string(i) + " k=" + std::to_string(k);
          detail = detail::mismatch("weighted column sum vs C(m,i) f_i", lhs.str(), rhs.str());
        }
      }
    }
    report.add({"weighted symmetry and column sums", where, detail.empty(), detail});
  }
  return report;
}

inline VerifyReport verify_order_paths(std::size_t m_max, std::size_t k_max) {
  VerifyReport report;
  for (std::size_t m = 2; m <= m_max; ++m) {
    const STable st(m, k_max);
    std::string detail, where = "m=" + std::to_string(m) + " k=1.." + std::to_string(k_max);
    for (std::size_t k = 1; k <= k_max && detail.empty(); ++k) {
      const auto direct = s_table_direct(m, k);
      const auto rec = st.column(k);
      if (!std::equal(direct.begin(), direct.end(), rec.begin(), rec.end())) {
        where = "m=" + std::to_string(m) + " k=" + std::to_string(k);
        detail = "literal matrix sum differs from recursive s_i";
        break;
      }
      const BigInt conv = layer_order_sum_convolution(m, k, st.ftable());
      if (conv != st.layer_sum(k)) {
        where = "m=" + std::to_string(m) + " k=" + std::to_string(k);
        detail = detail::mismatch("S(F(m,k)) convolution vs recursive", conv.str(),
                                  st.layer_sum(k).str());
      }
      for (std::size_t i = 1; i <= m && detail.empty(); ++i)
        if (!convolution_identity_check(m, i, k, st.ftable())) {
          where = "m=" + std::to_string(m) + " i=" + std::to_string(i) + " k=" + std::to_string(k);
          detail = "weighted x_{i,j} sum differs from f_i self-convolution";
        }
    }
    report.add({"order sums: literal sum = recursion = convolution", where, detail.empty(),
                detail});
  }
  return report;
}

inline VerifyReport verify_anchors(std::size_t m_max = 10, std::size_t n_max = 50) {
  VerifyReport report;
  std::vector<detail::Cell> layer_cells, path_cells;
  for (std::size_t m = 1; m <= m_max; ++m) layer_cells.push_back({m, 1});
  for (std::size_t n = 1; n <= n_max; ++n) path_cells.push_back({1, n});
  report.add(detail::scan("A(K_m x P_1) = m 2^(m-1) / (2^m - 1)",
                          "m=1.." + std::to_string(m_max) + " n=1", layer_cells,
                          [](const detail::Cell& c) {
                            const BigRational expected(BigInt(c.m) << (c.m - 1),
                                                       (BigInt(1) << c.m) - 1);
                            const BigRational got = average_order(c.m, 1);
                            return got == expected ? std::string{}
                                                   : detail::mismatch("A", got.str(),
                                                                      expected.str());
                          }));
  report.add(detail::scan("A(K_1 x P_n) = (n+2)/3", "m=1 n=1.." + std::to_string(n_max),
                          path_cells, [](const detail::Cell& c) {
                            const BigRational expected(BigInt(c.n + 2), BigInt(3));
                            const BigRational got = average_order(1, c.n);
                            return got == expected ? std::string{}
                                                   : detail::mismatch("A", got.str(),
                                                                      expected.str());
                          }));
  return report;
}

// Everything at desk scale.
inline VerifyReport verify_all(std::size_t cap = oracle::kDefaultCap) {
  VerifyReport report;
  report.append(verify_oracle_grid(cap));
  report.append(verify_ladder(200));
  report.append(verify_charpoly(10));
  report.append(verify_recurrence(6, 200));
  report.append(verify_symmetry(6, 12));
  report.append(verify_order_paths(5, 10));
  report.append(verify_anchors());
  return report;
}

}  // namespace consets
