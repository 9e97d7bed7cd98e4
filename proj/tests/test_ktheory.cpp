#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "bclocal/bc_algebra.hpp"
#include "bclocal/ktheory.hpp"

using namespace bclocal;

namespace {

IntMatrix from_rows(std::vector<std::vector<long long>> rows) {
  IntMatrix M = IntMatrix::zero((int)rows.size(), (int)rows[0].size());
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) M.at(i, j) = rows[i][j];
  return M;
}

long long det_rec(const IntMatrix& M, const std::vector<int>& rs, std::vector<int> cs) {
  if (rs.empty()) return 1;
  long long acc = 0, sign = 1;
  for (size_t j = 0; j < cs.size(); ++j) {
    std::vector<int> rs2(rs.begin() + 1, rs.end());
    std::vector<int> cs2 = cs;
    cs2.erase(cs2.begin() + j);
    acc += sign * M.at(rs[0], cs[j]) * det_rec(M, rs2, cs2);
    sign = -sign;
  }
  return acc;
}

void combos(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if ((int)cur.size() == k) { out.push_back(cur); return; }
  for (int i = start; i <= n - (k - (int)cur.size()); ++i) {
    cur.push_back(i);
    combos(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// invariant factors through gcds of k x k minors, the textbook characterization
std::vector<long long> minor_gcd_factors(const IntMatrix& M) {
  std::vector<long long> dk{1}; // dk[k] = gcd of k x k minors
  int kmax = std::min(M.rows, M.cols);
  for (int k = 1; k <= kmax; ++k) {
    std::vector<std::vector<int>> rsel, csel;
    std::vector<int> cur;
    combos(M.rows, k, 0, cur, rsel);
    combos(M.cols, k, 0, cur, csel);
    long long g = 0;
    for (auto& rs : rsel)
      for (auto& cs : csel) g = std::gcd(g, det_rec(M, rs, cs));
    if (g == 0) break;
    dk.push_back(g);
  }
  std::vector<long long> f;
  for (size_t k = 1; k < dk.size(); ++k) f.push_back(dk[k] / dk[k - 1]);
  return f;
}

} // namespace

TEST_CASE("smith normal form on pinned examples") {
  auto s1 = smith_normal_form(from_rows({{2}}));
  CHECK(s1.invariant_factors == std::vector<long long>{2});
  CHECK(s1.rank == 1);

  auto s2 = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
  CHECK(s2.invariant_factors == std::vector<long long>{1, 6});

  auto s3 = smith_normal_form(from_rows({{2, 4}, {6, 8}}));
  CHECK(s3.invariant_factors == std::vector<long long>{2, 4});

  auto s0 = smith_normal_form(from_rows({{0}}));
  CHECK(s0.rank == 0);
  CHECK(s0.invariant_factors.empty());
}

TEST_CASE("smith normal form against minor gcds on random matrices") {
  std::mt19937 rng(20240117);
  std::uniform_int_distribution<int> dim(1, 4), ent(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix M = IntMatrix::zero(dim(rng), dim(rng));
    for (auto& x : M.a) x = ent(rng);
    SNFResult s = smith_normal_form(M); // U A V = D asserted inside
    CHECK(s.invariant_factors == minor_gcd_factors(M));
    CHECK(int_mat_mul(int_mat_mul(s.U, M), s.V) == s.D);
    CHECK(std::abs(s.det_u) == 1);
    CHECK(std::abs(s.det_v) == 1);
    for (size_t i = 0; i + 1 < s.invariant_factors.size(); ++i)
      CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
  }
}

TEST_CASE("cokernel normal forms") {
  auto g1 = cokernel(from_rows({{0}}));
  CHECK(g1.free_rank == 1);
  CHECK(g1.torsion.empty());

  auto g2 = cokernel(from_rows({{1}, {1}, {1}}));
  CHECK(g2.free_rank == 2);
  CHECK(g2.torsion.empty());

  auto g3 = cokernel(from_rows({{2, 0}, {0, 3}}));
  CHECK(g3.free_rank == 0);
  CHECK(g3.torsion == std::vector<long long>{6});
}

TEST_CASE("truncated shift identities hold densely at small size") {
  // same check the report runs through sparse rows, here with full products
  const int N = 6;
  IntMatrix S = IntMatrix::zero(N, N);
  for (int r = 1; r < N; ++r) S.at(r, r - 1) = 1;
  Mat<double> Sd = shift_matrix<double>(1, N);
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) CHECK(Sd.at(r, c) == (double)S.at(r, c));
  IntMatrix St = IntMatrix::zero(N, N);
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) St.at(r, c) = S.at(c, r);
  IntMatrix SSt = int_mat_mul(S, St), StS = int_mat_mul(St, S);
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) {
      long long id = r == c ? 1 : 0;
      CHECK(id - SSt.at(r, c) == ((r == 0 && c == 0) ? 1 : 0));
      CHECK(id - StS.at(r, c) == ((r == N - 1 && c == N - 1) ? 1 : 0));
    }
}

TEST_CASE("quotient report ranks across levels") {
  struct Row { LocalFieldSpec F; long long n; int m; long long r; };
  std::vector<Row> rows = {
      {make_qp(2), 1, 0, 1},
      {make_qp(3), 2, 1, 4},
      {make_qp(3), 2, 2, 12},
  };
  for (auto& row : rows) {
    LevelContext C(row.F, {row.n, row.m});
    K0Report rep = k0_quotient_report(C);
    CHECK(rep.r == row.r);
    CHECK(rep.rank == row.r - 1);
    CHECK(rep.torsion.empty());
    CHECK(rep.model_N == row.r + 1);
    CHECK(rep.shift_projection_ok);
  }
}

TEST_CASE("window map has zero kernel and fiber-sized cokernel") {
  {
    LevelContext C(make_qp(2), {1, 0});
    PVReport rep = pv_window_check(C, 2);
    CHECK(rep.fiber == 1);
    CHECK(rep.kernel_rank == 0);
    CHECK(rep.coker.free_rank == 1);
    CHECK(rep.coker.torsion.empty());
    CHECK(rep.stabilized);
  }
  {
    LevelContext C(make_qp(3), {2, 1});
    PVReport rep = pv_window_check(C, 3);
    CHECK(rep.fiber == 4);
    CHECK(rep.kernel_rank == 0);
    CHECK(rep.coker.free_rank == 4);
    CHECK(rep.stabilized);
  }
  {
    LevelContext C(make_qp(2), {3, 2});
    PVReport rep = pv_window_check(C, 4);
    CHECK(rep.fiber == 6);
    CHECK(rep.coker.free_rank == 6);
    CHECK(rep.stabilized);
  }
}

TEST_CASE("window guards") {
  LevelContext C(make_qp(3), {2, 1});
  CHECK_THROWS_AS((void)pv_window_check(C, 2), Error); // below m+2
  LevelContext big(make_unramified(3, {1, 0, 1}), {6, 3});
  CHECK_THROWS_AS((void)pv_window_check(big, 5), Error); // strip over the size guard
}
