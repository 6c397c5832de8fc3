#include "expspec/generalize.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>

#include "expspec/algebra.hpp"
#include "expspec/errors.hpp"

namespace expspec {

namespace {

constexpr double pi = std::numbers::pi;

Complex inv_denominator(double zn) { return 1.0 / Complex{1.0, zn}; }

void require_n(int n) {
  if (n < 2) throw UnsupportedN("n must be >= 2");
}

double coefficient_distance(const std::vector<Complex>& p, const std::vector<Complex>& q) {
  double d = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) d = std::max(d, std::abs(p[k] - q[k]));
  return d;
}

}  // namespace

double SpherePoint2n::norm() const {
  double s = zn * zn;
  for (const Complex& c : z) s += std::norm(c);
  return std::sqrt(s);
}

SpherePoint2n make_point2n(std::vector<Complex> z, double zn) {
  require_n(static_cast<int>(z.size()));
  SpherePoint2n x{std::move(z), zn};
  if (!(std::abs(x.norm() - 1.0) <= 1e-12)) throw DomainError("point is not on S^{2n}");
  return x;
}

SpherePoint2n from_point4(const SpherePoint4& x) { return {{x.z0, x.z1}, x.z2}; }

MatN::MatN(int n) : n_(n), data_(static_cast<std::size_t>(n * n), Complex{}) {}

MatN MatN::identity(int n) {
  MatN m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

MatN MatN::from_mat2(const Mat2& m) {
  MatN out(2);
  out(0, 0) = m.m00;
  out(0, 1) = m.m01;
  out(1, 0) = m.m10;
  out(1, 1) = m.m11;
  return out;
}

bool MatN::is_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
  });
}

double MatN::frobenius() const {
  double s = 0.0;
  for (const Complex& c : data_) s += std::norm(c);
  return std::sqrt(s);
}

Mat2 MatN::to_mat2() const {
  if (n_ != 2) throw UnsupportedN("to_mat2 needs n == 2");
  return {(*this)(0, 0), (*this)(0, 1), (*this)(1, 0), (*this)(1, 1)};
}

MatN operator+(const MatN& x, const MatN& y) {
  MatN out(x.n());
  for (int i = 0; i < x.n(); ++i)
    for (int j = 0; j < x.n(); ++j) out(i, j) = x(i, j) + y(i, j);
  return out;
}

MatN operator-(const MatN& x, const MatN& y) {
  MatN out(x.n());
  for (int i = 0; i < x.n(); ++i)
    for (int j = 0; j < x.n(); ++j) out(i, j) = x(i, j) - y(i, j);
  return out;
}

MatN operator*(Complex s, const MatN& m) {
  MatN out(m.n());
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) out(i, j) = s * m(i, j);
  return out;
}

// Summation order matches mat_mul on Mat2, which keeps n = 2 bit-identical.
MatN mat_mul(const MatN& x, const MatN& y) {
  const int n = x.n();
  MatN out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Complex acc = x(i, 0) * y(0, j);
      for (int k = 1; k < n; ++k) acc = acc + x(i, k) * y(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

std::vector<Complex> characteristic_polynomial(const MatN& m) {
  const int n = m.n();
  std::vector<Complex> c(static_cast<std::size_t>(n + 1));
  c[static_cast<std::size_t>(n)] = 1.0;
  MatN mk = MatN(n);  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    MatN next = mat_mul(m, mk);
    for (int i = 0; i < n; ++i) next(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    mk = next;
    const MatN am = mat_mul(m, mk);
    Complex tr{};
    for (int i = 0; i < n; ++i) tr += am(i, i);
    c[static_cast<std::size_t>(n - k)] = -tr / static_cast<double>(k);
  }
  return c;
}

double second_singular_value_bound(const MatN& m) {
  const double f = m.frobenius();
  if (f == 0.0) return 0.0;
  const int n = m.n();
  double minors = 0.0;
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      for (int j = 0; j < n; ++j)
        for (int l = j + 1; l < n; ++l)
          minors += std::norm(m(i, j) * m(k, l) - m(i, l) * m(k, j));
  return std::sqrt(static_cast<double>(n)) * std::sqrt(minors) / f;
}

MatN eval_a_n(const SpherePoint2n& x) {
  require_n(x.n());
  const Complex s = inv_denominator(x.zn);
  MatN out(x.n());
  for (int i = 0; i < x.n(); ++i) out(i, 0) = s * x.z[static_cast<std::size_t>(i)];
  return out;
}

MatN eval_b_n(const SpherePoint2n& x, FamilyVariant variant) {
  require_n(x.n());
  const Complex s = inv_denominator(x.zn);
  MatN out(x.n());
  for (int j = 0; j < x.n(); ++j) {
    const Complex zj = x.z[static_cast<std::size_t>(j)];
    out(0, j) = s * (variant == FamilyVariant::EXACT ? std::conj(zj) : zj);
  }
  return out;
}

MatN eval_one_minus_2ab_n(const SpherePoint2n& x, FamilyVariant variant) {
  return MatN::identity(x.n()) - Complex{2.0} * mat_mul(eval_a_n(x), eval_b_n(x, variant));
}

MatN eval_one_minus_2ba_n(const SpherePoint2n& x, FamilyVariant variant) {
  return MatN::identity(x.n()) - Complex{2.0} * mat_mul(eval_b_n(x, variant), eval_a_n(x));
}

std::vector<std::vector<Complex>> sphere_shell_2n_minus_1(int n, int shell_count) {
  require_n(n);
  if (n == 2) {
    std::vector<std::vector<Complex>> out;
    for (const SpherePoint3& w : hopf_shell(shell_count).points) out.push_back({w.w0, w.w1});
    return out;
  }
  const auto inner = sphere_shell_2n_minus_1(n - 1, shell_count);
  const int m = shell_count;
  const int big_k = (m + 3) / 4;
  std::vector<Complex> phases(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) phases[static_cast<std::size_t>(i)] = std::polar(1.0, 2.0 * pi * i / m);

  std::vector<std::vector<Complex>> out;
  for (const auto& u : inner) {
    auto w = u;
    w.push_back(0.0);
    out.push_back(std::move(w));
  }
  for (int k = 1; k < big_k; ++k) {
    const double beta = 0.5 * pi * k / big_k;
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    for (const auto& u : inner) {
      for (const Complex& e : phases) {
        std::vector<Complex> w;
        w.reserve(static_cast<std::size_t>(n));
        for (const Complex& ui : u) w.push_back(c * ui);
        w.push_back(s * e);
        out.push_back(std::move(w));
      }
    }
  }
  for (const Complex& e : phases) {
    std::vector<Complex> w(static_cast<std::size_t>(n), Complex{});
    w.back() = e;
    out.push_back(std::move(w));
  }
  for (auto& w : out) {
    double s = 0.0;
    for (const Complex& c : w) s += std::norm(c);
    const double r = std::sqrt(s);
    for (Complex& c : w) c /= r;
  }
  return out;
}

MeshS2n mesh_s2n(int n, int lat_count, int shell_count) {
  require_n(n);
  if (lat_count < 3) throw InvalidResolution("lat_count must be >= 3");
  if (shell_count < 8) throw InvalidResolution("shell_count must be >= 8");
  MeshS2n mesh{n, lat_count, shell_count, {}};
  const auto rows = latitude_rows(lat_count);
  const auto shell = sphere_shell_2n_minus_1(n, shell_count);
  const std::vector<Complex> origin(static_cast<std::size_t>(n), Complex{});
  mesh.points.reserve(2 + (rows.size() - 2) * shell.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r == 0 || r + 1 == rows.size()) {
      mesh.points.push_back({origin, rows[r].z2});
      continue;
    }
    for (const auto& w : shell) {
      SpherePoint2n p{w, rows[r].z2};
      for (Complex& c : p.z) c = rows[r].radius * c;
      mesh.points.push_back(std::move(p));
    }
  }
  return mesh;
}

FamilyCheck family_identity_check(int n, const MeshS2n& mesh, FamilyVariant variant) {
  if (n != 2 && n != 3) throw UnsupportedN("family checks are implemented for n = 2 and n = 3");
  if (mesh.n != n) throw UnsupportedN("mesh dimension does not match n");
  FamilyCheck out;
  for (const SpherePoint2n& x : mesh.points) {
    const MatN a = eval_a_n(x);
    const MatN b = eval_b_n(x, variant);
    const MatN ab = mat_mul(a, b);
    const MatN ba = mat_mul(b, a);
    const MatN id = MatN::identity(n);

    MatN diag = id;
    diag(0, 0) = phi(x.zn);
    out.ba_diagonal = std::max(out.ba_diagonal, ((id - Complex{2.0} * ba) - diag).frobenius());

    const Complex s = inv_denominator(x.zn);
    MatN outer(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        outer(i, j) = x.z[static_cast<std::size_t>(i)] * std::conj(x.z[static_cast<std::size_t>(j)]);
    const MatN closed = id - (2.0 * s * s) * outer;
    out.ab_closed_form = std::max(out.ab_closed_form, ((id - Complex{2.0} * ab) - closed).frobenius());

    // lambda^{n-1} (lambda - mu)
    std::vector<Complex> expected(static_cast<std::size_t>(n + 1), Complex{});
    expected[static_cast<std::size_t>(n)] = 1.0;
    expected[static_cast<std::size_t>(n - 1)] = -product_eigenvalue(x.zn);
    const auto p_ab = characteristic_polynomial(ab);
    out.ab_eigenvalues = std::max(out.ab_eigenvalues, coefficient_distance(p_ab, expected));
    out.ab_ba_charpoly =
        std::max(out.ab_ba_charpoly, coefficient_distance(p_ab, characteristic_polynomial(ba)));
    out.max_rank_bound = std::max(
        {out.max_rank_bound, second_singular_value_bound(a), second_singular_value_bound(b)});
    ++out.points;
  }
  out.max_residual = std::max({out.ba_diagonal, out.ab_closed_form, out.ab_eigenvalues});
  return out;
}

namespace {

bool bitwise_equal(const Mat2& x, const Mat2& y) {
  const Complex xs[] = {x.m00, x.m01, x.m10, x.m11};
  const Complex ys[] = {y.m00, y.m01, y.m10, y.m11};
  return std::memcmp(xs, ys, sizeof xs) == 0;
}

}  // namespace

bool matches_algebra_bitwise(const SphereMesh4& mesh) {
  bool same = true;
  mesh.for_each([&](const SpherePoint4& x) {
    if (!same) return;
    const SpherePoint2n y = from_point4(x);
    same = bitwise_equal(eval_a_n(y).to_mat2(), eval_a(x)) &&
           bitwise_equal(eval_b_n(y).to_mat2(), eval_b(x)) &&
           bitwise_equal(eval_one_minus_2ab_n(y).to_mat2(), eval_one_minus_2ab(x)) &&
           bitwise_equal(eval_one_minus_2ba_n(y).to_mat2(), eval_one_minus_2ba(x));
  });
  return same;
}

}  // namespace expspec
