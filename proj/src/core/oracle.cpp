#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "errors.hpp"
#include "tridiag_eig.hpp"

namespace pointmass {

namespace {

using float50 = boost::multiprecision::cpp_bin_float_50;

constexpr double kPi = 3.14159265358979323846;

template <typename S>
S conj_val(const S& x) {
  return x;
}
std::complex<double> conj_val(const std::complex<double>& x) { return std::conj(x); }

template <typename S>
S abs2_val(const S& x) {
  return x * x;
}
double abs2_val(const std::complex<double>& x) { return std::norm(x); }

// One application of the banded canonical matrix C = L M, where L and M are
// direct sums of the 2x2 blocks [[conj(a), rho], [rho, -a]]: L places them at
// even offsets, M at odd offsets after a leading 1.
template <typename S, typename R>
void cmv_apply(const std::vector<S>& alpha, const std::vector<R>& rho,
               std::vector<S>& x, std::vector<S>& tmp) {
  const std::size_t dim = x.size();
  tmp = x;
  for (std::size_t j = 1; j + 1 < dim; j += 2) {
    S u = x[j], v = x[j + 1];
    tmp[j] = conj_val(alpha[j]) * u + rho[j] * v;
    tmp[j + 1] = rho[j] * u - alpha[j] * v;
  }
  for (std::size_t j = 0; j + 1 < dim; j += 2) {
    S u = tmp[j], v = tmp[j + 1];
    x[j] = conj_val(alpha[j]) * u + rho[j] * v;
    x[j + 1] = rho[j] * u - alpha[j] * v;
  }
  if (dim % 2 == 1) x[dim - 1] = tmp[dim - 1];
}

template <typename S, typename R>
std::vector<S> moments_T(const std::vector<S>& alpha, std::size_t K) {
  using std::sqrt;
  const std::size_t dim = alpha.size();
  std::vector<R> rho(dim);
  for (std::size_t j = 0; j < dim; ++j) rho[j] = sqrt(R(1) - R(abs2_val(alpha[j])));

  std::vector<S> x(dim, S(0)), tmp(dim);
  x[0] = S(1);
  std::vector<S> c(K + 1);
  c[0] = S(1);
  for (std::size_t k = 1; k <= K; ++k) {
    cmv_apply(alpha, rho, x, tmp);
    c[k] = conj_val(x[0]);
  }
  return c;
}

// Levinson step: conj(alpha_n) = <Phi_n*, z Phi_n> / ||Phi_n||^2 with the
// Toeplitz pairing <z^j, z^k> = c_{j-k}.
template <typename S, typename R>
std::vector<S> levinson_T(const std::vector<S>& c, std::size_t N) {
  require(c.size() >= N + 1, ErrorCode::invalid_argument,
          "levinson: needs moments c_0..c_N");
  auto moment = [&c](std::ptrdiff_t m) -> S {
    return m >= 0 ? c[static_cast<std::size_t>(m)]
                  : conj_val(c[static_cast<std::size_t>(-m)]);
  };

  std::vector<S> p{S(1)};  // monic Phi_n, ascending powers
  R norm2 = R(1);          // ||Phi_n||^2 (c_0 = 1)
  std::vector<S> alpha;
  alpha.reserve(N);
  for (std::size_t n = 0; n < N; ++n) {
    S num = S(0);
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t k = 0; k <= n; ++k)
        num += p[n - j] * p[k] *
               moment(static_cast<std::ptrdiff_t>(j) - static_cast<std::ptrdiff_t>(k) - 1);
    S a = conj_val(num) / S(norm2);
    R a2 = R(abs2_val(a));
    require(a2 < R(1), ErrorCode::conditioning,
            "levinson: lost positive definiteness at index " + std::to_string(n));
    std::vector<S> next(n + 2, S(0));
    for (std::size_t k = 0; k <= n; ++k) next[k + 1] = p[k];
    for (std::size_t k = 0; k <= n; ++k) next[k] -= conj_val(a) * conj_val(p[n - k]);
    p = std::move(next);
    norm2 *= R(1) - a2;
    alpha.push_back(a);
  }
  return alpha;
}

template <typename T>
struct MeasureT {
  std::vector<T> nodes;
  std::vector<T> weights;
};

template <typename T>
MeasureT<T> gauss_T(const std::vector<T>& a, const std::vector<T>& b, std::size_t N) {
  require(N >= 1, ErrorCode::invalid_argument, "gauss quadrature needs N >= 1");
  require(b.size() >= N && a.size() + 1 >= N, ErrorCode::invalid_argument,
          "gauss quadrature: not enough coefficients");
  std::vector<T> d(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(N));
  std::vector<T> e(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(N - 1));
  auto eig = tridiag_eigen_first(std::move(d), std::move(e));
  MeasureT<T> dm;
  dm.nodes = std::move(eig.values);
  dm.weights.reserve(N);
  for (const T& z : eig.first_components) dm.weights.push_back(z * z);
  return dm;
}

template <typename T>
void stieltjes_T(const MeasureT<T>& dm, std::size_t N, std::vector<T>& a,
                 std::vector<T>& b) {
  using std::sqrt;
  const std::size_t M = dm.nodes.size();
  require(N < M, ErrorCode::invalid_argument,
          "stieltjes: need more nodes than requested coefficients");

  std::vector<std::vector<T>> basis;
  basis.reserve(N + 1);
  std::vector<T> v(M);
  for (std::size_t i = 0; i < M; ++i) v[i] = sqrt(dm.weights[i]);
  basis.push_back(v);

  auto dot = [M](const std::vector<T>& x, const std::vector<T>& y) {
    T s(0);
    for (std::size_t i = 0; i < M; ++i) s += x[i] * y[i];
    return s;
  };

  a.assign(N, T(0));
  b.assign(N, T(0));
  std::vector<T> w(M);
  for (std::size_t n = 0; n < N; ++n) {
    const auto& vn = basis[n];
    for (std::size_t i = 0; i < M; ++i) w[i] = dm.nodes[i] * vn[i];
    b[n] = dot(vn, w);
    // full reorthogonalization, twice, against every generated vector
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : basis) {
        T h = dot(u, w);
        for (std::size_t i = 0; i < M; ++i) w[i] -= h * u[i];
      }
    }
    T nrm = sqrt(dot(w, w));
    require(nrm > T(1e-14), ErrorCode::not_in_class,
            "stieltjes: breakdown, measure has too few mass points");
    a[n] = nrm;
    if (n + 1 < N) {
      for (std::size_t i = 0; i < M; ++i) w[i] /= nrm;
      basis.push_back(w);
    }
  }
}

std::vector<std::complex<double>> alpha_prefix(const VerblunskySequence& seq,
                                               std::size_t len) {
  std::vector<std::complex<double>> v(len);
  for (std::size_t j = 0; j < len; ++j) v[j] = seq.alpha(j);
  return v;
}

void validate_measure(const DiscreteMeasure& dm) {
  double sum = 0.0;
  for (double w : dm.weights) {
    require(w > 0.0, ErrorCode::numeric, "discrete measure with nonpositive weight");
    sum += w;
  }
  require(std::fabs(sum - 1.0) <= 1e-13, ErrorCode::numeric,
          "discrete measure weights do not sum to 1");
  for (std::size_t i = 0; i + 1 < dm.nodes.size(); ++i)
    require(dm.nodes[i] < dm.nodes[i + 1], ErrorCode::numeric,
            "discrete measure nodes not distinct");
}

}  // namespace

TrigMoments moments_from_alpha(const VerblunskySequence& seq, std::size_t K) {
  require(K <= 128, ErrorCode::invalid_argument, "moment order bounded by 128");
  TrigMoments m;
  m.c = moments_T<std::complex<double>, double>(alpha_prefix(seq, 2 * K + 4), K);
  return m;
}

TrigMoments add_point_to_moments(const TrigMoments& moments, const PointMassSpec& spec) {
  TrigMoments out;
  out.c.reserve(moments.c.size());
  for (std::size_t k = 0; k < moments.c.size(); ++k) {
    double ang = -spec.omega * static_cast<double>(k);
    out.c.push_back((1.0 - spec.beta) * moments.c[k] +
                    spec.beta * std::complex<double>(std::cos(ang), std::sin(ang)));
  }
  return out;
}

std::vector<std::complex<double>> levinson(const TrigMoments& moments, std::size_t N) {
  return levinson_T<std::complex<double>, double>(moments.c, N);
}

std::vector<double> circle_oracle_alpha(const VerblunskySequence& seq,
                                        const PointMassSpec& spec, std::size_t N) {
  require(seq.real_valued(), ErrorCode::invalid_argument,
          "circle oracle: real sequences only");
  bool at_one = spec.omega == 0.0;
  require(at_one || std::fabs(spec.omega - kPi) < 1e-15, ErrorCode::invalid_argument,
          "circle oracle: omega must be 0 or pi");

  const std::size_t dim = 2 * N + 4;
  std::vector<float50> alpha(dim);
  for (std::size_t j = 0; j < dim; ++j) alpha[j] = seq.alpha_real(j);

  auto c = moments_T<float50, float50>(alpha, N);
  float50 beta(spec.beta);
  for (std::size_t k = 0; k <= N; ++k) {
    float50 point = at_one ? float50(1) : float50(k % 2 == 0 ? 1 : -1);
    c[k] = (float50(1) - beta) * c[k] + beta * point;
  }
  auto a = levinson_T<float50, float50>(c, N);
  std::vector<double> out;
  out.reserve(N);
  for (const auto& v : a) out.push_back(static_cast<double>(v));
  return out;
}

DiscreteMeasure gauss_quadrature(const JacobiCoefficients& jc, std::size_t N) {
  auto m = gauss_T<double>(jc.a, jc.b, N);
  DiscreteMeasure dm{std::move(m.nodes), std::move(m.weights)};
  validate_measure(dm);
  return dm;
}

DiscreteMeasure add_point_to_measure(const DiscreteMeasure& dm, double x, double beta) {
  require(beta > 0.0 && beta < 1.0, ErrorCode::invalid_argument,
          "point weight must lie in (0, 1)");
  DiscreteMeasure out;
  out.nodes.reserve(dm.nodes.size() + 1);
  out.weights.reserve(dm.nodes.size() + 1);
  for (std::size_t i = 0; i < dm.nodes.size(); ++i) {
    require(dm.nodes[i] != x, ErrorCode::invalid_argument,
            "new node coincides with an existing one");
    out.nodes.push_back(dm.nodes[i]);
    out.weights.push_back((1.0 - beta) * dm.weights[i]);
  }
  auto pos = std::upper_bound(out.nodes.begin(), out.nodes.end(), x);
  auto idx = static_cast<std::size_t>(pos - out.nodes.begin());
  out.nodes.insert(pos, x);
  out.weights.insert(out.weights.begin() + static_cast<std::ptrdiff_t>(idx), beta);
  validate_measure(out);
  return out;
}

JacobiCoefficients stieltjes(const DiscreteMeasure& dm, std::size_t N) {
  MeasureT<double> m{dm.nodes, dm.weights};
  JacobiCoefficients jc;
  stieltjes_T(m, N, jc.a, jc.b);
  return jc;
}

JacobiCoefficients line_oracle_jacobi(const JacobiCoefficients& base, double x,
                                      double beta, std::size_t quad_nodes,
                                      std::size_t N) {
  require(beta > 0.0 && beta < 1.0, ErrorCode::invalid_argument,
          "point weight must lie in (0, 1)");
  std::vector<long double> a(base.a.begin(), base.a.end());
  std::vector<long double> b(base.b.begin(), base.b.end());
  auto dm = gauss_T<long double>(a, b, quad_nodes);

  auto lx = static_cast<long double>(x);
  auto lbeta = static_cast<long double>(beta);
  for (auto& w : dm.weights) w *= 1.0L - lbeta;
  auto pos = std::upper_bound(dm.nodes.begin(), dm.nodes.end(), lx);
  auto idx = static_cast<std::size_t>(pos - dm.nodes.begin());
  dm.nodes.insert(pos, lx);
  dm.weights.insert(dm.weights.begin() + static_cast<std::ptrdiff_t>(idx), lbeta);

  std::vector<long double> pa, pb;
  stieltjes_T(dm, N, pa, pb);
  JacobiCoefficients out;
  out.a.assign(pa.begin(), pa.end());
  out.b.assign(pb.begin(), pb.end());
  return out;
}

}  // namespace pointmass
