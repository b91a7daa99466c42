#include "dlspec/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <string>

namespace dlspec {

std::int64_t SymmetricIntMatrix::trace() const noexcept {
  std::int64_t t = 0;
  for (int i = 0; i < size_; ++i) t += (*this)(i, i);
  return t;
}

std::int64_t SymmetricIntMatrix::max_abs_entry() const noexcept {
  std::int64_t m = 0;
  for (auto x : data_) m = std::max(m, x < 0 ? -x : x);
  return m;
}

DistanceData all_pairs_distances(const Graph& g) {
  const int n = g.order();
  const auto rows = g.adjacency_rows();
  const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);

  DistanceData out{SymmetricIntMatrix(n), std::vector<std::int64_t>(n, 0), 0};
  for (Vertex s = 0; s < n; ++s) {
    std::uint64_t reached = std::uint64_t{1} << s;
    std::uint64_t frontier = reached;
    int depth = 0;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (auto f = frontier; f != 0; f &= f - 1) next |= rows[std::countr_zero(f)];
      frontier = next & ~reached;
      reached |= frontier;
      ++depth;
      for (auto f = frontier; f != 0; f &= f - 1) {
        const int v = std::countr_zero(f);
        if (v > s) out.dist.set(s, v, depth);
        out.transmissions[s] += depth;
      }
      if (frontier != 0) out.diameter = std::max(out.diameter, depth);
    }
    if (reached != all) throw DomainError("graph is disconnected; distances are undefined");
  }
  return out;
}

SymmetricIntMatrix adjacency_matrix(const Graph& g) {
  SymmetricIntMatrix a(g.order());
  for (auto [u, v] : g.edges()) a.set(u, v, 1);
  return a;
}

SymmetricIntMatrix laplacian(const Graph& g) {
  const int n = g.order();
  SymmetricIntMatrix l(n);
  for (auto [u, v] : g.edges()) l.set(u, v, -1);
  for (Vertex v = 0; v < n; ++v) l.set(v, v, g.degree(v));
  return l;
}

SymmetricIntMatrix distance_matrix(const Graph& g) { return all_pairs_distances(g).dist; }

SymmetricIntMatrix distance_laplacian(const Graph& g) {
  auto data = all_pairs_distances(g);
  const int n = g.order();
  SymmetricIntMatrix dl(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) dl.set(i, j, -data.dist(i, j));
    dl.set(i, i, data.transmissions[i]);
  }
  return dl;
}

int SpectrumNumeric::total_multiplicity() const noexcept {
  int t = 0;
  for (const auto& g : groups) t += g.multiplicity;
  return t;
}

double SpectrumNumeric::spectral_radius() const noexcept {
  double r = 0.0;
  for (const auto& g : groups) r = std::max(r, std::abs(g.value));
  return r;
}

std::vector<double> SpectrumNumeric::expanded() const {
  std::vector<double> out;
  for (const auto& g : groups) out.insert(out.end(), static_cast<std::size_t>(g.multiplicity), g.value);
  return out;
}

const GroupedEigenvalue& SpectrumNumeric::group_at_position(int position) const {
  int seen = 0;
  for (const auto& g : groups) {
    seen += g.multiplicity;
    if (position <= seen && position >= 1) return g;
  }
  throw DomainError("eigenvalue position " + std::to_string(position) + " out of range");
}

SpectrumNumeric SpectrumNumeric::from_values(std::vector<double> values, double tolerance) {
  std::sort(values.begin(), values.end(), std::greater<>());
  SpectrumNumeric s;
  double sum = 0.0;
  double previous = 0.0;
  for (double v : values) {
    if (!s.groups.empty() && previous - v <= tolerance) {
      auto& g = s.groups.back();
      ++g.multiplicity;
      sum += v;
      g.value = sum / g.multiplicity;
    } else {
      s.groups.push_back({v, 1});
      sum = v;
    }
    previous = v;
  }
  return s;
}

std::vector<double> symmetric_eigenvalues(const SymmetricIntMatrix& m) {
  const int n = m.size();
  std::vector<double> a(m.values().begin(), m.values().end());
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  const double threshold = kJacobiRelativeThreshold * static_cast<double>(m.max_abs_entry());
  auto off_max = [&] {
    double r = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) r = std::max(r, std::abs(at(i, j)));
    return r;
  };

  int sweeps = 0;
  for (double residual = off_max(); residual > threshold; residual = off_max()) {
    if (sweeps++ == kJacobiMaxSweeps) {
      throw ConvergenceError("Jacobi eigensolver did not converge in " + std::to_string(kJacobiMaxSweeps) +
                                 " sweeps (off-diagonal residual " + std::to_string(residual) + ")",
                             residual);
    }
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
  }

  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

double grouping_tolerance(double spectral_radius, double relative) {
  return std::max(kGroupingAbsoluteFloor, relative * std::max(1.0, spectral_radius));
}

SpectrumNumeric numeric_spectrum(const SymmetricIntMatrix& m, std::optional<double> grouping_tol) {
  auto eig = symmetric_eigenvalues(m);
  double radius = 0.0;
  for (double v : eig) radius = std::max(radius, std::abs(v));
  const double tol = grouping_tol.value_or(grouping_tolerance(radius));
  return SpectrumNumeric::from_values(std::move(eig), tol);
}

}  // namespace dlspec
