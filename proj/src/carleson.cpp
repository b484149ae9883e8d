#include "specdecay/carleson.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "specdecay/calculus.hpp"

namespace specdecay {

ColumnFamily ColumnFamily::diagonal(std::vector<double> weights) {
  for (const double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("ColumnFamily: diagonal weights must be finite and >= 0");
    }
  }
  ColumnFamily out;
  out.diag_ = std::move(weights);
  return out;
}

ColumnFamily ColumnFamily::dense(std::vector<std::vector<std::complex<double>>> columns) {
  if (columns.empty()) throw std::invalid_argument("ColumnFamily: no columns");
  const std::size_t dim = columns.front().size();
  for (const auto& c : columns) {
    if (c.size() != dim) throw std::invalid_argument("ColumnFamily: ragged columns");
    for (const auto& z : c) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw std::invalid_argument("ColumnFamily: column entry is not finite");
      }
    }
  }
  ColumnFamily out;
  out.dense_ = std::move(columns);
  return out;
}

double ColumnFamily::diag_weight(std::size_t n) const {
  if (!is_diagonal()) throw std::logic_error("ColumnFamily: diag_weight on a dense family");
  return diag_.at(n);
}

double ColumnFamily::col_norm2(std::size_t n) const {
  if (is_diagonal()) return diag_.at(n) * diag_.at(n);
  const auto& c = dense_.at(n);
  double s = 0.0;
  for (const auto& z : c) s += std::norm(z);
  return s;
}

std::complex<double> ColumnFamily::inner(std::size_t k, std::size_t j) const {
  if (is_diagonal()) {
    if (k == j) {
      const double w = diag_.at(k);
      return {w * w, 0.0};
    }
    (void)diag_.at(std::max(k, j));
    return {0.0, 0.0};
  }
  const auto& ck = dense_.at(k);
  const auto& cj = dense_.at(j);
  std::complex<double> s = 0.0;
  for (std::size_t i = 0; i < ck.size(); ++i) s += ck[i] * std::conj(cj[i]);
  return s;
}

ColumnFamily parse_column_family(const nlohmann::json& doc) {
  if (!doc.contains("columns") || !doc["columns"].is_array() || doc["columns"].empty()) {
    throw std::invalid_argument("parse_column_family: document needs a nonempty 'columns' array");
  }
  std::vector<std::vector<std::complex<double>>> cols;
  for (const auto& col : doc["columns"]) {
    if (!col.is_array()) {
      throw std::invalid_argument("parse_column_family: each column must be an array");
    }
    std::vector<std::complex<double>> c;
    for (const auto& entry : col) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        throw std::invalid_argument(
            "parse_column_family: column entries must be [re, im] pairs");
      }
      c.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    cols.push_back(std::move(c));
  }
  return ColumnFamily::dense(std::move(cols));
}

ColumnFamily weiss_matched_columns(const Spectrum& spec, double a) {
  std::vector<double> w(spec.n_max());
  for (std::size_t n = 0; n < w.size(); ++n) {
    w[n] = std::pow(std::abs(spec.modes[n]), -a - 0.5);
  }
  return ColumnFamily::diagonal(std::move(w));
}

std::vector<std::size_t> box_members(const Spectrum& spec, const CarlesonBox& box) {
  if (!(box.h > 0.0)) throw std::invalid_argument("box_members: requires h > 0");
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < spec.n_max(); ++n) {
    const double re = -spec.modes[n].real();  // > 0 for valid spectra
    const double im = -spec.modes[n].imag();
    if (re <= box.h && std::abs(im - box.omega) <= box.h) out.push_back(n);
  }
  return out;
}

namespace {

// Largest eigenvalue of a real symmetric matrix by cyclic Jacobi sweeps.
double jacobi_max_eigen(std::vector<double> s, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return s[i * n + j]; };
  double frob2 = 0.0;
  for (const double v : s) frob2 += v * v;
  const double stop = 1e-30 * std::max(frob2, 1e-300);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) off2 += 2.0 * at(i, j) * at(i, j);
    }
    if (off2 <= stop) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - sn * akq;
          at(k, q) = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - sn * aqk;
          at(q, k) = sn * apk + c * aqk;
        }
      }
    }
  }
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) best = std::max(best, at(i, i));
  return best;
}

// Largest eigenvalue of a PSD Hermitian matrix by power iteration.
double power_max_eigen(const std::vector<std::complex<double>>& g, std::size_t n) {
  std::vector<std::complex<double>> v(n), w(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = 1.0 + 1e-3 * std::sin(static_cast<double>(i + 1));
  }
  double nv = 0.0;
  for (const auto& z : v) nv += std::norm(z);
  nv = std::sqrt(nv);
  for (auto& z : v) z /= nv;
  double prev = 0.0;
  for (int iter = 0; iter < 20000; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      std::complex<double> s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += g[i * n + j] * v[j];
      w[i] = s;
    }
    double rayleigh = 0.0, nw = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      rayleigh += (w[i] * std::conj(v[i])).real();
      nw += std::norm(w[i]);
    }
    nw = std::sqrt(nw);
    if (nw == 0.0) return 0.0;
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / nw;
    if (iter > 2 && std::abs(rayleigh - prev) <= 1e-13 * std::abs(rayleigh) + 1e-300) {
      return rayleigh;
    }
    prev = rayleigh;
  }
  return prev;
}

}  // namespace

double box_norm(const Spectrum& spec, const ColumnFamily& cols, double alpha,
                std::span<const std::size_t> members, GramMethod method) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("box_norm: requires alpha >= 0");
  const std::size_t limit = std::min(cols.count(), spec.n_max());
  for (const std::size_t n : members) {
    if (n >= limit) throw std::invalid_argument("box_norm: member index out of range");
  }
  if (members.empty()) return 0.0;

  if (method == GramMethod::auto_detect) {
    if (cols.is_diagonal()) {
      method = GramMethod::closed_form_diagonal;
    } else if (members.size() <= 64) {
      method = GramMethod::jacobi;
    } else {
      method = GramMethod::power_iteration;
    }
  }
  if (method == GramMethod::closed_form_diagonal) {
    if (!cols.is_diagonal()) {
      throw std::invalid_argument("box_norm: closed form needs a diagonal family");
    }
    double best = 0.0;
    for (const std::size_t n : members) {
      best = std::max(best,
                      std::pow(std::abs(spec.modes[n]), 2.0 * alpha) * cols.col_norm2(n));
    }
    return best;
  }

  const std::size_t m = members.size();
  std::vector<double> scale(m);
  for (std::size_t j = 0; j < m; ++j) {
    scale[j] = std::pow(std::abs(spec.modes[members[j]]), alpha);
  }
  std::vector<std::complex<double>> g(m * m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) {
      g[j * m + k] = scale[j] * scale[k] * cols.inner(members[k], members[j]);
    }
  }
  if (method == GramMethod::power_iteration) return power_max_eigen(g, m);

  // Hermitian G = A + iB embeds as the real symmetric [[A, -B], [B, A]] with
  // the same eigenvalues (doubled multiplicity).
  const std::size_t n2 = 2 * m;
  std::vector<double> s(n2 * n2);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) {
      const double a = g[j * m + k].real();
      const double b = g[j * m + k].imag();
      s[j * n2 + k] = a;
      s[j * n2 + (m + k)] = -b;
      s[(m + j) * n2 + k] = b;
      s[(m + j) * n2 + (m + k)] = a;
    }
  }
  return jacobi_max_eigen(std::move(s), n2);
}

namespace {

struct ScanResult {
  double m_hat = 0.0;
  CarlesonBox worst;
  std::size_t boxes = 0;
};

// Scan mode-anchored dyadic boxes over the first `count` modes.
ScanResult scan_boxes(const Spectrum& spec, const ColumnFamily& cols, double alpha,
                      int j_max, std::size_t count) {
  const std::size_t n = std::min({count, spec.n_max(), cols.count()});
  // Im-sorted order for windowed member collection.
  std::vector<std::size_t> by_im(n);
  std::iota(by_im.begin(), by_im.end(), std::size_t{0});
  std::stable_sort(by_im.begin(), by_im.end(), [&](std::size_t a, std::size_t b) {
    return spec.modes[a].imag() < spec.modes[b].imag();
  });
  std::vector<double> im_sorted(n);
  for (std::size_t k = 0; k < n; ++k) im_sorted[k] = spec.modes[by_im[k]].imag();

  // Diagonal families admit a per-mode closed form; precompute it.
  std::vector<double> diag_value;
  if (cols.is_diagonal()) {
    diag_value.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      diag_value[k] = std::pow(std::abs(spec.modes[k]), 2.0 * alpha) * cols.col_norm2(k);
    }
  }

  ScanResult out;
  std::vector<std::size_t> members;
  for (std::size_t anchor = 0; anchor < n; ++anchor) {
    const double re_a = -spec.modes[anchor].real();
    const double center = spec.modes[anchor].imag();  // = -omega
    double h = re_a;
    for (int j = 0; j <= j_max; ++j, h *= 2.0) {
      // Members: |Im λ_k − Im λ_anchor| ≤ h and −Re λ_k ≤ h.
      const auto lo =
          std::lower_bound(im_sorted.begin(), im_sorted.end(), center - h) - im_sorted.begin();
      const auto hi =
          std::upper_bound(im_sorted.begin(), im_sorted.end(), center + h) - im_sorted.begin();
      double norm;
      if (cols.is_diagonal()) {
        norm = 0.0;
        for (auto k = static_cast<std::size_t>(lo); k < static_cast<std::size_t>(hi); ++k) {
          const std::size_t idx = by_im[k];
          if (-spec.modes[idx].real() <= h) norm = std::max(norm, diag_value[idx]);
        }
      } else {
        members.clear();
        for (auto k = static_cast<std::size_t>(lo); k < static_cast<std::size_t>(hi); ++k) {
          const std::size_t idx = by_im[k];
          if (-spec.modes[idx].real() <= h) members.push_back(idx);
        }
        std::sort(members.begin(), members.end());
        norm = box_norm(spec, cols, alpha, members);
      }
      ++out.boxes;
      const double ratio = norm / h;
      if (ratio > out.m_hat) {
        out.m_hat = ratio;
        out.worst = {h, -center};
      }
    }
  }
  return out;
}

}  // namespace

CarlesonScan carleson_constant(const Spectrum& spec, const ColumnFamily& cols, double alpha,
                               const SamplerPolicy& policy) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("carleson_constant: requires alpha >= 0");
  if (policy.j_max < 0) throw std::invalid_argument("carleson_constant: empty sampler");
  if (cols.count() == 0) throw std::invalid_argument("carleson_constant: no columns");

  const std::size_t n = std::min(spec.n_max(), cols.count());
  const ScanResult full = scan_boxes(spec, cols, alpha, policy.j_max, n);
  const ScanResult tenth = scan_boxes(spec, cols, alpha, policy.j_max, tenth_count(n));

  CarlesonScan out;
  out.m_hat = full.m_hat;
  out.worst = full.worst;
  out.m_hat_tenth = tenth.m_hat;
  out.worst_tenth = tenth.worst;
  out.boxes = full.boxes;
  out.alpha = alpha;
  out.n_max = n;
  out.family = spec.family;
  out.method = cols.is_diagonal() ? "closed-form" : "oracle";
  out.divergent = (out.m_hat_tenth == 0.0) ? (out.m_hat > 0.0)
                                           : (out.m_hat > 1.01 * out.m_hat_tenth);
  return out;
}

}  // namespace specdecay
