// carleson.hpp — box membership over reflected eigenvalues, rank-one-sum
// operator norms via Gram eigenvalues, and the box-ratio scan whose growth
// under truncation signals an unbounded Carleson constant.
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "specdecay/spectra.hpp"

namespace specdecay {

// Rectangle {λ : 0 ≤ Re λ ≤ h, |Im λ − ω| ≤ h}; membership tests −λ_n.
struct CarlesonBox {
  double h = 0.0;      // side scale, > 0
  double omega = 0.0;  // imaginary center
};

// Observation columns c_n (one per mode). Diagonal families (c_n = w_n e_n)
// store only the weights; dense families store full coefficient vectors.
class ColumnFamily {
 public:
  static ColumnFamily diagonal(std::vector<double> weights);
  static ColumnFamily dense(std::vector<std::vector<std::complex<double>>> columns);

  bool is_diagonal() const { return dense_.empty(); }
  std::size_t count() const { return is_diagonal() ? diag_.size() : dense_.size(); }
  double diag_weight(std::size_t n) const;  // diagonal families only
  double col_norm2(std::size_t n) const;    // ‖c_n‖²
  // ⟨c_k, c_j⟩ with the first argument linear.
  std::complex<double> inner(std::size_t k, std::size_t j) const;

 private:
  std::vector<double> diag_;
  std::vector<std::vector<std::complex<double>>> dense_;
};

// Dense family from a document {"columns": [[[re,im], ...], ...]}.
ColumnFamily parse_column_family(const nlohmann::json& doc);

// Diagonal columns w_n = |λ_n|^{−a−1/2}: the family whose self-anchored box
// ratios equal 4× the squared per-mode 2-Weiss constants of the symbol (−λ)^{−a},
// used to compare scan verdicts against weiss_constant at the same a.
ColumnFamily weiss_matched_columns(const Spectrum& spec, double a);

// Indices (0-based) of the modes with −λ_n in the closed box.
std::vector<std::size_t> box_members(const Spectrum& spec, const CarlesonBox& box);

enum class GramMethod { auto_detect, closed_form_diagonal, jacobi, power_iteration };

// ‖Σ_{n ∈ members} |λ_n|^{2α} c_n c_n*‖ = largest eigenvalue of the Gram
// matrix G_{jk} = |λ_j|^α |λ_k|^α ⟨c_k, c_j⟩. Empty member set → 0.
// auto_detect: closed form for diagonal families, cyclic Jacobi for ≤ 64
// members, power iteration above.
double box_norm(const Spectrum& spec, const ColumnFamily& cols, double alpha,
                std::span<const std::size_t> members, GramMethod method = GramMethod::auto_detect);

// Mode-anchored dyadic boxes: ω = −Im λ_n, h = |Re λ_n|·2^j, j = 0..j_max.
struct SamplerPolicy {
  int j_max = 20;
};

struct CarlesonScan {
  double m_hat = 0.0;  // max over sampled boxes of box_norm / h (a lower bound)
  CarlesonBox worst;
  double m_hat_tenth = 0.0;  // same scan over the first n_max/10 modes
  CarlesonBox worst_tenth;
  std::size_t boxes = 0;  // boxes sampled at the full truncation
  bool divergent = false;
  double alpha = 0.0;
  std::size_t n_max = 0;
  std::string family;
  std::string method;  // "closed-form" for diagonal families, "oracle" for dense
};

CarlesonScan carleson_constant(const Spectrum& spec, const ColumnFamily& cols, double alpha,
                               const SamplerPolicy& policy = {});

}  // namespace specdecay
