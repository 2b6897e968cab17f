// Copyright 2026 The oam authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OAM_COMPOSITION_HPP
#define OAM_COMPOSITION_HPP

#include <optional>

#include "oam/landweber.hpp"

namespace oam {

// Per-iteration operator builders: U_k / V_k from families of cutters under a
// control sequence, and the three T_k variants with their modulus calculus.

/// Index selection per iteration. Selection is a pure function of k, so runs
/// are bit-reproducible.
///  - AlmostCyclic: singleton {k mod m}; every index appears in any m
///    consecutive selections.
///  - Intermittent: blocks cycled in order; the union of any span()
///    consecutive selections covers all indices.
///  - Full: all indices every iteration.
struct Control {
  enum class Kind { AlmostCyclic, Intermittent, Full };
  Kind kind = Kind::Full;
  int index_count = 0;
  int s = 1;  // declared intermittency span
  std::vector<std::vector<int>> blocks;

  std::vector<int> select(int k) const;
  int span() const { return s; }
};

Control make_cyclic_control(int m, std::optional<int> s = std::nullopt);
Control make_full_control(int m);
Control make_block_control(int m, std::vector<std::vector<int>> blocks,
                           std::optional<int> s = std::nullopt);

/// Audits the declared span: every window of s consecutive selections must
/// cover {0, ..., m-1}. Throws ConfigError otherwise.
void validate_control(const Control& control);

/// (sum_i omega_i / (rho_i + 1))^{-1} - 1; at least min rho_i. Weights must be
/// positive and sum to 1 within 1e-12.
double rho_of_convex_combination(const std::vector<double>& rhos,
                                 const std::vector<double>& weights);

/// (sum_i 1/rho_i)^{-1}; at least min rho_i / m.
double rho_of_product(const std::vector<double>& rhos);

enum class UkMode { Sequential, Simultaneous, Product };

struct BuiltOp {
  CutterOp op;
  std::vector<int> indices;  // the emitted I_k
};

/// Builds the iteration-k operator over the family:
///  - Sequential: ops[i_k] under an almost-cyclic control.
///  - Simultaneous: convex combination over I_k, summed in ascending index
///    order (equal weights unless given; given weights are renormalized over
///    I_k).
///  - Product: composition over I_k applied in block order (ascending for the
///    default controls).
/// Every member must have rho > 0.
BuiltOp build_Uk(const std::vector<CutterOp>& ops, const Control& control,
                 UkMode mode, int k, const std::vector<double>& weights = {});

struct VariantConfig {
  enum class Kind { Product, Simultaneous, Alternating } kind = Kind::Product;
  double eta = 0.5;  // Simultaneous mixing weight, in (0, 1)
  /// Explicit rho_k; must lie in [0, the variant's bound]. Default: the bound.
  std::optional<double> explicit_rho;
  ExtrapolationMode sigma = ExtrapolationMode::Tau;
};

/// The algorithmic operator T_k. uk carries beta_k, vk carries gamma_k.
///  - Product:      x + (1+rho_k)/2 (U_k(L{V_k}(x)) - x),
///                  rho_k <= (1/beta_k + 1/gamma_k)^{-1}.
///  - Simultaneous: x + (1+rho_k)/2 (eta U_k(x) + (1-eta) L{V_k}(x) - x),
///                  rho_k <= (eta/(beta_k+1) + (1-eta)/(gamma_k+1))^{-1} - 1.
///  - Alternating:  even k relaxes U_k by (1+beta_k)/2, odd k relaxes L{V_k}
///                  by (1+gamma_k)/2.
/// When one side is absent the other is half-relaxed on every step. The
/// result is always a cutter (rho = 1) whose fixed points contain S.
CutterOp build_Tk(const VariantConfig& cfg, const std::optional<CutterOp>& uk,
                  const std::optional<LandweberOp>& vk, int global_k);

}  // namespace oam

#endif  // OAM_COMPOSITION_HPP
