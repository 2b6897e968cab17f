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

#include "oam/composition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace oam {

std::vector<int> Control::select(int k) const {
  switch (kind) {
    case Kind::AlmostCyclic:
      return {k % index_count};
    case Kind::Full: {
      std::vector<int> all(static_cast<size_t>(index_count));
      std::iota(all.begin(), all.end(), 0);
      return all;
    }
    case Kind::Intermittent:
      return blocks[static_cast<size_t>(k) % blocks.size()];
  }
  return {};
}

Control make_cyclic_control(int m, std::optional<int> s) {
  if (m <= 0) throw ConfigError("control: index count must be positive");
  Control c;
  c.kind = Control::Kind::AlmostCyclic;
  c.index_count = m;
  c.s = s.value_or(m);
  validate_control(c);
  return c;
}

Control make_full_control(int m) {
  if (m <= 0) throw ConfigError("control: index count must be positive");
  Control c;
  c.kind = Control::Kind::Full;
  c.index_count = m;
  c.s = 1;
  return c;
}

Control make_block_control(int m, std::vector<std::vector<int>> blocks,
                           std::optional<int> s) {
  if (m <= 0) throw ConfigError("control: index count must be positive");
  Control c;
  c.kind = Control::Kind::Intermittent;
  c.index_count = m;
  c.blocks = std::move(blocks);
  c.s = s.value_or(static_cast<int>(c.blocks.size()));
  validate_control(c);
  return c;
}

void validate_control(const Control& control) {
  const int m = control.index_count;
  if (m <= 0) throw ConfigError("control: index count must be positive");
  if (control.s < 1) throw ConfigError("control: s must be >= 1");
  if (control.kind == Control::Kind::Full) return;
  if (control.kind == Control::Kind::AlmostCyclic) {
    if (control.s < m) {
      throw ConfigError("control: cyclic selection over " + std::to_string(m) +
                        " indices is not " + std::to_string(control.s) +
                        "-almost-cyclic; s must be >= the index count");
    }
    return;
  }
  if (control.blocks.empty()) throw ConfigError("control: blocks are empty");
  for (const auto& block : control.blocks) {
    if (block.empty()) throw ConfigError("control: empty block");
    for (int i : block) {
      if (i < 0 || i >= m) {
        throw ConfigError("control: block index " + std::to_string(i) +
                          " out of range [0, " + std::to_string(m) + ")");
      }
    }
  }
  // Selection is periodic in the block count, so auditing windows starting
  // within one period proves the property for all k.
  const int period = static_cast<int>(control.blocks.size());
  for (int start = 0; start < period; ++start) {
    std::set<int> seen;
    for (int l = 0; l < control.s; ++l) {
      const auto& block =
          control.blocks[static_cast<size_t>((start + l) % period)];
      seen.insert(block.begin(), block.end());
    }
    if (static_cast<int>(seen.size()) != m) {
      throw ConfigError(
          "control: blocks are not " + std::to_string(control.s) +
          "-intermittent; a window starting at k=" + std::to_string(start) +
          " misses some index");
    }
  }
}

double rho_of_convex_combination(const std::vector<double>& rhos,
                                 const std::vector<double>& weights) {
  if (rhos.empty() || rhos.size() != weights.size()) {
    throw ConfigError("rho_of_convex_combination: need matching nonempty lists");
  }
  double wsum = 0;
  double denom = 0;
  for (size_t i = 0; i < rhos.size(); ++i) {
    if (!(rhos[i] > 0)) {
      throw ConfigError("rho_of_convex_combination: moduli must be positive");
    }
    if (!(weights[i] > 0)) {
      throw ConfigError("rho_of_convex_combination: weights must be positive");
    }
    wsum += weights[i];
    denom += weights[i] / (rhos[i] + 1.0);
  }
  if (std::abs(wsum - 1.0) > 1e-12) {
    throw ConfigError("rho_of_convex_combination: weights must sum to 1");
  }
  return 1.0 / denom - 1.0;
}

double rho_of_product(const std::vector<double>& rhos) {
  if (rhos.empty()) throw ConfigError("rho_of_product: empty modulus list");
  double denom = 0;
  for (double r : rhos) {
    if (!(r > 0)) throw ConfigError("rho_of_product: moduli must be positive");
    denom += 1.0 / r;
  }
  return 1.0 / denom;
}

BuiltOp build_Uk(const std::vector<CutterOp>& ops, const Control& control,
                 UkMode mode, int k, const std::vector<double>& weights) {
  if (ops.empty()) throw ConfigError("build_Uk: empty operator family");
  if (control.index_count != static_cast<int>(ops.size())) {
    throw ConfigError("build_Uk: control covers " +
                      std::to_string(control.index_count) + " indices, family has " +
                      std::to_string(ops.size()));
  }
  for (const auto& op : ops) {
    if (!(op.rho > 0)) throw ConfigError("build_Uk: members must have rho > 0");
  }
  if (!weights.empty() && weights.size() != ops.size()) {
    throw ConfigError("build_Uk: weights must cover the whole family");
  }

  std::vector<int> selected = control.select(k);
  if (selected.empty()) throw ConfigError("build_Uk: empty control block");

  BuiltOp built;
  built.indices = selected;

  switch (mode) {
    case UkMode::Sequential: {
      if (control.kind != Control::Kind::AlmostCyclic) {
        throw ConfigError("build_Uk: sequential mode requires a cyclic control");
      }
      built.op = ops[static_cast<size_t>(selected.front())];
      return built;
    }
    case UkMode::Simultaneous: {
      std::vector<int> idx = selected;
      std::sort(idx.begin(), idx.end());
      idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
      std::vector<double> w(idx.size());
      if (weights.empty()) {
        std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(idx.size()));
      } else {
        double total = 0;
        for (size_t j = 0; j < idx.size(); ++j) {
          double wj = weights[static_cast<size_t>(idx[j])];
          if (!(wj > 0)) throw ConfigError("build_Uk: weights must be positive");
          total += wj;
        }
        for (size_t j = 0; j < idx.size(); ++j) {
          w[j] = weights[static_cast<size_t>(idx[j])] / total;
        }
      }
      std::vector<double> rhos(idx.size());
      std::vector<CutterOp> members(idx.size());
      for (size_t j = 0; j < idx.size(); ++j) {
        members[j] = ops[static_cast<size_t>(idx[j])];
        rhos[j] = members[j].rho;
      }
      built.indices = idx;
      built.op.rho = rho_of_convex_combination(rhos, w);
      // Summed in ascending index order for bit-reproducibility.
      built.op.eval = [members, w](const Vector& x) -> Vector {
        Vector y = Vector::Zero(x.size());
        for (size_t j = 0; j < members.size(); ++j) y += w[j] * members[j](x);
        return y;
      };
      return built;
    }
    case UkMode::Product: {
      std::vector<CutterOp> members;
      std::vector<double> rhos;
      members.reserve(selected.size());
      for (int i : selected) {
        members.push_back(ops[static_cast<size_t>(i)]);
        rhos.push_back(members.back().rho);
      }
      built.op.rho = rho_of_product(rhos);
      built.op.eval = [members](const Vector& x) -> Vector {
        Vector y = x;
        for (const auto& member : members) y = member(y);
        return y;
      };
      return built;
    }
  }
  throw ConfigError("build_Uk: unknown mode");
}

namespace {

// Certifies w at the (possibly lowered) modulus rho_k, then applies the
// half-relaxation that turns a rho_k-SQNE operator into a cutter.
CutterOp half_relax_to_cutter(CutterOp w, double rho_k) {
  w.rho = rho_k;
  return relax(std::move(w), (1.0 + rho_k) / 2.0);
}

double checked_rho(const VariantConfig& cfg, double bound) {
  if (!cfg.explicit_rho) return bound;
  double rho = *cfg.explicit_rho;
  if (rho < 0 || rho > bound * (1.0 + 1e-12) + 1e-15) {
    throw ConfigError("rho = " + std::to_string(rho) +
                      " lies outside the admissible interval [0, " +
                      std::to_string(bound) + "]");
  }
  return std::min(rho, bound);
}

}  // namespace

CutterOp build_Tk(const VariantConfig& cfg, const std::optional<CutterOp>& uk,
                  const std::optional<LandweberOp>& vk, int global_k) {
  if (!uk && !vk) {
    throw ConfigError("build_Tk: at least one operator side is required");
  }
  if (cfg.kind == VariantConfig::Kind::Simultaneous &&
      !(cfg.eta > 0 && cfg.eta < 1)) {
    throw ConfigError("eta must lie in (0, 1)");
  }
  // Single-sided problems reduce every variant to the half-relaxed operator.
  if (!vk) return half_relax_to_cutter(*uk, checked_rho(cfg, uk->rho));
  if (!uk) {
    CutterOp lw = as_cutter(*vk);
    double rho_k = checked_rho(cfg, lw.rho);
    return half_relax_to_cutter(std::move(lw), rho_k);
  }

  const double beta = uk->rho;
  const double gamma = vk->rho;
  switch (cfg.kind) {
    case VariantConfig::Kind::Product: {
      double rho_k = checked_rho(cfg, 1.0 / (1.0 / beta + 1.0 / gamma));
      CutterOp w;
      w.eval = [u = *uk, v = *vk](const Vector& x) {
        return u(landweber_apply(v, x));
      };
      return half_relax_to_cutter(std::move(w), rho_k);
    }
    case VariantConfig::Kind::Simultaneous: {
      double bound =
          1.0 / (cfg.eta / (beta + 1.0) + (1.0 - cfg.eta) / (gamma + 1.0)) - 1.0;
      double rho_k = checked_rho(cfg, bound);
      CutterOp w;
      w.eval = [u = *uk, v = *vk, eta = cfg.eta](const Vector& x) -> Vector {
        return eta * u(x) + (1.0 - eta) * landweber_apply(v, x);
      };
      return half_relax_to_cutter(std::move(w), rho_k);
    }
    case VariantConfig::Kind::Alternating: {
      if (cfg.explicit_rho) {
        throw ConfigError("rho is not applicable to the alternating variant");
      }
      if (global_k % 2 == 0) return half_relax_to_cutter(*uk, beta);
      return half_relax_to_cutter(as_cutter(*vk), gamma);
    }
  }
  throw ConfigError("build_Tk: unknown variant");
}

}  // namespace oam
