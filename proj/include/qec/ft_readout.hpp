// Copyright 2026 The qec-energy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "qec/circuit.hpp"
#include "qec/codes.hpp"
#include "qec/rational.hpp"

namespace qec {

struct FtConfig {
  int validation_rounds = 1;
  // One cat per adjacent data pair around a ring (N cats); false drops the
  // wrap-around pair (N - 1 cats).
  bool ring = true;
  int retry_cap = 10;

  void validate() const;
  int cat_count(int n) const { return ring ? n : n - 1; }
};

// Where a cat state lives: pair (a, b), verification ancilla f, and the v
// clbits receiving the verification parities.
struct CatLayout {
  int a = 0;
  int b = 1;
  int f = 2;
  int first_check_clbit = 0;
};

// H + CX Bell pair followed by v verification rounds, wrapped in a retry
// block that re-prepares the pair while any verification parity is odd.
Circuit build_cat_state_prep(int v, const CatLayout& layout = {}, int retry_cap = 10);

// Register layout of the fault-tolerant pipeline for n data qubits.
struct FtLayout {
  int n;
  int cats;
  int v;

  int cat_a(int j) const { return n + 2 * j; }
  int cat_b(int j) const { return n + 2 * j + 1; }
  int verifier() const { return n + 2 * cats; }
  int parity_clbit(int j) const { return j; }
  int readout_clbit(int i) const { return cats + i; }
  int cat_clbit(int j) const { return cats + n + j * (2 + v); }
  int num_qubits() const { return n + 2 * cats + 1; }
  int num_clbits() const { return cats + n + cats * (2 + v); }
};

FtLayout ft_layout(int n, const FtConfig& cfg);

Circuit build_ft_syndrome_extraction(int n, const FtConfig& cfg);
Circuit build_ft_protected_computation(int n, const FtConfig& cfg,
                                       EncoderVariant encoder = EncoderVariant::Direct,
                                       const PipelineOptions& opts = {});

// Energy bookkeeping in units of pi^2 / eps^2.
Rational cat_state_coefficient(int v);
// Per cat: 1 H + (1 + 2v) CX to prepare, then 2 CX + 1 H to couple.
Rational ft_overhead_coefficient(int n, int v);
// (non-FT budget + overhead) / non-FT budget.
Rational ft_budget_ratio(int n, int v);
Rational ft_budget_ratio_limit(int v);

}  // namespace qec
