// Copyright 2026 The pnes-decoherence Authors
//
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

#pragma once

#include <span>
#include <string>
#include <string_view>

#include "pnes/sweep.hpp"

namespace pnes {

/// b_over_a,n_t,match_kind,r_matched,t_g,energy_at_tg,n_0,n_r,n_g,ratio_r0,ratio_rg,cutoff,conv_delta
std::string_view csv_header();

/// 12 significant digits, locale-independent.
std::string format_number(double value);

/// One data row, or "b_over_a,n_t,match_kind,error=<reason>" for a failed point.
/// Undefined ratios are written as "undefined"; unchecked convergence as "unchecked".
std::string csv_row(const SweepRecord& record);

/// Header plus one row per record.
std::string to_csv(std::span<const SweepRecord> records);

/// fig1 panel file: the sweep schema prefixed by a "series" column, holding
/// every series of `panel` restricted to the `match` records.
std::string to_panel_csv(std::span<const Fig1SeriesResult> series, std::string_view panel,
                         MatchKind match);

/// Static line charts: rows N_R/N_G and N_R/N_0 on a log axis, one column per
/// distinct panel name in order of appearance (PSSV and ψ01 for the fig1 series).
/// Filled markers for energy matching, open for entanglement.
std::string render_fig1_svg(std::span<const Fig1SeriesResult> series);

}  // namespace pnes
