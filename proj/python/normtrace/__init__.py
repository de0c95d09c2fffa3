# Copyright 2026 The normtrace Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Norm/trace counting over finite field towers."""

from ._core import (
    FieldTower,
    NormtraceError,
    __version__,
    check_bound,
    cli,
    count_curve_gauss,
    count_curve_points,
    count_irreducible,
    count_norm_trace,
    count_toric_gauss,
    count_toric_points,
    curve_closed,
    nn_closed,
    norm_trace_census,
    pn,
)

__all__ = [
    "FieldTower",
    "NormtraceError",
    "__version__",
    "check_bound",
    "cli",
    "count_curve_gauss",
    "count_curve_points",
    "count_irreducible",
    "count_norm_trace",
    "count_toric_gauss",
    "count_toric_points",
    "curve_closed",
    "nn_closed",
    "norm_trace_census",
    "pn",
]
