# Copyright 2026 The spreadlab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for the spreadlab C++ core."""

from ._core import (  # noqa: F401
    Error,
    Graph,
    GraphClassError,
    InvalidArgument,
    ParseError,
    classify_family,
    closure,
    construct,
    diamond_necklace,
    figure6_graph,
    independence_number,
    is_claw_free,
    is_connected,
    is_cubic,
    is_spreading_set,
    parse_edge_list,
    predict,
    random_claw_free_cubic,
    sigma_exact,
    to_edge_list,
    triangle_diamond_necklace,
    triangle_necklace,
    unit_count,
    units,
    verify,
    vertex_cover_number,
)

INF = None
