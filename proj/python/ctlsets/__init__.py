# Copyright 2026 The ctlsets Authors
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
"""Identifying and controlling sets over combinatorial solution spaces.

Weights are given as anything whose str() is a rational ("3", "1/2",
fractions.Fraction); results report rationals as fractions.Fraction.
"""

import json
from fractions import Fraction

from . import _ctlsets
from ._ctlsets import CtlsetsError

__all__ = [
    "CtlsetsError",
    "cli",
    "explicit_identify",
    "flow_identify",
    "gap_ratio",
    "matroid_identify",
    "path_approx",
    "path_exact",
    "polymatroid_identify",
    "tight_gap_family",
    "verify_flow",
    "verify_path",
]

_RATIONAL_KEYS = ("total_weight", "ratio")


def _weights(weights):
    return None if weights is None else [str(w) for w in weights]


def _convert(result):
    for key in _RATIONAL_KEYS:
        if key in result:
            result[key] = Fraction(result[key])
    for key in ("flow_a", "flow_b"):
        if key in result:
            result[key] = [Fraction(v) for v in result[key]]
    return result


def flow_identify(nodes, arcs, s, t, weights=None):
    """Minimum-weight set S identifying the unit s-t flows."""
    return _convert(_ctlsets.flow_identify(nodes, arcs, s, t, _weights(weights)))


def verify_flow(nodes, arcs, s, t, subset):
    """Checks S against the flows; gives two flows agreeing on S if not."""
    return _convert(_ctlsets.verify_flow(nodes, arcs, s, t, sorted(subset)))


def path_exact(nodes, arcs, s, t, weights=None, max_paths=100000,
               max_subsets=1 << 24):
    """Exact minimum-weight path-identifying set."""
    return _convert(_ctlsets.path_exact(nodes, arcs, s, t, _weights(weights),
                                        max_paths, max_subsets))


def path_approx(nodes, arcs, s, t, weights=None):
    """Flow-based approximation of a path-identifying set in a DAG."""
    return _convert(_ctlsets.path_approx(nodes, arcs, s, t, _weights(weights)))


def verify_path(nodes, arcs, s, t, subset, max_paths=100000):
    """Checks S against the s-t paths; gives two colliding paths if not."""
    return _ctlsets.verify_path(nodes, arcs, s, t, sorted(subset), max_paths)


def gap_ratio(nodes, arcs, s, t):
    """Size of the flow-based set against the exact optimum."""
    return _convert(_ctlsets.gap_ratio(nodes, arcs, s, t))


def matroid_identify(spec, weights=None):
    """Minimum-weight identifying set for the bases of a matroid spec."""
    return _convert(_ctlsets.matroid_identify(json.dumps(spec), _weights(weights)))


def polymatroid_identify(spec, weights=None):
    """Minimum-weight identifying set for the base polytope of f."""
    return _convert(_ctlsets.polymatroid_identify(json.dumps(spec),
                                                  _weights(weights)))


def explicit_identify(dim, vectors, weights=None, exact=False):
    """Greedy (or exact) identifying set for an explicit 0/1 state list."""
    return _convert(_ctlsets.explicit_identify(dim, [list(v) for v in vectors],
                                               _weights(weights), exact))


def tight_gap_family(k):
    """The k-th instance of the tight-gap DAG family as an instance dict."""
    return json.loads(_ctlsets.tight_gap_family(k))


def cli(args):
    """Runs a ctlsets-cli subcommand; returns (exit_code, stdout, stderr)."""
    return _ctlsets.cli([str(a) for a in args])
