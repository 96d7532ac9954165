"""Spanning-forest activities, the forest-triple bijection onto edge subsets,
and exact Tutte-family graph polynomials in forest and subset form."""

from ._backend import BACKEND
from .activity import (ActivityReport, EdgeOrder, activity_report, check_independence,
                       enumerate_spanning_forests, external_activity, internal_activity)
from .bijection import (ForestTriple, activity_count_identity, classify, direct_sum, expand,
                        sampled_roundtrip, transfer_sum, verify_partition)
from .errors import *  # noqa: F401,F403
from .graph import (Edge, Multigraph, component_count, component_size_profile, is_forest,
                    is_spanning_forest)
from .invariants import (chromatic_broken_cycle, chromatic_count, chromatic_forest, chromatic_subset,
                         connected_gf_subset, connected_gf_tree, reliability_subset, reliability_tree,
                         tutte_forest, tutte_subset, uprime_forest, uprime_subset)
from .poly import SparsePoly

__version__ = "0.1.0"
