"""Springer-fiber components of classical nilpotent orbits.

Components are enumerated as signed domino tableaux with their cluster
decompositions; stabilizers are compared with the subgroups attached to even
noncrossing partitions, and their images in the canonical quotient with the
subgroups attached to Temperley-Lieb patterns.
"""

from .clusters import ClusterDecomposition, clusters, open_partition
from .components import (
    OrbitReport,
    SignedClass,
    act,
    enumerate_components,
    enumerate_good_classes,
    good_open_clusters,
    orbit_report,
    stabilizer,
)
from .errors import Infeasible, InvalidInput, SpringerError
from .exceptional import build_table, builtin_families, perm_character, solve_multiplicities
from .f2 import F2Quotient, F2Subgroup, subgroup_image, subgroup_span
from .lusztig import (
    EvidenceReport,
    TLPattern,
    canonical_quotient,
    enumerate_tl,
    h_sigma,
    ke_subgroup,
    ncp_to_tl,
    tl_to_ncp,
    verify_evidence,
)
from .ncp import NoncrossingPartition, enumerate_even_ncp, is_noncrossing, ncp_group, s_set
from .partitions import OrbitDatum, Partition, orbit_datum, springer_fiber_dim, validate_partition
from .tableaux import DominoKind, DominoTableau, domino_kind, enumerate_admissible, enumerate_sdt, is_admissible

__version__ = "0.1.0"
