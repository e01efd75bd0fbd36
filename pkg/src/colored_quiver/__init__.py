"""Orbits of K = prod GL(V_i) on the (enhanced) colored nilpotent cone of a cyclic quiver."""

from .catalog import (
    OrbitRecord,
    dim_enhanced_orbit,
    dim_nilpotent_orbit,
    enumerate_colored_partitions,
    enumerate_cqbs,
    enumerate_orbit_classes,
)
from .combinatorics import (
    ColoredPartition,
    InvalidMarking,
    MarkedPartition,
    box_color,
    canonical_form,
    classify_marking,
    column_signature,
    eta,
    signature,
)
from .markings import (
    OrbitClass,
    characteristic_decomposition,
    class_canonical,
    delete_rows,
    minimal_bipartition,
    minimal_marking,
    normalize,
    reduce_colors,
    rho,
    union,
)

__all__ = [
    "ColoredPartition",
    "InvalidMarking",
    "MarkedPartition",
    "OrbitClass",
    "OrbitRecord",
    "box_color",
    "canonical_form",
    "characteristic_decomposition",
    "class_canonical",
    "classify_marking",
    "column_signature",
    "delete_rows",
    "dim_enhanced_orbit",
    "dim_nilpotent_orbit",
    "enumerate_colored_partitions",
    "enumerate_cqbs",
    "enumerate_orbit_classes",
    "eta",
    "minimal_bipartition",
    "minimal_marking",
    "normalize",
    "reduce_colors",
    "rho",
    "signature",
    "union",
]
