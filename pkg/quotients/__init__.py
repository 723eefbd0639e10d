"""
Abelian parity groups: parity on Z^n, the sublattices AZ^n, BZ^n, JZ^n,
the finite quotients Z^n/JZ^n and exact sphere-product charts of R^n/JZ^n.
"""

from .abelian import (
    BlockChart,
    Chart,
    SphericalAngles,
    chart,
    chart_add,
    chart_equiv,
    difference_in_lattice,
    int_parity,
    lattice_az_generated,
    membership,
    project_node,
    quotient_image_order,
    quotient_table,
    spherical,
)

__all__ = [
    "BlockChart", "Chart", "SphericalAngles", "chart", "chart_add", "chart_equiv",
    "difference_in_lattice", "int_parity", "lattice_az_generated", "membership",
    "project_node", "quotient_image_order", "quotient_table", "spherical",
]
