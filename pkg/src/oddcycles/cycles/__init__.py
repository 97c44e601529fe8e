"""Odd vanishing cycles: enumeration, shells, orbits, forms and holes."""

from .arithmetic import (
    HoleCertificate,
    closed_form_member,
    closed_form_scan,
    find_hole,
    first_lattice_point,
    second_lattice_point,
)
from .enumeration import (
    CycleRecord,
    ShellTable,
    enumerate_by_age,
    enumerate_in_disk,
    expected_shell_count,
    in_sector_ge1_eta,
    in_sector_ge1_zeta,
    orbit_label,
    orbit_modulus,
    orbit_representatives,
    shell_growth_holds,
    shell_table,
)
from .forms import (
    even_cycles,
    even_group,
    form_I0,
    form_I1,
    monodromy,
    s0_reflect,
    s1_inverse,
    s1_transvect,
)

__all__ = [
    "CycleRecord",
    "HoleCertificate",
    "ShellTable",
    "closed_form_member",
    "closed_form_scan",
    "enumerate_by_age",
    "enumerate_in_disk",
    "even_cycles",
    "even_group",
    "expected_shell_count",
    "find_hole",
    "first_lattice_point",
    "form_I0",
    "form_I1",
    "in_sector_ge1_eta",
    "in_sector_ge1_zeta",
    "monodromy",
    "orbit_label",
    "orbit_modulus",
    "orbit_representatives",
    "s0_reflect",
    "s1_inverse",
    "s1_transvect",
    "second_lattice_point",
    "shell_growth_holds",
    "shell_table",
]
