from .core import (
    FiniteGroup, GroupElement, element_order, element_order_histogram,
    from_cayley_table, make_cyclic, make_dicyclic, make_dihedral, relabel,
)
from .cayley_file import dump_cayley_table, parse_cayley_text, read_cayley_file
from .lattice import (
    Subgroup, SubgroupLattice, enumerate_subgroups, generated_subgroup,
    subgroup_from_generators, subgroup_index,
)
from .spec import GroupSpec, load_group, parse_group_spec
