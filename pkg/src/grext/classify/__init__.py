"""Classification of extension data over finite nerves.

Layers, bottom to top:

* :mod:`.groups`    — finite groups as explicit multiplication tables;
* :mod:`.abgroup`   — finitely generated abelian groups via Smith form;
* :mod:`.nerve`     — finite simplicial nerves and their chain complexes;
* :mod:`.fpgroup`   — edge-path (finitely presented) fundamental groups;
* :mod:`.cocycle`   — nonabelian 1-cocycles, coboundaries, holonomy, and
                      brute-force orbit oracles;
* :mod:`.crossedh1` — cohomology with crossed-module coefficients;
* :mod:`.extensions`— the three classification modes (pointed-iso, iso,
                      equivalence);
* :mod:`.homotopy`  — symbolic homotopy tables, Postnikov strings, and
                      action-groupoid nerves.
"""

from .abgroup import FgAbelian, abelian_name, cokernel, cokernel_mod
from .cocycle import (Cocycle, CocycleReport, Holonomy, apply_coboundary,
                      check_cocycle, coeff_autrho, coeff_fg_abelian,
                      coeff_table, cohomologous, enumerate_cocycles,
                      holonomy, holonomy_class_count, make_cocycle,
                      orbit_class_count, pullback_cocycle)
from .crossedh1 import (CrossedH1Report, FiniteCrossedModule,
                        crossed_module_h1, crossed_module_h1_parametric,
                        inclusion_module, toy_exponent_module)
from .extensions import (MODES, ClassificationReport, classify_extensions,
                         hom_count_into_units, unit_quotient_group)
from .fpgroup import (FPGroup, abelianization, edge_path_group, group_name,
                      hom_conjugacy_orbits, hom_images, simplify, word_eval)
from .groups import (FiniteGroup, cyclic, dihedral4, direct_product,
                     klein_four, quaternion8, standard_groups_up_to_8,
                     symmetric3, verify_group_axioms)
from .homotopy import (ComponentPi1, GroupoidNerveReport, HomotopyReport,
                       PostnikovReport, groupoid_nerve, homotopy_groups,
                       postnikov_report, postnikov_split_toy)
from .nerve import (Nerve, PRESETS, circle, delta1_matrix, h2_free, h2_mod,
                    make_nerve, non_tree_edges, spanning_tree,
                    sphere_tetrahedron, torus_seven)

__all__ = [
    "FgAbelian", "abelian_name", "cokernel", "cokernel_mod",
    "Cocycle", "CocycleReport", "Holonomy", "apply_coboundary",
    "check_cocycle", "coeff_autrho", "coeff_fg_abelian", "coeff_table",
    "cohomologous", "enumerate_cocycles", "holonomy",
    "holonomy_class_count", "make_cocycle", "orbit_class_count",
    "pullback_cocycle",
    "CrossedH1Report", "FiniteCrossedModule", "crossed_module_h1",
    "crossed_module_h1_parametric", "inclusion_module",
    "toy_exponent_module",
    "MODES", "ClassificationReport", "classify_extensions",
    "hom_count_into_units", "unit_quotient_group",
    "FPGroup", "abelianization", "edge_path_group", "group_name",
    "hom_conjugacy_orbits", "hom_images", "simplify", "word_eval",
    "FiniteGroup", "cyclic", "dihedral4", "direct_product", "klein_four",
    "quaternion8", "standard_groups_up_to_8", "symmetric3",
    "verify_group_axioms",
    "ComponentPi1", "GroupoidNerveReport", "HomotopyReport",
    "PostnikovReport", "groupoid_nerve", "homotopy_groups",
    "postnikov_report", "postnikov_split_toy",
    "Nerve", "PRESETS", "circle", "delta1_matrix", "h2_free", "h2_mod",
    "make_nerve", "non_tree_edges", "spanning_tree", "sphere_tetrahedron",
    "torus_seven",
]
