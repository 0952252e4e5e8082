"""Finite simplicial nerves: validation, trees, H^2 via Smith form."""

import pytest

from grext.classify.nerve import (PRESETS, circle, delta1_matrix, h2_free,
                                  h2_mod, make_nerve, non_tree_edges,
                                  spanning_tree, sphere_tetrahedron,
                                  torus_seven)
from grext.errors import (DisconnectedSkeleton, MissingEdgeOfTriangle,
                          NotSimplicial)


class TestPresets:
    def test_circle(self):
        n = circle(3)
        assert len(n.vertices) == 3
        assert len(n.edges) == 3
        assert len(n.triangles) == 0
        assert n.euler_characteristic == 0

    def test_sphere(self):
        n = sphere_tetrahedron()
        assert (len(n.vertices), len(n.edges), len(n.triangles)) == (4, 6, 4)
        assert n.euler_characteristic == 2

    def test_torus(self):
        n = torus_seven()
        assert (len(n.vertices), len(n.edges), len(n.triangles)) == (7, 21, 14)
        assert n.euler_characteristic == 0

    def test_preset_registry(self):
        assert set(PRESETS) == {"circle", "sphere", "torus"}


class TestValidation:
    def test_missing_edge_of_triangle(self):
        with pytest.raises(MissingEdgeOfTriangle) as exc:
            make_nerve(vertices=[0, 1, 2], edges=[(0, 1), (1, 2)],
                       triangles=[(0, 1, 2)])
        assert exc.value.witness["missing_edge"] == [0, 2]

    def test_disconnected_skeleton(self):
        with pytest.raises(DisconnectedSkeleton):
            make_nerve(vertices=[0, 1, 2, 3], edges=[(0, 1), (2, 3)],
                       triangles=[])

    def test_degenerate_edge_rejected(self):
        with pytest.raises(NotSimplicial):
            make_nerve(vertices=[0, 1], edges=[(0, 0), (0, 1)], triangles=[])

    def test_unknown_vertex_rejected(self):
        with pytest.raises(NotSimplicial):
            make_nerve(vertices=[0, 1], edges=[(0, 2)], triangles=[])

    def test_canonicalization(self):
        n = make_nerve(vertices=[1, 0], edges=[(1, 0)], triangles=[])
        assert n.vertices == (0, 1)
        assert n.edges == ((0, 1),)


class TestTrees:
    def test_spanning_tree_deterministic(self):
        n = torus_seven()
        t1, t2 = spanning_tree(n), spanning_tree(n)
        assert t1.tree_edges == t2.tree_edges
        assert len(t1.tree_edges) == 6  # |V| - 1

    def test_non_tree_edge_counts(self):
        assert len(non_tree_edges(spanning_tree(circle(3)))) == 1
        assert len(non_tree_edges(spanning_tree(sphere_tetrahedron()))) == 3
        assert len(non_tree_edges(spanning_tree(torus_seven()))) == 15

    def test_path_from_base(self):
        n = circle(3)
        t = spanning_tree(n)
        assert t.path_from_base(n.basepoint) == [n.basepoint]


class TestH2:
    def test_delta1_shape(self):
        n = sphere_tetrahedron()
        d = delta1_matrix(n)
        assert len(d) == len(n.triangles)
        assert len(d[0]) == len(n.edges)

    def test_sphere_free_coefficients(self):
        assert h2_free(sphere_tetrahedron(), 1).name == "Z"
        assert h2_free(sphere_tetrahedron(), 2).name == "Z^2"

    def test_torus_free_coefficients(self):
        assert h2_free(torus_seven(), 1).name == "Z"
        assert h2_free(torus_seven(), 2).name == "Z^2"

    def test_circle_has_no_h2(self):
        assert h2_free(circle(3), 1).name == "0"
        assert h2_free(circle(3), 2).name == "0"

    def test_sphere_mod_m(self):
        for m in (2, 3):
            g = h2_mod(sphere_tetrahedron(), m)
            assert g.torsion == (m,)
            assert g.free_rank == 0

    def test_torus_mod_m(self):
        g = h2_mod(torus_seven(), 2)
        assert g.torsion == (2,)
