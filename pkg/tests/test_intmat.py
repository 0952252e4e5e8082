"""Integer/rational matrix algorithms: HNF, SNF, determinants, lattices."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from grext.exactnum import intmat


def test_det_int_examples():
    assert intmat.det_int([[1, 2], [1, 1]]) == -1
    assert intmat.det_int([[0, 2], [1, 0]]) == -2
    assert intmat.det_int([[2, 0, 0], [0, 3, 0], [0, 0, 5]]) == 30
    assert intmat.det_int([[1, 2], [2, 4]]) == 0


def test_hnf_reconstruction_and_shape():
    m = [[4, 6], [2, 4]]
    h, u = intmat.hnf(m)
    assert intmat.mat_mul_int(u, m) == h
    assert abs(intmat.det_int(u)) == 1
    # staircase with positive pivots, reduced above
    assert h == [[2, 0], [0, 2]] or h[0][0] > 0


def test_hnf_identity_lattice():
    h, _ = intmat.hnf([[1, 0], [0, 1], [3, 7]])
    assert h == [[1, 0], [0, 1], [0, 0]]


def test_snf_pinned():
    d, u, v = intmat.snf([[2, 0], [0, 3]])
    assert [d[0][0], d[1][1]] == [1, 6]
    m = [[2, 0], [0, 3]]
    assert intmat.mat_mul_int(intmat.mat_mul_int(u, m), v) == d


def test_snf_divisibility_and_sign():
    m = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
    d, u, v = intmat.snf(m)
    assert intmat.mat_mul_int(intmat.mat_mul_int(u, m), v) == d
    diag = [d[i][i] for i in range(3)]
    assert all(x >= 0 for x in diag)
    for a, b in zip(diag, diag[1:]):
        if a != 0:
            assert b % a == 0 or b == 0
        else:
            assert b == 0
    assert abs(intmat.det_int(u)) == 1 and abs(intmat.det_int(v)) == 1


def test_snf_rectangular():
    m = [[1, 2, 3], [4, 5, 6]]
    d, u, v = intmat.snf(m)
    assert intmat.mat_mul_int(intmat.mat_mul_int(u, m), v) == d
    assert [d[0][0], d[1][1]] == [1, 3]


def test_kernel_and_solve():
    a = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    ker = intmat.kernel_basis(a)
    assert len(ker) == 1
    v = ker[0]
    assert v[0] * 1 + v[1] * 2 == 0
    sol = intmat.solve_exact([[Fraction(2)]], [Fraction(3)])
    assert sol == [Fraction(3, 2)]
    assert intmat.solve_exact([[Fraction(0)]], [Fraction(1)]) is None


def test_preimage_lattice_scalar():
    # {x : 3x in 2Z} = 2Z
    basis = intmat.preimage_lattice([[3]], 2)
    assert abs(basis[0][0]) == 2


def test_preimage_lattice_matrix():
    # B = [[1,0],[0,2]], t=4: {x : x1 in 4Z, 2x2 in 4Z} = 4Z x 2Z
    basis = intmat.preimage_lattice([[1, 0], [0, 2]], 4)
    # lattice determinant must be 8
    det = intmat.det_int(basis)
    assert abs(det) == 8
    # and every basis column satisfies the condition
    for j in range(2):
        col = [basis[0][j], basis[1][j]]
        assert col[0] % 4 == 0 and (2 * col[1]) % 4 == 0


def test_lattice_canonical_rows():
    rows = [[Fraction(1), Fraction(0)], [Fraction(1, 2), Fraction(1, 2)]]
    canon = intmat.lattice_canonical_rows(rows)
    # lattice Z(1,0) + Z(1/2,1/2): canonical HNF rows (1/2,1/2), (0,1)
    assert canon == [[Fraction(1, 2), Fraction(1, 2)], [Fraction(0), Fraction(1)]]


def test_in_lattice_rows():
    rows = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(2)]]
    assert intmat.in_lattice_rows(rows, [Fraction(3), Fraction(4)]) == [3, 2]
    assert intmat.in_lattice_rows(rows, [Fraction(0), Fraction(1)]) is None


entries = st.integers(-9, 9)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.lists(entries, min_size=3, max_size=3), min_size=2, max_size=4))
def test_hnf_property(m):
    h, u = intmat.hnf(m)
    assert intmat.mat_mul_int(u, m) == h
    assert abs(intmat.det_int(u)) == 1
    # pivot staircase
    last = -1
    for row in h:
        nz = [j for j, x in enumerate(row) if x != 0]
        if not nz:
            continue
        assert nz[0] > last
        assert row[nz[0]] > 0
        last = nz[0]


@settings(max_examples=50, deadline=None)
@given(st.lists(st.lists(entries, min_size=3, max_size=3), min_size=2, max_size=3))
def test_snf_property(m):
    d, u, v = intmat.snf(m)
    assert intmat.mat_mul_int(intmat.mat_mul_int(u, m), v) == d
    assert abs(intmat.det_int(u)) == 1
    assert abs(intmat.det_int(v)) == 1
    n = min(len(d), len(d[0]))
    for i in range(len(d)):
        for j in range(len(d[0])):
            if i != j:
                assert d[i][j] == 0
    diag = [d[i][i] for i in range(n)]
    for a, b in zip(diag, diag[1:]):
        if a == 0:
            assert b == 0
        else:
            assert b % a == 0
    assert all(x >= 0 for x in diag)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(entries, min_size=3, max_size=3), min_size=3, max_size=3))
def test_bareiss_matches_fraction_det(m):
    expect = intmat.frac_det([[Fraction(x) for x in row] for row in m])
    assert intmat.det_int(m) == expect
