"""Exit criteria; a summary line per criterion is printed at the end of the run."""

import io
import random
import time
from collections import Counter
from itertools import product
from math import comb

import pytest
import sympy

from liminal import (
    DualComplexData,
    NonPolynomialQuotient,
    WeightSystem,
    check_zero_liminal_constraints,
    classify,
    dual_complex_cohomology,
    e1_page,
    enumerate_diagonal_liminal,
    liminal_defect,
    local_image_dims,
    milnor_number,
    minimal_exponent,
    poincare_polynomial,
    s_vector,
    spectrum,
    t1_decomposition,
    t_minus,
    verify_identity,
)
from liminal.cli import run
from liminal.dualcx import coboundary_matrix, euler_characteristic

from _gen import box_grading, diagonal_ws, random_complex, random_diagonal, random_weight_systems

SEED = 20231019
CASES = 200


def fermat(n):
    return WeightSystem([1] * (n + 1), n + 1)


@pytest.mark.criterion(1, "enumerate --dim 3 gives 14 tuples incl. (2,3,7,42), (4,4,4,4) in < 1 s")
def test_ac01_enumerate_fourteen():
    start = time.perf_counter()
    out = io.StringIO()
    code = run(["enumerate", "--dim", "3"], stdout=out)
    elapsed = time.perf_counter() - start
    lines = out.getvalue().splitlines()
    assert code == 0
    assert len(lines) == 14
    assert "(2,3,7,42)" in lines and "(4,4,4,4)" in lines
    assert elapsed < 1.0


@pytest.mark.criterion(2, "dims 2, 3 diagonal families: N = 0, s_n = 1, s_0 = 0")
def test_ac02_family_signature():
    for dim in (2, 3):
        for fam in enumerate_diagonal_liminal(dim):
            ws = fam.weight_system
            s = s_vector(ws)
            assert liminal_defect(ws) == 0
            assert s[dim] == 1 and s[0] == 0


@pytest.mark.criterion(3, "Fermat cones: mu = n^(n+1) for n = 2..6, t_- = C(2n+1,n) - (n+1) for n = 3..8")
def test_ac03_fermat():
    for n in range(2, 7):
        assert milnor_number(fermat(n)) == n ** (n + 1)
        assert poincare_polynomial(fermat(n)).milnor_number == n ** (n + 1)
    for n in range(3, 9):
        assert t_minus(fermat(n)) == comb(2 * n + 1, n) - (n + 1)


@pytest.mark.criterion(4, "(1,1,1,1;4): s_1 = t_- = 31, Gr = 19")
def test_ac04_quartic_cone():
    ws = WeightSystem([1, 1, 1, 1], 4)
    t = t1_decomposition(ws)
    assert s_vector(ws)[1] == t_minus(ws) == 31
    assert t.gr_hn_link == 19


@pytest.mark.criterion(5, "degree-(n+2) identity for 3 <= n <= 64; n = 3 witness (51, 19, 31, 101)")
def test_ac05_identity():
    for n in range(3, 65):
        ok, w = verify_identity(n)
        assert ok, n
        if n == 3:
            assert w.as_tuple() == (51, 19, 31, 101)


@pytest.mark.criterion(6, "local image dims (8,8,0), (81,66,15), (1024,357,667) vs brute force")
def test_ac06_local_image():
    expected = {2: (8, 8, 0), 3: (81, 66, 15), 4: (1024, 357, 667)}
    for n, triple in expected.items():
        assert local_image_dims(n) == triple
    for n in (3, 4):
        box = list(product(range(n), repeat=n + 1))
        image = sum(1 for a in box if sum(a) <= n + 2)
        assert (len(box), image, len(box) - image) == expected[n]


@pytest.mark.criterion(7, "ODP dim 3 1-liminal; dim 4 1-rational not 1-liminal; dim 5 2-liminal")
def test_ac07_odp():
    odp = lambda n: classify(WeightSystem([1] * (n + 1), 2))  # noqa: E731
    c3, c4, c5 = odp(3), odp(4), odp(5)
    assert c3.liminal_level == 1 and c3.max_du_bois == 1 and c3.max_rational == 0
    assert c4.max_rational >= 1 and c4.liminal_level != 1 and c4.liminal_level is None
    assert c5.liminal_level == 2 and c5.max_du_bois == 2 and c5.max_rational == 1


@pytest.mark.criterion(8, "property suites, >= 200 seeded cases each")
class TestAC08Properties:
    def test_palindromy(self):
        systems = random_weight_systems(CASES, seed=SEED)
        assert len(systems) == CASES
        assert all(poincare_polynomial(ws).is_palindromic() for ws in systems)

    def test_spectrum_symmetry(self):
        for ws in random_weight_systems(CASES, seed=SEED + 1):
            ms = dict(spectrum(ws).entries)
            assert all(ms.get(ws.dim + 1 - x) == m for x, m in ms.items())

    def test_diagonal_oracle(self):
        cases = random_diagonal(CASES, seed=SEED + 2, max_mu=10**5)
        assert len(cases) == CASES
        for ps in cases:
            ws = diagonal_ws(ps)
            assert list(poincare_polynomial(ws).coeffs) == box_grading(ps, [ws.degree // p for p in ps])

    def test_du_bois_threshold(self):
        for ws in random_weight_systems(CASES, seed=SEED + 3):
            alpha = minimal_exponent(ws)
            assert (alpha >= 2) == (alpha >= 1 and s_vector(ws)[1] == 0)

    def test_coboundary_and_euler(self):
        rng = random.Random(SEED + 4)
        for _ in range(CASES):
            D = DualComplexData.from_faces(5, random_complex(rng))
            for p in range(D.max_face_size - 2):
                prod_ = sympy.Matrix(coboundary_matrix(D, p + 1)) * sympy.Matrix(coboundary_matrix(D, p))
                assert prod_.is_zero_matrix
            betti = dual_complex_cohomology(D)
            chi = euler_characteristic(D)
            assert sum((-1) ** i * b for i, b in enumerate(betti)) == chi
            assert sum((-1) ** p * row[0] for p, row in enumerate(e1_page(D))) == chi
            assert chi == sum((-1) ** (k - 1) * c for k, c in Counter(map(len, D.faces)).items())


@pytest.mark.criterion(9, "dual complexes: hollow triangle (1,1), tetrahedron boundary (1,0,1), two CY -> (a)")
def test_ac09_dual_complexes():
    hollow = DualComplexData.from_faces(3, [(0, 1), (1, 2), (0, 2)])
    tetra = DualComplexData.from_faces(3, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
    assert dual_complex_cohomology(hollow) == [1, 1]
    assert dual_complex_cohomology(tetra) == [1, 0, 1]
    two_cy = DualComplexData.from_faces(3, [(0, 1)], {((0,), 2): 1, ((1,), 2): 1})
    assert [v.clause for v in check_zero_liminal_constraints(two_cy)] == ["a"]


@pytest.mark.criterion(10, "(2,5;6) -> NonPolynomialQuotient, CLI exit 1")
def test_ac10_error_path():
    with pytest.raises(NonPolynomialQuotient):
        poincare_polynomial(WeightSystem([2, 5], 6))
    err = io.StringIO()
    code = run(["spectrum", "--weights", "2,5", "--degree", "6", "--json"], stdout=io.StringIO(), stderr=err)
    assert code == 1
    assert "NonPolynomialQuotient" in err.getvalue()
