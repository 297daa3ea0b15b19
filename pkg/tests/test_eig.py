import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from symdisc.schwarz.eig import eig2x2, multiset_distance


def test_identity():
    e = eig2x2(np.eye(2))
    assert e.values == (1, 1)
    assert not e.defective


def test_triangular():
    e = eig2x2([[2, 0], [1, 3]])
    assert multiset_distance(e.values, (2, 3)) < 1e-15


def test_nilpotent_is_defective():
    e = eig2x2([[0, 1], [0, 0]])
    assert e.values == (0, 0)
    assert e.defective


def test_close_eigenvalues_keep_accuracy():
    eps = 1e-9
    e = eig2x2([[1, 1], [eps ** 2, 1]])
    assert multiset_distance(e.values, (1 + eps, 1 - eps)) < 1e-15


entries = st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False)


@settings(max_examples=300, deadline=None)
@given(entries, entries, entries, entries)
def test_eigenpairs_satisfy_definition(a, b, c, d):
    m = np.array([[a, b], [c, d]])
    e = eig2x2(m)
    scale = max(1.0, np.abs(m).max())
    assert abs(e.lambda_ + e.mu - (a + d)) <= 1e-12 * scale
    assert abs(e.lambda_ * e.mu - (a * d - b * c)) <= 1e-11 * scale ** 2
    for val, vec in ((e.lambda_, e.v_lambda), (e.mu, e.v_mu)):
        v = vec.as_array()
        assert abs(np.linalg.norm(v) - 1) < 1e-12
        # eigenvectors are accurate up to the conditioning of the eigenvalue
        if abs(e.lambda_ - e.mu) > 1e-3 * scale:
            assert np.linalg.norm(m @ v - val * v) <= 1e-9 * scale
