import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mwgraph.errors import DimMismatch
from mwgraph.linalg import identity_matrix, make_psd
from mwgraph.subspace import Subspace, complement, intersect, kernel_of, subspace_sum

from _support import same, span


def random_subspace(rng, d):
    r = int(rng.integers(0, d + 1))
    if rng.random() < 0.4:  # axis-aligned, to hit exact coincidences
        return Subspace(np.eye(d)[:, sorted(rng.choice(d, r, replace=False))])
    return Subspace.from_vectors(rng.standard_normal((d, r)))


@st.composite
def subspaces(draw, count=2):
    rng = np.random.default_rng(draw(st.integers(0, 2**32 - 1)))
    d = draw(st.integers(1, 5))
    return [random_subspace(rng, d) for _ in range(count)]


def test_kernel_examples():
    assert same(kernel_of(make_psd([[0, 0], [0, 1]])), span([1, 0]))
    assert kernel_of(identity_matrix(3)).is_zero
    assert same(kernel_of(make_psd([[1, 2], [2, 4]])), span([-2, 1]))


def test_intersect_examples():
    v = span([1, 2, 3])
    assert same(intersect(Subspace.full(3), v), v)
    assert intersect(span([1, -1]), span([-2, 1])).is_zero
    assert same(intersect(v, v), v)


def test_sum_examples():
    v = span([1, 2])
    assert same(subspace_sum(Subspace.zero(2), v), v)
    assert subspace_sum(span([1, 0]), span([0, 1])).is_full
    assert same(subspace_sum(v, v), v)


def test_dim_and_contains():
    assert Subspace.zero(2).dim == 0
    assert Subspace.full(3).dim == 3
    assert Subspace.full(2).contains(span([1, 0]))
    assert not span([1, 0]).contains(span([0, 1]))


def test_dim_mismatch():
    with pytest.raises(DimMismatch):
        intersect(Subspace.full(2), Subspace.full(3))
    with pytest.raises(DimMismatch):
        span([1, 0]).contains(span([1, 0, 0]))


def test_near_parallel_lines_are_distinct():
    a = span([1, 0])
    b = span([1, 1e-6])
    assert intersect(a, b).is_zero
    assert subspace_sum(a, b).is_full


@given(subspaces(1))
@settings(max_examples=100, deadline=None)
def test_basis_orthonormal_and_complement(us):
    (u,) = us
    assert np.max(np.abs(u.basis.T @ u.basis - np.eye(u.dim)), initial=0) <= 1e-10
    c = complement(u)
    assert u.dim + c.dim == u.ambient_dim
    assert np.max(np.abs(u.basis.T @ c.basis), initial=0) <= 1e-10


@given(subspaces(3))
@settings(max_examples=150, deadline=None)
def test_lattice_laws(uvw):
    u, v, w = uvw
    for op in (intersect, subspace_sum):
        assert same(op(u, v), op(v, u))
        assert same(op(op(u, v), w), op(u, op(v, w)))
        assert same(op(u, u), u)
    # absorption
    assert same(intersect(u, subspace_sum(u, v)), u)
    assert same(subspace_sum(u, intersect(u, v)), u)
    # modular law: for u inside w, u + (v & w) = (u + v) & w
    uw = intersect(u, w)
    assert same(subspace_sum(uw, intersect(v, w)), intersect(subspace_sum(uw, v), w))
    # dimension formula
    assert subspace_sum(u, v).dim + intersect(u, v).dim == u.dim + v.dim
