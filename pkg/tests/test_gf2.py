import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from hgpgates import gf2
from hgpgates.codes import repetition_cycle

CIRC3 = repetition_cycle(3)


def bitmats(max_rows=6, max_cols=7):
    shape = st.tuples(st.integers(1, max_rows), st.integers(1, max_cols))
    return shape.flatmap(lambda s: arrays(np.uint8, s, elements=st.integers(0, 1)))


def all_vectors(n):
    for bits in itertools.product((0, 1), repeat=n):
        yield np.array(bits, dtype=np.uint8)


def brute_rank(m):
    """Size of the row span by enumeration, as a log2."""
    span = {tuple(gf2.matmul(np.array(c, dtype=np.uint8), m)) for c in itertools.product((0, 1), repeat=m.shape[0])}
    return len(span).bit_length() - 1


def span(vectors, n):
    vectors = list(vectors)
    out = set()
    for c in itertools.product((0, 1), repeat=len(vectors)):
        v = np.zeros(n, dtype=np.uint8)
        for ci, vec in zip(c, vectors):
            if ci:
                v ^= vec
        out.add(tuple(v))
    return out


def test_rank_examples():
    assert gf2.rank(CIRC3) == 2
    assert gf2.rank(gf2.identity(4)) == 4
    assert gf2.rank(gf2.zeros(3, 5)) == 0


def test_kernel_examples():
    assert [v.tolist() for v in gf2.kernel_basis(CIRC3)] == [[1, 1, 1]]
    assert gf2.kernel_basis(gf2.identity(3)) == []
    assert [v.tolist() for v in gf2.kernel_basis([[1, 1]])] == [[1, 1]]


def test_kernel_of_row_matches_enumeration():
    m = gf2.asbits([[1, 1]])
    brute = [v for v in all_vectors(2) if not gf2.matmul(m, v).any() and v.any()]
    assert [v.tolist() for v in brute] == [[1, 1]]


def test_slt_examples():
    b = gf2.slt_normalize([[1, 1, 1]])
    assert [v.tolist() for v in b.vectors] == [[1, 1, 1]]
    assert list(b.pivots) == [2]
    e = gf2.slt_normalize(gf2.identity(2))
    assert [v.tolist() for v in e.vectors] == [[1, 0], [0, 1]]
    assert list(e.pivots) == [0, 1]
    r = gf2.slt_normalize([[1, 1, 0], [0, 1, 1]])
    assert sorted(r.pivots) == [1, 2]
    assert span(r.vectors, 3) == span(gf2.asbits([[1, 1, 0], [0, 1, 1]]), 3)
    for p in r.pivots:
        assert sum(int(v[p]) for v in r.vectors) == 1


def test_slt_rejects_dependent():
    with pytest.raises(ValueError, match="not a basis"):
        gf2.slt_normalize([[1, 1, 0], [0, 1, 1], [1, 0, 1]])


def test_kron_examples():
    ones = gf2.asbits([[1, 1, 1]])
    e3 = gf2.unit(3, 2)[None, :]
    assert gf2.kron(ones, e3)[0].tolist() == [0, 0, 1, 0, 0, 1, 0, 0, 1]
    assert gf2.kron(e3, ones)[0].tolist() == [0, 0, 0, 0, 0, 0, 1, 1, 1]
    assert np.array_equal(gf2.kron(gf2.identity(2), gf2.identity(3)), gf2.identity(6))


@given(bitmats())
def test_rank_matches_span_size(m):
    assert gf2.rank(m) == brute_rank(m)


@given(bitmats())
def test_kernel_basis_properties(m):
    ker = gf2.kernel_basis(m)
    assert len(ker) == m.shape[1] - gf2.rank(m)
    for v in ker:
        assert not gf2.matmul(m, v).any()
    if ker:
        assert gf2.rank(np.array(ker)) == len(ker)


@given(bitmats())
def test_rref_pivots_and_row_space(m):
    r, piv = gf2.rref(m)
    assert len(piv) == gf2.rank(m)
    for i, p in enumerate(piv):
        assert r[i, p] == 1 and r[:, p].sum() == 1
    for row in m:
        assert gf2.in_row_space(r[: len(piv)], row)


@given(bitmats(5, 6))
def test_slt_preserves_span_and_invariants(m):
    r, piv = gf2.rref(m)
    basis = list(r[: len(piv)])
    if not basis:
        return
    out = gf2.slt_normalize(basis, m.shape[1])
    out.check()
    assert len(set(out.pivots)) == len(basis)
    for v in out.vectors:
        assert gf2.in_row_space(np.array(basis), v)
    for v in basis:
        assert gf2.in_row_space(np.array(out.vectors), v)
    for v, p in zip(out.vectors, out.pivots):
        assert v[p] == 1 and not v[p + 1 :].any()


@given(bitmats(4, 4), st.data())
def test_kron_bilinear(a, data):
    shape = (data.draw(st.integers(1, 3)), data.draw(st.integers(1, 3)))
    b = data.draw(arrays(np.uint8, shape, elements=st.integers(0, 1)))
    c = data.draw(arrays(np.uint8, shape, elements=st.integers(0, 1)))
    assert np.array_equal(gf2.kron(a, b ^ c), gf2.kron(a, b) ^ gf2.kron(a, c))
    assert np.array_equal(gf2.kron(a, b) % 2, np.kron(a, b) % 2)


@given(bitmats(5, 5), st.data())
def test_solve_agrees_with_enumeration(a, data):
    b = data.draw(arrays(np.uint8, a.shape[0], elements=st.integers(0, 1)))
    x = gf2.solve(a, b)
    brute = any(np.array_equal(gf2.matmul(a, v), b) for v in all_vectors(a.shape[1]))
    assert (x is not None) == brute
    if x is not None:
        assert np.array_equal(gf2.matmul(a, x), b)


@given(bitmats(5, 5))
def test_inverse(m):
    if m.shape[0] != m.shape[1] or gf2.rank(m) < m.shape[0]:
        with pytest.raises(ValueError):
            gf2.inverse(m)
        return
    assert np.array_equal(gf2.matmul(m, gf2.inverse(m)), gf2.identity(m.shape[0]))


def test_row_coefficients():
    m = gf2.asbits([[1, 1, 0], [0, 1, 1]])
    c = gf2.row_coefficients(m, np.array([1, 0, 1], np.uint8))
    assert c.tolist() == [1, 1]
    assert gf2.row_coefficients(m, np.array([1, 0, 0], np.uint8)) is None


def test_text_format_round_trip():
    text = gf2.format_matrix(CIRC3)
    assert text == "3 3\n1 1 0\n0 1 1\n1 0 1\n"
    assert np.array_equal(gf2.parse_matrix(text), CIRC3)
    assert len(gf2.parse_matrices(text + "# second\n1 2\n1 1\n")) == 2


@pytest.mark.parametrize(
    "text",
    ["2 2\n1 1\n0\n", "1 2\n1 2\n", "2 2\n1 1\n", "x y\n1\n"],
)
def test_parser_rejects_bad_input(text):
    with pytest.raises(ValueError):
        gf2.parse_matrix(text)
