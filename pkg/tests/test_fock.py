import math
from itertools import permutations, product

import numpy as np
import pytest

from fockbound.fock import FockError, FockSpace, SparseOperator, first_difference, inner, safe_domain
from fockbound.qinner import inversions
from fockbound.scalar import Surd
from fockbound.words import section


def _tensor_index(letters, N):
    words = [w for n in range(N + 1) for w in product(range(len(letters)), repeat=n)]
    return words, {w: i for i, w in enumerate(words)}


def _embedded(fock, letters, w, index, dim):
    """Unit vector of a basis word inside the plain tensor space, by (anti)symmetrizing."""
    pos = {p: i for i, p in enumerate(letters)}
    t = tuple(pos[p] for p in (w if isinstance(w, tuple) else section(w)))
    v = np.zeros(dim)
    if fock.variant == "full":
        v[index[t]] = 1
        return v
    for sigma in permutations(range(len(t))):
        sign = -1 if fock.variant == "anti" and inversions(sigma) % 2 else 1
        v[index[tuple(t[i] for i in sigma)]] += sign
    return v / np.linalg.norm(v)


@pytest.mark.parametrize("side", ["left", "right"])
def test_creation_matches_dense_tensor_model(zz, variant, side):
    """Creation is sqrt(n+1) times concatenation after embedding the q-Fock space in plain tensors."""
    N = 3
    fock = FockSpace(zz.action, variant, N)
    letters = sorted(zz.action.ball(1))
    words, index = _tensor_index(letters, N)
    basis = fock.basis(letters)
    emb = {w: _embedded(fock, letters, w, index, len(words)) for w in basis}
    for k, x in enumerate(letters):
        concat = np.zeros((len(words), len(words)))
        for t in words:
            if len(t) < N:
                new = (k,) + t if side == "left" else t + (k,)
                concat[index[new], index[t]] = 1
        op = fock.creation(fock.word([x]), side)
        for u in basis:
            if fock.degree(u) >= N:
                continue
            scale = 1.0 if variant == "full" else math.sqrt(fock.degree(u) + 1)
            image = scale * (concat @ emb[u])
            # orthogonal projection onto the (anti)symmetric tensors
            dense = sum((emb[w] * (emb[w] @ image) for w in basis), np.zeros(len(words)))
            col = op.apply_basis(u)
            got = sum((float(c) * emb[w] for w, c in col.items()), np.zeros(len(words)))
            assert np.allclose(got, dense), (x, u)


def test_sym_creation_coefficients_by_hand(zz):
    fock = FockSpace(zz.action, "sym", 4)
    x = zz.action.parse_point("0/1")
    y = zz.action.parse_point("0/a")
    w = fock.sg.parse_word("0/1:2,0/a:1")
    col = fock.creation(fock.word([x])).apply_basis(w)
    assert col == {fock.sg.parse_word("0/1:3,0/a:1"): Surd.sqrt(3)}
    col = fock.creation(fock.word([y])).apply_basis(w)
    assert col == {fock.sg.parse_word("0/1:2,0/a:2"): Surd.sqrt(2)}


def test_anti_creation_signs_by_hand(zz):
    fock = FockSpace(zz.action, "anti", 4)
    A = zz.action
    w = fock.sg.parse_word("0/1,0/a")
    # canonical order is 1 < a < a-1, so a-1 must pass both letters on the left
    col = fock.creation(fock.word([A.parse_point("0/a-1")])).apply_basis(w)
    assert col == {fock.sg.parse_word("0/1,0/a,0/a-1"): 1}
    col = fock.creation(fock.word([A.parse_point("0/a-1")]), "right").apply_basis(w)
    assert col == {fock.sg.parse_word("0/1,0/a,0/a-1"): 1}
    col = fock.creation(fock.word([A.parse_point("0/1")]), "right").apply_basis(
        fock.sg.parse_word("0/a,0/a-1"))
    assert col == {fock.sg.parse_word("0/1,0/a,0/a-1"): 1}
    col = fock.creation(fock.word([A.parse_point("0/a")])).apply_basis(w)
    assert col == {}


def test_truncation_cuts_top_degree(zz, variant):
    fock = FockSpace(zz.action, variant, 2)
    letters = sorted(zz.action.ball(2))
    op = fock.creation(fock.word([letters[0]]))
    for w in fock.basis(letters):
        if fock.degree(w) == 2:
            assert op.apply_basis(w) == {}


def test_annihilation_is_transpose(zz, variant):
    fock = FockSpace(zz.action, variant, 3)
    letters = sorted(zz.action.ball(1))
    basis = fock.basis(letters)
    for x in letters:
        lab = fock.word([x])
        c = SparseOperator.from_operator(fock.creation(lab), basis).to_dense()
        a = SparseOperator.from_operator(fock.annihilation(lab), basis).to_dense()
        assert np.array_equal(c.T, a)


def test_q_commutation_dense(flip, variant):
    fock = FockSpace(flip.action, variant, 4)
    letters = sorted(flip.action.ball(1))
    basis = fock.basis(letters)
    low = np.array([fock.degree(w) <= 3 for w in basis])
    mats = {x: SparseOperator.from_operator(fock.creation(fock.word([x])), basis).to_dense() for x in letters}
    for x, y in product(letters, repeat=2):
        comm = mats[x].T @ mats[y] - fock.q * mats[y] @ mats[x].T
        expected = np.eye(len(basis)) * (1 if x == y else 0)
        assert np.allclose(comm[:, low], expected[:, low])


def test_translation_and_conjugation_are_unitary_involutions(flip, variant):
    fock = FockSpace(flip.action, variant, 3)
    G = flip.action.group
    letters = sorted(flip.action.ball(1))
    basis = fock.basis(letters)
    J = fock.J()
    assert first_difference(J @ J, fock.identity(), basis) is None
    g = G.parse("a")
    U, Uinv = fock.U(g), fock.U(G.inv(g))
    assert first_difference(U @ Uinv, fock.identity(), basis) is None
    for w in basis:
        col = U.apply_basis(w)
        assert inner(col, col) == 1


def test_inner_and_safe_domain(zz):
    fock = FockSpace(zz.action, "sym", 3)
    letters = sorted(zz.action.ball(1))
    assert all(fock.degree(w) <= 1 for w in safe_domain(fock, letters, 2))
    assert inner({"a": 2, "b": 1}, {"a": 3}) == 6


def test_sparse_operator_needs_closed_basis(zz):
    fock = FockSpace(zz.action, "full", 2)
    letters = sorted(zz.action.ball(1))
    outside = zz.action.parse_point("0/a5")
    with pytest.raises(FockError):
        SparseOperator.from_operator(fock.creation(fock.word([outside])), fock.basis(letters))
    with pytest.raises(FockError):
        FockSpace(zz.action, "full", -1)
