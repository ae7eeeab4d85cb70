"""Symmetric algebraic shifting via generic initial monomials of the face ring.

Work degree by degree in the quotient of the polynomial ring by the
monomial ideal of non-faces.  Sample an invertible matrix C of generic
coefficients, set y_i = sum_j C[i][j] x_j, and greedily collect the
degree-d monomials in the y's whose images are not spanned by the images
of earlier monomials.  The monomial order here reads sorted index tuples
(y_1y_1 before y_1y_2 before ... before y_2y_2), which matches the usual
exponent-vector rule with its direction flipped on exponents.

Monomials are sorted tuples of variable indices with repetition; a
monomial of degree r with r <= its smallest index "unsquares" to an
r-subset via i_j -> i_j - r + j, and the union of unsquared gin-form
monomials over degrees 1..dim+1 is the shifted complex.
"""

from __future__ import annotations

import itertools
import logging

from .combinatorics import (
    KSubset,
    SimplicialComplex,
    UniformHypergraph,
    downward_closure,
    f_vector,
    is_shifted_complex,
)
from .linalg import (
    Domain,
    FieldConfig,
    FieldMatrix,
    NoConsensusError,
    determinant,
    greedy_column_basis,
)

logger = logging.getLogger(__name__)

Monomial = tuple[int, ...]  # sorted variable indices, repetition allowed


def y_monomial_order(m1: Monomial, m2: Monomial) -> int:
    """-1/0/+1 for the monomial order used by the greedy selection.

    On sorted index tuples this is plain tuple comparison; on exponent
    vectors it is "first differing exponent larger means smaller".
    """
    if len(m1) != len(m2):
        raise ValueError(f"degree mismatch: {m1} vs {m2}")
    if m1 == m2:
        return 0
    return -1 if m1 < m2 else 1


def enumerate_monomials(n: int, degree: int) -> list[Monomial]:
    """All degree-d monomials in n variables, in the greedy selection order."""
    return list(itertools.combinations_with_replacement(range(1, n + 1), degree))


def support(m: Monomial) -> KSubset:
    return tuple(sorted(set(m)))


def unsquare(m: Monomial) -> KSubset:
    """Map y_{i_1}..y_{i_r} with r <= i_1 to the r-subset {i_j - r + j}."""
    r = len(m)
    if r == 0:
        return ()
    if m[0] < r:
        raise ValueError(f"monomial {m} is not in gin form (smallest index < degree)")
    return tuple(v - r + j + 1 for j, v in enumerate(m))


def resquare(s: KSubset) -> Monomial:
    """Inverse of unsquare on k-subsets: s_j -> s_j + k - j."""
    k = len(s)
    return tuple(v + k - (j + 1) for j, v in enumerate(s))


class GenericLinearForms:
    """Invertible n x n coefficient matrix C sampled from (n, field, seed).

    y_i = sum_j C[i][j] x_j.  A singular draw is resampled with a derived
    seed (probability ~ 1/p; logged).  Full-ring expansions of y-monomials
    are cached per degree and restricted per complex on demand.
    """

    def __init__(self, n: int, field: FieldConfig, seed: int | None = None):
        from .linalg import derive_seed

        self.n = n
        self.field = field
        self.dom: Domain = field.domain()
        base = field.seed if seed is None else seed
        self.seed = base
        attempt = 0
        while True:
            candidate = base if attempt == 0 else derive_seed(base, f"resample:{attempt}")
            matrix = FieldMatrix.random(n, n, self.dom, candidate)
            if n == 0 or determinant(matrix) != self.dom.zero:
                break
            logger.debug("singular coefficient draw (seed %s), resampling", candidate)
            attempt += 1
        self.sampled_seed = candidate
        self.coefficients = matrix
        self._expansions: dict[Monomial, dict[Monomial, object]] = {(): {(): self.dom.one}}

    def expansion(self, m: Monomial) -> dict[Monomial, object]:
        """Coefficients of the product y_{m[0]}..y_{m[-1]} in the x-monomial basis."""
        cached = self._expansions.get(m)
        if cached is not None:
            return cached
        prefix = self.expansion(m[:-1])
        row = self.coefficients.row(m[-1] - 1)
        dom = self.dom
        out: dict[Monomial, object] = {}
        for xmono, coef in prefix.items():
            for j, cj in enumerate(row, start=1):
                if cj == dom.zero:
                    continue
                key = tuple(sorted(xmono + (j,)))
                term = dom.mul(coef, cj)
                prev = out.get(key)
                out[key] = term if prev is None else dom.normalize(prev + term)
        self._expansions[m] = out
        return out


def face_monomial_basis(k_complex: SimplicialComplex, degree: int) -> list[Monomial]:
    """All degree-d x-monomials whose support is a face, in lex order."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if degree == 0:
        return [()]
    out = [
        m
        for m in enumerate_monomials(k_complex.n, degree)
        if support(m) in k_complex
    ]
    return out


def expand_y_monomial(
    m: Monomial, y: GenericLinearForms, basis: list[Monomial]
) -> list:
    """Coordinates of the image of a y-monomial in the face-ring degree piece.

    Coefficients whose x-monomial support is not a face are zero in the
    quotient and are simply dropped by the basis restriction.
    """
    if basis and len(m) != len(basis[0]):
        raise ValueError("monomial degree does not match the basis degree")
    full = y.expansion(m)
    return [full.get(b, y.dom.zero) for b in basis]


def gin_degree(
    k_complex: SimplicialComplex, degree: int, y: GenericLinearForms
) -> list[Monomial]:
    """Greedy basis of degree-d y-monomials spanning the face-ring degree piece."""
    if degree < 1:
        raise ValueError("degree must be at least 1")
    basis = face_monomial_basis(k_complex, degree)
    target = len(basis)
    if target == 0:
        return []
    labeled = (
        (m, expand_y_monomial(m, y, basis))
        for m in enumerate_monomials(k_complex.n, degree)
    )
    chosen = greedy_column_basis(labeled, target, y.dom)
    if len(chosen) != target:
        raise NoConsensusError(
            f"degenerate draw (seed {y.sampled_seed}): degree-{degree} selection "
            f"found {len(chosen)} of {target} monomials",
            [tuple(chosen)],
        )
    return list(chosen)


def gin_form(monomials: list[Monomial]) -> list[Monomial]:
    """The non-redundant sub-family: degree r monomials with smallest index >= r."""
    return [m for m in monomials if m and m[0] >= len(m)]


def symmetric_shift_complex(
    k_complex: SimplicialComplex, y: GenericLinearForms
) -> SimplicialComplex:
    """Union of unsquared gin-form monomials over degrees 1..dim+1."""
    if y.n != k_complex.n:
        raise ValueError("coefficient matrix size does not match the ambient set")
    faces: set[KSubset] = {()}
    for degree in range(1, k_complex.dim + 2):
        selected = gin_degree(k_complex, degree, y)
        for m in gin_form(selected):
            faces.add(unsquare(m))
    out = SimplicialComplex(k_complex.n, frozenset(faces))
    if (
        f_vector(out) != f_vector(k_complex)
        or not out.is_downward_closed()
        or not is_shifted_complex(out)
    ):
        raise NoConsensusError(
            f"degenerate draw (seed {y.sampled_seed}): shifted complex fails invariants",
            [out],
        )
    return out


def symmetric_shift_uniform(
    h: UniformHypergraph, y: GenericLinearForms
) -> UniformHypergraph:
    """Top layer of the symmetric shift of the downward closure."""
    if not h.edges:
        return h
    selected = gin_degree(downward_closure(h), h.k, y)
    edges = frozenset(unsquare(m) for m in gin_form(selected))
    out = UniformHypergraph(h.n, h.k, edges)
    if len(out) != len(h):
        raise NoConsensusError(
            f"degenerate draw (seed {y.sampled_seed}): top layer has {len(out)} "
            f"edges, expected {len(h)}",
            [out],
        )
    return out


class SymmetricShifter:
    """Seeded symmetric shifts with memoization, mirroring ConsensusShifter."""

    def __init__(self, field: FieldConfig, num_seeds: int = 3):
        if num_seeds < 1:
            raise ValueError("need at least one seed")
        self.field = field
        self.seeds = field.seed_schedule(num_seeds)
        self._forms: dict[tuple[int, int], GenericLinearForms] = {}
        self._memo: dict[tuple[int, int, tuple[KSubset, ...]], tuple[KSubset, ...]] = {}

    def forms(self, n: int, seed: int) -> GenericLinearForms:
        key = (n, seed)
        if key not in self._forms:
            self._forms[key] = GenericLinearForms(n, self.field, seed)
        return self._forms[key]

    def shift_edge_tuple(self, n: int, k: int, edges: tuple[KSubset, ...]) -> tuple[KSubset, ...]:
        key = (n, k, edges)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        h = UniformHypergraph(n, k, frozenset(edges))
        outputs = []
        for seed in self.seeds:
            out = symmetric_shift_uniform(h, self.forms(n, seed))
            outputs.append(tuple(out.sorted_edges()))
        if any(o != outputs[0] for o in outputs[1:]):
            raise NoConsensusError(f"seed disagreement while shifting {edges}", outputs)
        self._memo[key] = outputs[0]
        return outputs[0]

    def shift(self, h: UniformHypergraph) -> UniformHypergraph:
        out = self.shift_edge_tuple(h.n, h.k, tuple(h.sorted_edges()))
        return UniformHypergraph(h.n, h.k, frozenset(out))

    def shift_complex(self, k_complex: SimplicialComplex) -> SimplicialComplex:
        outputs = []
        for seed in self.seeds:
            outputs.append(symmetric_shift_complex(k_complex, self.forms(k_complex.n, seed)))
        if any(o != outputs[0] for o in outputs[1:]):
            raise NoConsensusError("seed disagreement on a complex shift", outputs)
        return outputs[0]
