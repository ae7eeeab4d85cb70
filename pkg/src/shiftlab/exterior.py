"""Exterior algebraic shifting via compound minors of a sampled generic matrix.

For a k-uniform hypergraph H on [n], form the |H| x C(n,k) matrix whose
(S, T) entry is the k x k minor of a generic n x n matrix X with rows S and
columns T, rows and columns in lexicographic order.  The shift of H is the
set of column labels picked by the greedy lex column-basis rule.  A complex
is shifted layer by layer.

Columns are generated lazily in lex order and discarded after the echelon
update; minor rows are cached per row label so repeated shifts against the
same sampled matrix (preimage scans, suites) cost one minor evaluation per
(S, T) pair overall.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import (
    KSubset,
    SimplicialComplex,
    UniformHypergraph,
    enumerate_k_subsets,
    is_shifted,
    is_shifted_complex,
)
from .linalg import (
    Domain,
    FieldConfig,
    FieldMatrix,
    NoConsensusError,
    greedy_column_basis,
)


def _det2(m, dom: Domain):
    (a, b), (c, d) = m
    return dom.sub(dom.mul(a, d), dom.mul(b, c))


def _det3(m, dom: Domain):
    (a, b, c), (d, e, f), (g, h, i) = m
    pos = dom.mul(a, dom.sub(dom.mul(e, i), dom.mul(f, h)))
    neg = dom.mul(b, dom.sub(dom.mul(d, i), dom.mul(f, g)))
    mix = dom.mul(c, dom.sub(dom.mul(d, h), dom.mul(e, g)))
    return dom.normalize(dom.sub(dom.sub(pos, neg), dom.neg(mix)))


def _det_lu(m, dom: Domain):
    size = len(m)
    work = [list(r) for r in m]
    det = dom.one
    for col in range(size):
        piv = next((i for i in range(col, size) if work[i][col] != dom.zero), None)
        if piv is None:
            return dom.zero
        if piv != col:
            work[col], work[piv] = work[piv], work[col]
            det = dom.neg(det)
        pivot = work[col][col]
        det = dom.mul(det, pivot)
        inv = dom.inv(pivot)
        for i in range(col + 1, size):
            c = work[i][col]
            if c != dom.zero:
                work[i] = dom.submul_vec(work[i], dom.mul(c, inv), work[col])
    return det


def _submatrix_det(entries, rows: KSubset, cols: KSubset, dom: Domain):
    k = len(rows)
    if k == 0:
        return dom.one
    if k == 1:
        return entries[rows[0] - 1][cols[0] - 1]
    m = [[entries[r - 1][c - 1] for c in cols] for r in rows]
    if k == 2:
        return _det2(m, dom)
    if k == 3:
        return _det3(m, dom)
    return _det_lu(m, dom)


class GenericMatrix:
    """An n x n matrix with entries sampled deterministically from (n, field, seed).

    Caches compound-minor rows: minor_row(k, S) is the list of all minors
    X_{S,T} for T running over the k-subsets of [n] in lex order.
    """

    def __init__(self, n: int, field: FieldConfig, seed: int | None = None):
        self.n = n
        self.field = field
        self.seed = field.seed if seed is None else seed
        self.dom = field.domain()
        self.matrix = FieldMatrix.random(n, n, self.dom, self.seed)
        self._row_cache: dict[tuple[int, KSubset], list] = {}
        self._columns_by_k: dict[int, list[KSubset]] = {}

    def columns(self, k: int) -> list[KSubset]:
        if k not in self._columns_by_k:
            self._columns_by_k[k] = list(enumerate_k_subsets(self.n, k))
        return self._columns_by_k[k]

    def minor_row(self, k: int, s: KSubset) -> list:
        key = (k, s)
        row = self._row_cache.get(key)
        if row is None:
            entries = self.matrix.entries
            dom = self.dom
            row = [_submatrix_det(entries, s, t, dom) for t in self.columns(k)]
            self._row_cache[key] = row
        return row


def compound_minor(x: GenericMatrix, s: KSubset, t: KSubset) -> object:
    """The minor of X with row set s and column set t."""
    if len(s) != len(t):
        raise ValueError(f"row and column sets must have equal size: {s} vs {t}")
    if len(s) > x.n:
        raise ValueError("subset larger than the matrix")
    return _submatrix_det(x.matrix.entries, s, t, x.dom)


def compound_submatrix(x: GenericMatrix, rows: list[KSubset], cols: list[KSubset], k: int) -> FieldMatrix:
    """The matrix of minors X_{S,T} for S in rows, T in cols (given order)."""
    col_index = {t: j for j, t in enumerate(x.columns(k))}
    entries = []
    for s in rows:
        full = x.minor_row(k, s)
        entries.append([full[col_index[t]] for t in cols])
    return FieldMatrix(len(rows), len(cols), entries, x.dom)


def shift_edges(x: GenericMatrix, k: int, edges: tuple[KSubset, ...]) -> tuple[KSubset, ...]:
    """Greedy lex column basis for the rows `edges`; low-level single-draw shift."""
    m = len(edges)
    if m == 0:
        return ()
    rows = [x.minor_row(k, s) for s in edges]
    labeled = (
        (label, [row[j] for row in rows]) for j, label in enumerate(x.columns(k))
    )
    return tuple(greedy_column_basis(labeled, m, x.dom))


def exterior_shift_uniform(h: UniformHypergraph, x: GenericMatrix) -> UniformHypergraph:
    """Single-draw exterior shift of a uniform hypergraph.

    Raises NoConsensusError when the draw is visibly degenerate (output of
    the wrong size or not shifted); use ConsensusShifter for seeded runs.
    """
    if x.n != h.n:
        raise ValueError(f"matrix is {x.n}x{x.n} but hypergraph lives on [{h.n}])")
    out_edges = shift_edges(x, h.k, tuple(h.sorted_edges()))
    out = UniformHypergraph(h.n, h.k, frozenset(out_edges))
    if len(out) != len(h) or not is_shifted(out):
        raise NoConsensusError(
            f"degenerate draw (seed {x.seed}): shift output fails invariants",
            [out],
        )
    return out


def exterior_shift_complex(k_complex: SimplicialComplex, x: GenericMatrix) -> SimplicialComplex:
    """Shift every skeleton layer and take the union."""
    faces: set[KSubset] = {()}
    for i in range(0, k_complex.dim + 1):
        layer = k_complex.layer(i)
        shifted = exterior_shift_uniform(layer, x)
        faces.update(shifted.edges)
    out = SimplicialComplex(k_complex.n, frozenset(faces))
    if not out.is_downward_closed() or not is_shifted_complex(out):
        raise NoConsensusError(
            f"degenerate draw (seed {x.seed}): layerwise shift is not a shifted complex",
            [out],
        )
    return out


@dataclass(frozen=True)
class ShiftReport:
    """Outcome of a seeded shift: input, common output, seeds, agreement flag."""

    input: UniformHypergraph
    output: UniformHypergraph
    seeds_used: tuple[int, ...]
    consensus: bool


class ConsensusShifter:
    """Runs uniform shifts under a fixed seed schedule with memoization.

    One GenericMatrix (plus its minor cache) is kept per (n, seed); results
    are cached by (n, k, edges), so sweeping many hypergraphs over the same
    ambient set costs each minor once.
    """

    def __init__(self, field: FieldConfig, num_seeds: int = 3):
        if num_seeds < 1:
            raise ValueError("need at least one seed")
        self.field = field
        self.seeds = field.seed_schedule(num_seeds)
        self._matrices: dict[tuple[int, int], GenericMatrix] = {}
        self._memo: dict[tuple[int, int, tuple[KSubset, ...]], tuple[KSubset, ...]] = {}

    def matrix(self, n: int, seed: int) -> GenericMatrix:
        key = (n, seed)
        if key not in self._matrices:
            self._matrices[key] = GenericMatrix(n, self.field, seed)
        return self._matrices[key]

    def shift_edge_tuple(self, n: int, k: int, edges: tuple[KSubset, ...]) -> tuple[KSubset, ...]:
        """Consensus shift keyed by a sorted edge tuple; raises on disagreement."""
        key = (n, k, edges)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        outputs = []
        for seed in self.seeds:
            x = self.matrix(n, seed)
            out = shift_edges(x, k, edges)
            h_out = UniformHypergraph(n, k, frozenset(out))
            if len(out) != len(edges) or not is_shifted(h_out):
                raise NoConsensusError(
                    f"degenerate draw (seed {seed}) while shifting {edges}", [out]
                )
            outputs.append(out)
        if any(o != outputs[0] for o in outputs[1:]):
            raise NoConsensusError(
                f"seed disagreement while shifting {edges}", outputs
            )
        self._memo[key] = outputs[0]
        return outputs[0]

    def shift(self, h: UniformHypergraph) -> UniformHypergraph:
        out = self.shift_edge_tuple(h.n, h.k, tuple(h.sorted_edges()))
        return UniformHypergraph(h.n, h.k, frozenset(out))

    def shift_complex(self, k_complex: SimplicialComplex) -> SimplicialComplex:
        faces: set[KSubset] = {()}
        for i in range(0, k_complex.dim + 1):
            layer = k_complex.layer(i)
            out = self.shift_edge_tuple(k_complex.n, i + 1, tuple(layer.sorted_edges()))
            faces.update(out)
        result = SimplicialComplex(k_complex.n, frozenset(faces))
        if not result.is_downward_closed():
            raise NoConsensusError("layerwise shift union is not a complex", [result])
        return result


def shift_consensus(
    h: UniformHypergraph, field: FieldConfig, num_seeds: int = 3
) -> ShiftReport:
    """Exterior shift under num_seeds derived seeds; raises NoConsensusError on disagreement."""
    shifter = ConsensusShifter(field, num_seeds)
    out = shifter.shift(h)
    return ShiftReport(h, out, shifter.seeds, True)
