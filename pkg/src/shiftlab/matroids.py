"""Matroids attached to shifting: preimages, exchange checking, counterexamples.

For a shifted k-uniform hypergraph H the preimage of H under shifting is
the family of hypergraphs that shift to H; H is *matroidal* when that
family is the basis set of a matroid, which we decide by enumerating the
preimage (desk scale) and checking the basis exchange axiom directly.

Two represented matroids give independent oracles:

* rows of the compound-minor matrix X(B, H) — independence test for the
  exterior case on initial lex-segments;
* rows of the degree-two coefficient matrix Y(B, H) built from generic
  linear forms — the symmetric analogue for graphs.

For shifted non-segments the module also builds the explicit permutation
pi and edge e1 whose pair (H, pi(H)) violates the exchange axiom, and
verifies every exchange candidate by recomputing its shift.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .combinatorics import (
    KSubset,
    UniformHypergraph,
    VertexPermutation,
    apply_permutation,
    downward_closure,
    is_initial_lex_segment,
    is_shifted,
    lex_segment,
    link_of_one,
    max_lex,
    star_of_one,
)
from .exterior import ConsensusShifter, GenericMatrix, compound_submatrix
from .linalg import Domain, EchelonState, FieldConfig, FieldMatrix, rank
from .symmetric import GenericLinearForms, SymmetricShifter, resquare

DEFAULT_BUDGET = 2_000_000

EdgeTuple = tuple[KSubset, ...]


class BudgetExceededError(RuntimeError):
    def __init__(self, candidates: int, budget: int):
        super().__init__(f"{candidates} candidate hypergraphs exceed budget {budget}")
        self.candidates = candidates
        self.budget = budget


class NotApplicableError(RuntimeError):
    """The counterexample construction's hypotheses are not met."""


Shifter = ConsensusShifter | SymmetricShifter


def make_shifter(mode: str, field: FieldConfig, num_seeds: int = 3) -> Shifter:
    if mode == "exterior":
        return ConsensusShifter(field, num_seeds)
    if mode == "symmetric":
        return SymmetricShifter(field, num_seeds)
    raise ValueError(f"unknown mode: {mode!r}")


# ---------------------------------------------------------------------------
# represented matroids


def mprime_is_independent(
    b: UniformHypergraph, h: UniformHypergraph, x: GenericMatrix
) -> bool:
    """Row independence of the compound-minor matrix with rows b, columns h."""
    if (b.n, b.k) != (h.n, h.k):
        raise ValueError("row and column hypergraphs must share (n, k)")
    if len(b) > len(h):
        return False
    if not b.edges:
        return True
    matrix = compound_submatrix(x, b.sorted_edges(), h.sorted_edges(), b.k)
    return rank(matrix) == len(b)


def y_matrix(
    b: UniformHypergraph, h: UniformHypergraph, y: GenericLinearForms
) -> FieldMatrix:
    """Degree-two coefficient matrix for graphs.

    Rows are labelled by the squares x_i^2 and then the edges of b; columns
    by the products y_1 y_i and then the resquared edges of h.  The entry is
    the coefficient of the row's x-monomial in the full polynomial expansion
    of the column's y-monomial (no quotient taken).
    """
    if b.k != 2 or h.k != 2:
        raise ValueError("the degree-two construction is defined for graphs only")
    if b.n != h.n or b.n != y.n:
        raise ValueError("ambient vertex sets must agree")
    n = b.n
    row_labels = [(i, i) for i in range(1, n + 1)] + b.sorted_edges()
    col_labels = [(1, i) for i in range(1, n + 1)] + [resquare(e) for e in h.sorted_edges()]
    dom = y.dom
    entries = []
    expansions = [y.expansion(col) for col in col_labels]
    for row_label in row_labels:
        entries.append([exp.get(row_label, dom.zero) for exp in expansions])
    return FieldMatrix(len(row_labels), len(col_labels), entries, dom)


def nprime_is_basis(
    b: UniformHypergraph, h: UniformHypergraph, y: GenericLinearForms
) -> bool:
    """Full row rank of the degree-two matrix; requires |b| = |h|."""
    if len(b) != len(h):
        raise ValueError(f"cardinality mismatch: |b|={len(b)}, |h|={len(h)}")
    matrix = y_matrix(b, h, y)
    return rank(matrix) == matrix.rows


# ---------------------------------------------------------------------------
# preimage enumeration


def _closure_betti_signature(edges: Sequence[KSubset], n: int, k: int, dom: Domain):
    """Cheap invariants of the closure that shifting provably preserves.

    k=1: reduced component count.  k=2: (components-1, cycle rank) — the full
    reduced Betti vector.  k>=3: top Betti number plus layerwise face counts,
    the sound subset of the Betti/f data at the uniform level.
    """
    m = len(edges)
    if k == 0:
        return ()
    if k == 1:
        return (m - (1 if m else 0),)
    if k == 2:
        parent = list(range(n + 1))

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        comps = n
        for a, b in edges:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
                comps -= 1
        return (comps - 1, m - (n - comps))
    sub_index: dict[KSubset, int] = {}
    columns = []
    for e in edges:
        col = []
        for j in range(k):
            sub = e[:j] + e[j + 1 :]
            r = sub_index.setdefault(sub, len(sub_index))
            col.append((r, -1 if j % 2 else 1))
        columns.append(col)
    height = len(sub_index)
    ech = EchelonState(dom)
    for col in columns:
        vec = [dom.zero] * height
        for r, sign in col:
            vec[r] = dom.one if sign == 1 else dom.normalize(-1)
        ech.add(vec)
    top_betti = m - ech.rank
    face_counts = tuple(
        len({sub for e in edges for sub in itertools.combinations(e, r)})
        for r in range(2, k)
    )
    return (top_betti,) + face_counts


def _signature_filter(h: UniformHypergraph, dom: Domain):
    """Predicate keeping only candidates whose closure invariants allow shift(G)=H."""
    target = _closure_betti_signature(h.sorted_edges(), h.n, h.k, dom)
    n, k = h.n, h.k

    if k <= 2:
        def passes(edges: Sequence[KSubset]) -> bool:
            return _closure_betti_signature(edges, n, k, dom) == target

        return passes

    top_target = target[0]
    count_targets = target[1:]

    def passes(edges: Sequence[KSubset]) -> bool:
        sig = _closure_betti_signature(edges, n, k, dom)
        if sig[0] != top_target:
            return False
        return all(have >= want for have, want in zip(sig[1:], count_targets))

    return passes


def enumerate_preimage(
    h: UniformHypergraph,
    mode: str = "exterior",
    budget: int = DEFAULT_BUDGET,
    *,
    shifter: Shifter | None = None,
    field: FieldConfig | None = None,
    num_seeds: int = 3,
    prefilter: bool = True,
) -> list[UniformHypergraph]:
    """All hypergraphs of size |h| whose shift equals h, in sorted order."""
    if not is_shifted(h):
        raise ValueError("preimage enumeration expects a shifted hypergraph")
    n, k, m = h.n, h.k, len(h)
    candidates = comb(comb(n, k), m)
    if candidates > budget:
        raise BudgetExceededError(candidates, budget)
    if shifter is None:
        shifter = make_shifter(mode, field or FieldConfig(), num_seeds)
    target = tuple(h.sorted_edges())
    passes = _signature_filter(h, shifter.field.domain()) if prefilter else None
    found = []
    for combo in itertools.combinations(list(itertools.combinations(range(1, n + 1), k)), m):
        if passes is not None and not passes(combo):
            continue
        if shifter.shift_edge_tuple(n, k, combo) == target:
            found.append(UniformHypergraph(n, k, frozenset(combo)))
    return found


def preimage_index(
    n: int, k: int, size: int, shifter: Shifter
) -> dict[EdgeTuple, list[EdgeTuple]]:
    """Group every size-`size` hypergraph on [n] by its shift (bulk scan)."""
    groups: dict[EdgeTuple, list[EdgeTuple]] = {}
    for combo in itertools.combinations(list(itertools.combinations(range(1, n + 1), k)), size):
        groups.setdefault(shifter.shift_edge_tuple(n, k, combo), []).append(combo)
    return groups


# ---------------------------------------------------------------------------
# exchange axiom


@dataclass(frozen=True)
class ExchangeEvidence:
    e2: KSubset
    exchanged: EdgeTuple
    note: str


@dataclass(frozen=True)
class ExchangeVerdict:
    status: str  # "matroid" | "violation"
    b1: UniformHypergraph | None = None
    b2: UniformHypergraph | None = None
    e1: KSubset | None = None
    evidence: tuple[ExchangeEvidence, ...] = ()

    @property
    def is_matroid(self) -> bool:
        return self.status == "matroid"


def _exchange_violation_for_pair(
    lookup: set[frozenset[KSubset]], b1: frozenset[KSubset], b2: frozenset[KSubset]
) -> tuple[KSubset, list[ExchangeEvidence]] | None:
    diff2 = sorted(b2 - b1)
    for e1 in sorted(b1 - b2):
        base = b1 - {e1}
        if not any(base | {e2} in lookup for e2 in diff2):
            evidence = [
                ExchangeEvidence(e2, tuple(sorted(base | {e2})), "exchange-not-in-family")
                for e2 in diff2
            ]
            return e1, evidence
    return None


def check_exchange(bases: Iterable[UniformHypergraph]) -> ExchangeVerdict:
    """Directed basis-exchange check; first violation in canonical order wins."""
    members = sorted(set(bases), key=lambda b: b.sorted_edges())
    if not members:
        raise ValueError("the exchange axiom needs a nonempty family")
    n, k, m = members[0].n, members[0].k, len(members[0])
    for b in members:
        if (b.n, b.k) != (n, k) or len(b) != m:
            raise ValueError("all members must share (n, k) and cardinality")
    sets = [frozenset(b.edges) for b in members]
    lookup = set(sets)
    for i, b1 in enumerate(sets):
        for j, b2 in enumerate(sets):
            if i == j:
                continue
            hit = _exchange_violation_for_pair(lookup, b1, b2)
            if hit is not None:
                e1, evidence = hit
                return ExchangeVerdict(
                    "violation", members[i], members[j], e1, tuple(evidence)
                )
    return ExchangeVerdict("matroid")


def exchange_pair_violates(
    bases: Iterable[UniformHypergraph],
    b1: UniformHypergraph,
    b2: UniformHypergraph,
) -> ExchangeVerdict:
    """Test one ordered pair directly (does some e1 admit no exchange?)."""
    lookup = {frozenset(b.edges) for b in bases}
    hit = _exchange_violation_for_pair(lookup, frozenset(b1.edges), frozenset(b2.edges))
    if hit is None:
        return ExchangeVerdict("matroid")
    e1, evidence = hit
    return ExchangeVerdict("violation", b1, b2, e1, tuple(evidence))


@dataclass(frozen=True)
class MatroidalReport:
    h: UniformHypergraph
    mode: str
    preimage: tuple[UniformHypergraph, ...]
    verdict: ExchangeVerdict

    @property
    def matroidal(self) -> bool:
        return self.verdict.is_matroid


def is_matroidal(
    h: UniformHypergraph,
    mode: str = "exterior",
    budget: int = DEFAULT_BUDGET,
    *,
    shifter: Shifter | None = None,
    field: FieldConfig | None = None,
    num_seeds: int = 3,
) -> MatroidalReport:
    """Enumerate the preimage and check the exchange axiom on it."""
    if shifter is None:
        shifter = make_shifter(mode, field or FieldConfig(), num_seeds)
    preimage = enumerate_preimage(h, mode, budget, shifter=shifter)
    verdict = check_exchange(preimage)
    if verdict.status == "violation":
        target = tuple(h.sorted_edges())
        annotated = []
        for ev in verdict.evidence:
            shifted = shifter.shift_edge_tuple(h.n, h.k, ev.exchanged)
            note = "shift-differs" if shifted != target else "shift-equal (inconsistent)"
            annotated.append(ExchangeEvidence(ev.e2, ev.exchanged, note))
        verdict = ExchangeVerdict(
            "violation", verdict.b1, verdict.b2, verdict.e1, tuple(annotated)
        )
    return MatroidalReport(h, mode, tuple(preimage), verdict)


# ---------------------------------------------------------------------------
# the shape of the lex-maximum edge and the designated missing subset


@dataclass(frozen=True)
class CaseSplit:
    """Decomposition of the lex-maximum edge into leading elements, a maximal
    consecutive run, and its tail (a single element d below n, or the
    terminal run n-m..n)."""

    kind: str  # "case1" | "case2" | "lex-segment-forced" | "complete"
    leading: KSubset = ()
    c: int | None = None
    l: int | None = None
    d: int | None = None
    m: int | None = None

    def reconstruct(self, n: int) -> KSubset:
        if self.kind == "case1":
            return self.leading + tuple(range(self.c, self.c + self.l + 1)) + (self.d,)
        if self.kind == "case2":
            return (
                self.leading
                + tuple(range(self.c, self.c + self.l + 1))
                + tuple(range(n - self.m, n + 1))
            )
        raise ValueError(f"no reconstruction for {self.kind}")


@dataclass(frozen=True)
class SMatrixSpec:
    m_h: KSubset
    case: CaseSplit
    s_h: KSubset | None
    s_in_h: bool | None


def _run_start(values: KSubset) -> int:
    """Index where the maximal consecutive run ending at values[-1] starts."""
    j = len(values) - 1
    while j > 0 and values[j - 1] == values[j] - 1:
        j -= 1
    return j


def decompose_max_edge(m_h: KSubset, n: int) -> CaseSplit:
    k = len(m_h)
    if k == 1:
        return CaseSplit("lex-segment-forced")
    if m_h[-1] != n:
        rest = m_h[:-1]
        j = _run_start(rest)
        c, l, d = rest[j], len(rest) - 1 - j, m_h[-1]
        if c == 1:
            return CaseSplit("lex-segment-forced", rest[:j], c, l, d)
        return CaseSplit("case1", rest[:j], c, l, d)
    j = _run_start(m_h)
    m = (k - 1) - j
    if j == 0:
        return CaseSplit("complete", m=m)
    rest = m_h[:j]
    jj = _run_start(rest)
    c, l = rest[jj], len(rest) - 1 - jj
    if c == 1:
        return CaseSplit("lex-segment-forced", rest[:jj], c, l, None, m)
    return CaseSplit("case2", rest[:jj], c, l, None, m)


def classify_m_and_s(h: UniformHypergraph) -> SMatrixSpec:
    """Decompose the lex-maximum edge and compute the designated k-subset.

    Returns kind "lex-segment-forced" when the run starts at 1 (shiftedness
    then forces an initial lex-segment) and "complete" when the maximum is
    the terminal run n-m..n; otherwise builds the designated subset from the
    matching shape and reports whether it lies in h.
    """
    if not h.edges:
        raise ValueError("empty hypergraph")
    if not is_shifted(h):
        raise ValueError("classification expects a shifted hypergraph")
    m_h = max_lex(h)
    case = decompose_max_edge(m_h, h.n)
    if case.kind not in ("case1", "case2"):
        return SMatrixSpec(m_h, case, None, None)
    n = h.n
    if case.kind == "case1":
        s_h = case.leading + (case.c - 1,) + tuple(range(n - case.l - 1, n))
    else:
        s_h = case.leading + (case.c - 1,) + tuple(range(n - case.m - case.l, n + 1))
    assert case.reconstruct(n) == m_h
    assert len(s_h) == h.k and all(s_h[i] < s_h[i + 1] for i in range(len(s_h) - 1))
    return SMatrixSpec(m_h, case, s_h, s_h in h.edges)


# ---------------------------------------------------------------------------
# violation construction


@dataclass(frozen=True)
class ViolationPlan:
    pi: VertexPermutation
    e1: KSubset
    branch: str
    s_hint: KSubset | None = None


def _lift_plan(inner: ViolationPlan, n: int, with_apex: bool, label: str) -> ViolationPlan:
    """Extend a plan on [n-1] to [n]: fix vertex 1, conjugate the rest up."""
    images = [1] + [inner.pi(v - 1) + 1 for v in range(2, n + 1)]
    pi = VertexPermutation(tuple(images))
    lifted_e1 = tuple(v + 1 for v in inner.e1)
    if with_apex:
        lifted_e1 = (1,) + lifted_e1
    hint = None
    if inner.s_hint is not None:
        hint = tuple(v + 1 for v in inner.s_hint)
        if with_apex:
            hint = (1,) + hint
    return ViolationPlan(pi, lifted_e1, f"{label}({inner.branch})", hint)


def _violation_small(h: UniformHypergraph) -> ViolationPlan:
    n, k = h.n, h.k
    head = tuple(range(2, k + 2))
    if head not in h.edges:
        # every edge contains 1, so h is a cone over its link
        assert k >= 3, "a 2-uniform non-segment always contains {2,3}"
        inner = _violation_small(link_of_one(h))
        return _lift_plan(inner, n, with_apex=True, label="cone-lift")
    if star_of_one(n, k).edges <= h.edges:
        rest = [tuple(v - 1 for v in e) for e in h.edges if e[0] != 1]
        inner = _violation_small(UniformHypergraph(n - 1, k, frozenset(rest)))
        return _lift_plan(inner, n, with_apex=False, label="star-strip")
    if k == 2:
        # some {1,i} is missing, hence n is isolated; flip 1 and n
        return ViolationPlan(
            VertexPermutation.transposition(n, 1, n), (1, 2), "k2-flip-isolated"
        )
    # k == 3: pick the missing triple {1,j,i} minimizing i, then j
    missing = next(
        (1, j, i)
        for i in range(3, n + 1)
        for j in range(2, i)
        if (1, j, i) not in h.edges
    )
    _, j, i = missing
    if (2, 3, n) in h.edges:
        assert i - 1 > 2
        return ViolationPlan(
            VertexPermutation.transposition(n, 1, i - 1), (1, 2, n), "k3-case1"
        )
    a, b, c = max_lex(h)
    assert a >= 2, "a lex-maximum through vertex 1 forces a cone"
    if (a, b) != (2, 3):
        pi = VertexPermutation.from_partial(n, {b: n})
        s_hint = (2, a, n) if a != 2 else (2, b - 1, n)
        return ViolationPlan(pi, (a, b, c), "k3-case2a", s_hint)
    pi = VertexPermutation.from_partial(n, {2: n - 1, 3: n})
    return ViolationPlan(pi, (a, b, c), "k3-case2b")


def build_violation_permutation(h: UniformHypergraph) -> ViolationPlan:
    """Permutation pi and edge e1 making (h, pi(h)) violate the exchange axiom.

    k=2 and k=3 follow the reduction chain (cone over the link, stripping a
    full star, then the isolated-vertex flip or the two max-edge cases).
    k>=4 requires the designated subset to be missing from h; otherwise
    NotApplicableError.
    """
    if not is_shifted(h):
        raise ValueError("violation construction expects a shifted hypergraph")
    if is_initial_lex_segment(h):
        raise ValueError("initial lex-segments admit no violation")
    if h.k in (2, 3):
        return _violation_small(h)
    if h.k < 2:
        raise ValueError("no construction for k < 2")
    spec = classify_m_and_s(h)
    case = spec.case
    if case.kind not in ("case1", "case2"):
        raise AssertionError(f"non-segment input classified as {case.kind}")
    if spec.s_in_h:
        raise NotApplicableError(
            f"designated subset {spec.s_h} lies in h; construction needs it missing"
        )
    n = h.n
    mapping = {x: x for x in case.leading}
    if case.kind == "case1":
        for t in range(case.l + 1):
            mapping[case.c + t] = n - (case.l + 1) + t
        mapping[case.d] = n
    else:
        for t in range(case.l + 1):
            mapping[case.c + t] = n - case.m - (case.l + 1) + t
        for v in range(n - case.m, n + 1):
            mapping[v] = v
    pi = VertexPermutation.from_partial(n, mapping)
    return ViolationPlan(pi, spec.m_h, case.kind, spec.s_h)


# ---------------------------------------------------------------------------
# violation verification and lemma harness


@dataclass(frozen=True)
class E2Result:
    e2: KSubset
    shift_output: EdgeTuple
    differs: bool
    tag: str


@dataclass(frozen=True)
class ViolationReport:
    h: UniformHypergraph
    image: UniformHypergraph
    e1: KSubset
    image_shift_ok: bool
    e1_ok: bool
    e2_results: tuple[E2Result, ...]

    @property
    def ok(self) -> bool:
        return self.image_shift_ok and self.e1_ok and all(r.differs for r in self.e2_results)


def _boundary_complex_in(h: UniformHypergraph, e1: KSubset) -> bool:
    """Is e1 a facet of some simplex boundary fully contained in h?"""
    for w in range(1, h.n + 1):
        if w in e1:
            continue
        t = tuple(sorted(e1 + (w,)))
        if all(f in h.edges for f in itertools.combinations(t, h.k)):
            return True
    return False


def _betti_drop_applies(h: UniformHypergraph, e1: KSubset, e2: KSubset) -> bool:
    if e1 not in h.edges:
        return False
    has_missing_tail = any(
        1 not in w and tuple(sorted((1,) + w)) not in h.edges
        for w in itertools.combinations(e2, h.k - 1)
    )
    return has_missing_tail and _boundary_complex_in(h, e1)


def _lemma_tag(
    h: UniformHypergraph, e1: KSubset, e2: KSubset, mode: str, s_hint: KSubset | None
) -> str:
    m_h = max_lex(h)
    in_h = e2 in h.edges
    if e1 == m_h and not in_h and e2 < m_h:
        return "lex-drop-at-max"
    if mode == "exterior" and not in_h and e2 < e1:
        return "lex-drop"
    if max(e2) < max(e1):
        return "max-vertex-drop"
    if (
        mode == "exterior"
        and s_hint is not None
        and not in_h
        and s_hint not in h.edges
        and s_hint < e1
        and len(set(e2) - set(s_hint)) == 1
        and len(set(s_hint) - set(e2)) == 1
    ):
        return "near-miss-minor"
    if _betti_drop_applies(h, e1, e2):
        return "betti-drop"
    return "recomputed-only"


def verify_violation(
    h: UniformHypergraph,
    pi: VertexPermutation,
    e1: KSubset,
    mode: str = "exterior",
    *,
    shifter: Shifter | None = None,
    field: FieldConfig | None = None,
    num_seeds: int = 3,
    s_hint: KSubset | None = None,
) -> ViolationReport:
    """Confirm by recomputation that (h, pi(h)) violates the exchange axiom at e1.

    Checks the preconditions (pi(h) shifts back to h; e1 lies in h but not in
    pi(h)) and then recomputes the shift of (h minus e1) plus e2 for every
    e2 in pi(h) minus h.  Tags say which drop argument predicted each e2;
    the verdict always comes from the recomputed shift.
    """
    if shifter is None:
        shifter = make_shifter(mode, field or FieldConfig(), num_seeds)
    image = apply_permutation(h, pi)
    target = tuple(h.sorted_edges())
    image_shift_ok = (
        shifter.shift_edge_tuple(h.n, h.k, tuple(image.sorted_edges())) == target
    )
    e1_ok = e1 in h.edges and e1 not in image.edges
    results = []
    if e1_ok:
        base = h.edges - {e1}
        for e2 in sorted(image.edges - h.edges):
            exchanged = tuple(sorted(base | {e2}))
            out = shifter.shift_edge_tuple(h.n, h.k, exchanged)
            results.append(
                E2Result(e2, out, out != target, _lemma_tag(h, e1, e2, mode, s_hint))
            )
    return ViolationReport(h, image, e1, image_shift_ok, e1_ok, tuple(results))


@dataclass(frozen=True)
class LemmaCheck:
    lemma: str
    applicable: bool
    holds: bool | None
    detail: str = ""


def lemma_checks(
    h: UniformHypergraph,
    e1: KSubset,
    e2: KSubset,
    s: KSubset | None = None,
    mode: str = "exterior",
    *,
    shifter: Shifter | None = None,
    field: FieldConfig | None = None,
    num_seeds: int = 3,
) -> list[LemmaCheck]:
    """Evaluate each drop lemma's hypotheses and confirm its conclusion.

    Inapplicable lemmas report applicable=False with holds=None; applicable
    ones recompute the shift of (h minus e1) plus e2 and demand it differ
    from h.
    """
    if not is_shifted(h):
        raise ValueError("the drop lemmas assume a shifted hypergraph")
    if e1 not in h.edges:
        raise ValueError("e1 must be an edge of h")
    if shifter is None:
        shifter = make_shifter(mode, field or FieldConfig(), num_seeds)
    target = tuple(h.sorted_edges())
    exchanged = tuple(sorted((h.edges - {e1}) | {e2}))
    conclusion: bool | None = None

    def concluded() -> bool:
        nonlocal conclusion
        if conclusion is None:
            conclusion = shifter.shift_edge_tuple(h.n, h.k, exchanged) != target
        return conclusion

    m_h = max_lex(h)
    in_h = e2 in h.edges
    checks = []

    applicable = _betti_drop_applies(h, e1, e2)
    checks.append(
        LemmaCheck("betti-drop", applicable, concluded() if applicable else None,
                   "missing 1-completion and e1 on a full simplex boundary")
    )

    applicable = mode == "exterior" and not in_h and e2 < e1
    checks.append(
        LemmaCheck("lex-drop", applicable, concluded() if applicable else None,
                   "e2 precedes e1 lexicographically")
    )

    applicable = e1 == m_h and not in_h and e2 < m_h
    checks.append(
        LemmaCheck("lex-drop-at-max", applicable, concluded() if applicable else None,
                   "e1 is the lex-maximum and e2 precedes it")
    )

    applicable = max(e2) < max(e1)
    checks.append(
        LemmaCheck("max-vertex-drop", applicable, concluded() if applicable else None,
                   "largest vertex of e2 below that of e1")
    )

    applicable = (
        mode == "exterior"
        and not in_h
        and s is not None
        and s not in h.edges
        and s < e1
        and len(set(e2) - set(s)) == 1
        and len(set(s) - set(e2)) == 1
    )
    checks.append(
        LemmaCheck("near-miss-minor", applicable, concluded() if applicable else None,
                   "e2 differs from the designated missing subset in one vertex")
    )
    return checks


# ---------------------------------------------------------------------------
# lex prefixes and graph-level symmetric matroidality


def lex_prefix(h: UniformHypergraph, s: KSubset) -> UniformHypergraph:
    """Edges of h lexicographically at most s."""
    return UniformHypergraph(h.n, h.k, frozenset(e for e in h.edges if e <= s))


@dataclass(frozen=True)
class LexMatroidalReport:
    h: UniformHypergraph
    lex_matroidal: bool
    failing_prefix: UniformHypergraph | None
    failing_report: MatroidalReport | None
    prefixes_checked: int


def is_lex_matroidal(
    h: UniformHypergraph,
    budget: int = DEFAULT_BUDGET,
    mode: str = "exterior",
    *,
    shifter: Shifter | None = None,
    field: FieldConfig | None = None,
    num_seeds: int = 3,
) -> LexMatroidalReport:
    """Check every lex prefix of h for matroidality, smallest first."""
    if not is_shifted(h):
        raise ValueError("lex-matroidality expects a shifted hypergraph")
    if shifter is None:
        shifter = make_shifter(mode, field or FieldConfig(), num_seeds)
    checked = 0
    for s in sorted(h.edges):
        prefix = lex_prefix(h, s)
        report = is_matroidal(prefix, mode, budget, shifter=shifter)
        checked += 1
        if not report.matroidal:
            return LexMatroidalReport(h, False, prefix, report, checked)
    return LexMatroidalReport(h, True, None, None, checked)


@dataclass(frozen=True)
class SMatroidalReport:
    h: UniformHypergraph
    preimage: tuple[UniformHypergraph, ...]
    verdict: ExchangeVerdict
    nprime_agrees: bool | None

    @property
    def s_matroidal(self) -> bool:
        return self.verdict.is_matroid


def is_s_matroidal_graph(
    h: UniformHypergraph,
    budget: int = DEFAULT_BUDGET,
    *,
    shifter: SymmetricShifter | None = None,
    field: FieldConfig | None = None,
    num_seeds: int = 3,
) -> SMatroidalReport:
    """Symmetric-shift matroidality for graphs.

    Enumerates the symmetric preimage, checks the exchange axiom, and for
    initial lex-segments cross-checks the preimage against the row-rank
    oracle of the degree-two matrix.
    """
    if h.k != 2:
        raise ValueError("the symmetric graph check is defined for k = 2")
    if not is_shifted(h):
        raise ValueError("expects a shifted graph")
    field = field or FieldConfig()
    if shifter is None:
        shifter = SymmetricShifter(field, num_seeds)
    preimage = enumerate_preimage(h, "symmetric", budget, shifter=shifter)
    verdict = check_exchange(preimage)
    nprime_agrees = None
    if is_initial_lex_segment(h):
        forms = shifter.forms(h.n, shifter.seeds[0])
        basis_like = set()
        m = len(h)
        for combo in itertools.combinations(list(itertools.combinations(range(1, h.n + 1), 2)), m):
            b = UniformHypergraph(h.n, 2, frozenset(combo))
            if nprime_is_basis(b, h, forms):
                basis_like.add(b)
        nprime_agrees = basis_like == set(preimage)
    return SMatroidalReport(h, tuple(preimage), verdict, nprime_agrees)
