"""Combinatorial substrate: k-subsets, orders, hypergraphs, complexes.

Vertices are the integers 1..n.  A k-subset is stored as a strictly
increasing tuple of ints; a uniform hypergraph is an immutable set of such
tuples together with its ambient vertex count n and uniformity k.

Two orders drive everything downstream:

* lexicographic: S < T iff min(S symdiff T) lies in S.  On sorted tuples
  this coincides with plain tuple comparison.
* dominance (componentwise <= on sorted tuples), a partial order refined
  by the lexicographic one.

A family is *shifted* when it is downward closed under dominance, and an
*initial lex-segment* when it consists of every k-subset up to some fixed
one in lexicographic order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

KSubset = tuple[int, ...]


class HypergraphFormatError(ValueError):
    """Raised on malformed hypergraph text input; carries a line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _validate_subset(elements: Iterable[int], n: int | None = None) -> KSubset:
    t = tuple(elements)
    if any(t[i] >= t[i + 1] for i in range(len(t) - 1)):
        raise ValueError(f"subset must be strictly increasing: {t}")
    if t and t[0] < 1:
        raise ValueError(f"vertex labels start at 1: {t}")
    if n is not None and t and t[-1] > n:
        raise ValueError(f"vertex {t[-1]} exceeds ambient n={n}")
    return t


@dataclass(frozen=True)
class UniformHypergraph:
    """A k-uniform hypergraph on vertex set [n]."""

    n: int
    k: int
    edges: frozenset[KSubset]

    def __post_init__(self):
        if self.n < 0 or self.k < 0:
            raise ValueError("n and k must be nonnegative")
        for e in self.edges:
            _validate_subset(e, self.n)
            if len(e) != self.k:
                raise ValueError(f"edge {e} has size {len(e)}, expected {self.k}")

    @classmethod
    def from_edges(cls, n: int, k: int, edges: Iterable[Iterable[int]]) -> "UniformHypergraph":
        return cls(n, k, frozenset(tuple(e) for e in edges))

    def sorted_edges(self) -> list[KSubset]:
        return sorted(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, edge: Iterable[int]) -> bool:
        return tuple(edge) in self.edges

    def __repr__(self) -> str:  # compact, deterministic
        body = ",".join("".join(map(str, e)) if self.n < 10 else str(e) for e in self.sorted_edges())
        return f"UniformHypergraph(n={self.n}, k={self.k}, {{{body}}})"


@dataclass(frozen=True)
class SimplicialComplex:
    """A downward-closed family of subsets of [n]; always contains the empty face."""

    n: int
    faces: frozenset[KSubset]

    def __post_init__(self):
        if () not in self.faces:
            raise ValueError("a complex must contain the empty face")
        for f in self.faces:
            _validate_subset(f, self.n)

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.faces) - 1

    def faces_of_dim(self, i: int) -> list[KSubset]:
        return sorted(f for f in self.faces if len(f) == i + 1)

    def layer(self, i: int) -> UniformHypergraph:
        """The i-dimensional faces as an (i+1)-uniform hypergraph on [n]."""
        return UniformHypergraph(self.n, i + 1, frozenset(self.faces_of_dim(i)))

    def is_downward_closed(self) -> bool:
        return all(
            f[:j] + f[j + 1 :] in self.faces for f in self.faces for j in range(len(f))
        )

    def __contains__(self, face: Iterable[int]) -> bool:
        return tuple(face) in self.faces


@dataclass(frozen=True)
class VertexPermutation:
    """A bijection of [n]; images[i-1] is the image of vertex i."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of [{n}]: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v - 1]

    def apply(self, subset: Iterable[int]) -> KSubset:
        return tuple(sorted(self.images[v - 1] for v in subset))

    def inverse(self) -> "VertexPermutation":
        inv = [0] * self.n
        for i, img in enumerate(self.images):
            inv[img - 1] = i + 1
        return VertexPermutation(tuple(inv))

    def fixed_points(self) -> set[int]:
        return {i + 1 for i, img in enumerate(self.images) if img == i + 1}

    @classmethod
    def identity(cls, n: int) -> "VertexPermutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "VertexPermutation":
        images = list(range(1, n + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(tuple(images))

    @classmethod
    def from_partial(cls, n: int, mapping: dict[int, int]) -> "VertexPermutation":
        """Extend a partial injection order-preservingly on the complement."""
        if len(set(mapping.values())) != len(mapping):
            raise ValueError("partial map is not injective")
        images = [0] * n
        for src, dst in mapping.items():
            images[src - 1] = dst
        rest_src = [v for v in range(1, n + 1) if v not in mapping]
        rest_dst = sorted(set(range(1, n + 1)) - set(mapping.values()))
        for src, dst in zip(rest_src, rest_dst):
            images[src - 1] = dst
        return cls(tuple(images))


FVector = tuple[int, ...]
BettiVector = tuple[int, ...]


# ---------------------------------------------------------------------------
# orders


def lex_compare(s: KSubset, t: KSubset) -> int:
    """-1, 0, +1 order on equal-size subsets: smaller iff min(S symdiff T) in S."""
    if len(s) != len(t):
        raise ValueError(f"size mismatch: {len(s)} vs {len(t)}")
    if s == t:
        return 0
    return -1 if s < t else 1


def dominance_leq(s: KSubset, t: KSubset) -> bool:
    """Componentwise <= on sorted tuples (the dominance partial order)."""
    if len(s) != len(t):
        raise ValueError(f"size mismatch: {len(s)} vs {len(t)}")
    return all(a <= b for a, b in zip(s, t))


def enumerate_k_subsets(n: int, k: int) -> Iterator[KSubset]:
    """All k-subsets of [n] in lexicographic order."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return itertools.combinations(range(1, n + 1), k)


def lex_rank(s: KSubset, n: int) -> int:
    """0-based position of s among the k-subsets of [n] in lex order."""
    k = len(s)
    rank = 0
    prev = 0
    for j, v in enumerate(s):
        for w in range(prev + 1, v):
            rank += comb(n - w, k - j - 1)
        prev = v
    return rank


# ---------------------------------------------------------------------------
# shiftedness and segments


def _dominance_covers_below(s: KSubset) -> list[KSubset]:
    """Immediate dominance predecessors: decrement one entry where possible."""
    out = []
    members = set(s)
    for j, v in enumerate(s):
        if v > 1 and v - 1 not in members:
            out.append(s[:j] + (v - 1,) + s[j + 1 :])
    return out


def is_shifted(h: UniformHypergraph) -> bool:
    """Downward closure under dominance, checked via covering moves."""
    edges = h.edges
    return all(c in edges for e in edges for c in _dominance_covers_below(e))


def max_lex(h: UniformHypergraph) -> KSubset:
    if not h.edges:
        raise ValueError("empty hypergraph has no lex-maximum")
    return max(h.edges)


def is_initial_lex_segment(h: UniformHypergraph) -> bool:
    """True iff h is empty or equals all k-subsets lex-<= its maximum."""
    if not h.edges:
        return True
    return lex_rank(max_lex(h), h.n) + 1 == len(h.edges)


def lex_segment(n: int, k: int, size: int) -> UniformHypergraph:
    """The initial lex-segment with the given number of edges."""
    if size > comb(n, k):
        raise ValueError("segment larger than the full k-subset family")
    edges = itertools.islice(enumerate_k_subsets(n, k), size)
    return UniformHypergraph.from_edges(n, k, edges)


# ---------------------------------------------------------------------------
# complexes


def downward_closure(h: UniformHypergraph) -> SimplicialComplex:
    """Close a uniform hypergraph down to a complex on [n].

    All ambient vertices appear as faces, so the closure of a graph with
    isolated vertices keeps them; this is what makes face counts and Betti
    vectors comparable before and after shifting.
    """
    faces: set[KSubset] = {()}
    faces.update((v,) for v in range(1, h.n + 1))
    for e in h.edges:
        for r in range(1, h.k + 1):
            faces.update(itertools.combinations(e, r))
    return SimplicialComplex(h.n, frozenset(faces))


def complex_from_faces(n: int, faces: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Build the smallest complex containing the given faces (no vertex fill)."""
    closed: set[KSubset] = {()}
    for f in faces:
        t = tuple(sorted(f))
        for r in range(1, len(t) + 1):
            closed.update(itertools.combinations(t, r))
    return SimplicialComplex(n, frozenset(closed))


def f_vector(k_complex: SimplicialComplex) -> FVector:
    counts = [0] * (k_complex.dim + 2)
    for f in k_complex.faces:
        counts[len(f)] += 1
    return tuple(counts)


def is_shifted_complex(k_complex: SimplicialComplex) -> bool:
    return all(
        is_shifted(k_complex.layer(i)) for i in range(0, k_complex.dim + 1)
    )


def betti_shifted(k_complex: SimplicialComplex) -> BettiVector:
    """Reduced Betti numbers of a shifted complex.

    For shifted K these are the counts, per dimension, of faces S with
    S + {1} not a face (shifted complexes are wedges of spheres, so the
    count is field-independent).  A single point yields all zeros.
    """
    if not is_shifted_complex(k_complex):
        raise ValueError("betti_shifted requires a shifted complex")
    betti = []
    faces = k_complex.faces
    for i in range(0, k_complex.dim + 1):
        count = 0
        for s in k_complex.faces_of_dim(i):
            if 1 in s:
                continue
            if tuple(sorted((1,) + s)) not in faces:
                count += 1
        betti.append(count)
    return tuple(betti)


def apply_permutation(h: UniformHypergraph, pi: VertexPermutation) -> UniformHypergraph:
    if pi.n != h.n:
        raise ValueError(f"permutation acts on [{pi.n}], hypergraph lives on [{h.n}]")
    return UniformHypergraph(h.n, h.k, frozenset(pi.apply(e) for e in h.edges))


def permute_complex(k_complex: SimplicialComplex, pi: VertexPermutation) -> SimplicialComplex:
    if pi.n != k_complex.n:
        raise ValueError("ambient size mismatch")
    return SimplicialComplex(k_complex.n, frozenset(pi.apply(f) for f in k_complex.faces))


def cone(h: UniformHypergraph) -> UniformHypergraph:
    """Join with a new least vertex.

    The new apex becomes vertex 1 and every old label is incremented, which
    keeps labels inside [n+1] and preserves the lexicographic order.
    """
    edges = frozenset((1,) + tuple(v + 1 for v in e) for e in h.edges)
    return UniformHypergraph(h.n + 1, h.k + 1, edges)


def cone_complex(k_complex: SimplicialComplex) -> SimplicialComplex:
    shifted_up = [tuple(v + 1 for v in f) for f in k_complex.faces]
    faces = set(shifted_up)
    faces.update((1,) + f for f in shifted_up)
    return SimplicialComplex(k_complex.n + 1, frozenset(faces))


def link_of_one(h: UniformHypergraph) -> UniformHypergraph:
    """Edges through vertex 1, with 1 removed and the rest relabelled down."""
    edges = []
    for e in h.edges:
        if e[0] != 1:
            raise ValueError("link_of_one expects every edge to contain vertex 1")
        edges.append(tuple(v - 1 for v in e[1:]))
    return UniformHypergraph(h.n - 1, h.k - 1, frozenset(edges))


def star_of_one(n: int, k: int) -> UniformHypergraph:
    """All k-subsets of [n] containing vertex 1."""
    edges = ((1,) + rest for rest in itertools.combinations(range(2, n + 1), k - 1))
    return UniformHypergraph.from_edges(n, k, edges)


# ---------------------------------------------------------------------------
# shifted-family enumeration


def enumerate_shifted(n: int, k: int, size: int) -> Iterator[UniformHypergraph]:
    """Every shifted k-uniform hypergraph on [n] with the given edge count.

    Recursive generation over the dominance order: elements are visited in
    lexicographic order (a linear extension of dominance), and an element
    may enter only once all its dominance covers are in.  Each shifted
    family is produced exactly once.
    """
    if size > comb(n, k):
        raise ValueError("size exceeds the number of k-subsets")
    elements = list(enumerate_k_subsets(n, k))
    index = {e: i for i, e in enumerate(elements)}
    covers = [[index[c] for c in _dominance_covers_below(e)] for e in elements]
    total = len(elements)
    chosen: list[bool] = [False] * total
    picked: list[KSubset] = []

    def rec(pos: int) -> Iterator[UniformHypergraph]:
        if len(picked) == size:
            yield UniformHypergraph(n, k, frozenset(picked))
            return
        if pos == total or len(picked) + (total - pos) < size:
            return
        if all(chosen[c] for c in covers[pos]):
            chosen[pos] = True
            picked.append(elements[pos])
            yield from rec(pos + 1)
            picked.pop()
            chosen[pos] = False
        yield from rec(pos + 1)

    return rec(0)


def enumerate_shifted_brute(n: int, k: int, size: int) -> list[UniformHypergraph]:
    """Filter all size-subsets through is_shifted; cross-check oracle for n <= 5."""
    out = []
    for combo in itertools.combinations(list(enumerate_k_subsets(n, k)), size):
        h = UniformHypergraph(n, k, frozenset(combo))
        if is_shifted(h):
            out.append(h)
    return out


# ---------------------------------------------------------------------------
# homology


def boundary_matrix(k_complex: SimplicialComplex, i: int) -> list[list[int]]:
    """Signed boundary map from i-faces to (i-1)-faces; i=0 maps to the empty face."""
    top = k_complex.faces_of_dim(i)
    if i == 0:
        return [[1] * len(top)]
    bottom = {f: r for r, f in enumerate(k_complex.faces_of_dim(i - 1))}
    matrix = [[0] * len(top) for _ in bottom]
    for c, face in enumerate(top):
        for j in range(len(face)):
            sub = face[:j] + face[j + 1 :]
            matrix[bottom[sub]][c] += (-1) ** j
    return matrix


def betti_homology(k_complex: SimplicialComplex, p: int | None = None) -> BettiVector:
    """Reduced Betti numbers over F_p from boundary-matrix ranks."""
    from .linalg import DEFAULT_PRIME, PrimeDomain, is_prime, solve_rank_of_int_rows

    p = DEFAULT_PRIME if p is None else p
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    dom = PrimeDomain(p)
    dim = k_complex.dim
    if dim < 0:
        return ()
    ranks = [0] * (dim + 2)
    for i in range(0, dim + 1):
        ranks[i] = solve_rank_of_int_rows(boundary_matrix(k_complex, i), dom)
    betti = []
    for i in range(0, dim + 1):
        n_faces = len(k_complex.faces_of_dim(i))
        betti.append(n_faces - ranks[i] - ranks[i + 1])
    return tuple(betti)


# ---------------------------------------------------------------------------
# text format

FORMAT_DOC = """first line "n k"; one edge per line as space-separated increasing
integers; blank lines and lines starting with '#' are ignored; edges may appear
in any order and are canonicalized to lex order on load."""


def parse_hypergraph(text: str) -> UniformHypergraph:
    """Parse the hypergraph text format; errors carry 1-based line numbers."""
    n = k = None
    edges: set[KSubset] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError:
            raise HypergraphFormatError(line_no, f"not an integer row: {raw!r}")
        if n is None:
            if len(values) != 2:
                raise HypergraphFormatError(line_no, 'header must be "n k"')
            n, k = values
            if n < 0 or k < 0:
                raise HypergraphFormatError(line_no, "n and k must be nonnegative")
            continue
        if len(values) != k:
            raise HypergraphFormatError(line_no, f"edge has {len(values)} vertices, expected {k}")
        if any(values[i] >= values[i + 1] for i in range(len(values) - 1)):
            raise HypergraphFormatError(line_no, f"edge not strictly increasing: {line}")
        if values and (values[0] < 1 or values[-1] > n):
            raise HypergraphFormatError(line_no, f"vertex out of range [1,{n}]: {line}")
        edge = tuple(values)
        if edge in edges:
            raise HypergraphFormatError(line_no, f"duplicate edge: {line}")
        edges.add(edge)
    if n is None:
        raise HypergraphFormatError(1, 'missing "n k" header')
    return UniformHypergraph(n, k, frozenset(edges))


def format_hypergraph(h: UniformHypergraph, header_comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in header_comments]
    lines.append(f"{h.n} {h.k}")
    lines.extend(" ".join(map(str, e)) for e in h.sorted_edges())
    return "\n".join(lines) + "\n"
