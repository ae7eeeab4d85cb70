"""Exact linear algebra over a large prime field (or exact rationals).

Everything downstream needs three primitives: rank, determinant, and the
greedy lex column basis (take each column of a lex-ordered stream exactly
when it is not spanned by the columns already taken).  Vectors are plain
lists; prime-field elements are ints reduced into [0, p).

The prime field stands in for genericity: entries drawn uniformly from a
large prime field respect any fixed finite set of minor (non)vanishings
with overwhelming probability (Schwartz-Zippel), and multi-seed consensus
guards the residual risk.  An exact big-rational mode (random integer
entries) is available for audits.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

DEFAULT_PRIME = (1 << 61) - 1  # Mersenne prime 2^61 - 1

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin, valid for all m < 3.3e24."""
    if m < 2:
        return False
    for w in _MR_WITNESSES:
        if m % w == 0:
            return m == w
    d, r = m - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def derive_seed(base_seed: int, label: int | str) -> int:
    """Stable 64-bit per-run seed schedule: blake2b of "{base}:{label}"."""
    digest = hashlib.blake2b(f"{base_seed}:{label}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


class NoConsensusError(RuntimeError):
    """Seed runs disagreed, or a run violated a shift invariant.

    Either way the random draw was not generic enough; the divergent
    outputs (when available) ride along for diagnostics.
    """

    def __init__(self, message: str, outputs: Sequence[object] = ()):
        super().__init__(message)
        self.outputs = tuple(outputs)


@dataclass(frozen=True)
class FieldConfig:
    """Field modulus and randomness seed for all generic draws.

    With exact_rational=True arithmetic runs over Q with random integer
    entries in [1, 2^31]; p is then ignored.
    """

    p: int = DEFAULT_PRIME
    seed: int = 0
    exact_rational: bool = False

    def __post_init__(self):
        if not self.exact_rational and not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")

    def domain(self) -> "Domain":
        return RationalDomain() if self.exact_rational else PrimeDomain(self.p)

    def seed_schedule(self, count: int) -> tuple[int, ...]:
        return tuple(derive_seed(self.seed, i) for i in range(count))


class PrimeDomain:
    """Arithmetic in F_p on raw ints kept reduced into [0, p)."""

    def __init__(self, p: int):
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        return pow(a, self.p - 2, self.p)

    def normalize(self, a: int) -> int:
        return a % self.p

    def submul_vec(self, v: list[int], c: int, w: Sequence[int]) -> list[int]:
        p = self.p
        return [(a - c * b) % p for a, b in zip(v, w)]

    def scale_vec(self, v: Sequence[int], c: int) -> list[int]:
        p = self.p
        return [a * c % p for a in v]

    def sample(self, rng: random.Random) -> int:
        bits = self.p.bit_length()
        while True:
            v = rng.getrandbits(bits)
            if v < self.p:
                return v


class RationalDomain:
    """Exact arithmetic over Q via fractions.Fraction."""

    zero = Fraction(0)
    one = Fraction(1)

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def sub(self, a: Fraction, b: Fraction) -> Fraction:
        return a - b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def inv(self, a: Fraction) -> Fraction:
        return 1 / a

    def normalize(self, a) -> Fraction:
        return Fraction(a)

    def submul_vec(self, v, c, w):
        return [a - c * b for a, b in zip(v, w)]

    def scale_vec(self, v, c):
        return [a * c for a in v]

    def sample(self, rng: random.Random) -> Fraction:
        return Fraction(rng.randrange(1, (1 << 31) + 1))


Domain = PrimeDomain | RationalDomain


@dataclass
class FieldMatrix:
    """Dense row-major matrix over a Domain; treat as immutable once built."""

    rows: int
    cols: int
    entries: list[list]
    dom: Domain = field(default_factory=lambda: PrimeDomain(DEFAULT_PRIME))

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry grid does not match declared dimensions")

    @classmethod
    def from_int_rows(cls, int_rows: Sequence[Sequence[int]], dom: Domain) -> "FieldMatrix":
        entries = [[dom.normalize(x) for x in row] for row in int_rows]
        return cls(len(entries), len(entries[0]) if entries else 0, entries, dom)

    @classmethod
    def random(cls, rows: int, cols: int, dom: Domain, seed: int) -> "FieldMatrix":
        rng = random.Random(seed)
        entries = [[dom.sample(rng) for _ in range(cols)] for _ in range(rows)]
        return cls(rows, cols, entries, dom)

    def row(self, i: int) -> list:
        return self.entries[i]

    def column(self, j: int) -> list:
        return [r[j] for r in self.entries]

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(self.cols, self.rows, [list(col) for col in zip(*self.entries)] if self.entries else [], self.dom)


class EchelonState:
    """Reduced row-echelon basis of the span of accepted vectors.

    Rows are kept normalized (leading entry one) and fully reduced against
    each other, sorted by pivot position; rank equals the number of rows.
    """

    def __init__(self, dom: Domain):
        self.dom = dom
        self.pivots: list[int] = []
        self.rows: list[list] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Sequence) -> list:
        dom = self.dom
        v = list(vec)
        for piv, row in zip(self.pivots, self.rows):
            c = v[piv]
            if c != dom.zero:
                v = dom.submul_vec(v, c, row)
        return v

    def add(self, vec: Sequence) -> bool:
        """Insert vec's residue if independent; returns True when rank grew."""
        dom = self.dom
        v = self.reduce(vec)
        piv = next((j for j, a in enumerate(v) if a != dom.zero), None)
        if piv is None:
            return False
        v = dom.scale_vec(v, dom.inv(v[piv]))
        for i, row in enumerate(self.rows):
            c = row[piv]
            if c != dom.zero:
                self.rows[i] = dom.submul_vec(row, c, v)
        pos = next((i for i, q in enumerate(self.pivots) if q > piv), len(self.pivots))
        self.pivots.insert(pos, piv)
        self.rows.insert(pos, v)
        return True


def rank(m: FieldMatrix) -> int:
    ech = EchelonState(m.dom)
    for row in m.entries:
        ech.add(row)
    return ech.rank


def determinant(m: FieldMatrix) -> object:
    """Determinant by LU with first-nonzero pivoting (exact over the domain)."""
    if m.rows != m.cols:
        raise ValueError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    dom = m.dom
    size = m.rows
    work = [list(r) for r in m.entries]
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


def greedy_column_basis(
    columns: Iterable[tuple[object, Sequence]],
    target_rank: int,
    dom: Domain,
) -> list[object]:
    """Labels of the lex-least independent column set of size min(target, rank).

    `columns` yields (label, vector) pairs in lexicographic label order; the
    scan stops as soon as target_rank columns were accepted.
    """
    ech = EchelonState(dom)
    accepted: list[object] = []
    if target_rank <= 0:
        return accepted
    for label, vec in columns:
        if ech.add(vec):
            accepted.append(label)
            if len(accepted) == target_rank:
                break
    return accepted


def solve_rank_of_int_rows(int_rows: Sequence[Sequence[int]], dom: Domain) -> int:
    """Rank of a small integer matrix interpreted in the domain."""
    ech = EchelonState(dom)
    for row in int_rows:
        ech.add([dom.normalize(x) for x in row])
    return ech.rank
