"""Latin squares over finite fields, MOLS, orthogonal arrays, and plane designs.

Symbols are 0-based {0..q-1} everywhere, including the text formats.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import UnsupportedOrderError

SUPPORTED_ORDERS = (2, 3, 4, 5, 7, 8, 9)

# prime power q -> (characteristic p, irreducible polynomial coefficients,
# low degree first, defining GF(q) = GF(p)[x]/(poly))
_FIELD_POLYS = {
    4: (2, (1, 1, 1)),      # x^2 + x + 1
    8: (2, (1, 1, 0, 1)),   # x^3 + x + 1
    9: (3, (1, 0, 1)),      # x^2 + 1
}


@dataclass(frozen=True)
class FieldTable:
    """Addition and multiplication tables of GF(q), axiom-checked at build time."""

    q: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class LatinSquare:
    q: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        want = set(range(self.q))
        for i, row in enumerate(self.cells):
            if set(row) != want:
                raise ValueError(f"row {i} is not a permutation of 0..{self.q - 1}")
        for j in range(self.q):
            if {row[j] for row in self.cells} != want:
                raise ValueError(f"column {j} is not a permutation of 0..{self.q - 1}")


@dataclass(frozen=True)
class OrthogonalArray:
    s: int
    q: int
    rows: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Design:
    """Point set {0..v-1} with blocks; declared (v, k, lambda) parameters."""

    v: int
    blocks: tuple[frozenset, ...]
    k: int
    lam: int


def _digits(e: int, p: int, deg: int) -> list[int]:
    out = []
    for _ in range(deg):
        out.append(e % p)
        e //= p
    return out


def _undigits(ds: list[int], p: int) -> int:
    out = 0
    for d in reversed(ds):
        out = out * p + d
    return out


def field(q: int) -> FieldTable:
    """GF(q) tables for q in the supported prime-power set."""
    if q not in SUPPORTED_ORDERS:
        raise UnsupportedOrderError(f"unsupported order {q}; supported: {SUPPORTED_ORDERS}")
    if q in _FIELD_POLYS:
        p, poly = _FIELD_POLYS[q]
        deg = len(poly) - 1

        def add(a: int, b: int) -> int:
            da, db = _digits(a, p, deg), _digits(b, p, deg)
            return _undigits([(x + y) % p for x, y in zip(da, db)], p)

        def mul(a: int, b: int) -> int:
            da, db = _digits(a, p, deg), _digits(b, p, deg)
            prod = [0] * (2 * deg - 1)
            for i, x in enumerate(da):
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
            # reduce modulo poly (monic: leading coefficient 1)
            for i in range(len(prod) - 1, deg - 1, -1):
                c = prod[i]
                if c:
                    for j in range(len(poly)):
                        prod[i - deg + j] = (prod[i - deg + j] - c * poly[j]) % p
            return _undigits(prod[:deg], p)

        add_t = tuple(tuple(add(a, b) for b in range(q)) for a in range(q))
        mul_t = tuple(tuple(mul(a, b) for b in range(q)) for a in range(q))
    else:
        add_t = tuple(tuple((a + b) % q for b in range(q)) for a in range(q))
        mul_t = tuple(tuple(a * b % q for b in range(q)) for a in range(q))
    _check_field_axioms(q, add_t, mul_t)
    return FieldTable(q, add_t, mul_t)


def _check_field_axioms(q, add, mul) -> None:
    rng = range(q)
    for a in rng:
        if add[a][0] != a or mul[a][1] != a or mul[a][0] != 0:
            raise AssertionError("identity/absorption failure")
        if 0 not in add[a]:
            raise AssertionError("missing additive inverse")
        if a != 0 and 1 not in mul[a]:
            raise AssertionError("missing multiplicative inverse")
        for b in rng:
            if add[a][b] != add[b][a] or mul[a][b] != mul[b][a]:
                raise AssertionError("commutativity failure")
            for c in rng:
                if add[add[a][b]][c] != add[a][add[b][c]]:
                    raise AssertionError("additive associativity failure")
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    raise AssertionError("multiplicative associativity failure")
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    raise AssertionError("distributivity failure")


def mols_family(q: int) -> list[LatinSquare]:
    """The perfect orthogonal family L_a(i,j) = a*i + j over GF(q), a != 0."""
    f = field(q)
    return [
        LatinSquare(q, tuple(tuple(f.add[f.mul[a][i]][j] for j in range(q)) for i in range(q)))
        for a in range(1, q)
    ]


def are_orthogonal(l1: LatinSquare, l2: LatinSquare) -> bool:
    if l1.q != l2.q:
        raise ValueError(f"order mismatch {l1.q} vs {l2.q}")
    q = l1.q
    pairs = {(l1.cells[i][j], l2.cells[i][j]) for i in range(q) for j in range(q)}
    return len(pairs) == q * q


def mols_to_oa(squares: list[LatinSquare]) -> OrthogonalArray:
    """OA(s, q) with rows (i, j, L_1(i,j), ..., L_{s-2}(i,j))."""
    if not squares:
        raise ValueError("need at least one Latin square")
    q = squares[0].q
    for a, b in combinations(squares, 2):
        if not are_orthogonal(a, b):
            raise ValueError("squares are not mutually orthogonal")
    rows = tuple(
        (i, j) + tuple(sq.cells[i][j] for sq in squares)
        for i in range(q)
        for j in range(q)
    )
    return OrthogonalArray(len(squares) + 2, q, rows)


def oa_to_mols(a: OrthogonalArray) -> list[LatinSquare]:
    """Invert mols_to_oa: columns 3..s read off as squares indexed by columns 1,2."""
    if a.s < 3:
        raise ValueError("need s >= 3 to extract Latin squares")
    if not validate_oa(a):
        raise ValueError("input is not a valid orthogonal array")
    q = a.q
    out = []
    for col in range(2, a.s):
        cells = [[-1] * q for _ in range(q)]
        for row in a.rows:
            cells[row[0]][row[1]] = row[col]
        out.append(LatinSquare(q, tuple(tuple(r) for r in cells)))
    return out


def validate_oa(a: OrthogonalArray) -> bool:
    """Defining pair property plus the per-column symbol-count corollary."""
    q, s = a.q, a.s
    if len(a.rows) != q * q or any(len(r) != s for r in a.rows):
        return False
    if any(not 0 <= x < q for r in a.rows for x in r):
        return False
    for c1, c2 in combinations(range(s), 2):
        pairs = {(r[c1], r[c2]) for r in a.rows}
        if len(pairs) != q * q:
            return False
    for c in range(s):
        counts = [0] * q
        for r in a.rows:
            counts[r[c]] += 1
        if any(x != q for x in counts):
            return False
    return True


def affine_plane_from_mols(squares: list[LatinSquare]) -> Design:
    """Affine plane of order q on the q*q cell grid from q-1 MOLS(q).

    Blocks: the q rows, the q columns, and for each square and symbol the
    cells holding that symbol; point (i,j) is i*q + j.
    """
    q = squares[0].q
    if len(squares) != q - 1:
        raise ValueError(f"need q-1={q - 1} squares, got {len(squares)}")
    for a, b in combinations(squares, 2):
        if not are_orthogonal(a, b):
            raise ValueError("squares are not mutually orthogonal")
    blocks = []
    for i in range(q):
        blocks.append(frozenset(i * q + j for j in range(q)))
    for j in range(q):
        blocks.append(frozenset(i * q + j for i in range(q)))
    for sq in squares:
        for c in range(q):
            blocks.append(
                frozenset(i * q + j for i in range(q) for j in range(q) if sq.cells[i][j] == c)
            )
    return Design(q * q, tuple(blocks), q, 1)


def projective_from_affine(d: Design) -> Design:
    """Extend an affine plane with one ideal point per parallel class."""
    q = d.k
    if d.v != q * q or len(d.blocks) != q * q + q or d.lam != 1:
        raise ValueError("input does not have affine plane parameters")
    # parallel classes: maximal sets of pairwise disjoint blocks
    unassigned = list(range(len(d.blocks)))
    classes: list[list[int]] = []
    while unassigned:
        seed = unassigned[0]
        cls = [i for i in unassigned if i == seed or not (d.blocks[i] & d.blocks[seed])]
        if len(cls) != q:
            raise ValueError("blocks do not split into parallel classes of size q")
        classes.append(cls)
        unassigned = [i for i in unassigned if i not in cls]
    if len(classes) != q + 1:
        raise ValueError(f"expected {q + 1} parallel classes, found {len(classes)}")
    blocks = list(d.blocks)
    for ci, cls in enumerate(classes):
        ideal = d.v + ci
        for bi in cls:
            blocks[bi] = blocks[bi] | {ideal}
    blocks.append(frozenset(range(d.v, d.v + q + 1)))  # the ideal line
    return Design(q * q + q + 1, tuple(blocks), q + 1, 1)


def validate_bibd(d: Design) -> bool:
    """Exhaustive check of block sizes and pairwise coverage."""
    if any(len(b) != d.k for b in d.blocks):
        return False
    if any(not all(0 <= p < d.v for p in b) for b in d.blocks):
        return False
    for x, y in combinations(range(d.v), 2):
        count = sum(1 for b in d.blocks if x in b and y in b)
        if count != d.lam:
            return False
    return True


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------

def oa_to_text(a: OrthogonalArray) -> str:
    lines = [f"{a.s} {a.q}"]
    lines += [" ".join(map(str, r)) for r in a.rows]
    return "\n".join(lines) + "\n"


def oa_from_text(text: str) -> OrthogonalArray:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    s, q = map(int, lines[0].split())
    rows = tuple(tuple(map(int, ln.split())) for ln in lines[1:])
    return OrthogonalArray(s, q, rows)


def latin_to_text(ls: LatinSquare) -> str:
    lines = [str(ls.q)]
    lines += [" ".join(map(str, row)) for row in ls.cells]
    return "\n".join(lines) + "\n"


def latin_from_text(text: str) -> LatinSquare:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    q = int(lines[0])
    return LatinSquare(q, tuple(tuple(map(int, ln.split())) for ln in lines[1:]))


def design_to_text(d: Design) -> str:
    lines = [f"{d.v} {len(d.blocks)} {d.k} {d.lam}"]
    lines += [" ".join(map(str, sorted(b))) for b in d.blocks]
    return "\n".join(lines) + "\n"


def design_from_text(text: str) -> Design:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    v, b, k, lam = map(int, lines[0].split())
    blocks = tuple(frozenset(map(int, ln.split())) for ln in lines[1:])
    if len(blocks) != b:
        raise ValueError(f"expected {b} blocks, got {len(blocks)}")
    return Design(v, blocks, k, lam)
