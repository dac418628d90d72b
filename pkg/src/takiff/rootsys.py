"""Root data for the simple Lie types A--G with exact weight arithmetic.

Weights are tuples of integers in fundamental-weight coordinates
(Dynkin labels); roots are tracked in simple-root coordinates.  The
Cartan matrix convention is ``cartan[i][j] = <alpha_j, alpha_i^vee>``,
so the fundamental coordinates of a root are ``cartan @ root_coords``.
Simple roots carry the Bourbaki numbering.

The Weyl group is never materialised: orbit and dominance operations
use reflection closure with a visited set, which keeps every type
(including E8) usable for the small weights that actually occur.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce

from ._linalg import det_int, inv_dense, solve_dense
from .errors import InternalCheckError, UserInputError

SERIES = ("A", "B", "C", "D", "E", "F", "G")

_VALID_RANKS = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 4,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


@dataclass(frozen=True)
class RootDatum:
    series: str
    rank: int
    cartan: tuple                 # cartan[i][j] = <alpha_j, alpha_i^vee>
    pos_roots: tuple              # simple-root coordinates, height-sorted
    pos_roots_fund: tuple         # the same roots in fundamental coordinates
    simple_norm_half: tuple       # d_i = (alpha_i, alpha_i)/2 as Fractions
    cartan_inv: tuple
    rho: tuple
    coxeter_number: int
    exponents: tuple
    highest_root: tuple           # fundamental coordinates
    deep_margin: tuple = field(default=())

    @property
    def key(self):
        return (self.series, self.rank)

    @property
    def simple_roots(self):
        """Simple roots in fundamental coordinates (Cartan matrix columns)."""
        return tuple(tuple(self.cartan[i][j] for i in range(self.rank))
                     for j in range(self.rank))

    @property
    def fundamental_weights(self):
        return tuple(tuple(1 if i == j else 0 for i in range(self.rank))
                     for j in range(self.rank))

    @property
    def zero(self):
        return (0,) * self.rank


def _cartan_matrix(series, rank):
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def bond(i, j):
        a[i][j] = -1
        a[j][i] = -1

    if series in ("A", "B", "C"):
        for i in range(rank - 1):
            bond(i, i + 1)
        if series == "B" and rank >= 2:
            a[rank - 1][rank - 2] = -2      # alpha_r short
        if series == "C" and rank >= 2:
            a[rank - 2][rank - 1] = -2      # alpha_r long
    elif series == "D":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 3, rank - 1)
    elif series == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: rank - 1]
        for u, v in zip(chain, chain[1:]):
            bond(u, v)
        bond(1, 3)
    elif series == "F":
        bond(0, 1)
        bond(1, 2)
        bond(2, 3)
        a[2][1] = -2                        # alpha_3, alpha_4 short
    elif series == "G":
        a[0][1] = -3                        # alpha_1 short
        a[1][0] = -1
    return a


def _symmetrizers(cartan, rank):
    """d_i with d_i a_ij = d_j a_ji, normalised so min d_i has value 1/2 or 1."""
    d = [None] * rank
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(rank):
            if i != j and cartan[i][j] and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                todo.append(j)
    assert all(v is not None for v in d)
    top = max(d)
    return tuple(v / top for v in d)  # long roots get d = 1


def _positive_roots(cartan, rank):
    # first layer in Bourbaki index order, so pos_roots[i] is alpha_{i+1}
    simples = [tuple(1 if k == i else 0 for k in range(rank)) for i in range(rank)]
    found = set(simples)
    layer = list(simples)
    by_height = [list(simples)]
    while layer:
        nxt = []
        for beta in layer:
            fund = [sum(cartan[i][j] * beta[j] for j in range(rank)) for i in range(rank)]
            for i in range(rank):
                # alpha_i-string through beta: q = p - <beta, alpha_i^vee>
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if min(down) < 0 or tuple(down) not in found:
                        break
                    p += 1
                if p - fund[i] > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        if nxt:
            by_height.append(sorted(set(nxt)))
        layer = nxt
    roots = [r for lay in by_height for r in lay]
    return roots, by_height


def _exponents(by_height):
    # conjugate partition of the height distribution (Kostant)
    counts = [len(lay) for lay in by_height]
    exps = []
    for e in range(len(counts), 0, -1):
        mult = counts[e - 1] - (counts[e] if e < len(counts) else 0)
        exps.extend([e] * mult)
    return tuple(sorted(exps))


_datum_cache = {}


def build_root_datum(series, rank):
    """Construct the root datum of the simple type (series, rank)."""
    series = str(series).upper()
    try:
        rank = int(rank)
    except (TypeError, ValueError):
        raise UserInputError(f"rank must be an integer, got {rank!r}")
    if series not in SERIES or not _VALID_RANKS[series](rank):
        raise UserInputError(
            f"invalid simple type {series}{rank}: expected A r>=1, B/C r>=2, "
            "D r>=4, E 6-8, F4 or G2")
    key = (series, rank)
    if key in _datum_cache:
        return _datum_cache[key]

    cartan = _cartan_matrix(series, rank)
    d = _symmetrizers(cartan, rank)
    roots, by_height = _positive_roots(cartan, rank)
    h = len(by_height) + 1
    exps = _exponents(by_height)
    tops = by_height[-1]
    if len(tops) != 1:
        raise InternalCheckError("highest root is not unique")
    theta = tuple(sum(cartan[i][j] * tops[0][j] for j in range(rank))
                  for i in range(rank))

    npos = len(roots)
    if 2 * npos != rank * h:
        raise InternalCheckError("|Phi+| != rank*h/2")
    if sum(exps) != npos:
        raise InternalCheckError("sum of exponents != |Phi+|")
    if sum(tops[0]) != h - 1:
        raise InternalCheckError("height of highest root != h-1")
    det = det_int(cartan)
    if det < 1:
        raise InternalCheckError("Cartan determinant < 1")

    fund = tuple(tuple(sum(cartan[i][j] * c[j] for j in range(rank))
                       for i in range(rank)) for c in roots)
    margin = tuple(max(f[i] for f in fund) for i in range(rank))
    rd = RootDatum(
        series=series,
        rank=rank,
        cartan=tuple(tuple(row) for row in cartan),
        pos_roots=tuple(roots),
        pos_roots_fund=fund,
        simple_norm_half=d,
        cartan_inv=tuple(tuple(r) for r in inv_dense(cartan)),
        rho=(1,) * rank,
        coxeter_number=h,
        exponents=exps,
        highest_root=theta,
        deep_margin=margin,
    )
    _datum_cache[key] = rd
    return rd


def cartan_determinant(rd):
    """Exact determinant of the Cartan matrix = index of Q in P."""
    return det_int(rd.cartan)


def weyl_order(rd):
    """|W| = prod (e_i + 1)."""
    return reduce(lambda x, y: x * y, (e + 1 for e in rd.exponents), 1)


# ---------------------------------------------------------------------------
# weight arithmetic

def add_weights(x, y):
    return tuple(a + b for a, b in zip(x, y))


def sub_weights(x, y):
    return tuple(a - b for a, b in zip(x, y))


def neg_weight(x):
    return tuple(-a for a in x)


def dominant(rd, w):
    return all(c >= 0 for c in w)


def reflect(rd, w, i):
    """Simple reflection s_i acting on fundamental coordinates."""
    wi = w[i]
    return tuple(w[k] - wi * rd.cartan[k][i] for k in range(rd.rank))


def to_dominant(rd, w):
    """Dominant Weyl representative of w with determinant sign; 0 on a wall."""
    w = tuple(w)
    sign = 1
    while True:
        i = next((k for k in range(rd.rank) if w[k] < 0), None)
        if i is None:
            break
        w = reflect(rd, w, i)
        sign = -sign
    if any(c == 0 for c in w):
        sign = 0
    return w, sign


def weyl_orbit(rd, w):
    """The Weyl orbit of w, as a sorted list (reflection closure)."""
    seen = {tuple(w)}
    frontier = [tuple(w)]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(rd.rank):
                u = reflect(rd, v, i)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return sorted(seen)


def longest_element_negate(rd, w):
    """-w0 w for dominant w (the highest weight of the dual module)."""
    if not dominant(rd, w):
        raise UserInputError(f"weight {w} is not dominant")
    return to_dominant(rd, neg_weight(w))[0]


def root_coords(rd, w):
    """Coordinates of w in the simple-root basis (Fractions)."""
    return tuple(solve_dense([list(r) for r in rd.cartan], list(w)))


def in_root_lattice(rd, w):
    return all(c.denominator == 1 for c in root_coords(rd, w))


def coset_key(rd, w):
    """Canonical label of w + Q in P/Q (fractional parts of root coords)."""
    return tuple(c - c.__floor__() for c in root_coords(rd, w))


# ---------------------------------------------------------------------------
# invariant bilinear form (normalised so long roots have squared length 2)

def inner_weight_root(rd, w, c):
    """(w, beta) with w in fundamental and beta in simple-root coordinates."""
    return sum(Fraction(w[j]) * c[j] * rd.simple_norm_half[j] for j in range(rd.rank))


def inner_weights(rd, x, y):
    """(x, y) with both weights in fundamental coordinates."""
    return inner_weight_root(rd, x, root_coords(rd, y))


def root_norm2(rd, c):
    """(beta, beta) for beta in simple-root coordinates."""
    tot = Fraction(0)
    for i in range(rd.rank):
        if not c[i]:
            continue
        for j in range(rd.rank):
            if c[j]:
                tot += c[i] * c[j] * rd.simple_norm_half[i] * rd.cartan[i][j]
    return tot


def pairing_with_coroot(rd, w, c):
    """<w, beta^vee> = 2 (w, beta) / (beta, beta)."""
    return 2 * inner_weight_root(rd, w, c) / root_norm2(rd, c)


def weyl_dim(rd, lam):
    """Weyl dimension formula, exact."""
    if not dominant(rd, lam):
        raise UserInputError(f"weight {lam} is not dominant")
    num = Fraction(1)
    den = Fraction(1)
    lam_rho = add_weights(lam, rd.rho)
    for c in rd.pos_roots:
        num *= inner_weight_root(rd, lam_rho, c)
        den *= inner_weight_root(rd, rd.rho, c)
    val = num / den
    assert val.denominator == 1
    return int(val)


# ---------------------------------------------------------------------------
# minuscule weights

def _is_minuscule(rd, nu):
    """Dominant nu has a single Weyl orbit of weights iff <nu, beta^vee> <= 1
    for every positive root beta."""
    return all(pairing_with_coroot(rd, nu, c) <= 1 for c in rd.pos_roots)


def minuscule_weights(rd):
    """Dominant weights (0 included) whose irreducible has one Weyl orbit of
    weights; exactly one per coset of the root lattice."""
    det = cartan_determinant(rd)
    out = [rd.zero]
    seen = {coset_key(rd, rd.zero)}
    for omega in rd.fundamental_weights:
        key = coset_key(rd, omega)
        if key in seen:
            continue
        if _is_minuscule(rd, omega):
            out.append(omega)
            seen.add(key)
    if len(out) != det:
        raise InternalCheckError(
            f"found {len(out)} minuscule coset representatives, expected {det}")
    return out
