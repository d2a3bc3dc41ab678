"""Dense complex matrices, Kronecker lifts and Yang-Baxter operator checks.

Three scalar backends share one matrix type:

* ``"exact"``   Gaussian rationals (:class:`GaussRat`), for structural identities;
* ``"float"``   numpy complex128, for trigonometric residual sweeps;
* ``"interval"`` :class:`~transcert.cinterval.CInterval`, for certified bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels
from . import mpreal as mr
from .cinterval import CInterval
from .errors import DimensionMismatch, NonPositiveEntries, ZeroAlpha
from .mpreal import RInterval


@dataclass(frozen=True, slots=True)
class GaussRat:
    """Gaussian rational re + im*i with exact Fraction parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    @staticmethod
    def of(z) -> GaussRat:
        if isinstance(z, GaussRat):
            return z
        return GaussRat(Fraction(z))

    def __add__(self, o):
        o = GaussRat.of(o)
        return GaussRat(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o):
        o = GaussRat.of(o)
        return GaussRat(self.re - o.re, self.im - o.im)

    def __rsub__(self, o):
        return GaussRat.of(o) - self

    def __mul__(self, o):
        o = GaussRat.of(o)
        return GaussRat(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __abs__(self) -> float:
        return math.hypot(self.re, self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))


I_EXACT = GaussRat(Fraction(0), Fraction(1))


class CMatrix:
    """Immutable dense matrix; ``data`` is a 2-D numpy array (complex or object)."""

    __slots__ = ("data", "backend")

    def __init__(self, data, backend: str = "float"):
        arr = np.array(data, dtype=complex if backend == "float" else object)
        if arr.ndim != 2:
            raise DimensionMismatch("matrix data must be 2-D")
        arr.setflags(write=False)
        self.data = arr
        self.backend = backend

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def _wrap(self, arr) -> CMatrix:
        return CMatrix(arr, self.backend)

    def _check_same(self, other: CMatrix) -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other: CMatrix) -> CMatrix:
        self._check_same(other)
        return self._wrap(self.data + other.data)

    def __sub__(self, other: CMatrix) -> CMatrix:
        self._check_same(other)
        return self._wrap(self.data - other.data)

    def __neg__(self) -> CMatrix:
        return self._wrap(-self.data)

    def __matmul__(self, other: CMatrix) -> CMatrix:
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        if self.backend == "float":
            return self._wrap(self.data @ other.data)
        n, m, k = self.rows, other.cols, self.cols
        out = np.empty((n, m), dtype=object)
        for i in range(n):
            for j in range(m):
                acc = self.data[i, 0] * other.data[0, j]
                for t in range(1, k):
                    acc = acc + self.data[i, t] * other.data[t, j]
                out[i, j] = acc
        return self._wrap(out)

    def scale(self, s) -> CMatrix:
        if self.backend == "float":
            return self._wrap(self.data * complex(s))
        out = np.empty(self.shape, dtype=object)
        for idx, v in np.ndenumerate(self.data):
            out[idx] = s * v if not isinstance(s, (int, Fraction)) else v * s
        return self._wrap(out)

    def max_norm(self) -> float:
        """Largest entry modulus (upper bound for interval entries)."""
        if self.backend == "float":
            return float(np.max(np.abs(self.data))) if self.data.size else 0.0
        if self.backend == "exact":
            return max((abs(v) for v in self.data.flat), default=0.0)
        from .cinterval import cabs
        best = 0.0
        for v in self.data.flat:
            best = max(best, math.nextafter(float(cabs(v).hi), math.inf))
        return best

    def is_zero(self) -> bool:
        if self.backend == "exact":
            return all(v.is_zero() for v in self.data.flat)
        if self.backend == "float":
            return not np.any(self.data)
        return all(v.re.lo.man == v.re.hi.man == 0 and v.im.lo.man == v.im.hi.man == 0
                   for v in self.data.flat)

    def to_float(self) -> CMatrix:
        if self.backend == "float":
            return self
        if self.backend == "exact":
            return CMatrix([[complex(v) for v in row] for row in self.data], "float")
        return CMatrix([[complex(float(v.re.mid()), float(v.im.mid())) for v in row]
                        for row in self.data], "float")

    def to_interval(self, p: int) -> CMatrix:
        if self.backend == "interval":
            return self
        if self.backend == "exact":
            rows = [[CInterval(RInterval.point(v.re, p), RInterval.point(v.im, p)) for v in row]
                    for row in self.data]
        else:
            rows = [[CInterval(RInterval.point(float(v.real), p), RInterval.point(float(v.imag), p))
                     for v in row] for row in self.data]
        return CMatrix(rows, "interval")

    def __repr__(self) -> str:
        return f"CMatrix({self.rows}x{self.cols}, backend={self.backend!r})"


def identity(n: int, backend: str = "float", p: int = 128) -> CMatrix:
    if backend == "float":
        return CMatrix(np.eye(n, dtype=complex), "float")
    if backend == "exact":
        one, zero = GaussRat(Fraction(1)), GaussRat(Fraction(0))
    else:
        one, zero = CInterval.point(1, 0, p), CInterval.point(0, 0, p)
    return CMatrix([[one if i == j else zero for j in range(n)] for i in range(n)], backend)


def zeros(n: int, backend: str = "float", p: int = 128) -> CMatrix:
    return identity(n, backend, p).scale(0)


def kron(a: CMatrix, b: CMatrix) -> CMatrix:
    if a.backend != b.backend:
        raise DimensionMismatch("kron operands use different scalar backends")
    if a.backend == "float":
        return CMatrix(np.kron(a.data, b.data), "float")
    ra, ca = a.shape
    rb, cb = b.shape
    out = np.empty((ra * rb, ca * cb), dtype=object)
    for i in range(ra):
        for j in range(ca):
            for k in range(rb):
                for m in range(cb):
                    out[i * rb + k, j * cb + m] = a.data[i, j] * b.data[k, m]
    return CMatrix(out, a.backend)


def _factor_dim(J: CMatrix) -> int:
    if J.rows != J.cols:
        raise DimensionMismatch("J must be square")
    n = math.isqrt(J.rows)
    if n * n != J.rows:
        raise DimensionMismatch(f"J of size {J.rows} does not act on a tensor square")
    return n


def lift12(J: CMatrix, n: int | None = None) -> CMatrix:
    n = _factor_dim(J) if n is None else n
    return kron(J, identity(n, J.backend, _prec(J)))


def lift23(J: CMatrix, n: int | None = None) -> CMatrix:
    n = _factor_dim(J) if n is None else n
    return kron(identity(n, J.backend, _prec(J)), J)


def _prec(m: CMatrix) -> int:
    if m.backend == "interval":
        return m.data.flat[0].prec
    return 128


# ---------------------------------------------------------------------------
# Operator families
# ---------------------------------------------------------------------------

def alpha_family(alpha, backend: str = "exact") -> CMatrix:
    """4x4 antidiagonal operator with entries (i/alpha, i, i, alpha i)."""
    if alpha == 0:
        raise ZeroAlpha("alpha must be nonzero")
    if backend == "interval":
        return alpha_family(alpha, "exact").to_interval(128)
    if backend == "exact":
        a = Fraction(alpha)
        z = GaussRat(Fraction(0))
        entries = [GaussRat(Fraction(0), 1 / a), I_EXACT, I_EXACT, GaussRat(Fraction(0), a)]
    else:
        a = float(alpha)
        z = 0j
        entries = [1j / a, 1j, 1j, a * 1j]
    rows = [[z] * 4 for _ in range(4)]
    for r in range(4):
        rows[r][3 - r] = entries[r]
    return CMatrix(rows, backend)


def majorana_J(backend: str = "exact") -> CMatrix:
    rows = [[0, 0, 0, 1], [0, 0, 1, 0], [0, -1, 0, 0], [-1, 0, 0, 0]]
    if backend == "exact":
        return CMatrix([[GaussRat(Fraction(v)) for v in row] for row in rows], "exact")
    return CMatrix(rows, "float")


@dataclass(frozen=True)
class JReport:
    squares_to_minus_identity: float
    commutation_12_23: float
    anticommutation_12_23: float
    exact: bool


def j_report(J: CMatrix) -> JReport:
    n = _factor_dim(J)
    ident = identity(J.rows, J.backend)
    sq = J @ J + ident
    a, b = lift12(J, n), lift23(J, n)
    ab, ba = a @ b, b @ a
    return JReport(sq.max_norm(), (ab - ba).max_norm(), (ab + ba).max_norm(),
                   J.backend == "exact")


def r_of_x(J: CMatrix, x) -> CMatrix:
    """cos(x) I + sin(x) J.  Float x uses the float backend; RInterval x the
    interval backend."""
    if isinstance(x, RInterval):
        Jp = J.to_interval(x.prec)
        c = CInterval.real(mr.cos(x))
        s = CInterval.real(mr.sin(x))
        return identity(J.rows, "interval", x.prec).scale(c) + Jp.scale(s)
    Jf = J.to_float()
    return CMatrix(math.cos(x) * np.eye(J.rows) + math.sin(x) * Jf.data, "float")


def ybe_sides(J: CMatrix, x: float, y: float) -> tuple[CMatrix, CMatrix]:
    n = _factor_dim(J)

    def R12(t):
        return lift12(r_of_x(J, t), n)

    def R23(t):
        return lift23(r_of_x(J, t), n)

    lhs = R12(x) @ R23(x + y) @ R12(y)
    rhs = R23(y) @ R12(x + y) @ R23(x)
    return lhs, rhs


def ybe_residual(J: CMatrix, x: float, y: float) -> float:
    """Max-norm of R12(x) R23(x+y) R12(y) - R23(y) R12(x+y) R23(x)."""
    lhs, rhs = ybe_sides(J, x, y)
    return (lhs - rhs).max_norm()


def ybe_grid(J: CMatrix, step: float = 1.0, lo: float = -2.0, hi: float = 2.0):
    """Residual table over the square grid [lo, hi]^2 with the given step."""
    count = int(round((hi - lo) / step)) + 1
    pts = [lo + k * step for k in range(count)]
    return pts, [[ybe_residual(J, x, y) for y in pts] for x in pts]


# ---------------------------------------------------------------------------
# Matrix exponential
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExpResult:
    value: CMatrix
    tail_bound: float  # bound on the max-norm distance to the true exponential


def _inf_norm(A: CMatrix) -> float:
    if A.backend == "float":
        return float(np.max(np.sum(np.abs(A.data), axis=1)))
    if A.backend == "exact":
        return max(sum(abs(v) for v in row) for row in A.data) * (1 + 1e-15)
    from .cinterval import cabs
    return max(sum(float(cabs(v).hi) for v in row) for row in A.data) * (1 + 1e-12)


def matrix_exp(A: CMatrix, terms: int = 18, p: int = 128) -> ExpResult:
    """Scaling and squaring with a truncated Taylor series.

    With B = A / 2^s and ||B|| <= 1/2, the Taylor remainder after N terms is at
    most ||B||^{N+1} e^{||B||} / (N+1)!.  Squaring s times propagates a
    remainder d on each factor into (e^{||B||} + d)^m - e^{m ||B||} with
    m = 2^s.  On the interval backend the remainder is added to every entry
    as a radius, so the returned matrix encloses exp(A).
    """
    if A.rows != A.cols:
        raise DimensionMismatch("matrix_exp needs a square matrix")
    if A.backend == "exact":
        A = A.to_interval(p) if p else A.to_float()
    norm = _inf_norm(A)
    s = 0
    while norm / (1 << s) > 0.5:
        s += 1
    nb = norm / (1 << s)
    n = A.rows
    m = 1 << s
    delta = nb ** (terms + 1) * math.exp(nb) / math.factorial(terms + 1)
    tail = (math.exp(nb) + delta) ** m - math.exp(nb * m)
    # guard float rounding of the bound itself
    tail = tail * (1 + 1e-9) + 1e-300
    if A.backend == "float":
        B = A.data / m
        term = np.eye(n, dtype=complex)
        total = term.copy()
        for k in range(1, terms + 1):
            term = term @ B / k
            total = total + term
        for _ in range(s):
            total = total @ total
        return ExpResult(CMatrix(total, "float"), tail)
    inv_m = Fraction(1, m)
    B = A.scale(inv_m)
    term = identity(n, "interval", p)
    total = term
    for k in range(1, terms + 1):
        term = (term @ B).scale(Fraction(1, k))
        total = total + term
    rad = RInterval.of(-Fraction(delta), Fraction(delta), p)
    pad = CInterval(rad, rad)
    total = CMatrix([[v + pad for v in row] for row in total.data], "interval")
    for _ in range(s):
        total = total @ total
    return ExpResult(total, 0.0)


def euler_matrix_residual(J: CMatrix, backend: str = "float", p: int = 128) -> float:
    """Upper bound on ||e^{pi J} + I||_max.

    ``float``: numeric residual plus the folded Taylor tail bound.
    ``interval``: rigorous bound from an enclosure of e^{pi J}.
    """
    if backend == "float":
        A = J.to_float().scale(math.pi)
        res = matrix_exp(A)
        return (res.value + identity(J.rows)).max_norm() + res.tail_bound
    Jp = J.to_interval(p)
    pi = CInterval.real(mr.const_pi(p))
    res = matrix_exp(Jp.scale(pi), p=p)
    return (res.value + identity(J.rows, "interval", p)).max_norm()


# ---------------------------------------------------------------------------
# 2x2 matrix inequality X^2 + e I > pi X (entrywise)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InequalityResult:
    holds: bool
    witness_entry: tuple[int, int]  # entry with the smallest value
    entries: tuple[float, float, float, float]
    certificate: tuple[float, float, float, float]
    certificate_gap: float
    certified_by_intervals: bool = False


def _interval_entries(X: np.ndarray, p: int = 128) -> list[RInterval]:
    pi, e = mr.const_pi(p), mr.const_e(p)
    x = [[RInterval.point(float(X[i, j]), p) for j in range(2)] for i in range(2)]
    out = []
    for i in range(2):
        for j in range(2):
            sq = x[i][0] * x[0][j] + x[i][1] * x[1][j]
            v = sq - pi * x[i][j] + (e if i == j else 0)
            out.append(v)
    return out


def matrix_inequality_check(X, margin: float = 1e-9) -> InequalityResult:
    """Entrywise check of X^2 - pi X + e I > 0 for entrywise-positive X.

    The direct product is compared with the decomposition
    offdiag = x_ij (trace - pi), diag = x_ii^2 - pi x_ii + e + x_12 x_21.
    Entries within ``margin`` of zero are re-decided with interval arithmetic.
    """
    X = np.asarray(X, dtype=float)
    if X.shape != (2, 2):
        raise DimensionMismatch("X must be 2x2")
    if np.any(X <= 0):
        raise NonPositiveEntries("X must have strictly positive entries")
    batch = X.reshape(1, 2, 2)
    M, C = _kernels.ineq_entries(batch, math.pi, math.e)
    entries = tuple(float(v) for v in M[0].ravel())
    cert = tuple(float(v) for v in C[0].ravel())
    gap = max(abs(a - b) for a, b in zip(entries, cert))
    k = int(np.argmin(M[0].ravel()))
    holds = all(v > 0 for v in entries)
    by_intervals = False
    if any(abs(v) <= margin for v in entries):
        ivals = _interval_entries(X)
        holds = all(v.lo.man > 0 for v in ivals)
        by_intervals = True
    return InequalityResult(holds, divmod(k, 2), entries, cert, gap, by_intervals)


def sample_positive_matrices(n: int, seed: int, trace_gt_pi: bool = True) -> np.ndarray:
    """n matrices with entries uniform in (0, 10], optionally with trace > pi."""
    rng = np.random.default_rng(seed)
    out = np.empty((0, 2, 2))
    while out.shape[0] < n:
        batch = 10.0 - rng.uniform(0.0, 10.0, size=(2 * n, 2, 2))
        tr = batch[:, 0, 0] + batch[:, 1, 1]
        keep = tr > math.pi if trace_gt_pi else tr < math.pi
        out = np.concatenate([out, batch[keep]])
    return out[:n]


@dataclass(frozen=True)
class FuzzSummary:
    samples: int
    holds: int
    max_certificate_gap: float
    violations: list


def fuzz_matrix_inequality(n: int = 10_000, seed: int = 0, trace_gt_pi: bool = True) -> FuzzSummary:
    X = sample_positive_matrices(n, seed, trace_gt_pi)
    M, C = _kernels.ineq_entries(X, math.pi, math.e)
    gap = float(np.max(np.abs(M - C)))
    ok = np.all(M.reshape(len(X), 4) > 0, axis=1)
    near = np.any(np.abs(M.reshape(len(X), 4)) <= 1e-9, axis=1)
    for idx in np.nonzero(near)[0]:
        ok[idx] = matrix_inequality_check(X[idx]).holds
    bad = [X[i].tolist() for i in np.nonzero(~ok)[0]]
    return FuzzSummary(len(X), int(ok.sum()), gap, bad)
