"""Annihilating-polynomial search for truncated series.

Given f known to order N, a bivariate integer polynomial P with
P(t, f(t)) = 0 through t^N certifies algebraicity empirically: the
certificate is only as strong as the truncation, which the docstrings
below state explicitly.  The search is a nullspace computation: the
coefficients of P are an exact-rational kernel vector of the linear map
sending (c_ij) to the series coefficients of sum c_ij t^i f^j.
"""

import math
import re
from fractions import Fraction

from .errors import ParseError, ValidationError
from .series import TruncatedSeries


class BivariatePolynomial:
    """Integer polynomial in t and y, stored as {(t_degree, y_degree): coeff}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[tuple[int, int], int]):
        self.coeffs = {k: int(c) for k, c in coeffs.items() if c}

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def deg_t(self) -> int:
        return max((i for i, _ in self.coeffs), default=0)

    @property
    def deg_y(self) -> int:
        return max((j for _, j in self.coeffs), default=0)

    def normalized(self) -> "BivariatePolynomial":
        """Canonical form: primitive, monomial-reduced, sign-fixed.

        Divides out the integer content and any common t^a or y^b factor,
        then flips the sign so the coefficient of the lexicographically
        largest (y_degree, t_degree) monomial is positive.
        """
        if not self.coeffs:
            return self
        content = 0
        for c in self.coeffs.values():
            content = math.gcd(content, abs(c))
        t_shift = min(i for i, _ in self.coeffs)
        y_shift = min(j for _, j in self.coeffs)
        out = {(i - t_shift, j - y_shift): c // content
               for (i, j), c in self.coeffs.items()}
        lead = max(out, key=lambda ij: (ij[1], ij[0]))
        if out[lead] < 0:
            out = {k: -c for k, c in out.items()}
        return BivariatePolynomial(out)

    def rescale_t(self, factor: int) -> "BivariatePolynomial":
        """Substitute t -> factor*t."""
        return BivariatePolynomial(
            {(i, j): c * factor ** i for (i, j), c in self.coeffs.items()})

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """(i, j, coeff) triples sorted by (y_degree, t_degree)."""
        return [(i, j, self.coeffs[(i, j)])
                for (i, j) in sorted(self.coeffs, key=lambda ij: (ij[1], ij[0]))]

    def __eq__(self, other):
        return (isinstance(other, BivariatePolynomial)
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        return f"BivariatePolynomial({self.coeffs!r})"


def format_bivariate(p: BivariatePolynomial) -> str:
    """Display as ``c * t^i * y^j`` terms sorted by (j, i); zero is ``0``."""
    if p.is_zero():
        return "0"
    return " + ".join(f"{c} * t^{i} * y^{j}" for i, j, c in p.sorted_terms())


_TERM_RE = re.compile(
    r"^\s*(-?\d+)\s*\*\s*t\^(\d+)\s*\*\s*y\^(\d+)\s*$")


def parse_bivariate(text: str) -> BivariatePolynomial:
    """Inverse of :func:`format_bivariate`."""
    text = text.strip()
    if text == "0":
        return BivariatePolynomial({})
    coeffs: dict[tuple[int, int], int] = {}
    for chunk in text.split("+"):
        m = _TERM_RE.match(chunk)
        if not m:
            raise ParseError(
                f"bad polynomial term {chunk.strip()!r}; expected 'c * t^i * y^j'")
        c, i, j = int(m.group(1)), int(m.group(2)), int(m.group(3))
        key = (i, j)
        coeffs[key] = coeffs.get(key, 0) + c
    return BivariatePolynomial(coeffs)


def evaluate_at_series(p: BivariatePolynomial,
                       f: TruncatedSeries) -> TruncatedSeries:
    """sum c_ij t^i f^j truncated to f's order."""
    n = f.order
    out = [Fraction(0)] * (n + 1)
    if p.is_zero():
        return TruncatedSeries(out, n)
    powers = _series_powers(f, p.deg_y)
    for (i, j), c in p.coeffs.items():
        if i > n:
            continue
        fj = powers[j].coeffs
        for k in range(n + 1 - i):
            if fj[k]:
                out[i + k] += c * fj[k]
    return TruncatedSeries(out, n)


def _series_powers(f: TruncatedSeries, top: int) -> list[TruncatedSeries]:
    powers = [TruncatedSeries.one(f.order)]
    for _ in range(top):
        powers.append(powers[-1] * f)
    return powers


def exact_kernel(rows) -> list[list[int]]:
    """Basis of the right kernel of a matrix of exact rationals.

    Rows are scaled to integers, eliminated integer-preservingly (cross
    multiplication followed by a gcd reduction of the row, pivots chosen
    by maximal absolute value), and the free variables back-substituted.
    Each basis vector is returned as a primitive integer vector and
    satisfies A v = 0 exactly.
    """
    rows = [list(r) for r in rows]
    if not rows:
        raise ValidationError("kernel of an empty row set is ambiguous")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValidationError("ragged rows")
    mat = [_integerize(r) for r in rows]

    pivots: list[tuple[int, int]] = []  # (row, col) in elimination order
    pivot_row = 0
    for col in range(width):
        best = None
        for r in range(pivot_row, len(mat)):
            if mat[r][col] and (best is None or abs(mat[r][col]) > abs(mat[best][col])):
                best = r
        if best is None:
            continue
        mat[pivot_row], mat[best] = mat[best], mat[pivot_row]
        p = mat[pivot_row][col]
        for r in range(pivot_row + 1, len(mat)):
            q = mat[r][col]
            if not q:
                continue
            row = [p * a - q * b for a, b in zip(mat[r], mat[pivot_row])]
            g = 0
            for a in row:
                g = math.gcd(g, abs(a))
            mat[r] = [a // g for a in row] if g > 1 else row
        pivots.append((pivot_row, col))
        pivot_row += 1
        if pivot_row == len(mat):
            break

    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(width) if c not in pivot_cols]
    basis = []
    for free in free_cols:
        v = [Fraction(0)] * width
        v[free] = Fraction(1)
        for r, c in reversed(pivots):
            acc = Fraction(0)
            for cc in range(c + 1, width):
                if mat[r][cc]:
                    acc += mat[r][cc] * v[cc]
            v[c] = -acc / mat[r][c]
        basis.append(_primitive(v))
    return basis


def _integerize(row) -> list[int]:
    fracs = [Fraction(x) for x in row]
    scale = 1
    for x in fracs:
        scale = scale * x.denominator // math.gcd(scale, x.denominator)
    return [int(x * scale) for x in fracs]


def _primitive(vector: list[Fraction]) -> list[int]:
    scale = 1
    for x in vector:
        scale = scale * x.denominator // math.gcd(scale, x.denominator)
    ints = [int(x * scale) for x in vector]
    g = 0
    for a in ints:
        g = math.gcd(g, abs(a))
    if g > 1:
        ints = [a // g for a in ints]
    for a in ints:
        if a:
            if a < 0:
                ints = [-b for b in ints]
            break
    return ints


def guess_annihilator(f: TruncatedSeries, deg_t: int,
                      deg_y: int) -> BivariatePolynomial | None:
    """Smallest annihilator of f within the degree bounds, or None.

    Scans candidate degrees in lexicographic (y_degree, t_degree) order
    and returns the first normalized kernel element that kills f through
    its full truncation order.  The order must comfortably overdetermine
    the largest candidate system, hence the guard below.
    """
    required = (deg_t + 1) * (deg_y + 1) + 8
    if f.order < required:
        raise ValidationError(
            f"series order {f.order} is too small for bounds "
            f"(deg_t={deg_t}, deg_y={deg_y}); need order >= {required}")
    powers = _series_powers(f, deg_y)
    for dy in range(deg_y + 1):
        for dt in range(deg_t + 1):
            raw = _kernel_candidate(f, powers, dt, dy)
            if raw is None:
                continue
            candidate = raw.normalized()
            if evaluate_at_series(candidate, f).is_zero():
                return candidate
            # monomial reduction can cost truncation precision; retry
            # with content and sign normalization only
            fallback = _content_sign_only(raw)
            if evaluate_at_series(fallback, f).is_zero():
                return fallback
    return None


def _kernel_candidate(f, powers, dt, dy):
    columns = [(i, j) for j in range(dy + 1) for i in range(dt + 1)]
    rows = []
    for k in range(f.order + 1):
        row = []
        for i, j in columns:
            row.append(powers[j].coeffs[k - i] if k >= i else Fraction(0))
        rows.append(row)
    basis = exact_kernel(rows)
    if not basis:
        return None
    vec = basis[0]
    poly = BivariatePolynomial({ij: c for ij, c in zip(columns, vec)})
    if poly.is_zero():
        return None
    return poly


def _content_sign_only(p: BivariatePolynomial) -> BivariatePolynomial:
    content = 0
    for c in p.coeffs.values():
        content = math.gcd(content, abs(c))
    out = {k: c // content for k, c in p.coeffs.items()}
    lead = max(out, key=lambda ij: (ij[1], ij[0]))
    if out[lead] < 0:
        out = {k: -c for k, c in out.items()}
    return BivariatePolynomial(out)


__all__ = [
    "BivariatePolynomial",
    "evaluate_at_series",
    "exact_kernel",
    "format_bivariate",
    "guess_annihilator",
    "parse_bivariate",
]
