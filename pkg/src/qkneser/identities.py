"""Exact verification of six Gaussian-binomial identities.

Each check compares both sides of an identity as normalized Laurent
polynomials, so a single passing instance proves the identity at that
parameter tuple for every value of q simultaneously.  The identities,
with C(s,2) = s(s-1)/2:

  pascal      [n i] = [n-1 i-1] + q^i [n-1 i]                    (i >= 1)
  lemma1      [n i] = (-1)^i q^(ni - C(i,2)) [i-1-n i]           (i >= 0)
  lemma2      sum_{s=0}^{a} (-1)^s q^C(s,2) [n s] = q^(na) [a-n a]
  lemma3      sum_{s=0}^{a} (-1)^s q^C(s,2) [m s][a-s t]
                  = q^(m(a-t)) [a-m a-t]                     (t <= a <= m)
  theorem2    same sum truncated at s = m, valid for a >= m, a >= t
  corollary1  theorem2 at t = a-m:
              sum_{s=0}^{m} (-1)^s q^C(s,2) [m s][a-s a-m] = q^(m^2) [a-m m]

lemma1 is also the computation path gauss takes for n < 0, so its check
additionally routes both sides through the product-formula oracle at
q0 in {2, 3, 5}; the symbolic comparison alone would be circular there.
Likewise corollary1 is re-derived through the theorem2 sides at t = a-m
and the two routes must agree term for term.

run_grid sweeps an identity over every admissible tuple in a bounds box
and reports failures as data (parameter tuple plus both renderings), not
as exceptions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from .laurent import ZERO, LaurentPoly
from .qbinom import gauss, gauss_eval_product

IDENTITY_IDS = ("pascal", "lemma1", "lemma2", "lemma3", "theorem2", "corollary1")

_ORACLE_POINTS = (2, 3, 5)


@dataclass(frozen=True)
class GridBounds:
    """Parameter box for run_grid.

    n_min..n_max bound the integer top n of pascal/lemma1/lemma2;
    i_min..i_max bound their nonnegative second parameter (i, or a for
    lemma2); mat_max caps each of m, a, t in the three-parameter
    identities.  Empty ranges are allowed and yield empty reports.
    """

    n_min: int = -8
    n_max: int = 12
    i_min: int = 0
    i_max: int = 8
    mat_max: int = 10

    def to_json_dict(self) -> dict:
        return {
            "n_min": self.n_min,
            "n_max": self.n_max,
            "i_min": self.i_min,
            "i_max": self.i_max,
            "mat_max": self.mat_max,
        }


@dataclass
class IdentityReport:
    """Outcome of sweeping one identity over a parameter grid.

    failures holds (parameter tuple, LHS rendering, RHS rendering) for
    every violated instance; the sweep passed iff failures is empty.
    """

    identity: str
    bounds: GridBounds
    checked: int = 0
    failures: list[tuple[tuple[int, ...], str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "identity": self.identity,
            "bounds": self.bounds.to_json_dict(),
            "checked": self.checked,
            "failures": [
                {"params": list(params), "lhs": lhs, "rhs": rhs}
                for params, lhs, rhs in self.failures
            ],
            "passed": self.passed,
        }

    def render_table(self) -> str:
        status = "ok" if self.passed else "FAIL"
        lines = [f"{self.identity:<12} checked={self.checked:<6} failures={len(self.failures):<4} {status}"]
        for params, lhs, rhs in self.failures:
            lines.append(f"    at {params}: LHS = {lhs}  !=  RHS = {rhs}")
        return "\n".join(lines)


# ----------------------------------------------------------------------
# both sides of each identity, symbolically


def _sign_shift(s: int, piece: LaurentPoly) -> LaurentPoly:
    # (-1)^s q^(s(s-1)/2) * piece
    shifted = piece.shift(s * (s - 1) // 2)
    return -shifted if s % 2 else shifted


def pascal_sides(n: int, i: int) -> tuple[LaurentPoly, LaurentPoly]:
    lhs = gauss(n, i)
    rhs = gauss(n - 1, i - 1) + gauss(n - 1, i).shift(i)
    return lhs, rhs


def lemma1_sides(n: int, i: int) -> tuple[LaurentPoly, LaurentPoly]:
    lhs = gauss(n, i)
    reflected = gauss(i - 1 - n, i).shift(n * i - i * (i - 1) // 2)
    rhs = -reflected if i % 2 else reflected
    return lhs, rhs


def lemma2_sides(n: int, a: int) -> tuple[LaurentPoly, LaurentPoly]:
    lhs = ZERO
    for s in range(a + 1):
        lhs = lhs + _sign_shift(s, gauss(n, s))
    rhs = gauss(a - n, a).shift(n * a)
    return lhs, rhs


def lemma3_sides(m: int, a: int, t: int) -> tuple[LaurentPoly, LaurentPoly]:
    lhs = ZERO
    for s in range(a + 1):
        lhs = lhs + _sign_shift(s, gauss(m, s) * gauss(a - s, t))
    rhs = gauss(a - m, a - t).shift(m * (a - t))
    return lhs, rhs


def theorem2_sides(m: int, a: int, t: int) -> tuple[LaurentPoly, LaurentPoly]:
    lhs = ZERO
    for s in range(m + 1):
        lhs = lhs + _sign_shift(s, gauss(m, s) * gauss(a - s, t))
    rhs = gauss(a - m, a - t).shift(m * (a - t))
    return lhs, rhs


def corollary1_sides(m: int, a: int) -> tuple[LaurentPoly, LaurentPoly]:
    lhs = ZERO
    for s in range(m + 1):
        lhs = lhs + _sign_shift(s, gauss(m, s) * gauss(a - s, a - m))
    rhs = gauss(a - m, m).shift(m * m)
    return lhs, rhs


# ----------------------------------------------------------------------
# boolean checks with precondition enforcement


def check_pascal(n: int, i: int) -> bool:
    """Pascal-type recurrence; requires i >= 1."""
    if i < 1:
        raise ValueError(f"pascal requires i >= 1, got i={i}")
    lhs, rhs = pascal_sides(n, i)
    return lhs == rhs


def _lemma1_oracle_mismatch(n: int, i: int) -> tuple[str, str] | None:
    # Both sides through the defining product at sampled points, which is
    # independent of the Laurent-ring computation path.
    for q0 in _ORACLE_POINTS:
        lhs = gauss_eval_product(n, i, q0)
        scale = Fraction(q0) ** (n * i - i * (i - 1) // 2)
        rhs = (-1) ** i * scale * gauss_eval_product(i - 1 - n, i, q0)
        if lhs != rhs:
            return f"at q0={q0}: {lhs}", f"at q0={q0}: {rhs}"
    return None


def check_lemma1(n: int, i: int) -> bool:
    """Reflection to a nonnegative top; requires i >= 0.

    Checked symbolically and through the product-formula oracle at
    q0 in {2, 3, 5}, because for n < 0 the symbolic route is the same
    reduction gauss itself performs.
    """
    if i < 0:
        raise ValueError(f"lemma1 requires i >= 0, got i={i}")
    lhs, rhs = lemma1_sides(n, i)
    return lhs == rhs and _lemma1_oracle_mismatch(n, i) is None


def check_lemma2(n: int, a: int) -> bool:
    """Alternating sum collapsing to a single monomial times a coefficient."""
    if a < 0:
        raise ValueError(f"lemma2 requires a >= 0, got a={a}")
    lhs, rhs = lemma2_sides(n, a)
    return lhs == rhs


def check_lemma3(m: int, a: int, t: int) -> bool:
    """Two-coefficient alternating sum; requires 0 <= t <= a <= m."""
    if not 0 <= t <= a <= m:
        raise ValueError(f"lemma3 requires 0 <= t <= a <= m, got (m={m}, a={a}, t={t})")
    lhs, rhs = lemma3_sides(m, a, t)
    return lhs == rhs


def check_theorem2(m: int, a: int, t: int) -> bool:
    """Truncated alternating sum; requires a >= m >= 0 and a >= t >= 0."""
    if m < 0 or t < 0 or a < m or a < t:
        raise ValueError(f"theorem2 requires a >= m >= 0 and a >= t >= 0, got (m={m}, a={a}, t={t})")
    lhs, rhs = theorem2_sides(m, a, t)
    return lhs == rhs


def _corollary1_consistency_mismatch(m: int, a: int) -> tuple[str, str] | None:
    # The corollary must coincide, side by side, with theorem2 at t = a-m.
    lhs, rhs = corollary1_sides(m, a)
    lhs_t, rhs_t = theorem2_sides(m, a, a - m)
    if lhs != lhs_t:
        return f"corollary LHS {lhs}", f"theorem2 LHS {lhs_t}"
    if rhs != rhs_t:
        return f"corollary RHS {rhs}", f"theorem2 RHS {rhs_t}"
    return None


def check_corollary1(m: int, a: int) -> bool:
    """Substitution t = a-m of theorem2; requires 0 <= m <= a.

    Verifies the identity itself and that both sides coincide with the
    theorem2 sides at t = a-m.
    """
    if not 0 <= m <= a:
        raise ValueError(f"corollary1 requires 0 <= m <= a, got (m={m}, a={a})")
    lhs, rhs = corollary1_sides(m, a)
    return lhs == rhs and _corollary1_consistency_mismatch(m, a) is None


# ----------------------------------------------------------------------
# grid sweeps


def _admissible(identity: str, b: GridBounds) -> Iterator[tuple[int, ...]]:
    if identity == "pascal":
        for n in range(b.n_min, b.n_max + 1):
            for i in range(max(b.i_min, 1), b.i_max + 1):
                yield (n, i)
    elif identity == "lemma1":
        for n in range(b.n_min, b.n_max + 1):
            for i in range(max(b.i_min, 0), b.i_max + 1):
                yield (n, i)
    elif identity == "lemma2":
        for n in range(b.n_min, b.n_max + 1):
            for a in range(max(b.i_min, 0), b.i_max + 1):
                yield (n, a)
    elif identity == "lemma3":
        for m in range(b.mat_max + 1):
            for a in range(m + 1):
                for t in range(a + 1):
                    yield (m, a, t)
    elif identity == "theorem2":
        for m in range(b.mat_max + 1):
            for a in range(m, b.mat_max + 1):
                for t in range(a + 1):
                    yield (m, a, t)
    elif identity == "corollary1":
        for m in range(b.mat_max + 1):
            for a in range(m, b.mat_max + 1):
                yield (m, a)
    else:
        raise ValueError(f"unknown identity {identity!r}; expected one of {IDENTITY_IDS}")


_SIDES: dict[str, Callable[..., tuple[LaurentPoly, LaurentPoly]]] = {
    "pascal": pascal_sides,
    "lemma1": lemma1_sides,
    "lemma2": lemma2_sides,
    "lemma3": lemma3_sides,
    "theorem2": theorem2_sides,
    "corollary1": corollary1_sides,
}


def run_grid(identity: str, bounds: GridBounds | None = None, *, sabotage: bool = False) -> IdentityReport:
    """Check one identity over every admissible tuple in bounds.

    Identity violations are data: each failing tuple is recorded with the
    renderings of both sides.  With sabotage=True the RHS is multiplied
    by q before comparison, a deliberate off-by-one in its exponent that
    proves the harness can fail; it exists for negative-control tests.
    """
    bounds = GridBounds() if bounds is None else bounds
    sides = _SIDES[identity] if identity in _SIDES else None
    if sides is None:
        raise ValueError(f"unknown identity {identity!r}; expected one of {IDENTITY_IDS}")
    report = IdentityReport(identity=identity, bounds=bounds)
    for params in _admissible(identity, bounds):
        report.checked += 1
        lhs, rhs = sides(*params)
        if sabotage:
            rhs = rhs.shift(1)
        if lhs != rhs:
            report.failures.append((params, str(lhs), str(rhs)))
            continue
        if not sabotage:
            extra = None
            if identity == "lemma1":
                extra = _lemma1_oracle_mismatch(*params)
            elif identity == "corollary1":
                extra = _corollary1_consistency_mismatch(*params)
            if extra is not None:
                report.failures.append((params, *extra))
    return report
