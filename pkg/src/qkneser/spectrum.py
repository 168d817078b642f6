"""Eigenvalues and multiplicities of the q-Kneser graph qK(v, k).

qK(v, k) has the k-dimensional subspaces of F_q^v as vertices, adjacent
when they intersect trivially.  For v >= 2k its distinct eigenvalues are
indexed by j = 0..k and admit two closed forms, both implemented here as
first-class operations on exact Laurent polynomials:

  delsarte_eigenvalue(v, k, j) =
      (-1)^j q^((k-j)j + C(j,2)) *
      sum_{s=0}^{k-j} (-1)^s q^C(s,2) [k-j s] [v-2j-s v-k-j]

  simple_eigenvalue(v, k, j) =
      (-1)^j q^(C(k,2) + C(k-j+1,2)) [v-k-j v-2k]

Their symbolic equality over a parameter grid is the central acceptance
test of this package.  The multiplicity of the j-th eigenvalue is 1 for
j = 0 and [v j] - [v j-1] for j >= 1; the j = 0 case is an explicit
branch, not a [v -1] := 0 convention.

For k <= v < 2k the graph is null (no two k-subspaces can intersect
trivially), and all operations here reject that range.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import factor_prime_power
from .laurent import ONE, LaurentPoly
from .qbinom import gauss


@dataclass(frozen=True)
class SpectrumEntry:
    """One eigenspace: index j, eigenvalue, multiplicity.

    Symbolic tables hold LaurentPoly values; evaluated tables hold ints.
    """

    j: int
    eigenvalue: LaurentPoly | int
    multiplicity: LaurentPoly | int


@dataclass(frozen=True)
class SpectrumTable:
    """The full spectrum of qK(v, k): k+1 entries ordered by j.

    q is None for a symbolic table and the evaluation point otherwise.
    """

    v: int
    k: int
    q: int | None
    entries: tuple[SpectrumEntry, ...]

    def eigenvalues(self) -> list[LaurentPoly | int]:
        return [entry.eigenvalue for entry in self.entries]

    def multiplicities(self) -> list[LaurentPoly | int]:
        return [entry.multiplicity for entry in self.entries]

    def to_json_dict(self) -> dict:
        def cell(value: LaurentPoly | int) -> str | int:
            return value if isinstance(value, int) else str(value)

        return {
            "v": self.v,
            "k": self.k,
            "q": self.q,
            "entries": [
                {"j": e.j, "eigenvalue": cell(e.eigenvalue), "multiplicity": cell(e.multiplicity)}
                for e in self.entries
            ],
        }


def _validate_vkj(v: int, k: int, j: int | None, *, min_k: int) -> None:
    if k < min_k:
        raise ValueError(f"k must be >= {min_k}, got k={k}")
    if v < 2 * k:
        if v >= k:
            raise ValueError(
                f"qK({v},{k}) is the null graph (for k <= v < 2k no two "
                f"k-subspaces intersect trivially); need v >= 2k"
            )
        raise ValueError(f"need v >= 2k, got v={v}, k={k}")
    if j is not None and not 0 <= j <= k:
        raise ValueError(f"eigenvalue index must satisfy 0 <= j <= k, got j={j}")


def delsarte_eigenvalue(v: int, k: int, j: int) -> LaurentPoly:
    """The alternating-sum form of the j-th eigenvalue of qK(v, k)."""
    _validate_vkj(v, k, j, min_k=0)
    inner = LaurentPoly.zero()
    for s in range(k - j + 1):
        piece = (gauss(k - j, s) * gauss(v - 2 * j - s, v - k - j)).shift(s * (s - 1) // 2)
        inner = inner + (-piece if s % 2 else piece)
    result = inner.shift((k - j) * j + j * (j - 1) // 2)
    return -result if j % 2 else result


def simple_eigenvalue(v: int, k: int, j: int) -> LaurentPoly:
    """The closed single-coefficient form of the j-th eigenvalue of qK(v, k)."""
    _validate_vkj(v, k, j, min_k=0)
    result = gauss(v - k - j, v - 2 * k).shift(k * (k - 1) // 2 + (k - j + 1) * (k - j) // 2)
    return -result if j % 2 else result


def multiplicity(v: int, k: int, j: int) -> LaurentPoly:
    """Multiplicity of the j-th eigenvalue: 1 for j = 0, else [v j] - [v j-1]."""
    _validate_vkj(v, k, j, min_k=1)
    if j == 0:
        return ONE
    return gauss(v, j) - gauss(v, j - 1)


def spectrum_table(v: int, k: int, q0: int | None = None) -> SpectrumTable:
    """Spectrum of qK(v, k): symbolic, or evaluated at a prime power q0.

    Uses the closed eigenvalue form.  Requires v >= 2k >= 2; an evaluated
    table requires q0 to be a prime power (the graph needs an actual
    field, unlike the purely polynomial identities).
    """
    _validate_vkj(v, k, None, min_k=1)
    if q0 is not None:
        factor_prime_power(q0)  # raises for non-prime-powers and q0 < 2
    entries = []
    for j in range(k + 1):
        eig = simple_eigenvalue(v, k, j)
        mult = multiplicity(v, k, j)
        if q0 is None:
            entries.append(SpectrumEntry(j, eig, mult))
        else:
            # both are honest polynomials for v >= 2k, so the values are integers
            eig_at = eig.evaluate(q0)
            mult_at = mult.evaluate(q0)
            assert eig_at.denominator == 1 and mult_at.denominator == 1
            entries.append(SpectrumEntry(j, int(eig_at), int(mult_at)))
    return SpectrumTable(v=v, k=k, q=q0, entries=tuple(entries))
