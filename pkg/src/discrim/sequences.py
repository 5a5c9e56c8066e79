"""Sequence providers: the flagship 3^j-based sequence and generic specs.

The flagship sequence is u_j = (3^j - 5(-1)^j)/4, equivalently the recurrence
u_n = 2u_{n-1} + 3u_{n-2} with u_1 = 2, u_2 = 1. Generic second-order linear
recurrences and polynomial sequences feed the same discriminator engine.
"""

from __future__ import annotations

from dataclasses import dataclass, field

SALAJAN = "salajan"
LINEAR_RECURRENCE = "linear_recurrence"
POLYNOMIAL = "polynomial"

DEFAULT_EXACT_CAP = 200_000


class CapExceeded(RuntimeError):
    """A step or search budget ran out before the computation could finish."""


class SequenceNotAdmissible(ValueError):
    """The sequence repeats a term, so no modulus can separate its prefix."""


@dataclass(frozen=True)
class SequenceSpec:
    kind: str
    coeffs: tuple[int, ...] = ()   # linear_recurrence: (c1, c2); polynomial: (a0, a1, ...)
    initial: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.kind == SALAJAN:
            if self.coeffs or self.initial:
                raise ValueError("salajan spec takes no parameters")
        elif self.kind == LINEAR_RECURRENCE:
            if len(self.coeffs) != 2 or len(self.initial) != 2:
                raise ValueError("linear recurrence needs coefficients (c1, c2) and initial (v1, v2)")
        elif self.kind == POLYNOMIAL:
            if not self.coeffs or self.initial:
                raise ValueError("polynomial needs a nonempty coefficient list and no initial terms")
        else:
            raise ValueError(f"unknown sequence kind {self.kind!r}")

    def as_recurrence(self) -> tuple[int, int, int, int]:
        """(c1, c2, v1, v2) for recurrence kinds; rejects polynomials."""
        if self.kind == SALAJAN:
            return 2, 3, 2, 1
        if self.kind == LINEAR_RECURRENCE:
            return self.coeffs[0], self.coeffs[1], self.initial[0], self.initial[1]
        raise ValueError("polynomial sequences have no recurrence form")

    def text(self) -> str:
        if self.kind == SALAJAN:
            return "salajan"
        if self.kind == LINEAR_RECURRENCE:
            return "linrec:" + ",".join(map(str, self.coeffs + self.initial))
        return "poly:" + ",".join(map(str, self.coeffs))


def salajan() -> SequenceSpec:
    return SequenceSpec(SALAJAN)


def linear_recurrence(c1: int, c2: int, v1: int, v2: int) -> SequenceSpec:
    return SequenceSpec(LINEAR_RECURRENCE, (c1, c2), (v1, v2))


def polynomial(*coeffs: int) -> SequenceSpec:
    return SequenceSpec(POLYNOMIAL, tuple(coeffs))


def parse_spec(text: str) -> SequenceSpec:
    """Parse the CLI text form: salajan | linrec:c1,c2,v1,v2 | poly:a0,a1,..."""
    text = text.strip()
    if text == "salajan":
        return salajan()
    head, sep, body = text.partition(":")
    if not sep:
        raise ValueError(f"malformed sequence spec {text!r}")
    try:
        nums = [int(part) for part in body.split(",")] if body else []
    except ValueError:
        raise ValueError(f"non-integer parameter in sequence spec {text!r}") from None
    if head == "linrec":
        if len(nums) != 4:
            raise ValueError("linrec spec needs exactly c1,c2,v1,v2")
        return linear_recurrence(*nums)
    if head == "poly":
        if not nums:
            raise ValueError("poly spec needs at least one coefficient")
        return polynomial(*nums)
    raise ValueError(f"unknown sequence kind {head!r}")


def salajan_term_exact(j: int, cap: int = DEFAULT_EXACT_CAP) -> int:
    """Exact u_j = (3^j - 5(-1)^j)/4; refuses j > cap to bound memory."""
    if j < 1:
        raise ValueError("index must be positive")
    if j > cap:
        raise CapExceeded(f"exact term index {j} exceeds cap {cap}")
    sign = -1 if j % 2 else 1
    num = 3**j - 5 * sign
    return num // 4


def salajan_term_mod(j: int, m: int) -> int:
    """u_j mod m in O(log j) time.

    Works modulo 4m so that the numerator 3^j - 5(-1)^j, which is exactly
    divisible by 4, can be divided without needing 4 to be invertible mod m.
    """
    if j < 1:
        raise ValueError("index must be positive")
    if m < 1:
        raise ValueError("modulus must be positive")
    four_m = 4 * m
    sign = -1 if j % 2 else 1
    t = (pow(3, j, four_m) - 5 * sign) % four_m
    return (t >> 2) % m


def _poly_eval(coeffs: tuple[int, ...], j: int) -> int:
    acc = 0
    for a in reversed(coeffs):
        acc = acc * j + a
    return acc


def term_exact(spec: SequenceSpec, j: int, cap: int = DEFAULT_EXACT_CAP) -> int:
    """Exact j-th term of any spec (test-oracle path, arbitrary precision)."""
    if j < 1:
        raise ValueError("index must be positive")
    if spec.kind == SALAJAN:
        return salajan_term_exact(j, cap)
    if spec.kind == POLYNOMIAL:
        return _poly_eval(spec.coeffs, j)
    if j > cap:
        raise CapExceeded(f"exact term index {j} exceeds cap {cap}")
    c1, c2, v1, v2 = spec.as_recurrence()
    if j == 1:
        return v1
    x, y = v1, v2
    for _ in range(j - 2):
        x, y = y, c1 * y + c2 * x
    return y


def residue_iter(spec: SequenceSpec, m: int):
    """Yield v_1 mod m, v_2 mod m, ... with constant work per step."""
    if m < 1:
        raise ValueError("modulus must be positive")
    if spec.kind == POLYNOMIAL:
        coeffs = spec.coeffs
        j = 1
        while True:
            yield _poly_eval(coeffs, j) % m
            j += 1
    else:
        c1, c2, v1, v2 = spec.as_recurrence()
        x = v1 % m
        y = v2 % m
        yield x
        while True:
            yield y
            x, y = y, (c1 * y + c2 * x) % m


def stream_residues(spec: SequenceSpec, m: int, count: int) -> list[int]:
    """First `count` residues of the sequence mod m."""
    if count < 1:
        raise ValueError("count must be positive")
    it = residue_iter(spec, m)
    return [next(it) for _ in range(count)]


def distinct_prefix_length(spec: SequenceSpec, m: int, limit: int) -> int:
    """min(iota(m), limit): how many leading terms stay pairwise distinct mod m.

    Streams residues into a set and stops at the first repeat or at `limit`,
    whichever comes first. This is the shared engine behind the single-modulus
    discriminator check and the incongruence index.
    """
    if m < 1:
        raise ValueError("modulus must be positive")
    if limit < 1:
        raise ValueError("limit must be positive")
    if spec.kind == POLYNOMIAL:
        seen = set()
        add = seen.add
        k = 0
        for r in residue_iter(spec, m):
            if r in seen:
                return k
            add(r)
            k += 1
            if k >= limit:
                return k
        raise AssertionError("unreachable")  # pragma: no cover
    c1, c2, v1, v2 = spec.as_recurrence()
    x = v1 % m
    if limit == 1:
        return 1
    y = v2 % m
    if y == x:
        return 1
    seen = {x, y}
    add = seen.add
    k = 2
    while k < limit:
        x, y = y, (c1 * y + c2 * x) % m
        if y in seen:
            return k
        add(y)
        k += 1
    return k
