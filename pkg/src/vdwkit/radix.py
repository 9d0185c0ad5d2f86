"""Integer radix expansions and floor logarithms.

Digits are kept most significant first, so to_radix(178, 5) gives
(1, 2, 0, 3).  Every verdict-bearing operation here is pure integer
arithmetic; the one function allowed near floating point is
log_display, which exists for table output and nothing else, and even
that runs on decimal with guard digits rather than binary floats.
"""
from __future__ import annotations

import decimal
from bisect import bisect_right
from dataclasses import dataclass

# Cache of [1, b, b^2, ...] per base, grown on demand.  floor_log is a
# bisect over this list, which keeps the full-range property sweeps fast
# while staying repeated-multiplication underneath.
_powers: dict[int, list[int]] = {}


def _check_value_base(value: int, base: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ValueError(f"need a positive integer value, got {value!r}")
    if not isinstance(base, int) or isinstance(base, bool) or base < 2:
        raise ValueError(f"need an integer base >= 2, got {base!r}")


def _powers_for(base: int, value: int) -> list[int]:
    table = _powers.get(base)
    if table is None:
        table = [1]
        _powers[base] = table
    while table[-1] <= value:
        table.append(table[-1] * base)
    return table


def floor_log(value: int, base: int) -> int:
    """The unique n with base**n <= value < base**(n+1)."""
    _check_value_base(value, base)
    table = _powers_for(base, value)
    # table[-1] > value >= 1 = table[0], so the insertion point is >= 1
    return bisect_right(table, value) - 1


@dataclass(frozen=True)
class RadixRep:
    """A positive integer together with its digit expansion in some base.

    Invariants enforced at construction: the leading digit is nonzero,
    every digit lies in [0, base-1], the digits reconstruct the value,
    and exponent + 1 equals the digit count.  Together these imply
    base**exponent <= value < base**(exponent+1).
    """

    value: int
    base: int
    digits: tuple[int, ...]
    exponent: int

    def __post_init__(self):
        _check_value_base(self.value, self.base)
        digits = tuple(self.digits)
        object.__setattr__(self, "digits", digits)
        if not digits:
            raise ValueError("digit sequence is empty")
        if digits[0] < 1:
            raise ValueError(f"leading digit must be >= 1, got {digits[0]!r}")
        acc = 0
        for d in digits:
            if not 0 <= d < self.base:
                raise ValueError(f"digit {d!r} out of range for base {self.base}")
            acc = acc * self.base + d
        if acc != self.value:
            raise ValueError(
                f"digits {digits!r} reconstruct to {acc}, not {self.value}"
            )
        if self.exponent != len(digits) - 1:
            raise ValueError(
                f"exponent {self.exponent!r} does not match {len(digits)} digits"
            )

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "base": self.base,
            "digits": list(self.digits),
            "exponent": self.exponent,
        }


@dataclass(frozen=True)
class Interval:
    """Half-open integer interval [low, high)."""

    low: int
    high: int

    def __post_init__(self):
        if self.low >= self.high:
            raise ValueError(f"need low < high, got [{self.low}, {self.high})")

    def __contains__(self, value: int) -> bool:
        return self.low <= value < self.high

    def as_dict(self) -> dict:
        return {"low": self.low, "high": self.high}


def to_radix(value: int, base: int) -> RadixRep:
    """Digit expansion of value in the given base, most significant first."""
    _check_value_base(value, base)
    digs = []
    v = value
    while v:
        v, d = divmod(v, base)
        digs.append(d)
    digs.reverse()
    # Built by construction to satisfy every invariant; skip the
    # re-validation pass so full-range sweeps stay cheap.
    rep = object.__new__(RadixRep)
    object.__setattr__(rep, "value", value)
    object.__setattr__(rep, "base", base)
    object.__setattr__(rep, "digits", tuple(digs))
    object.__setattr__(rep, "exponent", len(digs) - 1)
    return rep


def from_radix(rep, base: int | None = None) -> int:
    """Reconstruct the integer from a RadixRep or a digit sequence plus base.

    Rejects empty or out-of-range digits and a leading zero.  When given
    a RadixRep the reconstruction is also checked against its stored value.
    """
    if isinstance(rep, RadixRep):
        digits, b, expect = rep.digits, rep.base, rep.value
    else:
        if base is None:
            raise ValueError("a digit sequence needs an explicit base")
        digits, b, expect = tuple(rep), base, None
    if not isinstance(b, int) or isinstance(b, bool) or b < 2:
        raise ValueError(f"need an integer base >= 2, got {b!r}")
    if not digits:
        raise ValueError("digit sequence is empty")
    if digits[0] == 0:
        raise ValueError("leading digit is zero")
    acc = 0
    for d in digits:
        if not isinstance(d, int) or isinstance(d, bool) or not 0 <= d < b:
            raise ValueError(f"digit {d!r} out of range for base {b}")
        acc = acc * b + d
    if expect is not None and acc != expect:
        raise ValueError(f"digits reconstruct to {acc}, not the stored {expect}")
    return acc


def containing_interval(value: int, base: int) -> Interval:
    """The half-open interval [base**n, base**(n+1)) holding value."""
    n = floor_log(value, base)
    table = _powers_for(base, value)
    return Interval(table[n], table[n + 1])


def dual_interval_intersection(value: int, r: int, k: int) -> Interval:
    """Intersection of the base-r and base-k containing intervals of value.

    Nonempty by construction since value lies in both.
    """
    a = containing_interval(value, r)
    b = containing_interval(value, k)
    low = max(a.low, b.low)
    high = min(a.high, b.high)
    inter = Interval(low, high)
    if value not in inter:
        raise AssertionError(
            f"{value} escaped its own interval intersection [{low}, {high})"
        )
    return inter


def log_display(value: int, base: int, places: int) -> str:
    """log_base(value) rounded to `places` decimals, as a string.

    Display-only: bounds logic never consumes this.  Exact powers short
    circuit to an integer result so no rounding artifact can print, and
    everything else is evaluated with generous guard digits.
    """
    _check_value_base(value, base)
    if not isinstance(places, int) or isinstance(places, bool) or places < 1:
        raise ValueError(f"need a positive integer number of places, got {places!r}")
    n = floor_log(value, base)
    quantum = decimal.Decimal(1).scaleb(-places)
    with decimal.localcontext() as ctx:
        ctx.prec = places + 25
        if _powers_for(base, value)[n] == value:
            result = decimal.Decimal(n).quantize(quantum)
        else:
            log = decimal.Decimal(value).ln() / decimal.Decimal(base).ln()
            result = log.quantize(quantum, rounding=decimal.ROUND_HALF_EVEN)
    return str(result)
