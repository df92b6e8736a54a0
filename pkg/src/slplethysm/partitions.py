"""Partitions, GL_n / SL_n weights and the n-parametric weight templates.

A :class:`Partition` is stored with trailing zeros trimmed, so equality and
hashing are on canonical form.  A :class:`GLWeight` always carries its ``n``.
A :class:`WeightTemplate` encodes the ``[a, b, 0, ..., 0, c, d]`` notation used
for rows that exist for every sufficiently large ``n``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class InvalidInput(ValueError):
    """Raised when an operation's precondition is violated by its arguments."""


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (trailing zeros trimmed)."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise InvalidInput(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise InvalidInput(f"parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def size(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """0-based part access that returns 0 past the end."""
        return self[i] if i < len(self) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise InvalidInput(f"{list(self)} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(a >= b for a, b in zip(self, other))

    def to_json(self) -> list[int]:
        return list(self)


def partitions(k: int, max_length: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``k`` in reverse lexicographic order."""
    if max_length is None:
        max_length = k
    if max_part is None:
        max_part = k

    def rec(remaining: int, bound: int, slots: int) -> Iterator[list[int]]:
        if remaining == 0:
            yield []
            return
        if slots == 0:
            return
        for p in range(min(remaining, bound), 0, -1):
            for rest in rec(remaining - p, p, slots - 1):
                yield [p] + rest

    for parts in rec(k, max_part, max_length):
        yield Partition(parts)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def dual_partition(lam: Partition, n: int) -> Partition:
    """Partition labelling the dual representation, ``[l1-ln, l1-l(n-1), ..., l1-l2]``.

    For ``length(lam) < n`` this is the usual complement in an ``n x l1`` box
    read backwards; a length-``n`` input is first reduced by its determinant
    power, which keeps the result correct when ``k >= n``.
    """
    lam = Partition(lam)
    if n < 1:
        raise InvalidInput("n must be positive")
    if lam.length() > n:
        raise InvalidInput(f"{list(lam)} has more than n={n} parts")
    p = lam.padded(n)
    top = p[0] if p else 0
    return Partition(top - p[j] for j in range(n - 1, 0, -1))


@dataclass(frozen=True, order=True)
class GLWeight:
    n: int
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if len(self.entries) != self.n:
            raise InvalidInput(f"weight {list(self.entries)} does not have length n={self.n}")

    @classmethod
    def of(cls, entries: Sequence[int]) -> "GLWeight":
        return cls(len(entries), tuple(entries))

    @classmethod
    def trivial(cls, n: int) -> "GLWeight":
        return cls(n, (0,) * n)

    def is_dominant(self) -> bool:
        e = self.entries
        return all(a >= b for a, b in zip(e, e[1:]))

    def require_dominant(self) -> None:
        if not self.is_dominant():
            raise InvalidInput(f"weight {list(self.entries)} is not dominant")

    def total(self) -> int:
        return sum(self.entries)

    def to_json(self) -> dict:
        return {"n": self.n, "entries": list(self.entries)}

    @classmethod
    def from_json(cls, data: dict) -> "GLWeight":
        return cls(int(data["n"]), tuple(data["entries"]))

    def __str__(self) -> str:
        return "[" + ",".join(str(e) for e in self.entries) + "]"


def gl_weight_of_component(nu: Partition, lam1: int, n: int) -> GLWeight:
    """GL weight of ``S_nu`` twisted by ``det^(-lam1)``; zero-sum by construction."""
    nu = Partition(nu)
    if nu.length() > n:
        raise InvalidInput(f"{list(nu)} has more than n={n} parts")
    if nu.size() != n * lam1:
        raise InvalidInput(f"size {nu.size()} of {list(nu)} differs from n*lam1 = {n * lam1}")
    return GLWeight(n, tuple(p - lam1 for p in nu.padded(n)))


def sl_weight(w: GLWeight) -> tuple[int, ...]:
    """``[w_1 - w_n, ..., w_(n-1) - w_n]``."""
    last = w.entries[-1]
    return tuple(e - last for e in w.entries[:-1])


def weight_partition(w: GLWeight) -> Partition:
    """Young diagram of a dominant weight after shifting its last entry to zero."""
    w.require_dominant()
    last = w.entries[-1]
    return Partition(e - last for e in w.entries)


@dataclass(frozen=True, order=True)
class WeightTemplate:
    """The pattern ``[prefix..., 0, ..., 0, ...suffix]``."""

    prefix: tuple[int, ...] = ()
    suffix: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(int(e) for e in self.prefix))
        object.__setattr__(self, "suffix", tuple(int(e) for e in self.suffix))
        pattern = self.prefix + (0,) + self.suffix
        if any(a < b for a, b in zip(pattern, pattern[1:])):
            raise InvalidInput(f"template {self} is not dominant")

    def min_n(self) -> int:
        return len(self.prefix) + len(self.suffix)

    def instantiate(self, n: int) -> GLWeight:
        if n < self.min_n() or n < 1:
            raise InvalidInput(f"template {self} needs n >= {max(self.min_n(), 1)}, got {n}")
        zeros = n - self.min_n()
        return GLWeight(n, self.prefix + (0,) * zeros + self.suffix)

    def __str__(self) -> str:
        inner = [str(e) for e in self.prefix] + ["0", "...", "0"] + [str(e) for e in self.suffix]
        return "[" + ",".join(inner) + "]"

    def to_json(self) -> dict:
        return {"prefix": list(self.prefix), "suffix": list(self.suffix)}

    @classmethod
    def from_json(cls, data: dict) -> "WeightTemplate":
        return cls(tuple(data["prefix"]), tuple(data["suffix"]))


def instantiate(t: WeightTemplate, n: int) -> GLWeight:
    return t.instantiate(n)


def match_template(w: GLWeight) -> WeightTemplate | None:
    """Recover the template of a dominant weight, or ``None`` without an interior zero.

    A weight with no zero entry cannot be told apart from templates with
    longer prefixes or suffixes, so it is reported as a raw weight.
    """
    if not w.is_dominant():
        return None
    e = w.entries
    if 0 not in e:
        return None
    first = e.index(0)
    last = len(e) - 1 - e[::-1].index(0)
    if any(x != 0 for x in e[first:last + 1]):
        return None
    return WeightTemplate(e[:first], e[last + 1:])


_TEMPLATE_RE = re.compile(r"^\[(.*)\]$")


def parse_template(text: str) -> WeightTemplate:
    """Parse the command-line syntax ``[a,b,0*,c,d]``."""
    m = _TEMPLATE_RE.match(text.strip())
    if not m:
        raise InvalidInput(f"template must look like [a,0*,b]: {text!r}")
    items = [s.strip() for s in m.group(1).split(",") if s.strip()]
    if items.count("0*") != 1:
        raise InvalidInput(f"template needs exactly one '0*' block: {text!r}")
    k = items.index("0*")
    try:
        prefix = tuple(int(s) for s in items[:k])
        suffix = tuple(int(s) for s in items[k + 1:])
    except ValueError as exc:
        raise InvalidInput(f"bad template entry in {text!r}") from exc
    return WeightTemplate(prefix, suffix)


def parse_weight(text: str) -> GLWeight:
    """Parse ``[a,b,...]`` into a concrete weight."""
    m = _TEMPLATE_RE.match(text.strip())
    if not m:
        raise InvalidInput(f"weight must look like [a,b,...]: {text!r}")
    try:
        entries = tuple(int(s) for s in m.group(1).split(",") if s.strip())
    except ValueError as exc:
        raise InvalidInput(f"bad weight entry in {text!r}") from exc
    if not entries:
        raise InvalidInput("empty weight")
    return GLWeight.of(entries)
