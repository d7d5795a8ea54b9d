"""Diagonal quadratic forms and their semiring operations."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..errors import ZeroGenerator
from ..fields.base import Status, lift, status


class DiagonalForm:
    """The form ``a1*x1^2 + ... + an*xn^2``, written ``<a1, ..., an>``."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        entries = tuple(lift(a) for a in entries)
        if not entries:
            raise ValueError("a form needs at least one entry")
        for a in entries:
            if status(a) is Status.ZERO:
                raise ValueError("diagonal entries must be nonzero")
        self.entries = entries

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def evaluate(self, x):
        if len(x) != self.dim:
            raise ValueError(f"need {self.dim} coordinates, got {len(x)}")
        total = 0
        for a, xi in zip(self.entries, x):
            if status(xi) is Status.ZERO:
                continue
            total = a * xi * xi + total
        return total

    __call__ = evaluate

    def scaled(self, c) -> DiagonalForm:
        return DiagonalForm(c * a for a in self.entries)

    def same_entries(self, other: DiagonalForm) -> bool:
        """Multiset equality of entries (entries may be unhashable)."""
        if self.dim != other.dim:
            return False
        pool = list(other.entries)
        for a in self.entries:
            for k, b in enumerate(pool):
                if a == b:
                    del pool[k]
                    break
            else:
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, DiagonalForm):
            return NotImplemented
        return self.same_entries(other)

    __hash__ = None

    def __repr__(self):
        return "<" + ", ".join(str(a) for a in self.entries) + ">"


def orth_sum(q1: DiagonalForm, q2: DiagonalForm) -> DiagonalForm:
    return DiagonalForm(q1.entries + q2.entries)


def tensor(q1: DiagonalForm, q2: DiagonalForm) -> DiagonalForm:
    """All products ``a_i * b_j`` in row-major order."""
    return DiagonalForm(a * b for a in q1.entries for b in q2.entries)


def pfister(*gens) -> DiagonalForm:
    """``<1, a1> (x) ... (x) <1, aq>``; the empty product is ``<1>``."""
    form = DiagonalForm((1,))
    for a in gens:
        if status(a) is Status.ZERO:
            raise ZeroGenerator("Pfister generators must be nonzero")
        form = tensor(form, DiagonalForm((1, a)))
    return form


@dataclass
class IsotropyVerdict:
    """Outcome of an isotropy question.

    ``decided`` is False when the verdict comes from a bounded search that found
    nothing: that is not a proof of anisotropy.  ``precision`` is the T-adic
    precision to which a lifted witness zeroes the form (infinite for exact ones).
    """

    isotropic: bool
    witness: tuple | None = None
    decided: bool = True
    precision: float = math.inf
    note: str = ""
    details: dict = field(default_factory=dict)
