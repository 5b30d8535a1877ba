"""Structured verdicts for identity checks.

A ``Report`` holds one boolean flag per checked identity, the number of
violations per identity, and a bounded list of witnesses (basis index tuples
with both sides of the identity evaluated).
"""

from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

import numpy as np

from .exactnum import format_scalar

DEFAULT_MAX_WITNESSES = 32
_limit = contextvars.ContextVar("witness_limit", default=DEFAULT_MAX_WITNESSES)


def max_witnesses() -> int:
    return _limit.get()


@contextlib.contextmanager
def witness_limit(n: int):
    """Temporarily change how many witnesses a report keeps."""
    if n < 0:
        raise ValueError("witness limit must be nonnegative")
    token = _limit.set(n)
    try:
        yield
    finally:
        _limit.reset(token)


@dataclass(frozen=True)
class Witness:
    identity: str
    args: tuple
    lhs: Any
    rhs: Any


def _plain(value):
    """Exact value to nested lists of strings (for rendering and JSON)."""
    if isinstance(value, np.ndarray):
        return [_plain(v) for v in value]
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, str):
        return value
    return format_scalar(value)


def subscript(k: int) -> str:
    return str(k).translate(str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉"))


def default_basis(n: int) -> tuple:
    return tuple(f"e{subscript(i + 1)}" for i in range(n))


@dataclass
class Report:
    name: str
    flags: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    applicable: bool = True

    @property
    def ok(self) -> bool:
        return self.applicable and all(self.flags.values())

    def __bool__(self):
        return self.ok

    def failed(self) -> list:
        return [k for k, v in self.flags.items() if not v]

    def extend(self, other: "Report", prefix: str = "") -> "Report":
        """Merge another report's flags and witnesses into this one."""
        for k, v in other.flags.items():
            self.flags[prefix + k] = v
        for k, v in other.counts.items():
            self.counts[prefix + k] = v
        room = max_witnesses() - len(self.witnesses)
        for w in other.witnesses[: max(room, 0)]:
            self.witnesses.append(Witness(prefix + w.identity, w.args, w.lhs, w.rhs))
        self.notes.extend(other.notes)
        self.applicable = self.applicable and other.applicable
        return self

    def to_dict(self, basis: Sequence[str] | None = None) -> dict:
        def name(i):
            if isinstance(i, str):
                return i
            return basis[i] if basis is not None and i < len(basis) else f"e{subscript(i + 1)}"

        return {
            "name": self.name,
            "ok": self.ok,
            "applicable": self.applicable,
            "flags": dict(self.flags),
            "violations": dict(self.counts),
            "witnesses": [
                {
                    "identity": w.identity,
                    "args": [name(a) for a in w.args],
                    "lhs": _plain(w.lhs),
                    "rhs": _plain(w.rhs),
                }
                for w in self.witnesses
            ],
            "notes": list(self.notes),
        }

    def render(self, basis: Sequence[str] | None = None, verdict: bool = True, show=None) -> str:
        """Text form. With ``verdict=False`` the header carries no PASS/FAIL;
        ``show`` filters which identities get their witnesses printed."""
        d = self.to_dict(basis)
        status = "PASS" if self.ok else ("N/A" if not self.applicable else "FAIL")
        lines = [f"{self.name}: {status}" if verdict else f"{self.name}:"]
        for k, v in d["flags"].items():
            count = d["violations"].get(k)
            extra = f" ({count} violation{'' if count == 1 else 's'})" if count else ""
            lines.append(f"  {k}: {'yes' if v else 'no'}{extra}")
        for w in d["witnesses"]:
            if show is not None and not show(w["identity"]):
                continue
            lines.append(f"  witness {w['identity']} at ({', '.join(w['args'])}): lhs={w['lhs']} rhs={w['rhs']}")
        for n in d["notes"]:
            lines.append(f"  note: {n}")
        return "\n".join(lines)


class Checker:
    """Accumulates identity comparisons into a :class:`Report`."""

    def __init__(self, name: str):
        self.report = Report(name)

    def flag(self, identity: str, ok: bool, note: str | None = None, count: int | None = None):
        self.report.flags[identity] = bool(ok)
        self.report.counts[identity] = 0 if ok else (1 if count is None else count)
        if not ok and note:
            self.report.notes.append(note)
        return bool(ok)

    def compare(
        self,
        identity: str,
        lhs,
        rhs,
        value_ndim: int = 1,
        decode: Callable[..., tuple] | None = None,
        mask=None,
    ) -> bool:
        """Compare two arrays indexed by basis tuples.

        The trailing ``value_ndim`` axes hold the compared values (a vector, a
        matrix, or nothing for scalars). ``decode`` maps a leading index tuple
        to the basis tuple shown in witnesses; ``mask`` restricts which leading
        tuples are checked.
        """
        lhs = np.asarray(lhs, dtype=object)
        rhs = np.asarray(rhs, dtype=object)
        if lhs.shape != rhs.shape:
            raise ValueError(f"{identity}: shape mismatch {lhs.shape} vs {rhs.shape}")
        bad = np.asarray(lhs != rhs, dtype=bool)
        if value_ndim:
            bad = bad.reshape(bad.shape[: bad.ndim - value_ndim] + (-1,)).any(axis=-1)
        if mask is not None:
            bad &= np.asarray(mask, dtype=bool)
        count = int(bad.sum())
        self.report.flags[identity] = count == 0
        self.report.counts[identity] = count
        if count:
            room = max_witnesses() - len(self.report.witnesses)
            for idx in np.argwhere(bad)[: max(room, 0)]:
                idx = tuple(int(i) for i in idx)
                args = decode(*idx) if decode else idx
                self.report.witnesses.append(Witness(identity, tuple(args), lhs[idx], rhs[idx]))
        return count == 0

    def note(self, text: str):
        self.report.notes.append(text)

    def done(self) -> Report:
        return self.report
