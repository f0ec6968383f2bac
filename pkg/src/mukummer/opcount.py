"""Field-operation counting.

Every field routine in :mod:`mukummer.field` reports the kind of operation it
performed to the recorder active in the current context, if any.  A recorder
keeps a tally (M, S, m_c, a, s, neg, I), an optional ordered trace, and a
second tally for validation-only work such as square-back checks, so that the
main tally stays comparable to the published cost tables.

Recorders live in a ContextVar, so recordings in different threads (or
asyncio tasks) never see each other's operations.
"""

import contextlib
import contextvars
from dataclasses import dataclass, fields

KINDS = ("M", "S", "m_c", "a", "s", "neg", "I")


@dataclass
class OpTally:
    M: int = 0
    S: int = 0
    m_c: int = 0
    a: int = 0
    s: int = 0
    neg: int = 0
    I: int = 0

    def as_tuple(self):
        return tuple(getattr(self, k) for k in KINDS)

    def __add__(self, other):
        return OpTally(*(x + y for x, y in zip(self.as_tuple(), other.as_tuple())))

    def __sub__(self, other):
        return OpTally(*(x - y for x, y in zip(self.as_tuple(), other.as_tuple())))

    def __str__(self):
        return " + ".join("%d%s" % (getattr(self, f.name), f.name)
                          for f in fields(self) if getattr(self, f.name)) or "0"


class Recorder:
    """Accumulates counts for one recording."""

    def __init__(self, keep_trace=False):
        self.main = OpTally()
        self.validation = OpTally()
        self.trace = [] if keep_trace else None
        self._bucket = self.main

    def count(self, kind):
        t = self._bucket
        setattr(t, kind, getattr(t, kind) + 1)
        if self.trace is not None:
            self.trace.append(kind)

    def event(self, name):
        # Non-arithmetic events (conditional swaps) only show up in traces.
        if self.trace is not None:
            self.trace.append(name)


_current = contextvars.ContextVar("mukummer_opcount", default=None)


def tick(kind):
    r = _current.get()
    if r is not None:
        r.count(kind)


def event(name):
    r = _current.get()
    if r is not None:
        r.event(name)


@contextlib.contextmanager
def recording(keep_trace=False):
    """Context manager yielding a fresh Recorder for the enclosed code."""
    rec = Recorder(keep_trace)
    token = _current.set(rec)
    try:
        yield rec
    finally:
        _current.reset(token)


@contextlib.contextmanager
def validation():
    """Route the enclosed operations to the validation tally."""
    r = _current.get()
    if r is None:
        yield
        return
    saved = r._bucket
    r._bucket = r.validation
    try:
        yield
    finally:
        r._bucket = saved


@contextlib.contextmanager
def paused():
    """Suspend counting entirely (used for setup work inside measurements)."""
    token = _current.set(None)
    try:
        yield
    finally:
        _current.reset(token)


def record(f, *args, **kwargs):
    """Run f(*args, **kwargs) and return (result, OpTally of the main bucket)."""
    with recording() as rec:
        result = f(*args, **kwargs)
    return result, rec.main


def trace(f, *args, **kwargs):
    """Run f and return (result, list of operation kinds in execution order)."""
    with recording(keep_trace=True) as rec:
        result = f(*args, **kwargs)
    return result, rec.trace


def report_line(name, tally):
    """One machine-readable report line: name,M,S,m_c,a,s,neg,I."""
    return ",".join([name] + [str(x) for x in tally.as_tuple()])
