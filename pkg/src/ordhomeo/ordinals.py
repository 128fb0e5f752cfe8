"""Ordinals below epsilon-0 in Cantor normal form.

An ordinal is a finite sum  w^e1*c1 + ... + w^ek*ck  with strictly
decreasing exponents (themselves ordinals) and positive integer
coefficients; the empty sum is 0.  The representation is canonical, so
structural equality is value equality.  All values are immutable and
hashable, and every operation here is pure.

Points of an uncountable well-ordered segment are modelled by these
values: every construction in the package, run at desk scale, stays far
below epsilon-0.  "Unbounded" claims are rendered as "holds above every
representable bound".

Conventions used throughout:
  * rank(x) is the exponent of the last CNF term (the Cantor-Bendixson
    rank of x as a point of a large enough segment); rank(0) = 0 since 0
    is isolated.
  * a nesting-depth cap (default 32) guards `omega_pow` towers; blowing
    it raises ResourceError rather than silently truncating.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import DomainError, ParseError, ResourceError

DEFAULT_DEPTH_CAP = 32

_Terms = tuple  # tuple[tuple["Ordinal", int], ...]


class Ordinal:
    """A CNF ordinal.  `Ordinal(n)` builds a finite value; everything
    else comes out of the arithmetic below.  Supports +, *, comparisons,
    and hashing; ints coerce in mixed expressions."""

    __slots__ = ("_terms", "_hash")

    def __new__(cls, value: int = 0) -> "Ordinal":
        if isinstance(value, Ordinal):
            return value
        if not isinstance(value, int):
            raise TypeError(f"cannot build an ordinal from {type(value).__name__}")
        if value < 0:
            raise DomainError("ordinals are non-negative")
        if value < len(_small):
            return _small[value]
        return _make(((ZERO, value),))

    @property
    def terms(self) -> _Terms:
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_finite(self) -> bool:
        return not self._terms or self._terms[0][0].is_zero

    @property
    def leading_exponent(self) -> "Ordinal":
        """Exponent of the largest term; 0 for the ordinal 0."""
        return self._terms[0][0] if self._terms else ZERO

    def __int__(self) -> int:
        if not self.is_finite:
            raise DomainError(f"{self} is infinite")
        return self._terms[0][1] if self._terms else 0

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(self._terms)
            object.__setattr__(self, "_hash", h)
        return h

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("Ordinal values are immutable")

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Ordinal(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self is other or self._terms == other._terms

    def __ne__(self, other) -> bool:
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __lt__(self, other) -> bool:
        if isinstance(other, int):
            other = Ordinal(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return _cmp(self, other) < 0

    def __le__(self, other) -> bool:
        if isinstance(other, int):
            other = Ordinal(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return _cmp(self, other) <= 0

    def __gt__(self, other) -> bool:
        if isinstance(other, int):
            other = Ordinal(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return _cmp(self, other) > 0

    def __ge__(self, other) -> bool:
        if isinstance(other, int):
            other = Ordinal(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return _cmp(self, other) >= 0

    def __add__(self, other) -> "Ordinal":
        if isinstance(other, int):
            other = Ordinal(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return _add(self, other)

    def __radd__(self, other) -> "Ordinal":
        if isinstance(other, int):
            return _add(Ordinal(other), self)
        return NotImplemented

    def __mul__(self, other) -> "Ordinal":
        if isinstance(other, int):
            other = Ordinal(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return _mul(self, other)

    def __rmul__(self, other) -> "Ordinal":
        if isinstance(other, int):
            return _mul(Ordinal(other), self)
        return NotImplemented

    def __repr__(self) -> str:
        return format_ordinal(self)


def _make(terms: _Terms) -> Ordinal:
    o = object.__new__(Ordinal)
    object.__setattr__(o, "_terms", terms)
    object.__setattr__(o, "_hash", None)
    if __debug__:
        for (ea, ca), (eb, cb) in zip(terms, terms[1:]):
            assert _cmp(ea, eb) > 0, "exponents must strictly decrease"
        assert all(c >= 1 for _, c in terms), "coefficients must be positive"
    return o


def _cmp(a: Ordinal, b: Ordinal) -> int:
    if a is b:
        return 0
    for (ea, ca), (eb, cb) in zip(a._terms, b._terms):
        k = _cmp(ea, eb)
        if k:
            return k
        if ca != cb:
            return -1 if ca < cb else 1
    if len(a._terms) != len(b._terms):
        return -1 if len(a._terms) < len(b._terms) else 1
    return 0


def _add(a: Ordinal, b: Ordinal) -> Ordinal:
    if not b._terms:
        return a
    if not a._terms:
        return b
    e = b._terms[0][0]
    i = 0
    at = a._terms
    while i < len(at) and _cmp(at[i][0], e) > 0:
        i += 1
    if i < len(at) and _cmp(at[i][0], e) == 0:
        merged = (e, at[i][1] + b._terms[0][1])
        return _make(at[:i] + (merged,) + b._terms[1:])
    return _make(at[:i] + b._terms)


def _mul(a: Ordinal, b: Ordinal) -> Ordinal:
    if not a._terms or not b._terms:
        return ZERO
    lead = a._terms[0][0]
    out = []
    for e, c in b._terms:
        if e._terms:
            out.append((_add(lead, e), c))
        else:
            # finite factor distributes into a's leading coefficient
            out.append((lead, a._terms[0][1] * c))
            out.extend(a._terms[1:])
    return _make(tuple(out))


ZERO = _make(())
_small = [ZERO] + [_make(((ZERO, n),)) for n in range(1, 65)]
ONE = _small[1]
OMEGA = _make(((ONE, 1),))


def compare(a: Ordinal, b: Ordinal) -> str:
    """Total order as a three-way token: "LT", "EQ", or "GT"."""
    k = _cmp(a, b)
    return "LT" if k < 0 else "GT" if k > 0 else "EQ"


def left_subtract(a: Ordinal, b: Ordinal) -> Ordinal:
    """The unique xi with a + xi = b, defined for a <= b."""
    if a > b:
        raise DomainError(f"left_subtract: {a} > {b}")
    at, bt = a._terms, b._terms
    i = 0
    while i < len(at) and i < len(bt) and at[i] == bt[i]:
        i += 1
    if i == len(at):
        return _make(bt[i:])
    ea, ca = at[i]
    eb, cb = bt[i]
    if ea == eb:
        return _make(((ea, cb - ca),) + bt[i + 1:])
    return _make(bt[i:])


def nesting_depth(x: Ordinal) -> int:
    """Height of the exponent tower: 0 for 0, 1 for finite values,
    1 + max exponent depth otherwise."""
    if not x._terms:
        return 0
    return 1 + max(nesting_depth(e) for e, _ in x._terms)


def omega_pow(e: Ordinal, depth_cap: int = DEFAULT_DEPTH_CAP) -> Ordinal:
    """w raised to the ordinal e, as a single CNF term."""
    e = Ordinal(e) if isinstance(e, int) else e
    if 1 + nesting_depth(e) > depth_cap:
        raise ResourceError(f"exponent tower deeper than {depth_cap}")
    return _make(((e, 1),))


def rank(x: Ordinal) -> Ordinal:
    """Exponent of the last CNF term; rank(0) = 0 (0 is isolated)."""
    if not x._terms:
        return ZERO
    return x._terms[-1][0]


@dataclass(frozen=True)
class PointClass:
    kind: str  # "zero" | "successor" | "limit"
    predecessor: Optional[Ordinal] = None


def classify(x: Ordinal) -> PointClass:
    if not x._terms:
        return PointClass("zero")
    e, c = x._terms[-1]
    if e.is_zero:
        if c == 1:
            pred = _make(x._terms[:-1])
        else:
            pred = _make(x._terms[:-1] + ((e, c - 1),))
        return PointClass("successor", pred)
    return PointClass("limit")


def absorb_threshold(a: Ordinal) -> Ordinal:
    """Least s with a + s = s, for a > 0 (every s with a larger leading
    exponent absorbs a).  Returns 1 for a = 0; callers wanting "any s"
    must treat 0 specially."""
    if not a._terms:
        return ONE
    return omega_pow(_add(a.leading_exponent, ONE))


def diff_exponent(a: Ordinal, b: Ordinal) -> Optional[Ordinal]:
    """Largest exponent whose coefficient differs between the CNFs of a
    and b; None iff a = b.  Drives the fixed-point solver through
    a + s = b + s  iff  s >= w^(diff_exponent(a, b) + 1)."""
    at, bt = a._terms, b._terms
    i = 0
    while i < len(at) and i < len(bt) and at[i] == bt[i]:
        i += 1
    if i == len(at) and i == len(bt):
        return None
    if i == len(at):
        return bt[i][0]
    if i == len(bt):
        return at[i][0]
    ea, eb = at[i][0], bt[i][0]
    return ea if _cmp(ea, eb) >= 0 else eb


def in_derived(x: Ordinal, alpha: Ordinal) -> bool:
    """Whether x survives alpha rounds of removing isolated points."""
    if not x._terms:
        return alpha.is_zero
    return rank(x) >= alpha


def enumerate_level(alpha: Ordinal, lo: Ordinal, hi: Ordinal,
                    max_count: int) -> list[Ordinal]:
    """The first max_count points of rank exactly alpha in ]lo, hi],
    in increasing order."""
    if lo > hi:
        raise DomainError(f"enumerate_level: empty range ]{lo}, {hi}]")
    step = omega_pow(alpha)
    # least rank-alpha point above lo: drop the terms below alpha, then
    # bump by one copy of w^alpha
    kept = tuple(t for t in lo._terms if _cmp(t[0], alpha) >= 0)
    t = _add(_make(kept), step)
    out: list[Ordinal] = []
    while len(out) < max_count and t <= hi:
        out.append(t)
        t = _add(t, step)
    return out


def isolating_left_endpoint(y: Ordinal) -> Ordinal:
    """An x' < y such that every point of ]x', y[ has rank below
    rank(y): y minus one copy of its last term."""
    if not y._terms:
        raise DomainError("0 has no left neighbourhood")
    e, c = y._terms[-1]
    if c == 1:
        return _make(y._terms[:-1])
    return _make(y._terms[:-1] + ((e, c - 1),))


def cb_rank_segment(beta: Ordinal) -> Ordinal:
    """First alpha at which iterated isolated-point removal empties the
    segment [0, beta]: leading exponent plus one."""
    return _add(beta.leading_exponent, ONE)


# ---------------------------------------------------------------------------
# Text format
#
#   expr   := term ( '+' term )*
#   term   := factor ( '*' nat )?
#   factor := 'w' ( '^' factor | '^' '(' expr ')' )? | nat | '(' expr ')'
#
# Whitespace is insignificant.  Evaluation is left-associative with
# ordinal semantics; the formatter emits canonical CNF in the same
# grammar, e.g.  "w^(w)*2 + w^2 + 3".


class _Parser:
    def __init__(self, text: str, depth_cap: int):
        self.text = text
        self.pos = 0
        self.depth_cap = depth_cap

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos + 1)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected '{ch}'")
        self.pos += 1

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a number")
        return int(self.text[start:self.pos])

    def expr(self) -> Ordinal:
        value = self.term()
        while self.peek() == "+":
            self.take("+")
            value = _add(value, self.term())
        return value

    def term(self) -> Ordinal:
        value = self.factor()
        if self.peek() == "*":
            self.take("*")
            at = self.pos
            n = self.nat()
            if n == 0:
                raise DomainError(f"zero coefficient (position {at + 1})")
            value = _mul(value, Ordinal(n))
        return value

    def factor(self) -> Ordinal:
        c = self.peek()
        if c == "w":
            self.pos += 1
            if self.peek() == "^":
                self.take("^")
                if self.peek() == "(":
                    self.take("(")
                    e = self.expr()
                    self.take(")")
                else:
                    e = self.factor()
                return omega_pow(e, self.depth_cap)
            return OMEGA
        if c == "(":
            self.take("(")
            value = self.expr()
            self.take(")")
            return value
        if c.isdigit():
            return Ordinal(self.nat())
        raise self.error("expected 'w', a number, or '('")


def parse_ordinal(text: str, depth_cap: int = DEFAULT_DEPTH_CAP) -> Ordinal:
    p = _Parser(text, depth_cap)
    value = p.expr()
    p.skip_ws()
    if p.pos != len(text):
        raise p.error("trailing input")
    return value


def format_ordinal(x: Ordinal, unicode: bool = False) -> str:
    w = "ω" if unicode else "w"
    if not x._terms:
        return "0"
    parts = []
    for e, c in x._terms:
        if e.is_zero:
            parts.append(str(c))
            continue
        if e == ONE:
            base = w
        elif e.is_finite:
            base = f"{w}^{int(e)}"
        else:
            base = f"{w}^({format_ordinal(e, unicode)})"
        parts.append(base if c == 1 else f"{base}*{c}")
    return " + ".join(parts)
