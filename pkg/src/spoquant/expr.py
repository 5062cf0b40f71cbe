"""Text syntax for superfunctions.

Grammar (whitespace is insignificant)::

    sum     := signed (("+" | "-") signed)*
    signed  := ("-" | "+") signed | product
    product := power ("*" power)*
    power   := atom ("^" NATURAL)*
    atom    := RATIONAL | "x" | "t1" | "t2" | "(" sum ")"

``RATIONAL`` is ``p`` or ``p/q`` with natural ``p``, ``q``.
"""
import re
import warnings
from fractions import Fraction

from .grassmann import ONE, T1, T2, X, ZERO, SuperFn

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>t1|t2|x)|(?P<op>[-+*^()]))")


class ExprSyntaxError(ValueError):
    def __init__(self, message, text, pos):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExprSyntaxError("unexpected character", text, pos)
        start = m.start(m.lastgroup)
        tokens.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message):
        raise ExprSyntaxError(message, self.text, self.peek()[2])

    def parse(self):
        value = self.sum()
        if self.peek()[0] != "end":
            self.fail("unexpected token")
        return value

    def sum(self):
        value = self.signed()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.signed()
            value = value + rhs if op == "+" else value - rhs
        return value

    def signed(self):
        kind, text, _ = self.peek()
        if kind == "op" and text in ("-", "+"):
            self.take()
            inner = self.signed()
            return -inner if text == "-" else inner
        return self.product()

    def product(self):
        value = self.power()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            value = value * self.power()
        return value

    def power(self):
        kind, text, _ = self.peek()
        value = self.atom()
        while self.peek()[:2] == ("op", "^"):
            self.take()
            ekind, etext, epos = self.take()
            if ekind != "num" or "/" in etext:
                raise ExprSyntaxError("exponent must be a natural number", self.text, epos)
            n = int(etext)
            if kind == "name" and text in ("t1", "t2") and n > 1:
                warnings.warn(f"{text}^{n} vanishes (odd generator squared)", stacklevel=4)
            result = ONE
            for _ in range(n):
                result = result * value
            value = result
        return value

    def atom(self):
        kind, text, pos = self.take()
        if kind == "num":
            return SuperFn.const(Fraction(text))
        if kind == "name":
            return {"x": X, "t1": T1, "t2": T2}[text]
        if (kind, text) == ("op", "("):
            value = self.sum()
            if self.take()[:2] != ("op", ")"):
                raise ExprSyntaxError("expected ')'", self.text, self.tokens[self.i - 1][2])
            return value
        raise ExprSyntaxError("expected a number, x, t1, t2 or '('", self.text, pos)


def parse_superfn(text):
    """Parse an expression such as ``"x^2*t1 + 3/2*t2"`` into a SuperFn."""
    return _Parser(text).parse()


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


_THETA = (("f0", ""), ("f1", "t1"), ("f2", "t2"), ("f12", "t1*t2"))


def format_superfn(f):
    """Canonical text form; ``parse_superfn(format_superfn(f)) == f``."""
    pieces = []
    for attr, theta in _THETA:
        poly = getattr(f, attr)
        for deg in range(poly.degree, -1, -1):
            c = poly.coeffs[deg]
            if not c:
                continue
            factors = []
            if deg == 1:
                factors.append("x")
            elif deg > 1:
                factors.append(f"x^{deg}")
            if theta:
                factors.append(theta)
            mag = abs(c)
            if mag != 1 or not factors:
                factors.insert(0, format_rational(mag))
            pieces.append((c < 0, "*".join(factors)))
    if not pieces:
        return "0"
    neg, body = pieces[0]
    out = ("-" if neg else "") + body
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


__all__ = ["ExprSyntaxError", "format_rational", "format_superfn", "parse_superfn", "ZERO"]
