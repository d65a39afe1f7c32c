"""Text syntax for algebra elements.

Grammar (whitespace ignored)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := power ('*' power)*
    power  := atom ['^' exponent]
    atom   := INT | '[' INT (',' INT)* ']' | NAME | '(' expr ')'
    exponent := ['-'|'+'] INT | '(' ['-'|'+'] INT ')'

Names: ``X``, ``Xinv``, ``s``, ``y`` and the parameters ``t``, ``k`` (replaced
by their values). ``[c0,c1,...]`` is a field element by its coefficients.
"""
import re

from .algebra import MAX_EXPONENT, AlgebraElement
from .errors import ExponentOnS, ExpressionSyntaxError

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def tokenize(text):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("INT", int(m.group(1)), start))
        elif m.group(2):
            out.append(("NAME", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^()[],":
                raise ExpressionSyntaxError(f"unexpected character {ch!r}", start)
            out.append((ch, ch, start))
        pos = m.end()
    out.append(("EOF", None, len(text)))
    return out


class _Parser:
    def __init__(self, text, params):
        self.text = text
        self.params = params
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "EOF" else repr(tok[1])
            raise ExpressionSyntaxError(f"expected {kind!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def parse(self):
        if self.peek()[0] == "EOF":
            raise ExpressionSyntaxError("empty expression", 0)
        value = self.expr()
        tok = self.peek()
        if tok[0] != "EOF":
            raise ExpressionSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return value

    def expr(self):
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.power()
        while self.peek()[0] == "*":
            self.take()
            value = value * self.power()
        return value

    def exponent(self):
        paren = self.peek()[0] == "("
        if paren:
            self.take()
        sign = 1
        if self.peek()[0] in ("-", "+"):
            sign = -1 if self.take()[0] == "-" else 1
        tok = self.take("INT")
        if paren:
            self.take(")")
        e = sign * tok[1]
        if abs(e) > MAX_EXPONENT:
            raise ExpressionSyntaxError(f"exponent {e} exceeds {MAX_EXPONENT}", tok[2])
        return e, tok[2]

    def power(self):
        kind, base = self.atom()
        if self.peek()[0] != "^":
            return base
        self.take()
        e, pos = self.exponent()
        P = self.params
        if kind == "X":
            return AlgebraElement.monomial(P, 0, e, 0)
        if kind == "Xinv":
            return AlgebraElement.monomial(P, 0, -e, 0)
        if kind == "s":
            if e not in (1, -1):
                raise ExponentOnS(f"s admits only exponent +-1, got {e}", pos)
            return base
        if kind == "scalar":
            coeff = base.coefficient(0, 0, 0)
            if e < 0 and coeff.is_zero():
                raise ExpressionSyntaxError("negative power of zero", pos)
            return AlgebraElement.scalar(P, coeff ** e)
        if e < 0:
            raise ExpressionSyntaxError(f"negative exponent on {kind}", pos)
        if kind == "y":
            return AlgebraElement.monomial(P, 0, 0, e)
        return base ** e

    def atom(self):
        tok = self.take()
        P = self.params
        kind = tok[0]
        if kind == "INT":
            return "scalar", AlgebraElement.scalar(P, tok[1])
        if kind == "[":
            coeffs = [self.take("INT")[1]]
            while self.peek()[0] == ",":
                self.take()
                coeffs.append(self.take("INT")[1])
            self.take("]")
            if len(coeffs) > P.ctx.m:
                raise ExpressionSyntaxError(f"field literal has more than {P.ctx.m} coefficients", tok[2])
            return "scalar", AlgebraElement.scalar(P, P.ctx.from_coeffs(coeffs))
        if kind == "NAME":
            name = tok[1]
            if name in ("X", "Xinv", "s", "y"):
                return name, AlgebraElement.gen(P, name)
            if name == "t":
                return "scalar", AlgebraElement.scalar(P, P.t)
            if name == "k":
                return "scalar", AlgebraElement.scalar(P, P.k)
            raise ExpressionSyntaxError(f"unknown name {name!r}", tok[2])
        if kind == "(":
            value = self.expr()
            self.take(")")
            if value.is_zero() or set(value.codes()) == {(0, 0, 0)}:
                return "scalar", value
            return "expr", value
        what = "end of input" if kind == "EOF" else repr(tok[1])
        raise ExpressionSyntaxError(f"unexpected {what}", tok[2])


def parse(text, params):
    """Parse ``text`` into a normal-form element of H(params)."""
    return _Parser(text, params).parse()


def parse_scalar(text, ctx):
    """Field literal from the command line: ``"3"`` or ``"c0,c1,..."``."""
    text = str(text).strip()
    try:
        parts = [int(x) for x in text.strip("[]").split(",")]
    except ValueError:
        raise ExpressionSyntaxError(f"bad field literal {text!r}", 0) from None
    if len(parts) == 1:
        return ctx.element(parts[0])
    if len(parts) > ctx.m:
        raise ExpressionSyntaxError(f"field literal has more than {ctx.m} coefficients", 0)
    return ctx.from_coeffs(parts)
