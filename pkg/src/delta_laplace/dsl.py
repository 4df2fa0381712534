"""Recursive-descent parser for the equation DSL.

    equation := [ "n" ] diff "f" "=" rhs ( ";" ic )*
    diff     := "D" | "D2"
    rhs      := [ "-" ] term { ( "+" | "-" ) term }
    term     := [ rat "*" ] ( "n" [ "^" int ] | int "/n" [ "^" int ] | rat )
    ic       := ( "f" | "Df" ) "(" int ")" "=" [ "-" ] rat
    rat      := int [ "/" int ]

Whitespace is ignored everywhere. ``Δ``/``△`` are accepted for ``D`` and the
Unicode minus for ``-``.  Offsets in :class:`ParseError` are byte offsets
into the UTF-8 encoding of the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import sequences as seq
from .equation import Coefficient, DifferenceEquation, ICKind, InitialCondition
from .errors import ParseError, SemanticError

MAX_EXPONENT = 16

_ALIASES = {"Δ": "D", "△": "D", "−": "-", "∗": "*", "·": "*"}
_SYMBOLS = set("=;+-*/^()")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", a symbol, or "eof"
    text: str
    offset: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    i = 0
    byte = 0
    while i < len(text):
        ch = text[i]
        width = len(ch.encode("utf-8"))
        ch = _ALIASES.get(ch, ch)
        if ch.isspace():
            i += 1
            byte += width
            continue
        if ch.isascii() and ch.isdigit():
            j = i
            while j < len(text) and text[j].isascii() and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[i:j], byte))
            byte += j - i
            i = j
            continue
        if ch in ("n", "D", "f"):
            tokens.append(Token("name", ch, byte))
        elif ch in _SYMBOLS:
            tokens.append(Token(ch, ch, byte))
        else:
            raise ParseError(f"unexpected character {text[i]!r}", byte)
        i += 1
        byte += width
    tokens.append(Token("eof", "", byte))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, k: int = 1) -> Token:
        return self.tokens[min(self.pos + k, len(self.tokens) - 1)]

    def at(self, kind: str, text: str | None = None) -> bool:
        t = self.tok
        return t.kind == kind and (text is None or t.text == text)

    def expect(self, kind: str, text: str | None = None, label: str | None = None) -> Token:
        if not self.at(kind, text):
            what = label or text or kind
            found = self.tok.text or "end of input"
            raise ParseError(f"expected {what}, found {found!r}", self.tok.offset, [what])
        t = self.tok
        self.pos += 1
        return t

    def integer(self) -> int:
        return int(self.expect("int", label="integer").text)

    def rat(self) -> Fraction:
        p = self.integer()
        if self.at("/") and self.peek().kind == "int":
            self.pos += 1
            q = self.integer()
            if q == 0:
                raise SemanticError("zero denominator in rational constant")
            return Fraction(p, q)
        return Fraction(p)

    def signed_rat(self) -> Fraction:
        if self.at("-"):
            self.pos += 1
            return -self.rat()
        return self.rat()

    # equation := ["n"] diff "f" "=" rhs (";" ic)*
    def equation(self) -> DifferenceEquation:
        coefficient = Coefficient.ONE
        if self.at("name", "n"):
            self.pos += 1
            coefficient = Coefficient.N
        if not self.at("name", "D"):
            raise ParseError("expected a difference operator", self.tok.offset, ["D", "D2"] + ([] if coefficient is Coefficient.N else ["n"]))
        self.pos += 1
        order = 1
        if self.at("int"):
            order = self.integer()
        self.expect("name", "f")
        self.expect("=")
        rhs = self.rhs()
        ics = []
        while self.at(";"):
            self.pos += 1
            ics.append(self.ic())
        if not self.at("eof"):
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.offset, [";", "+", "-", "end of input"])
        if order not in (1, 2):
            raise SemanticError(f"unsupported difference order D{order}; only D and D2 are supported")
        return DifferenceEquation(coefficient, order, rhs, tuple(ics))

    def rhs(self) -> seq.SeqExpr:
        terms = []
        sign = 1
        if self.at("-"):
            self.pos += 1
            sign = -1
        terms.append((sign, self.term()))
        while self.at("+") or self.at("-"):
            sign = 1 if self.tok.kind == "+" else -1
            self.pos += 1
            terms.append((sign, self.term()))
        return seq.linear_combine(terms)

    def _power(self) -> int:
        if self.at("^"):
            self.pos += 1
            k = self.integer()
            if k > MAX_EXPONENT:
                raise SemanticError(f"exponent {k} exceeds the supported maximum {MAX_EXPONENT}")
            return k
        return 1

    def _n_power(self) -> seq.SeqExpr:
        self.expect("name", "n")
        k = self._power()
        return seq.ONE if k == 0 else seq.Mono(k)

    def _reciprocal(self, c: Fraction) -> seq.SeqExpr:
        # after "c /": "n" ["^" m]
        self.expect("name", "n")
        m = self._power()
        if m == 0:
            return seq.Const(c)
        if m not in (1, 2):
            raise SemanticError(f"1/n^{m} is not supported; only 1/n and 1/n^2 are")
        return seq.linear_combine([(c, seq.Recip(m))])

    def _int_led(self) -> seq.SeqExpr:
        """A term starting with an integer: rat, int/n[^m], or rat * atom."""
        p = Fraction(self.integer())
        if self.at("/"):
            nxt = self.peek()
            if nxt.kind == "name" and nxt.text == "n":
                self.pos += 1
                return self._reciprocal(p)
            if nxt.kind == "int":
                self.pos += 1
                q = self.integer()
                if q == 0:
                    raise SemanticError("zero denominator in rational constant")
                p = p / q
            else:
                raise ParseError("expected integer or n after '/'", nxt.offset, ["integer", "n"])
        return seq.Const(p)

    def term(self) -> seq.SeqExpr:
        if self.at("name", "n"):
            return self._n_power()
        if not self.at("int"):
            raise ParseError(
                f"expected a term, found {self.tok.text or 'end of input'!r}", self.tok.offset, ["integer", "n"]
            )
        head = self._int_led()
        if self.at("*"):
            if not isinstance(head, seq.Const):
                raise ParseError("a coefficient must be a rational constant", self.tok.offset, ["+", "-", ";"])
            self.pos += 1
            if self.at("name", "n"):
                atom = self._n_power()
            elif self.at("int"):
                atom = self._int_led()
            else:
                raise ParseError("expected n, 1/n or a constant after '*'", self.tok.offset, ["integer", "n"])
            return seq.linear_combine([(head.value, atom)])
        return head

    # ic := ("f" | "Df") "(" int ")" "=" rat
    def ic(self) -> InitialCondition:
        kind = ICKind.VALUE
        if self.at("name", "D"):
            self.pos += 1
            kind = ICKind.FIRST_DIFFERENCE
        elif not self.at("name", "f"):
            raise ParseError("expected an initial condition", self.tok.offset, ["f", "Df"])
        self.expect("name", "f")
        self.expect("(")
        index = self.integer()
        self.expect(")")
        self.expect("=")
        value = self.signed_rat()
        if index < 1:
            raise SemanticError(f"initial conditions need an index >= 1, got {index}")
        return InitialCondition(kind, index, value)


def parse_equation(text: str) -> DifferenceEquation:
    """Parse e.g. ``"D2 f = n ; f(1) = 1 ; Df(1) = 2"``."""
    return _Parser(text).equation()


def parse_sequence(text: str) -> seq.SeqExpr:
    """Parse a right-hand-side expression such as ``"3*n^2 - 1/n"``."""
    p = _Parser(text)
    out = p.rhs()
    if not p.at("eof"):
        raise ParseError(f"unexpected {p.tok.text!r}", p.tok.offset, ["+", "-", "end of input"])
    return out
