"""Expression text for the CLI and the verifier.

Grammar (whitespace separates tokens but is otherwise ignored):

    expr    := term (('+' | '-') term)*
    term    := '-' term
             | factor (('*' factor) | factor)*      juxtaposition multiplies
    factor  := primary ('^' NATURAL)?
    primary := RATIONAL | NAME | NAME '(' expr (',' expr)* ')' | '(' expr ')'

A RATIONAL is digits optionally followed immediately by '/' and digits
("3", "2/3"); there is no division operator.  '^' binds tighter than
juxtaposition, juxtaposition binds exactly like '*', and a juxtaposed
factor may not start with '-' (so "a -b" is a subtraction).  Names are the
generators q and qbar, the units i, j, k, the eleven variables, and the
call forms star(f,g), comm(f,g), assoc(f,g,h), conj(f), pb_mn(f,g) with
mn one of ab, ac, ad, bc, bd, cd.  Call arity is checked at parse time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .poly import QPolynomial, VARIABLES, gen_q, gen_qbar
from . import quat as _quat
from .star import DEFAULT_CONFIG, StarConfig
from .star import poisson_bracket as _engine_bracket
from .star import star as _engine_star

# --- tokens -----------------------------------------------------------------

_SYMBOLS = "+-*^(),"


@dataclass(frozen=True)
class Token:
    kind: str   # "number", "name", one of _SYMBOLS, "end"
    text: str
    column: int  # 1-based


def tokenize(text: str) -> list:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        col = pos + 1
        if ch.isdigit():
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            if pos < n and text[pos] == "/" and pos + 1 < n and text[pos + 1].isdigit():
                pos += 1
                while pos < n and text[pos].isdigit():
                    pos += 1
            tokens.append(Token("number", text[start:pos], col))
            continue
        if ch.isalpha() or ch == "_":
            start = pos
            while pos < n and (text[pos].isalnum() or text[pos] == "_"):
                pos += 1
            tokens.append(Token("name", text[start:pos], col))
            continue
        if ch in _SYMBOLS:
            tokens.append(Token(ch, ch, col))
            pos += 1
            continue
        raise ParseError("unexpected character", col, token=ch)
    tokens.append(Token("end", "", n + 1))
    return tokens


# --- syntax tree ------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Name:
    ident: str


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple


_CALLS = {"star": 2, "comm": 2, "assoc": 3, "conj": 1,
          "pb_ab": 2, "pb_ac": 2, "pb_ad": 2, "pb_bc": 2, "pb_bd": 2, "pb_cd": 2}
_ATOMS = ("q", "qbar", "i", "j", "k") + VARIABLES

_PRIMARY_STARTS = ("number", "name", "(")


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind, expected_desc=None):
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError("unexpected token", tok.column,
                             token=tok.text or "end of input",
                             expected=(expected_desc or repr(kind),))
        return self.advance()

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError("unexpected trailing input", tok.column,
                             token=tok.text, expected=("'+'", "'-'", "end of input"))
        return node

    def expr(self):
        node = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            rhs = self.term()
            node = Add(node, rhs) if op.kind == "+" else Sub(node, rhs)
        return node

    def term(self):
        if self.peek().kind == "-":
            self.advance()
            return Neg(self.term())
        node = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "*":
                self.advance()
                node = Mul(node, self.factor())
            elif tok.kind in _PRIMARY_STARTS:
                node = Mul(node, self.factor())
            else:
                return node

    def factor(self):
        node = self.primary()
        if self.peek().kind == "^":
            self.advance()
            tok = self.peek()
            if tok.kind != "number" or "/" in tok.text:
                raise ParseError("exponent must be a natural number", tok.column,
                                 token=tok.text or "end of input",
                                 expected=("natural number",))
            self.advance()
            node = Pow(node, int(tok.text))
        return node

    def primary(self):
        tok = self.peek()
        if tok.kind == "number":
            self.advance()
            return Num(Fraction(tok.text))
        if tok.kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")", "')'")
            return node
        if tok.kind == "name":
            self.advance()
            if tok.text in _CALLS:
                opener = self.peek()
                if opener.kind != "(":
                    raise ParseError(
                        f"{tok.text} is a function and needs arguments",
                        opener.column, token=opener.text or "end of input",
                        expected=("'('",))
                self.advance()
                args = [self.expr()]
                while self.peek().kind == ",":
                    self.advance()
                    args.append(self.expr())
                closer = self.expect(")", "')'")
                want = _CALLS[tok.text]
                if len(args) != want:
                    raise ParseError(
                        f"{tok.text} expects {want} argument{'s' if want != 1 else ''}, got {len(args)}",
                        closer.column, token=")")
                return Call(tok.text, tuple(args))
            if tok.text not in _ATOMS:
                raise ParseError(f"unknown name {tok.text!r}", tok.column,
                                 token=tok.text)
            return Name(tok.text)
        raise ParseError("unexpected token", tok.column,
                         token=tok.text or "end of input",
                         expected=("number", "name", "'('", "'-'"))


def parse_expression(text: str):
    """Parse expression text to a syntax tree (raises ParseError)."""
    return _Parser(tokenize(text)).parse()


# --- lowering to polynomials ------------------------------------------------

def _atom_poly(ident: str) -> QPolynomial:
    if ident == "q":
        return gen_q()
    if ident == "qbar":
        return gen_qbar()
    if ident == "i":
        return QPolynomial.constant(_quat.I)
    if ident == "j":
        return QPolynomial.constant(_quat.J)
    if ident == "k":
        return QPolynomial.constant(_quat.K)
    return QPolynomial.variable(ident)


def _backend_fns(backend: str):
    if backend == "engine":
        return _engine_star, _engine_bracket
    if backend == "oracle":
        from . import oracle as _oracle
        return _oracle.star_oracle, _oracle.poisson_bracket_oracle
    raise ValueError(f"unknown backend {backend!r}")


def lower(node, config: StarConfig = DEFAULT_CONFIG,
          backend: str = "engine") -> QPolynomial:
    """Evaluate a syntax tree to a polynomial.

    Star products (star, comm, assoc) are computed by the chosen backend
    under `config`; bare nu/Theta atoms always denote the formal variables.
    """
    star_fn, bracket_fn = _backend_fns(backend)

    def go(n):
        if isinstance(n, Num):
            return QPolynomial.constant(n.value)
        if isinstance(n, Name):
            return _atom_poly(n.ident)
        if isinstance(n, Neg):
            return -go(n.operand)
        if isinstance(n, Add):
            return go(n.left) + go(n.right)
        if isinstance(n, Sub):
            return go(n.left) - go(n.right)
        if isinstance(n, Mul):
            return go(n.left) * go(n.right)
        if isinstance(n, Pow):
            return go(n.base) ** n.exponent
        if isinstance(n, Call):
            args = [go(arg) for arg in n.args]
            if n.func == "conj":
                return args[0].conjugate()
            if n.func == "star":
                return star_fn(args[0], args[1], config)
            if n.func == "comm":
                return star_fn(args[0], args[1], config) - star_fn(args[1], args[0], config)
            if n.func == "assoc":
                return (star_fn(star_fn(args[0], args[1], config), args[2], config)
                        - star_fn(args[0], star_fn(args[1], args[2], config), config))
            # pb_mn
            return bracket_fn(args[0], args[1], n.func[3:])
        raise TypeError(f"unexpected node {n!r}")

    return go(node)


def evaluate_text(text: str, config: StarConfig = DEFAULT_CONFIG,
                  backend: str = "engine") -> QPolynomial:
    return lower(parse_expression(text), config, backend)
