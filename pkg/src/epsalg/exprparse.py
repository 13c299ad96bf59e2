"""Expression grammar shared by the CLI and the spec-file loader.

    expr    := term (('+' | '-') term)*
    term    := '-' term | product
    product := power (('*' | '/') power)*
    power   := atom ('^' INT)?
    atom    := INT | IDENT | IDENT '(' expr (',' expr)* ')' | '(' expr ')'

Unary minus binds below '*', so -a*b is -(a*b).  Reserved identifiers are
h, I and r2; everything else resolves against the algebra's generator
labels or the installed function table (comm, pb, J in the CLI).  Errors
carry byte offsets into the source text.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .freealg import EMPTY_WORD, Element
from .scalars import H, I, R2, Scalar


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (offset {pos})")
        self.pos = pos


class EvalError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (offset {pos})")
        self.pos = pos


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


_OPS = set("+-*/^(),")


def tokenize(src: str):
    tokens = []
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            tokens.append(Token("INT", src[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append(Token("IDENT", src[i:j], i))
            i = j
            continue
        if ch in _OPS:
            tokens.append(Token(ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(Token("END", "", n))
    return tokens


@dataclass(frozen=True)
class Num:
    value: int
    pos: int = field(compare=False, default=0)


@dataclass(frozen=True)
class Sym:
    name: str
    pos: int = field(compare=False, default=0)


@dataclass(frozen=True)
class Neg:
    arg: object
    pos: int = field(compare=False, default=0)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: int = field(compare=False, default=0)


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int
    pos: int = field(compare=False, default=0)


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    pos: int = field(compare=False, default=0)


class _Parser:
    def __init__(self, src: str):
        self.tokens = tokenize(src)
        self.k = 0

    def peek(self) -> Token:
        return self.tokens[self.k]

    def next(self) -> Token:
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.text or 'end'!r}", tok.pos)
        return self.next()

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok.kind != "END":
            raise ParseError(f"trailing input {tok.text!r}", tok.pos)
        return node

    def expr(self):
        node = self.term()
        while self.peek().kind in ("+", "-"):
            tok = self.next()
            node = BinOp(tok.kind, node, self.term(), tok.pos)
        return node

    def term(self):
        tok = self.peek()
        if tok.kind == "-":
            self.next()
            return Neg(self.term(), tok.pos)
        return self.product()

    def product(self):
        node = self.power()
        while self.peek().kind in ("*", "/"):
            tok = self.next()
            node = BinOp(tok.kind, node, self.power(), tok.pos)
        return node

    def power(self):
        node = self.atom()
        if self.peek().kind == "^":
            tok = self.next()
            exp = self.expect("INT")
            node = Pow(node, int(exp.text), tok.pos)
        return node

    def atom(self):
        tok = self.peek()
        if tok.kind == "INT":
            self.next()
            return Num(int(tok.text), tok.pos)
        if tok.kind == "IDENT":
            self.next()
            if self.peek().kind == "(":
                self.next()
                args = [self.expr()]
                while self.peek().kind == ",":
                    self.next()
                    args.append(self.expr())
                self.expect(")")
                return Call(tok.text, tuple(args), tok.pos)
            return Sym(tok.text, tok.pos)
        if tok.kind == "(":
            self.next()
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected token {tok.text or 'end'!r}", tok.pos)


def parse(src: str):
    """Source text to syntax tree; positions excluded from node equality."""
    return _Parser(src).parse()


_LEVEL_ADD, _LEVEL_NEG, _LEVEL_MUL, _LEVEL_POW, _LEVEL_ATOM = 1, 2, 3, 4, 5


def _render(node, need: int) -> str:
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Call):
        inner = ", ".join(_render(a, _LEVEL_ADD) for a in node.args)
        return f"{node.name}({inner})"
    if isinstance(node, Neg):
        text, level = "-" + _render(node.arg, _LEVEL_NEG), _LEVEL_NEG
    elif isinstance(node, BinOp) and node.op in "+-":
        text = f"{_render(node.left, _LEVEL_ADD)} {node.op} {_render(node.right, _LEVEL_NEG)}"
        level = _LEVEL_ADD
    elif isinstance(node, BinOp):
        text = f"{_render(node.left, _LEVEL_MUL)}{node.op}{_render(node.right, _LEVEL_POW)}"
        level = _LEVEL_MUL
    elif isinstance(node, Pow):
        text, level = f"{_render(node.base, _LEVEL_ATOM)}^{node.exp}", _LEVEL_POW
    else:
        raise TypeError(f"not a syntax node: {node!r}")
    return f"({text})" if level < need else text


def print_expr(node) -> str:
    """Inverse of parse up to positions: parse(print_expr(t)) == t."""
    return _render(node, _LEVEL_ADD)


_RESERVED = {"h": H, "I": I, "r2": R2}


def evaluate(node, atoms: dict, functions: dict = None) -> Element:
    functions = functions or {}

    def run(n) -> Element:
        if isinstance(n, Num):
            return Element.scalar(n.value)
        if isinstance(n, Sym):
            if n.name in _RESERVED:
                return Element.scalar(_RESERVED[n.name])
            got = atoms.get(n.name)
            if got is None:
                raise EvalError(f"unknown generator {n.name!r}", n.pos)
            return got
        if isinstance(n, Neg):
            return -run(n.arg)
        if isinstance(n, BinOp):
            left, right = run(n.left), run(n.right)
            if n.op == "+":
                return left + right
            if n.op == "-":
                return left - right
            if n.op == "*":
                return left * right
            denom = _as_scalar(right)
            if denom is None:
                raise EvalError("division only by scalars", n.pos)
            if denom.is_zero():
                raise EvalError("division by zero", n.pos)
            return left * denom.inverse()
        if isinstance(n, Pow):
            return run(n.base) ** n.exp
        if isinstance(n, Call):
            fn = functions.get(n.name)
            if fn is None:
                raise EvalError(f"unknown function {n.name!r}", n.pos)
            arity, call = fn
            if len(n.args) != arity:
                raise EvalError(
                    f"{n.name} takes {arity} arguments, got {len(n.args)}", n.pos
                )
            return call(*(run(a) for a in n.args))
        raise TypeError(f"not a syntax node: {n!r}")

    return run(node)


def _as_scalar(x: Element):
    if x.is_zero():
        return Scalar()
    if set(x.terms) != {EMPTY_WORD}:
        return None
    coeff = x.terms[EMPTY_WORD]
    if not coeff.is_constant():
        return None
    return coeff.constant()


def element_from_text(text: str, alg, functions: dict = None) -> Element:
    atoms = {g.label: Element.from_word(g) for g in alg.generators}
    return evaluate(parse(text), atoms, functions)


def scalar_from_text(text: str) -> Scalar:
    value = evaluate(parse(text), {})
    got = _as_scalar(value)
    if got is None:
        raise ParseError(f"{text!r} is not a scalar", 0)
    return got
