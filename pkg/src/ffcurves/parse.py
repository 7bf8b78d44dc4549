"""Parsing and printing of polynomial expressions.

Grammar (whitespace is ignored)::

    expr    := [sign] term (sign term)*
    term    := factor ([*] factor)*
    factor  := INT | VECTOR | VAR [^ INT]
    VECTOR  := '<' INT (',' INT)* '>'      extension-field element, constant first

Variables are ``T`` and ``X`` for bivariate input, ``X0 X1 X2`` for forms,
and ``X`` alone for integer polynomials.  Implicit multiplication is allowed
(``2T`` means ``2*T``).
"""

import re
from dataclasses import dataclass, field

from .bipoly import BiPoly, HomForm

MODES = ("bi", "hom", "int")
_VARS = {"bi": ("T", "X"), "hom": ("X0", "X1", "X2"), "int": ("X",)}


class ParseError(ValueError):
    def __init__(self, message, column):
        super().__init__(f"{message} at column {column}")
        self.column = column


@dataclass
class PolyExpr:
    """Source text plus the parsed list of ``(coefficient, exponents)`` terms."""

    source: str
    mode: str
    terms: list = field(default_factory=list)


def _tokenize(text, mode):
    out = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        col = i + 1
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(("int", int(text[i:j]), col))
            i = j
        elif ch == "<":
            j = text.find(">", i)
            if j < 0:
                raise ParseError("unterminated vector literal", col)
            body = text[i + 1 : j].replace(" ", "")
            if not re.fullmatch(r"\d+(,\d+)*", body):
                raise ParseError("malformed vector literal", col)
            out.append(("vec", tuple(int(v) for v in body.split(",")), col))
            i = j + 1
        elif ch.isalpha():
            j = i + 1
            if mode == "hom" and ch == "X" and j < n and text[j] in "012":
                j += 1
            name = text[i:j]
            if name not in _VARS[mode]:
                raise ParseError(f"unknown variable {name!r}", col)
            out.append(("var", name, col))
            i = j
        elif ch in "+-*^":
            out.append((ch, ch, col))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", col)
    return out


def parse_expr(text, mode="bi"):
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    toks = _tokenize(text, mode)
    if not toks:
        raise ParseError("empty input", 1)
    names = _VARS[mode]
    pos = 0
    terms = []

    def peek():
        return toks[pos] if pos < len(toks) else None

    end_col = len(text) + 1
    while True:
        sign = 1
        tok = peek()
        if tok and tok[0] in "+-":
            sign = -1 if tok[0] == "-" else 1
            pos += 1
        elif terms:
            raise ParseError("expected '+' or '-'", tok[2])
        coef, vec = sign, None
        exps = [0] * len(names)
        nfactors = 0
        while True:
            tok = peek()
            if tok is None or tok[0] in "+-":
                break
            if tok[0] == "*":
                if nfactors == 0:
                    raise ParseError("unexpected '*'", tok[2])
                pos += 1
                tok = peek()
                if tok is None or tok[0] not in ("int", "vec", "var"):
                    raise ParseError("expected a factor after '*'", tok[2] if tok else end_col)
            if tok[0] == "int":
                coef *= tok[1]
                pos += 1
            elif tok[0] == "vec":
                if mode == "int":
                    raise ParseError("vector literal in integer mode", tok[2])
                if vec is not None:
                    raise ParseError("two vector literals in one term", tok[2])
                vec = tok[1]
                pos += 1
            elif tok[0] == "var":
                idx = names.index(tok[1])
                pos += 1
                e = 1
                nxt = peek()
                if nxt and nxt[0] == "^":
                    pos += 1
                    ex = peek()
                    if ex is None or ex[0] != "int":
                        raise ParseError("expected exponent after '^'", nxt[2])
                    e = ex[1]
                    pos += 1
                exps[idx] += e
            else:
                raise ParseError(f"unexpected {tok[1]!r}", tok[2])
            nfactors += 1
        if nfactors == 0:
            tok = peek()
            raise ParseError("expected a term", tok[2] if tok else end_col)
        terms.append(((coef, vec), tuple(exps)))
        if peek() is None:
            break
    return PolyExpr(text, mode, terms)


def parse_poly(text, mode="bi", ctx=None):
    """Parse into a BiPoly ("bi"), HomForm ("hom") over ``ctx``, or IntPoly ("int")."""
    expr = parse_expr(text, mode)
    if mode == "int":
        from .bateman_horn import IntPoly

        coeffs = {}
        for (c, _), (e,) in expr.terms:
            coeffs[e] = coeffs.get(e, 0) + c
        n = max(coeffs)
        return IntPoly([coeffs.get(i, 0) for i in range(n + 1)])
    if ctx is None:
        raise ValueError("a field context is required for bivariate and form modes")
    add, mul = ctx.add, ctx.mul
    terms = {}
    for (c, vec), e in expr.terms:
        v = ctx.from_int(c)
        if vec is not None:
            if len(vec) > ctx.k:
                raise ValueError(f"vector literal {list(vec)} is longer than the extension degree {ctx.k}")
            v = mul(v, ctx.from_vector(tuple(vec) + (0,) * (ctx.k - len(vec))))
        terms[e] = add(terms.get(e, 0), v)
    terms = {e: c for e, c in terms.items() if c}
    if mode == "bi":
        return BiPoly(ctx, terms)
    degs = {sum(e) for e in terms}
    if len(degs) > 1:
        raise ParseError(f"form is not homogeneous (degrees {sorted(degs)})", 1)
    if not terms:
        raise ParseError("form is zero", 1)
    return HomForm(ctx, terms)


def format_element(ctx, c):
    if c < ctx.p:
        return str(c)
    return "<" + ",".join(str(v) for v in ctx.vector(c)) + ">"
