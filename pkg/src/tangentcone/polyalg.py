"""Sparse integer polynomials in x1..x4, polynomial matrices and minors.

Polynomials are immutable maps from exponent vectors to nonzero ints.
Terms are kept in graded-lex order (highest total degree first, ties by
lex with x1 > x2 > x3 > x4) so that rendering is deterministic.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache

NVARS = 4
ZERO_EXP = (0,) * NVARS


def _glex_key(exp):
    return (-sum(exp), tuple(-e for e in exp))


class Poly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exp, c in dict(terms).items():
                exp = tuple(int(e) for e in exp)
                if len(exp) != NVARS or min(exp) < 0:
                    raise ValueError(f"bad exponent vector {exp}")
                if c:
                    clean[exp] = clean.get(exp, 0) + int(c)
        self._terms = {e: clean[e] for e in sorted(clean, key=_glex_key) if clean[e]}
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, c):
        return cls({ZERO_EXP: c})

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({tuple(exp): coeff})

    @classmethod
    def var(cls, i, power=1):
        """x_i^power with 1-based variable index."""
        exp = [0] * NVARS
        exp[i - 1] = power
        return cls({tuple(exp): 1})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly({e: c * other for e, c in self._terms.items()})
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def degrees(self):
        return sorted({sum(e) for e in self._terms})

    def leading_coefficient(self):
        return next(iter(self._terms.values()))

    def evaluate_monomial_curve(self, gens):
        """Substitute x_j -> t^{n_j}; return the result as {power of t: coeff}."""
        out = {}
        for e, c in self._terms.items():
            p = sum(a * n for a, n in zip(e, gens))
            out[p] = out.get(p, 0) + c
        return {p: c for p, c in out.items() if c}

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Poly({render(self)!r})"


def _render_monomial(exp):
    parts = []
    for i, e in enumerate(exp, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def render(p):
    """Canonical text: graded-lex order, explicit ``^`` and ``*``."""
    if p.is_zero():
        return "0"
    out = []
    for k, (e, c) in enumerate(p.items()):
        mono = _render_monomial(e)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def is_homogeneous(f):
    """Total degree if every term shares it, else None."""
    if f.is_zero():
        raise ValueError("zero polynomial has no degree")
    degs = f.degrees()
    return degs[0] if len(degs) == 1 else None


def lowest_degree_form(f):
    if f.is_zero():
        raise ValueError("lowest degree form of the zero polynomial")
    d = min(sum(e) for e, _ in f.items())
    return Poly({e: c for e, c in f.items() if sum(e) == d})


def has_constant_term(f):
    return any(sum(e) == 0 for e, _ in f.items())


# ---------------------------------------------------------------- matrices


class PolyMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = list(entries)
        if rows <= 0 or cols <= 0 or len(entries) != rows * cols:
            raise ValueError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = tuple(e if isinstance(e, Poly) else Poly.const(e) for e in entries)

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), width, [e for r in rows for e in r])

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i):
        return [self[i, j] for j in range(self.cols)]

    def column(self, j):
        return [self[i, j] for i in range(self.rows)]

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def replace(self, i, j, value):
        entries = list(self.entries)
        entries[i * self.cols + j] = value
        return PolyMatrix(self.rows, self.cols, entries)

    def is_zero(self):
        return all(e.is_zero() for e in self.entries)

    def nonzero_positions(self):
        return [(i, j) for i in range(self.rows) for j in range(self.cols) if not self[i, j].is_zero()]

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def to_strings(self):
        return [[render(e) for e in row] for row in self.to_rows()]

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols}, {self.to_strings()})"


def mat_mul(a, b):
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = []
    for i in range(a.rows):
        for j in range(b.cols):
            acc = Poly()
            for k in range(a.cols):
                x, y = a[i, k], b[k, j]
                if x and y:
                    acc = acc + x * y
            out.append(acc)
    return PolyMatrix(a.rows, b.cols, out)


def minor(m, rows, cols):
    """Determinant of the submatrix on the given 0-based rows and cols.

    Cofactor expansion along the first remaining row; zero entries are
    skipped so sparse templates stay cheap.
    """
    rows, cols = tuple(rows), tuple(cols)
    if len(rows) != len(cols):
        raise ValueError("minor needs equally many rows and columns")
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise ValueError("repeated index in minor")
    if any(not 0 <= r < m.rows for r in rows) or any(not 0 <= c < m.cols for c in cols):
        raise IndexError("minor index out of range")
    if not rows:
        return Poly.const(1)

    @lru_cache(maxsize=None)
    def det(rs, cs):
        if len(rs) == 1:
            return m[rs[0], cs[0]]
        r0, rest = rs[0], rs[1:]
        acc = Poly()
        for k, c in enumerate(cs):
            e = m[r0, c]
            if e.is_zero():
                continue
            sub = det(rest, cs[:k] + cs[k + 1:])
            if sub.is_zero():
                continue
            term = e * sub
            acc = acc - term if k % 2 else acc + term
        return acc

    return det(rows, cols)


def minor_by_deletion(m, del_rows, del_cols):
    """Minor left after deleting the given 0-based rows and columns."""
    rows = [i for i in range(m.rows) if i not in set(del_rows)]
    cols = [j for j in range(m.cols) if j not in set(del_cols)]
    return minor(m, rows, cols)


def iter_minors(m, k):
    for rows in itertools.combinations(range(m.rows), k):
        for cols in itertools.combinations(range(m.cols), k):
            yield rows, cols, minor(m, rows, cols)


def all_minors_vanish(m, k):
    if k > min(m.rows, m.cols):
        raise ValueError(f"no {k}x{k} minors in a {m.rows}x{m.cols} matrix")
    return all(v.is_zero() for _, _, v in iter_minors(m, k))


def first_nonzero_minor(m, k):
    for rows, cols, v in iter_minors(m, k):
        if not v.is_zero():
            return rows, cols, v
    return None


def det_by_permutations(m):
    """Leibniz formula; used only as an independent check of `minor`."""
    if m.rows != m.cols:
        raise ValueError("square matrix required")
    n = m.rows
    acc = Poly()
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        term = Poly.const(-1 if inversions % 2 else 1)
        for i, j in enumerate(perm):
            term = term * m[i, j]
            if term.is_zero():
                break
        acc = acc + term
    return acc


# ---------------------------------------------------------- factored forms


def _is_primitive_binomial(b):
    if len(b) != 2 or any(abs(c) != 1 for _, c in b.items()):
        return False
    (e1, _), (e2, _) = b.items()
    return not any(x and y for x, y in zip(e1, e2))


@dataclass(frozen=True)
class FactoredPoly:
    """sign * x^monomial * product(binomials)."""

    sign: int = 1
    monomial: tuple = ZERO_EXP
    binomials: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if len(self.monomial) != NVARS or min(self.monomial) < 0:
            raise ValueError(f"bad monomial {self.monomial}")
        for b in self.binomials:
            if not isinstance(b, Poly) or not _is_primitive_binomial(b):
                raise ValueError(f"not a primitive binomial: {b}")

    def expand(self):
        p = Poly.monomial(self.monomial, self.sign)
        for b in self.binomials:
            p = p * b
        return p

    def __neg__(self):
        return FactoredPoly(-self.sign, self.monomial, self.binomials)

    def variables(self):
        return {i + 1 for i, e in enumerate(self.monomial) if e}

    def __str__(self):
        parts = []
        mono = _render_monomial(self.monomial)
        if mono:
            parts.append(mono)
        parts.extend(f"({render(b)})" for b in self.binomials)
        body = "*".join(parts) or "1"
        return ("-" if self.sign < 0 else "") + body


def _divides_binomial(var, b):
    return all(e[var - 1] > 0 for e, _ in b.items())


def _same_up_to_sign(p, q):
    return p == q or p == -q


def coprimality_verdict(a, b):
    """(coprime, flags) for two factored forms.

    A shared variable or a shared binomial (up to sign) means not coprime.
    Two distinct binomials sharing variables are assumed coprime but are
    listed in flags, since irreducibility is not checked.
    """
    if not isinstance(a, FactoredPoly) or not isinstance(b, FactoredPoly):
        raise TypeError("structural coprimality needs FactoredPoly inputs")
    for v in a.variables():
        if v in b.variables() or any(_divides_binomial(v, q) for q in b.binomials):
            return False, [f"x{v} divides both"]
    for v in b.variables():
        if any(_divides_binomial(v, q) for q in a.binomials):
            return False, [f"x{v} divides both"]
    flags = []
    for p in a.binomials:
        for q in b.binomials:
            if _same_up_to_sign(p, q):
                return False, [f"common factor {render(p)}"]
            pv = {i for e, _ in p.items() for i, x in enumerate(e) if x}
            qv = {i for e, _ in q.items() for i, x in enumerate(e) if x}
            if pv & qv:
                flags.append(f"distinct binomials {render(p)} and {render(q)} share variables")
    return True, flags


def structurally_coprime(a, b):
    return coprimality_verdict(a, b)[0]


# ------------------------------------------------------------ text parsing

_TOKEN = re.compile(r"\s*(?:(x[1-4])|([A-Za-z_]\w*)|(\d+)|(.))")


def _tokens(text):
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        var, name, num, sym = m.groups()
        if var:
            out.append(("var", int(var[1])))
        elif name:
            out.append(("name", name))
        elif num:
            out.append(("int", int(num)))
        elif sym and not sym.isspace():
            out.append(("sym", sym))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text, env):
        self.toks = _tokens(text)
        self.i = 0
        self.env = env
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value is not None and tok[1] != value):
            raise ValueError(f"unexpected {tok!r} in {self.text!r}")
        self.i += 1
        return tok

    def at(self, kind, value=None):
        tok = self.peek()
        return tok[0] == kind and (value is None or tok[1] == value)

    def poly(self):
        sign = 1
        if self.at("sym", "-"):
            self.take()
            sign = -1
        elif self.at("sym", "+"):
            self.take()
        acc = self.term() * sign
        while self.at("sym", "+") or self.at("sym", "-"):
            s = self.take()[1]
            t = self.term()
            acc = acc + t if s == "+" else acc - t
        return acc

    def term(self):
        acc = self.factor()
        while self.at("sym", "*"):
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self):
        if self.at("int"):
            return Poly.const(self.take()[1])
        if self.at("sym", "("):
            self.take()
            p = self.poly()
            self.take("sym", ")")
            if self.at("sym", "^"):
                self.take()
                return p ** self.exponent()
            return p
        if self.at("var"):
            v = self.take()[1]
            e = 1
            if self.at("sym", "^"):
                self.take()
                e = self.exponent()
            if e < 0:
                raise ValueError(f"negative exponent for x{v} in {self.text!r}")
            return Poly.var(v, e)
        if self.at("name"):
            name = self.take()[1]
            if name not in self.env or not isinstance(self.env[name], Poly):
                raise KeyError(f"unknown polynomial {name!r} in {self.text!r}")
            return self.env[name]
        raise ValueError(f"unexpected {self.peek()!r} in {self.text!r}")

    def exponent(self):
        if self.at("sym", "("):
            self.take()
            v = self.linear()
            self.take("sym", ")")
            return v
        return self.atom_value()

    def atom_value(self):
        if self.at("int"):
            return self.take()[1]
        name = self.take("name")[1]
        if name not in self.env:
            raise KeyError(f"unknown symbol {name!r} in {self.text!r}")
        return int(self.env[name])

    def linear(self):
        sign = -1 if self.at("sym", "-") else 1
        if self.at("sym", "-") or self.at("sym", "+"):
            self.take()
        total = sign * self.linear_term()
        while self.at("sym", "+") or self.at("sym", "-"):
            s = self.take()[1]
            v = self.linear_term()
            total += v if s == "+" else -v
        return total

    def linear_term(self):
        v = self.atom_value()
        while self.at("sym", "*") or self.at("name"):
            if self.at("sym", "*"):
                self.take()
            v *= self.atom_value()
        return v


def parse_poly(text, env=None):
    """Parse e.g. ``"-x2^a2 + x1^a21*x4^(2*a24+1)"`` with symbols taken from env.

    Names in env bound to Poly values may be used as factors (``x2^a32*f2``).
    """
    p = _Parser(text, env or {})
    out = p.poly()
    if p.i != len(p.toks):
        raise ValueError(f"trailing input in {text!r}")
    return out
