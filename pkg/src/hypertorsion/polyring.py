"""Sparse multivariate Laurent polynomials over the integers.

Variables are dense nonnegative indices; variable ``i`` prints as ``ri``.
Monomials are stored as sorted tuples of ``(var, exponent)`` pairs with no
zero exponents, so they can be used directly as dictionary keys.

The fixed monomial order compares dense exponent vectors lexicographically,
variable 0 first, lower exponent first.
"""

from __future__ import annotations

import itertools
import re
import warnings
from functools import reduce
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

Monomial = Tuple[Tuple[int, int], ...]

ONE_MONOMIAL: Monomial = ()


class NonUnitCoefficientWarning(UserWarning):
    """Support extracted from a polynomial whose coefficients are not all +-1."""


def monomial(exponents: Mapping[int, int] | Iterable[Tuple[int, int]] = ()) -> Monomial:
    items = exponents.items() if isinstance(exponents, Mapping) else exponents
    acc: Dict[int, int] = {}
    for var, exp in items:
        if var < 0:
            raise ValueError(f"negative variable index {var}")
        acc[var] = acc.get(var, 0) + exp
    return tuple(sorted((v, e) for v, e in acc.items() if e != 0))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    acc = dict(a)
    for v, e in b:
        s = acc.get(v, 0) + e
        if s:
            acc[v] = s
        else:
            del acc[v]
    return tuple(sorted(acc.items()))


def mono_inv(a: Monomial) -> Monomial:
    return tuple((v, -e) for v, e in a)


def mono_dense(a: Monomial, num_vars: int) -> Tuple[int, ...]:
    vec = [0] * num_vars
    for v, e in a:
        if v >= num_vars:
            raise ValueError(f"variable r{v} outside {num_vars} coordinates")
        vec[v] = e
    return tuple(vec)


def mono_str(a: Monomial) -> str:
    if not a:
        return "1"
    return "*".join(f"r{v}" if e == 1 else f"r{v}^{e}" for v, e in a)


class LaurentPoly:
    """Immutable integer Laurent polynomial ``{monomial: coefficient}``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = int(c)
        self._terms: Dict[Monomial, int] = clean
        self._hash: Optional[int] = None

    # construction helpers

    @classmethod
    def _raw(cls, terms: Dict[Monomial, int]) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({ONE_MONOMIAL: int(c)} if c else {})

    @classmethod
    def var(cls, i: int, exp: int = 1) -> "LaurentPoly":
        return cls._raw({monomial({i: exp}): 1})

    @classmethod
    def mono(cls, m: Monomial, coef: int = 1) -> "LaurentPoly":
        return cls._raw({m: int(coef)} if coef else {})

    # accessors

    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def num_vars(self) -> int:
        """One more than the largest variable index that occurs."""
        top = -1
        for m in self._terms:
            if m:
                top = max(top, m[-1][0])
        return top + 1

    def variables(self) -> List[int]:
        return sorted({v for m in self._terms for v, _ in m})

    def sorted_terms(self, num_vars: Optional[int] = None) -> List[Tuple[Monomial, int]]:
        n = self.num_vars() if num_vars is None else num_vars
        return sorted(self._terms.items(), key=lambda t: mono_dense(t[0], n))

    def leading_monomial_index(self) -> Monomial:
        """The lexicographically smallest monomial in the fixed order."""
        return self.sorted_terms()[0][0]

    def coefficient(self, m: Monomial) -> int:
        return self._terms.get(m, 0)

    def __len__(self) -> int:
        return len(self._terms)

    # arithmetic

    def __add__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for m, c in small.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return _coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        out: Dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            return self.inverse_unit() ** (-k)
        result = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse_unit(self) -> "LaurentPoly":
        """Inverse of a +-monomial; raises for anything else."""
        if not self.is_monomial():
            raise ValueError(f"{self} is not a unit of the Laurent ring")
        (m, c), = self._terms.items()
        if c not in (1, -1):
            raise ValueError(f"{self} is not a unit of the Laurent ring")
        return LaurentPoly._raw({mono_inv(m): c})

    def shift(self, m: Monomial) -> "LaurentPoly":
        """Multiply by a monomial (cheaper than a general product)."""
        return LaurentPoly._raw({mono_mul(k, m): c for k, c in self._terms.items()})

    def substitute(self, values: Mapping[int, int]) -> "LaurentPoly":
        """Specialize variables to the integers +-1 (the only values that
        keep Laurent exponents integral), re-collecting terms."""
        out: Dict[Monomial, int] = {}
        for m, c in self._terms.items():
            keep = []
            for v, e in m:
                if v in values:
                    val = values[v]
                    if val not in (1, -1):
                        raise ValueError("Laurent substitution only supports +-1")
                    if val == -1 and e % 2:
                        c = -c
                else:
                    keep.append((v, e))
            km = tuple(keep)
            s = out.get(km, 0) + c
            if s:
                out[km] = s
            else:
                out.pop(km, None)
        return LaurentPoly._raw(out)

    def evaluate(self, values: Mapping[int, int]) -> int:
        """Evaluate at integers; every variable must be assigned."""
        total = 0
        for m, c in self._terms.items():
            term = c
            for v, e in m:
                x = values[v]
                if e < 0:
                    if x not in (1, -1):
                        raise ValueError("negative exponent at a non-unit value")
                    term *= x ** (-e)
                else:
                    term *= x ** e
            total += term
        return total

    # comparisons

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r})"


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)


def poly_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def poly_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


# --- text format -----------------------------------------------------------

def format_poly(p: LaurentPoly, num_vars: Optional[int] = None) -> str:
    if p.is_zero():
        return "0"
    out = []
    for i, (m, c) in enumerate(p.sorted_terms(num_vars)):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not m:
            body = str(a)
        elif a == 1:
            body = mono_str(m)
        else:
            body = f"{a}*{mono_str(m)}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_SPLIT_RE = re.compile(r"(?<!\^)\s*([+-])\s*")
_FACTOR_RE = re.compile(r"^r(\d+)(?:\^(-?\d+))?$")


def parse_poly(text: str) -> LaurentPoly:
    """Parse the text format produced by :func:`format_poly`.

    A minus sign directly after ``^`` belongs to the exponent.
    """
    s = text.strip()
    if s in ("", "0"):
        return ZERO
    pieces = _SPLIT_RE.split(s)
    # pieces alternate: [lead, sign, body, sign, body, ...]
    signed = []
    if pieces[0]:
        signed.append((1, pieces[0]))
    for k in range(1, len(pieces), 2):
        signed.append((-1 if pieces[k] == "-" else 1, pieces[k + 1]))
    out: Dict[Monomial, int] = {}
    for sg, body in signed:
        if not body:
            raise ValueError(f"malformed polynomial {text!r}")
        coef = sg
        exps: Dict[int, int] = {}
        for factor in body.replace(" ", "").split("*"):
            if factor.isdigit():
                coef *= int(factor)
                continue
            m = _FACTOR_RE.match(factor)
            if not m:
                raise ValueError(f"malformed factor {factor!r} in {text!r}")
            v = int(m.group(1))
            exps[v] = exps.get(v, 0) + (int(m.group(2)) if m.group(2) is not None else 1)
        mm = monomial(exps)
        out[mm] = out.get(mm, 0) + coef
    return LaurentPoly(out)


# --- matrices --------------------------------------------------------------

class PolyMatrix:
    """Sparse matrix with :class:`LaurentPoly` entries.

    Only nonzero entries are stored. Instances are treated as immutable;
    :meth:`with_entries` returns modified copies.
    """

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int,
                 entries: Iterable[Tuple[int, int, LaurentPoly]] | Mapping[Tuple[int, int], LaurentPoly] = ()):
        self.rows = rows
        self.cols = cols
        store: Dict[Tuple[int, int], LaurentPoly] = {}
        items = entries.items() if isinstance(entries, Mapping) else (((r, c), p) for r, c, p in entries)
        for (r, c), p in items:
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError(f"entry ({r}, {c}) outside {rows}x{cols}")
            if (r, c) in store:
                raise ValueError(f"duplicate entry at ({r}, {c})")
            p = _coerce(p)
            if p:
                store[(r, c)] = p
        self._entries = store

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "PolyMatrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        ent = {}
        for i, row in enumerate(rows):
            if len(row) != nc:
                raise ValueError("ragged rows")
            for j, x in enumerate(row):
                x = parse_poly(x) if isinstance(x, str) else _coerce(x)
                if x:
                    ent[(i, j)] = x
        return cls(nr, nc, ent)

    def __getitem__(self, key: Tuple[int, int]) -> LaurentPoly:
        return self._entries.get(key, ZERO)

    def entries(self) -> Dict[Tuple[int, int], LaurentPoly]:
        return dict(self._entries)

    def to_rows(self) -> List[List[LaurentPoly]]:
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def with_entries(self, updates: Mapping[Tuple[int, int], LaurentPoly]) -> "PolyMatrix":
        ent = dict(self._entries)
        for k, p in updates.items():
            if p:
                ent[k] = p
            else:
                ent.pop(k, None)
        return PolyMatrix(self.rows, self.cols, ent)

    def permuted(self, row_order: Sequence[int], col_order: Sequence[int]) -> "PolyMatrix":
        """New matrix whose row i is old row ``row_order[i]`` (same for columns)."""
        rpos = {r: i for i, r in enumerate(row_order)}
        cpos = {c: j for j, c in enumerate(col_order)}
        return PolyMatrix(len(row_order), len(col_order),
                          {(rpos[r], cpos[c]): p for (r, c), p in self._entries.items()
                           if r in rpos and c in cpos})

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix(self.rows, self.cols, {k: fn(p) for k, p in self._entries.items()})

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.cols, self.rows, {(c, r): p for (r, c), p in self._entries.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._entries) == (other.rows, other.cols, other._entries)

    def __repr__(self) -> str:
        return f"PolyMatrix({self.rows}x{self.cols}, nnz={len(self._entries)})"


def det(m: PolyMatrix) -> LaurentPoly:
    """Exact determinant by sparse Laplace expansion.

    At each level the row or column with the fewest nonzero entries is
    expanded; results for (row-set, column-set) minors are memoized for
    the duration of the call.
    """
    if m.rows != m.cols:
        raise ValueError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return ONE
    by_row: Dict[int, Dict[int, LaurentPoly]] = {i: {} for i in range(n)}
    for (r, c), p in m.entries().items():
        by_row[r][c] = p
    memo: Dict[Tuple[int, int], LaurentPoly] = {}
    full = (1 << n) - 1

    def minor(rmask: int, cmask: int) -> LaurentPoly:
        if rmask == 0:
            return ONE
        key = (rmask, cmask)
        hit = memo.get(key)
        if hit is not None:
            return hit
        rows = [i for i in range(n) if rmask >> i & 1]
        cols = [j for j in range(n) if cmask >> j & 1]
        # nonzeros per live line
        best_line = None
        best_count = n + 1
        col_hits: Dict[int, List[int]] = {j: [] for j in cols}
        for i in rows:
            live = [j for j in by_row[i] if cmask >> j & 1]
            if len(live) < best_count:
                best_count, best_line = len(live), ("r", i, live)
            for j in live:
                col_hits[j].append(i)
            if best_count == 0:
                break
        if best_count:
            for j in cols:
                if len(col_hits[j]) < best_count:
                    best_count, best_line = len(col_hits[j]), ("c", j, col_hits[j])
        if best_count == 0:
            memo[key] = ZERO
            return ZERO
        kind, idx, others = best_line
        total = ZERO
        if kind == "r":
            rpos = rows.index(idx)
            for j in others:
                cpos = cols.index(j)
                sub = minor(rmask & ~(1 << idx), cmask & ~(1 << j))
                if sub:
                    term = by_row[idx][j] * sub
                    total = total - term if (rpos + cpos) % 2 else total + term
        else:
            cpos = cols.index(idx)
            for i in others:
                rpos = rows.index(i)
                sub = minor(rmask & ~(1 << i), cmask & ~(1 << idx))
                if sub:
                    term = by_row[i][idx] * sub
                    total = total - term if (rpos + cpos) % 2 else total + term
        memo[key] = total
        return total

    return minor(full, full)


def det_permutation(m: PolyMatrix) -> LaurentPoly:
    """Leibniz expansion over all permutations; a slow independent oracle."""
    if m.rows != m.cols:
        raise ValueError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    total = ZERO
    for perm in itertools.permutations(range(n)):
        term = ONE
        for i, j in enumerate(perm):
            x = m[i, j]
            if not x:
                break
            term = term * x
        else:
            inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
            total = total - term if inversions % 2 else total + term
    return total


def det_bareiss(m: PolyMatrix) -> LaurentPoly:
    """Fraction-free Bareiss elimination over the polynomial ring.

    Laurent entries are first made polynomial by multiplying each row by
    a monomial; exact divisions use sympy's multivariate arithmetic.
    """
    import sympy

    if m.rows != m.cols:
        raise ValueError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return ONE
    nv = max([p.num_vars() for p in m.entries().values()] + [1])
    gens = sympy.symbols(f"r0:{nv}")
    # clear negative exponents row by row
    shifts: List[Monomial] = []
    rows = m.to_rows()
    for row in rows:
        lows: Dict[int, int] = {}
        for p in row:
            for mono_, _ in p.items():
                for v, e in mono_:
                    lows[v] = min(lows.get(v, 0), e)
        shifts.append(monomial({v: -e for v, e in lows.items() if e < 0}))

    def to_sympy(p: LaurentPoly):
        return sympy.Poly.from_dict({mono_dense(k, nv): c for k, c in p.items()} or {(0,) * nv: 0},
                                    *gens, domain="ZZ")

    a = [[to_sympy(p.shift(shifts[i])) for p in row] for i, row in enumerate(rows)]
    sign = 1
    prev = sympy.Poly(1, *gens, domain="ZZ")
    for k in range(n - 1):
        if a[k][k].is_zero:
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exquo(prev)
        prev = a[k][k]
    result = LaurentPoly({monomial(enumerate(e)): int(c) for e, c in a[n - 1][n - 1].as_dict().items()})
    total_shift = reduce(mono_mul, shifts, ONE_MONOMIAL)
    return result.shift(mono_inv(total_shift)) * sign


# --- units and supports ----------------------------------------------------

def canonical_form(p: LaurentPoly) -> Tuple[LaurentPoly, Monomial, int]:
    """Split ``p = sign * m * q`` with every variable's minimum exponent in
    ``q`` equal to zero and the lex-smallest coefficient of ``q`` positive.

    Returns ``(q, m, sign)``.
    """
    if p.is_zero():
        raise ValueError("canonical form of the zero polynomial is undefined")
    shift = monomial({v: e for v, e in min_exponents(p).items() if e})
    q = p.shift(mono_inv(shift))
    sign = 1 if q.sorted_terms()[0][1] > 0 else -1
    return (q if sign > 0 else -q), shift, sign


def min_exponents(p: LaurentPoly) -> Dict[int, int]:
    vs = p.variables()
    return {v: min(dict(m).get(v, 0) for m, _ in p.items()) for v in vs}


def equal_up_to_monomial(a: LaurentPoly, b: LaurentPoly) -> Tuple[bool, Optional[LaurentPoly]]:
    """Whether ``a == u * b`` for a unit ``u = +-monomial``; returns ``u`` too."""
    if a.is_zero() or b.is_zero():
        if a.is_zero() and b.is_zero():
            return True, ONE
        return False, None
    qa, ma, sa = canonical_form(a)
    qb, mb, sb = canonical_form(b)
    if qa != qb:
        return False, None
    return True, LaurentPoly.mono(mono_mul(ma, mono_inv(mb)), sa * sb)


def coefficient_signs(p: LaurentPoly) -> set:
    return {1 if c > 0 else -1 for _, c in p.items()}


def support_vectors(p: LaurentPoly, num_vars: int) -> frozenset:
    """Exponent vectors of ``p`` padded to ``num_vars`` coordinates.

    Raises on mixed coefficient signs; warns (but still answers) when some
    coefficient is not +-1.
    """
    if len(coefficient_signs(p)) > 1:
        raise ValueError("support requested for a polynomial with mixed coefficient signs")
    if any(abs(c) != 1 for _, c in p.items()):
        warnings.warn("support taken from a polynomial with non-unit coefficients",
                      NonUnitCoefficientWarning, stacklevel=2)
    return frozenset(mono_dense(m, num_vars) for m, _ in p.items())
