"""Free-group words and abelianized Fox derivatives.

A word is a tuple of ``(generator, +-1)`` letters, kept exactly as recorded.
Derivatives are computed directly in the abelianization, i.e. as Laurent
polynomials in the generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .polyring import ONE, LaurentPoly, PolyMatrix, det, mono_mul, monomial

Letter = Tuple[int, int]


@dataclass(frozen=True)
class Word:
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        for g, e in self.letters:
            if e not in (1, -1) or g < 0:
                raise ValueError(f"bad letter ({g}, {e})")

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse ``"r3 r2^-1 r3 r0^-1"``."""
        letters = []
        for tok in text.split():
            name, _, exp = tok.partition("^")
            if not name.startswith("r") or not name[1:].isdigit():
                raise ValueError(f"bad letter {tok!r}")
            e = int(exp) if exp else 1
            if e not in (1, -1):
                raise ValueError(f"letter exponent must be +-1 in {tok!r}")
            letters.append((int(name[1:]), e))
        return cls(tuple(letters))

    def __str__(self) -> str:
        return " ".join(f"r{g}" if e == 1 else f"r{g}^-1" for g, e in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def reduce(self) -> "Word":
        stack: List[Letter] = []
        for g, e in self.letters:
            if stack and stack[-1] == (g, -e):
                stack.pop()
            else:
                stack.append((g, e))
        return Word(tuple(stack))

    def abelianize(self) -> LaurentPoly:
        return LaurentPoly.mono(monomial(self.letters))

    def generators(self) -> List[int]:
        return sorted({g for g, _ in self.letters})


def fox_derivative(w: Word, gen: int) -> LaurentPoly:
    """Abelianized Fox derivative of ``w`` with respect to ``gen``."""
    terms = {}
    prefix = ()
    for g, e in w.letters:
        if g == gen:
            m = prefix if e == 1 else mono_mul(prefix, ((g, -1),))
            terms[m] = terms.get(m, 0) + e
        prefix = mono_mul(prefix, ((g, e),))
    return LaurentPoly(terms)


def fox_jacobian(words: Sequence[Word], gens: Sequence[int]) -> PolyMatrix:
    """Matrix whose (i, j) entry is the derivative of ``words[j]`` by ``gens[i]``."""
    return PolyMatrix(len(gens), len(words),
                      {(i, j): fox_derivative(w, g)
                       for i, g in enumerate(gens) for j, w in enumerate(words)})


def torsion_determinant(words: Sequence[Word], active_gens: Sequence[int],
                        keep_symbolic: bool = False) -> LaurentPoly:
    """Determinant of the Fox Jacobian over ``active_gens``.

    Letters of generators outside ``active_gens`` (the base region's ``r0``)
    are set to 1 after differentiation unless ``keep_symbolic`` is true.
    """
    if len(words) != len(active_gens):
        raise ValueError(f"{len(words)} words for {len(active_gens)} generators")
    d = det(fox_jacobian(words, active_gens))
    if keep_symbolic:
        return d
    passive = {g for w in words for g in w.generators()} - set(active_gens)
    return d.substitute({g: 1 for g in passive})


def fundamental_identity_lhs(w: Word, gens: Iterable[int]) -> LaurentPoly:
    """``sum_a d_a(w) * (a - 1)``; equals ``ab(w) - 1`` when ``gens`` covers ``w``."""
    total = LaurentPoly()
    for g in gens:
        total = total + fox_derivative(w, g) * (LaurentPoly.var(g) - ONE)
    return total
