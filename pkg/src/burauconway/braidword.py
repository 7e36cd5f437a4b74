"""Braid words and the combinatorial operations applied to them.

A letter ``g > 0`` stands for sigma_g and ``g < 0`` for sigma_|g|^-1.
Permutations are composed left to right along the word: strand positions are
pushed through each crossing in reading order.
"""

from __future__ import annotations

from dataclasses import dataclass


class BraidError(ValueError):
    pass


class BadLetter(BraidError):
    pass


class StrandMismatch(BraidError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise BraidError(f"need at least 2 strands, got {self.strands}")
        letters = tuple(int(g) for g in self.letters)
        for g in letters:
            if g == 0 or abs(g) >= self.strands:
                raise BadLetter(f"letter {g} out of range for {self.strands} strands")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        return concat(self, other)

    def __str__(self):
        return " ".join(str(g) for g in self.letters)

    @property
    def exponent_sum(self) -> int:
        return sum(1 if g > 0 else -1 for g in self.letters)

    def pretty(self) -> str:
        """Compact sigma notation with run-length exponents."""
        if not self.letters:
            return "e"
        out = []
        i = 0
        while i < len(self.letters):
            j = i
            while j < len(self.letters) and self.letters[j] == self.letters[i]:
                j += 1
            g, run = self.letters[i], j - i
            exp = run if g > 0 else -run
            out.append(f"s{abs(g)}" + ("" if exp == 1 else f"^{exp}"))
            i = j
        return " ".join(out)


def parse_braid(text: str, strands: int) -> BraidWord:
    try:
        letters = [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError as exc:
        raise BadLetter(f"cannot parse braid word {text!r}") from exc
    return BraidWord(strands, tuple(letters))


def mirror_star(w: BraidWord) -> BraidWord:
    """Reverse every crossing."""
    return BraidWord(w.strands, tuple(-g for g in w.letters))


def reverse_re(w: BraidWord) -> BraidWord:
    """Read the word backwards, keeping signs."""
    return BraidWord(w.strands, w.letters[::-1])


def inverse(w: BraidWord) -> BraidWord:
    """The group inverse: reversed order, every letter inverted."""
    return BraidWord(w.strands, tuple(-g for g in reversed(w.letters)))


def concat(u: BraidWord, v: BraidWord) -> BraidWord:
    if u.strands != v.strands:
        raise StrandMismatch(f"{u.strands} strands vs {v.strands} strands")
    return BraidWord(u.strands, u.letters + v.letters)


def power(w: BraidWord, k: int) -> BraidWord:
    if k < 0:
        raise ValueError("negative powers must be built explicitly from inverse()")
    return BraidWord(w.strands, w.letters * k)


def ww_star(w: BraidWord, k: int = 1) -> BraidWord:
    """(w w*)^k."""
    return power(concat(w, mirror_star(w)), k)


@dataclass(frozen=True)
class ClosurePermutation:
    """``image[p - 1]`` is where the strand entering at position p leaves (1-based)."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise ValueError(f"{self.image} is not a permutation")

    def __call__(self, p: int) -> int:
        return self.image[p - 1]

    def then(self, other: "ClosurePermutation") -> "ClosurePermutation":
        """Apply self first, then other."""
        return ClosurePermutation(tuple(other(self(p)) for p in range(1, len(self.image) + 1)))

    def cycle_type(self) -> tuple[int, ...]:
        seen = set()
        lengths = []
        for start in range(1, len(self.image) + 1):
            if start in seen:
                continue
            length, p = 0, start
            while p not in seen:
                seen.add(p)
                p = self(p)
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    def is_full_cycle(self) -> bool:
        return self.cycle_type() == (len(self.image),)


def closure_permutation(w: BraidWord) -> ClosurePermutation:
    # occupant[p] is the strand currently at position p; each crossing swaps two slots
    occupant = list(range(w.strands + 1))
    for g in w.letters:
        i = abs(g)
        occupant[i], occupant[i + 1] = occupant[i + 1], occupant[i]
    image = [0] * w.strands
    for p in range(1, w.strands + 1):
        image[occupant[p] - 1] = p
    return ClosurePermutation(tuple(image))


def is_knot_closure(w: BraidWord) -> bool:
    return closure_permutation(w).is_full_cycle()

