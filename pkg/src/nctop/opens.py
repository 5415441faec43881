"""Basic open sets of representations, compared up to the required factors.

A word is a sequence of letters (sets of simples). A representation lies in
the left open of ``V_1 ... V_k`` when some Jordan-Hölder factor order starts
with factors in ``V_1, ..., V_k``; the right open looks at the last ``k``
factors and the scattered open at any increasing subsequence. Joins of words
are kept as finite word sets (:class:`LatticeElement`).

Order and equivalence are only tested on representations whose factor
multiset can host every letter of both sides (the per-letter maximum count),
and always relative to an explicit finite universe of representations.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence, Union

from .kernel import LatticeInstance, is_cover
from .quiver import Quiver, simples
from .rep import Representation, jh_sequences


class Flavor(str, Enum):
    LEFT = "l"
    RIGHT = "r"
    SCATTERED = "o"


@dataclass(frozen=True)
class Letter:
    """An open set of simples. Cofinite letters are normalised on construction."""

    simples: frozenset[str]

    @classmethod
    def of(cls, *names: str) -> "Letter":
        return cls(frozenset(names))

    @classmethod
    def cofinite(cls, excluded: Iterable[str], all_simples: Iterable[str]) -> "Letter":
        return cls(frozenset(all_simples) - frozenset(excluded))

    def __contains__(self, s: str) -> bool:
        return s in self.simples

    def sort_key(self):
        return (len(self.simples), tuple(sorted(self.simples)))

    def __str__(self):
        return "{" + ",".join(sorted(self.simples)) + "}"


@dataclass(frozen=True)
class Word:
    letters: tuple[Letter, ...]
    flavor: Flavor = Flavor.LEFT

    def __len__(self):
        return len(self.letters)

    def __add__(self, other: "Word") -> "Word":
        if self.flavor != other.flavor:
            raise ValueError("cannot concatenate words of different flavors")
        return Word(self.letters + other.letters, self.flavor)

    def sort_key(self):
        return (len(self.letters), tuple(l.sort_key() for l in self.letters))

    def __str__(self):
        return f"{self.flavor.value} " + "".join(str(l) for l in self.letters)


def word(flavor: Flavor | str, *letters: Letter | Iterable[str]) -> Word:
    """``word("l", {"S2"}, {"S1"})`` builds the left word ``{S2}{S1}``."""
    built = tuple(l if isinstance(l, Letter) else Letter(frozenset(l)) for l in letters)
    return Word(built, Flavor(flavor))


@dataclass(frozen=True)
class LatticeElement:
    """A finite join of basic opens sharing one flavor."""

    words: tuple[Word, ...]

    def __post_init__(self):
        if not self.words:
            raise ValueError("a lattice element needs at least one word")
        if len({w.flavor for w in self.words}) != 1:
            raise ValueError("all words of a lattice element share one flavor")
        canon = tuple(sorted(set(self.words), key=Word.sort_key))
        object.__setattr__(self, "words", canon)

    @property
    def flavor(self) -> Flavor:
        return self.words[0].flavor

    def __str__(self):
        return " v ".join(str(w) for w in self.words)


Element = Union[Word, LatticeElement]


def as_element(x: Element) -> LatticeElement:
    return x if isinstance(x, LatticeElement) else LatticeElement((x,))


def _words(x: Element) -> tuple[Word, ...]:
    return (x,) if isinstance(x, Word) else x.words


def empty_letter() -> Letter:
    return Letter(frozenset())


def full_letter(q: Quiver, p: int) -> Letter:
    return Letter(frozenset(simples(q, p)))


def zero(q: Quiver, p: int, flavor: Flavor | str = Flavor.LEFT) -> LatticeElement:
    return as_element(word(flavor, empty_letter()))


def one(q: Quiver, p: int, flavor: Flavor | str = Flavor.LEFT) -> LatticeElement:
    return as_element(word(flavor, full_letter(q, p)))


def all_letters(q: Quiver, p: int) -> list[Letter]:
    names = simples(q, p)
    out = [
        Letter(frozenset(c)) for k in range(len(names) + 1) for c in itertools.combinations(names, k)
    ]
    return sorted(out, key=Letter.sort_key)


def words_up_to(alphabet: Sequence[Letter], max_len: int, flavor: Flavor | str, min_len: int = 1) -> list[Word]:
    flavor = Flavor(flavor)
    return [
        Word(tuple(ls), flavor)
        for k in range(min_len, max_len + 1)
        for ls in itertools.product(alphabet, repeat=k)
    ]


def sequence_matches(seq: Sequence[str], w: Word) -> bool:
    """Does one factor order realise the word in the word's flavor?"""
    k, u = len(w.letters), len(seq)
    if k > u:
        return False
    if w.flavor is Flavor.LEFT:
        return all(seq[i] in w.letters[i] for i in range(k))
    if w.flavor is Flavor.RIGHT:
        return all(seq[u - k + j] in w.letters[j] for j in range(k))
    # leftmost greedy placement is optimal for subsequence matching
    j = 0
    for s in seq:
        if j < k and s in w.letters[j]:
            j += 1
    return j == k


def matching_sequence(m: Representation, x: Element) -> tuple[str, ...] | None:
    """A factor order of ``m`` realising some word of ``x``, or None."""
    for seq in sorted(jh_sequences(m)):
        if any(sequence_matches(seq, w) for w in _words(x)):
            return seq
    return None


def member(m: Representation, x: Element) -> bool:
    seqs = jh_sequences(m)
    return any(sequence_matches(s, w) for w in _words(x) for s in seqs)


LetterMultiset = tuple[tuple[Letter, int], ...]


def multiset_union(*words: Element) -> LetterMultiset:
    """Each letter as often as its largest count in any single word given."""
    best: dict[Letter, int] = {}
    for x in words:
        for w in _words(x):
            for letter, n in Counter(w.letters).items():
                best[letter] = max(best.get(letter, 0), n)
    return tuple(sorted(best.items(), key=lambda kv: kv[0].sort_key()))


def factors_host(factors: Sequence[str], ms: LetterMultiset) -> bool:
    """Bipartite matching of letter instances into distinct factors."""
    slots = [letter for letter, n in ms for _ in range(n)]
    if len(slots) > len(factors):
        return False
    owner: list[int | None] = [None] * len(factors)

    def augment(i: int, seen: set) -> bool:
        for f, s in enumerate(factors):
            if f in seen or s not in slots[i]:
                continue
            seen.add(f)
            if owner[f] is None or augment(owner[f], seen):
                owner[f] = i
                return True
        return False

    return all(augment(i, set()) for i in range(len(slots)))


def rep_has_multiset(m: Representation, ms: LetterMultiset) -> bool:
    seq = next(iter(jh_sequences(m)))
    return factors_host(seq, ms)


class Universe:
    """A finite list of representations with membership caches."""

    def __init__(self, reps: Iterable[Representation]):
        self.reps = list(reps)
        self.seqs = [jh_sequences(m) for m in self.reps]
        self.factors = [next(iter(s)) for s in self.seqs]
        self._member: dict[tuple[int, Word], bool] = {}
        self._host: dict[tuple[int, LetterMultiset], bool] = {}

    def __len__(self):
        return len(self.reps)

    def member(self, i: int, x: Element) -> bool:
        for w in _words(x):
            key = (i, w)
            hit = self._member.get(key)
            if hit is None:
                hit = self._member[key] = any(sequence_matches(s, w) for s in self.seqs[i])
            if hit:
                return True
        return False

    def hosts(self, i: int, ms: LetterMultiset) -> bool:
        key = (i, ms)
        hit = self._host.get(key)
        if hit is None:
            hit = self._host[key] = factors_host(self.factors[i], ms)
        return hit

    def counterexample(self, x: Element, y: Element) -> Representation | None:
        ms = multiset_union(x, y)
        for i, m in enumerate(self.reps):
            if self.hosts(i, ms) and self.member(i, x) and not self.member(i, y):
                return m
        return None


def _universe(u) -> Universe:
    return u if isinstance(u, Universe) else Universe(u)


def counterexample(x: Element, y: Element, universe) -> Representation | None:
    """A representation hosting both sides' letters that lies in x but not y."""
    return _universe(universe).counterexample(x, y)


def leq(x: Element, y: Element, universe) -> bool:
    return counterexample(x, y, universe) is None


def equiv(x: Element, y: Element, universe) -> bool:
    u = _universe(universe)
    return u.counterexample(x, y) is None and u.counterexample(y, x) is None


def wedge(x: Element, y: Element) -> LatticeElement:
    """Concatenation, distributed over joins."""
    return LatticeElement(tuple(a + b for a in _words(x) for b in _words(y)))


def vee(x: Element, y: Element) -> LatticeElement:
    return LatticeElement(_words(x) + _words(y))


def as_lattice(
    q: Quiver,
    p: int,
    flavor: Flavor | str,
    universe,
    letter_alphabet: Sequence[Letter] | None = None,
) -> "OpenLattice":
    return OpenLattice(q, p, Flavor(flavor), _universe(universe), letter_alphabet)


class OpenLattice(LatticeInstance):
    """Basic opens of one flavor as a :class:`LatticeInstance` over a fixed universe."""

    def __init__(self, q: Quiver, p: int, flavor: Flavor, universe: Universe, alphabet=None):
        self.quiver, self.p, self.flavor, self.universe = q, p, flavor, universe
        self.alphabet = list(alphabet) if alphabet is not None else all_letters(q, p)
        u = universe
        super().__init__(
            leq=lambda x, y: u.counterexample(x, y) is None,
            eq=lambda x, y: u.counterexample(x, y) is None and u.counterexample(y, x) is None,
            zero=zero(q, p, flavor),
            one=one(q, p, flavor),
            wedge=wedge,
            vee=vee,
            witness=u.counterexample,
            name=f"{q.name or 'Q'}/{flavor.value}/F{p}",
        )

    def sample(self, max_len: int) -> list[LatticeElement]:
        return [as_element(w) for w in words_up_to(self.alphabet, max_len, self.flavor)]

    def covers(self, max_size: int = 2) -> list[tuple[LatticeElement, ...]]:
        """Sets of at most ``max_size`` single-letter words that join to 1."""
        letters = [as_element(Word((l,), self.flavor)) for l in self.alphabet]
        out = []
        for k in range(1, max_size + 1):
            for c in itertools.combinations(letters, k):
                if is_cover(self, c):
                    out.append(c)
        return out
