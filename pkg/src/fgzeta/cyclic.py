"""Cyclic series attached to a matrix, via its transition alphabet.

Each letter bundles a support word of one matrix entry with that entry's
row and column.  A sequence of letters gets a weight: zero unless the
indices chain into a closed cycle and the group product of the words
reduces to the identity, otherwise the product of the entry coefficients.
These weights form a cyclic series, so its zeta function factors as an
Euler product over one representative per conjugacy class of primitive
letter words; we pick Lyndon words (lexicographically minimal rotations)
because Duval's algorithm generates them in order at linear cost.
"""

from typing import NamedTuple

from .errors import ResourceLimitError, ValidationError
from .matrix import AlgebraMatrix
from .series import TruncatedSeries
from .words import Word, concat, word_sort_key

DEFAULT_NODE_BOUND = 20_000_000


class Letter(NamedTuple):
    """One transition: ``word`` appears in entry (row, col) of the matrix."""

    word: Word
    row: int
    col: int


def alphabet_of(m: AlgebraMatrix) -> list[Letter]:
    """All letters of ``m`` in a fixed order: (row, col, length, letters)."""
    letters = []
    for i in range(m.dim):
        for j in range(m.dim):
            for w in sorted(m.entries[i][j].terms, key=word_sort_key):
                letters.append(Letter(w, i + 1, j + 1))
    return letters


def _letter_coeff(m: AlgebraMatrix, letter: Letter) -> int:
    if not (1 <= letter.row <= m.dim and 1 <= letter.col <= m.dim):
        raise ValidationError(f"letter {letter} has indices outside the matrix")
    c = m.entries[letter.row - 1][letter.col - 1].coeff(letter.word)
    if c == 0:
        raise ValidationError(
            f"letter {letter} does not occur in entry ({letter.row},{letter.col})")
    return c


def cycle_weight(m: AlgebraMatrix, letters) -> int:
    """Weight of a letter sequence; the empty sequence weighs dim(m).

    Zero unless the column of each letter matches the row of the next
    (cyclically) and the group product of the words is the identity.  The
    group product is tracked incrementally and the walk aborts once the
    running word is too long for the remaining letters to cancel.
    """
    letters = list(letters)
    if not letters:
        return m.dim
    coeffs = [_letter_coeff(m, letter) for letter in letters]
    n = len(letters)
    if letters[-1].col != letters[0].row:
        return 0
    for k in range(n - 1):
        if letters[k].col != letters[k + 1].row:
            return 0
    l_max = max((len(letter.word) for letter in letters), default=0)
    product: Word = ()
    for k, letter in enumerate(letters):
        product = concat(product, letter.word)
        if len(product) > (n - 1 - k) * l_max:
            return 0
    weight = 1
    for c in coeffs:
        weight *= c
    return weight


def cycle_weight_sum(m: AlgebraMatrix, length: int,
                     node_bound: int = DEFAULT_NODE_BOUND) -> int:
    """Total weight over all letter sequences of the given length.

    Only index-chained sequences can weigh anything, so the enumeration
    walks the transition graph; the running group product prunes branches
    that can no longer cancel to the identity.
    """
    if length < 1:
        raise ValidationError("length must be >= 1")
    alphabet = alphabet_of(m)
    l_max = max((len(a.word) for a in alphabet), default=0)
    by_row: dict[int, list[Letter]] = {}
    for letter in alphabet:
        by_row.setdefault(letter.row, []).append(letter)
    visited = 0
    total = 0

    def extend(start_row: int, row: int, depth: int, product: Word, coeff: int):
        nonlocal visited, total
        visited += 1
        if visited > node_bound:
            raise ResourceLimitError(
                f"enumeration bound {node_bound} exceeded at length {length}")
        if depth == length:
            if row == start_row and product == ():
                total += coeff
            return
        for letter in by_row.get(row, ()):
            next_product = concat(product, letter.word)
            if len(next_product) > (length - depth - 1) * l_max:
                continue
            c = m.entries[letter.row - 1][letter.col - 1].terms[letter.word]
            extend(start_row, letter.col, depth + 1, next_product, coeff * c)

    for start_row in range(1, m.dim + 1):
        extend(start_row, start_row, 0, (), 1)
    return total


def lyndon_words(alphabet, max_length: int) -> list[tuple]:
    """All Lyndon words of length <= max_length, lexicographically.

    Duval's generation over the alphabet's given order.  A word is Lyndon
    when it is strictly smaller than all of its proper rotations, which
    makes these words a complete set of representatives of conjugacy
    classes of primitive words.
    """
    alphabet = list(alphabet)
    q = len(alphabet)
    if q == 0:
        raise ValidationError("alphabet must be nonempty")
    if max_length < 1:
        raise ValidationError("max_length must be >= 1")
    out = []
    stack = [-1]
    while stack:
        stack[-1] += 1
        out.append(tuple(stack))
        m = len(stack)
        while len(stack) < max_length:
            stack.append(stack[len(stack) - m])
        while stack and stack[-1] == q - 1:
            stack.pop()
    out.sort(key=lambda w: (len(w), w))
    return [tuple(alphabet[i] for i in w) for w in out]


def _is_minimal_rotation(word: tuple[int, ...]) -> bool:
    n = len(word)
    doubled = word + word
    for shift in range(1, n):
        if doubled[shift: shift + n] <= word:
            return False
    return True


def euler_product(m: AlgebraMatrix, max_length: int,
                  node_bound: int = DEFAULT_NODE_BOUND) -> TruncatedSeries:
    """Product of 1/(1 - weight(l) t^|l|) over Lyndon words l, |l| <= L.

    Letters that do not chain have weight zero and contribute a factor 1,
    so the enumeration is restricted to closed chains in the transition
    graph; factors multiply in increasing (length, lexicographic) order
    for reproducibility.
    """
    if max_length < 1:
        raise ValidationError("max_length must be >= 1")
    alphabet = alphabet_of(m)
    l_max = max((len(a.word) for a in alphabet), default=0)
    by_row: dict[int, list[tuple[int, Letter]]] = {}
    for idx, letter in enumerate(alphabet):
        by_row.setdefault(letter.row, []).append((idx, letter))
    visited = 0
    factors: list[tuple[tuple[int, ...], int]] = []

    def extend(chain: list[int], row: int, product: Word, coeff: int,
               start_row: int, length: int):
        nonlocal visited
        visited += 1
        if visited > node_bound:
            raise ResourceLimitError(
                f"enumeration bound {node_bound} exceeded at length {max_length}")
        depth = len(chain)
        if depth == length:
            if row == start_row and product == ():
                word = tuple(chain)
                if _is_minimal_rotation(word):
                    factors.append((word, coeff))
            return
        for idx, letter in by_row.get(row, ()):
            if chain and idx < chain[0]:
                # some rotation would start with a smaller letter; not Lyndon
                continue
            next_product = concat(product, letter.word)
            if len(next_product) > (length - depth - 1) * l_max:
                continue
            c = m.entries[letter.row - 1][letter.col - 1].terms[letter.word]
            chain.append(idx)
            extend(chain, letter.col, next_product, coeff * c,
                   start_row, length)
            chain.pop()

    for length in range(1, max_length + 1):
        for start_row in range(1, m.dim + 1):
            extend([], start_row, (), 1, start_row, length)

    factors.sort(key=lambda item: (len(item[0]), item[0]))
    result = TruncatedSeries.one(max_length)
    for word, weight in factors:
        factor = TruncatedSeries.one(max_length) - TruncatedSeries.monomial(
            weight, len(word), max_length)
        result = result / factor
    return result


__all__ = [
    "DEFAULT_NODE_BOUND",
    "Letter",
    "alphabet_of",
    "cycle_weight",
    "cycle_weight_sum",
    "euler_product",
    "lyndon_words",
]
