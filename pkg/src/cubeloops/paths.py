"""Edge loops on the unit n-cube: representation, validation, canonical forms.

A loop is written as a *direction word*: the sequence of coordinate
directions (labels 1..n) of its edges, read along the loop.  Starting from
a cube vertex, each label flips one coordinate between -1/2 and +1/2, so a
word describes a closed walk exactly when every label occurs an even number
of times.  The walk is a *Jordan path* when additionally it visits pairwise
distinct vertices and uses every direction at least once (so the loop spans
the cube rather than a face).

Vertices are stored as sign bitmasks: bit i set means coordinate i+1 sits
at -1/2.  The walk base vertex is normalized to (+1/2, ..., +1/2) (mask 0);
validity, canonical forms, and the symmetry set are all independent of that
choice, which the report layer records as a normalization note.

Two words describe the same unoriented loop up to cube symmetry when one
arises from the other by cyclic shifts, order reversal, and relabeling of
directions.  ``canonicalize`` picks one representative per equivalence
class: among all rotations of the word and of its reversal it minimizes,
first, the cyclic repeat-distance profile (for each position, the distance
back to the previous edge in the same direction), and then the word itself
after relabeling directions in first-occurrence order.  Comparing the
repeat profile before the labels makes the choice depend on the loop's
parallelism structure first and on naming only as a tie-break.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence

from .errors import (
    BadLabelError,
    MissingDirectionError,
    NotClosedError,
    NotEmbeddedError,
    OddLengthError,
)

__all__ = [
    "DirectionWord",
    "CanonicalWord",
    "JordanPath",
    "SignSymmetry",
    "parse_word",
    "validate",
    "canonicalize",
    "gap_invariant",
    "walk_vertices",
    "path_symmetries",
]


@dataclass(frozen=True, order=True)
class DirectionWord:
    """A raw edge word.  Only the label range is checked at construction;
    the Jordan-path requirements are certified by :func:`validate`."""

    labels: tuple[int, ...]
    dim: int

    def __post_init__(self) -> None:
        for lab in self.labels:
            if not 1 <= lab <= self.dim:
                raise BadLabelError(
                    f"label {lab} out of range 1..{self.dim} in word "
                    f"{format_word(self.labels)}"
                )

    def __len__(self) -> int:
        return len(self.labels)

    def compact(self) -> str:
        """Digit string, only well-defined for dim <= 9."""
        return "".join(str(lab) for lab in self.labels)


class CanonicalWord(DirectionWord):
    """A direction word that is the fixed point chosen by :func:`canonicalize`."""


def format_word(labels: Sequence[int]) -> str:
    return " ".join(str(lab) for lab in labels)


def parse_word(text: str, dim: int) -> DirectionWord:
    """Parse an edge word with or without separators.

    For dim <= 9 each digit is one label, so ``12314234`` and ``1 2 3 1 4 2
    3 4`` agree.  For dim > 9 labels must be separated by whitespace or
    commas (``"3 12 3 12"``), since a digit run would be ambiguous.
    """
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    if not tokens:
        raise BadLabelError("empty word")
    if any(not t.isdigit() for t in tokens):
        bad = next(t for t in tokens if not t.isdigit())
        raise BadLabelError(f"not a direction label: {bad!r}")
    if dim <= 9:
        labels = tuple(int(ch) for tok in tokens for ch in tok)
    else:
        labels = tuple(int(tok) for tok in tokens)
    return DirectionWord(labels, dim)


@dataclass(frozen=True)
class JordanPath:
    """A validated closed embedded covering walk, with its vertex trail.

    ``vertex_masks[i]`` is the vertex the walk occupies *before* edge i+1;
    the trail starts at ``base_mask`` and the final edge returns there.
    """

    word: DirectionWord
    base_mask: int
    vertex_masks: tuple[int, ...] = field(repr=False)

    @property
    def dim(self) -> int:
        return self.word.dim

    @property
    def length(self) -> int:
        return len(self.word.labels)


def validate(
    word: DirectionWord | Sequence[int],
    dim: int | None = None,
    base_mask: int = 0,
) -> JordanPath:
    """Check the Jordan-path requirements and return the certified walk.

    Raises, in order of precedence: BadLabelError (label out of range),
    OddLengthError, NotClosedError (some label count odd),
    MissingDirectionError (a direction never used), NotEmbeddedError
    (the walk revisits a vertex).
    """
    if not isinstance(word, DirectionWord):
        if dim is None:
            raise ValueError("dim is required when passing a bare label sequence")
        word = DirectionWord(tuple(word), dim)
    labels = word.labels
    n = word.dim
    if len(labels) % 2:
        raise OddLengthError(
            f"word has odd length {len(labels)}; closed walks have even length"
        )
    counts = [0] * (n + 1)
    for lab in labels:
        counts[lab] += 1
    odd = [d for d in range(1, n + 1) if counts[d] % 2]
    if odd:
        raise NotClosedError(
            f"direction(s) {odd} used an odd number of times; the walk cannot close"
        )
    missing = [d for d in range(1, n + 1) if counts[d] == 0]
    if missing:
        raise MissingDirectionError(
            f"direction(s) {missing} never used; the loop must span all {n} directions"
        )
    trail = []
    vertex = base_mask
    seen = 0
    for lab in labels:
        if (seen >> vertex) & 1:
            raise NotEmbeddedError(
                f"walk revisits a vertex after {len(trail)} edges; "
                "the loop must be simple"
            )
        seen |= 1 << vertex
        trail.append(vertex)
        vertex ^= 1 << (lab - 1)
    # even counts force the walk back to its base
    assert vertex == base_mask
    return JordanPath(word, base_mask, tuple(trail))


def walk_vertices(path: JordanPath) -> tuple[tuple[float, ...], ...]:
    """The m distinct walk vertices as points of {-1/2, +1/2}^n, base first."""
    n = path.dim
    return tuple(
        tuple(-0.5 if (mask >> i) & 1 else 0.5 for i in range(n))
        for mask in path.vertex_masks
    )


# ---------------------------------------------------------------------------
# canonical forms


def _relabel_first_occurrence(labels: Sequence[int]) -> tuple[int, ...]:
    mapping: dict[int, int] = {}
    out = []
    for lab in labels:
        if lab not in mapping:
            mapping[lab] = len(mapping) + 1
        out.append(mapping[lab])
    return tuple(out)


def _repeat_profile(labels: Sequence[int]) -> tuple[int, ...]:
    """Cyclic distance from each position to the previous same-direction edge."""
    m = len(labels)
    prev: dict[int, int] = {}
    for i in range(m - 1, -1, -1):  # seed with wrapped-around predecessors
        if labels[i] not in prev:
            prev[labels[i]] = i - m
    out = []
    for i, lab in enumerate(labels):
        out.append(i - prev[lab])
        prev[lab] = i
    return tuple(out)


def canonicalize(word: DirectionWord) -> CanonicalWord:
    """Representative of the word's class under shift, reversal, relabeling.

    Requires a closed word (every label count even); embeddedness and
    coverage are not needed.  Idempotent and constant on equivalence
    classes, and the result introduces labels in increasing order.
    """
    labels = word.labels
    m = len(labels)
    best: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    for seq in (labels, labels[::-1]):
        profile = _repeat_profile(seq)
        for r in range(m):
            rotated_profile = profile[r:] + profile[:r]
            if best is not None and rotated_profile > best[0]:
                continue
            candidate = (rotated_profile, _relabel_first_occurrence(seq[r:] + seq[:r]))
            if best is None or candidate < best:
                best = candidate
    assert best is not None
    return CanonicalWord(best[1], word.dim)


def gap_invariant(word: DirectionWord) -> tuple[tuple[int, ...], ...]:
    """Multiset of per-direction cyclic gap vectors, as a sorted tuple.

    For each direction, the gaps are the cyclic distances between its
    consecutive occurrences; each gap vector is taken up to rotation and
    reversal.  The multiset is unchanged by all four word symmetries, so
    distinct invariants certify distinct classes (the converse can fail).
    """
    m = len(word.labels)
    positions: dict[int, list[int]] = {}
    for i, lab in enumerate(word.labels):
        positions.setdefault(lab, []).append(i)
    vectors = []
    for pos in positions.values():
        gaps = tuple(
            (pos[(k + 1) % len(pos)] - pos[k]) % m for k in range(len(pos))
        )
        vectors.append(_min_cyclic(gaps))
    return tuple(sorted(vectors))


def _min_cyclic(vec: tuple[int, ...]) -> tuple[int, ...]:
    k = len(vec)
    candidates = [vec[r:] + vec[:r] for r in range(k)]
    rev = vec[::-1]
    candidates += [rev[r:] + rev[:r] for r in range(k)]
    return min(candidates)


# ---------------------------------------------------------------------------
# sign-change symmetries


@dataclass(frozen=True, order=True)
class SignSymmetry:
    """A coordinate sign change mapping the loop onto itself as a point set.

    ``orientation_preserving`` is decided by flip-count parity for even
    dimensions and left undetermined (None) for odd ones, where the parity
    of a representing rotation word is not a function of the sign change
    alone.
    """

    flips: tuple[int, ...]
    orientation_preserving: bool | None

    @property
    def mask(self) -> int:
        return sum(1 << i for i, f in enumerate(self.flips) if f)


def path_symmetries(path: JordanPath) -> tuple[SignSymmetry, ...]:
    """All nontrivial sign changes preserving the loop's edge set.

    A sign change acts on vertex masks by XOR, so the check is purely
    combinatorial.  The result does not depend on the base vertex: moving
    the base translates every edge by the same XOR, which commutes with
    the symmetry action.
    """
    n = path.dim
    edges = _edge_set(path)
    out = []
    for mask in range(1, 1 << n):
        mapped = {(a ^ mask, b ^ mask) if a ^ mask < b ^ mask else (b ^ mask, a ^ mask)
                  for a, b in edges}
        if mapped == edges:
            preserving = (mask.bit_count() % 2 == 0) if n % 2 == 0 else None
            out.append(
                SignSymmetry(tuple((mask >> i) & 1 for i in range(n)), preserving)
            )
    return tuple(sorted(out))


def _edge_set(path: JordanPath) -> set[tuple[int, int]]:
    edges = set()
    masks = path.vertex_masks
    m = len(masks)
    for i, lab in enumerate(path.word.labels):
        a = masks[i]
        b = masks[(i + 1) % m]
        edges.add((a, b) if a < b else (b, a))
    return edges
