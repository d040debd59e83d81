"""Decisions about the reflected surface: embedded, orientable, Euler data.

The fast path decides everything from the translation lattice, which the
word determines in O(m^2) time: the surface is embedded exactly when the
even translation lattice has order 4 (even dimension) or 8 (odd), and the
reflection group order follows as flip-subgroup order times lattice order.
The verifying path recomputes the group by brute-force closure and the
self-intersection test by exact patch geometry; any disagreement between
the three methods is an internal invariant violation, never a user error.

Orientability: in even dimension the surface and both standard quotients
are orientable.  In odd dimension the surface (and its quotient by the
pair lattice) is orientable exactly when the direction-product translation
falls outside the pair lattice, while the quotient by all even
translations is never orientable.

The Euler characteristic of the compact quotient by twice-integer
translations counts cells of the patch complex: each patch contributes
m/4 vertices, m/2 edges and 1 face once the four-fold vertex and two-fold
edge identifications of an embedded surface are accounted for.  The genus
is reported only where that quotient is orientable (even dimension).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .errors import InternalInvariantError, SurfaceNotEmbeddedError
from .geometry import VertexIncidence, expand_patches, vertex_incidence
from .groups import flip_subgroup_order
from .lattice import (
    TranslationLattice,
    direction_product_translation,
    even_translation_lattice,
    pair_translation_lattice,
)
from .paths import (
    DirectionWord,
    JordanPath,
    SignSymmetry,
    canonicalize,
    format_word,
    gap_invariant,
    path_symmetries,
    validate,
)
from .reflection import filled_cubes, reflection_closure, reflection_generators

__all__ = [
    "EmbeddedDecision",
    "OrientabilityFlags",
    "BoundDiagnostic",
    "DirectionLoadDiagnostic",
    "SurfaceReport",
    "decide_embedded",
    "decide_orientable",
    "euler_genus",
    "edge_bound",
    "per_direction_bound",
    "build_report",
    "CLOSURE_ORACLE_MAX_DIM",
    "GEOMETRY_ORACLE_MAX_DIM",
]

CLOSURE_ORACLE_MAX_DIM = 6
GEOMETRY_ORACLE_MAX_DIM = 5

RULED_OUT = "ruled-out"
MAYBE_EMBEDDED = "maybe-embedded"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class EmbeddedDecision:
    """Embeddedness with its certificate.

    ``lattice_order`` against ``embedded_order`` (4 for even dimension,
    8 for odd) is the primary criterion; ``reflection_group_order`` is
    the implied group size (flip subgroup times lattice).
    """

    embedded: bool
    lattice_order: int
    embedded_order: int
    reflection_group_order: int


def decide_embedded(path: JordanPath) -> EmbeddedDecision:
    lattice = even_translation_lattice(path)
    return _decide_from_lattice(path.dim, lattice)


def _decide_from_lattice(dim: int, lattice: TranslationLattice) -> EmbeddedDecision:
    threshold = 4 if dim % 2 == 0 else 8
    order = flip_subgroup_order(dim) * lattice.order
    return EmbeddedDecision(lattice.order == threshold, lattice.order, threshold, order)


@dataclass(frozen=True)
class OrientabilityFlags:
    """Orientability of the surface and of its two standard quotients."""

    surface: bool
    quotient_by_pair_lattice: bool
    quotient_by_even_translations: bool


def decide_orientable(path: JordanPath) -> OrientabilityFlags:
    if path.dim % 2 == 0:
        return OrientabilityFlags(True, True, True)
    pair = pair_translation_lattice(path)
    extra = direction_product_translation(path)
    surface = not pair.contains(extra)
    return OrientabilityFlags(surface, surface, False)


def euler_genus(path: JordanPath) -> tuple[int, int | None]:
    """Euler characteristic of the compact quotient, and genus when oriented.

    Raises SurfaceNotEmbeddedError on non-embedded surfaces, whose patch
    complex does not satisfy the four-patches-per-vertex identification
    the count relies on.
    """
    lattice = even_translation_lattice(path)
    decision = _decide_from_lattice(path.dim, lattice)
    if not decision.embedded:
        raise SurfaceNotEmbeddedError(
            f"lattice order {decision.lattice_order} != {decision.embedded_order}; "
            "Euler characteristic is defined here only for embedded surfaces"
        )
    m = path.length
    cube_count = decision.reflection_group_order // lattice.order
    chi = cube_count * (4 - m) // 4
    genus = 1 - chi // 2 if path.dim % 2 == 0 else None
    return chi, genus


@dataclass(frozen=True)
class BoundDiagnostic:
    """Outcome of a necessary edge-count condition for embeddedness."""

    verdict: str
    reason: str
    limit: int | None = None
    heuristic: bool = False

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict,
            "reason": self.reason,
            "limit": self.limit,
            "heuristic": self.heuristic,
        }


def edge_bound(dim: int, length: int) -> BoundDiagnostic:
    """Necessary length conditions: cycle capacity and the dimension bounds.

    A simple cycle on the cube has at most 2^dim vertices.  In even
    dimension an embedded surface forces at most 4(dim-1) edges; in odd
    dimension the working bound 8(dim-3)+18 is applied and flagged as
    heuristic (it rests on the even-dimensional argument applied
    coordinate-wise, not on a full proof).
    """
    capacity = 1 << dim
    if length > capacity:
        return BoundDiagnostic(
            RULED_OUT,
            f"{length} edges exceed the {capacity}-vertex cycle capacity of the "
            f"{dim}-cube",
            capacity,
        )
    if dim % 2 == 0:
        limit = 4 * (dim - 1)
        if length > limit:
            return BoundDiagnostic(
                RULED_OUT,
                f"{length} edges exceed the embedded-surface limit {limit} "
                f"for dimension {dim}",
                limit,
            )
        return BoundDiagnostic(MAYBE_EMBEDDED, f"within the limit {limit}", limit)
    limit = 8 * (dim - 3) + 18
    if length > limit:
        return BoundDiagnostic(
            RULED_OUT,
            f"{length} edges exceed the working odd-dimension limit {limit}",
            limit,
            heuristic=True,
        )
    return BoundDiagnostic(
        MAYBE_EMBEDDED, f"within the working limit {limit}", limit, heuristic=True
    )


@dataclass(frozen=True)
class DirectionLoadDiagnostic:
    """Per-direction edge counts against the four-edge ceiling (even dim).

    An embedded surface in even dimension admits at most four edges per
    direction; a direction carrying exactly four forces every lattice
    element to vanish on that axis (recorded in ``constrained_axes``).
    """

    verdict: str
    reason: str
    counts: tuple[int, ...]
    overloaded_axes: tuple[int, ...] = ()
    constrained_axes: tuple[int, ...] = ()

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict,
            "reason": self.reason,
            "counts": list(self.counts),
            "overloaded_axes": list(self.overloaded_axes),
            "constrained_axes": list(self.constrained_axes),
        }


def per_direction_bound(path: JordanPath) -> DirectionLoadDiagnostic:
    counts = [0] * path.dim
    for label in path.word.labels:
        counts[label - 1] += 1
    counts_t = tuple(counts)
    if path.dim % 2:
        return DirectionLoadDiagnostic(
            NOT_APPLICABLE,
            "per-direction ceiling applies to even dimension only",
            counts_t,
        )
    overloaded = tuple(d + 1 for d, c in enumerate(counts) if c > 4)
    constrained = tuple(d + 1 for d, c in enumerate(counts) if c == 4)
    if overloaded:
        return DirectionLoadDiagnostic(
            RULED_OUT,
            f"direction(s) {list(overloaded)} carry more than 4 edges",
            counts_t,
            overloaded,
            constrained,
        )
    return DirectionLoadDiagnostic(
        MAYBE_EMBEDDED,
        "no direction carries more than 4 edges",
        counts_t,
        (),
        constrained,
    )


@dataclass(frozen=True)
class SurfaceReport:
    """Everything the tool can say about one loop's periodic surface."""

    dim: int
    word: DirectionWord
    canonical: DirectionWord
    length: int
    lattice: TranslationLattice
    reflection_group_order: int
    embedded: bool
    orientable: OrientabilityFlags
    euler_char: int | None
    genus: int | None
    symmetries: tuple[SignSymmetry, ...]
    gaps: tuple[tuple[int, ...], ...]
    edge_bound: BoundDiagnostic
    direction_load: DirectionLoadDiagnostic
    family: dict[str, Any] | None = None
    oracle_checks: dict[str, Any] | None = None
    notes: tuple[str, ...] = ()

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "schema": 1,
            "dim": self.dim,
            "word": _word_str(self.word),
            "canonical": _word_str(self.canonical),
            "m": self.length,
            "embedded": self.embedded,
            "s_q_order": self.reflection_group_order,
            "lattice_basis": [
                [entry // 2 for entry in row] for row in self.lattice.basis_vectors()
            ],
            "lattice_order": self.lattice.order,
            "orientable_sigma": self.orientable.surface,
            "orientable_quotient_lambda0": self.orientable.quotient_by_pair_lattice,
            "orientable_quotient_2z": self.orientable.quotient_by_even_translations,
            "euler_char": self.euler_char,
            "genus": self.genus,
            "symmetries": [
                {
                    "flips": list(s.flips),
                    "orientation_preserving": s.orientation_preserving,
                }
                for s in self.symmetries
            ],
            "family": self.family,
            "oracle_checks": self.oracle_checks,
            "gap_invariant": [list(v) for v in self.gaps],
            "bounds": {
                "edge_bound": self.edge_bound.to_json_dict(),
                "direction_load": self.direction_load.to_json_dict(),
            },
            "notes": list(self.notes),
        }

    def render_text(self) -> str:
        lines = [
            f"word:       {_word_str(self.word)}",
            f"canonical:  {format_word(self.canonical.labels)}"
            + (f"  ({self.canonical.compact()})" if self.dim <= 9 else ""),
            f"dim:        {self.dim}   edges: {self.length}",
            f"embedded:   {_yn(self.embedded)}   "
            f"(lattice order {self.lattice.order}, "
            f"reflection group order {self.reflection_group_order})",
            "orientable: "
            f"surface {_yn(self.orientable.surface)}; "
            f"quotient/pair-lattice "
            f"{_yn(self.orientable.quotient_by_pair_lattice)}; "
            f"quotient/even-translations "
            f"{_yn(self.orientable.quotient_by_even_translations)}",
        ]
        if self.euler_char is not None:
            genus = "n/a" if self.genus is None else str(self.genus)
            lines.append(f"euler char: {self.euler_char}   genus: {genus}")
        basis = (
            " ".join(str(v).replace(" ", "") for v in self.lattice.basis_vectors())
            or "(trivial)"
        )
        lines.append(f"lattice:    {basis}")
        if self.symmetries:
            syms = " ".join(
                str(s.flips).replace(" ", "") for s in self.symmetries
            )
        else:
            syms = "none"
        lines.append(f"symmetries: {syms}")
        lines.append(
            f"bounds:     {self.edge_bound.verdict} ({self.edge_bound.reason}); "
            f"direction load {self.direction_load.verdict}"
        )
        if self.family:
            lines.append(f"family:     {self.family}")
        if self.oracle_checks:
            lines.append(f"oracles:    {self.oracle_checks}")
        for note in self.notes:
            lines.append(f"note:       {note}")
        return "\n".join(lines)


def _word_str(word: DirectionWord) -> str:
    return word.compact() if word.dim <= 9 else format_word(word.labels)


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def build_report(
    word: DirectionWord | JordanPath | Sequence[int] | str,
    dim: int | None = None,
    mode: str = "fast",
    force: bool = False,
    family: dict[str, Any] | None = None,
) -> SurfaceReport:
    """Assemble the full report for a loop, in fast or verifying mode.

    Fast mode derives everything from the translation lattice.  Verifying
    mode additionally runs the brute-force group closure (dimension <=
    CLOSURE_ORACLE_MAX_DIM unless forced) and the exact geometric
    self-intersection test (dimension <= GEOMETRY_ORACLE_MAX_DIM unless
    forced), and raises InternalInvariantError if any method disagrees —
    that would falsify the underlying classification, not the input.
    """
    if mode not in ("fast", "verify"):
        raise ValueError(f"mode must be 'fast' or 'verify', not {mode!r}")
    path = _coerce_path(word, dim)
    n = path.dim
    m = path.length
    lattice = even_translation_lattice(path)
    decision = _decide_from_lattice(n, lattice)
    orientable = decide_orientable(path)
    if decision.embedded:
        chi, genus = euler_genus(path)
    else:
        chi, genus = None, None
    symmetries = path_symmetries(path)
    notes = _report_notes(path, decision.embedded, symmetries)
    oracle_checks = None
    if mode == "verify":
        oracle_checks = _run_oracles(path, lattice, decision, force)
    return SurfaceReport(
        dim=n,
        word=path.word,
        canonical=canonicalize(path.word),
        length=m,
        lattice=lattice,
        reflection_group_order=decision.reflection_group_order,
        embedded=decision.embedded,
        orientable=orientable,
        euler_char=chi,
        genus=genus,
        symmetries=symmetries,
        gaps=gap_invariant(path.word),
        edge_bound=edge_bound(n, m),
        direction_load=per_direction_bound(path),
        family=family,
        oracle_checks=oracle_checks,
        notes=notes,
    )


def _coerce_path(
    word: DirectionWord | JordanPath | Sequence[int] | str, dim: int | None
) -> JordanPath:
    if isinstance(word, JordanPath):
        return word
    if isinstance(word, str):
        from .paths import parse_word

        if dim is None:
            raise ValueError("dim is required when passing a word string")
        return validate(parse_word(word, dim))
    if isinstance(word, DirectionWord):
        return validate(word)
    if dim is None:
        raise ValueError("dim is required when passing a bare label sequence")
    return validate(word, dim)


def _report_notes(
    path: JordanPath, embedded: bool, symmetries: tuple[SignSymmetry, ...]
) -> tuple[str, ...]:
    notes = [
        "walk base normalized to the all-plus cube corner; every reported "
        "quantity is independent of that choice",
        "the lattice shown is the part determined by the word alone; an "
        "initial surface with extra sign symmetries can enlarge the full "
        "translation lattice (the symmetry list above is the available proxy)",
    ]
    if (
        embedded
        and path.dim % 2 == 0
        and any(s.orientation_preserving for s in symmetries)
    ):
        notes.append(
            "an orientation-preserving sign symmetry exists; if the initial "
            "surface inherits it, the quotient by the enlarged lattice has "
            "lower genus than reported"
        )
    return tuple(notes)


def _run_oracles(
    path: JordanPath,
    lattice: TranslationLattice,
    decision: EmbeddedDecision,
    force: bool,
) -> dict[str, Any]:
    n = path.dim
    checks: dict[str, Any] = {
        "closure_order": None,
        "closure_agrees": None,
        "filled_cube_counts_equal": None,
        "geometric_max_multiplicity": None,
        "geometric_embedded": None,
        "geometric_agrees": None,
    }
    closure = None
    if n <= CLOSURE_ORACLE_MAX_DIM or force:
        closure = reflection_closure(reflection_generators(path))
        checks["closure_order"] = closure.order
        product = flip_subgroup_order(n) * lattice.order
        closure_embedded = closure.order == 1 << (n + 2)
        agree = closure.order == product and closure_embedded == decision.embedded
        checks["closure_agrees"] = agree
        cubes = filled_cubes(closure)
        counts = set(cubes.large_cube_counts.values())
        checks["filled_cube_counts_equal"] = (
            len(counts) == 1 and closure.order == (1 << n) * counts.pop()
        )
        if not agree:
            raise InternalInvariantError(
                f"group closure order {closure.order} disagrees with the "
                f"lattice-derived order {product} "
                f"(lattice order {lattice.order})"
            )
        if not checks["filled_cube_counts_equal"]:
            raise InternalInvariantError(
                "filled-cube counts are not balanced across the large cubes"
            )
    if n <= GEOMETRY_ORACLE_MAX_DIM or force:
        incidence = _geometric_verdict(path, closure)
        checks["geometric_max_multiplicity"] = incidence.max_multiplicity
        checks["geometric_embedded"] = incidence.embedded
        checks["geometric_agrees"] = incidence.embedded == decision.embedded
        if not checks["geometric_agrees"]:
            raise InternalInvariantError(
                f"geometric verdict (max multiplicity "
                f"{incidence.max_multiplicity}) disagrees with the lattice "
                f"criterion (embedded={decision.embedded})"
            )
    return checks


def _geometric_verdict(path: JordanPath, closure) -> VertexIncidence:
    patches = expand_patches(path, closure)
    return vertex_incidence(patches)
