"""Decidable forms of the three characterization theorems, checked
exhaustively over enumerated instances.

Write T(n, F) for the tournament obtained from the total order on
0..n-1 by reversing the pair family F.  The theorems verified here, for
n >= 5 unless noted:

Theorem 1 (partial pairings P).  T(n, P) is indecomposable exactly when
P is an irreducible pairing whose support meets every minimal co-module
of the total order.

Theorem 2 (partial quasi-pairings Q, hub partners low < high).  Q is an
irreducible quasi-pairing whose support meets every minimal co-module
exactly when at least one of T(n, Q), T(n, Q) - low, T(n, Q) - high is
indecomposable; at n = 5 only the right-to-left implication is claimed.

Theorem 3 (partial quasi-pairings Q).  T(n, Q) is indecomposable exactly
when (C1) Q is an irreducible quasi-pairing of such a transversal, (C2)
high >= low + 2, (C3) whenever {v, v+2} and {v+1, v+3} both belong to Q
the hub is v or v+3, and (C4) whenever {v, v+1} belongs to Q the hub is
v or v+1 and both hub-1 and hub+1 lie in the support.

Corollaries restrict to full-support families, where the transversal
clause is automatic: irreducibility alone matches indecomposability for
pairings of even ground sets of size >= 6 (Corollary 1) and matches the
deleted-vertex disjunction for quasi-pairings of odd ground sets of size
>= 7 (Corollary 2); for odd sizes >= 5, indecomposability of T(n, Q)
matches conditions (C1)-(C4) with (C4) reduced to hub membership in
{v, v+1} minus the endpoints (Corollary 3).
"""

from __future__ import annotations

import multiprocessing
import time
import warnings
from dataclasses import dataclass, field

from .comodules import is_transversal, minimal_comodules_total_order
from .core import delete_vertex, is_indecomposable, reverse_pairs, transitive
from .enumeration import EnumSpec, enumerate_families
from .pairs import (
    PairFamily,
    anatomy,
    classify,
    is_irreducible_pairing,
    is_irreducible_quasi,
)

# The characterizations are stated for ground sets of at least 5 vertices.
CHARACTERIZATION_MIN_N = 5


@dataclass(frozen=True)
class TheoremInstance:
    """Both sides of one theorem check, with per-condition detail booleans."""

    n: int
    family: PairFamily
    lhs: bool
    rhs: bool
    details: dict[str, bool]
    in_hypothesis: bool = True
    label: str = ""

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "pairs": self.family.serialize(),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "details": dict(self.details),
            "in_hypothesis": self.in_hypothesis,
            "label": self.label,
        }


@dataclass
class VerificationReport:
    """Outcome of checking one theorem over a range of ambient sizes."""

    theorem: int | str
    n_min: int
    n_max: int
    checked: int = 0
    violations: list[TheoremInstance] = field(default_factory=list)
    recorded: list[TheoremInstance] = field(default_factory=list)
    ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "n_range": [self.n_min, self.n_max],
            "checked": self.checked,
            "violations": [inst.to_record() for inst in self.violations],
            "recorded": [inst.to_record() for inst in self.recorded],
            "ms": round(self.ms, 3),
        }


def _warn_outside_hypothesis(n: int) -> None:
    if n < CHARACTERIZATION_MIN_N:
        warnings.warn(
            f"characterizations are stated for n >= {CHARACTERIZATION_MIN_N}; "
            f"n={n} is computed but outside the hypothesis",
            stacklevel=3,
        )


def _theorem1_instance(n: int, family: PairFamily) -> TheoremInstance:
    if classify(family) != "pairing":
        raise ValueError("theorem 1 takes a partial pairing")
    irreducible = is_irreducible_pairing(family)
    transversal = is_transversal(family.support, minimal_comodules_total_order(n))
    lhs = is_indecomposable(reverse_pairs(transitive(n), family))
    return TheoremInstance(
        n,
        family,
        lhs,
        irreducible and transversal,
        {"irreducible": irreducible, "transversal": transversal},
        in_hypothesis=n >= CHARACTERIZATION_MIN_N,
        label="theorem1",
    )


def _theorem2_instance(n: int, family: PairFamily) -> TheoremInstance:
    shape = anatomy(family)
    t = reverse_pairs(transitive(n), family)
    whole = is_indecomposable(t)
    drop_low = is_indecomposable(delete_vertex(t, shape.low))
    drop_high = is_indecomposable(delete_vertex(t, shape.high))
    lhs = is_irreducible_quasi(family) and is_transversal(
        family.support, minimal_comodules_total_order(n)
    )
    return TheoremInstance(
        n,
        family,
        lhs,
        whole or drop_low or drop_high,
        {"whole": whole, "drop_low": drop_low, "drop_high": drop_high},
        in_hypothesis=n >= CHARACTERIZATION_MIN_N,
        label="theorem2",
    )


def theorem1_sides(n: int, family: PairFamily) -> tuple[bool, bool]:
    """(indecomposable, irreducible-transversal) for a partial pairing."""
    _warn_outside_hypothesis(n)
    inst = _theorem1_instance(n, family)
    return inst.lhs, inst.rhs


def theorem2_sides(n: int, family: PairFamily) -> tuple[bool, bool]:
    """(irreducible-transversal, some-deletion-indecomposable) for a quasi-pairing."""
    _warn_outside_hypothesis(n)
    inst = _theorem2_instance(n, family)
    return inst.lhs, inst.rhs


def theorem3_conditions(n: int, family: PairFamily) -> tuple[bool, bool, bool, bool]:
    """The four conditions (C1)-(C4) for a partial quasi-pairing.

    (C3) and (C4) quantify v over all vertices; membership tests make
    out-of-range references fail the antecedent or the consequent as
    written, so no extra range guards are needed.
    """
    _warn_outside_hypothesis(n)
    shape = anatomy(family)
    supp = family.support
    pairset = set(family.pairs)
    c1 = is_irreducible_quasi(family) and is_transversal(
        supp, minimal_comodules_total_order(n)
    )
    c2 = shape.high >= shape.low + 2
    c3 = not any(
        (v, v + 2) in pairset
        and (v + 1, v + 3) in pairset
        and shape.hub not in (v, v + 3)
        for v in range(n)
    )
    c4 = not any(
        (v, v + 1) in pairset
        and not (
            shape.hub in (v, v + 1)
            and shape.hub - 1 in supp
            and shape.hub + 1 in supp
        )
        for v in range(n)
    )
    if c4 and any((v, v + 1) in pairset for v in range(n)):
        # The containment requirement already rules out the endpoints.
        assert shape.hub not in (0, n - 1)
    return c1, c2, c3, c4


def theorem3_check(n: int, family: PairFamily) -> TheoremInstance:
    """Indecomposability of the reversed tournament against conditions (C1)-(C4)."""
    c1, c2, c3, c4 = theorem3_conditions(n, family)
    lhs = is_indecomposable(reverse_pairs(transitive(n), family))
    return TheoremInstance(
        n,
        family,
        lhs,
        c1 and c2 and c3 and c4,
        {"c1": c1, "c2": c2, "c3": c3, "c4": c4},
        in_hypothesis=n >= CHARACTERIZATION_MIN_N,
        label="theorem3",
    )


def _theorem3_instance(n: int, family: PairFamily) -> TheoremInstance:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return theorem3_check(n, family)


_BUILDERS = {1: _theorem1_instance, 2: _theorem2_instance, 3: _theorem3_instance}
_KIND_FOR = {1: "partial-pairing", 2: "partial-quasi", 3: "partial-quasi"}


def _build_instance(args: tuple[int, int, PairFamily]) -> TheoremInstance:
    theorem, n, family = args
    return _BUILDERS[theorem](n, family)


def _map_instances(
    theorem: int, n: int, families: list[PairFamily], jobs: int
) -> list[TheoremInstance]:
    if jobs <= 1 or len(families) < 64:
        return [_BUILDERS[theorem](n, f) for f in families]
    tasks = [(theorem, n, f) for f in families]
    with multiprocessing.Pool(jobs) as pool:
        chunk = max(16, len(tasks) // (jobs * 8))
        return pool.map(_build_instance, tasks, chunksize=chunk)


def _file_instance(report: VerificationReport, theorem: int, inst: TheoremInstance) -> None:
    report.checked += 1
    if theorem == 2:
        if inst.n >= 6:
            if inst.lhs != inst.rhs:
                report.violations.append(inst)
        elif inst.n == 5:
            # Only the right-to-left implication is claimed at n = 5;
            # converse failures are recorded, not counted as violations.
            if inst.rhs and not inst.lhs:
                report.violations.append(inst)
            elif inst.lhs and not inst.rhs:
                report.recorded.append(inst)
    elif inst.in_hypothesis and inst.lhs != inst.rhs:
        report.violations.append(inst)


def verify_range(
    theorem: int,
    n_min: int,
    n_max: int,
    jobs: int = 1,
    max_n: int | None = None,
) -> VerificationReport:
    """Check one theorem over every enumerated instance with n_min <= n <= n_max.

    Instances outside the stated hypothesis are evaluated and tagged but
    never counted as violations.  Instance order is the enumeration
    order, independent of the job count.
    """
    if theorem not in _BUILDERS:
        raise ValueError(f"unknown theorem id {theorem!r}, want 1, 2, or 3")
    if n_min > n_max:
        raise ValueError(f"empty range {n_min}..{n_max}")
    start = time.perf_counter()
    report = VerificationReport(theorem, n_min, n_max)
    for n in range(n_min, n_max + 1):
        families = list(enumerate_families(EnumSpec(n, _KIND_FOR[theorem]), max_n=max_n))
        for inst in _map_instances(theorem, n, families, jobs):
            _file_instance(report, theorem, inst)
    report.ms = (time.perf_counter() - start) * 1000
    return report


def _corollary1_instance(n: int, family: PairFamily) -> TheoremInstance:
    lhs = is_irreducible_pairing(family)
    rhs = is_indecomposable(reverse_pairs(transitive(n), family))
    transversal = is_transversal(family.support, minimal_comodules_total_order(n))
    assert transversal, "full support must meet every minimal co-module"
    return TheoremInstance(
        n, family, lhs, rhs, {"transversal": transversal}, label="corollary1"
    )


def _corollary2_instance(n: int, family: PairFamily) -> TheoremInstance:
    shape = anatomy(family)
    t = reverse_pairs(transitive(n), family)
    whole = is_indecomposable(t)
    drop_low = is_indecomposable(delete_vertex(t, shape.low))
    drop_high = is_indecomposable(delete_vertex(t, shape.high))
    lhs = is_irreducible_quasi(family)
    return TheoremInstance(
        n,
        family,
        lhs,
        whole or drop_low or drop_high,
        {"whole": whole, "drop_low": drop_low, "drop_high": drop_high},
        label="corollary2",
    )


def _corollary3_instance(n: int, family: PairFamily) -> TheoremInstance:
    shape = anatomy(family)
    pairset = set(family.pairs)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        c1_full, c2, c3, c4_general = theorem3_conditions(n, family)
    r1 = is_irreducible_quasi(family)
    # Full support makes the transversal clause automatic.
    assert c1_full == r1
    r4 = not any(
        (v, v + 1) in pairset
        and shape.hub not in {v, v + 1} - {0, n - 1}
        for v in range(n)
    )
    # On full support the two readings of the adjacent-pair condition agree.
    assert r4 == c4_general
    lhs = is_indecomposable(reverse_pairs(transitive(n), family))
    return TheoremInstance(
        n,
        family,
        lhs,
        r1 and c2 and c3 and r4,
        {"c1": r1, "c2": c2, "c3": c3, "c4": r4},
        label="corollary3",
    )


def corollary_checks(n: int, max_n: int | None = None) -> VerificationReport:
    """Check every corollary applicable at n over full-support families.

    Even n >= 6 exercises Corollary 1 over pairings of 0..n-1; odd
    n >= 5 exercises Corollary 3, and odd n >= 7 also Corollary 2, over
    quasi-pairings of 0..n-1.
    """
    start = time.perf_counter()
    report = VerificationReport("corollaries", n, n)
    instances: list[TheoremInstance] = []
    if n % 2 == 0 and n >= 6:
        for family in enumerate_families(EnumSpec(n, "pairing"), max_n=max_n):
            instances.append(_corollary1_instance(n, family))
    if n % 2 == 1 and n >= 5:
        families = list(enumerate_families(EnumSpec(n, "quasi"), max_n=max_n))
        for family in families:
            instances.append(_corollary3_instance(n, family))
        if n >= 7:
            for family in families:
                instances.append(_corollary2_instance(n, family))
    for inst in instances:
        report.checked += 1
        if inst.lhs != inst.rhs:
            report.violations.append(inst)
    report.ms = (time.perf_counter() - start) * 1000
    return report


def corollaries_range(n_min: int, n_max: int, max_n: int | None = None) -> VerificationReport:
    """Merge corollary checks over a range of ambient sizes."""
    if n_min > n_max:
        raise ValueError(f"empty range {n_min}..{n_max}")
    start = time.perf_counter()
    merged = VerificationReport("corollaries", n_min, n_max)
    for n in range(n_min, n_max + 1):
        one = corollary_checks(n, max_n=max_n)
        merged.checked += one.checked
        merged.violations.extend(one.violations)
        merged.recorded.extend(one.recorded)
    merged.ms = (time.perf_counter() - start) * 1000
    return merged
