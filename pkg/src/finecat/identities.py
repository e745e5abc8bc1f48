"""Registry of identities about the Fine tower, and the engine that checks them.

Each :class:`IdentityRecord` pairs two exact evaluators over a domain of (n, k) cells.
Statements that are known to be misprinted are registered twice: the printed form,
expected to fail, and a corrected form, expected to hold. The engine reports a
verdict per record together with the failing cells. Statements that divide are
registered with both sides multiplied through, so every comparison is between integers.

Evaluators look formulas up through their modules (``closedforms.g3_closed``) at call
time, so replacing one formula affects every record that depends on it.
"""

from __future__ import annotations

import json
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import comb, factorial, prod
from typing import Callable, Dict, Iterator, List, Optional, Tuple, Union

from pydantic import BaseModel, Field, computed_field, model_validator

from . import closedforms, core, oracle
from .validators import UnknownIdentityError, validate_positive

logger = logging.getLogger(__name__)

Value = Union[int, Tuple[int, ...]]
Cell = Tuple[int, Optional[int]]
Domain = Callable[[int], Iterator[Cell]]
Evaluator = Callable[[int, Optional[int]], Value]


class Variant(str, Enum):
    AS_PRINTED = "as_printed"
    CORRECTED = "corrected"


class Expectation(str, Enum):
    PASS = "pass"
    FAIL_AS_PRINTED = "fail_as_printed"


class Status(str, Enum):
    VERIFIED = "verified"
    FALSIFIED = "falsified"


@dataclass(frozen=True)
class IdentityRecord:
    """One equality lhs(n, k) == rhs(n, k) over a domain of cells.

    ``cap`` bounds n for records backed by exhaustive enumeration. A record expected
    to fail names its corrected counterpart in ``pair``.
    """

    id: str
    description: str
    domain: Domain
    lhs: Evaluator
    rhs: Evaluator
    variant: Variant = Variant.AS_PRINTED
    expected: Expectation = Expectation.PASS
    cap: Optional[int] = None
    pair: Optional[str] = None

    @property
    def family(self) -> str:
        return self.id.split(".", 1)[0]

    def effective_max_n(self, max_n: int) -> int:
        return min(max_n, self.cap) if self.cap is not None else max_n


class Counterexample(BaseModel):
    """A cell where the two sides differ, values as exact decimal strings."""

    n: int
    k: Optional[int] = None
    lhs: str
    rhs: str

    def cell(self) -> str:
        return f"({self.n},{self.k})" if self.k is not None else f"(n={self.n})"


class VerdictReport(BaseModel):
    """Verdict of one record over every in-domain cell with n <= max_n."""

    id: str
    description: str
    variant: Variant
    expected: Expectation
    max_n: int
    cases: int
    status: Status
    counterexamples: List[Counterexample] = Field(default_factory=list)
    total_counterexamples: int = 0
    elapsed: float = Field(default=0.0, exclude=True)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def vacuous(self) -> bool:
        return self.cases == 0

    @computed_field  # type: ignore[prop-decorator]
    @property
    def matches_expected(self) -> bool:
        holds = self.status == Status.VERIFIED
        return holds == (self.expected == Expectation.PASS)

    @model_validator(mode="after")
    def _falsified_needs_evidence(self) -> VerdictReport:
        if self.status == Status.FALSIFIED and not self.counterexamples:
            raise ValueError(f"{self.id}: a falsified verdict needs a counterexample")
        return self


class IdentityRegistry:
    """Ordered collection of identity records."""

    def __init__(self) -> None:
        self._records: Dict[str, IdentityRecord] = {}

    def register(self, record: IdentityRecord) -> IdentityRecord:
        if record.id in self._records:
            raise ValueError(f"Identity already registered: {record.id}")
        self._records[record.id] = record
        return record

    def check_pairs(self) -> None:
        """Every record expected to fail must point at a registered correction."""
        for record in self._records.values():
            if record.expected == Expectation.FAIL_AS_PRINTED:
                paired = self._records.get(record.pair or "")
                if paired is None or paired.expected != Expectation.PASS:
                    raise ValueError(f"{record.id} has no registered corrected variant")

    def get(self, identity_id: str) -> IdentityRecord:
        try:
            return self._records[identity_id]
        except KeyError:
            raise UnknownIdentityError(f"Unknown identity: {identity_id}") from None

    def select(self, identity_id: str) -> List[IdentityRecord]:
        """An exact id, or every variant of a family such as ``I-exotic-8``."""
        if identity_id in self._records:
            return [self._records[identity_id]]
        family = [r for r in self._records.values() if r.family == identity_id]
        if not family:
            raise UnknownIdentityError(f"Unknown identity: {identity_id}")
        return family

    def ids(self) -> List[str]:
        return list(self._records)

    def __iter__(self) -> Iterator[IdentityRecord]:
        return iter(self._records.values())

    def __len__(self) -> int:
        return len(self._records)


def _render(value: Value) -> str:
    if isinstance(value, tuple):
        return "(" + ", ".join(_render(item) for item in value) + ")"
    return str(value)


class IdentityRunner:
    """Evaluates registry records and builds verdict reports."""

    def __init__(self, registry: IdentityRegistry, max_counterexamples: int = 25):
        self.registry = registry
        self.max_counterexamples = max_counterexamples

    def run_record(self, record: IdentityRecord, max_n: int) -> VerdictReport:
        validate_positive(max_n, "max_n")
        limit = record.effective_max_n(max_n)
        started = time.perf_counter()
        cases = 0
        failures: List[Counterexample] = []
        total_failures = 0

        for n, k in record.domain(limit):
            cases += 1
            try:
                lhs, rhs = record.lhs(n, k), record.rhs(n, k)
                agree = lhs == rhs
                lhs_text, rhs_text = _render(lhs), _render(rhs)
            except (ArithmeticError, ValueError) as e:
                agree = False
                lhs_text, rhs_text = f"error: {type(e).__name__}: {e}", "-"
            if not agree:
                total_failures += 1
                if len(failures) < self.max_counterexamples:
                    failures.append(Counterexample(n=n, k=k, lhs=lhs_text, rhs=rhs_text))

        report = VerdictReport(
            id=record.id,
            description=record.description,
            variant=record.variant,
            expected=record.expected,
            max_n=limit,
            cases=cases,
            status=Status.FALSIFIED if total_failures else Status.VERIFIED,
            counterexamples=failures,
            total_counterexamples=total_failures,
            elapsed=time.perf_counter() - started,
        )
        logger.debug(f"{record.id}: {report.status.value} on {cases} cases in {report.elapsed:.3f}s")
        if not report.matches_expected:
            logger.warning(
                f"{record.id} is {report.status.value}, expected {record.expected.value}"
            )
        return report

    def run_identity(self, identity_id: str, max_n: int) -> VerdictReport:
        return self.run_record(self.registry.get(identity_id), max_n)

    def run_records(
        self, records: List[IdentityRecord], max_n: int, workers: int = 1
    ) -> List[VerdictReport]:
        """Run records, optionally on a thread pool; reports keep the input order."""
        validate_positive(workers, "workers")
        if workers == 1:
            return [self.run_record(record, max_n) for record in records]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda record: self.run_record(record, max_n), records))

    def run_all(self, max_n: int, workers: int = 1) -> List[VerdictReport]:
        return self.run_records(list(self.registry), max_n, workers)


def suite_ok(reports: List[VerdictReport]) -> bool:
    """True when every record came out as registered."""
    return all(report.matches_expected for report in reports)


def report_lines(reports: List[VerdictReport]) -> List[str]:
    """Line-oriented rendering: one summary line per record plus its counterexamples."""
    lines = []
    for report in reports:
        flag = "ok" if report.matches_expected else "MISMATCH"
        vacuous = " vacuous" if report.vacuous else ""
        lines.append(
            f"{report.id} {report.status.value} n<={report.max_n} cases={report.cases}"
            f"{vacuous} expected={report.expected.value} [{flag}]"
        )
        for example in report.counterexamples:
            lines.append(f"  {example.cell()} lhs={example.lhs} rhs={example.rhs}")
        hidden = report.total_counterexamples - len(report.counterexamples)
        if hidden > 0:
            lines.append(f"  ... {hidden} more")
    return lines


def reports_to_json(reports: List[VerdictReport]) -> str:
    document = {
        "ok": suite_ok(reports),
        "reports": [report.model_dump(mode="json") for report in reports],
    }
    return json.dumps(document, indent=2)


# Domains -------------------------------------------------------------------


def _cells(max_n: int, n_min: int = 1) -> Iterator[Cell]:
    for n in range(n_min, max_n + 1):
        for k in range(1, n + 1):
            yield n, k


def _strict_cells(max_n: int) -> Iterator[Cell]:
    """1 <= k < n."""
    for n in range(2, max_n + 1):
        for k in range(1, n):
            yield n, k


def _exotic_cells(max_n: int) -> Iterator[Cell]:
    """1 <= k < n - 1."""
    for n in range(3, max_n + 1):
        for k in range(1, n - 1):
            yield n, k


def _interior_cells(max_n: int) -> Iterator[Cell]:
    """n, k > 1 with k <= n."""
    for n in range(2, max_n + 1):
        for k in range(2, n + 1):
            yield n, k


def _shifted_cells(max_n: int) -> Iterator[Cell]:
    """1 <= k < n with n + 1 <= max_n, for statements about row n + 1."""
    for n in range(2, max_n):
        for k in range(1, n):
            yield n, k


def _vanishing_cells(max_n: int) -> Iterator[Cell]:
    """0 <= n < k <= max_n."""
    for k in range(1, max_n + 1):
        for n in range(0, k):
            yield n, k


def _rows(n_min: int = 1) -> Domain:
    def domain(max_n: int) -> Iterator[Cell]:
        for n in range(n_min, max_n + 1):
            yield n, None

    return domain


# Shared evaluations ---------------------------------------------------------


@lru_cache(maxsize=None)
def _tower(length: int) -> Tuple[core.Sequence, ...]:
    return core.fine_tower(length)


@lru_cache(maxsize=None)
def _conv(m: int, order: int) -> core.Triangle:
    return core.convolution_triangle(_tower(order)[m - 1], order)


@lru_cache(maxsize=None)
def _matrix(m: int, order: int) -> core.Triangle:
    return core.triangle_times_pascal_power(_conv(1, order), m - 1)


@lru_cache(maxsize=None)
def _conv_times_pascal(m: int, order: int) -> core.Triangle:
    return core.triangle_times_pascal_power(_conv(m, order), 1)


def _f(m: int, n: int) -> int:
    return _tower(n)[m](n)


def _closed(m: int, n: int, k: int) -> int:
    return closedforms.closed_form(m)(n, k)


def _fine(n: int) -> int:
    return _f(0, n)


def _catalan_args(length: int, shift: int) -> closedforms.BellInput:
    return closedforms.bell_arguments(core.catalan_sequence(length, shift))


def _misprinted_catalan_args(length: int) -> closedforms.BellInput:
    """(C_1, 2! C_1, 3! C_3, 4! C_4, ...) exactly as the statement lists them."""
    values = []
    for j in range(1, length + 1):
        index = 1 if j <= 2 else j
        values.append(factorial(j) * core.catalan(index))
    return tuple(values)


def _alternating_sum(n: int, k: int, base: int) -> int:
    return sum(base ** (i - k) * comb(i, k) * comb(2 * n, n - i) for i in range(k, n + 1))


def _weighted_central_sum(n: int, base: int) -> int:
    return sum(base ** (i - 1) * i * comb(2 * n, n - i) for i in range(1, n + 1))


def _g2_family(n: int, k: int) -> Tuple[int, ...]:
    values = (
        closedforms.g2_dfact(n, k),
        closedforms.g2_closed(n, k),
        closedforms.g2_alternating(n, k),
        closedforms.g2_product(n, k),
        closedforms.g2_rising(n, k),
    )
    if k < n:
        values += (closedforms.g2_from_g3(n, k),)
    return values


def _mirror_edges(n: int) -> Tuple[int, ...]:
    values = (closedforms.mirror_A(n, 1), closedforms.mirror_A(n, n))
    if n >= 2:
        values += (closedforms.mirror_A(n, n - 1),)
    return values


def _bijection_counts(n: int, k: int) -> Tuple[int, ...]:
    result = oracle.check_bijection(n, k)
    return (result.pairs, result.words, len(result.failures))


def _exotic_eight(binomial_index: Callable[[int, int, int], int]) -> Evaluator:
    def evaluate(n: int, k: Optional[int]) -> int:
        total = sum(
            (k - i) * comb(k, i) * core.binomial(2 * n - 2 * k, binomial_index(n, k, i))
            for i in range(k)
        )
        return factorial(n - k - 1) * total

    return evaluate


def _bell_sum(
    n: int, k: int, args: closedforms.BellInput, fixed_index: bool
) -> int:
    """sum_{i=k}^{n} C(i,k) (i-1)! B_{n,j}(args), with j = k if fixed_index else j = i."""
    if fixed_index:
        weight = sum(comb(i, k) * factorial(i - 1) for i in range(k, n + 1))
        return weight * closedforms.partial_bell(n, k, args)
    return sum(
        comb(i, k) * factorial(i - 1) * closedforms.partial_bell(n, i, args)
        for i in range(k, n + 1)
    )


# Registry -------------------------------------------------------------------


def build_registry() -> IdentityRegistry:
    """All identities and proposition-level checks, in reporting order."""
    registry = IdentityRegistry()
    add = registry.register

    # Partial Bell polynomials, Fine -> Catalan
    add(IdentityRecord(
        id="I-bell-fine.as_printed",
        description="(k-1)! B_{n,k}(C_0, 2!C_1, ...) = sum_i C(i,k)(i-1)! B_{n,k}(F_1, 2!F_2, ...)",
        domain=_cells,
        lhs=lambda n, k: factorial(k - 1) * closedforms.partial_bell(n, k, _catalan_args(n, 0)),
        rhs=lambda n, k: _bell_sum(n, k, closedforms.bell_arguments(_tower(n)[0]), True),
        expected=Expectation.FAIL_AS_PRINTED,
        pair="I-bell-fine.corrected",
    ))
    add(IdentityRecord(
        id="I-bell-fine.corrected",
        description="(k-1)! B_{n,k}(C_0, 2!C_1, ...) = sum_i C(i,k)(i-1)! B_{n,i}(F_1, 2!F_2, ...)",
        domain=_cells,
        lhs=lambda n, k: factorial(k - 1) * closedforms.partial_bell(n, k, _catalan_args(n, 0)),
        rhs=lambda n, k: _bell_sum(n, k, closedforms.bell_arguments(_tower(n)[0]), False),
        variant=Variant.CORRECTED,
    ))

    # Partial Bell polynomials, Catalan -> shifted Catalan
    add(IdentityRecord(
        id="I-bell-catalan.as_printed",
        description="(k-1)! B_{n,k}(C_1, 2!C_1, 3!C_3, ...) = sum_i C(i,k)(i-1)! B_{n,k}(C_0, 2!C_1, ...)",
        domain=_cells,
        lhs=lambda n, k: factorial(k - 1) * closedforms.partial_bell(n, k, _misprinted_catalan_args(n)),
        rhs=lambda n, k: _bell_sum(n, k, _catalan_args(n, 0), True),
        expected=Expectation.FAIL_AS_PRINTED,
        pair="I-bell-catalan.corrected",
    ))
    add(IdentityRecord(
        id="I-bell-catalan.corrected",
        description="(k-1)! B_{n,k}(C_1, 2!C_2, 3!C_3, ...) = sum_i C(i,k)(i-1)! B_{n,i}(C_0, 2!C_1, ...)",
        domain=_cells,
        lhs=lambda n, k: factorial(k - 1) * closedforms.partial_bell(n, k, _catalan_args(n, 1)),
        rhs=lambda n, k: _bell_sum(n, k, _catalan_args(n, 0), False),
        variant=Variant.CORRECTED,
    ))
    add(IdentityRecord(
        id="P-bell-scaling",
        description="k! B_{n,k}(1!f(1), 2!f(2), ...) = n! g_m(n,k) for f = f_{m-1}, m = 1..4",
        domain=_cells,
        lhs=lambda n, k: tuple(
            factorial(k) * closedforms.partial_bell(n, k, closedforms.bell_arguments(_tower(n)[m - 1]))
            for m in range(1, 5)
        ),
        rhs=lambda n, k: tuple(factorial(n) * _closed(m, n, k) for m in range(1, 5)),
    ))

    # g_2 and its mirror
    add(IdentityRecord(
        id="I-vanish",
        description="n < k: sum_{i=0}^{k} (-1)^(i+n) C(k,i) prod_{t<n} (i-2t) = 0",
        domain=_vanishing_cells,
        lhs=lambda n, k: sum(
            (-1) ** (i + n) * comb(k, i) * prod(i - 2 * t for t in range(n))
            for i in range(k + 1)
        ),
        rhs=lambda n, k: 0,
    ))
    add(IdentityRecord(
        id="I-vertical",
        description="n > k > 1: k/(n-k) C(2n-k-1,n) = sum_{i=k-1}^{n-2} i/(n-i-1) C(2n-3-i,n-1) + 1, "
        "both sides times (n-k)!",
        domain=lambda max_n: ((n, k) for n, k in _strict_cells(max_n) if k > 1),
        lhs=lambda n, k: k * comb(2 * n - k - 1, n) * factorial(n - k - 1),
        rhs=lambda n, k: sum(
            i * comb(2 * n - 3 - i, n - 1) * (factorial(n - k) // (n - i - 1))
            for i in range(k - 1, n - 1)
        ) + factorial(n - k),
    ))
    add(IdentityRecord(
        id="I-card-ballot",
        description="ballot words with n-1 ones, k-1 zeros = 2-colored paths with n-k hills "
        "in color 2 = A(n,k)",
        domain=_cells,
        lhs=lambda n, k: (oracle.count_ballot(n, k), oracle.count_colored(n, n - k + 1, 2)),
        rhs=lambda n, k: (closedforms.mirror_A(n, k),) * 2,
        cap=10,
    ))
    add(IdentityRecord(
        id="P-bijection",
        description="Dyck <-> ballot bijection: both compositions are identities, |paths| = |words| = A(n,k)",
        domain=_cells,
        lhs=_bijection_counts,
        rhs=lambda n, k: (closedforms.mirror_A(n, k), closedforms.mirror_A(n, k), 0),
        cap=oracle.MAX_BIJECTION_N,
    ))
    add(IdentityRecord(
        id="P-g2-family",
        description="g2_dfact = g2_closed = g2_alternating = g2_product = g2_rising "
        "(= g2_from_g3 for k < n) = convolution of C_0, C_1, ...",
        domain=_cells,
        lhs=_g2_family,
        rhs=lambda n, k: (_conv(2, n)(n, k),) * (6 if k < n else 5),
    ))
    add(IdentityRecord(
        id="P-cik",
        description="1 <= k < n: g_2(n+1,k+1) = g_2(n+1,k+2) + g_2(n,k)",
        domain=_shifted_cells,
        lhs=lambda n, k: closedforms.g2_closed(n + 1, k + 1),
        rhs=lambda n, k: closedforms.g2_closed(n + 1, k + 2) + closedforms.g2_closed(n, k),
    ))
    add(IdentityRecord(
        id="P-rr1",
        description="n, k > 1: g_2(n,k) = sum_{i=k-1}^{n-2} g_2(n-1,i) + 1",
        domain=_interior_cells,
        lhs=lambda n, k: closedforms.g2_closed(n, k),
        rhs=lambda n, k: sum(closedforms.g2_closed(n - 1, i) for i in range(k - 1, n - 1)) + 1,
    ))
    add(IdentityRecord(
        id="P-mirror",
        description="1 <= k < n: A(n+1,k+1) = A(n+1,k) + A(n,k+1)",
        domain=_shifted_cells,
        lhs=lambda n, k: closedforms.mirror_A(n + 1, k + 1),
        rhs=lambda n, k: closedforms.mirror_A(n + 1, k) + closedforms.mirror_A(n, k + 1),
    ))
    add(IdentityRecord(
        id="P-mirror-edges",
        description="A(n,1) = 1, A(n,n) = C_{n-1}, A(n,n-1) = C_{n-1} (n >= 2)",
        domain=_rows(),
        lhs=lambda n, k: _mirror_edges(n),
        rhs=lambda n, k: (1, core.catalan(n - 1)) + ((core.catalan(n - 1),) if n >= 2 else ()),
    ))
    add(IdentityRecord(
        id="P-euler",
        description="n > 1: C_{n-1} = 2^(n-1) (2n-3)!! / n!",
        domain=_rows(2),
        lhs=lambda n, k: closedforms.euler_catalan(n),
        rhs=lambda n, k: core.catalan(n - 1),
    ))
    add(IdentityRecord(
        id="P-segner",
        description="the invert transform of C_0, C_1, ... is C_1, C_2, ...",
        domain=_rows(),
        lhs=lambda n, k: core.invert_transform(core.catalan_sequence(n), n)(n),
        rhs=lambda n, k: core.catalan(n),
    ))

    # g_3
    add(IdentityRecord(
        id="I-binom",
        description="C(2n, n+k) = sum_{i=k}^{n} C(i,k) C(2n-i-1, n-1)",
        domain=_cells,
        lhs=lambda n, k: comb(2 * n, n + k),
        rhs=lambda n, k: sum(comb(i, k) * comb(2 * n - i - 1, n - 1) for i in range(k, n + 1)),
    ))
    add(IdentityRecord(
        id="P-g3-binom",
        description="k/n C(2n, n-k) = k/n sum_{i=k}^{n} C(i,k) C(2n-i-1, n-1)",
        domain=_cells,
        lhs=lambda n, k: closedforms.g3_closed(n, k),
        rhs=lambda n, k: closedforms.g3_binomial_sum(n, k),
    ))
    add(IdentityRecord(
        id="P-f3",
        description="f_3(n) = C(2n-1, n)",
        domain=_rows(),
        lhs=lambda n, k: _f(3, n),
        rhs=lambda n, k: closedforms.f3_closed(n),
    ))

    # g_4 and ternary words
    add(IdentityRecord(
        id="I-card-ternary",
        description="ternary words of length 2n-1 with k-1 twos = 4-colored paths with k-1 "
        "hills in color 4 = g_4(n,k)",
        domain=_cells,
        lhs=lambda n, k: (oracle.count_ternary_g4(n, k), oracle.count_colored(n, k, 4)),
        rhs=lambda n, k: (closedforms.g4_explicit(n, k),) * 2,
        cap=7,
    ))
    add(IdentityRecord(
        id="I-card-ternary-total",
        description="ternary words of length 2n-1 = 4-colored paths = f_4(n)",
        domain=_rows(),
        lhs=lambda n, k: (oracle.count_ternary_f4(n), oracle.count_total(n, 4)),
        rhs=lambda n, k: (_f(4, n),) * 2,
        cap=7,
    ))
    add(IdentityRecord(
        id="P-g4-matrix",
        description="g_4 = g_3 . L entrywise",
        domain=_cells,
        lhs=lambda n, k: closedforms.g4_explicit(n, k),
        rhs=lambda n, k: _conv_times_pascal(3, n)(n, k),
    ))

    # Alternating sums
    add(IdentityRecord(
        id="I-fine-alt",
        description="n F_n = sum_{i=1}^{n} (-2)^(i-1) i C(2n, n-i)",
        domain=_rows(),
        lhs=lambda n, k: n * _fine(n),
        rhs=lambda n, k: _weighted_central_sum(n, -2),
    ))
    add(IdentityRecord(
        id="I-alt-inner",
        description="sum_{k=1}^{n} k (-2)^(n-k) C(n,k) = (-1)^(n-1) n",
        domain=_rows(),
        lhs=lambda n, k: sum(j * (-2) ** (n - j) * comb(n, j) for j in range(1, n + 1)),
        rhs=lambda n, k: (-1) ** (n - 1) * n,
    ))
    add(IdentityRecord(
        id="I-central-alt",
        description="C(2n-2, n-1) = sum_{i=1}^{n} (-1)^(i-1) i C(2n, n-i)",
        domain=_rows(),
        lhs=lambda n, k: comb(2 * n - 2, n - 1),
        rhs=lambda n, k: _weighted_central_sum(n, -1),
    ))
    add(IdentityRecord(
        id="I-g2-alt.as_printed",
        description="n > k: k C(2n-k-1, n) = (n-k) sum_{i=k}^{n} (-1)^(i-k) C(i,k) C(2n, n-i)",
        domain=_strict_cells,
        lhs=lambda n, k: k * comb(2 * n - k - 1, n),
        rhs=lambda n, k: (n - k) * _alternating_sum(n, k, -1),
        expected=Expectation.FAIL_AS_PRINTED,
        pair="I-g2-alt.corrected",
    ))
    add(IdentityRecord(
        id="I-g2-alt.corrected",
        description="n > k: n C(2n-k-1, n) = (n-k) sum_{i=k}^{n} (-1)^(i-k) C(i,k) C(2n, n-i)",
        domain=_strict_cells,
        lhs=lambda n, k: n * comb(2 * n - k - 1, n),
        rhs=lambda n, k: (n - k) * _alternating_sum(n, k, -1),
        variant=Variant.CORRECTED,
    ))
    add(IdentityRecord(
        id="I-catalan-alt",
        description="n C_{n-1} = sum_{i=1}^{n} (-1)^(i-1) i C(2n, n-i)",
        domain=_rows(),
        lhs=lambda n, k: n * core.catalan(n - 1),
        rhs=lambda n, k: _weighted_central_sum(n, -1),
    ))

    # Two long identities
    add(IdentityRecord(
        id="I-exotic-8.as_printed",
        description="k prod_{i=1}^{n-k-1} (n+i) = (n-k-1)! sum_{i=0}^{k-1} (k-i) C(k,i) C(2n-2k, n+2k-i)",
        domain=_exotic_cells,
        lhs=lambda n, k: k * prod(n + i for i in range(1, n - k)),
        rhs=_exotic_eight(lambda n, k, i: n + 2 * k - i),
        expected=Expectation.FAIL_AS_PRINTED,
        pair="I-exotic-8.corrected",
    ))
    add(IdentityRecord(
        id="I-exotic-8.corrected",
        description="k prod_{i=1}^{n-k-1} (n+i) = (n-k-1)! sum_{i=0}^{k-1} (k-i) C(k,i) C(2n-2k, n-i)",
        domain=_exotic_cells,
        lhs=lambda n, k: k * prod(n + i for i in range(1, n - k)),
        rhs=_exotic_eight(lambda n, k, i: n - i),
        variant=Variant.CORRECTED,
    ))
    add(IdentityRecord(
        id="I-exotic-10",
        description="(n-1)! sum_{i=k}^{n} i C(i-1,k-1) C(2n,n-i) = 2^(n-k) sum_{i=1}^{k} "
        "(-1)^(k+i) C(k,i) i(i+2)...(i+2n-2)",
        domain=_cells,
        lhs=lambda n, k: factorial(n - 1) * sum(
            i * comb(i - 1, k - 1) * comb(2 * n, n - i) for i in range(k, n + 1)
        ),
        rhs=lambda n, k: 2 ** (n - k) * sum(
            (-1) ** (k + i) * comb(k, i) * prod(i + 2 * j for j in range(n))
            for i in range(1, k + 1)
        ),
    ))

    # Closed forms against the transform machinery
    for m in range(1, 5):
        add(IdentityRecord(
            id=f"P-g{m}-conv",
            description=f"closed form of g_{m} = {m - 1}-th tower level convolved k times",
            domain=_cells,
            lhs=lambda n, k, m=m: _closed(m, n, k),
            rhs=lambda n, k, m=m: _conv(m, n)(n, k),
        ))
    add(IdentityRecord(
        id="P-routes",
        description="convolution, G_1 . L^(m-1) and closed form agree for m = 1..4",
        domain=_cells,
        lhs=lambda n, k: tuple(
            value for m in range(1, 5) for value in (_conv(m, n)(n, k), _matrix(m, n)(n, k))
        ),
        rhs=lambda n, k: tuple(
            value for m in range(1, 5) for value in (_closed(m, n, k),) * 2
        ),
    ))
    add(IdentityRecord(
        id="P-series",
        description="[x^n] (sum_i f_{m-1}(i) x^i)^k = g_m(n,k) for m = 1..4",
        domain=_cells,
        lhs=lambda n, k: tuple(
            core.series_power_coefficient(_tower(n)[m - 1], k, n) for m in range(1, 5)
        ),
        rhs=lambda n, k: tuple(_conv(m, n)(n, k) for m in range(1, 5)),
    ))
    add(IdentityRecord(
        id="P-tower",
        description="f_1(n) = C_{n-1}, f_2(n) = C_n, f_3(n) = C(2n-1, n)",
        domain=_rows(),
        lhs=lambda n, k: (_f(1, n), _f(2, n), _f(3, n)),
        rhs=lambda n, k: (
            closedforms.f1_closed(n),
            closedforms.f2_closed(n),
            closedforms.f3_closed(n),
        ),
    ))
    add(IdentityRecord(
        id="P-row-sums",
        description="row sums of g_1..g_4 are C_{n-1}, C_n, C(2n-1,n), f_4(n)",
        domain=_rows(),
        lhs=lambda n, k: tuple(
            sum(_closed(m, n, j) for j in range(1, n + 1)) for m in range(1, 5)
        ),
        rhs=lambda n, k: (core.catalan(n - 1), core.catalan(n), comb(2 * n - 1, n), _f(4, n)),
    ))

    # Colored Dyck paths
    add(IdentityRecord(
        id="P-colored",
        description="paths with hills in m colors, k-1 in color m = closed form of g_m, m = 1..4",
        domain=_cells,
        lhs=lambda n, k: tuple(oracle.count_colored(n, k, m) for m in range(1, 5)),
        rhs=lambda n, k: tuple(_closed(m, n, k) for m in range(1, 5)),
        cap=13,
    ))
    add(IdentityRecord(
        id="P-total",
        description="paths with hills in m colors = f_m(n), m = 1..4",
        domain=_rows(),
        lhs=lambda n, k: tuple(oracle.count_total(n, m) for m in range(1, 5)),
        rhs=lambda n, k: tuple(_f(m, n) for m in range(1, 5)),
        cap=13,
    ))
    add(IdentityRecord(
        id="P-fine-hills",
        description="hill-free paths of semilength n-1 = F_n",
        domain=_rows(),
        lhs=lambda n, k: oracle.count_hill_free(n),
        rhs=lambda n, k: _fine(n),
        cap=13,
    ))

    registry.check_pairs()
    return registry


REGISTRY = build_registry()
_default_runner = IdentityRunner(REGISTRY)


def run_identity(identity_id: str, max_n: int) -> VerdictReport:
    """Check one registered identity for every in-domain cell with n <= max_n.

    Raises:
        UnknownIdentityError: If no record has this id
    """
    return _default_runner.run_identity(identity_id, max_n)


def run_all(max_n: int, workers: int = 1) -> List[VerdictReport]:
    """Check every registered identity; reports come back in registry order."""
    return _default_runner.run_all(max_n, workers)
