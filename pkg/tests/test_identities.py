"""Tests for identities module."""

import json

import pytest
from pydantic import ValidationError

from finecat import closedforms, identities
from finecat.identities import (
    Counterexample,
    Expectation,
    IdentityRecord,
    IdentityRegistry,
    IdentityRunner,
    Status,
    Variant,
    VerdictReport,
)
from finecat.validators import InexactDivisionError, UnknownIdentityError

PERTURBABLE = [
    "double_factorial",
    "g2_dfact",
    "g2_product",
    "g2_closed",
    "g2_rising",
    "g2_alternating",
    "g2_from_g3",
    "mirror_A",
    "g3_closed",
    "g3_binomial_sum",
    "g4_explicit",
    "g1_explicit",
    "f1_closed",
    "f2_closed",
    "f3_closed",
    "euler_catalan",
    "partial_bell",
]

PURE_BINOMIAL = [
    "I-vanish",
    "I-vertical",
    "I-binom",
    "I-fine-alt",
    "I-alt-inner",
    "I-central-alt",
    "I-g2-alt.corrected",
    "I-catalan-alt",
    "I-exotic-8.corrected",
    "I-exotic-10",
    "P-cik",
    "P-rr1",
    "P-mirror",
    "P-mirror-edges",
    "P-euler",
    "P-g3-binom",
]


@pytest.fixture(scope="module")
def suite():
    """The whole registry checked up to n = 20."""
    return identities.run_all(20)


class TestRegistry:
    """Tests for the identity registry."""

    def test_ids_unique_and_ordered(self):
        """ids() follows registration order without duplicates."""
        ids = identities.REGISTRY.ids()
        assert len(ids) == len(set(ids)) == len(identities.REGISTRY)
        assert ids[0] == "I-bell-fine.as_printed"

    def test_expected_failures_are_paired(self):
        """Every as-printed failure points at a corrected record expected to pass."""
        for record in identities.REGISTRY:
            if record.expected == Expectation.FAIL_AS_PRINTED:
                paired = identities.REGISTRY.get(record.pair)
                assert paired.variant == Variant.CORRECTED
                assert paired.expected == Expectation.PASS
                assert paired.family == record.family

    def test_select_family(self):
        """A family id selects all of its variants."""
        selected = identities.REGISTRY.select("I-exotic-8")
        assert [r.id for r in selected] == ["I-exotic-8.as_printed", "I-exotic-8.corrected"]

    def test_select_exact(self):
        """An exact id selects one record."""
        assert [r.id for r in identities.REGISTRY.select("I-vanish")] == ["I-vanish"]

    def test_unknown_id_raises(self):
        """Unknown ids raise UnknownIdentityError."""
        with pytest.raises(UnknownIdentityError, match="Unknown identity: nonsense"):
            identities.run_identity("nonsense", 5)
        with pytest.raises(UnknownIdentityError):
            identities.REGISTRY.select("I-nothing")

    def test_duplicate_registration_raises(self):
        """Ids are unique."""
        registry = IdentityRegistry()
        record = identities.REGISTRY.get("I-binom")
        registry.register(record)
        with pytest.raises(ValueError, match="already registered"):
            registry.register(record)

    def test_unpaired_failure_rejected(self):
        """An expected failure needs its correction registered."""
        registry = IdentityRegistry()
        registry.register(
            IdentityRecord(
                id="X.as_printed",
                description="1 = 2",
                domain=lambda max_n: iter([(1, 1)]),
                lhs=lambda n, k: 1,
                rhs=lambda n, k: 2,
                expected=Expectation.FAIL_AS_PRINTED,
                pair="X.corrected",
            )
        )
        with pytest.raises(ValueError, match="no registered corrected variant"):
            registry.check_pairs()


class TestRunIdentity:
    """Tests for single-identity runs."""

    def test_fine_alternating(self):
        """The alternating formula for Fine numbers holds for n <= 30."""
        report = identities.run_identity("I-fine-alt", 30)
        assert report.status == Status.VERIFIED
        assert report.cases == 30
        assert report.counterexamples == []

    def test_exotic_eight_as_printed(self):
        """The printed lower index fails at (4,1) with 30 vs 2."""
        report = identities.run_identity("I-exotic-8.as_printed", 10)
        assert report.status == Status.FALSIFIED
        assert report.matches_expected
        cells = {(c.n, c.k): (c.lhs, c.rhs) for c in report.counterexamples}
        assert cells[(4, 1)] == ("30", "2")

    def test_exotic_eight_corrected(self):
        """Lower index n-i holds for 1 <= k < n-1, n <= 30."""
        report = identities.run_identity("I-exotic-8.corrected", 30)
        assert report.status == Status.VERIFIED
        assert report.cases == sum(n - 2 for n in range(3, 31))

    def test_g2_alternating_as_printed(self):
        """The (n-k)/k prefactor fails first at (2,1) with 1 vs 2."""
        report = identities.run_identity("I-g2-alt.as_printed", 10)
        assert report.status == Status.FALSIFIED
        first = report.counterexamples[0]
        assert (first.n, first.k, first.lhs, first.rhs) == (2, 1, "1", "2")

    def test_vanishing_sum(self):
        """The alternating product sum is zero for n < k."""
        report = identities.run_identity("I-vanish", 12)
        assert report.status == Status.VERIFIED
        assert report.cases == sum(range(1, 13))

    @pytest.mark.parametrize("identity_id", PURE_BINOMIAL)
    def test_pure_binomial_records_to_thirty(self, identity_id):
        """Binomial identities and propositions hold for n <= 30."""
        report = identities.run_identity(identity_id, 30)
        assert report.status == Status.VERIFIED, report.counterexamples[:3]

    @pytest.mark.parametrize(
        "identity_id, max_n",
        [
            ("P-tower", 60),
            ("P-routes", 60),
            ("P-cik", 60),
            ("P-rr1", 60),
            ("P-mirror", 60),
            ("P-mirror-edges", 60),
            ("P-euler", 60),
            ("P-g4-matrix", 60),
            ("P-g2-family", 40),
        ],
    )
    def test_wide_ranges(self, identity_id, max_n):
        """Tower, route, recurrence and g_2 family checks hold on their full ranges."""
        report = identities.run_identity(identity_id, max_n)
        assert report.status == Status.VERIFIED, report.counterexamples[:3]
        assert report.max_n == max_n

    @pytest.mark.parametrize("family", ["I-bell-fine", "I-bell-catalan"])
    def test_bell_pairs(self, family):
        """Printed Bell identities fail, corrected ones hold."""
        printed, corrected = identities.REGISTRY.select(family)
        runner = IdentityRunner(identities.REGISTRY)
        assert runner.run_record(printed, 12).status == Status.FALSIFIED
        assert runner.run_record(corrected, 12).status == Status.VERIFIED

    def test_g4_matrix_product_built_once_per_order(self):
        """G_3 . L is computed once per row order, not once per cell."""
        identities._conv_times_pascal.cache_clear()
        identities.run_identity("P-g4-matrix", 6)
        info = identities._conv_times_pascal.cache_info()
        assert info.misses == 6
        assert info.hits == sum(range(1, 7)) - 6

    def test_cap_limits_range(self):
        """Oracle-backed records stop at their cap."""
        report = identities.run_identity("I-card-ballot", 30)
        assert report.max_n == 10
        assert report.status == Status.VERIFIED

    def test_non_positive_max_n_rejected(self):
        """max_n must be positive."""
        with pytest.raises(ValueError, match="must be positive"):
            identities.run_identity("I-binom", 0)


class TestRunAll:
    """Tests for full-suite runs."""

    def test_suite_matches_expectations(self, suite):
        """Every record comes out as registered."""
        assert identities.suite_ok(suite)
        assert [r.id for r in suite] == identities.REGISTRY.ids()

    def test_expected_passes_verified(self, suite):
        """Expected-pass records are verified and not vacuous at n = 20."""
        for report in suite:
            if report.expected == Expectation.PASS:
                assert report.status == Status.VERIFIED, report.id
                assert not report.vacuous, report.id

    def test_printed_typos_falsified(self, suite):
        """All as-printed typo variants are falsified."""
        falsified = {r.id for r in suite if r.status == Status.FALSIFIED}
        assert falsified == {
            "I-bell-fine.as_printed",
            "I-bell-catalan.as_printed",
            "I-g2-alt.as_printed",
            "I-exotic-8.as_printed",
        }

    def test_vacuous_domains_flagged(self):
        """At n = 1 empty domains verify with zero cases and a vacuity flag."""
        reports = {r.id: r for r in identities.run_all(1)}
        assert reports["I-vertical"].vacuous
        assert reports["I-vertical"].status == Status.VERIFIED
        assert reports["I-vertical"].cases == 0
        assert reports["P-euler"].vacuous
        assert not reports["I-binom"].vacuous

    def test_workers_keep_order(self):
        """A thread pool gives the same reports in the same order."""
        sequential = identities.run_all(8)
        threaded = identities.run_all(8, workers=4)
        assert [(r.id, r.status, r.cases) for r in threaded] == [
            (r.id, r.status, r.cases) for r in sequential
        ]


class TestMutation:
    """Perturbing one closed form must be caught by the suite."""

    @pytest.mark.parametrize("name", PERTURBABLE)
    def test_perturbed_formula_is_caught(self, mocker, name):
        """Adding 1 to a single formula falsifies an expected-pass record."""
        original = getattr(closedforms, name)
        mocker.patch.object(
            closedforms, name, side_effect=lambda *args, **kwargs: original(*args, **kwargs) + 1
        )
        reports = identities.run_all(8)
        broken = [
            r for r in reports if r.expected == Expectation.PASS and r.status == Status.FALSIFIED
        ]
        assert broken, f"perturbing {name} went unnoticed"
        assert not identities.suite_ok(reports)
        assert all(r.counterexamples for r in broken)


class TestRunner:
    """Tests for IdentityRunner details."""

    def test_exceptions_become_counterexamples(self):
        """A raising evaluator falsifies its cell instead of aborting."""

        def boom(n, k):
            raise InexactDivisionError("7 is not divisible by 2")

        registry = IdentityRegistry()
        record = registry.register(
            IdentityRecord(
                id="X",
                description="raises",
                domain=lambda max_n: ((n, 1) for n in range(1, max_n + 1)),
                lhs=boom,
                rhs=lambda n, k: 0,
            )
        )
        report = IdentityRunner(registry).run_record(record, 3)
        assert report.status == Status.FALSIFIED
        assert report.total_counterexamples == 3
        assert report.counterexamples[0].lhs.startswith("error: InexactDivisionError")

    def test_counterexample_limit(self):
        """Only the first few failures are kept, the total is counted."""
        runner = IdentityRunner(identities.REGISTRY, max_counterexamples=2)
        report = runner.run_identity("I-exotic-8.as_printed", 10)
        assert len(report.counterexamples) == 2
        assert report.total_counterexamples > 2
        lines = identities.report_lines([report])
        assert lines[-1] == f"  ... {report.total_counterexamples - 2} more"

    def test_falsified_needs_counterexample(self):
        """A falsified report without evidence is invalid."""
        with pytest.raises(ValidationError, match="needs a counterexample"):
            VerdictReport(
                id="X",
                description="",
                variant=Variant.AS_PRINTED,
                expected=Expectation.PASS,
                max_n=3,
                cases=3,
                status=Status.FALSIFIED,
            )


class TestSerialization:
    """Tests for report rendering."""

    def test_lines(self):
        """Summary line plus counterexample lines."""
        report = identities.run_identity("I-exotic-8.as_printed", 4)
        lines = identities.report_lines([report])
        assert lines[0].startswith("I-exotic-8.as_printed falsified n<=4")
        assert lines[0].endswith("expected=fail_as_printed [ok]")
        assert "  (4,1) lhs=30 rhs=2" in lines

    def test_sequence_counterexample_cell(self):
        """Records over n alone print (n=...)."""
        assert Counterexample(n=5, lhs="1", rhs="2").cell() == "(n=5)"

    def test_json_document(self):
        """One entry per record with id, variant, status and counterexamples."""
        reports = [identities.run_identity("I-exotic-8.as_printed", 6)]
        document = json.loads(identities.reports_to_json(reports))
        assert document["ok"] is True
        entry = document["reports"][0]
        assert entry["id"] == "I-exotic-8.as_printed"
        assert entry["variant"] == "as_printed"
        assert entry["status"] == "falsified"
        assert entry["vacuous"] is False
        assert "elapsed" not in entry
        assert all(isinstance(c["lhs"], str) for c in entry["counterexamples"])
