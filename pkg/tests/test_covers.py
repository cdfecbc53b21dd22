import json
from importlib import resources

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prismvol import (
    FIGURE_EIGHT_VOLUME,
    ONE_CUSP_VOLUME_FLOOR,
    WHITEHEAD_VOLUME,
    CoverCertificate,
    EnumerationTooLargeError,
    GroupPresentation,
    SurfaceData,
    VolumeConstant,
    catalan_alternating,
    complexity,
    count_representations,
    degree_bound_for_budget,
    fiber_surface,
    presentation_from_json,
    prism_verify,
    upper_bound_value,
)
from support import brute_hom_count, presentations_st, relator_words_st


def load_fixture(name: str) -> GroupPresentation:
    text = (
        resources.files("prismvol").joinpath("fixtures", f"{name}.json").read_text()
    )
    return presentation_from_json(json.loads(text))


UNKNOT = load_fixture("unknot")
HOPF = load_fixture("hopf")
TREFOIL = load_fixture("trefoil")


class TestGroupPresentation:
    def test_zero_letter_rejected(self):
        with pytest.raises(ValueError):
            GroupPresentation(2, ((1, 0),))

    def test_out_of_range_letter_rejected(self):
        with pytest.raises(ValueError):
            GroupPresentation(2, ((3,),))

    def test_needs_a_generator(self):
        with pytest.raises(ValueError):
            GroupPresentation(0, ())

    def test_json_round_trip(self):
        assert presentation_from_json(TREFOIL.to_json()) == TREFOIL

    def test_from_json_missing_field(self):
        with pytest.raises(ValueError, match="relators"):
            presentation_from_json({"generators": 2})

    def test_from_json_bool_letter_rejected(self):
        with pytest.raises(ValueError, match="relators"):
            presentation_from_json({"generators": 2, "relators": [[1, True]]})


class TestCountRepresentations:
    def test_unknot_counts(self):
        assert count_representations(UNKNOT, 2) == 2
        assert count_representations(UNKNOT, 3) == 6
        assert count_representations(UNKNOT, 3, transitive=True) == 2

    def test_hopf_counts(self):
        assert count_representations(HOPF, 2) == 4
        assert count_representations(HOPF, 3) == 18

    def test_trefoil_counts(self):
        assert count_representations(TREFOIL, 2) == 2
        assert count_representations(TREFOIL, 3) == 12
        assert count_representations(TREFOIL, 3, transitive=True) == 8

    def test_matches_brute_force_on_fixtures(self):
        for pres in (UNKNOT, HOPF, TREFOIL):
            for degree in (1, 2, 3):
                for transitive in (False, True):
                    assert count_representations(
                        pres, degree, transitive=transitive
                    ) == brute_hom_count(
                        pres.generators, pres.relators, degree, transitive=transitive
                    ), (pres, degree, transitive)

    def test_degree_below_one_rejected(self):
        with pytest.raises(ValueError):
            count_representations(UNKNOT, 0)

    def test_enumeration_guard(self):
        with pytest.raises(EnumerationTooLargeError, match="10"):
            count_representations(GroupPresentation(3, ()), 10)

    def test_guard_boundary_is_generous(self):
        # 7!^2 ~ 2.5e7 is under the guard and still fast to refuse or run;
        # the trivial relator set makes the count a pure power
        assert count_representations(GroupPresentation(1, ()), 6) == 720

    def test_empty_relator_word_is_vacuous(self):
        pres = GroupPresentation(1, ((),))
        assert count_representations(pres, 3) == 6

    @given(presentations_st(), st.integers(1, 3))
    @settings(max_examples=60, deadline=None)
    def test_matches_brute_force(self, gp, degree):
        generators, relators = gp
        pres = GroupPresentation(generators, relators)
        for transitive in (False, True):
            assert count_representations(
                pres, degree, transitive=transitive
            ) == brute_hom_count(generators, relators, degree, transitive=transitive)

    @given(presentations_st())
    @settings(max_examples=40, deadline=None)
    def test_degree_one_count_is_one(self, gp):
        generators, relators = gp
        pres = GroupPresentation(generators, relators)
        assert count_representations(pres, 1) == 1
        assert count_representations(pres, 1, transitive=True) == 1

    @given(
        presentations_st().flatmap(
            lambda gp: st.tuples(
                st.just(gp), relator_words_st(gp[0]), st.integers(2, 3)
            )
        )
    )
    @settings(max_examples=50, deadline=None)
    def test_adding_a_relator_never_raises_the_count(self, data):
        (generators, relators), extra, degree = data
        base = count_representations(GroupPresentation(generators, relators), degree)
        tightened = count_representations(
            GroupPresentation(generators, relators + (extra,)), degree
        )
        assert tightened <= base


class TestVolumeConstants:
    def test_positive_value_enforced(self):
        with pytest.raises(ValueError):
            VolumeConstant("x", 0.0, "nope")
        with pytest.raises(ValueError):
            VolumeConstant("x", -1.0, "nope")

    def test_whitehead_volume_is_four_catalan(self):
        assert abs(4 * catalan_alternating() - WHITEHEAD_VOLUME.value) < 1e-12

    def test_figure_eight_volume_matches_quadrature(self):
        # 4 * Lobachevsky(pi/6), with Lobachevsky(t) = -integral of log|2 sin|
        lob = -mpmath.quad(
            lambda t: mpmath.log(abs(2 * mpmath.sin(t))), [0, mpmath.pi / 6]
        )
        assert abs(4 * float(lob) - FIGURE_EIGHT_VOLUME.value) < 1e-12

    def test_floor_is_below_every_named_volume(self):
        assert ONE_CUSP_VOLUME_FLOOR.value < FIGURE_EIGHT_VOLUME.value
        assert FIGURE_EIGHT_VOLUME.value < WHITEHEAD_VOLUME.value


class TestComplexity:
    def test_double_cover_budget(self):
        cert = CoverCertificate(2, WHITEHEAD_VOLUME.value, "branch volume V0")
        assert round(complexity(cert), 4) == 7.3277

    def test_triple_cover_over_smallest_cusp(self):
        cert = CoverCertificate(3, FIGURE_EIGHT_VOLUME.value, "smallest cusp")
        assert complexity(cert) == pytest.approx(6.089649638457921)

    def test_identity_cover(self):
        cert = CoverCertificate(1, 5.25, "identity")
        assert complexity(cert) == 5.25

    def test_strictly_monotone_in_both_arguments(self):
        base = CoverCertificate(2, 3.0, "base")
        assert complexity(CoverCertificate(3, 3.0, "deeper")) > complexity(base)
        assert complexity(CoverCertificate(2, 3.5, "bigger")) > complexity(base)

    def test_certificate_validation(self):
        with pytest.raises(ValueError):
            CoverCertificate(0, 1.0, "no degree")
        with pytest.raises(ValueError):
            CoverCertificate(2, 0.0, "no volume")
        assert CoverCertificate(1, 1.0, "identity").degree == 1


class TestDegreeBoundForBudget:
    def test_budget_from_double_cover_with_floor_two(self):
        assert degree_bound_for_budget(2 * WHITEHEAD_VOLUME.value, 2.0) == 3

    def test_budget_with_floor_at_the_branch_volume(self):
        assert degree_bound_for_budget(
            2 * WHITEHEAD_VOLUME.value, WHITEHEAD_VOLUME.value
        ) == 1

    def test_exact_multiple_is_excluded(self):
        assert degree_bound_for_budget(7.0, 3.5) == 1

    def test_sharper_floor_gives_same_cap(self):
        budget = 2 * WHITEHEAD_VOLUME.value
        assert degree_bound_for_budget(budget, 2.0) == degree_bound_for_budget(
            budget, FIGURE_EIGHT_VOLUME.value
        )

    def test_nonpositive_inputs_rejected(self):
        with pytest.raises(ValueError):
            degree_bound_for_budget(0.0, 1.0)
        with pytest.raises(ValueError):
            degree_bound_for_budget(1.0, -2.0)

    @given(
        st.floats(min_value=0.5, max_value=50, allow_nan=False),
        st.floats(min_value=0.5, max_value=50, allow_nan=False),
    )
    @settings(max_examples=120)
    def test_result_is_the_last_degree_under_budget(self, budget, floor):
        p = degree_bound_for_budget(budget, floor)
        assert p >= 0
        assert p * floor < budget
        assert (p + 1) * floor >= budget


class TestPrismVerify:
    def test_fiber_surface(self):
        assert fiber_surface() == SurfaceData(genus=2, boundary=1, orientable=True)

    def test_upper_bound_value(self):
        assert upper_bound_value() == 7.327724753418

    def test_empty_range(self):
        assert prism_verify(1, 0) == {"reports": [], "candidate_exceptional": []}

    def test_small_window_flags_both_exceptional_candidates(self):
        result = prism_verify(-1, 1)
        assert [r["n"] for r in result["reports"]] == [-1, 0, 1]
        assert [r["status"] for r in result["reports"]] == [
            "candidate-exceptional",
            "excluded",
            "candidate-exceptional",
        ]
        assert result["candidate_exceptional"] == [-1, 1]

    def test_degenerate_row_carries_reason(self):
        row = prism_verify(0, 0)["reports"][0]
        assert row["status"] == "excluded"
        assert "degenerate" in row["reason"]
        assert row["upper_bound"] == "2*V0"

    def test_positive_window_is_all_conditional(self):
        result = prism_verify(2, 10)
        assert len(result["reports"]) == 9
        assert result["candidate_exceptional"] == []
        for row in result["reports"]:
            assert row["status"] == "conditional"
            assert row["twist_knot_excluded"] is True

    def test_negative_window_is_all_conditional(self):
        result = prism_verify(-10, -2)
        assert result["candidate_exceptional"] == []
        assert all(r["status"] == "conditional" for r in result["reports"])

    def test_report_schema(self):
        row = prism_verify(2, 2)["reports"][0]
        assert row["n"] == 2
        assert row["upper_bound"] == "2*V0"
        assert row["upper_bound_value"] == 7.327724753418
        assert row["twist_knot_excluded"] is True
        assert row["case_analysis"]["n"] == 2
        assert row["case_analysis"]["admits_horizontal"] is False
        assert len(row["case_analysis"]["cases"]) == 5
        assert row["slope_demo"]["counts"] == [5, 2]
        assert len(row["slope_demo"]["pairs"]) == 2
        assert row["max_degree"] == 3
        assert row["status"] == "conditional"
        assert len(row["unresolved_steps"]) == 4

    def test_candidate_row_names_its_degrees(self):
        row = prism_verify(1, 1)["reports"][0]
        assert row["status"] == "candidate-exceptional"
        assert len(row["unresolved_steps"]) == 5
        assert "[18]" in row["unresolved_steps"][0]

    def test_negative_candidate_row_names_its_degrees(self):
        row = prism_verify(-1, -1)["reports"][0]
        assert "[10]" in row["unresolved_steps"][0]

    def test_deterministic_across_runs(self):
        assert prism_verify(-3, 3) == prism_verify(-3, 3)

    def test_json_serializable(self):
        payload = prism_verify(-1, 2)
        assert json.loads(json.dumps(payload)) == payload
