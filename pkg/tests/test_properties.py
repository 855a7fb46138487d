from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from choice_audit.axioms import CHECKS, audit, check_nsc, check_singleton_image, replay_witness
from choice_audit.core import ChoiceDataset, ModelClass, default_universe
from choice_audit.oracle import simulate
from choice_audit.rationalize import construct_aic, construct_gaic, derive_choice_function
from choice_audit.revealed import revealed_consideration, revealed_one_step


@st.composite
def datasets(draw, sizes=(2, 3, 4)):
    n = draw(st.sampled_from(sizes))
    u = default_universe(n)
    menus = draw(st.sets(st.integers(1, u.full), max_size=u.full))
    return ChoiceDataset(u, {m: draw(st.integers(0, n - 1)) for m in menus})


@st.composite
def dataset_and_subset(draw):
    d = draw(datasets())
    keep = draw(st.sets(st.sampled_from(d.menus))) if d.menus else set()
    return d, d.restrict(keep)


class TestAxiomProperties:
    @given(datasets())
    def test_failing_witnesses_replay(self, d):
        for check in (*CHECKS.values(), check_singleton_image):
            v = check(d)
            assert v.holds == (v.witness is None)
            if not v.holds:
                assert replay_witness(v, d)

    @given(dataset_and_subset())
    def test_removal_keeps_axioms(self, pair):
        d, sub = pair
        for check in CHECKS.values():
            if check(d).holds:
                assert check(sub).holds

    @given(datasets())
    def test_audit_is_deterministic(self, d):
        assert audit(d) == audit(d)


class TestRevealedProperties:
    @given(dataset_and_subset())
    def test_more_data_grows_revealed_objects(self, pair):
        d, sub = pair
        assert revealed_one_step(sub).closure.pairs <= revealed_one_step(d).closure.pairs
        small, big = revealed_consideration(sub), revealed_consideration(d)
        assert all(small[m] & ~big[m] == 0 for m in range(1, d.universe.full + 1))

    @given(datasets())
    def test_nsc_means_acyclic(self, d):
        assert check_nsc(d).holds == revealed_one_step(d).one_step.acyclic


class TestConstructionProperties:
    @settings(max_examples=60)
    @given(datasets())
    def test_aic_construction_matches_nsc(self, d):
        rep = construct_aic(d)
        assert (rep is not None) == check_nsc(d).holds
        if rep is not None:
            assert rep.passed

    @settings(max_examples=60)
    @given(datasets())
    def test_gaic_construction_passes_when_grounded(self, d):
        rep = construct_gaic(d)
        if rep is not None:
            assert rep.passed

    @settings(max_examples=30)
    @given(st.integers(0, 2**64 - 1), st.sampled_from([ModelClass.AIC, ModelClass.GAIC]))
    def test_simulated_n4_agents_round_trip(self, seed, cls):
        agent, d = simulate(seed, cls, 4)
        assert derive_choice_function(agent) == d
        construct = construct_aic if cls is ModelClass.AIC else construct_gaic
        rep = construct(d)
        assert rep is not None and rep.passed
        assert audit(d).memberships[cls].member
