from __future__ import annotations

import pytest

from choice_audit.core import (
    AgentSpec,
    ChoiceAuditError,
    ChoiceDataset,
    InterpretationOperator,
    ModelClass,
    SizeCapError,
    StrictPreference,
    Universe,
    all_menus,
    check_size,
    default_universe,
    find_cycle,
    fixture,
    is_proper_subset,
    is_subset,
    make_universe,
    members,
    proper_subsets,
    size_cap,
    subsets,
)


@pytest.fixture
def xyz():
    return make_universe(["x", "y", "z"])


class TestMasks:
    def test_members_ascending(self):
        assert members(0b1011) == (0, 1, 3)
        assert members(0) == ()

    def test_subset_relations(self):
        assert is_subset(0b001, 0b011)
        assert is_subset(0b011, 0b011)
        assert not is_proper_subset(0b011, 0b011)
        assert is_proper_subset(0b001, 0b011)
        assert not is_subset(0b100, 0b011)

    def test_subset_listings(self):
        assert proper_subsets(0b111) == [1, 2, 3, 4, 5, 6]
        assert subsets(0b101) == [1, 4, 5]

    def test_canonical_order_extends_inclusion(self):
        for t in all_menus(4):
            for s in proper_subsets(t):
                assert s < t


class TestUniverse:
    def test_names_and_masks(self, xyz):
        assert xyz.size == 3
        assert xyz.full == 0b111
        assert xyz.menu("xz") == 0b101
        assert xyz.names(0b110) == ("y", "z")
        assert xyz.fmt(0b111) == "{x,y,z}"

    def test_rejects_bad_labels(self):
        with pytest.raises(ChoiceAuditError):
            Universe(())
        with pytest.raises(ChoiceAuditError, match="duplicate"):
            make_universe(["a", "a"])
        with pytest.raises(ChoiceAuditError):
            make_universe(["a", ""])
        with pytest.raises(ChoiceAuditError, match="unknown alternative"):
            make_universe(["a"]).index("b")

    def test_empty_menu_rejected(self, xyz):
        with pytest.raises(ChoiceAuditError, match="nonempty"):
            xyz.menu([])

    def test_size_cap(self):
        make_universe([f"a{i}" for i in range(24)])
        with pytest.raises(SizeCapError):
            make_universe([f"a{i}" for i in range(25)])

    def test_default_labels(self):
        assert default_universe(3).labels == ("x", "y", "z")
        assert default_universe(5).labels == ("a0", "a1", "a2", "a3", "a4")


class TestSizeCaps:
    def test_env_only_lowers(self, monkeypatch):
        monkeypatch.setenv("CHOICE_AUDIT_MAX_N", "2")
        assert size_cap(3) == 2
        with pytest.raises(SizeCapError):
            check_size(3, 3, "thing")
        monkeypatch.setenv("CHOICE_AUDIT_MAX_N", "10")
        assert size_cap(3) == 3

    def test_env_must_be_integer(self, monkeypatch):
        monkeypatch.setenv("CHOICE_AUDIT_MAX_N", "lots")
        with pytest.raises(ChoiceAuditError):
            size_cap(3)


class TestChoiceDataset:
    def test_choice_need_not_be_on_menu(self, xyz):
        d = ChoiceDataset.from_names(xyz, {"x": "y"})
        assert d[0b001] == 1

    def test_observations_sorted_and_total(self, xyz):
        d = ChoiceDataset.from_names(xyz, {"xyz": "x", "x": "x"})
        assert d.menus == (1, 7)
        assert not d.is_total
        with pytest.raises(ChoiceAuditError):
            d.table()

    def test_from_table_round_trip(self, xyz):
        d = ChoiceDataset.from_table(xyz, (0, 1, 0, 2, 0, 1, 0))
        assert d.is_total
        assert d.table() == (0, 1, 0, 2, 0, 1, 0)
        with pytest.raises(ChoiceAuditError):
            ChoiceDataset.from_table(xyz, (0, 1))

    def test_invalid_entries(self, xyz):
        with pytest.raises(ChoiceAuditError):
            ChoiceDataset(xyz, {8: 0})
        with pytest.raises(ChoiceAuditError):
            ChoiceDataset(xyz, {1: 3})
        with pytest.raises(ChoiceAuditError):
            ChoiceDataset(xyz, {0: 0})
        with pytest.raises(ChoiceAuditError, match="twice"):
            ChoiceDataset.from_names(xyz, {"xy": "x", ("y", "x"): "y"})

    def test_equality_and_hash(self, xyz):
        a = ChoiceDataset.from_names(xyz, {"xy": "x", "z": "z"})
        b = ChoiceDataset(xyz, {4: 2, 3: 0})
        assert a == b and hash(a) == hash(b)
        assert a != a.restrict([3])

    def test_restrict(self, xyz):
        d = ChoiceDataset.from_table(xyz, (0,) * 7)
        assert d.restrict([1, 7]).menus == (1, 7)


class TestStrictPreference:
    def test_ranking_round_trip(self):
        p = StrictPreference.from_ranking((2, 0, 1))
        assert p.is_linear
        assert p.ranking == (2, 0, 1)
        assert p.rank == (1, 2, 0)
        assert p.best(0b011) == 0
        assert p.best(0b111) == 2

    def test_flags(self):
        chain = StrictPreference(3, {(0, 1), (1, 2)})
        assert chain.asymmetric and chain.acyclic
        assert not chain.transitive and not chain.complete
        cyc = StrictPreference(3, {(0, 1), (1, 2), (2, 0)})
        assert cyc.complete and not cyc.acyclic and not cyc.transitive
        two = StrictPreference(2, {(0, 1), (1, 0)})
        assert not two.asymmetric and not two.transitive

    def test_rejects_reflexive_and_out_of_range(self):
        with pytest.raises(ChoiceAuditError):
            StrictPreference(2, {(1, 1)})
        with pytest.raises(ChoiceAuditError):
            StrictPreference(2, {(0, 2)})
        with pytest.raises(ChoiceAuditError):
            StrictPreference.from_ranking((0, 0))

    def test_ranking_requires_linear(self):
        with pytest.raises(ChoiceAuditError):
            StrictPreference(3, {(0, 1)}).ranking

    def test_fmt(self, xyz):
        assert StrictPreference.from_ranking((0, 1, 2)).fmt(xyz) == "x>y, x>z, y>z"


class TestFindCycle:
    def test_acyclic(self):
        assert find_cycle(StrictPreference(3, {(0, 1), (1, 2), (0, 2)})) is None

    def test_shortest_cycle_from_smallest_vertex(self):
        rel = StrictPreference(4, {(0, 1), (1, 2), (2, 0), (2, 3), (3, 2)})
        assert find_cycle(rel) == (0, 1, 2)

    def test_two_cycle_not_through_zero(self):
        rel = StrictPreference(3, {(0, 1), (1, 2), (2, 1)})
        assert find_cycle(rel) == (1, 2)


class TestInterpretationOperator:
    def test_empty_convention(self):
        assert InterpretationOperator.identity(2)(0) == 0

    def test_validation(self):
        with pytest.raises(ChoiceAuditError):
            InterpretationOperator(2, (1, 2))
        with pytest.raises(ChoiceAuditError):
            InterpretationOperator(2, (1, 0, 3))
        with pytest.raises(ChoiceAuditError):
            InterpretationOperator(2, (1, 4, 3))

    def test_constructors(self):
        perm = InterpretationOperator.from_permutation((1, 2, 0))
        assert perm.table == (2, 4, 6, 1, 3, 5, 7)
        assert InterpretationOperator.constant(2, 1).table == (1, 1, 1)
        assert InterpretationOperator.from_mapping(2, {1: 1, 2: 2, 3: 3}) == InterpretationOperator.identity(2)
        with pytest.raises(ChoiceAuditError):
            InterpretationOperator.from_mapping(2, {1: 1})

    def test_fmt(self, xyz):
        op = InterpretationOperator.from_permutation((1, 0))
        assert op.fmt(make_universe(["x", "y"])) == "I{x}={y}, I{y}={x}, I{x,y}={x,y}"


class TestAgentSpec:
    def test_requires_linear_order(self):
        with pytest.raises(ChoiceAuditError, match="linear"):
            AgentSpec(StrictPreference(2), InterpretationOperator.identity(2))

    def test_tag_checked_against_operator(self):
        pref = StrictPreference.from_ranking((0, 1))
        AgentSpec(pref, InterpretationOperator.identity(2), ModelClass.GRAIC)
        with pytest.raises(ChoiceAuditError):
            AgentSpec(pref, InterpretationOperator.constant(2, 1), ModelClass.RAIC)

    def test_size_mismatch(self):
        with pytest.raises(ChoiceAuditError):
            AgentSpec(StrictPreference.from_ranking((0, 1)), InterpretationOperator.identity(3))


class TestFixtures:
    def test_example1_is_partial(self):
        d, agent = fixture("example1")
        assert agent is None
        assert len(d) == 4 and not d.is_total

    def test_example2_agent(self):
        d, agent = fixture("EXAMPLE2")
        assert d.is_total
        assert agent.tag is ModelClass.RAIC
        assert agent.preference.ranking == (0, 1, 2)

    def test_unknown(self):
        with pytest.raises(ChoiceAuditError):
            fixture("EXAMPLE3")
