from __future__ import annotations

import json
from pathlib import Path

import pytest

from choice_audit.core import AgentSpec, ModelClass, StrictPreference, fixture
from choice_audit.documents import (
    DocumentError,
    agent_from_doc,
    agent_to_doc,
    dataset_from_doc,
    dataset_to_doc,
    dumps,
    load_agent,
    load_dataset,
    save_agent,
    save_dataset,
)
from choice_audit.oracle import enumerate_choice_functions

FIXTURES = Path(__file__).parent / "fixtures"
EX1 = fixture("EXAMPLE1").dataset
EX2, EX2_AGENT = fixture("EXAMPLE2")


def doc(**overrides):
    base = {
        "version": "1",
        "alternatives": ["x", "y"],
        "observations": [{"menu": ["x", "y"], "choice": "x"}],
    }
    base.update(overrides)
    return base


class TestDatasetDocuments:
    @pytest.mark.parametrize("name,expected", [("example1.json", EX1), ("example2.json", EX2)])
    def test_fixtures_parse(self, name, expected):
        assert load_dataset(FIXTURES / name) == expected

    @pytest.mark.parametrize("name", ["example1.json", "example2.json"])
    def test_canonical_bytes(self, name):
        text = (FIXTURES / name).read_text(encoding="utf-8")
        assert dumps(dataset_to_doc(load_dataset(FIXTURES / name))) == text

    def test_round_trip_all_n2(self, tmp_path):
        for d in enumerate_choice_functions(2):
            path = tmp_path / "d.json"
            save_dataset(d, path)
            assert load_dataset(path) == d

    def test_member_order_is_irrelevant(self):
        d = dataset_from_doc(doc(observations=[{"menu": ["y", "x"], "choice": "y"}]))
        assert d[0b11] == 1
        assert dataset_to_doc(d)["observations"][0]["menu"] == ["x", "y"]

    def test_off_menu_choice_allowed(self):
        d = dataset_from_doc(doc(observations=[{"menu": ["x"], "choice": "y"}]))
        assert d[0b01] == 1

    @pytest.mark.parametrize(
        "overrides,field",
        [
            ({"version": "2"}, "version"),
            ({"alternatives": "xy"}, "alternatives"),
            ({"alternatives": ["x", "x"]}, "alternatives"),
            ({"observations": {}}, "observations"),
            ({"observations": [{"menu": ["x"]}]}, "observations[0].choice"),
            ({"observations": [{"menu": [], "choice": "x"}]}, "observations[0].menu"),
            ({"observations": [{"menu": ["w"], "choice": "x"}]}, "observations[0].menu[0]"),
            ({"observations": [{"menu": ["x", "x"], "choice": "x"}]}, "observations[0].menu[1]"),
            ({"observations": [{"menu": ["x"], "choice": "q"}]}, "observations[0].choice"),
            ({"observations": [{"menu": ["x"], "choice": 0}]}, "observations[0].choice"),
            (
                {"observations": [{"menu": ["x"], "choice": "x"}, {"menu": ["x"], "choice": "y"}]},
                "observations[1].menu",
            ),
        ],
    )
    def test_malformed_names_field(self, overrides, field):
        with pytest.raises(DocumentError) as err:
            dataset_from_doc(doc(**overrides))
        assert err.value.field == field

    def test_missing_version(self):
        bad = doc()
        del bad["version"]
        with pytest.raises(DocumentError) as err:
            dataset_from_doc(bad)
        assert err.value.field == "version"

    def test_bad_json_file(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{", encoding="utf-8")
        with pytest.raises(DocumentError, match="invalid JSON"):
            load_dataset(path)
        with pytest.raises(DocumentError, match="cannot read"):
            load_dataset(tmp_path / "missing.json")


class TestAgentDocuments:
    def test_round_trip(self, tmp_path):
        path = tmp_path / "a.json"
        save_agent(EX2_AGENT, EX2.universe, path, scope="TOTAL")
        parsed = load_agent(path)
        assert parsed.agent == EX2_AGENT
        assert parsed.scope == "TOTAL"
        assert parsed.universe == EX2.universe

    def test_shape(self):
        out = agent_to_doc(EX2_AGENT, EX2.universe)
        assert out["preference"] == ["x", "y", "z"]
        assert out["operator"][0] == {"menu": ["x"], "image": ["y"]}
        assert out["class"] == "RAIC"
        assert "scope" not in out

    def test_canonical_bytes(self):
        text = dumps(agent_to_doc(EX2_AGENT, EX2.universe))
        assert dumps(agent_to_doc(agent_from_doc(json.loads(text)).agent, EX2.universe)) == text

    def test_class_is_checked(self):
        bad = agent_to_doc(EX2_AGENT, EX2.universe)
        bad["class"] = "GRAIC"
        with pytest.raises(DocumentError) as err:
            agent_from_doc(bad)
        assert err.value.field == "class"

    @pytest.mark.parametrize(
        "mutate,field",
        [
            (lambda d: d.update(preference=["x", "y"]), "preference"),
            (lambda d: d.update(preference=["x", "y", "w"]), "preference[2]"),
            (lambda d: d["operator"].pop(), "operator"),
            (lambda d: d["operator"][1].update(menu=["x"]), "operator[1].menu"),
            (lambda d: d["operator"][0].update(image=[]), "operator[0].image"),
            (lambda d: d.update({"class": "XYZ"}), "class"),
            (lambda d: d.update(scope=3), "scope"),
        ],
    )
    def test_malformed(self, mutate, field):
        bad = agent_to_doc(EX2_AGENT, EX2.universe)
        mutate(bad)
        with pytest.raises(DocumentError) as err:
            agent_from_doc(bad)
        assert err.value.field == field

    def test_unclassified_default(self):
        out = agent_to_doc(AgentSpec(StrictPreference.from_ranking((1, 0, 2)), EX2_AGENT.operator), EX2.universe)
        del out["class"]
        assert agent_from_doc(out).agent.tag is ModelClass.UNCLASSIFIED
