import json

from hbk.config import DEFAULTS, ConfigManager


def test_missing_or_malformed_config_is_empty(tmp_path) -> None:
    assert ConfigManager.load_config(str(tmp_path / "absent.json")) == {}
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert ConfigManager.load_config(str(broken)) == {}
    listed = tmp_path / "list.json"
    listed.write_text("[1, 2]")
    assert ConfigManager.load_config(str(listed)) == {}


def test_defaults_without_config() -> None:
    merged = ConfigManager.merge_config_with_args({})
    assert merged == DEFAULTS
    assert "p" not in merged


def test_cli_args_take_priority() -> None:
    config = {
        "field": {"p": 3, "f": "2,1,1", "s": "1,1", "m": 8},
        "run": {"jobs": 4, "seed": 9},
    }
    merged = ConfigManager.merge_config_with_args(config, p=2, m=None, jobs=1)
    assert merged["p"] == 2
    assert merged["m"] == 8
    assert merged["jobs"] == 1
    assert merged["seed"] == 9
    assert merged["flow_cap"] == DEFAULTS["flow_cap"]


def test_polynomials_may_be_lists() -> None:
    config = {"field": {"p": "5", "f": [4, 2, 1], "s": [1, 0, 1]}}
    merged = ConfigManager.merge_config_with_args(config)
    assert merged["f"] == "4,2,1"
    assert merged["s"] == "1,0,1"
    assert merged["p"] == 5


def test_write_default_config(tmp_path) -> None:
    path = ConfigManager.write_default_config(str(tmp_path / "hbk.json"))
    config = json.loads(path.read_text())
    assert config["field"] == {"p": 2, "f": "1,1,1", "s": "1", "m": 3}
    merged = ConfigManager.merge_config_with_args(ConfigManager.load_config(str(path)))
    assert merged["brute_cap"] == DEFAULTS["brute_cap"]
    assert (merged["p"], merged["m"]) == (2, 3)
    assert merged["samples"] == DEFAULTS["samples"]
