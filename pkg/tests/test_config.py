from pathlib import Path

import pytest

from core.config import RANK_CAP, Config, load_config
from core.errors import ConfigError

ROOT = Path(__file__).resolve().parent.parent


def test_defaults():
    config = load_config(None)
    assert config.rank_cap == RANK_CAP
    assert config.output_mode == "text"
    assert config.cache_db_path.name == "hall_cache.db"


def test_sample_config_file():
    config = load_config(str(ROOT / "nhcalc.toml"))
    assert config == Config(cache_dir=config.cache_dir)


def test_overrides_skip_none(tmp_path):
    path = tmp_path / "nhcalc.toml"
    path.write_text('[search]\nbudget = 10\nseed = 5\n[output]\nmode = "json"\n[cache]\ndir = "%s"\n' % tmp_path)
    config = load_config(str(path)).with_overrides(seed=None, rank_cap=4)
    assert (config.search_budget, config.seed, config.rank_cap) == (10, 5, 4)
    assert config.output_mode == "json"
    assert config.cache_dir == tmp_path


@pytest.mark.parametrize("kwargs", [
    {"rank_cap": 13},
    {"rank_cap": 0},
    {"output_mode": "yaml"},
    {"search_max_len": 21},
    {"search_budget": -1},
])
def test_invalid_values(kwargs):
    with pytest.raises(ConfigError):
        Config(**kwargs)


def test_large_rank_needs_opt_in():
    assert Config(rank_cap=14, allow_large_rank=True).rank_cap == 14


def test_bad_files(tmp_path):
    with pytest.raises(ConfigError):
        load_config(str(tmp_path / "missing.toml"))
    path = tmp_path / "broken.toml"
    path.write_text("[limits\n")
    with pytest.raises(ConfigError):
        load_config(str(path))
