import json

import pytest

from algebra.hall import generate, get_basis
from core.config import Config, configure
from core.database import HallBasisModel, get_cache_engine, get_cache_session
from services.hall_cache_service import HallCacheService


@pytest.fixture
def cache_config(tmp_path):
    return configure(Config(cache_dir=tmp_path))


@pytest.fixture
def session(cache_config):
    s = get_cache_session(cache_config.cache_db_path)
    yield s
    s.close()


def test_params_hash_is_stable():
    key = HallCacheService.params_hash(3, 4, False)
    assert key == HallCacheService.params_hash(3, 4, 0)
    assert key != HallCacheService.params_hash(3, 4, True)
    assert len(key) == 64


def test_store_and_lookup(session):
    basis = generate(3, 4)
    entry = HallCacheService.store(session, basis)
    assert entry is not None
    assert entry.to_dict()["rank"] == 3
    assert HallCacheService.lookup(session, 3, 4, False) == basis
    assert HallCacheService.lookup(session, 3, 4, True) is None


def test_duplicate_store_is_ignored(session):
    basis = generate(2, 3)
    assert HallCacheService.store(session, basis) is not None
    assert HallCacheService.store(session, basis) is None
    assert session.query(HallBasisModel).count() == 1


def test_invalid_entries_are_deleted(session):
    basis = generate(2, 3)
    entry = HallCacheService.store(session, basis)
    entry.payload = json.dumps(basis.to_json()[:-1])
    session.commit()
    assert HallCacheService.lookup(session, 2, 3, False) is None
    assert session.query(HallBasisModel).count() == 0

    entry = HallCacheService.store(session, basis)
    entry.payload = "not json"
    session.commit()
    assert HallCacheService.lookup(session, 2, 3, False) is None


def test_installed_cache_serves_bases(cache_config, session):
    HallCacheService.install()
    first = get_basis(3, 3, True)
    assert first == generate(3, 3, True)
    assert session.query(HallBasisModel).count() == 1
    assert get_basis(3, 3, True) == first
    assert HallCacheService.clear() == 1


def test_uncacheable_and_disabled(tmp_path, session):
    HallCacheService.install()
    assert get_basis(7, 2) == generate(7, 2)
    configure(Config(cache_dir=tmp_path, use_cache=False))
    assert get_basis(2, 2) == generate(2, 2)
    assert session.query(HallBasisModel).count() == 0


def test_unwritable_cache_falls_back(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    configure(Config(cache_dir=blocker / "cache"))
    HallCacheService.install()
    assert get_basis(2, 3) == generate(2, 3)


def test_engine_is_shared_per_path(cache_config):
    path = cache_config.cache_db_path
    assert get_cache_engine(path) is get_cache_engine(path)
    first, second = get_cache_session(path), get_cache_session(path)
    assert first.get_bind() is second.get_bind()
    first.close()
    second.close()


def test_decoded_bases_are_kept_in_memory(cache_config, monkeypatch):
    HallCacheService.install()
    first = get_basis(3, 3, True)

    def no_database(*args):
        raise AssertionError("basis read from the database twice")

    monkeypatch.setattr(HallCacheService, "lookup", staticmethod(no_database))
    assert get_basis(3, 3, True) is first
