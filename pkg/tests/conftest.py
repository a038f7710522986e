from __future__ import annotations

import pytest

import paps


@pytest.fixture(scope="session")
def obs():
    model, risk = paps.parse_model(paps.obs_fixture_text())
    return model, risk


@pytest.fixture(scope="session")
def default_fis():
    return paps.load_default_rulebase()


@pytest.fixture()
def obs_path(tmp_path):
    path = tmp_path / "obs.srm"
    path.write_text(paps.obs_fixture_text(), encoding="utf-8")
    return str(path)
