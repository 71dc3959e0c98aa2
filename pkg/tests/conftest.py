import os

import pytest


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch, tmp_path):
    """No DYCK_* variables and no stray .env file leak into a test"""
    for name in list(os.environ):
        if name.startswith("DYCK_"):
            monkeypatch.delenv(name)
    monkeypatch.chdir(tmp_path)
