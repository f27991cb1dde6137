import os
import subprocess
import sys

import pytest

from diverse_opt import _backend


def test_unknown_backend():
    with pytest.raises(ValueError):
        _backend.kernels("fortran")


def test_python_always_available():
    assert "python" in _backend.AVAILABLE
    assert _backend.kernels("python") is _backend.AVAILABLE["python"]


def test_env_forces_fallback():
    env = dict(os.environ, DIVERSE_OPT_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from diverse_opt import _backend; print(_backend.DEFAULT)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
