import subprocess
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


@pytest.mark.parametrize(
    "argv",
    [
        ["verify_all.py", "--max-degree", "2"],
        ["even_type_grid.py", "--size", "2"],
        ["coefficient_table.py", "--size", "3", "--json"],
    ],
)
def test_script_runs(argv):
    res = subprocess.run([sys.executable, str(SCRIPTS / argv[0]), *argv[1:]], capture_output=True, text=True)
    assert res.returncode == 0, res.stderr
    assert res.stdout
