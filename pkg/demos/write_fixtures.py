"""Write every named fixture as a DIMACS file, e.g. for trying the CLI."""

import sys
from pathlib import Path

from symred.dimacs import write_dimacs
from symred.fixtures import FIXTURES

if __name__ == "__main__":
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "fixtures")
    out.mkdir(parents=True, exist_ok=True)
    for name, g in FIXTURES.items():
        path = out / f"{name.lower()}.dimacs"
        path.write_text(write_dimacs(g, [name]))
        print(path)
