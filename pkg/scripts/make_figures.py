"""Write the ladder diagrams and the n - k series into an output directory.

    python scripts/make_figures.py [OUTDIR]

Produces:
    cbrt2_cbrt4_ladder.svg   first 40 rungs of (cbrt 2, cbrt 4), m = 2
    cbrt6_cbrt36_ladder.svg  first 40 rungs of (cbrt 6, cbrt 36), m = 6
    cbrt2_n_minus_k.csv      n - k over the 1000-term ladder of (cbrt 2, cbrt 4)
    cbrt2_kuzmin.csv         quotient frequencies of cbrt 2 over 1000 terms
"""
import sys
from pathlib import Path

from cfladder.cli import main as cli

out = Path(sys.argv[1] if len(sys.argv) > 1 else "figures")
out.mkdir(parents=True, exist_ok=True)
devnull = str(out / ".ladder.csv")

steps = [
    ["ladder", "--xi", "cbrt:2", "--m", "2", "--terms", "40", "--output", devnull,
     "--svg", str(out / "cbrt2_cbrt4_ladder.svg")],
    ["ladder", "--xi", "cbrt:6", "--eta", "cbrt:36", "--m", "6", "--terms", "40",
     "--output", devnull, "--svg", str(out / "cbrt6_cbrt36_ladder.svg")],
    ["ladder", "--xi", "cbrt:2", "--m", "2", "--terms", "1000", "--verify",
     "--output", devnull, "--figure3", str(out / "cbrt2_n_minus_k.csv")],
    ["stats", "--number", "cbrt:2", "--terms", "1000", "--output", str(out / "cbrt2_kuzmin.csv")],
]
for argv in steps:
    code = cli(argv)
    if code:
        sys.exit(code)
Path(devnull).unlink()
print(f"figures written to {out}/")
