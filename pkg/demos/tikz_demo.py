"""Emit a TikZ picture of a triple-crossing diagram.

At each triple point the bottom strand is drawn green, the top strand red,
and the middle strand black.  Writes a standalone tikzpicture to stdout or to
the path given as the second argument.

    python3 demos/tikz_demo.py [spd-code] [out.tex]
"""

import sys

from tricross import emit_tikz, parse_spd

DEFAULT = "sPD[X[5,4,3,2,1,5|TMB],X[6,2,3,4,1,6|TMB]]"  # a trefoil


def main() -> None:
    code = sys.argv[1] if len(sys.argv) > 1 else DEFAULT
    tikz = emit_tikz(parse_spd(code))
    if len(sys.argv) > 2:
        with open(sys.argv[2], "w") as f:
            f.write(tikz)
        print(f"wrote {sys.argv[2]}")
    else:
        print(tikz)


if __name__ == "__main__":
    main()
