"""Write Z5roots.data and Z25roots.data: the j-roots of P_k for Witten's Z_k,
one "x y" line per root with y the plot row (0 for k=5, 1 for k=25)."""

import argparse
from pathlib import Path

from extremal_zeros.cli import plot_lines
from extremal_zeros.extremal import construct
from extremal_zeros.partitions import witten_stream
from extremal_zeros.roots import certify


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="out")
    args = ap.parse_args()
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    stream = witten_stream(50)
    for row, k in enumerate((5, 25)):
        cert = certify(construct(stream, k))
        path = outdir / f"Z{k}roots.data"
        path.write_text(plot_lines(cert, row))
        print(f"{path}: {len(cert.roots)} roots, segments {sorted(cert.segments)}")


if __name__ == "__main__":
    main()
