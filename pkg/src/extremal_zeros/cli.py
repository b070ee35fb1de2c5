"""Command-line entry point.

    extremal-zeros faber --k 2
    extremal-zeros construct --k 3 --series witten
    extremal-zeros hypothesis --series witten --terms 50
    extremal-zeros roots --k 5 --format json
    extremal-zeros verify --kmax 25
    extremal-zeros plot-data --k 25 --row 1 --out Z25roots.data
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, TextIO

from .condition import DEFAULT_HYPOTHESIS_TERMS, DEFAULT_M_UPPER, check_hypothesis
from .extremal import construct, proof_bound, residual_on_arc, verify_principal_part
from .faber import faber
from .modforms import arc_grid
from .partitions import CoeffStream, stream_from_spec
from .roots import DEFAULT_TOL, CertificationError, RootCertificate, certify

EXIT_OK = 0
EXIT_CERT_FAILED = 1
EXIT_HYPOTHESIS_UNMET = 2


@dataclass
class RunConfig:
    command: str
    k: Optional[int] = None
    kmax: Optional[int] = None
    series: str = "witten"
    trunc: Optional[int] = None
    terms: int = DEFAULT_HYPOTHESIS_TERMS
    tol: float = DEFAULT_TOL
    m_upper: float = DEFAULT_M_UPPER
    format: str = "human"
    out: Optional[str] = None
    row: int = 0
    digits: int = 10
    grid: int = 512

    def trunc_for(self, k: int) -> int:
        return self.trunc if self.trunc is not None else k + 10

    def stream(self, k: int) -> CoeffStream:
        return stream_from_spec(self.series, max(k, self.terms))


def _num(x: float, digits: int) -> str:
    return f"{x:.{digits}g}"


def _emit(text: str, cfg: RunConfig, stdout: TextIO) -> None:
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        stdout.write(text)


# -- commands ---------------------------------------------------------------
def cmd_faber(cfg: RunConfig, stdout: TextIO) -> int:
    k = cfg.k
    F = faber(k)[k]
    coeffs = [int(c) for c in F.descending()]
    if cfg.format == "json":
        text = json.dumps({"k": k, "coeffs": coeffs}) + "\n"
    elif cfg.format == "tsv":
        text = "".join(f"{k - i}\t{c}\n" for i, c in enumerate(coeffs))
    else:
        text = " ".join(str(c) for c in coeffs) + "\n"
    _emit(text, cfg, stdout)
    return EXIT_OK


def cmd_construct(cfg: RunConfig, stdout: TextIO) -> int:
    k = cfg.k
    f = construct(cfg.stream(k), k)
    ok = verify_principal_part(f, cfg.trunc_for(k))
    coeffs = [str(c) for c in f.poly.descending()]
    if cfg.format == "json":
        text = json.dumps({"k": k, "coeffs": coeffs, "principal_part_verified": ok}) + "\n"
    elif cfg.format == "tsv":
        text = "".join(f"{k - i}\t{c}\n" for i, c in enumerate(coeffs))
    else:
        text = f"P_{k}(y) = {f.poly}\nprincipal part q^-{k}..q^0 verified: {ok}\n"
    _emit(text, cfg, stdout)
    return EXIT_OK if ok else EXIT_CERT_FAILED


def cmd_hypothesis(cfg: RunConfig, stdout: TextIO) -> int:
    rep = check_hypothesis(cfg.stream(cfg.terms), cfg.terms, cfg.m_upper)
    if cfg.format == "json":
        text = json.dumps(rep.to_dict()) + "\n"
    elif cfg.format == "tsv":
        text = "".join(f"{key}\t{val}\n" for key, val in rep.to_dict().items())
    else:
        d = cfg.digits
        text = (
            f"series: {cfg.series} ({rep.terms_used} terms)\n"
            f"S <= {_num(rep.partial_sum, d)} + tail {_num(rep.tail_bound, d)}"
            f" = {_num(rep.S_upper, d)}\n"
            f"threshold (2-M)/(2+M) at M = {rep.M_upper}: {_num(rep.threshold, d)}\n"
            f"verdict: {'holds' if rep.verdict else 'hypothesis unmet'}\n"
        )
    _emit(text, cfg, stdout)
    return EXIT_OK if rep.verdict else EXIT_HYPOTHESIS_UNMET


def _certificate_human(cert: RootCertificate, digits: int) -> str:
    tag = "" if cert.guaranteed else "  [not guaranteed: hypothesis unmet]"
    lines = [
        f"k={cert.k}: {cert.count_proof} roots in (0, 1728), corners "
        f"j=0:{'ok' if cert.corner_check[0] else 'ROOT'} "
        f"j=1728:{'ok' if cert.corner_check[1] else 'ROOT'}{tag}"
    ]
    for r in cert.roots:
        lines.append(
            f"  j={_num(r.j_approx, digits)}  theta={_num(r.theta, digits)}"
            f"  tau={_num(r.tau_re, digits)}+{_num(r.tau_im, digits)}i  segment={r.segment}"
        )
    return "\n".join(lines) + "\n"


def cmd_roots(cfg: RunConfig, stdout: TextIO) -> int:
    k = cfg.k
    stream = cfg.stream(k)
    hyp = check_hypothesis(stream, cfg.terms, cfg.m_upper)
    f = construct(stream, k)
    try:
        cert = certify(f, cfg.tol, hypothesis=hyp, require_hypothesis=False)
    except CertificationError as exc:
        stdout.write(f"k={k}: certification failed: {exc}\n")
        return EXIT_CERT_FAILED
    if cfg.format == "json":
        text = json.dumps(cert.to_dict()) + "\n"
    elif cfg.format == "tsv":
        text = "".join(
            f"{r.j_approx!r}\t{r.theta!r}\t{r.tau_re!r}\t{r.tau_im!r}\t{r.segment}\n"
            for r in cert.roots
        )
    else:
        text = _certificate_human(cert, cfg.digits)
    _emit(text, cfg, stdout)
    return EXIT_OK if hyp.verdict else EXIT_HYPOTHESIS_UNMET


def cmd_verify(cfg: RunConfig, stdout: TextIO) -> int:
    kmax = cfg.kmax
    stream = cfg.stream(kmax)
    hyp = check_hypothesis(stream, cfg.terms, cfg.m_upper)
    grid = arc_grid(cfg.grid)
    bound = proof_bound(cfg.m_upper, hyp.S_upper)
    records = []
    first_failure: Optional[int] = None
    for k in range(1, kmax + 1):
        f = construct(stream, k)
        pp = verify_principal_part(f, cfg.trunc_for(k))
        try:
            cert = certify(f, cfg.tol, hypothesis=hyp, require_hypothesis=False)
        except CertificationError as exc:
            records.append({"k": k, "error": str(exc), "principal_part_verified": pp})
            first_failure = first_failure or k
            continue
        rmax = max(residual_on_arc(f, grid))
        d = cert.to_dict()
        d.update(
            principal_part_verified=pp,
            max_root_residual=max(r.residual for r in cert.roots),
            max_arc_residual=rmax,
            arc_residual_bound=bound,
            arc_grid_points=len(grid),
        )
        if not (pp and cert.ok):
            first_failure = first_failure or k
        records.append(d)

    if cfg.format == "json":
        text = json.dumps(records) + "\n"
    else:
        sep = "\t" if cfg.format == "tsv" else "  "
        dg = cfg.digits
        head = [
            f"hypothesis: S_upper={_num(hyp.S_upper, dg)} threshold={_num(hyp.threshold, dg)} "
            f"({'holds' if hyp.verdict else 'hypothesis unmet; results not guaranteed'})",
            sep.join(["k", "count", "segments", "corners", "principal", "max_R_k(sampled)", "root_resid"]),
        ]
        rows = []
        for d in records:
            if "error" in d:
                rows.append(f"{d['k']}{sep}FAILED: {d['error']}")
                continue
            segs = ",".join(str(r["segment"]) for r in d["roots"])
            rows.append(
                sep.join(
                    [
                        str(d["k"]),
                        str(d["count"]),
                        segs,
                        "ok" if all(d["corners"]) else "FAIL",
                        "ok" if d["principal_part_verified"] else "FAIL",
                        _num(d["max_arc_residual"], dg),
                        _num(d["max_root_residual"], 3),
                    ]
                )
            )
        tail = [
            "all certificates pass"
            if first_failure is None
            else f"first failing k: {first_failure}"
        ]
        text = "\n".join(head + rows + tail) + "\n"
    _emit(text, cfg, stdout)
    if not hyp.verdict:
        return EXIT_HYPOTHESIS_UNMET
    return EXIT_OK if first_failure is None else EXIT_CERT_FAILED


def plot_lines(cert: RootCertificate, row: int) -> str:
    xs = sorted(r.j_approx for r in cert.roots)
    return "".join(f"{x:.10f} {row}\n" for x in xs)


def cmd_plot_data(cfg: RunConfig, stdout: TextIO) -> int:
    k = cfg.k
    stream = cfg.stream(k)
    hyp = check_hypothesis(stream, cfg.terms, cfg.m_upper)
    cert = certify(construct(stream, k), cfg.tol, hypothesis=hyp, require_hypothesis=False)
    _emit(plot_lines(cert, cfg.row), cfg, stdout)
    return EXIT_OK


COMMANDS = {
    "faber": cmd_faber,
    "construct": cmd_construct,
    "hypothesis": cmd_hypothesis,
    "roots": cmd_roots,
    "verify": cmd_verify,
    "plot-data": cmd_plot_data,
}


def _nonneg(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--series", default="witten", help="'witten' or a file of 'n a(n)' lines")
    common.add_argument("--trunc", type=_nonneg, help="q-expansion truncation (default k + 10)")
    common.add_argument("--terms", type=_nonneg, default=DEFAULT_HYPOTHESIS_TERMS,
                        help="terms summed before the tail bound")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL)
    common.add_argument("--m-upper", type=float, default=DEFAULT_M_UPPER, dest="m_upper")
    common.add_argument("--format", choices=("human", "tsv", "json"), default="human")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--digits", type=_positive, default=10, help="significant digits")

    parser = argparse.ArgumentParser(
        prog="extremal-zeros",
        description="Zeros of f_k(A; tau) = q^-k A(q) + O(q) as polynomials in j.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("faber", parents=[common], help="coefficients of F_k, degree descending")
    p.add_argument("--k", type=_nonneg, required=True)
    for name, helptext in (
        ("construct", "build P_k(A; y) and verify its principal part"),
        ("roots", "certify the zeros of P_k for one k"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--k", type=_positive, required=True)
    sub.add_parser("hypothesis", parents=[common], help="certify S < (2-M)/(2+M)")
    p = sub.add_parser("verify", parents=[common], help="certify every k = 1..kmax")
    p.add_argument("--kmax", type=_positive, required=True)
    p.add_argument("--grid", type=_positive, default=512, help="arc points for sampled R_k")
    p = sub.add_parser("plot-data", parents=[common], help="'x y' lines of the j-roots")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--row", type=int, default=0)
    return parser


def main(argv: Optional[list[str]] = None, stdout: TextIO = sys.stdout) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**vars(args))
    if not 0 < cfg.m_upper < 2:
        stdout.write(f"--m-upper must lie in (0, 2), got {cfg.m_upper}\n")
        return EXIT_CERT_FAILED
    return COMMANDS[cfg.command](cfg, stdout)


if __name__ == "__main__":
    sys.exit(main())
