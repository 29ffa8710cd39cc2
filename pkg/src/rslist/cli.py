"""Command line interface.

Every subcommand accepts the shared flags below; ``--config FILE`` reads
``key = value`` lines with the same names (dashes or underscores), and
explicit flags win over the file.
"""

from __future__ import annotations

import argparse
import io
import logging
import sys
from pathlib import Path


from . import fileio
from .code import encode_generator, narrow_sense_transform
from .decoding import DecoderConfig, list_decode
from .errors import RSError
from .field import Field
from .harness import (
    ErrorModel,
    ExperimentConfig,
    Pipeline,
    corrupt,
    run_compare_scaling,
    run_roundtrip,
)
from .recovery import recover_message
from .rng import SplitMix64

DEFAULTS = {
    "field": "field m=3 poly=0xb n=7",
    "code": "7,4,1",
    "gen": "banded",
    "decoder": "gs",
    "radius": "auto",
    "multiplicity": "auto",
    "errors": "0",
    "trials": "100",
    "seed": "0",
    "out": None,
    "json": None,
    "in": None,
    "transform": None,
}


def read_config_file(path: str) -> dict[str, str]:
    values = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise RSError(f"{path}:{lineno}: expected 'key = value'")
        key, value = line.split("=", 1)
        values[key.strip().replace("-", "_")] = value.strip()
    return values


def _field_arg(text: str) -> Field:
    path = Path(text)
    if path.is_file():
        text = path.read_text().strip().splitlines()[0]
    return Field.from_descriptor(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key = value file mirroring the flags")
    common.add_argument("--field", help="'field m=<int> poly=0x<hex> n=<int>' or a file holding it")
    common.add_argument("--code", help="n,k,b")
    common.add_argument("--gen", help="banded | random:<seed> | grs:<vfile> | grs:random:<seed> | grs:ones | <matrix file>")
    common.add_argument("--decoder", choices=["brute", "gs"])
    common.add_argument("--radius", help="integer or 'auto'")
    common.add_argument("--multiplicity", help="GS multiplicity, integer or 'auto'")
    common.add_argument("--errors", help="fixed weight t, or p=<prob>")
    common.add_argument("--trials")
    common.add_argument("--seed")
    common.add_argument("--in", dest="in_", metavar="IN", help="input file (default stdin)")
    common.add_argument("--transform", help="transform file written by 'precompute'")
    common.add_argument("--out", help="output file (default stdout)")
    common.add_argument("--json", help="also write a JSON report here")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="rslist", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("precompute", "build the recovery transform and print B"),
        ("encode", "encode messages with the generator matrix"),
        ("corrupt", "inject symbol errors"),
        ("decode", "scale received words and list decode them"),
        ("recover", "map list elements back to messages"),
        ("roundtrip", "simulate encode/corrupt/decode/recover"),
        ("compare-scaling", "compare column scaling with the transform on a GRS generator"),
    ]:
        sub.add_parser(name, parents=[common], help=help_)
    return parser


def resolve_settings(args: argparse.Namespace) -> dict[str, str | None]:
    settings = dict(DEFAULTS)
    if args.config:
        settings.update(read_config_file(args.config))
    for key in DEFAULTS:
        val = getattr(args, "in_" if key == "in" else key, None)
        if val is not None:
            settings[key] = val
    return settings


def experiment_config(s: dict[str, str | None]) -> ExperimentConfig:
    n, k, b = (int(x) for x in str(s["code"]).split(","))
    radius = s["radius"] if s["radius"] == "auto" else int(s["radius"])
    mult = s["multiplicity"] if s["multiplicity"] == "auto" else int(s["multiplicity"])
    kind = "brute_force" if s["decoder"] in ("brute", "brute_force") else "guruswami_sudan"
    return ExperimentConfig(
        field=_field_arg(str(s["field"])),
        n=n, k=k, b=b,
        gen=str(s["gen"]),
        decoder=DecoderConfig(kind, radius, mult),
        errors=ErrorModel.parse(str(s["errors"])),
        trials=int(s["trials"]),
        seed=int(str(s["seed"]), 0),
    )


def _read_input(s) -> list[str]:
    text = Path(s["in"]).read_text() if s["in"] else sys.stdin.read()
    return [ln.strip() for ln in text.splitlines() if ln.strip()]


def _emit(s, text: str) -> None:
    if s["out"]:
        Path(s["out"]).write_text(text)
    else:
        sys.stdout.write(text)


def _transform(s, pipe_cfg: ExperimentConfig):
    if s["transform"]:
        t = fileio.read_transform(Path(s["transform"]).read_text())
        if t.spec != pipe_cfg.code():
            raise RSError("transform file does not match --field/--code")
        return t
    return None


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        s = resolve_settings(args)
        cfg = experiment_config(s)
        return _dispatch(args.command, s, cfg)
    except (RSError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def _dispatch(command: str, s, cfg: ExperimentConfig) -> int:
    if command == "roundtrip":
        report = run_roundtrip(cfg, _transform(s, cfg))
        _emit(s, report.to_text())
        if s["json"]:
            Path(s["json"]).write_text(report.to_json())
        return 0
    if command == "compare-scaling":
        report = run_compare_scaling(cfg)
        _emit(s, report.to_text())
        if s["json"]:
            Path(s["json"]).write_text(report.to_json())
        return 0

    spec = cfg.code()
    fld = spec.field
    if command == "precompute":
        pipe = Pipeline(cfg)
        buf = io.StringIO()
        fileio.write_transform(pipe.transform, buf)
        if s["out"]:
            Path(s["out"]).write_text(buf.getvalue())
        sys.stdout.write(fileio.format_matrix(pipe.transform.b_matrix))
        return 0
    if command == "encode":
        pipe = Pipeline(cfg)
        words = [encode_generator(spec, pipe.generator.matrix, fileio.parse_vector(fld, ln))
                 for ln in _read_input(s)]
        _emit(s, "".join(fileio.format_vector(w) + "\n" for w in words))
        return 0
    if command == "corrupt":
        rng = SplitMix64(cfg.seed)
        words = [corrupt(fld, fileio.parse_vector(fld, ln), cfg.errors, rng)
                 for ln in _read_input(s)]
        _emit(s, "".join(fileio.format_vector(w) + "\n" for w in words))
        return 0
    if command == "decode":
        lines = []
        for ln in _read_input(s):
            rbar = narrow_sense_transform(spec, fileio.parse_vector(fld, ln))
            out = list_decode(spec, rbar, cfg.decoder)
            dists = ",".join(str(d) for d in out.distances)
            lines.append(f"list {len(out)} radius={out.radius_used} distances={dists}")
            lines.extend(fileio.format_vector(f) for f in out.candidates)
        _emit(s, "".join(ln + "\n" for ln in lines))
        return 0
    if command == "recover":
        t = _transform(s, cfg) or Pipeline(cfg).transform
        lines = []
        for ln in _read_input(s):
            if ln.startswith("list"):
                lines.append(ln)
                continue
            lines.append(fileio.format_vector(recover_message(t, fileio.parse_vector(fld, ln))))
        _emit(s, "".join(ln + "\n" for ln in lines))
        return 0
    raise RSError(f"unknown command {command}")


if __name__ == "__main__":
    sys.exit(main())
