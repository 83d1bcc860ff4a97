"""Command-line interface.

Exit codes: 0 success, 1 check failed, 2 invalid argument, 3 decode failure,
4 ambiguity, 5 resource limit.

Codeword and channel-output files are the plain matrix text format, optionally
preceded by one JSON header line recording the construction and parameters.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import bounds as B
from . import constructions as C
from .bits import CodeMatrix, format_matrices, parse_matrices
from .channel import ERROR_TYPES, corrupt, dna_partitions, error_ball, is_correcting_code
from .errors import InvalidArgument, SumChannelError

SCHEMA = 1
CONSTRUCTIONS = ("c1", "c2", "c3", "c4")


@dataclass
class CommandConfig:
    command: str
    construction: Optional[str] = None
    ell: Optional[int] = None
    n: Optional[int] = None
    c: int = 3
    c1: int = 0
    b1: int = 0
    c2: int = 0
    b2: int = 0
    s0: int = 0
    s1: int = 0
    syndrome: int = 0
    auto_coset: bool = False
    seed: int = 0
    cap_bits: int = C.DEFAULT_ENUM_CAP_BITS
    samples: int = 200
    fmt: str = "text"
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.cap_bits <= 0:
            raise InvalidArgument("caps must be positive")
        if self.construction is not None and self.construction not in CONSTRUCTIONS:
            raise InvalidArgument(f"unknown construction {self.construction!r}")

    def params(self):
        name, n = self.construction, self.n
        if name is None or n is None:
            raise InvalidArgument("--construction and --n are required")
        if name == "c1":
            if self.auto_coset:
                return C.c1_search_coset(n, self.c, self.cap_bits)[0]
            return C.Construction1Params(n, self.c1, self.b1, self.c2, self.b2, c=self.c)
        if name == "c3":
            return C.Construction3Params(n, self.b1, self.b2)
        if self.ell is None:
            raise InvalidArgument(f"--l is required for {name}")
        if name == "c2":
            return C.Construction2Params(self.ell, n, self.s0, self.s1, c=self.c)
        return C.Construction4Params(self.ell, n, self.syndrome)


_DECODERS = {"c1": C.c1_decode, "c2": C.c2_decode, "c3": C.c3_decode, "c4": C.c4_decode}
_PARAM_TYPES = {"c1": C.Construction1Params, "c2": C.Construction2Params,
                "c3": C.Construction3Params, "c4": C.Construction4Params}


def params_from_json(name: str, d: dict):
    d = dict(d)
    if "l" in d:
        d["ell"] = d.pop("l")
    cls = _PARAM_TYPES[name]
    keep = {k: v for k, v in d.items() if k in cls.__dataclass_fields__}
    return cls(**keep)


def codebook(name: str, p, cap_bits: int) -> list:
    if name == "c1":
        return C.c1_codebook(p, cap_bits)
    if name == "c2":
        return C.c2_codebook(p, min(cap_bits, 20))
    if name == "c3":
        return C.c3_codebook(p, cap_bits)
    return C.c4_codebook(p, min(cap_bits, 20))


def _header(name: str, p, **extra) -> str:
    return json.dumps({"schema": SCHEMA, "construction": name, "params": p.to_json(), **extra},
                      sort_keys=True)


def split_header(text: str) -> tuple:
    """(header dict or None, remaining text)."""
    first, _, rest = text.partition("\n")
    if first.lstrip().startswith("{"):
        try:
            return json.loads(first), rest
        except json.JSONDecodeError as e:
            raise InvalidArgument(f"malformed header line: {e}") from None
    return None, text


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as f:
            return f.read()
    except OSError as e:
        raise InvalidArgument(str(e)) from None


def _write(path: Optional[str], text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as f:
            f.write(text)


def _one_record(text: str, what: str):
    records = parse_matrices(text)
    if len(records) != 1:
        raise InvalidArgument(f"expected one {what} matrix, found {len(records)}")
    return records[0]


def _resolve(cfg: CommandConfig, header: Optional[dict]) -> tuple:
    """Construction name and params: flags win, the file header fills gaps."""
    if cfg.construction and cfg.n is not None:
        return cfg.construction, cfg.params()
    if header and "construction" in header:
        return header["construction"], params_from_json(header["construction"], header["params"])
    raise InvalidArgument("no construction given by flags or file header")


# -- commands ----------------------------------------------------------------

def cmd_encode(cfg: CommandConfig) -> int:
    name, p = cfg.construction, cfg.params()
    book = codebook(name, p, cfg.cap_bits)
    index = cfg.extra["index"]
    X = C.encode_index(index, book)
    if cfg.fmt == "json":
        out = json.dumps({"schema": SCHEMA, "construction": name, "params": p.to_json(),
                          "index": index, "codebook_size": len(book),
                          "matrix": [str(r) for r in X]}, sort_keys=True) + "\n"
    else:
        out = _header(name, p, index=index, codebook_size=len(book)) + "\n" + format_matrices([X])
    _write(cfg.extra.get("output"), out)
    return 0


def cmd_corrupt(cfg: CommandConfig) -> int:
    header, body = split_header(_read(cfg.extra["input"]))
    X = CodeMatrix(_one_record(body, "codeword"))
    t, kind = cfg.extra["t"], cfg.extra["kind"]
    Y, events = corrupt(X, t, kind, cfg.seed)
    meta = {"schema": SCHEMA, "t": t, "kind": kind, "seed": cfg.seed,
            "events": [e.to_json() for e in events]}
    if header:
        meta.update({k: header[k] for k in ("construction", "params") if k in header})
    if cfg.fmt == "json":
        meta["received"] = [str(r) for r in Y]
        out = json.dumps(meta, sort_keys=True) + "\n"
    else:
        out = json.dumps(meta, sort_keys=True) + "\n" + format_matrices([Y])
    _write(cfg.extra.get("output"), out)
    return 0


def cmd_decode(cfg: CommandConfig) -> int:
    header, body = split_header(_read(cfg.extra["input"]))
    name, p = _resolve(cfg, header)
    Y = _one_record(body, "received")
    trace: dict = {}
    X = _DECODERS[name](Y, p, trace)
    if cfg.fmt == "json":
        out = json.dumps({"schema": SCHEMA, "construction": name, "trace": trace,
                          "matrix": [str(r) for r in X]}, sort_keys=True) + "\n"
    else:
        out = _header(name, p, trace=trace) + "\n" + format_matrices([X])
    _write(cfg.extra.get("output"), out)
    return 0


def roundtrip(name: str, p, book: list, kind: str, t: int) -> dict:
    """Decode every pattern of the construction's error model."""
    decode = _DECODERS[name]
    patterns = failures = 0
    first = None
    for X in book:
        if name in ("c1", "c2"):
            outputs = (Y for _, Y in C.distinct_row_deletion_patterns(X))
        else:
            outputs = iter(error_ball(X, t, kind))
        for Y in outputs:
            patterns += 1
            try:
                ok = decode(Y, p) == X
                err = None if ok else "wrong codeword"
            except SumChannelError as e:
                ok, err = False, f"{type(e).__name__}: {e}"
            if not ok:
                failures += 1
                if first is None:
                    first = {"codeword": [str(r) for r in X],
                             "received": [str(r) for r in Y], "error": err}
    out = {"patterns": patterns, "failures": failures}
    if first:
        out["first_failure"] = first
    return out


def cmd_verify(cfg: CommandConfig) -> int:
    name, p = cfg.construction, cfg.params()
    t, kind = cfg.extra["t"], cfg.extra["kind"]
    if name == "c2" and p.ell * p.n > min(cfg.cap_bits, 20):
        book = C.c2_sample_codewords(p, cfg.samples, cfg.seed)
        sampled = True
    else:
        book = codebook(name, p, cfg.cap_bits)
        sampled = False
    check = is_correcting_code(book, t, kind)
    report = {"schema": SCHEMA, "construction": name, "params": p.to_json(), "t": t,
              "kind": kind, "codewords": len(book), "sampled": sampled,
              "disjoint_balls": check.to_json()}
    decodable = (name in ("c1", "c2") and kind == "D") or (name in ("c3", "c4") and kind in ("S", "SID"))
    if decodable and not cfg.extra.get("no_roundtrip"):
        report["roundtrip"] = roundtrip(name, p, book, kind, t)
    report["pass"] = check.ok and report.get("roundtrip", {}).get("failures", 0) == 0
    _write(cfg.extra.get("output"), json.dumps(report, sort_keys=True, indent=2) + "\n")
    return 0 if report["pass"] else 1


def parse_range(text: str) -> list:
    """'3', '1..8' or '2,4,6'."""
    out = []
    try:
        for part in text.split(","):
            if ".." in part:
                lo, hi = part.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise InvalidArgument(f"bad range {text!r}") from None
    if not out:
        raise InvalidArgument(f"empty range {text!r}")
    return out


def _emit_table(rows: list, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"schema": SCHEMA, "rows": rows}, default=str, sort_keys=True, indent=2) + "\n"
    if not rows:
        return ""
    cols = list(rows[0])
    for r in rows[1:]:
        cols += [c for c in r if c not in cols]
    buf = io.StringIO()
    if fmt == "csv":
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        w.writerows({k: str(v) for k, v in r.items()} for r in rows)
    else:
        widths = {c: max(len(c), *(len(str(r.get(c, ""))) for r in rows)) for c in cols}
        buf.write("  ".join(c.rjust(widths[c]) for c in cols) + "\n")
        for r in rows:
            buf.write("  ".join(str(r.get(c, "")).rjust(widths[c]) for c in cols) + "\n")
    return buf.getvalue()


def cmd_bounds(cfg: CommandConfig) -> int:
    ex = cfg.extra
    ns = parse_range(ex["n_range"])
    rows: list = []
    if ex["mode"] == "edit":
        rows = B.edit_bound_table(cfg.ell or 2, ns)
    elif ex["mode"] == "twodel":
        rows = B.twodel_cover_table(ns)
    elif ex["mode"] == "a2del":
        for n in ns:
            rep = B.upper_bound_A_2del(n).to_json()
            rows.append({"n": n, "k": rep["k"], "value": rep["value"],
                         "closed_form_over_4n": rep.get("closed_form_over_4n", "")})
    else:
        for n in ns:
            size, _ = B.exact_max_code(cfg.ell or 2, n, ex["t"], ex["kind"])
            rows.append({"l": cfg.ell or 2, "n": n, "t": ex["t"], "kind": ex["kind"], "exact": size})
    _write(ex.get("output"), _emit_table(rows, cfg.fmt))
    return 0


def cmd_dna(cfg: CommandConfig) -> int:
    strand = cfg.extra["strand"].upper()
    w1, w2, w3 = dna_partitions(strand)
    lines = [str(w1), str(w2), str(w3)]
    identity = (w1 + w2) == w3
    lines.append(f"{w1} + {w2} = {w1 + w2}: {'OK' if identity else 'FAIL'}")
    report = {"schema": SCHEMA, "strand": strand, "reads": [str(w1), str(w2), str(w3)],
              "identity": identity}
    if cfg.extra.get("corrupt") or cfg.extra.get("decode"):
        protected = C.dna_protect(strand)
        p1, p2, _ = dna_partitions(protected)
        Y, events = corrupt(CodeMatrix([p1, p2]), 1 if cfg.extra.get("corrupt") else 0,
                            cfg.extra.get("kind", "S"), cfg.seed)
        trace: dict = {}
        recovered = C.dna_recover(Y, trace)
        report.update(protected=protected, events=[e.to_json() for e in events],
                      received=[str(r) for r in Y], recovered=recovered,
                      recovered_ok=recovered == strand, trace=trace)
        lines += [f"protected: {protected}",
                  "received: " + " / ".join(str(r) or "-" for r in Y),
                  f"recovered: {recovered} ({'OK' if recovered == strand else 'FAIL'})"]
    if cfg.fmt == "json":
        out = json.dumps(report, sort_keys=True) + "\n"
    else:
        out = "\n".join(lines) + "\n"
    _write(cfg.extra.get("output"), out)
    ok = identity and report.get("recovered_ok", True)
    return 0 if ok else 1


COMMANDS = {"encode": cmd_encode, "corrupt": cmd_corrupt, "decode": cmd_decode,
            "verify": cmd_verify, "bounds": cmd_bounds, "dna": cmd_dna}


# -- argument parsing -----------------------------------------------------------

def _construction_args(p: argparse.ArgumentParser, required: bool):
    p.add_argument("--construction", choices=CONSTRUCTIONS, required=required)
    p.add_argument("--n", type=int)
    p.add_argument("--l", dest="ell", type=int)
    p.add_argument("--c", type=int, default=3, help="slack constant of c1/c2")
    for name in ("c1", "b1", "c2", "b2", "s0", "s1", "syndrome"):
        p.add_argument(f"--{name}", type=int, default=0)
    p.add_argument("--auto-coset", action="store_true", help="use the largest c1 coset")
    p.add_argument("--cap-bits", type=int, default=C.DEFAULT_ENUM_CAP_BITS,
                   help="enumerate at most 2^CAP_BITS matrices")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sumchannel", description="Sum-channel codes toolkit")
    ap.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default="text")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="codeword for an information index")
    _construction_args(p, True)
    p.add_argument("--index", type=int, required=True)
    p.add_argument("-o", "--output")

    p = sub.add_parser("corrupt", help="pass a codeword through the sum channel")
    p.add_argument("-i", "--input", default="-")
    p.add_argument("-o", "--output")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--kind", choices=ERROR_TYPES, required=True)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("decode", help="recover a codeword from a channel output")
    _construction_args(p, False)
    p.add_argument("-i", "--input", default="-")
    p.add_argument("-o", "--output")

    p = sub.add_parser("verify", help="exhaustive correctness checks")
    _construction_args(p, True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--kind", choices=ERROR_TYPES, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--no-roundtrip", action="store_true")
    p.add_argument("-o", "--output")

    p = sub.add_parser("bounds", help="bound tables")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--edit", dest="mode", action="store_const", const="edit")
    mode.add_argument("--twodel", dest="mode", action="store_const", const="twodel")
    mode.add_argument("--a2del", dest="mode", action="store_const", const="a2del")
    mode.add_argument("--exact", dest="mode", action="store_const", const="exact")
    p.add_argument("--n", dest="n_range", required=True, help="e.g. 4, 1..8 or 2,4")
    p.add_argument("--l", dest="ell", type=int)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--kind", choices=ERROR_TYPES, default="SID")
    p.add_argument("-o", "--output")

    p = sub.add_parser("dna", help="ECC-sequencing partitions of a strand")
    p.add_argument("strand")
    p.add_argument("--corrupt", action="store_true", help="one random error on the reads")
    p.add_argument("--decode", action="store_true", help="protect, read and decode")
    p.add_argument("--kind", choices=("S", "D", "I", "SID"), default="S")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    return ap


_BASE_FIELDS = set(CommandConfig.__dataclass_fields__) - {"extra", "command"}


def config_from_args(ns: argparse.Namespace) -> CommandConfig:
    d = vars(ns)
    base = {k: v for k, v in d.items() if k in _BASE_FIELDS and v is not None}
    extra = {k: v for k, v in d.items() if k not in _BASE_FIELDS and k != "command"}
    if "n_range" in extra:
        base.pop("n", None)
    return CommandConfig(command=ns.command, extra=extra, **base)


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(ns)
        return COMMANDS[cfg.command](cfg)
    except SumChannelError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
