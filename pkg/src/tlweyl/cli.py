"""Command-line interface: ``tlweyl <command> --rank N [options]``.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 capacity error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .categorify import (
    ORACLE_HARD_CAP,
    VERIFY_CAP,
    annihilator_varieties,
    decompose_product,
    dense_table,
    verify_correspondence,
)
from .coxeter import (
    Word,
    check_rank,
    check_word,
    enumerate_fully_commutative,
    length,
    lex_min_reduced_word,
)
from .dense import blocks, dense_of_sequence
from .errors import CapacityError, InputError, TLWeylError
from .laurent import DELTA
from .render import RENDERERS
from .tl import word_diagram
from .weyl_lines import reflections_of, sequence_variety

EXIT_OK, EXIT_FAILURE, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3

COMMANDS = ("fc-list", "dense", "verify", "table", "decompose", "render", "oracle-check")
FORMATS = ("text", "json", "svg", "tikz")
NEEDS_WORD = {"dense", "decompose", "render"}
RANK_CAPS = {
    "fc-list": 12,
    "dense": 12,
    "verify": VERIFY_CAP,
    "table": VERIFY_CAP,
    "decompose": 10,
    "render": 12,
    "oracle-check": ORACLE_HARD_CAP,
}
DEFAULT_SAMPLES = 500


@dataclass(frozen=True)
class RunConfig:
    command: str
    rank: int
    word: Word | None = None
    format: str = "text"
    seed: int | None = None
    oracle: bool = False
    samples: int = DEFAULT_SAMPLES

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InputError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise InputError(f"unknown format {self.format!r}")
        check_rank(self.rank, RANK_CAPS[self.command])
        if self.command in NEEDS_WORD:
            if self.word is None:
                raise InputError(f"{self.command} needs --word")
            check_word(self.word, self.rank)
        if self.samples < 1:
            raise InputError("--samples must be positive")
        if self.format in ("svg", "tikz") and self.command != "render":
            raise InputError(f"format {self.format} is only available for render")


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("", "e"):
        return ()
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise InputError(f"cannot parse word {text!r}; expected comma-separated integers") from None


def _pairs(q: Iterable[tuple[int, int]]) -> list[list[int]]:
    return [list(t) for t in sorted(q)]


def _set_text(q: Iterable[Sequence[int]]) -> str:
    return "{" + ", ".join(f"({a},{b})" for a, b in sorted(tuple(t) for t in q)) + "}"


def _word_text(word: Sequence[int]) -> str:
    return " ".join(f"s{i}" for i in word) if word else "e"


def table_json(rows: list[dict]) -> str:
    """Stable JSON layout with one record per line."""
    if not rows:
        return "[]\n"
    return "[\n" + ",\n".join("  " + json.dumps(r, separators=(", ", ": ")) for r in rows) + "\n]\n"


def cmd_fc_list(cfg: RunConfig) -> tuple[int, str]:
    rows = []
    for p in enumerate_fully_commutative(cfg.rank):
        rows.append({"element": list(lex_min_reduced_word(p)), "permutation": list(p), "length": length(p)})
    if cfg.format == "json":
        return EXIT_OK, table_json(rows)
    lines = [f"{' '.join(map(str, r['permutation']))}  {_word_text(r['element'])}" for r in rows]
    lines.append(f"{len(rows)} fully commutative elements")
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_dense(cfg: RunConfig) -> tuple[int, str]:
    if not cfg.word:
        raise InputError("dense needs a nonempty word")
    left, right = annihilator_varieties(cfg.word)
    out = {"word": list(cfg.word), "left": _pairs(left), "right": _pairs(right), "blocks": [list(b) for b in blocks(left)]}
    status = EXIT_OK
    if cfg.oracle:
        variety = sequence_variety(cfg.word, cfg.rank)
        via_lines = reflections_of(variety)
        out["oracle"] = {"lines": len(variety), "reflections": _pairs(via_lines), "agrees": via_lines == set(left)}
        if via_lines != set(left):
            status = EXIT_FAILURE
    if cfg.format == "json":
        return status, json.dumps(out) + "\n"
    text = f"word  {_word_text(cfg.word)}\nleft  {_set_text(left)}\nright {_set_text(right)}\n"
    if cfg.oracle:
        verdict = "agrees" if out["oracle"]["agrees"] else "DISAGREES"
        text += f"oracle {_set_text(out['oracle']['reflections'])} from {out['oracle']['lines']} lines: {verdict}\n"
    return status, text


def cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    report = verify_correspondence(cfg.rank, oracle=True if cfg.oracle else None)
    status = EXIT_OK if report.ok else EXIT_FAILURE
    if cfg.format == "json":
        data = report.to_json()
        data.pop("rows")
        return status, json.dumps(data) + "\n"
    lines = [report.summary()]
    for f in report.failures:
        lines.append("  failure: " + json.dumps(f))
    if report.failure_count > len(report.failures):
        lines.append(f"  ... {report.failure_count - len(report.failures)} more")
    return status, "\n".join(lines) + "\n"


def cmd_table(cfg: RunConfig) -> tuple[int, str]:
    rows = dense_table(cfg.rank)
    if cfg.format == "json":
        return EXIT_OK, table_json(rows)
    words = [_word_text(r["element"]) for r in rows]
    lefts = [_set_text(r["left"]) for r in rows]
    w1 = max(len("element"), *map(len, words))
    w2 = max(len("left"), *map(len, lefts))
    lines = [f"{'element':<{w1}}  {'left':<{w2}}  right"]
    for word, left, r in zip(words, lefts, rows):
        lines.append(f"{word:<{w1}}  {left:<{w2}}  {_set_text(r['right'])}")
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_decompose(cfg: RunConfig) -> tuple[int, str]:
    if not cfg.word:
        raise InputError("decompose needs a nonempty word")
    record = decompose_product(cfg.word, cfg.rank)
    (w,) = record.elements()
    coeff = record.laurent(w)
    if cfg.format == "json":
        out = {"word": list(cfg.word), "coefficient": coeff.to_json(), "summands": record.to_json()}
        return EXIT_OK, json.dumps(out) + "\n"
    prod = " ".join(f"b{i}" for i in cfg.word)
    lines = [f"{prod} = ({coeff}) b_w,  w = {_word_text(lex_min_reduced_word(w))}"]
    for item in record.to_json():
        lines.append(f"  B_w[{item['shift']}] x {item['multiplicity']}")
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_render(cfg: RunConfig) -> tuple[int, str]:
    loops, d = word_diagram(cfg.word, cfg.rank)
    if cfg.format == "json":
        out = {
            "n": cfg.rank,
            "word": list(cfg.word),
            "coefficient": (DELTA**loops).to_json(),
            "top": _pairs(d.top_arcs()),
            "bottom": _pairs(d.bottom_arcs()),
            "through": [list(s) for s in d.through_strands()],
        }
        return EXIT_OK, json.dumps(out) + "\n"
    return EXIT_OK, RENDERERS[cfg.format](d)


def cmd_oracle_check(cfg: RunConfig) -> tuple[int, str]:
    """Compare the dense-set calculus with the Weyl-line oracle on random sequences."""
    rng = np.random.default_rng(cfg.seed if cfg.seed is not None else 0)
    n = cfg.rank
    mismatches = []
    for _ in range(cfg.samples):
        k = int(rng.integers(1, 2 * n + 1))
        seq = tuple(int(x) for x in rng.integers(1, n + 1, size=k))
        dense = dense_of_sequence(seq)
        via_lines = reflections_of(sequence_variety(seq, n))
        if set(dense) != via_lines:
            mismatches.append({"word": list(seq), "dense": _pairs(dense), "oracle": _pairs(via_lines)})
    status = EXIT_FAILURE if mismatches else EXIT_OK
    if cfg.format == "json":
        out = {"n": n, "seed": cfg.seed, "samples": cfg.samples, "mismatches": mismatches}
        return status, json.dumps(out) + "\n"
    lines = [f"n={n}: {cfg.samples} random sequences, {len(mismatches)} mismatches"]
    lines += ["  mismatch: " + json.dumps(m) for m in mismatches]
    return status, "\n".join(lines) + "\n"


HANDLERS = {
    "fc-list": cmd_fc_list,
    "dense": cmd_dense,
    "verify": cmd_verify,
    "table": cmd_table,
    "decompose": cmd_decompose,
    "render": cmd_render,
    "oracle-check": cmd_oracle_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tlweyl",
        description="Temperley-Lieb diagrams, dense reflection sets and Weyl-line varieties in type A.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--rank", "-n", type=int, required=True, help="rank n of the type A_n group")
    parser.add_argument("--word", "-w", type=parse_word, help="comma-separated simple indices, e.g. 2,1,3")
    parser.add_argument("--format", "-f", choices=FORMATS, default="text")
    parser.add_argument("--seed", type=int, help="seed for randomized sweeps")
    parser.add_argument("--samples", type=int, default=DEFAULT_SAMPLES, help="sample count for oracle-check")
    parser.add_argument("--oracle", action="store_true", help="also run the Weyl-line oracle")
    parser.add_argument("--out", "-o", help="write output to this file instead of standard output")
    return parser


def run(cfg: RunConfig) -> tuple[int, str]:
    return HANDLERS[cfg.command](cfg)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        cfg = RunConfig(
            command=args.command,
            rank=args.rank,
            word=args.word,
            format=args.format,
            seed=args.seed,
            oracle=args.oracle,
            samples=args.samples,
        )
        status, text = run(cfg)
    except CapacityError as exc:
        print(f"tlweyl: capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except TLWeylError as exc:
        print(f"tlweyl: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
