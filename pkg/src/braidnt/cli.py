"""Command-line front end.

    braidnt nf "s1 s2 S1"
    braidnt type "n=4 s1 s2 s3 s2 s2 s1 s3 s3 s1 s3 s2 s1 s1" --trace
    braidnt conj "s1" "s3"
    braidnt sss3 "s1 s2 s1 s1"
    braidnt curve-act "n=4 coords=[0,0,0,1] enclosed=3" "s2 s2"
    braidnt complexity "n=4 coords=[1,1,-1,0] enclosed=3"
    braidnt blowup "s1 s1" 1

Words may also come from a file (``--file``): one per line, ``#`` starts a
comment.  Exit status: 0 ok, 2 unparsable input, 3 violated precondition.
"""

from __future__ import annotations

import argparse
import json
import sys

from .conjugacy import conjugate_nonpa
from .curves import Curve, act_letters, complexity_upto, format_curve, parse_curve
from .garside import NormalForm, normal_form
from .reducibility import blow_up, nt_type
from .summit import b3_sss_enumerate, sss_representative
from .words import BraidError, BraidWord, format_word, parse_word

EXIT_PARSE = 2
EXIT_PRECONDITION = 3


class ParseError(Exception):
    pass


def _word(text: str, n: int | None, default_n: int) -> BraidWord:
    try:
        w = parse_word(text, n)
    except BraidError as exc:
        raise ParseError(str(exc)) from exc
    if n is None and not text.strip().startswith("n") and w.n < default_n:
        w = BraidWord(default_n, w.letters)
    return w


def _curve(text: str) -> Curve:
    try:
        return parse_curve(text)
    except BraidError as exc:
        raise ParseError(str(exc)) from exc


def read_fixture(path: str) -> list[str]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                out.append(line)
    return out


def _nf_dict(x: NormalForm) -> dict:
    return {"n": x.n, "p": x.p, "factors": [str(f) for f in x.factors], "word": format_word(x.word())}


def _nf_text(x: NormalForm) -> str:
    return f"p={x.p}, factors=[{', '.join(str(f) for f in x.factors)}]"


# -- verbs ---------------------------------------------------------------------------


def cmd_nf(args, words):
    out = []
    for w in words:
        x = normal_form(w)
        out.append((_nf_dict(x), _nf_text(x)))
    return out


def cmd_type(args, words):
    out = []
    for w in words:
        r = nt_type(w)
        d = {"word": format_word(w), "tag": r.tag, "power": r.power}
        lines = [r.tag]
        if r.periodic:
            d["periodic"] = {"base": r.periodic.base, "exponent": r.periodic.exponent}
            lines[0] += f" {r.periodic.base}^{r.periodic.exponent}"
        if r.witness:
            wt = r.witness
            via = wt.via if wt.j is None else f"{wt.via}({wt.j})"
            d["witness"] = {
                "via": via,
                "conjugator": format_word(wt.conjugator),
                "curve": format_curve(wt.curve),
                "braid": format_word(wt.braid),
                "verified": wt.verify(),
            }
            lines.append(f"via {via}")
            lines.append(f"conjugator {format_word(wt.conjugator)}")
            lines.append(f"curve {format_curve(wt.curve)}")
        if args.trace:
            _, _, trace = sss_representative(w ** r.power)
            d["trace"] = trace.lines()
            lines.extend(trace.lines())
        out.append((d, "\n".join(lines)))
    return out


def cmd_conj(args, words):
    if len(words) != 2:
        raise ParseError("conj needs exactly two words")
    a, b = words
    ans = conjugate_nonpa(a, b)
    d = {"tag": ans.tag}
    lines = [ans.tag]
    if ans.witness is not None:
        d["witness"] = format_word(ans.witness)
        lines.append(f"witness {format_word(ans.witness)}")
    if ans.obstruction:
        d["obstruction"] = ans.obstruction
        lines.append(f"obstruction {ans.obstruction}")
    return [(d, "\n".join(lines))]


def cmd_sss3(args, words):
    out = []
    for w in words:
        if w.n != 3:
            raise BraidError("sss3 needs 3-braids")
        sset = b3_sss_enumerate(w)
        elems = sorted(sset, key=lambda x: (x.p, [f.perm for f in x.factors]))
        d = {"word": format_word(w), "size": len(elems), "elements": [_nf_dict(x) for x in elems]}
        text = "\n".join([f"|SSS|={len(elems)}"] + [str(x) for x in elems])
        out.append((d, text))
    return out


def cmd_curve_act(args, curve, words):
    out = []
    for w in words:
        if w.n != curve.n:
            raise BraidError(f"curve on D_{curve.n} but braid on {w.n} strands")
        steps = [curve]
        for x in w.letters:
            steps.append(act_letters(steps[-1], (x,)))
        d = {"curve": format_curve(steps[-1])}
        lines = [format_curve(steps[-1])]
        if args.trace:
            d["trace"] = [format_curve(c) for c in steps]
            lines = [format_curve(c) for c in steps]
        out.append((d, "\n".join(lines)))
    return out


def cmd_complexity(args, curve):
    k = complexity_upto(curve, args.bound)
    value = k if k is not None else f">{args.bound}"
    return [({"curve": format_curve(curve), "complexity": k, "bound": args.bound}, f"complexity {value}")]


def cmd_blowup(args, words):
    out = []
    for w in words:
        b = blow_up(w, args.j)
        out.append(({"word": format_word(w), "j": args.j, "blown": format_word(b)}, format_word(b)))
    return out


# -- driver --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="braidnt", description="Garside normal forms and Nielsen-Thurston type of braids.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--trace", action="store_true", help="show intermediate steps")
    common.add_argument("-n", "--strands", type=int, default=None, help="strand count for words without a header")
    common.add_argument("--file", help="read words from a fixture file")
    sub = p.add_subparsers(dest="verb", required=True)
    for verb in ("nf", "type", "conj", "sss3"):
        s = sub.add_parser(verb, parents=[common])
        s.add_argument("words", nargs="*")
    s = sub.add_parser("curve-act", parents=[common])
    s.add_argument("curve")
    s.add_argument("words", nargs="*")
    s = sub.add_parser("complexity", parents=[common])
    s.add_argument("curve")
    s.add_argument("--bound", type=int, default=3)
    s = sub.add_parser("blowup", parents=[common])
    s.add_argument("words", nargs=1)
    s.add_argument("j", type=int)
    return p


def _emit(results, as_json: bool, out) -> None:
    if as_json:
        payload = [d for d, _ in results]
        json.dump(payload[0] if len(payload) == 1 else payload, out, indent=2)
        out.write("\n")
    else:
        for _, text in results:
            out.write(text + "\n")


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else 0
    default_n = 3 if args.verb == "sss3" else 4
    try:
        curve = _curve(args.curve) if hasattr(args, "curve") else None
        if curve is not None:
            default_n = curve.n
        texts = list(getattr(args, "words", []) or [])
        if args.file:
            texts += read_fixture(args.file)
        words = [_word(t, args.strands, default_n) for t in texts]
        if args.verb == "nf":
            results = cmd_nf(args, words)
        elif args.verb == "type":
            results = cmd_type(args, words)
        elif args.verb == "conj":
            results = cmd_conj(args, words)
        elif args.verb == "sss3":
            results = cmd_sss3(args, words)
        elif args.verb == "curve-act":
            results = cmd_curve_act(args, curve, words)
        elif args.verb == "complexity":
            results = cmd_complexity(args, curve)
        else:
            results = cmd_blowup(args, words)
    except (ParseError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    except BraidError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PRECONDITION
    _emit(results, args.json, out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
