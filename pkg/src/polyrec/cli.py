"""polyrec command line.  Exit codes: 0 ok, 1 decode failure, 2 usage or input error."""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from . import equivalence as eq
from . import full_codes as fc
from . import lyndon_rll as ly
from . import oracle
from . import ps_codes as ps
from . import word_families as wf
from .reed_solomon import OuterCodeSpec
from .strings_core import (
    CompositionMultiset,
    check_bits,
    full_multiset,
    prefix_suffix_multiset,
)


class UsageError(Exception):
    pass


def _bits(text, n=None):
    s = text.strip()
    try:
        check_bits(s)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if n is not None and len(s) != n:
        raise UsageError(f"expected {n} bits, got {len(s)}")
    return s


def _read_source(arg):
    if arg in (None, "-"):
        return sys.stdin.read()
    with open(arg) as fh:
        return fh.read()


def _load_multiset(arg):
    try:
        return CompositionMultiset.from_json(_read_source(arg))
    except (ValueError, KeyError) as exc:
        raise UsageError(f"bad multiset file: {exc}") from exc


def _outer(text):
    return OuterCodeSpec.parse(text) if text else None


def _qary_out(w, q):
    return "".join(map(str, w)) if q <= 10 else ly.format_qary(w)


# subcommands; each returns (text lines, json payload)

def cmd_class(a):
    s = _bits(a.string)
    dec = eq.decompose(s)
    members = sorted(eq.equivalence_class(s))
    return members, {"string": s, "j": list(dec.j), "I": sorted(dec.I), "class": members}


def cmd_unique(a):
    s = _bits(a.string)
    ok = eq.is_uniquely_reconstructible_up_to_reversal(s)
    return ["yes" if ok else "no"], {"string": s, "unique": ok, "class_size": eq.class_size(s)}


FAMILIES = {
    "sr": (wf.enumerate_SR, wf.count_SR),
    "a": (wf.enumerate_A, wf.count_A),
    "d": (wf.enumerate_D, wf.count_D),
    "u": (wf.enumerate_U, wf.count_U),
    "uprime": (wf.enumerate_Uprime, wf.count_Uprime),
    "cb": (wf.enumerate_catalan_bertrand, wf.count_catalan_bertrand),
    "dyck": (wf.enumerate_dyck, lambda n: wf.catalan(n // 2)),
    "e1": (lambda n: list(ps.enumerate_E1(n)), ps.count_E1),
    "cmax": (lambda n: list(ps.build_Cmax(n)), None),
}


def cmd_family(a):
    enum, count = FAMILIES[a.name]
    if a.count_only and count is not None and not a.enumerate:
        c = count(a.n)
        return [str(c)], {"family": a.name, "n": a.n, "count": c}
    members = enum(a.n)
    if a.count_only:
        return [str(len(members))], {"family": a.name, "n": a.n, "count": len(members)}
    return members, {"family": a.name, "n": a.n, "members": members}


def cmd_count(a):
    n, t = a.n, a.t
    table = {
        "sr": lambda: wf.count_SR(n),
        "a": lambda: wf.count_A(n),
        "u": lambda: wf.count_U(n),
        "uprime": lambda: wf.count_Uprime(n),
        "e1": lambda: ps.count_E1(n),
        "classes": lambda: oracle.oracle_class_count(n),
        "max-class": lambda: eq.max_class_size(n),
        "srt": lambda: fc.count_SRt(n, t),
        "st": lambda: fc.count_St(n, t),
        "cat": lambda: fc.count_CAt(n, t),
        "witt": lambda: ly.witt_count(a.r, a.q),
    }
    c = table[a.what]()
    return [str(c)], {"what": a.what, "n": n, "t": t, "count": c}


def cmd_encode(a):
    s = _bits(_read_source(a.input), a.n)
    outer = _outer(a.outer)
    if not ps.is_dominant(s):
        raise UsageError("message is not an E1 codeword")
    if a.code == "e1":
        c = s
    elif a.code == "e2":
        c = ps.encode_E2(s, a.t, outer, conservative=not a.lean)
    else:
        c = ps.encode_E3(s, a.e1, a.e2, a.t, outer)
    if a.multiset:
        M = prefix_suffix_multiset(c)
        return [M.dumps()], M.to_json()
    return [c], {"code": a.code, "message": s, "codeword": c}


def cmd_decode(a):
    M = _load_multiset(a.file)
    outer = _outer(a.outer)
    if a.code == "e1":
        s = ps.decode_E1(M)
    elif a.code == "e2":
        s = ps.decode_E2(M, a.t, outer, conservative=not a.lean)
    else:
        s = ps.decode_E3(M, a.e1, a.e2, a.t, outer)
    return [s], {"code": a.code, "decoded": s}


def cmd_channel(a, rng):
    c = _bits(a.word if a.word else _read_source(None))
    if a.model == "missing":
        drops = ps.random_missing(len(c), a.t, rng)
        M = ps.channel_missing(prefix_suffix_multiset(c), drops, c)
        errors = [list(d) for d in drops]
    elif a.model == "massred":
        spec = ps.random_mass_spec(c, a.e1, a.e2, a.t, rng)
        M = ps.channel_mass_reduce(prefix_suffix_multiset(c), spec, c, a.t)
        errors = [[e.side, e.length, e.drop] for e in spec]
    else:
        M = fc.channel_delete(full_multiset(c), a.t1, a.t2, True, rng)
        errors = None
    out = M.to_json()
    if a.json and errors is not None:
        return [M.dumps()], {"multiset": out, "errors": errors}
    return [M.dumps()], out


def cmd_fullcode(a, rng):
    n, t = a.n, a.t
    if a.action == "enumerate":
        members = list(fc.build_CAt(n, t))
        return members, {"n": n, "t": t, "members": members}
    if a.action == "count":
        c = fc.count_CAt(n, t)
        return [str(c)], {"n": n, "t": t, "count": c}
    if a.action == "channel":
        s = _bits(a.arg or _read_source(None), n)
        M = fc.channel_delete(full_multiset(s), a.t1, a.t2, True, rng)
        return [M.dumps()], M.to_json()
    M = _load_multiset(a.arg)
    s = fc.backtrack_decode(M, n, t)
    return [s], {"n": n, "t": t, "decoded": s}


def cmd_rll(a):
    q, r = a.q, a.r
    if a.action == "list":
        words = [_qary_out(w, q) for w in ly.build_Cr(r, q)] if a.n is None else \
            [_qary_out(w, q) for w in ly.build_Cr_n(r, q, a.n)]
        return words, {"q": q, "r": r, "codewords": words}
    if a.action == "next":
        w = ly.next_lyndon(ly.parse_qary(a.arg, q), r, q)
        out = "none" if w is None else _qary_out(w, q)
        return [out], {"q": q, "r": r, "next": None if w is None else list(w)}
    if a.action == "encode":
        c = ly.encode_Cr(ly.parse_qary(a.arg or _read_source(None), q), r, q, a.n)
        if a.multiset:
            M = ly.qary_window_multiset(c, r, q)
            return [M.dumps()], M.to_json()
        return [_qary_out(c, q)], {"q": q, "r": r, "codeword": list(c)}
    if a.action == "decode":
        s = ly.rll_decode(_load_multiset(a.arg), r, q, a.n)
        return [_qary_out(s, q)], {"q": q, "r": r, "decoded": list(s)}
    rep = ly.rate_report(r, q)
    lines = [f"size {rep.size}", f"log_q size {rep.log_q_size:.6f}",
             f"average length {rep.avg_length:.6f}", f"rate {rep.rate:.6f}"]
    return lines, rep.__dict__


def cmd_oracle(a):
    part = (oracle.partition_by_ps_multiset if a.kind == "ps" else oracle.partition_by_full_multiset)(a.n)
    payload = {"n": a.n, "kind": a.kind, "classes": [list(c) for c in part.classes]}
    if a.emit:
        with open(a.emit, "w") as fh:
            json.dump(payload, fh, sort_keys=True)
    sizes = part.sizes()
    lines = [f"classes {len(sizes)}", f"max class {max(sizes)}"]
    summary = {"n": a.n, "kind": a.kind, "classes": len(sizes), "max_class": max(sizes)}
    return lines, summary


def build_parser():
    p = argparse.ArgumentParser(prog="polyrec", allow_abbrev=False,
                                description="String reconstruction from composition multisets.")
    p.add_argument("--json", action="store_true", help="machine-readable report on stdout")
    p.add_argument("--seed", type=int, default=0, help="64-bit seed for every random choice")
    p.add_argument("--threads", type=int, default=1, help="worker bound (all commands are sequential today)")
    p.add_argument("--timing", action="store_true", help="print wall time to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("class", help="equivalence class of a binary string")
    c.add_argument("string")

    c = sub.add_parser("unique", help="is the string reconstructible up to reversal")
    c.add_argument("string")

    c = sub.add_parser("family", help="enumerate or count a string family")
    c.add_argument("name", choices=sorted(FAMILIES))
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--count-only", action="store_true")
    c.add_argument("--enumerate", action="store_true", help="count by enumeration, not by formula")

    c = sub.add_parser("count", help="closed-form counts")
    c.add_argument("what", choices=["sr", "a", "u", "uprime", "e1", "classes", "max-class",
                                    "srt", "st", "cat", "witt"])
    c.add_argument("--n", type=int)
    c.add_argument("--t", type=int, default=2)
    c.add_argument("--q", type=int, default=2)
    c.add_argument("--r", type=int, default=2)

    for name in ("encode", "decode"):
        c = sub.add_parser(name, help=f"{name} with E1, E2 or E3")
        c.add_argument("--code", choices=["e1", "e2", "e3"], required=True)
        c.add_argument("--t", type=int, default=1)
        c.add_argument("--e1", type=int, default=1)
        c.add_argument("--e2", type=int, default=1)
        c.add_argument("--outer", help="rs:s,m,k")
        c.add_argument("--lean", action="store_true", help="E2 with distance 2t+1 instead of 4t+1")
        if name == "encode":
            c.add_argument("--n", type=int)
            c.add_argument("--input", default="-", help="bits file, default stdin")
            c.add_argument("--multiset", action="store_true", help="emit M(c) as JSON")
        else:
            c.add_argument("file", nargs="?", default="-")

    c = sub.add_parser("channel", help="corrupt the multiset of a codeword")
    c.add_argument("--model", choices=["missing", "massred", "delete"], required=True)
    c.add_argument("--word", help="codeword bits, default stdin")
    c.add_argument("--t", type=int, default=1)
    c.add_argument("--e1", type=int, default=1)
    c.add_argument("--e2", type=int, default=1)
    c.add_argument("--t1", type=int, default=2)
    c.add_argument("--t2", type=int, default=2)

    c = sub.add_parser("fullcode", help="C_A^(t) codes over the full multiset")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--t", type=int, default=2)
    c.add_argument("--t1", type=int, default=2)
    c.add_argument("--t2", type=int, default=2)
    c.add_argument("action", choices=["enumerate", "count", "decode", "channel"])
    c.add_argument("arg", nargs="?")

    c = sub.add_parser("rll", help="length-limited q-ary codes")
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--n", type=int, help="padded length")
    c.add_argument("--multiset", action="store_true")
    c.add_argument("action", choices=["list", "encode", "decode", "rate", "next"])
    c.add_argument("arg", nargs="?")

    c = sub.add_parser("oracle", help="brute-force class partition")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--kind", choices=["ps", "full"], default="ps")
    c.add_argument("--emit", help="write classes as JSON")
    return p


def run(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    a = parser.parse_args(argv)
    rng = random.Random(a.seed)
    handlers = {
        "class": cmd_class, "unique": cmd_unique, "family": cmd_family, "count": cmd_count,
        "encode": cmd_encode, "decode": cmd_decode, "oracle": cmd_oracle, "rll": cmd_rll,
        "channel": lambda x: cmd_channel(x, rng), "fullcode": lambda x: cmd_fullcode(x, rng),
    }
    start = time.perf_counter()
    try:
        lines, payload = handlers[a.command](a)
    except (ps.DecodeFailure, fc.FullDecodeFailure, ly.NotACodeword) as exc:
        print(f"decode failure: {exc}", file=sys.stderr)
        return 1
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if a.json:
        params = {k: v for k, v in vars(a).items() if k not in ("json", "command", "timing")}
        report = {"command": a.command, "params": params, "outputs": payload}
        print(json.dumps(report, sort_keys=True), file=out)
    else:
        for line in lines:
            print(line, file=out)
    if a.timing:
        # wall time stays off stdout so seeded runs remain byte-identical
        print(f"{a.command}: {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
