#!/usr/bin/env python3
"""End-to-end checks of the riffle command line. Usage: check_cli.py BINARY [CASE]"""

import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1]


def run(*args, env=None):
    e = dict(os.environ)
    e.pop("RIFFLE_PRECISION", None)
    if env:
        e.update(env)
    p = subprocess.run([BIN, *args], capture_output=True, text=True, env=e, timeout=600)
    return p.returncode, p.stdout, p.stderr


def expect(cond, msg):
    if not cond:
        raise AssertionError(msg)


def case_gen_poly():
    code, out, _ = run("gen", "--n", "4", "--tier", "slow", "--format", "poly")
    expect(code == 0 and out == "4 + 4q + 3q^2 + 5q^4\n", out)


def case_gen_fastest_120():
    code, out, _ = run("gen", "--n", "120", "--tier", "fastest")
    expect(code == 0, "exit %d" % code)
    doc = json.loads(out)
    expect(sum(int(r["count"]) for r in doc["result"]["rows"]) == 2**120, "coefficient sum")
    expect(doc["result"]["outcomes"] == str(2**120), "outcomes")
    expect(doc["metadata"]["tier"] == "fastest", "tier")


def case_gen_slow_guard():
    code, out, err = run("gen", "--n", "16", "--tier", "slow")
    expect(code == 2, "exit %d" % code)
    expect(out == "", "no payload on error")
    expect(json.loads(err)["error"]["kind"] == "guard", err)


def case_gen_small_fastest_reports_fast():
    code, out, _ = run("gen", "--n", "3", "--tier", "fastest")
    doc = json.loads(out)
    expect(code == 0 and doc["metadata"]["tier"] == "fast", out)
    expect(doc["metadata"]["parameters"]["tier"] == "fastest", out)


def case_csv():
    code, out, _ = run("gen", "--n", "4", "--tier", "slow", "--format", "csv")
    want = "guesses,count,probability\n0,4,1/4\n1,4,1/4\n2,3,3/16\n3,0,0\n4,5,5/16\n"
    expect(code == 0 and out == want, out)
    expect(run("gen", "--n", "4", "--tier", "slow", "--format", "csv")[1] == out, "byte-reproducible")


def case_json_round_trip():
    for args in (["gen", "--n", "9"], ["moments", "--n", "30", "--r", "4", "--central", "--standardized", "--format", "json"],
                 ["kshuffle", "--n", "12", "--c", "3", "--format", "json"], ["verify", "--suite", "tiers", "--format", "json"]):
        code, out, _ = run(*args)
        expect(code == 0, "exit %d for %s" % (code, args))
        expect(json.dumps(json.loads(out), indent=2, sort_keys=True, ensure_ascii=False) + "\n" == out, "round trip %s" % args)


def case_moments():
    expect(run("moments", "--n", "4", "--r", "2")[1] == "raw: [1, 15/8, 6]\n", "n = 4")
    expect(run("moments", "--n", "1", "--r", "3")[1] == "raw: [1, 1, 1, 1]\n", "n = 1")
    code, out, _ = run("moments", "--n", "200", "--r", "5", "--central", "--format", "json")
    doc = json.loads(out)
    expect(code == 0 and doc["result"]["central"][1] == "0", "central[1]")
    expect(len(doc["result"]["central"]) == 6, "orders 0..5")


def case_moments_precision_env():
    code, out, _ = run("moments", "--n", "40", "--r", "3", "--standardized", "--format", "json", env={"RIFFLE_PRECISION": "12"})
    doc = json.loads(out)
    expect(code == 0 and all(d["precision"] == 12 for d in doc["result"]["standardized"]), out)
    code, _, err = run("moments", "--n", "40", "--r", "3", env={"RIFFLE_PRECISION": "zero"})
    expect(code == 2 and json.loads(err)["error"]["kind"] == "validation", err)


def case_closed_form():
    code, out, _ = run("closed-form", "--r", "1", "--alpha", "0")
    expect(code == 0 and out.splitlines()[0] == "(4L+1)B - 1 + 6/2^n", out)
    expect(out.splitlines()[1].endswith("pass"), out)
    expect(run("closed-form", "--r", "0")[1] == "1\n", "r = 0")
    code, _, _ = run("closed-form", "--r", "2", "--alpha", "3")
    expect(code == 2, "bad alpha")


def case_interpolate():
    code, out, _ = run("interpolate", "--r", "3", "--parity", "odd")
    expect(code == 0 and out.splitlines()[0] == "P(L) = 4L^2 + 9L + 3, Q(L) = -9/2 L - 13/4", out)
    expect("held out" in out and out.rstrip().endswith("pass"), out)


def case_kshuffle():
    expect(run("kshuffle", "--n", "4", "--c", "2", "--mode", "exact")[1] == "15/8\n", "exact")
    expect(run("kshuffle", "--n", "4", "--k", "1")[1] == "15/8\n", "k = 1")
    code, out, _ = run("kshuffle", "--n", "10000", "--c", "4", "--mode", "leading", "--precision", "30")
    expect(code == 0 and out.startswith("65.14700158705598954485128304"), out)
    code, _, _ = run("kshuffle", "--n", "10", "--c", "2", "--k", "1")
    expect(code == 2, "both --k and --c")
    code, _, _ = run("kshuffle", "--n", "10", "--c", "1", "--mode", "leading")
    expect(code == 2, "C = 1 leading")


def case_simulate_deterministic():
    a = run("kshuffle", "--n", "64", "--k", "2", "--mode", "simulate", "--trials", "2000", "--seed", "9")
    b = run("kshuffle", "--n", "64", "--k", "2", "--mode", "simulate", "--trials", "2000", "--seed", "9")
    expect(a[0] == 0 and a[1] == b[1], "same seed, same output")


def case_verify():
    code, out, _ = run("verify", "--suite", "tiers")
    expect(code == 0 and "PASS slow = fastest (n = 6..14)" in out, out)
    code, _, err = run("verify", "--suite", "bogus")
    expect(code == 2, err)


def case_output_file():
    with tempfile.TemporaryDirectory() as d:
        path = os.path.join(d, "f4.csv")
        code, out, _ = run("--output", path, "gen", "--n", "4", "--tier", "slow", "--format", "csv")
        expect(code == 0 and out == "", "stdout stays empty")
        with open(path) as f:
            expect(f.read().startswith("guesses,count,probability\n0,4,1/4"), "file content")
        expect(os.listdir(d) == ["f4.csv"], "no temporary left behind")


def case_usage_error():
    code, _, err = run("gen")
    expect(code == 2 and json.loads(err)["error"]["kind"] == "usage", err)


CASES = {name[5:]: fn for name, fn in globals().items() if name.startswith("case_")}


def main():
    names = sys.argv[2:] or sorted(CASES)
    failed = 0
    for name in names:
        try:
            CASES[name]()
            print("PASS", name)
        except AssertionError as e:
            failed += 1
            print("FAIL", name, "-", e)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
