"""Smoke checks for the python module and the command-line tool."""

import os
import subprocess
import sys

import apdestroy as apd


def main():
    # prime construction and certificate round trip
    f11 = apd.prime_destroyer(11)
    assert f11 == [0, 7, 4, 8, 5, 10, 3, 2, 9, 6, 1]
    assert apd.find_xi(11) == 7
    cert = apd.check_pattern(f11, 0, 0)
    assert cert["verdict"] == "pass" and cert["counterexample"] is None

    # identity admits an AP, with the smallest counterexample reported
    bad = apd.check_pattern(list(range(5)), 0, 0)
    assert bad["verdict"] == "fail"
    assert bad["counterexample"] == {"a": 0, "b": 1, "c": 2, "eta1": 0, "eta2": 0}

    # composition lines up with the component congruences
    rows = apd.table_entries()
    assert [r["n"] for r in rows[:2]] == [9, 11]
    master = apd.compose([rows[0]["perm"], rows[1]["perm"]])
    assert len(master) == 99 and master[50] == 60
    assert master[0] == 0

    # search finds and certifies a witness; tiny moduli are refuted
    res = apd.search_perm(4, [(0, 0)])
    assert res["status"] == "found" and res["witness"] == [0, 1, 3, 2]
    assert apd.search_perm(5, [(0, 0)])["status"] == "none"
    assert apd.exhaust_count(6, [(0, 0)]) == 72

    # integer destroyers and their verifier
    seq = apd.int_ap_destroyer(8)
    assert seq == [0, 4, 2, 6, 1, 5, 3, 7]
    ok, _ = apd.verify_int(seq)
    assert ok
    ok, triple = apd.verify_int([0, 1, 2])
    assert not ok and triple == (0, 1, 2)

    # catalog constants arrive as exact integers
    consts = apd.constants()
    assert consts["sqrt_n0"] == 11767536
    assert consts["n0"] == 11767536**2 == 138474903511296
    assert consts["r"] == 516507417374332784400

    # deterministic statistics
    a = apd.survivor_stats(60, 50, seed=9)
    b = apd.survivor_stats(60, 50, seed=9)
    assert a["mean"] == b["mean"] and a["variance"] == b["variance"]

    # transforms preserve and transport verdicts
    doubled = apd.scale_output(f11, 2)
    assert apd.check_pattern(doubled, 0, 0)["verdict"] == "pass"
    assert apd.perm_inverse([0, 2, 1]) == [0, 2, 1]

    # command-line round trip when the driver location is exported
    cli = os.environ.get("APDESTROY_CLI")
    if cli:
        out = subprocess.run([cli, "prime", "--p", "11"], capture_output=True, text=True)
        assert out.returncode == 0, out.stderr
        assert out.stdout.startswith("n=11\n0 7 4 8 5 10 3 2 9 6 1\n")
        bad = subprocess.run([cli, "search", "--n", "5", "--patterns", "0:0"],
                             capture_output=True, text=True)
        assert bad.returncode == 1
        usage = subprocess.run([cli, "frobnicate"], capture_output=True, text=True)
        assert usage.returncode == 2

    print("smoke ok")


if __name__ == "__main__":
    sys.exit(main())
