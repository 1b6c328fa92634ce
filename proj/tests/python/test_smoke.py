import json
import os
import subprocess

import pytest

import pickylab


def test_groups():
    s4 = pickylab.group("S:4")
    assert s4.order == 24
    assert s4.degree == 4
    assert s4.contains("(1,2,3,4)")
    assert not pickylab.group("A:4").contains("(1,2)")
    sl = pickylab.group_from_generators("(1,4,7)(2,8,5)\n(1,6,2,3)(4,7,8,5)\n")
    assert sl.order == 24


def test_bad_input_raises():
    with pytest.raises(ValueError):
        pickylab.group("X:3")
    with pytest.raises(ValueError):
        pickylab.picky(pickylab.group("S:4"), 2, "(1,2")
    with pytest.raises(RuntimeError):
        pickylab.character_table(pickylab.group("S:9"))


def test_character_table_and_blocks():
    t = pickylab.character_table(pickylab.group("S:4"))
    assert t["degrees"] == [1, 1, 2, 3, 3]
    assert sum(d * d for d in t["degrees"]) == 24
    b = pickylab.blocks(pickylab.group("S:3"), 2)
    assert len(b["blocks"]) == 2


def test_sylow_and_picky():
    s4 = pickylab.group("S:4")
    s = pickylab.sylow(s4, 2)
    assert s["count"] == 3
    assert pickylab.picky(s4, 2, "(1,2,3,4)")["is_picky"]
    assert not pickylab.picky(s4, 2, "(1,2)(3,4)")["is_picky"]


def test_subnormalizer():
    s4 = pickylab.group("S:4")
    assert pickylab.subnormalizer(s4, "(1,2,3,4)").order == 8
    assert pickylab.subnormalizer(s4, "(1,2)(3,4)").order == 24
    v4 = pickylab.group_from_generators("(1,2)(3,4)\n(1,3)(2,4)\n")
    assert pickylab.is_subnormal(v4, s4)


def test_checks():
    s4 = pickylab.group("S:4")
    r = pickylab.check(s4, "picky_conjecture", 2, variant="strong")
    assert r["status"] == "holds"
    reports = pickylab.check_all(s4, 2, label="S4")
    assert {r["status"] for r in reports} <= {"holds", "skipped"}
    assert "mckay" in pickylab.check_names()


def test_symmetric_group_characters():
    assert pickylab.mn_value([15, 1], [8] + [1] * 8) == 7
    assert pickylab.mn_value([1] * 16, [8] + [1] * 8) == -1
    assert pickylab.partition_degree([15, 1]) == 15
    t = pickylab.table1()
    assert t["verdict"] == "equal"


def test_cli_in_process():
    code, out, err = pickylab.run_cli("check", "all", "S:4", "-p", 2)
    assert code == 0
    assert all(r["status"] == "holds" for r in json.loads(out))
    code, _, err = pickylab.run_cli("table", "X:2")
    assert code == 2 and "unknown group" in err


@pytest.mark.skipif("PICKYLAB_CLI" not in os.environ, reason="command line binary not provided")
def test_cli_binary():
    proc = subprocess.run([os.environ["PICKYLAB_CLI"], "table1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] == "equal"
