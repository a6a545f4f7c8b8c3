import listcolor as lc
from listcolor import io as lio
from listcolor.cli import main

TRIANGLE = "p edge 3 3\ne 0 1\ne 1 2\ne 0 2\n"
PATH2 = "p edge 3 2\ne 0 1 1 2\ne 1 2 1 2\n"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_color_and_verify_roundtrip(tmp_path, capsys):
    inst = write(tmp_path, "tri.txt", TRIANGLE)
    colf = str(tmp_path / "col.txt")
    code, out, err = run(capsys, "color", inst, "--mode", "shannon", "-o", colf)
    assert code == 0
    code, out, err = run(capsys, "verify", inst, colf, "--mode", "shannon")
    assert code == 0
    assert "ok" in out


def test_verify_rejects_clash(tmp_path, capsys):
    inst = write(tmp_path, "tri.txt", TRIANGLE)
    colf = str(tmp_path / "col.txt")
    code, _, _ = run(capsys, "color", inst, "--mode", "vizing", "-o", colf)
    assert code == 0
    colors = lio.parse_coloring(open(colf).read(), 3)
    colors[1] = colors[0]  # edges 0 and 1 share vertex 1
    bad = write(tmp_path, "bad.txt", lio.write_coloring(colors))
    code, out, err = run(capsys, "verify", inst, bad, "--mode", "vizing")
    assert code == 1
    assert "ImproperAssignment" in err


def test_verify_rejects_incomplete(tmp_path, capsys):
    inst = write(tmp_path, "tri.txt", TRIANGLE)
    bad = write(tmp_path, "partial.txt", "0 1\n1 -\n2 2\n")
    code, out, err = run(capsys, "verify", inst, bad, "--mode", "vizing")
    assert code == 1
    assert "incomplete" in err


def test_explicit_mode_flow(tmp_path, capsys):
    inst = write(tmp_path, "p.txt", PATH2)
    code, out, err = run(
        capsys, "color", inst, "--mode", "explicit", "--assume-bound", "koenig"
    )
    assert code == 0
    colors = lio.parse_coloring(out, 2)
    assert None not in colors


def test_explicit_needs_assume_bound(tmp_path, capsys):
    inst = write(tmp_path, "p.txt", PATH2)
    code, _, err = run(capsys, "color", inst, "--mode", "explicit")
    assert code == 2


def test_bound_mode_rejects_explicit_instance(tmp_path, capsys):
    inst = write(tmp_path, "p.txt", PATH2)
    code, _, err = run(capsys, "color", inst, "--mode", "vizing")
    assert code == 2


def test_koenig_on_triangle_exits_one(tmp_path, capsys):
    inst = write(tmp_path, "tri.txt", TRIANGLE)
    code, _, err = run(capsys, "color", inst, "--mode", "koenig")
    assert code == 1


def test_parse_error_exits_two(tmp_path, capsys):
    inst = write(tmp_path, "bad.txt", "garbage\n")
    code, _, err = run(capsys, "color", inst, "--mode", "vizing")
    assert code == 2


def test_insufficient_explicit_lists_exit_one(tmp_path, capsys):
    inst = write(tmp_path, "weak.txt", "p edge 2 1\ne 0 1 1\n")
    code, _, err = run(
        capsys, "color", inst, "--mode", "explicit", "--assume-bound", "vizing"
    )
    assert code == 1


def test_oracle_agrees_with_color(tmp_path, capsys):
    inst = write(tmp_path, "tri.txt", TRIANGLE)
    code, out, _ = run(capsys, "oracle", inst, "--mode", "shannon")
    assert code == 0
    colors = lio.parse_coloring(out, 3)
    g, _ = lio.parse_instance(TRIANGLE)
    L = lc.generate_from_bounds(g, "shannon")
    assert not lc.check_edge_colors(g, L, colors)


def test_oracle_reports_infeasible(tmp_path, capsys):
    inst = write(
        tmp_path, "tight.txt",
        "p edge 3 3\ne 0 1 1 2\ne 1 2 1 2\ne 0 2 1 2\n",
    )
    code, out, _ = run(capsys, "oracle", inst)
    assert code == 0
    assert "no coloring" in out


def test_gen_writes_parseable_instance(tmp_path, capsys):
    out_path = str(tmp_path / "gen.txt")
    code, _, _ = run(
        capsys, "gen", "-n", "8", "--max-degree", "4", "--max-multiplicity", "2",
        "--seed", "5", "--edges", "10", "-o", out_path,
    )
    assert code == 0
    g, L = lio.parse_instance(open(out_path).read())
    assert g.n == 8 and L is None


def test_gen_with_lists_then_color(tmp_path, capsys):
    out_path = str(tmp_path / "gen.txt")
    code, _, _ = run(
        capsys, "gen", "-n", "6", "--max-degree", "3", "--seed", "2",
        "--edges", "7", "--lists", "vizing", "-o", out_path,
    )
    assert code == 0
    code, out, _ = run(
        capsys, "color", out_path, "--mode", "explicit", "--assume-bound", "vizing"
    )
    assert code == 0


def test_trace_and_stats_flags(tmp_path, capsys):
    inst = write(tmp_path, "tri.txt", TRIANGLE)
    trace_path = str(tmp_path / "trace.txt")
    code, out, err = run(
        capsys, "color", inst, "--mode", "shannon",
        "--trace", trace_path, "--stats", "-o", str(tmp_path / "c.txt"),
    )
    assert code == 0
    assert "happy=3" in err
    lines = open(trace_path).read().splitlines()
    assert len(lines) == 3
    assert all(len(line.split()) == 6 for line in lines)


def test_bench_runs(capsys):
    code, out, _ = run(
        capsys, "bench", "--seeds", "3", "-n", "8", "--max-degree", "3",
        "--mode", "koenig", "--jobs", "2",
    )
    assert code == 0
    assert "total: runs=3" in out
