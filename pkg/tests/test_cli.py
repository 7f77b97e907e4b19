import io
import json

import pytest

from dompoly.cli import main


def run(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def strip_timing(text):
    doc = json.loads(text)
    doc.pop("timings")
    return doc


def test_compute_star(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["compute", "--family", "star", "--n", "4"])
    doc = json.loads(out)
    assert code == 0
    assert doc["results"]["coeffs"] == ["0", "1", "3", "4", "1"]
    assert doc["results"]["mode"] == "3" and doc["results"]["unimodal"] is True
    assert set(doc) == {"command", "input", "parameters", "results", "engine_version", "backend", "timings"}


def test_compute_deterministic(capsys, monkeypatch):
    argv = ["compute", "--family", "gnp", "--n", "14", "--p", "0.3", "--seed", "4"]
    _, a, _ = run(capsys, monkeypatch, argv + ["--workers", "1"])
    _, b, _ = run(capsys, monkeypatch, argv + ["--workers", "4"])
    assert strip_timing(a) == strip_timing(b)


def test_compute_csv(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["compute", "--g6", "Bw", "--csv"])
    assert code == 0 and out.splitlines() == ["k,d_k", "0,0", "1,3", "2,3", "3,1"]


def test_compute_from_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["compute"], stdin="Bw\n")
    assert code == 0 and json.loads(out)["results"]["coeffs"] == ["0", "3", "3", "1"]


def test_bad_graph6(capsys, monkeypatch):
    code, _, err = run(capsys, monkeypatch, ["compute", "--g6", "invalid!"])
    assert code == 2 and "(byte 7)" in err


def test_capacity(capsys, monkeypatch):
    code, _, err = run(capsys, monkeypatch, ["compute", "--family", "empty", "--n", "40"])
    assert code == 3 and "capacity" in err


def test_verify_passes(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["verify", "--lemma", "2.2", "--family", "path", "--n", "6"])
    doc = json.loads(out)
    assert code == 0 and doc["results"]["failed"] == "0" and doc["results"]["passed"] == "6"


@pytest.mark.parametrize("lemma", ["e-rec", "dprime"])
def test_verify_other_identities(capsys, monkeypatch, lemma):
    code, _, _ = run(capsys, monkeypatch, ["verify", "--lemma", lemma, "--family", "cycle", "--n", "5"])
    assert code == 0


def test_verify_concavity_failure_on_k6(capsys, monkeypatch):
    code, _, err = run(capsys, monkeypatch, ["verify", "--lemma", "2.4", "--family", "complete", "--n", "6"])
    assert code == 1 and "identity failed" in err


def test_check_theorem_auto(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch,
                       ["check-theorem", "--theorem", "1.4", "--n", "8192", "--h", "1", "--auto-params"])
    doc = json.loads(out)
    assert code == 0 and doc["results"]["holds"] is True and doc["parameters"]["k"] == "4110"


def test_check_theorem_explicit(capsys, monkeypatch):
    argv = ["check-theorem", "--theorem", "mode", "--n", "10", "--h", "10", "--k", "8", "--alpha", "1",
            "--dk-lower", "45"]
    code, out, _ = run(capsys, monkeypatch, argv)
    assert code == 0 and json.loads(out)["results"]["rhs"] == "20/63"   # (100/7) / C(10, 8)


def test_check_theorem_out_of_range(capsys, monkeypatch):
    argv = ["check-theorem", "--theorem", "1.5", "--n", "16", "--h", "1", "--k", "20", "--alpha", "2",
            "--dk-lower", "1"]
    assert run(capsys, monkeypatch, argv)[0] == 2


def test_check_theorem_construction_small(capsys, monkeypatch):
    code, out, err = run(capsys, monkeypatch, ["check-theorem", "--theorem", "construction", "--n", "1024"])
    assert code == 1 and "below 2^20" in err


def _all_graphs(capsys, monkeypatch, n, extra=()):
    code, out, _ = run(capsys, monkeypatch, ["generate", "--all-labeled", str(n), *extra])
    assert code == 0
    return out


def test_batch_all_four_vertex_graphs(capsys, monkeypatch):
    stream = _all_graphs(capsys, monkeypatch, 4)
    assert len(stream.splitlines()) == 64
    code, out, _ = run(capsys, monkeypatch,
                       ["batch", "--assert-unimodal", "--universal-only", "--summary-only"], stdin=stream)
    summary = json.loads(out)["results"]["summary"]
    assert code == 0
    assert summary == {"total": "64", "ok": "23", "fail": "0", "skipped": "41",
                       "parse-error": "0", "capacity-error": "0"}


def test_batch_mode_window_misses(capsys, monkeypatch):
    # the four labelings of K_{1,3} have mode 3, outside {floor(n/2), floor((n+1)/2)} = {2}
    stream = _all_graphs(capsys, monkeypatch, 4)
    code, out, err = run(capsys, monkeypatch,
                         ["batch", "--assert-mode-window", "--universal-only", "--summary-only"], stdin=stream)
    assert code == 1 and json.loads(out)["results"]["summary"]["fail"] == "4"
    assert err.count("assertion failed") == 4


def test_batch_assertion_failure(capsys, monkeypatch):
    # the empty graph on 4 vertices has mode 4, outside {2}
    code, _, err = run(capsys, monkeypatch, ["batch", "--assert-mode-window"], stdin="C?\n")
    assert code == 1 and "assertion failed" in err


def test_batch_empty_stream(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["batch"], stdin="")
    assert code == 0 and json.loads(out)["results"]["summary"]["total"] == "0"


def test_batch_malformed(capsys, monkeypatch):
    stream = "Bw\nnot a graph\nCF\n"
    code, out, _ = run(capsys, monkeypatch, ["batch"], stdin=stream)
    assert code == 2 and json.loads(out)["results"]["summary"]["total"] == "2"
    code, out, _ = run(capsys, monkeypatch, ["batch", "--keep-going"], stdin=stream)
    summary = json.loads(out)["results"]["summary"]
    assert code == 2 and summary["total"] == "3" and summary["parse-error"] == "1"


def test_sample(capsys, monkeypatch):
    argv = ["sample", "--family", "star", "--n", "100", "--k", "10", "--samples", "2000", "--seed", "7"]
    code, a, _ = run(capsys, monkeypatch, argv)
    _, b, _ = run(capsys, monkeypatch, argv)
    assert code == 0 and strip_timing(a) == strip_timing(b)
    assert json.loads(a)["results"]["hits"] == "172"


def test_sample_validation(capsys, monkeypatch):
    code, _, err = run(capsys, monkeypatch, ["sample", "--family", "star", "--n", "10", "--k", "0"])
    assert code == 2 and "--k" in err


def test_sample_compare(capsys, monkeypatch):
    argv = ["sample", "--family", "star", "--n", "30", "--k", "5", "--samples", "5000", "--compare"]
    code, out, _ = run(capsys, monkeypatch, argv)
    assert code == 0 and json.loads(out)["results"]["d_k_vs_d_k_plus_1"] == "less"


def test_generate_join_universal(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["generate", "--family", "cycle", "--n", "5", "--join-universal"])
    assert code == 0
    code, out2, _ = run(capsys, monkeypatch, ["compute", "--g6", out.strip()])
    assert json.loads(out2)["results"]["coeffs"] == ["0", "1", "10", "20", "15", "6", "1"]


def test_text_format(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["compute", "--g6", "Bw", "--format", "text"])
    assert code == 0 and "mode: 2" in out
