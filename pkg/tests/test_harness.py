import io
import json

import numpy as np
import pytest

from conftest import paper_generator
from rslist import fileio
from rslist.cli import main
from rslist.code import build_code
from rslist.decoding import DecoderConfig
from rslist.errors import FormatError, NotACodewordBasis
from rslist.field import Field
from rslist.harness import (
    ErrorModel,
    ExperimentConfig,
    Pipeline,
    TrialReport,
    corrupt,
    run_compare_scaling,
    run_roundtrip,
)
from rslist.recovery import precompute
from rslist.rng import SplitMix64

GF8 = Field(3, 0b1011)
GF16 = Field(4, 0b10011)
PAPER_B = "matrix 4 4\n7 3 2 3\n6 7 3 1\n7 4 1 2\n2 2 4 2\n"


def test_splitmix_reference_vector():
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(3)] == [
        6457827717110365317, 3203168211198807973, 9817491932198370423]


def test_splitmix_helpers():
    rng = SplitMix64(1)
    draws = [rng.randbelow(7) for _ in range(2000)]
    assert set(draws) == set(range(7))
    assert 0.0 <= rng.random() < 1.0
    s = rng.sample(10, 10)
    assert sorted(s) == list(range(10))
    with pytest.raises(ValueError):
        rng.sample(3, 4)


def test_corrupt_exact_weight():
    rng = SplitMix64(3)
    word = np.arange(15) % 16
    for t in range(16):
        out = corrupt(GF16, word, ErrorModel(weight=t), rng)
        assert np.count_nonzero(out != word) == t
    with pytest.raises(ValueError):
        corrupt(GF16, word, ErrorModel(weight=16), rng)


def test_corrupt_probability():
    rng = SplitMix64(4)
    word = np.zeros(15, dtype=int)
    hits = sum(np.count_nonzero(corrupt(GF16, word, ErrorModel(probability=0.2), rng))
               for _ in range(2000))
    assert abs(hits / (2000 * 15) - 0.2) < 0.02
    assert not corrupt(GF16, word, ErrorModel(probability=0.0), rng).any()


def test_error_model_parse():
    assert ErrorModel.parse("3") == ErrorModel(weight=3)
    assert ErrorModel.parse("p=0.1") == ErrorModel(probability=0.1)
    with pytest.raises(ValueError):
        ErrorModel.parse("p=2")


def _cfg(**kw):
    base = dict(field=GF8, n=7, k=4, b=2, gen="random:5",
                decoder=DecoderConfig("brute_force", 2), errors=ErrorModel(weight=2),
                trials=50, seed=11)
    base.update(kw)
    return ExperimentConfig(**base)


def test_roundtrip_successes_and_accounting():
    rep = run_roundtrip(_cfg())
    assert rep.trials == rep.recovery_successes == 50
    assert rep.mult_counts["w_transform"] == 50 * 6
    assert rep.mult_counts["recovery"] == 16 * rep.list_elements
    assert rep.failures == []


def test_roundtrip_zero_errors_unit_lists():
    rep = run_roundtrip(_cfg(errors=ErrorModel(weight=0), decoder=DecoderConfig()))
    assert rep.recovery_successes == 50 and rep.list_elements == 50


def test_roundtrip_deterministic():
    a = run_roundtrip(_cfg(decoder=DecoderConfig(), trials=20))
    b = run_roundtrip(_cfg(decoder=DecoderConfig(), trials=20))
    assert a.to_text() == b.to_text()
    assert a.to_json() == b.to_json()


def test_failures_replay():
    cfg = _cfg(errors=ErrorModel(weight=7), trials=40)
    rep = run_roundtrip(cfg)
    assert rep.failures, "full corruption should defeat some trials"
    assert rep.failures == sorted(rep.failures)
    pipe = Pipeline(cfg)
    for seed in rep.failures[:5]:
        assert not pipe.run_trial(seed).success


def test_report_merge_order_independent():
    cfg = _cfg(errors=ErrorModel(weight=5), trials=30)
    pipe = Pipeline(cfg)
    from rslist.harness import trial_seeds
    seeds = trial_seeds(cfg.seed, cfg.trials)
    left, right = TrialReport(), TrialReport()
    for s in seeds[:13]:
        left.add(pipe.run_trial(s))
    for s in seeds[13:]:
        right.add(pipe.run_trial(s))
    whole = run_roundtrip(cfg)
    assert left.merge(right).as_dict() == whole.as_dict()
    assert right.merge(left).as_dict() == whole.as_dict()


def test_aborted_trials_are_logged(caplog):
    rep = run_roundtrip(_cfg(decoder=DecoderConfig("guruswami_sudan", 2, 1), trials=3))
    assert rep.aborted == 3 and rep.recovery_successes == 0
    assert "aborted" in caplog.text


@pytest.mark.parametrize("b", [1, 3])
def test_compare_scaling(b):
    rep = run_compare_scaling(_cfg(b=b, gen="grs:random:17", trials=30))
    assert rep.agreements == 30
    assert rep.scaling.mult_counts["scaling"] == 30 * 7
    assert rep.transform.mult_counts["w_transform"] == 30 * 6
    assert rep.transform.mult_counts["recovery"] == 16 * rep.transform.list_elements
    assert rep.scaling.recovery_successes == 30


def test_compare_scaling_ones_b1():
    rep = run_compare_scaling(_cfg(b=1, gen="grs:ones", trials=10))
    assert rep.agreements == 10


def test_compare_scaling_needs_grs():
    with pytest.raises(ValueError):
        run_compare_scaling(_cfg())


def test_incompatible_grs_rejected(tmp_path):
    vfile = tmp_path / "v.txt"
    vfile.write_text("1 2 3 4 5 6 7\n")
    with pytest.raises(NotACodewordBasis):
        Pipeline(_cfg(gen=f"grs:{vfile}"))


def test_matrix_format_round_trip():
    m = paper_generator(GF8)
    text = fileio.format_matrix(m)
    assert text.splitlines()[0] == "matrix 4 7"
    assert np.array_equal(fileio.parse_matrix(GF8, "# comment\n" + text), m)
    with pytest.raises(FormatError):
        fileio.parse_matrix(GF8, "matrix 2 2\n1 2\n")
    with pytest.raises(FormatError):
        fileio.parse_matrix(GF8, "matrix 1 2\n1 2 3\n")


@pytest.mark.parametrize("b", [1, 2])
def test_transform_file_round_trip(b):
    spec = build_code(GF8, 7, 4, b)
    from rslist.code import build_generator_matrix
    ga = paper_generator(GF8) if b == 2 else build_generator_matrix(spec)
    t = precompute(spec, ga)
    buf = io.StringIO()
    fileio.write_transform(t, buf)
    text = buf.getvalue()
    assert text.startswith("field m=3 poly=0xb n=7\nrscode n=7 k=4 b=%d\n" % b)
    assert ("# w_inv" in text) == (b != 1)
    back = fileio.read_transform(text)
    assert back.spec == spec
    assert np.array_equal(back.b_matrix, t.b_matrix)
    lines = text.splitlines()
    row = lines.index("# b_matrix") + 2
    lines[row] = "0 " + lines[row].split(" ", 1)[1] if lines[row][0] != "0" else "1 " + lines[row][2:]
    with pytest.raises(FormatError):
        fileio.read_transform("\n".join(lines))
    with pytest.raises(FormatError):
        fileio.read_transform(text.replace("# d_inv", "# other"))


# ---------------------------------------------------------------- CLI


@pytest.fixture
def ga_file(tmp_path):
    path = tmp_path / "ga.txt"
    path.write_text(fileio.format_matrix(paper_generator(GF8)))
    return path


def test_cli_precompute_prints_b(ga_file, tmp_path, capsys):
    out = tmp_path / "t.txt"
    rc = main(["precompute", "--field", "field m=3 poly=0xb n=7", "--code", "7,4,2",
               "--gen", str(ga_file), "--out", str(out)])
    assert rc == 0
    assert capsys.readouterr().out == PAPER_B
    assert fileio.read_transform(out.read_text()).spec.b == 2


def test_cli_precompute_b1_omits_w(tmp_path):
    out = tmp_path / "t.txt"
    assert main(["precompute", "--code", "7,4,1", "--out", str(out)]) == 0
    assert "w_inv" not in out.read_text()


def test_cli_precompute_singular(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    g = np.zeros((4, 7), dtype=int)
    spec = build_code(GF8, 7, 4, 1)
    from rslist.code import build_generator_matrix
    g[:] = build_generator_matrix(spec)[[0, 1, 2, 2]]
    bad.write_text(fileio.format_matrix(g))
    rc = main(["precompute", "--code", "7,4,1", "--gen", str(bad)])
    assert rc == 1
    assert "SingularMatrix" in capsys.readouterr().err


def test_cli_pipeline(ga_file, tmp_path, capsys):
    common = ["--code", "7,4,2", "--gen", str(ga_file)]
    msg = tmp_path / "m.txt"
    msg.write_text("3 4 0 7\n")
    files = {name: tmp_path / f"{name}.txt" for name in ("c", "r", "l", "m2", "t")}
    assert main(["encode", *common, "--in", str(msg), "--out", str(files["c"])]) == 0
    assert files["c"].read_text() == "4 0 2 0 0 3 5\n"
    assert main(["corrupt", *common, "--errors", "2", "--seed", "9",
                 "--in", str(files["c"]), "--out", str(files["r"])]) == 0
    r = files["r"].read_text().split()
    assert sum(x != y for x, y in zip(r, "4 0 2 0 0 3 5".split())) == 2
    assert main(["decode", *common, "--in", str(files["r"]), "--out", str(files["l"])]) == 0
    assert files["l"].read_text().startswith("list ")
    assert main(["precompute", *common, "--out", str(files["t"])]) == 0
    assert main(["recover", *common, "--transform", str(files["t"]),
                 "--in", str(files["l"]), "--out", str(files["m2"])]) == 0
    assert "3 4 0 7" in files["m2"].read_text().splitlines()


def test_cli_roundtrip_and_config(ga_file, tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(f"# experiment\nfield = field m=3 poly=0xb n=7\ncode = 7,4,2\ngen = {ga_file}\n"
                   "decoder = brute\nerrors = 2\ntrials = 25\nseed = 3\n")
    js = tmp_path / "r.json"
    assert main(["roundtrip", "--config", str(cfg), "--json", str(js)]) == 0
    text = capsys.readouterr().out
    assert "trials=25" in text and "recovery_successes=25" in text
    assert json.loads(js.read_text())["trials"] == 25
    assert main(["roundtrip", "--config", str(cfg), "--trials", "5"]) == 0
    assert "trials=5" in capsys.readouterr().out


def test_cli_compare_scaling(capsys):
    assert main(["compare-scaling", "--code", "7,4,3", "--gen", "grs:random:1",
                 "--errors", "1", "--trials", "10"]) == 0
    out = capsys.readouterr().out
    assert "agreements=10" in out
    assert "scaling.mult_counts.scaling=70" in out


def test_cli_bad_field(capsys):
    assert main(["roundtrip", "--field", "field m=3 poly=0xf n=7"]) == 1
    assert "PolynomialNotPrimitive" in capsys.readouterr().err
