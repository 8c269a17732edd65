import csv
import json
import os

import pytest

from whitewhale import cli, core, engine, layerfile


def run_cli(*args):
    return cli.main([str(a) for a in args])


def full_run(tmp_path, d, *extra):
    layers_dir = tmp_path / "layers"
    assert run_cli("generate", "-d", d, "--layers-dir", layers_dir, "--quiet", *extra) == 0
    return layers_dir


def test_layer_file_roundtrip(tmp_path, generated):
    layers, _ = generated(3)
    path = tmp_path / "layer_d3_k3.www"
    layerfile.write_layer(str(path), layers[3])
    back = layerfile.read_layer(str(path), 3, 3)
    assert layerfile.render(back) == layerfile.render(layers[3])
    layerfile.write_layer(str(path) + ".again", back)
    assert path.read_text() == (tmp_path / "layer_d3_k3.www.again").read_text()


def test_layer_file_checksum_rejected(tmp_path, generated):
    layers, _ = generated(3)
    path = tmp_path / "layer.www"
    layerfile.write_layer(str(path), layers[2])
    text = path.read_text()
    path.write_text(text.replace("1 3 |", "1 5 |"))
    with pytest.raises(layerfile.LayerFileError, match="checksum"):
        layerfile.read_layer(str(path))


def test_layer_file_errors(tmp_path):
    with pytest.raises(layerfile.LayerFileError, match="cannot read"):
        layerfile.read_layer(str(tmp_path / "missing.www"))
    bad = tmp_path / "bad.www"
    bad.write_text("not a header\n")
    with pytest.raises(layerfile.LayerFileError, match="bad header"):
        layerfile.read_layer(str(bad))


def test_layer_file_header_mismatch(tmp_path, generated):
    layers, _ = generated(3)
    path = tmp_path / "layer.www"
    layerfile.write_layer(str(path), layers[2])
    with pytest.raises(layerfile.LayerFileError):
        layerfile.read_layer(str(path), expect_d=4)
    with pytest.raises(layerfile.LayerFileError):
        layerfile.read_layer(str(path), expect_k=1)


def test_merge_partials_rejects_mixed(generated):
    layers, _ = generated(3)
    with pytest.raises(ValueError):
        layerfile.merge_partials([layers[1], layers[2]])
    with pytest.raises(ValueError):
        layerfile.merge_partials([])


def test_generate_writes_layers_and_summary(tmp_path):
    layers_dir = full_run(tmp_path, 3)
    for k in range(4):
        assert (layers_dir / f"layer_d3_k{k}.www").exists()
    summary = json.loads((layers_dir / "summary.json").read_text())
    assert summary["d"] == 3
    assert summary["a"] == 32
    assert summary["o"] == 5
    assert [l["canonical"] for l in summary["layers"]] == [1, 1, 1, 2]
    # summary arithmetic must match a recount from the files themselves
    read = [
        layerfile.read_layer(str(layers_dir / f"layer_d3_k{k}.www")) for k in range(4)
    ]
    assert sum(l.orbit_sum for l in read) == summary["a"]
    assert sum(len(l.entries) for l in read) == summary["o"]


def test_generate_is_deterministic(tmp_path):
    first = full_run(tmp_path / "a", 3)
    second = full_run(tmp_path / "b", 3, "--threads", 2)
    for k in range(4):
        name = f"layer_d3_k{k}.www"
        assert (first / name).read_bytes() == (second / name).read_bytes()


def test_generate_resume(tmp_path):
    layers_dir = full_run(tmp_path, 4)
    originals = {
        k: (layers_dir / f"layer_d4_k{k}.www").read_bytes() for k in range(8)
    }
    for k in (5, 6, 7):
        os.remove(layers_dir / f"layer_d4_k{k}.www")
    assert (
        run_cli(
            "generate", "-d", 4, "--layers-dir", layers_dir, "--resume-from", 4, "--quiet"
        )
        == 0
    )
    for k in range(8):
        assert (layers_dir / f"layer_d4_k{k}.www").read_bytes() == originals[k]


def test_generate_resume_missing_file_is_io_error(tmp_path):
    assert (
        run_cli(
            "generate", "-d", 3, "--layers-dir", tmp_path, "--resume-from", 2, "--quiet"
        )
        == cli.EXIT_IO
    )


def test_generate_rejects_bad_dimension(tmp_path):
    assert run_cli("generate", "-d", 1, "--layers-dir", tmp_path, "--quiet") == cli.EXIT_CONFIG


def test_generate_gates_large_dimensions(tmp_path):
    assert run_cli("generate", "-d", 8, "--layers-dir", tmp_path, "--quiet") == cli.EXIT_CONFIG


def test_shard_without_resume_is_config_error(tmp_path):
    assert (
        run_cli("generate", "-d", 3, "--layers-dir", tmp_path, "--shard", "0/2", "--quiet")
        == cli.EXIT_CONFIG
    )
    assert (
        run_cli("generate", "-d", 3, "--layers-dir", tmp_path, "--shard", "nope", "--quiet")
        == cli.EXIT_CONFIG
    )


def test_shard_and_merge_cli(tmp_path):
    layers_dir = full_run(tmp_path, 4)
    reference = (layers_dir / "layer_d4_k4.www").read_bytes()
    os.remove(layers_dir / "layer_d4_k4.www")
    for i in range(2):
        assert (
            run_cli(
                "generate", "-d", 4, "--layers-dir", layers_dir,
                "--resume-from", 3, "--shard", f"{i}/2", "--quiet",
            )
            == 0
        )
    assert (
        run_cli("merge-shards", "-d", 4, "-k", 4, "--total", 2, "--layers-dir", layers_dir)
        == 0
    )
    assert (layers_dir / "layer_d4_k4.www").read_bytes() == reference


def test_store_certificates_cli(tmp_path):
    layers_dir = full_run(tmp_path, 3, "--store-certificates")
    text = (layers_dir / "layer_d3_k3.certs").read_text()
    assert len(text.splitlines()) == 2
    assert all("|" in line for line in text.splitlines())


def test_edges_cli(tmp_path):
    layers_dir = full_run(tmp_path, 3)
    assert run_cli("edges", "-d", 3, "--layers-dir", layers_dir) == 0
    summary = json.loads((layers_dir / "summary.json").read_text())
    assert summary["e"] == 48
    with open(layers_dir / "edges_d3.csv") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["k", "point", "orbit", "deg_below"]
    assert len(rows) == 5


def test_degrees_cli(tmp_path):
    layers_dir = full_run(tmp_path, 3)
    assert run_cli("degrees", "-d", 3, "--layers-dir", layers_dir) == 0
    with open(layers_dir / "degrees_d3.csv") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["k", "point", "orbit", "deg_below", "deg_above", "deg"]
    assert [r[3:] for r in rows[1:]] == [
        ["0", "3", "3"],
        ["1", "2", "3"],
        ["1", "2", "3"],
        ["2", "1", "3"],
        ["2", "1", "3"],
    ]


def test_verify_cli_passes(capsys):
    assert run_cli("verify", "-d", 3, "--mode", "all") == 0
    out = capsys.readouterr().out
    assert "PASS" in out
    assert "FAIL" not in out


def test_verify_cli_bruteforce_needs_small_d(tmp_path):
    assert run_cli("verify", "-d", 5, "--mode", "bruteforce") == cli.EXIT_CONFIG


def test_pad_layers_cli(tmp_path, generated):
    layers_dir = full_run(tmp_path, 3)
    assert (
        run_cli(
            "pad-layers", "--from-d", 3, "--to-d", 4, "-k", 2, "--layers-dir", layers_dir
        )
        == 0
    )
    padded = layerfile.read_layer(str(layers_dir / "layer_d4_k2.www"), 4, 2)
    assert [e.point for e in padded.entries] == [(0, 0, 1, 2)]
    # a padded layer must equal the corresponding fresh layer one dimension up
    layers4, _ = generated(4)
    assert layerfile.render(padded) == layerfile.render(layers4[2])


def test_pad_layers_resume_equals_fresh_run(tmp_path, generated):
    layers_dir = tmp_path / "layers"
    os.makedirs(layers_dir)
    layers3, _ = generated(3)
    layerfile.write_layer(str(layers_dir / "layer_d3_k2.www"), layers3[2])
    assert (
        run_cli(
            "pad-layers", "--from-d", 3, "--to-d", 4, "-k", 2, "--layers-dir", layers_dir
        )
        == 0
    )
    assert (
        run_cli(
            "generate", "-d", 4, "--layers-dir", layers_dir, "--resume-from", 2, "--quiet"
        )
        == 0
    )
    layers4, _ = generated(4)
    for k in range(3, 8):
        got = (layers_dir / f"layer_d4_k{k}.www").read_text()
        assert got == layerfile.render(layers4[k])


def test_pad_layers_rejects_shrinking(tmp_path):
    layers_dir = full_run(tmp_path, 4)
    assert (
        run_cli(
            "pad-layers", "--from-d", 4, "--to-d", 3, "-k", 2, "--layers-dir", layers_dir
        )
        == cli.EXIT_CONFIG
    )
