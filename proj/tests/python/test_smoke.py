"""End-to-end smoke tests for the python module and the CLI."""

import json
import os
import subprocess

import pytest

import idkit


def test_enumeration_counts():
    assert len(idkit.enumerate_identities(1)) == 1
    assert len(idkit.enumerate_identities(2)) == 1
    assert len(idkit.enumerate_identities(3)) == 3


def test_identity_roundtrip_and_equality():
    mono3 = idkit.Identity.from_classes(
        {"size": 3, "classes": [[[0, 1], [0, 2], [1, 2]]]}
    )
    assert mono3.size == 3
    assert mono3.to_dict()["size"] == 3
    again = idkit.Identity.from_classes(mono3.to_dict())
    assert again == mono3
    assert len({mono3, again}) == 1


def test_coloring_and_realization():
    f = idkit.Coloring({"field": [0, 1, 2], "colors": [[0, 1, 5], [0, 2, 5], [1, 2, 8]]})
    two_one = idkit.Identity.from_classes(
        {"size": 3, "classes": [[[0, 1], [0, 2]], [[1, 2]]]}
    )
    assert idkit.identity_of(f) == two_one
    emb = idkit.realizes(f, two_one)
    assert emb is not None
    assert len(emb["map"]) == 3

    rainbow = idkit.Coloring(
        {"field": [0, 1, 2], "colors": [[0, 1, 0], [0, 2, 1], [1, 2, 2]]}
    )
    mono3 = idkit.Identity.from_classes({"size": 3, "classes": [[[0, 1], [0, 2], [1, 2]]]})
    assert idkit.realizes(rainbow, mono3) is None


def test_duplication_and_amalgam():
    edge = idkit.Coloring({"field": [0, 1], "colors": [[0, 1, 5]]})
    tri = idkit.duplicate(edge, [1])
    assert idkit.identity_of(tri).size == 3

    i1 = idkit.build_im(1)
    glued = idkit.eh_amalgam([edge, edge])
    assert idkit.equivalent(idkit.identity_of(glued), i1)


def test_tree_and_membership_agree_on_the_triangle():
    mono3 = idkit.Identity.from_classes({"size": 3, "classes": [[[0, 1], [0, 2], [1, 2]]]})
    assert not idkit.tree_realizes(mono3)
    assert not idkit.membership(mono3, "IDM", 6)["member"]

    i1 = idkit.build_im(1)
    assert idkit.tree_realizes(i1)
    res = idkit.membership(i1, "IDM", 4, 3)
    assert res["member"] and len(res["trace"]) <= 3


def test_special_sequences_and_verifications():
    assert len(idkit.special_sequences(1)) == 8
    assert len(idkit.special_sequences(2)) == 64
    assert idkit.verify_t2_pair_claim(1)["pass"]
    assert idkit.verify_s2_step(0)["pass"]
    assert idkit.verify_lemma_qq(1, 5, 2)["pass"]
    assert idkit.verify_t2_kernel(1, 4, 2)["pass"]


def test_forcing_generation_and_validation():
    conditions = idkit.generate_p(1, 3)
    assert len(conditions) == 6
    for cond in conditions:
        assert idkit.validate_condition(cond)["valid"]


def test_condition_level_operations():
    singleton = idkit.generate_p(0, 3)[0]
    exts = idkit.one_point_extensions(singleton, 3)
    assert len(exts) == 2

    merged = idkit.amalgamate(exts[0], exts[1])
    assert merged["ok"]
    assert idkit.validate_condition(merged["condition"])["valid"]

    edge = idkit.enumerate_identities(2)[0]
    embeddings = idkit.find_embeddings(merged["condition"], edge)
    assert len(embeddings) == 6  # ordered pairs of three vertices


def test_errors_surface_as_python_exceptions():
    with pytest.raises(RuntimeError):
        idkit.enumerate_identities(9, 6)
    with pytest.raises(ValueError):
        idkit.Coloring({"field": [0, 1], "colors": []})


CLI = os.environ.get("IDKIT_CLI")


@pytest.mark.skipif(not CLI, reason="IDKIT_CLI not set")
def test_cli_reports_are_byte_stable():
    runs = [
        subprocess.run([CLI, "verify", "all"], capture_output=True, text=True)
        for _ in range(2)
    ]
    assert runs[0].returncode == 0
    assert runs[0].stdout == runs[1].stdout


@pytest.mark.skipif(not CLI, reason="IDKIT_CLI not set")
def test_cli_cache_env_override(tmp_path):
    env = dict(os.environ, IDKIT_CACHE_DIR=str(tmp_path))
    out = subprocess.run(
        [CLI, "ide", "--max-size", "3", "--witness-bound", "5"],
        capture_output=True, text=True, env=env)
    assert out.returncode == 0
    assert (tmp_path / "ide-s3-w5-d5.jsonl").exists()


@pytest.mark.skipif(not CLI, reason="IDKIT_CLI not set")
def test_cli_table_oracle(tmp_path):
    relation = tmp_path / "rel.json"
    relation.write_text(json.dumps({"relation": [{"b": 2, "over": [0]}]}))
    out = subprocess.run(
        [CLI, "forcing-gen", "--universe", "4", "--depth", "2",
         "--oracle", "table", "--table", str(relation)],
        capture_output=True, text=True)
    assert out.returncode == 0
    conditions = [json.loads(line) for line in out.stdout.splitlines() if line]

    def merges(conds):
        return {
            (tuple(c["provenance"]["left"]["u"]), tuple(c["provenance"]["right"]["u"]))
            for c in conds
            if c["provenance"]["kind"] == "amalgam"
        }

    # rel(2, {0,1}) holds through monotonicity, so merging {0,1} with
    # {0,2} is blocked; the divergence to 3 stays available
    blocked = merges(conditions)
    assert ((0, 1), (0, 3)) in blocked
    assert ((0, 1), (0, 2)) not in blocked

    # the default membership oracle admits that same merge
    out = subprocess.run(
        [CLI, "forcing-gen", "--universe", "4", "--depth", "2"],
        capture_output=True, text=True)
    assert out.returncode == 0
    open_merges = merges(json.loads(line) for line in out.stdout.splitlines() if line)
    assert ((0, 1), (0, 2)) in open_merges


@pytest.mark.skipif(not CLI, reason="IDKIT_CLI not set")
def test_cli_verify_and_enumerate():
    out = subprocess.run([CLI, "verify", "s2", "--k", "0"], capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["pass"] is True

    out = subprocess.run([CLI, "enumerate", "--size", "3"], capture_output=True, text=True)
    assert out.returncode == 0
    lines = [json.loads(line) for line in out.stdout.splitlines() if line]
    assert len(lines) == 3

    # usage errors exit with 2, resource bounds with 3
    bad = subprocess.run([CLI, "realizes", "--f", "missing.json", "--g", "x.json"],
                         capture_output=True, text=True)
    assert bad.returncode == 2
    over = subprocess.run([CLI, "enumerate", "--size", "9"], capture_output=True, text=True)
    assert over.returncode == 3
