"""End-to-end command-line behavior and strict file parsing."""

import json

import pytest

from forestbound import Multigraph, SignAssignment, complete_graph, petersen
from forestbound.cli import main
from forestbound.io import (
    graph_from_json,
    graph_to_json,
    signs_from_json,
    signs_to_json,
)


class TestGraphFormat:
    def test_round_trip(self):
        g = petersen()
        assert graph_from_json(graph_to_json(g)).edges == g.edges

    def test_unknown_field_rejected(self):
        payload = json.dumps(
            {"format": "graph-v1", "num_vertices": 1, "edges": [], "color": "blue"}
        )
        with pytest.raises(ValueError):
            graph_from_json(payload)

    def test_wrong_format_tag(self):
        payload = json.dumps({"format": "graph-v2", "num_vertices": 1, "edges": []})
        with pytest.raises(ValueError):
            graph_from_json(payload)

    def test_bad_edge_entry(self):
        payload = json.dumps({"format": "graph-v1", "num_vertices": 2, "edges": [[0]]})
        with pytest.raises(ValueError):
            graph_from_json(payload)

    def test_not_json(self):
        with pytest.raises(ValueError):
            graph_from_json("{nope")

    def test_sign_round_trip(self):
        s = SignAssignment([1, -1, 1])
        assert signs_from_json(signs_to_json(s)).signs == (1, -1, 1)

    def test_sign_values_checked(self):
        with pytest.raises(ValueError):
            signs_from_json(json.dumps({"format": "sign-v1", "signs": [1, 2]}))


@pytest.fixture
def k3_file(tmp_path):
    path = tmp_path / "k3.graph"
    path.write_text(graph_to_json(complete_graph(3)))
    return str(path)


class TestGenCommands:
    def test_gen_complete(self, capsys):
        assert main(["gen", "complete", "4"]) == 0
        g = graph_from_json(capsys.readouterr().out)
        assert g.num_vertices == 4 and g.num_edges == 6

    def test_gen_petersen_to_file(self, tmp_path):
        out = tmp_path / "p.graph"
        assert main(["gen", "petersen", "--out", str(out)]) == 0
        assert graph_from_json(out.read_text()).num_edges == 15

    def test_gen_random_regular_deterministic(self, capsys):
        assert main(["gen", "random-regular", "3", "8", "--seed", "5"]) == 0
        first = capsys.readouterr().out
        assert main(["gen", "random-regular", "3", "8", "--seed", "5"]) == 0
        assert capsys.readouterr().out == first

    def test_gen_lift(self, tmp_path, capsys):
        base = tmp_path / "c3.graph"
        base.write_text(
            json.dumps({"format": "graph-v1", "num_vertices": 3, "edges": [[0, 1], [1, 2], [2, 0]]})
        )
        signs = tmp_path / "all.sign"
        signs.write_text(json.dumps({"format": "sign-v1", "signs": [-1, -1, -1]}))
        assert main(["gen", "lift", str(base), str(signs)]) == 0
        g = graph_from_json(capsys.readouterr().out)
        assert g.num_vertices == 6 and g.num_edges == 6

    def test_gen_invalid_argument(self, capsys):
        assert main(["gen", "complete", "0"]) == 2


class TestComputeCommands:
    def test_count_forests(self, k3_file, capsys):
        assert main(["count", "forests", k3_file]) == 0
        assert capsys.readouterr().out.strip() == "7"

    def test_count_trees(self, k3_file, capsys):
        assert main(["count", "trees", k3_file]) == 0
        assert capsys.readouterr().out.strip() == "3"

    def test_count_r_at_2(self, k3_file, capsys):
        assert main(["count", "r-at-2", k3_file]) == 0
        assert capsys.readouterr().out.strip() == "9"

    def test_count_r_at_2_irregular_rejected(self, tmp_path, capsys):
        path = tmp_path / "p3.graph"
        path.write_text(
            json.dumps({"format": "graph-v1", "num_vertices": 3, "edges": [[0, 1], [1, 2]]})
        )
        assert main(["count", "r-at-2", str(path)]) == 2

    def test_poly_outputs_decimal_strings(self, k3_file, capsys):
        assert main(["poly", "r", k3_file]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["coefficients"] == ["1", "0", "0", "1"]
        assert main(["poly", "pseudoforest", k3_file]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["coefficients"] == ["2", "3", "3", "1"]

    def test_poly_forest(self, k3_file, capsys):
        assert main(["poly", "forest", k3_file]) == 0
        assert json.loads(capsys.readouterr().out)["coefficients"] == ["0", "3", "3", "1"]

    def test_missing_file(self, capsys):
        assert main(["count", "forests", "/nonexistent.graph"]) == 2


class TestConstantsCommands:
    def test_constants_row(self, capsys):
        assert main(["constants", "--d", "4", "--digits", "15"]) == 0
        row = json.loads(capsys.readouterr().out)
        assert row["conjecture"] == "3.85714285714286"
        assert row["matching_bound"] == "3.91947904192452"
        assert row["d_minus_half_inv"] == "3.87500000000000"
        assert row["bound_integer"] == "925"

    def test_table_csv(self, capsys):
        assert main(["table1", "--d-min", "4", "--d-max", "6", "--digits", "15"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "d,conjecture,matching_bound,d_minus_half_inv"
        assert lines[1].startswith("4,3.85714285714286,3.91947904192452,")
        assert len(lines) == 4

    def test_table_json(self, capsys):
        assert main(["table1", "--d-min", "4", "--d-max", "5", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["format"] == "table-v1"
        assert [row["d"] for row in payload["rows"]] == [4, 5]

    def test_inequality_passes(self, capsys):
        assert main(["inequality", "--n-min", "5", "--n-max", "10"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["summary"]["failed"] == 0
        assert payload["summary"]["passed"] == 6


class TestVerifyCommand:
    def test_single_suite(self, capsys):
        assert main(["verify", "heilmann-lieb"]) == 0
        captured = capsys.readouterr()
        payload = json.loads(captured.out)
        assert payload["summary"]["failed"] == 0
        assert payload["summary"]["critical"] == 0
        assert "heilmann-lieb" in captured.err

    def test_deterministic_output_modulo_duration(self, capsys):
        def strip(text):
            data = json.loads(text)
            for suite in data["suites"]:
                suite.pop("duration_seconds")
            return data

        assert main(["verify", "godsil", "--seed", "42"]) == 0
        first = strip(capsys.readouterr().out)
        assert main(["verify", "godsil", "--seed", "42"]) == 0
        assert strip(capsys.readouterr().out) == first

    def test_unknown_suite_rejected(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["verify", "nonsense"])
        assert err.value.code == 2
