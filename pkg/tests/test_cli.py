# Built-in imports
import os
import sys
import json

# Third-party imports
import pytest

# Add project root to path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

# Local Imports
from src.cli import run_command, build_parser, VERIFY_TARGETS



# Constants setting
S4_FILE = os.path.join(os.path.dirname(__file__), "../data/groups/s4.grp")



# --- Aux Funcs ---
def run_json(argv):
    code, output = run_command(argv + ["--json"])
    return code, json.loads(output) if output else None



# --- Query commands ---
def test_headchars_json():
    code, payload = run_json(["headchars", "S4", "--formation", "nilpotent"])
    assert code == 0
    assert payload["count"] == 4
    assert [c["degree"] for c in payload["characters"]] == [1, 1, 3, 3]
    assert [c["index"] for c in payload["characters"]] == [0, 1, 3, 4]

def test_headchars_text_table():
    code, output = run_command(["headchars", "S4", "--formation", "supersolvable"])
    assert code == 0
    assert len(output.splitlines()) == 2 + 2

def test_table_from_group_file():
    code, payload = run_json(["table", S4_FILE])
    assert code == 0
    assert payload["group"] == "s4"
    assert [r["degree"] for r in payload["irreducibles"]] == [1, 1, 2, 3, 3]

def test_projector_and_residual():
    code, payload = run_json(["projector", "S4", "--formation", "supersolvable"])
    assert code == 0
    assert payload["order"] == 6
    assert payload["properties"]["e"] is True
    code, payload = run_json(["residual", "S4", "--formation", "nilpotent"])
    assert code == 0 and payload["order"] == 12

def test_series_json():
    code, payload = run_json(["series", "S4"])
    assert code == 0
    assert payload["m"] == 1
    assert [(p["K_order"], p["L_order"]) for p in payload["pairs"]] == [(12, 4)]
    assert payload["h_composition_orders"][0] == 1 and payload["h_composition_orders"][-1] == 24



# --- Verify ---
def test_verify_thm_b():
    code, payload = run_json(["verify", "thm-b", "S4"])
    assert code == 0
    assert payload[0]["theorem"] == "thm-b"
    assert payload[0]["summary"]["pass"] is True

def test_verify_thm_c_every_prime():
    code, payload = run_json(["verify", "thm-c", "S4"])
    assert code == 0
    assert [r["formation"] for r in payload] == ["p=2", "p=3"]

def test_verify_thm_a_with_normal_subgroup():
    code, payload = run_json(["verify", "thm-a", "S4", "--normal", "(0 1)(2 3); (0 2)(1 3)"])
    assert code == 0
    assert len(payload[0]["instances"]) == 4

def test_verify_counterexample():
    code, output = run_command(["verify", "counterexample-2S4"])
    assert code == 0
    assert output.startswith("✅ counterexample-2S4 2S4")

def test_verify_output_is_deterministic():
    first = run_command(["verify", "thm54", "S4", "--json"])
    second = run_command(["verify", "thm54", "S4", "--json"])
    assert first == second

def test_verify_all_passes_and_ignores_job_count():
    # Full catalog sweep; takes a couple of minutes
    serial = run_command(["verify", "all", "--jobs", "1", "--json"])
    threaded = run_command(["verify", "all", "--jobs", "4", "--json"])
    assert serial[0] == 0 and threaded[0] == 0
    assert serial[1] == threaded[1]

    reports = json.loads(threaded[1])
    assert all(r["summary"]["pass"] for r in reports)
    assert reports[-1]["theorem"] == "counterexample-2S4"



# --- Errors and exit codes ---
@pytest.mark.parametrize("argv", [
    ["table", "NoSuchGroup"],
    ["headchars", "S4", "--formation", "abelian"],
    ["verify", "thm-b"],
    ["verify", "thm-c", "S4", "--prime", "4"],
    ["series", "S4", "--formation", "p-groups:2"],
    ["table", "missing.grp"],
])
def test_usage_errors_exit_two(argv):
    code, output = run_command(argv)
    assert code == 2
    assert output == ""

def test_argparse_errors_exit_two():
    assert run_command(["verify", "thm-z"])[0] == 2
    assert run_command([])[0] == 2

def test_parser_targets():
    parser = build_parser()
    args = parser.parse_args(["verify", "all", "--jobs", "4"])
    assert args.target == "all" and args.jobs == 4
    assert "counterexample-2S4" in VERIFY_TARGETS



# Nameguard
if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))
