# Built-in imports
import os
import sys

# Third-party imports
import pytest

# Add project root to path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

# Local Imports
from src.errors import GroupDomainError, UnsupportedGroupError
from src.characters.character_table import character_table
from src.core.canonical_series import canonical_series
from src.core.theorems import (
    extension_transfer_check, extension_transfer_sweep, theorem_a_report, theorem_b_report,
    theorem_c_report, kernel_lemma_check, counting_report, counting_check,
    head_character_equivalence_report, mckay_check, counterexample_report,
)
from src.formations.descriptors import FormationDescriptor, NILPOTENT, SUPERSOLVABLE
from src.groups.perm_group import generate
from src.groups.subgroups import normal_subgroups
from src.ingestion.catalog import get_group



# --- Aux Funcs ---
def S4():
    return get_group("S4")

def only_instance(report):
    assert len(report.instances) == 1
    return report.instances[0]

def instance_for(report, check):
    return [i for i in report.instances if i.inputs.get("check") == check][0]



# --- Counting ---
@pytest.mark.parametrize("name", ["S4", "SL23", "G75", "F21", "D12", "2S4", "GL23"])
@pytest.mark.parametrize("text", ["nilpotent", "supersolvable", "metanilpotent", "nilpotent-length:2"])
def test_counting(name, text):
    assert counting_check(get_group(name), FormationDescriptor.parse(text))

def test_counting_report_witnesses():
    instance = only_instance(counting_report(S4(), NILPOTENT))
    assert instance.witnesses == {"characters": 4, "abelianization": 4}



# --- Theorem A ---
@pytest.mark.parametrize("name,text", [
    ("S4", "nilpotent"),
    ("S4", "supersolvable"),
    ("G75", "supersolvable"),
    ("F21", "nilpotent"),
    ("SL23", "nilpotent"),
])
def test_theorem_a(name, text):
    report = theorem_a_report(get_group(name), FormationDescriptor.parse(text))
    assert report.passed, [i.to_json() for i in report.instances if not i.passed]

def test_theorem_a_skips_part_c_without_hypothesis():
    report = theorem_a_report(S4(), SUPERSOLVABLE)
    assert "hypothesis violated" in report.notes[0]
    assert all(i.witnesses.get("c", "hypothesis violated") == "hypothesis violated" for i in report.instances)

def test_theorem_a_for_one_normal_subgroup():
    G = S4()
    V4 = normal_subgroups(G)[1]
    report = theorem_a_report(G, NILPOTENT, V4)
    assert len(report.instances) == 4
    assert report.passed

def test_theorem_a_rejects_non_normal_subgroup():
    with pytest.raises(GroupDomainError):
        theorem_a_report(S4(), NILPOTENT, generate(4, ["(0 1)"]))



# --- Theorem B ---
def test_theorem_b_on_s4():
    report = theorem_b_report(S4(), NILPOTENT)
    assert report.passed
    assert instance_for(report, "kernels").witnesses["order"] == 1

def test_theorem_b_on_g75():
    report = theorem_b_report(get_group("G75"), SUPERSOLVABLE)
    assert report.passed
    assert instance_for(report, "kernels").witnesses["order"] == 25
    assert instance_for(report, "quotient-count").witnesses == {"group": 3, "quotient": 3}

def test_kernel_lemma():
    assert kernel_lemma_check(S4(), NILPOTENT) == []
    assert kernel_lemma_check(get_group("2S4"), SUPERSOLVABLE) == []



# --- Theorem C ---
@pytest.mark.parametrize("p,order", [(3, 4), (2, 1)])
def test_theorem_c_on_s4(p, order):
    report = theorem_c_report(S4(), p)
    assert report.formation == f"p={p}"
    assert report.passed
    assert only_instance(report).witnesses["order"] == order

@pytest.mark.parametrize("name", ["SL23", "G75", "2S4", "F21"])
def test_theorem_c_every_prime(name):
    G = get_group(name)
    for p in (2, 3, 5, 7):
        if G.order % p == 0:
            assert theorem_c_report(G, p).passed

def test_theorem_c_argument_checks():
    with pytest.raises(GroupDomainError):
        theorem_c_report(S4(), 4)
    A5 = generate(5, ["(0 1 2 3 4)", "(0 1 2)"])
    with pytest.raises(UnsupportedGroupError):
        theorem_c_report(A5, 2)



# --- Equivalence and McKay ---
@pytest.mark.parametrize("name,text", [("S4", "nilpotent"), ("S4", "supersolvable"), ("G75", "supersolvable")])
def test_head_character_equivalence(name, text):
    report = head_character_equivalence_report(get_group(name), FormationDescriptor.parse(text))
    assert report.passed
    assert len(report.instances) == len(character_table(get_group(name)))

def test_mckay_on_s4():
    instance = only_instance(mckay_check(S4()))
    assert instance.passed
    assert instance.inputs == {"prime": 2}

def test_mckay_not_applicable():
    report = mckay_check(get_group("SL23"))
    assert report.instances == []
    assert report.notes and report.notes[0].startswith("not applicable")



# --- Extension transfer ---
def test_extension_transfer_sweep_on_odd_order():
    report = extension_transfer_sweep(get_group("G75"), SUPERSOLVABLE)
    assert report.notes == ["hypothesis holds"]
    assert report.instances and report.passed

def test_extension_transfer_on_s4_nilpotent():
    G = S4()
    cs = canonical_series(G, NILPOTENT)
    K, L = cs.pairs[0]
    theta = [t for t in character_table(K) if t.degree == 3][0]
    report = extension_transfer_check(G, K, L, NILPOTENT, theta, H=cs.projector)
    assert report.passed
    assert {i.inputs["part"] for i in report.instances} == {"a", "b"}

def test_extension_transfer_needs_navarro_triple():
    G = S4()
    _, V4, A4, _ = normal_subgroups(G)
    with pytest.raises(GroupDomainError):
        extension_transfer_check(G, G, A4, NILPOTENT, character_table(G)[0])

def test_counterexample_must_fail():
    report = counterexample_report(get_group("2S4"))
    instance = only_instance(report)
    assert report.passed
    assert instance.witnesses["theta_extensions"]
    assert instance.witnesses["phi_extensions"]
    assert instance.witnesses["transfer_failures"] > 0

def test_counterexample_report_json_shape():
    payload = counterexample_report(get_group("2S4")).to_json()
    assert payload["theorem"] == "counterexample-2S4"
    assert payload["formation"] == "supersolvable"
    assert payload["summary"]["pass"] is True



# Nameguard
if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))
